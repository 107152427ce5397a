"""Verification suites: every published identity as an exact check.

Each suite yields (label, ok) pairs; `run_suite` prints a pass/fail
table and reports overall success.  The same functions back the
acceptance test module, so `qrwe verify --suite all` and pytest exercise
identical logic.  All comparisons are exact: integers, Fractions, or
enumerator equality, with zero tolerance.
"""

from fractions import Fraction

from .arith import odd_prime_powers, odd_primes, prime_power_split
from .curve_census import (empirical_moment, j_special_census,
                           legendre_family_sum, quartic_census)
from .enumerators import mds_weight_distribution, qr_macwilliams_dual
from .eta_products import (hecke_eigenvalue_prime_power, ramanujan_tau,
                           weight6_level4_form, weight8_level2_form)
from .finite_field import field
from .hecke_traces import (moment_formula, trace_level1, trace_level2,
                           trace_level4)
from .isogeny_counts import weighted_count, weighted_count_full_2tors
from .qr_pipeline import (classical_dual_weight7_check, dual_code_report,
                          quartic_code_enumerator)
from .quadratic_forms import (hurwitz_class_number, kronecker,
                              weighted_class_number)
from .rs_codes import brute_force_enumerator, puncture_enumerator, reed_solomon_code

CENSUS_QS = (3, 5, 7, 9, 11, 13, 25, 27)
ISOGENY_QS = (3, 5, 7, 9, 11, 13, 25)
JSPECIAL_QS = (5, 7, 11, 13, 25)
C14_QS = (5, 7, 9, 11, 13)
DUAL_QS = (7, 9, 11)
PUNCTURE_QS = (7, 9)
EXAMPLE_PRIMES_1MOD4 = (13, 17, 29)
EXAMPLE_PRIMES_3MOD4 = (7, 11, 19, 23)
CLASSICAL_PRIMES = (13, 17, 7, 11, 19)
FAMILY_PRIMES = (3, 5, 7, 11, 13, 17, 19)

_census_cache = {}


def cached_quartic_census(q: int, threads: int = None):
    if q not in _census_cache:
        p, v = prime_power_split(q)
        _census_cache[q] = quartic_census(field(p, v), threads=threads)
    return _census_cache[q]


def _cap(values, qmax):
    return tuple(v for v in values if qmax is None or v <= qmax)


# -- criterion 1 -------------------------------------------------------------

def checks_classnumbers(qmax=None, threads=None):
    special = {-3: Fraction(1, 3), -4: Fraction(1, 2),
               -16: Fraction(3, 2), -12: Fraction(4, 3)}
    ok = all(hurwitz_class_number(d) == v for d, v in special.items())
    yield "Hurwitz class numbers at -3, -4, -12, -16", ok
    for d in (-3, -4, -7, -8, -11, -15, -20):
        good = True
        for f in range(1, 13):
            expected = weighted_class_number(d) * f
            for p in {2, 3, 5, 7, 11}:
                if f % p == 0:
                    expected *= 1 - Fraction(kronecker(d, p), p)
            good = good and weighted_class_number(f * f * d) == expected
        yield "class number scaling under conductor f <= 12, d = %d" % d, good


# -- criterion 2 and 3 -------------------------------------------------------

def checks_traces_dimension_zero(qmax=None, threads=None):
    limit = qmax if qmax is not None else 200
    qs = list(odd_prime_powers(limit))
    for k in (4, 6, 8, 10, 14):
        ok = all(trace_level1(k, q) == 0 for q in qs)
        yield "level 1 weight %d trace vanishes (dim 0), q <= %d" % (k, limit), ok
    for k in (2, 4, 6):
        ok = all(trace_level2(k, q) == 0 for q in qs)
        yield "level 2 weight %d trace vanishes (dim 0), q <= %d" % (k, limit), ok
    for k in (2, 4):
        ok = all(trace_level4(k, q) == 0 for q in qs)
        yield "level 4 weight %d trace vanishes (dim 0), q <= %d" % (k, limit), ok


def checks_traces_eta(qmax=None, threads=None):
    limit = qmax if qmax is not None else 200
    qs = list(odd_prime_powers(limit))
    primes = list(odd_primes(limit))
    ok = all(trace_level1(12, q) == ramanujan_tau(q) for q in qs)
    yield "level 1 weight 12 trace = tau(q), q <= %d" % limit, ok
    eta6 = weight6_level4_form()
    ok = True
    for q in qs:
        p, v = prime_power_split(q)
        ok = ok and trace_level4(6, q) == hecke_eigenvalue_prime_power(eta6, 6, p, v)
    yield "level 4 weight 6 trace = eta(2z)^12 eigenvalue, q <= %d" % limit, ok
    eta8 = weight8_level2_form()
    ok = all(trace_level2(8, p) == eta8.coeff(p) for p in primes)
    yield "level 2 weight 8 trace = eta(z)^8 eta(2z)^8 coefficient, p <= %d" % limit, ok
    ok = all(trace_level4(8, p) == 2 * eta8.coeff(p) for p in primes)
    yield "level 4 weight 8 trace doubles the level 2 one, p <= %d" % limit, ok


# -- criterion 4 -------------------------------------------------------------

def _displayed_all(p, R, tau_p):
    return {
        0: Fraction(p),
        1: Fraction(p ** 2 - 1),
        2: Fraction(2 * p ** 3 - 3 * p - 1),
        3: Fraction(5 * p ** 4 - 9 * p ** 2 - 5 * p - 1),
        4: Fraction(14 * p ** 5 - 28 * p ** 3 - 20 * p ** 2 - 7 * p - 1),
        5: Fraction(42 * p ** 6 - 90 * p ** 4 - 75 * p ** 3 - 35 * p ** 2
                    - 9 * p - 1 - tau_p),
    }[R]


def _displayed_two_torsion(p, R, a_p):
    return {
        0: Fraction(2 * p - 1, 3),
        1: Fraction(p * (2 * p - 1), 3) - 1,
        2: (Fraction(4, 3) * p ** 3 - Fraction(2, 3) * p ** 2 - 3 * p - 1
            + Fraction(a_p, 3)),
    }[R]


def _displayed_full(p, R, a_p):
    return {
        0: Fraction(p, 6) - Fraction(1, 3),
        1: Fraction(p ** 2, 6) - Fraction(p, 3) - Fraction(1, 2),
        2: (Fraction(p ** 3, 3) - Fraction(2, 3) * p ** 2 - Fraction(3, 2) * p
            - Fraction(1, 2) - Fraction(a_p, 6)),
    }[R]


def checks_moments_displayed(qmax=None, threads=None):
    primes = _cap(tuple(odd_primes(47)), qmax)
    eta6 = weight6_level4_form()
    for p in primes:
        tau_p = ramanujan_tau(p)
        a_p = eta6.coeff(p)
        ok = all(moment_formula(p, R, "all") == _displayed_all(p, R, tau_p)
                 for R in range(6))
        ok = ok and all(moment_formula(p, R, "two_torsion")
                        == _displayed_two_torsion(p, R, a_p) for R in range(3))
        ok = ok and all(moment_formula(p, R, "full_two_torsion")
                        == _displayed_full(p, R, a_p) for R in range(3))
        yield "displayed prime moment polynomials at p = %d" % p, ok


# -- criterion 5 -------------------------------------------------------------

def checks_moments_census(qmax=None, threads=None):
    for q in _cap(CENSUS_QS, qmax):
        census = cached_quartic_census(q, threads)
        ok = all(empirical_moment(census, R, "all") == moment_formula(q, R, "all")
                 for R in range(6))
        for flavor in ("two_torsion", "full_two_torsion"):
            ok = ok and all(empirical_moment(census, R, flavor)
                            == moment_formula(q, R, flavor) for R in range(4))
        yield "census moments match formulas at q = %d" % q, ok


# -- criterion 6 -------------------------------------------------------------

def checks_isogeny_census(qmax=None, threads=None):
    for q in _cap(ISOGENY_QS, qmax):
        census = cached_quartic_census(q, threads)
        traces = set(census.traces())
        bound = int((4 * q) ** 0.5) + 2
        traces.update(range(-bound, bound + 1))
        ok = all(census.weighted_count(t) == weighted_count(q, t)
                 and census.weighted_count_full_2tors(t)
                 == weighted_count_full_2tors(q, t)
                 for t in traces)
        yield "weighted isogeny-class counts match census at q = %d" % q, ok
    for q in _cap(JSPECIAL_QS, qmax):
        yield ("special j-invariant classes match at q = %d" % q,
               _check_j_special(q))


def _check_j_special(q: int) -> bool:
    p, v = prime_power_split(q)
    ctx = field(p, v)
    data = j_special_census(ctx)
    ok = True
    j0_square = ctx.quadratic_character(ctx.int_embed(-3)) == 1
    ok = ok and data["j0"]["class_total"] == (6 if j0_square else 2)
    j1728_square = ctx.quadratic_character(ctx.int_embed(-4)) == 1
    ok = ok and data["j1728"]["class_total"] == (4 if j1728_square else 2)
    # supersingular exactly when p = 2 mod 3 (j = 0) / p = 3 mod 4 (j = 1728)
    for label, ss in (("j0", p % 3 == 2), ("j1728", p % 4 == 3)):
        for t in data[label]["classes"]:
            ok = ok and ((t % p == 0) == ss)
    # 2-torsion shapes are forced by the group order and trace class
    for label in ("j0", "j1728"):
        for t, entry in data[label]["traces"].items():
            order = q + 1 - t
            for roots in entry["roots"]:
                if order % 2 == 1:
                    ok = ok and roots == 0
                elif (q + 1 - t) % 4 != 0:
                    ok = ok and roots == 1
    if q == 25:
        # supersingular j = 0 classes: one per extreme trace with full
        # 2-torsion, two per middle trace with no rational 2-torsion
        ok = ok and data["j0"]["classes"] == {-10: 1, -5: 2, 5: 2, 10: 1}
        shapes = {t: set(entry["roots"]) for t, entry in data["j0"]["traces"].items()}
        ok = ok and shapes == {-10: {3}, -5: {0}, 5: {0}, 10: {3}}
    if q in (5, 11):
        ok = ok and data["j0"]["classes"] == {0: 2}
    if q in (7, 11):
        ok = ok and data["j1728"]["classes"] == {0: 2}
    return ok


# -- criterion 7 -------------------------------------------------------------

def checks_c14(qmax=None, threads=None):
    for q in _cap(C14_QS, qmax):
        p, v = prime_power_split(q)
        enum = quartic_code_enumerator(q)
        code = reed_solomon_code(field(p, v), 4, projective=True)
        brute = brute_force_enumerator(code, threads=threads)
        ok = enum == brute
        ok = ok and enum.total() == q ** 5
        ok = ok and enum.hamming_distribution() == mds_weight_distribution(q + 1, 5, q)
        yield "degree-4 enumerator matches brute force at q = %d" % q, ok


# -- criterion 8 -------------------------------------------------------------

def checks_duals(qmax=None, threads=None):
    for q in _cap(DUAL_QS, qmax):
        p, v = prime_power_split(q)
        ctx = field(p, v)
        primal = quartic_code_enumerator(q)
        dual = qr_macwilliams_dual(primal, q, q ** 5)
        code = reed_solomon_code(ctx, q - 5, projective=True)
        ok = dual == brute_force_enumerator(code, threads=threads)
        yield "MacWilliams dual matches brute force at q = %d" % q, ok
        again = qr_macwilliams_dual(dual, q, q ** (q - 4))
        yield "double transform returns the enumerator at q = %d" % q, again == primal
    for q in _cap(PUNCTURE_QS, qmax):
        p, v = prime_power_split(q)
        ctx = field(p, v)
        punctured = puncture_enumerator(quartic_code_enumerator(q), q)
        code = reed_solomon_code(ctx, 4, projective=False)
        ok = punctured == brute_force_enumerator(code, threads=threads)
        yield "puncturing matches the classical brute force at q = %d" % q, ok


# -- criterion 9 -------------------------------------------------------------

def checks_examples(qmax=None, threads=None):
    for q in _cap(EXAMPLE_PRIMES_1MOD4 + EXAMPLE_PRIMES_3MOD4, qmax):
        try:
            report = dual_code_report(q, 7)
            ok = bool(report["comparisons"]) and all(
                item["match"] for item in report["comparisons"])
        except ArithmeticError:
            ok = False
        yield "projective dual closed forms hold at q = %d" % q, ok
    for q in _cap(CLASSICAL_PRIMES, qmax):
        try:
            ok = classical_dual_weight7_check(q)["match"]
        except ArithmeticError:
            ok = False
        yield "classical dual weight-7 closed form holds at q = %d" % q, ok


# -- criterion 10 ------------------------------------------------------------

def checks_family_sums(qmax=None, threads=None):
    for p in _cap(FAMILY_PRIMES, qmax):
        expected = (Fraction((p - 1) * (p + 1)
                             * (5 * p ** 3 - 10 * p ** 2 - 8 * p - 2))
                    - Fraction(p - 1, 2) * trace_level4(8, p))
        yield ("sixth-power family sum matches its closed form at p = %d" % p,
               legendre_family_sum(p, 3) == expected)


SUITES = {
    "classnumbers": (checks_classnumbers,),
    "traces": (checks_traces_dimension_zero, checks_traces_eta),
    "moments": (checks_moments_displayed, checks_moments_census,
                checks_isogeny_census),
    "c14": (checks_c14,),
    "duals": (checks_duals,),
    "examples": (checks_examples, checks_family_sums),
}
SUITES["all"] = tuple(fn for name in
                      ("classnumbers", "traces", "moments", "c14", "duals",
                       "examples") for fn in SUITES[name])


def run_suite(name: str, qmax=None, threads=None, stream=None) -> bool:
    if name not in SUITES:
        raise KeyError("unknown suite %r" % name)
    all_ok = True
    for fn in SUITES[name]:
        for label, ok in fn(qmax=qmax, threads=threads):
            all_ok = all_ok and ok
            if stream is not None:
                stream.write("%s  %s\n" % ("PASS" if ok else "FAIL", label))
                stream.flush()
    return all_ok
