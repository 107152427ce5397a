"""Eichler-Selberg trace formulas and moment formulas for curve counts.

Traces of the Hecke operator T_q on S_k(Gamma_0(N)) for N in {1, 2, 4},
odd prime powers q and even weight k are evaluated in Hurwitz-class-number
form.  The level-1 evaluation uses Zagier's convention H(0) = -1/12 for
the boundary term t^2 = 4q.  For k = 2 (where the spaces are trivial for
these levels) the formulas carry the usual sigma_1(q) correction term so
that the returned trace is 0.

Every evaluation is carried out in exact rational arithmetic and must
come out an integer; a fractional result raises ConsistencyError since
it would mean the class-number bookkeeping is broken.

On top of the traces, this module builds the closed-form weighted moment
sums of the trace of Frobenius over elliptic curves / F_q:

    flavor "all"               -> every isomorphism class,
    flavor "two_torsion"       -> classes with a rational 2-torsion point
                                  (even trace),
    flavor "full_two_torsion"  -> classes with all of E[2] rational.

The moment of order 2R is a linear combination of per-weight kernels at
weights 2, 4, ..., 2R+2; the combination coefficients are the ballot
numbers C(2R,j) - C(2R,j-1).
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from .arith import prime_power_split, sigma1
from .errors import ConsistencyError
from .quadratic_forms import hurwitz_class_number, weighted_class_number

FLAVORS = ("all", "two_torsion", "full_two_torsion")


@lru_cache(maxsize=None)
def gegenbauer_kernel(k: int, t: int, q: int) -> int:
    """P_k(t, q) = (alpha^(k-1) - beta^(k-1)) / (alpha - beta) where
    alpha, beta are the roots of X^2 - tX + q; integer Lucas-type
    recurrence u_1 = 1, u_2 = t, u_m = t u_{m-1} - q u_{m-2}."""
    if k < 2 or k % 2 != 0:
        raise ValueError("weight must be even and >= 2, got %d" % k)
    prev, cur = 0, 1
    for _ in range(k - 2):
        prev, cur = cur, t * cur - q * prev
    return cur


def min_power_sum(q: int, k: int) -> int:
    """sum over 0 <= i <= v of min(p^i, p^(v-i))^(k-1) for q = p^v."""
    p, v = prime_power_split(q)
    return sum(min(p ** i, p ** (v - i)) ** (k - 1) for i in range(v + 1))


def _require_odd_prime_power(q: int) -> tuple:
    p, v = prime_power_split(q)
    if p == 2:
        raise ValueError("q must be odd, got q=%d" % q)
    return p, v


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError("%s evaluated to non-integer %s" % (what, value))
    return value.numerator


def _compute_trace_level1(k: int, q: int) -> int:
    _require_odd_prime_power(q)
    total = Fraction(0)
    bound = isqrt(4 * q)
    for t in range(-bound, bound + 1):
        n = 4 * q - t * t
        h = Fraction(-1, 12) if n == 0 else hurwitz_class_number(-n)
        total -= Fraction(1, 2) * gegenbauer_kernel(k, t, q) * h
    total -= Fraction(min_power_sum(q, k), 2)
    if k == 2:
        total += sigma1(q)
    return _as_integer(total, "trace (level 1, k=%d, q=%d)" % (k, q))


def _compute_trace_level2(k: int, q: int) -> int:
    _, v = _require_odd_prime_power(q)
    total = Fraction(0)
    if v % 2 == 0:
        total += Fraction(k - 1, 4) * q ** (k // 2 - 1)
    bound = isqrt(4 * q)
    for t in range(-bound, bound + 1):
        if t * t >= 4 * q:
            continue
        kernel = gegenbauer_kernel(k, t, q)
        if t % 2 == 0:
            inner = Fraction(0)
            disc = t * t - 4 * q
            for m in range(1, isqrt(-disc) + 1, 2):
                if disc % (m * m) == 0 and (disc // (m * m)) % 4 in (0, 1):
                    inner += weighted_class_number(disc // (m * m))
            total -= Fraction(1, 2) * kernel * inner
        if t % 4 == (q + 1) % 4:
            total -= Fraction(3, 2) * kernel * hurwitz_class_number((t * t - 4 * q) // 4)
    total -= min_power_sum(q, k)
    if k == 2:
        total += sigma1(q)
    return _as_integer(total, "trace (level 2, k=%d, q=%d)" % (k, q))


def _compute_trace_level4(k: int, q: int) -> int:
    _, v = _require_odd_prime_power(q)
    total = Fraction(0)
    if v % 2 == 0:
        total += Fraction(k - 1, 2) * q ** (k // 2 - 1)
    bound = isqrt(4 * q)
    for t in range(-bound, bound + 1):
        if t * t >= 4 * q or t % 4 != (q + 1) % 4:
            continue
        kernel = gegenbauer_kernel(k, t, q)
        total -= 3 * kernel * hurwitz_class_number((t * t - 4 * q) // 4)
    total -= Fraction(3 * min_power_sum(q, k), 2)
    if k == 2:
        total += sigma1(q)
    return _as_integer(total, "trace (level 4, k=%d, q=%d)" % (k, q))


_TRACE_FN = {1: _compute_trace_level1, 2: _compute_trace_level2, 4: _compute_trace_level4}


class TraceTable:
    """Cache of traces keyed by (level, weight, q), dumpable as CSV.

    Writes are idempotent (traces are pure), so concurrent readers and
    writers are safe under the interpreter's atomic dict operations.
    """

    def __init__(self):
        self.entries = {}

    def get(self, level: int, weight: int, q: int) -> int:
        key = (level, weight, q)
        if key not in self.entries:
            if level not in _TRACE_FN:
                raise ValueError("level must be 1, 2 or 4, got %d" % level)
            if weight < 2 or weight % 2 != 0:
                raise ValueError("weight must be even and >= 2, got %d" % weight)
            self.entries[key] = _TRACE_FN[level](weight, q)
        return self.entries[key]

    def to_csv(self, stream) -> None:
        stream.write("N,k,q,trace\n")
        for (level, weight, q) in sorted(self.entries):
            stream.write("%d,%d,%d,%d\n" % (level, weight, q, self.entries[(level, weight, q)]))


DEFAULT_TABLE = TraceTable()


def trace_level1(k: int, q: int) -> int:
    """Trace of T_q on S_k(SL_2(Z)); k = 2 returns 0 via the sigma_1 correction."""
    return DEFAULT_TABLE.get(1, k, q)


def trace_level2(k: int, q: int) -> int:
    """Trace of T_q on S_k(Gamma_0(2)) for odd prime powers q."""
    return DEFAULT_TABLE.get(2, k, q)


def trace_level4(k: int, q: int) -> int:
    """Trace of T_q on S_k(Gamma_0(4)) for odd prime powers q."""
    return DEFAULT_TABLE.get(4, k, q)


def trace(level: int, k: int, q: int) -> int:
    return DEFAULT_TABLE.get(level, k, q)


# ---------------------------------------------------------------------------
# Moment formulas
# ---------------------------------------------------------------------------

def kernel_expansion_coeff(R: int, j: int) -> int:
    """Ballot number C(2R, j) - C(2R, j-1): the coefficient of
    q^j P_{2R-2j+2}(t, q) in the expansion of t^(2R).  Equals 1 at j = 0
    and the R-th Catalan number at j = R."""
    if not 0 <= j <= R:
        raise ValueError("need 0 <= j <= R, got j=%d, R=%d" % (j, R))
    return comb(2 * R, j) - (comb(2 * R, j - 1) if j >= 1 else 0)


def _kernel_at_one(k: int, flavor: str) -> Fraction:
    # Degenerate "q = 1" values; the two Lucas kernels below have periods
    # 4 and 6 in the weight, matching the powers of i and of a primitive
    # cube root of unity.
    if flavor == "all":
        return (Fraction(gegenbauer_kernel(k, 0, 1), 4)
                + Fraction(gegenbauer_kernel(k, -1, 1), 3))
    if flavor == "two_torsion":
        return Fraction(gegenbauer_kernel(k, 0, 1), 4)
    return Fraction(0)


def moment_kernel(q_arg, k: int, flavor: str = "all") -> Fraction:
    """Per-weight building block of the moment formulas.

    `q_arg` is an odd prime power, or one of the two sentinels that the
    recursion in `moment_formula` produces: 1 (two steps down from p^2)
    and any value < 1 (two steps down from p, conventionally zero).
    """
    if flavor not in FLAVORS:
        raise ValueError("unknown flavor %r" % (flavor,))
    if q_arg < 1:
        return Fraction(0)
    if q_arg == 1:
        return _kernel_at_one(k, flavor)
    q = int(q_arg)
    _, v = _require_odd_prime_power(q)
    even_v = v % 2 == 0
    result = Fraction(0)
    if even_v:
        result += Fraction(k - 1, 12) * q ** (k // 2 - 1)
    if flavor == "all":
        result -= trace_level1(k, q)
        result -= Fraction(min_power_sum(q, k), 2)
        if k == 2:
            result += sigma1(q)
    elif flavor == "two_torsion":
        result += Fraction(trace_level4(k, q), 3) - trace_level2(k, q)
        result -= Fraction(min_power_sum(q, k), 2)
        if k == 2:
            result += Fraction(2, 3) * sigma1(q)
    else:
        result -= Fraction(trace_level4(k, q), 6)
        result -= Fraction(min_power_sum(q, k), 4)
        if k == 2:
            result += Fraction(sigma1(q), 6)
    return result


def moment_formula(q: int, R: int, flavor: str = "all") -> Fraction:
    """Closed form for the weighted 2R-th moment of the trace of
    Frobenius over isomorphism classes of elliptic curves / F_q,
    restricted by 2-torsion structure according to `flavor`."""
    if R < 0:
        raise ValueError("moment order R must be >= 0")
    p, v = _require_odd_prime_power(q)
    if v >= 3:
        sub = q // (p * p)
    elif v == 2:
        sub = 1
    else:
        sub = Fraction(1, p)  # below 1: the kernel vanishes there
    total = Fraction(0)
    for j in range(R + 1):
        k = 2 * R - 2 * j + 2
        term = moment_kernel(q, k, flavor) - p ** (k - 1) * moment_kernel(sub, k, flavor)
        total += kernel_expansion_coeff(R, j) * q ** j * term
    if v % 2 == 0:
        total += Fraction(p - 1, 12) * (4 * q) ** R
    return total
