"""Brute-force censuses of genus-one curves over F_q.

Two independent enumerations, used as oracles for the closed-form
weighted class counts and moment formulas:

 * `quartic_census` walks every binary quartic form over F_q, keeps the
   ones with distinct roots over the closure, and buckets them by trace
   of Frobenius of w^2 = f4(x, y) and by the number of rational roots of
   f4 (0, 1, 2 or 4).  Works in every odd characteristic, including 3.

 * `weierstrass_census` walks the q^2 short Weierstrass models
   y^2 = x^3 + ax + b (p >= 5 only), bucketing by trace, plus the count
   of models whose cubic splits (fully rational 2-torsion).

Enumeration is partitioned by the two leading quartic coefficients into
q^2 independent work units whose per-bucket counts are merged
additively, so results are deterministic for any thread count.  Each
work unit is evaluated with numpy gathers through the field's lookup
tables.  A plain-Python reference walk (`quartic_census(ctx,
engine="scalar")`) implements the same census with the gcd-based
square-freeness test; the two engines are checked against each other
exhaustively in the test suite.

Smoothness in the vector engine uses the universal integer discriminant
of the binary quartic, which vanishes exactly on forms with a repeated
projective root in every odd characteristic.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import ConsistencyError
from .finite_field import (FieldContext, field, poly_degree, poly_derivative,
                           poly_gcd)

# Universal discriminant of a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4
# as (integer coefficient, exponents of (a, b, c, d, e)).
_DISC_TERMS = (
    (256, (3, 0, 0, 0, 3)),
    (-192, (2, 1, 0, 1, 2)),
    (-128, (2, 0, 2, 0, 2)),
    (144, (2, 0, 1, 2, 1)),
    (-27, (2, 0, 0, 4, 0)),
    (144, (1, 2, 1, 0, 2)),
    (-6, (1, 2, 0, 2, 1)),
    (-80, (1, 1, 2, 1, 1)),
    (18, (1, 1, 1, 3, 0)),
    (16, (1, 0, 4, 0, 1)),
    (-4, (1, 0, 3, 2, 0)),
    (-27, (0, 4, 0, 0, 2)),
    (18, (0, 3, 1, 1, 1)),
    (-4, (0, 3, 0, 3, 0)),
    (-4, (0, 2, 3, 0, 1)),
    (1, (0, 2, 2, 2, 0)),
)


@dataclass
class TraceBucket:
    total: int = 0
    by_roots: list = None

    def __post_init__(self):
        if self.by_roots is None:
            self.by_roots = [0, 0, 0, 0, 0]


@dataclass
class QuarticCensus:
    q: int
    buckets: dict  # trace -> TraceBucket
    kind = "quartic"

    def weighted_count(self, t: int) -> Fraction:
        denom = (self.q - 1) ** 2 * self.q * (self.q + 1)
        bucket = self.buckets.get(t)
        return Fraction(bucket.total if bucket else 0, denom)

    def weighted_count_full_2tors(self, t: int) -> Fraction:
        denom = (self.q - 1) ** 2 * self.q * (self.q + 1)
        bucket = self.buckets.get(t)
        return Fraction(4 * bucket.by_roots[4] if bucket else 0, denom)

    def traces(self):
        return sorted(self.buckets)


@dataclass
class WeierstrassBucket:
    models: int = 0
    full2tors: int = 0
    by_roots: list = None  # indexed by rational root count of the cubic

    def __post_init__(self):
        if self.by_roots is None:
            self.by_roots = [0, 0, 0, 0]


@dataclass
class WeierstrassCensus:
    q: int
    buckets: dict  # trace -> WeierstrassBucket
    kind = "weierstrass"

    def weighted_count(self, t: int) -> Fraction:
        bucket = self.buckets.get(t)
        return Fraction(bucket.models if bucket else 0, self.q - 1)

    def weighted_count_full_2tors(self, t: int) -> Fraction:
        bucket = self.buckets.get(t)
        return Fraction(bucket.full2tors if bucket else 0, self.q - 1)

    def traces(self):
        return sorted(self.buckets)


# ---------------------------------------------------------------------------
# Point counts and smoothness for a single quartic
# ---------------------------------------------------------------------------

def quartic_point_count(ctx: FieldContext, coeffs) -> tuple:
    """(points, rational_roots) of w^2 = f4(x, y) over P^1(F_q).

    `coeffs` are (c4, c3, c2, c1, c0) with f4 = c4 x^4 + ... + c0 y^4.
    Each of the q+1 standard representatives (1, a), (0, 1) contributes
    1 point if f4 vanishes there, 2 if the value is a nonzero square,
    and 0 otherwise.  Applies to any nonzero quartic, smooth or not.
    """
    c4, c3, c2, c1, c0 = coeffs
    if not any(coeffs):
        raise ValueError("zero polynomial has no associated curve")
    points = 0
    roots = 0
    for a in ctx.elements():
        value = c0
        for c in (c1, c2, c3, c4):
            value = ctx.add(ctx.mul(value, a), c)
        chi = ctx.quadratic_character(value)
        if chi == 0:
            points += 1
            roots += 1
        elif chi == 1:
            points += 2
    chi = ctx.quadratic_character(c0)
    if chi == 0:
        points += 1
        roots += 1
    elif chi == 1:
        points += 2
    return points, roots


def is_squarefree_quartic(ctx: FieldContext, coeffs) -> bool:
    """True iff the binary quartic has 4 distinct roots over the closure.

    Dehomogenize to g(x) = f4(x, 1); the form is squarefree iff
    gcd(g, g') is a nonzero constant (with gcd(g, 0) = g, which settles
    the vanishing-derivative cases in characteristic 3) and the root at
    (1 : 0) is not repeated, i.e. not both leading coefficients vanish.
    """
    c4, c3, c2, c1, c0 = coeffs
    if c4 == 0 and c3 == 0:
        return False
    g = [c0, c1, c2, c3, c4]
    gcd = poly_gcd(ctx, g, poly_derivative(ctx, g))
    return poly_degree(gcd) == 0


def quartic_discriminant(ctx: FieldContext, coeffs) -> int:
    """The universal binary-quartic discriminant, evaluated in F_q."""
    c4, c3, c2, c1, c0 = coeffs
    total = 0
    for coefficient, (ea, eb, ec, ed, ee) in _DISC_TERMS:
        term = ctx.int_embed(coefficient)
        for base, e in ((c4, ea), (c3, eb), (c2, ec), (c1, ed), (c0, ee)):
            if e:
                term = ctx.mul(term, ctx.pow(base, e))
        total = ctx.add(total, term)
    return total


# ---------------------------------------------------------------------------
# The quartic census
# ---------------------------------------------------------------------------

def quartic_census(ctx: FieldContext, threads: int = None, engine: str = "vector") -> QuarticCensus:
    """Census of all smooth binary quartics over F_q, bucketed by trace
    t = q + 1 - #points and by rational root count."""
    if ctx.q % 2 == 0:
        raise ValueError("census requires odd q")
    if engine == "scalar":
        return _quartic_census_scalar(ctx)
    if engine != "vector":
        raise ValueError("engine must be 'vector' or 'scalar'")
    return _quartic_census_vector(ctx, threads)


def _quartic_census_scalar(ctx: FieldContext) -> QuarticCensus:
    q = ctx.q
    buckets = {}
    rng = range(q)
    for c4 in rng:
        for c3 in rng:
            for c2 in rng:
                for c1 in rng:
                    for c0 in rng:
                        coeffs = (c4, c3, c2, c1, c0)
                        if not any(coeffs):
                            continue
                        if not is_squarefree_quartic(ctx, coeffs):
                            continue
                        points, roots = quartic_point_count(ctx, coeffs)
                        t = q + 1 - points
                        bucket = buckets.setdefault(t, TraceBucket())
                        bucket.total += 1
                        bucket.by_roots[roots] += 1
    return QuarticCensus(q=q, buckets=buckets)


class _QuarticKernel:
    """Shared numpy state for the vectorized census of one field."""

    def __init__(self, ctx: FieldContext):
        import numpy as np

        self.np = np
        self.ctx = ctx
        q = ctx.q
        self.q = q
        add = ctx.add_table
        mul = ctx.mul_table
        chi = ctx.char_table
        self.add = add
        self.mul = mul
        # contribution of one representative to the point count, as a
        # function of (anything + value) through the addition table
        contrib = np.where(np.arange(q) == 0, 1,
                           np.where(chi == 1, 2, 0)).astype(np.int8)
        self.contrib_add = contrib[add]          # (q, q)
        self.root_add = (add == 0).astype(np.int8)
        codes = np.arange(q, dtype=np.int16)
        self.codes = codes
        # powers of the element codes as 1D vectors
        pow_vec = [np.zeros(q, np.int16), codes.copy()]
        for _ in range(2, 5):
            pow_vec.append(mul[pow_vec[-1], codes])
        pow_vec[0][:] = 1
        self.pow_vec = pow_vec
        # per-representative 3D value of c2 a^2 + c1 a^3 + c0 a^4 on the
        # (c2, c1, c0) grid; the representative (0, 1) contributes c0
        self.tail_values = []
        for a in range(q):
            a2 = ctx.mul(a, a)
            a3 = ctx.mul(a2, a)
            a4 = ctx.mul(a3, a)
            part = add[mul[a2][codes][:, None, None], mul[a3][codes][None, :, None]]
            part = add[part, mul[a4][codes][None, None, :]]
            self.tail_values.append(part)
        contrib01 = contrib[codes][None, None, :]
        self.base_points = np.broadcast_to(contrib01, (q, q, q))
        self.base_roots = np.broadcast_to(
            (codes == 0).astype(np.int8)[None, None, :], (q, q, q))

    def run_unit(self, c4: int, c3: int):
        """Counts for the q^3 quartics with leading coefficients (c4, c3)."""
        np = self.np
        ctx, q = self.ctx, self.q
        points = self.base_points.astype(np.int16)
        roots = self.base_roots.astype(np.int16)
        for a in range(q):
            base = ctx.add(c4, ctx.mul(c3, a))
            tail = self.tail_values[a]
            points += self.contrib_add[base][tail]
            roots += self.root_add[base][tail]
        disc = self._discriminant_grid(c4, c3)
        mask = disc != 0
        bound = isqrt(4 * q)
        t = (q + 1 - points[mask]) + bound
        idx = t * 5 + roots[mask]
        return np.bincount(idx, minlength=(2 * bound + 1) * 5)

    def _discriminant_grid(self, c4: int, c3: int):
        np = self.np
        ctx, q = self.ctx, self.q
        mul, add = self.mul, self.add
        total = np.zeros((q, q, q), np.int16)
        for coefficient, (ea, eb, ec, ed, ee) in _DISC_TERMS:
            scalar = ctx.int_embed(coefficient)
            scalar = ctx.mul(scalar, ctx.pow(c4, ea)) if ea else scalar
            scalar = ctx.mul(scalar, ctx.pow(c3, eb)) if eb else scalar
            if scalar == 0:
                continue
            term = mul[scalar][self.pow_vec[ec]][:, None, None]
            term = mul[term, self.pow_vec[ed][None, :, None]]
            term = mul[term, self.pow_vec[ee][None, None, :]]
            total = add[total, term]
        return total


def _quartic_census_vector(ctx: FieldContext, threads: int = None) -> QuarticCensus:
    import numpy as np

    kernel = _QuarticKernel(ctx)
    q = ctx.q
    bound = isqrt(4 * q)
    units = [(c4, c3) for c4 in range(q) for c3 in range(q)]
    counts = np.zeros((2 * bound + 1) * 5, dtype=np.int64)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(lambda u: kernel.run_unit(*u), units):
                counts += part
    else:
        for c4, c3 in units:
            counts += kernel.run_unit(c4, c3)
    buckets = {}
    for t_index in range(2 * bound + 1):
        row = counts[t_index * 5:(t_index + 1) * 5]
        if not row.any():
            continue
        t = t_index - bound
        buckets[t] = TraceBucket(total=int(row.sum()), by_roots=[int(x) for x in row])
    return QuarticCensus(q=q, buckets=buckets)


# ---------------------------------------------------------------------------
# The Weierstrass census (p >= 5)
# ---------------------------------------------------------------------------

def weierstrass_census(ctx: FieldContext, threads: int = None) -> WeierstrassCensus:
    """Census of the q^2 short Weierstrass models y^2 = x^3 + ax + b."""
    import numpy as np

    if ctx.p < 5:
        raise ValueError("short Weierstrass census needs p >= 5 "
                         "(the quartic census covers p = 3)")
    q = ctx.q
    add, mul, chi = ctx.add_table, ctx.mul_table, ctx.char_table
    codes = np.arange(q, dtype=np.int16)
    x3 = mul[mul[codes, codes], codes]
    b2 = mul[codes, codes]
    c27 = ctx.int_embed(27)
    c4 = ctx.int_embed(4)
    s27b2 = mul[c27][b2]                      # 27 b^2 per b

    def run_unit(a):
        cubic = add[x3, mul[a][codes]]        # x^3 + ax per x
        values = add[cubic[:, None], codes[None, :]]   # (x, b)
        traces = -chi[values].sum(axis=0, dtype=np.int64)
        roots = (values == 0).sum(axis=0, dtype=np.int64)
        a3 = ctx.mul(ctx.mul(a, a), a)
        disc = add[ctx.mul(c4, a3)][s27b2]    # 4a^3 + 27 b^2 per b
        return traces, roots, disc != 0

    buckets = {}
    unit_results = []
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            unit_results = list(pool.map(run_unit, range(q)))
    else:
        unit_results = [run_unit(a) for a in range(q)]
    for traces, roots, smooth in unit_results:
        for b in range(q):
            if not smooth[b]:
                continue
            t = int(traces[b])
            bucket = buckets.setdefault(t, WeierstrassBucket())
            bucket.models += 1
            r = int(roots[b])
            bucket.by_roots[r] += 1
            if r == 3:
                bucket.full2tors += 1
    return WeierstrassCensus(q=q, buckets=buckets)


# ---------------------------------------------------------------------------
# Derived statistics
# ---------------------------------------------------------------------------

def empirical_moment(census, R: int, flavor: str = "all") -> Fraction:
    """Weighted 2R-th moment of the trace read off a census.

    Quartic censuses weigh each trace bucket by total/((q-1)^2 q (q+1)),
    Weierstrass censuses by models/(q-1); the full-2-torsion channel
    uses the 4-rational-root (resp. split-cubic) counts.
    """
    if flavor not in ("all", "two_torsion", "full_two_torsion"):
        raise ValueError("unknown flavor %r" % (flavor,))
    total = Fraction(0)
    for t in census.traces():
        if flavor == "two_torsion" and t % 2 != 0:
            continue
        if flavor == "full_two_torsion":
            weight = census.weighted_count_full_2tors(t)
        else:
            weight = census.weighted_count(t)
        total += t ** (2 * R) * weight
    return total


def legendre_family_sum(p: int, R: int) -> int:
    """sum over smooth y^2 = x(x^2 + ax + b) of (#E - (p + 1))^(2R).

    The sum runs over (a, b) in F_p^2 with b != 0 and a^2 - 4b != 0,
    i.e. exactly the pairs where the cubic has distinct roots.  This
    enumeration is itself the oracle for the closed-form expression in
    terms of the weight-(2R+2) trace on Gamma_0(4).
    """
    ctx = field(p, 1)
    chi = [ctx.quadratic_character(x) for x in range(p)]
    total = 0
    for a in range(p):
        for b in range(1, p):
            if (a * a - 4 * b) % p == 0:
                continue
            s = 0
            for x in range(p):
                s += chi[x * (x * x + a * x + b) % p]
            total += s ** (2 * R)
    return total


def j_special_census(ctx: FieldContext) -> dict:
    """Isomorphism-class data for the special j-invariants 0 and 1728.

    Walks the q-1 models y^2 = x^3 + b (j = 0) and y^2 = x^3 + ax
    (j = 1728), bucketing by trace and by the rational root count of the
    cubic (the 2-torsion shape: 0 roots = trivial, 1 = Z/2, 3 = full).
    Class counts divide the model counts by (q-1)/|Aut|, where |Aut| is
    6 or 2 for j = 0 (depending on whether -3 is a square) and 4 or 2
    for j = 1728 (whether -4 is a square); every bucket must divide
    exactly, which the census asserts.
    """
    if ctx.p < 5:
        raise ValueError("special j-invariant census needs p >= 5")
    q = ctx.q
    out = {}
    for label, aut_disc in (("j0", -3), ("j1728", -4)):
        aut_order = {1: 6 if label == "j0" else 4, -1: 2}[
            ctx.quadratic_character(ctx.int_embed(aut_disc))]
        models_per_class, rem = divmod(q - 1, aut_order)
        if rem:
            raise ConsistencyError("|Aut| = %d does not divide q - 1 = %d"
                                   % (aut_order, q - 1))
        traces = {}
        for c in range(1, q):
            s = 0
            roots = 0
            for x in ctx.elements():
                if label == "j0":
                    value = ctx.add(ctx.mul(ctx.mul(x, x), x), c)
                else:
                    value = ctx.mul(x, ctx.add(ctx.mul(x, x), c))
                chi = ctx.quadratic_character(value)
                s += chi
                if chi == 0:
                    roots += 1
            t = -s
            entry = traces.setdefault(t, {"models": 0, "roots": {}})
            entry["models"] += 1
            entry["roots"][roots] = entry["roots"].get(roots, 0) + 1
        classes = {}
        for t, entry in traces.items():
            n_classes, rem = divmod(entry["models"], models_per_class)
            if rem:
                raise ConsistencyError(
                    "model count %d at trace %d is not a multiple of %d"
                    % (entry["models"], t, models_per_class))
            classes[t] = n_classes
        out[label] = {
            "aut_order": aut_order,
            "traces": traces,
            "classes": classes,
            "class_total": sum(classes.values()),
        }
    return out


# ---------------------------------------------------------------------------
# JSON dump format
# ---------------------------------------------------------------------------

def census_json(census) -> dict:
    """{"q", "kind", "buckets": [{"t", "total", "by_roots"}...]} with all
    counts as decimal strings, buckets ascending in t."""
    buckets = []
    for t in census.traces():
        bucket = census.buckets[t]
        if census.kind == "quartic":
            total, by_roots = bucket.total, bucket.by_roots
        else:
            total, by_roots = bucket.models, bucket.by_roots
        buckets.append({
            "t": t,
            "total": str(total),
            "by_roots": [str(x) for x in by_roots],
        })
    return {"q": census.q, "kind": census.kind, "buckets": buckets}
