"""Weighted isogeny-class counts of elliptic curves over F_q.

`weighted_count(q, t)` is the number of F_q-isomorphism classes of
elliptic curves with trace of Frobenius t, each class weighted by
1/|Aut(E)|.  `weighted_count_full_2tors(q, t)` restricts to classes
whose rational 2-torsion is all of E[2].  Both are exact rationals built
from Hurwitz-Kronecker class numbers; the brute-force censuses in
`curve_census` verify them case by case.

Branch layout notes:
 * the boundary cases t = 0, t^2 = q, t^2 = 3q, t^2 = 4q are tested
   before the generic coprime-trace branch, whose class number would be
   evaluated at discriminant 0 there;
 * for non-square q the t = 0 count uses the discriminant -4p (not -4q);
 * p | t with t != 0 and no boundary case applies means no curve exists
   and the count is 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arith import prime_power_split
from .quadratic_forms import (hurwitz_class_number, kronecker,
                              weighted_class_number)


def _split_odd(q: int) -> tuple:
    p, v = prime_power_split(q)
    if p == 2:
        raise ValueError("q must be odd, got q=%d" % q)
    return p, v


def weighted_count(q: int, t: int) -> Fraction:
    """Classes with trace t over F_q, weighted by 1/|Aut|."""
    p, v = _split_odd(q)
    if t * t > 4 * q:
        return Fraction(0)
    if v % 2 == 1:
        if t == 0:
            return hurwitz_class_number(-4 * p) / 2
        if t * t == 3 * q and p == 3:
            return Fraction(1, 6)
        if t * t < 4 * q and t % p != 0:
            return hurwitz_class_number(t * t - 4 * q) / 2
        return Fraction(0)
    if t == 0:
        return Fraction(1 - kronecker(-4, p), 4)
    if t * t == q:
        return Fraction(1 - kronecker(-3, p), 6)
    if t * t == 4 * q:
        return Fraction(p - 1, 24)
    if t % p != 0:
        return hurwitz_class_number(t * t - 4 * q) / 2
    return Fraction(0)


def weighted_count_full_2tors(q: int, t: int) -> Fraction:
    """Classes with trace t and fully rational 2-torsion, weighted."""
    p, _ = _split_odd(q)
    if t * t > 4 * q:
        return Fraction(0)
    if t * t == 4 * q:
        return weighted_count(q, t)
    if t == 0:
        if q % 4 == 1:
            return Fraction(0)
        return weighted_class_number(-p) / 2
    if t * t in (q, 2 * q, 3 * q):
        return Fraction(0)
    if t % p != 0 and t % 4 == (q + 1) % 4:
        return hurwitz_class_number((t * t - 4 * q) // 4) / 2
    return Fraction(0)


@dataclass(frozen=True)
class IsogenyProfile:
    """All weighted counts for a fixed q: t -> (all, full 2-torsion)."""
    q: int
    table: dict

    def traces(self):
        return sorted(self.table)


def isogeny_profile(q: int) -> IsogenyProfile:
    _split_odd(q)
    bound = isqrt(4 * q)
    table = {}
    for t in range(-bound, bound + 1):
        pair = (weighted_count(q, t), weighted_count_full_2tors(q, t))
        if pair != (0, 0):
            table[t] = pair
    return IsogenyProfile(q=q, table=table)
