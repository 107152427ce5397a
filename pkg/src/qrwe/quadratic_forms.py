"""Class numbers of imaginary quadratic orders and Kronecker symbols.

Everything here is computed by direct enumeration of reduced binary
quadratic forms, never read from tables, so the module doubles as its
own oracle.  Rational weights are exact `fractions.Fraction` values.

Conventions:
  * a discriminant d is a negative integer with d = 0 or 1 (mod 4);
  * h(d) counts reduced primitive positive definite forms
    ax^2 + bxy + cy^2 with b^2 - 4ac = d, |b| <= a <= c, gcd(a,b,c) = 1
    and b >= 0 whenever |b| = a or a = c;
  * the weighted class number divides h(-3) by 3 and h(-4) by 2
    (the extra units of those two orders);
  * the Hurwitz-Kronecker class number of D < 0 sums the weighted class
    numbers of all orders containing the order of discriminant D.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(delta: int, n: int) -> int:
    """Kronecker symbol (delta/n) for n >= 1.

    Completely multiplicative in n; equals the Legendre symbol at odd
    primes.  At n = 2 it is 0 for even delta, +1 for delta = 1 (mod 8)
    and -1 for delta = 5 (mod 8).
    """
    if n < 1:
        raise ValueError("kronecker symbol needs n >= 1, got n=%d" % n)
    result = 1
    while n % 2 == 0:
        if delta % 2 == 0:
            return 0
        if delta % 8 in (3, 5):
            result = -result
        n //= 2
    return result * _jacobi(delta, n)


def _check_discriminant(d: int) -> None:
    if d >= 0:
        raise ValueError("discriminant must be negative, got %d" % d)
    if d % 4 not in (0, 1):
        raise ValueError("discriminant must be 0 or 1 mod 4, got %d" % d)


@lru_cache(maxsize=None)
def class_number(d: int) -> int:
    """h(d): number of reduced primitive forms of discriminant d < 0."""
    return _count_reduced_forms(d, boundary_sign=+1)


def _count_reduced_forms(d: int, boundary_sign: int) -> int:
    """Enumerate reduced forms of discriminant d.

    `boundary_sign` fixes which sign of b survives on the boundary
    |b| = a or a = c: +1 keeps b >= 0 (the usual convention), -1 keeps
    b <= 0.  Both conventions must count the same forms; the second one
    serves as an independent recount in the tests.
    """
    _check_discriminant(d)
    count = 0
    for a in range(1, isqrt(-d // 3) + 1):
        for b in range(-a, a + 1):
            num = b * b - d
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            if (abs(b) == a or a == c) and boundary_sign * b < 0:
                continue
            count += 1
    return count


def weighted_class_number(d: int) -> Fraction:
    """h_w(d): the class number with h(-3)/3 and h(-4)/2."""
    h = class_number(d)
    if d == -3:
        return Fraction(h, 3)
    if d == -4:
        return Fraction(h, 2)
    return Fraction(h)


@lru_cache(maxsize=None)
def hurwitz_class_number(delta: int) -> Fraction:
    """Hurwitz-Kronecker class number H_w(delta) for delta < 0.

    Sums h_w(delta/d^2) over all d >= 1 with d^2 | delta and
    delta/d^2 = 0 or 1 (mod 4).  Inputs with no admissible divisor at
    all (delta = 2 or 3 mod 4 and square-free in the relevant sense)
    give 0, which lets callers feed arbitrary negative integers.
    """
    if delta >= 0:
        raise ValueError("Hurwitz class number needs delta < 0, got %d" % delta)
    total = Fraction(0)
    for d in range(1, isqrt(-delta) + 1):
        if delta % (d * d) != 0:
            continue
        quotient = delta // (d * d)
        if quotient % 4 in (0, 1):
            total += weighted_class_number(quotient)
    return total
