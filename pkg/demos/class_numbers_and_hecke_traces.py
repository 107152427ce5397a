#!/usr/bin/env python3
"""Class numbers, the trace formulas, and their eta-product witnesses.

Everything in this library bottoms out in reduced binary quadratic
forms.  This script walks up the ladder: class numbers by enumeration,
Hurwitz-Kronecker sums, then the Eichler-Selberg evaluations whose
values we can confirm against completely independent q-series
expansions of eta products.
"""

from qrwe import (class_number, eta_product, hurwitz_class_number,
                  ramanujan_tau, trace_level1, trace_level2, trace_level4,
                  weighted_class_number)

print("Class numbers h(d) by counting reduced forms:")
for d in (-3, -4, -15, -23, -47):
    print("  h(%d) = %d" % (d, class_number(d)))

print("\nWeighted variants divide out the extra units at d = -3, -4:")
for d in (-3, -4, -23):
    print("  h_w(%d) = %s" % (d, weighted_class_number(d)))

print("\nHurwitz-Kronecker class numbers sum over containing orders:")
for delta in (-11, -12, -16, -108):
    print("  H(%d) = %s" % (delta, hurwitz_class_number(delta)))

print("\nTraces of Hecke operators, straight from the class-number sums.")
print("The weight-12 level-1 traces are Ramanujan tau values:")
for q in (3, 5, 7, 9, 11):
    t = trace_level1(12, q)
    assert t == ramanujan_tau(q)
    print("  tr T_%-3d on weight-12 level-1 forms = %d" % (q, t))

print("\nOn one-dimensional spaces the trace IS the eigenform coefficient.")
eta12 = eta_product([(2, 12)], 40)
print("eta(2z)^12 expansion starts:", eta12.coefficients[1:12])
for q in (3, 5, 7, 9, 11):
    print("  level 4, weight 6: tr T_%-3d = %-6d eta coefficient = %d"
          % (q, trace_level4(6, q), eta12.coeff(q)))

eta88 = eta_product([(1, 8), (2, 8)], 40)
print("\neta(z)^8 eta(2z)^8 expansion starts:", eta88.coefficients[1:12])
for p in (3, 5, 7, 11):
    print("  level 2, weight 8: tr T_%-3d = %-6d eta coefficient = %d"
          % (p, trace_level2(8, p), eta88.coeff(p)))

print("\nZero-dimensional spaces give zero traces, a strong sanity check:")
print("  level 1, weights 4..14:",
      [trace_level1(k, 13) for k in (4, 6, 8, 10, 14)])
