"""Dimension series over fields and the loop-space Poincare transform.

Over a field the quotient has a dimension series A(t).  Comparing the
series over Q with the series over F_p localizes torsion: the dimension
jumps in degree n exactly by the number of elementary divisors p
divides there.  The transform P(t)^-1 = (1+t) A(t)^-1 - t + 8t^2 - 13t^3
turns the full algebra's series into loop-space Betti numbers.
"""

from looptorsion import THEOREM1_PARAMS, graded_piece, relation_set_AX, relation_set_E
from looptorsion.series import (
    PowerSeries,
    dimension_series,
    format_series,
    invert_series,
    roos_poincare,
)

rels_e = relation_set_E(THEOREM1_PARAMS, 5)
print("Inner algebra dimension series (truncated at degree 5):")
for field in ("Q", 11, 13):
    series = dimension_series(rels_e, field, 5)
    print(f"  over {str(field):>2}: {format_series(series)}")
print()

print("The F_11 jumps match the 11-divisor counts degree by degree:")
q_series = dimension_series(rels_e, "Q", 5)
f11 = dimension_series(rels_e, 11, 5)
for n in range(6):
    drop = sum(1 for d in graded_piece(rels_e, n).divisors if d % 11 == 0)
    print(f"  degree {n}: dim_Q = {int(q_series[n]):4d}, dim_F11 = {int(f11[n]):4d}, divisors with 11: {drop}")
print()

rels_ax = relation_set_AX(THEOREM1_PARAMS)
a13 = dimension_series(rels_ax, 13, 4)
p13 = roos_poincare(a13)
print("Full algebra over F_13 and the loop-space series:")
print("  A(t) =", format_series(a13))
print("  P(t) =", format_series(p13))
print("  (13 divides no elementary divisor through degree 4, so A agrees with")
print("   the rational series, and here P happens to coincide with A.)")
print()

free = invert_series(PowerSeries.from_coeffs([1, -8], truncation=4))
print("Sanity case, the free algebra on 8 generators:")
print("  A(t) =", format_series(free))
print("  P(t) =", format_series(roos_poincare(free)))
print("  P(t)^-1 =", format_series(invert_series(roos_poincare(free))), " (= 1 - 8t - 13t^3)")
