"""
Finite planes, broken metrics, and lines that must exist
=========================================================

The affine plane over a finite field looks combinatorially healthy,
but its squared-distance form can vanish between distinct points.
Rational geometry, by contrast, always yields an ordinary line.
"""

from fractions import Fraction

from finiverse.fields import make_extension_field, make_prime_field
from finiverse.geometry import (
    AffineSpace,
    RationalPoint,
    check_hesse_property,
    check_metric_axioms,
    enumerate_lines,
    find_degenerate_pair,
    find_ordinary_line,
    incidence_structure,
    squared_distance,
    squared_distance_table,
)

# the plane over GF(3): nine points, twelve lines, and every line
# through two points carries a third -- the classical 9/12 configuration
plane3 = AffineSpace(make_prime_field(3), 2)
structure = incidence_structure(plane3)
print("AG(2,3):", len(structure.points), "points,", len(structure.lines), "lines")
print("Hesse property holds:", check_hesse_property(structure).holds)

# lines come in parallel classes; print one class per direction
lines = enumerate_lines(plane3)
print("points per line:", sorted({len(l.points) for l in lines}))

# the same plane has no degenerate pair...
print("degenerate pair over GF(3):", find_degenerate_pair(plane3))

# ...but the four-element field does: distinct points can sit at
# squared distance zero
plane4 = AffineSpace(make_extension_field(2, 2), 2)
pair = find_degenerate_pair(plane4)
print("degenerate pair over F4:", pair)
if pair is not None:
    print("their squared distance:", squared_distance(*pair))

# the classical example is (1,1) against (a,a): both differences are
# 1 + a, and (1+a)^2 + (1+a)^2 = 0 in characteristic two
f4 = plane4.spec
one, gen = f4.one, f4.gen
p_ones = plane4.point((one, one))
p_gens = plane4.point((gen, gen))
print("d2((1,1),(a,a)) =", squared_distance(p_ones, p_gens))

# the full metric-axiom battery makes the failure precise: identity of
# indiscernibles is the axiom that breaks
labels, table = squared_distance_table(plane4)
report = check_metric_axioms(labels, table)
for name, check in report.checks.items():
    status = "pass" if check.passed else f"FAIL at {check.witness}"
    print(f"  {name}: {status}")

# over the rationals no such pathology exists, and any non-collinear
# set owns a line through exactly two of its points
pts = [
    RationalPoint(Fraction(0), Fraction(0)),
    RationalPoint(Fraction(1), Fraction(0)),
    RationalPoint(Fraction(2), Fraction(0)),
    RationalPoint(Fraction(0), Fraction(1)),
    RationalPoint(Fraction(1), Fraction(1)),
    RationalPoint(Fraction(1, 2), Fraction(3, 4)),
]
result = find_ordinary_line(pts)
i, j = result.pair
print("\nordinary line through points", pts[i], "and", pts[j])
print("coefficients a, b, c of a*x + b*y + c = 0:", result.line)
