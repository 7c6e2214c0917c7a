"""Enumerate moduli components and verify the dimension identities.

Every irreducible component for a fixed chi corresponds to an integer
splitting chi1 + chi2 = chi + r inside the polarization windows, and all of
them share the dimension r^2(g1 + g2 - 1) + 1, which also equals the
dimension of the projectivized bundle of fiber maps.  Fixing the pair of
restricted determinants cuts the dimension by exactly g1 + g2.
"""

from fractions import Fraction

from nodalmoduli import (
    NodalCurve,
    Polarization,
    component_dimension,
    enumerate_components,
    fixed_det_fiber_dimension,
    is_generic_for,
    projective_bundle_dimension,
)

curve = NodalCurve(2, 3)
w = Polarization.from_w1(Fraction(2, 5))

print(f"curve genera (2, 3), w1 = {w.w1}\n")
for r, chi in [(2, 1), (2, 0), (3, -2)]:
    records = enumerate_components(curve, r, chi, w)
    generic = is_generic_for(chi, w)
    print(f"r = {r}, chi = {chi} ({'generic' if generic else 'NON-GENERIC'} weight): "
          f"{len(records)} components")
    for rec in records:
        print(f"  chi = ({rec.chi1:>3}, {rec.chi2:>3})  "
              f"multidegree = ({rec.d1:>3}, {rec.d2:>3})  dim = {rec.dimension}")
    print()

print("dimension identities across genera and ranks:")
print("  g1 g2  r | component  fiber-map bundle  fixed-det fiber  difference")
for g1, g2, r in [(1, 1, 2), (2, 2, 2), (1, 5, 3), (4, 3, 4)]:
    c = NodalCurve(g1, g2)
    comp = component_dimension(c, r)
    bundle = projective_bundle_dimension(c, r)
    fiber = fixed_det_fiber_dimension(c, r)
    print(f"  {g1:>2} {g2:>2} {r:>2} | {comp:>9}  {bundle:>16}  {fiber:>15}  "
          f"{comp - fiber} (= g1 + g2)")
