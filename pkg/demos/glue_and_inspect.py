"""Glue two rank-r bundles along an explicit fiber matrix and read off the
invariants of the resulting depth-one sheaf.

The matrix rank decides everything local: free multiplicity of the stalk at
the node, torsion on each branch, and whether the sheaf is a vector bundle.
"""

from fractions import Fraction

from nodalmoduli import (
    GluingDatum,
    canonical_subsheaves,
    glued_class,
    matrix_rank,
    polarized_slope,
    Polarization,
)


def inspect(sigma, chi1, chi2):
    datum = GluingDatum(r=len(sigma), k=None, chi1=chi1, chi2=chi2, sigma=sigma)
    sheaf, stalk, is_bundle = glued_class(datum)
    print(f"sigma rank {datum.k} of {datum.r}, chi = ({chi1}, {chi2})")
    print(f"  glued class: multirank ({sheaf.r1}, {sheaf.r2}), chi = {sheaf.chi}")
    print(f"  stalk at the node: free^{stalk.a} + torsion^({stalk.b}, {stalk.c})")
    print(f"  vector bundle: {is_bundle}")
    k1, k2 = canonical_subsheaves(datum)
    w = Polarization.from_w1(Fraction(1, 2))
    print(f"  kernel subsheaves: chi(K1) = {k1.chi}, chi(K2) = {k2.chi}; "
          f"slopes {polarized_slope(k1, w)}, {polarized_slope(k2, w)} at w1 = 1/2\n")


print("An isomorphism glues to a vector bundle:")
inspect([[1, 0], [0, 1]], chi1=1, chi2=1)

print("A rank-one map leaves torsion on both branches:")
inspect([[Fraction(1, 2), 1], [Fraction(1, 4), Fraction(1, 2)]], chi1=3, chi2=1)

print("Rank drops are detected exactly, not numerically:")
tiny = Fraction(1, 10**40)
nearly_singular = [[1, 1], [1, 1 + tiny]]
print(f"  rank of [[1, 1], [1, 1 + 10^-40]] = {matrix_rank(nearly_singular)}")
print(f"  rank of [[1, 1], [1, 1]]          = {matrix_rank([[1, 1], [1, 1]])}")
