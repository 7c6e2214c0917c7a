"""Slope bounds for subsheaves of a glued sheaf, and sufficiency checks.

Subsheaves of a gluing are classified, at the invariant level, by a shape
(s, s1, s2): the free multiplicity s of their stalk at the node and their
ranks s1, s2 on the two components, with 0 <= s <= k and s <= si <= r.  Such
a subsheaf splits off kernel bundles G1, G2 on the components, and when the
component bundles are (0,k)- resp. (0,r)-semistable the degrees of G1, G2
are bounded above.  Since the weighted slope grows with the degrees, the
extremal degrees realize the largest slope of each shape; comparing those
finitely many extremal slopes against the ambient slope decides
semistability at the level this model resolves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .curves import Polarization, chi_to_degree, mk_slope, polarized_slope
from .feasibility import violated_conditions
from .gluing import GluingDatum, glued_class


class NecessaryConditionError(ValueError):
    """The polarization fails the compatibility inequalities of the gluing."""

    def __init__(self, message: str, violated: list[str]):
        super().__init__(message)
        self.violated = violated


@dataclass(frozen=True)
class StabilityHypotheses:
    """A gluing instance together with the component genera.

    Degrees d1, d2 are derived from the characteristics: di = chii - r(1-gi).
    """

    r: int
    k: int
    chi1: int
    chi2: int
    g1: int
    g2: int
    d1: int = field(init=False)
    d2: int = field(init=False)

    def __post_init__(self) -> None:
        if self.g1 < 1 or self.g2 < 1:
            raise ValueError(
                f"component genera must be >= 1, got ({self.g1}, {self.g2})"
            )
        if self.r < 2:
            raise ValueError(f"gluing rank must be >= 2, got {self.r}")
        if not 1 <= self.k <= self.r:
            raise ValueError(
                f"fiber-map rank must satisfy 1 <= k <= r, got k={self.k}, r={self.r}"
            )
        object.__setattr__(self, "d1", chi_to_degree(self.chi1, self.r, self.g1))
        object.__setattr__(self, "d2", chi_to_degree(self.chi2, self.r, self.g2))

    def gluing(self) -> GluingDatum:
        return GluingDatum(self.r, self.k, self.chi1, self.chi2)


@dataclass(frozen=True)
class SubsheafInvariant:
    """Shape and kernel degrees of a candidate subsheaf.

    s is the free multiplicity of the stalk at the node; s1, s2 the component
    ranks (each at least s, since the free part restricts to both sides);
    deg_g1, deg_g2 the degrees of the kernel bundles.
    """

    s: int
    s1: int
    s2: int
    deg_g1: int
    deg_g2: int

    def __post_init__(self) -> None:
        if self.s < 0:
            raise ValueError(f"free multiplicity must be >= 0, got {self.s}")
        if self.s1 < self.s or self.s2 < self.s:
            raise ValueError(
                f"component ranks must be >= s, got s={self.s}, "
                f"s1={self.s1}, s2={self.s2}"
            )

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "s1": self.s1,
            "s2": self.s2,
            "deg_g1": self.deg_g1,
            "deg_g2": self.deg_g2,
        }


def subsheaf_slope(
    f: SubsheafInvariant, h: StabilityHypotheses, w: Polarization
) -> Fraction:
    """Weighted slope of a subsheaf shape.

    chi(F) = deg(G1) + s1(1-g1) + deg(G2) + s2(1-g2) + s, divided by the
    weighted rank w1 s1 + w2 s2.
    """
    if f.s1 == 0 and f.s2 == 0:
        raise ValueError("subsheaf must have positive rank on some component")
    chi_f = (
        f.deg_g1
        + f.s1 * (1 - h.g1)
        + f.deg_g2
        + f.s2 * (1 - h.g2)
        + f.s
    )
    return Fraction(chi_f) / (w.w1 * f.s1 + w.w2 * f.s2)


def max_degree_bounds(
    shape: tuple[int, int, int],
    h: StabilityHypotheses,
    strict: bool = False,
) -> tuple[int | None, int | None]:
    """Largest kernel degrees the component hypotheses allow for a shape.

    On the first component ((0,k)-semistable): deg(G1) <= s1 (d1 - k) / r.
    On the second ((0,r)-semistable, twisted down by the node point):
    deg(G2) <= s2 (d2 - 2r) / r.  A rank-zero side carries no bound (None).
    With ``strict`` the hypotheses are stability, the bounds become strict,
    and an integer bound drops by one.
    """
    _, s1, s2 = shape

    def floor_bound(q: Fraction) -> int:
        return (q.numerator - (1 if strict else 0)) // q.denominator

    max1 = None if s1 == 0 else floor_bound(Fraction(s1 * (h.d1 - h.k), h.r))
    max2 = None if s2 == 0 else floor_bound(Fraction(s2 * (h.d2 - 2 * h.r), h.r))
    return max1, max2


def check_sufficiency(
    h: StabilityHypotheses,
    w: Polarization,
    strict: bool = False,
    degree_window: int = 0,
) -> tuple[bool, SubsheafInvariant | None]:
    """Search for a subsheaf shape whose slope beats the ambient slope.

    Requires w to satisfy the compatibility inequalities of the gluing
    (raises :class:`NecessaryConditionError` naming the violated one
    otherwise).  Shapes (s, s1, s2) are enumerated lexicographically with
    0 <= s <= k and s <= si <= r, each filled with its extremal kernel
    degrees; the slope is monotone in the degrees, so the extremal pair
    dominates all smaller ones.  In strict mode the comparison is strict,
    restricted to proper shapes ((s1, s2) = (r, r) excluded), under the
    stability upgrade of the component hypotheses.

    ``degree_window`` > 0 additionally sweeps all degree pairs down to that
    distance below the extremal ones, as a slow cross-check of the
    extremal-degree reduction.

    Returns (holds, witness); the witness is the first violating invariant.
    """
    datum = h.gluing()
    violated = violated_conditions(datum, w)
    if violated:
        raise NecessaryConditionError(
            f"polarization violates compatibility: {violated[0]}", violated
        )
    ambient = polarized_slope(glued_class(datum)[0], w)
    for s in range(0, h.k + 1):
        for s1 in range(s, h.r + 1):
            for s2 in range(s, h.r + 1):
                if s1 == 0 and s2 == 0:
                    continue
                if strict and (s1, s2) == (h.r, h.r):
                    continue
                max1, max2 = max_degree_bounds((s, s1, s2), h, strict=strict)
                for deg1 in _degree_choices(max1, degree_window):
                    for deg2 in _degree_choices(max2, degree_window):
                        f = SubsheafInvariant(s, s1, s2, deg1, deg2)
                        slope = subsheaf_slope(f, h, w)
                        if slope > ambient or (strict and slope == ambient):
                            return False, f
    return True, None


def _degree_choices(max_degree: int | None, window: int) -> range:
    if max_degree is None:
        return range(0, 1)  # absent side: the kernel degree is 0 by convention
    return range(max_degree - window, max_degree + 1)


def mk_semistable_test(
    sub: tuple[int, int],
    amb: tuple[int, int],
    m: int,
    k: int,
    strict: bool = False,
) -> bool:
    """Shifted-slope comparison mu_m(sub) <= mu_(m-k)(amb), strict on request."""
    mu_sub = mk_slope(sub[0], sub[1], m)
    mu_amb = mk_slope(amb[0], amb[1], m - k)
    return mu_sub < mu_amb if strict else mu_sub <= mu_amb


def nonstable_locus_codim_bound(r: int, g: int, s: int) -> int:
    """Lower bound s((g-1)(r-s) - r) for the codimension of the locus of
    bundles that are not (0,r)-stable, at kernel rank s.

    Positive whenever g > r + 1; it can vanish at g = r + 1.
    """
    if not 1 <= s <= r - 1:
        raise ValueError(f"kernel rank must satisfy 1 <= s <= r-1, got s={s}, r={r}")
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    return s * ((g - 1) * (r - s) - r)
