"""Irreducible components of the moduli space of rank-(r, r) classes.

Components correspond to the integer splittings chi1 + chi2 = chi + r that
fall inside the two-sided window conditions for the chosen polarization;
every component has the same dimension r^2(g1 + g2 - 1) + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import NodalCurve, Polarization, chi_to_degree, dim_moduli_smooth


@dataclass(frozen=True)
class ComponentRecord:
    """One irreducible component, keyed by its characteristic pair."""

    chi1: int
    chi2: int
    d1: int
    d2: int
    dimension: int

    def to_json(self) -> dict:
        return {
            "chi1": self.chi1,
            "chi2": self.chi2,
            "d1": self.d1,
            "d2": self.d2,
            "dimension": self.dimension,
        }


def component_dimension(c: NodalCurve, r: int) -> int:
    """Dimension r^2(g1 + g2 - 1) + 1 of every irreducible component."""
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    return r * r * (c.arithmetic_genus - 1) + 1


def projective_bundle_dimension(c: NodalCurve, r: int) -> int:
    """Dimension of the projectivized bundle of fiber maps over the product
    of the two smooth-curve moduli spaces.

    Each factor enters with its moduli dimension at a degree coprime to r
    (degree 1 serves for every r, and makes a genus-1 factor contribute 1);
    the projectivized space of fiber maps adds r^2 - 1.
    """
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    base = dim_moduli_smooth(r, 1, c.g1) + dim_moduli_smooth(r, 1, c.g2)
    return base + (r * r - 1)


def fixed_det_fiber_dimension(c: NodalCurve, r: int) -> int:
    """Dimension (r^2 - 1)(g1 + g2 - 1) of a fiber of the map recording the
    determinants of the two restrictions."""
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    return (r * r - 1) * (c.arithmetic_genus - 1)


def is_generic_for(chi: int, w: Polarization) -> bool:
    """Whether the window endpoints wi*chi are non-integral, so that neither
    boundary of the component window sits on a lattice point."""
    return (chi * w.w1).denominator != 1


def enumerate_components(
    c: NodalCurve, r: int, chi: int, w: Polarization
) -> list[ComponentRecord]:
    """All components: splittings chi1 + chi2 = chi + r inside both windows
    w_i chi <= chi_i <= w_i chi + r, sorted by chi1 ascending.

    Both boundary values are included when w_i chi is an integer; that is
    the non-generic case :func:`is_generic_for` detects.
    """
    if r < 2:
        raise ValueError(f"gluing rank must be >= 2, got {r}")
    low1 = chi * w.w1
    low2 = chi * w.w2
    records = []
    for chi1 in range(math.ceil(low1), math.floor(low1 + r) + 1):
        chi2 = chi + r - chi1
        if not low2 <= chi2 <= low2 + r:
            continue
        records.append(
            ComponentRecord(
                chi1=chi1,
                chi2=chi2,
                d1=chi_to_degree(chi1, r, c.g1),
                d2=chi_to_degree(chi2, r, c.g2),
                dimension=component_dimension(c, r),
            )
        )
    return records
