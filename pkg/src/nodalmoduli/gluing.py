"""Gluing data for two rank-r bundles joined over the node by a fiber map.

At the invariant level a gluing is determined by the common rank r, the rank
k of the fiber map sigma, and the characteristics (chi1, chi2) of the two
bundles.  sigma itself may be supplied as an exact r x r rational matrix, in
which case k is computed from it by fraction-free elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .curves import SheafClass
from .rationals import parse_rational

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class StalkType:
    """Multiplicities (a, b, c) of the free part and the two torsion parts
    of the stalk at the node."""

    a: int
    b: int
    c: int

    def to_json(self) -> list[int]:
        return [self.a, self.b, self.c]


@dataclass(frozen=True)
class GluingDatum:
    """A gluing of rank r with fiber map of rank k and characteristics chi_i.

    ``k=None`` with an explicit sigma derives k from the matrix; giving both
    requires them to agree.  The fiber map must be nonzero (k >= 1).
    """

    r: int
    k: int | None
    chi1: int
    chi2: int
    sigma: Matrix | None = None

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"gluing rank must be >= 2, got {self.r}")
        if self.sigma is not None:
            sigma = tuple(tuple(Fraction(x) for x in row) for row in self.sigma)
            if len(sigma) != self.r or any(len(row) != self.r for row in sigma):
                raise ValueError(f"sigma must be a {self.r}x{self.r} matrix")
            object.__setattr__(self, "sigma", sigma)
            rank = matrix_rank(sigma)
            if self.k is None:
                object.__setattr__(self, "k", rank)
            elif self.k != rank:
                raise ValueError(f"declared k={self.k} but sigma has rank {rank}")
        if self.k is None:
            raise ValueError("either k or an explicit sigma matrix is required")
        if not 1 <= self.k <= self.r:
            raise ValueError(
                f"fiber-map rank must satisfy 1 <= k <= r, got k={self.k}, r={self.r}"
            )

    @property
    def chi(self) -> int:
        return self.chi1 + self.chi2 - self.r


def matrix_rank(matrix: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Each row is first scaled to integer entries (clearing denominators does
    not change the rank); every later division is then exact.  Pivots are
    chosen as the first nonzero entry in the column.  Requires a square
    matrix.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("matrix must be nonempty")
    rows: list[list[int]] = []
    for row in matrix:
        if len(row) != n:
            raise ValueError(
                f"matrix must be square, got a row of length {len(row)} with {n} rows"
            )
        entries = [Fraction(x) for x in row]
        scale = math.lcm(*(e.denominator for e in entries))
        rows.append([int(e * scale) for e in entries])

    rank = 0
    prev = 1
    for col in range(n):
        pivot = next((i for i in range(rank, n) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(rank + 1, n):
            factor = rows[i][col]
            for j in range(col + 1, n):
                rows[i][j] = (rows[i][j] * lead - factor * rows[rank][j]) // prev
            rows[i][col] = 0
        prev = lead
        rank += 1
    return rank


def glued_class(u: GluingDatum) -> tuple[SheafClass, StalkType, bool]:
    """Invariants of the glued sheaf: class, stalk type at the node, bundle flag.

    The characteristic adds with a rank correction (chi1 + chi2 - r); the
    stalk at the node has free multiplicity k and torsion multiplicity r - k
    on each branch.  The sheaf is locally free exactly when sigma is
    invertible, that is when k = r.
    """
    cls = SheafClass(r1=u.r, r2=u.r, chi=u.chi, chi1=u.chi1, chi2=u.chi2)
    stalk = StalkType(a=u.k, b=u.r - u.k, c=u.r - u.k)
    return cls, stalk, u.k == u.r


def canonical_subsheaves(u: GluingDatum) -> tuple[SheafClass, SheafClass]:
    """The two kernel subsheaves supported on a single component.

    K1 lives on the first component with chi(K1) = chi1 - k (the fiber map
    kills a k-dimensional quotient of the fiber); K2 lives on the second with
    chi(K2) = chi2 - r (the whole fiber is killed).
    """
    k1 = SheafClass(r1=u.r, r2=0, chi=u.chi1 - u.k)
    k2 = SheafClass(r1=0, r2=u.r, chi=u.chi2 - u.r)
    return k1, k2


def parse_matrix(data: object) -> Matrix:
    """Decode a matrix from parsed JSON: a list of rows whose entries are
    "p/q" strings (or plain integers)."""
    if not isinstance(data, list) or not data:
        raise ValueError("matrix JSON must be a nonempty array of rows")
    rows = []
    for row in data:
        if not isinstance(row, list):
            raise ValueError("matrix JSON rows must be arrays")
        entries = []
        for cell in row:
            if isinstance(cell, str):
                entries.append(parse_rational(cell))
            elif isinstance(cell, int) and not isinstance(cell, bool):
                entries.append(Fraction(cell))
            else:
                raise ValueError(f"matrix entries must be 'p/q' strings, got {cell!r}")
        rows.append(tuple(entries))
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("matrix rows must all have the same length")
    return tuple(rows)
