"""Flats of the matroid of normal vectors, Möbius values, characteristic
polynomial and region count of a central arrangement.

For a central arrangement the intersection poset is isomorphic to the lattice
of flats of the matroid whose ground set is the set of normals, so everything
here is computed from linear dependencies among normals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .arrangement import Arrangement
from .errors import check_limit
from .linalg import in_span, primitive, rank
from .polynomial import IntPolynomial, evaluate

MAX_HYPERPLANES = 40


@dataclass(frozen=True)
class Flat:
    members: frozenset[int]
    rank: int

    @property
    def mask(self) -> int:
        m = 0
        for i in self.members:
            m |= 1 << i
        return m


@dataclass(frozen=True)
class FlatLattice:
    """Flats ordered bottom first, grouped by rank.

    ``lower_covers[k]`` lists the indices of the flats covered by flat k;
    ``mobius[k]`` is mu(bottom, flat k).
    """

    flats: tuple[Flat, ...]
    lower_covers: tuple[tuple[int, ...], ...]
    mobius: tuple[int, ...]
    matroid_rank: int
    size: int  # number of hyperplanes in the ground set

    def __len__(self):
        return len(self.flats)

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    @property
    def top(self) -> Flat:
        return self.flats[-1]

    def leq(self, i: int, j: int) -> bool:
        return self.flats[i].members <= self.flats[j].members

    def rank_counts(self) -> list[int]:
        counts = [0] * (self.matroid_rank + 1)
        for f in self.flats:
            counts[f.rank] += 1
        return counts

    def chi_matroid(self) -> IntPolynomial:
        coeffs = [0] * (self.matroid_rank + 1)
        for f, mu in zip(self.flats, self.mobius):
            coeffs[self.matroid_rank - f.rank] += mu
        return IntPolynomial(coeffs)


def closure(a: Arrangement, subset: Iterable[int]) -> Flat:
    """All hyperplanes whose normal lies in the span of the subset's normals."""
    subset = sorted(set(subset))
    normals = a.normals
    basis = [normals[i] for i in subset]
    members = frozenset(i for i, nv in enumerate(normals) if i in subset or in_span(nv, basis))
    return Flat(members, rank(basis))


def build_flat_lattice(a: Arrangement, *, max_hyperplanes: int = MAX_HYPERPLANES) -> FlatLattice:
    """Generate flats rank by rank, closing each flat extended by one hyperplane.

    Every flat carries, for each hyperplane outside it, a residual: the
    normal reduced modulo the flat's span, kept as a primitive integer vector
    that vanishes on the flat's pivot coordinates. Two outside hyperplanes
    land in the same covering flat exactly when their residuals are parallel,
    so closure(F + h) = F + {g : residual(g) parallel to residual(h)}.
    """
    m = len(a)
    check_limit("hyperplane count", m, max_hyperplanes)
    normals = a.normals

    flats: list[Flat] = [Flat(frozenset(), 0)]
    masks = [0]
    residuals: list[dict[int, tuple[int, ...]] | None] = [
        {i: primitive(nv) for i, nv in enumerate(normals)}
    ]
    covers: list[list[int]] = [[]]
    index_of_mask = {0: 0}

    level = [0]
    while level:
        nxt = []
        for k in level:
            res = residuals[k]
            groups: dict[tuple[int, ...], list[int]] = {}
            for i, r in res.items():
                groups.setdefault(r, []).append(i)
            for key, members in groups.items():
                child_mask = masks[k]
                for i in members:
                    child_mask |= 1 << i
                j = index_of_mask.get(child_mask)
                if j is None:
                    j = len(flats)
                    index_of_mask[child_mask] = j
                    masks.append(child_mask)
                    flats.append(Flat(flats[k].members | frozenset(members), flats[k].rank + 1))
                    covers.append([])
                    residuals.append(_eliminate(res, key, members))
                    nxt.append(j)
                covers[j].append(k)
            residuals[k] = None  # no longer needed
        level = nxt

    mobius = _mobius(covers)
    top_rank = flats[-1].rank
    return FlatLattice(
        flats=tuple(flats),
        lower_covers=tuple(tuple(c) for c in covers),
        mobius=tuple(mobius),
        matroid_rank=top_rank,
        size=m,
    )


def _eliminate(res, pivot_row, absorbed):
    absorbed = set(absorbed)
    c = next(j for j, x in enumerate(pivot_row) if x)
    pc = pivot_row[c]
    out = {}
    for i, r in res.items():
        if i in absorbed:
            continue
        rc = r[c]
        if rc:
            r = _primitive_int([pc * x - rc * y for x, y in zip(r, pivot_row)])
        out[i] = r
    return out


def _primitive_int(row: list[int]) -> tuple[int, ...]:
    g = gcd(*row)
    first = next(x for x in row if x)
    if first < 0:
        g = -g
    if g != 1:
        row = [x // g for x in row]
    return tuple(row)


def _mobius(covers: list[list[int]]) -> list[int]:
    """mu(0) = 1, mu(x) = -sum of mu over flats strictly below x.

    Flats are indexed so that every lower cover precedes its cover; the
    down-set of each flat is a bitmask over flat indices.
    """
    n = len(covers)
    down = [0] * n
    mobius = [0] * n
    by_value: dict[int, int] = {}  # mu value -> bitmask of flats with that value
    for x in range(n):
        below = 0
        for c in covers[x]:
            below |= down[c]
        down[x] = below | (1 << x)
        if x == 0:
            mu = 1
        else:
            mu = -sum(v * (below & mask).bit_count() for v, mask in by_value.items())
        mobius[x] = mu
        by_value[mu] = by_value.get(mu, 0) | (1 << x)
    return mobius


def characteristic_polynomial(a: Arrangement, lattice: FlatLattice | None = None, *,
                              max_hyperplanes: int = MAX_HYPERPLANES) -> IntPolynomial:
    """chi_A(t) = t^(n - r) * sum over flats of mu(x) t^(r - rank x)."""
    if lattice is None:
        lattice = build_flat_lattice(a, max_hyperplanes=max_hyperplanes)
    return lattice.chi_matroid() * IntPolynomial.monomial(a.dimension - lattice.matroid_rank)


def region_count(a: Arrangement, lattice: FlatLattice | None = None, *,
                 max_hyperplanes: int = MAX_HYPERPLANES) -> int:
    """Number of regions, (-1)^n chi(-1)."""
    chi = characteristic_polynomial(a, lattice, max_hyperplanes=max_hyperplanes)
    value = Fraction(evaluate(chi, -1))
    count = (-1) ** a.dimension * value
    assert count.denominator == 1
    return int(count)
