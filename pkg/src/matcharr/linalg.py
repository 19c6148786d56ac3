"""Exact rational linear algebra over :class:`fractions.Fraction`.

Vectors are plain sequences of ints/Fractions; matrices are sequences of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import check_limit
from .polynomial import IntPolynomial, evaluate

MAX_FM_CONSTRAINTS = 16
MAX_FM_DIMENSION = 5

Vector = Sequence  # of int | Fraction


def rat_vector(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def integer_row(v) -> list[int]:
    """Scale a rational vector to a primitive integer vector (same line)."""
    fr = rat_vector(v)
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    row = [int(x * den) for x in fr]
    g = gcd(*row) if row else 0
    if g > 1:
        row = [x // g for x in row]
    return row


def primitive(v) -> tuple[int, ...]:
    """Primitive integer multiple with first nonzero entry positive."""
    row = integer_row(v)
    for x in row:
        if x:
            if x < 0:
                row = [-y for y in row]
            break
    return tuple(row)


def rank(rows) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    m = [integer_row(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise ValueError("ragged matrix")
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            m[i] = [(p * m[i][j] - a * m[r][j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def in_span(v, basis) -> bool:
    basis = list(basis)
    if basis and len(v) != len(basis[0]):
        raise ValueError(f"dimension mismatch: {len(v)} vs {len(basis[0])}")
    if not any(v):
        return True
    if not basis:
        return False
    return rank(basis + [v]) == rank(basis)


def poly_eval(p: IntPolynomial, x) -> Fraction:
    return Fraction(evaluate(p, Fraction(x)))


@dataclass(frozen=True)
class StrictSystem:
    """Constraints ``sign * <a, x> > 0`` with sign in {+1, -1}."""

    constraints: tuple[tuple[tuple[Fraction, ...], int], ...]

    def __post_init__(self):
        cons = []
        for a, s in self.constraints:
            a = rat_vector(a)
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s!r}")
            if not any(a):
                raise ValueError("zero constraint vector")
            cons.append((a, s))
        dims = {len(a) for a, _ in cons}
        if len(dims) > 1:
            raise ValueError("constraints of different lengths")
        object.__setattr__(self, "constraints", tuple(cons))

    @property
    def dimension(self) -> int:
        return len(self.constraints[0][0]) if self.constraints else 0

    def satisfied_by(self, x) -> bool:
        return all(s * sum(ai * xi for ai, xi in zip(a, x)) > 0 for a, s in self.constraints)


def fm_feasible(system: StrictSystem, *, max_constraints=MAX_FM_CONSTRAINTS,
                max_dimension=MAX_FM_DIMENSION) -> bool:
    return fm_solve(system, max_constraints=max_constraints, max_dimension=max_dimension) is not None


def fm_solve(system: StrictSystem, *, max_constraints=MAX_FM_CONSTRAINTS,
             max_dimension=MAX_FM_DIMENSION) -> Optional[tuple[Fraction, ...]]:
    """Fourier-Motzkin elimination for homogeneous strict inequalities.

    Returns a rational witness, or None when the system is infeasible. The
    variable occurring in the fewest constraints is eliminated first.
    """
    check_limit("constraint count", len(system.constraints), max_constraints)
    check_limit("dimension", system.dimension, max_dimension)
    n = system.dimension
    # each constraint kept as a primitive integer row meaning <row, x> > 0
    current = _dedupe(integer_row([s * ai for ai in a]) for a, s in system.constraints)
    stages = []  # (variable, constraints mentioning it), innermost last
    remaining = set(range(n))
    while remaining:
        if any(not any(row) for row in current):
            return None
        var = min(remaining, key=lambda j: (sum(1 for row in current if row[j]), j))
        pos = [row for row in current if row[var] > 0]
        neg = [row for row in current if row[var] < 0]
        rest = [row for row in current if row[var] == 0]
        stages.append((var, pos + neg))
        combined = []
        for p in pos:
            for q in neg:
                # eliminate var with positive multipliers: strictness survives
                row = [-q[var] * p[j] + p[var] * q[j] for j in range(n)]
                if not any(row):
                    return None  # 0 > 0
                combined.append(integer_row(row))
        current = _dedupe(rest + combined)
        remaining.discard(var)
    if current:
        return None  # only zero rows can remain once every variable is gone
    x = [Fraction(0)] * n
    for var, rows in reversed(stages):
        lo, hi = None, None
        for row in rows:
            # row[var] * x_var + rest > 0
            others = sum(Fraction(row[j]) * x[j] for j in range(n) if j != var)
            bound = -others / row[var]
            if row[var] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is None and hi is None:
            val = Fraction(0)
        elif hi is None:
            val = lo + 1
        elif lo is None:
            val = hi - 1
        else:
            val = (lo + hi) / 2
        x[var] = val
    return tuple(x)


def _dedupe(rows) -> list[list[int]]:
    seen = set()
    out = []
    for row in rows:
        key = tuple(row)
        if key not in seen:
            seen.add(key)
            out.append(list(row))
    return out
