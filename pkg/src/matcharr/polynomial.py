"""Dense integer polynomials in one variable ``t``."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored in ascending degree order with no trailing zeros;
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        """Monic polynomial prod(t - r)."""
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x):
        return evaluate(self, x)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"

    def __str__(self):
        return format_expanded(self)

    def divmod_linear(self, root: int) -> tuple[IntPolynomial, int]:
        """Synthetic division by (t - root): returns (quotient, remainder)."""
        if not self.coefficients:
            return IntPolynomial(), 0
        acc = 0
        quotient = []
        for c in reversed(self.coefficients):
            acc = acc * root + c
            quotient.append(acc)
        remainder = quotient.pop()
        return IntPolynomial(reversed(quotient)), remainder


def evaluate(p: IntPolynomial, x):
    """Horner evaluation. Integer in, integer out; otherwise an exact Fraction."""
    if not isinstance(x, int):
        x = Fraction(x)
    acc = 0
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def integer_root_factorization(p: IntPolynomial, max_root: int | None = None):
    """Split p as lead * prod(t - k) with k in 0..max_root, if possible.

    Returns the list of roots (with multiplicity, ascending) or None when p
    does not split over those candidates.
    """
    if p.is_zero():
        return None
    if max_root is None:
        max_root = p.degree
    roots = []
    rest = p
    for k in range(max_root + 1):
        while rest.degree > 0:
            q, r = rest.divmod_linear(k)
            if r:
                break
            roots.append(k)
            rest = q
    if rest.degree != 0:
        return None
    return roots


def _term(c: int, d: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if d == 0:
        body = str(mag)
    else:
        power = "t" if d == 1 else f"t^{d}"
        body = power if mag == 1 else f"{mag}*{power}"
    if first:
        return f"{sign}{body}"
    return f" {sign} {body}"


def format_expanded(p: IntPolynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coefficients[d]
        if c:
            parts.append(_term(c, d, not parts))
    return "".join(parts)


def format_factored(p: IntPolynomial) -> str:
    """Factored form over integer roots when p splits, else expanded form."""
    roots = integer_root_factorization(p)
    if roots is None:
        return format_expanded(p)
    lead = p.coefficients[-1]
    zero_mult = roots.count(0)
    out = ""
    if lead != 1:
        out += "-" if lead == -1 else f"{lead}*"
    if zero_mult:
        out += "t" if zero_mult == 1 else f"t^{zero_mult}"
    for k in sorted(set(roots) - {0}):
        m = roots.count(k)
        out += f"(t - {k})" + (f"^{m}" if m > 1 else "")
    return out or "1"


def falling_factorial_shifted(n: int) -> IntPolynomial:
    """(t-1)(t-2)...(t-n)."""
    return IntPolynomial.from_roots(range(1, n + 1))


def as_polynomial(p: IntPolynomial | Sequence[int]) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial(p)
