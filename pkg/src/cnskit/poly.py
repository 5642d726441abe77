"""Exact arithmetic for integer polynomials.

Coefficients are arbitrary-precision integers stored densely, constant
term first.  Nothing in this module touches floating point; the repeated
root test runs an integer pseudo-remainder sequence instead of computing
roots numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

# Exact rational numbers: always reduced, denominator always positive.
Rational = Fraction

# Degree of the zero polynomial.  A distinguished value, never -1.
NEG_INFINITY = float("-inf")


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` multiplies X^i."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_string(cls, text: str) -> IntPoly:
        """Parse the comma-separated coefficient form, e.g. "2,2,1"."""
        try:
            coeffs = tuple(int(tok.strip()) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad polynomial text {text!r}") from exc
        return cls(coeffs)

    def to_string(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.to_string()

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def degree(self) -> int | float:
        return NEG_INFINITY if self.is_zero else len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    @property
    def constant_term(self) -> int:
        return self.coeffs[0]

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1


ZERO = IntPoly((0,))
ONE = IntPoly((1,))


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact sum."""
    out = [0] * max(len(a.coeffs), len(b.coeffs))
    for i, c in enumerate(a.coeffs):
        out[i] += c
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return IntPoly(tuple(out))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product; schoolbook is plenty at these degrees."""
    if a.is_zero or b.is_zero:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return IntPoly(tuple(out))


def poly_eval(p: IntPoly, x: int) -> int:
    """Evaluate at an integer point by Horner's rule."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divrem(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division a = q*b + r with deg r < deg b.

    The divisor must be monic so every intermediate coefficient stays an
    integer; anything else is rejected.
    """
    if not b.is_monic:
        raise ValueError("divisor must be monic")
    n = len(b.coeffs) - 1
    if n == 0:
        return a, ZERO
    r = list(a.coeffs)
    if len(r) <= n:
        return ZERO, a
    q = [0] * (len(r) - n)
    for i in reversed(range(len(q))):
        coef = r[i + n]
        if coef:
            q[i] = coef
            r[i + n] = 0
            for j in range(n):
                r[i + j] -= coef * b.coeffs[j]
    return IntPoly(tuple(q)), IntPoly(tuple(r[:n]))


def poly_derivative(p: IntPoly) -> IntPoly:
    if len(p.coeffs) == 1:
        return ZERO
    return IntPoly(tuple(i * c for i, c in enumerate(p.coeffs) if i))


def x_power_plus_c(d: int, c: int) -> IntPoly:
    """The polynomial X^d + c."""
    if d < 1:
        raise ValueError("exponent must be positive")
    return IntPoly((c,) + (0,) * (d - 1) + (1,))


def divides_xd_plus_c(p: IntPoly, d: int, c: int) -> bool:
    """Whether p divides X^d + c exactly."""
    _, r = poly_divrem(x_power_plus_c(d, c), p)
    return r.is_zero


def compose_x_power(p: IntPoly, k: int) -> IntPoly:
    """p(X^k): spreads the coefficients k positions apart."""
    if k < 1:
        raise ValueError("power must be positive")
    if k == 1 or p.is_zero:
        return p
    out = [0] * ((len(p.coeffs) - 1) * k + 1)
    for i, c in enumerate(p.coeffs):
        out[i * k] = c
    return IntPoly(tuple(out))


def has_simple_roots(p: IntPoly) -> bool:
    """Whether gcd(p, p') is constant, i.e. p has no repeated roots.

    Runs a primitive pseudo-remainder sequence, so every intermediate is an
    exact integer vector; the gcd is constant exactly when the last nonzero
    member of the sequence has degree zero.
    """
    if p.is_zero:
        return False
    a = _primitive(list(p.coeffs))
    b = _primitive([i * c for i, c in enumerate(p.coeffs)][1:])
    while b != [0]:
        a, b = b, _primitive(_pseudo_rem(a, b))
    return len(a) == 1


def _trim(v: list[int]) -> list[int]:
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return v or [0]


def _primitive(v: list[int]) -> list[int]:
    v = _trim(list(v))
    g = 0
    for c in v:
        g = gcd(g, c)
    if g > 1:
        v = [c // g for c in v]
    return v


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # remainder of a scaled by powers of lc(b): exact over the integers,
    # and a scalar multiple of the rational remainder, which is all the
    # gcd-degree test needs
    r = list(a)
    n = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= n and r != [0]:
        top = r[-1]
        shift = len(r) - 1 - n
        r = [lb * c for c in r]
        for j in range(n + 1):
            r[shift + j] -= top * b[j]
        r = _trim(r)
    return r
