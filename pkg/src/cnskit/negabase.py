"""Negative-base digit expansions and the shared digit-string machinery.

A Representation pairs a base descriptor (negative integer base, or monic
polynomial base) with a digit sequence stored least significant first.
Digit strings are printed most significant first; digits above 9 force a
dotted form so multi-digit entries stay unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import IntPoly


@dataclass(frozen=True)
class NegaBase:
    """Base -b with digit set {0, ..., b-1}."""

    b: int

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ValueError(f"negative base needs b >= 2, got {self.b}")

    @property
    def radix(self) -> int:
        return self.b


@dataclass(frozen=True)
class CnsBase:
    """Polynomial base with digit set {0, ..., |p(0)|-1}."""

    poly: IntPoly

    def __post_init__(self) -> None:
        if not self.poly.is_monic:
            raise ValueError("base polynomial must be monic")
        if abs(self.poly.constant_term) <= 1:
            raise ValueError("base polynomial needs |p(0)| > 1")

    @property
    def radix(self) -> int:
        return abs(self.poly.constant_term)


def format_digits(digits: Sequence[int]) -> str:
    """Digits (least significant first) to text, most significant first."""
    msd_first = list(reversed(digits))
    if max(msd_first) <= 9:
        return "".join(str(d) for d in msd_first)
    return ".".join(str(d) for d in msd_first)


def parse_digits(text: str) -> tuple[int, ...]:
    """Digit string (most significant first, plain or dotted) to digits
    least significant first."""
    text = text.strip()
    if not text:
        raise ValueError("empty digit string")
    tokens = text.split(".") if "." in text else list(text)
    try:
        msd_first = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise ValueError(f"bad digit string {text!r}") from exc
    if any(d < 0 for d in msd_first):
        raise ValueError(f"negative digit in {text!r}")
    return tuple(reversed(msd_first))


@dataclass(frozen=True)
class Representation:
    """A digit expansion; the canonical zero is the single digit 0."""

    base: NegaBase | CnsBase
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        digits = tuple(int(d) for d in self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise ValueError("a representation needs at least one digit")
        radix = self.base.radix
        for d in digits:
            if not 0 <= d < radix:
                raise ValueError(f"digit {d} outside 0..{radix - 1}")
        if len(digits) > 1 and digits[-1] == 0:
            raise ValueError("most significant digit must be nonzero")

    @classmethod
    def from_string(cls, base: NegaBase | CnsBase, text: str) -> Representation:
        return cls(base, parse_digits(text))

    @property
    def length(self) -> int:
        return len(self.digits)

    def digit_string(self) -> str:
        return format_digits(self.digits)

    def pretty(self) -> str:
        suffix = "p" if isinstance(self.base, CnsBase) else f"-{self.base.b}"
        return f"({self.digit_string()})_{suffix}"

    def __str__(self) -> str:
        return self.digit_string()


def encode_negabase(z: int, b: int) -> Representation:
    """Expand z in base -b; every integer has exactly one such expansion."""
    base = NegaBase(b)
    digits = []
    n = z
    while n != 0:
        r = n % b
        digits.append(r)
        n = (r - n) // b
    if not digits:
        digits.append(0)
    return Representation(base, tuple(digits))


def decode_negabase(rep: Representation) -> int:
    """Evaluate the expansion at -b."""
    if not isinstance(rep.base, NegaBase):
        raise ValueError("expected a negative-base representation")
    acc = 0
    for d in reversed(rep.digits):
        acc = acc * -rep.base.b + d
    return acc


def length_negabase(z: int, b: int) -> int:
    """Digit count of the base -b expansion; 0 counts as one digit."""
    if b < 2:
        raise ValueError(f"negative base needs b >= 2, got {b}")
    count = 0
    n = z
    while n != 0:
        r = n % b
        n = (r - n) // b
        count += 1
    return count or 1


def extremal_of_length(b: int, length: int) -> tuple[int, int]:
    """Value range attained by a given expansion length, as (smallest, largest).

    Odd lengths are attained by a contiguous run of positive integers (plus
    zero at length 1, which is not included here), even lengths by a run of
    negatives.  All four closed forms divide exactly because b = -1 mod b+1.
    """
    if b < 2:
        raise ValueError(f"negative base needs b >= 2, got {b}")
    if length < 1:
        raise ValueError("length must be positive")
    if length % 2:
        k = (length - 1) // 2
        low = (b ** (2 * k) + b) // (b + 1)
        high = (b ** (2 * k + 2) - 1) // (b + 1)
    else:
        m = length // 2
        low = -((b ** (2 * m + 1) - b) // (b + 1))
        high = -((b ** (2 * m - 1) + 1) // (b + 1))
    return low, high
