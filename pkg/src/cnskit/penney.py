"""Validated block-substitution schemes.

A scheme pairs a monic polynomial base p with a negative integer base -c
and a block width d such that p divides X^d + c with d above deg(p).
Each digit 0..c-1 then owns a fixed d-digit block, and the expansion of
any integer is read off its base -c expansion block by block.  Building
a scheme checks every hypothesis and reports the first failure as data
rather than raising, because an inapplicable base is an informative
outcome in its own right.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .cns import DEFAULT_MAX_STEPS, CnsDigits, cns_encode, reduce_digits
from .negabase import CnsBase, Representation, encode_negabase, format_digits, parse_digits
from .poly import IntPoly, divides_xd_plus_c, has_simple_roots


class ViolationKind(Enum):
    NOT_MONIC = "not_monic"
    CONSTANT_TERM_TOO_SMALL = "constant_term_too_small"
    REPEATED_ROOTS = "repeated_roots"
    NO_DIVISIBILITY = "no_divisibility"
    D_TOO_SMALL_FOR_DEGREE = "d_too_small_for_degree"
    DIGIT_NOT_REPRESENTABLE = "digit_not_representable"
    BLOCK_TOO_LONG = "block_too_long"


@dataclass(frozen=True)
class SchemeViolation:
    """First hypothesis that failed while building a scheme, with witness."""

    kind: ViolationKind
    digit: int | None = None
    block_length: int | None = None

    def describe(self) -> str:
        if self.kind is ViolationKind.DIGIT_NOT_REPRESENTABLE:
            return f"digit {self.digit} has no expansion"
        if self.kind is ViolationKind.BLOCK_TOO_LONG:
            return (f"digit {self.digit} needs {self.block_length} digits, "
                    "more than the block width")
        return self.kind.value.replace("_", " ")


@dataclass(frozen=True)
class PenneyScheme:
    """Immutable conversion table from base -c to base p expansions.

    blocks[i] is the expansion of i, least significant digit first and
    zero padded to exactly d digits; block_lengths[i] is its unpadded
    length.
    """

    poly: IntPoly
    c: int
    d: int
    blocks: tuple[tuple[int, ...], ...]
    block_lengths: tuple[int, ...]

    @cached_property
    def base(self) -> CnsBase:
        return CnsBase(self.poly)

    def to_dict(self) -> dict:
        return {
            "poly": self.poly.to_string(),
            "c": self.c,
            "d": self.d,
            "blocks": [format_digits(block) for block in self.blocks],
        }

    @classmethod
    def from_dict(cls, data: dict) -> PenneyScheme:
        """Rebuild a serialized scheme, re-checking everything it claims."""
        try:
            poly = IntPoly.from_string(data["poly"])
            c = int(data["c"])
            d = int(data["d"])
            block_texts = list(data["blocks"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed scheme data: {exc}") from exc
        if c < 1 or d < 1:
            raise ValueError("c and d must be positive")
        violation = _check_hypotheses(poly, c, d)
        if violation is not None:
            raise ValueError(f"scheme data violates hypotheses: {violation.describe()}")
        if len(block_texts) != c:
            raise ValueError(f"expected {c} blocks, got {len(block_texts)}")
        radix = abs(poly.constant_term)
        blocks = []
        lengths = []
        for i, text in enumerate(block_texts):
            digits = parse_digits(text)
            if len(digits) != d:
                raise ValueError(f"block {i} must have exactly {d} digits")
            if any(not 0 <= u < radix for u in digits):
                raise ValueError(f"block {i} has digits outside the digit set")
            residue = reduce_digits(digits, poly)
            if not residue.is_constant or residue.constant_value() != i:
                raise ValueError(f"block {i} does not denote {i}")
            significant = len(digits)
            while significant > 1 and digits[significant - 1] == 0:
                significant -= 1
            blocks.append(digits)
            lengths.append(significant)
        return cls(poly, c, d, tuple(blocks), tuple(lengths))


def _check_hypotheses(p: IntPoly, c: int, d: int) -> SchemeViolation | None:
    # fixed order keeps the reported violation deterministic
    if not p.is_monic:
        return SchemeViolation(ViolationKind.NOT_MONIC)
    if abs(p.constant_term) <= 1:
        return SchemeViolation(ViolationKind.CONSTANT_TERM_TOO_SMALL)
    if not has_simple_roots(p):
        return SchemeViolation(ViolationKind.REPEATED_ROOTS)
    if not divides_xd_plus_c(p, d, c):
        return SchemeViolation(ViolationKind.NO_DIVISIBILITY)
    if d <= p.degree:
        return SchemeViolation(ViolationKind.D_TOO_SMALL_FOR_DEGREE)
    return None


def build_scheme(p: IntPoly, c: int, d: int,
                 max_steps: int = DEFAULT_MAX_STEPS) -> PenneyScheme | SchemeViolation:
    """Check every scheme hypothesis and populate the digit-block table.

    Hypotheses are tested in a fixed order: monicity, constant term,
    simple roots, divisibility of X^d + c, d against deg(p), then the
    digit blocks in increasing digit order.
    """
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive")
    violation = _check_hypotheses(p, c, d)
    if violation is not None:
        return violation
    blocks: list[tuple[int, ...]] = []
    lengths: list[int] = []
    for i in range(c):
        outcome = cns_encode(i, p, max_steps)
        if not isinstance(outcome, CnsDigits):
            return SchemeViolation(ViolationKind.DIGIT_NOT_REPRESENTABLE, digit=i)
        digits = outcome.representation.digits
        if len(digits) > d:
            return SchemeViolation(ViolationKind.BLOCK_TOO_LONG, digit=i,
                                   block_length=len(digits))
        lengths.append(len(digits))
        blocks.append(digits + (0,) * (d - len(digits)))
    # implied by divisibility together with d > deg(p); cheap to confirm
    assert c > abs(p.constant_term)
    return PenneyScheme(p, c, d, tuple(blocks), tuple(lengths))


def penney_standard() -> PenneyScheme:
    """The quadratic scheme with c = d = 4 over X^2 + 2X + 2."""
    scheme = build_scheme(IntPoly((2, 2, 1)), 4, 4)
    assert isinstance(scheme, PenneyScheme)
    return scheme


def convert(z: int, scheme: PenneyScheme) -> Representation:
    """Expand z over the scheme's polynomial base by block substitution."""
    neg = encode_negabase(z, scheme.c)
    out: list[int] = []
    for v in neg.digits:
        out.extend(scheme.blocks[v])
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return Representation(scheme.base, tuple(out))


def leading_digit_length(z: int, scheme: PenneyScheme) -> int:
    """Unpadded block length of the most significant base -c digit of z."""
    neg = encode_negabase(z, scheme.c)
    return scheme.block_lengths[neg.digits[-1]]


def predicted_length(z: int, scheme: PenneyScheme) -> int:
    """Expansion length implied by block substitution alone:
    d * (negabase length - 1) + leading block length."""
    neg = encode_negabase(z, scheme.c)
    return scheme.d * (len(neg.digits) - 1) + scheme.block_lengths[neg.digits[-1]]


def scheme_pairs(p: IntPoly, c_max: int, d_max: int) -> list[tuple[int, int]]:
    """All (c, d) with c <= c_max, d <= d_max and p dividing X^d + c.

    Exploration helper: X^d mod p must be the constant -c, so each d
    yields at most one candidate c.
    """
    if not p.is_monic or abs(p.constant_term) <= 1:
        raise ValueError("base polynomial must be monic with |p(0)| > 1")
    pairs = []
    for d in range(1, d_max + 1):
        residue = reduce_digits((0,) * d + (1,), p)
        if residue.is_constant:
            c = -residue.constant_value()
            if 1 <= c <= c_max:
                pairs.append((c, d))
    return pairs
