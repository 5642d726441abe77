"""Canonical digit extraction for polynomial bases.

The encoder runs backward division on a residue vector of the remaining
value: the next digit is forced by the constant coefficient modulo
|p(0)|, the stripped residue is divided by X, and the process repeats.
Visited states are tracked so integers without an expansion are caught
by cycle detection instead of looping forever.

Correctness is established externally: every emitted expansion reduces
back to its integer (see reduce_digits), and an exhaustive search over
short digit strings must agree with the encoder wherever both apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .negabase import CnsBase, Representation
from .poly import IntPoly

DEFAULT_MAX_STEPS = 10_000

# Guard for the exhaustive oracle; radix**max_len strings get enumerated.
_ORACLE_NODE_LIMIT = 20_000_000


class NotRepresentableError(ValueError):
    """The integer admits no canonical digit expansion in the given base."""


class StepBudgetError(RuntimeError):
    """Digit extraction ran out of steps before reaching a decision."""


@dataclass(frozen=True)
class Residue:
    """Element of the quotient ring by p, as a vector of length deg(p)."""

    coeffs: tuple[int, ...]

    @property
    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def constant_value(self) -> int:
        if not self.is_constant:
            raise ValueError(f"residue {self.coeffs} is not a constant")
        return self.coeffs[0]


@dataclass(frozen=True)
class CnsDigits:
    representation: Representation


@dataclass(frozen=True)
class CnsNotRepresentable:
    cycle: Residue


@dataclass(frozen=True)
class CnsExhausted:
    max_steps: int


CnsOutcome = CnsDigits | CnsNotRepresentable | CnsExhausted


def cns_encode(z: int, p: IntPoly, max_steps: int = DEFAULT_MAX_STEPS) -> CnsOutcome:
    """Extract the canonical digits of z in base p.

    One step: with residue A of length d = deg(p), emit u = A[0] mod |p(0)|,
    set q = (A[0] - u) / p(0), and replace A[i] by A[i+1] - q * p[i+1]
    (reading A[d] = 0).  Terminates at the zero residue; a revisited
    residue proves no expansion exists; otherwise the step budget applies.
    """
    base = CnsBase(p)  # rejects non-monic p and |p(0)| <= 1
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    pc = p.coeffs
    if len(pc) == 3:
        return _encode_quadratic(z, base, max_steps)
    d = len(pc) - 1
    p0 = pc[0]
    radix = abs(p0)
    state = (z,) + (0,) * (d - 1)
    zero = (0,) * d
    digits: list[int] = []
    seen: set[tuple[int, ...]] = set()
    steps = 0
    while True:
        if state == zero:
            return CnsDigits(Representation(base, tuple(digits) if digits else (0,)))
        if steps >= max_steps:
            return CnsExhausted(max_steps)
        if state in seen:
            return CnsNotRepresentable(Residue(state))
        seen.add(state)
        a0 = state[0]
        u = a0 % radix
        q = (a0 - u) // p0
        digits.append(u)
        state = tuple(state[i + 1] - q * pc[i + 1] for i in range(d - 1)) + (-q,)
        steps += 1


def _encode_quadratic(z: int, base: CnsBase, max_steps: int) -> CnsOutcome:
    # same algorithm on two plain integers; quadratic bases dominate the
    # verification sweeps, and this path is about 3x faster
    p0, p1, _ = base.poly.coeffs
    radix = abs(p0)
    a0, a1 = z, 0
    digits: list[int] = []
    seen: set[tuple[int, int]] = set()
    steps = 0
    while True:
        if a0 == 0 and a1 == 0:
            return CnsDigits(Representation(base, tuple(digits) if digits else (0,)))
        if steps >= max_steps:
            return CnsExhausted(max_steps)
        state = (a0, a1)
        if state in seen:
            return CnsNotRepresentable(Residue(state))
        seen.add(state)
        u = a0 % radix
        q = (a0 - u) // p0
        digits.append(u)
        a0 = a1 - q * p1
        a1 = -q
        steps += 1


def reduce_digits(digits, p: IntPoly) -> Residue:
    """Reduce sum(digits[j] * X^j) modulo p; digits least significant first.

    Low level: digit range is not checked here, callers that need the
    canonical guarantees go through Representation.
    """
    pc = p.coeffs
    if pc[-1] != 1:
        raise ValueError("base polynomial must be monic")
    d = len(pc) - 1
    if d == 0:
        raise ValueError("base polynomial must have positive degree")
    acc = [0] * d
    for u in reversed(digits):
        # acc * X + u, using X^d = -(p[0] + ... + p[d-1] X^(d-1))
        h = acc[d - 1]
        new = [u - h * pc[0]]
        for i in range(1, d):
            new.append(acc[i - 1] - h * pc[i])
        acc = new
    return Residue(tuple(acc))


def cns_decode(rep: Representation) -> Residue:
    """Reduce a digit expansion modulo its base polynomial.

    The result is constant exactly when the expansion denotes an integer.
    """
    if not isinstance(rep.base, CnsBase):
        raise ValueError("expected a polynomial-base representation")
    return reduce_digits(rep.digits, rep.base.poly)


def cns_length(z: int, p: IntPoly, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    """Digit count of the canonical expansion; zero counts as one digit."""
    outcome = cns_encode(z, p, max_steps)
    if isinstance(outcome, CnsDigits):
        return outcome.representation.length
    if isinstance(outcome, CnsNotRepresentable):
        raise NotRepresentableError(f"{z} has no canonical expansion over {p}")
    raise StepBudgetError(f"no decision for {z} within {max_steps} steps")


def brute_force_oracle(z: int, p: IntPoly, max_len: int) -> Representation | None:
    """Search every digit string of length <= max_len for one denoting z.

    Fully independent of the encoder: candidates are checked by reduction
    alone, and a value reachable by two distinct strings raises, so the
    search also asserts uniqueness.  Returns None when no string that
    short denotes z.
    """
    if max_len < 1:
        raise ValueError("max_len must be positive")
    table = _expansion_table(p, max_len)
    digits = table.get(z)
    if digits is None:
        return None
    return Representation(CnsBase(p), digits)


@lru_cache(maxsize=32)
def _expansion_table(p: IntPoly, max_len: int) -> dict[int, tuple[int, ...]]:
    base = CnsBase(p)
    radix = base.radix
    # count strings incrementally so absurd max_len fails fast
    nodes = 0
    for length in range(1, max_len + 1):
        nodes += radix ** length
        if nodes > _ORACLE_NODE_LIMIT:
            raise ValueError(
                f"enumerating over {_ORACLE_NODE_LIMIT} digit strings is too large")
    pc = p.coeffs
    d = len(pc) - 1
    xpow: list[tuple[int, ...]] = []
    cur = [1] + [0] * (d - 1)
    for _ in range(max_len):
        xpow.append(tuple(cur))
        h = cur[d - 1]
        cur = [-h * pc[0]] + [cur[i - 1] - h * pc[i] for i in range(1, d)]
    table: dict[int, tuple[int, ...]] = {}

    def record(value: int, digits: tuple[int, ...]) -> None:
        other = table.get(value)
        if other is not None and other != digits:
            raise RuntimeError(f"two expansions denote {value}: {other} and {digits}")
        table[value] = digits

    def visit(depth: int, residue: tuple[int, ...], digits: list[int]) -> None:
        for u in range(radix):
            new_res = tuple(r + u * x for r, x in zip(residue, xpow[depth]))
            digits.append(u)
            # a candidate string never carries a leading zero, except "0"
            if (u != 0 or depth == 0) and all(c == 0 for c in new_res[1:]):
                record(new_res[0], tuple(digits))
            if depth + 1 < max_len:
                visit(depth + 1, new_res, digits)
            digits.pop()

    visit(0, (0,) * d, [])
    return table
