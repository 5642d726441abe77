"""Executable checks for the expansion-length claims, with machine-readable reports.

Each check sweeps a stated range exactly (no floating point, no tolerance)
and returns a VerificationReport whose content is deterministic given its
parameters; only the elapsed-time field varies between runs.  Heavy sweeps
can fan out over processes, and because reports are derived from merged
value tables, the worker count never changes the result.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .cns import (DEFAULT_MAX_STEPS, CnsDigits, CnsNotRepresentable, cns_encode,
                  cns_length)
from .negabase import extremal_of_length, length_negabase
from .penney import (PenneyScheme, SchemeViolation, ViolationKind, build_scheme,
                     convert, leading_digit_length, penney_standard,
                     predicted_length)
from .poly import IntPoly
from .trinomial import seq_a

STANDARD_POLY = IntPoly((2, 2, 1))
COUNTEREXAMPLE_POLY = IntPoly((8, 4, 1))

# expansions over X^2 + 4X + 8 that hold even though no (64, 4) scheme exists
COUNTEREXAMPLE_EXPANSIONS = {
    8: "1340", 16: "1200", 24: "2540", 32: "2400",
    40: "3740", 48: "3600", 56: "1470140",
}

FORMULA_BOUND = 10_000
SWEEP_BOUND = 100_000
DIGIT_SUM_BOUND = 10_000
GRID_BOUND = 300
SAMPLE_COUNT = 10_000
SAMPLE_BOUND = 100_000
DEFAULT_SEED = 1729
BOUNDARY_MAX_LENGTH = 7
PAIR_COUNT = 4

# at most this many counterexamples/witnesses are stored per report
MAX_RECORDED = 20

SUITE_ORDER = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "remark")


@dataclass
class VerificationReport:
    """Outcome of one check; passed holds exactly when no counterexamples.

    Everything except elapsed is a pure function of the parameters, so two
    runs with the same arguments serialize identically apart from the
    trailing elapsed_ms entry.
    """

    check_id: str
    params: dict
    passed: bool
    counterexamples: list
    witnesses_of_equality: list
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "witnesses": self.witnesses_of_equality,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extras = ""
        if not self.passed:
            shown = self.counterexamples[:3]
            extras = f" counterexamples={self.params.get('counterexample_count')} first={shown}"
        return f"{verdict} {self.check_id}{extras}"


@dataclass
class DigitSumProbe:
    """Digit-sum identities for one integer, with the literal recurrence trace."""

    z: int
    digit_sum: int
    s_k_derived: int
    recurrence_trace: list[Fraction]
    stabilized: bool


def _finish(check_id: str, params: dict, counterexamples: list,
            witnesses: list, started: float) -> VerificationReport:
    params = dict(params)
    params["counterexample_count"] = len(counterexamples)
    return VerificationReport(
        check_id=check_id,
        params=params,
        passed=not counterexamples,
        counterexamples=counterexamples[:MAX_RECORDED],
        witnesses_of_equality=witnesses[:MAX_RECORDED],
        elapsed=time.perf_counter() - started,
    )


def _split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    total = hi - lo + 1
    parts = max(1, min(parts, total))
    step = total // parts
    bounds = []
    start = lo
    for i in range(parts):
        end = hi if i == parts - 1 else start + step - 1
        bounds.append((start, end))
        start = end + 1
    return bounds


def _table_chunk(args: tuple[tuple[int, ...], int, int, int]) -> dict[int, int]:
    coeffs, lo, hi, max_steps = args
    p = IntPoly(coeffs)
    return {z: cns_length(z, p, max_steps) for z in range(lo, hi + 1)}


def compute_length_table(p: IntPoly, bound: int, *,
                         max_steps: int = DEFAULT_MAX_STEPS,
                         jobs: int = 1) -> dict[int, int]:
    """Expansion length of every |z| <= bound by direct digit extraction.

    The table is a plain value mapping, so splitting the range over
    worker processes cannot change the result.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if jobs <= 1:
        return _table_chunk((p.coeffs, -bound, bound, max_steps))
    table: dict[int, int] = {}
    chunks = _split_range(-bound, bound, jobs * 4)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        args = [(p.coeffs, lo, hi, max_steps) for lo, hi in chunks]
        for part in pool.map(_table_chunk, args):
            table.update(part)
    return table


def _formula_chunk(args: tuple[int, int, int]) -> list[list]:
    lo, hi, max_steps = args
    scheme = penney_standard()
    bad = []
    for z in range(lo, hi + 1):
        outcome = cns_encode(z, STANDARD_POLY, max_steps)
        direct = outcome.representation
        substituted = convert(z, scheme)
        predicted = predicted_length(z, scheme)
        if direct.digits != substituted.digits or predicted != direct.length:
            bad.append([z, direct.digit_string(), substituted.digit_string(), predicted])
    return bad


def check_length_formula(bound: int = FORMULA_BOUND, *,
                         max_steps: int = DEFAULT_MAX_STEPS,
                         jobs: int = 1) -> VerificationReport:
    """Every |z| <= bound: block substitution reproduces direct digit
    extraction digit for digit, and the length matches
    d * (negabase length - 1) + leading block length."""
    t0 = time.perf_counter()
    chunks = _split_range(-bound, bound, jobs * 4 if jobs > 1 else 1)
    args = [(lo, hi, max_steps) for lo, hi in chunks]
    if jobs <= 1:
        parts = [_formula_chunk(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_formula_chunk, args))
    counterexamples = sorted((c for part in parts for c in part), key=lambda c: c[0])
    params = {"bound": bound, "max_steps": max_steps}
    return _finish("length_formula", params, counterexamples, [], t0)


def _expected_a_prefix(limit: int) -> list[int]:
    # a(1), a(2), ... while <= limit
    out = []
    value = 0
    n = 0
    while True:
        n += 1
        value += 1 if n % 2 else 3
        if value > limit:
            return out
        out.append(value)


def check_length_set(bound: int = SWEEP_BOUND, prefix_len: int = 10, *,
                     lengths: Mapping[int, int] | None = None,
                     max_steps: int = DEFAULT_MAX_STEPS,
                     jobs: int = 1) -> VerificationReport:
    """Attained expansion lengths over |z| <= bound form exactly a prefix of
    the increasing integers that are 0 or 1 mod 4 (zero excluded)."""
    t0 = time.perf_counter()
    if lengths is None:
        lengths = compute_length_table(STANDARD_POLY, bound, max_steps=max_steps, jobs=jobs)
    attained = sorted(set(lengths.values()))
    expected = _expected_a_prefix(attained[-1]) if attained else []
    counterexamples = []
    for L in attained:
        if L % 4 not in (0, 1):
            counterexamples.append(["bad_mod4", L])
    unexpected = sorted(set(attained) - set(expected))
    missing = sorted(set(expected) - set(attained))
    for L in unexpected:
        counterexamples.append(["unexpected_length", L])
    for L in missing:
        counterexamples.append(["missing_length", L])
    if len(attained) < prefix_len:
        counterexamples.append(["insufficient_range", len(attained), prefix_len])
    params = {"bound": bound, "prefix_len": prefix_len, "attained": attained}
    return _finish("length_set", params, counterexamples, [], t0)


def check_sign_disjoint(bound: int = SWEEP_BOUND, *,
                        lengths: Mapping[int, int] | None = None,
                        max_steps: int = DEFAULT_MAX_STEPS,
                        jobs: int = 1) -> VerificationReport:
    """Positive and negative integers attain disjoint length sets:
    1 or 4 mod 8 on the positives, 5 or 0 mod 8 on the negatives."""
    t0 = time.perf_counter()
    if lengths is None:
        lengths = compute_length_table(STANDARD_POLY, bound, max_steps=max_steps, jobs=jobs)
    pos = sorted({L for z, L in lengths.items() if z > 0})
    neg = sorted({L for z, L in lengths.items() if z < 0})
    counterexamples = []
    for L in sorted(set(pos) & set(neg)):
        counterexamples.append(["shared_length", L])
    for L in pos:
        if L % 8 not in (1, 4):
            counterexamples.append(["positive_mod8", L])
    for L in neg:
        if L % 8 not in (5, 0):
            counterexamples.append(["negative_mod8", L])
    params = {"bound": bound, "positive_lengths": pos, "negative_lengths": neg}
    return _finish("sign_disjoint", params, counterexamples, [], t0)


def check_boundary_jumps(max_length: int = BOUNDARY_MAX_LENGTH, *,
                         scheme: PenneyScheme | None = None,
                         max_steps: int = DEFAULT_MAX_STEPS) -> VerificationReport:
    """At each negabase-length boundary the leading block length drops from
    4 to 1 and the expansion length jumps by exactly 5.

    Odd lengths are probed at their largest positive, even lengths at
    their least (most negative) integer; the step beyond the boundary is
    +1 respectively -1.
    """
    t0 = time.perf_counter()
    scheme = scheme or penney_standard()
    counterexamples = []
    witnesses = []
    for L in range(1, max_length + 1):
        if L % 2:
            n = extremal_of_length(4, L)[1]
            step = 1
        else:
            n = extremal_of_length(4, L)[0]
            step = -1
        lam_n = leading_digit_length(n, scheme)
        lam_next = leading_digit_length(n + step, scheme)
        len_n = cns_length(n, STANDARD_POLY, max_steps)
        len_next = cns_length(n + step, STANDARD_POLY, max_steps)
        ok = (length_negabase(n, 4) == L
              and length_negabase(n + step, 4) == L + 2
              and lam_n == 4 and lam_next == 1
              and len_n % 4 == 0 and len_next == len_n + 5)
        if ok:
            witnesses.append([L, n, len_n, len_next])
        else:
            counterexamples.append([L, n, lam_n, lam_next, len_n, len_next])
    params = {"max_length": max_length}
    return _finish("boundary_jumps", params, counterexamples, witnesses, t0)


def check_pair_subsequences(count: int = PAIR_COUNT, bound: int = SWEEP_BOUND, *,
                            lengths: Mapping[int, int] | None = None,
                            max_steps: int = DEFAULT_MAX_STEPS,
                            jobs: int = 1) -> VerificationReport:
    """Sorted attained lengths interleave in pairs: positives take the
    (4n-3, 4n-2)-th members of the mod-4 sequence, negatives the
    (4n-1, 4n)-th, verified for the first count pairs on each side."""
    t0 = time.perf_counter()
    if lengths is None:
        lengths = compute_length_table(STANDARD_POLY, bound, max_steps=max_steps, jobs=jobs)
    pos = sorted({L for z, L in lengths.items() if z > 0})
    neg = sorted({L for z, L in lengths.items() if z < 0})
    counterexamples = []
    witnesses = []
    for side, attained, indices in (
        ("positive", pos, lambda n: (4 * n - 3, 4 * n - 2)),
        ("negative", neg, lambda n: (4 * n - 1, 4 * n)),
    ):
        expected = []
        n = 1
        while len(expected) < len(attained) + 2 or len(expected) < 2 * count:
            i, j = indices(n)
            expected.extend([seq_a(i), seq_a(j)])
            n += 1
        if attained != expected[:len(attained)]:
            first_bad = next(k for k, (got, want)
                             in enumerate(zip(attained, expected)) if got != want)
            counterexamples.append([side, first_bad, attained[first_bad],
                                    expected[first_bad]])
            continue
        if len(attained) < 2 * count:
            counterexamples.append([side, "insufficient_pairs", len(attained) // 2, count])
            continue
        for k in range(count):
            witnesses.append([side, expected[2 * k], expected[2 * k + 1]])
    params = {"count": count, "bound": bound}
    return _finish("pair_subsequences", params, counterexamples, witnesses, t0)


def check_gap3(bound: int = SWEEP_BOUND, *,
               lengths: Mapping[int, int] | None = None,
               max_steps: int = DEFAULT_MAX_STEPS,
               jobs: int = 1) -> VerificationReport:
    """Walking away from zero on either side, the expansion length never
    increases by less than 3 between consecutive distinct values."""
    t0 = time.perf_counter()
    if lengths is None:
        lengths = compute_length_table(STANDARD_POLY, bound, max_steps=max_steps, jobs=jobs)
    counterexamples = []
    for side, values in (("positive", range(1, bound + 1)),
                         ("negative", range(-1, -bound - 1, -1))):
        prev = None
        for z in values:
            L = lengths[z]
            if prev is not None and L != prev and L - prev < 3:
                counterexamples.append([side, z, prev, L])
            prev = L
    params = {"bound": bound}
    return _finish("gap3", params, counterexamples, [], t0)


def _sample_pairs(count: int, seed: int, bound: int) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        x = rng.randint(-bound, bound)
        y = rng.randint(-bound, bound)
        if x and y:
            pairs.append((x, y))
    return pairs


def check_lambda_bounds(samples: int = SAMPLE_COUNT, seed: int = DEFAULT_SEED, *,
                        grid_bound: int = GRID_BOUND,
                        sample_bound: int = SAMPLE_BOUND,
                        scheme: PenneyScheme | None = None) -> VerificationReport:
    """-2 <= lam(x) + lam(y) - lam(xy) <= 7 for nonzero x, y, where lam is
    the leading block length.

    Swept over the full nonzero grid |x|, |y| <= grid_bound plus seeded
    random pairs; the pairs (4, 5) and (2, 410) hit the bounds exactly
    and are always included as witnesses.  Pairs with a zero member are
    excluded: they reduce to the convention lam(0) = 1 and are not part
    of the claim.
    """
    t0 = time.perf_counter()
    scheme = scheme or penney_standard()
    lam_cache: dict[int, int] = {}

    def lam(v: int) -> int:
        hit = lam_cache.get(v)
        if hit is None:
            hit = lam_cache[v] = leading_digit_length(v, scheme)
        return hit

    counterexamples = []
    witnesses = []
    for x, y, expected in ((4, 5, -2), (2, 410, 7)):
        value = lam(x) + lam(y) - lam(x * y)
        witnesses.append([x, y, value])
        if value != expected:
            counterexamples.append([x, y, value, f"expected {expected}"])

    equality_hits = []

    def probe(x: int, y: int) -> None:
        value = lam(x) + lam(y) - lam(x * y)
        if not -2 <= value <= 7:
            counterexamples.append([x, y, value])
        elif value in (-2, 7) and len(equality_hits) < MAX_RECORDED:
            equality_hits.append([x, y, value])

    for x in range(-grid_bound, grid_bound + 1):
        if x == 0:
            continue
        for y in range(-grid_bound, grid_bound + 1):
            if y:
                probe(x, y)
    for x, y in _sample_pairs(samples, seed, sample_bound):
        probe(x, y)
    witnesses.extend(equality_hits)

    # pairs with a zero member collapse to lam(0) + lam(y) - lam(0) = lam(y)
    # under the lam(0) = 1 convention; record the observed values without
    # asserting them, since the claim's status at zero is unsettled
    zero_pair_values = {lam(y) for y in range(-grid_bound, grid_bound + 1) if y}
    zero_pair_values.add(lam(0))
    params = {"grid_bound": grid_bound, "samples": samples, "seed": seed,
              "sample_bound": sample_bound,
              "zero_pair_values_observed": sorted(zero_pair_values)}
    return _finish("lambda_bounds", params, counterexamples, witnesses, t0)


def check_additive_bounds(samples: int = SAMPLE_COUNT, seed: int = DEFAULT_SEED, *,
                          grid_bound: int = GRID_BOUND,
                          sample_bound: int = SAMPLE_BOUND,
                          lengths: Mapping[int, int] | None = None,
                          max_steps: int = DEFAULT_MAX_STEPS) -> VerificationReport:
    """Claimed: len(x + y) <= len(x) + len(y) + 2 and
    len(xy) <= len(x) + len(y) + 10 over the same grid and seeded pairs as
    the leading-block check.

    The sum bound as stated is false.  Adding 1 and 3 crosses a base -4
    length boundary by two positions at once (1 and 3 are single digits,
    their sum is 130), so len(4) = 9 exceeds len(1) + len(3) + 2 = 7.  The
    check asserts the stated slack anyway and reports every violating pair;
    on the default grid these are exactly (1, 3), (1, 51) and their swaps,
    each exceeding the sum slack by 2.  The product slack of 10 holds
    everywhere probed.  Observed maximal excesses over both slacks are
    recorded in the params.
    """
    t0 = time.perf_counter()
    table = dict(lengths) if lengths is not None else {}

    def length(v: int) -> int:
        hit = table.get(v)
        if hit is None:
            hit = table[v] = cns_length(v, STANDARD_POLY, max_steps)
        return hit

    counterexamples = []
    max_sum_excess = None
    max_product_excess = None

    def probe(x: int, y: int) -> None:
        nonlocal max_sum_excess, max_product_excess
        lx, ly = length(x), length(y)
        sum_excess = length(x + y) - lx - ly
        product_excess = length(x * y) - lx - ly
        if max_sum_excess is None or sum_excess > max_sum_excess:
            max_sum_excess = sum_excess
        if max_product_excess is None or product_excess > max_product_excess:
            max_product_excess = product_excess
        if sum_excess > 2:
            counterexamples.append(["sum", x, y, lx, ly, lx + ly + sum_excess])
        if product_excess > 10:
            counterexamples.append(["product", x, y, lx, ly,
                                    lx + ly + product_excess])

    for x in range(-grid_bound, grid_bound + 1):
        if x == 0:
            continue
        for y in range(-grid_bound, grid_bound + 1):
            if y:
                probe(x, y)
    for x, y in _sample_pairs(samples, seed, sample_bound):
        probe(x, y)
    params = {"grid_bound": grid_bound, "samples": samples, "seed": seed,
              "sample_bound": sample_bound,
              "max_sum_excess": max_sum_excess,
              "max_product_excess": max_product_excess}
    return _finish("additive_bounds", params, counterexamples, [], t0)


def digit_sum_probe(z: int, max_iter: int = 48, *,
                    max_steps: int = DEFAULT_MAX_STEPS) -> DigitSumProbe:
    """Digit-sum identities for one integer, with a recurrence trace.

    Asserts only the arithmetic consequences: the digit sum matches z
    modulo 5, equivalently the derived term 2(z - digit_sum)/5 is an even
    integer.  The literal recurrence s(0) = z, s(1) = 0, s(2) = z/2,
    s(k+1) = (s(k-1) + s(k-2))/2 is traced exactly but only recorded:
    iterated exactly it converges without becoming constant, so eventual
    constancy is not a checkable consequence.
    """
    if max_iter < 2:
        raise ValueError("max_iter must be at least 2")
    outcome = cns_encode(z, STANDARD_POLY, max_steps)
    if not isinstance(outcome, CnsDigits):
        raise ValueError(f"no expansion for {z}")
    digit_sum = sum(outcome.representation.digits)
    gap = z - digit_sum
    if (2 * gap) % 10:
        raise ArithmeticError(
            f"digit sum {digit_sum} of {z} breaks the mod-5 identity")
    s_k = 2 * gap // 5
    trace = [Fraction(z), Fraction(0), Fraction(z, 2)]
    while len(trace) <= max_iter:
        trace.append((trace[-2] + trace[-3]) / 2)
    stabilized = any(trace[i] == trace[i + 1] == trace[i + 2]
                     for i in range(len(trace) - 2))
    return DigitSumProbe(z, digit_sum, s_k, trace, stabilized)


def check_digit_sums(bound: int = DIGIT_SUM_BOUND, *, trace_bound: int = 20,
                     max_iter: int = 48,
                     max_steps: int = DEFAULT_MAX_STEPS) -> VerificationReport:
    """digit_sum(z) = z mod 5 and 2(z - digit_sum)/5 even for |z| <= bound.

    How often the literal recurrence happens to stabilize near zero is
    recorded in the params, never asserted.
    """
    t0 = time.perf_counter()
    counterexamples = []
    for z in range(-bound, bound + 1):
        outcome = cns_encode(z, STANDARD_POLY, max_steps)
        digit_sum = sum(outcome.representation.digits)
        if (2 * (z - digit_sum)) % 10:
            counterexamples.append([z, digit_sum])
    stabilized = 0
    for z in range(-trace_bound, trace_bound + 1):
        if digit_sum_probe(z, max_iter, max_steps=max_steps).stabilized:
            stabilized += 1
    params = {"bound": bound, "trace_bound": trace_bound, "max_iter": max_iter,
              "stabilized_traces": stabilized}
    return _finish("digit_sums", params, counterexamples, [], t0)


def check_scheme_counterexample(*, max_steps: int = DEFAULT_MAX_STEPS) -> VerificationReport:
    """The base X^2 + 4X + 8 expands every listed multiple of 8 as claimed,
    yet no (64, 4) scheme exists: digit 56 needs a 7-digit block."""
    t0 = time.perf_counter()
    counterexamples = []
    witnesses = []
    for value in sorted(COUNTEREXAMPLE_EXPANSIONS):
        expect = COUNTEREXAMPLE_EXPANSIONS[value]
        outcome = cns_encode(value, COUNTEREXAMPLE_POLY, max_steps)
        if not isinstance(outcome, CnsDigits):
            counterexamples.append([value, "not_representable"])
            continue
        got = outcome.representation.digit_string()
        if got != expect:
            counterexamples.append([value, got, expect])
        else:
            witnesses.append([value, got])
    result = build_scheme(COUNTEREXAMPLE_POLY, 64, 4, max_steps)
    if not isinstance(result, SchemeViolation):
        counterexamples.append(["scheme_built", 64, 4])
    elif (result.kind is not ViolationKind.BLOCK_TOO_LONG
          or result.digit != 56 or result.block_length != 7):
        counterexamples.append(["wrong_violation", result.kind.value,
                                result.digit, result.block_length])
    else:
        witnesses.append(["block_too_long", result.digit, result.block_length])
    params = {"c": 64, "d": 4}
    return _finish("scheme_counterexample", params, counterexamples, witnesses, t0)


def run_suite(names: Iterable[str] = ("all",), *,
              sweep_bound: int = SWEEP_BOUND,
              formula_bound: int = FORMULA_BOUND,
              digit_sum_bound: int = DIGIT_SUM_BOUND,
              samples: int = SAMPLE_COUNT,
              seed: int = DEFAULT_SEED,
              grid_bound: int = GRID_BOUND,
              sample_bound: int = SAMPLE_BOUND,
              boundary_max_length: int = BOUNDARY_MAX_LENGTH,
              pair_count: int = PAIR_COUNT,
              max_steps: int = DEFAULT_MAX_STEPS,
              jobs: int = 1) -> list[VerificationReport]:
    """Run the named checks in canonical order and return their reports.

    The length table backing the sweep checks is computed once and shared;
    its content does not depend on the worker count.
    """
    selected: list[str] = []
    for name in names:
        if name == "all":
            selected.extend(SUITE_ORDER)
        elif name in SUITE_ORDER:
            selected.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}")
    ordered = [s for s in SUITE_ORDER if s in selected]
    lengths: dict[int, int] | None = None
    if {"ii", "iii", "v", "vi", "viii"} & set(ordered):
        lengths = compute_length_table(STANDARD_POLY, sweep_bound,
                                       max_steps=max_steps, jobs=jobs)
    scheme = penney_standard()
    reports = []
    for name in ordered:
        if name == "i":
            reports.append(check_length_formula(formula_bound, max_steps=max_steps,
                                                jobs=jobs))
        elif name == "ii":
            reports.append(check_length_set(sweep_bound, lengths=lengths,
                                            max_steps=max_steps, jobs=jobs))
        elif name == "iii":
            reports.append(check_sign_disjoint(sweep_bound, lengths=lengths,
                                               max_steps=max_steps, jobs=jobs))
        elif name == "iv":
            reports.append(check_boundary_jumps(boundary_max_length, scheme=scheme,
                                                max_steps=max_steps))
        elif name == "v":
            reports.append(check_pair_subsequences(pair_count, sweep_bound,
                                                   lengths=lengths,
                                                   max_steps=max_steps, jobs=jobs))
        elif name == "vi":
            reports.append(check_gap3(sweep_bound, lengths=lengths,
                                      max_steps=max_steps, jobs=jobs))
        elif name == "vii":
            reports.append(check_lambda_bounds(samples, seed, grid_bound=grid_bound,
                                               sample_bound=sample_bound,
                                               scheme=scheme))
        elif name == "viii":
            reports.append(check_additive_bounds(samples, seed,
                                                 grid_bound=grid_bound,
                                                 sample_bound=sample_bound,
                                                 lengths=lengths,
                                                 max_steps=max_steps))
        elif name == "ix":
            reports.append(check_digit_sums(digit_sum_bound, max_steps=max_steps))
        elif name == "remark":
            reports.append(check_scheme_counterexample(max_steps=max_steps))
    return reports
