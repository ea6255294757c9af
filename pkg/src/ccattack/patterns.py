"""Run hypotheses on the intercepted sequence and the state patterns built from them.

A hypothesis pairs a premise (a run of equal bits in the intercepted
sequence) with a consequence (a run of bits of the candidate sequence forced
to the same value).  Three blocks of hypotheses exist for each model: the
head of the sequence, the middle and the tail.  Only the head block feeds
the IS-pattern and the hypothesis count used by the H-trim.

Decimation model: the intercepted sequence is Y (length M) and the target
register produces X (length N).  Insertion model: the intercepted sequence
is X and the target produces Y.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .bits import BitsLike, as_bits, to_str

DECIMATION = "decimation"
INSERTION = "insertion"
GENERIC = "generic"
SG = "sg"
ASG = "asg"


# -- patterns ------------------------------------------------------------------


@dataclass(frozen=True)
class BitPattern:
    """Vector over {0, 1, free}; free entries are None.  Text form uses ``x`` for free."""

    entries: tuple

    @classmethod
    def parse(cls, text: str) -> "BitPattern":
        vals = []
        for ch in text.strip():
            if ch in "01":
                vals.append(int(ch))
            elif ch in "xX*-":
                vals.append(None)
            else:
                raise ValueError(f"bad pattern character {ch!r}")
        return cls(tuple(vals))

    @classmethod
    def free(cls, length: int) -> "BitPattern":
        return cls((None,) * length)

    @classmethod
    def prefix(cls, bits: BitsLike, length: int) -> "BitPattern":
        b = [int(v) for v in as_bits(bits)]
        return cls(tuple(b[:length]) + (None,) * (length - len(b[:length])))

    def __str__(self) -> str:
        return "".join("x" if v is None else str(v) for v in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def fixed_positions(self) -> list[int]:
        """0-based indices of the fixed entries."""
        return [i for i, v in enumerate(self.entries) if v is not None]

    @property
    def free_count(self) -> int:
        return sum(v is None for v in self.entries)

    def matches(self, register: Sequence[int]) -> bool:
        return all(v is None or v == r for v, r in zip(self.entries, register))

    def complement_at(self, i: int) -> "BitPattern":
        v = self.entries[i]
        if v is None:
            raise ValueError("cannot complement a free entry")
        e = list(self.entries)
        e[i] = 1 - v
        return BitPattern(tuple(e))

    def state_count(self) -> int:
        """Nonzero registers matching the pattern."""
        n = 2 ** self.free_count
        return n - 1 if all(v in (None, 0) for v in self.entries) else n


# -- hypotheses ----------------------------------------------------------------


@dataclass(frozen=True)
class Hypothesis:
    block: int
    j: int
    premise: tuple[int, int]  # 1-based inclusive range in the intercepted sequence
    holds: bool
    consequence: tuple[int, int]  # 1-based inclusive range in the candidate sequence
    value: int | None


@dataclass
class HypothesisReport:
    model: str
    generator: str
    N: int
    M: int
    hypotheses: list[Hypothesis] = field(default_factory=list)

    @property
    def per_j(self) -> dict[int, bool]:
        return {h.j: h.holds for h in self.hypotheses if h.block == 1}

    @property
    def fulfilled_count(self) -> int:
        return sum(h.holds for h in self.hypotheses if h.block == 1)

    def block(self, b: int) -> list[Hypothesis]:
        return [h for h in self.hypotheses if h.block == b]


def default_hypothesis_n(M: int) -> int:
    """Expected window length ceil(3M/2) used while counting hypotheses."""
    return math.ceil(3 * M / 2)


def _run_value(seq: np.ndarray, lo: int, hi: int) -> int | None:
    """Common value of ``seq[lo..hi]`` (1-based, inclusive) or None if not a run or out of range."""
    lo = max(lo, 1)
    if hi < lo or hi > seq.size:
        return None
    part = seq[lo - 1 : hi]
    first = int(part[0])
    return first if (part == first).all() else None


def _hyp(block, j, seq, prem, cons, value_from=None) -> Hypothesis:
    v = _run_value(seq, *prem)
    if v is not None and value_from is not None:
        v = int(seq[value_from - 1])
    return Hypothesis(block, j, (max(prem[0], 1), prem[1]), v is not None, cons, v)


def hypotheses(
    intercepted: BitsLike,
    *,
    model: str = DECIMATION,
    generator: str = GENERIC,
    ls: int | None = None,
    N: int | None = None,
    M: int | None = None,
) -> HypothesisReport:
    """Evaluate all three hypothesis blocks.

    Decimation: ``M = len(intercepted)`` and ``N`` defaults to ``ceil(3M/2)``.
    Insertion: ``N = len(intercepted)`` and ``M`` must be supplied.  Floors
    are used for every ``j / L_S`` index expression.
    """
    seq = as_bits(intercepted, allow_empty=False)
    if model == DECIMATION:
        M = seq.size
        N = default_hypothesis_n(M) if N is None else N
    elif model == INSERTION:
        N = seq.size
        if M is None:
            raise ValueError("insertion model needs the candidate length M")
    else:
        raise ValueError(f"unknown model {model!r}")
    adapted = generator in (SG, ASG)
    if adapted and (ls is None or ls < 2):
        raise ValueError("SG/ASG hypotheses need the selector length L_S >= 2")
    rep = HypothesisReport(model, generator, N, M)
    D = N - M
    hs = rep.hypotheses
    for j in range(2, min(D + 1, M) + 1):
        if model == DECIMATION:
            if adapted:
                b = ls * (j // ls)
                hs.append(_hyp(1, j, seq, (1 + j // ls, j), (b + 1, b + ls), value_from=j))
            else:
                hs.append(_hyp(1, j, seq, (1, j), (1, j + D), value_from=j))
        else:
            if adapted:
                b = ls * (j // ls)
                hs.append(_hyp(1, j, seq, (b + 1, b + ls), (1 + j // ls, j)))
            else:
                hs.append(_hyp(1, j, seq, (1, j + D), (1, j)))
    for j in range(D + 2, M + 1):
        if model == DECIMATION:
            tail = j + ls - 1 if adapted else j + D
            hs.append(_hyp(2, j, seq, (M - N + j, j), (j, tail), value_from=j))
        else:
            span = (j, j + ls - 1) if adapted else (j, j + D)
            hs.append(_hyp(2, j, seq, span, (M - N + j, j)))
    for j in range(M + 1, N):
        if model == DECIMATION:
            if adapted:
                prem = (M - N + j, M - (N - j) // ls)
                cons = (j, min(j + ls - 1, N))
            else:
                prem, cons = (M - N + j, M), (j, N)
            hs.append(_hyp(3, j, seq, prem, cons, value_from=M))
        else:
            if adapted:
                prem = (j, min(j + ls - 1, N))
                cons = (M - N + j, M - (N - j) // ls)
            else:
                prem, cons = (j, N), (M - N + j, M)
            hs.append(_hyp(3, j, seq, prem, cons))
    return rep


def count_hypotheses(intercepted: BitsLike, **params) -> HypothesisReport:
    return hypotheses(intercepted, **params)


def trim_for_h(
    intercepted: BitsLike,
    H: int,
    *,
    L: int | None = None,
    m_policy=None,
    **params,
) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Drop leading bits until at least ``H`` head-block hypotheses hold.

    Returns ``(trimmed, discarded, counts)`` where ``counts`` lists the
    fulfilled count observed at every step.  ``m_policy`` maps the current
    intercepted length to M for the insertion model.
    """
    seq = as_bits(intercepted, allow_empty=False)
    if H < 0 or (L is not None and H > L):
        raise ValueError(f"H={H} outside [0, {L}]")
    counts: list[int] = []
    start = 0
    while start < seq.size:
        cur = seq[start:]
        if m_policy is not None:
            params["M"] = m_policy(cur.size)
        n = hypotheses(cur, **params).fulfilled_count
        counts.append(n)
        if n >= H:
            return as_bits(cur), as_bits(seq[:start]), counts
        start += 1
    raise ValueError(f"sequence exhausted before {H} hypotheses were fulfilled")


def build_is_pattern(report: HypothesisReport, L: int) -> BitPattern:
    """Fix candidate bits from the fulfilled head-block hypotheses, limited to the first ``L``."""
    entries: list = [None] * L
    for h in report.block(1):
        if not h.holds:
            continue
        lo, hi = h.consequence
        for p in range(max(lo, 1), min(hi, L) + 1):
            if entries[p - 1] is not None and entries[p - 1] != h.value:
                return BitPattern.free(L)
            entries[p - 1] = h.value
    return BitPattern(tuple(entries))


def is_pattern_for(intercepted: BitsLike, L: int, **params) -> BitPattern:
    return build_is_pattern(hypotheses(intercepted, **params), L)


# -- state enumeration ---------------------------------------------------------


def iter_pattern_states(pattern: BitPattern) -> Iterator[tuple[int, ...]]:
    """Registers matching ``pattern``, free bits counted up in binary, zero register skipped."""
    free = [i for i, v in enumerate(pattern.entries) if v is None]
    base = [0 if v is None else v for v in pattern.entries]
    for combo in product((0, 1), repeat=len(free)):
        reg = list(base)
        for i, b in zip(free, combo):
            reg[i] = b
        if any(reg):
            yield tuple(reg)


def enumerate_states(pattern: BitPattern, anti_patterns: Iterable[BitPattern] = ()) -> Iterator[tuple[int, ...]]:
    """States matching ``pattern`` and none of ``anti_patterns``.

    ``anti_patterns`` is consulted at every step, so a list that grows while
    the iterator is being consumed takes effect immediately.
    """
    for reg in iter_pattern_states(pattern):
        if not any(a.matches(reg) for a in anti_patterns):
            yield reg


def derive_anti_pattern(x: BitsLike, stop_column: int, N: int, M: int, L: int) -> BitPattern | None:
    """Pattern of registers whose output shares the prefix that produced the stop column.

    Column ``j`` depends on ``x_1..x_{j+N-M}`` only; the pattern is returned
    when that prefix lies inside the register.
    """
    width = stop_column + N - M
    if width > L:
        return None
    return BitPattern.prefix(as_bits(x)[:width], L)


def relax_pattern(original: BitPattern, tried: set, order: str = "last-first") -> BitPattern | None:
    """Next untried single-bit complement of ``original``; None once they are all used."""
    fixed = original.fixed_positions
    if order == "last-first":
        fixed = fixed[::-1]
    elif order != "first-first":
        raise ValueError(f"unknown relaxation order {order!r}")
    for i in fixed:
        cand = original.complement_at(i)
        if str(cand) not in tried:
            return cand
    return None


__all__ = [
    "ASG",
    "BitPattern",
    "DECIMATION",
    "GENERIC",
    "Hypothesis",
    "HypothesisReport",
    "INSERTION",
    "SG",
    "build_is_pattern",
    "count_hypotheses",
    "default_hypothesis_n",
    "derive_anti_pattern",
    "enumerate_states",
    "hypotheses",
    "is_pattern_for",
    "iter_pattern_states",
    "relax_pattern",
    "trim_for_h",
]
