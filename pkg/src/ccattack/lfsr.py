"""Feedback polynomials and the Fibonacci LFSR engine.

Convention: the register holds the first ``L`` output bits in order, and for
``n > L`` the output satisfies ``s_n = sum(s_{n-e})`` over the tap exponents
``e >= 1`` of the polynomial (GF(2) arithmetic).  With ``P(x) = 1 + x + x^7``
the register ``1111110`` yields ``1111110101``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _accel
from .bits import BitsLike, as_bits, to_str


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class FeedbackPolynomial:
    degree: int
    taps: tuple[int, ...]

    def __post_init__(self):
        taps = tuple(sorted(self.taps))
        if len(set(taps)) != len(taps):
            raise PolynomialError(f"duplicate exponents in {self.taps}")
        if self.degree < 1:
            raise PolynomialError("degree must be positive")
        if taps[0] != 0:
            raise PolynomialError("polynomial has no constant term")
        if taps[-1] != self.degree:
            raise PolynomialError("leading term x^degree missing")
        object.__setattr__(self, "taps", taps)

    @classmethod
    def from_taps(cls, taps: Iterable[int]) -> "FeedbackPolynomial":
        taps = list(taps)
        if not taps:
            raise PolynomialError("empty exponent list")
        return cls(max(taps), tuple(taps))

    @property
    def feedback(self) -> tuple[int, ...]:
        """Recurrence offsets: the tap exponents other than the constant term."""
        return self.taps[1:]

    def __str__(self) -> str:
        terms = []
        for e in self.taps:
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(terms)


_TERM = re.compile(r"^(?:1|x|x\^(\d+))$")


def parse_polynomial(text: str) -> FeedbackPolynomial:
    """Parse ``"1+x+x^3"`` or a bracketed exponent list ``"[0,1,3]"``."""
    body = text.replace(" ", "")
    if not body:
        raise PolynomialError("empty polynomial")
    if body.startswith("[") and body.endswith("]"):
        try:
            exps = [int(t) for t in body[1:-1].split(",") if t != ""]
        except ValueError as exc:
            raise PolynomialError(f"bad exponent list {text!r}") from exc
        if any(e < 0 for e in exps):
            raise PolynomialError("negative exponent")
    else:
        exps = []
        for tok in body.split("+"):
            m = _TERM.match(tok)
            if m is None:
                raise PolynomialError(f"unparseable term {tok!r} in {text!r}")
            exps.append(0 if tok == "1" else 1 if tok == "x" else int(m.group(1)))
    if len(set(exps)) != len(exps):
        raise PolynomialError(f"duplicate exponents in {text!r}")
    return FeedbackPolynomial.from_taps(exps)


def as_polynomial(value) -> FeedbackPolynomial:
    if isinstance(value, FeedbackPolynomial):
        return value
    if isinstance(value, str):
        return parse_polynomial(value)
    return FeedbackPolynomial.from_taps(value)


@dataclass(frozen=True)
class LfsrState:
    polynomial: FeedbackPolynomial
    register: tuple[int, ...]

    def __post_init__(self):
        reg = tuple(int(b) for b in as_bits(self.register))
        if len(reg) != self.polynomial.degree:
            raise ValueError(
                f"register length {len(reg)} does not match degree {self.polynomial.degree}"
            )
        object.__setattr__(self, "register", reg)

    @classmethod
    def of(cls, polynomial, register: BitsLike) -> "LfsrState":
        return cls(as_polynomial(polynomial), tuple(as_bits(register)))

    @property
    def is_zero(self) -> bool:
        return not any(self.register)

    @property
    def bits(self) -> np.ndarray:
        return as_bits(self.register)

    def __str__(self) -> str:
        return "".join(map(str, self.register))


# -- generation kernels ------------------------------------------------------


@_accel.njit
def _fill_numba(out, feedback, degree):
    for n in range(degree, out.shape[0]):
        v = 0
        for e in feedback:
            v ^= out[n - e]
        out[n] = v
    return out


def _fill_numpy(out: np.ndarray, feedback: np.ndarray, degree: int) -> np.ndarray:
    # Each block of min(feedback) new bits only depends on already-known bits.
    step = int(feedback.min())
    n = degree
    while n < out.shape[0]:
        hi = min(n + step, out.shape[0])
        block = np.zeros(hi - n, dtype=np.uint8)
        for e in feedback:
            block ^= out[n - e : hi - e]
        out[n:hi] = block
        n = hi
    return out


def _fill(out: np.ndarray, feedback: np.ndarray, degree: int) -> np.ndarray:
    if _accel.USE_NUMBA:
        return _fill_numba(out, feedback, degree)
    return _fill_numpy(out, feedback, degree)


def _feedback_array(poly: FeedbackPolynomial) -> np.ndarray:
    return np.asarray(poly.feedback, dtype=np.int64)


def generate(state: LfsrState, n: int) -> np.ndarray:
    """First ``n`` output bits of the LFSR started from ``state``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    L = state.polynomial.degree
    out = np.zeros(max(n, L), dtype=np.uint8)
    out[:L] = state.register
    _fill(out, _feedback_array(state.polynomial), L)
    return as_bits(out[:n])


def is_consistent_segment(poly, segment: BitsLike) -> bool:
    """True iff ``segment`` obeys the recurrence of ``poly`` wherever it applies."""
    poly = as_polynomial(poly)
    seg = as_bits(segment)
    L = poly.degree
    if seg.size <= L:
        return True
    expect = np.zeros(seg.size - L, dtype=np.uint8)
    for e in poly.feedback:
        expect ^= seg[L - e : seg.size - e]
    return bool(np.array_equal(expect, seg[L:]))


def step(state: LfsrState, k: int = 1) -> LfsrState:
    """The state ``k`` clocks later."""
    if k < 0:
        return reverse_step(state, -k)
    L = state.polynomial.degree
    return LfsrState(state.polynomial, tuple(generate(state, k + L)[k:]))


def reverse_step(state: LfsrState, k: int) -> LfsrState:
    """The state ``k`` clocks earlier.

    Uses ``s_{n-L} = s_n + sum(s_{n-e})`` over feedback exponents ``e < L``,
    which requires the constant term (always present by construction).
    """
    if k < 0:
        return step(state, -k)
    poly = state.polynomial
    L = poly.degree
    inner = [e for e in poly.feedback if e < L]
    reg = list(state.register)
    for _ in range(k):
        v = reg[L - 1]
        for e in inner:
            v ^= reg[L - 1 - e]
        reg.insert(0, v)
        reg.pop()
    return LfsrState(poly, tuple(reg))


def preceding_bits(state: LfsrState, k: int) -> np.ndarray:
    """The ``k`` output bits immediately before ``state`` (in time order)."""
    earlier = reverse_step(state, k)
    return generate(earlier, k)


# -- GF(2) state solving -----------------------------------------------------


@lru_cache(maxsize=256)
def _generator_rows(poly: FeedbackPolynomial, n: int) -> np.ndarray:
    """Row ``t`` expresses output bit ``t+1`` as a GF(2) combination of the register."""
    L = poly.degree
    rows = np.zeros((max(n, L), L), dtype=np.uint8)
    rows[:L] = np.eye(L, dtype=np.uint8)
    for t in range(L, rows.shape[0]):
        acc = np.zeros(L, dtype=np.uint8)
        for e in poly.feedback:
            acc ^= rows[t - e]
        rows[t] = acc
    rows = rows[:n]
    rows.flags.writeable = False
    return rows


def generator_matrix(poly, n: int) -> np.ndarray:
    """``n x L`` matrix G with ``generate(state, n) == G @ register (mod 2)``."""
    return _generator_rows(as_polynomial(poly), n)


def _rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols - 1):
        hit = np.nonzero(a[r:, c])[0]
        if hit.size == 0:
            continue
        p = r + hit[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        mask = a[:, c].astype(bool)
        mask[r] = False
        a[mask] ^= a[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


@dataclass(frozen=True)
class StateSpace:
    """Affine set of registers ``particular + span(basis)`` over GF(2); empty if ``particular`` is None."""

    polynomial: FeedbackPolynomial
    particular: tuple[int, ...] | None
    basis: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return -1 if self.particular is None else len(self.basis)

    def __len__(self) -> int:
        return 0 if self.particular is None else 2 ** len(self.basis)

    def __iter__(self) -> Iterator[LfsrState]:
        if self.particular is None:
            return
        base = np.asarray(self.particular, dtype=np.uint8)
        vecs = np.asarray(self.basis, dtype=np.uint8).reshape(len(self.basis), base.size)
        for code in range(2 ** len(self.basis)):
            reg = base.copy()
            for b in range(len(self.basis)):
                if code >> (len(self.basis) - 1 - b) & 1:
                    reg ^= vecs[b]
            yield LfsrState(self.polynomial, tuple(int(v) for v in reg))

    def __contains__(self, state: LfsrState) -> bool:
        return any(s == state for s in self)

    def unique(self) -> LfsrState | None:
        if len(self) == 1:
            return next(iter(self))
        return None


def solve_initial_state(poly, constraints: Sequence[tuple[int, int]]) -> StateSpace:
    """All registers whose output honours every ``(position, bit)`` constraint (1-based positions)."""
    poly = as_polynomial(poly)
    L = poly.degree
    positions = [int(p) for p, _ in constraints]
    if len(set(positions)) != len(positions):
        raise ValueError("constraint positions must be distinct")
    if any(p < 1 for p in positions):
        raise ValueError("positions are 1-based")
    if not constraints:
        basis = tuple(tuple(int(v) for v in row) for row in np.eye(L, dtype=np.uint8))
        return StateSpace(poly, (0,) * L, basis)
    G = generator_matrix(poly, max(positions))
    aug = np.zeros((len(constraints), L + 1), dtype=np.uint8)
    for r, (p, b) in enumerate(constraints):
        aug[r, :L] = G[int(p) - 1]
        aug[r, L] = int(b) & 1
    red, pivots = _rref(aug)
    rank = len(pivots)
    if red[rank:, L].any():
        return StateSpace(poly, None, ())
    particular = np.zeros(L, dtype=np.uint8)
    for r, c in enumerate(pivots):
        particular[c] = red[r, L]
    free = [c for c in range(L) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(L, dtype=np.uint8)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = red[r, f]
        basis.append(tuple(int(t) for t in v))
    return StateSpace(poly, tuple(int(t) for t in particular), tuple(basis))


def state_from_segment(poly, segment: BitsLike) -> LfsrState | None:
    """The unique state producing ``segment``, or None when it is too short or inconsistent."""
    poly = as_polynomial(poly)
    seg = as_bits(segment)
    if seg.size < poly.degree or not is_consistent_segment(poly, seg):
        return None
    return LfsrState(poly, tuple(seg[: poly.degree]))


def period(state: LfsrState, limit: int | None = None) -> int:
    """Smallest p with the state recurring after p clocks (brute force)."""
    L = state.polynomial.degree
    limit = limit or 2**L
    seq = generate(state, limit + L)
    start = seq[:L].tobytes()
    for p in range(1, limit + 1):
        if seq[p : p + L].tobytes() == start:
            return p
    raise ValueError("period exceeds limit")


__all__ = [
    "FeedbackPolynomial",
    "LfsrState",
    "PolynomialError",
    "StateSpace",
    "as_polynomial",
    "generate",
    "generator_matrix",
    "is_consistent_segment",
    "parse_polynomial",
    "period",
    "preceding_bits",
    "reverse_step",
    "solve_initial_state",
    "state_from_segment",
    "step",
    "to_str",
]
