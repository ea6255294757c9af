"""Edit-distance attack on the target register of a clock-controlled generator.

Outline of :func:`run_attack`:

1. drop leading intercepted bits until ``H`` run hypotheses hold,
2. turn the fulfilled hypotheses into a pattern over the target register,
3. evaluate every matching state with a thresholded edit matrix, pruning on
   stop columns and excluding later states that share the pruned prefix,
4. decode the optimal alignments of the best states and keep those that the
   generator could have produced,
5. confirm survivors by running the registers backwards over the dropped
   bits, relaxing the pattern one bit at a time while nothing is accepted.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .bits import BitsLike, as_bits, to_str
from .editmatrix import compute_matrix, first_stop_column
from .lfsr import FeedbackPolynomial, LfsrState, as_polynomial, generate, preceding_bits, solve_initial_state
from .patterns import (
    ASG,
    DECIMATION,
    GENERIC,
    INSERTION,
    SG,
    BitPattern,
    HypothesisReport,
    build_is_pattern,
    default_hypothesis_n,
    derive_anti_pattern,
    enumerate_states,
    hypotheses,
    iter_pattern_states,
    relax_pattern,
    trim_for_h,
)
from .searchgraph import count_shortest_paths, iter_shortest_paths, path_to_alignment

TAILS = ("auto", "bounded", "open")
RELAX_ORDERS = ("last-first", "first-first")
# Caps the state spaces walked while confirming against dropped bits.
_MAX_CONFIRM_SPACE = 1 << 12


class AttackError(ValueError):
    pass


@dataclass(frozen=True)
class AttackConfig:
    """Attack parameters.

    ``target_poly`` is the register under attack.  For the alternating step
    generator ``branch_b_poly`` is the other branch; ``target_branch`` says
    whether the target is emitted on control 1 (``"a"``) or 0 (``"b"``).
    ``n``/``m`` pin the candidate window; left unset they follow the
    default length rules.  In the decimation model ``m`` keeps only the
    first ``m`` bits left after trimming.
    """

    generator: str = GENERIC
    target_poly: FeedbackPolynomial | None = None
    model: str | None = None
    selector_poly: FeedbackPolynomial | None = None
    branch_b_poly: FeedbackPolynomial | None = None
    H: int = 0
    n: int | None = None
    m: int | None = None
    kmax: int | None = None
    tail: str = "auto"
    exhaustive_fallback: bool = False
    relax_order: str = "last-first"
    target_branch: str = "a"
    workers: int = 1
    seed: int = 0
    max_alignments: int = 100_000

    def __post_init__(self):
        if self.target_poly is None:
            raise AttackError("target polynomial is required")
        for name in ("target_poly", "selector_poly", "branch_b_poly"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_polynomial(v))
        gen = self.generator.lower()
        object.__setattr__(self, "generator", gen)
        if gen not in (GENERIC, SG, ASG):
            raise AttackError(f"unknown generator {self.generator!r}")
        model = self.model
        if model is None:
            model = INSERTION if gen == ASG else DECIMATION
        if model not in (DECIMATION, INSERTION):
            raise AttackError(f"unknown model {model!r}")
        if gen == SG and model != DECIMATION:
            raise AttackError("the shrinking generator is a decimation model")
        if gen == ASG and model != INSERTION:
            raise AttackError("the alternating step generator is an insertion model")
        object.__setattr__(self, "model", model)
        if gen in (SG, ASG) and self.selector_poly is None:
            raise AttackError(f"{gen} needs the selector polynomial")
        if gen == ASG and self.branch_b_poly is None:
            raise AttackError("asg needs the polynomial of the other branch")
        if not 0 <= self.H <= self.target_poly.degree:
            raise AttackError(f"H={self.H} outside [0, {self.target_poly.degree}]")
        if self.kmax is not None and self.kmax < 1:
            raise AttackError("kmax must be at least 1")
        if self.tail not in TAILS:
            raise AttackError(f"tail must be one of {TAILS}")
        if self.relax_order not in RELAX_ORDERS:
            raise AttackError(f"relax order must be one of {RELAX_ORDERS}")
        if self.target_branch not in ("a", "b"):
            raise AttackError("target branch must be 'a' or 'b'")
        if self.workers < 1:
            raise AttackError("workers must be positive")

    @property
    def L(self) -> int:
        return self.target_poly.degree

    @property
    def ls(self) -> int | None:
        return None if self.selector_poly is None else self.selector_poly.degree

    def to_dict(self) -> dict:
        out = {}
        for k in self.__dataclass_fields__:
            v = getattr(self, k)
            out[k] = str(v) if isinstance(v, FeedbackPolynomial) else v
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "AttackConfig":
        return cls(**data)


@dataclass
class AttackSetup:
    """Everything fixed before the candidate loop starts."""

    model: str
    generator: str
    L: int
    ls: int | None
    intercepted: np.ndarray
    sequence: np.ndarray
    discarded: np.ndarray
    hypothesis_counts: list[int]
    N: int
    M: int
    kmax: int
    open_tail: bool
    hypothesis_report: HypothesisReport
    is_pattern: BitPattern


def _sg_default_n(M: int, ls: int) -> int:
    # Long enough that the M-th kept bit always falls inside the window.
    return 2 * M + 2**ls + ls


def _asg_default_m(N: int, ls: int, branch: str = "a") -> int:
    # Every full control period emits 2^(ls-1) ones and one zero fewer.
    per = 2 ** (ls - 1) if branch == "a" else 2 ** (ls - 1) - 1
    m = (N // (2**ls - 1)) * per
    return m if m > 0 else N // 2


def _generic_default_n(M: int, kmax: int | None) -> int:
    return math.ceil(3 * M / 2) if kmax == 1 else 2 * M


def _generic_default_m(N: int, kmax: int | None) -> int:
    return (2 * N) // 3 if kmax == 1 else N // 2


def resolve_setup(config: AttackConfig, intercepted: BitsLike) -> AttackSetup:
    """Trim the intercepted bits and settle N, M, kmax, the tail mode and the IS-pattern."""
    seq = as_bits(intercepted)
    if seq.size == 0:
        raise AttackError("intercepted sequence is empty")
    gen, model, L, ls = config.generator, config.model, config.L, config.ls
    kmax = config.kmax
    if kmax is None and ls is not None:
        # Control ones come in runs of up to ls, zeros in runs of up to ls - 1.
        kmax = ls if gen == ASG and config.target_branch == "b" else ls - 1
        if kmax < 1:
            raise AttackError("selector degree must be at least 2")
    hyp = {"model": model, "generator": gen, "ls": ls}

    m_policy = None
    if model == INSERTION:
        if config.m is not None:
            m_policy = lambda n: config.m  # noqa: E731
        elif gen == ASG:
            m_policy = lambda n: _asg_default_m(n, ls, config.target_branch)  # noqa: E731
        else:
            m_policy = lambda n: _generic_default_m(n, kmax)  # noqa: E731
    try:
        trimmed, discarded, counts = trim_for_h(seq, config.H, L=L, m_policy=m_policy, **hyp)
    except ValueError as exc:
        raise AttackError(str(exc)) from exc

    if model == DECIMATION:
        if config.m is not None:
            if trimmed.size < config.m:
                raise AttackError(f"only {trimmed.size} bits left after trimming, {config.m} requested")
            trimmed = trimmed[: config.m]
        M = trimmed.size
        if config.n is not None:
            N = config.n
        elif gen == SG:
            N = _sg_default_n(M, ls)
        else:
            N = _generic_default_n(M, kmax)
        explicit = config.n is not None
    else:
        N = trimmed.size
        M = m_policy(N)
        explicit = config.m is not None
    if M < 1 or M > N:
        raise AttackError(f"window sizes N={N}, M={M} are not usable")
    if kmax is None:
        kmax = max(N - M, 1)
    if config.tail == "auto":
        open_tail = not explicit
    else:
        open_tail = config.tail == "open"

    if gen == GENERIC:
        hyp_n = N if model == DECIMATION else None
        report = hypotheses(trimmed, N=hyp_n, M=M if model == INSERTION else None, **hyp)
    elif model == DECIMATION:
        report = hypotheses(trimmed, N=default_hypothesis_n(M), **hyp)
    else:
        report = hypotheses(trimmed, M=M, **hyp)
    pattern = build_is_pattern(report, L)
    return AttackSetup(
        model=model,
        generator=gen,
        L=L,
        ls=ls,
        intercepted=seq,
        sequence=trimmed,
        discarded=discarded,
        hypothesis_counts=counts,
        N=N,
        M=M,
        kmax=kmax,
        open_tail=open_tail,
        hypothesis_report=report,
        is_pattern=pattern,
    )


def candidate_pair(setup: AttackSetup, state: LfsrState) -> tuple[np.ndarray, np.ndarray]:
    """``(X, Y)`` for a candidate target state."""
    if setup.model == DECIMATION:
        return generate(state, setup.N), setup.sequence
    return setup.sequence, generate(state, setup.M)


# -- consistency and confirmation ---------------------------------------------


@dataclass
class CandidateSolution:
    state: str
    distance: int
    keep_mask: str
    noise_positions: list[int]
    generation: int = 0
    selector_state: Optional[str] = None
    b_state: Optional[str] = None
    consistent: bool = False
    confirmed: bool = False

    @property
    def consumed_mask(self) -> str:
        """Keep-mask cut after its last kept position."""
        return self.keep_mask[: self.keep_mask.rfind("1") + 1]

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data: dict) -> "CandidateSolution":
        return cls(**data)


def _recurrence_holds(bits, poly: FeedbackPolynomial, start: int = 0) -> bool:
    L = poly.degree
    fb = poly.feedback
    for n in range(max(L, start), len(bits)):
        v = 0
        for e in fb:
            v ^= bits[n - e]
        if v != bits[n]:
            return False
    return True


def _control_bits(mask, config: AttackConfig) -> list[int]:
    if config.generator == ASG and config.target_branch == "b":
        return [1 - b for b in mask]
    return list(mask)


def _deleted_bits(mask, x) -> list[int]:
    return [int(x[p]) for p, b in enumerate(mask) if b == 0]


def _mask_filter(setup: AttackSetup, config: AttackConfig, x: np.ndarray):
    """Prefix test used while walking optimal alignments; None when nothing prunes."""
    if setup.generator == GENERIC:
        return None
    ps = config.selector_poly
    other = config.branch_b_poly
    step_max = setup.kmax + 1

    def accept(mask: list, final: bool) -> bool:
        n = len(mask)
        if final:
            if setup.open_tail:
                return True
            start = 0
        else:
            start = n - step_max
        if not _recurrence_holds(_control_bits(mask, config), ps, start):
            return False
        if setup.generator == ASG:
            deleted = _deleted_bits(mask, x)
            if not _recurrence_holds(deleted, other, len(deleted) - step_max if not final else 0):
                return False
        return True

    return accept


def _checked_mask(mask: str, open_tail: bool) -> list[int]:
    bits = [int(c) for c in mask]
    if open_tail:
        last = mask.rfind("1")
        bits = bits[: last + 1]
    return bits


def verify_consistency(
    candidate: CandidateSolution,
    config: AttackConfig,
    discarded: BitsLike,
    *,
    setup: AttackSetup | None = None,
    open_tail: bool = False,
    x: BitsLike | None = None,
    N: int | None = None,
    M: int | None = None,
) -> tuple[bool, bool]:
    """``(consistent, confirmed)`` for a decoded alignment.

    ``x`` is the intercepted window for the insertion model (deleted bits
    are read from it).  Confirmation regenerates the bits right before the
    window by running the registers backwards and compares them with
    ``discarded``.  Generic runs have no registers besides the target, so
    they are confirmed by definition.  Recovered selector and other-branch
    states are written back into ``candidate``.
    """
    if setup is not None:
        open_tail = setup.open_tail
        N, M = setup.N, setup.M
        if x is None and setup.model == INSERTION:
            x = setup.sequence
    discarded = as_bits(discarded)
    mask = _checked_mask(candidate.keep_mask, open_tail)
    N = len(candidate.keep_mask) if N is None else N
    M = candidate.keep_mask.count("1") if M is None else M
    gen = config.generator

    if gen == GENERIC:
        kmax = config.kmax if config.kmax is not None else (setup.kmax if setup else N - M)
        runs = [len(r) for r in candidate.consumed_mask.split("1")]
        consistent = max(runs, default=0) <= max(kmax, 0)
        candidate.consistent = consistent
        candidate.confirmed = consistent
        return consistent, consistent

    ls = config.selector_poly.degree
    ok = not candidate.noise_positions and candidate.distance == N - M
    runs = [len(r) for r in "".join(map(str, mask)).split("1")]
    bound = ls if gen == ASG and config.target_branch == "b" else ls - 1
    ok = ok and max(runs, default=0) <= bound
    control = _control_bits(mask, config)
    ok = ok and _recurrence_holds(control, config.selector_poly)
    deleted: list[int] = []
    if gen == ASG:
        if x is None:
            raise AttackError("insertion model needs the intercepted window to check deleted bits")
        deleted = _deleted_bits(mask, as_bits(x))
        ok = ok and _recurrence_holds(deleted, config.branch_b_poly)
    candidate.consistent = bool(ok)
    if not ok:
        candidate.confirmed = False
        return False, False

    target = LfsrState.of(config.target_poly, candidate.state)
    sel_space = solve_initial_state(config.selector_poly, [(p + 1, b) for p, b in enumerate(control)])
    other_space = None
    if gen == ASG:
        other_space = solve_initial_state(config.branch_b_poly, [(p + 1, b) for p, b in enumerate(deleted)])
    confirmed = False
    for sel in _bounded(sel_space):
        if gen == SG:
            if _sg_confirms(sel, target, discarded):
                candidate.selector_state = str(sel)
                confirmed = True
                break
        else:
            for oth in _bounded(other_space):
                if _asg_confirms(sel, target, oth, discarded, config.target_branch):
                    candidate.selector_state = str(sel)
                    candidate.b_state = str(oth)
                    confirmed = True
                    break
            if confirmed:
                break
    if not confirmed:
        u = sel_space.unique()
        candidate.selector_state = None if u is None else str(u)
        if other_space is not None:
            u = other_space.unique()
            candidate.b_state = None if u is None else str(u)
    candidate.confirmed = confirmed
    return True, confirmed


def _bounded(space):
    if space is None or len(space) > _MAX_CONFIRM_SPACE:
        return []
    return [s for s in space if not s.is_zero]


def _sg_confirms(sel: LfsrState, target: LfsrState, discarded: np.ndarray) -> bool:
    d = discarded.size
    if d == 0:
        return True
    k = (d + 1) * 2 ** sel.polynomial.degree
    s = preceding_bits(sel, k)
    a = preceding_bits(target, k)
    kept = a[s == 1]
    return kept.size >= d and bool(np.array_equal(kept[-d:], discarded))


def _asg_confirms(ctrl: LfsrState, target: LfsrState, other: LfsrState, discarded: np.ndarray, branch: str) -> bool:
    d = discarded.size
    if d == 0:
        return True
    c = preceding_bits(ctrl, d)
    on = 1 if branch == "a" else 0
    n_t = int((c == on).sum())
    out = np.empty(d, dtype=np.uint8)
    out[c == on] = preceding_bits(target, n_t)
    out[c != on] = preceding_bits(other, d - n_t)
    return bool(np.array_equal(out, discarded))


# -- report ---------------------------------------------------------------------


@dataclass
class AttackReport:
    accepted: list[CandidateSolution] = field(default_factory=list)
    unconfirmed: list[CandidateSolution] = field(default_factory=list)
    outcome: str = "no-solution"
    generator: str = GENERIC
    model: str = DECIMATION
    hypothesis_counts: list[int] = field(default_factory=list)
    trimmed: str = ""
    discarded: str = ""
    N: int = 0
    M: int = 0
    kmax: int = 0
    open_tail: bool = False
    is_pattern: str = ""
    seq_pat: int = 0
    patterns_tried: list[str] = field(default_factory=list)
    states_enumerated: int = 0
    matrices_computed: int = 0
    stopped_early: int = 0
    states_excluded_by_anti_pattern: int = 0
    cells_computed: int = 0
    threshold_trace: list[list[int]] = field(default_factory=list)
    threshold_after_pattern: Optional[int] = None
    min_distance: Optional[int] = None
    relaxations_used: int = 0
    fallback_used: bool = False
    evaluated: list[dict] = field(default_factory=list)
    pruned: list[dict] = field(default_factory=list)
    shortest_paths: dict = field(default_factory=dict)
    anti_patterns: list[str] = field(default_factory=list)
    wall_clock: Optional[float] = None

    @property
    def threshold(self) -> Optional[int]:
        return self.threshold_trace[-1][1] if self.threshold_trace else None

    @property
    def accepted_states(self) -> list[str]:
        seen = []
        for c in self.accepted:
            if c.state not in seen:
                seen.append(c.state)
        return seen

    def to_dict(self, *, timing: bool = False) -> dict:
        out = dict(self.__dict__)
        out["accepted"] = [c.to_dict() for c in self.accepted]
        out["unconfirmed"] = [c.to_dict() for c in self.unconfirmed]
        if not timing:
            out.pop("wall_clock")
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "AttackReport":
        data = dict(data)
        data["accepted"] = [CandidateSolution.from_dict(c) for c in data.get("accepted", [])]
        data["unconfirmed"] = [CandidateSolution.from_dict(c) for c in data.get("unconfirmed", [])]
        return cls(**data)


# -- candidate loop ------------------------------------------------------------


@dataclass
class _Evaluation:
    index: int
    state: tuple
    generation: int
    x: np.ndarray
    y: np.ndarray
    distance: Optional[int]
    stop_column: Optional[int]
    threshold: int
    matrix: object = None
    checked: bool = False


class _Search:
    def __init__(self, config: AttackConfig, setup: AttackSetup, report: AttackReport):
        self.config = config
        self.setup = setup
        self.report = report
        self.T = setup.N
        self.anti: list[BitPattern] = []
        self.seen: set = set()
        self.index = 0
        self.pending: list[_Evaluation] = []
        self.pool = ThreadPoolExecutor(config.workers) if config.workers > 1 else None

    def close(self):
        if self.pool is not None:
            self.pool.shutdown()

    def _state(self, reg) -> LfsrState:
        return LfsrState(self.config.target_poly, reg)

    def _excluded(self, reg) -> bool:
        return any(a.matches(reg) for a in self.anti)

    def _candidates(self, pattern: BitPattern | None):
        src = iter_pattern_states(pattern) if pattern is not None else iter_pattern_states(BitPattern.free(self.setup.L))
        for reg in src:
            if reg not in self.seen:
                self.seen.add(reg)
                yield reg

    def sweep(self, pattern: BitPattern | None, generation: int):
        """Evaluate every unseen state of ``pattern`` (all states when None)."""
        if self.pool is None:
            for reg in self._candidates(pattern):
                self._record(reg, generation, None)
            return
        chunk = 32 * self.config.workers
        batch: list = []
        for reg in self._candidates(pattern):
            batch.append(reg)
            if len(batch) == chunk:
                self._parallel_batch(batch, generation)
                batch = []
        if batch:
            self._parallel_batch(batch, generation)

    def _full_matrix(self, reg, anti_snapshot):
        # Stale exclusions only ever skip states the replay also excludes.
        if any(a.matches(reg) for a in anti_snapshot):
            return None
        x, y = candidate_pair(self.setup, self._state(reg))
        return compute_matrix(x, y, self.setup.kmax, open_tail=self.setup.open_tail)

    def _parallel_batch(self, batch, generation):
        snapshot = list(self.anti)
        futures = [self.pool.submit(self._full_matrix, reg, snapshot) for reg in batch]
        for reg, fut in zip(batch, futures):
            self._record(reg, generation, fut.result())

    def _record(self, reg, generation: int, full):
        rep, setup = self.report, self.setup
        idx = self.index
        self.index += 1
        rep.states_enumerated += 1
        if self._excluded(reg):
            rep.states_excluded_by_anti_pattern += 1
            rep.pruned.append({"index": idx, "state": _s(reg), "reason": "anti-pattern", "threshold": self.T})
            return
        rep.matrices_computed += 1
        if full is None:
            x, y = candidate_pair(setup, self._state(reg))
            m = compute_matrix(x, y, setup.kmax, self.T, open_tail=setup.open_tail)
            stop = m.stop_column
            cells = m.cells_computed
        else:
            m = full
            x, y = m.x, m.y
            stop = first_stop_column(m, self.T)
            cols = stop or m.M
            cells = int((m.cells[:, :cols] >= 0).sum())
        rep.cells_computed += cells
        if stop is not None:
            rep.stopped_early += 1
            rep.pruned.append(
                {"index": idx, "state": _s(reg), "reason": "stop-column", "stop_column": stop, "threshold": self.T}
            )
            rep.evaluated.append({"index": idx, "state": _s(reg), "generation": generation, "stop_column": stop})
            source = x if setup.model == DECIMATION else y
            extra = setup.N - setup.M if setup.model == DECIMATION else 0
            ap = derive_anti_pattern(source, stop, stop + extra, stop, setup.L)
            if ap is not None and str(ap) not in rep.anti_patterns:
                self.anti.append(ap)
                rep.anti_patterns.append(str(ap))
            return
        d = m.distance()
        self.T = min(self.T, d)
        rep.threshold_trace.append([idx, self.T])
        rep.evaluated.append({"index": idx, "state": _s(reg), "generation": generation, "distance": d})
        rep.min_distance = d if rep.min_distance is None else min(rep.min_distance, d)
        self.pending.append(_Evaluation(idx, reg, generation, x, y, d, None, self.T, m))

    def solve(self) -> bool:
        """Decode and check every unchecked state at the current threshold."""
        rep, setup, config = self.report, self.setup, self.config
        found = False
        for ev in self.pending:
            if ev.checked or ev.distance != self.T:
                continue
            ev.checked = True
            m = ev.matrix
            key = _s(ev.state)
            rep.shortest_paths[key] = count_shortest_paths(m)
            if setup.generator != GENERIC and ev.distance != setup.N - setup.M:
                continue  # every optimal alignment carries noise
            accept = _mask_filter(setup, config, setup.sequence)
            seen_masks = set()
            for n_paths, path in enumerate(iter_shortest_paths(m, accept)):
                if n_paths >= config.max_alignments:
                    break
                sol = path_to_alignment(path, ev.x, ev.y)
                if sol.keep_mask in seen_masks:
                    continue
                seen_masks.add(sol.keep_mask)
                cand = CandidateSolution(
                    state=key,
                    distance=ev.distance,
                    keep_mask=sol.keep_mask,
                    noise_positions=list(sol.noise_positions),
                    generation=ev.generation,
                )
                consistent, confirmed = verify_consistency(cand, config, setup.discarded, setup=setup)
                if consistent and confirmed:
                    rep.accepted.append(cand)
                    found = True
                elif consistent:
                    rep.unconfirmed.append(cand)
        for ev in self.pending:
            if ev.checked or ev.distance > self.T:
                ev.matrix = None
        return found


def _s(reg) -> str:
    return "".join(map(str, reg))


def run_attack(config: AttackConfig, intercepted: BitsLike) -> AttackReport:
    """Run the attack and return the full report; ``outcome`` is ``"accepted"`` or ``"no-solution"``."""
    t0 = time.perf_counter()
    setup = resolve_setup(config, intercepted)
    rep = AttackReport(
        generator=setup.generator,
        model=setup.model,
        hypothesis_counts=list(setup.hypothesis_counts),
        trimmed=to_str(setup.sequence),
        discarded=to_str(setup.discarded),
        N=setup.N,
        M=setup.M,
        kmax=setup.kmax,
        open_tail=setup.open_tail,
        is_pattern=str(setup.is_pattern),
        seq_pat=setup.is_pattern.state_count(),
    )
    search = _Search(config, setup, rep)
    try:
        pattern = setup.is_pattern
        tried = {str(pattern)}
        generation = 0
        while pattern is not None:
            rep.patterns_tried.append(str(pattern))
            search.sweep(pattern, generation)
            if generation == 0:
                rep.threshold_after_pattern = search.T if rep.threshold_trace else None
            if search.solve():
                break
            pattern = relax_pattern(setup.is_pattern, tried, config.relax_order)
            if pattern is not None:
                tried.add(str(pattern))
                generation += 1
                rep.relaxations_used += 1
        if not rep.accepted and config.exhaustive_fallback:
            rep.fallback_used = True
            search.sweep(None, generation + 1)
            search.solve()
    finally:
        search.close()
    rep.outcome = "accepted" if rep.accepted else "no-solution"
    rep.wall_clock = time.perf_counter() - t0
    return rep


__all__ = [
    "AttackConfig",
    "AttackError",
    "AttackReport",
    "AttackSetup",
    "CandidateSolution",
    "candidate_pair",
    "resolve_setup",
    "run_attack",
    "verify_consistency",
]
