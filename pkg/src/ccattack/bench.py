"""Benchmark campaigns: plant random shrinking-generator instances and attack them."""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .attack import AttackConfig, AttackError, run_attack
from .generators import SgInstance, sg_window_states, shrink
from .lfsr import LfsrState
from .polys import primitive

HEADER = ["N", "M", "LA", "statesTotal", "seqPat", "thres", "dist", "matricesComputed", "solved", "seed"]
_POINT = re.compile(r"\(\s*(\*|\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


class GridError(ValueError):
    pass


@dataclass(frozen=True)
class GridPoint:
    N: Optional[int]  # None: default length rule
    M: int
    LA: int


@dataclass
class BenchRow:
    N: int
    M: int
    LA: int
    statesTotal: int
    seqPat: int
    thres: Optional[int]
    dist: Optional[int]
    matricesComputed: int
    solved: bool
    seed: int

    def as_csv(self) -> list:
        blank = lambda v: "" if v is None else v  # noqa: E731
        return [self.N, self.M, self.LA, self.statesTotal, self.seqPat, blank(self.thres),
                blank(self.dist), self.matricesComputed, str(self.solved).lower(), self.seed]


def parse_grid(text: str) -> list[GridPoint]:
    """``"(20,15,7);(*,28,7)"``; ``*`` asks for the default window length."""
    points = []
    for part in filter(None, (p.strip() for p in text.split(";"))):
        m = _POINT.fullmatch(part)
        if m is None:
            raise GridError(f"bad grid point {part!r}")
        n = None if m.group(1) == "*" else int(m.group(1))
        M, LA = int(m.group(2)), int(m.group(3))
        if M < 1 or (n is not None and n < M):
            raise GridError(f"grid point {part!r} needs 1 <= M <= N")
        if LA not in range(2, 17):
            raise GridError(f"no stored primitive polynomial of degree {LA}")
        points.append(GridPoint(n, M, LA))
    if not points:
        raise GridError("empty grid")
    return points


def default_h(LA: int) -> int:
    return LA // 2


def _random_state(rng: np.random.Generator, poly) -> LfsrState:
    while True:
        reg = rng.integers(0, 2, poly.degree)
        if reg.any():
            return LfsrState.of(poly, reg)


def plant(rng: np.random.Generator, ls: int, LA: int) -> SgInstance:
    return SgInstance(_random_state(rng, primitive(ls)), _random_state(rng, primitive(LA)))


def run_point(point: GridPoint, trial_seed: int, *, ls: int = 2, H: int | None = None,
              fallback: bool = True, workers: int = 1, tail: str = "auto") -> BenchRow:
    rng = np.random.default_rng(trial_seed)
    inst = plant(rng, ls, point.LA)
    # Spare bits for the trim; the attack keeps the first M after it.
    keystream, _ = shrink(inst, 8 * point.M)
    cfg = AttackConfig(
        generator="sg",
        target_poly=primitive(point.LA),
        selector_poly=primitive(ls),
        H=default_h(point.LA) if H is None else H,
        n=point.N,
        m=point.M,
        exhaustive_fallback=fallback,
        tail=tail,
        workers=workers,
        seed=trial_seed,
    )
    total = 2**point.LA
    try:
        rep = run_attack(cfg, keystream)
    except AttackError:
        return BenchRow(point.N or 0, point.M, point.LA, total, 0, None, None, 0, False, trial_seed)
    planted = {str(s) for s in sg_window_states(inst, len(rep.discarded))}
    return BenchRow(
        N=rep.N,
        M=rep.M,
        LA=point.LA,
        statesTotal=total,
        seqPat=rep.seq_pat,
        thres=rep.threshold,
        dist=rep.min_distance,
        matricesComputed=rep.matrices_computed,
        solved=bool(planted & set(rep.accepted_states)),
        seed=trial_seed,
    )


def run_bench(grid: Iterable[GridPoint], trials: int, seed: int = 0, **kw) -> list[BenchRow]:
    """One row per grid point and trial; every trial seed is drawn from a single stream seeded by ``seed``."""
    rng = np.random.default_rng(seed)
    rows = []
    for point in grid:
        for _ in range(trials):
            rows.append(run_point(point, int(rng.integers(0, 2**32)), **kw))
    return rows


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        w.writerow(r.as_csv())
    return buf.getvalue()


def plot_data(rows: list[BenchRow]) -> dict:
    """Per-L_A means for log-scale plots, plus the fraction of the state space never evaluated."""
    per = {}
    for r in rows:
        per.setdefault(r.LA, []).append(r)
    out = []
    for LA in sorted(per):
        rs = per[LA]
        out.append({
            "LA": LA,
            "trials": len(rs),
            "meanSeqPat": float(np.mean([r.seqPat for r in rs])),
            "meanMatricesComputed": float(np.mean([r.matricesComputed for r in rs])),
            "solvedRate": float(np.mean([r.solved for r in rs])),
            "meanReduction": float(np.mean([1 - r.matricesComputed / r.statesTotal for r in rs])),
        })
    return {
        "perLA": out,
        "LA_vs_seqPat": [[p["LA"], p["meanSeqPat"]] for p in out],
        "LA_vs_matricesComputed": [[p["LA"], p["meanMatricesComputed"]] for p in out],
        "meanReduction": float(np.mean([1 - r.matricesComputed / r.statesTotal for r in rows])) if rows else None,
    }


def plot_json(rows: list[BenchRow]) -> str:
    return json.dumps(plot_data(rows), sort_keys=True, indent=1) + "\n"
