"""Reference keystream generators: Shrinking Generator and the alternating step variant.

The alternating step generator here is the modified form in which a control
bit of 1 clocks register A and emits its bit, and a 0 clocks B and emits its
bit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bits import as_bits
from .lfsr import LfsrState, generate, reverse_step, step


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class SgInstance:
    selector: LfsrState
    source: LfsrState

    def __post_init__(self):
        if self.selector.is_zero or self.source.is_zero:
            raise GeneratorError("shrinking generator registers must be nonzero")


@dataclass(frozen=True)
class AsgInstance:
    control: LfsrState
    branch_a: LfsrState
    branch_b: LfsrState

    def __post_init__(self):
        if self.control.is_zero or self.branch_a.is_zero or self.branch_b.is_zero:
            raise GeneratorError("alternating step registers must be nonzero")


def shrink_bits(selector: np.ndarray, source: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Decimate explicit bit streams; the mask ends at the m-th kept bit."""
    sel = as_bits(selector)
    src = as_bits(source)
    if m == 0:
        return as_bits([]), as_bits([])
    kept = np.flatnonzero(sel[: src.size])
    if kept.size < m:
        raise GeneratorError(f"selector keeps only {kept.size} of the {m} requested bits")
    end = kept[m - 1] + 1
    return as_bits(src[kept[:m]]), as_bits(sel[:end])


def shrink(instance: SgInstance, m: int) -> tuple[np.ndarray, np.ndarray]:
    """First ``m`` keystream bits and the consumed selector prefix (1 = kept)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return as_bits([]), as_bits([])
    # Any window of 2^L - 1 selector bits of a nonzero LFSR contains a 1,
    # so m * 2^L bits always suffice.
    n = m * (2 ** instance.selector.polynomial.degree)
    sel = generate(instance.selector, n)
    if not sel.any():
        raise GeneratorError("selector stuck at zero")
    src = generate(instance.source, n)
    return shrink_bits(sel, src, m)


def alternate_bits(control: np.ndarray, branch_a: np.ndarray, branch_b: np.ndarray) -> np.ndarray:
    """Interleave explicit streams: the i-th 1 of ``control`` emits the next A bit, a 0 the next B bit."""
    ctrl = as_bits(control)
    mask = ctrl.astype(bool)
    a, b = as_bits(branch_a), as_bits(branch_b)
    na, nb = int(mask.sum()), int((~mask).sum())
    if a.size < na or b.size < nb:
        raise GeneratorError("branch streams are shorter than the control demands")
    out = np.empty(ctrl.size, dtype=np.uint8)
    out[mask] = a[:na]
    out[~mask] = b[:nb]
    return as_bits(out)


def alternate(instance: AsgInstance, n: int) -> tuple[np.ndarray, np.ndarray]:
    """First ``n`` keystream bits and the ``n`` control bits that produced them."""
    if n < 0:
        raise ValueError("n must be non-negative")
    ctrl = generate(instance.control, n)
    a_count = int(ctrl.sum())
    a = generate(instance.branch_a, a_count)
    b = generate(instance.branch_b, n - a_count)
    return alternate_bits(ctrl, a, b), ctrl


def advance_sg(instance: SgInstance, clocks: int) -> SgInstance:
    return SgInstance(step(instance.selector, clocks), step(instance.source, clocks))


def sg_window_states(instance: SgInstance, skip: int) -> list[LfsrState]:
    """Source states from which the keystream, after dropping ``skip`` bits, is a decimation.

    These are the source states at every clock after the ``skip``-th kept
    bit, up to and including the clock of the next kept bit.  Clocks before
    time zero are reached by reverse stepping.
    """
    L = instance.selector.polynomial.degree
    n = (skip + 2) * (2 ** L)
    kept = np.flatnonzero(generate(instance.selector, n))
    first = int(kept[skip])
    if skip > 0:
        prev = int(kept[skip - 1])
    else:
        back = generate(reverse_step(instance.selector, 2 ** L), 2 ** L)
        prev = int(np.flatnonzero(back)[-1]) - 2 ** L
    return [step(instance.source, t) for t in range(prev + 1, first + 1)]


def asg_window_state(instance: AsgInstance, skip: int, branch: str = "a") -> LfsrState:
    """State of the chosen branch once ``skip`` keystream bits have been emitted."""
    ctrl = generate(instance.control, skip)
    if branch == "a":
        return step(instance.branch_a, int(ctrl.sum()))
    if branch == "b":
        return step(instance.branch_b, skip - int(ctrl.sum()))
    raise ValueError(f"unknown branch {branch!r}")
