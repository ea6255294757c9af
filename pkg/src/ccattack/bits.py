"""Binary sequences.

Bit sequences are plain ``numpy.uint8`` arrays holding 0/1 values.  Public
functions accept anything :func:`as_bits` understands (ASCII strings of
``'0'``/``'1'``, iterables of ints, arrays) and hand back read-only arrays.
Positions in user-facing contracts are 1-based; storage is 0-based.
"""
from __future__ import annotations

from typing import Iterable, Union

import numpy as np

BitsLike = Union[str, bytes, Iterable[int], np.ndarray]


def as_bits(value: BitsLike, *, allow_empty: bool = True) -> np.ndarray:
    if isinstance(value, np.ndarray):
        arr = np.array(value, dtype=np.uint8)
        if arr.ndim != 1:
            raise ValueError(f"bit sequence must be one-dimensional, got shape {arr.shape}")
        if arr.size and arr.max() > 1:
            raise ValueError("bit sequence contains values other than 0 and 1")
    else:
        if isinstance(value, bytes):
            value = value.decode("ascii")
        if isinstance(value, str):
            text = value.strip()
            bad = set(text) - {"0", "1"}
            if bad:
                raise ValueError(f"invalid bit characters: {''.join(sorted(bad))!r}")
            arr = np.frombuffer(text.encode("ascii"), dtype=np.uint8) - np.uint8(ord("0"))
        else:
            items = list(value)
            if any(b not in (0, 1) for b in items):
                raise ValueError("bit sequence contains values other than 0 and 1")
            arr = np.asarray(items, dtype=np.uint8)
    if not allow_empty and arr.size == 0:
        raise ValueError("empty bit sequence")
    arr.flags.writeable = False
    return arr


def to_str(bits: BitsLike) -> str:
    arr = as_bits(bits)
    return (arr + ord("0")).tobytes().decode("ascii")


def weight(bits: BitsLike) -> int:
    return int(as_bits(bits).sum())


def zero_runs(bits: BitsLike) -> list[int]:
    """Lengths of the maximal runs of zeros, leading and trailing runs included."""
    text = to_str(bits)
    return [len(r) for r in text.split("1") if r]


def longest_zero_run(bits: BitsLike) -> int:
    return max(zero_runs(bits), default=0)


def apply_mask(x: BitsLike, mask: BitsLike) -> np.ndarray:
    """Bits of ``x`` at the positions where ``mask`` is 1."""
    x = as_bits(x)
    mask = as_bits(mask)
    if mask.size > x.size:
        raise ValueError("mask longer than sequence")
    return as_bits(x[: mask.size][mask.astype(bool)])


def complement(bits: BitsLike) -> np.ndarray:
    return as_bits(1 - as_bits(bits))
