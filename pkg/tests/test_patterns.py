from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccattack.bits import to_str
from ccattack.patterns import (
    BitPattern,
    build_is_pattern,
    derive_anti_pattern,
    enumerate_states,
    hypotheses,
    iter_pattern_states,
    relax_pattern,
    trim_for_h,
)

SG3 = {"generator": "sg", "ls": 3}


@pytest.mark.parametrize("seq,count", [("1011110", 0), ("011110", 2), ("11110", 3)])
def test_hypothesis_counts_on_worked_example(seq, count):
    assert hypotheses(seq, **SG3).fulfilled_count == count


def test_trim_sequence():
    trimmed, discarded, counts = trim_for_h("1011110", 3, L=7, **SG3)
    assert to_str(trimmed) == "11110"
    assert to_str(discarded) == "10"
    assert counts == [0, 2, 3]


def test_trim_h_zero_keeps_everything():
    trimmed, discarded, counts = trim_for_h("1011110", 0, L=7, **SG3)
    assert to_str(trimmed) == "1011110" and discarded.size == 0 and counts == [0]


def test_trim_exhaustion_and_range():
    with pytest.raises(ValueError):
        trim_for_h("0101", 3, L=7, **SG3)
    with pytest.raises(ValueError):
        trim_for_h("0000", 8, L=7, **SG3)


def test_is_pattern_on_worked_example():
    rep = hypotheses("11110", **SG3)
    assert str(build_is_pattern(rep, 7)) == "111111x"


def test_three_blocks_are_evaluated():
    rep = hypotheses("11110", **SG3)
    assert [h.j for h in rep.block(1)] == [2, 3, 4]
    assert rep.block(2) and rep.block(3)
    assert rep.fulfilled_count == sum(rep.per_j.values())


def test_generic_decimation_pattern():
    # N = 6, M = 4: hypothesis j=2 fixes x_1..x_4 when y_1 = y_2.
    rep = hypotheses("0010", N=6)
    assert rep.per_j == {2: True, 3: False}
    assert str(build_is_pattern(rep, 5)) == "0000x"


def test_insertion_hypotheses_need_m():
    with pytest.raises(ValueError):
        hypotheses("0011", model="insertion")
    rep = hypotheses("000011", model="insertion", M=4)
    assert rep.per_j[2] is True


def test_pattern_text_round_trip():
    p = BitPattern.parse("1x0x")
    assert str(p) == "1x0x" and p.free_count == 2 and p.fixed_positions == [0, 2]
    assert p.matches((1, 1, 0, 0)) and not p.matches((0, 1, 0, 0))
    with pytest.raises(ValueError):
        BitPattern.parse("10?")


def test_state_enumeration_skips_zero_and_anti_patterns():
    p = BitPattern.parse("0xx")
    assert list(iter_pattern_states(p)) == [(0, 0, 1), (0, 1, 0), (0, 1, 1)]
    assert p.state_count() == 3
    anti = [BitPattern.parse("01x")]
    assert list(enumerate_states(p, anti)) == [(0, 0, 1)]


def test_live_anti_patterns_apply_immediately():
    anti: list = []
    seen = []
    for reg in enumerate_states(BitPattern.free(3), anti):
        seen.append(reg)
        if reg == (0, 0, 1):
            anti.append(BitPattern.parse("1xx"))
    assert seen == [(0, 0, 1), (0, 1, 0), (0, 1, 1)]


def test_anti_pattern_width():
    assert str(derive_anti_pattern("1011000", 1, 4, 2, 5)) == "101xx"
    assert derive_anti_pattern("1011000", 4, 6, 2, 5) is None


def test_relaxation_orders():
    p = BitPattern.parse("111111x")
    tried = {str(p)}
    order = []
    while (q := relax_pattern(p, tried)) is not None:
        tried.add(str(q))
        order.append(str(q))
    assert order[0] == "111110x" and order[-1] == "011111x" and len(order) == 6
    assert str(relax_pattern(p, {str(p)}, "first-first")) == "011111x"
    with pytest.raises(ValueError):
        relax_pattern(p, set(), "random")


@settings(max_examples=100, deadline=None)
@given(st.text("01", min_size=2, max_size=40), st.integers(2, 4))
def test_hypothesis_count_is_block_one_total(seq, ls):
    rep = hypotheses(seq, generator="sg", ls=ls)
    assert 0 <= rep.fulfilled_count <= len(rep.block(1))
    for h in rep.block(1):
        lo, hi = h.premise
        if h.holds:
            assert len(set(seq[lo - 1 : hi])) == 1


@settings(max_examples=100, deadline=None)
@given(st.text("01x", min_size=1, max_size=10))
def test_pattern_state_count(text):
    p = BitPattern.parse(text)
    states = list(iter_pattern_states(p))
    assert len(states) == p.state_count()
    assert all(p.matches(s) and any(s) for s in states)
