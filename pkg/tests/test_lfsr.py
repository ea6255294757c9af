from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccattack.bits import apply_mask, as_bits, longest_zero_run, to_str, zero_runs
from ccattack.lfsr import (
    FeedbackPolynomial,
    LfsrState,
    PolynomialError,
    generate,
    generator_matrix,
    is_consistent_segment,
    parse_polynomial,
    period,
    preceding_bits,
    reverse_step,
    solve_initial_state,
    state_from_segment,
    step,
)
from ccattack.polys import PRIMITIVE, primitive

P7 = parse_polynomial("1+x+x^7")
P3 = parse_polynomial("1+x+x^3")


def test_as_bits_accepts_strings_and_lists():
    assert to_str(as_bits("0110")) == "0110"
    assert to_str(as_bits([1, 0, 1])) == "101"
    with pytest.raises(ValueError):
        as_bits("01a")
    with pytest.raises(ValueError):
        as_bits("", allow_empty=False)


def test_as_bits_copies_caller_arrays():
    src = np.array([1, 0, 1], dtype=np.uint8)
    out = as_bits(src)
    src[0] = 0
    assert out[0] == 1 and src.flags.writeable


def test_zero_runs_and_mask():
    assert zero_runs("0010001") == [2, 3]
    assert longest_zero_run("111") == 0
    assert to_str(apply_mask("1110110111", "0111011011")) == "1101011"


@pytest.mark.parametrize("text,taps", [("1+x+x^3", (0, 1, 3)), ("x^7 + 1 + x", (0, 1, 7)), ("[0,1,3]", (0, 1, 3))])
def test_parse_polynomial(text, taps):
    p = parse_polynomial(text)
    assert p.taps == taps
    assert parse_polynomial(str(p)) == p


@pytest.mark.parametrize("bad", ["x+x^3", "1+x", "1+x+x+x^3", "1+y^2", ""])
def test_parse_polynomial_rejects(bad):
    if bad == "1+x":
        assert parse_polynomial(bad).degree == 1
        return
    with pytest.raises(PolynomialError):
        parse_polynomial(bad)


def test_polynomial_requires_constant_and_leading_terms():
    with pytest.raises(PolynomialError):
        FeedbackPolynomial(3, (1, 3))
    with pytest.raises(PolynomialError):
        FeedbackPolynomial(3, (0, 1))


@pytest.mark.parametrize(
    "poly,reg,out",
    [
        (P7, "1111110", "1111110101"),
        (P7, "1111111", "1111111010"),
        (P7, "1111101", "1111101010"),
        (P3, "001", "00111010"),
    ],
)
def test_generate_known_outputs(poly, reg, out, backend):
    assert to_str(generate(LfsrState.of(poly, reg), len(out))) == out


def test_generate_backends_agree(rng, monkeypatch):
    from ccattack import _accel

    for d in (3, 8, 13):
        st_ = LfsrState.of(primitive(d), rng.integers(0, 2, d) | np.eye(1, d, 0, dtype=np.int64)[0])
        monkeypatch.setattr(_accel, "USE_NUMBA", False)
        a = generate(st_, 500)
        monkeypatch.setattr(_accel, "USE_NUMBA", _accel.HAVE_NUMBA)
        b = generate(st_, 500)
        assert np.array_equal(a, b)


def test_generate_short_lengths():
    s = LfsrState.of(P3, "101")
    assert to_str(generate(s, 0)) == ""
    assert to_str(generate(s, 2)) == "10"


def test_consistency():
    assert is_consistent_segment(P3, "0011101001")
    assert not is_consistent_segment(P3, "0011101011")
    assert is_consistent_segment(P3, "01")  # shorter than the register


@pytest.mark.parametrize("degree", sorted(PRIMITIVE))
def test_stored_polynomials_are_primitive(degree):
    reg = [1] + [0] * (degree - 1)
    assert period(LfsrState.of(primitive(degree), reg)) == 2**degree - 1


def test_step_and_reverse_step_invert():
    s = LfsrState.of(P7, "1111101")
    assert reverse_step(step(s, 13), 13) == s
    assert step(s, -4) == reverse_step(s, 4)


def test_preceding_bits_continue_backwards():
    s = LfsrState.of(P7, "1011001")
    later = step(s, 9)
    assert to_str(preceding_bits(later, 9)) == to_str(generate(s, 9))


def test_generator_matrix_matches_generation(rng):
    G = generator_matrix(P7, 40).astype(np.int64)
    for _ in range(5):
        reg = rng.integers(0, 2, 7)
        if not reg.any():
            continue
        assert np.array_equal(G @ reg % 2, generate(LfsrState.of(P7, reg), 40))


def test_solve_initial_state_cases():
    assert str(state_from_segment(P3, "0011101001")) == "001"
    assert state_from_segment(P3, "0011101011") is None
    space = solve_initial_state(P7, [(4, 0)])
    assert space.dimension == 6 and len(space) == 64
    space = solve_initial_state(P3, [(2, 0), (3, 1), (4, 1)])
    assert [str(s) for s in space] == ["001"]
    assert len(solve_initial_state(P3, [(1, 0), (2, 0), (3, 0), (4, 1)])) == 0
    with pytest.raises(ValueError):
        solve_initial_state(P3, [(1, 0), (1, 1)])
    with pytest.raises(ValueError):
        solve_initial_state(P3, [(0, 1)])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 2**11 - 1), st.lists(st.integers(1, 60), min_size=1, max_size=12, unique=True))
def test_solved_states_honour_constraints(code, positions):
    poly = primitive(11)
    reg = [(code >> b) & 1 for b in range(11)]
    out = generate(LfsrState.of(poly, reg), 60)
    space = solve_initial_state(poly, [(p, int(out[p - 1])) for p in positions])
    assert LfsrState.of(poly, reg) in space
    for s in list(space)[:8]:
        got = generate(s, 60)
        assert all(got[p - 1] == out[p - 1] for p in positions)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 2**9 - 1), st.integers(0, 40))
def test_generated_segments_are_consistent(code, start):
    poly = primitive(9)
    reg = [(code >> b) & 1 for b in range(9)]
    seg = generate(LfsrState.of(poly, reg), start + 30)[start:]
    assert is_consistent_segment(poly, seg)
    assert state_from_segment(poly, seg) == step(LfsrState.of(poly, reg), start)


def test_zero_run_bound_of_m_sequences():
    for d in (3, 4, 5):
        seq = generate(LfsrState.of(primitive(d), [1] + [0] * (d - 1)), 2 * 2**d)
        assert longest_zero_run(seq) == d - 1
