import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import semitop.semi as semi_mod
from oracles import (random_space, semi_closure_oracle, semi_kernel_oracle,
                     semi_open_oracle, v_s_oracle)
from semitop.catalog import khalimsky_window, named_space
from semitop.semi import SemiAnalysis, semi_open_family, set_class
from semitop.spaces import space_from_masks


def test_e1_semi_open_family(e1_an):
    assert e1_an.semi_open.members == (0b000, 0b001, 0b110, 0b111)
    assert e1_an.semi_closed.members == (0b000, 0b001, 0b110, 0b111)


def test_e1_kernel_values(e1, e1_an):
    b1 = e1.mask_of("b")
    b2 = e1.mask_of("c")
    assert e1_an.semi_kernel(b1) == e1.mask_of("bc")
    assert e1_an.semi_kernel(b2) == e1.mask_of("bc")
    assert e1_an.semi_kernel(b1 & b2) == 0


def test_e33_fixed_point_families(e33_an):
    assert e33_an.lambda_s_sets().members == (0b000, 0b011, 0b111)
    assert e33_an.v_s_sets().members == (0b000, 0b100, 0b111)


def test_e33_operator_values(e33, e33_an):
    assert e33_an.v_s(e33.mask_of("ac")) == e33.mask_of("c")
    assert e33_an.semi_closure(e33.mask_of("a")) == e33.full


def test_semi_open_matches_levine_oracle(spaces3):
    for space in spaces3:
        an = SemiAnalysis(space)
        for a in range(1 << space.n):
            assert (a in an.semi_open) == semi_open_oracle(space, a)


def test_semi_open_family_closure_properties(spaces4):
    for space in spaces4:
        an = SemiAnalysis(space)
        so = an.semi_open.members
        big = 0
        for i, a in enumerate(so):
            big |= a
            for b in so[i:]:
                assert (a | b) in an.semi_open
                assert (space.full ^ ((space.full ^ a) & (space.full ^ b))) \
                    in an.semi_open
        assert big in an.semi_open
        assert space.full in an.semi_open and 0 in an.semi_open


def test_point_kernels_match_singleton_queries(spaces3):
    for space in spaces3:
        an = SemiAnalysis(space)
        for x in range(space.n):
            assert an.semi_kernel(1 << x) == an.point_kernels[x]


def test_operators_match_oracles_exhaustive(spaces3, spaces4):
    for space in spaces3 + spaces4[::7]:
        an = SemiAnalysis(space)
        for b in range(1 << space.n):
            assert an.semi_kernel(b) == semi_kernel_oracle(an, b)
            assert an.semi_closure(b) == semi_closure_oracle(an, b)
            assert an.v_s(b) == v_s_oracle(an, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(3, 8))
def test_operators_match_oracles_random(seed, n):
    rng = random.Random(seed)
    space = random_space(rng, n)
    an = SemiAnalysis(space)
    for _ in range(25):
        b = rng.randrange(1 << n)
        assert an.semi_kernel(b) == semi_kernel_oracle(an, b)
        assert an.semi_closure(b) == semi_closure_oracle(an, b)
        assert an.v_s(b) == v_s_oracle(an, b)


def test_reach_index_agrees_with_loops(spaces4):
    rng = random.Random(5150)
    picks = spaces4[::11] + [random_space(rng, 8) for _ in range(6)]
    for space in picks:
        an = SemiAnalysis(space)
        an.build_reach_index()
        for b in range(1 << space.n):
            assert an.semi_closure_indexed(b) == an.semi_closure(b)
            assert an.v_s_indexed(b) == an.v_s(b)


def test_forced_bulk_dispatch(monkeypatch, e33):
    monkeypatch.setattr(semi_mod, "_BULK_LIMIT", 0)
    an = SemiAnalysis(e33)
    for b in range(1 << e33.n):
        assert an._scl(b) == an.semi_closure(b)
        assert an._vs(b) == an.v_s(b)
    assert an._reach is not None


def test_bulk_kicks_in_for_wide_windows():
    an = SemiAnalysis(khalimsky_window(-7, 7).space)
    rng = random.Random(31)
    assert an._bulk()
    for _ in range(40):
        b = rng.randrange(1 << an.space.n)
        assert an.semi_closure_indexed(b) == an.semi_closure(b)
        assert an.v_s_indexed(b) == an.v_s(b)


def test_semi_open_family_helper(e1):
    assert semi_open_family(e1).members == (0b000, 0b001, 0b110, 0b111)


def test_set_class_goldens(e33):
    w = khalimsky_window(-3, 3)
    one = w.space.mask_of(["1"])
    assert set_class(w.space, one).regular_open
    assert set_class(e33, e33.mask_of("c")).nowhere_dense
    sp = named_space("sierpinski")
    assert set_class(sp, sp.mask_of("a")).preopen
    assert set_class(sp, sp.mask_of("b")).nowhere_dense


def test_open_sets_are_simply_open(spaces3):
    for space in spaces3:
        for o in space.opens:
            assert set_class(space, o).simply_open


def test_set_class_matches_literal_formulas(spaces4):
    for space in spaces4[::5]:
        for a in range(1 << space.n):
            c = set_class(space, a)
            int_cl = space.interior(space.closure(a))
            cl_int_cl = space.closure(int_cl)
            assert c.preopen == (a & ~int_cl == 0)
            assert c.beta_open == (a & ~cl_int_cl == 0)
            assert c.nowhere_dense == (int_cl == 0)
            assert c.regular_open == (a == int_cl)
            witnessed = any(
                u & a == u
                and space.interior(space.closure(a & ~u)) == 0
                for u in space.opens)
            assert c.simply_open == witnessed


def test_check_mask_enforced(e33_an):
    with pytest.raises(ValueError):
        e33_an.semi_kernel(1 << 5)
    with pytest.raises(ValueError):
        e33_an.v_s(-2)


def test_semi_t1_like_space_has_all_fixed_points():
    space = space_from_masks("ab", [0b00, 0b01, 0b10, 0b11])
    an = SemiAnalysis(space)
    assert len(an.lambda_s_sets()) == 4
    assert len(an.v_s_sets()) == 4
