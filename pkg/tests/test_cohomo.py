import pytest
from hypothesis import given, strategies as st

from padiclift.buium import p_derivation
from padiclift.cohomo import (ADDITIVE, MULTIPLICATIVE, GroupValuedMap,
                              coboundary2, coboundary_of_coboundary_is_trivial,
                              cocycle2_check)
from padiclift.gamma import beta_p, gamma_p
from padiclift.gfq import fq_make
from padiclift.rng import CounterRng
from padiclift.suites import sample_zq
from padiclift.witt_zq import zq_ring
from padiclift.zp_ring import buium_carry, carry_cocycle, from_integer


def test_flavor_validation():
    with pytest.raises(ValueError):
        GroupValuedMap(lambda x: x, "weird")


@given(st.integers(0, 5**3 - 1), st.integers(0, 5**3 - 1))
def test_coboundary_of_gamma_is_beta(a, b):
    x, y = from_integer(a, 5, 3), from_integer(b, 5, 3)
    gm = GroupValuedMap(gamma_p, MULTIPLICATIVE, name="gamma_p")
    assert coboundary2(gm, x, y) == beta_p(x, y)


def test_coboundary_of_constant_one():
    one = from_integer(1, 5, 3)
    gm = GroupValuedMap(lambda x: one, MULTIPLICATIVE, name="const")
    for a in range(5):
        assert coboundary2(gm, from_integer(a, 5, 3), one) == one


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_carry_cocycle_check_exhaustive(p):
    F = GroupValuedMap(lambda a, b: carry_cocycle(a, b, p), ADDITIVE,
                       name="carry_cocycle", combine=lambda a, b: (a + b) % p)
    for a in range(p):
        for b in range(p):
            for c in range(p):
                rep = cocycle2_check(F, a, b, c)
                assert rep.passed
                assert rep.residual == 0


@given(st.integers(0, 5**4 - 1), st.integers(0, 5**4 - 1), st.integers(0, 5**4 - 1))
def test_buium_carry_is_a_cocycle(a, b, c):
    F = GroupValuedMap(buium_carry, ADDITIVE, name="buium_carry")
    x, y, z = (from_integer(v, 5, 4) for v in (a, b, c))
    assert cocycle2_check(F, x, y, z).passed


@given(st.integers(0, 7**2 - 1), st.integers(0, 7**2 - 1), st.integers(0, 7**2 - 1))
def test_beta_is_a_cocycle(a, b, c):
    F = GroupValuedMap(beta_p, MULTIPLICATIVE, name="beta_p")
    x, y, z = (from_integer(v, 7, 2) for v in (a, b, c))
    rep = cocycle2_check(F, x, y, z)
    assert rep.passed
    assert rep.residual == 1


def test_every_coboundary_is_a_cocycle():
    gm = GroupValuedMap(gamma_p, MULTIPLICATIVE, name="gamma_p")
    F = GroupValuedMap(lambda a, b: coboundary2(gm, a, b), MULTIPLICATIVE,
                       name="d gamma_p")
    rng = CounterRng(13)
    for _ in range(30):
        x, y, z = (from_integer(rng.below(5**3), 5, 3) for _ in range(3))
        assert cocycle2_check(F, x, y, z).passed


def test_d_of_d_is_trivial_three_structures():
    # additive over Z/5^3 with an arbitrary nonlinear map
    f_add = GroupValuedMap(lambda x: x * x + 3, ADDITIVE, name="square")
    x, y, z = (from_integer(v, 5, 3) for v in (12, 87, 44))
    assert coboundary_of_coboundary_is_trivial(f_add, x, y, z).passed
    # multiplicative over Z/7^3 with gamma_p
    g = GroupValuedMap(gamma_p, MULTIPLICATIVE, name="gamma_p")
    u, v, w = (from_integer(t, 7, 3) for t in (5, 30, 100))
    assert coboundary_of_coboundary_is_trivial(g, u, v, w).passed
    # additive over Z_9 with the p-derivation
    ring = zq_ring(fq_make(3, 2), 4)
    d = GroupValuedMap(p_derivation, ADDITIVE, name="p_derivation")
    rng = CounterRng(17)
    a, b, c = (sample_zq(ring, rng) for _ in range(3))
    assert coboundary_of_coboundary_is_trivial(d, a, b, c).passed


def test_multiplicative_values_must_be_units():
    gm = GroupValuedMap(lambda x: from_integer(5, 5, 3), MULTIPLICATIVE,
                        name="non_unit")
    with pytest.raises(ValueError, match="not a unit"):
        coboundary2(gm, from_integer(1, 5, 3), from_integer(2, 5, 3))


def test_report_names_inputs():
    F = GroupValuedMap(lambda a, b: carry_cocycle(a, b, 5), ADDITIVE,
                       name="carry_cocycle", combine=lambda a, b: (a + b) % 5)
    rep = cocycle2_check(F, 1, 2, 3)
    assert rep.name == "carry_cocycle"
    assert rep.inputs == (1, 2, 3)
