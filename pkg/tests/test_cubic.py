import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from auxetica.cubic import (CubicError, TernaryCubic, aronhold_S, aronhold_T, det_of_linear_forms,
                            determinant_cubic, discriminant, hesse_J, hesse_parameter, hesse_S,
                            hesse_T, invariants, modulus_J, modulus_quartic)
from auxetica.deformation import GramVelocityPencil
from auxetica.linalg import det3
from oracles import oracle_det_cubic_values, oracle_pullback, oracle_S, oracle_T

rat = st.builds(F, st.integers(-6, 6), st.integers(1, 4))
cubics = st.lists(rat, min_size=10, max_size=10).map(lambda c: TernaryCubic(tuple(c)))
matrices = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=40, deadline=None)
@given(cubics)
def test_invariants_match_einsum_oracle(c):
    s, t = aronhold_S(c), aronhold_T(c)
    assert float(s) == pytest.approx(oracle_S(c), rel=1e-9, abs=1e-9)
    assert float(t) == pytest.approx(oracle_T(c), rel=1e-9, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(cubics, matrices)
def test_pullback_matches_sympy(c, L):
    assert c.pullback([[F(v) for v in row] for row in L]) == oracle_pullback(c, L)


@settings(max_examples=40, deadline=None)
@given(cubics, matrices)
def test_invariants_are_weighted(c, L):
    d = det3(L)
    g = c.pullback([[F(v) for v in row] for row in L])
    assert aronhold_S(g) == d**4 * aronhold_S(c)
    assert aronhold_T(g) == d**6 * aronhold_T(c)


def test_hesse_closed_forms():
    for k in (F(0), F(2), F(-3, 7), F(11, 3)):
        h = TernaryCubic.hesse(k)
        assert aronhold_S(h) == hesse_S(k) == -k / 2 - k**4 / 16
        assert aronhold_T(h) == hesse_T(k)


def test_discriminant_sign_convention():
    # two-component Hesse curves (k > 1) get a positive discriminant
    for k in (F(2), F(5, 2)):
        assert discriminant(hesse_S(k), hesse_T(k)) == (k**3 - 1) ** 3 > 0
    assert discriminant(hesse_S(F(0)), hesse_T(F(0))) < 0


def test_fermat_cubic_J_zero():
    assert modulus_J(aronhold_S(TernaryCubic.hesse(F(0))), aronhold_T(TernaryCubic.hesse(F(0)))) == 0


def test_modulus_quartic_vanishes_on_hesse_J():
    for k in (F(3), F(-2, 5), F(7, 4)):
        J = hesse_J(k)
        acc = 0
        for c in modulus_quartic(J):
            acc = acc * k**3 + c
        assert acc == 0


@pytest.mark.parametrize("k", [1.5, 2.0, 3.7, 25.6, -0.4, 0.5, -4.0])
def test_hesse_parameter_recovers_k(k):
    S, T = hesse_S(F(k)), hesse_T(F(k))
    hp = hesse_parameter(S, T)
    assert hp.k == pytest.approx(k, rel=1e-9)
    # the other candidate is the image under k -> (k+2)/(k-1)
    other = [c for c in hp.candidates if c != hp.k][0]
    assert other == pytest.approx((k + 2) / (k - 1), rel=1e-7)


def test_hesse_parameter_certified_interval():
    hp = hesse_parameter(hesse_S(F(3)), hesse_T(F(3)))
    lo, hi = hp.interval
    assert lo < 3 < hi and hi - lo < 1e-6


def test_hesse_parameter_when_T_vanishes():
    # J = 1 exactly; the candidates are the fixed pair 1 -/+ sqrt 3
    hp = hesse_parameter(F(-1), F(0))
    assert sorted(hp.candidates) == pytest.approx([1 - math.sqrt(3), 1 + math.sqrt(3)])
    assert hesse_S(hp.k) < 0


def test_singular_raises():
    with pytest.raises(CubicError) as exc:
        hesse_parameter(hesse_S(F(1)), hesse_T(F(1)))
    assert exc.value.code == "SINGULAR"


def test_invariants_record_singular():
    rec = invariants(TernaryCubic.hesse(F(1)))
    assert rec.singular and rec.J is None


def test_zero_cubic_rejected():
    zero = GramVelocityPencil.from_matrix_forms([(0, 0, 0)] * 6)
    with pytest.raises(CubicError) as exc:
        determinant_cubic(zero)
    assert exc.value.code == "ZERO_CUBIC"


def test_diagonal_pencil_is_xyz():
    p = GramVelocityPencil.from_matrix_forms([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0), (0, 0, 0), (0, 0, 0)])
    c = determinant_cubic(p)
    assert c.coeffs == (0,) * 9 + (1,)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(rat, min_size=3, max_size=3), min_size=6, max_size=6))
def test_determinant_cubic_matches_numpy(forms):
    p = GramVelocityPencil.from_matrix_forms(forms)
    c = det_of_linear_forms(p.matrix_forms())
    pts = np.random.default_rng(1).standard_normal((5, 3))
    ours = np.array([float(c.to_float()(*pt)) for pt in pts])
    assert np.allclose(ours, oracle_det_cubic_values(p, pts), atol=1e-9)


def test_float_and_exact_invariants_agree():
    c = TernaryCubic(tuple(F(v, 7) for v in (3, -1, 4, 1, -5, 9, 2, -6, 5, 3)))
    e, f = invariants(c), invariants(c.to_float())
    assert float(e.S) == pytest.approx(f.S) and float(e.T) == pytest.approx(f.T)
    if e.k is not None:
        assert e.k == pytest.approx(f.k)


@settings(max_examples=40, deadline=None)
@given(st.builds(F, st.integers(11, 400), st.integers(1, 10)).filter(lambda k: k > 1))
def test_hesse_parameter_round_trip(k0):
    hp = hesse_parameter(aronhold_S(TernaryCubic.hesse(k0)), aronhold_T(TernaryCubic.hesse(k0)))
    assert hp.k == pytest.approx(float(k0), rel=1e-9)
