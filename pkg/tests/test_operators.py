import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchy_well import (
    DegenerateInputError,
    DomainError,
    PlainPolynomial,
    PVQuadratureSettings,
    QuadratureError,
    UsageError,
    WeightedPolynomial,
    apply_AD_closed,
    apply_AD_numeric,
    basis_image,
    boundary_value,
    evaluate,
    w_polynomial,
)
from cauchy_well.operators import image_matrix

from oracles import ad_pointwise, image_exact, weighted

coeff_lists = st.lists(st.floats(-3, 3, allow_nan=False), min_size=1, max_size=12)
parities = st.sampled_from(["even", "odd"])


def test_plain_polynomial_trims_and_combines():
    p = PlainPolynomial([1.0, 2.0, 0.0, 0.0])
    assert p.degree == 1
    q = p + PlainPolynomial([0, 0, 3])
    assert q.coeffs.tolist() == [1, 2, 3]
    assert (q - q).is_zero()
    assert (2 * p)(1.0) == 6.0


def test_weight_and_its_odd_partner():
    # classical images: sqrt(1-x^2) -> 1, x sqrt(1-x^2) -> 2x
    assert basis_image("even", 0).coeffs.tolist() == [1.0]
    assert basis_image("odd", 0).coeffs.tolist() == [0.0, 2.0]


def test_degree_two_image():
    img = apply_AD_closed(WeightedPolynomial("even", [1.0, -0.4]))
    np.testing.assert_allclose(img.coeffs, [1.2, 0.0, -1.2], atol=1e-15)
    assert abs(boundary_value(img)) < 1e-15


@given(coeff_lists, parities)
def test_closed_form_matches_exact_rationals(alphas, parity):
    exact = image_exact(alphas, parity == "odd")
    got = apply_AD_closed(WeightedPolynomial(parity, alphas))
    dense = np.zeros(2 * len(alphas) + (parity == "odd"))
    dense[(parity == "odd")::2] = [float(v) for v in exact]
    np.testing.assert_allclose(np.pad(got.coeffs, (0, dense.size - got.coeffs.size)), dense,
                               rtol=1e-12, atol=1e-12 * max(1.0, np.abs(dense).max()))


@given(coeff_lists, parities)
def test_image_keeps_parity_and_degree(alphas, parity):
    psi = WeightedPolynomial(parity, alphas)
    img = apply_AD_closed(psi)
    off = 1 if parity == "odd" else 0
    assert not np.any(img.coeffs[1 - off :: 2])
    if alphas[-1] != 0:
        assert img.degree == psi.degree


@given(coeff_lists, coeff_lists, st.floats(-4, 4), parities)
def test_linearity(a, b, s, parity):
    n = max(len(a), len(b))
    a = np.pad(a, (0, n - len(a)))
    b = np.pad(b, (0, n - len(b)))
    lhs = apply_AD_closed(WeightedPolynomial(parity, a + s * b))
    rhs = apply_AD_closed(WeightedPolynomial(parity, a)) + s * apply_AD_closed(WeightedPolynomial(parity, b))
    x = np.linspace(-1, 1, 7)
    np.testing.assert_allclose(lhs(x), rhs(x), atol=1e-10 * (1 + np.abs(a).sum() + abs(s) * np.abs(b).sum()))


def test_image_matrix_is_upper_triangular():
    m = image_matrix("even", 6)
    assert np.allclose(np.tril(m, -1), 0)
    assert np.allclose(np.diag(m), 2 * np.arange(7) + 1)


def test_w_polynomial_sign_convention():
    assert w_polynomial("even", 0).coeffs.tolist() == [1.0]
    np.testing.assert_allclose(w_polynomial("even", 1).coeffs, [0.5, 0, -3])
    np.testing.assert_allclose(w_polynomial("even", 2).coeffs, -basis_image("even", 2).coeffs)
    np.testing.assert_allclose(w_polynomial("odd", 2).coeffs, basis_image("odd", 2).coeffs)


def test_evaluate_vanishes_outside_interval():
    psi = WeightedPolynomial("odd", [1.0, 2.0], norm_c=3.0)
    assert evaluate(psi, 1.0) == 0.0 and evaluate(psi, -2.5) == 0.0
    assert psi(0.5) == pytest.approx(3 * np.sqrt(0.75) * (0.5 + 2 * 0.125))


def test_empty_coefficients_rejected():
    with pytest.raises(DegenerateInputError):
        apply_AD_closed(WeightedPolynomial("even", []))


@pytest.mark.parametrize("alphas,parity,x", [
    ([1.0, -0.4, 0.3], "even", 0.3),
    ([0.5, 2.0], "odd", -0.97),
    ([0.2, -1.0, 0.7, 0.1], "odd", 0.999),
    ([1.0, 0.0, 0.0, 0.0, -2.0], "even", -0.6),
])
def test_closed_form_against_mpmath_oracle(alphas, parity, x):
    f, df = weighted(alphas, parity == "odd")
    want = ad_pointwise(f, df, x)
    assert apply_AD_closed(WeightedPolynomial(parity, alphas))(x) == pytest.approx(want, abs=1e-10)


def test_quadrature_on_weight():
    psi = WeightedPolynomial("even", [1.0])
    for x in (-0.9, 0.0, 0.5, 0.99):
        assert apply_AD_numeric(psi, x) == pytest.approx(1.0, abs=1e-11)


def test_quadrature_on_smooth_nonpolynomial():
    def f_mp(t):
        import mpmath as mp

        return mp.sqrt(1 - t * t) * mp.cos(t)

    def df_mp(t):
        import mpmath as mp

        return -t / mp.sqrt(1 - t * t) * mp.cos(t) - mp.sqrt(1 - t * t) * mp.sin(t)

    def f(t):
        t = np.clip(t, -1, 1)
        return np.sqrt(1 - t * t) * np.cos(t)

    for x in (-0.7, 0.2, 0.95):
        assert apply_AD_numeric(f, x) == pytest.approx(ad_pointwise(f_mp, df_mp, x), abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=1, max_size=8), parities, st.floats(-0.98, 0.98))
def test_quadrature_agrees_with_closed_form(alphas, parity, x):
    psi = WeightedPolynomial(parity, alphas)
    scale = 1 + np.abs(alphas).sum()
    assert apply_AD_numeric(psi, x) == pytest.approx(apply_AD_closed(psi)(x), abs=1e-8 * scale)


def test_quadrature_domain_and_settings():
    psi = WeightedPolynomial("even", [1.0])
    with pytest.raises(DomainError):
        apply_AD_numeric(psi, 1.0)
    with pytest.raises(UsageError):
        PVQuadratureSettings(epsilon_schedule=(0.1, 0.2))
    with pytest.raises(QuadratureError):
        apply_AD_numeric(lambda t: np.sqrt(np.abs(np.sin(40 / (1.0001 - t)))), 0.5,
                         PVQuadratureSettings(max_depth=1))
