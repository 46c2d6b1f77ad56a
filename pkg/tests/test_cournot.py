import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fraccournot.cournot import (
    DuopolyParams,
    admissibility,
    characteristic_roots,
    equilibria,
    jacobian_at,
    marginal_profit,
    price,
    profit,
    residual,
    rhs,
    tr_det_at_e4,
)

positive = st.floats(min_value=0.05, max_value=5.0, allow_nan=False)
param_sets = st.builds(DuopolyParams, positive, positive, positive, positive, positive, positive)


def fd_jacobian(q, p, h=1e-6):
    J = np.empty((2, 2))
    for k in range(2):
        e = np.zeros(2)
        e[k] = h
        J[:, k] = (rhs(q + e, p) - rhs(q - e, p)) / (2 * h)
    return J


@pytest.mark.parametrize("field", ["alpha1", "alpha2", "b", "d", "c1", "c2"])
@pytest.mark.parametrize("value", [0.0, -1.0, float("nan"), float("inf")])
def test_params_must_be_positive(field, value):
    with pytest.raises(ValueError):
        DuopolyParams(**{field: value})


def test_price(params):
    assert price(0, 0, params) == 6
    assert price(0.4836, 0.4726, params) == pytest.approx(2.0796, abs=1e-4)
    assert price(1, 1, DuopolyParams(b=6, d=3)) == 0


def test_price_not_clamped(params):
    assert price(2, 2, params) < 0


def test_profit(params):
    assert profit(0, 0.7, 1, params) == 0
    expected = (6 - 4.1 * (0.4836 + 0.4726)) * 0.4836 - 0.5 * 0.2 * 0.4836**2
    assert profit(0.4836, 0.4726, 1, params) == pytest.approx(expected, rel=1e-14)
    assert profit(0.4836, 0.4726, 1, params) == pytest.approx(0.98232, abs=5e-5)


def test_profit_symmetry():
    p = DuopolyParams(alpha1=0.3, alpha2=0.9, c1=0.4, c2=0.4)
    assert profit(0.25, 0.25, 1, p) == profit(0.25, 0.25, 2, p)


def test_bad_firm_index(params):
    with pytest.raises(ValueError):
        profit(0.1, 0.1, 3, params)


def test_marginal_profit(params):
    assert marginal_profit(0, 0, 1, params) == 6
    assert marginal_profit(0.3, 0.3, 1, params) == pytest.approx(2.25, abs=1e-14)
    e4 = equilibria(params).e4
    assert marginal_profit(*e4, 1, params) == pytest.approx(0, abs=1e-14)
    assert marginal_profit(*e4, 2, params) == pytest.approx(0, abs=1e-14)


@given(param_sets, st.floats(0, 2), st.floats(0, 2), st.sampled_from([1, 2]))
def test_marginal_profit_is_profit_derivative(p, q1, q2, i):
    h = 1e-6
    if i == 1:
        fd = (profit(q1 + h, q2, 1, p) - profit(q1 - h, q2, 1, p)) / (2 * h)
    else:
        fd = (profit(q1, q2 + h, 2, p) - profit(q1, q2 - h, 2, p)) / (2 * h)
    assert marginal_profit(q1, q2, i, p) == pytest.approx(fd, abs=1e-6)


def test_rhs(params):
    assert rhs((0, 0), params).tolist() == [0, 0]
    # Φ1 = 6 - 8.4*0.3 - 4.1*0.3 = 2.25, Φ2 = 6 - 8.5*0.3 - 4.1*0.3 = 2.22
    np.testing.assert_allclose(rhs((0.3, 0.3), params), [0.45 * 0.3 * 2.25, 0.12 * 0.3 * 2.22], atol=1e-14)
    np.testing.assert_allclose(rhs((0.3, 0.3), params), [0.30375, 0.07992], atol=1e-14)
    np.testing.assert_allclose(rhs(equilibria(params).e4, params), [0, 0], atol=1e-12)


def test_equilibria(params):
    eq = equilibria(params)
    assert eq.e1 == (0.0, 0.0)
    assert eq.e2 == pytest.approx((0, 6 / 8.5))
    assert eq.e2[1] == pytest.approx(0.70588, abs=1e-5)
    assert eq.e3 == pytest.approx((6 / 8.4, 0))
    assert eq.e4 == pytest.approx((0.4836, 0.4726), abs=5e-5)
    assert list(eq.points()) == ["E1", "E2", "E3", "E4"]


def test_symmetric_interior_equilibrium():
    eq = equilibria(DuopolyParams(alpha1=0.2, alpha2=0.7, c1=0.5, c2=0.5))
    assert eq.e4[0] == eq.e4[1]


@given(param_sets)
def test_equilibrium_residuals(p):
    for q in equilibria(p).points().values():
        assert residual(q, p) < 1e-10


@given(param_sets)
def test_closed_forms_match_matrix(p):
    tr, det = tr_det_at_e4(p)
    J = jacobian_at(equilibria(p).e4, p)
    assert tr == pytest.approx(J.tr, rel=1e-10)
    assert det == pytest.approx(J.det, rel=1e-10)


@given(param_sets)
def test_sign_structure_at_e4(p):
    tr, det = tr_det_at_e4(p)
    assert tr < 0 < det


@given(param_sets, st.floats(-1, 2), st.floats(-1, 2))
def test_jacobian_gradient_check(p, q1, q2):
    q = np.array([q1, q2])
    np.testing.assert_allclose(jacobian_at(q, p).matrix, fd_jacobian(q, p), rtol=0, atol=1e-5)


def test_jacobian_summary(params):
    e4 = equilibria(params).e4
    J = jacobian_at(e4, params)
    assert J.tr == pytest.approx(-2.3101, abs=1e-4)
    # exact value 0.6737586; the published 0.67378 is 2.1e-5 away
    assert J.det == pytest.approx(0.67378, abs=5e-5)
    assert J.det == pytest.approx(0.6737586, abs=1e-7)
    assert J.tr == J.matrix[0, 0] + J.matrix[1, 1]
    for lam in J.eigenvalues:
        assert abs(lam * lam - J.tr * lam + J.det) < 1e-10
    np.testing.assert_allclose(sorted(np.linalg.eigvals(J.matrix)), sorted(l.real for l in J.eigenvalues))
    np.testing.assert_allclose(J.matrix, fd_jacobian(np.array(e4), params), atol=1e-6)


def test_jacobian_at_origin(params):
    np.testing.assert_allclose(jacobian_at((0, 0), params).matrix, np.diag([2.7, 0.72]), atol=1e-15)


def test_equal_speeds_closed_form():
    a, b, d, c1, c2 = 0.3, 6.0, 4.1, 0.2, 0.3
    p = DuopolyParams(alpha1=a, alpha2=a, b=b, d=d, c1=c1, c2=c2)
    denom = c1 * c2 + 2 * c1 * d + 2 * c2 * d + 3 * d**2
    expected = -a * b * (2 * d**2 * 2 + 3 * d * (c1 + c2) + 2 * c1 * c2) / denom
    assert tr_det_at_e4(p)[0] == pytest.approx(expected, rel=1e-13)
    assert tr_det_at_e4(p)[0] == pytest.approx(jacobian_at(equilibria(p).e4, p).tr, rel=1e-12)


def test_small_cost_limit():
    eps = 1e-9
    p = DuopolyParams(alpha1=0.45, alpha2=0.12, b=6, d=4.1, c1=eps, c2=eps)
    det = tr_det_at_e4(p)[1]
    assert det == pytest.approx(0.45 * 0.12 * 36 / 3, rel=1e-8)
    assert det == pytest.approx(jacobian_at(equilibria(p).e4, p).det, rel=1e-10)


def test_nash_property(params):
    q1, q2 = equilibria(params).e4
    base = profit(q1, q2, 1, params)
    for delta in (1e-3, -1e-3, 1e-2, -1e-2):
        assert profit(q1 + delta, q2, 1, params) < base
        assert profit(q1, q2 + delta, 2, params) < profit(q1, q2, 2, params)


@pytest.mark.parametrize(
    "tr,det", [(-3.0, 2.0), (0.0, 0.25), (2.0, 5.0), (1e-8, -1.0), (-2.3101, 0.67378), (4.0, 4.0)]
)
def test_characteristic_roots(tr, det):
    for lam in characteristic_roots(tr, det):
        assert abs(lam * lam - tr * lam + det) < 1e-10


def test_admissibility(params):
    assert admissibility([[0.3, 0.3], [0.5, 0.4]], params)
    assert not admissibility([[0.3, 0.3], [-0.1, 0.4]], params)
    assert not admissibility([[1.0, 1.0]], params)  # price 6 - 8.2 < 0
