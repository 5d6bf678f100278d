"""Unit-Tests fuer 2F1 (gegen mpmath) und die Fundamentalsysteme der Profilgleichungen."""

from __future__ import annotations

import mpmath
import numpy as np
import pytest
from pydantic import ValidationError

from special_functions import hypergeometric
from special_functions import (
    AccuracyLossError,
    Hyp2F1Params,
    HypergeometricError,
    ParameterPoleError,
    fundamental_solutions,
    g_operator,
    h_operator,
    hyp2f1,
    hyp2f1_values,
    liouville_constant,
    terminating_coefficients,
    termination_degree,
    u3_direct,
    wronskian,
)

_NON_TERMINATING = [
    (0.5, 1.5, 2.5),
    (1.3, 2.1, 3.7),
    (1.5, 4.0, 3.5),
    (2.5, 3.0, 4.5),
    (-0.5, 0.75, 1.25),
]
_X = np.array([0.0, 0.05, 0.3, 0.5, 0.51, 0.7, 0.9, 0.97])


def _reference(a: float, b: float, c: float, x: float) -> float:
    with mpmath.workdps(30):
        return float(mpmath.hyp2f1(a, b, c, x))


@pytest.mark.parametrize("a,b,c", _NON_TERMINATING)
def test_hyp2f1_matches_mpmath(a: float, b: float, c: float) -> None:
    values = hyp2f1_values(a, b, c, _X)
    reference = np.array([_reference(a, b, c, float(x)) for x in _X])
    assert np.allclose(values, reference, rtol=1e-9, atol=0.0)


@pytest.mark.parametrize("a,b,c", _NON_TERMINATING[:3])
def test_hyp2f1_derivative_matches_mpmath(a: float, b: float, c: float) -> None:
    x = np.array([0.2, 0.6, 0.85])
    values = hyp2f1_values(a, b, c, x, derivative=1)
    reference = np.array([a * b / c * _reference(a + 1, b + 1, c + 1, float(t)) for t in x])
    assert np.allclose(values, reference, rtol=1e-9)


def test_hyp2f1_scalar_wrapper() -> None:
    assert hyp2f1(Hyp2F1Params(a=0.5, b=1.5, c=2.5, x=0.4)) == pytest.approx(_reference(0.5, 1.5, 2.5, 0.4), rel=1e-12)
    with pytest.raises(ValidationError):
        Hyp2F1Params(a=1.0, b=1.0, c=2.0, x=1.0)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_terminating_u1_factor_at_m1(n: int) -> None:
    x = np.linspace(0.0, 0.99, 11)
    assert np.allclose(hyp2f1_values(-1.0, n / 2 - 1.0, 1.0 - n / 2, x), 1.0 + x, atol=1e-15)


def test_terminating_polynomials_have_positive_coefficients() -> None:
    for n in range(4, 11):
        for m in range(1, (n + 1) // 2):
            if 2 * m >= n:
                continue
            coeffs = terminating_coefficients(-m, n / 2 - m, 1.0 - n / 2)
            assert len(coeffs) == m + 1
            assert all(value > 0.0 for value in coeffs)


def test_pole_detection() -> None:
    assert termination_degree(-3.0, 0.5) == 3
    assert termination_degree(0.5, 1.5) is None
    with pytest.raises(ParameterPoleError):
        hyp2f1_values(1.0, 2.0, -1.0, 0.3)
    with pytest.raises(ParameterPoleError):
        hyp2f1_values(-3.0, 1.0, -1.0, 0.3)
    assert hyp2f1_values(-1.0, 1.0, -2.0, 0.3) == pytest.approx(1.15)


def test_domain_errors() -> None:
    with pytest.raises(HypergeometricError):
        hyp2f1_values(0.5, 1.5, 2.5, 1.0)
    with pytest.raises(HypergeometricError):
        hyp2f1_values(0.5, 1.5, 2.5, np.array([0.3]), one_minus_x=np.array([0.0]))


def _reference_near_one(a: float, b: float, c: float, tail: float) -> float:
    with mpmath.workdps(40):
        return float(mpmath.hyp2f1(a, b, c, 1 - mpmath.mpf(tail)))


@pytest.mark.parametrize("a,b,c", [*_NON_TERMINATING, (1.0, -1.5, 3.5)])
def test_hyp2f1_near_one_uses_only_the_tail(a: float, b: float, c: float) -> None:
    tail = np.array([0.3, 1e-3, 1e-9, np.exp(-50.0), 4.3e-19])
    values = hyp2f1_values(a, b, c, 1.0 - tail, one_minus_x=tail)
    reference = np.array([_reference_near_one(a, b, c, float(t)) for t in tail])
    assert np.allclose(values, reference, rtol=1e-9, atol=0.0)


def test_hyp2f1_integer_gap_at_moderate_argument() -> None:
    assert float(hyp2f1_values(1.0, -1.5, 3.5, 0.9)) == pytest.approx(_reference(1.0, -1.5, 3.5, 0.9), rel=1e-10)


def test_series_failure_is_an_accuracy_loss(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(hypergeometric, "MAX_SERIES_TERMS", 3)
    with pytest.raises(AccuracyLossError):
        hyp2f1_values(0.5, 1.5, 2.5, 0.4)


@pytest.mark.parametrize("n,m", [(5, 1), (7, 1), (7, 2), (9, 3)])
def test_fundamental_solutions_near_one_for_odd_dimension(n: int, m: int) -> None:
    tail = np.array([0.4, 0.1, 1e-4, 1e-12, 4.3e-19])
    sol = fundamental_solutions(n, m, 1.0 - tail, one_minus_x=tail)
    u2 = np.array([_reference_near_one(n / 2 - m, n - m, n / 2 + 1, float(t)) for t in tail])
    u4 = np.array([_reference_near_one(m, m - n / 2, 1 + n / 2, float(t)) for t in tail])
    np.testing.assert_allclose(sol.u2, u2, rtol=1e-9)
    np.testing.assert_allclose(sol.u4, u4, rtol=1e-9)
    for field in (sol.u1, sol.u3, sol.du2, sol.du4, sol.d2u2, sol.d2u4):
        assert np.all(np.isfinite(field))


@pytest.mark.parametrize("n,m", [(4, 1), (5, 1), (6, 2), (7, 2), (7, 3), (9, 2)])
def test_fundamental_solutions_solve_their_equations(n: int, m: int) -> None:
    x = np.linspace(0.05, 0.95, 19)
    sol = fundamental_solutions(n, m, x)
    for value, first, second, operator in (
        (sol.u1, sol.du1, sol.d2u1, h_operator),
        (sol.u2, sol.du2, sol.d2u2, h_operator),
        (sol.u3, sol.du3, sol.d2u3, g_operator),
        (sol.u4, sol.du4, sol.d2u4, g_operator),
    ):
        residual = np.abs(operator(n, m, x, value, first, second))
        scale = np.abs(x * (1.0 - x) * second) + np.abs(first) + np.abs(value)
        assert np.max(residual / scale) < 1e-9


@pytest.mark.parametrize("n,m", [(5, 1), (5, 2), (7, 1), (7, 3), (9, 4)])
def test_u3_direct_agrees_with_factored_form(n: int, m: int) -> None:
    x = np.linspace(0.05, 0.9, 10)
    assert np.allclose(u3_direct(n, m, x), fundamental_solutions(n, m, x).u3, rtol=1e-10)


def test_u3_direct_rejects_even_dimension() -> None:
    with pytest.raises(HypergeometricError):
        u3_direct(6, 1, 0.3)


@pytest.mark.parametrize("n,m", [(4, 1), (5, 1), (6, 2), (7, 2), (8, 3)])
def test_liouville_constant_and_wronskian(n: int, m: int) -> None:
    calibrated, exact = liouville_constant(n, m)
    assert exact == -n / 2
    assert calibrated == pytest.approx(exact, rel=1e-8)
    values = wronskian(n, m, np.linspace(0.05, 0.95, 10))
    assert np.allclose(values.direct, values.liouville, rtol=1e-8)


@pytest.mark.parametrize("n,m", [(4, 2), (5, 0), (3, 2)])
def test_fundamental_solutions_reject_other_cases(n: int, m: int) -> None:
    with pytest.raises(HypergeometricError):
        fundamental_solutions(n, m, 0.5)
