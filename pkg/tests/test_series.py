import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmschwarz.errors import SingularityError
from harmschwarz.series import PowerSeries

ints = st.lists(st.integers(-20, 20), min_size=1, max_size=12)


def test_geometric_series():
    one = PowerSeries.constant(1.0, order=4)
    z = PowerSeries.variable(order=4)
    s = z / (one - z)
    assert np.allclose(s.coeffs, [0, 1, 1, 1, 1])


def test_integrate_grows_order():
    s = PowerSeries([1, 2, 3]).integrate()
    assert np.allclose(s.coeffs, [0, 1, 1, 1])
    assert s.order == 3


def test_epsilon_series_t_one():
    # z(z + t/2)/(1 + t z/2) with t = 1
    z = PowerSeries.variable(order=5)
    one = PowerSeries.constant(1.0, order=5)
    eps = z * (z + 0.5) / (one + 0.5 * z)
    assert np.allclose(eps.coeffs[:4], [0, 0.5, 0.75, -0.375])


def test_divide_requires_nonzero_constant():
    with pytest.raises(SingularityError):
        PowerSeries([1, 1]) / PowerSeries([0, 1])


def test_compose_requires_zero_constant():
    with pytest.raises(ValueError):
        PowerSeries([1, 1]).compose(PowerSeries([0.5, 1]))


def test_shift_reexpands():
    s = PowerSeries([0, 0, 1], order=2)  # z^2
    t = s.shift(0.5)  # (w + 0.5)^2
    assert np.allclose(t.coeffs, [0.25, 1.0, 1.0])


def test_horner_and_derivative():
    s = PowerSeries([1, 2, 3])
    assert s(2.0) == 17
    assert np.allclose(s.derivative().coeffs[:2], [2, 6])


@settings(max_examples=60, deadline=None)
@given(ints, ints)
def test_multiply_commutes_exactly(a, b):
    x, y = PowerSeries(a, order=10), PowerSeries(b, order=10)
    assert np.array_equal((x * y).coeffs, (y * x).coeffs)


@settings(max_examples=60, deadline=None)
@given(ints, ints, ints)
def test_multiply_associates_exactly(a, b, c):
    x, y, w = (PowerSeries(v, order=10) for v in (a, b, c))
    assert np.array_equal(((x * y) * w).coeffs, (x * (y * w)).coeffs)
