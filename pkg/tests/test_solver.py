import itertools
import math

import numpy as np
import pytest

from qheat.constants.bath_kind import BathKind
from qheat.constants.bath_side import BathSide
from qheat.core.exceptions import NonUniqueSteadyStateError, InvalidParameterError
from qheat.core.solver import (channel_rates, steady_populations, rate_matrix, null_space_populations,
                               heat_current, heat_current_balance)
from qheat.models import eigensystem, gibbs_populations
from qheat.schemas.bath import BathSpec
from qheat.schemas.system import SystemParams

TEMPERATURES = (0.1, 0.3, 0.5, 1.0, 3.0)
GAMMA_RATIOS = (1.0, 5.0, 20.0, 0.2, 0.05)
KINDS = (BathKind.BOSON, BathKind.SPIN)
EQUILIBRIUM_GRID = list(itertools.product(TEMPERATURES, GAMMA_RATIOS, KINDS))


def baths(kind, t_left, t_right, gamma_left=1.0, gamma_right=1.0, kind_right=None):
    return (BathSpec(kind=kind, gamma=gamma_left, temperature=t_left),
            BathSpec(kind=kind_right or kind, gamma=gamma_right, temperature=t_right))


@pytest.mark.parametrize("temperature, ratio, kind", EQUILIBRIUM_GRID)
def test_equilibrium_populations_are_gibbs(default_params, temperature, ratio, kind):
    left, right = baths(kind, temperature, temperature, gamma_left=ratio)

    pops = steady_populations(channel_rates(default_params, left, right))
    expected = gibbs_populations(eigensystem(default_params), temperature)

    assert np.max(np.abs(np.subtract(pops.p, expected.p))) < 1e-12


@pytest.mark.parametrize("temperature, ratio, kind", EQUILIBRIUM_GRID)
def test_no_current_at_equilibrium(default_params, temperature, ratio, kind):
    left, right = baths(kind, temperature, temperature, gamma_left=ratio)

    current = heat_current(default_params, channel_rates(default_params, left, right))

    assert abs(current) < 1e-14


def test_equilibrium_is_gibbs_for_mixed_reservoirs():
    params = SystemParams(epsilon=0.3, kappa=0.9)
    left, right = baths(BathKind.BOSON, 0.7, 0.7, gamma_left=2.0, gamma_right=0.1, kind_right=BathKind.SPIN)

    rates = channel_rates(params, left, right)

    np.testing.assert_allclose(steady_populations(rates).p,
                               gibbs_populations(eigensystem(params), 0.7).p, atol=1e-12)
    assert abs(heat_current(params, rates)) < 1e-14


def test_closed_form_matches_null_space(random_point):
    for _ in range(1000):
        params, left, right = random_point()
        rates = channel_rates(params, left, right)

        closed = steady_populations(rates)
        kernel = null_space_populations(rate_matrix(rates))

        assert np.max(np.abs(np.subtract(closed.p, kernel.p))) < 1e-12


def test_closed_form_is_stationary(random_point):
    params, left, right = random_point()
    rates = channel_rates(params, left, right)

    generator = rate_matrix(rates)
    derivative = generator @ np.array(steady_populations(rates).p)

    np.testing.assert_allclose(derivative, 0.0, atol=1e-13 * np.abs(generator).max())


def test_rate_matrix_conserves_probability(random_point):
    params, left, right = random_point()

    generator = rate_matrix(channel_rates(params, left, right))

    np.testing.assert_allclose(generator.sum(axis=0), 0.0, atol=1e-13 * np.abs(generator).max())
    assert generator[0, 3] == 0.0 and generator[1, 2] == 0.0


def test_second_law(random_point):
    for _ in range(1000):
        params, left, right = random_point()

        current = heat_current(params, channel_rates(params, left, right))

        assert np.sign(current) == np.sign(left.temperature - right.temperature)


def test_heat_current_value(default_params):
    left, right = baths(BathKind.BOSON, 1.5, 0.5)

    current = heat_current(default_params, channel_rates(default_params, left, right))

    # both channels by hand: 0.8 (n_L - n_R) / (2 (2 n_L + 2 n_R + 2)) plus the 1.2 channel
    n = {(w, t): 1 / np.expm1(w / t) for w in (0.8, 1.2) for t in (1.5, 0.5)}
    expected = sum(w * (n[w, 1.5] - n[w, 0.5]) / (2 * (2 * n[w, 1.5] + 2 * n[w, 0.5] + 2)) for w in (0.8, 1.2))
    assert current == pytest.approx(expected, abs=1e-9)
    assert current == pytest.approx(0.19944, abs=1e-4)


def test_balance_form_matches_two_channel_current(random_point):
    for _ in range(50):
        params, left, right = random_point()
        rates = channel_rates(params, left, right)
        pops = steady_populations(rates)

        j_left = heat_current_balance(params, rates, pops, BathSide.LEFT)
        j_right = heat_current_balance(params, rates, pops, BathSide.RIGHT)

        assert j_left == pytest.approx(heat_current(params, rates), rel=1e-9, abs=1e-15)
        assert j_right == pytest.approx(-j_left, rel=1e-9, abs=1e-15)


def test_current_reverses_with_swapped_symmetric_baths(default_params):
    forward = heat_current(default_params, channel_rates(default_params, *baths(BathKind.SPIN, 2.0, 0.4)))
    reverse = heat_current(default_params, channel_rates(default_params, *baths(BathKind.SPIN, 0.4, 2.0)))

    assert forward == pytest.approx(-reverse, rel=1e-12)


def test_both_baths_at_zero_temperature_relax_to_ground(default_params):
    rates = channel_rates(default_params, *baths(BathKind.BOSON, 0.0, 0.0))

    assert steady_populations(rates).p == (1.0, 0.0, 0.0, 0.0)
    assert heat_current(default_params, rates) == 0.0


def test_ground_state_two_when_epsilon_exceeds_kappa():
    params = SystemParams(epsilon=1.0, kappa=0.2)

    pops = steady_populations(channel_rates(params, *baths(BathKind.BOSON, 0.0, 0.0)))

    assert pops.p == (0.0, 1.0, 0.0, 0.0)


def test_decoupled_baths_give_non_unique_steady_state(default_params):
    rates = channel_rates(default_params, *baths(BathKind.BOSON, 1.0, 0.5, gamma_left=0.0, gamma_right=0.0))

    with pytest.raises(NonUniqueSteadyStateError):
        steady_populations(rates)
    with pytest.raises(NonUniqueSteadyStateError):
        null_space_populations(rate_matrix(rates))


def test_null_space_rejects_wrong_shape():
    with pytest.raises(InvalidParameterError):
        null_space_populations(np.zeros((3, 3)))


def scaled(bath, factor):
    return BathSpec(kind=bath.kind, gamma=bath.gamma * factor, temperature=bath.temperature)


def test_common_coupling_scale_leaves_populations_and_scales_current(random_point):
    for _ in range(200):
        params, left, right = random_point()
        rates = channel_rates(params, left, right)
        rescaled = channel_rates(params, scaled(left, 3.7), scaled(right, 3.7))

        np.testing.assert_allclose(steady_populations(rescaled).p, steady_populations(rates).p, atol=1e-12)
        assert heat_current(params, rescaled) == pytest.approx(3.7 * heat_current(params, rates), rel=1e-9)


def test_swapping_asymmetric_baths_reverses_current(random_point):
    for _ in range(200):
        params, left, right = random_point()

        forward = heat_current(params, channel_rates(params, left, right))
        reverse = heat_current(params, channel_rates(params, right, left))

        assert reverse == pytest.approx(-forward, rel=1e-12, abs=1e-300)


def test_very_hot_equal_baths_give_uniform_populations(default_params):
    rates = channel_rates(default_params, *baths(BathKind.BOSON, 1e200, 1e200))

    np.testing.assert_allclose(steady_populations(rates).p, (0.25, 0.25, 0.25, 0.25), atol=1e-9)
    assert abs(heat_current(default_params, rates)) < 1e-9


def test_very_hot_left_bath_keeps_current_finite(default_params):
    rates = channel_rates(default_params, *baths(BathKind.BOSON, 1e200, 0.5))

    pops = steady_populations(rates)
    current = heat_current(default_params, rates)

    assert all(math.isfinite(p) for p in pops.p)
    assert math.isfinite(current) and current > 0


def test_overflowing_rates_are_rejected(default_params):
    with pytest.raises(InvalidParameterError) as ex:
        channel_rates(default_params, *baths(BathKind.BOSON, 1e307, 1e307, gamma_left=10.0, gamma_right=10.0))
    assert ex.value.exit_code == 2
