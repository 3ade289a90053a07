import math

import numpy as np
import pytest
from pydantic import ValidationError

from qheat.constants.bath_kind import BathKind
from qheat.core.exceptions import InvalidParameterError
from qheat.models import occupation, rate_pair
from qheat.schemas.bath import BathSpec


@pytest.mark.parametrize("omega, temperature, expected", [
    (0.8, 1.5, 1.41923),
    (0.8, 0.5, 0.25297),
    (1.2, 1.5, 0.81597),
    (1.2, 0.5, 0.099769),
])
def test_bose_einstein_occupation(omega, temperature, expected):
    assert occupation(BathKind.BOSON, omega, temperature) == pytest.approx(expected, rel=1e-4)


def test_spin_occupation_is_fermi_like():
    n = occupation(BathKind.SPIN, 0.8, 1.5)

    assert n == pytest.approx(1 / (math.exp(0.8 / 1.5) + 1))
    assert 0 < n < 0.5


@pytest.mark.parametrize("kind", [BathKind.BOSON, BathKind.SPIN])
def test_occupation_vanishes_at_zero_temperature_and_overflow(kind):
    assert occupation(kind, 1.0, 0.0) == 0.0
    assert occupation(kind, 1.0, 1e-3) == 0.0


@pytest.mark.parametrize("omega", [0.0, -0.3])
def test_non_positive_gap_is_rejected(omega):
    with pytest.raises(InvalidParameterError) as ex:
        occupation(BathKind.BOSON, omega, 1.0)
    assert ex.value.exit_code == 2


@pytest.mark.parametrize("kind", [BathKind.BOSON, BathKind.SPIN])
@pytest.mark.parametrize("omega, temperature", [(0.8, 1.5), (1.2, 0.25), (0.05, 5.0), (3.0, 0.3)])
def test_detailed_balance(kind, omega, temperature):
    down, up = rate_pair(BathSpec(kind=kind, gamma=2.5, temperature=temperature), omega)

    assert down / up == pytest.approx(math.exp(omega / temperature), rel=1e-12)


def test_boson_rates_are_gamma_n_plus_one_and_gamma_n():
    down, up = rate_pair(BathSpec(kind=BathKind.BOSON, gamma=2.0, temperature=1.5), 0.8)
    n = 1 / math.expm1(0.8 / 1.5)

    assert down == pytest.approx(2.0 * (n + 1), rel=1e-12)
    assert up == pytest.approx(2.0 * n, rel=1e-12)
    assert n == pytest.approx(1.41923, rel=1e-5)


def test_spin_rates_sum_to_gamma():
    down, up = rate_pair(BathSpec(kind=BathKind.SPIN, gamma=3.0, temperature=0.7), 1.2)

    assert down + up == pytest.approx(3.0)
    assert down > up


@pytest.mark.parametrize("kind", [BathKind.BOSON, BathKind.SPIN])
def test_zero_temperature_bath_only_relaxes(kind):
    down, up = rate_pair(BathSpec(kind=kind, gamma=1.5, temperature=0.0), 1.0)

    assert (down, up) == (1.5, 0.0)


def test_negative_temperature_fails_validation():
    with pytest.raises(ValidationError):
        BathSpec(kind=BathKind.BOSON, gamma=1.0, temperature=-0.1)


@pytest.mark.parametrize("omega", [0.05, 0.8, 1.2, 3.0])
@pytest.mark.parametrize("temperature", [0.1, 1.0, 10.0])
def test_boson_relaxation_exceeds_excitation_by_gamma(omega, temperature):
    down, up = rate_pair(BathSpec(kind=BathKind.BOSON, gamma=1.7, temperature=temperature), omega)

    assert down - up == pytest.approx(1.7, rel=1e-9)


@pytest.mark.parametrize("kind", [BathKind.BOSON, BathKind.SPIN])
@pytest.mark.parametrize("omega", [0.05, 0.8, 3.0])
def test_excitation_rate_grows_with_temperature(kind, omega):
    ups = [rate_pair(BathSpec(kind=kind, gamma=1.0, temperature=float(t)), omega)[1]
           for t in np.linspace(0.0, 10.0, 200)]

    assert ups[0] == 0.0
    assert np.all(np.diff(ups) >= -1e-15)


@pytest.mark.parametrize("temperature", [0.0, 0.05, 0.7, 3.0, 1e6])
def test_spin_rates_straddle_half_gamma(temperature):
    down, up = rate_pair(BathSpec(kind=BathKind.SPIN, gamma=2.4, temperature=temperature), 1.2)

    assert up <= 1.2 <= down


def test_spin_occupation_saturates_at_one_half():
    assert occupation(BathKind.SPIN, 1.0, 1e12) == pytest.approx(0.5, abs=1e-12)
    assert occupation(BathKind.SPIN, 1.0, 1e3) < 0.5
