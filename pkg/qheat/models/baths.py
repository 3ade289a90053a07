"""Golden-rule rates of flat-spectrum boson and spin reservoirs."""
import logging
from typing import Tuple

import numpy as np
from scipy.special import expit

from qheat.constants.bath_kind import BathKind
from qheat.core.config import OCCUPATION_OVERFLOW_EXPONENT
from qheat.core.exceptions import InvalidParameterError
from qheat.schemas.bath import BathSpec


def _check_arguments(omega: float, temperature: float) -> None:
    if not omega > 0:
        logging.error(f"non-positive transition frequency {omega}")
        raise InvalidParameterError(detail=f"transition frequency must be positive, got {omega}")
    if not temperature >= 0:
        raise InvalidParameterError(detail=f"temperature must be >= 0, got {temperature}")


def occupation(kind: BathKind, omega: float, temperature: float) -> float:
    """Bose-Einstein 1/(e^{w/T} - 1) or spin 1/(e^{w/T} + 1) occupation at w > 0.

    Both vanish at T = 0 and beyond the overflow exponent.
    """
    _check_arguments(omega, temperature)
    if temperature == 0:
        return 0.0

    x = omega / temperature
    if x > OCCUPATION_OVERFLOW_EXPONENT:
        return 0.0
    if kind is BathKind.BOSON:
        return float(1.0 / np.expm1(x))
    return float(expit(-x))


def _spin_relaxation_factor(omega: float, temperature: float) -> float:
    # n_S(-w) = 1/(e^{-w/T} + 1), tends to 1 at T = 0
    if temperature == 0:
        return 1.0
    x = omega / temperature
    if x > OCCUPATION_OVERFLOW_EXPONENT:
        return 1.0
    return float(expit(x))


def rate_pair(bath: BathSpec, omega: float) -> Tuple[float, float]:
    """Relaxation and excitation rate ``(down, up)`` across a gap ``omega``.

    down/up = e^{w/T} for both bath kinds.
    """
    n = occupation(bath.kind, omega, bath.temperature)
    if bath.kind is BathKind.BOSON:
        return bath.gamma * (n + 1.0), bath.gamma * n
    return bath.gamma * _spin_relaxation_factor(omega, bath.temperature), bath.gamma * n
