"""Temperature at which the equilibrium concurrence first reaches zero."""
import logging

import numpy as np
from scipy.optimize import bisect

from qheat.constants.bath_kind import BathKind
from qheat.core.config import (SUDDEN_DEATH_SCAN_POINTS, SUDDEN_DEATH_T_MIN, SUDDEN_DEATH_T_MAX_FACTOR,
                               SUDDEN_DEATH_XTOL)
from qheat.core.correlations import concurrence_margin
from qheat.core.exceptions import SuddenDeathNotFoundError, InvalidParameterError
from qheat.core.solver import channel_rates, steady_populations
from qheat.schemas.bath import BathSpec
from qheat.schemas.system import SystemParams


def sudden_death_temperature(params: SystemParams, kind: BathKind, gamma_left: float, gamma_right: float,
                             kind_right: BathKind | None = None,
                             t_min: float = SUDDEN_DEATH_T_MIN,
                             t_max: float | None = None,
                             scan_points: int = SUDDEN_DEATH_SCAN_POINTS,
                             xtol: float = SUDDEN_DEATH_XTOL) -> float:
    """Smallest T with zero concurrence when both baths sit at T.

    A coarse scan over [t_min, t_max] brackets the first sign change of the
    unclamped concurrence margin, bisection refines it.
    """
    if t_max is None:
        t_max = SUDDEN_DEATH_T_MAX_FACTOR * max(params.epsilon, params.kappa)
    if not 0 < t_min < t_max or scan_points < 2:
        raise InvalidParameterError(detail=f"bad scan window [{t_min}, {t_max}] with {scan_points} points")

    def margin(temperature: float) -> float:
        left = BathSpec(kind=kind, gamma=gamma_left, temperature=temperature)
        right = BathSpec(kind=kind_right or kind, gamma=gamma_right, temperature=temperature)
        return concurrence_margin(steady_populations(channel_rates(params, left, right)))

    temperatures = np.linspace(t_min, t_max, scan_points)
    previous = float(temperatures[0])
    if margin(previous) <= 0:
        logging.error(f"concurrence already zero at the lowest scanned T={previous}")
        raise SuddenDeathNotFoundError(detail=f"concurrence is already zero at T={previous!r}")

    for temperature in temperatures[1:]:
        temperature = float(temperature)
        value = margin(temperature)
        if value == 0:
            return temperature
        if value < 0:
            t_death = bisect(margin, previous, temperature, xtol=xtol)
            logging.info(f"sudden death at T={t_death!r} (bracket [{previous}, {temperature}])")
            return float(t_death)
        previous = temperature

    logging.error(f"no concurrence zero in [{t_min}, {t_max}]")
    raise SuddenDeathNotFoundError(detail=f"concurrence stays positive up to T={t_max!r}")
