import logging
from typing import List, Sequence

from qheat.constants.bath_kind import BathKind
from qheat.core.exceptions import InvalidParameterError
from qheat.experiments.sweeps import evaluate_point
from qheat.schemas.bath import BathSpec
from qheat.schemas.sweep import RectificationRow
from qheat.schemas.system import SystemParams


def rectification_scan(params: SystemParams, kind: BathKind, gamma_left: float, gamma_right: float,
                       t_average: float, delta_grid: Sequence[float],
                       kind_right: BathKind | None = None) -> List[RectificationRow]:
    """J_L at T_L = T_a + dT, T_R = T_a - dT and with the bias reversed, for each dT."""
    for delta in delta_grid:
        if not 0 < delta < t_average:
            logging.error(f"rectification bias {delta} outside (0, {t_average})")
            raise InvalidParameterError(detail=f"bias dT must lie in (0, T_a = {t_average!r}), got {delta!r}")

    def current(t_left: float, t_right: float) -> float:
        left = BathSpec(kind=kind, gamma=gamma_left, temperature=t_left)
        right = BathSpec(kind=kind_right or kind, gamma=gamma_right, temperature=t_right)
        return evaluate_point(params, left, right).heat_current

    rows = []
    for delta in delta_grid:
        rows.append(RectificationRow(delta_t=delta,
                                     j_forward=current(t_average + delta, t_average - delta),
                                     j_reverse=current(t_average - delta, t_average + delta)))
    logging.info(f"rectification scan at T_a={t_average}: {len(rows)} bias values")
    return rows
