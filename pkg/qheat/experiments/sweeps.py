import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

from qheat.constants.sweep_variable import SweepVariable
from qheat.core.config import SWEEP_WORKERS
from qheat.core.correlations import correlation_report
from qheat.core.exceptions import SimulationError, SweepPointError
from qheat.core.solver import channel_rates, steady_populations, heat_current
from qheat.schemas.bath import BathSpec
from qheat.schemas.sweep import SweepSpec, SweepRow
from qheat.schemas.system import SystemParams


def bath_label(left: BathSpec, right: BathSpec) -> str:
    if left.kind is right.kind:
        return left.kind.value
    return f"{left.kind.value}:{right.kind.value}"


def evaluate_point(params: SystemParams, left: BathSpec, right: BathSpec) -> SweepRow:
    """Steady state, current and correlations at one pair of bath temperatures."""
    try:
        rates = channel_rates(params, left, right)
        pops = steady_populations(rates)
        current = heat_current(params, rates)
        report = correlation_report(pops)
    except SimulationError as ex:
        logging.error(f"point T_L={left.temperature}, T_R={right.temperature} failed: {ex.detail}")
        raise SweepPointError(detail=f"at T_L={left.temperature!r}, T_R={right.temperature!r}: {ex.detail}",
                              t_left=left.temperature,
                              t_right=right.temperature) from ex

    return SweepRow(t_left=left.temperature,
                    t_right=right.temperature,
                    gamma_left=left.gamma,
                    gamma_right=right.gamma,
                    bath=bath_label(left, right),
                    epsilon=params.epsilon,
                    kappa=params.kappa,
                    p1=pops.p1,
                    p2=pops.p2,
                    p3=pops.p3,
                    p4=pops.p4,
                    heat_current=current,
                    concurrence=report.concurrence,
                    discord=report.discord,
                    mutual_information=report.mutual_information,
                    classical_correlation=report.classical_correlation)


def run_sweep(spec: SweepSpec, workers: int = SWEEP_WORKERS) -> List[SweepRow]:
    """One row per grid point, ascending in the sweep variable.

    With ``workers > 1`` points are evaluated on a thread pool; ``map`` keeps
    the grid order regardless of completion order.
    """
    def evaluate(x: float) -> SweepRow:
        t_left, t_right = spec.temperatures(x)
        return evaluate_point(spec.params, spec.left_bath(t_left), spec.right_bath(t_right))

    grid = spec.grid()
    logging.info(f"sweeping {spec.variable.value} over [{spec.lo}, {spec.hi}] in {spec.count} points")

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(evaluate, grid))
    else:
        rows = [evaluate(x) for x in grid]

    logging.debug(f"sweep finished with {len(rows)} rows")
    return rows


def find_crossings(rows: Sequence[SweepRow], variable: SweepVariable) -> List[float]:
    """Sweep-variable values where C - Q changes sign, linearly interpolated."""
    crossings: List[float] = []
    previous = None
    for row in rows:
        x, d = row.sweep_value(variable), row.concurrence - row.discord
        if d == 0:
            # a run of zeros is one touch point
            if previous is None or previous[1] != 0:
                crossings.append(x)
        elif previous is not None and previous[1] * d < 0:
            x_before, d_before = previous
            crossings.append(x_before + (x - x_before) * d_before / (d_before - d))
        previous = (x, d)
    return crossings
