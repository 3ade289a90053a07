import csv
import io
from typing import Iterable, List, Sequence

from qheat.schemas.sweep import SweepRow, RectificationRow

SWEEP_HEADER = ("T_L", "T_R", "gamma_L", "gamma_R", "bath", "epsilon", "kappa",
                "P1", "P2", "P3", "P4", "J_L", "concurrence", "discord", "mutual_info", "classical_corr")
RECT_HEADER = ("dT", "J_forward", "J_reverse")
DEATH_LABEL = "T_death"


def format_float(value: float) -> str:
    """Shortest round-trip decimal; repr never depends on the locale."""
    return repr(float(value))


def sweep_row_record(row: SweepRow) -> List[str]:
    numbers = (row.p1, row.p2, row.p3, row.p4, row.heat_current,
               row.concurrence, row.discord, row.mutual_information, row.classical_correlation)
    return ([format_float(row.t_left), format_float(row.t_right),
             format_float(row.gamma_left), format_float(row.gamma_right),
             row.bath, format_float(row.epsilon), format_float(row.kappa)]
            + [format_float(x) for x in numbers])


def rectification_record(row: RectificationRow) -> List[str]:
    return [format_float(row.delta_t), format_float(row.j_forward), format_float(row.j_reverse)]


def write_csv(header: Sequence[str] | None, records: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header is not None:
        writer.writerow(header)
    writer.writerows(records)
    return buffer.getvalue()


def sweep_csv(rows: Iterable[SweepRow]) -> str:
    return write_csv(SWEEP_HEADER, (sweep_row_record(row) for row in rows))


def rectification_csv(rows: Iterable[RectificationRow]) -> str:
    return write_csv(RECT_HEADER, (rectification_record(row) for row in rows))


def sudden_death_csv(t_death: float) -> str:
    return write_csv(None, [[DEATH_LABEL, format_float(t_death)]])
