from enum import Enum


class SweepVariable(Enum):
    T_COMMON = "t"
    T_RIGHT = "tr"
    BIAS = "dt"
