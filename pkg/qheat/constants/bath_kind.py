from enum import Enum


class BathKind(Enum):
    BOSON = "boson"
    SPIN = "spin"
