from enum import Enum


class BathSide(Enum):
    LEFT = "L"
    RIGHT = "R"
