import logging
from typing import Tuple

from pydantic import Field, model_validator, computed_field

from qheat.constants.channel import Channel
from qheat.core.exceptions import DegenerateSystemError
from qheat.schemas.base_schema import BaseSchema


class SystemParams(BaseSchema):
    epsilon: float = Field(gt=0, allow_inf_nan=False, description="qubit level splitting")
    kappa: float = Field(gt=0, allow_inf_nan=False, description="inter-qubit XY coupling")

    @model_validator(mode="after")
    def check_nondegenerate(self):
        # raised as-is (not a ValueError) so callers can tell bad input from degenerate physics
        if self.epsilon == self.kappa:
            logging.error(f"degenerate system: epsilon == kappa == {self.epsilon}")
            raise DegenerateSystemError(
                detail=f"epsilon == kappa == {self.epsilon!r} closes the 1<->2 channel gap"
            )
        return self


class EigenSystem(BaseSchema):
    energies: Tuple[float, float, float, float] = Field(description="[E1, E2, E3, E4] = [-kappa, -epsilon, epsilon, kappa]")
    omega21: float = Field(description="E2 - E1 = kappa - epsilon, negative when epsilon > kappa")
    omega31: float = Field(gt=0, description="E3 - E1 = kappa + epsilon")

    @computed_field
    @property
    def omega43(self) -> float:
        return self.energies[3] - self.energies[2]

    @computed_field
    @property
    def omega42(self) -> float:
        return self.energies[3] - self.energies[1]


class Transition(BaseSchema):
    """One allowed pair (m, n), m < n, with the signed matrix elements of S^L and S^R."""

    m: int = Field(ge=1, le=4)
    n: int = Field(ge=1, le=4)
    channel: Channel
    s_left: float
    s_right: float

    @property
    def s_left_squared(self) -> float:
        return self.s_left ** 2

    @property
    def s_right_squared(self) -> float:
        return self.s_right ** 2


class ChannelTable(BaseSchema):
    transitions: Tuple[Transition, ...]

    def find(self, m: int, n: int) -> Transition | None:
        low, high = min(m, n), max(m, n)
        for transition in self.transitions:
            if (transition.m, transition.n) == (low, high):
                return transition
        return None

    def is_allowed(self, m: int, n: int) -> bool:
        return self.find(m, n) is not None
