import math
from typing import Tuple

from pydantic import Field, computed_field, field_validator

from qheat.constants.channel import Channel
from qheat.core.config import NORMALIZATION_TOLERANCE
from qheat.schemas.base_schema import BaseSchema


class ChannelRates(BaseSchema):
    """Golden-rule rates of one channel.

    ``down`` always points toward the lower-energy state of the pair, ``up`` away
    from it. ``first_is_lower`` tells whether the lower state is the smaller label
    (1 for both channels when kappa > epsilon; state 2 is lower on channel a
    otherwise).
    """

    channel: Channel
    omega: float = Field(gt=0)
    first_is_lower: bool = True
    down_left: float = Field(ge=0)
    up_left: float = Field(ge=0)
    down_right: float = Field(ge=0)
    up_right: float = Field(ge=0)

    @property
    def down_total(self) -> float:
        return self.down_left + self.down_right

    @property
    def up_total(self) -> float:
        return self.up_left + self.up_right

    @property
    def toward_first(self) -> float:
        """Total rate from the higher label to the lower label, e.g. 2 -> 1."""
        return self.down_total if self.first_is_lower else self.up_total

    @property
    def away_from_first(self) -> float:
        return self.up_total if self.first_is_lower else self.down_total


class RateSet(BaseSchema):
    a: ChannelRates
    b: ChannelRates

    # W_mn is the total rate n -> m, kept label based

    @computed_field
    @property
    def w12(self) -> float:
        return self.a.toward_first

    @computed_field
    @property
    def w21(self) -> float:
        return self.a.away_from_first

    @computed_field
    @property
    def w13(self) -> float:
        return self.b.toward_first

    @computed_field
    @property
    def w31(self) -> float:
        return self.b.away_from_first

    @property
    def w34(self) -> float:
        return self.w12

    @property
    def w43(self) -> float:
        return self.w21

    @property
    def w24(self) -> float:
        return self.w13

    @property
    def w42(self) -> float:
        return self.w31

    def channel(self, channel: Channel) -> ChannelRates:
        return self.a if channel is Channel.A else self.b


class Populations(BaseSchema):
    p: Tuple[float, float, float, float]

    @field_validator("p")
    @classmethod
    def check_normalized(cls, value):
        if not all(math.isfinite(x) for x in value):
            raise ValueError(f"populations must be finite, got {value}")
        if any(x < -NORMALIZATION_TOLERANCE or x > 1 + NORMALIZATION_TOLERANCE for x in value):
            raise ValueError(f"populations must lie in [0, 1], got {value}")
        if abs(sum(value) - 1.0) > NORMALIZATION_TOLERANCE:
            raise ValueError(f"populations must sum to 1, got sum {sum(value)!r}")
        return value

    @property
    def p1(self) -> float:
        return self.p[0]

    @property
    def p2(self) -> float:
        return self.p[1]

    @property
    def p3(self) -> float:
        return self.p[2]

    @property
    def p4(self) -> float:
        return self.p[3]
