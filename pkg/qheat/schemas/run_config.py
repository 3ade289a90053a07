import logging
from typing import List, Literal

import numpy as np
from pydantic import Field, ValidationError, model_validator

from qheat.constants.bath_kind import BathKind
from qheat.constants.sweep_variable import SweepVariable
from qheat.core.config import DEFAULT_EPSILON, DEFAULT_KAPPA, DEFAULT_GAMMA
from qheat.core.exceptions import InvalidParameterError
from qheat.schemas.base_schema import BaseSchema
from qheat.schemas.bath import BathSpec
from qheat.schemas.sweep import SweepSpec
from qheat.schemas.system import SystemParams

FIELD_FLAGS = {
    "epsilon": "--epsilon",
    "kappa": "--kappa",
    "bath": "--bath",
    "bath_right": "--bath-right",
    "gamma_left": "--gl",
    "gamma_right": "--gr",
    "t_left": "--tl",
    "t_right": "--tr",
    "t_average": "--ta",
    "variable": "--var",
    "lo": "--lo",
    "hi": "--hi",
    "n": "--n",
    "out": "--out",
}


class RunConfig(BaseSchema):
    subcommand: Literal["point", "sweep", "rect", "death"]
    epsilon: float = Field(default=DEFAULT_EPSILON, gt=0, allow_inf_nan=False)
    kappa: float = Field(default=DEFAULT_KAPPA, gt=0, allow_inf_nan=False)
    bath: BathKind = BathKind.BOSON
    bath_right: BathKind | None = None
    gamma_left: float = Field(default=DEFAULT_GAMMA, ge=0, allow_inf_nan=False)
    gamma_right: float = Field(default=DEFAULT_GAMMA, ge=0, allow_inf_nan=False)
    t_left: float | None = Field(default=None, ge=0, allow_inf_nan=False)
    t_right: float | None = Field(default=None, ge=0, allow_inf_nan=False)
    t_average: float | None = Field(default=None, gt=0, allow_inf_nan=False)
    variable: SweepVariable | None = None
    lo: float | None = Field(default=None, allow_inf_nan=False)
    hi: float | None = Field(default=None, allow_inf_nan=False)
    n: int | None = Field(default=None, ge=2)
    out: str | None = None

    @model_validator(mode="after")
    def check_subcommand(self):
        # messages name the flag, the location of a model-level error is empty
        if self.subcommand == "point":
            if self.t_left is None or self.t_right is None:
                raise ValueError("--tl and --tr are required")
        if self.subcommand in ("sweep", "rect"):
            if self.lo is None or self.hi is None or self.n is None:
                raise ValueError("--lo, --hi and --n are required")
            if not self.lo < self.hi:
                raise ValueError(f"--lo must be below --hi, got {self.lo} >= {self.hi}")
        if self.subcommand == "sweep":
            if self.variable is None:
                raise ValueError("--var is required")
            if self.variable is SweepVariable.T_RIGHT and self.t_left is None:
                raise ValueError("--var tr needs --tl")
            if self.variable is SweepVariable.BIAS:
                if self.t_average is None:
                    raise ValueError("--var dt needs --ta")
                if max(abs(self.lo), abs(self.hi)) >= self.t_average:
                    raise ValueError(f"--lo/--hi must satisfy |dT| < --ta = {self.t_average}")
            elif self.lo < 0:
                raise ValueError(f"--lo must be >= 0 for a temperature sweep, got {self.lo}")
        if self.subcommand == "rect":
            if self.t_average is None:
                raise ValueError("--ta is required")
            if not 0 < self.lo or not self.hi < self.t_average:
                raise ValueError(f"--lo/--hi must lie in (0, --ta = {self.t_average})")
        return self

    @classmethod
    def from_flags(cls, **flags) -> "RunConfig":
        try:
            return cls(**flags)
        except ValidationError as ex:
            raise flag_error(ex) from ex

    def system_params(self) -> SystemParams:
        return SystemParams(epsilon=self.epsilon, kappa=self.kappa)

    def left_bath(self, temperature: float) -> BathSpec:
        return BathSpec(kind=self.bath, gamma=self.gamma_left, temperature=temperature)

    def right_bath(self, temperature: float) -> BathSpec:
        return BathSpec(kind=self.bath_right or self.bath, gamma=self.gamma_right, temperature=temperature)

    def sweep_spec(self) -> SweepSpec:
        return SweepSpec(params=self.system_params(),
                         kind=self.bath,
                         kind_right=self.bath_right,
                         gamma_left=self.gamma_left,
                         gamma_right=self.gamma_right,
                         variable=self.variable,
                         lo=self.lo,
                         hi=self.hi,
                         count=self.n,
                         t_left=self.t_left,
                         t_average=self.t_average)

    def delta_grid(self) -> List[float]:
        return [float(x) for x in np.linspace(self.lo, self.hi, self.n)]


def flag_error(ex: ValidationError) -> InvalidParameterError:
    """First validation error of a flag set, reported against the flag it came from."""
    error = ex.errors()[0]
    location = error["loc"]
    message = error["msg"].removeprefix("Value error, ")
    if location and location[0] in FIELD_FLAGS:
        message = f"{FIELD_FLAGS[location[0]]}: {message}"
    logging.error(f"invalid configuration: {message}")
    return InvalidParameterError(detail=message)
