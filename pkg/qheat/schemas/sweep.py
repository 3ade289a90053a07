from typing import List, Tuple

import numpy as np
from pydantic import Field, model_validator

from qheat.constants.bath_kind import BathKind
from qheat.constants.sweep_variable import SweepVariable
from qheat.schemas.base_schema import BaseSchema
from qheat.schemas.bath import BathSpec
from qheat.schemas.system import SystemParams


class SweepSpec(BaseSchema):
    params: SystemParams
    kind: BathKind
    kind_right: BathKind | None = Field(default=None, description="defaults to kind")
    gamma_left: float = Field(ge=0, allow_inf_nan=False)
    gamma_right: float = Field(ge=0, allow_inf_nan=False)
    variable: SweepVariable
    lo: float = Field(allow_inf_nan=False)
    hi: float = Field(allow_inf_nan=False)
    count: int = Field(ge=2)
    t_left: float | None = Field(default=None, ge=0, allow_inf_nan=False, description="fixed T_L of a T_R sweep")
    t_average: float | None = Field(default=None, gt=0, allow_inf_nan=False, description="T_a of a bias sweep")

    @model_validator(mode="after")
    def check_range(self):
        if not self.lo < self.hi:
            raise ValueError(f"sweep range needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.variable is SweepVariable.BIAS:
            if self.t_average is None:
                raise ValueError("a bias sweep needs t_average")
            # both temperatures stay strictly positive
            if max(abs(self.lo), abs(self.hi)) >= self.t_average:
                raise ValueError(f"bias sweep needs |dT| < T_a = {self.t_average}")
        else:
            if self.lo < 0:
                raise ValueError(f"temperatures must be >= 0, got lo = {self.lo}")
            if self.variable is SweepVariable.T_RIGHT and self.t_left is None:
                raise ValueError("a T_R sweep needs t_left")
        return self

    def grid(self) -> List[float]:
        return [float(x) for x in np.linspace(self.lo, self.hi, self.count)]

    def temperatures(self, x: float) -> Tuple[float, float]:
        if self.variable is SweepVariable.T_COMMON:
            return x, x
        if self.variable is SweepVariable.T_RIGHT:
            return self.t_left, x
        return self.t_average + x, self.t_average - x

    def left_bath(self, temperature: float) -> BathSpec:
        return BathSpec(kind=self.kind, gamma=self.gamma_left, temperature=temperature)

    def right_bath(self, temperature: float) -> BathSpec:
        return BathSpec(kind=self.kind_right or self.kind, gamma=self.gamma_right, temperature=temperature)


class SweepRow(BaseSchema):
    t_left: float
    t_right: float
    gamma_left: float
    gamma_right: float
    bath: str
    epsilon: float
    kappa: float
    p1: float
    p2: float
    p3: float
    p4: float
    heat_current: float
    concurrence: float
    discord: float
    mutual_information: float
    classical_correlation: float

    def sweep_value(self, variable: SweepVariable) -> float:
        if variable is SweepVariable.T_COMMON:
            return self.t_left
        if variable is SweepVariable.T_RIGHT:
            return self.t_right
        return (self.t_left - self.t_right) / 2


class RectificationRow(BaseSchema):
    delta_t: float
    j_forward: float
    j_reverse: float

    @property
    def ratio(self) -> float:
        """|J(-dT)| / |J(+dT)|; above 1 when the reversed bias conducts better."""
        if self.j_forward == 0:
            return float("inf") if self.j_reverse != 0 else 1.0
        return abs(self.j_reverse) / abs(self.j_forward)
