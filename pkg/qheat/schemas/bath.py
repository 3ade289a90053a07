from pydantic import Field

from qheat.constants.bath_kind import BathKind
from qheat.schemas.base_schema import BaseSchema


class BathSpec(BaseSchema):
    kind: BathKind
    gamma: float = Field(ge=0, allow_inf_nan=False, description="flat coupling strength")
    temperature: float = Field(ge=0, allow_inf_nan=False, description="k_B = 1")
