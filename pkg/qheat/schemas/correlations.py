from pydantic import Field

from qheat.schemas.base_schema import BaseSchema


class CorrelationReport(BaseSchema):
    concurrence: float = Field(ge=0, le=1)
    mutual_information: float = Field(description="bits")
    classical_correlation: float = Field(description="bits")
    discord: float = Field(description="bits")
    k_coefficient: float = Field(ge=0, description="sqrt((P2-P3)^2 + (P1-P4)^2)")


class DiscordCheck(BaseSchema):
    closed_form: float
    grid: float
    flagged: bool

    @property
    def difference(self) -> float:
        return self.grid - self.closed_form
