from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    # values are results of a computation, never edited in place
    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
    )
