from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.conf import messages


class CommandOptions(BaseModel):
    """
    Named inputs of a workbench command.

    The CLI fills this from argparse flags, script ``run`` directives from
    ``key=value`` words and the HTTP surface from the request body. Names
    refer to objects declared in the script.
    """

    model_config = ConfigDict(extra="forbid")

    semiring: str | None = None
    congruences: list[str] = Field(default_factory=list)
    systems: list[str] = Field(default_factory=list)
    points: str | None = None
    ideal: str | None = None
    equivalence: str | None = None
    pairs: str | None = None
    pair: str | None = None
    kind: str = "prime"
    alt: bool = False
    check: str | None = None
    window: int | None = Field(default=None, ge=0)
    degree_cap: int | None = Field(default=None, ge=0)
    max_size: int | None = Field(default=None, ge=1)
    seed: int | None = None
    count: int | None = Field(default=None, ge=1)
    sizes: tuple[int, int] | None = None

    @field_validator("congruences", "systems", mode="before")
    @classmethod
    def split_names(cls, value):
        if isinstance(value, str):
            return [name.strip() for name in value.split(",") if name.strip()]
        return value

    @field_validator("sizes", mode="before")
    @classmethod
    def parse_sizes(cls, value):
        if isinstance(value, str):
            low, _, high = value.partition("-")
            return (int(low), int(high or low))
        return value


class ScriptRequest(BaseModel):
    script: str = Field(description=messages.schema_script.get("en"))


class QueryRequest(ScriptRequest):
    options: CommandOptions = Field(default_factory=CommandOptions)


class CommandRequest(QueryRequest):
    command: str = Field(description=messages.schema_command.get("en"))


class CommandResponse(BaseModel):
    command: str
    lines: list[str]
