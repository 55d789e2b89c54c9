from pydantic import BaseModel, Field, model_validator
from typing import Dict, Literal, Optional, Tuple

OutputFormat = Literal["text", "json", "csv", "dot", "jsonl"]

# Formats accepted by each command (subaction-qualified where they differ)
ALLOWED_FORMATS: Dict[str, Tuple[str, ...]] = {
    "edges": ("text", "json", "dot"),
    "cycles": ("text", "json", "jsonl"),
    "counts": ("text", "json"),
    "distance": ("text", "json"),
    "crossjoin apply": ("text", "json"),
    "crossjoin neighbors": ("text", "json", "jsonl"),
    "crossjoin histogram": ("csv", "json"),
    "crossjoin connectivity": ("text", "json"),
    "crossjoin path": ("text", "json"),
    "crossjoin graph": ("dot", "json"),
    "hamilton run": ("text", "jsonl"),
    "hamilton verify": ("text", "json"),
    "hamilton find-cycle-seed": ("text", "json"),
}


class RunConfig(BaseModel):
    """
    Resolved settings for one CLI invocation
    """
    command: str = Field(..., description="Command, with its subaction when it has one")
    n: Optional[int] = Field(None, description="Number of vertices N")
    d: Optional[int] = Field(None, description="Out-degree d")
    format: Optional[OutputFormat] = Field(None, description="Output format; None picks the command default")
    out: Optional[str] = Field(None, description="Output path; None writes to stdout")
    threads: int = Field(1, description="Worker processes for census and enumeration")
    budget: int = Field(..., description="Maximum number of cycles enumerated")

    @model_validator(mode="after")
    def check_values(self) -> "RunConfig":
        if self.budget <= 0:
            raise ValueError(f"budget must be positive, got {self.budget}")
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")
        allowed = ALLOWED_FORMATS.get(self.command)
        if allowed is None:
            raise ValueError(f"unknown command '{self.command}'")
        if self.format is not None and self.format not in allowed:
            raise ValueError(
                f"format '{self.format}' is not available for '{self.command}' (use one of {', '.join(allowed)})"
            )
        return self

    @property
    def output_format(self) -> str:
        return self.format or ALLOWED_FORMATS[self.command][0]
