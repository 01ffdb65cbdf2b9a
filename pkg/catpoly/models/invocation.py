"""A validated record of one CLI invocation."""
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Subcommand = Literal[
    'lpoly', 'upoly', 'ulpoly', 'factor', 'sym', 'lclass', 'phi', 'psi',
    'witness', 'verify', 'chromatic', 'trees',
]


class CliInvocation(BaseModel):
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    format: Literal['text', 'json'] = 'text'
    jobs: int = Field(default=1, ge=1)
    inputs: List[str] = Field(default_factory=list)
    n: Optional[int] = Field(default=None, ge=1)

    def describe(self) -> str:
        parts = [self.subcommand, *self.inputs]
        if self.n is not None:
            parts.append(f"n={self.n}")
        if self.jobs != 1:
            parts.append(f"jobs={self.jobs}")
        return ' '.join(parts)
