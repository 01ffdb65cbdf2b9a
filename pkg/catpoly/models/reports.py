"""Serializable results: verification reports and witness data."""
import json
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

Composition = Tuple[int, ...]


def _fmt(parts) -> str:
    return ','.join(str(p) for p in parts)


class VerificationReport(BaseModel):
    """Outcome of one exhaustive check. An empty failure list means the check passed."""

    check_name: str
    parameter_n: int
    instances_checked: int = 0
    failures: List[str] = Field(default_factory=list)
    elapsed: float = 0.0
    seed: Optional[int] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, include_timing: bool = False) -> str:
        """Deterministic JSON; elapsed time is left out unless asked for."""
        data = self.model_dump(mode='json', exclude=None if include_timing else {'elapsed'})
        return json.dumps(data, separators=(',', ':'))

    def to_text(self, include_timing: bool = False) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        lines = [
            f"check: {self.check_name}",
            f"n: {self.parameter_n}",
            f"instances: {self.instances_checked}",
            f"failures: {len(self.failures)}",
        ]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        for key, value in self.details.items():
            lines.append(f"{key}: {value}")
        if include_timing:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        lines.extend(f"  - {failure}" for failure in self.failures)
        lines.append(f"status: {status}")
        return '\n'.join(lines)


class WitnessData(BaseModel):
    """The partition that separates U_S from U_T, with every intermediate quantity."""

    model_config = ConfigDict(frozen=True)

    alpha: Composition
    beta: Composition
    gamma: Composition
    n: int
    k_ab: int
    k_g: int
    a: int
    b: int
    delta1: int
    delta2: int
    lambda_witness: Composition
    rho1: Composition
    rho2: Composition
    coeff_S: int
    coeff_T: int
    coeff_L_delta: int

    @model_validator(mode='after')
    def _check_identities(self) -> 'WitnessData':
        g = sum(self.gamma)
        if self.delta1 != self.a * g + self.b:
            raise ValueError(f"delta1={self.delta1} differs from a*|gamma|+b={self.a * g + self.b}")
        if self.delta2 != self.n * g - self.delta1:
            raise ValueError(f"delta2={self.delta2} differs from n*|gamma|-delta1")
        expected = tuple(sorted((1, self.delta1 - 1, self.delta2), reverse=True))
        if tuple(self.lambda_witness) != expected:
            raise ValueError(f"witness partition {self.lambda_witness} differs from {expected}")
        n1 = sum(self.rho1) - len(self.rho1)
        n2 = sum(self.rho2) - len(self.rho2)
        if n2 != n1 + 1:
            raise ValueError(f"leaf functional of rho2 ({n2}) is not one more than rho1 ({n1})")
        return self

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode='json'), separators=(',', ':'))

    def to_text(self) -> str:
        rows = [
            ('alpha', _fmt(self.alpha)),
            ('beta', _fmt(self.beta)),
            ('gamma', _fmt(self.gamma)),
            ('n', self.n),
            ('k(alpha,beta)', self.k_ab),
            ('k(gamma,rev gamma)', self.k_g),
            ('a', self.a),
            ('b', self.b),
            ('delta1', self.delta1),
            ('delta2', self.delta2),
            ('lambda', _fmt(self.lambda_witness)),
            ('rho1', _fmt(self.rho1)),
            ('rho2', _fmt(self.rho2)),
            ('[x_lambda]U_S', self.coeff_S),
            ('[x_lambda]U_T', self.coeff_T),
        ]
        return '\n'.join(f"{name}: {value}" for name, value in rows)
