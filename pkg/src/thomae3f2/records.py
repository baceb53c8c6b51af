"""Job and result records exchanged by the command line and batch mode."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Any

COMMANDS = ("eval", "transform", "verify", "prove", "closed-form")


@dataclass
class JobSpec:
    """One unit of work.  ``params`` is a list of numbers or rational strings.

    Numeric settings left as None fall back to the library defaults.
    """

    command: str
    identity: str | None = None
    params: list | None = None
    x: float | None = None
    n: int | None = None
    a: str | None = None
    b: str | None = None
    c: str | None = None
    random: int | None = None
    seed: int | None = None
    tol_rel: float | None = None
    tol_abs: float | None = None
    max_terms: int | None = None
    quad_error: float | None = None
    auto_transform: bool = False
    tail_correction: bool = True
    format: str = "json"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}; expected one of {', '.join(COMMANDS)}")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")

    @classmethod
    def from_dict(cls, data: dict) -> "JobSpec":
        if not isinstance(data, dict):
            raise ValueError("job must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown job field(s): {', '.join(unknown)}")
        if "command" not in data:
            raise ValueError("job is missing the 'command' field")
        return cls(**data)

    @classmethod
    def from_json(cls, line: str) -> "JobSpec":
        return cls.from_dict(json.loads(line))


def clean(value: Any) -> Any:
    """JSON-safe copy: Fractions become strings, non-finite floats become None."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, dict):
        return {str(k): clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [clean(v) for v in value]
    if hasattr(value, "item"):  # numpy scalars
        return clean(value.item())
    return str(value)


@dataclass
class ResultRecord:
    command: str
    inputs: dict = field(default_factory=dict)
    value: float | str | None = None
    values: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)
    stage_values: list | None = None
    passed: bool | None = None
    error: dict | None = None
    wall_time_ms: float = 0.0

    def __post_init__(self):
        self.inputs = clean(self.inputs)
        self.value = clean(self.value)
        self.values = clean(self.values)
        self.diagnostics = clean(self.diagnostics)
        self.stage_values = clean(self.stage_values)
        self.error = clean(self.error)

    def to_dict(self) -> dict:
        return clean(asdict(self))

    def normalized(self) -> "ResultRecord":
        """Copy holding only JSON-native values, as ``from_json`` would rebuild it."""
        return ResultRecord(**self.to_dict())

    def to_json(self) -> str:
        # repr floats round-trip exactly; key order follows the field order
        return json.dumps(self.to_dict(), allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls(**json.loads(text))

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return 2 if self.error.get("input_error") else 1
        return 0 if self.passed is not False else 1
