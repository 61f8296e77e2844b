"""Input and report documents exchanged by the CLI.

Rationals travel as ``"p/q"`` strings and exponent vectors as integer arrays.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator
from pydantic import ValidationError as PydanticValidationError

from src.errors import DocumentError
from src.models._normalizers import _coerce_point, _coerce_points
from src.models.lattice import LatticePoint
from src.utils.digest import input_digest
from src.utils.rational import format_fraction, to_fraction


class SimplexDocument(BaseModel):
    """``{"vertices": [[int, ...], ...], "apex": [int, ...]?, "scale": "p/q"?}``."""

    vertices: tuple[LatticePoint, ...]
    apex: LatticePoint | None = None
    scale: Fraction | None = None

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    @field_validator("vertices", mode="before")
    @classmethod
    def _vertices(cls, value):
        return _coerce_points(value)

    @field_validator("apex", mode="before")
    @classmethod
    def _apex(cls, value):
        return None if value is None else _coerce_point(value)

    @field_validator("scale", mode="before")
    @classmethod
    def _scale(cls, value):
        return None if value is None else to_fraction(value)

    @field_serializer("scale")
    def _dump_scale(self, value: Fraction | None) -> str | None:
        return None if value is None else format_fraction(value)

    @classmethod
    def from_mapping(cls, data: Any) -> "SimplexDocument":
        """Validate parsed JSON.

        Raises:
            DocumentError: If the shape is wrong
            RaggedInput: If vertices have unequal lengths
        """
        if not isinstance(data, dict):
            raise DocumentError(f"Input document must be a JSON object, got {type(data).__name__}")
        try:
            return cls.model_validate(data)
        except PydanticValidationError as e:
            raise DocumentError(f"Invalid input document: {e.errors()[0]['msg']}") from e

    @classmethod
    def from_json(cls, text: str) -> "SimplexDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DocumentError(f"Input is not valid JSON: {e}") from e
        return cls.from_mapping(data)

    @classmethod
    def from_file(cls, path: str | Path) -> "SimplexDocument":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise DocumentError(f"Cannot read {path}: {e}") from e
        return cls.from_json(text)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready echo that re-parses to an equal document."""
        data: dict[str, Any] = {"vertices": [list(v) for v in self.vertices]}
        if self.apex is not None:
            data["apex"] = list(self.apex)
        if self.scale is not None:
            data["scale"] = format_fraction(self.scale)
        return data

    def digest(self) -> str:
        return input_digest(self.to_dict())


class ReportError(BaseModel):
    """One failure captured while running a command."""

    step: str
    error_type: str
    message: str
    exit_code: int

    model_config = ConfigDict(frozen=True)


class ReportDocument(BaseModel):
    """What a CLI command prints on stdout."""

    command: str
    arguments: dict[str, Any] = Field(default_factory=dict)
    input: dict[str, Any] | None = None
    input_digest: str | None = None
    success: bool = True
    exit_code: int = 0
    result: dict[str, Any] = Field(default_factory=dict)
    stats: dict[str, Any] = Field(default_factory=dict)
    errors: list[ReportError] = Field(default_factory=list)
    # Wall-clock data breaks byte-stability, so it is opt-in
    timing: dict[str, Any] | None = None

    def to_json(self) -> str:
        """Sorted-key, indented JSON; byte-stable for fixed input and seed."""
        data = {key: value for key, value in self.model_dump().items() if value is not None}
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True)


class CommandRequest(BaseModel):
    """A parsed CLI invocation."""

    command: Literal[
        "enumerate", "mediated", "is-sos", "decompose", "witness", "verify-theorem", "demo"
    ]
    input_path: str | None = None
    k: int | None = None
    point: LatticePoint | None = None
    blowup: int | None = None
    name: Literal["motzkin", "hurwitz", "horn"] | None = None
    check_identity: bool = False
    samples: int | None = None
    seed: int | None = None
    max_box_points: int | None = None
    max_depth: int | None = None
    include_timing: bool = False

    model_config = ConfigDict(frozen=True)

    def arguments(self) -> dict[str, Any]:
        """Echo of the command-specific arguments (unset ones omitted)."""
        data = self.model_dump(exclude={"command", "input_path", "include_timing"})
        return {
            key: list(value) if isinstance(value, tuple) else value
            for key, value in data.items()
            if value is not None and value is not False
        }
