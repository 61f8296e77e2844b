"""Pipeline context for sharing data between steps."""

import time
from typing import Any

from src.errors import InternalInvariantViolation, LatticeError
from src.models.agiform import Agiform
from src.models.documents import ReportDocument, ReportError, SimplexDocument
from src.models.lattice import Simplex


class PipelineContext:
    """Context object for passing data between pipeline steps.

    This object is passed to each step and accumulates the report
    as the pipeline progresses.
    """

    def __init__(self, command: str, arguments: dict[str, Any] | None = None):
        """Initialize pipeline context.

        Args:
            command: CLI command being run
            arguments: Echo of the command's arguments for the report
        """
        self.command = command
        self.arguments = arguments or {}
        self.start_time = time.perf_counter()

        # Parsed input
        self.document: SimplexDocument | None = None
        self.simplex: Simplex | None = None
        self.agiform: Agiform | None = None

        # Report payload, filled by the steps
        self.result: dict[str, Any] = {}

        # Processing statistics
        self.stats: dict[str, Any] = {}

        # Seconds per step
        self.timings: dict[str, float] = {}

        # Errors encountered during processing
        self.errors: list[ReportError] = []

        # Success flag
        self.success: bool = False

    def add_error(self, step_name: str, error: Exception) -> None:
        """Record a failure with the exit code it maps to.

        Exceptions outside the library hierarchy are treated as internal
        invariant violations.
        """
        exit_code = (
            error.exit_code
            if isinstance(error, LatticeError)
            else InternalInvariantViolation.exit_code
        )
        self.errors.append(
            ReportError(
                step=step_name,
                error_type=type(error).__name__,
                message=str(error),
                exit_code=exit_code,
            )
        )

    def has_errors(self) -> bool:
        return len(self.errors) > 0

    @property
    def exit_code(self) -> int:
        """Exit code of the first error, or 0."""
        return self.errors[0].exit_code if self.errors else 0

    def get_report(self, include_timing: bool = False) -> ReportDocument:
        """Assemble the report document.

        Args:
            include_timing: Add per-step wall-clock seconds (not byte-stable)
        """
        timing = None
        if include_timing:
            timing = {
                "steps": {name: round(seconds, 6) for name, seconds in self.timings.items()},
                "total_seconds": round(time.perf_counter() - self.start_time, 6),
            }
        return ReportDocument(
            command=self.command,
            arguments=self.arguments,
            input=self.document.to_dict() if self.document else None,
            input_digest=self.document.digest() if self.document else None,
            success=self.success,
            exit_code=self.exit_code,
            result=self.result,
            stats=self.stats,
            errors=self.errors,
            timing=timing,
        )
