"""Base class for pipeline steps."""

import time
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

from structlog import get_logger

from src.errors import LatticeError

if TYPE_CHECKING:
    from .context import PipelineContext

logger = get_logger(__name__)


class PipelineStep(ABC):
    """One unit of work in a command pipeline.

    Subclasses implement ``execute``: read the parsed input from the
    context, compute, and write the report payload back. ``run`` wraps it
    with timing, logging and error capture, so library exceptions never
    leave the pipeline.
    """

    def __init__(self, name: str | None = None):
        """Initialize the step.

        Args:
            name: Step name used in logs, timings and report errors.
                Defaults to the class name.
        """
        self.name = name or self.__class__.__name__
        self.logger = logger.bind(step=self.name)

    @abstractmethod
    async def execute(self, context: "PipelineContext") -> bool:
        """Do the step's work.

        Returns:
            True on success; False to fail without an exception
        """

    async def run(self, context: "PipelineContext") -> bool:
        """Execute the step and record its outcome on the context.

        Library errors (bad input, budgets, theorem preconditions) are
        expected outcomes and logged as warnings with their exit code;
        anything else is an internal failure and logged with a traceback.
        The step's wall-clock seconds always land in ``context.timings``.

        Returns:
            True if the step succeeded
        """
        self.logger = self.logger.bind(command=context.command)
        started = time.perf_counter()

        try:
            success = await self.execute(context)
        except LatticeError as e:
            self.logger.warning(
                "Step rejected its input",
                error_type=type(e).__name__,
                error=str(e),
                exit_code=e.exit_code,
            )
            context.add_error(self.name, e)
            return False
        except Exception as e:
            self.logger.error("Step crashed", error=str(e), exc_info=True)
            context.add_error(self.name, e)
            return False
        finally:
            context.timings[self.name] = time.perf_counter() - started

        self.logger.debug(
            "Step finished",
            success=success,
            seconds=round(context.timings[self.name], 6),
        )
        return success

    def is_required(self) -> bool:
        """Whether a failure of this step ends the pipeline (default True)."""
        return True

    def get_name(self) -> str:
        return self.name
