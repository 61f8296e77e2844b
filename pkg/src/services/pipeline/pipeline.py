"""Sequential executor for a command's steps."""

from structlog import get_logger

from .base_step import PipelineStep
from .context import PipelineContext

logger = get_logger(__name__)


class Pipeline:
    """Runs steps in order over one shared context.

    A failed required step ends the run; an optional one is recorded in
    the stats and skipped over. The context ends up successful only when
    no step recorded an error.
    """

    def __init__(self, name: str, steps: list[PipelineStep]):
        self.name = name
        self.steps = steps
        self.logger = logger.bind(pipeline=name)

    async def execute(self, context: PipelineContext) -> PipelineContext:
        """Run every step until one required step fails.

        Args:
            context: Pipeline context

        Returns:
            The same context, with success flag and ``stats["pipeline"]`` set
        """
        log = self.logger.bind(command=context.command)
        log.debug("Pipeline starting", steps=self.get_step_names())

        completed: list[str] = []
        failed: list[str] = []
        skipped: list[str] = []

        for index, step in enumerate(self.steps):
            if await step.run(context):
                completed.append(step.get_name())
                continue
            failed.append(step.get_name())
            if step.is_required():
                skipped = [s.get_name() for s in self.steps[index + 1 :]]
                break
            log.warning("Optional step failed", failed_step=step.get_name())

        context.success = not context.has_errors()
        context.stats["pipeline"] = {
            "name": self.name,
            "total_steps": len(self.steps),
            "successful_steps": len(completed),
            "failed_steps": len(failed),
            "skipped_steps": skipped,
        }

        log.info(
            "Pipeline finished",
            success=context.success,
            exit_code=context.exit_code,
            failed=failed,
            skipped=skipped,
        )
        return context

    def add_step(self, step: PipelineStep) -> "Pipeline":
        """Append a step; returns self for chaining."""
        self.steps.append(step)
        return self

    def get_step_names(self) -> list[str]:
        return [step.get_name() for step in self.steps]
