"""Command service: builds and runs the pipeline for each CLI command."""

from structlog import get_logger

from src.models.documents import CommandRequest, ReportDocument
from src.services.pipeline import Pipeline, PipelineContext, PipelineStep
from src.services.pipeline.steps import (
    DecomposeStep,
    DemoStep,
    EnumerateStep,
    IsSosStep,
    LoadDocumentStep,
    MediatedStep,
    VerifyTheoremStep,
    WitnessStep,
)

logger = get_logger(__name__)


class CommandError(Exception):
    """Raised when a request is missing arguments its command needs."""

    pass


class CommandService:
    """Runs CLI commands as pipelines of steps sharing one context.

    Every command except ``demo`` starts by loading the input document;
    the command's own step then writes the report payload.
    """

    def _build_steps(self, request: CommandRequest) -> list[PipelineStep]:
        """Assemble the steps for a request.

        Raises:
            CommandError: If a required argument is missing
        """
        budget = request.max_box_points
        command = request.command

        if command == "demo":
            if request.name is None:
                raise CommandError("demo needs a name: motzkin, hurwitz or horn")
            return [
                DemoStep(
                    request.name,
                    check_identity=request.check_identity,
                    samples=request.samples,
                    seed=request.seed,
                    max_box_points=budget,
                )
            ]

        needs_apex = command in ("is-sos", "decompose")
        steps: list[PipelineStep] = [LoadDocumentStep(request.input_path, require_apex=needs_apex)]

        if command == "enumerate":
            steps.append(EnumerateStep(request.k or 1, max_box_points=budget))
        elif command == "mediated":
            steps.append(MediatedStep(max_box_points=budget))
        elif command == "is-sos":
            steps.append(IsSosStep(max_box_points=budget))
        elif command == "decompose":
            steps.append(DecomposeStep(blowup=request.blowup, max_box_points=budget))
        elif command == "witness":
            if request.k is None or request.point is None:
                raise CommandError("witness needs --k and --point")
            steps.append(
                WitnessStep(
                    request.k,
                    request.point,
                    max_depth=request.max_depth,
                    max_box_points=budget,
                )
            )
        elif command == "verify-theorem":
            if request.k is None:
                raise CommandError("verify-theorem needs --k")
            steps.append(
                VerifyTheoremStep(request.k, max_box_points=budget, max_depth=request.max_depth)
            )
        return steps

    def build_pipeline(self, request: CommandRequest) -> Pipeline:
        return Pipeline(name=request.command, steps=self._build_steps(request))

    async def run(self, request: CommandRequest) -> ReportDocument:
        """Run one command and return its report.

        Library errors never escape: they are recorded on the report with
        their exit codes.
        """
        context = PipelineContext(command=request.command, arguments=request.arguments())
        pipeline = self.build_pipeline(request)
        context = await pipeline.execute(context)

        report = context.get_report(include_timing=request.include_timing)
        logger.info(
            "Command finished",
            command=request.command,
            success=report.success,
            exit_code=report.exit_code,
            timing={name: round(t, 6) for name, t in context.timings.items()},
        )
        return report
