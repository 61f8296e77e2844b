"""Step to witness every non-vertex lattice point of a dilated simplex."""

import asyncio

from src.dilation import verify_dilation_theorem
from src.errors import InternalInvariantViolation
from src.services.pipeline import PipelineContext, PipelineStep
from src.transformers import ReportTransformer


class VerifyTheoremStep(PipelineStep):
    """Check that kU ∩ Z^n is kU-mediated, one witness per non-vertex point."""

    def __init__(self, k: int, max_box_points: int | None = None, max_depth: int | None = None):
        super().__init__("VerifyTheorem")
        self.k = k
        self.max_box_points = max_box_points
        self.max_depth = max_depth

    async def execute(self, context: PipelineContext) -> bool:
        report = await asyncio.to_thread(
            verify_dilation_theorem,
            context.simplex,
            self.k,
            self.max_box_points,
            self.max_depth,
        )
        context.result = ReportTransformer.dilation_report(report)
        context.stats["verify_theorem"] = {
            "failures": len(report.failures),
            "path_counts": dict(sorted(report.path_counts.items())),
        }
        if not report.ok:
            context.add_error(
                self.name,
                InternalInvariantViolation(
                    f"{len(report.failures)} of {report.non_vertex_count} points not witnessed"
                ),
            )
            return False
        return True
