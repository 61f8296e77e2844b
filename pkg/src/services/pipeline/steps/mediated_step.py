"""Step to compute the maximal mediated set of the input simplex."""

import asyncio

from src.mediated import maximal_mediated_set, mediation_certificate
from src.services.pipeline import PipelineContext, PipelineStep
from src.transformers import ReportTransformer


class MediatedStep(PipelineStep):
    """Compute S* with its midpoint certificate."""

    def __init__(self, max_box_points: int | None = None):
        super().__init__("Mediated")
        self.max_box_points = max_box_points

    async def execute(self, context: PipelineContext) -> bool:
        s = context.simplex
        maximal = await asyncio.to_thread(
            maximal_mediated_set, s, "rounds", None, self.max_box_points
        )
        certificate = mediation_certificate(s, maximal)

        context.result = {
            "maximal_set": ReportTransformer.points(maximal),
            "certificate": ReportTransformer.certificate(certificate),
            "only_vertices": maximal == frozenset(s.vertices),
        }
        context.stats["mediated"] = {
            "size": len(maximal),
            "non_vertex_points": len(certificate),
        }
        self.logger.info("Computed maximal mediated set", size=len(maximal))
        return True
