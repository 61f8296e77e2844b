"""Step to decide whether the input agiform is a sum of squares."""

import asyncio

from src.agiform import is_sos
from src.services.pipeline import PipelineContext, PipelineStep
from src.transformers import ReportTransformer


class IsSosStep(PipelineStep):
    """Sos iff the apex lies in the maximal mediated set."""

    def __init__(self, max_box_points: int | None = None):
        super().__init__("IsSos")
        self.max_box_points = max_box_points

    async def execute(self, context: PipelineContext) -> bool:
        agiform = context.agiform
        membership = await asyncio.to_thread(is_sos, agiform, self.max_box_points)

        context.result = {
            "agiform": ReportTransformer.agiform(agiform),
            **ReportTransformer.membership(membership),
        }
        context.stats["is_sos"] = {
            "maximal_set_size": len(membership.maximal_set),
            "chain_length": len(membership.chain),
        }
        self.logger.info("Decided sos", apex=agiform.apex, sos=membership.is_sos)
        return True
