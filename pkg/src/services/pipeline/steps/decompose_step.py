"""Step to decompose the input agiform into binomial squares."""

import asyncio

from src.agiform import blowup_decompose, decompose
from src.services.pipeline import PipelineContext, PipelineStep
from src.transformers import ReportTransformer


class DecomposeStep(PipelineStep):
    """Exact binomial-square decomposition, optionally through the k-fold blow-up."""

    def __init__(self, blowup: int | None = None, max_box_points: int | None = None):
        """Initialize the step.

        Args:
            blowup: Dilation factor k for a decomposition in x_i^(1/k); None for a direct one
            max_box_points: Enumeration budget override
        """
        super().__init__("Decompose")
        self.blowup = blowup
        self.max_box_points = max_box_points

    async def execute(self, context: PipelineContext) -> bool:
        agiform = context.agiform
        if self.blowup is None:
            decomposition = await asyncio.to_thread(decompose, agiform, self.max_box_points)
        else:
            decomposition = await asyncio.to_thread(
                blowup_decompose, agiform, self.blowup, self.max_box_points
            )

        context.result = {
            "agiform": ReportTransformer.agiform(agiform),
            "decomposition": ReportTransformer.decomposition(decomposition),
            "verified": decomposition.verify(agiform.to_polynomial()),
        }
        context.stats["decomposition"] = {"squares": len(decomposition)}
        self.logger.info(
            "Decomposed agiform",
            apex=agiform.apex,
            blowup=self.blowup,
            squares=len(decomposition),
        )
        return True
