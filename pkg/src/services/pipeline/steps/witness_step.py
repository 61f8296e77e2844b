"""Step to produce a mediation witness for one lattice point."""

import asyncio

from src.dilation import mediation_witness
from src.services.pipeline import PipelineContext, PipelineStep
from src.transformers import ReportTransformer


class WitnessStep(PipelineStep):
    """Two distinct even points of kU averaging to the requested point."""

    def __init__(
        self,
        k: int,
        point: tuple[int, ...],
        max_depth: int | None = None,
        max_box_points: int | None = None,
    ):
        super().__init__("Witness")
        self.k = k
        self.point = point
        self.max_depth = max_depth
        self.max_box_points = max_box_points

    async def execute(self, context: PipelineContext) -> bool:
        pair = await asyncio.to_thread(
            mediation_witness,
            context.simplex,
            self.k,
            self.point,
            self.max_depth,
            self.max_box_points,
        )
        context.result = {"k": self.k, "witness": ReportTransformer.witness(pair)}
        context.stats["witness"] = {"path": pair.path.value, "depth": pair.depth}
        return True
