"""Step to enumerate the lattice points of a dilated simplex."""

import asyncio

from src.geometry import beads, enumerate_lattice_points, is_even, is_vertex
from src.services.pipeline import PipelineContext, PipelineStep
from src.transformers import ReportTransformer


class EnumerateStep(PipelineStep):
    """List kU ∩ Z^n in lexicographic order, flagging even points, beads and vertices."""

    def __init__(self, k: int = 1, max_box_points: int | None = None):
        super().__init__("Enumerate")
        self.k = k
        self.max_box_points = max_box_points

    async def execute(self, context: PipelineContext) -> bool:
        s = context.simplex
        points = await asyncio.to_thread(
            enumerate_lattice_points, s, self.k, self.max_box_points
        )
        bead_set = await asyncio.to_thread(beads, s, self.k)

        entries = [
            {
                "point": ReportTransformer.point(p),
                "even": is_even(p),
                "bead": p in bead_set,
                "vertex": is_vertex(s, self.k, p),
            }
            for p in sorted(points)
        ]
        context.result = {"k": self.k, "points": entries}
        context.stats["enumeration"] = {
            "lattice_points": len(entries),
            "even_points": sum(e["even"] for e in entries),
            "beads": sum(e["bead"] for e in entries),
        }
        self.logger.info("Enumerated lattice points", k=self.k, count=len(entries))
        return True
