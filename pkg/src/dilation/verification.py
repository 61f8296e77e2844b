"""Statement-level check of the dilation theorem on a concrete simplex."""

from collections import Counter

from structlog import get_logger

from src.config import settings
from src.dilation.witness import mediation_witness, minimum_dilation
from src.errors import KTooSmall, LatticeError
from src.geometry import enumerate_lattice_points, even_points, is_vertex
from src.models.dilation import DilationReport, WitnessFailure, WitnessPath
from src.models.lattice import Simplex

logger = get_logger(__name__)


def verify_dilation_theorem(
    s: Simplex,
    k: int,
    max_box_points: int | None = None,
    depth_budget: int | None = None,
    keep_witnesses: bool = True,
) -> DilationReport:
    """Witness every non-vertex point of kU ∩ Z^n and tally the construction paths.

    Points are processed in sorted order, so the report is deterministic.

    Raises:
        KTooSmall: If k < max{2, n-2}
        BudgetExceeded: Propagated from enumeration
    """
    minimum = minimum_dilation(s.n)
    if k < minimum:
        raise KTooSmall(f"k={k} is below max{{2, n-2}}={minimum}", k=k, minimum=minimum)

    points = enumerate_lattice_points(s, k, max_box_points=max_box_points)
    if depth_budget is None:
        depth_budget = settings.dilation.max_depth or len(even_points(points))

    path_counts: Counter[str] = Counter({path.value: 0 for path in WitnessPath})
    witnesses = []
    failures = []
    max_depth = 0
    non_vertex = 0

    for point in sorted(points):
        if is_vertex(s, k, point):
            continue
        non_vertex += 1
        try:
            pair = mediation_witness(s, k, point, depth_budget=depth_budget)
        except LatticeError as e:
            logger.error(
                "Point not witnessed",
                point=point,
                error_type=type(e).__name__,
                error=str(e),
            )
            failures.append(
                WitnessFailure(point=point, error_type=type(e).__name__, message=str(e))
            )
            continue
        path_counts[pair.path.value] += 1
        max_depth = max(max_depth, pair.depth)
        if keep_witnesses:
            witnesses.append(pair)

    report = DilationReport(
        k=k,
        n=s.n,
        lattice_point_count=len(points),
        non_vertex_count=non_vertex,
        witnessed_count=non_vertex - len(failures),
        path_counts=dict(sorted(path_counts.items())),
        max_subdivision_depth=max_depth,
        witnesses=witnesses,
        failures=failures,
    )
    logger.info(
        "Dilation theorem checked",
        k=k,
        n=s.n,
        lattice_points=len(points),
        failures=len(failures),
        path_counts=report.path_counts,
    )
    return report
