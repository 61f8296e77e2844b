"""Transformer for converting domain results into JSON-ready report payloads."""

from typing import Any, Iterable

from structlog import get_logger

from src.models.agiform import Agiform, BinomialSquareDecomposition, SquareTerm
from src.models.dilation import DilationReport, WitnessPair
from src.models.documents import ReportDocument
from src.models.lattice import LatticePoint, Simplex
from src.models.mediated import MediationCertificate, SosMembership
from src.models.sampling import PsdSampleReport
from src.poly import SparsePolynomial
from src.poly.polynomial import default_variables
from src.utils.rational import format_fraction

logger = get_logger(__name__)


class ReportTransformer:
    """Transforms lattice, agiform and witness results to report payloads.

    Payloads use lists for points, ``"p/q"`` strings for rationals and sorted
    orders everywhere, so equal results serialize to identical JSON.
    """

    @staticmethod
    def point(p: LatticePoint) -> list[int]:
        return list(p)

    @staticmethod
    def points(points: Iterable[LatticePoint]) -> list[list[int]]:
        return [list(p) for p in sorted(points)]

    @staticmethod
    def polynomial(p: SparsePolynomial) -> dict[str, Any]:
        return {"text": p.to_string(), "terms": p.to_dict()}

    @staticmethod
    def simplex(s: Simplex) -> dict[str, Any]:
        return {
            "vertices": [list(v) for v in s.vertices],
            "degree_sum": s.degree_sum,
            "n": s.n,
        }

    @staticmethod
    def agiform(a: Agiform) -> dict[str, Any]:
        return {
            "apex": list(a.apex),
            "weights": [format_fraction(w) for w in a.weights.weights],
            "scale": format_fraction(a.scale),
            "polynomial": ReportTransformer.polynomial(a.to_polynomial()),
        }

    @staticmethod
    def certificate(certificate: MediationCertificate) -> list[dict[str, Any]]:
        return [
            {"point": list(y), "pair": [list(z) for z in certificate.entries[y]]}
            for y in certificate.points()
        ]

    @staticmethod
    def membership(membership: SosMembership) -> dict[str, Any]:
        return {
            "sos": membership.is_sos,
            "apex": list(membership.apex),
            "maximal_set": ReportTransformer.points(membership.maximal_set),
            "chain": ReportTransformer.certificate(membership.chain),
        }

    @staticmethod
    def square(term: SquareTerm, variables: tuple[str, ...]) -> dict[str, Any]:
        binomial = SparsePolynomial({term.plus: 1, term.minus: -1}, len(term.plus))
        coefficient = format_fraction(term.coefficient)
        prefix = "" if term.coefficient == 1 else f"{coefficient}*"
        return {
            "coefficient": coefficient,
            "plus": list(term.plus),
            "minus": list(term.minus),
            "text": f"{prefix}({binomial.to_string(variables)})^2",
        }

    @staticmethod
    def decomposition(d: BinomialSquareDecomposition) -> dict[str, Any]:
        """Squares are rendered in y_i = x_i^(1/k) when the root degree k exceeds 1."""
        if d.root_degree == 1:
            variables = default_variables(d.arity)
        else:
            variables = tuple(f"y{i + 1}" for i in range(d.arity))
        terms = sorted(
            (ReportTransformer.square(t, variables) for t in d.terms),
            key=lambda t: (t["plus"], t["minus"]),
        )
        return {
            "root_degree": d.root_degree,
            "square_count": len(d),
            "squares": terms,
            "text": " + ".join(t["text"] for t in terms) or "0",
            "expansion": ReportTransformer.polynomial(d.to_source_polynomial()),
        }

    @staticmethod
    def witness(pair: WitnessPair) -> dict[str, Any]:
        data: dict[str, Any] = {
            "target": list(pair.target),
            "z1": list(pair.z1),
            "z2": list(pair.z2),
            "path": pair.path_label(),
        }
        if pair.resolved_by is not None:
            data["resolved_by"] = pair.resolved_by.value
        return data

    @staticmethod
    def dilation_report(report: DilationReport) -> dict[str, Any]:
        return {
            "k": report.k,
            "n": report.n,
            "ok": report.ok,
            "lattice_point_count": report.lattice_point_count,
            "non_vertex_count": report.non_vertex_count,
            "witnessed_count": report.witnessed_count,
            "path_counts": dict(sorted(report.path_counts.items())),
            "max_subdivision_depth": report.max_subdivision_depth,
            "witnesses": [ReportTransformer.witness(w) for w in report.witnesses],
            "failures": [
                {"point": list(f.point), "error_type": f.error_type, "message": f.message}
                for f in report.failures
            ],
        }

    @staticmethod
    def sample_report(report: PsdSampleReport) -> dict[str, Any]:
        return {
            "count": report.count,
            "seed": report.seed,
            "min_values": {
                str(k): format_fraction(v) for k, v in sorted(report.min_values.items())
            },
            "all_nonnegative": report.all_nonnegative,
            "negative_values": report.negative_values,
            "alternate_agrees": report.alternate_agrees,
            "equality_value": format_fraction(report.equality_value),
        }

    @staticmethod
    def to_text(report: ReportDocument) -> str:
        """Human-readable summary: one ``key: value`` line per scalar, nested keys dotted."""
        lines = [f"command: {report.command}"]
        if report.input_digest:
            lines.append(f"input_digest: {report.input_digest}")
        lines.append(f"status: {'ok' if report.success else 'failed'} (exit {report.exit_code})")
        lines.extend(_flatten(report.result, "result"))
        for error in report.errors:
            lines.append(f"error [{error.step}] {error.error_type}: {error.message}")
        if report.timing:
            lines.extend(_flatten(report.timing, "timing"))
        return "\n".join(lines)


def _flatten(value: Any, prefix: str) -> list[str]:
    if isinstance(value, dict):
        if "text" in value and isinstance(value["text"], str):
            return [f"{prefix}: {value['text']}"]
        lines: list[str] = []
        for key in sorted(value):
            lines.extend(_flatten(value[key], f"{prefix}.{key}"))
        return lines
    if isinstance(value, list):
        if not value:
            return [f"{prefix}: []"]
        if all(isinstance(v, int) for v in value):
            return [f"{prefix}: ({', '.join(str(v) for v in value)})"]
        if len(value) > 20:
            return [f"{prefix}: {len(value)} entries"]
        lines = []
        for index, item in enumerate(value):
            lines.extend(_flatten(item, f"{prefix}[{index}]"))
        return lines
    return [f"{prefix}: {value}"]
