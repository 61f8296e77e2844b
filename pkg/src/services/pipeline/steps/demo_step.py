"""Step to run the named demonstrations: Motzkin, Hurwitz and Horn."""

import asyncio
from typing import Any

from src.agiform import (
    blowup_decompose,
    decompose,
    horn_alternate,
    horn_form,
    horn_psd_sample,
    horn_restriction_identity,
    hurwitz_explicit_decomposition,
    hurwitz_h,
    is_sos,
    motzkin,
)
from src.errors import InternalInvariantViolation
from src.models.agiform import Agiform
from src.services.pipeline import PipelineContext, PipelineStep
from src.transformers import ReportTransformer

BLOWUP_K = 2

EXACT_CHECKS = (
    "identity",
    "cyclic_symmetric",
    "restriction_identity",
    "explicit_decomposition_verified",
)


class DemoStep(PipelineStep):
    """Reproduce the worked examples exactly."""

    def __init__(
        self,
        name: str,
        check_identity: bool = False,
        samples: int | None = None,
        seed: int | None = None,
        max_box_points: int | None = None,
    ):
        """Initialize the step.

        Args:
            name: One of motzkin, hurwitz, horn
            check_identity: Also check the exact identities (blow-up, explicit squares, Horn forms)
            samples: Number of seeded Horn evaluations; None skips sampling
            seed: Sampling seed
            max_box_points: Enumeration budget override
        """
        super().__init__("Demo")
        self.demo = name
        self.check_identity = check_identity
        self.samples = samples
        self.seed = seed
        self.max_box_points = max_box_points

    async def execute(self, context: PipelineContext) -> bool:
        if self.demo == "horn":
            result = await asyncio.to_thread(self._horn)
        else:
            result = await asyncio.to_thread(self._agiform_demo)
        context.result = {"name": self.demo, **result}

        failed = [key for key in EXACT_CHECKS if result.get(key) is False]
        sampling = result.get("sampling")
        if sampling and not (sampling["all_nonnegative"] and sampling["alternate_agrees"]):
            failed.append("sampling")
        if failed:
            context.add_error(self.name, InternalInvariantViolation(f"Checks failed: {failed}"))
            return False
        return True

    def _agiform_demo(self) -> dict[str, Any]:
        agiform: Agiform = motzkin() if self.demo == "motzkin" else hurwitz_h()
        membership = is_sos(agiform, self.max_box_points)
        result: dict[str, Any] = {
            "polynomial": ReportTransformer.polynomial(agiform.to_polynomial()),
            "agiform": ReportTransformer.agiform(agiform),
            "sos": membership.is_sos,
            "maximal_set": ReportTransformer.points(membership.maximal_set),
        }
        if membership.is_sos:
            result["decomposition"] = ReportTransformer.decomposition(
                decompose(agiform, self.max_box_points)
            )
        if self.check_identity:
            blowup = blowup_decompose(agiform, BLOWUP_K, self.max_box_points)
            result["blowup"] = ReportTransformer.decomposition(blowup)
            if self.demo == "hurwitz":
                explicit = hurwitz_explicit_decomposition()
                result["explicit_decomposition"] = ReportTransformer.decomposition(explicit)
                result["explicit_decomposition_verified"] = explicit.verify(
                    agiform.to_polynomial()
                )
        return result

    def _horn(self) -> dict[str, Any]:
        form = horn_form()
        result: dict[str, Any] = {"polynomial": ReportTransformer.polynomial(form)}
        if self.check_identity:
            result["identity"] = form == horn_alternate()
            result["cyclic_symmetric"] = form.cyclic_shift() == form
            result["restriction_identity"] = horn_restriction_identity()
        if self.samples is not None:
            result["sampling"] = ReportTransformer.sample_report(
                horn_psd_sample(self.samples, self.seed)
            )
        return result
