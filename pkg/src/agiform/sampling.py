"""Seeded exact-rational sampling of the Horn form."""

import random
from fractions import Fraction
from typing import Sequence

from structlog import get_logger

from src.agiform.forms import horn_alternate, horn_form
from src.config import settings
from src.models.sampling import PsdSampleReport

logger = get_logger(__name__)

EQUALITY_POINT = (1, 1, 0, 0, 0)


def random_rational(
    rng: random.Random,
    numerator_bound: int | None = None,
    denominator_bound: int | None = None,
) -> Fraction:
    if numerator_bound is None:
        numerator_bound = settings.sampling.numerator_bound
    if denominator_bound is None:
        denominator_bound = settings.sampling.denominator_bound
    return Fraction(
        rng.randint(-numerator_bound, numerator_bound), rng.randint(1, denominator_bound)
    )


def horn_psd_sample(
    count: int,
    seed: int | None = None,
    powers: Sequence[int] = (1, 2, 3),
) -> PsdSampleReport:
    """Evaluate F(x^k) for each power k at ``count`` random rational points.

    The alternate representation is evaluated at the same points and must agree
    with F exactly.
    """
    if count < 1:
        raise ValueError(f"Sample count must be positive, got {count}")
    seed = settings.sampling.default_seed if seed is None else seed
    rng = random.Random(seed)

    form = horn_form()
    alternate = horn_alternate()
    powered = {k: form.substitute_power(k) for k in powers}
    minimum: dict[int, Fraction] = {}
    negatives = 0
    agrees = True

    for _ in range(count):
        point = [random_rational(rng) for _ in range(form.arity)]
        for k, poly in powered.items():
            value = poly.evaluate(point)
            if k == 1 and value != alternate.evaluate(point):
                agrees = False
            if value < 0:
                negatives += 1
                logger.warning("Negative Horn value", power=k, point=[str(v) for v in point])
            if k not in minimum or value < minimum[k]:
                minimum[k] = value

    report = PsdSampleReport(
        count=count,
        seed=seed,
        min_values=minimum,
        negative_values=negatives,
        alternate_agrees=agrees,
        equality_value=form.evaluate(EQUALITY_POINT),
    )
    logger.info(
        "Horn sampling finished",
        count=count,
        seed=seed,
        all_nonnegative=report.all_nonnegative,
    )
    return report
