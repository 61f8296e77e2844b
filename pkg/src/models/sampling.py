"""Pydantic models for seeded psd sampling."""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict


class PsdSampleReport(BaseModel):
    """Minimum of F(a^k) over seeded random rational points, per power k."""

    count: int
    seed: int
    min_values: dict[int, Fraction]
    negative_values: int
    alternate_agrees: bool
    equality_value: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def all_nonnegative(self) -> bool:
        return self.negative_values == 0
