"""Application settings and configuration management."""
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class EnumerationSettings(BaseSettings):
    """Lattice-point enumeration guardrails."""

    # Candidate tuples visited by the bounding-box scan (after coordinate-sum pruning)
    max_box_points: int = 10_000_000

    model_config = SettingsConfigDict(env_prefix="ENUM_")


class DilationSettings(BaseSettings):
    """Witness engine configuration."""

    # 0 = derive the subdivision budget from the even-point count of kU
    max_depth: int = 0
    # Re-check every witness pair against the dilated simplex before returning it
    strict_validation: bool = True

    model_config = SettingsConfigDict(env_prefix="DILATION_")


class DecompositionSettings(BaseSettings):
    """Binomial-square solver configuration."""

    max_pivots: int = 100_000

    model_config = SettingsConfigDict(env_prefix="DECOMP_")


class SamplingSettings(BaseSettings):
    """Seeded psd sampling of the Horn form."""

    default_samples: int = 10_000
    default_seed: int = 0
    numerator_bound: int = 50
    denominator_bound: int = 20

    model_config = SettingsConfigDict(env_prefix="SAMPLING_")


class LoggingSettings(BaseSettings):
    """Logging configuration."""

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"
    format: Literal["json", "console"] = "console"

    model_config = SettingsConfigDict(env_prefix="LOG_")


class Settings(BaseSettings):
    """Main application settings."""

    environment: Literal["dev", "test", "prod"] = "dev"

    # Sub-settings
    enumeration: EnumerationSettings = EnumerationSettings()
    dilation: DilationSettings = DilationSettings()
    decomposition: DecompositionSettings = DecompositionSettings()
    sampling: SamplingSettings = SamplingSettings()
    logging: LoggingSettings = LoggingSettings()

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )


# Global settings instance
settings = Settings()
