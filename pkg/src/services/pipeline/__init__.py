"""Pipeline infrastructure for CLI commands."""

from .base_step import PipelineStep
from .context import PipelineContext
from .pipeline import Pipeline

__all__ = ["Pipeline", "PipelineContext", "PipelineStep"]
