"""Result transformation package."""

from src.transformers.report_transformer import ReportTransformer

__all__ = ["ReportTransformer"]
