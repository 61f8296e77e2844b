"""Command services package."""

from src.services.command_service import CommandError, CommandService

__all__ = [
    "CommandError",
    "CommandService",
]
