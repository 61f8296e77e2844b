"""structlog setup for the CLI and the library modules."""
import logging
import sys
from fractions import Fraction
from typing import Any

import structlog

from src.config.settings import settings
from src.utils.rational import format_fraction


def _exact(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, tuple):
        return [_exact(v) for v in value]
    if isinstance(value, list):
        return [_exact(v) for v in value]
    return value


def render_exact_values(
    logger: Any,
    method_name: str,
    event_dict: dict[str, Any],
) -> dict[str, Any]:
    """Log Fractions as ``"p/q"`` and lattice points as plain lists.

    JSONRenderer would otherwise fall back to ``repr`` for Fractions.
    """
    return {key: _exact(value) for key, value in event_dict.items()}


def add_command_prefix(
    logger: Any,
    method_name: str,
    event_dict: dict[str, Any],
) -> dict[str, Any]:
    """Prefix the event with ``[command]`` (and ``/step``) when they are bound.

    Args:
        logger: The logger instance
        method_name: The name of the method being called
        event_dict: The event dictionary containing log data

    Returns:
        Event dictionary with the prefix applied
    """
    command = event_dict.pop("command", None)
    if not command:
        return event_dict
    step = event_dict.pop("step", None)
    tag = f"{command}/{step}" if step else command
    event_dict["event"] = f"[{tag}] {event_dict.get('event', '')}"
    return event_dict


def _console_renderer(
    logger: Any,
    method_name: str,
    event_dict: dict[str, Any],
) -> str:
    """``[time] [LEVEL] event (key=value ...)`` with keys in sorted order."""
    ts = event_dict.pop("timestamp", "")
    level = event_dict.pop("level", method_name).upper()
    event = event_dict.pop("event", "")
    event_dict.pop("logger", None)

    line = f"[{ts}] [{level}] {event}"
    if event_dict:
        line += " (" + " ".join(f"{k}={event_dict[k]}" for k in sorted(event_dict)) + ")"
    return line


def configure_logging(level: str | None = None) -> None:
    """Route structlog through stdlib logging on stderr.

    stdout is reserved for report documents.

    Args:
        level: Optional level override (defaults to LOG_LEVEL)
    """
    log_level = getattr(logging, level or settings.logging.level)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)
    handler.setFormatter(logging.Formatter("%(message)s"))

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    root_logger.handlers.clear()
    root_logger.addHandler(handler)

    renderer = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if settings.logging.format == "json"
        else _console_renderer
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.format_exc_info,
            render_exact_values,
            add_command_prefix,
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> structlog.typing.FilteringBoundLogger:
    return structlog.get_logger(name)
