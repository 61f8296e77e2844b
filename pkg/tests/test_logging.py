"""Tests for the structlog processors."""

from fractions import Fraction

from src.config.logging import add_command_prefix, render_exact_values


class TestProcessors:
    """Tests for the custom processors in src.config.logging."""

    def test_exact_values(self):
        event = render_exact_values(
            None, "info", {"event": "x", "weight": Fraction(1, 3), "apex": (2, 2, 2)}
        )
        assert event == {"event": "x", "weight": "1/3", "apex": [2, 2, 2]}

    def test_nested_points(self):
        event = render_exact_values(None, "info", {"pair": ((6, 6, 0), (2, 2, 8))})
        assert event["pair"] == [[6, 6, 0], [2, 2, 8]]

    def test_command_and_step_prefix(self):
        event = add_command_prefix(
            None, "info", {"event": "Decided sos", "command": "is-sos", "step": "IsSos"}
        )
        assert event == {"event": "[is-sos/IsSos] Decided sos"}

    def test_no_command_leaves_event(self):
        event = add_command_prefix(None, "info", {"event": "Decided sos", "step": "IsSos"})
        assert event == {"event": "Decided sos", "step": "IsSos"}
