"""Tests for the command pipeline and CommandService."""

import pytest

from src.errors import BudgetExceeded
from src.models.documents import CommandRequest
from src.services import CommandError, CommandService
from src.services.pipeline import Pipeline, PipelineContext, PipelineStep


class RecordingStep(PipelineStep):
    """Step that records its call and then succeeds, fails or raises."""

    def __init__(self, name, outcome=True, required=True):
        super().__init__(name)
        self.outcome = outcome
        self.required = required
        self.called = False

    async def execute(self, context):
        self.called = True
        if isinstance(self.outcome, Exception):
            raise self.outcome
        return self.outcome

    def is_required(self):
        return self.required


class TestPipeline:
    """Tests for Pipeline.execute."""

    async def test_all_steps_succeed(self):
        steps = [RecordingStep("A"), RecordingStep("B")]
        context = await Pipeline("test", steps).execute(PipelineContext("enumerate"))
        assert context.success
        assert context.exit_code == 0
        assert all(step.called for step in steps)
        assert set(context.timings) == {"A", "B"}
        assert context.stats["pipeline"]["successful_steps"] == 2

    async def test_stops_at_failed_required_step(self):
        steps = [
            RecordingStep("A", outcome=BudgetExceeded("too many", limit=1, visited=2)),
            RecordingStep("B"),
        ]
        context = await Pipeline("test", steps).execute(PipelineContext("enumerate"))
        assert not context.success
        assert context.exit_code == 3
        assert not steps[1].called
        assert context.errors[0].step == "A"
        assert context.errors[0].error_type == "BudgetExceeded"

    async def test_optional_failure_continues(self):
        steps = [RecordingStep("A", outcome=False, required=False), RecordingStep("B")]
        context = await Pipeline("test", steps).execute(PipelineContext("enumerate"))
        assert steps[1].called
        assert context.stats["pipeline"]["failed_steps"] == 1

    async def test_foreign_exception_maps_to_internal(self):
        steps = [RecordingStep("A", outcome=RuntimeError("boom"))]
        context = await Pipeline("test", steps).execute(PipelineContext("enumerate"))
        assert context.exit_code == 5
        assert context.errors[0].error_type == "RuntimeError"

    def test_step_names(self):
        pipeline = Pipeline("test", [RecordingStep("A")])
        pipeline.add_step(RecordingStep("B"))
        assert pipeline.get_step_names() == ["A", "B"]

    async def test_report_timing_is_opt_in(self):
        context = await Pipeline("test", [RecordingStep("A")]).execute(PipelineContext("demo"))
        assert context.get_report().timing is None
        timing = context.get_report(include_timing=True).timing
        assert set(timing) == {"steps", "total_seconds"}
        assert "A" in timing["steps"]


class TestCommandService:
    """Tests for CommandService.run."""

    async def test_is_sos_motzkin(self, fixtures_dir):
        request = CommandRequest(command="is-sos", input_path=str(fixtures_dir / "motzkin.json"))
        report = await CommandService().run(request)
        assert report.success
        assert report.result["sos"] is False
        assert report.result["agiform"]["weights"] == ["1/3", "1/3", "1/3"]
        assert report.input == {
            "vertices": [[4, 2, 0], [2, 4, 0], [0, 0, 6]],
            "apex": [2, 2, 2],
            "scale": "3",
        }

    async def test_is_sos_needs_apex(self, fixtures_dir):
        request = CommandRequest(command="is-sos", input_path=str(fixtures_dir / "standard_4.json"))
        report = await CommandService().run(request)
        assert report.exit_code == 2
        assert report.errors[0].error_type == "DocumentError"

    async def test_unexpected_error_in_step(self, fixtures_dir, mocker):
        mocker.patch(
            "src.services.pipeline.steps.is_sos_step.is_sos",
            side_effect=RuntimeError("solver crashed"),
        )
        request = CommandRequest(command="is-sos", input_path=str(fixtures_dir / "hurwitz.json"))
        report = await CommandService().run(request)
        assert report.exit_code == 5
        assert report.errors[0].step == "IsSos"
        assert report.errors[0].message == "solver crashed"

    async def test_decompose_hurwitz(self, fixtures_dir):
        request = CommandRequest(command="decompose", input_path=str(fixtures_dir / "hurwitz.json"))
        report = await CommandService().run(request)
        assert report.success
        assert report.result["verified"] is True
        assert report.result["decomposition"]["expansion"]["text"] == (
            "x^6 - 3*x^2*y^2*z^2 + y^6 + z^6"
        )

    async def test_decompose_motzkin_after_blowup(self, fixtures_dir):
        request = CommandRequest(
            command="decompose", input_path=str(fixtures_dir / "motzkin.json"), blowup=2
        )
        report = await CommandService().run(request)
        assert report.success
        assert report.result["decomposition"]["root_degree"] == 2
        assert report.result["verified"] is True

    @pytest.mark.slow
    async def test_demo_hurwitz_identities(self):
        request = CommandRequest(command="demo", name="hurwitz", check_identity=True)
        report = await CommandService().run(request)
        assert report.success
        assert report.result["sos"] is True
        assert report.result["explicit_decomposition_verified"] is True
        assert report.result["explicit_decomposition"]["square_count"] == 5
        assert report.input is None

    async def test_demo_horn_sampling(self):
        request = CommandRequest(command="demo", name="horn", samples=100, seed=1)
        report = await CommandService().run(request)
        sampling = report.result["sampling"]
        assert sampling["count"] == 100
        assert sampling["all_nonnegative"] is True
        assert sampling["equality_value"] == "0"

    @pytest.mark.parametrize(
        "request_kwargs",
        [
            {"command": "demo"},
            {"command": "witness", "input_path": "x.json", "k": 2},
            {"command": "verify-theorem", "input_path": "x.json"},
        ],
    )
    async def test_missing_arguments(self, request_kwargs):
        with pytest.raises(CommandError):
            await CommandService().run(CommandRequest(**request_kwargs))
