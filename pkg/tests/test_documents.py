"""Tests for input documents, report documents and digests."""

from fractions import Fraction

import pytest

from src.errors import DocumentError, RaggedInput
from src.models.documents import CommandRequest, ReportDocument, SimplexDocument
from src.utils.digest import DIGEST_LENGTH, canonical_json, input_digest
from tests.conftest import U1_VERTICES, load_fixture


class TestSimplexDocument:
    """Tests for SimplexDocument parsing."""

    def test_motzkin_fixture(self, fixtures_dir):
        document = SimplexDocument.from_file(fixtures_dir / "motzkin.json")
        assert document.vertices == U1_VERTICES
        assert document.apex == (2, 2, 2)
        assert document.scale == Fraction(3)

    def test_apex_and_scale_optional(self, fixtures_dir):
        document = SimplexDocument.from_file(fixtures_dir / "standard_4.json")
        assert document.apex is None
        assert document.scale is None
        assert set(document.to_dict()) == {"vertices"}

    def test_ragged(self, fixtures_dir):
        with pytest.raises(RaggedInput) as excinfo:
            SimplexDocument.from_file(fixtures_dir / "ragged.json")
        assert excinfo.value.exit_code == 2

    def test_float_scale_rejected(self, fixtures_dir):
        with pytest.raises(DocumentError):
            SimplexDocument.from_file(fixtures_dir / "float_scale.json")

    @pytest.mark.parametrize(
        "data",
        [
            [[2, 0], [0, 2]],
            {"vertices": [[2, 0], [0, True]]},
            {"vertices": [[2, 0], [0, 2.0]]},
            {"vertices": [[2, 0], [0, 2]], "apex": "1,1"},
            {"vertices": [[2, 0], [0, 2]], "weights": [1, 1]},
            {"apex": [1, 1]},
        ],
    )
    def test_bad_shapes(self, data):
        with pytest.raises(DocumentError):
            SimplexDocument.from_mapping(data)

    def test_bad_json(self):
        with pytest.raises(DocumentError):
            SimplexDocument.from_json("{vertices: ")

    def test_missing_file(self, tmp_path):
        with pytest.raises(DocumentError):
            SimplexDocument.from_file(tmp_path / "absent.json")

    def test_rational_scale_round_trip(self):
        document = SimplexDocument.from_mapping(
            {"vertices": [[2, 0], [0, 2]], "apex": [1, 1], "scale": "-6/4"}
        )
        assert document.scale == Fraction(-3, 2)
        assert document.to_dict()["scale"] == "-3/2"
        assert SimplexDocument.from_mapping(document.to_dict()) == document


class TestDigest:
    """Tests for canonical JSON and input digests."""

    def test_canonical_json_ignores_key_order(self):
        assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
        assert input_digest({"b": 1, "a": 2}) == input_digest({"a": 2, "b": 1})

    def test_digest_shape(self):
        digest = SimplexDocument.from_mapping(load_fixture("motzkin.json")).digest()
        assert len(digest) == DIGEST_LENGTH
        int(digest, 16)

    def test_digest_tracks_content(self):
        motzkin = SimplexDocument.from_mapping(load_fixture("motzkin.json"))
        hurwitz = SimplexDocument.from_mapping(load_fixture("hurwitz.json"))
        assert motzkin.digest() != hurwitz.digest()

    def test_equivalent_scales_share_a_digest(self):
        a = SimplexDocument.from_mapping({"vertices": [[2, 0], [0, 2]], "scale": "2/4"})
        b = SimplexDocument.from_mapping({"vertices": [[2, 0], [0, 2]], "scale": "1/2"})
        assert a.digest() == b.digest()


class TestReportDocument:
    """Tests for report serialization and argument echoes."""

    def test_timing_omitted_by_default(self):
        text = ReportDocument(command="mediated").to_json()
        assert '"timing"' not in text
        assert '"input"' not in text

    def test_nested_nulls_survive(self):
        report = ReportDocument(command="witness", result={"witness": {"resolved_by": None}})
        assert '"resolved_by": null' in report.to_json()

    def test_sorted_keys(self):
        text = ReportDocument(command="demo", result={"b": 1, "a": 2}).to_json()
        assert text.index('"a"') < text.index('"b"')
        assert text.index('"command"') < text.index('"result"')

    def test_arguments_echo(self):
        request = CommandRequest(
            command="witness", input_path="u.json", k=2, point=(4, 4, 4), include_timing=True
        )
        assert request.arguments() == {"k": 2, "point": [4, 4, 4]}
