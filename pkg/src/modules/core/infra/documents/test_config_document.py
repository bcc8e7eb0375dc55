"""Tests for the scenario file documents."""

import json

import pytest
from pydantic import ValidationError

from src.modules.core.infra.documents.config_document import SimConfigDocument


class TestSimConfigDocument:
    """Tests for SimConfigDocument."""

    def test_only_present_keys_override(self, tmp_path):
        """Test that absent keys are not reported as overrides."""
        path = tmp_path / "scenario.json"
        path.write_text(
            json.dumps({"node_count": 80, "harvest": {"carry_over": True}}), encoding="utf-8"
        )

        document = SimConfigDocument.from_file(path)

        assert document.overrides() == {"node_count": 80, "harvest": {"carry_over": True}}

    def test_unknown_key(self):
        """Test that a misspelt key is refused."""
        with pytest.raises(ValidationError):
            SimConfigDocument.model_validate({"node_cuont": 80})

    def test_unknown_nested_key(self):
        """Test that sections forbid unknown keys too."""
        with pytest.raises(ValidationError):
            SimConfigDocument.model_validate({"radio": {"e_elc": 1e-9}})

    @pytest.mark.parametrize(
        "document",
        [
            {"node_count": "many"},
            {"bs_position": [1, 2, 3]},
            {"tour_solver": "genetic"},
        ],
    )
    def test_wrong_types(self, document):
        """Test values of the wrong shape."""
        with pytest.raises(ValidationError):
            SimConfigDocument.model_validate(document)

    def test_missing_file(self, tmp_path):
        """Test that a missing file is an I/O error."""
        with pytest.raises(OSError):
            SimConfigDocument.from_file(tmp_path / "absent.json")
