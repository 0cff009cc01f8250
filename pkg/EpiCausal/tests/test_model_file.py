"""
Тесты загрузки и записи файлов моделей.
"""

import json
import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from core.causal import edges
from core.exceptions import (
    ComplianceError,
    EmptyTeamError,
    ModelFileError,
    NonRecursiveModelError,
)
from storage.model_file import dump_model_file, load_model_file, model_document
from utils.generators import GeneratorConfig, ModelGenerator


CIRCUIT = {
    "signature": {
        "exogenous": ["B", "C"],
        "endogenous": ["S"],
        "ranges": {"B": [0, 1], "C": [0, 1], "S": [0, 1]},
    },
    "functions": {"S": {"expr": "if B = 1 and C = 1 then 1 else 0"}},
    "team": [{"B": 0, "C": 0}, {"B": 0, "C": 1}],
    "actual": 1,
}


@pytest.fixture
def write_model(tmp_path):
    def write(document, name="model.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return write


def variant(**changes):
    document = json.loads(json.dumps(CIRCUIT))
    document.update(changes)
    return document


class TestLoadBundledModels:
    """Модели из каталога models."""

    def test_circuit(self, models_dir, circuit_functions, a1, a2, circuit_pointed):
        loaded = load_model_file(models_dir / "circuit.json")
        assert loaded.functions == circuit_functions
        assert loaded.team == (a1, a2)
        assert loaded.actual == a2
        assert loaded.pointed() == circuit_pointed

    def test_constant(self, models_dir):
        loaded = load_model_file(models_dir / "constant.json")
        assert edges(loaded.functions) == []
        assert {member["X"] for member in loaded.team} == {"1"}

    def test_cyclic(self, models_dir):
        loaded = load_model_file(models_dir / "cyclic.json")
        with pytest.raises(NonRecursiveModelError):
            loaded.epistemic()


class TestLoadErrors:
    """Ошибки файлов."""

    def test_missing_file(self, tmp_path):
        with pytest.raises(ModelFileError):
            load_model_file(tmp_path / "absent.json")

    def test_not_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{signature", encoding="utf-8")
        with pytest.raises(ModelFileError):
            load_model_file(path)

    def test_unknown_field(self, write_model):
        with pytest.raises(ModelFileError):
            load_model_file(write_model(variant(comment="x")))

    def test_expr_and_table_together(self, write_model):
        functions = {"S": {"expr": "B", "table": []}}
        with pytest.raises(ModelFileError):
            load_model_file(write_model(variant(functions=functions)))

    def test_missing_function(self, write_model):
        with pytest.raises(ModelFileError):
            load_model_file(write_model(variant(functions={})))

    def test_function_for_exogenous(self, write_model):
        functions = dict(CIRCUIT["functions"], B={"expr": "0"})
        with pytest.raises(ModelFileError):
            load_model_file(write_model(variant(functions=functions)))

    def test_uncovered_table(self, write_model):
        functions = {"S": {"table": [{"when": {"B": 1, "C": 1}, "then": 1}]}}
        with pytest.raises(ModelFileError):
            load_model_file(write_model(variant(functions=functions)))

    def test_table_with_default(self, write_model, circuit_functions):
        functions = {"S": {"table": [{"when": {"B": 1, "C": 1}, "then": 1}], "default": 0}}
        loaded = load_model_file(write_model(variant(functions=functions)))
        assert loaded.functions == circuit_functions

    def test_bad_signature(self, write_model):
        signature = dict(CIRCUIT["signature"], ranges={"B": [0, 1], "C": [0, 1]})
        with pytest.raises(ModelFileError):
            load_model_file(write_model(variant(signature=signature)))

    def test_noncompliant_full_row(self, write_model):
        team = [{"B": 1, "C": 1, "S": 0}]
        with pytest.raises(ComplianceError):
            load_model_file(write_model(variant(team=team, actual=0)))

    def test_partial_row(self, write_model):
        with pytest.raises(ModelFileError):
            load_model_file(write_model(variant(team=[{"B": 0}], actual=0)))

    def test_actual_out_of_range(self, write_model):
        with pytest.raises(ModelFileError):
            load_model_file(write_model(variant(actual=5)))

    def test_actual_as_row(self, write_model, a1):
        loaded = load_model_file(write_model(variant(actual={"B": 0, "C": 0})))
        assert loaded.actual == a1

    def test_no_actual(self, write_model):
        document = variant()
        del document["actual"]
        loaded = load_model_file(write_model(document))
        with pytest.raises(ModelFileError):
            loaded.pointed()

    def test_empty_team(self, write_model):
        document = variant(team=[])
        del document["actual"]
        loaded = load_model_file(write_model(document))
        assert len(loaded.causal_team()) == 0
        with pytest.raises(EmptyTeamError):
            loaded.epistemic()


class TestDump:
    """Запись и повторная загрузка."""

    def test_circuit_round_trip(self, tmp_path, circuit_functions, a1, a2):
        path = tmp_path / "circuit.json"
        dump_model_file(path, circuit_functions, (a1, a2), a2)
        loaded = load_model_file(path)
        assert loaded.functions == circuit_functions
        assert loaded.team == (a1, a2)
        assert loaded.actual == a2

    def test_rows_by_parents(self, circuit_functions, a1):
        document = model_document(circuit_functions, (a1,))
        rows = document["functions"]["S"]["table"]
        assert len(rows) == 4
        assert {"when": {"B": 1, "C": 1}, "then": 1} in rows
        assert "actual" not in document

    def test_constant_has_single_row(self, models_dir):
        loaded = load_model_file(models_dir / "constant.json")
        document = model_document(loaded.functions, loaded.team)
        assert document["functions"]["X"]["table"] == [{"when": {}, "then": 1}]

    @settings(
        max_examples=40,
        deadline=None,
        suppress_health_check=[HealthCheck.function_scoped_fixture],
    )
    @given(seed=st.integers(min_value=0, max_value=1_000_000))
    def test_random_round_trip(self, tmp_path, seed):
        rng = random.Random(seed)
        team = ModelGenerator(GeneratorConfig(seed=seed), rng).causal_team()
        path = tmp_path / f"model_{seed}.json"
        dump_model_file(path, team.functions, team.team)
        loaded = load_model_file(path)
        assert loaded.functions == team.functions
        assert loaded.team == team.team
