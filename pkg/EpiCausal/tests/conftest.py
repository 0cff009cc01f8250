"""
Общие фикстуры: схема из двух переключателей B, C и лампы S = B ∧ C.

Команда агента: A1 = (B=0, C=0, S=0) и A2 = (B=0, C=1, S=0),
актуальная valuation - A2.
"""

from pathlib import Path

import pytest

from core.causal import Signature, StructuralFunctionSet, solve
from core.epistemic import EpistemicCausalModel, PointedModel


MODELS_DIR = Path(__file__).resolve().parent.parent / "models"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: прогоны на полных размерах генераторов")


def circuit_lamp(env):
    return 1 if env["B"] == "1" and env["C"] == "1" else 0


@pytest.fixture
def models_dir() -> Path:
    return MODELS_DIR


@pytest.fixture
def circuit_signature() -> Signature:
    return Signature.build(["B", "C"], ["S"], {"B": [0, 1], "C": [0, 1], "S": [0, 1]})


@pytest.fixture
def circuit_functions(circuit_signature) -> StructuralFunctionSet:
    return StructuralFunctionSet.from_callables(circuit_signature, {"S": circuit_lamp})


@pytest.fixture
def a1(circuit_functions):
    return solve(circuit_functions, {"B": 0, "C": 0})


@pytest.fixture
def a2(circuit_functions):
    return solve(circuit_functions, {"B": 0, "C": 1})


@pytest.fixture
def circuit_model(circuit_functions, a1, a2) -> EpistemicCausalModel:
    return EpistemicCausalModel(functions=circuit_functions, team=(a1, a2))


@pytest.fixture
def circuit_pointed(circuit_model, a2) -> PointedModel:
    return PointedModel(model=circuit_model, actual=a2)


@pytest.fixture
def chain_signature() -> Signature:
    """U -> X -> Y с тернарным Y."""
    return Signature.build(["U"], ["X", "Y"], {"U": [0, 1], "X": [0, 1], "Y": [0, 1, 2]})


@pytest.fixture
def chain_functions(chain_signature) -> StructuralFunctionSet:
    return StructuralFunctionSet.from_callables(
        chain_signature,
        {
            "X": lambda env: env["U"],
            "Y": lambda env: 2 if env["X"] == "1" else 0,
        },
    )
