"""
Тесты согласия семантики команд с переводами tr и tr*.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from core.exceptions import CapExceededError, EmptyTeamError
from teams.equivalence import check_global_equivalence, check_local_equivalence
from teams.formulas import CausalTeam, Dep
from teams.parser import parse_cod
from utils.generators import FormulaGenerator, GeneratorConfig, ModelGenerator


CIRCUIT_FORMULAS = (
    "dep(B; S)",
    "dep(; C)",
    "C=1 |> S=0",
    "C=0 \\/ C=1",
    "[[B:=1]] dep(C; S)",
    "[[B:=1]] S=1",
    "S!=1 & (C=1 |> dep(B; S))",
)


@pytest.fixture
def circuit_team(circuit_model) -> CausalTeam:
    return CausalTeam.from_epistemic(circuit_model)


def small_case(seed: int):
    rng = random.Random(seed)
    config = GeneratorConfig(
        seed=seed, max_variables=2, max_range_size=2, max_team_size=3, max_formula_depth=3
    )
    team = ModelGenerator(config, rng).causal_team()
    formula = FormulaGenerator(team.signature, config, rng).cod()
    return team, formula


class TestGlobalEquivalence:
    """T ⊨ φ тогда и только тогда, когда tr(φ) истинна во всех точках."""

    def test_dependence_on_circuit(self, circuit_team):
        report = check_global_equivalence(circuit_team, Dep(("B",), "S"))
        assert report.team_verdict is True
        assert report.translated_verdict is True
        assert report.agree
        assert report.formula == "dep(B; S)"

    @pytest.mark.parametrize("text", CIRCUIT_FORMULAS)
    def test_circuit(self, circuit_team, text):
        assert check_global_equivalence(circuit_team, parse_cod(text)).agree

    def test_empty_team_rejected(self, circuit_functions):
        with pytest.raises(EmptyTeamError):
            check_global_equivalence(CausalTeam(circuit_functions, ()), Dep((), "S"))

    def test_caps_forwarded(self, circuit_team):
        with pytest.raises(CapExceededError):
            check_global_equivalence(circuit_team, parse_cod("dep(B, C; S)"), expansion_cap=2)

    @settings(max_examples=80, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=1_000_000))
    def test_random(self, seed):
        team, formula = small_case(seed)
        assert check_global_equivalence(team, formula).agree


class TestLocalEquivalence:
    """Оба направления перевода tr*."""

    @pytest.mark.parametrize("text", CIRCUIT_FORMULAS)
    def test_circuit(self, circuit_team, text):
        report = check_local_equivalence(circuit_team, parse_cod(text))
        assert report.agree
        assert report.pointing_invariant

    def test_report_directions(self, circuit_team):
        report = check_local_equivalence(circuit_team, parse_cod("dep(; C)"))
        assert report.team_verdict is False
        assert not any(report.pointing_verdicts.values())
        assert report.truth_implies_all_points
        assert report.some_point_implies_truth

    @settings(max_examples=80, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=1_000_000))
    def test_random(self, seed):
        team, formula = small_case(seed)
        assert check_local_equivalence(team, formula).agree
