"""
Тесты для эпистемических причинных моделей.

Интервенции над командой, ограничение команды, модели с указателем.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from core.causal import (
    CausalModel,
    InterventionAssignment,
    Signature,
    StructuralFunctionSet,
    Valuation,
    complies,
    intervene_model,
)
from core.epistemic import (
    EpistemicCausalModel,
    PointedModel,
    as_epistemic,
    canonical_team,
    intervene_team,
    pointed_intervene,
    restrict_team,
)
from core.exceptions import ComplianceError, EmptyTeamError, InterventionError, SignatureError
from utils.generators import FormulaGenerator, GeneratorConfig, ModelGenerator


B1 = InterventionAssignment.of(("B", 1))


def team_dicts(model: EpistemicCausalModel) -> list[dict[str, str]]:
    return [member.as_dict() for member in model.team]


class TestEpistemicCausalModel:
    """Тесты инвариантов модели."""

    def test_empty_team_rejected(self, circuit_functions):
        with pytest.raises(EmptyTeamError):
            EpistemicCausalModel(functions=circuit_functions, team=())

    def test_noncompliant_member_rejected(self, circuit_signature, circuit_functions):
        bad = Valuation.from_mapping(circuit_signature, {"B": 1, "C": 1, "S": 0})
        with pytest.raises(ComplianceError):
            EpistemicCausalModel(functions=circuit_functions, team=(bad,))

    def test_team_is_deduplicated_and_sorted(self, circuit_functions, a1, a2):
        model = EpistemicCausalModel(functions=circuit_functions, team=(a2, a1, a2))
        assert model.team == (a1, a2)

    def test_pointed_requires_member(self, circuit_functions, a1, a2):
        model = EpistemicCausalModel(functions=circuit_functions, team=(a1,))
        with pytest.raises(SignatureError):
            PointedModel(model=model, actual=a2)

    def test_pointings(self, circuit_model):
        assert [pointed.actual for pointed in circuit_model.pointings()] == list(circuit_model.team)


class TestInterveneTeam:
    """Тесты эпистемической интервенции."""

    def test_circuit_team_after_b1(self, circuit_model):
        result = intervene_team(circuit_model, B1)
        assert team_dicts(result) == [
            {"B": "1", "C": "0", "S": "0"},
            {"B": "1", "C": "1", "S": "1"},
        ]

    def test_empty_assignment(self, circuit_model):
        assert intervene_team(circuit_model, InterventionAssignment()) == circuit_model

    def test_members_can_merge(self, circuit_functions, circuit_signature):
        first = Valuation.from_mapping(circuit_signature, {"B": 0, "C": 0, "S": 0})
        second = Valuation.from_mapping(circuit_signature, {"B": 1, "C": 0, "S": 0})
        model = EpistemicCausalModel(functions=circuit_functions, team=(first, second))
        result = intervene_team(model, InterventionAssignment.of(("C", 0), ("B", 0)))
        assert len(result.team) == 1

    def test_invalid_assignment(self, circuit_model):
        with pytest.raises(InterventionError):
            intervene_team(circuit_model, InterventionAssignment.of(("S", 3)))

    def test_members_comply_after_intervention(self, circuit_model):
        result = intervene_team(circuit_model, InterventionAssignment.of(("S", 1)))
        assert all(complies(member, result.functions) for member in result.team)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=100_000))
    def test_pointwise_image(self, seed):
        rng = random.Random(seed)
        config = GeneratorConfig(seed=seed)
        model = ModelGenerator(config, rng).model()
        assignment = FormulaGenerator(model.signature, config, rng).assignment()
        result = intervene_team(model, assignment)
        expected = canonical_team(
            intervene_model(CausalModel(model.functions, member), assignment).valuation
            for member in model.team
        )
        assert result.team == expected
        assert all(complies(member, result.functions) for member in result.team)


class TestRestrictTeam:
    """Тесты ограничения команды."""

    def test_keep_c1(self, circuit_model, a2):
        result = restrict_team(circuit_model, lambda member: member["C"] == "1")
        assert result.team == (a2,)

    def test_keep_all(self, circuit_model):
        assert restrict_team(circuit_model, lambda member: True) == circuit_model

    def test_keep_none(self, circuit_model):
        with pytest.raises(EmptyTeamError):
            restrict_team(circuit_model, lambda member: False)

    def test_successive_restrictions_compose(self, circuit_model):
        def p(member):
            return member["B"] == "0"

        def q(member):
            return member["C"] == "0"

        twice = restrict_team(restrict_team(circuit_model, p), q)
        once = restrict_team(circuit_model, lambda member: p(member) and q(member))
        assert twice == once


class TestPointedIntervene:
    """Тесты интервенции над моделью с указателем."""

    def test_actual_a2(self, circuit_pointed):
        result = pointed_intervene(circuit_pointed, B1)
        assert result.actual.as_dict() == {"B": "1", "C": "1", "S": "1"}
        assert result.actual in result.model

    def test_actual_a1(self, circuit_model, a1):
        result = pointed_intervene(PointedModel(circuit_model, a1), B1)
        assert result.actual.as_dict() == {"B": "1", "C": "0", "S": "0"}

    def test_empty_assignment(self, circuit_pointed):
        assert pointed_intervene(circuit_pointed, InterventionAssignment()) == circuit_pointed


class TestAsEpistemic:
    """Тесты представления причинной модели."""

    def test_singleton_team(self, circuit_functions, a2):
        pointed = as_epistemic(CausalModel(circuit_functions, a2))
        assert pointed.model.team == (a2,)
        assert pointed.actual == a2

    def test_no_exogenous_variables(self):
        signature = Signature.build([], ["X"], {"X": [0, 1]})
        functions = StructuralFunctionSet(signature, {"X": 1})
        valuation = Valuation.from_mapping(signature, {"X": 1})
        assert as_epistemic(CausalModel(functions, valuation)).actual["X"] == "1"
