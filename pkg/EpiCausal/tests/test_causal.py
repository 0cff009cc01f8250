"""
Тесты для причинных моделей.

Сигнатуры, структурные функции, родители, рекурсивность,
решение и интервенции.
"""

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.causal import (
    CausalModel,
    InterventionAssignment,
    Signature,
    StructuralFunctionSet,
    Valuation,
    complies,
    compliant_valuations,
    edges,
    find_cycle,
    intervene_functions,
    intervene_model,
    is_recursive,
    parents,
    solve,
    topological_order,
)
from config.constants import INTERVENTION_CACHE_SIZE
from core.causal import _intervene_functions_cached
from core.exceptions import (
    ComplianceError,
    InterventionError,
    NonRecursiveModelError,
    SignatureError,
)
from utils.generators import GeneratorConfig, ModelGenerator


def cyclic_functions() -> StructuralFunctionSet:
    signature = Signature.build([], ["V1", "V2"], {"V1": [0, 1], "V2": [0, 1]})
    return StructuralFunctionSet.from_callables(
        signature, {"V1": lambda env: env["V2"], "V2": lambda env: env["V1"]}
    )


class TestSignature:
    """Тесты сигнатуры."""

    def test_canonical_order(self, circuit_signature):
        assert circuit_signature.variables == ("B", "C", "S")
        assert circuit_signature.position("S") == 2

    def test_values_are_normalized_to_strings(self, circuit_signature):
        assert circuit_signature.range_of("B") == ("0", "1")
        assert circuit_signature.value_index("B", 1) == circuit_signature.value_index("B", "1")

    def test_symbolic_values(self):
        signature = Signature.build(["W"], [], {"W": ["sun", "rain"]})
        assert signature.value_index("W", "rain") == 1

    def test_overlapping_variables_rejected(self):
        with pytest.raises(SignatureError):
            Signature.build(["X"], ["X"], {"X": [0, 1]})

    def test_empty_signature_rejected(self):
        with pytest.raises(SignatureError):
            Signature.build([], [], {})

    def test_empty_range_rejected(self):
        with pytest.raises(SignatureError):
            Signature.build(["X"], [], {"X": []})

    def test_duplicate_values_rejected(self):
        with pytest.raises(SignatureError):
            Signature.build(["X"], [], {"X": [0, "0"]})

    def test_missing_range_rejected(self):
        with pytest.raises(SignatureError):
            Signature.build(["X", "Y"], [], {"X": [0, 1]})

    def test_reserved_name_rejected(self):
        with pytest.raises(SignatureError):
            Signature.build(["K"], [], {"K": [0, 1]})

    def test_unknown_variable(self, circuit_signature):
        with pytest.raises(SignatureError):
            circuit_signature.position("Q")

    def test_value_out_of_range(self, circuit_signature):
        with pytest.raises(SignatureError):
            circuit_signature.value_index("B", 2)

    def test_valuations_enumerate_product(self, circuit_signature):
        assert len(list(circuit_signature.valuations())) == 8


class TestValuation:
    """Тесты valuation."""

    def test_from_mapping(self, circuit_signature):
        valuation = Valuation.from_mapping(circuit_signature, {"B": 0, "C": 1, "S": 0})
        assert valuation["C"] == "1"
        assert valuation.as_dict() == {"B": "0", "C": "1", "S": "0"}

    def test_partial_mapping_rejected(self, circuit_signature):
        with pytest.raises(SignatureError):
            Valuation.from_mapping(circuit_signature, {"B": 0, "C": 1})

    def test_unknown_variable_rejected(self, circuit_signature):
        with pytest.raises(SignatureError):
            Valuation.from_mapping(circuit_signature, {"B": 0, "C": 1, "S": 0, "Q": 0})

    def test_replace(self, a2):
        assert a2.replace({"B": 1}).as_dict() == {"B": "1", "C": "1", "S": "0"}

    def test_str(self, a2):
        assert str(a2) == "(B=0, C=1, S=0)"


class TestInterventionAssignment:
    """Тесты присваивания интервенции."""

    def test_duplicate_variable_rejected(self):
        with pytest.raises(InterventionError):
            InterventionAssignment.of(("B", 1), ("B", 0))

    def test_empty_is_falsy(self):
        assert not InterventionAssignment()

    def test_validate_for_out_of_range(self, circuit_signature):
        with pytest.raises(InterventionError):
            InterventionAssignment.of(("B", 5)).validate_for(circuit_signature)

    def test_validate_for_unknown_variable(self, circuit_signature):
        with pytest.raises(InterventionError):
            InterventionAssignment.of(("Q", 1)).validate_for(circuit_signature)

    def test_str(self):
        assert str(InterventionAssignment.of(("B", 1), ("C", 0))) == "[B:=1, C:=0]"


class TestStructuralFunctionSet:
    """Тесты таблиц структурных функций."""

    def test_tables_are_read_only(self, circuit_functions):
        with pytest.raises(ValueError):
            circuit_functions.table_for("S")[0, 0] = 1

    def test_wrong_shape_rejected(self, circuit_signature):
        with pytest.raises(SignatureError):
            StructuralFunctionSet(circuit_signature, {"S": np.zeros((2,), dtype=np.int64)})

    def test_out_of_range_output_rejected(self, circuit_signature):
        with pytest.raises(SignatureError):
            StructuralFunctionSet(circuit_signature, {"S": np.full((2, 2), 3)})

    def test_missing_table_rejected(self, circuit_signature):
        with pytest.raises(SignatureError):
            StructuralFunctionSet(circuit_signature, {})

    def test_equality_by_tables(self, circuit_signature, circuit_functions):
        same = StructuralFunctionSet(circuit_signature, {"S": [[0, 0], [0, 1]]})
        assert same == circuit_functions
        assert hash(same) == hash(circuit_functions)


class TestInterveneFunctions:
    """Наборы функций после интервенции."""

    def test_constant_table(self, circuit_functions):
        intervened = intervene_functions(circuit_functions, InterventionAssignment.of(("S", 1)))
        assert intervened.table_for("S").tolist() == [[1, 1], [1, 1]]
        assert circuit_functions.table_for("S").tolist() == [[0, 0], [0, 1]]

    def test_equal_sets_share_result(self, circuit_signature, circuit_functions):
        same = StructuralFunctionSet(circuit_signature, {"S": [[0, 0], [0, 1]]})
        assignment = InterventionAssignment.of(("S", 0))
        assert intervene_functions(same, assignment) is intervene_functions(
            circuit_functions, assignment
        )

    def test_cache_is_bounded(self, circuit_functions):
        assert _intervene_functions_cached.cache_info().maxsize == INTERVENTION_CACHE_SIZE
        before = dict(vars(circuit_functions))
        intervene_functions(circuit_functions, InterventionAssignment.of(("B", 1)))
        assert vars(circuit_functions).keys() == before.keys()


class TestParents:
    """Тесты непосредственных причин."""

    def test_circuit(self, circuit_functions):
        assert parents(circuit_functions, "S") == {"B", "C"}

    def test_constant_table(self, circuit_signature):
        functions = StructuralFunctionSet(circuit_signature, {"S": np.zeros((2, 2))})
        assert parents(functions, "S") == set()

    def test_copy_ignores_other_input(self, circuit_signature):
        functions = StructuralFunctionSet.from_callables(
            circuit_signature, {"S": lambda env: env["B"]}
        )
        assert parents(functions, "S") == {"B"}

    def test_exogenous_variable_rejected(self, circuit_functions):
        with pytest.raises(SignatureError):
            parents(circuit_functions, "B")

    def test_matches_definition(self, chain_functions):
        # Прямой перебор кванторов определения
        signature = chain_functions.signature
        for name in signature.endogenous:
            expected = set()
            for other in signature.others(name):
                for valuation in signature.valuations():
                    outputs = {
                        chain_functions.output_index(name, valuation.replace({other: value}).indices)
                        for value in signature.range_of(other)
                    }
                    if len(outputs) > 1:
                        expected.add(other)
            assert parents(chain_functions, name) == expected

    def test_edges_sorted(self, circuit_functions):
        assert edges(circuit_functions) == [("B", "S"), ("C", "S")]


class TestRecursivity:
    """Тесты рекурсивности и топологического порядка."""

    def test_circuit_is_recursive(self, circuit_functions):
        assert is_recursive(circuit_functions)

    def test_copy_cycle_is_not_recursive(self):
        assert not is_recursive(cyclic_functions())

    def test_chain_is_recursive(self, chain_functions):
        assert is_recursive(chain_functions)
        assert topological_order(chain_functions) == ("U", "X", "Y")

    def test_cycle_reported(self):
        functions = cyclic_functions()
        assert set(find_cycle(functions)) == {"V1", "V2"}
        with pytest.raises(NonRecursiveModelError) as info:
            topological_order(functions)
        assert set(info.value.cycle) == {"V1", "V2"}

    def test_lexicographic_tie_break(self, circuit_functions):
        assert topological_order(circuit_functions) == ("B", "C", "S")


class TestComplies:
    """Тесты согласованности."""

    def test_actual_world_complies(self, circuit_signature, circuit_functions):
        valuation = Valuation.from_mapping(circuit_signature, {"B": 0, "C": 1, "S": 0})
        assert complies(valuation, circuit_functions)

    def test_impossible_world(self, circuit_signature, circuit_functions):
        valuation = Valuation.from_mapping(circuit_signature, {"B": 1, "C": 1, "S": 0})
        assert not complies(valuation, circuit_functions)

    def test_no_endogenous_variables(self):
        signature = Signature.build(["U"], [], {"U": [0, 1]})
        functions = StructuralFunctionSet(signature, {})
        assert all(complies(valuation, functions) for valuation in signature.valuations())


class TestSolve:
    """Тесты решения модели."""

    @pytest.mark.parametrize(
        "b, c, s",
        [(1, 1, "1"), (0, 1, "0"), (1, 0, "0"), (0, 0, "0")],
    )
    def test_circuit(self, circuit_functions, b, c, s):
        valuation = solve(circuit_functions, {"B": b, "C": c})
        assert valuation.as_dict() == {"B": str(b), "C": str(c), "S": s}
        assert complies(valuation, circuit_functions)

    def test_missing_exogenous_value(self, circuit_functions):
        with pytest.raises(SignatureError):
            solve(circuit_functions, {"B": 1})

    def test_cyclic_functions_rejected(self):
        with pytest.raises(NonRecursiveModelError):
            solve(cyclic_functions(), {})

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=100_000))
    def test_unique_compliant_valuation(self, seed):
        generator = ModelGenerator(GeneratorConfig(seed=seed), random.Random(seed))
        signature = generator.signature()
        functions = generator.functions(signature)
        assert is_recursive(functions)
        compliant = list(compliant_valuations(functions))
        rows = itertools.product(*(signature.range_of(name) for name in signature.exogenous))
        for row in rows:
            expected = solve(functions, dict(zip(signature.exogenous, row)))
            matching = [
                valuation
                for valuation in compliant
                if tuple(valuation[name] for name in signature.exogenous) == row
            ]
            assert matching == [expected]


class TestCausalModel:
    """Тесты причинной модели и интервенций."""

    def test_noncompliant_valuation_rejected(self, circuit_signature, circuit_functions):
        valuation = Valuation.from_mapping(circuit_signature, {"B": 1, "C": 1, "S": 0})
        with pytest.raises(ComplianceError):
            CausalModel(circuit_functions, valuation)

    def test_cyclic_model_rejected(self):
        functions = cyclic_functions()
        valuation = Valuation.from_mapping(functions.signature, {"V1": 0, "V2": 0})
        with pytest.raises(NonRecursiveModelError):
            CausalModel(functions, valuation)

    def test_intervene_a1(self, circuit_functions, a1):
        model = intervene_model(CausalModel(circuit_functions, a1), InterventionAssignment.of(("B", 1)))
        assert model.valuation.as_dict() == {"B": "1", "C": "0", "S": "0"}

    def test_intervene_a2(self, circuit_functions, a2):
        model = intervene_model(CausalModel(circuit_functions, a2), InterventionAssignment.of(("B", 1)))
        assert model.valuation.as_dict() == {"B": "1", "C": "1", "S": "1"}

    def test_endogenous_intervention_breaks_dependency(self, circuit_functions, a2):
        assignment = InterventionAssignment.of(("S", 1))
        model = intervene_model(CausalModel(circuit_functions, a2), assignment)
        assert model.valuation.as_dict() == {"B": "0", "C": "1", "S": "1"}
        assert parents(model.functions, "S") == set()

    def test_empty_assignment(self, circuit_functions, a2):
        model = CausalModel(circuit_functions, a2)
        assert intervene_model(model, InterventionAssignment()) == model

    def test_out_of_range_intervention(self, circuit_functions, a2):
        with pytest.raises(InterventionError):
            intervene_model(CausalModel(circuit_functions, a2), InterventionAssignment.of(("B", 7)))

    def test_idempotent(self, chain_functions):
        model = CausalModel(chain_functions, solve(chain_functions, {"U": 0}))
        assignment = InterventionAssignment.of(("X", 1))
        once = intervene_model(model, assignment)
        assert intervene_model(once, assignment) == once

    def test_exogenous_immunity(self, chain_functions):
        model = CausalModel(chain_functions, solve(chain_functions, {"U": 1}))
        result = intervene_model(model, InterventionAssignment.of(("X", 0)))
        assert result.valuation["U"] == "1"
        assert result.valuation["Y"] == "0"
