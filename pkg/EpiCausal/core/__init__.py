"""
Ядро "EpiCausal": причинные и эпистемические модели.

Содержит:
- causal.py - сигнатуры, структурные функции, решение и интервенции
- epistemic.py - эпистемические причинные модели и операции над командами
- validators.py - проверка имён и значений
- exceptions.py - кастомные исключения
"""

from core.exceptions import (
    CapExceededError,
    ComplianceError,
    EmptyTeamError,
    EpiCausalError,
    EquivalenceFailure,
    FormulaSyntaxError,
    FormulaValidationError,
    FragmentError,
    InterventionError,
    ModelFileError,
    NonRecursiveModelError,
    SignatureError,
)
from core.causal import (
    CausalModel,
    InterventionAssignment,
    Signature,
    StructuralFunctionSet,
    Valuation,
    complies,
    intervene_model,
    parents,
    solve,
    topological_order,
)
from core.epistemic import (
    EpistemicCausalModel,
    PointedModel,
    as_epistemic,
    intervene_team,
    restrict_team,
)


__all__ = [
    # Exceptions
    "EpiCausalError",
    "SignatureError",
    "ComplianceError",
    "EmptyTeamError",
    "ModelFileError",
    "FormulaSyntaxError",
    "FormulaValidationError",
    "InterventionError",
    "FragmentError",
    "NonRecursiveModelError",
    "CapExceededError",
    "EquivalenceFailure",
    # Causal models
    "Signature",
    "Valuation",
    "InterventionAssignment",
    "StructuralFunctionSet",
    "CausalModel",
    "parents",
    "topological_order",
    "complies",
    "solve",
    "intervene_model",
    # Epistemic models
    "EpistemicCausalModel",
    "PointedModel",
    "intervene_team",
    "restrict_team",
    "as_epistemic",
]
