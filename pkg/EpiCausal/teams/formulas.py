"""
Язык каузальных команд COD.

Модуль обеспечивает:
- Узлы AST (Eq, Neq, Dep, And, Or, SelImp, Cf)
- CausalTeam: функции + возможно пустая команда
- Проверку формулы по сигнатуре и признаки фрагментов
"""

from dataclasses import dataclass
from typing import Iterator, Union

from core.causal import (
    InterventionAssignment,
    Signature,
    StructuralFunctionSet,
    Valuation,
    topological_order,
)
from core.epistemic import EpistemicCausalModel, canonical_team, check_team
from core.exceptions import EmptyTeamError, FormulaValidationError
from core.validators import check_value, normalize_value


# ============================================================
# УЗЛЫ AST
# ============================================================

@dataclass(frozen=True)
class Eq:
    """Y=y."""

    variable: str
    value: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", normalize_value(self.value))


@dataclass(frozen=True)
class Neq:
    """Y≠y."""

    variable: str
    value: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", normalize_value(self.value))


@dataclass(frozen=True)
class Dep:
    """Атом зависимости =(X;Y)."""

    xs: tuple[str, ...]
    y: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "xs", tuple(self.xs))


@dataclass(frozen=True)
class And:
    left: "CodFormula"
    right: "CodFormula"


@dataclass(frozen=True)
class Or:
    """Расщепляющая дизъюнкция."""

    left: "CodFormula"
    right: "CodFormula"


@dataclass(frozen=True)
class SelImp:
    """
    Селективная импликация α ⊃ φ.

    Антецедент не содержит атомов зависимости.
    """

    antecedent: "CodFormula"
    consequent: "CodFormula"

    def __post_init__(self) -> None:
        if not is_alpha(self.antecedent):
            raise FormulaValidationError("Антецедент ⊃ не может содержать dep(...)")


@dataclass(frozen=True)
class Cf:
    """
    Контрфактуал X=x □→ φ.

    Привязки хранятся как написаны: повтор переменной с другим
    значением делает антецедент противоречивым.
    """

    bindings: tuple[tuple[str, str], ...]
    body: "CodFormula"

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "bindings",
            tuple((name, normalize_value(value)) for name, value in self.bindings),
        )

    def assignment(self) -> InterventionAssignment | None:
        """
        Присваивание без повторов или None, если антецедент противоречив.
        """
        merged: dict[str, str] = {}
        for name, value in self.bindings:
            if merged.setdefault(name, value) != value:
                return None
        return InterventionAssignment(tuple(merged.items()))


CodFormula = Union[Eq, Neq, Dep, And, Or, SelImp, Cf]


# ============================================================
# ОБХОД И ФРАГМЕНТЫ
# ============================================================

def subformulas(formula: CodFormula) -> Iterator[CodFormula]:
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        match node:
            case And(left, right) | Or(left, right):
                stack.extend((right, left))
            case SelImp(antecedent, consequent):
                stack.extend((consequent, antecedent))
            case Cf(_, body):
                stack.append(body)


def is_alpha(formula: CodFormula) -> bool:
    """Нет атомов зависимости."""
    return not any(isinstance(node, Dep) for node in subformulas(formula))


def is_non_nested(formula: CodFormula) -> bool:
    """Под □→ нет других □→."""
    return all(
        not any(isinstance(inner, Cf) for inner in subformulas(node.body))
        for node in subformulas(formula)
        if isinstance(node, Cf)
    )


def validate_cod(formula: CodFormula, signature: Signature) -> None:
    """
    Проверить переменные и значения формулы по сигнатуре.

    Raises:
        FormulaValidationError: Неизвестная переменная или значение вне диапазона
    """
    for node in subformulas(formula):
        match node:
            case Eq(variable, value) | Neq(variable, value):
                check_value(signature, variable, value, FormulaValidationError)
            case Dep(xs, y):
                for name in (*xs, y):
                    if name not in signature:
                        raise FormulaValidationError(f"Неизвестная переменная: {name}")
            case Cf(bindings, _):
                for name, value in bindings:
                    check_value(signature, name, value, FormulaValidationError)


# ============================================================
# КАУЗАЛЬНАЯ КОМАНДА
# ============================================================

@dataclass(frozen=True)
class CausalTeam:
    """
    Каузальная команда ⟨T, F⟩.

    В отличие от эпистемической модели, команда может быть пустой.
    """

    functions: StructuralFunctionSet
    team: tuple[Valuation, ...]

    def __post_init__(self) -> None:
        team = canonical_team(self.team)
        topological_order(self.functions)
        check_team(self.functions, team)
        object.__setattr__(self, "team", team)

    @property
    def signature(self) -> Signature:
        return self.functions.signature

    def __len__(self) -> int:
        return len(self.team)

    def subteam(self, members) -> "CausalTeam":
        return CausalTeam(functions=self.functions, team=tuple(members))

    def to_epistemic(self) -> EpistemicCausalModel:
        """
        Соответствующая эпистемическая модель.

        Raises:
            EmptyTeamError: Команда пуста
        """
        if not self.team:
            raise EmptyTeamError("Пустой каузальной команде не соответствует эпистемическая модель")
        return EpistemicCausalModel(functions=self.functions, team=self.team)

    @classmethod
    def from_epistemic(cls, model: EpistemicCausalModel) -> "CausalTeam":
        return cls(functions=model.functions, team=model.team)
