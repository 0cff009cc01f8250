"""
Эпистемические причинные модели.

Модуль обеспечивает:
- EpistemicCausalModel: функции + непустая команда согласованных valuation-ов
- PointedModel: модель с выделенной актуальной valuation
- Интервенцию над командой (поточечно, с дедупликацией)
- Ограничение команды предикатом (семантика анонса)
- Представление причинной модели как модели с одноэлементной командой
"""

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import structlog

from core.causal import (
    CausalModel,
    InterventionAssignment,
    Signature,
    StructuralFunctionSet,
    Valuation,
    complies,
    intervene_functions,
    intervene_valuation,
    topological_order,
)
from core.exceptions import ComplianceError, EmptyTeamError, SignatureError


logger = structlog.get_logger()


def canonical_team(members: Iterable[Valuation]) -> tuple[Valuation, ...]:
    """Команда как отсортированное множество без повторов."""
    return tuple(sorted(set(members), key=Valuation.sort_key))


def check_team(functions: StructuralFunctionSet, team: Iterable[Valuation]) -> None:
    """
    Проверить, что все члены команды согласованы с функциями.

    Raises:
        SignatureError: Член команды из другой сигнатуры
        ComplianceError: Член команды не согласован
    """
    for member in team:
        if member.signature != functions.signature:
            raise SignatureError("Член команды относится к другой сигнатуре")
        if not complies(member, functions):
            raise ComplianceError(f"Valuation {member} не согласована с функциями")


# ============================================================
# МОДЕЛИ
# ============================================================

@dataclass(frozen=True)
class EpistemicCausalModel:
    """
    Эпистемическая причинная модель ⟨S, F, T⟩.

    Команда T непуста, хранится в каноническом порядке, все её члены
    согласованы с рекурсивным набором функций F.
    """

    functions: StructuralFunctionSet
    team: tuple[Valuation, ...]

    def __post_init__(self) -> None:
        team = canonical_team(self.team)
        if not team:
            raise EmptyTeamError("Команда эпистемической модели не может быть пустой")
        topological_order(self.functions)
        check_team(self.functions, team)
        object.__setattr__(self, "team", team)

    @property
    def signature(self) -> Signature:
        return self.functions.signature

    def __contains__(self, valuation: object) -> bool:
        return valuation in self.team

    def __iter__(self) -> Iterator[Valuation]:
        return iter(self.team)

    def __len__(self) -> int:
        return len(self.team)

    def pointings(self) -> Iterator["PointedModel"]:
        """Все модели с указателем на членов команды."""
        for member in self.team:
            yield PointedModel(self, member)


@dataclass(frozen=True)
class PointedModel:
    """Пара (E, A) с A ∈ T."""

    model: EpistemicCausalModel
    actual: Valuation

    def __post_init__(self) -> None:
        if self.actual not in self.model:
            raise SignatureError(f"Актуальная valuation {self.actual} не входит в команду")

    @property
    def signature(self) -> Signature:
        return self.model.signature


# ============================================================
# ОПЕРАЦИИ
# ============================================================

def intervene_team(
    model: EpistemicCausalModel,
    assignment: InterventionAssignment,
) -> EpistemicCausalModel:
    """
    Эпистемическая интервенция: F_a и поточечный образ команды.

    Разные члены могут перейти в одну valuation, поэтому команда
    может уменьшиться.

    Raises:
        InterventionError: Неизвестная переменная или значение вне диапазона
    """
    assignment.validate_for(model.signature)
    if not assignment:
        return model
    intervened = intervene_functions(model.functions, assignment)
    return EpistemicCausalModel(
        functions=intervened,
        team=tuple(
            intervene_valuation(member, intervened, assignment) for member in model.team
        ),
    )


def restrict_team(
    model: EpistemicCausalModel,
    keep: Callable[[Valuation], bool],
) -> EpistemicCausalModel:
    """
    Оставить в команде только членов, удовлетворяющих предикату.

    Args:
        model: Эпистемическая модель
        keep: Чистый предикат над valuation

    Returns:
        Модель с теми же функциями и ограниченной командой

    Raises:
        EmptyTeamError: Ни один член не удовлетворяет предикату
    """
    kept = tuple(member for member in model.team if keep(member))
    if not kept:
        raise EmptyTeamError("Ограничение удалило всех членов команды")
    if len(kept) == len(model.team):
        return model
    logger.debug("team_restricted", before=len(model.team), after=len(kept))
    return EpistemicCausalModel(functions=model.functions, team=kept)


def pointed_intervene(
    pointed: PointedModel,
    assignment: InterventionAssignment,
) -> PointedModel:
    """
    Интервенция над моделью с указателем: (E_a, A^F_a).
    """
    model = intervene_team(pointed.model, assignment)
    if model is pointed.model:
        return pointed
    return PointedModel(
        model=model,
        actual=intervene_valuation(pointed.actual, model.functions, assignment),
    )


def as_epistemic(model: CausalModel) -> PointedModel:
    """
    Причинная модель как эпистемическая с одноэлементной командой.

    Оценка формулы на результате совпадает с обычной
    интервенционистской семантикой без знания.
    """
    epistemic = EpistemicCausalModel(functions=model.functions, team=(model.valuation,))
    return PointedModel(model=epistemic, actual=model.valuation)
