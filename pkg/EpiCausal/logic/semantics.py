"""
Проверка формул PAKC на эпистемических причинных моделях.

Модуль обеспечивает:
- eval в модели с указателем (структурная рекурсия по формуле)
- Истинность во всех точках модели
- Вычисление с трассировкой для отладки каскадов анонсов и интервенций
"""

from core.causal import Valuation, intervene_functions, intervene_valuation
from core.epistemic import (
    EpistemicCausalModel,
    PointedModel,
    intervene_team,
    restrict_team,
)
from core.exceptions import FormulaValidationError, SignatureError
from logic.formulas import And, Announce, Atom, Intervene, Know, Not, PakcFormula
from logic.parser import print_formula
from utils.trace import Tracer


def evaluate(pointed: PointedModel, formula: PakcFormula) -> bool:
    """
    (E, A) ⊨ φ.

    Args:
        pointed: Модель с актуальной valuation
        formula: Формула над сигнатурой модели

    Returns:
        Истинность формулы

    Raises:
        FormulaValidationError: Атом вне сигнатуры модели
    """
    return _eval(pointed.model, pointed.actual, formula, None, 0)


def evaluate_with_trace(pointed: PointedModel, formula: PakcFormula) -> tuple[bool, Tracer]:
    """Вычисление с записью дерева вычисления."""
    tracer = Tracer(printer=print_formula)
    verdict = _eval(pointed.model, pointed.actual, formula, tracer, 0)
    return verdict, tracer


def valid_on_model(model: EpistemicCausalModel, formula: PakcFormula) -> bool:
    """Формула истинна во всех точках команды."""
    return all(_eval(model, member, formula, None, 0) for member in model.team)


def verdicts_by_pointing(
    model: EpistemicCausalModel, formula: PakcFormula
) -> dict[Valuation, bool]:
    return {member: _eval(model, member, formula, None, 0) for member in model.team}


def _eval(
    model: EpistemicCausalModel,
    actual: Valuation,
    formula: PakcFormula,
    tracer: Tracer | None,
    depth: int,
) -> bool:
    line = None
    if tracer is not None:
        line = tracer.open(depth, type(formula).__name__, formula, len(model.team))

    match formula:
        case Atom(variable, value):
            result = _atom_holds(model, actual, variable, value)
        case Not(body):
            result = not _eval(model, actual, body, tracer, depth + 1)
        case And(left, right):
            result = _eval(model, actual, left, tracer, depth + 1) and _eval(
                model, actual, right, tracer, depth + 1
            )
        case Know(body):
            result = all(
                _eval(model, member, body, tracer, depth + 1) for member in model.team
            )
        case Announce(announcement, body):
            if not _eval(model, actual, announcement, tracer, depth + 1):
                result = True
                if line is not None:
                    line.note = "анонс ложен"
            else:
                restricted = restrict_team(
                    model, lambda member: _eval(model, member, announcement, None, 0)
                )
                if line is not None:
                    line.note = f"осталось членов: {len(restricted.team)}"
                result = _eval(restricted, actual, body, tracer, depth + 1)
        case Intervene(assignment, Atom(variable, value)) if tracer is None:
            # Для атома команда не нужна: достаточно образа актуальной точки
            assignment.validate_for(model.signature)
            moved = intervene_valuation(
                actual, intervene_functions(model.functions, assignment), assignment
            )
            result = _atom_holds(model, moved, variable, value)
        case Intervene(assignment, body):
            intervened = intervene_team(model, assignment)
            new_actual = (
                actual
                if intervened is model
                else intervene_valuation(actual, intervened.functions, assignment)
            )
            if line is not None:
                line.note = "команда: " + ", ".join(str(member) for member in intervened.team)
            result = _eval(intervened, new_actual, body, tracer, depth + 1)
        case _:
            raise TypeError(f"Не формула PAKC: {formula!r}")

    if line is not None:
        line.verdict = result
    return result


def _atom_holds(
    model: EpistemicCausalModel, valuation: Valuation, variable: str, value: str
) -> bool:
    try:
        result = valuation[variable] == value
    except SignatureError as e:
        raise FormulaValidationError(str(e)) from None
    if not result and value not in model.signature.range_of(variable):
        raise FormulaValidationError(f"Значение {value} вне диапазона {variable}")
    return result
