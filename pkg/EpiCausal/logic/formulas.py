"""
Синтаксис языка PAKC: интервенции, знание и публичные анонсы.

Модуль обеспечивает:
- Узлы AST (Atom, Not, And, Know, Announce, Intervene)
- Стратификацию: тело интервенции не содержит интервенций
- Производные связки (дизъюнкция, импликация, эквивалентность)
- Классификацию по фрагментам KC ⊆ L1 ⊆ PAKC
- Проверку формулы по сигнатуре
- Формулы ⇝, e-зависимости и c-зависимости
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Union

from config import settings
from core.causal import InterventionAssignment, Signature
from core.exceptions import CapExceededError, FormulaValidationError
from core.validators import check_value, normalize_value


# ============================================================
# УЗЛЫ AST
# ============================================================

@dataclass(frozen=True)
class Atom:
    """Атом Z=z."""

    variable: str
    value: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", normalize_value(self.value))


@dataclass(frozen=True)
class Not:
    body: "PakcFormula"


@dataclass(frozen=True)
class And:
    left: "PakcFormula"
    right: "PakcFormula"


@dataclass(frozen=True)
class Know:
    body: "PakcFormula"


@dataclass(frozen=True)
class Announce:
    """Публичный анонс [ψ!]φ."""

    announcement: "PakcFormula"
    body: "PakcFormula"


@dataclass(frozen=True)
class Intervene:
    """
    Интервенция [X:=x]γ.

    Тело не может содержать другую интервенцию.
    """

    assignment: InterventionAssignment
    body: "PakcFormula"

    def __post_init__(self) -> None:
        if contains_intervention(self.body):
            raise FormulaValidationError(
                f"Вложенная интервенция под {self.assignment} запрещена"
            )


PakcFormula = Union[Atom, Not, And, Know, Announce, Intervene]


class FragmentTag(str, Enum):
    """Фрагменты языка: KC ⊆ L1 ⊆ PAKC."""

    PAKC = "PAKC"
    L1 = "L1"
    KC = "KC"


# ============================================================
# ОБХОД
# ============================================================

def subformulas(formula: PakcFormula) -> Iterator[PakcFormula]:
    """Все подформулы в прямом порядке, включая саму формулу."""
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        match node:
            case Not(body) | Know(body) | Intervene(_, body):
                stack.append(body)
            case And(left, right):
                stack.extend((right, left))
            case Announce(announcement, body):
                stack.extend((body, announcement))


def contains_intervention(formula: PakcFormula) -> bool:
    return any(isinstance(node, Intervene) for node in subformulas(formula))


def contains_announcement(formula: PakcFormula) -> bool:
    return any(isinstance(node, Announce) for node in subformulas(formula))


def depth(formula: PakcFormula) -> int:
    """Глубина вложенности операторов (атом имеет глубину 0)."""
    match formula:
        case Atom():
            return 0
        case Not(body) | Know(body) | Intervene(_, body):
            return 1 + depth(body)
        case And(left, right):
            return 1 + max(depth(left), depth(right))
        case Announce(announcement, body):
            return 1 + max(depth(announcement), depth(body))
    raise TypeError(f"Не формула PAKC: {formula!r}")


def classify(formula: PakcFormula) -> FragmentTag:
    """
    Фрагмент формулы.

    KC: нет анонсов, каждая интервенция стоит над одним атомом.
    L1: каждая интервенция стоит над одним атомом.
    PAKC: всё остальное. Пустая интервенция прозрачна.
    """
    interventions_over_atoms = all(
        not node.assignment or isinstance(node.body, Atom)
        for node in subformulas(formula)
        if isinstance(node, Intervene)
    )
    if not interventions_over_atoms:
        return FragmentTag.PAKC
    if contains_announcement(formula):
        return FragmentTag.L1
    return FragmentTag.KC


_FRAGMENT_RANK = {FragmentTag.KC: 0, FragmentTag.L1: 1, FragmentTag.PAKC: 2}


def in_fragment(formula: PakcFormula, fragment: FragmentTag) -> bool:
    """Формула принадлежит фрагменту с учётом вложений KC ⊆ L1 ⊆ PAKC."""
    return _FRAGMENT_RANK[classify(formula)] <= _FRAGMENT_RANK[fragment]


def validate_formula(formula: PakcFormula, signature: Signature) -> None:
    """
    Проверить переменные и значения формулы по сигнатуре.

    Raises:
        FormulaValidationError: Неизвестная переменная или значение вне диапазона
        InterventionError: Некорректное присваивание интервенции
    """
    for node in subformulas(formula):
        if isinstance(node, Atom):
            check_value(signature, node.variable, node.value, FormulaValidationError)
        elif isinstance(node, Intervene):
            node.assignment.validate_for(signature)


# ============================================================
# ПРОИЗВОДНЫЕ СВЯЗКИ
# ============================================================

def intervene(assignment: InterventionAssignment, body: PakcFormula) -> PakcFormula:
    """[X:=x]γ, пустое присваивание опускается."""
    return Intervene(assignment, body) if assignment else body


def disj(left: PakcFormula, right: PakcFormula) -> PakcFormula:
    """φ ∨ ψ как ¬(¬φ ∧ ¬ψ)."""
    return Not(And(Not(left), Not(right)))


def implies(left: PakcFormula, right: PakcFormula) -> PakcFormula:
    """φ → ψ как ¬(φ ∧ ¬ψ)."""
    return Not(And(left, Not(right)))


def iff(left: PakcFormula, right: PakcFormula) -> PakcFormula:
    return And(implies(left, right), implies(right, left))


def falsum_for(variable: str, value: str) -> PakcFormula:
    """Булево противоречие v=r ∧ ¬(v=r)."""
    atom = Atom(variable, value)
    return And(atom, Not(atom))


def verum_for(variable: str, value: str) -> PakcFormula:
    return Not(falsum_for(variable, value))


def falsum(signature: Signature) -> PakcFormula:
    """Противоречие на первой переменной и первом значении сигнатуры."""
    first = signature.variables[0]
    return falsum_for(first, signature.range_of(first)[0])


def verum(signature: Signature) -> PakcFormula:
    return Not(falsum(signature))


def conj_all(items: Sequence[PakcFormula], signature: Signature) -> PakcFormula:
    """Сбалансированная конъюнкция; пустая конъюнкция - verum."""
    if not items:
        return verum(signature)
    return _balanced(list(items), And)


def disj_all(items: Sequence[PakcFormula], signature: Signature) -> PakcFormula:
    """Сбалансированная дизъюнкция; пустая дизъюнкция - falsum."""
    if not items:
        return falsum(signature)
    return _balanced(list(items), disj)


def _balanced(items: list[PakcFormula], combine) -> PakcFormula:
    # Для двух и трёх элементов совпадает с правой свёрткой
    if len(items) == 1:
        return items[0]
    middle = len(items) // 2
    return combine(_balanced(items[:middle], combine), _balanced(items[middle:], combine))


def atoms_conjunction(
    variables: Sequence[str], values: Sequence[str], signature: Signature
) -> PakcFormula:
    """X1=x1 ∧ ... ∧ Xn=xn."""
    return conj_all([Atom(name, value) for name, value in zip(variables, values)], signature)


# ============================================================
# ФОРМУЛЫ ⇝ И ЗАВИСИМОСТЕЙ
# ============================================================

def _check_cap(required: int, cap: int | None, what: str) -> None:
    cap = settings.expansion_cap if cap is None else cap
    if required > cap:
        raise CapExceededError(
            f"{what}: требуется {required} членов при лимите {cap}",
            cap=cap,
            required=required,
        )


def causes_formula(
    x: str,
    z: str,
    signature: Signature,
    cap: int | None = None,
) -> PakcFormula:
    """
    Синтаксическая формула X ⇝ Z (X непосредственно влияет на Z).

    Дизъюнкция по всем значениям w остальных переменных W, всем
    x1 ≠ x2 и z1 ≠ z2 конъюнкций [W:=w, X:=x1]Z=z1 ∧ [W:=w, X:=x2]Z=z2.

    Args:
        x: Причина
        z: Следствие
        signature: Сигнатура
        cap: Лимит числа дизъюнктов (по умолчанию из настроек)

    Raises:
        FormulaValidationError: x = z или неизвестная переменная
        CapExceededError: Слишком много дизъюнктов
    """
    if x == z:
        raise FormulaValidationError("Формула ⇝ требует разных переменных")
    for name in (x, z):
        if name not in signature:
            raise FormulaValidationError(f"Неизвестная переменная: {name}")

    rest = [name for name in signature.variables if name not in (x, z)]
    x_range, z_range = signature.range_of(x), signature.range_of(z)
    x_pairs = [(a, b) for a in x_range for b in x_range if a != b]
    z_pairs = [(a, b) for a in z_range for b in z_range if a != b]
    required = math.prod(len(signature.range_of(name)) for name in rest)
    required *= len(x_pairs) * len(z_pairs)
    _check_cap(required, cap, f"{x} ⇝ {z}")

    disjuncts = []
    for w in itertools.product(*(signature.range_of(name) for name in rest)):
        prefix = tuple(zip(rest, w))
        for x1, x2 in x_pairs:
            first = InterventionAssignment(prefix + ((x, x1),))
            second = InterventionAssignment(prefix + ((x, x2),))
            for z1, z2 in z_pairs:
                disjuncts.append(
                    And(Intervene(first, Atom(z, z1)), Intervene(second, Atom(z, z2)))
                )
    return disj_all(disjuncts, signature)


def _dependence_parts(
    xs: Sequence[str], y: str, signature: Signature, cap: int | None, what: str
) -> list[tuple[str, ...]]:
    if not xs:
        raise FormulaValidationError(f"{what}: список X пуст")
    if len(set(xs)) != len(xs):
        raise FormulaValidationError(f"{what}: переменные X повторяются")
    if y in xs:
        raise FormulaValidationError(f"{what}: Y не может входить в X")
    for name in (*xs, y):
        if name not in signature:
            raise FormulaValidationError(f"Неизвестная переменная: {name}")
    tuples = list(itertools.product(*(signature.range_of(name) for name in xs)))
    _check_cap(len(tuples) * len(signature.range_of(y)), cap, what)
    return tuples


def e_dependence_formula(
    xs: Sequence[str],
    y: str,
    signature: Signature,
    cap: int | None = None,
) -> PakcFormula:
    """
    Y e-зависит от X: ⋀_x ⋁_v K([X=x !] K(Y=v)).

    Знание после наблюдения значений X.
    """
    tuples = _dependence_parts(xs, y, signature, cap, "e-зависимость")
    return conj_all(
        [
            disj_all(
                [
                    Know(Announce(atoms_conjunction(xs, values, signature), Know(Atom(y, v))))
                    for v in signature.range_of(y)
                ],
                signature,
            )
            for values in tuples
        ],
        signature,
    )


def c_dependence_formula(
    xs: Sequence[str],
    y: str,
    signature: Signature,
    cap: int | None = None,
) -> PakcFormula:
    """
    Y c-зависит от X: ⋀_x ⋁_v [X:=x] K(Y=v).

    Знание после интервенции на X.
    """
    tuples = _dependence_parts(xs, y, signature, cap, "c-зависимость")
    return conj_all(
        [
            disj_all(
                [
                    Intervene(InterventionAssignment(tuple(zip(xs, values))), Know(Atom(y, v)))
                    for v in signature.range_of(y)
                ],
                signature,
            )
            for values in tuples
        ],
        signature,
    )
