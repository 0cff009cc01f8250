"""
Устранение анонсов: переводы tr1 и tr2.

Модуль обеспечивает:
- tr1: проталкивание интервенций к атомам (результат в L1)
- tr2: устранение анонсов в L1 (результат в KC)
- reduce = tr2 ∘ tr1

Оба перевода - системы переписывания, на каждом шаге сохраняющие
истинность во всех моделях с указателем.
"""

from core.causal import InterventionAssignment
from core.exceptions import FragmentError
from logic.formulas import (
    And,
    Announce,
    Atom,
    FragmentTag,
    Intervene,
    Know,
    Not,
    PakcFormula,
    classify,
    implies,
)


# ============================================================
# TR1
# ============================================================

def tr1(formula: PakcFormula) -> PakcFormula:
    """
    Протолкнуть интервенции внутрь до атомов.

    Вне интервенций перевод гомоморфен. Под интервенцией отрицание и
    конъюнкция выносятся наружу, K поднимается над интервенцией,
    анонсы сводятся по шаблонам редукции анонсов.

    Returns:
        Эквивалентная формула из L1
    """
    match formula:
        case Atom():
            return formula
        case Not(body):
            return Not(tr1(body))
        case And(left, right):
            return And(tr1(left), tr1(right))
        case Know(body):
            return Know(tr1(body))
        case Announce(announcement, body):
            return Announce(tr1(announcement), tr1(body))
        case Intervene(assignment, body):
            if not assignment:
                return tr1(body)
            return _tr1_under(assignment, body)
    raise TypeError(f"Не формула PAKC: {formula!r}")


def _tr1_under(assignment: InterventionAssignment, gamma: PakcFormula) -> PakcFormula:
    # tr1([a]γ) для γ без интервенций
    match gamma:
        case Atom():
            return Intervene(assignment, gamma)
        case Not(body):
            return Not(_tr1_under(assignment, body))
        case And(left, right):
            return And(_tr1_under(assignment, left), _tr1_under(assignment, right))
        case Know(body):
            return Know(_tr1_under(assignment, body))
        case Intervene(inner, body) if not inner:
            return _tr1_under(assignment, body)
        case Announce():
            # γ без интервенций: сначала устраняются анонсы
            return _tr1_under(assignment, _tr2(gamma))
    raise TypeError(f"Не формула под интервенцией: {gamma!r}")


# ============================================================
# TR2
# ============================================================

def tr2(formula: PakcFormula) -> PakcFormula:
    """
    Устранить анонсы в формуле из L1.

    Returns:
        Эквивалентная формула из KC

    Raises:
        FragmentError: Формула не из L1
    """
    if classify(formula) is FragmentTag.PAKC:
        raise FragmentError("tr2 применим только к формулам из L1")
    return _tr2(formula)


def _tr2(formula: PakcFormula) -> PakcFormula:
    match formula:
        case Atom():
            return formula
        case Intervene(assignment, body):
            return formula if assignment else _tr2(body)
        case Not(body):
            return Not(_tr2(body))
        case And(left, right):
            return And(_tr2(left), _tr2(right))
        case Know(body):
            return Know(_tr2(body))
        case Announce():
            announcements, body = _announcement_chain(formula)
            # [ξ1!][ξ2!]φ ≡ [ξ1 ∧ [ξ1!]ξ2 !]φ: цепочка сводится к одному анонсу
            combined = _tr2(announcements[0])
            for xi in announcements[1:]:
                combined = And(combined, _announce(combined, _tr2(xi)))
            return _announce(combined, _tr2(body))
    raise TypeError(f"Не формула PAKC: {formula!r}")


def _announcement_chain(formula: PakcFormula) -> tuple[list[PakcFormula], PakcFormula]:
    announcements = []
    while isinstance(formula, Announce):
        announcements.append(formula.announcement)
        formula = formula.body
    return announcements, formula


def _announce(xi: PakcFormula, body: PakcFormula) -> PakcFormula:
    """
    [ξ!]φ для ξ и φ уже без анонсов.

    Каждый узел φ проходится один раз, ξ подставляется без повторного перевода.
    """
    match body:
        case Atom():
            return implies(xi, body)
        case Intervene(assignment, inner):
            return implies(xi, body) if assignment else _announce(xi, inner)
        case Not(inner):
            return implies(xi, Not(_announce(xi, inner)))
        case And(left, right):
            return And(_announce(xi, left), _announce(xi, right))
        case Know(inner):
            return implies(xi, Know(implies(xi, _announce(xi, inner))))
    raise TypeError(f"Не формула без анонсов: {body!r}")


def reduce(formula: PakcFormula) -> PakcFormula:
    """
    Формула без анонсов и с интервенциями только над атомами: tr2(tr1(φ)).
    """
    return tr2(tr1(formula))
