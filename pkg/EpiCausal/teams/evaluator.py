"""
Семантика каузальных команд для COD.

Модуль обеспечивает:
- team_eval по клаузам языка (глобально по команде, без актуальной точки)
- Перебор покрытий для расщепляющей дизъюнкции с лимитом размера команды
- Ограничение команды антецедентом селективной импликации
"""

import itertools

from config import settings
from core.causal import intervene_functions, intervene_valuation
from core.exceptions import CapExceededError
from teams.formulas import And, CausalTeam, Cf, CodFormula, Dep, Eq, Neq, Or, SelImp


def team_eval(
    team: CausalTeam,
    formula: CodFormula,
    *,
    or_cap: int | None = None,
    disjoint_covers: bool = True,
) -> bool:
    """
    T ⊨ φ.

    Args:
        team: Каузальная команда (может быть пустой)
        formula: Формула COD
        or_cap: Максимальный размер команды для перебора покрытий
        disjoint_covers: Перебирать только разбиения (достаточно
            благодаря замкнутости вниз); False - все покрытия

    Returns:
        Истинность формулы на команде

    Raises:
        CapExceededError: Команда слишком велика для перебора покрытий
    """
    cap = settings.or_team_cap if or_cap is None else or_cap
    return _eval(team, formula, cap, disjoint_covers)


def _eval(team: CausalTeam, formula: CodFormula, cap: int, disjoint: bool) -> bool:
    match formula:
        case Eq(variable, value):
            return all(member[variable] == value for member in team.team)
        case Neq(variable, value):
            return all(member[variable] != value for member in team.team)
        case Dep(xs, y):
            seen: dict[tuple[str, ...], str] = {}
            for member in team.team:
                key = tuple(member[name] for name in xs)
                if seen.setdefault(key, member[y]) != member[y]:
                    return False
            return True
        case And(left, right):
            return _eval(team, left, cap, disjoint) and _eval(team, right, cap, disjoint)
        case Or(left, right):
            return any(
                _eval(first, left, cap, disjoint) and _eval(second, right, cap, disjoint)
                for first, second in _covers(team, cap, disjoint)
            )
        case SelImp(antecedent, consequent):
            selected = select_team(team, antecedent, cap, disjoint)
            return _eval(selected, consequent, cap, disjoint)
        case Cf(_, body):
            assignment = formula.assignment()
            if assignment is None:
                return True
            if not assignment:
                return _eval(team, body, cap, disjoint)
            intervened = intervene_functions(team.functions, assignment)
            moved = CausalTeam(
                functions=intervened,
                team=tuple(
                    intervene_valuation(member, intervened, assignment) for member in team.team
                ),
            )
            return _eval(moved, body, cap, disjoint)
    raise TypeError(f"Не формула COD: {formula!r}")


def select_team(
    team: CausalTeam,
    antecedent: CodFormula,
    cap: int | None = None,
    disjoint: bool = True,
) -> CausalTeam:
    """T^α: члены, чья одноэлементная команда удовлетворяет α."""
    cap = settings.or_team_cap if cap is None else cap
    return team.subteam(
        member
        for member in team.team
        if _eval(team.subteam((member,)), antecedent, cap, disjoint)
    )


def _covers(team: CausalTeam, cap: int, disjoint: bool):
    members = team.team
    if len(members) > cap:
        raise CapExceededError(
            f"Команда из {len(members)} членов больше лимита перебора покрытий {cap}",
            cap=cap,
            required=len(members),
        )
    # 0 - первая часть, 1 - вторая, 2 - обе
    labels = (0, 1) if disjoint else (0, 1, 2)
    for choice in itertools.product(labels, repeat=len(members)):
        first = [m for m, label in zip(members, choice) if label != 1]
        second = [m for m, label in zip(members, choice) if label != 0]
        yield team.subteam(first), team.subteam(second)
