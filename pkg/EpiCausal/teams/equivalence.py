"""
Сравнение семантики команд с семантикой переведённых формул.

Модуль обеспечивает:
- Глобальную проверку: T ⊨ φ ⇔ tr(φ) истинна во всех точках
- Локальную проверку: оба направления для tr* и независимость
  истинности tr* от выбора точки
"""

from dataclasses import dataclass, field

from core.causal import Valuation
from logic.parser import print_formula
from logic.semantics import verdicts_by_pointing
from teams.evaluator import team_eval
from teams.formulas import CausalTeam, CodFormula
from teams.parser import print_cod
from teams.translation import tr_star_translate, tr_translate


@dataclass
class GlobalEquivalenceReport:
    formula: str
    translated: str
    team_verdict: bool
    translated_verdict: bool

    @property
    def agree(self) -> bool:
        return self.team_verdict == self.translated_verdict


@dataclass
class LocalEquivalenceReport:
    formula: str
    translated: str
    team_verdict: bool
    pointing_verdicts: dict[Valuation, bool] = field(default_factory=dict)

    @property
    def truth_implies_all_points(self) -> bool:
        """Если T ⊨ φ, то tr*(φ) истинна во всех точках."""
        return not self.team_verdict or all(self.pointing_verdicts.values())

    @property
    def some_point_implies_truth(self) -> bool:
        """Если tr*(φ) истинна хоть в одной точке, то T ⊨ φ."""
        return self.team_verdict or not any(self.pointing_verdicts.values())

    @property
    def pointing_invariant(self) -> bool:
        return len(set(self.pointing_verdicts.values())) <= 1

    @property
    def agree(self) -> bool:
        return (
            self.truth_implies_all_points
            and self.some_point_implies_truth
            and self.pointing_invariant
        )


def check_global_equivalence(
    team: CausalTeam,
    formula: CodFormula,
    *,
    expansion_cap: int | None = None,
    translation_cap: int | None = None,
    or_cap: int | None = None,
) -> GlobalEquivalenceReport:
    """
    Сравнить T ⊨ φ с истинностью tr(φ) во всех точках модели ⟨S, F, T⟩.

    Raises:
        EmptyTeamError: Команда пуста
        FragmentError: Формула вложенная
        CapExceededError: Перевод или перебор покрытий превышает лимит
    """
    model = team.to_epistemic()
    translated = tr_translate(
        formula,
        team.signature,
        expansion_cap=expansion_cap,
        translation_cap=translation_cap,
    )
    verdicts = verdicts_by_pointing(model, translated)
    return GlobalEquivalenceReport(
        formula=print_cod(formula),
        translated=print_formula(translated),
        team_verdict=team_eval(team, formula, or_cap=or_cap),
        translated_verdict=all(verdicts.values()),
    )


def check_local_equivalence(
    team: CausalTeam,
    formula: CodFormula,
    *,
    expansion_cap: int | None = None,
    translation_cap: int | None = None,
    or_cap: int | None = None,
) -> LocalEquivalenceReport:
    """
    Проверить оба направления локального перевода tr*.

    Raises:
        EmptyTeamError: Команда пуста
        FragmentError: Формула вложенная
        CapExceededError: Перевод или перебор покрытий превышает лимит
    """
    model = team.to_epistemic()
    translated = tr_star_translate(
        formula,
        team.signature,
        expansion_cap=expansion_cap,
        translation_cap=translation_cap,
    )
    return LocalEquivalenceReport(
        formula=print_cod(formula),
        translated=print_formula(translated),
        team_verdict=team_eval(team, formula, or_cap=or_cap),
        pointing_verdicts=verdicts_by_pointing(model, translated),
    )
