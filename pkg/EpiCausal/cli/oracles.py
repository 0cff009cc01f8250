"""
Оракулы для случайных проверок свойств.

Модуль обеспечивает:
- Один детерминированный случай на seed (независимо от числа процессов)
- Оракулы reduction, global, local, axioms, downward, causes, solve
- Сводку со счётчиками и воспроизводимыми контрпримерами
- Параллельный прогон случаев через joblib
"""

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

import structlog
from joblib import Parallel, delayed

from core.causal import (
    CausalModel,
    Valuation,
    complies,
    parents,
    solve,
)
from core.epistemic import EpistemicCausalModel, PointedModel, as_epistemic
from core.exceptions import CapExceededError
from logic.axioms import SCHEMAS, AxiomInstanceRequest, axiom_instances, check_rule_preservation
from logic.formulas import FragmentTag, causes_formula, classify, in_fragment
from logic.parser import print_formula
from logic.reduction import tr1, tr2
from logic.semantics import evaluate, valid_on_model, verdicts_by_pointing
from storage.model_file import model_document
from teams.equivalence import check_global_equivalence, check_local_equivalence
from teams.evaluator import select_team, team_eval
from teams.formulas import CausalTeam
from teams.parser import print_cod
from teams.translation import e_translate
from utils.generators import FormulaGenerator, GeneratorConfig, ModelGenerator, case_seed
from utils.logging_config import log_execution


logger = structlog.get_logger()

ORACLES = ("reduction", "global", "local", "axioms", "downward", "causes", "solve")


# ============================================================
# РЕЗУЛЬТАТЫ
# ============================================================

@dataclass
class CaseResult:
    """Итог одного случая: число проверок, провалы и контрпример."""

    index: int
    seed: int
    checks: int = 0
    failures: int = 0
    capped: bool = False
    counterexample: dict | None = None

    def fail(self, model: dict, formula: str, detail: str) -> None:
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = {
                "seed": self.seed,
                "model": model,
                "formula": formula,
                "detail": detail,
            }


@dataclass
class OracleSummary:
    """Сводка прогона одного оракула."""

    which: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def capped(self) -> int:
        return sum(1 for case in self.cases if case.capped)

    @property
    def evaluated(self) -> int:
        return self.total - self.capped

    @property
    def passed(self) -> int:
        return sum(1 for case in self.cases if not case.capped and not case.failures)

    @property
    def checks(self) -> int:
        return sum(case.checks for case in self.cases)

    @property
    def failures(self) -> int:
        return sum(case.failures for case in self.cases)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def counterexamples(self) -> list[dict]:
        return [case.counterexample for case in self.cases if case.counterexample]

    def render(self) -> list[str]:
        """Строки итога для stdout."""
        if self.which == "axioms":
            lines = [f"{self.checks} instances on {self.evaluated} models"]
            lines.append(
                "all instances valid" if self.ok else f"{self.failures} invalid instances"
            )
        else:
            word = "hold" if self.which == "downward" else "equivalent"
            lines = [f"{self.passed}/{self.evaluated} {word}"]
        if self.capped:
            lines.append(f"{self.capped} skipped: cap exceeded")
        return lines


# ============================================================
# СЛУЧАИ
# ============================================================

def _document(model: EpistemicCausalModel | CausalTeam, actual: Valuation | None = None) -> dict:
    return model_document(model.functions, model.team, actual)


def _reduction_case(config: GeneratorConfig, rng: random.Random, result: CaseResult) -> None:
    model = ModelGenerator(config, rng).model()
    formula = FormulaGenerator(model.signature, config, rng).pakc()
    first = tr1(formula)
    reduced = tr2(first)
    result.checks = 1

    problems = []
    if not in_fragment(first, FragmentTag.L1):
        problems.append("tr1 вне L1")
    if classify(reduced) is not FragmentTag.KC:
        problems.append("reduce вне KC")
    expected = verdicts_by_pointing(model, formula)
    if verdicts_by_pointing(model, first) != expected:
        problems.append("tr1 меняет истинность")
    if verdicts_by_pointing(model, reduced) != expected:
        problems.append("reduce меняет истинность")
    if problems:
        result.fail(_document(model), print_formula(formula), "; ".join(problems))


def _global_case(config: GeneratorConfig, rng: random.Random, result: CaseResult) -> None:
    team = ModelGenerator(config, rng).causal_team()
    formula = FormulaGenerator(team.signature, config, rng).cod()
    report = check_global_equivalence(
        team,
        formula,
        expansion_cap=config.expansion_cap,
        translation_cap=config.translation_cap,
        or_cap=config.or_team_cap,
    )
    result.checks = 1
    if not report.agree:
        result.fail(
            _document(team),
            report.formula,
            f"team={report.team_verdict} translated={report.translated_verdict}",
        )


def _local_case(config: GeneratorConfig, rng: random.Random, result: CaseResult) -> None:
    team = ModelGenerator(config, rng).causal_team()
    formula = FormulaGenerator(team.signature, config, rng).cod()
    report = check_local_equivalence(
        team,
        formula,
        expansion_cap=config.expansion_cap,
        translation_cap=config.translation_cap,
        or_cap=config.or_team_cap,
    )
    result.checks = 1
    if not report.agree:
        points = {str(member): verdict for member, verdict in report.pointing_verdicts.items()}
        result.fail(_document(team), report.formula, f"team={report.team_verdict} points={points}")


def _axioms_case(
    config: GeneratorConfig, rng: random.Random, result: CaseResult, instances: int
) -> None:
    models = ModelGenerator(config, rng)
    model = models.model()
    for schema in SCHEMAS:
        request = AxiomInstanceRequest(
            schema=schema,
            signature=model.signature,
            max_intervention_length=config.max_intervention_length,
            max_depth=min(config.max_formula_depth, 2),
            seed=result.seed,
            count=instances,
        )
        for instance in axiom_instances(request):
            result.checks += 1
            if not valid_on_model(model, instance):
                result.fail(_document(model), print_formula(instance), f"схема {schema}")

    formulas = FormulaGenerator(model.signature, config, rng)
    phi, psi = formulas.pakc(2), formulas.pakc(2)
    for rule, preserved in check_rule_preservation(model, phi, psi).items():
        result.checks += 1
        if not preserved:
            result.fail(
                _document(model),
                f"{print_formula(phi)} ; {print_formula(psi)}",
                f"правило {rule}",
            )


def _downward_case(config: GeneratorConfig, rng: random.Random, result: CaseResult) -> None:
    team = ModelGenerator(config, rng).causal_team()
    formulas = FormulaGenerator(team.signature, config, rng)
    formula = formulas.cod()
    cap = config.or_team_cap

    # Замкнутость вниз
    result.checks += 1
    if team_eval(team, formula, or_cap=cap):
        for size in range(len(team.team)):
            for members in itertools.combinations(team.team, size):
                if not team_eval(team.subteam(members), formula, or_cap=cap):
                    result.fail(_document(team), print_cod(formula), f"подкоманда {size}")
                    break

    # Локальная корректность e и совпадение отбора
    alpha = formulas.alpha(2)
    translated = e_translate(alpha)
    model = team.to_epistemic()
    pointwise = {
        member: evaluate(PointedModel(model, member), translated) for member in model.team
    }
    result.checks += 2
    for member, verdict in pointwise.items():
        if team_eval(team.subteam((member,)), alpha, or_cap=cap) != verdict:
            result.fail(_document(team, member), print_cod(alpha), "локальная корректность e")
            break
    selected = select_team(team, alpha, cap).team
    if selected != tuple(member for member, verdict in pointwise.items() if verdict):
        result.fail(_document(team), print_cod(alpha), "отбор T^α не совпадает с анонсом e(α)")


def _causes_case(config: GeneratorConfig, rng: random.Random, result: CaseResult) -> None:
    models = ModelGenerator(config, rng)
    signature = models.signature()
    functions = models.functions(signature)
    pointed = as_epistemic(
        CausalModel(
            functions,
            solve(functions, {name: signature.range_of(name)[0] for name in signature.exogenous}),
        )
    )
    for x, z in itertools.permutations(signature.variables, 2):
        formula = causes_formula(x, z, signature, config.expansion_cap)
        expected = signature.is_endogenous(z) and x in parents(functions, z)
        result.checks += 1
        if evaluate(pointed, formula) != expected:
            result.fail(
                model_document(functions, pointed.model.team), f"{x} ~> {z}", f"ожидалось {expected}"
            )


def _solve_case(config: GeneratorConfig, rng: random.Random, result: CaseResult) -> None:
    models = ModelGenerator(config, rng)
    signature = models.signature()
    functions = models.functions(signature)
    compliant: dict[tuple[str, ...], list[Valuation]] = {}
    for valuation in signature.valuations():
        if complies(valuation, functions):
            key = tuple(valuation[name] for name in signature.exogenous)
            compliant.setdefault(key, []).append(valuation)
    for row in itertools.product(*(signature.range_of(name) for name in signature.exogenous)):
        result.checks += 1
        solved = solve(functions, dict(zip(signature.exogenous, row)))
        if compliant.get(row) != [solved]:
            result.fail(model_document(functions, ()), "", f"экзогенные {row}")


_CASES: dict[str, Callable[[GeneratorConfig, random.Random, CaseResult], None]] = {
    "reduction": _reduction_case,
    "global": _global_case,
    "local": _local_case,
    "downward": _downward_case,
    "causes": _causes_case,
    "solve": _solve_case,
}


def run_case(which: str, config: GeneratorConfig, index: int, instances: int = 20) -> CaseResult:
    """
    Выполнить один случай оракула.

    Случай полностью определяется (config.seed, index), поэтому результат
    не зависит от порядка и числа процессов.

    Raises:
        ValueError: Неизвестный оракул
    """
    seed = case_seed(config.seed, index)
    result = CaseResult(index=index, seed=seed)
    case_config = config.with_seed(seed)
    rng = random.Random(seed)
    try:
        if which == "axioms":
            _axioms_case(case_config, rng, result, instances)
        elif which in _CASES:
            _CASES[which](case_config, rng, result)
        else:
            raise ValueError(f"Неизвестный оракул: {which}")
    except CapExceededError as e:
        result.capped = True
        logger.debug("oracle_cap_exceeded", which=which, seed=seed, cap=e.cap, required=e.required)
    if result.failures:
        logger.warning("oracle_counterexample", which=which, seed=seed, failures=result.failures)
    return result


@log_execution("oracle_run")
def run_oracle(
    which: str,
    config: GeneratorConfig,
    count: int,
    *,
    jobs: int = 1,
    instances: int = 20,
) -> OracleSummary:
    """
    Прогнать count случаев оракула.

    Args:
        which: Имя оракула из ORACLES
        config: Границы генерации и базовый seed
        count: Число случаев (моделей или пар модель-формула)
        jobs: Число процессов
        instances: Экземпляров на схему для оракула axioms

    Returns:
        OracleSummary со случаями в порядке индексов
    """
    if which not in ORACLES:
        raise ValueError(f"Неизвестный оракул: {which}")
    if jobs > 1:
        cases = Parallel(n_jobs=jobs)(
            delayed(run_case)(which, config, index, instances) for index in range(count)
        )
    else:
        cases = [run_case(which, config, index, instances) for index in range(count)]
    summary = OracleSummary(which=which, cases=sorted(cases, key=lambda case: case.index))
    logger.info(
        "oracle_finished",
        which=which,
        total=summary.total,
        failures=summary.failures,
        capped=summary.capped,
    )
    return summary
