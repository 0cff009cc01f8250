"""
Случайные модели, команды и формулы для проверок свойств.

Модуль обеспечивает:
- GeneratorConfig с границами и seed
- Случайные сигнатуры и таблицы, рекурсивные по построению
  (переменная читает только предшественников в случайной перестановке)
- Команды из согласованных valuation-ов
- Формулы PAKC, γ, COD и α взвешенным выбором по грамматике
"""

import itertools
import random
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from config.constants import (
    DEFAULT_EXPANSION_CAP,
    DEFAULT_MAX_FORMULA_DEPTH,
    DEFAULT_MAX_RANGE_SIZE,
    DEFAULT_MAX_TEAM_SIZE,
    DEFAULT_MAX_VARIABLES,
    DEFAULT_OR_TEAM_CAP,
    DEFAULT_SEED,
    DEFAULT_TRANSLATION_CAP,
)
from core.causal import (
    InterventionAssignment,
    Signature,
    StructuralFunctionSet,
    Valuation,
    solve,
)
from core.epistemic import EpistemicCausalModel, PointedModel
from logic import formulas as pakc_ast
from teams import formulas as cod_ast
from teams.formulas import CausalTeam


Language = Literal["pakc", "gamma", "cod", "alpha"]

# Пул экзогенных и эндогенных имён
EXOGENOUS_NAMES = ("U", "W", "R", "Q")
ENDOGENOUS_NAMES = ("X", "Y", "Z", "V", "S", "T")

# Предел перебора экзогенных присваиваний при выборе команды
MAX_EXOGENOUS_ENUMERATION = 4_096


# ============================================================
# КОНФИГУРАЦИЯ
# ============================================================

@dataclass(frozen=True)
class GeneratorConfig:
    """
    Границы генерации.

    Все числовые поля положительны; одинаковый seed даёт одинаковую
    последовательность моделей и формул.
    """

    max_variables: int = DEFAULT_MAX_VARIABLES
    max_range_size: int = DEFAULT_MAX_RANGE_SIZE
    max_team_size: int = DEFAULT_MAX_TEAM_SIZE
    max_formula_depth: int = DEFAULT_MAX_FORMULA_DEPTH
    seed: int = DEFAULT_SEED
    min_range_size: int = 2
    max_intervention_length: int = 2
    expansion_cap: int = DEFAULT_EXPANSION_CAP
    or_team_cap: int = DEFAULT_OR_TEAM_CAP
    translation_cap: int = DEFAULT_TRANSLATION_CAP

    def __post_init__(self) -> None:
        for name in (
            "max_variables",
            "max_range_size",
            "max_team_size",
            "max_formula_depth",
            "min_range_size",
            "max_intervention_length",
            "expansion_cap",
            "or_team_cap",
            "translation_cap",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} должно быть положительным")
        if self.min_range_size > self.max_range_size:
            raise ValueError("min_range_size больше max_range_size")
        if self.max_variables > len(EXOGENOUS_NAMES) + len(ENDOGENOUS_NAMES):
            raise ValueError("Слишком много переменных для пула имён")

    def with_seed(self, seed: int) -> "GeneratorConfig":
        return replace(self, seed=seed)


def case_seed(seed: int, index: int) -> int:
    """Seed отдельного случая, не зависящий от порядка выполнения."""
    return (seed * 1_000_003 + index) & 0x7FFF_FFFF


# ============================================================
# МОДЕЛИ
# ============================================================

class ModelGenerator:
    """Генератор сигнатур, функций, команд и моделей."""

    def __init__(self, config: GeneratorConfig, rng: random.Random | None = None):
        self.config = config
        self.rng = rng or random.Random(config.seed)

    def signature(self) -> Signature:
        rng = self.rng
        total = rng.randint(1, self.config.max_variables)
        exogenous_count = rng.randint(0, min(total, len(EXOGENOUS_NAMES)))
        endogenous_count = total - exogenous_count
        if endogenous_count > len(ENDOGENOUS_NAMES):
            endogenous_count = len(ENDOGENOUS_NAMES)
            exogenous_count = total - endogenous_count
        exogenous = EXOGENOUS_NAMES[:exogenous_count]
        endogenous = ENDOGENOUS_NAMES[:endogenous_count]
        ranges = {
            name: list(range(rng.randint(self.config.min_range_size, self.config.max_range_size)))
            for name in exogenous + endogenous
        }
        return Signature.build(exogenous, endogenous, ranges)

    def functions(self, signature: Signature) -> StructuralFunctionSet:
        """
        Случайные таблицы, читающие только предшественников в перестановке.
        """
        rng = self.rng
        order = list(signature.variables)
        rng.shuffle(order)
        tables = {}
        for name in signature.endogenous:
            earlier = order[: order.index(name)]
            readers = [other for other in earlier if rng.random() < 0.7]
            others = signature.others(name)
            reader_axes = [others.index(reader) for reader in readers]
            shape = tuple(len(signature.range_of(other)) for other in others)
            size = len(signature.range_of(name))
            outputs: dict[tuple[int, ...], int] = {}
            table = np.zeros(shape, dtype=np.int64)
            for indices in np.ndindex(*shape):
                key = tuple(indices[axis] for axis in reader_axes)
                if key not in outputs:
                    outputs[key] = rng.randrange(size)
                table[indices] = outputs[key]
            tables[name] = table
        return StructuralFunctionSet(signature, tables)

    def members(self, functions: StructuralFunctionSet, max_size: int, minimum: int) -> list[Valuation]:
        signature = functions.signature
        exogenous = signature.exogenous
        space = 1
        for name in exogenous:
            space *= len(signature.range_of(name))
        if space <= MAX_EXOGENOUS_ENUMERATION:
            rows = list(itertools.product(*(signature.range_of(name) for name in exogenous)))
        else:
            rows = [
                tuple(self.rng.choice(signature.range_of(name)) for name in exogenous)
                for _ in range(MAX_EXOGENOUS_ENUMERATION)
            ]
        size = self.rng.randint(minimum, min(max_size, len(rows)))
        chosen = self.rng.sample(rows, size)
        return [solve(functions, dict(zip(exogenous, row))) for row in chosen]

    def model(self) -> EpistemicCausalModel:
        signature = self.signature()
        functions = self.functions(signature)
        team = self.members(functions, self.config.max_team_size, 1)
        return EpistemicCausalModel(functions=functions, team=tuple(team))

    def pointed(self, model: EpistemicCausalModel | None = None) -> PointedModel:
        model = model or self.model()
        return PointedModel(model=model, actual=self.rng.choice(model.team))

    def causal_team(self, allow_empty: bool = False) -> CausalTeam:
        signature = self.signature()
        functions = self.functions(signature)
        team = self.members(functions, self.config.max_team_size, 0 if allow_empty else 1)
        return CausalTeam(functions=functions, team=tuple(team))


# ============================================================
# ФОРМУЛЫ
# ============================================================

class FormulaGenerator:
    """
    Формулы над фиксированной сигнатурой.

    Стратификация соблюдается по построению: тело интервенции
    порождается без интервенций, тело контрфактуала - без контрфактуалов,
    антецедент селективной импликации - без зависимостей.
    """

    def __init__(
        self,
        signature: Signature,
        config: GeneratorConfig,
        rng: random.Random | None = None,
    ):
        self.signature = signature
        self.config = config
        self.rng = rng or random.Random(config.seed)

    # ---------- Общие части ----------

    def variable(self) -> str:
        return self.rng.choice(self.signature.variables)

    def value(self, variable: str) -> str:
        return self.rng.choice(self.signature.range_of(variable))

    def assignment(
        self, max_length: int | None = None, exclude: tuple[str, ...] = (), minimum: int = 1
    ) -> InterventionAssignment:
        candidates = [name for name in self.signature.variables if name not in exclude]
        limit = min(max_length or self.config.max_intervention_length, len(candidates))
        if limit < minimum:
            return InterventionAssignment()
        names = self.rng.sample(candidates, self.rng.randint(minimum, limit))
        return InterventionAssignment(tuple((name, self.value(name)) for name in names))

    def atom(self) -> pakc_ast.Atom:
        name = self.variable()
        return pakc_ast.Atom(name, self.value(name))

    # ---------- PAKC ----------

    def pakc(self, depth: int | None = None, allow_intervention: bool = True) -> pakc_ast.PakcFormula:
        depth = self.config.max_formula_depth if depth is None else depth
        rng = self.rng
        if depth <= 0:
            return self.atom()

        kinds = ["atom", "not", "and", "know", "announce"]
        weights = [2, 2, 3, 2, 2]
        if allow_intervention:
            kinds.append("intervene")
            weights.append(3)
        kind = rng.choices(kinds, weights)[0]

        if kind == "atom":
            return self.atom()
        if kind == "not":
            return pakc_ast.Not(self.pakc(depth - 1, allow_intervention))
        if kind == "and":
            return pakc_ast.And(
                self.pakc(depth - 1, allow_intervention),
                self.pakc(depth - 1, allow_intervention),
            )
        if kind == "know":
            return pakc_ast.Know(self.pakc(depth - 1, allow_intervention))
        if kind == "announce":
            return pakc_ast.Announce(
                self.pakc(min(depth - 1, 2), allow_intervention),
                self.pakc(depth - 1, allow_intervention),
            )
        return pakc_ast.Intervene(self.assignment(), self.pakc(depth - 1, allow_intervention=False))

    def gamma(self, depth: int | None = None) -> pakc_ast.PakcFormula:
        """Формула без интервенций (страт γ)."""
        return self.pakc(depth, allow_intervention=False)

    # ---------- COD ----------

    def cf_bindings(self) -> tuple[tuple[str, str], ...]:
        bindings = self.assignment().bindings
        if bindings and self.rng.random() < 0.1:
            # Повтор переменной: согласованный или противоречивый антецедент
            name = bindings[0][0]
            bindings = bindings + ((name, self.value(name)),)
        return bindings

    def cod(
        self,
        depth: int | None = None,
        allow_cf: bool = True,
        allow_split: bool = True,
    ) -> cod_ast.CodFormula:
        depth = self.config.max_formula_depth if depth is None else depth
        rng = self.rng
        if depth <= 0:
            return self._cod_leaf()

        kinds = ["leaf", "and", "selimp"]
        weights = [3, 3, 2]
        if allow_split:
            kinds.append("or")
            weights.append(2)
        if allow_cf:
            kinds.append("cf")
            weights.append(2)
        kind = rng.choices(kinds, weights)[0]

        if kind == "leaf":
            return self._cod_leaf()
        if kind == "and":
            return cod_ast.And(
                self.cod(depth - 1, allow_cf, allow_split),
                self.cod(depth - 1, allow_cf, allow_split),
            )
        if kind == "or":
            return cod_ast.Or(
                self.cod(depth - 1, allow_cf, allow_split=False),
                self.cod(depth - 1, allow_cf, allow_split=False),
            )
        if kind == "selimp":
            return cod_ast.SelImp(
                self.alpha(min(depth - 1, 2), allow_cf),
                self.cod(depth - 1, allow_cf, allow_split),
            )
        return cod_ast.Cf(self.cf_bindings(), self.cod(depth - 1, allow_cf=False, allow_split=allow_split))

    def _cod_leaf(self) -> cod_ast.CodFormula:
        choice = self.rng.choices(["eq", "neq", "dep"], [3, 2, 2])[0]
        if choice == "dep":
            names = list(self.signature.variables)
            y = self.rng.choice(names)
            candidates = [name for name in names if name != y]
            count = self.rng.randint(0, min(2, len(candidates)))
            xs = tuple(self.rng.sample(candidates, count))
            return cod_ast.Dep(xs, y)
        name = self.variable()
        if choice == "eq":
            return cod_ast.Eq(name, self.value(name))
        return cod_ast.Neq(name, self.value(name))

    def alpha(self, depth: int | None = None, allow_cf: bool = True) -> cod_ast.CodFormula:
        """Формула без атомов зависимости."""
        depth = self.config.max_formula_depth if depth is None else depth
        rng = self.rng
        if depth <= 0:
            name = self.variable()
            node = cod_ast.Eq if rng.random() < 0.6 else cod_ast.Neq
            return node(name, self.value(name))
        kinds = ["leaf", "and", "or", "selimp"] + (["cf"] if allow_cf else [])
        weights = [3, 2, 2, 2] + ([2] if allow_cf else [])
        kind = rng.choices(kinds, weights)[0]
        if kind == "leaf":
            return self.alpha(0, allow_cf)
        if kind == "and":
            return cod_ast.And(self.alpha(depth - 1, allow_cf), self.alpha(depth - 1, allow_cf))
        if kind == "or":
            return cod_ast.Or(self.alpha(depth - 1, allow_cf), self.alpha(depth - 1, allow_cf))
        if kind == "selimp":
            return cod_ast.SelImp(self.alpha(depth - 1, allow_cf), self.alpha(depth - 1, allow_cf))
        return cod_ast.Cf(self.cf_bindings(), self.alpha(depth - 1, allow_cf=False))


# ============================================================
# ФУНКЦИИ ВЕРХНЕГО УРОВНЯ
# ============================================================

def generate_model(config: GeneratorConfig) -> EpistemicCausalModel:
    """Случайная эпистемическая модель по конфигурации."""
    return ModelGenerator(config).model()


def generate_formula(
    config: GeneratorConfig,
    language: Language,
    signature: Signature | None = None,
):
    """
    Случайная формула нужного языка.

    Args:
        config: Границы и seed
        language: pakc, gamma, cod или alpha
        signature: Сигнатура; по умолчанию порождается из того же seed

    Raises:
        ValueError: Неизвестный язык
    """
    rng = random.Random(config.seed)
    if signature is None:
        signature = ModelGenerator(config, rng).signature()
    generator = FormulaGenerator(signature, config, rng)
    if language == "pakc":
        return generator.pakc()
    if language == "gamma":
        return generator.gamma()
    if language == "cod":
        return generator.cod()
    if language == "alpha":
        return generator.alpha()
    raise ValueError(f"Неизвестный язык: {language}")
