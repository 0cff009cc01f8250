"""
Экземпляры схем аксиом и проверки правил вывода.

Модуль обеспечивает:
- Конструкторы схем HP1-HP6, RH1-RH2, EX, K, T, 4, 5, CM, RP1-RP4 и P
- AxiomInstanceRequest и детерминированную генерацию экземпляров
- Полный перебор интервенций длины ≤ 2 на сигнатурах до 3 переменных
- Проверки сохранения истинности правилами MP, N и RE на модели
"""

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from config.constants import MAX_CAUSAL_CHAIN_LENGTH
from core.causal import InterventionAssignment, Signature
from core.epistemic import EpistemicCausalModel
from core.exceptions import FormulaValidationError
from logic.formulas import (
    And,
    Announce,
    Atom,
    Intervene,
    Know,
    Not,
    PakcFormula,
    causes_formula,
    conj_all,
    disj,
    disj_all,
    iff,
    implies,
    intervene,
)
from logic.semantics import verdicts_by_pointing, valid_on_model
from utils.generators import FormulaGenerator, GeneratorConfig


# Сигнатуры не больше этой перебираются полностью
EXHAUSTIVE_VARIABLES = 3
EXHAUSTIVE_INTERVENTION_LENGTH = 2


# ============================================================
# КОНСТРУКТОРЫ СХЕМ
# ============================================================

def hp1(a: InterventionAssignment, z: str, z1: str, z2: str) -> PakcFormula:
    """[X:=x]Z=z → ¬[X:=x]Z=z' при z ≠ z'."""
    return implies(intervene(a, Atom(z, z1)), Not(intervene(a, Atom(z, z2))))


def hp2(a: InterventionAssignment, z: str, signature: Signature) -> PakcFormula:
    """⋁_z [X:=x]Z=z."""
    return disj_all([intervene(a, Atom(z, v)) for v in signature.range_of(z)], signature)


def hp3(a: InterventionAssignment, z: str, z_value: str, w: str, w_value: str) -> PakcFormula:
    """([X:=x]Z=z ∧ [X:=x]W=w) → [X:=x, Z:=z]W=w при Z ∉ X."""
    return implies(
        And(intervene(a, Atom(z, z_value)), intervene(a, Atom(w, w_value))),
        Intervene(a.extended(z, z_value), Atom(w, w_value)),
    )


def hp4(a: InterventionAssignment, z: str, z_value: str) -> PakcFormula:
    """[X:=x, Z:=z]Z=z."""
    return Intervene(a.extended(z, z_value), Atom(z, z_value))


def hp5(
    a: InterventionAssignment, z: str, z_value: str, w: str, w_value: str
) -> PakcFormula:
    """([X:=x, Z:=z]W=w ∧ [X:=x, W:=w]Z=z) → [X:=x]W=w при W ≠ Z."""
    return implies(
        And(
            Intervene(a.extended(z, z_value), Atom(w, w_value)),
            Intervene(a.extended(w, w_value), Atom(z, z_value)),
        ),
        intervene(a, Atom(w, w_value)),
    )


def hp6(chain: list[str], signature: Signature) -> PakcFormula:
    """(Z0 ⇝ Z1 ∧ ... ∧ Zk-1 ⇝ Zk) → ¬(Zk ⇝ Z0)."""
    links = [causes_formula(a, b, signature) for a, b in zip(chain, chain[1:])]
    return implies(conj_all(links, signature), Not(causes_formula(chain[-1], chain[0], signature)))


def rh1(a: InterventionAssignment, g1: PakcFormula, g2: PakcFormula) -> PakcFormula:
    return iff(Intervene(a, And(g1, g2)), And(Intervene(a, g1), Intervene(a, g2)))


def rh2(a: InterventionAssignment, g: PakcFormula) -> PakcFormula:
    return iff(Intervene(a, Not(g)), Not(Intervene(a, g)))


def ex(a: InterventionAssignment, u: str, u_value: str) -> PakcFormula:
    """U=u ↔ [X:=x]U=u для экзогенной U ∉ X."""
    return iff(Atom(u, u_value), intervene(a, Atom(u, u_value)))


def k_axiom(phi: PakcFormula, psi: PakcFormula) -> PakcFormula:
    return implies(Know(implies(phi, psi)), implies(Know(phi), Know(psi)))


def t_axiom(phi: PakcFormula) -> PakcFormula:
    return implies(Know(phi), phi)


def four_axiom(phi: PakcFormula) -> PakcFormula:
    return implies(Know(phi), Know(Know(phi)))


def five_axiom(phi: PakcFormula) -> PakcFormula:
    return implies(Not(Know(phi)), Know(Not(Know(phi))))


def cm(a: InterventionAssignment, g: PakcFormula) -> PakcFormula:
    return iff(Intervene(a, Know(g)), Know(Intervene(a, g)))


def rp1(psi: PakcFormula, a: InterventionAssignment, z: str, z_value: str) -> PakcFormula:
    """[ψ!][X:=x]Z=z ↔ (ψ → [X:=x]Z=z), пустое X допускается."""
    target = intervene(a, Atom(z, z_value))
    return iff(Announce(psi, target), implies(psi, target))


def rp2(psi: PakcFormula, phi: PakcFormula) -> PakcFormula:
    return iff(Announce(psi, Not(phi)), implies(psi, Not(Announce(psi, phi))))


def rp3(psi: PakcFormula, phi: PakcFormula, chi: PakcFormula) -> PakcFormula:
    return iff(Announce(psi, And(phi, chi)), And(Announce(psi, phi), Announce(psi, chi)))


def rp4(psi: PakcFormula, phi: PakcFormula) -> PakcFormula:
    return iff(Announce(psi, Know(phi)), implies(psi, Know(implies(psi, Announce(psi, phi)))))


def tautologies(phi: PakcFormula, psi: PakcFormula, chi: PakcFormula) -> list[PakcFormula]:
    """Фиксированные шаблоны пропозициональных тавтологий."""
    return [
        implies(phi, implies(psi, phi)),
        implies(implies(phi, implies(psi, chi)), implies(implies(phi, psi), implies(phi, chi))),
        implies(implies(Not(psi), Not(phi)), implies(phi, psi)),
        iff(Not(Not(phi)), phi),
        disj(phi, Not(phi)),
    ]


# ============================================================
# ЗАПРОС
# ============================================================

SCHEMAS = (
    "HP1", "HP2", "HP3", "HP4", "HP5", "HP6",
    "RH1", "RH2", "EX",
    "K", "T", "4", "5", "CM",
    "RP1", "RP2", "RP3", "RP4",
    "P",
)


@dataclass(frozen=True)
class AxiomInstanceRequest:
    """
    Запрос экземпляров одной схемы.

    Attributes:
        schema: Имя схемы из SCHEMAS
        signature: Сигнатура
        max_intervention_length: Максимальная длина присваивания X:=x
        max_depth: Максимальная глубина случайных подформул
        seed: Seed генерации
        count: Сколько экземпляров вернуть (если их хватает)
    """

    schema: str
    signature: Signature
    max_intervention_length: int = 2
    max_depth: int = 2
    seed: int = 0
    count: int = 20

    def __post_init__(self) -> None:
        if self.schema not in SCHEMAS:
            raise FormulaValidationError(f"Неизвестная схема аксиом: {self.schema}")
        if self.max_intervention_length <= 0 or self.max_depth <= 0 or self.count <= 0:
            raise FormulaValidationError("Границы запроса должны быть положительными")


def axiom_instances(request: AxiomInstanceRequest) -> list[PakcFormula]:
    """
    Конкретные экземпляры схемы над сигнатурой.

    Для малых сигнатур присваивания перебираются полностью, после чего
    из всех кандидатов выбирается count штук с заданным seed.
    Результат детерминирован.

    Raises:
        FormulaValidationError: Неизвестная схема
    """
    rng = random.Random(f"{request.schema}:{request.seed}")
    sampler = _InstanceSampler(request, rng)
    candidates = list(getattr(sampler, f"schema_{request.schema}")())
    if len(candidates) <= request.count:
        return candidates
    return rng.sample(candidates, request.count)


class _InstanceSampler:
    def __init__(self, request: AxiomInstanceRequest, rng: random.Random):
        self.request = request
        self.signature = request.signature
        self.rng = rng
        config = GeneratorConfig(
            max_formula_depth=request.max_depth,
            max_intervention_length=request.max_intervention_length,
        )
        self.formulas = FormulaGenerator(self.signature, config, rng)

    # ---------- Присваивания ----------

    def assignments(self, exclude: tuple[str, ...] = ()) -> list[InterventionAssignment]:
        """Все присваивания длины ≤ 2 для малых сигнатур, иначе выборка."""
        signature = self.signature
        names = [name for name in signature.variables if name not in exclude]
        limit = min(self.request.max_intervention_length, len(names))
        if len(signature) <= EXHAUSTIVE_VARIABLES:
            limit = min(limit, EXHAUSTIVE_INTERVENTION_LENGTH)
            result = []
            for length in range(limit + 1):
                for chosen in itertools.combinations(names, length):
                    for values in itertools.product(*(signature.range_of(n) for n in chosen)):
                        result.append(InterventionAssignment(tuple(zip(chosen, values))))
            return result
        sampled = {InterventionAssignment()}
        if limit:
            for _ in range(self.request.count * 4):
                sampled.add(self.formulas.assignment(limit, exclude, minimum=0))
        return sorted(sampled, key=str)

    def value_pairs(self, name: str) -> list[tuple[str, str]]:
        values = self.signature.range_of(name)
        return [(a, b) for a in values for b in values if a != b]

    def gammas(self, arity: int) -> Iterator[tuple[PakcFormula, ...]]:
        for _ in range(self.request.count * 2):
            yield tuple(self.formulas.gamma(self.request.max_depth) for _ in range(arity))

    def phis(self, arity: int) -> Iterator[tuple[PakcFormula, ...]]:
        for _ in range(self.request.count * 2):
            yield tuple(self.formulas.pakc(self.request.max_depth) for _ in range(arity))

    # ---------- Схемы ----------

    def schema_HP1(self):
        for a in self.assignments():
            for z in self.signature.variables:
                for z1, z2 in self.value_pairs(z):
                    yield hp1(a, z, z1, z2)

    def schema_HP2(self):
        for a in self.assignments():
            for z in self.signature.variables:
                yield hp2(a, z, self.signature)

    def schema_HP3(self):
        for z in self.signature.variables:
            for a in self.assignments(exclude=(z,)):
                for z_value in self.signature.range_of(z):
                    for w in self.signature.variables:
                        for w_value in self.signature.range_of(w):
                            yield hp3(a, z, z_value, w, w_value)

    def schema_HP4(self):
        for z in self.signature.variables:
            for a in self.assignments(exclude=(z,)):
                for z_value in self.signature.range_of(z):
                    yield hp4(a, z, z_value)

    def schema_HP5(self):
        for z, w in itertools.permutations(self.signature.variables, 2):
            for a in self.assignments(exclude=(z, w)):
                for z_value in self.signature.range_of(z):
                    for w_value in self.signature.range_of(w):
                        yield hp5(a, z, z_value, w, w_value)

    def schema_HP6(self):
        variables = self.signature.variables
        longest = min(MAX_CAUSAL_CHAIN_LENGTH, len(variables) - 1)
        for length in range(1, longest + 1):
            for chain in itertools.permutations(variables, length + 1):
                yield hp6(list(chain), self.signature)

    def schema_RH1(self):
        assignments = [a for a in self.assignments() if a]
        for g1, g2 in self.gammas(2):
            if assignments:
                yield rh1(self.rng.choice(assignments), g1, g2)

    def schema_RH2(self):
        assignments = [a for a in self.assignments() if a]
        for (g,) in self.gammas(1):
            if assignments:
                yield rh2(self.rng.choice(assignments), g)

    def schema_EX(self):
        for u in self.signature.exogenous:
            for a in self.assignments(exclude=(u,)):
                for u_value in self.signature.range_of(u):
                    yield ex(a, u, u_value)

    def schema_K(self):
        for phi, psi in self.phis(2):
            yield k_axiom(phi, psi)

    def schema_T(self):
        for (phi,) in self.phis(1):
            yield t_axiom(phi)

    def schema_4(self):
        for (phi,) in self.phis(1):
            yield four_axiom(phi)

    def schema_5(self):
        for (phi,) in self.phis(1):
            yield five_axiom(phi)

    def schema_CM(self):
        assignments = [a for a in self.assignments() if a]
        for (g,) in self.gammas(1):
            if assignments:
                yield cm(self.rng.choice(assignments), g)

    def schema_RP1(self):
        assignments = self.assignments()
        for (psi,) in self.phis(1):
            a = self.rng.choice(assignments)
            z = self.rng.choice(self.signature.variables)
            yield rp1(psi, a, z, self.rng.choice(self.signature.range_of(z)))

    def schema_RP2(self):
        for psi, phi in self.phis(2):
            yield rp2(psi, phi)

    def schema_RP3(self):
        for psi, phi, chi in self.phis(3):
            yield rp3(psi, phi, chi)

    def schema_RP4(self):
        for psi, phi in self.phis(2):
            yield rp4(psi, phi)

    def schema_P(self):
        for phi, psi, chi in self.phis(3):
            yield from tautologies(phi, psi, chi)


# ============================================================
# ПРАВИЛА ВЫВОДА
# ============================================================

def modus_ponens_preserved(
    model: EpistemicCausalModel, phi: PakcFormula, psi: PakcFormula
) -> bool:
    """Если φ → ψ и φ истинны на модели, то истинна и ψ."""
    if valid_on_model(model, implies(phi, psi)) and valid_on_model(model, phi):
        return valid_on_model(model, psi)
    return True


def necessitation_preserved(model: EpistemicCausalModel, phi: PakcFormula) -> bool:
    """Если φ истинна на модели, то истинна и Kφ."""
    return not valid_on_model(model, phi) or valid_on_model(model, Know(phi))


def replacement_preserved(
    model: EpistemicCausalModel,
    context: Callable[[PakcFormula], PakcFormula],
    psi1: PakcFormula,
    psi2: PakcFormula,
) -> bool:
    """
    Замена ψ1 на общезначимо эквивалентную ψ2 в контексте сохраняет
    истинность в каждой точке.

    Args:
        model: Модель
        context: Формула с «дыркой» вне позиции анонса
        psi1: Исходная подформула
        psi2: Эквивалентная ей подформула
    """
    return verdicts_by_pointing(model, context(psi1)) == verdicts_by_pointing(
        model, context(psi2)
    )


def check_rule_preservation(
    model: EpistemicCausalModel,
    phi: PakcFormula,
    psi: PakcFormula,
) -> dict[str, bool]:
    """
    Проверить MP, N и RE на одной модели.

    Для RE используются синтаксически эквивалентные пары: двойное
    отрицание и перестановка конъюнктов, в нескольких контекстах.
    """
    contexts: list[Callable[[PakcFormula], PakcFormula]] = [
        lambda hole: Know(hole),
        lambda hole: Not(And(hole, psi)),
        lambda hole: Announce(psi, hole),
    ]
    pairs = [(phi, Not(Not(phi))), (And(phi, psi), And(psi, phi))]
    return {
        "MP": modus_ponens_preserved(model, phi, psi),
        "N": necessitation_preserved(model, phi),
        "RE": all(
            replacement_preserved(model, context, first, second)
            for context in contexts
            for first, second in pairs
        ),
    }
