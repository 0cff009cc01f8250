"""
Переводы COD в PAKC.

Модуль обеспечивает:
- e: поточечный перевод α-формул (работает как анонс)
- tr: глобальный перевод (истинность во всех точках модели)
- tr*: локальный перевод (дополнительный K в клаузах dep и ⊃)

Противоречивый антецедент контрфактуала переводится в verum,
что соответствует его пустой истинности на командах.
"""

import itertools
import math

import structlog

from config import settings
from core.causal import Signature, Valuation
from core.exceptions import CapExceededError, FragmentError
from logic import formulas as pakc
from teams.formulas import And, Cf, CodFormula, Dep, Eq, Neq, Or, SelImp, subformulas


logger = structlog.get_logger()


def _require_non_nested(node: Cf) -> None:
    if any(isinstance(inner, Cf) for inner in subformulas(node.body)):
        raise FragmentError("Вложенный контрфактуал: перевод определён только для не вложенных формул")


def _inconsistent_verum(node: Cf) -> pakc.PakcFormula:
    name, value = node.bindings[0]
    return pakc.verum_for(name, value)


# ============================================================
# e
# ============================================================

def e_translate(formula: CodFormula) -> pakc.PakcFormula:
    """
    Перевод α-формулы в PAKC.

    Raises:
        FragmentError: Встретился dep(...) или вложенный контрфактуал
    """
    match formula:
        case Eq(variable, value):
            return pakc.Atom(variable, value)
        case Neq(variable, value):
            return pakc.Not(pakc.Atom(variable, value))
        case Dep():
            raise FragmentError("Перевод e определён только для формул без dep(...)")
        case And(left, right):
            return pakc.And(e_translate(left), e_translate(right))
        case Or(left, right):
            return pakc.disj(e_translate(left), e_translate(right))
        case SelImp(antecedent, consequent):
            return pakc.implies(e_translate(antecedent), e_translate(consequent))
        case Cf(_, body):
            _require_non_nested(formula)
            assignment = formula.assignment()
            if assignment is None:
                return _inconsistent_verum(formula)
            return pakc.intervene(assignment, e_translate(body))
    raise TypeError(f"Не формула COD: {formula!r}")


# ============================================================
# tr и tr*
# ============================================================

def tr_translate(
    formula: CodFormula,
    signature: Signature,
    *,
    expansion_cap: int | None = None,
    translation_cap: int | None = None,
) -> pakc.PakcFormula:
    """
    Глобальный перевод: T ⊨ φ тогда и только тогда, когда tr(φ) истинна
    во всех точках соответствующей эпистемической модели.

    Raises:
        FragmentError: Вложенный контрфактуал
        CapExceededError: Перевод dep(...) или дизъюнкции слишком велик
    """
    return _Translator(signature, False, expansion_cap, translation_cap).tr(formula)


def tr_star_translate(
    formula: CodFormula,
    signature: Signature,
    *,
    expansion_cap: int | None = None,
    translation_cap: int | None = None,
) -> pakc.PakcFormula:
    """
    Локальный перевод: отличается от tr внешним K в клаузах dep и ⊃.
    """
    return _Translator(signature, True, expansion_cap, translation_cap).tr(formula)


class _Translator:
    def __init__(
        self,
        signature: Signature,
        local: bool,
        expansion_cap: int | None,
        translation_cap: int | None,
    ):
        self.signature = signature
        self.local = local
        self.expansion_cap = settings.expansion_cap if expansion_cap is None else expansion_cap
        self.translation_cap = (
            settings.translation_cap if translation_cap is None else translation_cap
        )

    def tr(self, formula: CodFormula) -> pakc.PakcFormula:
        match formula:
            case Eq(variable, value):
                return pakc.Know(pakc.Atom(variable, value))
            case Neq(variable, value):
                return pakc.Know(pakc.Not(pakc.Atom(variable, value)))
            case Dep(xs, y):
                return self._dependence(xs, y)
            case And(left, right):
                return pakc.And(self.tr(left), self.tr(right))
            case Or(left, right):
                return self._split(left, right)
            case SelImp(antecedent, consequent):
                # Тело селективной импликации переводится глобально
                body = tr_translate(
                    consequent,
                    self.signature,
                    expansion_cap=self.expansion_cap,
                    translation_cap=self.translation_cap,
                )
                announced = pakc.Announce(e_translate(antecedent), body)
                return pakc.Know(announced) if self.local else announced
            case Cf(_, body):
                _require_non_nested(formula)
                assignment = formula.assignment()
                if assignment is None:
                    return _inconsistent_verum(formula)
                return pakc.intervene(assignment, self.tr(body))
        raise TypeError(f"Не формула COD: {formula!r}")

    def _dependence(self, xs: tuple[str, ...], y: str) -> pakc.PakcFormula:
        signature = self.signature
        tuples = list(itertools.product(*(signature.range_of(name) for name in xs)))
        required = len(tuples) * len(signature.range_of(y))
        if required > self.expansion_cap:
            raise CapExceededError(
                f"dep({', '.join(xs)}; {y}): требуется {required} членов при лимите "
                f"{self.expansion_cap}",
                cap=self.expansion_cap,
                required=required,
            )
        conjuncts = []
        for values in tuples:
            observed = pakc.atoms_conjunction(xs, values, signature)
            disjuncts = []
            for v in signature.range_of(y):
                announced = pakc.Announce(observed, pakc.Know(pakc.Atom(y, v)))
                disjuncts.append(pakc.Know(announced) if self.local else announced)
            conjuncts.append(pakc.disj_all(disjuncts, signature))
        return pakc.conj_all(conjuncts, signature)

    def _split(self, left: CodFormula, right: CodFormula) -> pakc.PakcFormula:
        # ⋁_{S ⊆ A} K([σ_S !] tr φ ∧ [¬σ_S !] tr ψ), A - все valuation-ы сигнатуры
        signature = self.signature
        space = math.prod(signature.sizes)
        if space >= 63 or 2**space > self.translation_cap:
            required = 2**space if space < 63 else self.translation_cap + 1
            raise CapExceededError(
                f"Перевод дизъюнкции требует 2^{space} подмножеств при лимите "
                f"{self.translation_cap}",
                cap=self.translation_cap,
                required=required,
            )
        valuations = [valuation_formula(v) for v in signature.valuations()]
        left_tr, right_tr = self.tr(left), self.tr(right)
        disjuncts = []
        for mask in range(2**space):
            chosen = [formula for i, formula in enumerate(valuations) if mask >> i & 1]
            sigma = pakc.disj_all(chosen, signature)
            disjuncts.append(
                pakc.Know(
                    pakc.And(
                        pakc.Announce(sigma, left_tr),
                        pakc.Announce(pakc.Not(sigma), right_tr),
                    )
                )
            )
        logger.debug("split_translated", subsets=len(disjuncts))
        return pakc.disj_all(disjuncts, signature)


def valuation_formula(valuation: Valuation) -> pakc.PakcFormula:
    """Конъюнкция атомов, описывающая valuation целиком."""
    signature = valuation.signature
    return pakc.atoms_conjunction(
        signature.variables, [valuation[name] for name in signature.variables], signature
    )
