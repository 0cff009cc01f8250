"""
Разбор и печать формул PAKC.

Модуль обеспечивает:
- LALR-грамматику lark для конкретного синтаксиса
- Раскрытие производных связок (|, ->, <->) в ¬/∧
- Проверку стратификации и сигнатуры при разборе
- Каноническую печать, для которой parse(print(f)) = f
"""

from functools import lru_cache

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from core.causal import InterventionAssignment, Signature
from core.exceptions import EpiCausalError, FormulaSyntaxError
from logic.formulas import (
    And,
    Announce,
    Atom,
    Intervene,
    Know,
    Not,
    PakcFormula,
    disj,
    iff,
    implies,
    intervene,
    validate_formula,
)


# ============================================================
# ГРАММАТИКА
# ============================================================

PAKC_GRAMMAR = r"""
    ?start: formula

    ?formula: implication
            | implication "<->" formula          -> iff_op
    ?implication: disjunction
                | disjunction "->" implication   -> implies_op
    ?disjunction: conjunction
                | conjunction "|" disjunction    -> or_op
    ?conjunction: unary
                | unary "&" conjunction          -> and_op

    ?unary: "~" unary                            -> not_op
          | "K" unary                            -> know
          | "[" formula "!" "]" unary            -> announce
          | "[" [bindings] "]" unary             -> intervention
          | "(" formula ")"
          | atom

    bindings: binding ("," binding)*
    binding: IDENT ":=" value
    atom: IDENT "=" value
    ?value: INT | IDENT

    IDENT: /[A-Za-z][A-Za-z0-9_]*/
    INT: /[0-9]+/

    %import common.WS
    %ignore WS
"""


class PakcBuilder(Transformer):
    """Дерево разбора -> AST PAKC."""

    def atom(self, children):
        name, value = children
        return Atom(str(name), str(value))

    def binding(self, children):
        name, value = children
        return (str(name), str(value))

    def bindings(self, children):
        return list(children)

    def not_op(self, children):
        return Not(children[0])

    def know(self, children):
        return Know(children[0])

    def announce(self, children):
        return Announce(children[0], children[1])

    def intervention(self, children):
        bindings, body = children
        return intervene(InterventionAssignment(tuple(bindings or ())), body)

    def and_op(self, children):
        return And(children[0], children[1])

    def or_op(self, children):
        return disj(children[0], children[1])

    def implies_op(self, children):
        return implies(children[0], children[1])

    def iff_op(self, children):
        return iff(children[0], children[1])


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(PAKC_GRAMMAR, parser="lalr", maybe_placeholders=True)


def parse_tree(text: str, builder: Transformer, parser: Lark):
    """
    Разобрать текст и построить AST общим способом для обоих языков.

    Raises:
        FormulaSyntaxError: Текст не соответствует грамматике
        EpiCausalError: Ошибка построения узла (стратификация, повторы)
    """
    try:
        tree = parser.parse(text)
    except UnexpectedInput as e:
        line = getattr(e, "line", None)
        column = getattr(e, "column", None)
        position = getattr(e, "pos_in_stream", None)
        raise FormulaSyntaxError(
            f"Синтаксическая ошибка в строке {line}, колонке {column}: {text!r}",
            position=position if position is None or position >= 0 else None,
            line=line if line is None or line >= 0 else None,
            column=column if column is None or column >= 0 else None,
        ) from e
    try:
        return builder.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, EpiCausalError):
            raise e.orig_exc from None
        raise


def parse_formula(text: str, signature: Signature | None = None) -> PakcFormula:
    """
    Разобрать формулу PAKC.

    Args:
        text: Текст формулы
        signature: Если задана, атомы и интервенции проверяются по ней

    Returns:
        AST

    Raises:
        FormulaSyntaxError: Синтаксическая ошибка (с позицией)
        FormulaValidationError: Вложенная интервенция, неизвестная переменная,
            значение вне диапазона
        InterventionError: Повтор переменной в интервенции
    """
    formula = parse_tree(text, PakcBuilder(), _parser())
    if signature is not None:
        validate_formula(formula, signature)
    return formula


# ============================================================
# ПЕЧАТЬ
# ============================================================

# Уровни приоритета: чем больше, тем сильнее связывает
_IFF, _IMPLIES, _OR, _AND, _UNARY = 1, 2, 3, 4, 5


def _match_implies(formula: PakcFormula):
    if isinstance(formula, Not) and isinstance(formula.body, And):
        inner = formula.body
        if isinstance(inner.right, Not):
            return inner.left, inner.right.body
    return None


def _match_iff(formula: PakcFormula):
    if isinstance(formula, And):
        forward, backward = _match_implies(formula.left), _match_implies(formula.right)
        if forward and backward and forward == (backward[1], backward[0]):
            return forward
    return None


def _render(formula: PakcFormula) -> tuple[str, int]:
    match formula:
        case Atom(variable, value):
            return f"{variable}={value}", _UNARY
        case Intervene(assignment, body) if not assignment:
            return _render(body)

    pair = _match_iff(formula)
    if pair:
        return _binary(pair[0], "<->", pair[1], _IFF)

    pair = _match_implies(formula)
    if pair:
        left, right = pair
        # ¬χ → ψ печатается как χ | ψ, кроме случая, когда ¬χ сама импликация
        if isinstance(left, Not) and _match_implies(left) is None:
            return _binary(left.body, "|", right, _OR)
        return _binary(left, "->", right, _IMPLIES)

    match formula:
        case Not(body):
            return "~" + _operand(body, _UNARY), _UNARY
        case Know(body):
            return "K " + _operand(body, _UNARY), _UNARY
        case Announce(announcement, body):
            return f"[{print_formula(announcement)} !] " + _operand(body, _UNARY), _UNARY
        case Intervene(assignment, body):
            bindings = ", ".join(f"{name}:={value}" for name, value in assignment)
            return f"[{bindings}] " + _operand(body, _UNARY), _UNARY
        case And(left, right):
            return _binary(left, "&", right, _AND)
    raise TypeError(f"Не формула PAKC: {formula!r}")


def _binary(left: PakcFormula, op: str, right: PakcFormula, level: int) -> tuple[str, int]:
    # Все бинарные связки правоассоциативны
    return f"{_operand(left, level + 1)} {op} {_operand(right, level)}", level


def _operand(formula: PakcFormula, minimum: int) -> str:
    text, level = _render(formula)
    return text if level >= minimum else f"({text})"


def print_formula(formula: PakcFormula) -> str:
    """
    Каноническая печать формулы.

    Шаблоны ¬(φ ∧ ¬ψ) печатаются как импликация или дизъюнкция,
    пустые интервенции опускаются.
    """
    return _render(formula)[0]
