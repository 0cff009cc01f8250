"""
Разбор и печать формул COD.

Синтаксис визуально отличается от PAKC:
dep(X1,...,Xn; Y), X != v, расщепляющая дизъюнкция \\/,
селективная импликация |>, контрфактуал [[X:=v, ...]] phi.
"""

from functools import lru_cache

from lark import Lark, Transformer

from core.causal import Signature
from logic.parser import parse_tree
from teams.formulas import (
    And,
    Cf,
    CodFormula,
    Dep,
    Eq,
    Neq,
    Or,
    SelImp,
    validate_cod,
)


COD_GRAMMAR = r"""
    ?start: formula

    ?formula: split
            | split "|>" formula            -> selimp
    ?split: conjunction
          | conjunction SPLIT_OR split      -> or_op
    ?conjunction: unary
                | unary "&" conjunction     -> and_op

    ?unary: "[[" [bindings] "]]" unary      -> cf
          | "(" formula ")"
          | literal

    ?literal: IDENT "=" value               -> eq
            | IDENT "!=" value              -> neq
            | "dep" "(" [names] ";" IDENT ")" -> dep

    names: IDENT ("," IDENT)*
    bindings: binding ("," binding)*
    binding: IDENT ":=" value
    ?value: INT | IDENT

    SPLIT_OR: "\\/"
    IDENT: /[A-Za-z][A-Za-z0-9_]*/
    INT: /[0-9]+/

    %import common.WS
    %ignore WS
"""


class CodBuilder(Transformer):
    """Дерево разбора -> AST COD."""

    def eq(self, children):
        name, value = children
        return Eq(str(name), str(value))

    def neq(self, children):
        name, value = children
        return Neq(str(name), str(value))

    def names(self, children):
        return [str(child) for child in children]

    def dep(self, children):
        names, y = children
        return Dep(tuple(names or ()), str(y))

    def binding(self, children):
        name, value = children
        return (str(name), str(value))

    def bindings(self, children):
        return list(children)

    def cf(self, children):
        bindings, body = children
        return Cf(tuple(bindings or ()), body)

    def and_op(self, children):
        return And(children[0], children[1])

    def or_op(self, children):
        left, _, right = children
        return Or(left, right)

    def selimp(self, children):
        return SelImp(children[0], children[1])


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(COD_GRAMMAR, parser="lalr", maybe_placeholders=True)


def parse_cod(text: str, signature: Signature | None = None) -> CodFormula:
    """
    Разобрать формулу COD.

    Raises:
        FormulaSyntaxError: Синтаксическая ошибка (с позицией)
        FormulaValidationError: dep(...) в антецеденте |>, неизвестная
            переменная, значение вне диапазона
    """
    formula = parse_tree(text, CodBuilder(), _parser())
    if signature is not None:
        validate_cod(formula, signature)
    return formula


# ============================================================
# ПЕЧАТЬ
# ============================================================

_SELIMP, _OR, _AND, _UNARY = 1, 2, 3, 4


def _render(formula: CodFormula) -> tuple[str, int]:
    match formula:
        case Eq(variable, value):
            return f"{variable}={value}", _UNARY
        case Neq(variable, value):
            return f"{variable}!={value}", _UNARY
        case Dep(xs, y):
            return f"dep({', '.join(xs)}; {y})", _UNARY
        case Cf(bindings, body):
            text = ", ".join(f"{name}:={value}" for name, value in bindings)
            return f"[[{text}]] " + _operand(body, _UNARY), _UNARY
        case And(left, right):
            return f"{_operand(left, _AND + 1)} & {_operand(right, _AND)}", _AND
        case Or(left, right):
            return f"{_operand(left, _OR + 1)} \\/ {_operand(right, _OR)}", _OR
        case SelImp(antecedent, consequent):
            return f"{_operand(antecedent, _SELIMP + 1)} |> {_operand(consequent, _SELIMP)}", _SELIMP
    raise TypeError(f"Не формула COD: {formula!r}")


def _operand(formula: CodFormula, minimum: int) -> str:
    text, level = _render(formula)
    return text if level >= minimum else f"({text})"


def print_cod(formula: CodFormula) -> str:
    """Каноническая печать; parse_cod(print_cod(f)) = f."""
    return _render(formula)[0]
