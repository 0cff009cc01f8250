"""
Язык выражений для структурных функций в файлах моделей.

Пример: "if B = 1 and C = 1 then 1 else 0", "not (B != C)", "B".
Условие в позиции значения даёт 1/0. Выражение компилируется в плотную
таблицу перебором значений остальных переменных.
"""

from functools import lru_cache

import numpy as np
from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedInput

from core.causal import Signature
from core.exceptions import ModelFileError, SignatureError


EXPRESSION_GRAMMAR = r"""
    ?start: expr

    ?expr: "if" expr "then" expr "else" expr   -> ite
         | disjunction

    ?disjunction: conjunction
                | disjunction "or" conjunction  -> or_op
    ?conjunction: negation
                | conjunction "and" negation    -> and_op
    ?negation: "not" negation                       -> not_op
             | primary

    ?primary: operand CMP operand                   -> compare
            | operand
            | "(" expr ")"

    ?operand: IDENT | INT

    CMP: "!=" | "="
    IDENT: /[A-Za-z][A-Za-z0-9_]*/
    INT: /[0-9]+/

    %import common.WS
    %ignore WS
"""


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(EXPRESSION_GRAMMAR, parser="lalr")


def parse_expression(text: str) -> Tree | Token:
    """
    Raises:
        ModelFileError: Синтаксическая ошибка в выражении
    """
    try:
        return _parser().parse(text)
    except UnexpectedInput as e:
        raise ModelFileError(
            f"Ошибка в выражении {text!r} (колонка {getattr(e, 'column', '?')})"
        ) from e


class _Evaluator:
    """Вычисление выражения на окружении имя -> значение."""

    def __init__(self, target: str, env: dict[str, str]):
        self.target = target
        self.env = env

    def value(self, node) -> str | bool:
        if isinstance(node, Token):
            name = str(node)
            if node.type == "IDENT" and name in self.env:
                return self.env[name]
            if node.type == "IDENT" and name == self.target:
                raise ModelFileError(f"Функция {self.target} не может читать саму себя")
            return name
        match node.data:
            case "ite":
                condition, then_branch, else_branch = node.children
                chosen = then_branch if self.truth(condition) else else_branch
                return self.value(chosen)
            case "or_op":
                return any(self.truth(child) for child in node.children)
            case "and_op":
                return all(self.truth(child) for child in node.children)
            case "not_op":
                return not self.truth(node.children[0])
            case "compare":
                left, op, right = node.children
                equal = self.operand(left) == self.operand(right)
                return equal if str(op) == "=" else not equal
        raise ModelFileError(f"Неизвестный узел выражения: {node.data}")

    def operand(self, node) -> str:
        result = self.value(node)
        if isinstance(result, bool):
            raise ModelFileError("Условие нельзя сравнивать как значение")
        return result

    def truth(self, node) -> bool:
        result = self.value(node)
        if not isinstance(result, bool):
            raise ModelFileError(f"Ожидалось условие, получено значение {result!r}")
        return result


def compile_expression(text: str, target: str, signature: Signature) -> np.ndarray:
    """
    Скомпилировать выражение для эндогенной переменной в таблицу.

    Args:
        text: Текст выражения
        target: Эндогенная переменная
        signature: Сигнатура

    Returns:
        Таблица индексов значений, оси - остальные переменные

    Raises:
        ModelFileError: Ошибка синтаксиса, ссылка на саму переменную
            или значение вне диапазона
    """
    tree = parse_expression(text)
    others = signature.others(target)
    shape = tuple(len(signature.range_of(name)) for name in others)
    table = np.zeros(shape, dtype=np.int64)
    for indices in np.ndindex(*shape):
        env = {name: signature.value_at(name, index) for name, index in zip(others, indices)}
        result = _Evaluator(target, env).value(tree)
        if isinstance(result, bool):
            result = "1" if result else "0"
        try:
            table[indices] = signature.value_index(target, result)
        except SignatureError as e:
            raise ModelFileError(f"Выражение для {target}: {e}") from e
    return table
