"""
Валидация имён переменных и значений.

Модуль обеспечивает единые правила для всех входов:
- Имена переменных (идентификаторы грамматик)
- Токены значений (числа или идентификаторы)
- Нормализация значений к строковому виду
- Проверка пары (переменная, значение) по сигнатуре
"""

import re
from typing import TYPE_CHECKING, Type

from config.constants import RESERVED_WORDS
from core.exceptions import EpiCausalError, SignatureError

if TYPE_CHECKING:
    from core.causal import Signature


# ============================================================
# КОНСТАНТЫ
# ============================================================

IDENTIFIER_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
VALUE_PATTERN = re.compile(r"^(?:[0-9]+|[A-Za-z][A-Za-z0-9_]*)$")

# Ключевые слова языка выражений в файлах моделей
EXPRESSION_KEYWORDS = frozenset({"if", "then", "else", "and", "or", "not"})


# ============================================================
# ПРОВЕРКИ
# ============================================================

def is_valid_identifier(name: str) -> bool:
    """
    Проверка имени переменной.

    Args:
        name: Имя переменной

    Returns:
        True если имя допустимо в обеих грамматиках и в выражениях
    """
    if not isinstance(name, str) or not IDENTIFIER_PATTERN.match(name):
        return False
    return name not in RESERVED_WORDS and name not in EXPRESSION_KEYWORDS


def is_valid_value_token(value: str) -> bool:
    """
    Проверка токена значения (VALUE := digit+ | IDENT).

    Args:
        value: Значение в строковом виде

    Returns:
        True если значение можно записать в формуле
    """
    if not isinstance(value, str) or not VALUE_PATTERN.match(value):
        return False
    return value not in RESERVED_WORDS and value not in EXPRESSION_KEYWORDS


def normalize_value(value: int | str) -> str:
    """
    Привести значение к каноническому строковому виду.

    Целые числа и строки допускаются одинаково: 1 и "1" - одно значение.

    Args:
        value: Значение из кода или файла

    Returns:
        Строковый токен значения
    """
    if isinstance(value, bool):
        raise SignatureError(f"Булево значение {value!r} не является токеном диапазона")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value.strip()
    raise SignatureError(f"Неподдерживаемый тип значения: {type(value).__name__}")


def check_value(
    signature: "Signature",
    variable: str,
    value: str,
    error_cls: Type[EpiCausalError] = SignatureError,
) -> None:
    """
    Проверить, что переменная есть в сигнатуре, а значение - в её диапазоне.

    Args:
        signature: Сигнатура
        variable: Имя переменной
        value: Значение (уже нормализованное)
        error_cls: Класс исключения для сообщения об ошибке

    Raises:
        error_cls: Неизвестная переменная или значение вне диапазона
    """
    if variable not in signature:
        raise error_cls(f"Неизвестная переменная: {variable}")
    if value not in signature.range_of(variable):
        raise error_cls(
            f"Значение {value} вне диапазона {variable}: "
            f"{', '.join(signature.range_of(variable))}"
        )
