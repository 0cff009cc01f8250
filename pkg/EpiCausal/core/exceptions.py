"""
Кастомные исключения проекта "EpiCausal".

Иерархия исключений позволяет обрабатывать ошибки на разных уровнях:
- EpiCausalError - базовое исключение для всех ошибок библиотеки
  - SignatureError - неверная сигнатура, неизвестная переменная
    - ComplianceError - valuation не согласована со структурными функциями
    - EmptyTeamError - пустая команда там, где она запрещена
  - ModelFileError - ошибки чтения/разбора файлов моделей
  - FormulaSyntaxError - синтаксические ошибки формул
  - FormulaValidationError - формула не подходит к сигнатуре
    - InterventionError - некорректное присваивание интервенции
  - FragmentError - формула вне ожидаемого фрагмента языка
  - NonRecursiveModelError - циклические структурные функции
  - CapExceededError - превышен лимит разворачивания формул
  - EquivalenceFailure - оракул нашёл контрпример

Каждый класс несёт фиксированный exit_code, который использует CLI.
"""

from typing import Optional, Sequence


class EpiCausalError(Exception):
    """
    Базовое исключение библиотеки.

    Все кастомные исключения проекта наследуются от этого класса.
    Позволяет ловить все ошибки одним except блоком.
    """

    exit_code: int = 1


class SignatureError(EpiCausalError):
    """
    Ошибка сигнатуры.

    Возникает при:
    - пересечении экзогенных и эндогенных переменных
    - пустом или повторяющемся диапазоне значений
    - обращении к неизвестной переменной
    """

    exit_code = 4


class ComplianceError(SignatureError):
    """Valuation не согласована со структурными функциями."""


class EmptyTeamError(SignatureError):
    """
    Пустая команда valuation-ов.

    Эпистемическая модель требует непустую команду; ограничение,
    которое удаляет всех членов, должно охраняться предусловием анонса.
    """


class ModelFileError(EpiCausalError):
    """
    Ошибка файла модели.

    Возникает когда файл не читается, не является корректным JSON
    или не проходит проверку схемы.
    """

    exit_code = 3


class FormulaSyntaxError(EpiCausalError):
    """
    Синтаксическая ошибка в тексте формулы.
    """

    exit_code = 5

    def __init__(
        self,
        message: str,
        position: Optional[int] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        """
        Args:
            message: Текст ошибки
            position: Смещение в исходном тексте (0-based)
            line: Номер строки (1-based)
            column: Номер колонки (1-based)
        """
        super().__init__(message)
        self.position = position
        self.line = line
        self.column = column


class FormulaValidationError(EpiCausalError):
    """
    Формула синтаксически верна, но не подходит к сигнатуре.

    Неизвестная переменная, значение вне диапазона, вложенная
    интервенция или повтор переменной в списке интервенции.
    """

    exit_code = 6


class InterventionError(FormulaValidationError):
    """Некорректное присваивание [X:=x]: повтор переменной или значение вне диапазона."""


class FragmentError(EpiCausalError):
    """
    Формула не принадлежит нужному фрагменту языка.

    Например, tr2 вызван на формуле не из L1, или в COD-формуле
    встретился вложенный контрфактуал.
    """

    exit_code = 7


class NonRecursiveModelError(EpiCausalError):
    """
    Структурные функции содержат причинный цикл.
    """

    exit_code = 8

    def __init__(self, message: str, cycle: Sequence[str] | None = None):
        """
        Args:
            message: Текст ошибки
            cycle: Переменные, образующие цикл
        """
        super().__init__(message)
        self.cycle = list(cycle or [])


class CapExceededError(EpiCausalError):
    """
    Превышен лимит разворачивания.

    Формулы ⇝, e-/c-зависимости и перевод расщеплённой дизъюнкции
    экспоненциальны по сигнатуре, поэтому размер ограничен настройками.
    """

    exit_code = 9

    def __init__(self, message: str, cap: int = 0, required: int = 0):
        """
        Args:
            message: Текст ошибки
            cap: Действующий лимит
            required: Сколько требовалось
        """
        super().__init__(message)
        self.cap = cap
        self.required = required


class EquivalenceFailure(EpiCausalError):
    """
    Оракул нашёл контрпример.

    Внутри библиотеки не выбрасывается: используется CLI для кода выхода.
    """

    exit_code = 10
