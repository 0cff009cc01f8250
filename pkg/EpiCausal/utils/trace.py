"""
Трассировка вычисления формул.

Каждый узел вычисления записывается строкой
"клауза | формула | размер команды | вердикт" с отступом по глубине.
"""

from dataclasses import dataclass, field
from typing import Callable


@dataclass
class TraceLine:
    depth: int
    clause: str
    formula: str
    team_size: int
    verdict: bool | None = None
    note: str = ""

    def render(self, indent: str = "  ") -> str:
        verdict = "?" if self.verdict is None else str(self.verdict).lower()
        text = f"{indent * self.depth}{self.clause} | {self.formula} | {self.team_size} | {verdict}"
        return f"{text} | {self.note}" if self.note else text


@dataclass
class Tracer:
    """
    Накопитель строк трассировки.

    Строка открывается до вычисления подформул и закрывается вердиктом
    после, поэтому порядок строк соответствует обходу в глубину.
    """

    printer: Callable[[object], str] = str
    lines: list[TraceLine] = field(default_factory=list)

    def open(self, depth: int, clause: str, formula: object, team_size: int) -> TraceLine:
        line = TraceLine(depth, clause, self.printer(formula), team_size)
        self.lines.append(line)
        return line

    def render(self) -> str:
        return "\n".join(line.render() for line in self.lines)
