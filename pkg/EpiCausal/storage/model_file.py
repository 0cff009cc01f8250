"""
Файлы моделей и команд (JSON).

Модуль обеспечивает:
- Pydantic-схемы блоков signature, functions, team, actual
- Загрузку в EpistemicCausalModel / PointedModel / CausalTeam
- Запись модели обратно в файл (таблицы строками по родителям)

Пример документа:
    {
      "signature": {"exogenous": ["B", "C"], "endogenous": ["S"],
                    "ranges": {"B": [0, 1], "C": [0, 1], "S": [0, 1]}},
      "functions": {"S": {"expr": "if B = 1 and C = 1 then 1 else 0"}},
      "team": [{"B": 0, "C": 0}, {"B": 0, "C": 1}],
      "actual": 1
    }
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from core.causal import (
    Signature,
    StructuralFunctionSet,
    Valuation,
    complies,
    parents,
    solve,
)
from core.epistemic import EpistemicCausalModel, PointedModel
from core.exceptions import (
    ComplianceError,
    EmptyTeamError,
    ModelFileError,
    SignatureError,
)
from storage.expressions import compile_expression
from teams.formulas import CausalTeam


logger = structlog.get_logger()

Scalar = Union[int, str]


# ============================================================
# СХЕМЫ
# ============================================================

class SignatureBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    exogenous: list[str] = Field(default_factory=list)
    endogenous: list[str] = Field(default_factory=list)
    ranges: dict[str, list[Scalar]]


class TableRow(BaseModel):
    """Строка таблицы: условия на часть переменных и выход."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    when: dict[str, Scalar] = Field(default_factory=dict)
    then: Scalar


class FunctionBlock(BaseModel):
    """Функция задаётся либо выражением, либо таблицей строк."""

    model_config = ConfigDict(extra="forbid")

    expr: Optional[str] = None
    table: Optional[list[TableRow]] = None
    default: Optional[Scalar] = None

    @model_validator(mode="after")
    def exactly_one_form(self) -> "FunctionBlock":
        if (self.expr is None) == (self.table is None):
            raise ValueError("нужно ровно одно из полей expr или table")
        return self


class ModelDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    signature: SignatureBlock
    functions: dict[str, FunctionBlock] = Field(default_factory=dict)
    team: list[dict[str, Scalar]] = Field(default_factory=list)
    actual: Optional[Union[int, dict[str, Scalar]]] = None


# ============================================================
# ЗАГРУЗКА
# ============================================================

@dataclass(frozen=True)
class LoadedModel:
    """Результат загрузки: функции, команда в порядке файла и актуальная точка."""

    functions: StructuralFunctionSet
    team: tuple[Valuation, ...]
    actual: Valuation | None

    @property
    def signature(self) -> Signature:
        return self.functions.signature

    def epistemic(self) -> EpistemicCausalModel:
        """
        Raises:
            EmptyTeamError: Команда пуста
        """
        if not self.team:
            raise EmptyTeamError("В файле нет членов команды")
        return EpistemicCausalModel(functions=self.functions, team=self.team)

    def pointed(self) -> PointedModel:
        """
        Raises:
            ModelFileError: В файле нет блока actual
        """
        if self.actual is None:
            raise ModelFileError("В файле нет блока actual")
        return PointedModel(model=self.epistemic(), actual=self.actual)

    def causal_team(self) -> CausalTeam:
        return CausalTeam(functions=self.functions, team=self.team)


def read_document(path: str | Path) -> ModelDocument:
    """
    Прочитать и провалидировать документ.

    Raises:
        ModelFileError: Файл не читается, не JSON или не проходит схему
    """
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ModelFileError(f"Не удалось прочитать {path}: {e}") from e
    try:
        return ModelDocument.model_validate_json(raw)
    except ValidationError as e:
        raise ModelFileError(f"Некорректный файл модели {path}: {e}") from e


def build_signature(document: ModelDocument) -> Signature:
    block = document.signature
    try:
        return Signature.build(block.exogenous, block.endogenous, block.ranges)
    except SignatureError as e:
        raise ModelFileError(f"Некорректная сигнатура: {e}") from e


def build_functions(document: ModelDocument, signature: Signature) -> StructuralFunctionSet:
    """
    Скомпилировать блок functions в таблицы (без проверки рекурсивности).

    Raises:
        ModelFileError: Нет функции, лишняя функция, неполная таблица
    """
    extra = sorted(set(document.functions) - set(signature.endogenous))
    if extra:
        raise ModelFileError(f"Функции для не-эндогенных переменных: {', '.join(extra)}")
    tables = {}
    for name in signature.endogenous:
        block = document.functions.get(name)
        if block is None:
            raise ModelFileError(f"Нет структурной функции для {name}")
        if block.expr is not None:
            tables[name] = compile_expression(block.expr, name, signature)
        else:
            tables[name] = _compile_rows(block, name, signature)
    return StructuralFunctionSet(signature, tables)


def _compile_rows(block: FunctionBlock, name: str, signature: Signature) -> np.ndarray:
    others = signature.others(name)
    try:
        rows = [
            (
                {key: signature.value_index(key, value) for key, value in row.when.items()},
                signature.value_index(name, row.then),
            )
            for row in block.table or []
        ]
        default = None if block.default is None else signature.value_index(name, block.default)
    except SignatureError as e:
        raise ModelFileError(f"Таблица {name}: {e}") from e
    for conditions, _ in rows:
        if name in conditions:
            raise ModelFileError(f"Таблица {name} не может ссылаться на саму переменную")

    shape = tuple(len(signature.range_of(other)) for other in others)
    table = np.zeros(shape, dtype=np.int64)
    for indices in np.ndindex(*shape):
        point = dict(zip(others, indices))
        for conditions, output in rows:
            if all(point[key] == index for key, index in conditions.items()):
                table[indices] = output
                break
        else:
            if default is None:
                described = {other: signature.value_at(other, point[other]) for other in others}
                raise ModelFileError(f"Таблица {name} не покрывает {described}")
            table[indices] = default
    return table


def _resolve_row(
    row: dict[str, Scalar], functions: StructuralFunctionSet
) -> Valuation:
    signature = functions.signature
    keys = set(row)
    try:
        if keys == set(signature.exogenous):
            return solve(functions, row)
        if keys == set(signature.variables):
            valuation = Valuation.from_mapping(signature, row)
            if not complies(valuation, functions):
                raise ComplianceError(f"Valuation {valuation} не согласована с функциями")
            return valuation
    except ComplianceError:
        raise
    except SignatureError as e:
        raise ModelFileError(f"Строка команды {row}: {e}") from e
    raise ModelFileError(
        f"Строка команды {row} должна задавать либо все экзогенные, либо все переменные"
    )


def load_model_file(path: str | Path) -> LoadedModel:
    """
    Загрузить файл модели или команды.

    Raises:
        ModelFileError: Ошибка чтения, схемы, таблиц или строк команды
        ComplianceError: Полная строка команды не согласована
        NonRecursiveModelError: Функции содержат цикл
    """
    document = read_document(path)
    signature = build_signature(document)
    functions = build_functions(document, signature)
    team = tuple(_resolve_row(row, functions) for row in document.team)

    actual = None
    if isinstance(document.actual, int):
        if not 0 <= document.actual < len(team):
            raise ModelFileError(f"actual={document.actual} вне списка команды")
        actual = team[document.actual]
    elif document.actual is not None:
        actual = _resolve_row(document.actual, functions)

    logger.debug("model_file_loaded", path=str(path), team_size=len(team))
    return LoadedModel(functions=functions, team=team, actual=actual)


# ============================================================
# ЗАПИСЬ
# ============================================================

def _scalar(value: str) -> Scalar:
    # "01" остаётся строкой, иначе значение изменится при перезагрузке
    if value.isdigit() and str(int(value)) == value:
        return int(value)
    return value


def functions_document(functions: StructuralFunctionSet) -> dict[str, dict]:
    """Таблицы строками по родителям: перезагрузка даёт равные таблицы."""
    signature = functions.signature
    result = {}
    for name in signature.endogenous:
        parent_list = [other for other in signature.others(name) if other in parents(functions, name)]
        others = signature.others(name)
        table = functions.table_for(name)
        rows = []
        for values in signature.index_tuples(parent_list):
            point = dict(zip(parent_list, values))
            index = tuple(point.get(other, 0) for other in others)
            rows.append(
                {
                    "when": {
                        parent: _scalar(signature.value_at(parent, value))
                        for parent, value in point.items()
                    },
                    "then": _scalar(signature.value_at(name, int(table[index]))),
                }
            )
        result[name] = {"table": rows}
    return result


def model_document(
    functions: StructuralFunctionSet,
    team: tuple[Valuation, ...],
    actual: Valuation | None = None,
) -> dict:
    signature = functions.signature
    document = {
        "signature": {
            "exogenous": list(signature.exogenous),
            "endogenous": list(signature.endogenous),
            "ranges": {
                name: [_scalar(value) for value in signature.range_of(name)]
                for name in signature.variables
            },
        },
        "functions": functions_document(functions),
        "team": [
            {name: _scalar(value) for name, value in member.as_dict().items()}
            for member in team
        ],
    }
    if actual is not None:
        document["actual"] = {name: _scalar(value) for name, value in actual.as_dict().items()}
    return document


def dump_model_file(
    path: str | Path,
    functions: StructuralFunctionSet,
    team: tuple[Valuation, ...],
    actual: Valuation | None = None,
) -> None:
    """
    Записать модель в файл.

    Raises:
        ModelFileError: Файл не записывается
    """
    path = Path(path)
    try:
        path.write_text(
            json.dumps(model_document(functions, team, actual), indent=2, ensure_ascii=False),
            encoding="utf-8",
        )
    except OSError as e:
        raise ModelFileError(f"Не удалось записать {path}: {e}") from e
    logger.debug("model_file_written", path=str(path), team_size=len(team))
