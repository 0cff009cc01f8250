"""
Причинные модели: сигнатуры, структурные функции, valuation-ы и интервенции.

Модуль обеспечивает:
- Signature с каноническим порядком переменных
- Плотные таблицы структурных функций (numpy, только для чтения)
- Причинных родителей перебором по определению
- Проверку рекурсивности и топологический порядок (networkx)
- Решение модели по экзогенным значениям
- Интервенции над функциями, valuation-ами и моделями
"""

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import networkx as nx
import numpy as np
import structlog

from config.constants import INTERVENTION_CACHE_SIZE
from core.exceptions import (
    ComplianceError,
    InterventionError,
    NonRecursiveModelError,
    SignatureError,
)
from core.validators import (
    check_value,
    is_valid_identifier,
    is_valid_value_token,
    normalize_value,
)


logger = structlog.get_logger()


# ============================================================
# СИГНАТУРА
# ============================================================

@dataclass(frozen=True)
class Signature:
    """
    Сигнатура: экзогенные и эндогенные переменные с конечными диапазонами.

    Канонический порядок: сначала экзогенные, затем эндогенные,
    каждый список в порядке объявления. Все кортежи индексируются по нему.
    """

    exogenous: tuple[str, ...]
    endogenous: tuple[str, ...]
    ranges: tuple[tuple[str, ...], ...]

    _positions: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )
    _value_indices: tuple[dict[str, int], ...] = field(
        init=False, repr=False, compare=False, hash=False, default=()
    )

    def __post_init__(self) -> None:
        variables = self.exogenous + self.endogenous
        if not variables:
            raise SignatureError("Сигнатура должна содержать хотя бы одну переменную")
        if len(set(variables)) != len(variables):
            raise SignatureError("Имена переменных повторяются или пересекаются U и V")
        if len(self.ranges) != len(variables):
            raise SignatureError("Число диапазонов не совпадает с числом переменных")

        for name in variables:
            if not is_valid_identifier(name):
                raise SignatureError(f"Недопустимое имя переменной: {name!r}")

        for name, values in zip(variables, self.ranges):
            if not values:
                raise SignatureError(f"Пустой диапазон у переменной {name}")
            if len(set(values)) != len(values):
                raise SignatureError(f"Повторяющиеся значения в диапазоне {name}")
            invalid = [value for value in values if not is_valid_value_token(value)]
            if invalid:
                raise SignatureError(f"Недопустимые значения {invalid} в диапазоне {name}")

        object.__setattr__(
            self, "_positions", {name: i for i, name in enumerate(variables)}
        )
        object.__setattr__(
            self,
            "_value_indices",
            tuple({value: i for i, value in enumerate(values)} for values in self.ranges),
        )

    @classmethod
    def build(
        cls,
        exogenous: Sequence[str],
        endogenous: Sequence[str],
        ranges: Mapping[str, Sequence[int | str]],
    ) -> "Signature":
        """
        Создать сигнатуру из списков имён и словаря диапазонов.

        Args:
            exogenous: Экзогенные переменные в порядке объявления
            endogenous: Эндогенные переменные в порядке объявления
            ranges: Диапазон каждой переменной (числа или токены)

        Returns:
            Signature

        Raises:
            SignatureError: Нарушены инварианты сигнатуры
        """
        variables = tuple(exogenous) + tuple(endogenous)
        missing = [name for name in variables if name not in ranges]
        if missing:
            raise SignatureError(f"Нет диапазона для переменных: {', '.join(missing)}")
        extra = sorted(set(ranges) - set(variables))
        if extra:
            raise SignatureError(f"Диапазоны для необъявленных переменных: {', '.join(extra)}")
        return cls(
            exogenous=tuple(exogenous),
            endogenous=tuple(endogenous),
            ranges=tuple(
                tuple(normalize_value(value) for value in ranges[name])
                for name in variables
            ),
        )

    # ---------- Переменные ----------

    @property
    def variables(self) -> tuple[str, ...]:
        """Все переменные в каноническом порядке."""
        return self.exogenous + self.endogenous

    @property
    def sizes(self) -> tuple[int, ...]:
        """Размеры диапазонов в каноническом порядке."""
        return tuple(len(values) for values in self.ranges)

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def __len__(self) -> int:
        return len(self._positions)

    def position(self, name: str) -> int:
        """Индекс переменной в каноническом порядке."""
        try:
            return self._positions[name]
        except KeyError:
            raise SignatureError(f"Неизвестная переменная: {name}") from None

    def is_exogenous(self, name: str) -> bool:
        return self.position(name) < len(self.exogenous)

    def is_endogenous(self, name: str) -> bool:
        return self.position(name) >= len(self.exogenous)

    # ---------- Значения ----------

    def range_of(self, name: str) -> tuple[str, ...]:
        return self.ranges[self.position(name)]

    def value_index(self, name: str, value: int | str) -> int:
        """
        Индекс значения в диапазоне переменной.

        Raises:
            SignatureError: Значение вне диапазона
        """
        token = normalize_value(value)
        try:
            return self._value_indices[self.position(name)][token]
        except KeyError:
            raise SignatureError(f"Значение {token} вне диапазона {name}") from None

    def value_at(self, name: str, index: int) -> str:
        return self.ranges[self.position(name)][index]

    def others(self, name: str) -> tuple[str, ...]:
        """Все переменные, кроме данной, в каноническом порядке."""
        return tuple(other for other in self.variables if other != name)

    def index_tuples(self, names: Sequence[str] | None = None) -> Iterator[tuple[int, ...]]:
        """Все кортежи индексов значений для переменных (по умолчанию всех)."""
        names = self.variables if names is None else names
        return itertools.product(*(range(len(self.range_of(name))) for name in names))

    def valuations(self) -> Iterator["Valuation"]:
        """Все полные valuation-ы сигнатуры в каноническом порядке."""
        for indices in self.index_tuples():
            yield Valuation(self, indices)


# ============================================================
# VALUATION
# ============================================================

@dataclass(frozen=True)
class Valuation:
    """
    Полное присваивание значений всем переменным сигнатуры.

    Хранит индексы значений в каноническом порядке.
    """

    signature: Signature = field(hash=False, repr=False)
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = self.signature.sizes
        if len(self.indices) != len(sizes):
            raise SignatureError("Valuation должна быть определена на всех переменных")
        for index, size in zip(self.indices, sizes):
            if not 0 <= index < size:
                raise SignatureError("Индекс значения вне диапазона")

    @classmethod
    def from_mapping(
        cls, signature: Signature, values: Mapping[str, int | str]
    ) -> "Valuation":
        """
        Создать valuation из словаря имя -> значение.

        Raises:
            SignatureError: Словарь не совпадает с множеством переменных
        """
        unknown = sorted(set(values) - set(signature.variables))
        if unknown:
            raise SignatureError(f"Неизвестные переменные: {', '.join(unknown)}")
        missing = [name for name in signature.variables if name not in values]
        if missing:
            raise SignatureError(f"Нет значений для: {', '.join(missing)}")
        return cls(
            signature,
            tuple(signature.value_index(name, values[name]) for name in signature.variables),
        )

    def __getitem__(self, name: str) -> str:
        return self.signature.value_at(name, self.indices[self.signature.position(name)])

    def index_of(self, name: str) -> int:
        return self.indices[self.signature.position(name)]

    def as_dict(self) -> dict[str, str]:
        return {name: self[name] for name in self.signature.variables}

    def replace(self, updates: Mapping[str, int | str]) -> "Valuation":
        """Копия с заменёнными значениями (без пересчёта эндогенных)."""
        indices = list(self.indices)
        for name, value in updates.items():
            indices[self.signature.position(name)] = self.signature.value_index(name, value)
        return Valuation(self.signature, tuple(indices))

    def sort_key(self) -> tuple[int, ...]:
        return self.indices

    def __str__(self) -> str:
        return "(" + ", ".join(f"{name}={value}" for name, value in self.as_dict().items()) + ")"


# ============================================================
# ПРИСВАИВАНИЕ ИНТЕРВЕНЦИИ
# ============================================================

@dataclass(frozen=True)
class InterventionAssignment:
    """
    Присваивание [X:=x]: упорядоченный список пар (переменная, значение).

    Переменные не повторяются; список может быть пустым.
    """

    bindings: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        normalized = tuple(
            (name, normalize_value(value)) for name, value in self.bindings
        )
        names = [name for name, _ in normalized]
        if len(set(names)) != len(names):
            duplicates = sorted({name for name in names if names.count(name) > 1})
            raise InterventionError(
                f"Переменная повторяется в интервенции: {', '.join(duplicates)}"
            )
        object.__setattr__(self, "bindings", normalized)

    @classmethod
    def of(cls, *pairs: tuple[str, int | str]) -> "InterventionAssignment":
        return cls(tuple(pairs))

    @classmethod
    def from_mapping(cls, values: Mapping[str, int | str]) -> "InterventionAssignment":
        return cls(tuple(values.items()))

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.bindings)

    def as_dict(self) -> dict[str, str]:
        return dict(self.bindings)

    def extended(self, name: str, value: int | str) -> "InterventionAssignment":
        return InterventionAssignment(self.bindings + ((name, value),))

    def validate_for(self, signature: Signature) -> None:
        """
        Проверить присваивание по сигнатуре.

        Raises:
            InterventionError: Неизвестная переменная или значение вне диапазона
        """
        for name, value in self.bindings:
            check_value(signature, name, value, InterventionError)

    def __iter__(self) -> Iterator[tuple[str, str]]:
        return iter(self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)

    def __bool__(self) -> bool:
        return bool(self.bindings)

    def __str__(self) -> str:
        return "[" + ", ".join(f"{name}:={value}" for name, value in self.bindings) + "]"


# ============================================================
# СТРУКТУРНЫЕ ФУНКЦИИ
# ============================================================

class StructuralFunctionSet:
    """
    Набор структурных функций: по одной плотной таблице на эндогенную переменную.

    Таблица для V - массив numpy, оси которого соответствуют всем
    остальным переменным в каноническом порядке, а элементы - индексы
    значений из диапазона V. Массивы доступны только для чтения.
    """

    def __init__(self, signature: Signature, tables: Mapping[str, np.ndarray]):
        """
        Args:
            signature: Сигнатура
            tables: Таблица индексов значений для каждой эндогенной переменной

        Raises:
            SignatureError: Таблица отсутствует, лишняя или некорректной формы
        """
        self.signature = signature
        extra = sorted(set(tables) - set(signature.endogenous))
        if extra:
            raise SignatureError(f"Таблицы для не-эндогенных переменных: {', '.join(extra)}")

        frozen: dict[str, np.ndarray] = {}
        for name in signature.endogenous:
            if name not in tables:
                raise SignatureError(f"Нет структурной функции для {name}")
            table = np.array(tables[name], dtype=np.int64, copy=True)
            shape = tuple(len(signature.range_of(other)) for other in signature.others(name))
            if table.shape != shape:
                raise SignatureError(
                    f"Таблица {name} имеет форму {table.shape}, ожидалась {shape}"
                )
            size = len(signature.range_of(name))
            if table.size and (table.min() < 0 or table.max() >= size):
                raise SignatureError(f"Значения таблицы {name} вне диапазона")
            table.setflags(write=False)
            frozen[name] = table
        self._tables = frozen
        self._hash = hash(
            (signature,) + tuple(frozen[name].tobytes() for name in signature.endogenous)
        )

    # ---------- Конструкторы ----------

    @classmethod
    def from_callables(
        cls,
        signature: Signature,
        functions: Mapping[str, Callable[[Mapping[str, str]], int | str]],
    ) -> "StructuralFunctionSet":
        """
        Построить таблицы перебором по функциям Python.

        Args:
            signature: Сигнатура
            functions: Для каждой эндогенной V функция от словаря значений
                остальных переменных, возвращающая значение V

        Returns:
            StructuralFunctionSet
        """
        tables = {}
        for name in signature.endogenous:
            others = signature.others(name)
            shape = tuple(len(signature.range_of(other)) for other in others)
            table = np.zeros(shape, dtype=np.int64)
            for indices in np.ndindex(*shape):
                env = {
                    other: signature.value_at(other, index)
                    for other, index in zip(others, indices)
                }
                table[indices] = signature.value_index(name, functions[name](env))
            tables[name] = table
        return cls(signature, tables)

    # ---------- Доступ ----------

    @property
    def tables(self) -> Mapping[str, np.ndarray]:
        return dict(self._tables)

    def table_for(self, name: str) -> np.ndarray:
        if not self.signature.is_endogenous(name):
            raise SignatureError(f"{name} не является эндогенной переменной")
        return self._tables[name]

    def output_index(self, name: str, indices: Sequence[int]) -> int:
        """Индекс значения f_V на полном кортеже индексов (позиция V пропускается)."""
        position = self.signature.position(name)
        key = tuple(indices[:position]) + tuple(indices[position + 1:])
        return int(self._tables[name][key])

    # ---------- Граф и порядок ----------

    @cached_property
    def parent_sets(self) -> dict[str, frozenset[str]]:
        return {name: _brute_force_parents(self, name) for name in self.signature.endogenous}

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Граф непосредственного влияния X ↪ V."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.signature.variables)
        for name, parent_set in self.parent_sets.items():
            graph.add_edges_from((parent, name) for parent in parent_set)
        return graph

    @cached_property
    def topological_order(self) -> tuple[str, ...] | None:
        """Лексикографический топологический порядок или None при цикле."""
        if not nx.is_directed_acyclic_graph(self.graph):
            return None
        return tuple(nx.lexicographical_topological_sort(self.graph))

    # ---------- Сравнение ----------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructuralFunctionSet):
            return NotImplemented
        return self.signature == other.signature and all(
            np.array_equal(self._tables[name], other._tables[name])
            for name in self.signature.endogenous
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"StructuralFunctionSet(endogenous={list(self.signature.endogenous)})"


def _brute_force_parents(functions: StructuralFunctionSet, name: str) -> frozenset[str]:
    # X ↪ V, если вдоль оси X выход таблицы меняется хотя бы при одном
    # наборе остальных значений
    table = functions.table_for(name)
    result = set()
    for axis, other in enumerate(functions.signature.others(name)):
        if table.shape[axis] > 1 and np.any(np.ptp(table, axis=axis) != 0):
            result.add(other)
    return frozenset(result)


# ============================================================
# ОПЕРАЦИИ НАД ФУНКЦИЯМИ
# ============================================================

def parents(functions: StructuralFunctionSet, variable: str) -> frozenset[str]:
    """
    Непосредственные причины эндогенной переменной.

    X входит в результат, если существуют значения остальных переменных
    и два разных значения X с разными выходами таблицы.

    Args:
        functions: Набор структурных функций
        variable: Эндогенная переменная

    Returns:
        Множество родителей

    Raises:
        SignatureError: Переменная неизвестна или не эндогенна
    """
    if not functions.signature.is_endogenous(variable):
        raise SignatureError(f"{variable} не является эндогенной переменной")
    return functions.parent_sets[variable]


def edges(functions: StructuralFunctionSet) -> list[tuple[str, str]]:
    """Рёбра X ↪ V, отсортированные лексикографически."""
    return sorted(functions.graph.edges())


def is_recursive(functions: StructuralFunctionSet) -> bool:
    """Транзитивное замыкание ↪ асимметрично (в графе нет циклов)."""
    return functions.topological_order is not None


def find_cycle(functions: StructuralFunctionSet) -> list[str]:
    """
    Переменные одного причинного цикла (пустой список, если циклов нет).
    """
    try:
        cycle_edges = nx.find_cycle(functions.graph)
    except nx.NetworkXNoCycle:
        return []
    return [source for source, _ in cycle_edges]


def topological_order(functions: StructuralFunctionSet) -> tuple[str, ...]:
    """
    Топологический порядок всех переменных, лексикографический среди готовых.

    Raises:
        NonRecursiveModelError: В графе есть цикл
    """
    order = functions.topological_order
    if order is None:
        cycle = find_cycle(functions)
        raise NonRecursiveModelError(
            f"Структурные функции нерекурсивны: цикл {' -> '.join(cycle + cycle[:1])}",
            cycle=cycle,
        )
    return order


def complies(valuation: Valuation, functions: StructuralFunctionSet) -> bool:
    """
    Valuation согласована со всеми структурными функциями.
    """
    indices = valuation.indices
    signature = functions.signature
    return all(
        indices[signature.position(name)] == functions.output_index(name, indices)
        for name in signature.endogenous
    )


def solve(
    functions: StructuralFunctionSet,
    exogenous_values: Mapping[str, int | str],
) -> Valuation:
    """
    Единственная согласованная valuation с заданными экзогенными значениями.

    Эндогенные переменные вычисляются в топологическом порядке ↪.

    Args:
        functions: Рекурсивный набор функций
        exogenous_values: Значения всех экзогенных переменных

    Returns:
        Valuation

    Raises:
        NonRecursiveModelError: Набор функций содержит цикл
        SignatureError: Нет значения для экзогенной переменной
    """
    signature = functions.signature
    missing = [name for name in signature.exogenous if name not in exogenous_values]
    if missing:
        raise SignatureError(f"Нет значений экзогенных переменных: {', '.join(missing)}")
    indices = [0] * len(signature)
    for name in signature.exogenous:
        indices[signature.position(name)] = signature.value_index(name, exogenous_values[name])
    return _solve_indices(functions, indices)


def _solve_indices(functions: StructuralFunctionSet, indices: list[int]) -> Valuation:
    signature = functions.signature
    for name in topological_order(functions):
        if signature.is_endogenous(name):
            indices[signature.position(name)] = functions.output_index(name, indices)
    return Valuation(signature, tuple(indices))


def intervene_functions(
    functions: StructuralFunctionSet,
    assignment: InterventionAssignment,
) -> StructuralFunctionSet:
    """
    F_a: эндогенные переменные из присваивания получают константные таблицы.

    Результат кэшируется по паре (функции, присваивание) в ограниченном LRU.
    """
    return _intervene_functions_cached(functions, assignment)


@lru_cache(maxsize=INTERVENTION_CACHE_SIZE)
def _intervene_functions_cached(
    functions: StructuralFunctionSet,
    assignment: InterventionAssignment,
) -> StructuralFunctionSet:
    signature = functions.signature
    tables = functions.tables
    for name, value in assignment:
        if signature.is_endogenous(name):
            tables[name] = np.full(
                functions.table_for(name).shape,
                signature.value_index(name, value),
                dtype=np.int64,
            )
    result = StructuralFunctionSet(signature, tables)
    logger.debug("functions_intervened", assignment=str(assignment))
    return result


def intervene_valuation(
    valuation: Valuation,
    intervened: StructuralFunctionSet,
    assignment: InterventionAssignment,
) -> Valuation:
    """
    A^F_a: экзогенные из присваивания фиксируются, остальные сохраняются,
    эндогенные пересчитываются по уже изменённому набору функций.
    """
    signature = intervened.signature
    indices = list(valuation.indices)
    for name, value in assignment:
        if signature.is_exogenous(name):
            indices[signature.position(name)] = signature.value_index(name, value)
    return _solve_indices(intervened, indices)


# ============================================================
# ПРИЧИННАЯ МОДЕЛЬ
# ============================================================

@dataclass(frozen=True)
class CausalModel:
    """
    Причинная модель ⟨S, F, A⟩ с рекурсивным F и согласованной A.
    """

    functions: StructuralFunctionSet
    valuation: Valuation

    def __post_init__(self) -> None:
        topological_order(self.functions)
        if self.valuation.signature != self.functions.signature:
            raise SignatureError("Valuation и функции относятся к разным сигнатурам")
        if not complies(self.valuation, self.functions):
            raise ComplianceError(f"Valuation {self.valuation} не согласована с функциями")

    @property
    def signature(self) -> Signature:
        return self.functions.signature


def intervene_model(model: CausalModel, assignment: InterventionAssignment) -> CausalModel:
    """
    Интервенция над причинной моделью: ⟨S, F_a, A^F_a⟩.

    Пустое присваивание возвращает равную модель.

    Raises:
        InterventionError: Значение вне диапазона или неизвестная переменная
    """
    assignment.validate_for(model.signature)
    if not assignment:
        return model
    intervened = intervene_functions(model.functions, assignment)
    return CausalModel(
        functions=intervened,
        valuation=intervene_valuation(model.valuation, intervened, assignment),
    )


def compliant_valuations(functions: StructuralFunctionSet) -> Iterable[Valuation]:
    """Все согласованные valuation-ы (перебором всего пространства)."""
    return (v for v in functions.signature.valuations() if complies(v, functions))
