"""
Константы приложения.

Содержит все magic numbers и значения по умолчанию,
используемые в кодовой базе.
"""

from typing import Final


# ============================================================
# ЛИМИТЫ РАЗВОРАЧИВАНИЯ
# ============================================================

# Максимум дизъюнктов/конъюнктов в формулах ⇝ и e-/c-зависимости
DEFAULT_EXPANSION_CAP: Final[int] = 10_000

# Максимальный размер команды для перебора покрытий в расщеплённой дизъюнкции
DEFAULT_OR_TEAM_CAP: Final[int] = 16

# Максимум подмножеств S ⊆ A при переводе расщеплённой дизъюнкции
DEFAULT_TRANSLATION_CAP: Final[int] = 4_096

# Размер LRU-кэша наборов функций после интервенции
INTERVENTION_CACHE_SIZE: Final[int] = 4_096


# ============================================================
# ГЕНЕРАТОРЫ
# ============================================================

DEFAULT_SEED: Final[int] = 20_240_601

# Границы по умолчанию для случайных моделей
DEFAULT_MAX_VARIABLES: Final[int] = 3
DEFAULT_MAX_RANGE_SIZE: Final[int] = 3
DEFAULT_MAX_TEAM_SIZE: Final[int] = 8
DEFAULT_MAX_FORMULA_DEPTH: Final[int] = 5

# Длина цепочек ⇝ в экземплярах HP6
MAX_CAUSAL_CHAIN_LENGTH: Final[int] = 3


# ============================================================
# СИНТАКСИС
# ============================================================

# Зарезервированные слова, которые не могут быть именами переменных
RESERVED_WORDS: Final[frozenset[str]] = frozenset({"K", "dep", "true", "false"})


# ============================================================
# КОДЫ ВЫХОДА CLI
# ============================================================

EXIT_OK: Final[int] = 0
EXIT_USAGE: Final[int] = 2
