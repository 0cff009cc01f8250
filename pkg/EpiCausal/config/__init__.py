"""
Модуль конфигурации.

Содержит:
- settings.py - настройки из окружения (pydantic-settings)
- constants.py - константы приложения
"""

from .constants import (
    DEFAULT_EXPANSION_CAP,
    DEFAULT_OR_TEAM_CAP,
    DEFAULT_TRANSLATION_CAP,
    DEFAULT_SEED,
)
from .settings import Settings, get_settings, settings


__all__ = [
    "Settings",
    "get_settings",
    "settings",
    "DEFAULT_EXPANSION_CAP",
    "DEFAULT_OR_TEAM_CAP",
    "DEFAULT_TRANSLATION_CAP",
    "DEFAULT_SEED",
]
