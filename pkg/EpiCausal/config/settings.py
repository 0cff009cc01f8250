"""
Конфигурация приложения.

Загружает настройки из переменных окружения (префикс EPICAUSAL_)
и .env файла с использованием Pydantic Settings.
"""

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from config.constants import (
    DEFAULT_EXPANSION_CAP,
    DEFAULT_OR_TEAM_CAP,
    DEFAULT_SEED,
    DEFAULT_TRANSLATION_CAP,
)


# Корневая директория проекта (EpiCausal/)
BASE_DIR = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    """
    Настройки приложения.

    Все лимиты типизированы и валидируются при запуске.
    Например, EPICAUSAL_EXPANSION_CAP=50000 поднимает лимит формул ⇝.
    """

    model_config = SettingsConfigDict(
        env_prefix="EPICAUSAL_",
        env_file=BASE_DIR / ".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # ========== Logging ==========
    debug: bool = False
    log_json: bool = False

    # ========== Caps ==========
    expansion_cap: int = Field(default=DEFAULT_EXPANSION_CAP, gt=0)
    or_team_cap: int = Field(default=DEFAULT_OR_TEAM_CAP, gt=0)
    translation_cap: int = Field(default=DEFAULT_TRANSLATION_CAP, gt=0)

    # ========== Generators ==========
    default_seed: int = DEFAULT_SEED
    jobs: int = Field(default=1, gt=0)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Загрузить настройки один раз за процесс."""
    return Settings()


# Глобальный объект настроек (singleton)
settings = get_settings()
