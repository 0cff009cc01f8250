"""
Конфигурация логирования.

Модуль обеспечивает:
- Структурированное логирование через structlog
- Вывод логов в stderr (stdout занят вердиктами CLI)
- Консольный рендерер в режиме отладки, JSON иначе
- Логгер с предустановленным контекстом
- Декоратор для замера длительных прогонов
"""

import functools
import logging
import sys
import time
from typing import Any, Callable, Dict, Optional

import structlog


# ============================================================
# КОНСТАНТЫ
# ============================================================

APP_NAME = "epicausal"
APP_VERSION = "1.0"

# Предупреждение о медленных операциях, мс
SLOW_OPERATION_MS = 60_000


# ============================================================
# ПРОЦЕССОРЫ ДЛЯ STRUCTLOG
# ============================================================

def add_app_context(
    logger: Any,
    method_name: str,
    event_dict: Dict[str, Any],
) -> Dict[str, Any]:
    """
    Процессор для добавления контекста приложения.
    """
    event_dict["app"] = APP_NAME
    event_dict["version"] = APP_VERSION
    return event_dict


# ============================================================
# НАСТРОЙКА
# ============================================================

def setup_logging(debug: bool = False, json_logs: bool = False) -> structlog.BoundLogger:
    """
    Настройка stdlib logging и structlog.

    Args:
        debug: Режим отладки (уровень DEBUG, цветной вывод)
        json_logs: Принудительно JSON даже в режиме отладки

    Returns:
        Настроенный логгер
    """
    log_level = logging.DEBUG if debug else logging.WARNING

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    root_logger.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root_logger.addHandler(handler)

    if debug and not json_logs:
        renderer = structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())
    else:
        renderer = structlog.processors.JSONRenderer()

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            add_app_context,
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    return structlog.get_logger()


# ============================================================
# КОНТЕКСТНОЕ ЛОГИРОВАНИЕ
# ============================================================

def get_logger_with_context(**context) -> structlog.BoundLogger:
    """
    Получить логгер с предустановленным контекстом.

    Пример:
        logger = get_logger_with_context(command="equiv", seed=42)
        logger.info("oracle_started")  # Включит command и seed

    Args:
        **context: Ключ-значение для добавления в контекст

    Returns:
        Логгер с контекстом
    """
    return structlog.get_logger().bind(**context)


# ============================================================
# ДЕКОРАТОРЫ ЛОГИРОВАНИЯ
# ============================================================

def log_execution(operation_name: Optional[str] = None) -> Callable:
    """
    Декоратор для логирования длительности функции.

    Args:
        operation_name: Название операции (по умолчанию имя функции)
    """

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger = structlog.get_logger()
            name = operation_name or func.__name__
            start_time = time.time()

            try:
                result = func(*args, **kwargs)
            except Exception as e:
                duration_ms = (time.time() - start_time) * 1000
                logger.error(
                    "operation_failed",
                    operation=name,
                    duration_ms=duration_ms,
                    error=str(e),
                )
                raise

            duration_ms = (time.time() - start_time) * 1000
            log = logger.warning if duration_ms > SLOW_OPERATION_MS else logger.info
            log("operation_completed", operation=name, duration_ms=duration_ms)
            return result

        return wrapper

    return decorator
