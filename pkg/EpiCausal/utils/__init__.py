"""
Модуль утилит "EpiCausal".

Содержит:
- logging_config.py - конфигурация логирования
- trace.py - трассировка вычисления формул
- generators.py - случайные модели и формулы (импортируется напрямую)
"""

from .logging_config import (
    get_logger_with_context,
    log_execution,
    setup_logging,
)
from .trace import TraceLine, Tracer


__all__ = [
    # Logging
    "setup_logging",
    "get_logger_with_context",
    "log_execution",
    # Trace
    "TraceLine",
    "Tracer",
]
