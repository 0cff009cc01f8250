"""
Точка входа CLI "EpiCausal".

Этот модуль:
- Строит argparse-парсер с подкомандами
- Настраивает логирование (логи в stderr, вердикты в stdout)
- Переводит исключения библиотеки в коды выхода
"""

import argparse
import sys
from pathlib import Path
from typing import Sequence

# Добавляем корень проекта в PYTHONPATH
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from cli.commands import check, dependence, deps, equiv, gen, team_check, translate
from config import settings
from config.constants import EXIT_OK
from core.exceptions import EpiCausalError
from utils.logging_config import get_logger_with_context, setup_logging


COMMANDS = (check, translate, deps, team_check, equiv, gen, dependence)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epicausal",
        description="Проверка формул на эпистемических причинных моделях и каузальных командах",
    )
    parser.add_argument("--debug", action="store_true", help="подробные логи в stderr")
    parser.add_argument("--log-json", action="store_true", help="логи в формате JSON")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Запустить CLI.

    Returns:
        Код выхода: 0 при успехе, exit_code класса ошибки иначе
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(debug=args.debug or settings.debug, json_logs=args.log_json or settings.log_json)
    logger = get_logger_with_context(command=args.command)

    try:
        code = args.handler(args)
    except EpiCausalError as e:
        logger.error("command_failed", error=str(e), error_type=type(e).__name__)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    logger.debug("command_finished", code=code)
    return EXIT_OK if code is None else code
