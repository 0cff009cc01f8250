"""
Подкоманды CLI.

Каждый модуль предоставляет register(subparsers) и run(args) -> int.
"""

from argparse import ArgumentParser, Namespace

from config import settings
from utils.generators import GeneratorConfig


def split_names(text: str) -> list[str]:
    """Список имён через запятую: "X, Y" -> ["X", "Y"]."""
    return [name.strip() for name in text.split(",") if name.strip()]


def add_generator_arguments(parser: ArgumentParser) -> None:
    """Общие границы генерации для equiv и gen."""
    parser.add_argument("--seed", type=int, default=None, help="базовый seed")
    parser.add_argument("--max-variables", type=int, default=None)
    parser.add_argument("--max-range", type=int, default=None)
    parser.add_argument("--max-team", type=int, default=None)
    parser.add_argument("--max-depth", type=int, default=None)


def generator_config(args: Namespace) -> GeneratorConfig:
    """
    GeneratorConfig из аргументов; лимиты и seed по умолчанию из настроек.

    Неположительные границы - ошибка использования (код 2).
    """
    bounds = {
        "max_variables": args.max_variables,
        "max_range_size": args.max_range,
        "max_team_size": args.max_team,
        "max_formula_depth": args.max_depth,
    }
    try:
        return GeneratorConfig(
            seed=settings.default_seed if args.seed is None else args.seed,
            expansion_cap=settings.expansion_cap,
            or_team_cap=settings.or_team_cap,
            translation_cap=settings.translation_cap,
            **{key: value for key, value in bounds.items() if value is not None},
        )
    except ValueError as e:
        args.command_parser.error(str(e))
