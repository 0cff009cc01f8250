"""
gen: записать случайную модель в файл (или в stdout).
"""

import json
import random
from argparse import Namespace

from cli.commands import add_generator_arguments, generator_config
from storage.model_file import dump_model_file, model_document
from utils.generators import ModelGenerator


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="сгенерировать файл модели")
    parser.add_argument("--output", "-o", help="путь файла; по умолчанию stdout")
    parser.add_argument(
        "--allow-empty-team", action="store_true", help="разрешить пустую команду"
    )
    add_generator_arguments(parser)
    parser.set_defaults(handler=run, command_parser=parser)


def run(args: Namespace) -> int:
    config = generator_config(args)
    generator = ModelGenerator(config, random.Random(config.seed))
    team = generator.causal_team(allow_empty=args.allow_empty_team)
    actual = generator.rng.choice(team.team) if team.team else None

    if args.output:
        dump_model_file(args.output, team.functions, team.team, actual)
    else:
        print(json.dumps(model_document(team.functions, team.team, actual), indent=2))
    return 0
