"""
equiv: прогон оракула на случайных моделях и формулах.

    epicausal equiv --which reduction --count 500   -> 500/500 equivalent
    epicausal equiv --which axioms --count 100      -> all instances valid

Контрпримеры печатаются JSON-строкой (seed, model, formula) и дают код 10.
"""

import json
from argparse import Namespace

from cli.commands import add_generator_arguments, generator_config
from cli.oracles import ORACLES, run_oracle
from config import settings
from core.exceptions import EquivalenceFailure
from utils.logging_config import get_logger_with_context


def register(subparsers) -> None:
    parser = subparsers.add_parser("equiv", help="проверить свойство на случайных данных")
    parser.add_argument("--which", required=True, choices=ORACLES)
    parser.add_argument("--count", type=int, default=100, help="число случаев")
    parser.add_argument("--jobs", type=int, default=None, help="число процессов")
    parser.add_argument(
        "--instances", type=int, default=20, help="экземпляров на схему для axioms"
    )
    add_generator_arguments(parser)
    parser.set_defaults(handler=run, command_parser=parser)


def run(args: Namespace) -> int:
    config = generator_config(args)
    jobs = settings.jobs if args.jobs is None else args.jobs
    if args.count <= 0 or jobs <= 0 or args.instances <= 0:
        args.command_parser.error("--count, --jobs и --instances должны быть положительными")

    logger = get_logger_with_context(command="equiv", which=args.which, seed=config.seed)
    logger.info("oracle_started", count=args.count, jobs=jobs)

    summary = run_oracle(
        args.which, config, args.count, jobs=jobs, instances=args.instances
    )
    for line in summary.render():
        print(line)
    for counterexample in summary.counterexamples:
        print(json.dumps(counterexample, ensure_ascii=False, sort_keys=True))

    if not summary.ok:
        raise EquivalenceFailure(
            f"Оракул {args.which}: {summary.failures} нарушений в {summary.total} случаях"
        )
    return 0
