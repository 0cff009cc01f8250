"""
team-check: истинность формулы COD на каузальной команде.

Команда берётся из блока team файла и может быть пустой.
"""

from argparse import Namespace

from cli.commands.check import verdict_text
from storage.model_file import load_model_file
from teams.evaluator import team_eval
from teams.parser import parse_cod


def register(subparsers) -> None:
    parser = subparsers.add_parser("team-check", help="вычислить формулу COD на команде")
    parser.add_argument("model", help="файл команды (JSON)")
    parser.add_argument("formula", help="формула COD")
    parser.add_argument(
        "--all-covers",
        action="store_true",
        help="перебирать все покрытия, а не только разбиения",
    )
    parser.add_argument("--or-cap", type=int, default=None, help="лимит размера команды для \\/")
    parser.set_defaults(handler=run, command_parser=parser)


def run(args: Namespace) -> int:
    team = load_model_file(args.model).causal_team()
    formula = parse_cod(args.formula, team.signature)
    verdict = team_eval(team, formula, or_cap=args.or_cap, disjoint_covers=not args.all_covers)
    print(verdict_text(verdict))
    return 0
