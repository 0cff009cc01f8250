"""
dependence: e-зависимость и c-зависимость Y от X на модели.
"""

from argparse import Namespace

from cli.commands import split_names
from cli.commands.check import verdict_text
from logic.formulas import c_dependence_formula, e_dependence_formula
from logic.semantics import evaluate, valid_on_model
from storage.model_file import load_model_file


def register(subparsers) -> None:
    parser = subparsers.add_parser("dependence", help="e- и c-зависимость Y от X")
    parser.add_argument("model", help="файл модели (JSON)")
    parser.add_argument("--xs", required=True, help="переменные X через запятую")
    parser.add_argument("--y", required=True, help="переменная Y")
    parser.add_argument(
        "--all-points", action="store_true", help="истинность во всех точках команды"
    )
    parser.set_defaults(handler=run, command_parser=parser)


def run(args: Namespace) -> int:
    loaded = load_model_file(args.model)
    signature = loaded.signature
    xs = split_names(args.xs)
    formulas = {
        "e-dependence": e_dependence_formula(xs, args.y, signature),
        "c-dependence": c_dependence_formula(xs, args.y, signature),
    }
    for name, formula in formulas.items():
        if args.all_points:
            verdict = valid_on_model(loaded.epistemic(), formula)
        else:
            verdict = evaluate(loaded.pointed(), formula)
        print(f"{name}: {verdict_text(verdict)}")
    return 0
