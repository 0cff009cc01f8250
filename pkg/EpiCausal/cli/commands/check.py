"""
check: истинность формулы PAKC на модели.

    epicausal check models/circuit.json "[B:=1] S=1"          -> true
    epicausal check models/circuit.json "K [B:=1] S=1" --trace
"""

from argparse import Namespace

from logic.parser import parse_formula
from logic.semantics import evaluate, evaluate_with_trace, valid_on_model
from storage.model_file import load_model_file


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="вычислить формулу PAKC на модели")
    parser.add_argument("model", help="файл модели (JSON)")
    parser.add_argument("formula", help="формула PAKC")
    parser.add_argument(
        "--all-points", action="store_true", help="истинность во всех точках команды"
    )
    parser.add_argument(
        "--trace", action="store_true", help="напечатать дерево вычисления"
    )
    parser.set_defaults(handler=run, command_parser=parser)


def verdict_text(verdict: bool) -> str:
    return "true" if verdict else "false"


def run(args: Namespace) -> int:
    loaded = load_model_file(args.model)
    formula = parse_formula(args.formula, loaded.signature)

    if args.all_points:
        model = loaded.epistemic()
        if args.trace:
            for pointed in model.pointings():
                _, tracer = evaluate_with_trace(pointed, formula)
                print(f"# {pointed.actual}")
                print(tracer.render())
        print(verdict_text(valid_on_model(model, formula)))
        return 0

    pointed = loaded.pointed()
    if args.trace:
        verdict, tracer = evaluate_with_trace(pointed, formula)
        print(tracer.render())
    else:
        verdict = evaluate(pointed, formula)
    print(verdict_text(verdict))
    return 0
