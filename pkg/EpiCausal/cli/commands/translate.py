"""
translate: переводы между языками.

Режимы tr1, tr2, reduce принимают PAKC; cod-e, cod-tr, cod-trstar - COD.
Для cod-tr и cod-trstar нужна сигнатура (--model).
"""

from argparse import Namespace

from core.causal import Signature
from logic.formulas import classify
from logic.parser import parse_formula, print_formula
from logic.reduction import reduce, tr1, tr2
from storage.model_file import load_model_file
from teams.formulas import is_alpha
from teams.parser import parse_cod
from teams.translation import e_translate, tr_star_translate, tr_translate


PAKC_MODES = {"tr1": tr1, "tr2": tr2, "reduce": reduce}
COD_MODES = ("cod-e", "cod-tr", "cod-trstar")


def register(subparsers) -> None:
    parser = subparsers.add_parser("translate", help="перевести формулу")
    parser.add_argument("formula", help="формула PAKC или COD")
    parser.add_argument("--mode", required=True, choices=(*PAKC_MODES, *COD_MODES))
    parser.add_argument("--model", help="файл модели: сигнатура для проверки и cod-tr")
    parser.add_argument(
        "--classify", action="store_true", help="напечатать фрагменты входа и выхода"
    )
    parser.set_defaults(handler=run, command_parser=parser)


def run(args: Namespace) -> int:
    signature: Signature | None = None
    if args.model:
        signature = load_model_file(args.model).signature

    if args.mode in PAKC_MODES:
        formula = parse_formula(args.formula, signature)
        result = PAKC_MODES[args.mode](formula)
        source_tag = classify(formula).value
    else:
        formula = parse_cod(args.formula, signature)
        source_tag = "COD-alpha" if is_alpha(formula) else "COD"
        if args.mode == "cod-e":
            result = e_translate(formula)
        elif signature is None:
            args.command_parser.error(f"--model обязателен для режима {args.mode}")
        elif args.mode == "cod-tr":
            result = tr_translate(formula, signature)
        else:
            result = tr_star_translate(formula, signature)

    print(print_formula(result))
    if args.classify:
        print(f"fragment: {source_tag} -> {classify(result).value}")
    return 0
