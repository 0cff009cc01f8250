"""
deps: граф непосредственного влияния модели.

Печатает рёбра X -> V, топологический порядок и, с --verify-syntactic,
сверяет истинность формул X ⇝ Z с перебором родителей.
"""

import itertools
from argparse import Namespace

from core.causal import CausalModel, edges, parents, solve, topological_order
from core.epistemic import PointedModel, as_epistemic
from core.exceptions import EquivalenceFailure
from logic.formulas import causes_formula
from logic.semantics import evaluate
from storage.model_file import LoadedModel, load_model_file


def register(subparsers) -> None:
    parser = subparsers.add_parser("deps", help="рёбра ↪ и топологический порядок")
    parser.add_argument("model", help="файл модели (JSON)")
    parser.add_argument(
        "--verify-syntactic",
        action="store_true",
        help="сверить формулы X ~> Z с родителями по таблицам",
    )
    parser.set_defaults(handler=run, command_parser=parser)


def _some_pointing(loaded: LoadedModel) -> PointedModel:
    # Истинность X ⇝ Z не зависит от точки: все остальные переменные фиксированы
    if loaded.team:
        return next(loaded.epistemic().pointings())
    signature = loaded.signature
    valuation = solve(
        loaded.functions, {name: signature.range_of(name)[0] for name in signature.exogenous}
    )
    return as_epistemic(CausalModel(loaded.functions, valuation))


def run(args: Namespace) -> int:
    loaded = load_model_file(args.model)
    functions = loaded.functions
    order = topological_order(functions)

    found = edges(functions)
    print("edges:" if found else "edges: none")
    for source, target in found:
        print(f"  {source} -> {target}")
    print("order: " + ", ".join(order))

    if not args.verify_syntactic:
        return 0

    signature = loaded.signature
    pointed = _some_pointing(loaded)
    mismatches = 0
    print("syntactic:")
    for x, z in itertools.permutations(signature.variables, 2):
        verdict = evaluate(pointed, causes_formula(x, z, signature))
        expected = signature.is_endogenous(z) and x in parents(functions, z)
        status = "ok" if verdict == expected else "MISMATCH"
        mismatches += verdict != expected
        print(f"  {x} ~> {z}: {str(verdict).lower()} {status}")
    if mismatches:
        raise EquivalenceFailure(f"Формулы ⇝ расходятся с родителями в {mismatches} парах")
    return 0
