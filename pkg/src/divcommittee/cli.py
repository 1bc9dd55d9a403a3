"""Command-line front end.

Exit codes: 0 success (a committee was found / the structure was reported),
2 infeasible, 1 any error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import generate as gen
from .analysis import price_of_diversity
from .io import dump_instance, load_instance
from .labels import brute_recognize, build_laminar_tree, is_1_laminar, is_2_laminar
from .model import CapExceededError, InapplicableError, Instance, InstanceError, SolveReport
from .solvers import ALGORITHMS, check_feasible, solve

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2


def _fraction_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _decimal_text(q: Fraction, digits: int = 6) -> str:
    with localcontext() as ctx:
        ctx.prec = 28
        return str(round(Decimal(q.numerator) / Decimal(q.denominator), digits))


def report_to_json(instance: Instance, rep: SolveReport) -> dict:
    out = {
        "status": rep.status,
        "committee": instance.names(rep.committee) if rep.committee is not None else None,
        "value": rep.value,
        "algorithm": rep.algorithm,
    }
    if rep.guarantee is not None:
        out["guarantee"] = _fraction_text(rep.guarantee)
    return out


def report_to_text(instance: Instance, rep: SolveReport) -> str:
    status = rep.status.capitalize()
    if rep.guarantee is not None:
        status += f" (ratio >= {_fraction_text(rep.guarantee)})"
    lines = [f"status: {status}"]
    if rep.basis:
        lines.append(f"basis: {rep.basis}")
    lines.append(f"algorithm: {rep.algorithm}")
    if rep.committee is not None:
        lines.append("committee: " + ", ".join(instance.names(rep.committee)))
        value = f"value: {rep.value}"
        scale = getattr(instance.objective, "scale", 1)
        if scale != 1:
            value += f" (scale {scale}: {_decimal_text(Fraction(rep.value, scale))})"
        lines.append(value)
    return "\n".join(lines)


def _emit(instance: Instance, rep: SolveReport, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(report_to_json(instance, rep), indent=2))
    else:
        print(report_to_text(instance, rep))
    return EXIT_INFEASIBLE if rep.status == "infeasible" else EXIT_OK


def cmd_solve(args) -> int:
    instance = load_instance(args.path)
    return _emit(instance, solve(instance, args.algorithm), args.format)


def cmd_feasible(args) -> int:
    instance = load_instance(args.path)
    rep = check_feasible(instance)
    if args.format == "json":
        return _emit(instance, rep, "json")
    if rep.status == "infeasible":
        print(f"infeasible ({rep.algorithm})")
        return EXIT_INFEASIBLE
    print(f"feasible ({rep.algorithm})")
    print("witness: " + ", ".join(instance.names(rep.committee)))
    return EXIT_OK


def _layers_text(instance: Instance, layers) -> str:
    return " | ".join("{" + ",".join(instance.labels[lab] for lab in layer) + "}" for layer in layers)


def cmd_recognize(args) -> int:
    instance = load_instance(args.path)
    labeling = instance.labeling
    laminar = is_1_laminar(labeling)
    print(f"1-laminar: {'yes' if laminar else 'no'}")
    if laminar:
        tree = build_laminar_tree(labeling)
        print(tree.render(instance.labels, instance.candidates))
    two = is_2_laminar(labeling)
    if two is None:
        print("2-laminar: no")
    else:
        print(f"2-laminar: yes, layers {_layers_text(instance, two.layers)}")
    if args.brute:
        for kind in ("layered", "laminar"):
            part = brute_recognize(labeling, args.t, kind)
            if part is None:
                print(f"{args.t}-{kind}: no")
            else:
                print(f"{args.t}-{kind}: yes, layers {_layers_text(instance, part.layers)}")
    return EXIT_OK


def cmd_pod(args) -> int:
    instance = load_instance(args.path)
    rep = price_of_diversity(instance)
    print(f"unconstrained optimum: {rep.unconstrained}" + ("" if rep.exact else " (approximate)"))
    if not rep.feasible:
        print("constrained optimum: infeasible")
        print("price of diversity: undefined (no diverse committee)")
        return EXIT_INFEASIBLE
    print(f"constrained optimum: {rep.constrained}" + ("" if rep.exact else " (approximate)"))
    if rep.ratio is not None:
        print(f"price of diversity: {_fraction_text(rep.ratio)} = {_decimal_text(rep.ratio)}")
    elif rep.bounds is not None:
        lo, hi = rep.bounds
        print(f"price of diversity: in [{_fraction_text(lo)}, {_fraction_text(hi)}]"
              f" = [{_decimal_text(lo)}, {_decimal_text(hi)}]")
    else:
        print("price of diversity: undefined (diverse optimum is 0)")
    if rep.bound_holds is not None:
        print(f"balanced bound pod <= 2: {'holds' if rep.bound_holds else 'VIOLATED'}")
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        instance = gen.generate(
            args.kind, args.m, args.k, args.seed,
            objective=args.objective, voters=args.voters,
            n_labels=args.labels, constraints=args.constraints,
        )
    except ValueError as exc:
        raise InstanceError(str(exc)) from None
    text = dump_instance(instance)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divcommittee", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a best diverse committee")
    p.add_argument("path")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("feasible", help="decide whether any diverse committee exists")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("recognize", help="report the label structure")
    p.add_argument("path")
    p.add_argument("--brute", action="store_true", help="also search t-layer partitions exhaustively")
    p.add_argument("--t", type=int, default=3)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("pod", help="price of diversity")
    p.add_argument("path")
    p.set_defaults(func=cmd_pod)

    p = sub.add_parser("generate", help="write a seeded random instance")
    p.add_argument("kind", choices=gen.KINDS)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.add_argument("seed", type=int)
    p.add_argument("output", nargs="?")
    p.add_argument("--objective", choices=gen.OBJECTIVES, default="separable")
    p.add_argument("--voters", type=int, default=5)
    p.add_argument("--labels", type=int, default=None, help="labels per laminar family")
    p.add_argument("--constraints", choices=("interval", "independent"), default="interval")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InstanceError, InapplicableError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
