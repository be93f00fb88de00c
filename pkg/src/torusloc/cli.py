"""Command-line front end.

Subcommands:

    pair    exact pairing of a class against a plan or transverse path
    volume  symplectic volume, torus or full-group, as "c * (2pi)^m"
    walls   wall values of a model along a circle direction
    plan    emit a plan file for a path or a built-in recipe
    ring    cohomology ring relation of a weighted sphere quotient
    segre   weighted Segre pieces of a circle representation

Models are "spheres:N", "cp2:N", or a path to a JSON model file.  Exit
codes: 0 on success, 2 on usage errors, 3 on domain errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import factorial

from .errors import TorusLocError, Unsupported
from .expr import evaluate_expr, parse_class_expr
from .localization import dump_plan, evaluate_plan, load_plan, weyl_correct
from .model import TorusModel, build_cp_product, build_sphere_product, class_generator, load_model
from .plans import CP2_VARIANTS, cp2_plan, rank1_plan, wall_list
from .poly import MultiPoly, poly_str
from .weighted import (
    parse_weighted_space,
    ring_relation,
    weighted_segre,
)

USAGE_ERROR = 2
DOMAIN_ERROR = 3


def resolve_model(spec: str) -> TorusModel:
    if spec.startswith("spheres:"):
        return build_sphere_product(int(spec.split(":", 1)[1]))
    if spec.startswith("cp2:"):
        return build_cp_product(3, int(spec.split(":", 1)[1]))
    return load_model(spec)


def parse_path(text: str) -> tuple[Fraction, int]:
    head, _, tail = text.rpartition(":")
    if not head or tail not in ("+", "-", "+1", "-1"):
        raise ValueError(f"path must look like 'p0:+' or 'p0:-', got {text!r}")
    return Fraction(head), 1 if tail.startswith("+") else -1


def plan_for(args, model: TorusModel):
    sources = [args.path is not None, args.plan is not None, args.cp2_variant is not None]
    if sum(sources) != 1:
        raise ValueError("choose exactly one of --path, --plan, --cp2-variant")
    if args.path is not None:
        p0, direction = parse_path(args.path)
        return rank1_plan(model, p0, direction)
    if args.plan is not None:
        return load_plan(args.plan)
    if not (model.family and model.family[0] == "cp" and model.family[1] == 3):
        raise Unsupported("--cp2-variant applies only to cp2:N models")
    return cp2_plan(model.family[2], args.cp2_variant)


def format_value(value: Fraction, as_float: bool) -> str:
    text = str(value)
    if as_float:
        text += f" ~= {float(value):.12g}"
    return text


def cmd_pair(args) -> int:
    model = resolve_model(args.model)
    cls = evaluate_expr(parse_class_expr(getattr(args, "class")), model)
    plan = plan_for(args, model)
    value = evaluate_plan(model, plan, cls)
    print(format_value(value, args.float))
    return 0


def cmd_volume(args) -> int:
    model = resolve_model(args.model)
    if not model.fixed_points:
        raise Unsupported("volume of a model without fixed points")
    m = model.weights_per_point - model.rank
    if args.group == "weyl":
        if model.roots is None:
            raise TorusLocError("model carries no root data for --group weyl")
        m -= len(model.roots)
    if m < 0:
        raise Unsupported("negative volume degree: quotient dimension is negative")
    cls = class_generator(model, "prequantum") ** m
    if args.group == "weyl":
        cls = weyl_correct(model, cls)
    plan = plan_for(args, model)
    coefficient = evaluate_plan(model, plan, cls) / factorial(m)
    text = f"{coefficient} * (2pi)^{m}"
    if args.float:
        import math

        text += f" ~= {float(coefficient) * (2 * math.pi) ** m:.12g}"
    print(text)
    return 0


def cmd_walls(args) -> int:
    model = resolve_model(args.model)
    xi = tuple(int(part) for part in args.xi.split(","))
    walls = wall_list(model, xi)
    for value, ids in walls.entries:
        print(f"{value}: {' '.join(ids)}")
    return 0


def cmd_plan(args) -> int:
    model = resolve_model(args.model)
    plan = plan_for(args, model)
    if args.out:
        dump_plan(plan, args.out)
    else:
        dump_plan(plan, sys.stdout)
    return 0


def _relation_str(coeffs: list[MultiPoly]) -> str:
    r = len(coeffs) - 1
    parts = []
    for i, coeff in enumerate(coeffs):
        if coeff.is_zero():
            continue
        power = r - i
        h = "" if power == 0 else ("h" if power == 1 else f"h^{power}")
        text = poly_str(coeff)
        if h:
            if text == "1":
                parts.append(h)
            elif text == "-1":
                parts.append(f"-{h}")
            elif " " in text:
                parts.append(f"({text})*{h}")
            else:
                parts.append(f"{text}*{h}")
        else:
            parts.append(f"({text})" if " " in text else text)
    if not parts:
        return "0"
    out = parts[0]
    for part in parts[1:]:
        out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return out


def cmd_ring(args) -> int:
    space = parse_weighted_space(args.space)
    print(_relation_str(ring_relation(space)))
    return 0


def cmd_segre(args) -> int:
    space = parse_weighted_space(args.space)
    series = weighted_segre(space, args.order)
    for i in range(args.order + 1):
        print(f"s_{i} = {poly_str(series.piece(i))}")
    return 0


def _add_plan_source(parser: argparse.ArgumentParser):
    parser.add_argument("--path", help="transverse path 'p0:+' or 'p0:-' (rank-1 models)")
    parser.add_argument("--plan", help="plan file emitted by the plan subcommand")
    parser.add_argument(
        "--cp2-variant",
        choices=CP2_VARIANTS,
        help="built-in recipe variant for cp2:N models",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torusloc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    pair = sub.add_parser("pair", help="exact cohomology pairing")
    pair.add_argument("--model", required=True)
    pair.add_argument("--class", required=True)
    _add_plan_source(pair)
    pair.add_argument("--float", action="store_true")
    pair.set_defaults(func=cmd_pair)

    volume = sub.add_parser("volume", help="symplectic volume")
    volume.add_argument("--model", required=True)
    volume.add_argument("--group", choices=("torus", "weyl"), required=True)
    _add_plan_source(volume)
    volume.add_argument("--float", action="store_true")
    volume.set_defaults(func=cmd_volume)

    walls = sub.add_parser("walls", help="wall values along a direction")
    walls.add_argument("--model", required=True)
    walls.add_argument("--xi", required=True, help="integer vector, e.g. '1' or '1,0'")
    walls.set_defaults(func=cmd_walls)

    plan = sub.add_parser("plan", help="emit a plan file")
    plan.add_argument("--model", required=True)
    _add_plan_source(plan)
    plan.add_argument("--out", help="output file (default: stdout)")
    plan.set_defaults(func=cmd_plan)

    ring = sub.add_parser("ring", help="weighted sphere-quotient ring relation")
    ring.add_argument("--space", required=True, help="lines 'w:r1,r2,...;w:...'")
    ring.set_defaults(func=cmd_ring)

    segre = sub.add_parser("segre", help="weighted Segre pieces")
    segre.add_argument("--space", required=True, help="lines 'w:r1,r2,...;w:...'")
    segre.add_argument("--order", type=int, required=True)
    segre.set_defaults(func=cmd_segre)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TorusLocError as err:
        print(f"error: {err}", file=sys.stderr)
        return DOMAIN_ERROR
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
