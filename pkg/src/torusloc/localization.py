"""Localization of equivariant classes to fixed-point data.

An oriented flag is an ordered unimodular basis of the integer lattice of
the torus; its stages are circle directions crossed one after another.
Splitting the tangent weights of a fixed point along a flag groups each
weight into the first stage where it has a nonzero component.  Folding a
Segre-class substitution over the stages turns a polynomial restriction
into a rational number; summing those numbers over a plan (a formal
integer combination of fixed point / flag pairs) evaluates a cohomology
pairing on the corresponding symplectic quotient.

Degrees take care of themselves: the final stage has no residual
variables left, so any monomial of the wrong total degree dies along the
way and the result of a full evaluation is always a plain rational.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Sequence, Union

from .errors import (
    EmptyStage,
    NoRootData,
    NotUnimodular,
    PlanFormatError,
    UnknownFixedPoint,
)
from .model import EquivariantClass, FixedPoint, TorusModel
from .poly import MultiPoly, linear_substitute
from .weighted import WeightedSpace, weight_gcd, weighted_segre


def _int_det(rows: Sequence[Sequence[int]]) -> Fraction:
    """Determinant by exact fraction-free-enough Gaussian elimination."""
    n = len(rows)
    mat = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            factor = mat[r][col] * inv
            if factor:
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
    return det


@dataclass(frozen=True)
class OrientedFlag:
    """A signed lattice basis; stage i is the circle direction stages[i].

    Reversing the orientation of a stage circle is exactly negating its
    vector, which negates both the stage weights and the stage variable.
    """

    stages: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        stages = tuple(tuple(int(a) for a in s) for s in self.stages)
        object.__setattr__(self, "stages", stages)
        d = len(stages)
        if any(len(s) != d for s in stages):
            raise ValueError("flag stage vectors must all have length equal to the rank")

    @property
    def rank(self) -> int:
        return len(self.stages)

    def determinant(self) -> int:
        det = _int_det(self.stages)
        assert det.denominator == 1
        return int(det)

    def check_unimodular(self):
        if abs(self.determinant()) != 1:
            raise NotUnimodular(f"flag {self.stages} has determinant {self.determinant()}")


@dataclass(frozen=True)
class PlanTerm:
    coefficient: int
    fixed_point_id: str
    flag: OrientedFlag


@dataclass(frozen=True)
class Plan:
    """A formal integer combination of (fixed point, flag) pairs."""

    terms: tuple[PlanTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __len__(self):
        return len(self.terms)


def flag_split(point: FixedPoint, flag: OrientedFlag) -> tuple[list[WeightedSpace], tuple]:
    """Group the tangent weights of a fixed point by flag stage.

    Each weight a is rewritten in flag coordinates a'_i = <a, stage_i> and
    assigned to the first stage j with a'_j nonzero; there it is a line
    with circle weight a'_j and residual vector (a'_{j+1}, ..., a'_d).
    Also returns the substitution basis for rewriting classes in the same
    coordinates.  Stages may come back empty; an empty stage makes the
    pair inadmissible and every evaluation through it zero.
    """
    flag.check_unimodular()
    d = flag.rank
    stage_lines: list[list] = [[] for _ in range(d)]
    for weight in point.weights:
        transformed = tuple(sum(a * x for a, x in zip(weight, stage)) for stage in flag.stages)
        j = next(i for i, c in enumerate(transformed) if c)
        stage_lines[j].append((transformed[j], transformed[j + 1 :]))
    spaces = [
        WeightedSpace(tuple(lines), residual_count=d - j - 1)
        for j, lines in enumerate(stage_lines)
    ]
    return spaces, flag.stages


def stage_map(p: MultiPoly, space: WeightedSpace) -> MultiPoly:
    """Integrate out the stage variable of p against one weighted space.

    Variable 0 of p is the stage variable; the rest are the residual
    variables of the space.  Writing p = sum_j a_j x^j, the result is
    gcd * sum_{j >= r-1} a_j s_{j-r+1} with r the complex rank of the
    space and s the weighted Segre pieces.  Powers below r-1 integrate to
    zero.
    """
    if space.is_empty():
        raise EmptyStage("stage map over an empty space")
    if p.nvars != space.residual_count + 1:
        raise ValueError(
            f"polynomial has {p.nvars} variables, expected {space.residual_count + 1}"
        )
    r = space.rank
    coefficients: dict[int, dict] = {}
    for exp, coeff in p.terms.items():
        coefficients.setdefault(exp[0], {})[exp[1:]] = coeff
    out = MultiPoly.zero(space.residual_count)
    if not coefficients:
        return out
    max_index = max(coefficients) - r + 1
    if max_index < 0:
        return out
    segre = weighted_segre(space, max_index)
    k = weight_gcd(space)
    for j, residual_terms in coefficients.items():
        if j < r - 1:
            continue
        piece = segre.piece(j - r + 1)
        if piece.is_zero():
            continue
        out = out + MultiPoly(space.residual_count, residual_terms) * piece * k
    return out


def lambda_flag(
    model: TorusModel,
    fp_id: str,
    flag: OrientedFlag,
    cls: EquivariantClass,
) -> Fraction:
    """Evaluate the localization of a class at one (fixed point, flag) pair.

    The class restriction is rewritten once in flag coordinates and the
    stage maps are folded in order.  Inadmissible pairs (an empty stage)
    evaluate to zero; the final constant is scaled by the model's global
    stabilizer order.
    """
    if not model.has_fixed_point(fp_id):
        raise UnknownFixedPoint(f"model has no fixed point {fp_id!r}")
    point = model.fixed_point(fp_id)
    spaces, basis = flag_split(point, flag)
    if any(space.is_empty() for space in spaces):
        return Fraction(0)
    current = linear_substitute(cls.at(fp_id), basis)
    for space in spaces:
        current = stage_map(current, space)
        if current.is_zero():
            return Fraction(0)
    return current.as_constant() * model.global_stabilizer_order


def evaluate_plan(model: TorusModel, plan: Plan, cls: EquivariantClass) -> Fraction:
    """Signed sum of lambda_flag over the terms of a plan; linear in the class."""
    total = Fraction(0)
    for term in plan.terms:
        value = lambda_flag(model, term.fixed_point_id, term.flag, cls)
        total += term.coefficient * value
    return total


def weyl_correct(model: TorusModel, cls: EquivariantClass) -> EquivariantClass:
    """Multiply by the product of root line classes and divide by the Weyl order.

    This converts pairings on the torus quotient into pairings on the
    quotient by the full nonabelian group.
    """
    if model.roots is None or model.weyl_order is None:
        raise NoRootData("model carries no root system or Weyl order")
    root_product = MultiPoly.const(model.rank, 1)
    for root in model.roots:
        root_product = root_product * MultiPoly.linear_form(root)
    scale = Fraction(1, model.weyl_order)
    return EquivariantClass(
        {key: p * root_product * scale for key, p in cls.restrictions.items()}
    )


# ----------------------------------------------------------------------
# plan files


def plan_to_obj(plan: Plan) -> list:
    return [
        {
            "coefficient": term.coefficient,
            "fixed_point": term.fixed_point_id,
            "flag": [list(stage) for stage in term.flag.stages],
        }
        for term in plan.terms
    ]


def dump_plan(plan: Plan, sink: Union[str, IO[str]]):
    obj = plan_to_obj(plan)
    if hasattr(sink, "write"):
        json.dump(obj, sink, indent=1)
        sink.write("\n")
    else:
        with open(sink, "w", encoding="utf-8") as handle:
            json.dump(obj, handle, indent=1)
            handle.write("\n")


def load_plan(source: Union[str, IO[str]]) -> Plan:
    if hasattr(source, "read"):
        data = json.load(source)
    else:
        with open(source, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    if not isinstance(data, list):
        raise PlanFormatError("plan file must contain a JSON list")
    terms = []
    for entry in data:
        try:
            terms.append(
                PlanTerm(
                    coefficient=int(entry["coefficient"]),
                    fixed_point_id=str(entry["fixed_point"]),
                    flag=OrientedFlag(tuple(tuple(int(a) for a in s) for s in entry["flag"])),
                )
            )
        except (KeyError, TypeError, ValueError) as err:
            raise PlanFormatError(f"bad plan term {entry!r}: {err}")
    return Plan(tuple(terms))
