"""Plan generation: transverse paths for rank-1 models and the built-in
two-flag recipe for products of projective planes.

For a rank-1 model every wall is a fixed-point moment value, so a path
from a regular value straight out of the moment image crosses exactly the
fixed points on one side.  For the rank-2 projective-plane family the
source text of the recipe is internally inconsistent about which of the
two flags goes with which region of fixed points, so the predicate pair
is exposed as a configuration token and the alternatives are kept side by
side; see the package README for the recorded finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import NotRegular, Unsupported
from .localization import OrientedFlag, Plan, PlanTerm
from .model import TorusModel, cp_point_id, partitions_of

# The two oriented flags of the projective-plane recipe: cross the second
# circle first and descend against the first circle, or the reverse.
THETA1 = OrientedFlag(((0, 1), (-1, 0)))
THETA2 = OrientedFlag(((-1, 0), (0, 1)))

# Reflections of the two flags under the lattice symmetry that swaps the
# two torus coordinates.
THETA1_MIRROR = OrientedFlag(((1, 0), (0, -1)))
THETA2_MIRROR = OrientedFlag(((0, -1), (1, 0)))

CP2_VARIANTS = ("general", "swapped", "mirror")


@dataclass(frozen=True)
class WallList:
    """Sorted wall values of a model along a circle direction, with the
    fixed points sitting on each wall."""

    entries: tuple[tuple[Fraction, tuple[str, ...]], ...]

    def values(self) -> list[Fraction]:
        return [value for value, _ in self.entries]


def wall_list(model: TorusModel, xi: Sequence[int]) -> WallList:
    """Group the fixed points by the value of their moment against xi."""
    if len(xi) != model.rank:
        raise Unsupported(f"direction must have length {model.rank}")
    groups: dict[Fraction, list[str]] = {}
    for fp in model.fixed_points:
        value = sum((c * m for c, m in zip(xi, fp.moment)), Fraction(0))
        groups.setdefault(value, []).append(fp.id)
    entries = tuple((value, tuple(groups[value])) for value in sorted(groups))
    return WallList(entries)


def rank1_plan(model: TorusModel, p0: Union[int, Fraction], direction: int) -> Plan:
    """Plan for the pairing at p0 on a rank-1 model, leaving the moment
    image through increasing (+1) or decreasing (-1) values.

    Every fixed point strictly on the exit side contributes one term with
    coefficient +1 and the single-stage flag oriented along the path.
    """
    if model.rank != 1:
        raise Unsupported("rank1_plan requires a rank-1 model")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    p0 = Fraction(p0)
    if any(fp.moment[0] == p0 for fp in model.fixed_points):
        raise NotRegular(f"{p0} is a wall value")
    flag = OrientedFlag(((direction,),))
    terms = tuple(
        PlanTerm(1, fp.id, flag)
        for fp in model.fixed_points
        if (fp.moment[0] - p0) * direction > 0
    )
    return Plan(terms)


def _cp2_predicates(n: int, variant: str):
    third = Fraction(n, 3)

    def region_high(i1, i2, i3):  # the displayed first region
        return i1 > third and i3 > third

    def region_low(i1, i2, i3):  # the displayed second region
        return i2 < third and i3 < third

    if variant == "general":
        return ((region_high, THETA1), (region_low, THETA2))
    if variant == "swapped":
        return ((region_high, THETA2), (region_low, THETA1))
    if variant == "mirror":
        # Coordinate-swapped image of the "swapped" assignment.
        def region_high_m(i1, i2, i3):
            return i2 > third and i3 > third

        def region_low_m(i1, i2, i3):
            return i1 < third and i3 < third

        return ((region_high_m, THETA2_MIRROR), (region_low_m, THETA1_MIRROR))
    raise ValueError(f"unknown predicate variant {variant!r}; choose from {CP2_VARIANTS}")


def cp2_plan(n: int, variant: str = "general") -> Plan:
    """Plan for the origin pairing on the n-fold projective-plane product.

    One term per partition of {1..n} satisfying one of the two region
    predicates, with the flag the chosen variant assigns to that region.
    The regions are disjoint, so no partition receives two terms.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n % 3 == 0:
        raise NotRegular("the origin is not a regular value when n is a multiple of 3")
    predicates = _cp2_predicates(n, variant)
    terms = []
    for partition in partitions_of(n, 3):
        sizes = tuple(len(part) for part in partition)
        for predicate, flag in predicates:
            if predicate(*sizes):
                terms.append(PlanTerm(1, cp_point_id(partition), flag))
                break
    return Plan(tuple(terms))
