"""Torus action models given by isolated fixed-point data.

A model records, for a rank-d torus action, the finite list of fixed
points, each with its moment image in t* and the integer weights of the
action on its tangent space.  Optional root data (closed under negation,
with the Weyl group order) supports reduction from a nonabelian group to
its maximal torus.

The two built-in families are products of 2-spheres rotated diagonally by
a circle, and products of projective planes acted on by the rank-2 maximal
torus of the projective unitary group.  Both have all tangent weight data
in closed form, which the builders reproduce exactly.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import IO, Iterable, Sequence, Union

from .errors import (
    IndexOutOfRange,
    ModelFormatError,
    UnknownGenerator,
    Unsupported,
)
from .poly import MultiPoly

Weight = tuple[int, ...]
Moment = tuple[Fraction, ...]


@dataclass(frozen=True)
class FixedPoint:
    """An isolated fixed point: identifier, moment image, tangent weights."""

    id: str
    moment: Moment
    weights: tuple[Weight, ...]

    def __post_init__(self):
        object.__setattr__(self, "moment", tuple(Fraction(m) for m in self.moment))
        object.__setattr__(self, "weights", tuple(tuple(int(a) for a in w) for w in self.weights))


@dataclass(frozen=True, eq=False)
class TorusModel:
    """A rank-d torus action described entirely by its fixed points."""

    rank: int
    fixed_points: tuple[FixedPoint, ...]
    roots: tuple[Weight, ...] | None = None
    weyl_order: int | None = None
    global_stabilizer_order: int = 1
    family: tuple | None = None  # builder tag, e.g. ("sphere", n) or ("cp", k, n)

    def __post_init__(self):
        object.__setattr__(self, "fixed_points", tuple(self.fixed_points))
        if self.rank < 1:
            raise ModelFormatError("rank must be a positive integer")
        if self.global_stabilizer_order < 1:
            raise ModelFormatError("global_stabilizer_order must be positive")
        seen = set()
        n_weights = None
        for fp in self.fixed_points:
            if fp.id in seen:
                raise ModelFormatError(f"duplicate fixed point id {fp.id!r}")
            seen.add(fp.id)
            if len(fp.moment) != self.rank:
                raise ModelFormatError(
                    f"fixed point {fp.id!r}: moment has length {len(fp.moment)}, expected {self.rank}"
                )
            if n_weights is None:
                n_weights = len(fp.weights)
            elif len(fp.weights) != n_weights:
                raise ModelFormatError(
                    f"fixed point {fp.id!r}: {len(fp.weights)} weights, expected {n_weights}"
                )
            for w in fp.weights:
                if len(w) != self.rank:
                    raise ModelFormatError(
                        f"fixed point {fp.id!r}: weight {w} has length {len(w)}, expected {self.rank}"
                    )
                if not any(w):
                    raise ModelFormatError(f"fixed point {fp.id!r}: zero tangent weight")
        if self.roots is not None:
            roots = tuple(tuple(int(a) for a in r) for r in self.roots)
            object.__setattr__(self, "roots", roots)
            if len(roots) % 2:
                raise ModelFormatError("root list must have even length")
            for r in roots:
                if len(r) != self.rank:
                    raise ModelFormatError(f"root {r} has length {len(r)}, expected {self.rank}")
                if tuple(-a for a in r) not in roots:
                    raise ModelFormatError(f"root list is not closed under negation: {r}")

    @cached_property
    def _by_id(self) -> dict[str, FixedPoint]:
        return {fp.id: fp for fp in self.fixed_points}

    def fixed_point(self, fp_id: str) -> FixedPoint:
        return self._by_id[fp_id]

    def has_fixed_point(self, fp_id: str) -> bool:
        return fp_id in self._by_id

    @property
    def weights_per_point(self) -> int:
        return len(self.fixed_points[0].weights) if self.fixed_points else 0


@dataclass(frozen=True)
class EquivariantClass:
    """A cohomology class stored as one polynomial restriction per fixed point."""

    restrictions: dict[str, MultiPoly]

    def __post_init__(self):
        object.__setattr__(self, "restrictions", dict(self.restrictions))

    @classmethod
    def constant(cls, model: TorusModel, value) -> "EquivariantClass":
        c = MultiPoly.const(model.rank, value)
        return cls({fp.id: c for fp in model.fixed_points})

    def at(self, fp_id: str) -> MultiPoly:
        return self.restrictions[fp_id]

    def _zip(self, other: "EquivariantClass"):
        if set(self.restrictions) != set(other.restrictions):
            raise ValueError("classes restrict to different fixed-point sets")
        for key in self.restrictions:
            yield key, self.restrictions[key], other.restrictions[key]

    def __add__(self, other):
        if isinstance(other, EquivariantClass):
            return EquivariantClass({k: p + q for k, p, q in self._zip(other)})
        return EquivariantClass({k: p + other for k, p in self.restrictions.items()})

    def __sub__(self, other):
        if isinstance(other, EquivariantClass):
            return EquivariantClass({k: p - q for k, p, q in self._zip(other)})
        return EquivariantClass({k: p - other for k, p in self.restrictions.items()})

    def __mul__(self, other):
        if isinstance(other, EquivariantClass):
            return EquivariantClass({k: p * q for k, p, q in self._zip(other)})
        return EquivariantClass({k: p * other for k, p in self.restrictions.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return EquivariantClass({k: p**n for k, p in self.restrictions.items()})

    def __eq__(self, other):
        return (
            isinstance(other, EquivariantClass) and self.restrictions == other.restrictions
        )


# ----------------------------------------------------------------------
# built-in families


def sphere_point_id(subset: Iterable[int]) -> str:
    return "f{" + ",".join(str(i) for i in sorted(subset)) + "}"


def build_sphere_product(n: int) -> TorusModel:
    """The n-fold product of 2-spheres under the diagonal circle rotation.

    Fixed points are indexed by the subsets I of {1..n} whose factors sit
    at the south pole; the moment value is n - 2|I| and the tangent weight
    of factor i is +1 off I and -1 on it.  Root data for the ambient
    rotation group (roots +1, -1 and Weyl order 2) is attached.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    points = []
    for bits in itertools.product((0, 1), repeat=n):
        subset = frozenset(i + 1 for i, b in enumerate(bits) if b)
        weights = tuple((-1,) if (i + 1) in subset else (1,) for i in range(n))
        points.append(
            FixedPoint(
                id=sphere_point_id(subset),
                moment=(Fraction(n - 2 * len(subset)),),
                weights=weights,
            )
        )
    return TorusModel(
        rank=1,
        fixed_points=tuple(points),
        roots=((1,), (-1,)),
        weyl_order=2,
        family=("sphere", n),
    )


def cp_point_id(partition: Sequence[Iterable[int]]) -> str:
    groups = ["{" + ",".join(str(i) for i in sorted(part)) + "}" for part in partition]
    return "F" + "|".join(groups)


def cp_vertex_moments(k: int) -> list[Moment]:
    """Moment images of the k coordinate fixed points of one projective factor."""
    ones = [Fraction(1)] * (k - 1)
    vertices = []
    for j in range(1, k):
        v = list(ones)
        v[j - 1] -= k
        vertices.append(tuple(v))
    vertices.append(tuple(ones))
    return vertices


def cp_vertex_weights(k: int) -> list[tuple[Weight, ...]]:
    """Tangent weights at each coordinate fixed point of one projective factor."""

    def basis(i: int) -> list[int]:
        e = [0] * (k - 1)
        e[i - 1] = 1
        return e

    out = []
    for j in range(1, k):
        ws = []
        for i in range(1, k):
            if i != j:
                ws.append(tuple(a - b for a, b in zip(basis(i), basis(j))))
        ws.append(tuple(-a for a in basis(j)))
        out.append(tuple(ws))
    out.append(tuple(tuple(basis(i)) for i in range(1, k)))
    return out


def partitions_of(n: int, k: int):
    """All ordered partitions (I_1, ..., I_k) of {1..n} into k disjoint groups."""
    for assignment in itertools.product(range(k), repeat=n):
        parts = [[] for _ in range(k)]
        for element, j in enumerate(assignment, start=1):
            parts[j].append(element)
        yield tuple(frozenset(part) for part in parts)


def build_cp_product(k: int, n: int) -> TorusModel:
    """The n-fold product of (k-1)-dimensional projective spaces.

    The acting torus is the rank k-1 maximal torus of the projective
    unitary group; fixed points are indexed by ordered partitions of
    {1..n} into k groups, one per coordinate point of the factor.  For
    k = 3 the six roots and Weyl order 6 are attached.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 1:
        raise ValueError("n must be a positive integer")
    vertices = cp_vertex_moments(k)
    vertex_weights = cp_vertex_weights(k)
    points = []
    for partition in partitions_of(n, k):
        moment = tuple(
            sum((len(part) * v[i] for part, v in zip(partition, vertices)), Fraction(0))
            for i in range(k - 1)
        )
        weights = []
        for element in range(1, n + 1):
            j = next(idx for idx, part in enumerate(partition) if element in part)
            weights.extend(vertex_weights[j])
        points.append(FixedPoint(id=cp_point_id(partition), moment=moment, weights=tuple(weights)))
    roots = None
    weyl = None
    if k == 3:
        roots = ((1, -1), (-1, 1), (1, 0), (-1, 0), (0, 1), (0, -1))
        weyl = 6
    return TorusModel(
        rank=k - 1,
        fixed_points=tuple(points),
        roots=roots,
        weyl_order=weyl,
        family=("cp", k, n),
    )


# ----------------------------------------------------------------------
# class generators


def class_generator(model: TorusModel, kind: str, index: int | None = None,
                    direction: Sequence[int] | None = None) -> EquivariantClass:
    """Return one of the standard generating classes of a model.

    kind "prequantum": restriction <moment(F), u> at each F.
    kind "v": sphere products only; the i-th factor class restricting to
        +u off the subset and -u on it.
    kind "line": the constant linear form <direction, u> at every point.
    """
    if kind == "prequantum":
        return EquivariantClass(
            {fp.id: MultiPoly.linear_form(fp.moment) for fp in model.fixed_points}
        )
    if kind == "line":
        if direction is None or len(direction) != model.rank:
            raise IndexOutOfRange(f"line class needs a direction of length {model.rank}")
        form = MultiPoly.linear_form(direction)
        return EquivariantClass({fp.id: form for fp in model.fixed_points})
    if kind == "v":
        if not (model.family and model.family[0] == "sphere"):
            raise UnknownGenerator("v classes exist only on sphere-product models")
        n = model.family[1]
        if index is None or not 1 <= index <= n:
            raise IndexOutOfRange(f"v index must lie in 1..{n}")
        u = MultiPoly.variable(1, 0)
        restrictions = {}
        for fp in model.fixed_points:
            sign = fp.weights[index - 1][0]  # +1 off the subset, -1 on it
            restrictions[fp.id] = u * sign
        return EquivariantClass(restrictions)
    raise UnknownGenerator(f"unknown class generator {kind!r}")


# ----------------------------------------------------------------------
# regularity


def check_regular(model: TorusModel, p0: Sequence[Union[int, Fraction]]) -> bool:
    """Whether p0 is a regular value of the moment map.

    Implemented for rank-1 models (regular iff p0 avoids every fixed-point
    moment) and for the built-in rank-2 projective-plane family at the
    origin (regular iff n is not a multiple of 3).
    """
    p0 = tuple(Fraction(x) for x in p0)
    if len(p0) != model.rank:
        raise Unsupported(f"p0 must have length {model.rank}")
    if model.rank == 1:
        return all(fp.moment[0] != p0[0] for fp in model.fixed_points)
    if model.family and model.family[0] == "cp" and model.family[1] == 3:
        if all(x == 0 for x in p0):
            return model.family[2] % 3 != 0
    raise Unsupported("general-rank regularity testing is not implemented")


# ----------------------------------------------------------------------
# model files


def _parse_rational(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ModelFormatError(f"rational values must be integers or 'p/q' strings, got {value!r}")


def load_model(source: Union[str, IO[str]]) -> TorusModel:
    """Load a model from a JSON file path or open text stream.

    Validation failures report the first offending fixed point id.
    """
    if hasattr(source, "read"):
        data = json.load(source)
    else:
        with open(source, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    if not isinstance(data, dict):
        raise ModelFormatError("model file must contain a JSON object")
    try:
        rank = int(data["rank"])
        raw_points = data["fixed_points"]
    except KeyError as missing:
        raise ModelFormatError(f"model file is missing field {missing}")
    points = []
    for entry in raw_points:
        try:
            fp_id = str(entry["id"])
        except (TypeError, KeyError):
            raise ModelFormatError("each fixed point needs an 'id' field")
        try:
            moment = tuple(_parse_rational(x) for x in entry["moment"])
            weights = tuple(tuple(int(a) for a in w) for w in entry["weights"])
        except ModelFormatError as err:
            raise ModelFormatError(f"fixed point {fp_id!r}: {err}")
        except (KeyError, TypeError, ValueError) as err:
            raise ModelFormatError(f"fixed point {fp_id!r}: {err}")
        points.append(FixedPoint(id=fp_id, moment=moment, weights=weights))
    roots = data.get("roots")
    if roots is not None:
        roots = tuple(tuple(int(a) for a in r) for r in roots)
    weyl = data.get("weyl_order")
    return TorusModel(
        rank=rank,
        fixed_points=tuple(points),
        roots=roots,
        weyl_order=None if weyl is None else int(weyl),
        global_stabilizer_order=int(data.get("global_stabilizer_order", 1)),
    )
