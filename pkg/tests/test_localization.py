import io
import random
from fractions import Fraction

import pytest

from torusloc import (
    EquivariantClass,
    MultiPoly,
    Plan,
    NoRootData,
    NotUnimodular,
    OrientedFlag,
    TorusModel,
    UnknownFixedPoint,
    WeightedSpace,
    build_cp_product,
    build_sphere_product,
    class_generator,
    dump_plan,
    evaluate_plan,
    flag_split,
    lambda_flag,
    load_plan,
    stage_map,
    weyl_correct,
)
from torusloc.model import FixedPoint, cp_point_id
from torusloc.plans import THETA1, rank1_plan

from helpers import monomial_class

PLUS = OrientedFlag(((1,),))
MINUS = OrientedFlag(((-1,),))


class TestOrientedFlag:
    def test_unimodular_ok(self):
        THETA1.check_unimodular()
        OrientedFlag(((1, 1), (0, 1))).check_unimodular()

    def test_not_unimodular(self):
        with pytest.raises(NotUnimodular):
            OrientedFlag(((2, 0), (0, 1))).check_unimodular()

    def test_singular(self):
        with pytest.raises(NotUnimodular):
            OrientedFlag(((1, 1), (1, 1))).check_unimodular()


class TestFlagSplit:
    def test_rank_one_identity(self):
        m = build_sphere_product(3)
        spaces, basis = flag_split(m.fixed_point("f{1}"), PLUS)
        assert len(spaces) == 1
        assert spaces[0].lines == ((-1, ()), (1, ()), (1, ()))
        assert basis == ((1,),)

    def test_cp_two_stage_split(self):
        m = build_cp_product(3, 4)
        point = m.fixed_point(cp_point_id(({1, 2}, {3}, {4})))
        spaces, _ = flag_split(point, THETA1)
        assert sorted(spaces[0].lines) == [
            (-1, (-1,)),
            (-1, (0,)),
            (1, (0,)),
            (1, (1,)),
            (1, (1,)),
        ]
        assert spaces[0].rank == 5
        assert sorted(spaces[1].lines) == [(-1, ()), (1, ()), (1, ())]
        assert spaces[1].rank == 3

    def test_empty_stage_possible(self):
        point = FixedPoint(id="x", moment=(Fraction(0), Fraction(0)), weights=((1, 0),))
        spaces, _ = flag_split(point, OrientedFlag(((0, 1), (1, 0))))
        assert spaces[0].is_empty()
        assert not spaces[1].is_empty()

    def test_rejects_nonbasis(self):
        m = build_sphere_product(2)
        with pytest.raises(NotUnimodular):
            flag_split(m.fixed_point("f{}"), OrientedFlag(((2,),)))


class TestStageMap:
    def test_sign_weight_evaluation(self):
        # c*u^(n-1) over n-k positive and k negative unit weights gives c*(-1)^k
        for n, k, c in [(3, 0, 4), (5, 2, Fraction(7, 3)), (4, 3, -2)]:
            lines = tuple([(1, ())] * (n - k) + [(-1, ())] * k)
            v = WeightedSpace(lines, 0)
            p = MultiPoly(1, {(n - 1,): c})
            assert stage_map(p, v) == MultiPoly.const(0, c * (-1) ** k)

    def test_below_threshold_zero(self):
        v = WeightedSpace(((1, ()), (1, ()), (1, ())), 0)
        assert stage_map(MultiPoly(1, {(1,): 1}), v).is_zero()

    def test_stage_with_residual(self):
        # the rank-5 first stage at partition sizes (2,1,1)
        lines = ((1, (1,)), (1, (1,)), (-1, (-1,)), (-1, (0,)), (1, (0,)))
        v = WeightedSpace(lines, 1)
        p = MultiPoly(2, {(4, 2): 1})  # stage variable power 4 = rank - 1
        assert stage_map(p, v) == MultiPoly(1, {(2,): 1})

    def test_empty_stage_raises(self):
        from torusloc import EmptyStage

        with pytest.raises(EmptyStage):
            stage_map(MultiPoly(1, {(0,): 1}), WeightedSpace((), 0))


class TestLambdaFlag:
    def test_sphere_square(self):
        m = build_sphere_product(3)
        L = class_generator(m, "prequantum")
        assert lambda_flag(m, "f{}", PLUS, L**2) == 9

    def test_cp_monomial(self):
        m = build_cp_product(3, 4)
        fid = cp_point_id(({1, 2}, {3}, {4}))
        assert lambda_flag(m, fid, THETA1, monomial_class(m, 2, 4)) == -1

    def test_below_degree_zero(self):
        m = build_sphere_product(3)
        assert lambda_flag(m, "f{}", PLUS, EquivariantClass.constant(m, 1)) == 0

    def test_degree_bookkeeping(self):
        # nonzero only in the single degree weights-minus-rank
        m = build_cp_product(3, 2)
        fid = cp_point_id(({1}, {2}, frozenset()))
        for j1 in range(5):
            for j2 in range(5):
                value = lambda_flag(m, fid, THETA1, monomial_class(m, j1, j2))
                if j1 + j2 != 2:
                    assert value == 0

    def test_linearity(self):
        m = build_sphere_product(5)
        L = class_generator(m, "prequantum")
        v1 = class_generator(m, "v", index=1)
        a = L**4
        b = v1**4
        for fid in ("f{}", "f{1,2}"):
            left = lambda_flag(m, fid, PLUS, a * 3 + b * Fraction(-1, 2))
            right = 3 * lambda_flag(m, fid, PLUS, a) - Fraction(1, 2) * lambda_flag(
                m, fid, PLUS, b
            )
            assert left == right

    def test_inadmissible_pair_is_zero(self):
        model = TorusModel(
            rank=2,
            fixed_points=(
                FixedPoint(id="x", moment=(Fraction(0), Fraction(0)), weights=((1, 0), (2, 0))),
            ),
        )
        cls = EquivariantClass({"x": MultiPoly.zero(2)})
        assert lambda_flag(model, "x", OrientedFlag(((0, 1), (1, 0))), cls) == 0

    def test_orientation_reversal_negates(self):
        # single-stage maps over a point: flipping the flag vector negates
        # the value on stage-variable exponent rank - 1
        rng = random.Random(5)
        for _ in range(20):
            n = rng.randrange(1, 6)
            weights = tuple((rng.choice([-3, -2, -1, 1, 2, 3]),) for _ in range(n))
            point = FixedPoint(id="p", moment=(Fraction(0),), weights=weights)
            model = TorusModel(rank=1, fixed_points=(point,))
            cls = EquivariantClass({"p": MultiPoly(1, {(n - 1,): 1})})
            plus = lambda_flag(model, "p", PLUS, cls)
            minus = lambda_flag(model, "p", MINUS, cls)
            assert plus == -minus and plus != 0

    def test_global_stabilizer_scaling(self):
        point = FixedPoint(id="p", moment=(Fraction(0),), weights=((1,),))
        base = TorusModel(rank=1, fixed_points=(point,))
        scaled = TorusModel(rank=1, fixed_points=(point,), global_stabilizer_order=3)
        cls = EquivariantClass({"p": MultiPoly.const(1, 1)})
        assert lambda_flag(scaled, "p", PLUS, cls) == 3 * lambda_flag(base, "p", PLUS, cls)

    def test_unknown_fixed_point(self):
        m = build_sphere_product(2)
        with pytest.raises(UnknownFixedPoint):
            lambda_flag(m, "nope", PLUS, EquivariantClass.constant(m, 1))


class TestEvaluatePlan:
    def test_rightward_pairing(self):
        m = build_sphere_product(3)
        L = class_generator(m, "prequantum")
        assert evaluate_plan(m, rank1_plan(m, 0, 1), L**2) == 6

    def test_leftward_pairing(self):
        m = build_sphere_product(3)
        L = class_generator(m, "prequantum")
        assert evaluate_plan(m, rank1_plan(m, 0, -1), L**2) == 6

    def test_empty_plan(self):
        m = build_sphere_product(3)
        assert evaluate_plan(m, Plan(()), EquivariantClass.constant(m, 1)) == 0

    def test_term_order_irrelevant(self):
        m = build_sphere_product(5)
        L = class_generator(m, "prequantum")
        plan = rank1_plan(m, 0, 1)
        rng = random.Random(77)
        reference = evaluate_plan(m, plan, L**4)
        for _ in range(5):
            shuffled = list(plan.terms)
            rng.shuffle(shuffled)
            assert evaluate_plan(m, Plan(tuple(shuffled)), L**4) == reference


class TestWeylCorrect:
    def test_sphere_constant(self):
        m = build_sphere_product(3)
        corrected = weyl_correct(m, EquivariantClass.constant(m, 1))
        expected = MultiPoly(1, {(2,): Fraction(-1, 2)})
        assert all(p == expected for p in corrected.restrictions.values())

    def test_cp_root_product(self):
        m = build_cp_product(3, 1)
        corrected = weyl_correct(m, EquivariantClass.constant(m, 1))
        expected = MultiPoly(
            2,
            {
                (3, 3): Fraction(2, 6),
                (4, 2): Fraction(-1, 6),
                (2, 4): Fraction(-1, 6),
            },
        )
        assert corrected.at("F{1}|{}|{}") == expected

    def test_no_root_data(self):
        m = build_cp_product(4, 1)  # no roots attached for k = 4
        with pytest.raises(NoRootData):
            weyl_correct(m, EquivariantClass.constant(m, 1))


class TestPlanFiles:
    def test_roundtrip(self):
        m = build_sphere_product(3)
        plan = rank1_plan(m, 0, 1)
        buffer = io.StringIO()
        dump_plan(plan, buffer)
        buffer.seek(0)
        loaded = load_plan(buffer)
        assert loaded == plan

    def test_bad_file(self):
        from torusloc import PlanFormatError

        with pytest.raises(PlanFormatError):
            load_plan(io.StringIO('{"not": "a list"}'))
        with pytest.raises(PlanFormatError):
            load_plan(io.StringIO('[{"coefficient": 1}]'))

    def test_plan_terms_validate_flag(self):
        with pytest.raises(NotUnimodular):
            load_plan(
                io.StringIO('[{"coefficient": 1, "fixed_point": "f{}", "flag": [[2]]}]')
            ).terms[0].flag.check_unimodular()
