from fractions import Fraction

import pytest

from torusloc import (
    ClassSyntaxError,
    MultiPoly,
    build_cp_product,
    build_sphere_product,
    class_generator,
)
from torusloc.expr import evaluate_expr, format_expr, parse_class_expr


def evaluate(text, model):
    return evaluate_expr(parse_class_expr(text), model)


class TestParsing:
    def test_simple_power(self):
        m = build_sphere_product(3)
        assert evaluate("L^2", m) == class_generator(m, "prequantum") ** 2

    def test_scaled_monomial(self):
        m = build_sphere_product(3)
        expected = (
            class_generator(m, "v", index=1) ** 2
            * class_generator(m, "v", index=2)
            * Fraction(1, 2)
        )
        assert evaluate("1/2*v1^2*v2", m) == expected

    def test_negative_exponent_rejected(self):
        with pytest.raises(ClassSyntaxError):
            parse_class_expr("v1^-1")

    def test_sums_and_parens(self):
        m = build_sphere_product(3)
        left = evaluate("(v1 + v2)^2", m)
        right = evaluate("v1^2 + 2*v1*v2 + v2^2", m)
        assert left == right

    def test_leading_minus(self):
        m = build_sphere_product(3)
        assert evaluate("-L + L", m).at("f{}").is_zero()

    def test_line_generator(self):
        m = build_cp_product(3, 1)
        cls = evaluate("line(1,-2)", m)
        assert cls.at("F{}|{}|{1}") == MultiPoly(2, {(1, 0): 1, (0, 1): -2})

    def test_error_position(self):
        with pytest.raises(ClassSyntaxError) as err:
            parse_class_expr("L^2 + @")
        assert err.value.line == 1
        assert err.value.column == 7

    def test_unknown_generator(self):
        with pytest.raises(ClassSyntaxError):
            parse_class_expr("L * q3")

    def test_trailing_garbage(self):
        with pytest.raises(ClassSyntaxError):
            parse_class_expr("L^2 )")

    def test_zero_denominator(self):
        with pytest.raises(ClassSyntaxError):
            parse_class_expr("1/0*L")


class TestWeylPlacement:
    def test_outermost_accepted(self):
        m = build_sphere_product(3)
        from torusloc import weyl_correct

        expected = weyl_correct(m, class_generator(m, "prequantum") ** 2)
        assert evaluate("weyl(L^2)", m) == expected

    def test_scaled_weyl_accepted(self):
        m = build_sphere_product(3)
        parse_class_expr("1/2*weyl(L^2)")

    def test_weyl_inside_product_rejected(self):
        with pytest.raises(ClassSyntaxError):
            parse_class_expr("L*weyl(L)")

    def test_weyl_inside_sum_rejected(self):
        with pytest.raises(ClassSyntaxError):
            parse_class_expr("weyl(L) + L")

    def test_nested_weyl_rejected(self):
        with pytest.raises(ClassSyntaxError):
            parse_class_expr("weyl(weyl(L))")

    def test_weyl_power_rejected(self):
        with pytest.raises(ClassSyntaxError):
            parse_class_expr("weyl(L)^2")


class TestRoundTrip:
    CANONICAL = [
        "L^2",
        "1/2*v1^2*v2",
        "v1 + v2",
        "L - v3",
        "-2*L",
        "3*(v1 + v2)^2*L",
        "weyl(L^2 + v1*v2)",
        "line(1,-2)^3",
        "5*L*(v1 - v2)",
    ]

    @pytest.mark.parametrize("text", CANONICAL)
    def test_print_after_parse_is_identity(self, text):
        assert format_expr(parse_class_expr(text)) == text
