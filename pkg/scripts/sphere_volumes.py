#!/usr/bin/env python3
"""Tabulate symplectic volumes of sphere-product quotients for odd n.

For each odd n the circle-quotient and rotation-group-quotient volume
coefficients are computed three ways where applicable: by plan
evaluation, by the alternating binomial sum, and by the exact
piecewise-polynomial convolution oracle.
"""

import argparse
from fractions import Fraction
from math import factorial

from torusloc import (
    build_sphere_product,
    class_generator,
    evaluate_plan,
    rank1_plan,
    uniform_sum_density_at_zero,
    weyl_correct,
)
from torusloc.closedforms import sphere_torus_pairing


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=9)
    args = parser.parse_args()

    header = f"{'n':>3} {'torus pairing':>16} {'binomial sum':>16} {'oracle':>16} {'vol/(2pi)^(n-1)':>18} {'vol_rot/(2pi)^(n-3)':>20}"
    print(header)
    print("-" * len(header))
    for n in range(3, args.max_n + 1, 2):
        model = build_sphere_product(n)
        plan = rank1_plan(model, 0, 1)
        L = class_generator(model, "prequantum")
        pairing = evaluate_plan(model, plan, L ** (n - 1))
        binomial = sphere_torus_pairing(n)
        oracle = 2**n * factorial(n - 1) * uniform_sum_density_at_zero(n)
        torus_vol = pairing / factorial(n - 1)
        rot = evaluate_plan(model, plan, weyl_correct(model, L ** (n - 3)))
        rot_vol = rot / factorial(n - 3)
        status = "" if pairing == binomial == oracle else "  MISMATCH"
        print(
            f"{n:>3} {str(pairing):>16} {str(binomial):>16} {str(oracle):>16}"
            f" {str(torus_vol):>18} {str(rot_vol):>20}{status}"
        )


if __name__ == "__main__":
    main()
