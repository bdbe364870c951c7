"""Compare sympy.resultant with a Sylvester determinant on random integer pairs.

Reports how often sympy disagrees in sign when deg f < deg g, which is why
bpmono.polynomials orders the operands itself.
"""

import random

import sympy as sp
from sympy.polys.subresultants_qq_zz import sylvester as sylvester_matrix

from bpmono.polynomials import _res

x = sp.Symbol("x")


def sylvester(f, g):
    return sylvester_matrix(f, g, x).det()


def main(trials=200, seed=0):
    rng = random.Random(seed)
    stats = {"sympy": 0, "bpmono": 0, "cases": 0}
    for _ in range(trials):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        if m >= n:
            continue
        f = sum(rng.randint(-5, 5) * x**k for k in range(m)) + rng.randint(1, 5) * x**m
        g = sum(rng.randint(-5, 5) * x**k for k in range(n)) + rng.randint(1, 5) * x**n
        ref = sylvester(f, g)
        stats["cases"] += 1
        stats["sympy"] += sp.resultant(f, g, x) != ref
        stats["bpmono"] += _res(f, g, x) != ref
    print(f"sympy {sp.__version__}: {stats['cases']} pairs with deg f < deg g")
    print(f"  sympy.resultant disagrees: {stats['sympy']}")
    print(f"  bpmono wrapper disagrees:  {stats['bpmono']}")


if __name__ == "__main__":
    main()
