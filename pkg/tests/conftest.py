import numpy as np
import pytest

from harmschwarz.analytic import (
    Compose, Const, Identity, Mobius, MobiusParams, Polynomial, Power, Product, Quotient, RecipLinear, Sum,
)

ACCEPTANCE_LINES: list[str] = []


def random_tree(rng: np.random.Generator, depth: int = 3):
    """Random expression tree that is analytic on |z| < 1 and of moderate size on |z| <= 0.8."""

    def cplx(scale=1.0):
        return complex(*(scale * rng.uniform(-1, 1, 2)))

    def automorphism():
        a = 0.6 * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
        return Mobius(MobiusParams(complex(a), float(rng.uniform(0, 2 * np.pi))))

    def leaf():
        k = rng.integers(6)
        if k == 0:
            return Identity()
        if k == 1:
            return Const(cplx())
        if k == 2:
            return Polynomial([cplx() for _ in range(rng.integers(1, 5))])
        if k == 3:
            return Power(int(rng.integers(1, 4)), cplx(), complex(np.exp(2j * np.pi * rng.uniform())))
        if k == 4:
            return RecipLinear(1.0, complex(np.exp(2j * np.pi * rng.uniform())))
        return automorphism()

    def node(d):
        if d == 0:
            return leaf()
        k = rng.integers(5)
        if k == 0:
            return Sum(node(d - 1), node(d - 1))
        if k == 1:
            return Product(node(d - 1), node(d - 1))
        if k == 2:
            # Power never vanishes, so it is a safe denominator
            return Quotient(node(d - 1), Power(int(rng.integers(1, 3)), 1.0, complex(np.exp(2j * np.pi * rng.uniform()))))
        if k == 3:
            inner = Product(Const(0.9), automorphism())
            return Compose(node(d - 1), inner)
        return leaf()

    return node(depth)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
