import pytest

from qcluster import build_exchange_graph, make_seed, principal_framing
from qcluster.qtorus import QTElem, VCoeff

A2_B = ((0, -1), (1, 0))
A2_LAMBDA = ((0, -1), (1, 0))
B2_B = ((0, -2), (1, 0))
B2_LAMBDA = ((0, -1), (1, 0))
A3_B = ((0, -1, 0), (1, 0, -1), (0, 1, 0))


def elem(dim, terms):
    """Build a torus element from {exponent: int | {v-exp: int}}."""
    built = {}
    for m, c in terms.items():
        built[m] = VCoeff(c if isinstance(c, dict) else {0: c})
    return QTElem(dim, built)


# the worked two-vertex example: variables and all eight normalized products
A2_GOLD = {
    "X1": {(1, 0): 1},
    "X2": {(0, 1): 1},
    "P2": {(1, -1): 1, (0, -1): 1},
    "P1": {(0, -1): 1, (-1, -1): 1, (-1, 0): 1},
    "I1": {(-1, 0): 1, (-1, 1): 1},
    "[X1*I1]": {(0, 0): 1, (0, 1): {-1: 1}},
    "[X1*I2]": {(1, -1): 1, (0, -1): 1, (0, 0): {-1: 1}},
    "[X2*I1]": {(-1, 1): 1, (-1, 2): 1},
    "[X2*I2]": {(0, 0): 1, (-1, 0): {-1: 1}, (-1, 1): {-1: 1}},
    "{P1*X1}": {(1, -1): {-1: 1}, (0, -1): {-1: 1}, (0, 0): 1},
    "{P1*X2}": {(0, 0): {-1: 1}, (-1, 0): 1, (-1, 1): 1},
    "{P2*X1}": {(2, -1): 1, (1, -1): 1},
    "{P2*X2}": {(1, 0): {-1: 1}, (0, 0): 1},
}


def a2_gold(name):
    return elem(2, A2_GOLD[name])


@pytest.fixture(scope="session")
def a2_seed():
    return make_seed(A2_B, A2_LAMBDA)


@pytest.fixture(scope="session")
def b2_seed():
    return make_seed(B2_B, B2_LAMBDA)


@pytest.fixture(scope="session")
def pa2_seed():
    return principal_framing(A2_B)


@pytest.fixture(scope="session")
def a3_seed():
    return principal_framing(A3_B)


@pytest.fixture(scope="session")
def a2_graph(a2_seed):
    return build_exchange_graph(a2_seed)


@pytest.fixture(scope="session")
def b2_graph(b2_seed):
    return build_exchange_graph(b2_seed)


@pytest.fixture(scope="session")
def pa2_graph(pa2_seed):
    return build_exchange_graph(pa2_seed)


@pytest.fixture(scope="session")
def a3_graph(a3_seed):
    return build_exchange_graph(a3_seed)
