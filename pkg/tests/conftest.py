import numpy as np
import pytest

from syzkit import MonomialOrder, PrimeField, gen_points_ideal
from syzkit.modpoly import ModulePoly
from syzkit.monomials import Monomial

ORDERS = [
    "top:lex",
    "pot:lex",
    "top:degrevlex",
    "pot:degrevlex",
    "top:deglex",
]


def mono(exps, comp=0):
    return Monomial(tuple(exps), comp)


def poly(p, n, m, terms):
    """Build from ``[(coeff, exps, comp), ...]`` with 0-based comp."""
    acc = {}
    for c, e, i in terms:
        k = Monomial(tuple(e), i)
        acc[k] = acc.get(k, 0) + c
    return ModulePoly(acc, n, m, p)


def random_poly(rng, p, n, m, max_exp=3, nterms=5):
    terms = [(int(rng.integers(1, p)), tuple(int(x) for x in rng.integers(0, max_exp + 1, size=n)), int(rng.integers(m)))
             for _ in range(nterms)]
    return poly(p, n, m, terms)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def gf7():
    return PrimeField(7)


@pytest.fixture
def gf97():
    return PrimeField(97)


@pytest.fixture
def points_instance():
    return gen_points_ideal(7, [(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def degrevlex():
    return MonomialOrder.parse("top:degrevlex")


def random_h_bases(count, seed0=0, max_D=8, orders=ORDERS):
    """Yield ``(seed, order, instance, gb)`` for random instances whose leading module satisfies H."""
    from syzkit import check_structural_assumption, gen_random_commuting, syzygy_basis

    found, seed = 0, seed0
    while found < count:
        r = np.random.default_rng(seed)
        n, D, m = int(r.integers(1, 4)), int(r.integers(1, max_D + 1)), int(r.integers(1, 4))
        inst = gen_random_commuting(97, n, D, m=m, seed=seed)
        order = MonomialOrder.parse(orders[seed % len(orders)])
        gb = syzygy_basis(order, inst)
        if check_structural_assumption(gb.leading_monomials()):
            found += 1
            yield seed, order, inst, gb
        seed += 1


def coords(poly, monbas):
    """Coefficient vector of a normal form on ``monbas``."""
    pos = {b: j for j, b in enumerate(monbas)}
    v = np.zeros(len(monbas), dtype=np.int64)
    for t, c in poly.terms.items():
        v[pos[t]] = c
    return v
