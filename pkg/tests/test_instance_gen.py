import numpy as np
import pytest

from syzkit import (
    gen_hermite_pade,
    gen_matrix_annihilator,
    gen_multivar_pade,
    gen_points_ideal,
    gen_random_commuting,
)
from syzkit.errors import ValidationError
from syzkit.ff_linalg import PrimeField
from syzkit.instances import RANDOM_KINDS, multivar_pade_index, shift_matrix, validate_instance
from syzkit.modpoly import ModulePoly, check_reduced, divide
from syzkit.monomials import Monomial, MonomialOrder
from syzkit.syzygy import apply_poly, monomial_basis, syzygy_basis

from conftest import ORDERS, poly

LEX = MonomialOrder.parse("top:lex")
DRL = MonomialOrder.parse("top:degrevlex")


def poly_mul_trunc(a, b, D, p):
    out = [0] * D
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < D:
                out[i + j] = (out[i + j] + x * y) % p
    return out


def evaluate_at(g, point, p):
    """Value of each component of ``g`` at ``point``."""
    vals = [0] * g.m
    for t, c in g.terms.items():
        v = c
        for x, e in zip(point, t.exps):
            v = v * pow(x, e, p) % p
        vals[t.comp] = (vals[t.comp] + v) % p
    return vals


def evaluate_matrix_poly(g, Ns, p):
    K = PrimeField(p)
    d = Ns[0].shape[0]
    out = np.zeros((d, d), dtype=np.int64)
    for t, c in g.terms.items():
        T = np.eye(d, dtype=np.int64)
        for N, e in zip(Ns, t.exps):
            T = K.matmul(T, K.matpow(N, e))
        out = (out + c * T) % p
    return out


# -- Hermite-Padé ---------------------------------------------------------------

def test_hermite_pade_construction():
    inst = gen_hermite_pade(97, 2, [[1], [1, 1]])
    assert inst.F.tolist() == [[1, 0], [1, 1]]
    assert inst.mats[0].tolist() == [[0, 1], [0, 0]]
    assert gen_hermite_pade(97, 3, [[0], [2]]).F[0].tolist() == [0, 0, 0]


def test_hermite_pade_trailing_zeros_allowed():
    assert gen_hermite_pade(7, 2, [[1, 0, 0, 7]]).F.tolist() == [[1, 0]]


def test_hermite_pade_errors():
    with pytest.raises(ValueError, match="degree"):
        gen_hermite_pade(97, 2, [[1, 0, 1]])
    with pytest.raises(ValueError):
        gen_hermite_pade(97, 0, [[1]])


@pytest.mark.parametrize("seed", range(15))
def test_hermite_pade_approximants(seed):
    rng = np.random.default_rng(seed)
    p, D, m = 97, int(rng.integers(1, 12)), int(rng.integers(1, 4))
    polys = [[int(c) for c in rng.integers(0, p, size=D)] for _ in range(m)]
    inst = gen_hermite_pade(p, D, polys)
    for spec in ("top:lex", "pot:lex"):
        for g in syzygy_basis(MonomialOrder.parse(spec), inst):
            total = [0] * D
            for i in range(m):
                gi = [0] * (max([t.exps[0] for t in g.terms if t.comp == i], default=0) + 1)
                for t, c in g.terms.items():
                    if t.comp == i:
                        gi[t.exps[0]] = c
                total = [(x + y) % p for x, y in zip(total, poly_mul_trunc(gi, polys[i], D, p))]
            assert total == [0] * D


# -- points ----------------------------------------------------------------------

def test_points_construction():
    inst = gen_points_ideal(7, [(0, 0), (1, 0), (0, 1)])
    assert inst.mats[0].tolist() == np.diag([0, 1, 0]).tolist()
    assert inst.mats[1].tolist() == np.diag([0, 0, 1]).tolist()
    assert inst.F.tolist() == [[1, 1, 1]]
    assert (inst.n, inst.m, inst.D) == (2, 1, 3)


def test_points_single_point():
    gb = syzygy_basis(LEX, gen_points_ideal(7, [(3,)]))
    assert gb.elements == [poly(7, 1, 1, [(1, (1,), 0), (-3, (0,), 0)])]


def test_points_two_points():
    gb = syzygy_basis(LEX, gen_points_ideal(7, [(0,), (1,)]))
    assert gb.elements == [poly(7, 1, 1, [(1, (2,), 0), (-1, (1,), 0)])]


def test_points_errors():
    with pytest.raises(ValueError, match="distinct"):
        gen_points_ideal(7, [(1, 2), (8, 9)])
    with pytest.raises(ValueError):
        gen_points_ideal(7, [])
    with pytest.raises(ValueError):
        gen_points_ideal(7, [(1, 2), (3,)])


@pytest.mark.parametrize("seed", range(15))
def test_points_vanish(seed):
    rng = np.random.default_rng(seed)
    p, n, k = 101, int(rng.integers(1, 4)), int(rng.integers(1, 11))
    pts = set()
    while len(pts) < k:
        pts.add(tuple(int(x) for x in rng.integers(0, p, size=n)))
    pts = sorted(pts)
    inst = gen_points_ideal(p, pts)
    order = MonomialOrder.parse(ORDERS[seed % len(ORDERS)])
    assert len(monomial_basis(order, inst).monbas) == k
    for g in syzygy_basis(order, inst):
        for pt in pts:
            assert evaluate_at(g, pt, p) == [0]


# -- matrix annihilator ----------------------------------------------------------------

def test_annihilator_nilpotent():
    inst = gen_matrix_annihilator(7, [[[0, 1], [0, 0]]])
    assert (inst.n, inst.m, inst.D) == (1, 1, 4)
    assert inst.F.tolist() == [[1, 0, 0, 1]]
    assert syzygy_basis(LEX, inst).elements == [poly(7, 1, 1, [(1, (2,), 0)])]


def test_annihilator_identity():
    gb = syzygy_basis(LEX, gen_matrix_annihilator(7, [np.eye(3, dtype=np.int64)]))
    assert gb.elements == [poly(7, 1, 1, [(1, (1,), 0), (-1, (0,), 0)])]


def test_annihilator_kronecker_structure(gf97, rng):
    N = gf97.random(3, 3, rng)
    inst = gen_matrix_annihilator(97, [N])
    M = inst.mats[0]
    for b in range(3):
        assert np.array_equal(M[3 * b:3 * b + 3, 3 * b:3 * b + 3], N)
    assert np.count_nonzero(M) == 3 * np.count_nonzero(N)


def test_annihilator_errors():
    with pytest.raises(ValidationError):
        gen_matrix_annihilator(7, [[[0, 1], [0, 0]], [[0, 0], [1, 0]]])
    with pytest.raises(ValueError):
        gen_matrix_annihilator(7, [[[1, 0], [0, 1]], [[1]]])
    with pytest.raises(ValueError):
        gen_matrix_annihilator(7, [])


@pytest.mark.parametrize("seed", range(8))
def test_annihilator_evaluates_to_zero(seed):
    rng = np.random.default_rng(seed)
    K = PrimeField(97)
    d = int(rng.integers(1, 5))
    N1 = K.random(d, d, rng)
    N2 = (K.matmul(N1, N1) + 5 * N1 + 2 * np.eye(d, dtype=np.int64)) % 97
    inst = gen_matrix_annihilator(97, [N1, N2])
    for spec in ("top:lex", "top:degrevlex"):
        for g in syzygy_basis(MonomialOrder.parse(spec), inst):
            assert not evaluate_matrix_poly(g, [N1, N2], 97).any()


# -- multivariate Padé -----------------------------------------------------------------

def test_mvpade_block_structure():
    inst = gen_multivar_pade(97, 2, 2, [])
    S2 = shift_matrix(2)
    Z = np.zeros((2, 2), dtype=np.int64)
    I = np.eye(2, dtype=np.int64)
    assert np.array_equal(inst.mats[0], np.block([[S2, Z], [Z, S2]]))
    assert np.array_equal(inst.mats[1], np.block([[Z, I], [Z, Z]]))
    assert inst.F.tolist() == [[96, 0, 0, 0]]


def test_mvpade_block_structure_d3():
    inst = gen_multivar_pade(97, 2, 3, [])
    S3 = shift_matrix(3)
    assert np.array_equal(inst.mats[0], np.kron(np.eye(3, dtype=np.int64), S3))
    assert np.array_equal(inst.mats[1], np.kron(S3, np.eye(3, dtype=np.int64)))
    assert multivar_pade_index(2, 3)[:4] == [(0, 0), (1, 0), (2, 0), (0, 1)]


def test_mvpade_coefficients():
    inst = gen_multivar_pade(97, 2, 2, [{(1, 1): 3, (0, 0): 1}])
    assert inst.F.tolist() == [[96, 0, 0, 0], [1, 0, 0, 3]]


def test_mvpade_zero_polynomial():
    inst = gen_multivar_pade(97, 2, 2, [{}])
    gb = syzygy_basis(LEX, inst)
    c2 = ModulePoly.from_monomial(Monomial.unit(2, 1), 2, 97)
    assert not apply_poly(inst, c2).any()
    assert c2 in gb.elements
    assert all(not apply_poly(inst, g).any() for g in gb)


def test_mvpade_errors():
    with pytest.raises(ValueError, match="degree bound"):
        gen_multivar_pade(97, 2, 2, [{(2, 0): 1}])
    with pytest.raises(ValueError):
        gen_multivar_pade(97, 2, 2, [{(1,): 1}])
    with pytest.raises(ValueError):
        gen_multivar_pade(97, 0, 2, [])


def pade_generators(p, n, d, polys):
    m = len(polys) + 1
    gens = []
    for i, f in enumerate(polys, start=1):
        terms = {Monomial(tuple(e), 0): c for e, c in f.items()}
        terms[Monomial.unit(n, i)] = 1
        gens.append(ModulePoly(terms, n, m, p))
    for i in range(m):
        for k in range(n):
            gens.append(ModulePoly.from_monomial(Monomial.unit(n, i).mul_var(k, d), m, p))
    return gens


@pytest.mark.parametrize("seed", range(10))
def test_mvpade_pade_generators_reduce_to_zero(seed):
    rng = np.random.default_rng(seed)
    p, n, d = 97, 2, int(rng.integers(1, 4))
    polys = []
    for _ in range(int(rng.integers(1, 3))):
        polys.append({tuple(int(x) for x in rng.integers(0, d, size=n)): int(rng.integers(1, p)) for _ in range(3)})
    inst = gen_multivar_pade(p, n, d, polys)
    for spec in ("top:lex", "top:degrevlex", "pot:lex"):
        order = MonomialOrder.parse(spec)
        gb = syzygy_basis(order, inst)
        for g in pade_generators(p, n, d, polys):
            assert not apply_poly(inst, g).any()
            assert not divide(order, g, gb)


# -- random commuting ----------------------------------------------------------------------

@pytest.mark.parametrize("kind", RANDOM_KINDS)
def test_random_commuting_passes_validation(kind):
    inst = gen_random_commuting(97, 3, 9, m=2, seed=1, kind=kind)
    validate_instance(inst)
    assert (inst.n, inst.m, inst.D) == (3, 2, 9)


def test_random_nilpotent_is_nilpotent():
    inst = gen_random_commuting(97, 1, 6, seed=2, kind="nilpotent")
    assert not PrimeField(97).matpow(inst.mats[0], 6).any()


def test_random_seed_stability():
    a = gen_random_commuting(97, 2, 7, m=2, seed=42)
    b = gen_random_commuting(97, 2, 7, m=2, seed=42)
    c = gen_random_commuting(97, 2, 7, m=2, seed=43)
    assert all(np.array_equal(x, y) for x, y in zip(a.mats, b.mats)) and np.array_equal(a.F, b.F)
    assert not (all(np.array_equal(x, y) for x, y in zip(a.mats, c.mats)) and np.array_equal(a.F, c.F))


def test_random_errors_and_empty():
    with pytest.raises(ValueError):
        gen_random_commuting(97, 0, 3)
    with pytest.raises(ValueError):
        gen_random_commuting(97, 2, 3, kind="weird")
    assert gen_random_commuting(97, 2, 0, m=2).D == 0


def test_random_soundness_sweep():
    for seed in range(100):
        rng = np.random.default_rng(seed)
        inst = gen_random_commuting(97, int(rng.integers(1, 4)), int(rng.integers(1, 11)),
                                    m=int(rng.integers(1, 4)), seed=seed)
        order = MonomialOrder.parse(ORDERS[seed % len(ORDERS)])
        gb = syzygy_basis(order, inst)
        assert check_reduced(order, gb)
        assert all(not apply_poly(inst, g).any() for g in gb)
