import numpy as np
import pytest

from syzkit import gen_hermite_pade, gen_random_commuting
from syzkit.errors import DimensionError, InvariantError, ValidationError
from syzkit.ff_linalg import PrimeField
from syzkit.modpoly import GroebnerBasis, ModulePoly, check_reduced, divides
from syzkit.monomials import Monomial, MonomialOrder
from syzkit.oracle import oracle_monomial_basis
from syzkit.syzygy import (
    Instance,
    apply_poly,
    border_basis,
    krylov_bound,
    monomial_basis,
    normal_form,
    normal_form_matrix,
    syzygy_basis,
)

from conftest import ORDERS, mono, poly

LEX = MonomialOrder.parse("top:lex")
DRL = MonomialOrder.parse("top:degrevlex")


def zero_instance(p, n, D):
    return Instance(PrimeField(p), [np.zeros((D, D), dtype=np.int64)] * n, np.eye(D, dtype=np.int64))


def staircase_instance(p=7):
    """Quotient by the monomial ideal <Y^3, XY, X^2>, basis (1, Y, Y^2, X), F = coordinates of 1."""
    basis = [(0, 0), (0, 1), (0, 2), (1, 0)]
    pos = {b: j for j, b in enumerate(basis)}
    mats = []
    for k in range(2):
        M = np.zeros((4, 4), dtype=np.int64)
        for b, j in pos.items():
            up = tuple(e + (t == k) for t, e in enumerate(b))
            if up in pos:
                M[j, pos[up]] = 1
        mats.append(M)
    return Instance(PrimeField(p), mats, np.array([[1, 0, 0, 0]]))


# -- Instance ------------------------------------------------------------------

def test_instance_dimensions():
    inst = zero_instance(7, 2, 3)
    assert (inst.n, inst.m, inst.D, inst.p) == (2, 3, 3, 7)
    with pytest.raises(DimensionError):
        Instance(PrimeField(7), [np.zeros((2, 3), dtype=np.int64)], np.zeros((1, 3), dtype=np.int64))
    with pytest.raises(DimensionError):
        Instance(PrimeField(7), [], np.zeros((1, 3), dtype=np.int64))


def test_instance_validation_names_pair():
    A = np.array([[0, 1], [0, 0]])
    B = np.array([[0, 0], [1, 0]])
    I = np.eye(2, dtype=np.int64)
    with pytest.raises(ValidationError, match="M2 and M3"):
        Instance(PrimeField(7), [I, A, B], np.eye(2, dtype=np.int64))
    # explicitly disabled
    Instance(PrimeField(7), [I, A, B], np.eye(2, dtype=np.int64), validate=False)


def test_validation_default_depends_on_size():
    rng = np.random.default_rng(0)
    K = PrimeField(97)
    big = [K.random(65, 65, rng), K.random(65, 65, rng)]
    Instance(K, big, K.random(1, 65, rng))  # not checked above 64
    with pytest.raises(ValidationError):
        Instance(K, big, K.random(1, 65, rng), validate=True)


# -- apply_poly ------------------------------------------------------------------

def test_apply_poly_examples(gf97, rng):
    M1, F = gf97.random(4, 4, rng), gf97.random(2, 4, rng)
    inst = Instance(gf97, [M1, gf97.matmul(M1, M1)], F)
    assert np.array_equal(apply_poly(inst, poly(97, 2, 2, [(1, (0, 0), 1)])), F[1])
    assert np.array_equal(apply_poly(inst, poly(97, 2, 2, [(1, (0, 1), 0)])), gf97.matmul(F[0], inst.mats[1]))
    zero = Instance(gf97, [np.zeros((4, 4), dtype=np.int64)] * 2, F)
    assert not apply_poly(zero, poly(97, 2, 2, [(1, (1, 0), 0)])).any()


def test_apply_poly_general(gf97, rng):
    M1 = gf97.random(3, 3, rng)
    M2 = (gf97.matmul(M1, M1) + 3 * M1) % 97
    F = gf97.random(2, 3, rng)
    inst = Instance(gf97, [M1, M2], F)
    f = poly(97, 2, 2, [(5, (2, 1), 0), (7, (0, 0), 1), (2, (1, 0), 1)])
    expected = (5 * gf97.matmul(gf97.matmul(F[0], gf97.matpow(M1, 2)), M2) + 7 * F[1] + 2 * gf97.matmul(F[1], M1)) % 97
    assert np.array_equal(apply_poly(inst, f), expected)
    with pytest.raises(DimensionError):
        apply_poly(inst, poly(97, 1, 2, []))


# -- monomial_basis ----------------------------------------------------------------

def test_krylov_bound():
    assert [krylov_bound(D) for D in (1, 2, 3, 4, 5, 8, 9)] == [2, 4, 8, 8, 16, 16, 32]


def test_monomial_basis_trivial():
    inst = Instance(PrimeField(7), [np.zeros((1, 1), dtype=np.int64)], np.array([[1]]))
    res = monomial_basis(LEX, inst)
    assert res.monbas == [mono((0,), 0)]
    assert res.basmat.tolist() == [[1]]


@pytest.mark.parametrize("spec", ORDERS)
def test_monomial_basis_zero_matrices(spec):
    inst = zero_instance(7, 2, 3)
    o = MonomialOrder.parse(spec)
    res = monomial_basis(o, inst)
    assert set(res.monbas) == {Monomial.unit(2, i) for i in range(3)}
    assert res.monbas == o.sorted(res.monbas)
    assert np.array_equal(res.basmat, np.eye(3, dtype=np.int64)[[b.comp for b in res.monbas]])


def test_monomial_basis_points(points_instance):
    res = monomial_basis(DRL, points_instance)
    assert res.monbas == [mono((0, 0)), mono((0, 1)), mono((1, 0))]
    assert res.monbas == oracle_monomial_basis(DRL, points_instance)
    F = points_instance.F[0]
    K = points_instance.field
    assert res.basmat.tolist() == [F.tolist(), K.matmul(F, points_instance.mats[1]).tolist(),
                                   K.matmul(F, points_instance.mats[0]).tolist()]


def test_monomial_basis_empty_dimension():
    inst = Instance(PrimeField(7), [np.zeros((0, 0), dtype=np.int64)], np.zeros((2, 0), dtype=np.int64))
    assert monomial_basis(LEX, inst).monbas == []


@pytest.mark.parametrize("seed", range(30))
def test_monomial_basis_matches_oracle(seed):
    rng = np.random.default_rng(seed)
    n, D, m = int(rng.integers(1, 4)), int(rng.integers(1, 7)), int(rng.integers(1, 4))
    inst = gen_random_commuting(97, n, D, m=m, seed=seed)
    for spec in ORDERS:
        o = MonomialOrder.parse(spec)
        res = monomial_basis(o, inst)
        assert res.monbas == oracle_monomial_basis(o, inst)
        assert PrimeField(97).rank(res.basmat) == res.delta <= D


# -- fast path -----------------------------------------------------------------

@pytest.mark.parametrize("seed", range(15))
def test_fast_path_matches_generic(seed):
    rng = np.random.default_rng(100 + seed)
    n = int(rng.integers(1, 4))
    inst = gen_random_commuting(97, n, int(rng.integers(1, 8)), m=int(rng.integers(1, 4)), seed=seed)
    o = MonomialOrder("lex", "top", tuple(range(n - 1, -1, -1)))
    assert o.is_loop_order(n)
    fast = monomial_basis(o, inst, fast_path=True)
    slow = monomial_basis(o, inst, fast_path=False)
    assert fast.monbas == slow.monbas and np.array_equal(fast.basmat, slow.basmat)
    assert syzygy_basis(o, inst, fast_path=True) == syzygy_basis(o, inst, fast_path=False)


def test_fast_path_refuses_other_orders(points_instance):
    with pytest.raises(InvariantError):
        monomial_basis(DRL, points_instance, fast_path=True)


# -- normal forms -----------------------------------------------------------------

def test_normal_form_examples(points_instance):
    res = monomial_basis(DRL, points_instance)
    K = points_instance.field
    T = np.vstack([res.basmat, np.zeros((1, 3), dtype=np.int64),
                   K.matmul(points_instance.F, K.matpow(points_instance.mats[0], 2))])
    nfs = normal_form(T, res)
    assert nfs[:3] == [ModulePoly.from_monomial(b, 1, 7) for b in res.monbas]
    assert not nfs[3]
    assert nfs[4] == poly(7, 2, 1, [(1, (1, 0), 0)])
    assert T[4].tolist() == [0, 1, 0]


def test_normal_form_residual_failure():
    K = PrimeField(7)
    basmat = np.array([[1, 0, 0]])
    with pytest.raises(InvariantError):
        normal_form_matrix(K, np.array([[0, 1, 0]]), basmat)
    with pytest.raises(InvariantError):
        normal_form_matrix(K, np.array([[0, 1, 0]]), np.array([[1, 0, 0], [2, 0, 0]]))


# -- syzygy_basis ---------------------------------------------------------------------

def test_syzygy_basis_trivial():
    inst = Instance(PrimeField(7), [np.zeros((1, 1), dtype=np.int64)], np.array([[1]]))
    gb = syzygy_basis(LEX, inst)
    assert gb.elements == [poly(7, 1, 1, [(1, (1,), 0)])]


def test_syzygy_basis_zero_matrices():
    gb = syzygy_basis(LEX, zero_instance(7, 2, 3))
    expected = {Monomial(e, i) for i in range(3) for e in [(1, 0), (0, 1)]}
    assert {g.leading_monomial(LEX) for g in gb} == expected
    assert all(len(g) == 1 for g in gb)


def test_syzygy_basis_hermite_pade():
    inst = gen_hermite_pade(97, 2, [[1], [1, 1]])
    gb = syzygy_basis(LEX, inst)
    assert gb.elements == [
        poly(97, 1, 2, [(1, (1,), 0), (1, (0,), 0), (-1, (0,), 1)]),
        poly(97, 1, 2, [(1, (0,), 0), (1, (1,), 1), (-1, (0,), 1)]),
    ]
    assert [g.leading_monomial(LEX) for g in gb] == [mono((1,), 0), mono((1,), 1)]


def test_syzygy_basis_points(points_instance):
    gb = syzygy_basis(DRL, points_instance)
    assert gb.elements == [
        poly(7, 2, 1, [(1, (0, 2), 0), (-1, (0, 1), 0)]),
        poly(7, 2, 1, [(1, (1, 1), 0)]),
        poly(7, 2, 1, [(1, (2, 0), 0), (-1, (1, 0), 0)]),
    ]


def test_syzygy_basis_of_zero_module():
    inst = Instance(PrimeField(7), [np.zeros((0, 0), dtype=np.int64)] * 2, np.zeros((2, 0), dtype=np.int64))
    gb = syzygy_basis(LEX, inst)
    assert [g.leading_monomial(LEX) for g in gb] == [Monomial.unit(2, 0), Monomial.unit(2, 1)]


def test_syzygy_basis_zero_F_row():
    inst = Instance(PrimeField(7), [np.eye(2, dtype=np.int64)], np.array([[0, 0], [1, 0]]))
    gb = syzygy_basis(LEX, inst)
    assert poly(7, 1, 2, [(1, (0,), 0)]) in gb.elements


@pytest.mark.parametrize("seed", range(40))
def test_syzygy_basis_sound_reduced_minimal(seed):
    rng = np.random.default_rng(seed)
    n, D, m = int(rng.integers(1, 4)), int(rng.integers(1, 9)), int(rng.integers(1, 4))
    inst = gen_random_commuting(97, n, D, m=m, seed=seed)
    o = MonomialOrder.parse(ORDERS[seed % len(ORDERS)])
    gb = syzygy_basis(o, inst)
    assert check_reduced(o, gb)
    for g in gb:
        assert not apply_poly(inst, g).any()
    leads = gb.leading_monomials()
    assert len(set(leads)) == len(leads)
    assert not any(a != b and divides(a, b) for a in leads for b in leads)
    assert leads == o.sorted(leads)


@pytest.mark.parametrize("seed", range(20))
def test_univariate_basis_is_free_of_rank_m(seed):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, 5))
    inst = gen_random_commuting(97, 1, int(rng.integers(1, 12)), m=m, seed=seed)
    for spec in ("top:lex", "pot:lex"):
        gb = syzygy_basis(MonomialOrder.parse(spec), inst)
        assert len(gb) == m
        assert sorted(g.leading_monomial(gb.order).comp for g in gb) == list(range(m))


# -- border basis ------------------------------------------------------------------------

def test_border_basis_equals_gb_when_border_is_minimal(points_instance):
    assert border_basis(DRL, points_instance) == syzygy_basis(DRL, points_instance).elements


def test_border_basis_with_extra_border_element():
    inst = staircase_instance()
    gb = syzygy_basis(DRL, inst)
    assert {g.leading_monomial(DRL) for g in gb} == {mono((0, 3)), mono((1, 1)), mono((2, 0))}
    bb = border_basis(DRL, inst)
    assert len(bb) == 4
    assert {g.leading_monomial(DRL) for g in bb} == {mono((0, 3)), mono((1, 1)), mono((1, 2)), mono((2, 0))}
    assert all(not apply_poly(inst, g).any() for g in bb)
