"""Reduced Gröbner bases of syzygy modules from commuting matrices.

Given pairwise commuting ``M_1..M_n`` (D x D) and ``F`` (m x D), the module
acts on row vectors by ``X_k * v = v @ M_k`` and a syzygy is a ``p`` in
``K[X]^m`` with ``sum_i f_i * p_i(M) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionError, InvariantError, SingularMatrixError, ValidationError
from .ff_linalg import PrimeField
from .modpoly import GroebnerBasis, ModulePoly, staircase_from_monbas
from .monomials import Monomial, MonomialOrder

VALIDATE_MAX_D = 64


@dataclass
class Instance:
    """Commuting matrices ``mats`` and the matrix ``F`` over ``GF(p)``.

    ``validate=None`` checks commutation only when ``D <= 64``.
    """

    field: PrimeField
    mats: list
    F: np.ndarray
    validate: bool | None = None
    n: int = field(init=False, default=0)
    m: int = field(init=False, default=0)
    D: int = field(init=False, default=0)

    def __post_init__(self):
        if not isinstance(self.field, PrimeField):
            self.field = PrimeField(self.field)
        K = self.field
        F = np.asarray(self.F)
        if F.ndim != 2:
            raise DimensionError("F must be a matrix")
        self.F = K.asarray(F)
        self.m, self.D = self.F.shape
        if self.m < 1:
            raise DimensionError("F needs at least one row")
        if not self.mats:
            raise DimensionError("need at least one matrix")
        mats = []
        for k, M in enumerate(self.mats):
            M = K.asarray(np.asarray(M)).reshape(np.shape(M))
            if M.shape != (self.D, self.D):
                raise DimensionError(f"M{k + 1} has shape {M.shape}, expected {(self.D, self.D)}")
            mats.append(M)
        self.mats = mats
        self.n = len(mats)
        check = self.validate if self.validate is not None else self.D <= VALIDATE_MAX_D
        if check:
            check_commuting(K, mats)

    @property
    def p(self) -> int:
        return self.field.p


def check_commuting(K: PrimeField, mats: Sequence[np.ndarray]):
    """Raise :class:`ValidationError` naming the first non-commuting pair."""
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if np.any(K.matmul(mats[i], mats[j]) != K.matmul(mats[j], mats[i])):
                raise ValidationError(f"M{i + 1} and M{j + 1} do not commute")


def apply_poly(inst: Instance, poly: ModulePoly) -> np.ndarray:
    """The row vector ``poly . F = sum_i f_i * p_i(M)``."""
    if (poly.n, poly.m) != (inst.n, inst.m) or poly.p != inst.p:
        raise DimensionError("polynomial does not match the instance dimensions")
    K = inst.field
    by_exps: dict = {}
    for mono, c in poly.terms.items():
        row = by_exps.setdefault(mono.exps, np.zeros(inst.D, dtype=np.int64))
        row += c * inst.F[mono.comp]
        row %= inst.p
    total = np.zeros(inst.D, dtype=np.int64)
    for exps, v in by_exps.items():
        for k, e in enumerate(exps):
            for _ in range(e):
                v = K.matmul(v, inst.mats[k])
        total = (total + v) % inst.p
    return total


@dataclass
class MonomialBasisResult:
    """Staircase ``monbas`` (increasing) and ``basmat`` whose row j is ``monbas[j] . F``."""

    order: MonomialOrder
    monbas: list
    basmat: np.ndarray
    n: int
    m: int
    p: int
    beta: int = 0
    position: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.position = {b: j for j, b in enumerate(self.monbas)}

    @property
    def delta(self) -> int:
        return len(self.monbas)


def krylov_bound(D: int) -> int:
    """Per-variable degree bound ``2^(ceil(log2 D) + 1)``."""
    return 2 ** ((D - 1).bit_length() + 1) if D > 0 else 1


def monomial_basis(order: MonomialOrder, inst: Instance, fast_path: bool | None = None) -> MonomialBasisResult:
    """Monomial basis of ``K[X]^m / Syz`` and the matching rows ``b . F``.

    Processes one variable at a time, doubling the exponent range of the
    current variable with repeated squaring of its matrix, and keeps the
    rows of the growing multi-Krylov submatrix sorted by ``order``.

    ``fast_path`` skips the re-sorting when the order inserts new rows in
    increasing order (TOP-lex with ``X_n > ... > X_1``); ``None`` enables it
    exactly in that case.  When enabled the sortedness is asserted.
    """
    order = order.resolved(inst.n)
    K = inst.field
    n, m, D = inst.n, inst.m, inst.D
    if D == 0:
        return MonomialBasisResult(order, [], np.zeros((0, 0), dtype=np.int64), n, m, inst.p, 0)
    loop_order = order.is_loop_order(n)
    if fast_path is None:
        fast_path = loop_order
    beta = krylov_bound(D)

    units = order.sorted(Monomial.unit(n, i) for i in range(m))
    t = units
    B = inst.F[[u.comp for u in units]]
    delta_hat, idx = K.row_rank_profile(B)

    for k in range(n):
        P = inst.mats[k]
        e = 0
        while True:
            delta = delta_hat
            rho = [t[i] for i in idx]
            B = B[idx]
            step = 1 << e
            keep = [j for j, r in enumerate(rho) if r.exps[k] + step < beta]
            rho_hat = [rho[j].mul_var(k, step) for j in keep]
            cand = rho + rho_hat
            stacked = np.vstack([B, K.matmul(B[keep], P)]) if keep else B
            if fast_path:
                keys = [order.key(x) for x in cand]
                if any(a >= b for a, b in zip(keys, keys[1:])):
                    raise InvariantError("fast path enabled but new rows are not in increasing order")
                t = cand
            else:
                perm = sorted(range(len(cand)), key=lambda j: order.key(cand[j]))
                t = [cand[j] for j in perm]
                stacked = stacked[perm]
            B = stacked
            delta_hat, idx = K.row_rank_profile(B)
            if delta_hat == delta and [t[i] for i in idx] == rho:
                break
            P = K.matmul(P, P)
            e += 1
    monbas = [t[i] for i in idx]
    return MonomialBasisResult(order, monbas, B[idx].copy(), n, m, inst.p, beta)


def normal_form_matrix(K: PrimeField, T: np.ndarray, basmat: np.ndarray) -> np.ndarray:
    """Coefficients ``N`` with ``T = N @ basmat``; the residual is always checked."""
    T = np.asarray(T, dtype=np.int64)
    if T.ndim != 2 or T.shape[1] != basmat.shape[1]:
        raise DimensionError(f"T has shape {T.shape}, basis matrix has {basmat.shape[1]} columns")
    if basmat.shape[0] == 0:
        if np.any(np.mod(T, K.p)):
            raise InvariantError("nonzero row with an empty monomial basis")
        return np.zeros((T.shape[0], 0), dtype=np.int64)
    try:
        return K.solve_left(T, basmat)
    except SingularMatrixError as exc:
        raise InvariantError(f"basis matrix is rank deficient: {exc}") from exc
    except ValueError as exc:
        raise InvariantError(f"normal form residual is nonzero: {exc}") from exc


def normal_form(T: np.ndarray, basis: MonomialBasisResult) -> list:
    """Normal forms of the monomials whose rows ``mu . F`` are the rows of ``T``."""
    N = normal_form_matrix(PrimeField(basis.p), T, basis.basmat)
    return [_combination(row, basis) for row in N]


def _combination(coeffs, basis: MonomialBasisResult) -> ModulePoly:
    terms = {basis.monbas[j]: int(c) for j, c in enumerate(coeffs) if c}
    return ModulePoly(terms, basis.n, basis.m, basis.p)


def _linearize(inst: Instance, basis: MonomialBasisResult, monos: Sequence[Monomial]) -> np.ndarray:
    """Rows ``mu . F`` for monomials that are units or ``X_k * b`` with ``b`` in the basis."""
    K = inst.field
    T = np.zeros((len(monos), inst.D), dtype=np.int64)
    pending = list(range(len(monos)))
    rest = []
    for r in pending:
        if monos[r].is_unit():
            T[r] = inst.F[monos[r].comp]
        else:
            rest.append(r)
    for k in range(inst.n):
        rows, src = [], []
        left = []
        for r in rest:
            mu = monos[r]
            if mu.exps[k] > 0:
                prev = mu.div_var(k)
                j = basis.position.get(prev)
                if j is not None:
                    rows.append(r)
                    src.append(j)
                    continue
            left.append(r)
        if rows:
            T[rows] = K.matmul(basis.basmat[src], inst.mats[k])
        rest = left
    if rest:
        raise InvariantError(f"{monos[rest[0]]} is neither a unit nor a basis multiple")
    return T


def _basis_from(order: MonomialOrder, inst: Instance, basis: MonomialBasisResult, monos: list) -> list:
    T = _linearize(inst, basis, monos)
    N = normal_form_matrix(inst.field, T, basis.basmat)
    out = []
    for mu, row in zip(monos, N):
        if mu in basis.position:
            raise InvariantError(f"{mu} is both a leading monomial and in the monomial basis")
        out.append(ModulePoly.from_monomial(mu, inst.m, inst.p) - _combination(row, basis))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def syzygy_basis(order: MonomialOrder, inst: Instance, fast_path: bool | None = None) -> GroebnerBasis:
    """The reduced ``order``-Gröbner basis of the syzygy module of ``inst``."""
    order = order.resolved(inst.n)
    basis = monomial_basis(order, inst, fast_path)
    stair = staircase_from_monbas(basis.monbas, inst.m, order, inst.n)
    elements = _basis_from(order, inst, basis, stair.lm)
    return GroebnerBasis(order, elements, inst.n, inst.m, inst.p, claimed_reduced=True)


def border_basis(order: MonomialOrder, inst: Instance, fast_path: bool | None = None) -> list:
    """``mu - nf(mu)`` for every border monomial ``mu``, sorted by ``mu``."""
    order = order.resolved(inst.n)
    basis = monomial_basis(order, inst, fast_path)
    stair = staircase_from_monbas(basis.monbas, inst.m, order, inst.n)
    return _basis_from(order, inst, basis, order.sorted(stair.border))
