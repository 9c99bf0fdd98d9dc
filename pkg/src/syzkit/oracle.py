"""Slow reference computations on the fully materialised multi-Krylov matrix.

Nothing here shares code with the iterative engine beyond field arithmetic
and the monomial index.  Sizes are capped (``SYZKIT_ORACLE_LIMIT`` rows,
default 10**6).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ff_linalg import PrimeField
from .modpoly import GroebnerBasis, ModulePoly, monomial_normal_forms
from .monomials import MonomialIndex, MonomialOrder
from .syzygy import Instance, krylov_bound


def _bounds(inst: Instance, beta) -> tuple:
    if beta is None:
        beta = krylov_bound(inst.D)
    if isinstance(beta, int):
        return (beta,) * inst.n
    beta = tuple(int(b) for b in beta)
    if len(beta) != inst.n:
        raise ValueError(f"expected {inst.n} bounds, got {len(beta)}")
    return beta


def materialize_multi_krylov(
    order: MonomialOrder, inst: Instance, beta=None, limit: int | None = None
) -> tuple[np.ndarray, MonomialIndex]:
    """Matrix whose row at position ``index(X^e c_i)`` is ``f_i @ M^e``, with its index."""
    order = order.resolved(inst.n)
    bounds = _bounds(inst, beta)
    index = MonomialIndex(order, bounds, inst.m, limit)
    K = inst.field
    blocks: dict = {(0,) * inst.n: inst.F}
    out = np.zeros((len(index), inst.D), dtype=np.int64)
    for mono in index.monomials:
        e = mono.exps
        if e not in blocks:
            k = next(k for k, x in enumerate(e) if x > 0)
            prev = e[:k] + (e[k] - 1,) + e[k + 1:]
            blocks[e] = K.matmul(blocks[prev], inst.mats[k])
        out[index.position[mono]] = blocks[e][mono.comp]
    return out, index


def oracle_monomial_basis(order: MonomialOrder, inst: Instance, limit: int | None = None) -> list:
    """Monomials at the row rank profile of the multi-Krylov matrix."""
    if inst.D == 0:
        return []
    Kmat, index = materialize_multi_krylov(order, inst, None, limit)
    _, rows = inst.field.row_rank_profile(Kmat)
    return [index[r] for r in rows]


@dataclass
class BoundedSyzygies:
    """Left nullspace of the multi-Krylov matrix, one basis vector per non-profile row.

    The vector attached to free row ``f`` is ``e_f - sum_j coeffs[f, j] e_{profile[j]}``,
    where ``K[f] = sum_j coeffs[f, j] K[profile[j]]``.
    """

    index: MonomialIndex
    profile: list
    free: list
    coeffs: np.ndarray
    p: int

    @property
    def nullity(self) -> int:
        return len(self.free)

    def dense(self) -> np.ndarray:
        N = np.zeros((len(self.free), len(self.index)), dtype=np.int64)
        N[np.arange(len(self.free)), self.free] = 1
        if self.profile:
            N[:, self.profile] = np.mod(-self.coeffs, self.p)
        return N

    def rref(self) -> np.ndarray:
        """The same row space in reduced row echelon form (leading ones)."""
        if not self.free:
            return np.zeros((0, len(self.index)), dtype=np.int64)
        return PrimeField(self.p).rref(self.dense())[0]

    def contains(self, vec) -> bool:
        """Whether ``vec`` lies in the row space."""
        vec = np.mod(np.asarray(vec, dtype=np.int64), self.p)
        if not self.profile:
            return True
        K = PrimeField(self.p)
        implied = np.mod(-K.matmul(vec[self.free], self.coeffs), self.p)
        return bool(np.array_equal(implied, vec[self.profile]))

    def polynomial(self, r: int) -> ModulePoly:
        idx = self.index
        terms = {idx[self.free[r]]: 1}
        for j, c in zip(self.profile, self.coeffs[r]):
            if c:
                terms[idx[j]] = -int(c)
        return ModulePoly(terms, idx.n, idx.m, self.p)

    def polynomials(self) -> list:
        return [self.polynomial(r) for r in range(len(self.free))]


def oracle_bounded_syzygies(order: MonomialOrder, inst: Instance, beta=None, limit: int | None = None) -> BoundedSyzygies:
    """All syzygies with ``deg_{X_k} < beta_k``, as a nullspace basis."""
    Kmat, index = materialize_multi_krylov(order, inst, beta, limit)
    K = inst.field
    _, profile = K.row_rank_profile(Kmat)
    pset = set(profile)
    free = [r for r in range(len(index)) if r not in pset]
    if profile:
        coeffs = K.solve_left(Kmat[free], Kmat[profile])
    else:
        coeffs = np.zeros((len(free), 0), dtype=np.int64)
    return BoundedSyzygies(index, profile, free, coeffs, inst.p)


def nullspace_reduces_to_zero(null: BoundedSyzygies, gb: GroebnerBasis) -> bool:
    """Whether every nullspace basis vector has remainder 0 modulo ``gb``.

    Division remainders are linear, so the remainder of each vector is
    assembled from memoised remainders of single monomials.
    """
    idx = null.index
    p = null.p
    nfs = monomial_normal_forms(gb, idx.monomials)
    prof_nf = [nfs[idx[j]] for j in null.profile]
    for r, f in enumerate(null.free):
        acc = dict(nfs[idx[f]])
        for c, nf in zip(null.coeffs[r], prof_nf):
            if c:
                for b, v in nf.items():
                    acc[b] = (acc.get(b, 0) - int(c) * v) % p
        if any(acc.values()):
            return False
    return True


def kernel_rank(K: PrimeField, mats: Sequence[np.ndarray], F: np.ndarray, degree: int) -> int:
    """Rank of the univariate Krylov matrix ``[F; F M; ...; F M^(degree-1)]``."""
    blocks = [F]
    for _ in range(1, degree):
        blocks.append(K.matmul(blocks[-1], mats[0]))
    return K.rank(np.vstack(blocks))
