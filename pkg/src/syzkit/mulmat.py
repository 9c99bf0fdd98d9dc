"""Multiplication matrices of ``K[X]^m / <G>`` read from a reduced Gröbner basis,
and change of monomial order built on top of them.

The variables are handled from last to first.  Normal forms of the
monomials ``X_n b`` are read directly from ``G``; for each earlier variable the
missing normal forms are obtained as ``nf(f) @ M_{i+1}^e`` for a few
generators ``f``, which is a Krylov evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, InvariantError, NotReducedError
from .ff_linalg import PrimeField
from .modpoly import GroebnerBasis, check_reduced, check_structural_assumption, staircase_from_lm
from .monomials import Monomial, MonomialOrder
from .syzygy import Instance, syzygy_basis


def krylov_eval(K: PrimeField, M: np.ndarray, vectors, bounds: Sequence[int]) -> np.ndarray:
    """Stack ``v_j @ M^e`` for ``1 <= e <= bounds[j]``, vector by vector.

    Row ``bounds[0] + ... + bounds[j-1] + e - 1`` holds ``v_j @ M^e``.  Rows
    with ``e`` in ``(2^(i-1), 2^i]`` are produced together from rows
    ``e - 2^(i-1)`` and ``M^(2^(i-1))``.
    """
    M = np.asarray(M, dtype=np.int64)
    V = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    bounds = [int(b) for b in bounds]
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError("M must be square")
    if V.shape[0] != len(bounds):
        raise DimensionError(f"{V.shape[0]} vectors but {len(bounds)} bounds")
    if V.shape[1] != M.shape[0]:
        raise DimensionError(f"vectors have length {V.shape[1]}, M is {M.shape[0]} x {M.shape[0]}")
    if any(b < 1 for b in bounds):
        raise ValueError("every bound must be at least 1")
    offsets = np.concatenate([[0], np.cumsum(bounds)]).astype(np.int64)
    out = np.zeros((int(offsets[-1]), M.shape[0]), dtype=np.int64)
    if not bounds:
        return out
    out[offsets[:-1]] = K.matmul(V, M)
    top = max(bounds)
    N = M
    half = 1
    while half < top:
        if half > 1:
            N = K.matmul(N, N)
        dst, src = [], []
        for j, b in enumerate(bounds):
            for e in range(half + 1, min(b, 2 * half) + 1):
                dst.append(offsets[j] + e - 1)
                src.append(offsets[j] + e - half - 1)
        if dst:
            out[dst] = K.matmul(out[src], N)
        half *= 2
    return out


@dataclass(frozen=True)
class Family:
    """Monomials ``X_var^e * f_j`` for ``1 <= e <= bounds[j]``."""

    generators: tuple
    bounds: tuple
    var: int

    def monomials(self) -> list:
        return [f.mul_var(self.var, e) for f, b in zip(self.generators, self.bounds) for e in range(1, b + 1)]

    def __len__(self):
        return len(self.generators)


def next_monomials(order: MonomialOrder, border: Iterable[Monomial], S: Iterable[Monomial], var: int) -> Family:
    """The border monomials reached from ``S`` by powers of ``X_var`` (``var`` 0-based).

    Generators are the ``f`` in ``S`` and in the border with ``X_var * f`` in
    the border but outside ``S``; each bound is the largest ``e`` with every
    ``X_var^1..e * f`` in the border but outside ``S``.  Generators come out in
    increasing order.
    """
    border = set(border)
    S = set(S)
    fresh = border - S
    gens, bounds = [], []
    for f in order.sorted(S & border):
        if f.mul_var(var) not in fresh:
            continue
        e = 1
        while f.mul_var(var, e + 1) in fresh:
            e += 1
        gens.append(f)
        bounds.append(e)
    return Family(tuple(gens), tuple(bounds), var)


@dataclass
class MulMatResult:
    """Monomial basis and multiplication matrices; row j of ``mats[k]`` is ``nf(X_k b_j)``.

    ``F`` has row i equal to the coordinates of ``nf(c_i)``, so
    ``Instance(p, mats, F)`` has the input module as its syzygy module.
    """

    order: MonomialOrder
    monbas: list
    mats: list
    F: np.ndarray
    n: int
    m: int
    p: int
    store: dict = field(default_factory=dict, repr=False)

    @property
    def D(self) -> int:
        return len(self.monbas)

    def instance(self, validate: bool | None = None) -> Instance:
        return Instance(PrimeField(self.p), self.mats, self.F, validate=validate)


def _read_matrix(store: dict, monbas: Sequence[Monomial], var: int) -> np.ndarray:
    rows = []
    for b in monbas:
        mono = b.mul_var(var)
        vec = store.get(mono)
        if vec is None:
            raise InvariantError(f"normal form of {mono} is not available")
        rows.append(vec)
    D = len(monbas)
    return np.array(rows, dtype=np.int64).reshape(D, D)


def multiplication_matrices(order: MonomialOrder, gb: GroebnerBasis) -> MulMatResult:
    """Multiplication matrices of ``K[X]^m / <gb>`` on its ``order``-monomial basis.

    Requires ``gb`` to be reduced, the quotient to be finite dimensional and
    the structural assumption to hold for its leading monomials; each is
    checked and reported with a dedicated exception.
    """
    n, m, p = gb.n, gb.m, gb.p
    order = order.resolved(n)
    if order != gb.order:
        raise ValueError(f"basis is for order {gb.order.spec(n)}, not {order.spec(n)}")
    if not check_reduced(order, gb):
        raise NotReducedError("input is not a reduced Gröbner basis for its order")
    K = PrimeField(p)
    leads = gb.leading_monomials()
    # leads of a reduced basis are the minimal generators
    check_structural_assumption(leads, raise_error=True)
    stair = staircase_from_lm(leads, m, order, n)
    monbas = stair.monbas
    D = len(monbas)
    pos = stair.position

    store: dict = {}
    for j, b in enumerate(monbas):
        vec = np.zeros(D, dtype=np.int64)
        vec[j] = 1
        store[b] = vec
    for g, lead in zip(gb.elements, leads):
        vec = np.zeros(D, dtype=np.int64)
        for t, c in g.terms.items():
            if t != lead:
                vec[pos[t]] = (-c) % p
        store[lead] = vec

    S = set(monbas) | set(stair.lm)
    mats: list = [None] * n
    mats[n - 1] = _read_matrix(store, monbas, n - 1)
    for i in range(n - 2, -1, -1):
        fam = next_monomials(order, stair.border, S, i + 1)
        if len(fam):
            vecs = np.array([store[f] for f in fam.generators], dtype=np.int64).reshape(len(fam), D)
            rows = krylov_eval(K, mats[i + 1], vecs, fam.bounds)
            for mono, row in zip(fam.monomials(), rows):
                store[mono] = row
                S.add(mono)
        mats[i] = _read_matrix(store, monbas, i)
    if S != set(monbas) | stair.border:
        raise InvariantError("accumulated monomials differ from the monomial basis and its border")

    F = np.zeros((m, D), dtype=np.int64)
    for i in range(m):
        F[i] = store[Monomial.unit(n, i)]
    return MulMatResult(order, monbas, mats, F, n, m, p, store)


def change_order(ord1: MonomialOrder, gb1: GroebnerBasis, ord2: MonomialOrder) -> GroebnerBasis:
    """Reduced ``ord2``-Gröbner basis of the module generated by ``gb1``."""
    res = multiplication_matrices(ord1, gb1)
    return syzygy_basis(ord2, res.instance(validate=False))
