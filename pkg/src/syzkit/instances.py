"""Ready-made instances: approximants, vanishing ideals, matrix annihilators,
multivariate Padé problems, and random commuting families."""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .ff_linalg import PrimeField
from .syzygy import Instance, check_commuting

RANDOM_KINDS = ("dense", "sparse", "nilpotent", "diagonal")


def shift_matrix(D: int) -> np.ndarray:
    """Upper shift: ``v @ S`` moves every entry one position to the right."""
    return np.eye(D, k=1, dtype=np.int64)


def _degree(coeffs: Sequence[int], p: int) -> int:
    nz = [k for k, c in enumerate(coeffs) if int(c) % p]
    return nz[-1] if nz else -1


def gen_hermite_pade(p: int, D: int, polys: Sequence[Sequence[int]]) -> Instance:
    """Approximants of ``f_1..f_m`` modulo ``x^D``; ``polys`` are coefficient lists, constant first."""
    K = PrimeField(p)
    if D < 1:
        raise ValueError("D must be positive")
    F = np.zeros((len(polys), D), dtype=np.int64)
    for i, f in enumerate(polys):
        deg = _degree(f, p)
        if deg >= D:
            raise ValueError(f"polynomial {i + 1} has degree {deg} >= D = {D}")
        F[i, : deg + 1] = K.asarray(list(f[: deg + 1]))
    return Instance(K, [shift_matrix(D)], F)


def gen_points_ideal(p: int, points: Sequence[Sequence[int]]) -> Instance:
    """Vanishing ideal of distinct points: diagonal matrices, ``F`` all ones."""
    K = PrimeField(p)
    pts = [tuple(int(c) % p for c in pt) for pt in points]
    if not pts:
        raise ValueError("need at least one point")
    n = len(pts[0])
    if n < 1 or any(len(pt) != n for pt in pts):
        raise ValueError("points must all have the same positive number of coordinates")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    coords = np.array(pts, dtype=np.int64)
    mats = [np.diag(coords[:, k]) for k in range(n)]
    return Instance(K, mats, np.ones((1, len(pts)), dtype=np.int64))


def gen_matrix_annihilator(p: int, matrices: Sequence) -> Instance:
    """Polynomials vanishing at the commuting d x d matrices ``N_1..N_n``.

    The space is ``K^{d x d}`` flattened row-major; ``M_k = I_d (x) N_k`` acts by
    ``A -> A N_k`` and ``F`` is the flattened identity, so ``p . F`` is the
    flattened ``p(N_1, .., N_n)``.
    """
    K = PrimeField(p)
    Ns = [K.asarray(np.asarray(N)) for N in matrices]
    if not Ns:
        raise ValueError("need at least one matrix")
    d = Ns[0].shape[0]
    if any(N.shape != (d, d) for N in Ns):
        raise ValueError("matrices must all be square of the same size")
    check_commuting(K, Ns)
    mats = [np.kron(np.eye(d, dtype=np.int64), N) for N in Ns]
    F = np.eye(d, dtype=np.int64).reshape(1, d * d)
    return Instance(K, mats, F)


def multivar_pade_index(n: int, d: int) -> list:
    """Exponent tuples in basis order: ``X_1`` varies fastest."""
    return [tuple(reversed(e)) for e in product(range(d), repeat=n)]


def gen_multivar_pade(p: int, n: int, d: int, polys: Sequence[dict]) -> Instance:
    """Syzygies of ``(-1, f_2, .., f_m)`` modulo ``<X_1^d, .., X_n^d>``.

    Each ``f_i`` is a dict ``{exponent tuple: coeff}`` with every exponent
    below ``d``.  The quotient basis lists ``X^e`` at position
    ``e_1 + d e_2 + ... + d^(n-1) e_n``: ``M_1`` is block diagonal with
    ``d x d`` shift blocks and ``M_n`` is a block shift by identities.
    """
    K = PrimeField(p)
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    D = d**n
    monos = multivar_pade_index(n, d)
    pos = {e: j for j, e in enumerate(monos)}
    mats = []
    for k in range(n):
        M = np.zeros((D, D), dtype=np.int64)
        for e, j in pos.items():
            if e[k] + 1 < d:
                up = e[:k] + (e[k] + 1,) + e[k + 1:]
                M[j, pos[up]] = 1
        mats.append(M)
    F = np.zeros((len(polys) + 1, D), dtype=np.int64)
    F[0, 0] = p - 1
    for i, f in enumerate(polys, start=1):
        for e, c in f.items():
            e = tuple(e)
            if len(e) != n or any(x < 0 or x >= d for x in e):
                raise ValueError(f"term {e} of polynomial {i + 1} is outside the degree bound {d}")
            F[i, pos[e]] = (F[i, pos[e]] + int(c)) % p
    return Instance(K, mats, F)


def _random_base(K: PrimeField, D: int, kind: str, rng: np.random.Generator) -> np.ndarray:
    p = K.p
    if kind == "dense":
        return K.random(D, D, rng)
    if kind == "sparse":
        mask = rng.random((D, D)) < min(1.0, 2.0 / max(D, 1))
        return np.where(mask, K.random(D, D, rng), 0)
    if kind == "nilpotent":
        # strictly upper triangular, conjugated by a random unit lower triangular matrix
        U = np.triu(K.random(D, D, rng), k=1)
        L = np.tril(K.random(D, D, rng), k=-1) + np.eye(D, dtype=np.int64)
        return K.matmul(K.matmul(K.invert(L), U), L)
    if kind == "diagonal":
        vals = rng.integers(0, min(p, max(2, D // 2 + 1)), size=D)
        return np.diag(vals).astype(np.int64)
    raise ValueError(f"unknown kind {kind!r}")


def _poly_in(K: PrimeField, A: np.ndarray, coeffs: Sequence[int]) -> np.ndarray:
    D = A.shape[0]
    out = np.zeros((D, D), dtype=np.int64)
    for c in reversed(coeffs):
        out = K.matmul(out, A)
        out[np.diag_indices(D)] = (out[np.diag_indices(D)] + int(c)) % K.p
    return out


def gen_random_commuting(
    p: int,
    n: int,
    D: int,
    m: int = 1,
    seed: int | None = None,
    kind: str | None = None,
) -> Instance:
    """Random instance with ``M_k = q_k(M_1)`` (``deg q_k < D``) and random ``F``.

    ``kind`` picks the shape of ``M_1`` (dense, sparse, nilpotent or diagonal);
    by default it is drawn from the seed.
    """
    K = PrimeField(p)
    if n < 1 or D < 0 or m < 1:
        raise ValueError("need n >= 1, D >= 0, m >= 1")
    rng = np.random.default_rng(seed)
    if kind is None:
        kind = RANDOM_KINDS[int(rng.integers(len(RANDOM_KINDS)))]
    if D == 0:
        return Instance(K, [np.zeros((0, 0), dtype=np.int64)] * n, np.zeros((m, 0), dtype=np.int64))
    M1 = _random_base(K, D, kind, rng)
    mats = [M1]
    for _ in range(1, n):
        deg = int(rng.integers(0, D))
        coeffs = rng.integers(0, p, size=deg + 1)
        mats.append(_poly_in(K, M1, coeffs))
    F = K.random(m, D, rng)
    return Instance(K, mats, F)


def validate_instance(inst: Instance):
    """Re-run the commutation check regardless of size."""
    check_commuting(inst.field, inst.mats)
