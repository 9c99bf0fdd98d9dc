"""Dense linear algebra over a prime field GF(p).

Matrices are plain ``numpy`` arrays of dtype ``int64`` holding canonical
residues in ``[0, p)``.  All routines go through a :class:`PrimeField`
instance, which carries the modulus.

Products are computed with float64 BLAS on 16-bit limbs: every partial sum
stays below 2**53, so the float results are exact integers and the final
reduction gives the same bits as a naive integer triple loop.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, SingularMatrixError

_EXACT = 2**53
_LIMB = 16
_LIMB_MASK = (1 << _LIMB) - 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _exact_product(a: np.ndarray, b: np.ndarray, bound_a: int, bound_b: int) -> np.ndarray:
    """Integer product of nonnegative arrays with entries below the given bounds.

    The inner dimension is chunked so that no float64 partial sum reaches 2**53.
    Returns an int64 array; the caller guarantees the true result fits.
    """
    k = a.shape[1]
    per_term = max(1, (bound_a - 1) * (bound_b - 1))
    chunk = max(1, (_EXACT - 1) // per_term)
    af = a.astype(np.float64)
    bf = b.astype(np.float64)
    if chunk >= k:
        return (af @ bf).astype(np.int64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, k, chunk):
        out += (af[:, s:s + chunk] @ bf[s:s + chunk]).astype(np.int64)
    return out


class PrimeField:
    """Arithmetic context for GF(p) with ``2 < p < 2**31`` prime."""

    def __init__(self, p: int):
        p = int(p)
        if not 2 < p < 2**31:
            raise ValueError(f"modulus must satisfy 2 < p < 2**31, got {p}")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    # -- scalars and construction ------------------------------------------

    def inv(self, x: int) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, -1, self.p)

    def asarray(self, data, shape=None) -> np.ndarray:
        """Reduce arbitrary integer data into canonical residues."""
        if isinstance(data, np.ndarray) and data.dtype == object:
            data = data.tolist()
        if not isinstance(data, np.ndarray):
            # python ints may exceed int64; reduce them first
            arr = np.array(_reduce_nested(data, self.p), dtype=np.int64)
        else:
            arr = np.mod(data.astype(np.int64, copy=False), self.p)
        if shape is not None:
            arr = arr.reshape(shape)
        return arr

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def random(self, rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)

    # -- products ------------------------------------------------------------

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Exact product ``a @ b`` over GF(p)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.ndim == 1:
            return self.matmul(a[None, :], b)[0]
        if b.ndim == 1:
            return self.matmul(a, b[:, None])[:, 0]
        if a.shape[1] != b.shape[0]:
            raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
        rows, k = a.shape
        cols = b.shape[1]
        if rows == 0 or cols == 0 or k == 0:
            return np.zeros((rows, cols), dtype=np.int64)
        p = self.p
        if (p - 1) ** 2 < _EXACT:
            return np.mod(_exact_product(a, b, p, p), p)
        # split into 16-bit limbs: a = a0 + 2^16 a1, b = b0 + 2^16 b1
        a0, a1 = a & _LIMB_MASK, a >> _LIMB
        b0, b1 = b & _LIMB_MASK, b >> _LIMB
        lim = 1 << _LIMB
        lo = np.mod(_exact_product(a0, b0, lim, lim), p)
        mid = np.mod(_exact_product(a0, b1, lim, lim), p)
        mid = np.mod(mid + np.mod(_exact_product(a1, b0, lim, lim), p), p)
        hi = np.mod(_exact_product(a1, b1, lim, lim), p)
        s1 = (1 << _LIMB) % p
        s2 = (1 << (2 * _LIMB)) % p
        return np.mod(lo + np.mod(mid * s1, p) + np.mod(hi * s2, p), p)

    def matpow(self, a: np.ndarray, e: int) -> np.ndarray:
        if a.shape[0] != a.shape[1]:
            raise DimensionError("matrix power needs a square matrix")
        result = self.identity(a.shape[0])
        base = np.asarray(a, dtype=np.int64)
        while e > 0:
            if e & 1:
                result = self.matmul(result, base)
            e >>= 1
            if e:
                base = self.matmul(base, base)
        return result

    # -- elimination -------------------------------------------------------

    def _echelon(self, a: np.ndarray, reduced: bool):
        """Row echelon form with leftmost pivots; returns (E, pivot_cols, row_perm).

        ``row_perm[r]`` is the original index of the row moved to position r.
        """
        p = self.p
        A = np.mod(np.array(a, dtype=np.int64, copy=True), p)
        rows, cols = A.shape
        perm = np.arange(rows)
        pivots: list[int] = []
        r = c = 0
        while r < rows and c < cols:
            nz = A[r:, c:] != 0
            colany = nz.any(axis=0)
            if not colany.any():
                break
            off = int(np.argmax(colany))
            c += off
            pr = r + int(np.argmax(nz[:, off]))
            if pr != r:
                A[[r, pr]] = A[[pr, r]]
                perm[[r, pr]] = perm[[pr, r]]
            A[r, c:] = np.mod(A[r, c:] * pow(int(A[r, c]), -1, p), p)
            targets = np.arange(r + 1, rows) if not reduced else np.r_[0:r, r + 1:rows]
            if targets.size:
                factors = A[targets, c]
                sel = targets[factors != 0]
                if sel.size:
                    f = A[sel, c]
                    A[sel, c:] = np.mod(A[sel, c:] - np.mod(np.outer(f, A[r, c:]), p), p)
            pivots.append(c)
            r += 1
            c += 1
        return A, pivots, perm

    def column_rank_profile(self, a: np.ndarray) -> tuple[int, list[int]]:
        """Rank and lexicographically smallest maximal set of independent columns (0-based)."""
        a = np.asarray(a)
        if a.ndim != 2:
            raise DimensionError("expected a matrix")
        _, pivots, _ = self._echelon(a, reduced=False)
        return len(pivots), pivots

    def row_rank_profile(self, a: np.ndarray) -> tuple[int, list[int]]:
        """Rank and lexicographically smallest maximal set of independent rows (0-based)."""
        a = np.asarray(a)
        if a.ndim != 2:
            raise DimensionError("expected a matrix")
        return self.column_rank_profile(a.T)

    def rank(self, a: np.ndarray) -> int:
        a = np.asarray(a)
        if a.shape[0] > a.shape[1]:
            a = a.T
        return self.column_rank_profile(a)[0]

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form (leading ones, zeros above and below) and pivot columns.

        Zero rows are dropped from the returned matrix.
        """
        A, pivots, _ = self._echelon(np.asarray(a), reduced=True)
        return A[: len(pivots)].copy(), pivots

    def invert(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError(f"cannot invert a matrix of shape {a.shape}")
        n = a.shape[0]
        aug = np.hstack([np.mod(a, self.p), self.identity(n)])
        E, pivots, _ = self._echelon(aug, reduced=True)
        if len(pivots) < n or pivots[n - 1] != n - 1:
            raise SingularMatrixError("matrix is singular")
        return E[:, n:].copy()

    def solve_left(self, t: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Return ``N`` with ``t == N @ b`` for ``b`` of full row rank.

        Uses the square subsystem on the column rank profile of ``b``.  Raises
        :class:`SingularMatrixError` if ``b`` is rank deficient and
        :class:`ValueError` if some row of ``t`` is outside the row space of ``b``.
        """
        b = np.asarray(b, dtype=np.int64)
        t = np.asarray(t, dtype=np.int64)
        delta = b.shape[0]
        if t.shape[1] != b.shape[1]:
            raise DimensionError(f"column mismatch: {t.shape} vs {b.shape}")
        r, cols = self.column_rank_profile(b)
        if r < delta:
            raise SingularMatrixError("basis matrix does not have full row rank")
        n = self.matmul(t[:, cols], self.invert(b[:, cols]))
        if np.any(self.matmul(n, b) != np.mod(t, self.p)):
            raise ValueError("some rows lie outside the row space of the basis matrix")
        return n

    def left_nullspace_rref(self, a: np.ndarray) -> np.ndarray:
        """Basis of ``{v : v @ a = 0}`` in reduced row echelon form."""
        a = np.asarray(a, dtype=np.int64)
        rows = a.shape[0]
        R, pivots = self.rref(a.T)
        pivot_set = set(pivots)
        free = [j for j in range(rows) if j not in pivot_set]
        basis = np.zeros((len(free), rows), dtype=np.int64)
        for k, f in enumerate(free):
            basis[k, f] = 1
            for i, pc in enumerate(pivots):
                basis[k, pc] = (-R[i, f]) % self.p
        if not free:
            return basis
        out, _ = self.rref(basis)
        return out


def _reduce_nested(data, p):
    if isinstance(data, (list, tuple)):
        return [_reduce_nested(x, p) for x in data]
    return int(data) % p
