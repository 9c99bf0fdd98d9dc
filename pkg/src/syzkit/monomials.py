"""Monomials of the free module K[X_1..X_n]^m and monomial orders on them.

A :class:`Monomial` is ``X^e * c_i``: an exponent tuple plus a 0-based
component index.  A :class:`MonomialOrder` is built from a base order on the
ring (``lex``, ``deglex`` or ``degrevlex`` for a chosen variable precedence)
and a module wrapper (``top``: term over position, ``pot``: position over
term).

Order strings follow the grammar ``top:lex``, ``pot:degrevlex:vars=3,1,2``
where ``vars`` lists 1-based variable numbers from most to least significant.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DimensionError, OracleLimitError

BASE_ORDERS = ("lex", "deglex", "degrevlex")
WRAPPERS = ("top", "pot")
MAX_EXPONENT = 2**32 - 1
DEFAULT_INDEX_LIMIT = 10**6

LT, EQ, GT = -1, 0, 1


class Monomial(NamedTuple):
    """The monomial ``X^exps * c_comp`` (``comp`` is 0-based)."""

    exps: tuple
    comp: int

    @classmethod
    def unit(cls, n: int, comp: int) -> "Monomial":
        return cls((0,) * n, comp)

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_unit(self) -> bool:
        return not any(self.exps)

    def divides(self, other: "Monomial") -> bool:
        return divides(self, other)

    def mul_var(self, k: int, e: int = 1) -> "Monomial":
        return mul_by_power(self, k, e)

    def mul_exps(self, exps: Sequence[int]) -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, exps)), self.comp)

    def div_var(self, k: int) -> "Monomial":
        """``self / X_k``; the caller checks divisibility."""
        exps = list(self.exps)
        if exps[k] == 0:
            raise ValueError(f"X{k + 1} does not divide {self}")
        exps[k] -= 1
        return Monomial(tuple(exps), self.comp)

    def quotient(self, other: "Monomial") -> tuple:
        """Exponents of ``self / other`` (requires ``other | self``)."""
        return tuple(a - b for a, b in zip(self.exps, other.exps))

    def __str__(self):
        parts = []
        for k, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{k + 1}")
            elif e > 1:
                parts.append(f"x{k + 1}^{e}")
        parts.append(f"c{self.comp + 1}")
        return "*".join(parts)


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b`` (same component, componentwise exponents)."""
    if len(a.exps) != len(b.exps):
        raise DimensionError("monomials live in rings with different numbers of variables")
    return a.comp == b.comp and all(x <= y for x, y in zip(a.exps, b.exps))


def mul_by_power(a: Monomial, k: int, e: int) -> Monomial:
    """Multiply ``a`` by ``X_k^e`` (``k`` 0-based)."""
    if not 0 <= k < len(a.exps):
        raise DimensionError(f"variable index {k} out of range for n={len(a.exps)}")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if e == 0:
        return a
    new = a.exps[k] + e
    if new > MAX_EXPONENT:
        raise OverflowError(f"exponent {new} exceeds {MAX_EXPONENT}")
    exps = a.exps[:k] + (new,) + a.exps[k + 1:]
    return Monomial(exps, a.comp)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on K[X_1..X_n]^m.

    ``precedence`` lists 0-based variable indices from most to least
    significant; ``None`` means the natural ``X_1 > X_2 > ... > X_n``.
    """

    base: str = "lex"
    wrapper: str = "top"
    precedence: tuple | None = None

    def __post_init__(self):
        if self.base not in BASE_ORDERS:
            raise ValueError(f"unknown base order {self.base!r}")
        if self.wrapper not in WRAPPERS:
            raise ValueError(f"unknown module wrapper {self.wrapper!r}")
        if self.precedence is not None:
            prec = tuple(int(v) for v in self.precedence)
            if sorted(prec) != list(range(len(prec))):
                raise ValueError(f"precedence {prec} is not a permutation")
            object.__setattr__(self, "precedence", prec)

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        parts = text.strip().lower().split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"malformed order spec {text!r}")
        wrapper, base = parts[0], parts[1]
        prec = None
        if len(parts) == 3:
            key, _, val = parts[2].partition("=")
            if key != "vars" or not val:
                raise ValueError(f"malformed order spec {text!r}")
            prec = tuple(int(v) - 1 for v in val.split(","))
        return cls(base=base, wrapper=wrapper, precedence=prec)

    def resolved(self, n: int) -> "MonomialOrder":
        """The same order with an explicit precedence for ``n`` variables."""
        prec = self.variables(n)
        return MonomialOrder(self.base, self.wrapper, prec)

    def variables(self, n: int) -> tuple:
        if self.precedence is None:
            return tuple(range(n))
        if len(self.precedence) != n:
            raise DimensionError(
                f"order has precedence for {len(self.precedence)} variables, ring has {n}"
            )
        return self.precedence

    def spec(self, n: int | None = None) -> str:
        """Order string; with ``n`` the precedence is always written out."""
        text = f"{self.wrapper}:{self.base}"
        prec = self.precedence if n is None else self.variables(n)
        if prec is not None:
            text += ":vars=" + ",".join(str(v + 1) for v in prec)
        return text

    def __str__(self):
        return self.spec()

    def same_as(self, other: "MonomialOrder", n: int) -> bool:
        return self.resolved(n) == other.resolved(n)

    # -- comparison ----------------------------------------------------------

    def ring_key(self, exps: Sequence[int]) -> tuple:
        """Sort key of a ring monomial: larger key means larger monomial."""
        prec = self.variables(len(exps))
        if self.base == "lex":
            return tuple(exps[v] for v in prec)
        if self.base == "deglex":
            return (sum(exps),) + tuple(exps[v] for v in prec)
        # degrevlex: total degree, then the smaller exponent in the least significant
        # variable wins
        return (sum(exps),) + tuple(-exps[v] for v in reversed(prec))

    def key(self, mono: Monomial) -> tuple:
        rk = self.ring_key(mono.exps)
        if self.wrapper == "top":
            return (rk, mono.comp)
        return (mono.comp, rk)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Return ``LT`` (-1), ``EQ`` (0) or ``GT`` (1)."""
        if len(a.exps) != len(b.exps):
            raise DimensionError("monomials live in rings with different numbers of variables")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted(self, monos: Iterable[Monomial], reverse: bool = False) -> list:
        return sorted(monos, key=self.key, reverse=reverse)

    def max(self, monos: Iterable[Monomial]) -> Monomial:
        return max(monos, key=self.key)

    def is_loop_order(self, n: int) -> bool:
        """True for TOP-lex with ``X_n > ... > X_1``: the order in which the
        monomial-basis iteration introduces new rows."""
        return (
            self.wrapper == "top"
            and self.base == "lex"
            and self.variables(n) == tuple(range(n - 1, -1, -1))
        )


def _index_limit() -> int:
    env = os.environ.get("SYZKIT_ORACLE_LIMIT")
    return int(env) if env else DEFAULT_INDEX_LIMIT


class MonomialIndex:
    """The increasing bijection between bounded monomials and positions.

    Covers ``{X^e c_i : 0 <= e < bounds, 0 <= i < m}``; positions are 0-based
    (the mathematical index is ``position + 1``).
    """

    def __init__(self, order: MonomialOrder, bounds: Sequence[int], m: int, limit: int | None = None):
        bounds = tuple(int(b) for b in bounds)
        if not bounds or any(b < 1 for b in bounds):
            raise ValueError("bounds must be positive and there must be at least one variable")
        if m < 1:
            raise ValueError("need at least one component")
        size = m * int(np.prod(bounds, dtype=object))
        limit = _index_limit() if limit is None else limit
        if size > limit:
            raise OracleLimitError(f"{size} bounded monomials exceed the limit {limit}")
        self.order = order
        self.bounds = bounds
        self.m = m
        self.n = len(bounds)
        monos = [
            Monomial(tuple(e), i)
            for e in product(*(range(b) for b in bounds))
            for i in range(m)
        ]
        self.monomials: list[Monomial] = order.sorted(monos)
        self.position: dict = {mono: k for k, mono in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def __getitem__(self, k: int) -> Monomial:
        return self.monomials[k]

    def index(self, mono: Monomial) -> int:
        try:
            return self.position[mono]
        except KeyError:
            raise DimensionError(f"{mono} is outside the bounds {self.bounds}") from None

    def __contains__(self, mono) -> bool:
        return mono in self.position

    def expand(self, poly) -> np.ndarray:
        """Coefficient vector of ``poly`` indexed by position."""
        if poly.n != self.n or poly.m != self.m:
            raise DimensionError("polynomial dimensions do not match the index")
        v = np.zeros(len(self), dtype=np.int64)
        for mono, c in poly.terms.items():
            v[self.index(mono)] = c
        return v

    def contract(self, vec, p: int):
        """Inverse of :meth:`expand`."""
        from .modpoly import ModulePoly

        vec = np.asarray(vec)
        if vec.shape != (len(self),):
            raise DimensionError(f"expected a vector of length {len(self)}, got shape {vec.shape}")
        terms = {self.monomials[k]: int(c) for k, c in enumerate(vec) if c % p}
        return ModulePoly(terms, self.n, self.m, p)


def build_index(order: MonomialOrder, bounds: Sequence[int], m: int, limit: int | None = None) -> MonomialIndex:
    return MonomialIndex(order, bounds, m, limit)


def expand(order: MonomialOrder, bounds: Sequence[int], poly) -> np.ndarray:
    return MonomialIndex(order, bounds, poly.m).expand(poly)


def contract(order: MonomialOrder, bounds: Sequence[int], vec, m: int, p: int):
    return MonomialIndex(order, bounds, m).contract(vec, p)
