"""Sparse elements of K[X_1..X_n]^m, Gröbner bases, and staircase combinatorics.

:func:`divide` is plain multivariate division.  It does not share code with
the linear-algebra engine and is used as the reference for normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionError, InfiniteQuotientError, NotReducedError, StructuralAssumptionError
from .monomials import Monomial, MonomialOrder, divides


class ModulePoly:
    """Element of K[X_1..X_n]^m stored as ``{Monomial: coefficient}``.

    Coefficients are canonical residues mod ``p``; zero coefficients are never
    stored.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "n", "m", "p")

    def __init__(self, terms: dict, n: int, m: int, p: int):
        clean = {}
        for mono, c in terms.items():
            c = int(c) % p
            if c:
                if len(mono.exps) != n or not 0 <= mono.comp < m:
                    raise DimensionError(f"monomial {mono} does not live in K[X1..X{n}]^{m}")
                clean[mono] = c
        self.terms = clean
        self.n = n
        self.m = m
        self.p = p

    @classmethod
    def zero(cls, n: int, m: int, p: int) -> "ModulePoly":
        return cls({}, n, m, p)

    @classmethod
    def from_monomial(cls, mono: Monomial, m: int, p: int, coeff: int = 1) -> "ModulePoly":
        return cls({mono: coeff}, len(mono.exps), m, p)

    @classmethod
    def from_components(cls, comps: Sequence[dict], n: int, p: int) -> "ModulePoly":
        """Build from one ``{exps: coeff}`` dict per component."""
        terms = {}
        for i, comp in enumerate(comps):
            for exps, c in comp.items():
                terms[Monomial(tuple(exps), i)] = c
        return cls(terms, n, len(comps), p)

    def _check(self, other: "ModulePoly"):
        if (self.n, self.m, self.p) != (other.n, other.m, other.p):
            raise DimensionError("polynomials live in different modules")

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ModulePoly):
            return NotImplemented
        return (self.n, self.m, self.p) == (other.n, other.m, other.p) and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "ModulePoly") -> "ModulePoly":
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return ModulePoly(terms, self.n, self.m, self.p)

    def __neg__(self) -> "ModulePoly":
        return self.scale(-1)

    def __sub__(self, other: "ModulePoly") -> "ModulePoly":
        return self + (-other)

    def scale(self, c: int) -> "ModulePoly":
        return ModulePoly({mono: v * c for mono, v in self.terms.items()}, self.n, self.m, self.p)

    def mul_exps(self, exps: Sequence[int]) -> "ModulePoly":
        """Multiply by the ring monomial ``X^exps``."""
        return ModulePoly({mono.mul_exps(exps): c for mono, c in self.terms.items()}, self.n, self.m, self.p)

    def coeff(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def monomials(self):
        return self.terms.keys()

    def sorted_terms(self, order: MonomialOrder, descending: bool = True) -> list:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=descending)

    def leading_term(self, order: MonomialOrder) -> tuple:
        return leading_term(order, self)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return leading_term(order, self)[0]

    def max_degrees(self) -> tuple:
        degs = [0] * self.n
        for mono in self.terms:
            for k, e in enumerate(mono.exps):
                degs[k] = max(degs[k], e)
        return tuple(degs)

    def component(self, i: int) -> dict:
        """The i-th entry as ``{exps: coeff}``."""
        return {mono.exps: c for mono, c in self.terms.items() if mono.comp == i}

    def format(self, order: MonomialOrder | None = None) -> str:
        order = order or MonomialOrder()
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms(order):
            out.append(f"{c}*{mono}" if c != 1 else str(mono))
        return " + ".join(out)

    def __repr__(self):
        return f"ModulePoly({self.format()}, n={self.n}, m={self.m}, p={self.p})"


def leading_term(order: MonomialOrder, poly: ModulePoly) -> tuple:
    """``(monomial, coefficient)`` of the greatest term under ``order``."""
    if not poly.terms:
        raise ValueError("the zero polynomial has no leading term")
    mono = max(poly.terms, key=order.key)
    return mono, poly.terms[mono]


@dataclass
class GroebnerBasis:
    """A list of module elements together with the order they are a basis for."""

    order: MonomialOrder
    elements: list
    n: int
    m: int
    p: int
    claimed_reduced: bool = True

    def __post_init__(self):
        for g in self.elements:
            if (g.n, g.m, g.p) != (self.n, self.m, self.p):
                raise DimensionError("basis element does not match the basis dimensions")
            if not g:
                raise ValueError("a Gröbner basis cannot contain zero")
        self.order = self.order.resolved(self.n)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def canonical(self) -> "GroebnerBasis":
        """Same basis with elements sorted by increasing leading monomial."""
        elems = sorted(self.elements, key=lambda g: self.order.key(g.leading_monomial(self.order)))
        return GroebnerBasis(self.order, elems, self.n, self.m, self.p, self.claimed_reduced)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        if (self.n, self.m, self.p) != (other.n, other.m, other.p) or self.order != other.order:
            return False
        return self.canonical().elements == other.canonical().elements


# -- monomial module combinatorics ------------------------------------------


def in_monomial_module(mono: Monomial, gens: Iterable[Monomial]) -> bool:
    return any(divides(g, mono) for g in gens)


def minimal_generators(monos: Iterable[Monomial]) -> list:
    """Discard every monomial divisible by another one in the collection."""
    monos = list(dict.fromkeys(monos))
    return [a for a in monos if not any(b != a and divides(b, a) for b in monos)]


def check_structural_assumption(lm: Iterable[Monomial], raise_error: bool = False) -> bool:
    """Check, on minimal generators, that ``X_i/X_j * mu`` stays in ``<lm>`` for ``i < j``.

    Variables are taken in their ambient numbering ``X_1, ..., X_n``.
    """
    lm = list(lm)
    for mu in lm:
        for j, ej in enumerate(mu.exps):
            if ej == 0:
                continue
            for i in range(j):
                exps = list(mu.exps)
                exps[j] -= 1
                exps[i] += 1
                if not in_monomial_module(Monomial(tuple(exps), mu.comp), lm):
                    if raise_error:
                        raise StructuralAssumptionError(mu, (i, j))
                    return False
    return True


@dataclass
class Staircase:
    """Monomial basis, border and related sets of a monomial submodule.

    ``monbas`` is sorted increasingly; ``border`` and ``expset`` are sets.
    """

    order: MonomialOrder
    monbas: list
    lm: list
    border: set
    expset: set
    n: int
    m: int
    position: dict = field(default_factory=dict)

    def __post_init__(self):
        self.position = {b: k for k, b in enumerate(self.monbas)}

    @property
    def dimension(self) -> int:
        return len(self.monbas)


def _finiteness_witness(lm: list, n: int, m: int):
    """Return ``(component, variable)`` lacking a pure-power generator, or None."""
    for i in range(m):
        gens = [g for g in lm if g.comp == i]
        if any(g.is_unit() for g in gens):
            continue
        for k in range(n):
            if not any(g.exps[k] > 0 and all(e == 0 for t, e in enumerate(g.exps) if t != k) for g in gens):
                return i, k
    return None


def staircase_from_lm(lm: Iterable[Monomial], m: int, order: MonomialOrder, n: int | None = None) -> Staircase:
    """Staircase data for the monomial module generated by ``lm``."""
    lm = list(lm)
    if n is None:
        if not lm:
            raise ValueError("cannot infer the number of variables from an empty generator set")
        n = len(lm[0].exps)
    if len(minimal_generators(lm)) != len(lm):
        raise ValueError("leading monomials are not pairwise non-divisible")
    witness = _finiteness_witness(lm, n, m)
    if witness is not None:
        i, k = witness
        raise InfiniteQuotientError(
            f"infinite staircase: component c{i + 1} has no pure power of X{k + 1} among the leading monomials"
        )
    by_comp = {i: [g for g in lm if g.comp == i] for i in range(m)}
    monbas = []
    seen = set()
    stack = [Monomial.unit(n, i) for i in range(m)]
    while stack:
        mono = stack.pop()
        if mono in seen:
            continue
        seen.add(mono)
        if in_monomial_module(mono, by_comp[mono.comp]):
            continue
        monbas.append(mono)
        stack.extend(mono.mul_var(k) for k in range(n))
    monbas = order.sorted(monbas)
    mb = set(monbas)
    expset = {b.mul_var(k) for b in monbas for k in range(n)}
    expset |= {Monomial.unit(n, i) for i in range(m) if Monomial.unit(n, i) not in mb}
    border = expset - mb
    return Staircase(order, monbas, order.sorted(lm), border, expset, n, m)


def staircase_from_monbas(monbas: Sequence[Monomial], m: int, order: MonomialOrder, n: int) -> Staircase:
    """Border and minimal generators of the complement of a monomial basis."""
    mb = set(monbas)
    expset = {b.mul_var(k) for b in monbas for k in range(n)}
    expset |= {Monomial.unit(n, i) for i in range(m) if Monomial.unit(n, i) not in mb}
    border = expset - mb
    lm = order.sorted(minimal_generators(border))
    return Staircase(order, list(monbas), lm, border, expset, n, m)


# -- reduction ---------------------------------------------------------------


def _reducers(basis: GroebnerBasis):
    """``(lead monomial, lead coefficient, element)`` sorted by increasing lead."""
    out = []
    for g in basis.elements:
        mono, c = leading_term(basis.order, g)
        out.append((mono, c, g))
    out.sort(key=lambda t: basis.order.key(t[0]))
    return out


def divide(order: MonomialOrder, poly: ModulePoly, basis: GroebnerBasis) -> ModulePoly:
    """Remainder of classical multivariate division of ``poly`` by ``basis``.

    Among the basis elements whose leading monomial divides the current
    leading term, the one with the smallest leading monomial is used.
    """
    if (poly.n, poly.m, poly.p) != (basis.n, basis.m, basis.p):
        raise DimensionError("polynomial and basis live in different modules")
    if not order.same_as(basis.order, basis.n):
        raise ValueError(f"basis is for order {basis.order}, not {order}")
    p = poly.p
    reducers = _reducers(basis)
    work = dict(poly.terms)
    rem = {}
    while work:
        mono = max(work, key=order.key)
        c = work.pop(mono)
        for lead, lc, g in reducers:
            if divides(lead, mono):
                q = mono.quotient(lead)
                factor = c * pow(lc, -1, p) % p
                for t, gc in g.terms.items():
                    if t == lead:
                        continue
                    tm = t.mul_exps(q)
                    v = (work.get(tm, 0) - factor * gc) % p
                    if v:
                        work[tm] = v
                    else:
                        work.pop(tm, None)
                break
        else:
            rem[mono] = c
    return ModulePoly(rem, poly.n, poly.m, p)


def check_reduced(order: MonomialOrder, basis: GroebnerBasis) -> bool:
    """Monic leads, pairwise non-divisible leads, and no lead divides a tail term."""
    leads = []
    for g in basis.elements:
        if not g:
            return False
        mono, c = leading_term(order, g)
        if c != 1:
            return False
        leads.append(mono)
    if len(set(leads)) != len(leads):
        return False
    for a in leads:
        for b in leads:
            if a != b and divides(a, b):
                return False
    for g, lead in zip(basis.elements, leads):
        for t in g.terms:
            if t != lead and in_monomial_module(t, leads):
                return False
    return True


def require_reduced(basis: GroebnerBasis):
    if not check_reduced(basis.order, basis):
        raise NotReducedError("input is not a reduced Gröbner basis for its order")


def monomial_normal_forms(basis: GroebnerBasis, monos: Iterable[Monomial], staircase: Staircase | None = None) -> dict:
    """Remainders of many monomials at once, as ``{monomial: {basis monomial: coeff}}``.

    Each monomial is reduced by the same rule as :func:`divide` (smallest
    dividing lead), with memoisation of intermediate monomials.  Division by a
    Gröbner basis is linear, so remainders of linear combinations follow by
    linearity.
    """
    order = basis.order
    p = basis.p
    reducers = _reducers(basis)
    memo: dict = {}
    for start in monos:
        stack = [start]
        while stack:
            mono = stack[-1]
            if mono in memo:
                stack.pop()
                continue
            for lead, lc, g in reducers:
                if divides(lead, mono):
                    break
            else:
                memo[mono] = {mono: 1}
                stack.pop()
                continue
            q = mono.quotient(lead)
            inv = pow(lc, -1, p)
            tail = [(t.mul_exps(q), gc) for t, gc in g.terms.items() if t != lead]
            pending = [t for t, _ in tail if t not in memo]
            if pending:
                stack.extend(pending)
                continue
            acc: dict = {}
            for t, gc in tail:
                f = -gc * inv % p
                for b, v in memo[t].items():
                    acc[b] = (acc.get(b, 0) + f * v) % p
            memo[mono] = {b: v for b, v in acc.items() if v}
            stack.pop()
    return memo
