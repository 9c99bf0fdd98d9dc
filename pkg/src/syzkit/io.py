"""JSON encodings of instances, Gröbner bases and multiplication-matrix results.

Instance: ``{p, n, m, D, mats, F}`` with each matrix flattened row-major.
Gröbner basis: ``{p, n, m, order, elements}``; an element is a list of terms
``{coeff, exps, comp}`` sorted by decreasing monomial, ``comp`` 1-based, and
elements are sorted by increasing leading monomial.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .ff_linalg import PrimeField
from .modpoly import GroebnerBasis, ModulePoly
from .monomials import Monomial, MonomialOrder
from .mulmat import MulMatResult
from .syzygy import Instance


class FormatError(ValueError):
    """Malformed JSON document."""


def _flat(a: np.ndarray) -> list:
    return [int(x) for x in np.asarray(a).reshape(-1)]


def instance_to_dict(inst: Instance) -> dict:
    return {
        "p": inst.p,
        "n": inst.n,
        "m": inst.m,
        "D": inst.D,
        "mats": [_flat(M) for M in inst.mats],
        "F": _flat(inst.F),
    }


def _require(doc: dict, keys):
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}")


def instance_from_dict(doc: dict, validate: bool | None = None) -> Instance:
    _require(doc, ("p", "n", "m", "D", "mats", "F"))
    p, n, m, D = (int(doc[k]) for k in ("p", "n", "m", "D"))
    if len(doc["mats"]) != n:
        raise FormatError(f"expected {n} matrices, got {len(doc['mats'])}")
    try:
        mats = [np.array(M, dtype=object).reshape(D, D) for M in doc["mats"]]
        F = np.array(doc["F"], dtype=object).reshape(m, D)
    except ValueError as exc:
        raise FormatError(f"matrix size mismatch: {exc}") from exc
    K = PrimeField(p)
    return Instance(K, [K.asarray(M) for M in mats], K.asarray(F), validate=validate)


def _term(mono: Monomial, c: int) -> dict:
    return {"coeff": int(c), "exps": list(mono.exps), "comp": mono.comp + 1}


def poly_to_list(poly: ModulePoly, order: MonomialOrder) -> list:
    return [_term(mono, c) for mono, c in poly.sorted_terms(order)]


def poly_from_list(terms: list, n: int, m: int, p: int) -> ModulePoly:
    acc: dict = {}
    for t in terms:
        _require(t, ("coeff", "exps", "comp"))
        exps = tuple(int(e) for e in t["exps"])
        if len(exps) != n or any(e < 0 for e in exps):
            raise FormatError(f"bad exponent vector {t['exps']}")
        comp = int(t["comp"]) - 1
        if not 0 <= comp < m:
            raise FormatError(f"component {t['comp']} out of range 1..{m}")
        mono = Monomial(exps, comp)
        acc[mono] = acc.get(mono, 0) + int(t["coeff"])
    return ModulePoly(acc, n, m, p)


def gb_to_dict(gb: GroebnerBasis) -> dict:
    gb = gb.canonical()
    return {
        "p": gb.p,
        "n": gb.n,
        "m": gb.m,
        "order": gb.order.spec(gb.n),
        "elements": [poly_to_list(g, gb.order) for g in gb.elements],
    }


def gb_from_dict(doc: dict, order: MonomialOrder | None = None) -> GroebnerBasis:
    _require(doc, ("p", "elements"))
    p = int(doc["p"])
    elements = doc["elements"]
    n = doc.get("n")
    if n is None:
        first = next((t for e in elements for t in e), None)
        if first is None:
            raise FormatError("cannot infer n from an empty basis")
        n = len(first["exps"])
    n = int(n)
    m = doc.get("m")
    if m is None:
        m = max(int(t["comp"]) for e in elements for t in e)
    m = int(m)
    if order is None:
        if "order" not in doc:
            raise FormatError("no order given")
        order = MonomialOrder.parse(doc["order"])
    PrimeField(p)
    polys = [poly_from_list(e, n, m, p) for e in elements]
    return GroebnerBasis(order, polys, n, m, p)


def mulmat_to_dict(res: MulMatResult) -> dict:
    return {
        "p": res.p,
        "n": res.n,
        "m": res.m,
        "D": res.D,
        "order": res.order.spec(res.n),
        "monbas": [{"exps": list(b.exps), "comp": b.comp + 1} for b in res.monbas],
        "mats": [_flat(M) for M in res.mats],
        "F": _flat(res.F),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def write_json(doc: dict, path: str | Path | None) -> str:
    text = dumps(doc)
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text)
    return text


def read_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc

