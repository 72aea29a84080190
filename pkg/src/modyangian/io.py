"""Canonical text and JSON forms for elements and series.

Text:  ``2 * T[1,1,1]^2 * T[1,2,3] + 1 * T[2,2,1]`` (terms sorted by monomial,
coefficients in ``[0, p)``, ``0`` for the zero element).
JSON:  ``{"p", "n", "symbol", "terms": [{"coeff", "monomial": [{"i","j","r","e"}]}]}``.
"""

from __future__ import annotations

import json
import re

from .algebra import CommutativeAlgebra, Element, runs


def _factor_text(alg, code, e):
    label = ",".join(str(x) for x in alg.decode(code))
    base = f"{alg.symbol}[{label}]"
    return f"{base}^{e}" if e > 1 else base


def to_text(x: Element) -> str:
    alg = x.alg
    if not x.terms:
        return "0"
    parts = []
    for m in sorted(x.terms):
        c = x.terms[m]
        factors = [_factor_text(alg, g, e) for g, e in runs(m)]
        parts.append(" * ".join([str(c)] + factors))
    return " + ".join(parts)


_TERM_FACTOR = re.compile(r"^([A-Za-z]+)\[([0-9,\s]+)\](?:\^(\d+))?$")


def parse_text(alg, text: str) -> Element:
    """Inverse of :func:`to_text`.  Accepts any factor order and straightens."""
    text = text.strip()
    if text == "0":
        return alg.zero()
    out = alg.zero()
    for term in text.split("+"):
        factors = [f.strip() for f in term.split("*")]
        coeff = int(factors[0])
        word = []
        for f in factors[1:]:
            m = _TERM_FACTOR.match(f)
            if not m:
                raise ValueError(f"cannot parse factor {f!r}")
            sym, label, e = m.groups()
            if sym != alg.symbol:
                raise ValueError(f"symbol {sym!r} does not belong to {alg!r}")
            idx = tuple(int(v) for v in label.split(","))
            word.extend([alg.encode(*idx)] * int(e or 1))
        out = out + alg.from_word(word, coeff)
    return out


def _label_json(alg, code, e):
    lab = alg.decode(code)
    if isinstance(alg, CommutativeAlgebra):
        return {"idx": list(lab), "e": e}
    i, j, r = lab
    return {"i": i, "j": j, "r": r, "e": e}


def element_to_json(x: Element) -> dict:
    alg = x.alg
    d = dict(alg.context())
    d["symbol"] = alg.symbol
    d["terms"] = [
        {"coeff": x.terms[m], "monomial": [_label_json(alg, g, e) for g, e in runs(m)]}
        for m in sorted(x.terms)
    ]
    return d


def element_from_json(d: dict, alg=None) -> Element:
    if alg is None:
        alg = algebra_from_context(d)
    word_terms = {}
    for t in d["terms"]:
        word = []
        for f in t["monomial"]:
            lab = f["idx"] if "idx" in f else (f["i"], f["j"], f["r"])
            word.extend([alg.encode(*lab)] * int(f["e"]))
        word_terms[tuple(word)] = int(t["coeff"])
    out = alg.zero()
    for w, c in word_terms.items():
        out = out + alg.from_word(w, c)
    return out


def algebra_from_context(d: dict):
    from .graded import current_algebra
    from .pbw import yangian

    sym = d.get("symbol", "T")
    if sym == "T":
        return yangian(int(d["n"]), int(d["p"]))
    if sym == "e":
        return current_algebra(int(d["n"]), int(d["p"]))
    raise ValueError(f"unknown symbol {sym!r}")


def dumps(obj) -> str:
    """Deterministic JSON (sorted keys, fixed separators)."""
    return json.dumps(obj, sort_keys=True, indent=2)
