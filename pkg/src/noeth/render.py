"""Deterministic text and JSON rendering.

Operators print in the scaled-partial grammar (`1`, `dx`, `1/2 dx^2 + dy`,
module tuples `(1/2 dx^2 + dy, -dx)`); the stored divided-power coefficient c
on alpha therefore appears as c/alpha! in front of `d<name>` factors.
Polynomials print with `^` powers and juxtaposed factors, re-parseable by the
problem-file grammar.  JSON output uses string rationals "num/den" and integer
exponent arrays with a fixed key order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import cmp_to_key

from .diffop import DiffOp, alpha_factorial
from .orderings import AnyOrder, sorted_terms_desc, term_compare
from .polynomial import Polynomial
from .ratfun import RationalFunction
from .ring import Exponent, RingDescriptor, reading_key


def format_fraction(c: Fraction) -> str:
    return str(c)


def _monomial_text(names, exp: Exponent) -> str:
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def render_polynomial(f: Polynomial, order: AnyOrder | None = None) -> str:
    """Polynomial text; vectors over a rank > 1 ring render as [f1, ..., fs]."""
    ring = f.ring
    if ring.rank > 1:
        entries = []
        for pos in range(1, ring.rank + 1):
            sub = Polynomial(ring.with_rank(1), {
                (1, exp): c for (p, exp), c in f.terms.items() if p == pos
            })
            entries.append(render_polynomial(sub, order))
        return "[" + ", ".join(entries) + "]"
    if f.is_zero():
        return "0"
    if order is not None:
        keys = [k for k, _ in sorted_terms_desc(f, order)]
    else:
        keys = sorted(f.terms, key=reading_key)
    pieces = []
    for idx, key in enumerate(keys):
        c = f.terms[key]
        mono = _monomial_text(ring.names, key[1])
        body = _scaled_monomial_text(c, mono, leading=(idx == 0))
        pieces.append(body)
    return "".join(pieces)


def _scaled_monomial_text(c, mono: str, leading: bool) -> str:
    """One rendered term, including its sign/joiner prefix."""
    if isinstance(c, RationalFunction) and c.is_polynomial() and c.num.total_degree() <= 0:
        # Constant rational functions print exactly like plain rationals.
        c = c.num.coefficient((1, c.num.ring.zero_exp()))
    if isinstance(c, RationalFunction):
        text = _ratfun_text(c)
        if text.startswith("-"):
            joined = f"{text[1:]} {mono}" if mono else text[1:]
            return f"-{joined}" if leading else f" - {joined}"
        joined = f"{text} {mono}" if mono else text
        return joined if leading else f" + {joined}"
    neg = c < 0
    mag = -c if neg else c
    if mono and mag == 1:
        body = mono
    elif mono:
        body = f"{mag} {mono}"
    else:
        body = str(mag)
    if leading:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def _ratfun_text(c: RationalFunction) -> str:
    num = render_polynomial(c.num)
    if c.is_polynomial():
        if len(c.num.terms) == 1:
            ((key, k),) = c.num.terms.items()
            mono = _monomial_text(c.num.ring.names, key[1])
            if mono and k == 1:
                return mono
            if mono and k == -1:
                return f"-{mono}"
            if mono:
                return f"{k} {mono}"
            return str(k)
        return f"({num})"
    den = render_polynomial(c.den)
    left = num if len(c.num.terms) == 1 else f"({num})"
    right = den if len(c.den.terms) == 1 else f"({den})"
    return f"{left}/{right}"


def render_module_term(ring: RingDescriptor, key) -> str:
    """A staircase or corner entry such as `1`, `x y`, or `y*e1`."""
    pos, exp = key
    mono = _monomial_text(ring.names, exp) or "1"
    if ring.rank == 1:
        return mono
    return f"e{pos}" if mono == "1" else f"{mono}*e{pos}"


def _operator_keys(ring: RingDescriptor, keys, order: AnyOrder | None) -> list:
    """Derivative keys sorted descending (under order when given)."""
    keys = list(keys)
    if order is None:
        keys.sort(key=reading_key, reverse=True)
        return keys
    pad = (0,) * ring.t_count

    def cmp(a, b):
        return term_compare(order, (a[0], a[1] + pad), (b[0], b[1] + pad), ring)

    keys.sort(key=cmp_to_key(cmp), reverse=True)
    return keys


def _operator_component_text(ring: RingDescriptor, terms, order: AnyOrder | None) -> str:
    if not terms:
        return "0"
    pieces = []
    for idx, key in enumerate(_operator_keys(ring, terms, order)):
        scaled = terms[key] * Fraction(1, alpha_factorial(key[1]))
        mono = " ".join(
            f"d{name}^{e}" if e > 1 else f"d{name}"
            for name, e in zip(ring.x_names, key[1])
            if e
        )
        pieces.append(_scaled_monomial_text(scaled, mono, leading=(idx == 0)))
    return "".join(pieces)


def render_operator(L: DiffOp, order: AnyOrder | None = None) -> str:
    ring = L.ring
    if ring.rank == 1:
        return _operator_component_text(ring, L.terms, order)
    entries = []
    for pos in range(1, ring.rank + 1):
        sub = {key[1]: c for key, c in L.terms.items() if key[0] == pos}
        entries.append(
            _operator_component_text(ring, {(1, a): c for a, c in sub.items()}, order)
        )
    return "(" + ", ".join(entries) + ")"


# -- JSON ------------------------------------------------------------------------


def coeff_string(c) -> str:
    if isinstance(c, RationalFunction):
        return _ratfun_text(c)
    return str(c)


def polynomial_json(f: Polynomial, order: AnyOrder | None = None) -> dict:
    if order is not None:
        items = sorted_terms_desc(f, order)
    else:
        items = sorted(f.terms.items(), key=lambda kv: reading_key(kv[0]))
    return {
        "terms": [
            {"pos": pos, "exp": list(exp), "coeff": coeff_string(c)}
            for (pos, exp), c in items
        ]
    }


def operator_json(L: DiffOp, order: AnyOrder | None = None) -> dict:
    keys = _operator_keys(L.ring, L.terms, order)
    return {
        "terms": [
            {"pos": pos, "alpha": list(alpha), "coeff": coeff_string(L.terms[(pos, alpha)])}
            for pos, alpha in keys
        ]
    }


def ring_json(ring: RingDescriptor) -> dict:
    return {
        "names": list(ring.names),
        "x_count": ring.x_count,
        "t_count": ring.t_count,
        "rank": ring.rank,
    }


def emit_json(doc: dict) -> str:
    return json.dumps(doc, indent=2)
