"""Buchberger's algorithm, normal forms, staircases, and elimination.

Works uniformly for ideals and for submodules of a free module: every term
carries a (position, exponent) key and S-pairs are only formed between
elements whose leading terms share a position.  Output bases are reduced and
monic, hence canonical for the given ordering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key

from .errors import (
    InfiniteStaircaseError,
    NotEliminationOrderError,
    RingMismatchError,
    ZeroPolynomialError,
)
from .orderings import AnyOrder, as_module_order, is_elimination_for, leading_term
from .polynomial import Polynomial
from .ring import (
    RingDescriptor,
    TermKey,
    exp_add,
    exp_divides,
    exp_lcm,
    exp_sub,
    reading_key,
    x_part,
)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingDescriptor
    order: AnyOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    def leading_terms(self) -> list[tuple[TermKey, object]]:
        return [leading_term(g, self.order) for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _monic(f: Polynomial, order: AnyOrder) -> Polynomial:
    _, lc = leading_term(f, order)
    one = lc / lc
    return f if lc == one else f.scale(one / lc)


def _divides(lt: TermKey, key: TermKey) -> bool:
    return lt[0] == key[0] and exp_divides(lt[1], key[1])


def one_step_reduce(f: Polynomial, g: Polynomial, order: AnyOrder) -> Polynomial | None:
    """Rewrite the largest reducible term of f by g; None when nothing applies."""
    if f.is_zero():
        return None
    mo = as_module_order(order)
    (gkey, gc) = leading_term(g, order)
    best = None
    for key in f.terms:
        if _divides(gkey, key):
            if best is None or mo.compare(key, best, f.ring) > 0:
                best = key
    if best is None:
        return None
    coeff = f.terms[best] / gc
    return f - g.mul_monomial(exp_sub(best[1], gkey[1]), coeff)


def normal_form(f: Polynomial, basis, order: AnyOrder | None = None) -> Polynomial:
    """Remainder of f under the division algorithm, reducing the largest term first.

    Basis elements are tried in stored order, which makes the result canonical
    for a fixed basis; for a reduced Groebner basis it is the unique normal form.
    """
    if isinstance(basis, GroebnerBasis):
        if order is None:
            order = basis.order
        elements = basis.elements
    else:
        elements = tuple(basis)
        if order is None:
            raise ValueError("normal_form needs an ordering when given a plain sequence")
    mo = as_module_order(order)
    lts = [leading_term(g, order) for g in elements]
    remainder: dict[TermKey, object] = {}
    p = f
    while not p.is_zero():
        best = None
        for key in p.terms:
            if best is None or mo.compare(key, best, p.ring) > 0:
                best = key
        c = p.terms[best]
        hit = None
        for g, (gkey, gc) in zip(elements, lts):
            if _divides(gkey, best):
                hit = (g, gkey, gc)
                break
        if hit is None:
            remainder[best] = c
            p = p - Polynomial.monomial(p.ring, best[1], c, best[0])
        else:
            g, gkey, gc = hit
            p = p - g.mul_monomial(exp_sub(best[1], gkey[1]), c / gc)
    return Polynomial(f.ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: AnyOrder) -> Polynomial:
    """S-polynomial; zero when the leading terms sit in different positions."""
    (fk, fc) = leading_term(f, order)
    (gk, gc) = leading_term(g, order)
    if fk[0] != gk[0]:
        return Polynomial.zero(f.ring)
    lcm = exp_lcm(fk[1], gk[1])
    inv_f = (fc / fc) / fc
    inv_g = (gc / gc) / gc
    return f.mul_monomial(exp_sub(lcm, fk[1]), inv_f) - g.mul_monomial(exp_sub(lcm, gk[1]), inv_g)


def buchberger(gens, order: AnyOrder, ring: RingDescriptor | None = None) -> GroebnerBasis:
    """Reduced monic Groebner basis, deterministic for a given ordering.

    Pairs are selected by smallest lcm (normal strategy); the coprime-lead and
    chain criteria prune useless reductions.
    """
    gens = [g for g in gens if g is not None and not g.is_zero()]
    if ring is None:
        if not gens:
            raise ZeroPolynomialError("no generators and no ring given")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators live over different rings")
    mo = as_module_order(order)

    basis: list[Polynomial] = []
    for g in gens:
        r = normal_form(g, basis, order) if basis else g
        if not r.is_zero():
            basis.append(_monic(r, order))

    lts: list[TermKey] = [leading_term(g, order)[0] for g in basis]

    def lcm_key(i: int, j: int) -> TermKey | None:
        a, b = lts[i], lts[j]
        if a[0] != b[0]:
            return None
        return (a[0], exp_lcm(a[1], b[1]))

    pending: set[tuple[int, int]] = set()
    processed: set[tuple[int, int]] = set()
    for i, j in itertools.combinations(range(len(basis)), 2):
        if lcm_key(i, j) is not None:
            pending.add((i, j))

    def pair_sort(p, q):
        lp, lq = lcm_key(*p), lcm_key(*q)
        c = mo.compare(lp, lq, ring)
        if c:
            return c
        return -1 if p < q else (1 if p > q else 0)

    while pending:
        pair = min(pending, key=cmp_to_key(pair_sort))
        pending.discard(pair)
        processed.add(pair)
        i, j = pair
        lk = lcm_key(i, j)
        # coprime leading terms: S-pair reduces to zero (ideals only; module
        # tails spread over other positions, so the product criterion fails)
        if ring.rank == 1 and lk[1] == exp_add(lts[i][1], lts[j][1]):
            continue
        # chain criterion: a third element divides the lcm and both side
        # pairs were already handled
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(lts[k], lk):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in processed and pjk in processed:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = normal_form(s, basis, order)
        if r.is_zero():
            continue
        basis.append(_monic(r, order))
        lts.append(leading_term(basis[-1], order)[0])
        new = len(basis) - 1
        for k in range(new):
            if lcm_key(k, new) is not None:
                pending.add((k, new))

    # minimalize: drop elements whose lead is divisible by another kept lead
    order_idx = sorted(range(len(basis)), key=cmp_to_key(lambda a, b: mo.compare(lts[a], lts[b], ring)))
    kept: list[int] = []
    for idx in order_idx:
        if not any(_divides(lts[k], lts[idx]) for k in kept):
            kept.append(idx)
    minimal = [basis[idx] for idx in kept]

    # interreduce tails
    reduced: list[Polynomial] = list(minimal)
    for i in range(len(reduced)):
        others = reduced[:i] + reduced[i + 1 :]
        reduced[i] = _monic(normal_form(reduced[i], others, order), order)

    reduced.sort(key=cmp_to_key(lambda a, b: mo.compare(leading_term(a, order)[0], leading_term(b, order)[0], ring)), reverse=True)
    return GroebnerBasis(ring, order, tuple(reduced), True)


@dataclass(frozen=True)
class Staircase:
    ring: RingDescriptor
    monomials: tuple[TermKey, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, key: TermKey) -> bool:
        return key in set(self.monomials)


def staircase(G: GroebnerBasis) -> Staircase:
    """Monomials outside the leading-term module; error when infinite.

    Finiteness needs, for every position, a pure power of every variable among
    the leading terms (a constant lead empties its position).
    """
    ring = G.ring
    lts = [key for key, _ in G.leading_terms()]
    residual: list[TermKey] = []
    for pos in range(1, ring.rank + 1):
        pos_lts = [exp for p, exp in lts if p == pos]
        if any(not any(exp) for exp in pos_lts):
            continue  # unit leading term: nothing residual in this position
        bounds = []
        for j in range(ring.nvars):
            pure = [exp[j] for exp in pos_lts if all(e == 0 for i, e in enumerate(exp) if i != j)]
            if not pure:
                raise InfiniteStaircaseError(
                    f"infinite staircase: no pure power of {ring.names[j]} in the leading terms"
                )
            bounds.append(min(pure))
        for exp in itertools.product(*(range(b) for b in bounds)):
            if not any(exp_divides(lexp, exp) for lexp in pos_lts):
                residual.append((pos, exp))
    residual.sort(key=reading_key)
    return Staircase(ring, tuple(residual))


def corner_monomials(stair: Staircase, G: GroebnerBasis) -> tuple[TermKey, ...]:
    """Residual monomials pushed into the leading-term module by every variable."""
    ring = G.ring
    lts = [key for key, _ in G.leading_terms()]
    corners = []
    for (pos, exp) in stair.monomials:
        pos_lts = [lexp for p, lexp in lts if p == pos]
        ok = True
        for j in range(ring.nvars):
            up = tuple(e + 1 if i == j else e for i, e in enumerate(exp))
            if not any(exp_divides(lexp, up) for lexp in pos_lts):
                ok = False
                break
        if ok:
            corners.append((pos, exp))
    return tuple(sorted(corners, key=reading_key))


def eliminate(gens, order: AnyOrder, ring: RingDescriptor | None = None) -> tuple[Polynomial, ...]:
    """Generators of the contraction to the parameter subring.

    Requires an ordering under which a parameter-only leading term certifies a
    parameter-only element.
    """
    if isinstance(gens, GroebnerBasis):
        G = gens
        ring = G.ring
    else:
        if ring is None:
            ring = gens[0].ring
        G = buchberger(gens, order, ring)
    if not is_elimination_for(G.order, ring):
        raise NotEliminationOrderError(f"{G.order} cannot eliminate the differential block")
    out = []
    for g in G.elements:
        if all(not any(x_part(ring, exp)) for (_, exp) in g.terms):
            out.append(g)
    return tuple(out)


def is_member(f: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(f, G).is_zero()
