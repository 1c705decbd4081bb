"""Dual operator bases for primary ideals and submodules with finite staircase.

Three constructions of the same span are provided: a forward pass reading
normal-form coefficients, a backward pass anti-rewriting corner monomials, and
a degree-climbing linear solve.  All return a NoetherianBasis whose operator
list is in the canonical row form anchored at the residual monomials, so
results from different routes compare equal term by term.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from itertools import product as iter_product
from typing import Sequence

from .diffop import (
    DiffOp,
    apply_at,
    canonical_operator_basis,
    closure,
    dual_of_polynomial,
    is_closed,
    operator_columns,
)
from .errors import (
    NoethError,
    NotClosedError,
    RingMismatchError,
    UnsolvableSystemError,
    ZeroPolynomialError,
)
from .groebner import GroebnerBasis, buchberger, corner_monomials, normal_form, staircase
from .linalg import nullspace, reduce_against, rref
from .orderings import AnyOrder, as_module_order, leading_term
from .polynomial import Polynomial
from .ring import Exponent, RingDescriptor, exp_add, exp_deg, exp_divides, exp_sub, reading_key


class NoetherianBasis:
    """A canonical basis of the dual space attached to a primary input."""

    __slots__ = ("operators", "multiplicity", "center", "method", "source")

    def __init__(self, operators, multiplicity, center, method, source):
        object.__setattr__(self, "operators", tuple(operators))
        object.__setattr__(self, "multiplicity", multiplicity)
        object.__setattr__(self, "center", tuple(center))
        object.__setattr__(self, "method", method)
        object.__setattr__(self, "source", source)

    def __setattr__(self, name, value):
        raise AttributeError("NoetherianBasis is immutable")

    def __iter__(self):
        return iter(self.operators)

    def __len__(self):
        return len(self.operators)

    def validate(self) -> None:
        """Check the structural invariants; raise NoethError on failure."""
        ops = self.operators
        if len(ops) != self.multiplicity:
            raise NoethError("operator count does not match the multiplicity")
        columns = operator_columns(ops)
        rows = [[L.terms.get(col, Fraction(0) * _unit_of(ops)) for col in columns] for L in ops]
        reduced, _ = rref(rows)
        if len(reduced) != len(ops):
            raise NoethError("operators are linearly dependent")
        if not is_closed(ops):
            raise NoethError("operator span is not stable under differentiation lowering")
        if ops and ops[0].degree() != 0:
            raise NoethError("the first operator must be an order-zero evaluation")
        for L in ops:
            if L.degree() >= self.multiplicity:
                raise NoethError("operator order exceeds the multiplicity bound")


def _unit_of(ops) -> object:
    for L in ops:
        for c in L.terms.values():
            return c / c
    return Fraction(1)


def translate_to_origin(gens: Sequence[Polynomial], point) -> list[Polynomial]:
    """Rewrite each generator in coordinates centered at point."""
    return [g.substitute_affine(point) for g in gens]


def monomial_keys_below(ring: RingDescriptor, bound: int) -> list[tuple[int, Exponent]]:
    """All (position, exponent) keys with total degree < bound, reading order."""
    n = ring.x_count
    keys = []
    for exp in iter_product(*(range(bound) for _ in range(n))):
        if exp_deg(exp) < bound:
            for pos in range(1, ring.rank + 1):
                keys.append((pos, exp))
    keys.sort(key=reading_key)
    return keys


def _prepare(G, center):
    """Translate if needed and return (reduced basis at origin, center tuple)."""
    if not isinstance(G, GroebnerBasis):
        raise NoethError("expected a Groebner basis; run buchberger() first")
    ring = G.ring
    if ring.t_count:
        raise NoethError("variables after the separator require the parameter-coefficient construction")
    if center is None:
        center = (Fraction(0),) * ring.nvars
    else:
        center = tuple(Fraction(c) if isinstance(c, int) else c for c in center)
        if len(center) != ring.nvars:
            raise RingMismatchError("center length does not match variable count")
    if any(center):
        moved = translate_to_origin(list(G.elements), center)
        G0 = buchberger(moved, G.order, ring)
    elif G.reduced:
        G0 = G
    else:
        G0 = buchberger(list(G.elements), G.order, ring)
    if ring.rank == 1:
        origin = (Fraction(0),) * ring.nvars
        for g in G0.elements:
            if g.evaluate(origin) != 0:
                raise NoethError("the center is not a zero of the input ideal")
    return G0, center


def noetherian_forward(G: GroebnerBasis, center=None) -> NoetherianBasis:
    """Taylor-coefficient construction: one operator per residual monomial."""
    G0, center = _prepare(G, center)
    ring = G0.ring
    stair = staircase(G0)
    mu = stair.multiplicity
    rows: dict[tuple[int, Exponent], dict] = {beta: {} for beta in stair.monomials}
    for key in monomial_keys_below(ring, mu):
        pos, alpha = key
        nf = normal_form(Polynomial.monomial(ring, alpha, 1, pos), G0)
        for (p, exp), c in nf.terms.items():
            rows[(p, exp)][key] = c
    ops = [DiffOp(ring, rows[beta], center) for beta in stair.monomials]
    basis = NoetherianBasis(ops, mu, center, "forward", G0)
    basis.validate()
    return basis


# -- backward construction -----------------------------------------------------


def backward_step(state: Polynomial, g: Polynomial, order: AnyOrder):
    """One anti-rewriting move of a single-term state against a generator.

    Rewriting sends LT(g) to -tail(g)/LC(g); this is its transpose.  Every
    non-leading term tau of g that divides the state's term pushes the state
    up to (state / tau) * LT(g) with coefficient -c_tau / LC(g).  Returns
    None when no non-leading term divides the state.  The caller must keep
    only targets whose division rewriter is g itself, or targets shared by
    several relations would be counted once per relation.
    """
    if len(state.terms) != 1:
        raise ZeroPolynomialError("backward states must be single terms")
    ((skey, sc),) = state.terms.items()
    lt_key, lc = leading_term(g, order)
    out = {}
    for tkey, tc in g.terms.items():
        if tkey == lt_key or tkey[0] != skey[0] or not exp_divides(tkey[1], skey[1]):
            continue
        target = (lt_key[0], exp_add(lt_key[1], exp_sub(skey[1], tkey[1])))
        out[target] = -(tc / lc) * sc
    return Polynomial(g.ring, out) if out else None


def _accumulate_backward(corner, G0: GroebnerBasis, mu: int) -> Polynomial:
    """Corner coefficient of every normal form, collected as a polynomial.

    The coefficient at key k is the corner-monomial coefficient of NF(x^k).
    Keys are visited in ascending term order; every move strictly increases
    the order, so the smallest pending key always carries its final value.
    Keys of total degree >= mu normal-form to zero and are dropped.
    """
    ring = G0.ring
    mo = as_module_order(G0.order)
    leads = [(g, leading_term(g, G0.order)[0]) for g in G0.elements]

    def rewriter(key):
        for g, lt in leads:
            if lt[0] == key[0] and exp_divides(lt[1], key[1]):
                return g
        return None

    ascending = cmp_to_key(lambda a, b: mo.compare(a, b, ring))
    coeffs = {corner: Fraction(1)}
    pending = {corner}
    total = {}
    while pending:
        key = min(pending, key=ascending)
        pending.discard(key)
        c = coeffs.pop(key)
        if not c:
            continue
        total[key] = c
        state = Polynomial.monomial(ring, key[1], c, key[0])
        for g, _ in leads:
            pushed = backward_step(state, g, G0.order)
            if pushed is None:
                continue
            for tkey, tc in pushed.terms.items():
                if exp_deg(tkey[1]) >= mu or rewriter(tkey) is not g:
                    continue
                coeffs[tkey] = coeffs.get(tkey, Fraction(0)) + tc
                pending.add(tkey)
    return Polynomial(ring, total)


def noetherian_backward(G: GroebnerBasis, center=None) -> NoetherianBasis:
    """Anti-rewriting construction seeded at the corner monomials."""
    G0, center = _prepare(G, center)
    ring = G0.ring
    stair = staircase(G0)
    mu = stair.multiplicity
    duals = []
    for corner in corner_monomials(stair, G0):
        accumulated = _accumulate_backward(corner, G0, mu)
        duals.append(dual_of_polynomial(accumulated, center))
    closed = closure(duals)
    ops = canonical_operator_basis(closed, ring, center, pivot_keys=list(stair.monomials))
    basis = NoetherianBasis(ops, mu, center, "backward", G0)
    basis.validate()
    return basis


# -- linear-solve construction ---------------------------------------------------


def noetherian_linear(
    gens: Sequence[Polynomial],
    order: AnyOrder,
    multiplicity: int | None = None,
    center=None,
) -> NoetherianBasis:
    """Degree-climbing construction from closure and annihilation constraints."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ZeroPolynomialError("no nonzero generators")
    ring = gens[0].ring
    G = buchberger(gens, order, ring)
    G0, center = _prepare(G, center)
    stair = staircase(G0)
    mu = stair.multiplicity
    if multiplicity is not None and multiplicity != mu:
        raise NoethError(f"requested multiplicity {multiplicity} but the staircase has {mu}")
    targets = translate_to_origin(gens, center) if any(center) else gens

    found: list[DiffOp] = []
    while len(found) < mu:
        pool: list[DiffOp] = [
            DiffOp.identity(ring, position=pos) for pos in range(1, ring.rank + 1)
        ]
        for L in found:
            for j in range(ring.x_count):
                pool.append(L.rho(j))
        uniq: list[DiffOp] = []
        seen_terms = set()
        for P in pool:
            key = frozenset(P.terms.items())
            if key and key not in seen_terms:
                seen_terms.add(key)
                uniq.append(P)
        pool = uniq

        span_cols = operator_columns(found) if found else []
        span_rows = [[L.terms.get(col, Fraction(0)) for col in span_cols] for L in found]
        reduced_span, span_pivots = rref(span_rows)

        # Unknowns: one coefficient per pool member.  Constraints: every
        # generator is annihilated, and each lowering image stays in the
        # current span.
        constraints: list[list[Fraction]] = []
        for g in targets:
            constraints.append([apply_at(P, g) for P in pool])
        col_index = {k: i for i, k in enumerate(span_cols)}
        for j in range(ring.x_count):
            residues = []
            for P in pool:
                image = P.sigma(j)
                vec = [image.terms.get(col, Fraction(0)) for col in span_cols]
                extra = {k: v for k, v in image.terms.items() if k not in col_index}
                rem = reduce_against(vec, reduced_span, span_pivots) if span_cols else vec
                residues.append((rem, extra))
            for ci in range(len(span_cols)):
                constraints.append([res[0][ci] for res in residues])
            outside = sorted({k for _, extra in residues for k in extra}, key=reading_key)
            for k in outside:
                constraints.append([res[1].get(k, Fraction(0)) for res in residues])

        solutions = nullspace(constraints, len(pool), Fraction(0), Fraction(1))
        added = 0
        for sol in solutions:
            # Solve at the origin; the real center is attached at the end.
            L = DiffOp(ring, {})
            for c, P in zip(sol, pool):
                if c:
                    L = L + P.scale(c)
            if L.is_zero():
                continue
            trial = found + [L]
            cols = operator_columns(trial)
            rows = [[M.terms.get(col, Fraction(0)) for col in cols] for M in trial]
            red, _ = rref(rows)
            if len(red) == len(trial):
                found.append(L)
                added += 1
                if len(found) == mu:
                    break
        if added == 0:
            raise UnsolvableSystemError(
                f"no new operator at span size {len(found)} (multiplicity {mu})"
            )

    ops = canonical_operator_basis(found, ring, center, pivot_keys=list(stair.monomials))
    basis = NoetherianBasis(ops, mu, center, "linear", G0)
    basis.validate()
    return basis


# -- inverse problem and membership ----------------------------------------------


def ideal_from_conditions(
    ops: Sequence[DiffOp], degree_bound: int, order: AnyOrder
) -> GroebnerBasis:
    """Generators (up to degree_bound) of all polynomials killed by the span."""
    ops = [L for L in ops if not L.is_zero()]
    if not ops:
        raise ZeroPolynomialError("no operators given")
    ring = ops[0].ring
    if ring.t_count:
        raise NoethError("conditions over parameter coefficients are not supported")
    if not is_closed(ops):
        raise NotClosedError("the operator span is not stable under lowering")
    columns = monomial_keys_below(ring, degree_bound + 1)
    monos = [Polynomial.monomial(ring, exp, 1, pos) for pos, exp in columns]
    rows = [[apply_at(L, m) for m in monos] for L in ops]
    kernel = nullspace(rows, len(columns), Fraction(0), Fraction(1))
    polys = []
    for vec in kernel:
        p = Polynomial.zero(ring)
        for c, m in zip(vec, monos):
            if c:
                p = p + m.scale(c)
        polys.append(p)
    if not polys:
        raise NoethError("the conditions admit no polynomial below the degree bound")
    return buchberger(polys, order, ring)


def membership_by_operators(f: Polynomial, basis: NoetherianBasis) -> bool:
    """True when every operator annihilates f at the center."""
    return all(apply_at(L, f) == 0 for L in basis.operators)
