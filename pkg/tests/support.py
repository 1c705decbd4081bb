"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the library's own staircase walk and
normal-form machinery where independence matters: multiplicity is recounted
by exhaustive box enumeration and by plain row reduction over the monomial
coefficient matrix.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from noeth import Polynomial, RingDescriptor
from noeth.orderings import leading_term
from noeth.ring import exp_deg, exp_divides

RX = RingDescriptor(("x",), 1)
RXY = RingDescriptor(("x", "y"), 2)
RXYZ = RingDescriptor(("x", "y", "z"), 3)
RXT = RingDescriptor(("x", "t"), 1, 1)
RXYT = RingDescriptor(("x", "y", "t"), 2, 1)
RM2 = RingDescriptor(("x", "y"), 2, 0, 2)


def variables(ring: RingDescriptor, position: int = 1):
    return [Polynomial.variable(ring, i, position) for i in range(ring.nvars)]


def random_fraction(rng: random.Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def random_exponent(rng: random.Random, nvars: int, max_deg: int):
    exp = [0] * nvars
    for _ in range(rng.randint(0, max_deg)):
        exp[rng.randrange(nvars)] += 1
    return tuple(exp)


def random_polynomial(
    rng: random.Random,
    ring: RingDescriptor,
    max_terms: int = 5,
    max_deg: int = 4,
) -> Polynomial:
    terms: dict = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.randint(1, ring.rank), random_exponent(rng, ring.nvars, max_deg))
        c = random_fraction(rng)
        if c:
            terms[key] = terms.get(key, Fraction(0)) + c
    return Polynomial(ring, {k: c for k, c in terms.items() if c})


def random_nonzero(rng, ring, max_terms=5, max_deg=4) -> Polynomial:
    while True:
        f = random_polynomial(rng, ring, max_terms, max_deg)
        if not f.is_zero():
            return f


def random_origin_primary(rng: random.Random, ring: RingDescriptor, cap: int = 12):
    """Generators of a random ideal primary at the origin, staircase <= cap.

    The pure variable powers force the radical to be the full maximal ideal,
    which makes the ideal primary; every extra generator is kept constant-free
    so the origin stays on the variety.
    """
    n = ring.nvars
    while True:
        powers = [rng.randint(1, 3) for _ in range(n)]
        box = 1
        for p in powers:
            box *= p
        if 1 < box <= cap:
            break
    gens = []
    for i, p in enumerate(powers):
        exp = tuple(p if j == i else 0 for j in range(n))
        gens.append(Polynomial.monomial(ring, exp, 1))
    for _ in range(rng.randint(1, 2)):
        f = random_polynomial(rng, ring, max_terms=3, max_deg=max(powers))
        f = f - Polynomial.constant(ring, f.coefficient((1, ring.zero_exp())))
        if not f.is_zero():
            gens.append(f)
    return gens


def random_combination(rng: random.Random, gens, max_terms=3, max_deg=3) -> Polynomial:
    """A random element of the ideal/module generated by gens."""
    ring = gens[0].ring
    scalar_ring = ring.with_rank(1)
    total = Polynomial.zero(ring)
    for g in gens:
        h = random_polynomial(rng, scalar_ring, max_terms, max_deg)
        if not h.is_zero():
            total = total + h * g
    return total


def mu_by_box_count(G) -> int:
    """Recount the staircase by exhaustive enumeration over the bounding box.

    Uses only divisibility against the leading terms, no staircase walk: for a
    finite staircase every variable has a pure-power leading term per position,
    which bounds each exponent coordinate.
    """
    ring = G.ring
    lts = [leading_term(g, G.order)[0] for g in G.elements]
    count = 0
    for pos in range(1, ring.rank + 1):
        bounds = []
        for i in range(ring.nvars):
            pure = [
                e[i]
                for p, e in lts
                if p == pos and all(e[j] == 0 for j in range(ring.nvars) if j != i)
            ]
            if not pure:
                raise AssertionError(f"no pure power of variable {i} at position {pos}")
            bounds.append(min(pure))
        for exp in product(*[range(b) for b in bounds]):
            if not any(p == pos and exp_divides(e, exp) for p, e in lts):
                count += 1
    return count


def fraction_rank(rows) -> int:
    """Row rank over Q by plain Gaussian elimination (oracle-local)."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] / lead
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def monomials_up_to(ring: RingDescriptor, degree: int):
    """All scalar monomial exponents of total degree <= degree."""
    out = []

    def rec(prefix, remaining, budget):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for e in range(budget + 1):
            rec(prefix + [e], remaining - 1, budget - e)

    rec([], ring.nvars, degree)
    return sorted(out, key=lambda e: (exp_deg(e), e))


def mu_by_linear_algebra(gens, degree: int) -> int:
    """Quotient dimension via row reduction, no Groebner machinery at all.

    Counts monomials of degree <= d minus the rank of the span of all m*g of
    degree <= d; for zero-dimensional input this stabilizes at the
    multiplicity once d is past the staircase, which the caller must ensure
    (the two-step stabilization check below guards against a short budget).
    """
    ring = gens[0].ring

    def quotient_dim(d: int) -> int:
        monos = monomials_up_to(ring, d)
        index = {e: i for i, e in enumerate(monos)}
        rows = []
        for g in gens:
            gd = g.total_degree()
            for m in monomials_up_to(ring, d - gd):
                prod = g.mul_monomial(m)
                row = [Fraction(0)] * len(monos)
                for (_, e), c in prod.terms.items():
                    row[index[e]] = c
                rows.append(row)
        return len(monos) - fraction_rank(rows)

    a, b = quotient_dim(degree), quotient_dim(degree + 1)
    assert a == b, f"quotient dimension not stabilized at degree {degree}"
    return a


def poly_derivative(f: Polynomial, i: int) -> Polynomial:
    """Partial derivative with respect to variable i."""
    terms: dict = {}
    for (pos, exp), c in f.terms.items():
        if exp[i]:
            down = tuple(e - 1 if j == i else e for j, e in enumerate(exp))
            key = (pos, down)
            terms[key] = terms.get(key, Fraction(0)) + c * exp[i]
    return Polynomial(f.ring, {k: c for k, c in terms.items() if c})


def exponential_shift_apply(gen: Polynomial, component_polys, shifts) -> Polynomial:
    """Apply gen as a differential operator to a polynomial-times-exponential.

    With u_j = p_j(x) e^(s.x), each partial d_i acts on the polynomial part
    as d_i + s_i; the symbolic frequency entries of `shifts` are polynomials
    over the component ring, so the result is exact.  Returns the polynomial
    factor of gen(d) u, which must be zero for a solution.
    """
    ring = component_polys[0].ring
    total = Polynomial.zero(ring)
    for (pos, exp), coeff in gen.terms.items():
        q = component_polys[pos - 1]
        for i, e in enumerate(exp):
            for _ in range(e):
                q = poly_derivative(q, i) + q * shifts[i]
        total = total + q.scale(coeff)
    return total


# -- from-scratch division loop over rational-function coefficients ------------
# An independent check of the coefficient-extension step: polynomials are raw
# dicts keyed by x-exponent tuples with RationalFunction values, ordered by
# plain tuple comparison (lex).


def oracle_zero(ring):
    from noeth import RationalFunction

    return RationalFunction(Polynomial.zero(ring.t_subring()))


def oracle_from(poly):
    """Dict keyed by x-exponent with rational-function values."""
    from noeth import RationalFunction
    from noeth.posdim import group_by_x

    return {key[1]: RationalFunction(tp) for key, tp in group_by_x(poly).items()}


def oracle_nf(p, basis, zero):
    p = dict(p)
    result = {}
    while p:
        e = max(p)
        c = p.pop(e)
        hit = None
        for b in basis:
            lb = max(b)
            if all(u >= v for u, v in zip(e, lb)):
                hit = (b, lb)
                break
        if hit is None:
            result[e] = c
            continue
        b, lb = hit
        shift = tuple(u - v for u, v in zip(e, lb))
        fac = c / b[lb]
        for be, bv in b.items():
            k = tuple(u + s for u, s in zip(be, shift))
            if k == e:
                continue
            nv = p.get(k, zero) - fac * bv
            if nv.is_zero():
                p.pop(k, None)
            else:
                p[k] = nv
    return result


def oracle_buchberger(polys, zero):
    basis = [dict(p) for p in polys if p]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        lf, lg = max(f), max(g)
        lcm = tuple(max(a, b) for a, b in zip(lf, lg))
        s: dict = {}
        for src, lead in ((f, lf), (g, lg)):
            shift = tuple(a - b for a, b in zip(lcm, lead))
            for e, v in src.items():
                k = tuple(a + b for a, b in zip(e, shift))
                part = v / src[lead]
                s[k] = s.get(k, zero) + (part if src is f else zero - part)
                if s[k].is_zero():
                    del s[k]
        rem = oracle_nf(s, basis, zero)
        if rem:
            basis.append(rem)
            pairs.extend((len(basis) - 1, m) for m in range(len(basis) - 1))
    return basis


def oracle_multiplicity(basis):
    """Box count below the staircase of the oracle basis leading terms."""
    lts = [max(b) for b in basis]
    n = len(lts[0])
    box = []
    for i in range(n):
        pures = [lt[i] for lt in lts if all(e == 0 for j, e in enumerate(lt) if j != i)]
        box.append(min(pures))
    count = 0
    for exp in product(*(range(b) for b in box)):
        if not any(all(u >= v for u, v in zip(exp, lt)) for lt in lts):
            count += 1
    return count
