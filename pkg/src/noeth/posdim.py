"""Dual operators for primary ideals whose variety has positive dimension.

The variable list is split into a leading x-block and a trailing parameter
block.  When the input is primary, contracts trivially to the parameter ring,
and is in normal position (monic in each x-variable, origin variety after
extension), the ideal extends to a zero-dimensional one over rational
functions in the parameters.  The extended dual basis is computed without
rational-function normal forms: each coefficient is read off from ordinary
normal forms of parameter-power multiples of the x-monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .diffop import DiffOp
from .errors import (
    IterationLimitError,
    NoethError,
    NormalPositionError,
    NotEliminationOrderError,
    ZeroPolynomialError,
)
from .groebner import GroebnerBasis, buchberger, eliminate, normal_form, staircase
from .noetherian import NoetherianBasis, monomial_keys_below, noetherian_forward
from .orderings import (
    AnyOrder,
    DegLex,
    is_product_compatible,
    leading_term,
    sigma_x_order,
    term_compare,
)
from .polynomial import Polynomial
from .ratfun import RationalFunction, divexact, poly_gcd, poly_lcm
from .ring import Exponent, RingDescriptor, reading_key, t_part, x_part


@dataclass(frozen=True)
class NormalPositionReport:
    """Outcome of the three operational preconditions."""

    contraction_trivial: bool
    contraction_witness: Polynomial | None
    monic_powers: tuple[int | None, ...]
    extended_variety_is_origin: bool
    gamma: Exponent

    @property
    def ok(self) -> bool:
        return (
            self.contraction_trivial
            and all(e is not None for e in self.monic_powers)
            and self.extended_variety_is_origin
        )

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "contraction_trivial": self.contraction_trivial,
            "monic_powers": list(self.monic_powers),
            "extended_variety_is_origin": self.extended_variety_is_origin,
            "gamma": list(self.gamma),
        }


def _require_posdim_input(ring: RingDescriptor, order: AnyOrder) -> None:
    if ring.rank != 1:
        raise NoethError("the parameter-coefficient construction handles ideals only")
    if not is_product_compatible(order, ring):
        raise NotEliminationOrderError(
            "a block order comparing the x-variables first is required"
        )


def _report_from_basis(G: GroebnerBasis) -> NormalPositionReport:
    ring = G.ring
    residual = eliminate(G, G.order)
    witness = residual[0] if residual else None
    monic: list[int | None] = [None] * ring.x_count
    origin_ok = [False] * ring.x_count
    gamma = [0] * ring.t_count
    for g in G.elements:
        (pos, exp), _ = leading_term(g, G.order)
        xe = x_part(ring, exp)
        te = t_part(ring, exp)
        gamma = [a + b for a, b in zip(gamma, te)]
        support = [i for i, e in enumerate(xe) if e]
        if len(support) == 1:
            i = support[0]
            # The parameter part of the leading term turns into a coefficient
            # after extension, so any pure x-power qualifies for the origin
            # check; monicity additionally needs a parameter-free lead.
            origin_ok[i] = True
            if not any(te) and (monic[i] is None or xe[i] < monic[i]):
                monic[i] = xe[i]
    return NormalPositionReport(
        contraction_trivial=not residual,
        contraction_witness=witness,
        monic_powers=tuple(monic),
        extended_variety_is_origin=all(origin_ok),
        gamma=tuple(gamma),
    )


def check_normal_position(
    gens: Sequence[Polynomial], order: AnyOrder, ring: RingDescriptor | None = None
) -> NormalPositionReport:
    """Report whether the operational preconditions hold for this input."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ZeroPolynomialError("no nonzero generators")
    if ring is None:
        ring = gens[0].ring
    _require_posdim_input(ring, order)
    G = buchberger(gens, order, ring)
    return _report_from_basis(G)


def group_by_x(f: Polynomial) -> dict[tuple[int, Exponent], Polynomial]:
    """Split f by x-monomial; values are polynomials in the parameter block."""
    ring = f.ring
    tring = ring.t_subring()
    buckets: dict[tuple[int, Exponent], dict] = {}
    for (pos, exp), c in f.terms.items():
        xkey = (pos, x_part(ring, exp))
        buckets.setdefault(xkey, {})[(1, t_part(ring, exp))] = c
    return {k: Polynomial(tring, d) for k, d in buckets.items()}


def extend_to_rational_coeffs(G: GroebnerBasis) -> GroebnerBasis:
    """Rewrite a basis over the x-block with rational-function coefficients.

    Elements are made monic but deliberately not interreduced, so the leading
    terms stay exactly the x-parts of the original leading terms.
    """
    ring = G.ring
    _require_posdim_input(ring, G.order)
    xring = ring.x_subring()
    sx = sigma_x_order(G.order, ring)
    elements = []
    for g in G.elements:
        (pos, exp), _ = leading_term(g, G.order)
        lead_x = (pos, x_part(ring, exp))
        terms = {key: RationalFunction(tpoly) for key, tpoly in group_by_x(g).items()}
        ext = Polynomial(xring, terms)
        (ek, ec) = leading_term(ext, sx)
        if ek != lead_x:
            raise NoethError("the order does not preserve leading terms under extension")
        one = ec / ec
        if ec != one:
            ext = ext.scale(one / ec)
        elements.append(ext)
    elements.sort(
        key=cmp_to_key(
            lambda a, b: term_compare(sx, leading_term(a, sx)[0], leading_term(b, sx)[0], xring)
        ),
        reverse=True,
    )
    return GroebnerBasis(xring, sx, tuple(elements), reduced=False)


def multiplicity_extended(G: GroebnerBasis) -> int:
    """Multiplicity of the extension over rational parameter coefficients."""
    Gx = extend_to_rational_coeffs(G) if G.ring.t_count else G
    return staircase(Gx).multiplicity


def noetherian_positive(
    gens: Sequence[Polynomial],
    order: AnyOrder,
    ring: RingDescriptor | None = None,
    schedule: str = "step",
    cleanup: bool = True,
) -> NoetherianBasis:
    """Dual basis with parameter-dependent coefficients.

    schedule "step" multiplies by the parameter power t^gamma one round at a
    time and stops as soon as the residual x-monomials are separated;
    schedule "power" applies the single worst-case power t^(mu*gamma).
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ZeroPolynomialError("no nonzero generators")
    if ring is None:
        ring = gens[0].ring
    _require_posdim_input(ring, order)
    if schedule not in ("step", "power"):
        raise NoethError(f"unknown schedule {schedule!r}")
    G = buchberger(gens, order, ring)
    if ring.t_count == 0:
        inner = noetherian_forward(G)
        return NoetherianBasis(
            inner.operators, inner.multiplicity, inner.center, "positive", G
        )
    report = _report_from_basis(G)
    if not report.ok:
        raise NormalPositionError(
            "the input is not in normal position for the chosen variable split", report
        )
    Gx = extend_to_rational_coeffs(G)
    stair = staircase(Gx)
    mu = stair.multiplicity
    residual_set = set(stair.monomials)

    xzero = (0,) * ring.x_count
    columns = monomial_keys_below(ring.x_subring(), mu)
    states = {
        (pos, xe): Polynomial.monomial(ring, xe + (0,) * ring.t_count, 1, pos)
        for pos, xe in columns
    }

    def x_groups() -> set:
        keys = set()
        for s in states.values():
            for pos, exp in s.terms:
                keys.add((pos, x_part(ring, exp)))
        return keys

    if schedule == "power":
        tpow = Polynomial.monomial(ring, xzero + tuple(mu * e for e in report.gamma))
        states = {k: normal_form(tpow * s, G) for k, s in states.items()}
        if x_groups() != residual_set:
            raise IterationLimitError(
                "the one-shot parameter power did not separate the residual monomials"
            )
    else:
        tpow = Polynomial.monomial(ring, xzero + report.gamma)
        cap = mu * max(1, sum(g.total_degree() for g in G.elements))
        rounds = 0
        while x_groups() != residual_set:
            rounds += 1
            if rounds > cap:
                raise IterationLimitError(
                    f"no separation after {cap} parameter multiplications"
                )
            states = {k: normal_form(tpow * s, G) for k, s in states.items()}

    rows: dict[tuple[int, Exponent], dict] = {beta: {} for beta in stair.monomials}
    for col, state in states.items():
        for beta, tpoly in group_by_x(state).items():
            rows[beta][col] = RationalFunction(tpoly)
    ops = [DiffOp(ring, rows[beta]) for beta in stair.monomials]
    if cleanup:
        ops = cleanup_operators(ops)
    basis = NoetherianBasis(ops, mu, (Fraction(0),) * ring.nvars, "positive", G)
    basis.validate()
    return basis


def cleanup_operators(ops: Sequence[DiffOp]) -> list[DiffOp]:
    """Clear denominators, strip common polynomial factors, normalize scale."""
    out = []
    for L in ops:
        if L.is_zero() or not all(
            isinstance(c, RationalFunction) for c in L.terms.values()
        ):
            out.append(L)
            continue
        dens = [c.den for c in L.terms.values()]
        common_den = dens[0]
        for d in dens[1:]:
            common_den = poly_lcm(common_den, d)
        nums = {
            key: c.num * divexact(common_den, c.den) for key, c in L.terms.items()
        }
        shared = None
        for p in nums.values():
            shared = p if shared is None else poly_gcd(shared, p)
        if shared is not None and shared.total_degree() > 0:
            nums = {key: divexact(p, shared) for key, p in nums.items()}
        anchor = min(nums, key=reading_key)
        _, lc = leading_term(nums[anchor], DegLex())
        if lc != 1:
            nums = {key: p.scale(Fraction(1) / lc) for key, p in nums.items()}
        out.append(
            DiffOp(L.ring, {k: RationalFunction(p) for k, p in nums.items()}, L.center)
        )
    return out


def member_positive(f: Polynomial, basis: NoetherianBasis) -> bool:
    """Membership through parameter-coefficient operators.

    Valid for families produced by noetherian_positive: f belongs to the
    ideal exactly when every operator pairs to zero with f's x-monomial
    coefficients, viewed as rational functions of the parameters.
    """
    groups = group_by_x(f)
    for L in basis.operators:
        total = None
        for key, c in L.terms.items():
            g = groups.get(key)
            if g is None:
                continue
            val = RationalFunction(g) * c
            total = val if total is None else total + val
        if total is not None and not total.is_zero():
            return False
    return True
