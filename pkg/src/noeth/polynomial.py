"""Sparse polynomials and free-module vectors with exact coefficients.

A polynomial is a mapping from (position, exponent) keys to nonzero
coefficients.  Coefficients are fractions.Fraction for ordinary rings and may
be RationalFunction values when the ring has been extended over its parameter
block; arithmetic only assumes field operations on the coefficient type.
Rank-1 elements keep every position equal to 1, so submodule and ideal code
paths share one representation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .errors import RingMismatchError
from .ring import (
    Exponent,
    RingDescriptor,
    TermKey,
    check_same_variables,
    exp_add,
    exp_deg,
    reading_key,
)


def _as_coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Polynomial:
    """Immutable sparse polynomial over a RingDescriptor."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Mapping[TermKey, object]):
        clean: dict[TermKey, object] = {}
        for (pos, exp), c in terms.items():
            c = _as_coeff(c)
            if not c:
                continue
            if not (1 <= pos <= ring.rank):
                raise RingMismatchError(f"position {pos} outside rank {ring.rank}")
            if len(exp) != ring.nvars or any(e < 0 for e in exp):
                raise RingMismatchError(f"bad exponent {exp} for {ring.nvars} variables")
            clean[(pos, exp)] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: RingDescriptor, c, position: int = 1) -> "Polynomial":
        return cls(ring, {(position, ring.zero_exp()): _as_coeff(c)})

    @classmethod
    def monomial(cls, ring: RingDescriptor, exp: Exponent, coeff=1, position: int = 1) -> "Polynomial":
        return cls(ring, {(position, tuple(exp)): _as_coeff(coeff)})

    @classmethod
    def variable(cls, ring: RingDescriptor, which: str | int, position: int = 1) -> "Polynomial":
        index = which if isinstance(which, int) else ring.var_index(which)
        return cls.monomial(ring, ring.var_exp(index), 1, position)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, key: TermKey):
        return self.terms.get(key, Fraction(0))

    def total_degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(exp_deg(exp) for _, exp in self.terms)

    def sorted_terms(self) -> list[tuple[TermKey, object]]:
        """Terms in the graded reading order (deterministic, order-free)."""
        return sorted(self.terms.items(), key=lambda kv: reading_key(kv[0]))

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return "Polynomial(0)"
        bits = []
        for (pos, exp), c in self.sorted_terms():
            mono = " ".join(
                f"{n}^{e}" if e > 1 else n
                for n, e in zip(self.ring.names, exp)
                if e
            ) or "1"
            tag = f"*e{pos}" if self.ring.rank > 1 else ""
            bits.append(f"{c}*{mono}{tag}")
        return "Polynomial(" + " + ".join(bits) + ")"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatchError("cannot add over different rings")
        acc = dict(self.terms)
        for key, c in other.terms.items():
            s = acc.get(key)
            s = c if s is None else s + c
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
        return Polynomial(self.ring, acc)

    def __radd__(self, other) -> "Polynomial":
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self).__add__(other)

    def scale(self, c) -> "Polynomial":
        c = _as_coeff(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {k: v * c for k, v in self.terms.items()})

    def mul_monomial(self, exp: Exponent, coeff=1) -> "Polynomial":
        """Multiply by a scalar monomial (position unchanged)."""
        coeff = _as_coeff(coeff)
        if not coeff:
            return Polynomial.zero(self.ring)
        return Polynomial(
            self.ring,
            {(pos, exp_add(e, exp)): c * coeff for (pos, e), c in self.terms.items()},
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.ring, 1)
        for _ in range(n):
            result = poly_mul(result, self)
        return result

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, point: Iterable):
        """Value at a rational point; a tuple of values when rank > 1."""
        point = [_as_coeff(p) for p in point]
        if len(point) != self.ring.nvars:
            raise RingMismatchError("point length does not match variable count")
        vals = {pos: Fraction(0) for pos in range(1, self.ring.rank + 1)}
        for (pos, exp), c in self.terms.items():
            if not isinstance(c, Fraction):
                raise RingMismatchError("evaluation needs rational coefficients")
            v = c
            for p, e in zip(point, exp):
                if e:
                    v *= p ** e
            vals[pos] += v
        if self.ring.rank == 1:
            return vals[1]
        return tuple(vals[pos] for pos in range(1, self.ring.rank + 1))

    def substitute_affine(self, point: Iterable) -> "Polynomial":
        """Replace each variable v_i by v_i + p_i (recentering at -p)."""
        point = [_as_coeff(p) for p in point]
        if len(point) != self.ring.nvars:
            raise RingMismatchError("point length does not match variable count")
        acc: dict[TermKey, object] = {}
        for (pos, exp), c in self.terms.items():
            # expand prod_i (v_i + p_i)^{e_i} by binomial convolution
            partial: dict[Exponent, object] = {self.ring.zero_exp(): c}
            for i, (e, p) in enumerate(zip(exp, point)):
                if e == 0:
                    continue
                if not p:
                    partial = {exp_add(m, _unit(self.ring.nvars, i, e)): v for m, v in partial.items()}
                    continue
                nxt: dict[Exponent, object] = {}
                for k in range(e + 1):
                    w = comb(e, k) * p ** (e - k)
                    if not w:
                        continue
                    shift = _unit(self.ring.nvars, i, k)
                    for m, v in partial.items():
                        key = exp_add(m, shift)
                        s = nxt.get(key)
                        s = v * w if s is None else s + v * w
                        if s:
                            nxt[key] = s
                        elif key in nxt:
                            del nxt[key]
                partial = nxt
            for m, v in partial.items():
                key = (pos, m)
                s = acc.get(key)
                s = v if s is None else s + v
                if s:
                    acc[key] = s
                elif key in acc:
                    del acc[key]
        return Polynomial(self.ring, acc)


def _unit(n: int, i: int, e: int) -> Exponent:
    return tuple(e if j == i else 0 for j in range(n))


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Product; at most one factor may have rank > 1."""
    check_same_variables(f.ring, g.ring)
    if f.ring.rank > 1 and g.ring.rank > 1:
        raise RingMismatchError("cannot multiply two module vectors")
    ring = f.ring if f.ring.rank > 1 else g.ring
    acc: dict[TermKey, object] = {}
    for (pf, ef), cf in f.terms.items():
        for (pg, eg), cg in g.terms.items():
            pos = pf if f.ring.rank > 1 else pg
            key = (pos, exp_add(ef, eg))
            c = cf * cg
            s = acc.get(key)
            s = c if s is None else s + c
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
    return Polynomial(ring, acc)


def substitute_affine(f: Polynomial, point) -> Polynomial:
    return f.substitute_affine(point)


def evaluate(f: Polynomial, point):
    return f.evaluate(point)
