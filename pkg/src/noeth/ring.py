"""Ring descriptors and exponent-vector helpers.

A ring is described by an ordered variable list split into a leading block of
x_count "differential" variables and a trailing block of t_count parameter
variables, plus a free-module rank (rank 1 = plain polynomial ring).  Exponent
vectors are plain int tuples of length x_count + t_count; a module term is a
(position, exponent) pair with 1-based position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RingMismatchError

Exponent = tuple[int, ...]
TermKey = tuple[int, Exponent]  # (position, exponent)


@dataclass(frozen=True)
class RingDescriptor:
    names: tuple[str, ...]
    x_count: int
    t_count: int = 0
    rank: int = 1

    def __post_init__(self):
        if self.x_count < 0 or self.t_count < 0 or self.rank < 1:
            raise ValueError("invalid ring shape")
        if self.x_count + self.t_count != len(self.names):
            raise ValueError("variable count does not match names")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return self.x_count + self.t_count

    @property
    def x_names(self) -> tuple[str, ...]:
        return self.names[: self.x_count]

    @property
    def t_names(self) -> tuple[str, ...]:
        return self.names[self.x_count :]

    def zero_exp(self) -> Exponent:
        return (0,) * self.nvars

    def var_exp(self, i: int) -> Exponent:
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def var_index(self, name: str) -> int:
        return self.names.index(name)

    def same_variables(self, other: "RingDescriptor") -> bool:
        return (
            self.names == other.names
            and self.x_count == other.x_count
            and self.t_count == other.t_count
        )

    def with_rank(self, rank: int) -> "RingDescriptor":
        return RingDescriptor(self.names, self.x_count, self.t_count, rank)

    def x_subring(self) -> "RingDescriptor":
        """Ring on the x-block alone, keeping the module rank."""
        return RingDescriptor(self.x_names, self.x_count, 0, self.rank)

    def t_subring(self) -> "RingDescriptor":
        """Plain rank-1 ring on the parameter block."""
        return RingDescriptor(self.t_names, self.t_count, 0, 1)


def check_same_variables(a: RingDescriptor, b: RingDescriptor) -> None:
    if not a.same_variables(b):
        raise RingMismatchError(f"rings disagree: {a.names} vs {b.names}")


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a: Exponent, b: Exponent) -> bool:
    """True when the monomial with exponent a divides the one with exponent b."""
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_deg(a: Exponent) -> int:
    return sum(a)


def x_part(ring: RingDescriptor, e: Exponent) -> Exponent:
    return e[: ring.x_count]


def t_part(ring: RingDescriptor, e: Exponent) -> Exponent:
    return e[ring.x_count :]


def reading_key(key: TermKey):
    """Graded listing order for monomials and operator terms.

    Degree ascending, then position ascending, then the lexicographically
    largest exponent first (so x comes before y within a degree).
    """
    pos, exp = key
    return (exp_deg(exp), pos, tuple(-e for e in exp))
