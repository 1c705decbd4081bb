"""Problem-file parsing: grammar, diagnostics, and render round-trips."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from noeth import (
    DegLex,
    Lex,
    Polynomial,
    ProductOrder,
    parse_polynomial,
    parse_problem,
    render_polynomial,
)
from noeth.errors import ParseError
from support import RM2, RXT, RXY, RXYZ, random_polynomial

WORKED = """
# a plane curve with an embedded parameter direction
ring x, y | t;
order product(lex, lex);
ideal x^2, y^2, -x*t + y;
"""


def test_worked_problem_file():
    spec = parse_problem(WORKED)
    assert spec.ring.names == ("x", "y", "t")
    assert spec.ring.x_count == 2
    assert spec.ring.t_count == 1
    assert spec.ring.rank == 1
    assert isinstance(spec.order, ProductOrder)
    x = Polynomial.variable(spec.ring, "x")
    y = Polynomial.variable(spec.ring, "y")
    t = Polynomial.variable(spec.ring, "t")
    assert spec.generators == [x**2, y**2, -(x * t) + y]
    assert spec.center is None
    assert spec.components == []
    assert spec.effective_order == spec.order


def test_module_problem_file():
    spec = parse_problem("ring x, y; order lex; moduleorder pot; module [x, 1], [y, 0];")
    assert spec.ring.rank == 2
    assert spec.module_precedence == "pot"
    x1 = Polynomial.variable(spec.ring, "x", 1)
    e2 = Polynomial.constant(spec.ring, 1, 2)
    y1 = Polynomial.variable(spec.ring, "y", 1)
    assert spec.generators == [x1 + e2, y1]
    assert spec.effective_order.precedence == "pot"
    assert spec.effective_order.base == Lex()


def test_scalar_component_clauses():
    text = (
        "ring x, y; order deglex;\n"
        "component x^2, y at 0, 0;\n"
        "component (x - 1)^2, y at 1, 0;\n"
    )
    spec = parse_problem(text)
    assert spec.ring.rank == 1
    assert len(spec.components) == 2
    first, second = spec.components
    assert first.center == (Fraction(0), Fraction(0))
    assert second.center == (Fraction(1), Fraction(0))
    x = Polynomial.variable(spec.ring, "x")
    y = Polynomial.variable(spec.ring, "y")
    assert first.generators == [x**2, y]
    assert second.generators == [(x - 1) ** 2, y]


def test_module_component_clauses():
    text = (
        "ring x, y; order deglex;\n"
        "component [x, 1], [y, 0] at 0, 0;\n"
        "component [x - 1, 1], [y, 0], [y, x - 1] at 1, 0;\n"
    )
    spec = parse_problem(text)
    assert spec.ring.rank == 2
    first, second = spec.components
    x1 = Polynomial.variable(spec.ring, "x", 1)
    y1 = Polynomial.variable(spec.ring, "y", 1)
    e1 = Polynomial.constant(spec.ring, 1, 1)
    e2 = Polynomial.constant(spec.ring, 1, 2)
    x2 = Polynomial.variable(spec.ring, "x", 2)
    assert first.generators == [x1 + e2, y1]
    assert second.generators == [x1 - e1 + e2, y1, y1 + x2 - e2]
    assert second.center == (Fraction(1), Fraction(0))


def test_center_clause_and_fractions():
    spec = parse_problem("ring x, y; order deglex; ideal x^2, y; center 1/2, -3;")
    assert spec.center == (Fraction(1, 2), Fraction(-3))


def test_comments_are_ignored():
    spec = parse_problem("# header\nring x; # inline\norder lex;\nideal x^2; # done\n")
    x = Polynomial.variable(spec.ring, "x")
    assert spec.generators == [x**2]


def test_keyword_reservation():
    with pytest.raises(ParseError) as err:
        parse_problem("ring lex; order lex; ideal lex;")
    assert "reserved" in str(err.value)
    assert err.value.line == 1
    assert err.value.column == 6


def test_vector_length_mismatch():
    with pytest.raises(ParseError) as err:
        parse_problem("ring x; order lex; module [x, 1], [x, 1, 0];")
    assert "vector lengths disagree" in str(err.value)
    with pytest.raises(ParseError) as err2:
        parse_problem("ring x, y; order lex;\ncomponent [x, 1] at 0, 0;\ncomponent y at 0, 0;")
    assert "scalar generators cannot mix" in str(err2.value)


def test_point_length_mismatch():
    with pytest.raises(ParseError) as err:
        parse_problem("ring x, y; order lex; ideal x; center 1;")
    assert "expected 2 coordinates, got 1" in str(err.value)


def test_dangling_operator_position():
    with pytest.raises(ParseError) as err:
        parse_problem("ring x; order lex; ideal x +")
    assert err.value.line == 1
    assert err.value.column == 28
    assert "'+'" in str(err.value)
    with pytest.raises(ParseError) as err2:
        parse_problem("ring x, y; order lex;\nideal x *;")
    assert err2.value.line == 2
    assert err2.value.column == 9


def test_error_positions_on_later_lines():
    with pytest.raises(ParseError) as err:
        parse_problem("ring x, y;\norder lex;\nideal x ^ y;")
    assert err.value.line == 3
    assert err.value.column == 11
    with pytest.raises(ParseError) as err2:
        parse_problem("ring x;\norder lex;\nideal q;")
    assert "unknown variable 'q'" in str(err2.value)
    assert err2.value.line == 3 and err2.value.column == 7


def test_unexpected_character():
    with pytest.raises(ParseError) as err:
        parse_problem("ring x; order lex; ideal x @ y;")
    assert err.value.column == 28


def test_missing_clauses():
    with pytest.raises(ParseError) as err:
        parse_problem("order lex; ideal x;")
    assert "before the ring clause" in str(err.value)
    with pytest.raises(ParseError):
        parse_problem("ring x; ideal x;")
    with pytest.raises(ParseError) as err2:
        parse_problem("order lex;")
    assert "missing ring clause" in str(err2.value)


def test_unknown_order_and_nesting():
    with pytest.raises(ParseError):
        parse_problem("ring x; order fancy; ideal x;")
    with pytest.raises(ParseError) as err:
        parse_problem("ring x | t; order product(product(lex, lex), lex); ideal x;")
    assert "do not nest" in str(err.value)


def test_parse_polynomial_standalone():
    f = parse_polynomial("x^2 - 2 y + 3/4", RXY)
    x = Polynomial.variable(RXY, "x")
    y = Polynomial.variable(RXY, "y")
    assert f == x**2 - 2 * y + Polynomial.constant(RXY, Fraction(3, 4))
    vec = parse_polynomial("[x - 1, 1]", RM2)
    x1 = Polynomial.variable(RM2, "x", 1)
    e1 = Polynomial.constant(RM2, 1, 1)
    e2 = Polynomial.constant(RM2, 1, 2)
    assert vec == x1 - e1 + e2
    with pytest.raises(ParseError):
        parse_polynomial("[x, 1, 0]", RM2)
    with pytest.raises(ParseError):
        parse_polynomial("x y extra ;", RXY)


def test_render_parse_round_trip_500():
    rng = random.Random(503)
    rings = [RXY, RXYZ, RXT, RM2]
    for i in range(500):
        ring = rings[i % len(rings)]
        f = random_polynomial(rng, ring, max_terms=6, max_deg=5)
        text = render_polynomial(f, DegLex())
        assert parse_polynomial(text, ring) == f
