"""Problem-file front end.

A problem file declares a ring (with an optional parameter block after `|`),
an ordering, and either generators or a component decomposition, for example:

    # a plane curve with an embedded point
    ring x, y | t;
    order product(lex, lex);
    ideal x^2, y^2, -x*t + y;

Clauses end with `;` and comments run from `#` to the end of the line.
Module generators are bracketed vectors `[f1, ..., fs]`; decompositions are
given as repeated `component <generators> at <point>;` clauses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .orderings import (
    TOP,
    AnyOrder,
    DegLex,
    DegRevLex,
    Lex,
    ModuleOrder,
    ProductOrder,
    TermOrder,
)
from .polynomial import Polynomial
from .ring import RingDescriptor

KEYWORDS = {
    "ring",
    "order",
    "moduleorder",
    "ideal",
    "module",
    "component",
    "center",
    "at",
    "lex",
    "deglex",
    "degrevlex",
    "product",
    "top",
    "pot",
}


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "keyword", "int", "punct", "end"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line = 1
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            start = i
            startcol = col
            while i < n and text[i].isdigit():
                i += 1
                col += 1
            tokens.append(Token("int", text[start:i], line, startcol))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            startcol = col
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
                col += 1
            word = text[start:i]
            kind = "keyword" if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, line, startcol))
            continue
        if ch in ",;|^*+-()[]/":
            tokens.append(Token("punct", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


@dataclass
class Component:
    generators: list[Polynomial]
    center: tuple[Fraction, ...]


@dataclass
class ProblemSpec:
    ring: RingDescriptor
    order: TermOrder
    module_precedence: str = TOP
    generators: list[Polynomial] = field(default_factory=list)
    center: tuple[Fraction, ...] | None = None
    components: list[Component] = field(default_factory=list)

    @property
    def effective_order(self) -> AnyOrder:
        if self.ring.rank > 1:
            return ModuleOrder(self.order, self.module_precedence)
        return self.order


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.column)

    def expect_punct(self, ch: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != ch:
            self.fail(f"expected {ch!r}", tok)
        return self.next()

    def at_punct(self, ch: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.text == ch

    def at_keyword(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == "keyword" and tok.text == word

    # -- clause level ------------------------------------------------------

    def parse_problem(self) -> ProblemSpec:
        ring: RingDescriptor | None = None
        order: TermOrder | None = None
        precedence = TOP
        generators: list[Polynomial] = []
        center: tuple[Fraction, ...] | None = None
        components: list[Component] = []
        module_rows: list[list[Polynomial]] | None = None
        component_rows: list[tuple[list, tuple, Token]] = []

        while self.peek().kind != "end":
            tok = self.peek()
            if tok.kind != "keyword":
                self.fail("expected a clause keyword", tok)
            if tok.text == "ring":
                self.next()
                ring = self.parse_ring_clause()
            elif tok.text == "order":
                self.next()
                order = self.parse_order_expr()
                self.expect_punct(";")
            elif tok.text == "moduleorder":
                self.next()
                prec = self.peek()
                if prec.kind != "keyword" or prec.text not in ("top", "pot"):
                    self.fail("expected top or pot", prec)
                precedence = self.next().text
                self.expect_punct(";")
            elif tok.text == "ideal":
                self.next()
                self.require_ring(ring, tok)
                generators = self.parse_poly_list(ring)
                self.expect_punct(";")
            elif tok.text == "module":
                self.next()
                self.require_ring(ring, tok)
                module_rows = self.parse_vector_list(ring)
                self.expect_punct(";")
            elif tok.text == "component":
                self.next()
                self.require_ring(ring, tok)
                rows, point = self.parse_component_body(ring)
                component_rows.append((rows, point, tok))
                self.expect_punct(";")
            elif tok.text == "center":
                self.next()
                self.require_ring(ring, tok)
                center = self.parse_point(ring)
                self.expect_punct(";")
            else:
                self.fail(f"unexpected keyword {tok.text!r} at clause start", tok)

        if ring is None:
            self.fail("missing ring clause")
        if order is None:
            self.fail("missing order clause")

        # Vector widths decide the module rank; every vector in the file has
        # to agree, and scalar generators cannot mix with proper vectors.
        widths = set()
        if module_rows is not None:
            widths.update(len(row) for row in module_rows)
        for rows, _, tok in component_rows:
            for row in rows:
                widths.add(len(row) if isinstance(row, list) else 0)
        vector_widths = {w for w in widths if w > 1}
        if len(vector_widths) > 1:
            self.fail(f"vector lengths disagree: {sorted(vector_widths)}")
        rank = vector_widths.pop() if vector_widths else 1
        if rank > 1 and 0 in widths:
            self.fail("scalar generators cannot mix with module vectors")
        spec_ring = ring.with_rank(rank) if rank > 1 else ring

        if module_rows is not None:
            generators = [self._assemble_vector(spec_ring, row) for row in module_rows]
        for rows, point, _ in component_rows:
            gens = []
            for row in rows:
                if isinstance(row, list):
                    gens.append(self._assemble_vector(spec_ring, row) if rank > 1 else row[0])
                else:
                    gens.append(row)
            components.append(Component(gens, point))

        return ProblemSpec(
            ring=spec_ring,
            order=order,
            module_precedence=precedence,
            generators=generators,
            center=center,
            components=components,
        )

    def require_ring(self, ring, tok):
        if ring is None:
            self.fail("generators appear before the ring clause", tok)

    def _assemble_vector(self, ring: RingDescriptor, row: list[Polynomial]) -> Polynomial:
        terms = {}
        for i, entry in enumerate(row):
            for (pos, exp), c in entry.terms.items():
                terms[(i + 1, exp)] = c
        return Polynomial(ring, terms)

    def parse_ring_clause(self) -> RingDescriptor:
        x_names = self.parse_name_list()
        t_names: list[str] = []
        if self.at_punct("|"):
            self.next()
            t_names = self.parse_name_list()
        self.expect_punct(";")
        return RingDescriptor(tuple(x_names + t_names), len(x_names), len(t_names))

    def parse_name_list(self) -> list[str]:
        names = []
        while True:
            tok = self.peek()
            if tok.kind == "keyword":
                self.fail(f"{tok.text!r} is reserved and cannot name a variable", tok)
            if tok.kind != "ident":
                self.fail("expected a variable name", tok)
            names.append(self.next().text)
            if self.at_punct(","):
                self.next()
                continue
            return names

    def parse_order_expr(self) -> TermOrder:
        tok = self.peek()
        if tok.kind != "keyword":
            self.fail("expected an ordering name", tok)
        if tok.text == "lex":
            self.next()
            return Lex()
        if tok.text == "deglex":
            self.next()
            return DegLex()
        if tok.text == "degrevlex":
            self.next()
            return DegRevLex()
        if tok.text == "product":
            self.next()
            self.expect_punct("(")
            inner_x = self.parse_order_expr()
            self.expect_punct(",")
            inner_t = self.parse_order_expr()
            self.expect_punct(")")
            if isinstance(inner_x, ProductOrder) or isinstance(inner_t, ProductOrder):
                self.fail("product orderings do not nest", tok)
            return ProductOrder(inner_x, inner_t)
        self.fail(f"unknown ordering {tok.text!r}", tok)

    def parse_poly_list(self, ring: RingDescriptor) -> list[Polynomial]:
        polys = [self.parse_polynomial(ring)]
        while self.at_punct(","):
            self.next()
            polys.append(self.parse_polynomial(ring))
        return polys

    def parse_vector_list(self, ring: RingDescriptor) -> list[list[Polynomial]]:
        rows = [self.parse_vector(ring)]
        while self.at_punct(","):
            self.next()
            rows.append(self.parse_vector(ring))
        return rows

    def parse_vector(self, ring: RingDescriptor) -> list[Polynomial]:
        self.expect_punct("[")
        entries = [self.parse_polynomial(ring)]
        while self.at_punct(","):
            self.next()
            entries.append(self.parse_polynomial(ring))
        self.expect_punct("]")
        return entries

    def parse_component_body(self, ring: RingDescriptor):
        rows: list = []
        while True:
            if self.at_punct("["):
                rows.append(self.parse_vector(ring))
            else:
                rows.append(self.parse_polynomial(ring))
            if self.at_punct(","):
                self.next()
                continue
            break
        if not self.at_keyword("at"):
            self.fail("expected 'at' after component generators")
        self.next()
        point = self.parse_point(ring)
        return rows, point

    def parse_point(self, ring: RingDescriptor) -> tuple[Fraction, ...]:
        coords = [self.parse_signed_rational()]
        while self.at_punct(","):
            self.next()
            coords.append(self.parse_signed_rational())
        if len(coords) != ring.nvars:
            self.fail(f"expected {ring.nvars} coordinates, got {len(coords)}")
        return tuple(coords)

    def parse_signed_rational(self) -> Fraction:
        sign = 1
        while self.at_punct("-") or self.at_punct("+"):
            if self.next().text == "-":
                sign = -sign
        tok = self.peek()
        if tok.kind != "int":
            self.fail("expected a number", tok)
        num = int(self.next().text)
        if self.at_punct("/"):
            self.next()
            dtok = self.peek()
            if dtok.kind != "int":
                self.fail("expected a denominator", dtok)
            den = int(self.next().text)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    # -- polynomial expressions ---------------------------------------------

    def parse_polynomial(self, ring: RingDescriptor) -> Polynomial:
        poly = self.parse_term(ring, self._consume_sign())
        while self.at_punct("+") or self.at_punct("-"):
            op = self.next()
            sign = (-1 if op.text == "-" else 1) * self._consume_sign()
            if not self._starts_factor():
                self.fail(f"expected a term after {op.text!r}", op)
            poly = poly + self.parse_term(ring, sign)
        return poly

    def _consume_sign(self) -> int:
        sign = 1
        while self.at_punct("-") or self.at_punct("+"):
            if self.next().text == "-":
                sign = -sign
        return sign

    def _starts_factor(self) -> bool:
        tok = self.peek()
        if tok.kind in ("int", "ident"):
            return True
        return tok.kind == "punct" and tok.text == "("

    def parse_term(self, ring: RingDescriptor, sign: int) -> Polynomial:
        poly = self.parse_factor(ring)
        while True:
            if self.at_punct("*"):
                op = self.next()
                if not self._starts_factor():
                    self.fail("expected a factor after '*'", op)
                poly = poly * self.parse_factor(ring)
            elif self._starts_factor():
                poly = poly * self.parse_factor(ring)
            else:
                break
        if sign < 0:
            poly = -poly
        return poly

    def parse_factor(self, ring: RingDescriptor) -> Polynomial:
        base = self.parse_base(ring)
        if self.at_punct("^"):
            self.next()
            tok = self.peek()
            if tok.kind != "int":
                self.fail("expected an integer exponent", tok)
            return base ** int(self.next().text)
        return base

    def parse_base(self, ring: RingDescriptor) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            value = self.parse_signed_rational()
            return Polynomial.constant(ring, value)
        if tok.kind == "ident":
            self.next()
            try:
                index = ring.var_index(tok.text)
            except ValueError:
                self.fail(f"unknown variable {tok.text!r}", tok)
            return Polynomial.variable(ring, index)
        if tok.kind == "punct" and tok.text == "(":
            self.next()
            inner = self.parse_polynomial(ring)
            self.expect_punct(")")
            return inner
        self.fail("expected a number, variable, or parenthesized expression", tok)


def parse_problem(text: str) -> ProblemSpec:
    parser = _Parser(tokenize(text))
    return parser.parse_problem()


def parse_polynomial(text: str, ring: RingDescriptor) -> Polynomial:
    """Parse a standalone polynomial or bracketed vector in the given ring."""
    parser = _Parser(tokenize(text))
    if parser.at_punct("["):
        row = parser.parse_vector(ring.with_rank(1) if ring.rank > 1 else ring)
        if ring.rank > 1 and len(row) != ring.rank:
            raise ParseError(f"expected {ring.rank} entries, got {len(row)}", 1, 1)
        terms = {}
        for i, entry in enumerate(row):
            for (pos, exp), c in entry.terms.items():
                terms[(i + 1, exp)] = c
        result = Polynomial(ring, terms)
    else:
        inner_ring = ring.with_rank(1) if ring.rank > 1 else ring
        scalar = parser.parse_polynomial(inner_ring)
        if ring.rank > 1:
            result = Polynomial(ring, {(1, exp): c for (_, exp), c in scalar.terms.items()})
        else:
            result = scalar
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError("trailing input after expression", tok.line, tok.column)
    return result
