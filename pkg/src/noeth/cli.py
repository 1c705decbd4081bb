"""Command-line interface.

    noeth <command> [flags] <file>

Commands: gb, nf <poly>, mult, staircase, corners, noether, noether-posdim,
member <poly>, ep-solution.  Output is plain text by default and structured
JSON with --json.  Exit codes: 0 success, 1 domain error, 2 parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .diffop import span_equal_operators
from .epsolution import build_solution, render_solution, solution_json
from .errors import NoethError, ParseError
from .groebner import buchberger, corner_monomials, is_member, normal_form, staircase
from .noetherian import (
    noetherian_backward,
    noetherian_forward,
    noetherian_linear,
)
from .orderings import DegLex, DegRevLex, Lex, ProductOrder
from .posdim import member_positive, noetherian_positive
from .problem import ProblemSpec, parse_polynomial, parse_problem
from .render import (
    emit_json,
    operator_json,
    polynomial_json,
    render_module_term,
    render_operator,
    render_polynomial,
    ring_json,
)

METHODS = {
    "forward": noetherian_forward,
    "backward": noetherian_backward,
}


def _order_name(order) -> str:
    if isinstance(order, Lex):
        return "lex"
    if isinstance(order, DegLex):
        return "deglex"
    if isinstance(order, DegRevLex):
        return "degrevlex"
    if isinstance(order, ProductOrder):
        return f"product({_order_name(order.x_order)},{_order_name(order.t_order)})"
    return repr(order)


def _base_doc(command: str, spec: ProblemSpec) -> dict:
    doc = {
        "command": command,
        "ring": ring_json(spec.ring),
        "order": _order_name(spec.order),
    }
    if spec.ring.rank > 1:
        doc["module_order"] = spec.module_precedence
    return doc


def _require_generators(spec: ProblemSpec):
    if not spec.generators:
        raise NoethError("the problem file declares no ideal or module generators")
    return spec.generators


def _groebner(spec: ProblemSpec):
    return buchberger(_require_generators(spec), spec.effective_order, spec.ring)


def _center(spec: ProblemSpec):
    if spec.center is not None:
        return spec.center
    return (Fraction(0),) * spec.ring.nvars


def _noether_basis(spec: ProblemSpec, method: str, check_all: bool):
    center = _center(spec)
    order = spec.effective_order
    if method == "linear":
        basis = noetherian_linear(_require_generators(spec), order, center=center)
    else:
        G = _groebner(spec)
        basis = METHODS[method](G, center=center)
    if check_all:
        others = []
        G = _groebner(spec)
        for name in ("forward", "backward"):
            if name != method:
                others.append(METHODS[name](G, center=center))
        if method != "linear":
            others.append(noetherian_linear(_require_generators(spec), order, center=center))
        for other in others:
            if not span_equal_operators(basis.operators, other.operators):
                raise NoethError(
                    f"method disagreement: {method} and {other.method} spans differ"
                )
    return basis


def cmd_gb(spec, args):
    G = _groebner(spec)
    doc = _base_doc("gb", spec)
    doc["basis"] = [polynomial_json(g, G.order) for g in G.elements]
    text = [render_polynomial(g, G.order) for g in G.elements]
    return doc, text


def cmd_nf(spec, args):
    f = parse_polynomial(args.expression, spec.ring)
    G = _groebner(spec)
    result = normal_form(f, G)
    doc = _base_doc("nf", spec)
    doc["result"] = polynomial_json(result, G.order)
    return doc, [render_polynomial(result, G.order)]


def cmd_mult(spec, args):
    stair = staircase(_groebner(spec))
    doc = _base_doc("mult", spec)
    doc["multiplicity"] = stair.multiplicity
    return doc, [str(stair.multiplicity)]


def cmd_staircase(spec, args):
    stair = staircase(_groebner(spec))
    doc = _base_doc("staircase", spec)
    doc["staircase"] = [{"pos": p, "exp": list(e)} for p, e in stair.monomials]
    return doc, [render_module_term(spec.ring, key) for key in stair.monomials]


def cmd_corners(spec, args):
    G = _groebner(spec)
    stair = staircase(G)
    corners = corner_monomials(stair, G)
    doc = _base_doc("corners", spec)
    doc["corners"] = [{"pos": p, "exp": list(e)} for p, e in corners]
    return doc, [render_module_term(spec.ring, key) for key in corners]


def cmd_noether(spec, args):
    basis = _noether_basis(spec, args.method, args.check_all)
    order = spec.effective_order
    doc = _base_doc("noether", spec)
    doc["method"] = basis.method
    doc["multiplicity"] = basis.multiplicity
    doc["center"] = [str(c) for c in basis.center]
    doc["operators"] = [operator_json(L, order) for L in basis.operators]
    text = [render_operator(L, order) for L in basis.operators]
    return doc, text


def cmd_noether_posdim(spec, args):
    basis = noetherian_positive(
        _require_generators(spec), spec.effective_order, spec.ring
    )
    order = spec.effective_order
    doc = _base_doc("noether-posdim", spec)
    doc["multiplicity"] = basis.multiplicity
    doc["operators"] = [operator_json(L, order) for L in basis.operators]
    text = [render_operator(L, order) for L in basis.operators]
    return doc, text


def cmd_member(spec, args):
    f = parse_polynomial(args.expression, spec.ring)
    if spec.ring.t_count:
        basis = noetherian_positive(
            _require_generators(spec), spec.effective_order, spec.ring
        )
        verdict = member_positive(f, basis)
    else:
        verdict = is_member(f, _groebner(spec))
    doc = _base_doc("member", spec)
    doc["member"] = verdict
    return doc, ["true" if verdict else "false"]


def cmd_ep_solution(spec, args):
    if not spec.components:
        raise NoethError("ep-solution needs component clauses (a primary decomposition)")
    parts = []
    for comp in spec.components:
        if spec.ring.t_count:
            basis = noetherian_positive(comp.generators, spec.effective_order, spec.ring)
            parts.append((comp.center, basis))
        else:
            G = buchberger(comp.generators, spec.effective_order, spec.ring)
            parts.append((comp.center, noetherian_forward(G, center=comp.center)))
    family = build_solution(spec.ring, parts)
    doc = _base_doc("ep-solution", spec)
    doc["summands"] = solution_json(family)
    return doc, [render_solution(family)]


COMMANDS = {
    "gb": cmd_gb,
    "nf": cmd_nf,
    "mult": cmd_mult,
    "staircase": cmd_staircase,
    "corners": cmd_corners,
    "noether": cmd_noether,
    "noether-posdim": cmd_noether_posdim,
    "member": cmd_member,
    "ep-solution": cmd_ep_solution,
}


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noeth",
        description="Dual differential operators for primary ideals and modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name in ("nf", "member"):
            p.add_argument("expression", help="polynomial (or [f1, ..., fs] vector)")
        if name == "noether":
            p.add_argument(
                "--method",
                choices=["forward", "backward", "linear"],
                default="forward",
            )
            p.add_argument(
                "--check-all",
                action="store_true",
                help="run all three constructions and verify span equality",
            )
        p.add_argument("file", help="problem file")
        p.add_argument("--json", action="store_true", help="emit JSON")
    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        spec = parse_problem(text)
        doc, lines = COMMANDS[args.command](spec, args)
    except ParseError as exc:
        if args.json:
            print(emit_json({"error": str(exc), "line": exc.line, "column": exc.column}))
        else:
            print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NoethError as exc:
        if args.json:
            print(emit_json({"error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(emit_json(doc))
    else:
        for line in lines:
            print(line)
    return 0
