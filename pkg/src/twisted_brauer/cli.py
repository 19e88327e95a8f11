"""
Command-line front end.

One subcommand per concept: diagram arithmetic (``mul``, ``star``),
Green's relation queries and constructive factorizations (``green``),
ideal queries (``ideal``), exhaustive enumeration and closures
(``enumerate``, ``closure``), Graham-Houghton graph export
(``gh-graph``), idempotent factorization (``factor``) and the theorem
verification harness (``verify``).

Diagrams are read in either the human text format ``n=6: (1,3)(2,3')...``
or the one-object-per-line JSON format; a twist prefix ``2 * `` or a
``"twist"`` key lifts them into the twisted monoid.  The degree is always
explicit.  Exit status: 0 on success, 1 on domain errors (including a
failed verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import inspect
import json
import re
import sys

from . import enumeration, green, ideals, structure, verify
from .diagram import (
    BrauerDiagram,
    DiagramError,
    diagram_from_json_obj,
    multiply,
    parse_diagram,
)
from .twisted import TwistedElement, as_twisted, star, star_chain

EXHAUSTIVE_DEGREE_LIMIT = 6

_TWIST_PREFIX = re.compile(r"^\s*(\d+)\s*\*\s*")


def parse_element(text: str, degree: int | None = None) -> TwistedElement:
    """Parse a twisted element from text or JSON (twist defaults to 0)."""
    text = text.strip()
    if text.startswith("{"):
        obj = json.loads(text)
        twist = obj.pop("twist", 0)
        return TwistedElement(twist, diagram_from_json_obj(obj))
    twist = 0
    m = _TWIST_PREFIX.match(text)
    if m:
        twist = int(m.group(1))
        text = text[m.end():]
    return TwistedElement(twist, parse_diagram(text, degree))


def parse_plain(text: str, degree: int | None = None) -> BrauerDiagram:
    element = parse_element(text, degree)
    if element.twist:
        raise DiagramError("expected a plain diagram, got a twisted element")
    return element.diagram


def _emit_element(x: TwistedElement, fmt: str) -> str:
    if fmt == "jsonl":
        return json.dumps(x.to_json_obj())
    return x.to_text() if x.twist else x.diagram.to_text()


def _cmd_mul(args) -> int:
    a = parse_plain(args.alpha, args.n)
    b = parse_plain(args.beta, args.n)
    product, t = multiply(a, b)
    if args.format == "jsonl":
        print(json.dumps({"product": product.to_json_obj(), "tau": t}))
    else:
        print(product.to_text())
        print(f"tau={t}")
    return 0


def _cmd_star(args) -> int:
    elements = [parse_element(t, args.n) for t in args.elements]
    print(_emit_element(star_chain(elements), args.format))
    return 0


def _cmd_green(args) -> int:
    if args.green_cmd == "leq":
        x = parse_element(args.x, args.n)
        y = parse_element(args.y, args.n)
        result = green.twisted_leq(args.rel, x, y)
        print("true" if result else "false")
        return 0
    if args.green_cmd == "class":
        x = parse_element(args.x, args.n)
        print(green.green_class(args.rel, x))
        return 0
    a = parse_plain(args.x, args.n)
    b = parse_plain(args.y, args.n)
    if args.mode == "right":
        witnesses = [green.factor_right(a, b)]
        chain = star_chain(b, *witnesses)
    elif args.mode == "left":
        witnesses = [green.factor_left(a, b)]
        chain = star_chain(witnesses[0], b)
    else:
        gamma, delta = green.factor_two_sided(a, b)
        witnesses = [gamma, delta]
        chain = star_chain(gamma, b, delta)
    if chain != TwistedElement(0, a):
        raise DiagramError("internal check failed: factorization does not rebuild alpha")
    for w in witnesses:
        print(_emit_element(as_twisted(w), args.format))
    return 0


def _cmd_ideal(args) -> int:
    if args.ideal_cmd == "contains":
        spec = ideals.parse_ideal(args.spec, args.n)
        x = parse_element(args.element, args.n)
        print("true" if ideals.ideal_contains(spec, x) else "false")
        return 0
    if args.ideal_cmd == "normalize":
        spec = ideals.parse_ideal(args.spec, args.n)
        print(spec.to_json() if args.format == "jsonl" else spec.to_text())
        return 0
    if args.ideal_cmd == "rank":
        info = ideals.rank_of_ideal(args.n, args.r, args.k)
        print(json.dumps(info.to_json_obj()))
        return 0
    spec = ideals.ideal_normalize(args.n, [(args.r, args.k)])
    gens = ideals.generating_set(spec)
    print(f"size={gens.size} kind={gens.kind}")
    if args.list:
        for g in gens.elements:
            print(_emit_element(g, args.format))
    return 0


def _cmd_enumerate(args) -> int:
    if args.rank is not None:
        stream = enumeration.d_class(args.n, args.rank, allow_large=args.force)
    elif args.idempotents:
        stream = enumeration.idempotents(
            args.n, twisted=args.idempotents == "twisted", allow_large=args.force
        )
    else:
        stream = enumeration.all_diagrams(args.n, allow_large=args.force)
    count = 0
    for d in stream:
        count += 1
        if not args.count_only:
            print(d.to_json() if args.format == "jsonl" else d.to_text())
    if args.count_only:
        print(count)
    return 0


def _cmd_closure(args) -> int:
    if args.gens == "-":
        lines = [line for line in sys.stdin.read().splitlines() if line.strip()]
    else:
        with open(args.gens, encoding="utf-8") as handle:
            lines = [line for line in handle.read().splitlines() if line.strip()]
    gens = [parse_element(line, args.n) for line in lines]
    result = enumeration.bounded_closure(gens, args.bound)
    for x in sorted(result.elements):
        print(_emit_element(x, args.format))
    print(
        f"# elements={len(result.elements)} bound={result.bound} "
        f"saturated={str(result.saturated_within_bound).lower()}",
        file=sys.stderr,
    )
    return 0


def _cmd_gh_graph(args) -> int:
    graph = structure.build_gh_graph(args.n, args.r)
    if args.dot or args.format == "dot":
        print(graph.to_dot())
        return 0
    report = structure.verify_rank_idrank(args.n, args.r)
    print(json.dumps(report.to_json_obj()))
    return 0 if report.certified else 1


def _cmd_factor(args) -> int:
    alpha = parse_plain(args.alpha, args.n)
    chain = structure.factor_into_idempotents(alpha)
    if star_chain(chain) != TwistedElement(0, alpha):
        raise DiagramError("internal check failed: chain does not rebuild the input")
    for b in chain:
        print(_emit_element(as_twisted(b), args.format))
    return 0


def _cmd_verify(args) -> int:
    check = verify.CHECKS.get(args.theorem)
    if check is None:
        print(f"unknown theorem id {args.theorem!r}; known: {', '.join(sorted(verify.CHECKS))}",
              file=sys.stderr)
        return 2
    if args.n is not None and args.n > EXHAUSTIVE_DEGREE_LIMIT and not args.force and args.samples is None:
        print(
            f"exhaustive sweeps refuse n = {args.n} > {EXHAUSTIVE_DEGREE_LIMIT}; "
            "pass --force or use --samples",
            file=sys.stderr,
        )
        return 1
    accepted = inspect.signature(check).parameters
    provided = {
        "n": args.n,
        "r": args.r,
        "k": args.k,
        "bound": args.bound,
        "twist_bound": args.bound,
        "samples": args.samples,
        "seed": args.seed,
        "exhaustive": True if args.exhaustive else None,
    }
    kwargs = {k: v for k, v in provided.items() if k in accepted and v is not None}
    report = check(**kwargs)
    print(report.to_json())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twisted-brauer",
        description="Exact computations in the Brauer monoid and its twisted cover.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n_required=True):
        p.add_argument("--n", type=int, required=n_required, help="degree (always explicit)")
        p.add_argument("--format", choices=("text", "jsonl"), default="text")

    p = sub.add_parser("mul", help="multiply two diagrams, reporting the twist")
    add_common(p)
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("star", help="star product of twisted elements")
    add_common(p)
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("green", help="Green's relations, classes, factorizations")
    green_sub = p.add_subparsers(dest="green_cmd", required=True)
    q = green_sub.add_parser("leq", help="decide a twisted pre-order")
    add_common(q)
    q.add_argument("--rel", choices=("R", "L", "J"), required=True)
    q.add_argument("x")
    q.add_argument("y")
    q.set_defaults(func=_cmd_green)
    q = green_sub.add_parser("class", help="describe a Green's class")
    add_common(q)
    q.add_argument("--rel", choices=green.RELATIONS, required=True)
    q.add_argument("x")
    q.set_defaults(func=_cmd_green)
    q = green_sub.add_parser("factor", help="constructive pre-order witnesses")
    add_common(q)
    q.add_argument("--mode", choices=("right", "left", "two-sided"), required=True)
    q.add_argument("x")
    q.add_argument("y")
    q.set_defaults(func=_cmd_green)

    p = sub.add_parser("ideal", help="ideal membership, canonical forms, ranks")
    ideal_sub = p.add_subparsers(dest="ideal_cmd", required=True)
    q = ideal_sub.add_parser("contains")
    add_common(q)
    q.add_argument("--spec", required=True, help='e.g. "I(5;2) + I(3;4)"')
    q.add_argument("element")
    q.set_defaults(func=_cmd_ideal)
    q = ideal_sub.add_parser("normalize")
    add_common(q)
    q.add_argument("--spec", required=True)
    q.set_defaults(func=_cmd_ideal)
    q = ideal_sub.add_parser("rank")
    add_common(q)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=_cmd_ideal)
    q = ideal_sub.add_parser("gens")
    add_common(q)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--list", action="store_true", help="print the elements")
    q.set_defaults(func=_cmd_ideal)

    p = sub.add_parser("enumerate", help="stream diagrams, D-classes or idempotents")
    add_common(p)
    p.add_argument("--rank", type=int)
    p.add_argument("--idempotents", choices=("plain", "twisted"))
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--force", action="store_true", help="lift the degree guard")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("closure", help="twist-bounded closure of generators (JSONL)")
    add_common(p)
    p.add_argument("--gens", required=True, help="path to JSONL generators, or -")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("gh-graph", help="Graham-Houghton graph of a D-class")
    p.add_argument("--n", type=int, required=True, help="degree (always explicit)")
    p.add_argument("--format", choices=("text", "jsonl", "dot"), default="text")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of the report")
    p.set_defaults(func=_cmd_gh_graph)

    p = sub.add_parser("factor", help="factor a singular diagram into idempotents")
    add_common(p)
    p.add_argument("--idempotents", action="store_true", required=True)
    p.add_argument("alpha")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("verify", help="run a theorem check, emitting a JSON report")
    p.add_argument("theorem", help=f"one of: {', '.join(sorted(verify.CHECKS))}")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
