"""Command-line front end.

Exit codes: 0 = success or decided yes, 1 = decided no (with a reason line
prefixed 'reason:'), 2 = parse or validation error, 3 = precondition
violation (for example a graph that is not no-exit).  With --json every
report becomes a single JSON object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebras import apply_certificate, canonical_form, direct_sum_iso, is_graded_isomorphic, iso_certificate
from .corners import corner_by_indices, corner_by_vertices
from .errors import (
    AlgebraError,
    GraphError,
    InvalidStepError,
    NotIsomorphicError,
    NotRealizableError,
    ParseError,
)
from .matrices import conjugate_by_step, homogeneous_components
from .parsing import (
    format_certificate,
    format_graph,
    graph_to_dot,
    parse_algebra,
    parse_certificate,
    parse_graph,
)
from .realize import is_realizable_sum, synthesize, synthesize_sum
from .represent import CycleSummand, represent_at
from .graphs import classify


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_graph(path: str):
    return parse_graph(_read_text(path))


def _emit(args, text: str | None, payload: dict):
    if args.json:
        print(json.dumps(payload))
    elif text:
        print(text, end="" if text.endswith("\n") else "\n")


def _reason(args, payload: dict, *reasons: str):
    lines = payload.pop("lines", [])
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)
        for reason in reasons:
            print(f"reason: {reason}")


def _graph_payload(g) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [[e.eid, e.source, e.range] for e in g.edges],
    }


def _cycle_payload(c) -> dict:
    return {"vertices": list(c.vertices), "edges": list(c.edges), "length": c.length}


def cmd_classify(args) -> int:
    info = classify(_load_graph(args.graph))
    flags = {
        "finite": info.finite,
        "acyclic": info.acyclic,
        "no_exit": info.no_exit,
        "comet_per_component": info.comet_per_component,
        "sinks": list(info.sinks),
        "regular": list(info.regular),
        "cycles": [_cycle_payload(c) for c in info.cycles],
    }
    lines = [
        f"finite: {'yes' if info.finite else 'no'}",
        f"acyclic: {'yes' if info.acyclic else 'no'}",
        f"no-exit: {'yes' if info.no_exit else 'no'}",
        f"comet-per-component: {'yes' if info.comet_per_component else 'no'}",
        f"sinks: {', '.join(info.sinks) if info.sinks else '(none)'}",
        f"regular: {', '.join(info.regular) if info.regular else '(none)'}",
    ]
    for c in info.cycles:
        lines.append(f"cycle: {' '.join(c.vertices)} (length {c.length})")
    _emit(args, "\n".join(lines) + "\n", flags)
    return 0


def _resolve_bases(g, choices):
    info = classify(g)
    resolved = {}
    for spec in choices or []:
        name, _, base = spec.partition("=")
        if not base:
            raise ParseError(f"--base expects cycle-vertex=base-vertex, got {spec!r}")
        owners = [c for c in info.cycles if name in c.vertices]
        if not owners:
            from .errors import VertexNotOnCycleError

            raise VertexNotOnCycleError(f"vertex {name!r} does not lie on any cycle")
        resolved[owners[0]] = base
    return resolved


def cmd_represent(args) -> int:
    g = _load_graph(args.graph)
    report = represent_at(g, _resolve_bases(g, args.base))
    lines = [str(report.sum)]
    prov_payload = []
    for summand, prov in zip(report.sum.summands, report.provenance):
        if isinstance(prov, CycleSummand):
            entry = {
                "algebra": str(summand),
                "kind": "cycle",
                "cycle": _cycle_payload(prov.cycle),
                "base": prov.base_vertex,
                "paths": [{"source": s, "length": l} for s, l in prov.paths],
            }
            target = prov.base_vertex
            header = f"# cycle {' '.join(prov.cycle.vertices)} (base {prov.base_vertex})"
        else:
            entry = {
                "algebra": str(summand),
                "kind": "sink",
                "sink": prov.sink,
                "paths": [{"source": s, "length": l} for s, l in prov.paths],
            }
            target = prov.sink
            header = f"# sink {prov.sink}"
        prov_payload.append(entry)
        if args.provenance:
            lines.append(header)
            lines.extend(f"{source} --({length})--> {target}" for source, length in prov.paths)
    _emit(args, "\n".join(lines) + "\n", {"sum": str(report.sum), "provenance": prov_payload})
    return 0


def cmd_canonical(args) -> int:
    total = parse_algebra(args.expr)
    forms = [canonical_form(a) for a in total.summands]
    lines = [f"{a}: {form}" for a, form in zip(total.summands, forms)]
    payload = {
        "forms": [
            {"kind": "trivial", "k": f.k, "mults": list(f.mults)}
            if hasattr(f, "k")
            else {"kind": "cyclic", "m": f.period, "mults": list(f.mults)}
            for f in forms
        ]
    }
    _emit(args, "\n".join(lines) + "\n", payload)
    return 0


def cmd_iso(args) -> int:
    left = parse_algebra(args.expr1)
    right = parse_algebra(args.expr2)
    single = len(left.summands) == 1 and len(right.summands) == 1
    if args.certificate and not single:
        print("error: certificates are only produced for single matrix algebras", file=sys.stderr)
        return 2
    if single:
        a, b = left.summands[0], right.summands[0]
        if is_graded_isomorphic(a, b):
            payload = {"isomorphic": True}
            lines = ["yes"]
            if args.certificate:
                cert = iso_certificate(a, b)
                text = format_certificate(cert)
                payload["certificate"] = text.splitlines()
                lines.extend(text.splitlines())
            _emit(args, "\n".join(lines) + "\n", payload)
            return 0
        reason = _iso_failure_reason(a, b)
    else:
        if direct_sum_iso(left, right):
            _emit(args, "yes\n", {"isomorphic": True})
            return 0
        reason = "no bijection of summands matches canonical forms"
    _reason(args, {"isomorphic": False, "reason": reason, "lines": ["no"]}, reason)
    return 1


def _iso_failure_reason(a, b) -> str:
    if a.base != b.base:
        return f"bases differ: {a.base} vs {b.base}"
    if a.n != b.n:
        return f"sizes differ: {a.n} vs {b.n}"
    return f"canonical forms differ: {canonical_form(a)} vs {canonical_form(b)}"


def cmd_verify_cert(args) -> int:
    left = parse_algebra(args.expr1)
    right = parse_algebra(args.expr2)
    if len(left.summands) != 1 or len(right.summands) != 1:
        print("error: verify-cert works on single matrix algebras", file=sys.stderr)
        return 2
    a, b = left.summands[0], right.summands[0]
    steps = parse_certificate(_read_text(args.certfile))
    if a.base != b.base:
        reason = f"bases differ: {a.base} vs {b.base}"
        _reason(args, {"verified": False, "reason": reason, "lines": ["no"]}, reason)
        return 1
    try:
        final = apply_certificate(a.shifts, steps, a.base)
    except InvalidStepError as exc:
        reason = f"invalid step: {exc}"
        _reason(args, {"verified": False, "reason": reason, "lines": ["no"]}, reason)
        return 1
    if final != b.shifts:
        reason = f"certificate lands on {final}, not on {b.shifts}"
        _reason(args, {"verified": False, "reason": reason, "lines": ["no"]}, reason)
        return 1
    # replay on sample matrices: every step must move components degree to degree
    import random

    from .matrices import GradedMatrix, LaurentElement

    rng = random.Random(20_000 + a.n)
    period = a.base.period or 1
    for _ in range(3):
        entries = [
            [
                LaurentElement(
                    {
                        period * rng.randint(-3, 3): rng.randint(-9, 9)
                        for _ in range(rng.randint(0, 2))
                    }
                    if a.base.is_laurent
                    else {0: rng.randint(-9, 9)}
                )
                for _ in range(a.n)
            ]
            for _ in range(a.n)
        ]
        matrix = GradedMatrix(a.base, a.shifts, tuple(tuple(r) for r in entries))
        for step in steps:
            degrees = set(homogeneous_components(matrix))
            matrix = conjugate_by_step(matrix, step)
            if set(homogeneous_components(matrix)) != degrees:
                reason = "a step moved a homogeneous component off its degree"
                _reason(args, {"verified": False, "reason": reason, "lines": ["no"]}, reason)
                return 1
        if matrix.shifts != b.shifts:
            reason = "matrix conjugation does not land on the target shifts"
            _reason(args, {"verified": False, "reason": reason, "lines": ["no"]}, reason)
            return 1
    _emit(args, "verified\n", {"verified": True})
    return 0


def cmd_realizable(args) -> int:
    total = parse_algebra(args.expr)
    verdict = is_realizable_sum(total)
    if verdict.ok:
        _emit(args, "yes\n", {"ok": True, "failures": []})
        return 0
    reasons = [f"summand {pos}: {v.reason}" for pos, v in verdict.failures]
    payload = {
        "ok": False,
        "failures": [
            {"summand": pos, "failing_index": v.failing_index, "reason": v.reason}
            for pos, v in verdict.failures
        ],
        "lines": ["no"],
    }
    _reason(args, payload, *reasons)
    return 1


def cmd_synthesize(args) -> int:
    total = parse_algebra(args.expr)
    try:
        if len(total.summands) == 1:
            g = synthesize(total.summands[0])
        else:
            g = synthesize_sum(total)
    except NotRealizableError as exc:
        reason = str(exc.verdict)
        _reason(args, {"ok": False, "reason": reason, "lines": ["no"]}, reason)
        return 1
    text = graph_to_dot(g) if args.dot else format_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        if args.json:
            print(json.dumps({"written": args.output, **_graph_payload(g)}))
        return 0
    _emit(args, text, {"dot": text} if args.dot else _graph_payload(g))
    return 0


def _parse_csv(raw: str, what: str) -> list[str]:
    items = [x.strip() for x in raw.split(",") if x.strip()]
    if not items:
        raise ParseError(f"--{what} needs a nonempty comma-separated list")
    return items


def cmd_corner(args) -> int:
    if args.vertices:
        g = _load_graph(args.input)
        result = corner_by_vertices(g, _parse_csv(args.vertices, "vertices"))
    else:
        total = parse_algebra(args.input)
        if len(total.summands) != 1:
            print("error: corner --indices works on a single matrix algebra", file=sys.stderr)
            return 2
        try:
            indices = [int(x) for x in _parse_csv(args.indices, "indices")]
        except ValueError:
            raise ParseError("--indices expects integers") from None
        from .algebras import DirectSumAlgebra

        result = DirectSumAlgebra((corner_by_indices(total.summands[0], indices),))
    _emit(args, str(result) + "\n", {"summands": [str(a) for a in result.summands]})
    return 0


def cmd_emit_dot(args) -> int:
    g = _load_graph(args.graph)
    text = graph_to_dot(g)
    _emit(args, text, {"dot": text})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedlpa",
        description="Graded matrix algebras and Leavitt path algebras of no-exit graphs.",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a graph file ('-' for stdin)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("represent", help="graded matricial representation of a no-exit graph")
    p.add_argument("graph")
    p.add_argument("--base", action="append", metavar="CYCLEVERTEX=BASE",
                   help="choose the base vertex for the cycle through CYCLEVERTEX")
    p.add_argument("--provenance", action="store_true", help="also list the contributing paths")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("canonical", help="canonical form of each summand of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("iso", help="decide graded isomorphism of two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.add_argument("--certificate", action="store_true", help="print a step-by-step certificate")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("verify-cert", help="check a certificate file against two algebras")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.add_argument("certfile")
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("realizable", help="decide Leavitt path algebra realizability")
    p.add_argument("expr")
    p.set_defaults(func=cmd_realizable)

    p = sub.add_parser("synthesize", help="synthesize a witness graph for a realizable expression")
    p.add_argument("expr")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of the graph text format")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("corner", help="graded corner by vertices (of a graph) or indices (of an algebra)")
    p.add_argument("input", help="graph file with --vertices, algebra expression with --indices")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vertices", metavar="A,B,...")
    group.add_argument("--indices", metavar="1,3,...")
    p.set_defaults(func=cmd_corner)

    p = sub.add_parser("emit-dot", help="render a graph file as DOT")
    p.add_argument("graph")
    p.set_defaults(func=cmd_emit_dot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotIsomorphicError as exc:
        print(f"reason: {exc}")
        return 1
    except (GraphError, AlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
