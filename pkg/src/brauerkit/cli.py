"""``brauerkit`` command line.

Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 unsupported
construction, 4 infinite type, 5 verification failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path as FsPath
from typing import Any

from .brauer import (BrauerGraph, SelfFoldedError, algebra_of_brauer_graph, brauer_graph_dot, classify_graph,
                     format_brauer_graph, gamma_of_gentle, looks_like_brauer_graph, parse_brauer_graph,
                     predicted_count, tau_tilting_finite)
from .gentle import check_gentle
from .presentation import (AlgebraPresentation, ParseError, ValidationError, format_presentation,
                           parse_presentation)
from .stt import (EnumerationCapError, HasseError, InfiniteTypeError, SttConfig, count_json, hasse_dot,
                  hasse_quiver, support_tau_tilting)
from .verify import VerifyConfig, format_table, run_verification

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_UNSUPPORTED, EXIT_INFINITE, EXIT_VERIFY = range(6)


@dataclass
class RunReport:
    command: str
    input_digest: str | None
    outcome: dict
    elapsed_ms: int
    seed: int | None = None


class CliFailure(Exception):
    def __init__(self, code: int, message: str, outcome: dict | None = None):
        super().__init__(message)
        self.code = code
        self.outcome = outcome or {}


def _read(path: str) -> tuple[str, str]:
    text = FsPath(path).read_text(encoding="utf-8")
    return text, hashlib.sha256(text.encode()).hexdigest()[:16]


def _load(path: str) -> tuple[AlgebraPresentation | BrauerGraph, str]:
    text, digest = _read(path)
    name = FsPath(path).stem
    if looks_like_brauer_graph(text):
        return parse_brauer_graph(text), digest
    return parse_presentation(text, name=name), digest


# ---------------------------------------------------------------------- commands

def cmd_validate(args, out) -> dict:
    obj, _ = _load(args.file)
    if isinstance(obj, BrauerGraph):
        cls = classify_graph(obj)
        out(f"valid Brauer graph: {len(obj.vertices)} vertices, {len(obj.edges)} edges, class {cls.tag.value}")
        return {"kind": "brauer_graph", "valid": True, "vertices": len(obj.vertices), "edges": len(obj.edges)}
    rep = check_gentle(obj)
    out(f"valid presentation: {len(obj.vertices)} vertices, dimension {obj.dimension}")
    out(f"special biserial: {'yes' if rep.is_special_biserial else 'no'}")
    out(f"gentle: {'yes' if rep.is_gentle else 'no'}")
    for v in rep.violations:
        out(f"  [{v.condition}] {v.message}")
    return {"kind": "presentation", "valid": True, "dimension": obj.dimension,
            "special_biserial": rep.is_special_biserial, "gentle": rep.is_gentle,
            "violations": [asdict(v) for v in rep.violations]}


def cmd_trivext(args, out) -> dict:
    obj, _ = _load(args.file)
    if isinstance(obj, BrauerGraph):
        raise CliFailure(EXIT_VALIDATION, "trivext expects a gentle presentation, not a Brauer graph")
    try:
        g = gamma_of_gentle(obj)
    except SelfFoldedError as exc:
        raise CliFailure(EXIT_UNSUPPORTED, f"unsupported: {exc}") from exc
    t = algebra_of_brauer_graph(g, name=f"T({obj.name})")
    ca, ct = obj.cartan_matrix(), t.cartan_matrix()
    n = len(ca)
    dim_ok = t.dimension == 2 * obj.dimension
    cartan_ok = ct == [[ca[i][j] + ca[j][i] for j in range(n)] for i in range(n)]
    out("# Brauer graph")
    out(format_brauer_graph(g), end="")
    out("# trivial extension")
    out(format_presentation(t), end="")
    out(f"# dim T(A) = {t.dimension} = 2 * {obj.dimension}: {'ok' if dim_ok else 'FAILED'}")
    out(f"# Cartan(T(A)) = C + C^T: {'ok' if cartan_ok else 'FAILED'}")
    if args.dot:
        FsPath(args.dot).write_text(brauer_graph_dot(g), encoding="utf-8")
    outcome = {"graph": format_brauer_graph(g), "edges": len(g.edges), "dimension": t.dimension,
               "dimension_ok": dim_ok, "cartan_ok": cartan_ok}
    if not (dim_ok and cartan_ok):
        raise CliFailure(EXIT_VERIFY, "structural identities failed", outcome)
    return outcome


def _graph_of(obj) -> BrauerGraph:
    if isinstance(obj, BrauerGraph):
        return obj
    try:
        return gamma_of_gentle(obj)
    except SelfFoldedError as exc:
        raise CliFailure(EXIT_UNSUPPORTED, f"unsupported: {exc}") from exc


def cmd_classify(args, out) -> dict:
    obj, _ = _load(args.file)
    g = _graph_of(obj)
    cls = classify_graph(g)
    pred = predicted_count(g)
    finite = tau_tilting_finite(g)
    census = cls.cycle_census
    out(f"class: {cls.tag.value}")
    out(f"line: {cls.is_line}  star: {cls.is_star}")
    out(f"exceptional vertices: {', '.join(cls.exceptional_vertices) or '-'}")
    out(f"cycles: {census.independent_cycles} ({', '.join(census.parities) or '-'})")
    out(f"tau-tilting finite: {finite}")
    value = pred.value if pred.value is not None else pred.status.value
    out(f"predicted count: {value} [{pred.formula.value}]")
    return {"class": cls.tag.value, "is_line": cls.is_line, "is_star": cls.is_star,
            "exceptional_vertices": list(cls.exceptional_vertices),
            "cycles": census.independent_cycles, "parities": list(census.parities), "finite": finite,
            "prediction": {"status": pred.status.value, "value": pred.value, "formula": pred.formula.value}}


def cmd_stt(args, out) -> dict:
    obj, _ = _load(args.file)
    graph: BrauerGraph | None = None
    if isinstance(obj, BrauerGraph):
        graph = obj
        pres = algebra_of_brauer_graph(obj, name=FsPath(args.file).stem)
    elif args.trivext:
        graph = _graph_of(obj)
        pres = algebra_of_brauer_graph(graph, name=f"T({obj.name})")
    else:
        pres = obj
    name = pres.name or FsPath(args.file).stem
    n = len(pres.vertices)
    formula = None
    if graph is not None:
        f = predicted_count(graph).formula.value
        formula = None if f == "None" else f
    try:
        res = support_tau_tilting(pres, SttConfig(max_strings=args.max_strings))
    except InfiniteTypeError as exc:
        outcome = json.loads(count_json(name, n, None, False, formula))
        outcome["witness"] = str(exc.witness) if exc.witness is not None else None
        if args.mode == "count":
            out(json.dumps(outcome))
        code = EXIT_INFINITE
        kind = "enumeration cap reached" if isinstance(exc, EnumerationCapError) else "infinite type"
        raise CliFailure(code, f"{kind}: {exc}", outcome) from exc
    cat, pairs = res.catalog, res.pairs
    outcome: dict[str, Any] = json.loads(count_json(name, n, len(pairs), True, formula))
    if args.mode == "count":
        out(json.dumps(outcome))
    elif args.mode == "list":
        for k, p in enumerate(pairs):
            out(f"{k:>4}  {p.describe(cat)}")
        outcome["pairs"] = [p.describe(cat) for p in pairs]
    if args.mode == "hasse" or args.dot:
        try:
            hq = hasse_quiver(cat, pairs)
        except HasseError as exc:
            raise CliFailure(EXIT_VERIFY, f"Hasse quiver check failed: {exc}", outcome) from exc
        regular = hq.is_regular(n)
        outcome.update({"edges": len(hq.edges), "source": pairs[hq.source].describe(cat),
                        "sink": pairs[hq.sink].describe(cat), "regular": regular})
        if args.mode == "hasse":
            out(f"nodes: {len(pairs)}  edges: {len(hq.edges)}")
            out(f"source: {outcome['source']}")
            out(f"sink: {outcome['sink']}")
            out(f"{n}-regular: {regular}")
        if args.dot:
            FsPath(args.dot).write_text(hasse_dot(cat, hq, name), encoding="utf-8")
        if not regular:
            raise CliFailure(EXIT_VERIFY, "Hasse quiver is not regular", outcome)
    return outcome


def cmd_verify_paper(args, out) -> dict:
    rows = run_verification(VerifyConfig(level=args.level, seed=args.seed))
    out(format_table(rows), end="")
    outcome = {"level": args.level, "rows": [{"criterion": r.number, "title": r.title, "passed": r.passed,
                                              "detail": r.detail} for r in rows]}
    if not all(r.passed for r in rows):
        raise CliFailure(EXIT_VERIFY, "some criteria failed", outcome)
    return outcome


# ---------------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brauerkit", description="Brauer graph algebras and support tau-tilting pairs")
    p.add_argument("--json", action="store_true", help="print a JSON run report instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a presentation or Brauer graph file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("trivext", help="Brauer graph and trivial extension of a gentle algebra")
    s.add_argument("file")
    s.add_argument("--dot", metavar="PATH", help="also write the Brauer graph as DOT")
    s.set_defaults(func=cmd_trivext)

    s = sub.add_parser("classify", help="classify a Brauer graph (or the graph of a gentle algebra)")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("stt", help="enumerate support tau-tilting pairs")
    s.add_argument("file")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--count", dest="mode", action="store_const", const="count")
    mode.add_argument("--list", dest="mode", action="store_const", const="list")
    mode.add_argument("--hasse", dest="mode", action="store_const", const="hasse")
    s.add_argument("--max-strings", type=int, default=100_000)
    s.add_argument("--dot", metavar="PATH", help="write the Hasse quiver as DOT")
    s.add_argument("--trivext", action="store_true", help="work with the trivial extension of a gentle input")
    s.set_defaults(func=cmd_stt, mode="count")

    s = sub.add_parser("verify-paper", help="run the acceptance table")
    s.add_argument("--level", choices=("quick", "full"), default="quick")
    s.add_argument("--seed", type=int, default=VerifyConfig.seed)
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    lines: list[str] = []

    def out(msg: str = "", end: str = "\n") -> None:
        if args.json:
            lines.append(msg + end)
        else:
            print(msg, end=end)

    digest = None
    if getattr(args, "file", None):
        try:
            digest = _read(args.file)[1]
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    t0 = time.perf_counter()
    code, outcome = EXIT_OK, {}
    try:
        outcome = args.func(args, out)
    except CliFailure as exc:
        code, outcome = exc.code, dict(exc.outcome, error=str(exc))
        if not args.json:
            print(f"error: {exc}", file=sys.stderr)
    except ParseError as exc:
        code, outcome = EXIT_PARSE, {"error": f"parse error: {exc}"}
        if not args.json:
            print(f"parse error: {exc}", file=sys.stderr)
    except SelfFoldedError as exc:
        code, outcome = EXIT_UNSUPPORTED, {"error": f"unsupported: {exc}"}
        if not args.json:
            print(f"unsupported: {exc}", file=sys.stderr)
    except ValidationError as exc:
        code, outcome = EXIT_VALIDATION, {"error": f"invalid: {exc}"}
        if not args.json:
            print(f"invalid: {exc}", file=sys.stderr)
    if args.json:
        report = RunReport(args.command, digest, outcome, int((time.perf_counter() - t0) * 1000),
                           getattr(args, "seed", None))
        print(json.dumps(asdict(report), sort_keys=True))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
