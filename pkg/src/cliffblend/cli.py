"""Command-line front end.

Usage::

    cliffblend GROUP ACTION [ARG ...] [options]

Each ARG is a literal, a ``NAME=literal`` binding, a name bound in a scenario,
or the path of a scenario file.  A scenario holds an optional algebra line
``a=<r> b=<r>`` and ``NAME = literal`` bindings, one per line; ``#`` starts a
comment.  Output is ``key = value`` lines with exact rationals.

Exit codes: 0 the property holds or the query was answered, 1 the property
fails or a counterexample was found, 2 usage, parse or domain error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import blendcore, cliffordlike, doublespace, exactnum
from .literals import (
    LiteralSyntaxError,
    format_index_set,
    parse_algebra,
    parse_parallelism,
    parse_value,
)
from .projgeom import Line, Point, RankError, polar_line
from .quat import HAMILTON, AlgebraSpec, Quaternion

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_BINDING = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*?)\s*$")


class ScenarioError(Exception):
    """Syntax or semantic error in a scenario, with 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<args>"):
        where = f"{source}:{line}:{column}: " if line else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass
class Scenario:
    algebra: AlgebraSpec = HAMILTON
    bindings: dict[str, object] = field(default_factory=dict)
    command: tuple[str, ...] = ()


def _algebra_in(text: str) -> Optional[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if re.match(r"a\s*=", line) and re.search(r"\bb\s*=", line):
            return lineno, line
    return None


def parse_scenario(text: str, algebra: Optional[AlgebraSpec] = None,
                   source: str = "<scenario>") -> Scenario:
    """Parse scenario text.  ``algebra`` overrides the scenario's own algebra line."""
    found = _algebra_in(text)
    if algebra is None:
        algebra = HAMILTON
        if found:
            lineno, line = found
            try:
                algebra = parse_algebra(line)
            except (ValueError, ArithmeticError) as exc:
                raise ScenarioError(str(exc), lineno, 1, source) from exc
    scenario = Scenario(algebra)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip() or (found and lineno == found[0]):
            continue
        m = _BINDING.match(line)
        if not m:
            col = len(line) - len(line.lstrip()) + 1
            raise ScenarioError("expected 'NAME = literal'", lineno, col, source)
        name, body = m.group(1), m.group(2)
        col = m.start(2) + 1
        scenario.bindings[name] = _parse_literal(body, algebra, lineno, col, source, scenario.bindings)
    return scenario


def _parse_literal(body: str, algebra: AlgebraSpec, lineno: int, col: int,
                   source: str, bindings: dict[str, object]):
    if _NAME.fullmatch(body):
        if body not in bindings:
            raise ScenarioError(f"unknown name {body!r}", lineno, col, source)
        return bindings[body]
    try:
        return parse_value(body, algebra)
    except LiteralSyntaxError as exc:
        raise ScenarioError(exc.message, lineno, col + exc.position, source) from exc
    except (ValueError, ArithmeticError) as exc:
        raise ScenarioError(str(exc), lineno, col, source) from exc


# -- argument coercion -------------------------------------------------------

def _as_line(v, name: str) -> Line:
    if not isinstance(v, Line):
        raise ScenarioError(f"argument {name} must be a line, got {v}")
    return v


def _as_point(v, name: str) -> Point:
    if isinstance(v, Point):
        return v
    if isinstance(v, Quaternion) and not v.is_zero():
        return Point(v)
    raise ScenarioError(f"argument {name} must be a nonzero quaternion (a point), got {v}")


def _as_partition(v, name: str) -> blendcore.FinitePartition:
    if not isinstance(v, blendcore.FinitePartition):
        raise ScenarioError(f"argument {name} must be a partition, got {v}")
    return v


def _as_index_set(v, name: str) -> frozenset:
    if not isinstance(v, frozenset):
        raise ScenarioError(f"argument {name} must be an index set like {{1,3}}, got {v}")
    return v


def _expect(args: list, names: Sequence[str]) -> None:
    if len(args) != len(names):
        raise ScenarioError(f"expected {len(names)} argument(s) {' '.join(names)}, got {len(args)}")


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


# -- command handlers --------------------------------------------------------
# each returns (list of (key, value) pairs, exit code)

Report = tuple[list[tuple[str, str]], int]


def _algebra_check(opts, sc: Scenario, args: list) -> Report:
    _expect(args, [])
    a, b = sc.algebra.a, sc.algebra.b
    places = exactnum.ramified_places(a, b)
    div = bool(places)
    out = [("division", _bool(div)),
           ("ramified", ",".join("inf" if p is None else str(p) for p in places) or "none")]
    return out, 0 if div else 1


def _line_perp(opts, sc, args) -> Report:
    _expect(args, ["M"])
    return [("perp", str(polar_line(_as_line(args[0], "M"))))], 0


def _line_transversal(opts, sc, args) -> Report:
    _expect(args, ["M"])
    side = doublespace.Side(opts.side)
    return [("side", side.value), ("transversal", str(doublespace.transversal(_as_line(args[0], "M"), side)))], 0


def _line_invariant(opts, sc, args) -> Report:
    _expect(args, ["M"])
    return [("invariant", str(doublespace.subfield_invariant(_as_line(args[0], "M"))))], 0


def _equiv_test(opts, sc, args) -> Report:
    _expect(args, ["M1", "M2"])
    m1, m2 = _as_line(args[0], "M1"), _as_line(args[1], "M2")
    verdict = doublespace.lr_equivalent(m1, m2)
    out = [("invariant1", str(doublespace.subfield_invariant(m1))),
           ("invariant2", str(doublespace.subfield_invariant(m2))),
           ("equivalent", _bool(verdict.equivalent))]
    if verdict.certificate:
        cert = verdict.certificate
        out += [("e", str(cert.e)), ("mu", exactnum.format_rational(cert.mu_scale)),
                ("L1", str(cert.source)), ("L2", str(cert.target)), ("verified", _bool(cert.verify()))]
    return out, 0 if verdict else 1


def _common_lines(opts, sc, args) -> Report:
    _expect(args, ["M1", "M2"])
    lines = sorted(str(x) for x in doublespace.common_lines(_as_line(args[0], "M1"), _as_line(args[1], "M2")))
    return [("count", str(len(lines)))] + [("line", s) for s in lines], 0 if lines else 1


def _par_build(opts, sc, args) -> Report:
    par = cliffordlike.build_parallelism(_as_line(v, f"L{i}") for i, v in enumerate(args, 1))
    return [("parallelism", str(par))], 0


def _par_test(opts, sc, args) -> Report:
    _expect(args, ["M", "N"])
    par = parse_parallelism(opts.par)
    m, n = _as_line(args[0], "M"), _as_line(args[1], "N")
    ok = cliffordlike.are_parallel(par, m, n)
    return [("parallelism", str(par)), ("side", par.side_for(m).value), ("parallel", _bool(ok))], 0 if ok else 1


def _par_classline(opts, sc, args) -> Report:
    _expect(args, ["M", "p"])
    par = parse_parallelism(opts.par)
    m, p = _as_line(args[0], "M"), _as_point(args[1], "p")
    return [("parallelism", str(par)), ("side", par.side_for(m).value),
            ("line", str(cliffordlike.class_line(par, m, p)))], 0


def _par_compare(opts, sc, args) -> Report:
    _expect(args, [])
    p1, p2 = parse_parallelism(opts.par1), parse_parallelism(opts.par2)
    cmp = cliffordlike.descriptors_equal(p1, p2, opts.probe_bound, sc.algebra)
    out = [("par1", str(p1)), ("par2", str(p2)), ("probe_bound", str(opts.probe_bound)),
           ("equal", _bool(cmp.equal))]
    if cmp.witness:
        w = cmp.witness
        out += [("witness_line", str(w.line)), ("witness_point", str(w.point)),
                ("class_line1", str(w.line1)), ("class_line2", str(w.line2))]
    return out, 0 if cmp else 1


def _ds_report(report: cliffordlike.DsReport) -> list[tuple[str, str]]:
    return [("triangle", " ".join(str(p) for p in report.triangle)),
            ("m1", str(report.m1)), ("m2", str(report.m2)),
            ("common", str(report.common) if report.common else "none"),
            ("holds", _bool(report.holds))]


def _ds_check(opts, sc, args) -> Report:
    _expect(args, ["p0", "p1", "p2"])
    pts = [_as_point(v, f"p{i}") for i, v in enumerate(args)]
    p1, p2 = parse_parallelism(opts.par1), parse_parallelism(opts.par2)
    report = cliffordlike.ds_check(*pts, p1, p2)
    return [("par1", str(p1)), ("par2", str(p2))] + _ds_report(report), 0 if report.holds else 1


def _ds_scan(opts, sc, args) -> Report:
    _expect(args, [])
    p1, p2 = parse_parallelism(opts.par1), parse_parallelism(opts.par2)
    summary = cliffordlike.ds_property_scan(p1, p2, opts.trials, opts.seed, sc.algebra)
    out = [("par1", str(p1)), ("par2", str(p2)), ("holds", f"{summary.holds}/{summary.trials}")]
    if summary.counterexample:
        out.append(("counterexample_trial", str(summary.counterexample_trial)))
        out += [("counterexample_" + k, v) for k, v in _ds_report(summary.counterexample)]
    return out, 0 if summary.counterexample is None else 1


def _blend_join(opts, sc, args) -> Report:
    _expect(args, ["P1", "P2"])
    p1, p2 = _as_partition(args[0], "P1"), _as_partition(args[1], "P2")
    return [("join", str(blendcore.join_partitions(p1, p2)))], 0


def _blend_isblend(opts, sc, args) -> Report:
    _expect(args, ["P3", "P1", "P2"])
    p3, p1, p2 = (_as_partition(v, n) for v, n in zip(args, ("P3", "P1", "P2")))
    ok = blendcore.is_blend(p3, p1, p2)
    return [("blend", _bool(ok))], 0 if ok else 1


def _blend_fromseed(opts, sc, args) -> Report:
    _expect(args, ["D", "P1", "P2"])
    d = _as_index_set(args[0], "D")
    p1, p2 = _as_partition(args[1], "P1"), _as_partition(args[2], "P2")
    return [("index_set", format_index_set(d)), ("blend", str(blendcore.blend_from_seed(d, p1, p2)))], 0


def _blend_enumerate(opts, sc, args) -> Report:
    _expect(args, ["P1", "P2"])
    p1, p2 = _as_partition(args[0], "P1"), _as_partition(args[1], "P2")
    blends = sorted(blendcore.enumerate_blends(p1, p2), key=lambda p: p.blocks)
    return [("count", str(len(blends)))] + [("blend", str(b)) for b in blends], 0


def _scan_invariants(opts, sc, args) -> Report:
    _expect(args, [])
    found = sorted(cliffordlike.triviality_scan(opts.height, sc.algebra), key=lambda s: (abs(s), s))
    return [("height", str(opts.height)), ("count", str(len(found))),
            ("invariants", ",".join(map(str, found))),
            ("nontrivial_blends_exist", _bool(len(found) >= 2))], 0


COMMANDS: dict[tuple[str, str], Callable] = {
    ("algebra", "check"): _algebra_check,
    ("line", "perp"): _line_perp,
    ("line", "transversal"): _line_transversal,
    ("line", "invariant"): _line_invariant,
    ("equiv", "test"): _equiv_test,
    ("common", "lines"): _common_lines,
    ("par", "build"): _par_build,
    ("par", "test"): _par_test,
    ("par", "classline"): _par_classline,
    ("par", "compare"): _par_compare,
    ("ds", "check"): _ds_check,
    ("ds", "scan"): _ds_scan,
    ("blend", "join"): _blend_join,
    ("blend", "isblend"): _blend_isblend,
    ("blend", "fromseed"): _blend_fromseed,
    ("blend", "enumerate"): _blend_enumerate,
    ("scan", "invariants"): _scan_invariants,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffblend",
        description="Exact blends of parallelisms over a rational quaternion skew field.",
        epilog="commands: " + ", ".join(" ".join(k) for k in COMMANDS),
    )
    parser.add_argument("group")
    parser.add_argument("action")
    parser.add_argument("args", nargs="*", help="literals, NAME=literal bindings, names, or scenario files")
    parser.add_argument("--algebra", help="structure constants 'a,b' (default -1,-1)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--height", type=int, default=3)
    parser.add_argument("--probe-bound", type=int, default=cliffordlike.DEFAULT_PROBE_BOUND)
    parser.add_argument("--side", choices=["left", "right"], default="left")
    parser.add_argument("--par", default="left")
    parser.add_argument("--par1", default="left")
    parser.add_argument("--par2", default="right")
    parser.add_argument("--expr", action="append", default=[], help="inline scenario text (repeatable)")
    return parser


def _glue_option_values(argv: list[str]) -> list[str]:
    # let "--algebra -1,-1" through argparse's negative-number heuristics
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("--algebra", "--par", "--par1", "--par2"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _collect(opts) -> tuple[Scenario, list]:
    algebra = None
    # the division check itself must accept split parameters
    checked = (opts.group, opts.action) != ("algebra", "check")
    if opts.algebra:
        try:
            algebra = parse_algebra(opts.algebra, checked)
        except (ValueError, ArithmeticError) as exc:
            raise ScenarioError(f"--algebra: {exc}") from exc
    texts: list[tuple[str, str]] = []
    rest: list[str] = []
    for tok in opts.args:
        if "=" not in tok and not tok.lstrip().startswith(("(", "[", "{")) and os.path.isfile(tok):
            with open(tok, encoding="utf-8") as fh:
                texts.append((fh.read(), tok))
        else:
            rest.append(tok)
    texts += [(t.replace(";;", "\n"), "--expr") for t in opts.expr]
    combined = "\n".join(t for t, _ in texts)
    if algebra is None:
        found = _algebra_in(combined)
        if found:
            try:
                algebra = parse_algebra(found[1], checked)
            except (ValueError, ArithmeticError) as exc:
                raise ScenarioError(str(exc)) from exc
    scenario = Scenario(algebra or HAMILTON)
    for text, source in texts:
        part = parse_scenario(text, scenario.algebra, source)
        scenario.bindings.update(part.bindings)
    args = []
    for pos, tok in enumerate(rest, 1):
        m = _BINDING.match(tok)
        if m and not tok.lstrip().startswith(("(", "[", "{")):
            value = _parse_literal(m.group(2), scenario.algebra, pos, m.start(2) + 1, "<args>", scenario.bindings)
            scenario.bindings[m.group(1)] = value
        else:
            value = _parse_literal(tok, scenario.algebra, pos, 1, "<args>", scenario.bindings)
        args.append(value)
    scenario.command = (opts.group, opts.action)
    return scenario, args


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        opts = parser.parse_intermixed_args(_glue_option_values(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:
        return 2 if exc.code else 0
    handler = COMMANDS.get((opts.group, opts.action))
    if handler is None:
        print(f"error: unknown command {opts.group} {opts.action}", file=sys.stderr)
        return 2
    try:
        scenario, args = _collect(opts)
        pairs, code = handler(opts, scenario, args)
    except (ScenarioError, LiteralSyntaxError, RankError, ValueError, ArithmeticError,
            blendcore.ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    header = [("command", f"{opts.group} {opts.action}"), ("algebra", str(scenario.algebra)),
              ("seed", str(opts.seed))]
    for key, value in header + pairs:
        print(f"{key} = {value}", file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
