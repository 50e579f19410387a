"""Command-line front end: JSON inputs, text or JSON reports out.

Exit status: 0 on success, 1 on usage or input errors, 2 when a
verification fails and ``--strict`` is set.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.resources import files
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .chromatic import chi_polynomial, verify_identity_part1, verify_identity_part2
from .errors import AntiRamseyError
from .graphs import Graph, anti_ramsey_count, clique, parse_pattern, ramsey_probe
from .hodge import (
    chromatic_hodge_coefficients,
    hodge_dims_from_delta,
    verify_compressed_chain,
    verify_lattice_coh,
)
from .polytope import (
    LatticePolytope,
    Triangulation,
    check_boundary_triangulation,
    check_full_triangulation,
    count_points,
    delta_vector,
    ehrhart_polynomial,
    is_compressed,
    is_unimodular,
    polar_dual,
    verify_hstar_eq_h,
    verify_reciprocity,
)
from .reports import VerificationReport, jsonable
from .simplicial import PropertyIWitness, SimplicialComplex, apex_augment, build_complex

FIXTURES = files("antiramsey") / "fixtures"


class CliError(Exception):
    pass


def _read_json(path: Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"{path}: cannot read file ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None


def _parse(path, field: str, builder: Callable, data):
    try:
        return builder(data)
    except KeyError as exc:
        raise CliError(f"{path}: missing field {exc.args[0]!r} in {field}") from None
    except (TypeError, ValueError, AntiRamseyError) as exc:
        raise CliError(f"{path}: field {field!r}: {exc}") from None


def _field(source, path, key, builder, required=True):
    """Load source[key], which is either an inline object or a file name next to ``path``."""
    if key not in source:
        if required:
            raise CliError(f"{path}: missing field {key!r}")
        return None
    value = source[key]
    if isinstance(value, str):
        sub = Path(path).parent / value
        return _parse(sub, key, builder, _read_json(sub))
    return _parse(path, key, builder, value)


def load_complex(path) -> SimplicialComplex:
    return _parse(path, "complex", build_complex, _read_json(path))


def load_graph(path) -> Graph:
    return _parse(path, "graph", Graph.from_json, _read_json(path))


def load_polytope(path) -> LatticePolytope:
    return _parse(path, "polytope", LatticePolytope.from_json, _read_json(path))


def load_triangulation(path) -> Triangulation:
    return _parse(path, "triangulation", Triangulation.from_json, _read_json(path))


class Bundle:
    """Inputs for a verification: a complex with witness, or an auxiliary complex to augment."""

    def __init__(self, path):
        self.path = Path(path)
        data = _read_json(self.path)
        if not isinstance(data, dict):
            raise CliError(f"{path}: bundle must be a JSON object")
        self.data = data
        self.polytope = _field(data, path, "polytope", LatticePolytope.from_json, required=False)
        self.triangulation = _field(data, path, "triangulation", Triangulation.from_json, required=False)
        self.complex = _field(data, path, "complex", build_complex, required=False)
        self.witness = _field(data, path, "witness", PropertyIWitness.from_json, required=False)
        self.auxiliary = _field(data, path, "auxiliary", build_complex, required=False)

    def require(self, *keys):
        for key in keys:
            if getattr(self, key) is None:
                raise CliError(f"{self.path}: missing field {key!r}")

    def apex_pair(self) -> tuple[SimplicialComplex, PropertyIWitness]:
        if self.complex is not None and self.witness is not None:
            return self.complex, self.witness
        T = self.auxiliary
        if T is None and self.triangulation is not None:
            T = self.triangulation.complex()
        if T is None:
            raise CliError(f"{self.path}: need 'complex' with 'witness', or 'auxiliary'")
        res = apex_augment(T)
        return res.S, res.witness


def _compact(x) -> str:
    return json.dumps(jsonable(x), separators=(",", ":"))


def _report_lines(reports: list[VerificationReport]) -> str:
    return "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.identity}" for r in reports)


# Each handler returns (result, reports, text).

def cmd_chi(args):
    S = load_complex(args.complex)
    poly = chi_polynomial(S).polynomial
    if args.eval is not None:
        value = poly(args.eval)
        return {"polynomial": poly, "t": args.eval, "value": value}, [], str(value)
    return {"polynomial": poly}, [], str(poly)


def cmd_hvec(args):
    S = load_complex(args.complex)
    h = S.h_polynomial()
    return {"h": h, "f": list(S.f_vector())}, [], _compact(h)


def cmd_nonfaces(args):
    S = load_complex(args.complex)
    nf = [list(s) for s in S.minimal_nonfaces]
    return {"n": S.n, "minimal_nonfaces": nf}, [], _compact(nf)


def _patterns(specs, base):
    try:
        return [parse_pattern(s, base) for s in specs]
    except OSError as exc:
        raise CliError(f"forbidden pattern file: {exc}") from None
    except (AntiRamseyError, KeyError, TypeError, ValueError) as exc:
        raise CliError(f"--forbid: {exc}") from None


def cmd_graph(args):
    fam = _patterns(args.forbid, Path.cwd())
    if args.graph_command == "anti-ramsey":
        G = load_graph(args.graph)
        count = anti_ramsey_count(G, fam, args.colors)
        return {"count": count, "colors": args.colors}, [], str(count)
    if len(fam) != 1:
        raise CliError("ramsey takes exactly one --forbid pattern")
    res = ramsey_probe(fam[0], args.colors, args.max_n)
    out = res.to_json()
    return out, [], str(out["threshold"])


def cmd_polytope(args):
    P = load_polytope(args.polytope)
    what = args.polytope_command
    if what == "ehrhart":
        E = ehrhart_polynomial(P)
        return {"dim": P.dim, "ehrhart": E}, [], str(E)
    if what == "delta":
        d = delta_vector(P)
        return {"dim": P.dim, "delta": d}, [], _compact(d)
    if what == "dual":
        d = polar_dual(P)
        text = _compact(d.dual.vertices) if d.dual is not None else "non_integral " + _compact(d.vertices)
        return d, [], text
    region = "interior" if args.interior else "closed"
    n = count_points(P, args.m, region)
    return {"m": args.m, "region": region, "count": n}, [], str(n)


def cmd_tri(args):
    P = load_polytope(args.polytope)
    T = load_triangulation(args.tri)
    check = check_boundary_triangulation if args.boundary else check_full_triangulation
    problem = check(P, T)
    result = {"valid": problem is None, "reason": problem, "unimodular": is_unimodular(T)}
    reports = []
    if problem is None and args.boundary:
        try:
            result["compressed"] = is_compressed(P, T)
        except AntiRamseyError as exc:
            result["compressed"] = {"error": str(exc)}
    elif problem is None and result["unimodular"]:
        reports.append(verify_hstar_eq_h(P, T))
    text = "valid" if problem is None else f"invalid: {problem}"
    text += f"\nunimodular: {str(result['unimodular']).lower()}"
    if "compressed" in result and not isinstance(result["compressed"], dict):
        c = result["compressed"]
        text += f"\ncompressed: {str(c.definition_check).lower()} (h = {list(c.h)}, delta = {list(c.delta)})"
    if reports:
        text += "\n" + _report_lines(reports)
    return result, reports, text


def cmd_hodge(args):
    P = load_polytope(args.polytope)
    dims = hodge_dims_from_delta(delta_vector(P), P.dim)
    text = f"primitive {_compact(dims.primitive)}\nfull {_compact(dims.full)}"
    return dims, [], text


def cmd_verify(args):
    b = Bundle(args.bundle)
    kind = args.verify_command
    if kind == "part1":
        b.require("complex")
        reports = [verify_identity_part1(b.complex)]
    elif kind == "part2":
        S, w = b.apex_pair()
        reports = [verify_identity_part2(S, w)]
    elif kind == "compressed-chain":
        b.require("polytope", "triangulation")
        S, w = b.apex_pair()
        reports = [verify_compressed_chain(S, w, b.polytope, b.triangulation),
                   chromatic_hodge_coefficients(S, w, b.polytope, b.triangulation)]
    elif kind == "lattice-coh":
        b.require("polytope", "triangulation")
        S, w = b.apex_pair()
        reports = [verify_lattice_coh(S, w, b.polytope, b.triangulation)]
    else:
        b.require("polytope")
        reports = [verify_reciprocity(b.polytope, int(b.data.get("m_max", 5)))]
    return None, reports, _report_lines(reports)


def _fx(name) -> Path:
    return Path(str(FIXTURES / name))


def suite_checks() -> list[tuple[str, Callable[[], bool]]]:
    """Every shipped fixture check as (name, thunk returning pass)."""
    def chi_eval():
        return chi_polynomial(load_complex(_fx("tri-boundary.json"))).polynomial(2) == 6

    def part1(name):
        return lambda: verify_identity_part1(load_complex(_fx(name))).passed

    def part2(name):
        def run():
            S, w = Bundle(_fx(name)).apex_pair()
            return verify_identity_part2(S, w).passed
        return run

    def delta(name, want):
        return lambda: tuple(delta_vector(load_polytope(_fx(name)))) == want

    def recip(name):
        return lambda: verify_reciprocity(load_polytope(_fx(name)), 5).passed

    def hstar(poly, tri):
        return lambda: verify_hstar_eq_h(load_polytope(_fx(poly)), load_triangulation(_fx(tri))).passed

    def compressed(tri, want_def, want_h):
        def run():
            c = is_compressed(load_polytope(_fx("sq2.json")), load_triangulation(_fx(tri)))
            return c.definition_check == want_def and c.h == want_h and c.delta_ge_h
        return run

    def chain(name, displayed_fails=False):
        def run():
            b = Bundle(_fx(name))
            S, w = b.apex_pair()
            rep = verify_compressed_chain(S, w, b.polytope, b.triangulation)
            hod = chromatic_hodge_coefficients(S, w, b.polytope, b.triangulation)
            ok = rep.passed and hod.passed
            if displayed_fails:
                ok = ok and not rep.details["displayed_form"]["pass"]
            return ok
        return run

    def coh(name):
        def run():
            b = Bundle(_fx(name))
            S, w = b.apex_pair()
            return verify_lattice_coh(S, w, b.polytope, b.triangulation).passed
        return run

    def hodge():
        d = hodge_dims_from_delta((1, 3, 0), 2)
        return d.primitive == (0, 3) and d.full == (0, 5)

    k5, k6 = (lambda: load_graph(_fx("k5.json"))), (lambda: load_graph(_fx("k6.json")))
    return [
        ("chi tri-boundary at t=2 is 6", chi_eval),
        ("part1 tri-boundary", part1("tri-boundary.json")),
        ("part1 two-nonfaces", part1("two-nonfaces.json")),
        ("part2 apex two-points", part2("bundle-part2-two-points.json")),
        ("part2 apex path", part2("bundle-part2-path.json")),
        ("part2 apex cycle8", part2("bundle-part2-cycle8.json")),
        ("part2 explicit witness", part2("bundle-part2-explicit.json")),
        ("ramsey clique:3 two colors is 6", lambda: ramsey_probe(clique(3), 2, 8).threshold == 6),
        ("anti-ramsey K5 clique:3 t=2 is 12", lambda: anti_ramsey_count(k5(), [clique(3)], 2) == 12),
        ("anti-ramsey K6 clique:3 t=2 is 0", lambda: anti_ramsey_count(k6(), [clique(3)], 2) == 0),
        ("delta sq01", delta("sq01.json", (1, 1, 0))),
        ("delta simplex2x", delta("simplex2x.json", (1, 3, 0))),
        ("delta sq2", delta("sq2.json", (1, 6, 1))),
        *[(f"reciprocity {p}", recip(p + ".json")) for p in ("seg02", "seg11", "sq01", "sq2", "simplex2x", "cube01")],
        ("h* = h seg02 unit", hstar("seg02.json", "seg02-unit.json")),
        ("h* = h sq01 diagonal", hstar("sq01.json", "sq01-diagonal.json")),
        ("h* = h cube staircase", hstar("cube01.json", "cube01-staircase.json")),
        ("compressed sq2 ring8", compressed("sq2-ring8.json", True, (1, 6, 1))),
        ("not compressed sq2 corners", compressed("sq2-corners.json", False, (1, 2, 1))),
        ("chain seg11 (displayed form fails)", chain("bundle-chain-seg11.json", displayed_fails=True)),
        ("chain sq2", chain("bundle-chain-sq2.json")),
        ("lattice coh seg02", coh("bundle-coh-seg02.json")),
        ("lattice coh seg01 degenerate", coh("bundle-coh-seg01.json")),
        ("hodge (1,3,0)", hodge),
    ]


def cmd_suite(args):
    results = []
    for name, run in suite_checks():
        try:
            ok, err = bool(run()), None
        except AntiRamseyError as exc:
            ok, err = False, str(exc)
        results.append({"check": name, "pass": ok, **({"error": err} if err else {})})
    text = "\n".join(f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']}" for r in results)
    failed = sum(not r["pass"] for r in results)
    text += f"\n{len(results) - failed}/{len(results)} passed"
    return {"checks": results, "failed": failed}, [], text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON envelope")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="exit 2 when any verification fails")

    p = argparse.ArgumentParser(prog="antiramsey", parents=[common],
                                description="Simplicial chromatic polynomials, anti-Ramsey counts and Ehrhart checks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chi", parents=[common], help="chromatic polynomial of a complex")
    s.add_argument("--complex", required=True, type=Path)
    s.add_argument("--eval", type=int, metavar="T")
    s.set_defaults(func=cmd_chi)

    for name, func, help_ in (("hvec", cmd_hvec, "h-polynomial of a complex"),
                              ("nonfaces", cmd_nonfaces, "minimal nonfaces of a complex")):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--complex", required=True, type=Path)
        s.set_defaults(func=func)

    g = sub.add_parser("graph", parents=[common], help="anti-Ramsey counts and Ramsey probes")
    gs = g.add_subparsers(dest="graph_command", required=True)
    s = gs.add_parser("anti-ramsey", parents=[common])
    s.add_argument("--graph", required=True, type=Path)
    s.add_argument("--forbid", required=True, action="append", metavar="SPEC",
                   help="clique:I, cycle:L, path:L or subgraph:@file.json; repeatable")
    s.add_argument("--colors", required=True, type=int)
    s.set_defaults(func=cmd_graph)
    s = gs.add_parser("ramsey", parents=[common])
    s.add_argument("--forbid", required=True, action="append", metavar="SPEC")
    s.add_argument("--colors", required=True, type=int)
    s.add_argument("--max-n", required=True, type=int)
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("polytope", parents=[common], help="lattice polytope data")
    s.add_argument("polytope_command", choices=["ehrhart", "delta", "dual", "count"])
    s.add_argument("--polytope", required=True, type=Path)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--interior", action="store_true")
    s.set_defaults(func=cmd_polytope)

    t = sub.add_parser("tri", parents=[common], help="triangulation checks")
    ts = t.add_subparsers(dest="tri_command", required=True)
    s = ts.add_parser("check", parents=[common])
    s.add_argument("--polytope", required=True, type=Path)
    s.add_argument("--tri", required=True, type=Path)
    s.add_argument("--boundary", action="store_true", help="T triangulates the boundary of P")
    s.set_defaults(func=cmd_tri)

    s = sub.add_parser("hodge", parents=[common], help="Hodge filtration dimensions from delta")
    s.add_argument("--polytope", required=True, type=Path)
    s.set_defaults(func=cmd_hodge)

    s = sub.add_parser("verify", parents=[common], help="verify an identity on a bundle")
    s.add_argument("verify_command", choices=["part1", "part2", "compressed-chain", "lattice-coh", "reciprocity"])
    s.add_argument("--bundle", required=True, type=Path)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", parents=[common], help="run every shipped fixture check")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 1
    args.json = getattr(args, "json", False)
    args.strict = getattr(args, "strict", False)
    try:
        result, reports, text = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AntiRamseyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {"command": " ".join(_command_words(args)), "result": jsonable(result),
                    "reports": [r.to_json() for r in reports]}
        print(json.dumps(envelope, indent=2))
    else:
        print(text)
    failed = any(not r.passed for r in reports)
    if isinstance(result, dict) and (result.get("valid") is False or result.get("failed")):
        failed = True
    return 2 if failed and args.strict else 0


def _command_words(args) -> list[str]:
    words = [args.command]
    for attr in ("graph_command", "polytope_command", "tri_command", "verify_command"):
        if getattr(args, attr, None):
            words.append(getattr(args, attr))
    return words


if __name__ == "__main__":
    sys.exit(main())
