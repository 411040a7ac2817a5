"""Command-line front end: ``mfbounds construct|analyze|transform|verify|expand``.

Exit status: 0 clean, 1 a proven check failed, 2 usage or parameter error,
3 unreadable or malformed input file.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from mfbounds import __version__
from mfbounds.complex import (
    CONTRACT_CHECKS,
    SimplicialComplex,
    boundary_of_simplex,
    contract_edge,
    f_vector,
    format_facets,
    join,
    max_missing_dim,
    missing_faces,
    read_facets,
    relabel_dense,
    subdivide_edge,
    suspension,
)
from mfbounds.constructions import construct_S, construct_S_idn, crosspolytope, stacked_sphere
from mfbounds.errors import BadLabel, EmptyInput, MFBoundsError, ParseError
from mfbounds.homology import classify, reduced_homology
from mfbounds.polyvec import f_to_h, g_expand, join_expand, hierarchy_expand
from mfbounds import verify as V

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_PROVEN_FAILURE, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    """Wraps file and parse failures so they map to exit status 3."""


def _load(path: str) -> SimplicialComplex:
    try:
        return read_facets(path)
    except (OSError, ParseError, BadLabel, EmptyInput) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected u,v but got {text!r}") from None
    return u, v


def _vectors(cx: SimplicialComplex) -> dict:
    f = f_vector(cx)
    return {"f_vector": list(f.without_empty()), "h_vector": list(f_to_h(f))}


def _complex_doc(cx: SimplicialComplex) -> dict:
    return {"facets": [list(f) for f in cx.facets], "d": cx.dim, "n": cx.n, **_vectors(cx)}


# -- subcommand handlers ----------------------------------------------------
# Each returns (document, complex to emit or None, exit status).

def _construct(args):
    kind = args.kind
    if kind == "sid":
        cx, label = construct_S(args.i, args.d), f"S({args.i},{args.d})"
    elif kind == "sidn":
        cx, label = construct_S_idn(args.i, args.d, args.n), f"S({args.i},{args.d},{args.n})"
    elif kind == "stacked":
        cx, label = stacked_sphere(args.d, args.n), f"Sk({args.d},{args.n})"
    elif kind == "crosspoly":
        cx, label = crosspolytope(args.d), f"crosspolytope boundary, d={args.d}"
    else:
        cx, label = boundary_of_simplex(args.d + 1), f"boundary of the {args.d + 1}-simplex"
    cx = relabel_dense(cx)
    doc = {"parameters": {"kind": kind, "i": args.i, "d": args.d, "n": args.n}, "label": label,
           **_complex_doc(cx)}
    return doc, (cx, label), EXIT_OK


def _analyze(args):
    cx = _load(args.file)
    doc = {"parameters": {"what": args.what, "file": args.file, "i": args.i}, "d": cx.dim, "n": cx.n}
    what = args.what
    if what in ("fvector", "hvector", "gvector"):
        doc.update(_vectors(cx))
        if what == "fvector":
            del doc["h_vector"]
    if what == "gvector":
        g = g_expand(doc["h_vector"], cx.dim, args.i)
        doc.update({"g_vector": list(g), "i": args.i})
    elif what == "missing":
        doc.update({"missing_faces": [list(m) for m in missing_faces(cx)],
                    "max_missing_dim": max_missing_dim(cx)})
    elif what == "homology":
        doc.update(reduced_homology(cx).to_dict())
    elif what == "classify":
        doc.update(classify(cx, args.i).to_dict())
    return doc, None, EXIT_OK


def _transform(args):
    cx = _load(args.file)
    op = args.op
    if op == "join":
        if not args.file2:
            raise MFBoundsError("join needs a second FILE")
        out = join(cx, _load(args.file2))
    elif op == "suspend":
        out = suspension(cx)
    elif op == "subdivide":
        out = subdivide_edge(cx, args.edge)
    else:
        out = contract_edge(cx, args.edge, check=args.check)
    out = relabel_dense(out)
    params = {"op": op, "file": args.file, "file2": args.file2,
              "edge": list(args.edge) if args.edge else None}
    if op == "contract":
        params["check"] = args.check
    return {"parameters": params, **_complex_doc(out)}, (out, op), EXIT_OK


def _verify(args):
    what = args.what
    params = {"what": what}
    if what in ("bounds", "conj13", "conj14", "duality"):
        cx = _load(args.file)
        params["file"] = args.file
        if what == "duality":
            rep = V.duality_report(cx, args.file)
        else:
            params["i"] = args.i
            fn = {"bounds": V.check_lower_bounds, "conj13": V.check_conjecture_1_3,
                  "conj14": V.check_conjecture_1_4}[what]
            rep = fn(cx, args.i, args.file)
    elif what == "recurrence":
        params.update(imax=args.imax, dmax=args.dmax)
        rep = V.verify_recurrence(args.imax, args.dmax)
    elif what == "mpw":
        params.update(kmax=args.kmax, dmax=args.dmax, nmax=args.nmax)
        rep = V.verify_mpw(args.kmax, args.dmax, args.nmax)
    else:
        params.update(d=args.d, nmax=args.nmax, i=args.i, override=args.override)
        rep = V.enumerate_and_verify(args.d, args.nmax, args.i, override=args.override,
                                     workers=args.workers)
    doc = {"parameters": params, **rep.to_dict(), "ok": rep.ok}
    if what in ("conj14",):
        doc.update({"g_vector": rep.checks[0].witness["g"], "i": args.i})
    return doc, None, EXIT_OK if rep.ok else EXIT_PROVEN_FAILURE


def _expand(args):
    if args.what == "hierarchy":
        coeffs = hierarchy_expand(args.d, args.i)
        params = {"what": "hierarchy", "d": args.d, "i": args.i}
        basis = f"B_{{{args.d},{args.i + 1}}}"
    else:
        coeffs = join_expand(args.d, args.d2, args.i)
        params = {"what": "joinpoly", "d": args.d, "d2": args.d2, "i": args.i}
        basis = f"B_{{{args.d + args.d2 + 1},{args.i}}}"
    return {"parameters": params, "basis": basis, "coefficients": list(coeffs)}, None, EXIT_OK


# -- rendering --------------------------------------------------------------

def _render_text(command: str, doc: dict, emitted) -> str:
    if emitted is not None:
        cx, label = emitted
        return format_facets(cx, label)
    lines = [command]
    if "checks" in doc:
        for c in doc["checks"]:
            tag = c["status"] + (" [proven]" if c["proven"] else "")
            lines.append(f"  {tag:<24} {c['name']}")
            lines.append(f"  {'':<24} {json.dumps(c['witness'], sort_keys=True)}")
            if c.get("verdict"):
                lines.append(f"  {'':<24} verdict: {c['verdict']}")
        lines.append("all proven checks hold" if doc["ok"] else "PROVEN CHECK FAILED")
        return "\n".join(lines) + "\n"
    for key in sorted(doc):
        if key in ("parameters",):
            continue
        lines.append(f"  {key:<22} {json.dumps(doc[key], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _render_machine(command: str, doc: dict) -> str:
    out = {"schema_version": SCHEMA_VERSION, "command": command, **doc}
    return json.dumps(out, sort_keys=True, indent=2) + "\n"


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text",
                        help="human-readable table or JSON report (default: text)")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock seconds in the report")
    common.add_argument("-o", "--output", help="write the report or facet file here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="mfbounds",
        description="Face-number lower bounds for complexes with bounded missing faces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build an extremal complex")
    p.add_argument("kind", choices=("sid", "sidn", "stacked", "crosspoly", "simplex-boundary"))
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(handler=_construct)

    p = sub.add_parser("analyze", parents=[common], help="face numbers, missing faces, homology")
    p.add_argument("what", choices=("fvector", "hvector", "gvector", "missing", "homology", "classify"))
    p.add_argument("file")
    p.add_argument("--i", type=int, default=1)
    p.set_defaults(handler=_analyze)

    p = sub.add_parser("transform", parents=[common], help="join, suspend, subdivide, contract")
    p.add_argument("op", choices=("join", "suspend", "subdivide", "contract"))
    p.add_argument("file")
    p.add_argument("file2", nargs="?")
    p.add_argument("--edge", type=_edge)
    p.add_argument("--check", choices=CONTRACT_CHECKS, default="both",
                   help="precondition for contract (default: both)")
    p.set_defaults(handler=_transform)

    p = sub.add_parser("verify", help="run a verification report")
    vsub = p.add_subparsers(dest="what", required=True)
    verify_help = {
        "bounds": "f_j >= f_j(S(i,d)) and the equality case",
        "conj13": "f_j >= f_j(S(i,d,n)) (open)",
        "conj14": "g^(i) >= 0 (open) and its consequences",
    }
    for what, text in verify_help.items():
        q = vsub.add_parser(what, parents=[common], help=text)
        q.add_argument("file")
        q.add_argument("--i", type=int, required=True)
    q = vsub.add_parser("duality", parents=[common], help="Alexander duality against the missing-face complex")
    q.add_argument("file")
    q = vsub.add_parser("recurrence", parents=[common], help="face-number recurrence of S(i,d)")
    q.add_argument("--imax", type=int, required=True)
    q.add_argument("--dmax", type=int, required=True)
    q = vsub.add_parser("mpw", parents=[common], help="linear face numbers of S(1,d,n)")
    q.add_argument("--kmax", type=int, required=True)
    q.add_argument("--dmax", type=int, required=True)
    q.add_argument("--nmax", type=int, default=12)
    q = vsub.add_parser("enumerate", parents=[common], help="exhaustive search for d = 1, 2")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--nmax", type=int, required=True)
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--override", action="store_true", help="lift the enumeration size guard")
    q.add_argument("--workers", type=int, default=1, help="processes for the scan")
    p.set_defaults(handler=_verify)

    p = sub.add_parser("expand", parents=[common], help="nonnegative basis expansions")
    p.add_argument("what", choices=("hierarchy", "joinpoly"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--d2", type=int, default=0)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(handler=_expand)
    return parser


def _fill_defaults(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "construct":
        if args.kind in ("sidn", "stacked") and args.n is None:
            parser.error(f"construct {args.kind} needs --n")
    if args.command == "transform" and args.op in ("subdivide", "contract") and args.edge is None:
        parser.error(f"transform {args.op} needs --edge u,v")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _fill_defaults(parser, args)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    command = args.command + " " + (getattr(args, "kind", None) or getattr(args, "what", None)
                                    or getattr(args, "op", ""))
    start = time.perf_counter()
    try:
        doc, emitted, status = args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_PROVEN_FAILURE
    except MFBoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timing:
        doc["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    if args.format == "machine":
        text = _render_machine(command, doc)
    else:
        text = _render_text(command, doc, emitted)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
