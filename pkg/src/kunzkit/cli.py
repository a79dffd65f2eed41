"""Command-line front end: ``kunzkit <subcommand> [input] [options]``.

Input is exactly one of: a generator shorthand ("6,7,8,9"), inline JSON,
a path to a JSON file, or the ``--m`` flag combined with one of
``--hyperplanes``, ``--covers``, ``--kunz``, ``--apery``.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .common import INF, KunzError
from .facetools import Face, face_of_semigroup, find_semigroup_on_face
from .kunzposet import KunzPoset
from .oracle import check_semigroup
from .presentation import (
    betti_matrix,
    dimension,
    enumerate_cardinalities,
    m_centric_presentation,
    min_pres_poset,
    outer_betti,
    parametric_presentation,
)
from .semigroup import (
    NumericalSemigroup,
    apery,
    factorizations,
    kunz_tuple,
    minimal_presentation_classic,
    parse_generators,
)

SUBCOMMANDS = (
    "apery", "kunz", "poset", "factorizations", "minpres-poset", "outer-betti",
    "betti-matrix", "dimension", "minpres", "parametric", "find-semigroup",
    "check", "enumerate-cardinalities",
)


class UsageError(Exception):
    pass


def _load_json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


def _input_object(args) -> dict:
    """Normalize the input options to one JSON-style dict."""
    sources = []
    if args.input is not None:
        sources.append("input")
    for flag in ("hyperplanes", "covers", "kunz", "apery_values"):
        if getattr(args, flag, None) is not None:
            sources.append(flag)
    if len(sources) != 1:
        raise UsageError("give exactly one input: generators, JSON, a JSON file, "
                         "or --m with one of --hyperplanes/--covers/--kunz/--apery")
    src = sources[0]
    if src == "input":
        text = args.input.strip()
        if text.startswith("{"):
            return _load_json_arg(text)
        if os.path.isfile(text):
            with open(text) as fh:
                return _load_json_arg(fh.read())
        try:
            return {"generators": list(parse_generators(text).generators)}
        except ValueError:
            raise UsageError(f"cannot read {text!r} as generators, JSON, or a file") from None
    if args.m is None:
        raise UsageError(f"--{src.replace('_values', '')} requires --m")
    key = {"apery_values": "apery"}.get(src, src)
    return {"m": args.m, key: _load_json_arg(getattr(args, src))}


def _semigroup(args) -> NumericalSemigroup:
    obj = _input_object(args)
    if "hyperplanes" in obj or "covers" in obj or "equalities" in obj:
        raise UsageError(f"'{args.command}' needs a semigroup, not a poset or face")
    return NumericalSemigroup.from_json(obj)


def _poset(args) -> KunzPoset:
    return KunzPoset.from_json(_input_object(args))


def _face(args) -> Face:
    obj = _input_object(args)
    if "covers" in obj:
        raise UsageError("a face needs hyperplane rows or a semigroup, not covers")
    if "hyperplanes" in obj or "equalities" in obj:
        return Face.from_json(obj)
    return face_of_semigroup(NumericalSemigroup.from_json(obj))


def _jsonable(x):
    return "inf" if x is INF else x


def _trades_json(trades):
    return [t.to_json() for t in trades]


def _run(args) -> tuple[object, str | None]:
    """Returns (JSON-able payload, optional preformatted text)."""
    cmd = args.command
    if cmd == "apery":
        a = apery(_semigroup(args))
        return {"m": a.m, "apery": list(a.full)}, " ".join(map(str, a.full))
    if cmd == "kunz":
        x = kunz_tuple(_semigroup(args))
        return {"m": x.m, "kunz": list(x.values)}, " ".join(map(str, x.values))
    if cmd == "poset":
        P = _poset(args)
        text = P.to_dot() if args.format == "dot" else None
        return P.to_json(), text
    if cmd == "factorizations":
        if args.element is not None:
            S = _semigroup(args)
            return [list(z) for z in factorizations(S, args.element)], None
        P = _poset(args)
        if args.element_class is not None:
            p = args.element_class % P.modulus
            return [list(z) for z in P.factorizations(p)], None
        return {str(p): [list(z) for z in P.factorizations(p)] for p in P.ground}, None
    if cmd == "minpres-poset":
        return _trades_json(min_pres_poset(_poset(args))), None
    if cmd == "outer-betti":
        return [B.to_json() for B in outer_betti(_poset(args))], None
    if cmd == "betti-matrix":
        M = betti_matrix(_poset(args))
        text = "\n".join("[" + " ".join(f"{v:2d}" for v in r) + "]" for r in M.rows)
        return M.tolist(), text
    if cmd == "dimension":
        return dimension(_poset(args)), None
    if cmd == "minpres":
        S = _semigroup(args)
        trades = minimal_presentation_classic(S) if args.classic else m_centric_presentation(S)
        return _trades_json(trades), None
    if cmd == "parametric":
        return parametric_presentation(_poset(args)).to_json(), None
    if cmd == "find-semigroup":
        return find_semigroup_on_face(_face(args), args.bound).to_json(), None
    if cmd == "check":
        S = _semigroup(args)
        results = check_semigroup(S)
        text = "\n".join(f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results.items())
        return {"semigroup": list(S.generators), "results": results, "passed": all(results.values())}, text
    if cmd == "enumerate-cardinalities":
        if args.m is None or args.max_coord is None:
            raise UsageError("enumerate-cardinalities needs --m and --max-coord")
        counts = enumerate_cardinalities(args.m, args.max_coord)
        return {"m": args.m, "max_coord": args.max_coord, "cardinalities": sorted(counts),
                "faces_per_cardinality": {str(c): n for c, n in counts.items()}}, None
    raise UsageError(f"unknown subcommand {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kunzkit", description="Kunz posets, minimal presentations, face dimension.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", help='generators "6,7,8,9", inline JSON, or a JSON file')
        p.add_argument("--m", type=int)
        p.add_argument("--hyperplanes", help="JSON list of face equality rows (columns 1..m-1)")
        p.add_argument("--covers", help="JSON list of cover pairs [a, b]")
        p.add_argument("--kunz", help="JSON list of Kunz coordinates")
        p.add_argument("--apery", dest="apery_values", help="JSON list of Apery coordinates")
        p.add_argument("--format", choices=("json", "dot", "text"), default="json")
        p.add_argument("--seed", type=int, help="accepted for compatibility; all algorithms are deterministic")
        if name == "factorizations":
            p.add_argument("--element-class", type=int, help="poset element (residue class)")
            p.add_argument("--element", type=int, help="semigroup element")
        if name == "minpres":
            p.add_argument("--classic", action="store_true", help="use the Betti-element construction")
        if name == "find-semigroup":
            p.add_argument("--bound", type=int, default=6)
        if name == "enumerate-cardinalities":
            p.add_argument("--max-coord", type=int)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, text = _run(args)
    except UsageError as exc:
        print(f"kunzkit {args.command}: usage error: {exc}", file=sys.stderr)
        return 2
    except KunzError as exc:
        print(f"kunzkit {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, TypeError) as exc:
        print(f"kunzkit {args.command}: usage error: malformed input ({exc})", file=sys.stderr)
        return 2
    if args.format == "dot" and args.command != "poset":
        print(f"kunzkit {args.command}: usage error: --format dot is only available for 'poset'", file=sys.stderr)
        return 2
    if args.format == "json" or text is None:
        print(json.dumps(payload, default=_jsonable))
    else:
        print(text.rstrip("\n"))
    if args.command == "check" and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
