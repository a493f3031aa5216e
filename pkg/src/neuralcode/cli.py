"""Command-line front end.

Exit codes: 0 success, 1 unreadable or malformed input, 2 contract
violation or capacity limit, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys

from .codes import parse_code, simplicial_completion
from .complex import delta_complex, euler_characteristic, f_vector, render_face
from .cover import atoms, code_of_cover, nerve_equals_delta, parse_cover, render_atoms
from .errors import ContractError, InvariantFailure, NeuralCodeError, ParseError
from .ideal import canonical_form, rf_relations
from .topology import (
    betti_numbers,
    helly_lower_bound,
    pi1_presentation,
    render_betti,
    shortest_edge_path,
)

PROG = "neuralcode"

CODE_COMMANDS = (
    "complete",
    "complex",
    "homology",
    "pi1",
    "canonical-form",
    "relations",
    "dim-bound",
    "path",
)
COVER_COMMANDS = ("cover-code", "atoms", "nerve-check")


def _kv(pairs) -> str:
    return "".join(f"{k}={v}\n" for k, v in pairs)


def _join(items, sep=",") -> str:
    return sep.join(str(x) for x in items)


def _code_report(code, machine: bool) -> str:
    if machine:
        return _kv([("n", code.n), ("count", len(code)), ("words", _join(code.strings()))])
    return code.render()


def cmd_complete(code, args) -> str:
    return _code_report(simplicial_completion(code), args.machine)


def cmd_complex(code, args) -> str:
    k = delta_complex(code)
    if args.machine:
        return _kv([
            ("n", k.n),
            ("dimension", k.dimension),
            ("facets", _join((render_face(f) for f in k.facets), ";")),
            ("f_vector", _join(f_vector(k))),
            ("euler", euler_characteristic(k)),
        ])
    return k.render()


def cmd_homology(code, args) -> str:
    betti = betti_numbers(delta_complex(code), args.kmax)
    if args.machine:
        return _kv((f"b{i}", b) for i, b in enumerate(betti))
    return render_betti(betti) + "\n"


def cmd_pi1(code, args) -> str:
    pres = pi1_presentation(delta_complex(code), args.basepoint)
    if args.machine:
        return _kv([
            ("basepoint", pres.basepoint),
            ("generators", len(pres.generators)),
            ("relations", len(pres.relations)),
            ("generator_edges", _join((f"e({i},{j})" for i, j in pres.generators), ";")),
        ])
    return pres.render()


def cmd_canonical_form(code, args) -> str:
    cf = canonical_form(code)
    if args.machine:
        return _kv([("count", len(cf)), ("cf", _join((z.render() for z in cf), "; "))])
    return "".join(z.render() + "\n" for z in cf)


def cmd_relations(code, args) -> str:
    rels = rf_relations(code)
    if args.machine:
        lines = [("count", len(rels))]
        lines += [(f"relation.{i}", f"{r.kind.value}: {r.render()}") for i, r in enumerate(rels, 1)]
        return _kv(lines)
    return "".join(r.render() + "\n" for r in rels)


def cmd_dim_bound(code, args) -> str:
    bound = helly_lower_bound(delta_complex(code))
    if args.machine:
        return _kv([("helly_lower_bound", bound)])
    return f"{bound}\n"


def cmd_path(code, args) -> str:
    path = shortest_edge_path(delta_complex(code), args.source, args.target)
    if args.machine:
        return _kv([("path", _join(path)), ("length", len(path) - 1)])
    return " -> ".join(map(str, path)) + "\n"


def cmd_cover_code(cover, args) -> str:
    return _code_report(code_of_cover(cover), args.machine)


def cmd_atoms(cover, args) -> str:
    atlas = atoms(cover)
    if args.machine:
        return _kv((f"atom.{w}", _join(sorted(pts))) for w, pts in atlas.items())
    return render_atoms(atlas)


def cmd_nerve_check(cover, args) -> str:
    report = nerve_equals_delta(cover)
    if not report.equal:
        raise InvariantFailure(
            f"nerve and Delta of the cover code differ at face {sorted(report.witness)}"
        )
    faces = len(report.nerve.faces())
    if args.machine:
        return _kv([("equal", "true"), ("faces", faces), ("facets", len(report.nerve.facets))])
    return f"equal faces={faces} facets={len(report.nerve.facets)}\n"


HANDLERS = {
    "complete": cmd_complete,
    "complex": cmd_complex,
    "homology": cmd_homology,
    "pi1": cmd_pi1,
    "canonical-form": cmd_canonical_form,
    "relations": cmd_relations,
    "dim-bound": cmd_dim_bound,
    "path": cmd_path,
    "cover-code": cmd_cover_code,
    "atoms": cmd_atoms,
    "nerve-check": cmd_nerve_check,
}

HELP = {
    "complete": "simplicial completion of a code",
    "complex": "facets of the simplicial complex of a code",
    "homology": "F2 Betti numbers of the complex of a code",
    "pi1": "edge-path presentation of the fundamental group",
    "canonical-form": "canonical form of the neural ideal",
    "relations": "receptive-field relations from the canonical form",
    "dim-bound": "Helly lower bound on a convex embedding dimension",
    "path": "shortest edge path between two vertices",
    "cover-code": "code of a cover file",
    "atoms": "points realizing each codeword of a cover",
    "nerve-check": "verify that the nerve equals the complex of the cover code",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Topology of binary neural codes.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in CODE_COMMANDS + COVER_COMMANDS:
        p = sub.add_parser(name, help=HELP[name])
        kind = "cover" if name in COVER_COMMANDS else "code"
        p.add_argument("input", help=f"{kind} file, or '-' for standard input")
        p.add_argument("--machine", action="store_true", help="emit key=value lines")
        if name == "homology":
            p.add_argument("--kmax", type=int, default=None, help="highest homology degree")
        elif name == "pi1":
            p.add_argument("--basepoint", type=int, default=None, help="base vertex (default: smallest)")
        elif name == "path":
            p.add_argument("--from", dest="source", type=int, required=True, help="start vertex")
            p.add_argument("--to", dest="target", type=int, required=True, help="end vertex")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    name = args.input if args.input != "-" else "<stdin>"
    try:
        text = _read(args.input)
        data = parse_cover(text) if args.command in COVER_COMMANDS else parse_code(text)
    except ParseError as exc:
        where = f"{name}:{exc.lineno}" if exc.lineno is not None else name
        print(f"{PROG}: {where}: {exc.message}", file=sys.stderr)
        return 1
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{PROG}: {name}: {exc}", file=sys.stderr)
        return 1
    except ContractError as exc:
        print(f"{PROG}: {name}: {exc}", file=sys.stderr)
        return 2

    try:
        out = HANDLERS[args.command](data, args)
    except InvariantFailure as exc:
        print(f"{PROG}: internal error: {exc}", file=sys.stderr)
        return 3
    except ContractError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    except NeuralCodeError as exc:
        print(f"{PROG}: internal error: {exc}", file=sys.stderr)
        return 3
    _write(out)
    return 0


def _write(text: str) -> None:
    # relation output is not ASCII; do not depend on the locale
    buffer = getattr(sys.stdout, "buffer", None)
    if buffer is None:
        sys.stdout.write(text)
    else:
        sys.stdout.flush()
        buffer.write(text.encode("utf-8"))
        buffer.flush()


if __name__ == "__main__":
    sys.exit(main())
