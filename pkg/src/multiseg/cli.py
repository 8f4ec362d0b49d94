"""Command-line front-end with JSON/DOT input and output.

Every subcommand reads JSON files, writes machine-readable JSON (or DOT)
and exits 0 on success, 2 on parse failures, 3 on domain errors and 4 when
an enumeration cap is hit.  Output is byte-identical across runs.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .core import Multisegment, Segment
from .errors import DomainError, ResourceLimitError
from .multiplicity import mult, mult_matrix, same_relation_type
from .poset import DEFAULT_MAX_POSET_SIZE, generate_poset, hasse_dot
from .ring import RingElement, derivative_begin, derivative_end, to_l_basis, to_pi_basis
from .symmetrization import lift, symmetrize
from .truncation import BEGIN, END, DescentPath, descent_set, truncate_begin, truncate_end, truncate_path
from .weyl import kl_polynomial, perm_from_string, phi, phi_inverse

_CORPUS = {
    "mult": {
        "a": [[1, 1], [2, 2], [2, 2], [3, 3]],
        "b": [[1, 2], [2, 3]],
        "value": 2,
    },
    "symmetrize": {
        "ordinary": [[0, 1], [1, 3], [2, 2], [3, 4]],
        "c1": [[3, 4]],
        "c2": [[0, 1]],
        "symmetric": [[0, 3], [1, 5], [2, 4], [3, 6]],
    },
    "kl": {"x": "1324", "w": "3412", "coefficients": [1, 1]},
}


def corpus_hash() -> str:
    digest = hashlib.sha256(json.dumps(_CORPUS, sort_keys=True).encode("utf-8"))
    return digest.hexdigest()[:12]


def _emit(obj: object) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _load_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def _load_multisegment(path: str) -> Multisegment:
    return Multisegment.from_json(_load_json(path))


def _path_argument(path: str, side: str) -> DescentPath:
    data = _load_json(path)
    if isinstance(data, list) and len(data) == 2 and all(isinstance(x, int) for x in data):
        return DescentPath.from_segment(Segment(data[0], data[1]), side)
    return DescentPath.from_multisegment(Multisegment.from_json(data), side)


def _sorted_json(elements) -> list[dict]:
    return [m.to_json() for m in sorted(elements, key=Multisegment.sort_key)]


def _cmd_poset(args: argparse.Namespace) -> int:
    a = _load_multisegment(args.input)
    poset = generate_poset(a, max_size=args.max_size)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(hasse_dot(poset))
    edges = sorted(poset.edges, key=lambda e: (e[0].sort_key(), e[1].sort_key()))
    _emit(
        {
            "root": a.to_json(),
            "size": len(poset),
            "minimal": poset.minimal().to_json(),
            "elements": _sorted_json(poset.elements),
            "edges": [[p.to_json(), c.to_json()] for p, c in edges],
        }
    )
    return 0


def _cmd_truncate(args: argparse.Namespace) -> int:
    a = _load_multisegment(args.input)
    if args.end is not None:
        result = truncate_end(a, args.end)
    elif args.begin is not None:
        result = truncate_begin(a, args.begin)
    else:
        result = truncate_path(a, _path_argument(args.path, args.side))
    _emit(result.to_json())
    return 0


def _cmd_descent_set(args: argparse.Namespace) -> int:
    a = _load_multisegment(args.input)
    members = descent_set(a, args.k, side=args.side, max_size=args.max_size)
    _emit({"elements": _sorted_json(members)})
    return 0


def _cmd_symmetrize(args: argparse.Namespace) -> int:
    data = symmetrize(_load_multisegment(args.input))
    _emit(
        {
            "original": data.original.to_json(),
            "ordinary": data.ordinary.to_json(),
            "symmetric": data.symmetric.to_json(),
            "c1": data.c1.to_json(),
            "c2": data.c2.to_json(),
            "c3": data.c3.to_json(),
        }
    )
    return 0


def _cmd_lift(args: argparse.Namespace) -> int:
    data = symmetrize(_load_multisegment(args.a))
    _emit(lift(data, _load_multisegment(args.b), max_size=args.max_size).to_json())
    return 0


def _cmd_phi(args: argparse.Namespace) -> int:
    base = _load_multisegment(args.base)
    if args.w is not None:
        _emit(phi(base, perm_from_string(args.w)).to_json())
    else:
        _emit({"one_line": list(phi_inverse(base, _load_multisegment(args.inverse)))})
    return 0


def _cmd_kl(args: argparse.Namespace) -> int:
    poly = kl_polynomial(perm_from_string(args.x), perm_from_string(args.w))
    _emit(list(poly.coefficients))
    return 0


def _cmd_mult(args: argparse.Namespace) -> int:
    value = mult(
        _load_multisegment(args.b),
        _load_multisegment(args.a),
        max_size=args.max_size,
    )
    print(value)
    return 0


def _cmd_mult_matrix(args: argparse.Namespace) -> int:
    a = _load_multisegment(args.input)
    matrix = mult_matrix(a, max_size=args.max_size)
    payload = {
        "root": a.to_json(),
        "entries": [
            {"multisegment": b.to_json(), "mult": matrix[b]}
            for b in sorted(matrix, key=Multisegment.sort_key)
        ],
    }
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, separators=(",", ":"))
            handle.write("\n")
    else:
        _emit(payload)
    return 0


def _cmd_relation_type(args: argparse.Namespace) -> int:
    mapping = same_relation_type(
        _load_multisegment(args.a), _load_multisegment(args.a2)
    )
    if mapping is None:
        _emit({"same": False})
    else:
        _emit(
            {
                "same": True,
                "end_map": [list(p) for p in mapping.end_map],
                "begin_map": [list(p) for p in mapping.begin_map],
            }
        )
    return 0


def _cmd_ring(args: argparse.Namespace) -> int:
    element = RingElement.from_json(_load_json(args.expr))
    if args.ring_command == "derive":
        if args.end is not None:
            result = derivative_end(element, args.end)
        else:
            result = derivative_begin(element, args.begin)
    elif args.ring_command == "to-l":
        result = to_l_basis(element, max_size=args.max_size)
    else:
        result = to_pi_basis(element, max_size=args.max_size)
    _emit(result.to_json())
    return 0


def _add_max_size(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-size",
        type=int,
        default=DEFAULT_MAX_POSET_SIZE,
        help="cap on enumerated poset size",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiseg",
        description="multisegment posets, truncation descent, symmetrization and multiplicities",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"multiseg {__version__} corpus:{corpus_hash()}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", help="enumerate the poset below a multisegment")
    p.add_argument("input")
    p.add_argument("--dot", help="write a Hasse diagram in DOT format to this file")
    _add_max_size(p)
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("truncate", help="apply end/begin truncation or a full path")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--end", type=int)
    group.add_argument("--begin", type=int)
    group.add_argument("--path", help="JSON file with a [b,e] pair or a multisegment")
    p.add_argument("--side", choices=(END, BEGIN), default=END, help="side used with --path")
    p.set_defaults(func=_cmd_truncate)

    p = sub.add_parser("descent-set", help="members on which truncation is a bijection")
    p.add_argument("input")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--side", choices=(END, BEGIN), default=END)
    _add_max_size(p)
    p.set_defaults(func=_cmd_descent_set)

    p = sub.add_parser("symmetrize", help="grow a multisegment into a symmetric one")
    p.add_argument("input")
    p.set_defaults(func=_cmd_symmetrize)

    p = sub.add_parser("lift", help="lift an element of the poset of a to the symmetric side")
    p.add_argument("a")
    p.add_argument("b")
    _add_max_size(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("phi", help="pair begins of a symmetric base with permuted ends")
    p.add_argument("base")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--w", help="one-line permutation, e.g. 1324 or 3,4,1,2")
    group.add_argument("--inverse", help="multisegment JSON to read back as a permutation")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial coefficients")
    p.add_argument("--x", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=_cmd_kl)

    p = sub.add_parser("mult", help="multiplicity of b in the induced product of a")
    p.add_argument("b")
    p.add_argument("a")
    _add_max_size(p)
    p.set_defaults(func=_cmd_mult)

    p = sub.add_parser("mult-matrix", help="multiplicities of every element below a")
    p.add_argument("input")
    p.add_argument("--json", help="write the matrix to this file instead of stdout")
    _add_max_size(p)
    p.set_defaults(func=_cmd_mult_matrix)

    p = sub.add_parser("relation-type", help="align two multisegments by relation type")
    p.add_argument("a")
    p.add_argument("a2")
    p.set_defaults(func=_cmd_relation_type)

    p = sub.add_parser("ring", help="ring element operations")
    ring_sub = p.add_subparsers(dest="ring_command", required=True)
    d = ring_sub.add_parser("derive", help="apply a partial derivative")
    d.add_argument("expr")
    group = d.add_mutually_exclusive_group(required=True)
    group.add_argument("--end", type=int)
    group.add_argument("--begin", type=int)
    d.set_defaults(func=_cmd_ring)
    for name in ("to-l", "to-pi"):
        c = ring_sub.add_parser(name, help=f"convert an expression ({name})")
        c.add_argument("expr")
        _add_max_size(c)
        c.set_defaults(func=_cmd_ring)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
