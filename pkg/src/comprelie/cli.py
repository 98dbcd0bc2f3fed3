"""Command-line interface.

Every subcommand prints one JSON document.  Exit status: 0 when the
computation ran (whatever the mathematical verdict), 1 on input errors,
2 when an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io
from .algebra import validate_algebra
from .cohomology import cohomology_space
from .errors import InputError, InvariantBreach
from .extensions import build_extension, extensions_isomorphic, extract_cocycle
from .representations import validate_representation
from .wells import (
    default_samples,
    exactness_report,
    induce,
    is_compatible_pair,
    lifting_map,
    wells_class,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(f"{self.prog}: {message}")


def _algebra(path):
    return io.parse_algebra(io.read_bytes(path), path=path)


def _rep(path):
    return io.parse_rep(io.read_bytes(path), path=path)


def _extension(path):
    return io.parse_extension(io.read_bytes(path), path=path)


def _pair(path):
    return io.parse_pair(io.read_bytes(path), path=path)


def cmd_verify(args):
    return validate_algebra(_algebra(args.algebra)).to_dict()


def cmd_rep_verify(args):
    return validate_representation(_algebra(args.algebra), _rep(args.rep)).to_dict()


def cmd_cohomology(args):
    space = cohomology_space(_algebra(args.algebra), _rep(args.rep), args.degree)
    out = {
        "degree": space.degree,
        "ambient_dim": space.ambient_dim,
        "Z_dim": space.Z.dim,
        "B_dim": space.B.dim if space.B is not None else None,
        "H_dim": space.H_dim,
        "Z": io.to_json_array(space.Z.vectors),
        "B": io.to_json_array(space.B.vectors) if space.B is not None else None,
        "representatives": [io.dump_cochain(c) for c in space.H_reps],
    }
    if space.degree == 1:
        out["note"] = "no 1-coboundaries are defined; H_dim reports dim Z^1"
    return out


def cmd_extend(args):
    alg, rep = _algebra(args.algebra), _rep(args.rep)
    c = io.parse_cochain(io.read_bytes(args.cochain), path=args.cochain)
    if not hasattr(c, "phi"):
        raise InputError(f"{args.cochain}: expected a 2-cochain with phi and psi")
    return io.dump_extension(build_extension(alg, rep, c))


def cmd_extract(args):
    E = _extension(args.extension)
    s = io.parse_matrix(io.read_bytes(args.section), path=args.section) if args.section else None
    return io.dump_cochain(extract_cocycle(E, s))


def cmd_isomorphic(args):
    F = extensions_isomorphic(_extension(args.first), _extension(args.second))
    if F is None:
        return {"isomorphic": False, "verdict": "distinct"}
    return {"isomorphic": True, "F": io.to_json_array(F)}


def cmd_induce(args):
    E, pair = _extension(args.extension), _pair(args.pair)
    if not is_compatible_pair(E, pair):
        return {"inducible": False, "reason": "incompatible pair"}
    lifted = induce(E, pair)
    if lifted is None:
        w = wells_class(E, pair)
        return {
            "inducible": False,
            "reason": "nonzero Wells class",
            "wells_class": [io.format_rational(x) for x in w.coordinates],
        }
    return {
        "inducible": True,
        "gamma": io.to_json_array(lifted.gamma),
        "phi": io.to_json_array(lifting_map(E, lifted)),
    }


def cmd_wells(args):
    E, pair = _extension(args.extension), _pair(args.pair)
    if not is_compatible_pair(E, pair):
        return {"compatible": False}
    w = wells_class(E, pair)
    return {
        "compatible": True,
        "coordinates": [io.format_rational(x) for x in w.coordinates],
        "is_zero": w.is_zero,
    }


def cmd_exactness(args):
    E = _extension(args.extension)
    pairs = [_pair(p) for p in args.pair]
    samples = default_samples(E, pairs)
    out = exactness_report(E, samples).to_dict()
    out["samples"] = len(samples)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="comprelie", description="Com-PreLie algebra cohomology toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", help="check the Com-PreLie axioms")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("rep-verify", help="check the representation axioms")
    s.add_argument("algebra")
    s.add_argument("rep")
    s.set_defaults(func=cmd_rep_verify)

    s = sub.add_parser("cohomology", help="cocycles, coboundaries and cohomology in degree 1 or 2")
    s.add_argument("algebra")
    s.add_argument("rep")
    s.add_argument("--degree", type=int, choices=(1, 2), default=2)
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("extend", help="abelian extension from a 2-cocycle")
    s.add_argument("algebra")
    s.add_argument("rep")
    s.add_argument("cochain")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("extract", help="2-cocycle of an extension w.r.t. a section")
    s.add_argument("extension")
    s.add_argument("--section")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("isomorphic", help="search an isomorphism of extensions")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_isomorphic)

    s = sub.add_parser("induce", help="lift an automorphism pair to the carrier")
    s.add_argument("extension")
    s.add_argument("pair")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("wells", help="Wells class of a compatible pair")
    s.add_argument("extension")
    s.add_argument("pair")
    s.set_defaults(func=cmd_wells)

    s = sub.add_parser("exactness", help="sample check of the Wells exact sequence")
    s.add_argument("extension")
    s.add_argument("--pair", action="append", default=[])
    s.set_defaults(func=cmd_exactness)
    return p


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except InvariantBreach as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    json.dump(result, out, indent=2, sort_keys=True)
    out.write("\n")
    return 0


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
