"""JSON file formats.  Rationals are written as "p/q" strings, or "p" when q = 1."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

import numpy as np

from .algebra import ComPreLieAlgebra, validate_algebra
from .cohomology import Cochain2
from .errors import InputError
from .extensions import AbelianExtension, validate_extension
from .representations import Representation
from .wells import AutPair

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(obj, path: str = "$") -> Fraction:
    if isinstance(obj, bool):
        raise InputError(f"{path}: expected a rational, got {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str) and _RATIONAL.match(obj):
        try:
            return Fraction(obj.replace(" ", ""))
        except ZeroDivisionError:
            raise InputError(f"{path}: zero denominator in {obj!r}") from None
    raise InputError(f"{path}: bad rational {obj!r} (expected \"p/q\" or \"p\")")


def to_json_array(arr) -> list:
    a = np.asarray(arr, dtype=object)
    if a.ndim == 0:
        return format_rational(a.item())
    return [to_json_array(x) for x in a]


def parse_array(obj, shape: tuple, path: str) -> np.ndarray:
    """Nested lists of rationals with exactly ``shape``; None entries in shape mean any."""
    out_shape = []

    def walk(o, depth, p):
        if depth == len(shape):
            return parse_rational(o, p)
        if not isinstance(o, list):
            raise InputError(f"{p}: expected a list at depth {depth}")
        want = shape[depth]
        if depth == len(out_shape):
            out_shape.append(len(o) if want is None else want)
        if len(o) != out_shape[depth]:
            raise InputError(f"{p}: expected length {out_shape[depth]}, got {len(o)}")
        return [walk(x, depth + 1, f"{p}[{k}]") for k, x in enumerate(o)]

    data = walk(obj, 0, path)
    arr = np.empty(tuple(out_shape), dtype=object)
    for idx in np.ndindex(*arr.shape):
        v = data
        for k in idx:
            v = v[k]
        arr[idx] = v
    return arr


def _load(src):
    if isinstance(src, dict):
        return src
    if isinstance(src, (bytes, bytearray)):
        src = src.decode("utf-8")
    try:
        obj = json.loads(src)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("$: expected a JSON object")
    return obj


def _field(obj: dict, key: str, path: str):
    if key not in obj:
        raise InputError(f"{path}: missing field {key!r}")
    return obj[key]


def _count(obj, path: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int) or obj < 0:
        raise InputError(f"{path}: expected a non-negative integer, got {obj!r}")
    return obj


# -- algebras -----------------------------------------------------------------

def parse_algebra(src, path: str = "$", check: bool = True) -> ComPreLieAlgebra:
    obj = _load(src)
    n = _count(_field(obj, "dim", path), f"{path}.dim")
    basis = obj.get("basis", [f"e{k + 1}" for k in range(n)])
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
        raise InputError(f"{path}.basis: expected {n} strings")
    star = parse_array(_field(obj, "star", path), (n, n, n), f"{path}.star")
    bullet = parse_array(_field(obj, "bullet", path), (n, n, n), f"{path}.bullet")
    alg = ComPreLieAlgebra(star, bullet, tuple(basis))
    if check:
        report = validate_algebra(alg)
        if not report.passed:
            bad = {k: c.witness for k, c in report.checks.items() if not c.passed}
            raise InputError(f"{path}: algebra fails axioms {bad}")
    return alg


def dump_algebra(alg: ComPreLieAlgebra) -> dict:
    return {
        "dim": alg.dim,
        "basis": list(alg.basis),
        "star": to_json_array(alg.star),
        "bullet": to_json_array(alg.bullet),
    }


# -- representations ------------------------------------------------------------

def parse_rep(src, path: str = "$") -> Representation:
    obj = _load(src)
    n = _count(_field(obj, "alg_dim", path), f"{path}.alg_dim")
    m = _count(_field(obj, "mod_dim", path), f"{path}.mod_dim")
    fams = [parse_array(_field(obj, k, path), (n, m, m), f"{path}.{k}") for k in ("mu", "l", "r")]
    return Representation(*fams)


def dump_rep(rep: Representation) -> dict:
    return {
        "alg_dim": rep.alg_dim,
        "mod_dim": rep.mod_dim,
        "mu": to_json_array(rep.mu),
        "l": to_json_array(rep.l),
        "r": to_json_array(rep.r),
    }


# -- cochains -------------------------------------------------------------------

def parse_cochain(src, path: str = "$"):
    """Degree 1 ``{"N": m x n}`` gives a matrix; degree 2 ``{"phi", "psi"}`` a Cochain2."""
    obj = _load(src)
    if "N" in obj:
        return parse_array(obj["N"], (None, None), f"{path}.N")
    phi = parse_array(_field(obj, "phi", path), (None, None, None), f"{path}.phi")
    n = phi.shape[0]
    if phi.shape[1] != n:
        raise InputError(f"{path}.phi: expected shape (n, n, m), got {phi.shape}")
    psi = parse_array(_field(obj, "psi", path), phi.shape, f"{path}.psi")
    for i in range(n):
        for j in range(n):
            if np.any(phi[i, j] != phi[j, i]):
                raise InputError(f"{path}.phi[{i}][{j}]: phi must be symmetric")
    return Cochain2(phi, psi)


def dump_cochain(c) -> dict:
    if isinstance(c, Cochain2):
        return {"phi": to_json_array(c.phi), "psi": to_json_array(c.psi)}
    return {"N": to_json_array(c)}


# -- extensions -----------------------------------------------------------------

def parse_extension(src, path: str = "$") -> AbelianExtension:
    obj = _load(src)
    base = parse_algebra(_field(obj, "base", path), f"{path}.base")
    m = _count(_field(obj, "fiber_dim", path), f"{path}.fiber_dim")
    carrier = parse_algebra(_field(obj, "carrier", path), f"{path}.carrier")
    n, N = base.dim, base.dim + m
    i = parse_array(_field(obj, "i", path), (N, m), f"{path}.i")
    j = parse_array(_field(obj, "j", path), (n, N), f"{path}.j")
    s0 = parse_array(_field(obj, "s0", path), (N, n), f"{path}.s0")
    E = AbelianExtension(base, m, carrier, i, j, s0)
    report = validate_extension(E)
    if not report.passed:
        bad = [k for k, c in report.checks.items() if not c.passed]
        raise InputError(f"{path}: extension fails checks {bad}")
    return E


def dump_extension(E: AbelianExtension) -> dict:
    return {
        "base": dump_algebra(E.base),
        "fiber_dim": E.fiber_dim,
        "carrier": dump_algebra(E.carrier),
        "i": to_json_array(E.i),
        "j": to_json_array(E.j),
        "s0": to_json_array(E.s0),
    }


# -- automorphism pairs ---------------------------------------------------------

def parse_pair(src, path: str = "$") -> AutPair:
    obj = _load(src)
    beta = parse_array(_field(obj, "beta", path), (None, None), f"{path}.beta")
    alpha = parse_array(_field(obj, "alpha", path), (None, None), f"{path}.alpha")
    return AutPair(beta, alpha)


def dump_pair(pair: AutPair) -> dict:
    return {"beta": to_json_array(pair.beta), "alpha": to_json_array(pair.alpha)}


def parse_matrix(src, path: str = "$") -> np.ndarray:
    """A bare nested list, or an object holding one under "s", "matrix" or "gamma"."""
    if isinstance(src, (bytes, bytearray, str)):
        try:
            obj = json.loads(src)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON: {exc}") from exc
    else:
        obj = src
    if isinstance(obj, dict):
        for key in ("s", "matrix", "gamma"):
            if key in obj:
                return parse_array(obj[key], (None, None), f"{path}.{key}")
        raise InputError(f"{path}: expected a matrix under 's', 'matrix' or 'gamma'")
    return parse_array(obj, (None, None), path)


def read_bytes(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


_PARSERS = {
    "algebra": (parse_algebra, dump_algebra),
    "rep": (parse_rep, dump_rep),
    "cochain": (parse_cochain, dump_cochain),
    "extension": (parse_extension, dump_extension),
    "pair": (parse_pair, dump_pair),
}


class Workspace:
    """Named objects loaded from files; every object is validated on load."""

    def __init__(self):
        self.objects: dict[str, tuple[str, object]] = {}

    def add(self, name: str, kind: str, obj) -> None:
        if name in self.objects:
            raise InputError(f"name {name!r} already in workspace")
        if kind not in _PARSERS:
            raise InputError(f"unknown kind {kind!r}")
        self.objects[name] = (kind, obj)

    def load(self, name: str, kind: str, path) -> object:
        if kind not in _PARSERS:
            raise InputError(f"unknown kind {kind!r}")
        obj = _PARSERS[kind][0](read_bytes(path), path=str(path))
        self.add(name, kind, obj)
        return obj

    def __getitem__(self, name: str):
        return self.objects[name][1]

    def dump(self, name: str) -> dict:
        kind, obj = self.objects[name]
        return _PARSERS[kind][1](obj)
