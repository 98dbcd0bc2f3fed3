"""Exact dense linear algebra over the rationals.

Matrices and vectors are numpy object arrays holding ``fractions.Fraction``
entries.  ``Fraction`` already keeps numerator/denominator in lowest terms with
a positive denominator, so equality of entries is structural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

__all__ = [
    "Fraction",
    "SubspaceBasis",
    "as_fraction",
    "frac_array",
    "zeros",
    "eye",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "inverse",
    "complement_basis",
    "in_span",
    "coordinates",
    "integer_scaled",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (bool, np.bool_)):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    # floats are refused on purpose: they would smuggle rounding in
    raise InputError(f"not an exact rational: {x!r}")


def frac_array(data, shape: Sequence[int] | None = None) -> np.ndarray:
    """Copy ``data`` into an object array of Fractions."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = as_fraction(x)
    return out


def zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def eye(n: int) -> np.ndarray:
    out = zeros((n, n))
    for k in range(n):
        out[k, k] = Fraction(1)
    return out


def _rows(M) -> tuple[list[list[Fraction]], int]:
    A = np.asarray(M, dtype=object)
    if A.ndim != 2:
        raise InputError(f"expected a matrix, got shape {A.shape}")
    return [[as_fraction(x) for x in row] for row in A], A.shape[1]


def _reduce_rows(R: list[list[Fraction]], cols: int) -> list[int]:
    """In-place Gauss-Jordan; pivot = first nonzero entry in column order."""
    nrows = len(R)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        pv = R[r][c]
        if pv != 1:
            R[r] = [x / pv for x in R[r]]
        prow = R[r]
        support = [k for k in range(c, cols) if prow[k]]
        for i in range(nrows):
            if i == r:
                continue
            f = R[i][c]
            if f:
                row = R[i]
                for k in support:
                    row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return pivots


def rref(M) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns of ``M``."""
    R, cols = _rows(M)
    pivots = _reduce_rows(R, cols)
    out = zeros((len(R), cols))
    for i, row in enumerate(R):
        out[i, :] = row
    return out, len(pivots), pivots


def rank(M) -> int:
    return rref(M)[1]


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Linearly independent vectors spanning a subspace of Q^ambient_dim.

    ``vectors`` is a (k, ambient_dim) object array, one basis vector per row.
    """

    ambient_dim: int
    vectors: np.ndarray = field(default=None)

    def __post_init__(self):
        vecs = self.vectors
        if vecs is None or len(vecs) == 0:
            vecs = zeros((0, self.ambient_dim))
        else:
            vecs = frac_array(vecs)
            if vecs.ndim != 2 or vecs.shape[1] != self.ambient_dim:
                raise InputError(
                    f"basis vectors must have length {self.ambient_dim}, got shape {vecs.shape}"
                )
            if rank(vecs) != vecs.shape[0]:
                raise InputError("basis vectors are linearly dependent")
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def spanned_by(cls, ambient_dim: int, vectors: Iterable) -> "SubspaceBasis":
        """Basis of the span of ``vectors`` (first-found independent subset)."""
        ech = _Echelon(ambient_dim)
        keep = [v for v in vectors if ech.add(v)]
        return cls(ambient_dim, np.array(keep, dtype=object) if keep else None)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.vectors)


class _Echelon:
    """Incrementally grown reduced echelon basis, for membership tests."""

    def __init__(self, ambient_dim: int):
        self.n = ambient_dim
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def residual(self, v) -> list[Fraction]:
        w = [as_fraction(x) for x in v]
        if len(w) != self.n:
            raise InputError(f"vector length {len(w)} != ambient dimension {self.n}")
        for row, p in zip(self.rows, self.pivots):
            f = w[p]
            if f:
                for k in range(self.n):
                    if row[k]:
                        w[k] -= f * row[k]
        return w

    def add(self, v) -> bool:
        w = self.residual(v)
        p = next((k for k in range(self.n) if w[k]), None)
        if p is None:
            return False
        pv = w[p]
        w = [x / pv for x in w]
        for row in self.rows:
            f = row[p]
            if f:
                for k in range(self.n):
                    if w[k]:
                        row[k] -= f * w[k]
        self.rows.append(w)
        self.pivots.append(p)
        return True


def kernel_basis(M) -> SubspaceBasis:
    """Basis of {v : M v = 0}, one vector per free column (free entry = 1)."""
    R, rk, pivots = rref(M)
    cols = R.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    vecs = []
    for fcol in free:
        v = zeros(cols)
        v[fcol] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i, fcol]
        vecs.append(v)
    return SubspaceBasis(cols, np.array(vecs, dtype=object) if vecs else None)


def solve(M, b) -> np.ndarray | None:
    """Particular solution of M x = b with free variables set to zero, or None."""
    A = np.asarray(M, dtype=object)
    if A.ndim != 2:
        raise InputError(f"expected a matrix, got shape {A.shape}")
    bb = np.asarray(b, dtype=object).reshape(-1)
    if bb.shape[0] != A.shape[0]:
        raise InputError(f"right-hand side has length {bb.shape[0]}, matrix has {A.shape[0]} rows")
    cols = A.shape[1]
    aug = np.concatenate([A, bb.reshape(-1, 1)], axis=1)
    R, _, pivots = rref(aug)
    if pivots and pivots[-1] == cols:
        return None
    x = zeros(cols)
    for i, p in enumerate(pivots):
        x[p] = R[i, cols]
    return x


def inverse(M) -> np.ndarray | None:
    """Exact inverse of a square matrix, None when singular."""
    A = np.asarray(M, dtype=object)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InputError(f"inverse needs a square matrix, got shape {A.shape}")
    n = A.shape[0]
    R, _, pivots = rref(np.concatenate([A, eye(n)], axis=1))
    if pivots != list(range(n)):
        return None
    return R[:, n:]


def in_span(basis: SubspaceBasis, v) -> bool:
    ech = _Echelon(basis.ambient_dim)
    for w in basis:
        ech.add(w)
    return not any(ech.residual(v))


def coordinates(vectors, v) -> np.ndarray | None:
    """Coefficients c with sum_k c[k] * vectors[k] = v, or None."""
    V = np.asarray(vectors, dtype=object)
    vv = np.asarray(v, dtype=object).reshape(-1)
    if V.shape[0] == 0:
        return zeros(0) if not any(vv) else None
    return solve(V.T, vv)


def complement_basis(sub: SubspaceBasis, full: SubspaceBasis) -> SubspaceBasis:
    """Vectors of ``full`` extending ``sub`` to a basis of span(full).

    Greedy in the order of ``full``; raises InputError if span(sub) is not
    contained in span(full).
    """
    if sub.ambient_dim != full.ambient_dim:
        raise InputError("subspaces live in different ambient spaces")
    ech = _Echelon(full.ambient_dim)
    for w in full:
        ech.add(w)
    for w in sub:
        if any(ech.residual(w)):
            raise InputError("span(sub) is not contained in span(full)")
    ech = _Echelon(full.ambient_dim)
    for w in sub:
        ech.add(w)
    extra = [w for w in full if ech.add(w)]
    return SubspaceBasis(full.ambient_dim, np.array(extra, dtype=object) if extra else None)


def integer_scaled(*arrays) -> tuple[int, list[np.ndarray]]:
    """(D, [D * a for a in arrays]) with D the lcm of all denominators.

    The scaled arrays hold Python ints, which numpy object loops handle far
    faster than Fractions.
    """
    D = 1
    for a in arrays:
        for x in np.asarray(a, dtype=object).flat:
            D = math.lcm(D, as_fraction(x).denominator)
    out = []
    for a in arrays:
        a = np.asarray(a, dtype=object)
        scaled = np.empty(a.shape, dtype=object)
        for idx, x in np.ndenumerate(a):
            x = as_fraction(x)
            scaled[idx] = x.numerator * (D // x.denominator)
        out.append(scaled)
    return D, out


def exact_einsum(spec: str, *operands) -> np.ndarray:
    """``np.einsum`` over rationals.

    Each operand is scaled to Python ints, the contraction runs on ints along
    an optimized pairwise path, and the result is divided once at the end.
    """
    denom = 1
    ints = []
    for a in operands:
        D, (scaled,) = integer_scaled(a)
        denom *= D
        ints.append(scaled)
    res = np.asarray(np.einsum(spec, *ints, optimize=True), dtype=object)
    out = np.empty(res.shape, dtype=object)
    for idx, x in np.ndenumerate(res):
        out[idx] = Fraction(int(x), denom)
    return out
