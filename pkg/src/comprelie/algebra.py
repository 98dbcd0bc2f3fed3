"""Finite-dimensional Com-PreLie algebras given by structure constants.

Convention used everywhere: ``c[i, j, k]`` is the coefficient of ``e_k`` in
``e_i o e_j``.  Linear maps are matrices acting on column vectors, so column
``j`` of a map holds the image of ``e_j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .linalg import exact_einsum, frac_array, rank, zeros
from .report import Report, first_failure

PRODUCTS = ("star", "bullet")


@dataclass(frozen=True, eq=False)
class ComPreLieAlgebra:
    """A commutative associative product ``star`` and a left pre-Lie product ``bullet``.

    Construction does not check the axioms; see :func:`validate_algebra`.
    """

    star: np.ndarray
    bullet: np.ndarray
    basis: tuple[str, ...] = ()
    validated: bool = field(default=False, compare=False)

    def __post_init__(self):
        star = frac_array(self.star)
        bullet = frac_array(self.bullet)
        n = star.shape[0] if star.ndim == 3 else -1
        for name, c in (("star", star), ("bullet", bullet)):
            if c.ndim != 3 or c.shape != (n, n, n):
                raise InputError(f"{name} must have shape (n, n, n), got {c.shape}")
        basis = tuple(self.basis) or tuple(f"e{k + 1}" for k in range(n))
        if len(basis) != n:
            raise InputError(f"{len(basis)} basis labels for dimension {n}")
        if len(set(basis)) != n:
            raise InputError("basis labels must be distinct")
        object.__setattr__(self, "star", star)
        object.__setattr__(self, "bullet", bullet)
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return self.star.shape[0]

    def constants(self, which: str) -> np.ndarray:
        if which not in PRODUCTS:
            raise InputError(f"unknown product {which!r}; expected one of {PRODUCTS}")
        return self.star if which == "star" else self.bullet

    def __eq__(self, other):
        if not isinstance(other, ComPreLieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and bool(np.all(self.star == other.star))
            and bool(np.all(self.bullet == other.bullet))
        )

    __hash__ = None


def _vector(v, n: int) -> np.ndarray:
    arr = frac_array(v)
    if arr.shape != (n,):
        raise InputError(f"expected a vector of length {n}, got shape {arr.shape}")
    return arr


def eval_product(alg: ComPreLieAlgebra, which: str, v, w) -> np.ndarray:
    c = alg.constants(which)
    return exact_einsum("i,j,ijk->k", _vector(v, alg.dim), _vector(w, alg.dim), c)


def commutator(alg: ComPreLieAlgebra, v, w) -> np.ndarray:
    return eval_product(alg, "bullet", v, w) - eval_product(alg, "bullet", w, v)


def _associator(c: np.ndarray) -> np.ndarray:
    # A[i, j, k] = (e_i e_j) e_k - e_i (e_j e_k)
    return exact_einsum("ijp,pkl->ijkl", c, c) - exact_einsum("jkp,ipl->ijkl", c, c)


def validate_algebra(alg: ComPreLieAlgebra) -> Report:
    """Check all four axioms on basis tuples and mark ``alg`` validated if they hold."""
    s, b = alg.star, alg.bullet
    report = Report()
    report.checks["commutative"] = first_failure(s - s.transpose(1, 0, 2), 2)
    report.checks["associative"] = first_failure(_associator(s), 3)
    assoc_b = _associator(b)
    report.checks["prelie"] = first_failure(assoc_b - assoc_b.transpose(1, 0, 2, 3), 3)
    compat = (
        exact_einsum("jkp,ipl->ijkl", s, b)
        - exact_einsum("ijp,pkl->ijkl", b, s)
        - exact_einsum("ikp,jpl->ijkl", b, s)
    )
    report.checks["compatible"] = first_failure(compat, 3)
    if report.passed:
        object.__setattr__(alg, "validated", True)
    return report


def _square(alg: ComPreLieAlgebra, M, what: str = "map") -> np.ndarray:
    A = frac_array(M)
    if A.shape != (alg.dim, alg.dim):
        raise InputError(f"{what} must be {alg.dim}x{alg.dim}, got shape {A.shape}")
    return A


def preserves_products(src: ComPreLieAlgebra, dst: ComPreLieAlgebra, F) -> bool:
    """True iff F(a o b) = F(a) o F(b) for both products on all basis pairs of ``src``."""
    F = frac_array(F)
    if F.shape != (dst.dim, src.dim):
        raise InputError(f"map must be {dst.dim}x{src.dim}, got shape {F.shape}")
    for which in PRODUCTS:
        lhs = exact_einsum("ijk,lk->ijl", src.constants(which), F)
        rhs = exact_einsum("pi,qj,pql->ijl", F, F, dst.constants(which))
        if np.any(lhs != rhs):
            return False
    return True


def is_automorphism(alg: ComPreLieAlgebra, alpha) -> bool:
    A = _square(alg, alpha)
    return rank(A) == alg.dim and preserves_products(alg, alg, A)


def zero_algebra(n: int) -> ComPreLieAlgebra:
    return ComPreLieAlgebra(zeros((n, n, n)), zeros((n, n, n)))
