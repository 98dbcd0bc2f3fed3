"""Representations (V, mu, l, r) of a Com-PreLie algebra and semidirect products.

Action matrices are stored per basis element of the algebra: ``mu[i]`` is the
m x m matrix of mu(e_i); likewise ``l[i]`` and ``r[i]``.  Here r(x)u stands for
the right action ``u . x``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ComPreLieAlgebra
from .errors import InputError
from .linalg import exact_einsum, frac_array, zeros
from .report import Report, first_failure


@dataclass(frozen=True, eq=False)
class Representation:
    mu: np.ndarray
    l: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        arrs = [frac_array(a) for a in (self.mu, self.l, self.r)]
        shape = arrs[0].shape
        if len(shape) != 3 or shape[1] != shape[2]:
            raise InputError(f"action family must have shape (n, m, m), got {shape}")
        for name, a in zip(("mu", "l", "r"), arrs):
            if a.shape != shape:
                raise InputError(f"{name} has shape {a.shape}, expected {shape}")
            object.__setattr__(self, name, a)

    @property
    def alg_dim(self) -> int:
        return self.mu.shape[0]

    @property
    def mod_dim(self) -> int:
        return self.mu.shape[1]

    def action(self, which: str, x) -> np.ndarray:
        """Matrix of mu(x), l(x) or r(x) for a general element x."""
        fam = {"mu": self.mu, "l": self.l, "r": self.r}[which]
        return exact_einsum("i,iuv->uv", frac_array(x), fam)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.mu.shape == other.mu.shape and all(
            bool(np.all(a == b))
            for a, b in ((self.mu, other.mu), (self.l, other.l), (self.r, other.r))
        )

    __hash__ = None


def trivial_representation(n: int, m: int) -> Representation:
    z = zeros((n, m, m))
    return Representation(z, z, z)


def check_dims(alg: ComPreLieAlgebra, rep: Representation) -> None:
    if rep.alg_dim != alg.dim:
        raise InputError(
            f"representation is over a {rep.alg_dim}-dim algebra, algebra has dim {alg.dim}"
        )


def _compose(A, B):
    # (A B)[i, j] = A[i] @ B[j]
    return exact_einsum("iuw,jwv->ijuv", A, B)


def validate_representation(alg: ComPreLieAlgebra, rep: Representation) -> Report:
    check_dims(alg, rep)
    s, b = alg.star, alg.bullet
    mu, l, r = rep.mu, rep.l, rep.r

    def lin(c, fam):
        # fam(e_i o e_j) as an (n, n, m, m) array
        return exact_einsum("ijp,puv->ijuv", c, fam)

    report = Report()
    # mu(x*y) = mu(x)mu(y)
    report.checks["mu_associative"] = first_failure(lin(s, mu) - _compose(mu, mu), 2)
    # l(x.y) - l(x)l(y) = l(y.x) - l(y)l(x)
    d = lin(b, l) - _compose(l, l)
    report.checks["l_prelie"] = first_failure(d - d.transpose(1, 0, 2, 3), 2)
    # r(y)l(x) - l(x)r(y) = r(y)r(x) - r(x.y), indexed by (x, y)
    rl = exact_einsum("juw,iwv->ijuv", r, l)
    lr = exact_einsum("iuw,jwv->ijuv", l, r)
    rr = exact_einsum("juw,iwv->ijuv", r, r)
    report.checks["r_prelie"] = first_failure(rl - lr - rr + lin(b, r), 2)
    # l(x)mu(y) = mu(x.y) + mu(y)l(x)
    mul = exact_einsum("juw,iwv->ijuv", mu, l)
    report.checks["l_mu_compatible"] = first_failure(_compose(l, mu) - lin(b, mu) - mul, 2)
    # r(x*y) = mu(y)r(x) + mu(x)r(y)
    mur = exact_einsum("juw,iwv->ijuv", mu, r)
    report.checks["r_star_compatible"] = first_failure(lin(s, r) - mur - _compose(mu, r), 2)
    return report


def adjoint(alg: ComPreLieAlgebra) -> Representation:
    mu = alg.star.transpose(0, 2, 1)
    l = alg.bullet.transpose(0, 2, 1)
    r = alg.bullet.transpose(1, 2, 0)
    return Representation(mu, l, r)


def glue(alg: ComPreLieAlgebra, rep: Representation, phi=None, psi=None) -> ComPreLieAlgebra:
    """Products on A + V: (x+u)*(y+v) = x*y + mu(x)v + mu(y)u + phi(x,y), and the
    bullet analogue with l, r, psi.  Basis order: A-block then V-block."""
    check_dims(alg, rep)
    n, m = rep.alg_dim, rep.mod_dim
    N = n + m
    star, bullet = zeros((N, N, N)), zeros((N, N, N))
    star[:n, :n, :n] = alg.star
    bullet[:n, :n, :n] = alg.bullet
    # e_i * u_v = mu(e_i) u_v, entry [w, v] of mu[i]
    star[:n, n:, n:] = rep.mu.transpose(0, 2, 1)
    star[n:, :n, n:] = rep.mu.transpose(2, 0, 1)
    bullet[:n, n:, n:] = rep.l.transpose(0, 2, 1)
    bullet[n:, :n, n:] = rep.r.transpose(2, 0, 1)
    if phi is not None:
        star[:n, :n, n:] = phi
    if psi is not None:
        bullet[:n, :n, n:] = psi
    labels = alg.basis + tuple(f"v{k + 1}" for k in range(m))
    if len(set(labels)) != len(labels):
        labels = ()
    return ComPreLieAlgebra(star, bullet, labels)


def semidirect(alg: ComPreLieAlgebra, rep: Representation) -> ComPreLieAlgebra:
    return glue(alg, rep)
