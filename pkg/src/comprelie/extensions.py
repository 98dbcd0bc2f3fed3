"""Abelian extensions 0 -> V -i-> A_hat -j-> A -> 0 with trivial products on V."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import ComPreLieAlgebra, preserves_products, validate_algebra
from .cohomology import (
    Cochain2,
    are_cohomologous,
    first_defect,
    require_valid,
)
from .errors import InputError, InvariantBreach, NotACocycleError
from .linalg import exact_einsum, eye, frac_array, inverse, rank, solve, zeros
from .report import Check, Report
from .representations import Representation, glue


@dataclass(frozen=True, eq=False)
class AbelianExtension:
    """Carrier basis is the A-block followed by the V-block.

    ``i`` is (n+m) x m, ``j`` is n x (n+m), ``s0`` is (n+m) x n.
    """

    base: ComPreLieAlgebra
    fiber_dim: int
    carrier: ComPreLieAlgebra
    i: np.ndarray
    j: np.ndarray
    s0: np.ndarray

    def __post_init__(self):
        n, m = self.base.dim, self.fiber_dim
        N = n + m
        if self.carrier.dim != N:
            raise InputError(f"carrier has dim {self.carrier.dim}, expected {N}")
        for name, shape in (("i", (N, m)), ("j", (n, N)), ("s0", (N, n))):
            arr = frac_array(getattr(self, name))
            if arr.shape != shape:
                raise InputError(f"{name} must have shape {shape}, got {arr.shape}")
            object.__setattr__(self, name, arr)

    @property
    def n(self) -> int:
        return self.base.dim

    @property
    def m(self) -> int:
        return self.fiber_dim

    @cached_property
    def _splitting(self) -> np.ndarray:
        # rows [:n] read the A-part, rows [n:] the V-part w.r.t. A_hat = s0(A) + i(V)
        P = inverse(np.concatenate([self.s0, self.i], axis=1))
        if P is None:
            raise InputError("s0(A) and i(V) do not span the carrier")
        return P

    @cached_property
    def _canonical_rep(self) -> Representation:
        # section independent, so computed once with s0
        return _induced_rep(self, self.s0)

    def fiber_coords(self, vec) -> np.ndarray:
        """Coordinates in V of a carrier vector lying in i(V)."""
        v = frac_array(vec)
        if np.any(self.j @ v):
            raise InvariantBreach("vector expected in ker j has a nonzero A-part")
        return self._splitting[self.n:] @ v

    def assemble(self, on_A, on_V) -> np.ndarray:
        """Carrier map sending s0(x) + i(u) to on_A @ x + on_V @ u."""
        return np.concatenate([frac_array(on_A), frac_array(on_V)], axis=1) @ self._splitting


def build_extension(alg: ComPreLieAlgebra, rep: Representation, c: Cochain2) -> AbelianExtension:
    require_valid(alg, rep)
    n, m = alg.dim, rep.mod_dim
    if c.phi.shape != (n, n, m):
        raise InputError(f"2-cochain must have shape {(n, n, m)}, got {c.phi.shape}")
    bad = first_defect(alg, rep, c)
    if bad is not None:
        family, triple = bad
        raise NotACocycleError(
            f"cochain is not a 2-cocycle: defect family {family} nonzero at basis triple {triple}",
            witness=bad,
        )
    carrier = glue(alg, rep, c.phi, c.psi)
    I = zeros((n + m, m))
    I[n:, :] = eye(m)
    J = zeros((n, n + m))
    J[:, :n] = eye(n)
    S = zeros((n + m, n))
    S[:n, :] = eye(n)
    return AbelianExtension(alg, m, carrier, I, J, S)


def validate_extension(E: AbelianExtension) -> Report:
    n, m = E.n, E.m
    report = Report()
    ji = E.j @ E.i
    exact = (
        not np.any(ji)
        and rank(E.i) == m
        and rank(E.j) == n
    )
    report.checks["exact_sequence"] = Check(bool(exact))
    js = E.j @ E.s0
    bad = np.argwhere(js != eye(n))
    report.checks["section"] = Check(len(bad) == 0, tuple(int(k) for k in bad[0]) if len(bad) else None)

    def fiber_products(which):
        return exact_einsum("pa,qb,pqk->abk", E.i, E.i, E.carrier.constants(which))

    wit = None
    for which in ("star", "bullet"):
        hits = np.argwhere(np.any(fiber_products(which) != 0, axis=2))
        if len(hits):
            wit = tuple(int(k) for k in hits[0])
            break
    report.checks["trivial_fiber"] = Check(wit is None, wit)
    report.checks["projection_homomorphism"] = Check(preserves_products(E.carrier, E.base, E.j))
    report.checks["carrier_valid"] = Check(validate_algebra(E.carrier).passed)
    report.checks["base_valid"] = Check(validate_algebra(E.base).passed)
    return report


def check_section(E: AbelianExtension, s=None) -> np.ndarray:
    if s is None:
        return E.s0
    S = frac_array(s)
    if S.shape != (E.n + E.m, E.n):
        raise InputError(f"section must have shape {(E.n + E.m, E.n)}, got {S.shape}")
    if np.any(E.j @ S != eye(E.n)):
        raise InputError("not a section: j o s != id")
    return S


def _to_fiber(E: AbelianExtension, prod: np.ndarray) -> np.ndarray:
    # prod has shape (a, b, n+m) with every vector in ker j
    if np.any(exact_einsum("ck,abk->abc", E.j, prod)):
        raise InvariantBreach("product expected in ker j has a nonzero A-part")
    return exact_einsum("vk,abk->abv", E._splitting[E.n:], prod)


def induced_rep(E: AbelianExtension, s=None) -> Representation:
    """mu(x)u = s(x)*u, l(x)u = s(x).u, r(x)u = u.s(x), computed in the carrier."""
    if s is None:
        return E._canonical_rep
    return _induced_rep(E, check_section(E, s))


def _induced_rep(E: AbelianExtension, S: np.ndarray) -> Representation:
    star, bullet = E.carrier.star, E.carrier.bullet
    # [a, b, :] = image of the fiber basis vector u_b under the action of e_a
    mu = _to_fiber(E, exact_einsum("pa,qb,pqk->abk", S, E.i, star))
    l = _to_fiber(E, exact_einsum("pa,qb,pqk->abk", S, E.i, bullet))
    r = _to_fiber(E, exact_einsum("pa,qb,qpk->abk", S, E.i, bullet))
    return Representation(*(a.transpose(0, 2, 1) for a in (mu, l, r)))


def extract_cocycle(E: AbelianExtension, s=None) -> Cochain2:
    """phi(x,y) = s(x)*s(y) - s(x*y), psi(x,y) = s(x).s(y) - s(x.y)."""
    S = check_section(E, s)
    parts = []
    for which in ("star", "bullet"):
        top = exact_einsum("pa,qb,pqk->abk", S, S, E.carrier.constants(which))
        low = exact_einsum("abc,kc->abk", E.base.constants(which), S)
        parts.append(_to_fiber(E, top - low))
    return Cochain2(*parts)


def _same_shape(E1: AbelianExtension, E2: AbelianExtension):
    if E1.n != E2.n or E1.m != E2.m:
        raise InputError("extensions have different base or fiber dimensions")
    if E1.base != E2.base:
        raise InputError("extensions have different base algebras")


def extensions_isomorphic(E1: AbelianExtension, E2: AbelianExtension) -> np.ndarray | None:
    """Matrix of F(s0(x) + i(u)) = s0'(x) + i'(u + f(x)) that is a homomorphism, or None."""
    _same_shape(E1, E2)
    n, m = E1.n, E1.m

    def F_of(f):
        on_A = E2.s0 + E2.i @ f
        return np.concatenate([on_A, E2.i], axis=1) @ E1._splitting

    def residual(f):
        F = F_of(f)
        out = []
        for which in ("star", "bullet"):
            c1, c2 = E1.carrier.constants(which), E2.carrier.constants(which)
            lhs = exact_einsum("pqk,lk->pql", c1, F)
            rhs = exact_einsum("ap,bq,abl->pql", F, F, c2)
            out.append((lhs - rhs).reshape(-1))
        return np.concatenate(out)

    base = residual(zeros((m, n)))
    cols = []
    for k in range(n * m):
        f = zeros(n * m)
        f[k] = 1
        cols.append(residual(f.reshape(n, m).T) - base)
    L = np.stack(cols, axis=1) if cols else zeros((base.shape[0], 0))
    x = solve(L, -base)
    if x is None:
        return None
    F = F_of(frac_array(x).reshape(n, m).T)
    if inverse(F) is None or not preserves_products(E1.carrier, E2.carrier, F):
        raise InvariantBreach("solved extension map is not an isomorphism")
    return F


def isomorphic_via_cohomology(E1: AbelianExtension, E2: AbelianExtension) -> np.ndarray | None:
    """Same question answered through the extracted cocycles: f with c1 - c2 = d1(f)."""
    _same_shape(E1, E2)
    rep1, rep2 = induced_rep(E1), induced_rep(E2)
    if rep1 != rep2:
        return None
    return are_cohomologous(E1.base, rep1, extract_cocycle(E1), extract_cocycle(E2))
