"""Inducibility of automorphism pairs through an abelian extension.

A pair (beta, alpha) in Aut(V) x Aut(A) is inducible when some automorphism
gamma of the carrier with gamma(V) = V restricts to beta on V and covers alpha
on A.  The obstruction is the class W(beta, alpha) in H^2(A, V).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import is_automorphism, preserves_products
from .cohomology import (
    Cochain2,
    cochain1_from_coordinates,
    cohomology_space,
    is_1cocycle,
)
from .errors import DomainError, InputError, InvariantBreach
from .extensions import AbelianExtension, check_section, extract_cocycle, induced_rep
from .linalg import coordinates, eye, exact_einsum, frac_array, inverse, rank, solve, zeros
from .report import Check, Report


@dataclass(frozen=True, eq=False)
class AutPair:
    beta: np.ndarray
    alpha: np.ndarray

    def __post_init__(self):
        for name in ("beta", "alpha"):
            M = frac_array(getattr(self, name))
            if M.ndim != 2 or M.shape[0] != M.shape[1]:
                raise InputError(f"{name} must be square, got shape {M.shape}")
            object.__setattr__(self, name, M)

    @classmethod
    def identity(cls, E: AbelianExtension) -> "AutPair":
        return cls(eye(E.m), eye(E.n))

    def __matmul__(self, other: "AutPair") -> "AutPair":
        return AutPair(self.beta @ other.beta, self.alpha @ other.alpha)

    def __eq__(self, other):
        if not isinstance(other, AutPair):
            return NotImplemented
        return (
            self.beta.shape == other.beta.shape
            and self.alpha.shape == other.alpha.shape
            and bool(np.all(self.beta == other.beta))
            and bool(np.all(self.alpha == other.alpha))
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class LiftedAutomorphism:
    gamma: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "gamma", frac_array(self.gamma))

    def __matmul__(self, other: "LiftedAutomorphism") -> "LiftedAutomorphism":
        return LiftedAutomorphism(self.gamma @ other.gamma)

    def __eq__(self, other):
        if not isinstance(other, LiftedAutomorphism):
            return NotImplemented
        return self.gamma.shape == other.gamma.shape and bool(np.all(self.gamma == other.gamma))

    __hash__ = None


@dataclass(frozen=True)
class WellsClass:
    coordinates: tuple = field(default=())
    is_zero: bool = True


def _gamma(E: AbelianExtension, gamma) -> np.ndarray:
    G = gamma.gamma if isinstance(gamma, LiftedAutomorphism) else frac_array(gamma)
    N = E.n + E.m
    if G.shape != (N, N):
        raise InputError(f"gamma must be {N}x{N}, got shape {G.shape}")
    return G


def preserves_fiber(E: AbelianExtension, gamma) -> bool:
    return not np.any(E.j @ _gamma(E, gamma) @ E.i)


def is_lifted_automorphism(E: AbelianExtension, gamma) -> bool:
    G = _gamma(E, gamma)
    return (
        preserves_fiber(E, G)
        and rank(G) == G.shape[0]
        and preserves_products(E.carrier, E.carrier, G)
    )


def tau(E: AbelianExtension, gamma, section=None) -> AutPair:
    """(gamma restricted to V, j gamma s)."""
    G = _gamma(E, gamma)
    if not preserves_fiber(E, G):
        raise InputError("gamma does not map i(V) into i(V)")
    S = check_section(E, section)
    beta = E.fiber_coords(G @ E.i)
    alpha = E.j @ G @ S
    return AutPair(beta, alpha)


def _pair_shapes(E: AbelianExtension, pair: AutPair) -> None:
    if pair.beta.shape != (E.m, E.m) or pair.alpha.shape != (E.n, E.n):
        raise InputError(
            f"pair must have beta {E.m}x{E.m} and alpha {E.n}x{E.n}, "
            f"got {pair.beta.shape} and {pair.alpha.shape}"
        )


def is_compatible_pair(E: AbelianExtension, pair: AutPair) -> bool:
    """beta(act(x)u) = act(alpha x) beta(u) for act in mu, l, r (induced representation)."""
    _pair_shapes(E, pair)
    if rank(pair.beta) != E.m or not is_automorphism(E.base, pair.alpha):
        return False
    rep = induced_rep(E)
    beta, alpha = pair.beta, pair.alpha
    for fam in (rep.mu, rep.l, rep.r):
        lhs = exact_einsum("uv,avw->auw", beta, fam)
        moved = exact_einsum("pa,pvw->avw", alpha, fam)
        rhs = exact_einsum("avw,wx->avx", moved, beta)
        if np.any(lhs != rhs):
            return False
    return True


def act_on_cocycle(pair: AutPair, c: Cochain2) -> Cochain2:
    """(beta phi(alpha^-1 x, alpha^-1 y), beta psi(alpha^-1 x, alpha^-1 y))."""
    n, m = c.alg_dim, c.mod_dim
    if pair.alpha.shape != (n, n) or pair.beta.shape != (m, m):
        raise InputError("pair shapes do not match the cochain")
    A = inverse(pair.alpha)
    if A is None:
        raise InputError("alpha is not invertible")
    twist = lambda t: exact_einsum("pa,qb,pqv,uv->abu", A, A, t, pair.beta)
    return Cochain2(twist(c.phi), twist(c.psi))


def _difference(E, pair, section):
    S = check_section(E, section)
    c = extract_cocycle(E, S)
    return act_on_cocycle(pair, c) - c, induced_rep(E, S)


def wells_class(E: AbelianExtension, pair: AutPair, section=None) -> WellsClass:
    _pair_shapes(E, pair)
    if not is_compatible_pair(E, pair):
        raise DomainError("pair is not compatible; the Wells map is defined on compatible pairs")
    diff, rep = _difference(E, pair, section)
    space = cohomology_space(E.base, rep, 2)
    basis = np.concatenate([space.B.vectors, np.array(
        [h.coordinates() for h in space.H_reps], dtype=object
    ).reshape(-1, space.ambient_dim)], axis=0)
    coords = coordinates(basis, diff.coordinates())
    if coords is None:
        raise InvariantBreach("acted cocycle minus cocycle is not a 2-cocycle")
    cls_coords = tuple(coords[space.B.dim:])
    return WellsClass(cls_coords, not any(cls_coords))


def _lifting_map(E: AbelianExtension, pair: AutPair) -> np.ndarray | None:
    """phi: A -> V with beta c(x,y) - c(alpha x, alpha y) = twisted d1(phi)(x, y)."""
    n, m = E.n, E.m
    rep = induced_rep(E)
    c = extract_cocycle(E)
    beta, alpha = pair.beta, pair.alpha
    mu_a = exact_einsum("pa,puv->auv", alpha, rep.mu)
    l_a = exact_einsum("pa,puv->auv", alpha, rep.l)
    r_a = exact_einsum("pa,puv->auv", alpha, rep.r)

    def lhs(t):
        return exact_einsum("uv,abv->abu", beta, t) - exact_einsum("pa,qb,pqu->abu", alpha, alpha, t)

    def rhs(f):
        phi = (
            exact_einsum("auv,vb->abu", mu_a, f)
            - exact_einsum("abk,uk->abu", E.base.star, f)
            + exact_einsum("buv,va->abu", mu_a, f)
        )
        psi = (
            exact_einsum("auv,vb->abu", l_a, f)
            - exact_einsum("abk,uk->abu", E.base.bullet, f)
            + exact_einsum("buv,va->abu", r_a, f)
        )
        return np.concatenate([phi.reshape(-1), psi.reshape(-1)])

    target = np.concatenate([lhs(c.phi).reshape(-1), lhs(c.psi).reshape(-1)])
    cols = [rhs(cochain1_from_coordinates(e, n, m)) for e in eye(n * m)]
    M = np.stack(cols, axis=1) if cols else zeros((target.shape[0], 0))
    x = solve(M, target)
    if x is None:
        return None
    return cochain1_from_coordinates(x, n, m)


def induce(E: AbelianExtension, pair: AutPair) -> LiftedAutomorphism | None:
    """gamma(s0(x) + u) = s0(alpha x) + beta u + phi(x), or None if no phi exists."""
    _pair_shapes(E, pair)
    if not is_compatible_pair(E, pair):
        return None
    phi = _lifting_map(E, pair)
    if phi is None:
        return None
    G = E.assemble(E.s0 @ pair.alpha + E.i @ phi, E.i @ pair.beta)
    lifted = LiftedAutomorphism(G)
    if not is_lifted_automorphism(E, lifted) or tau(E, lifted) != pair:
        raise InvariantBreach("constructed lift is not an automorphism covering the pair")
    return lifted


def lifting_map(E: AbelianExtension, gamma) -> np.ndarray:
    """The phi part of a lift: gamma s0(x) - s0(alpha x), read in V."""
    G = _gamma(E, gamma)
    alpha = E.j @ G @ E.s0
    return E.fiber_coords(G @ E.s0 - E.s0 @ alpha)


def gamma_from_z1(E: AbelianExtension, f) -> LiftedAutomorphism:
    """gamma(s0(x) + u) = s0(x) + f(x) + u."""
    F = frac_array(f)
    if F.shape != (E.m, E.n):
        raise InputError(f"1-cochain must be {E.m}x{E.n}, got shape {F.shape}")
    if not is_1cocycle(E.base, induced_rep(E), F):
        raise InputError("f is not a 1-cocycle")
    return LiftedAutomorphism(E.assemble(E.s0 + E.i @ F, E.i))


def _is_identity_pair(E, pair: AutPair) -> bool:
    return pair == AutPair.identity(E)


def z1_from_gamma(E: AbelianExtension, gamma) -> np.ndarray:
    """gamma s0(x) - s0(x), read in V."""
    G = _gamma(E, gamma)
    if not is_lifted_automorphism(E, G) or not _is_identity_pair(E, tau(E, G)):
        raise InputError("gamma is not an automorphism inducing (id_V, id_A)")
    return E.fiber_coords(G @ E.s0 - E.s0)


def exactness_report(E: AbelianExtension, samples) -> Report:
    """Sample-based check of 0 -> Z1 -> Aut_V(A_hat) -> C -> H2.

    ``samples`` mixes LiftedAutomorphism, AutPair and 1-cochains (matrices).
    """
    failures = {"ker_tau_in_im_iota": None, "im_iota_in_ker_tau": None,
                "im_tau_in_ker_wells": None, "ker_wells_in_im_tau": None}
    ident = AutPair.identity(E)

    def fail(key, k):
        if failures[key] is None:
            failures[key] = (k,)

    for k, smp in enumerate(samples):
        if isinstance(smp, LiftedAutomorphism):
            if not is_lifted_automorphism(E, smp):
                raise InputError(f"sample {k} is not an automorphism of the carrier preserving V")
            pair = tau(E, smp)
            if pair == ident:
                try:
                    f = z1_from_gamma(E, smp)
                    if gamma_from_z1(E, f) != smp:
                        fail("ker_tau_in_im_iota", k)
                except InputError:
                    fail("ker_tau_in_im_iota", k)
            if not is_compatible_pair(E, pair) or not wells_class(E, pair).is_zero:
                fail("im_tau_in_ker_wells", k)
        elif isinstance(smp, AutPair):
            if not is_compatible_pair(E, smp):
                continue
            zero = wells_class(E, smp).is_zero
            lifted = induce(E, smp)
            if zero and lifted is None:
                fail("ker_wells_in_im_tau", k)
            if lifted is not None and not zero:
                fail("im_tau_in_ker_wells", k)
        else:
            gamma = gamma_from_z1(E, smp)
            if tau(E, gamma) != ident or not is_lifted_automorphism(E, gamma):
                fail("im_iota_in_ker_tau", k)
    report = Report()
    for key, wit in failures.items():
        report.checks[key] = Check(wit is None, wit)
    return report


def default_samples(E: AbelianExtension, pairs=()) -> list:
    """Identity, the Z1 basis and its lifts, the given pairs and their lifts."""
    rep = induced_rep(E)
    z1 = cohomology_space(E.base, rep, 1)
    samples: list = [LiftedAutomorphism(eye(E.n + E.m)), AutPair.identity(E)]
    for f in z1.H_reps:
        samples.append(f)
        samples.append(gamma_from_z1(E, f))
    for p in pairs:
        samples.append(p)
        g = induce(E, p)
        if g is not None:
            samples.append(g)
    return samples
