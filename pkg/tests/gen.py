"""Deterministic generators for test inputs (stdlib ``random`` seeded per call site)."""
from __future__ import annotations

import random

import numpy as np

from comprelie.algebra import zero_algebra
from comprelie.catalog import dual_numbers, dual_numbers_semidirect, truncated_polynomials
from comprelie.cohomology import Cochain2, cohomology_space
from comprelie.extensions import build_extension
from comprelie.linalg import frac_array, zeros
from comprelie.representations import Representation, adjoint, trivial_representation


def rand_matrix(rng: random.Random, rows: int, cols: int, lo: int = -3, hi: int = 3) -> np.ndarray:
    return frac_array([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def rand_tensor(rng: random.Random, shape, lo: int = -3, hi: int = 3) -> np.ndarray:
    out = zeros(shape)
    for idx in np.ndindex(*shape):
        out[idx] = rng.randint(lo, hi)
    return out


def rand_combination(rng: random.Random, vectors, lo: int = -3, hi: int = 3) -> np.ndarray:
    vectors = list(vectors)
    out = zeros(len(vectors[0]))
    for v in vectors:
        out = out + rng.randint(lo, hi) * v
    return out


def algebra_fixtures() -> dict:
    """name -> (algebra, representation) pairs used across the suite."""
    d2, sd, t3 = dual_numbers(), dual_numbers_semidirect(), truncated_polynomials(3)
    return {
        "abelian1/trivial": (zero_algebra(1), trivial_representation(1, 1)),
        "d2/adjoint": (d2, adjoint(d2)),
        "d2/trivial2": (d2, trivial_representation(2, 2)),
        "t3/adjoint": (t3, adjoint(t3)),
        "d2sd/adjoint": (sd, adjoint(sd)),
    }


def abelian_extension():
    """1-dim zero base, trivial 1-dim fiber, cocycle phi(e, e) = u, psi = 0."""
    phi = frac_array([[[1]]])
    return build_extension(zero_algebra(1), trivial_representation(1, 1), Cochain2(phi, zeros((1, 1, 1))))


def d2_extension():
    """D2 with its adjoint representation, twisted by the H^2 representative."""
    d2 = dual_numbers()
    ad = adjoint(d2)
    h = cohomology_space(d2, ad, 2).H_reps[0]
    return build_extension(d2, ad, h)


def t3_extension():
    t3 = truncated_polynomials(3)
    ad = adjoint(t3)
    space = cohomology_space(t3, ad, 2)
    return build_extension(t3, ad, space.H_reps[0] + space.H_reps[1])


def d2sd_extension():
    """D2 semidirect ad(D2), with its own adjoint representation and an H^2 twist."""
    sd = dual_numbers_semidirect()
    ad = adjoint(sd)
    return build_extension(sd, ad, cohomology_space(sd, ad, 2).H_reps[0])


def extension_fixtures(large: bool = False) -> dict:
    out = {"abelian": abelian_extension(), "d2": d2_extension(), "t3": t3_extension()}
    if large:
        out["d2sd"] = d2sd_extension()
    return out


def random_section(E, rng: random.Random) -> np.ndarray:
    """s0 + i g for a random g: A -> V; every section has this form."""
    return E.s0 + E.i @ rand_matrix(rng, E.m, E.n)


def random_rep(rng: random.Random, n: int, m: int, density: float = 0.3) -> Representation:
    """Sparse random action matrices with entries in {-1, 0, 1}."""
    fams = []
    for _ in range(3):
        t = zeros((n, m, m))
        for idx in np.ndindex(n, m, m):
            if rng.random() < density:
                t[idx] = rng.choice((-1, 1))
        fams.append(t)
    return Representation(*fams)


def rep_candidates(rng: random.Random, count: int) -> list:
    """(alg, rep) candidates with dims (n, m) <= (3, 3), mixing valid and invalid reps."""
    algs = [zero_algebra(1), zero_algebra(2), dual_numbers(), truncated_polynomials(3), zero_algebra(3)]
    out = []
    while len(out) < count:
        alg = rng.choice(algs)
        n = alg.dim
        kind = rng.randrange(5)
        if kind == 0:
            rep = trivial_representation(n, rng.randint(1, 3))
        elif kind == 1:
            rep = adjoint(alg)
            # scale one family: breaks the axioms unless the products vanish
            fam = rng.randrange(3)
            parts = [rep.mu, rep.l, rep.r]
            parts[fam] = parts[fam] * rng.choice((1, 2))
            rep = Representation(*parts)
        elif kind == 2 and n == 2:
            # mu(e1) = identity, everything else zero
            m = rng.randint(1, 3)
            mu = zeros((2, m, m))
            mu[0] = np.identity(m, dtype=object) * 1
            rep = Representation(mu, zeros((2, m, m)), zeros((2, m, m)))
        else:
            rep = random_rep(rng, n, rng.randint(1, 3), density=rng.choice((0.1, 0.2, 0.4)))
        out.append((alg, rep))
    return out
