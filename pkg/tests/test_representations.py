import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gen import rep_candidates
from comprelie.algebra import eval_product, validate_algebra, zero_algebra
from comprelie.catalog import dual_numbers, truncated_polynomials
from comprelie.errors import InputError
from comprelie.linalg import eye, zeros
from comprelie.representations import (
    Representation,
    adjoint,
    semidirect,
    trivial_representation,
    validate_representation,
)


@pytest.mark.parametrize("alg", [dual_numbers(), truncated_polynomials(3), zero_algebra(2)])
def test_trivial_and_adjoint_pass(alg):
    assert validate_representation(alg, trivial_representation(alg.dim, 2)).passed
    assert validate_representation(alg, adjoint(alg)).passed


def test_adjoint_actions_match_products():
    d2 = dual_numbers()
    ad = adjoint(d2)
    for x in eye(2):
        for y in eye(2):
            assert np.all(ad.action("mu", x) @ y == eval_product(d2, "star", x, y))
            assert np.all(ad.action("l", x) @ y == eval_product(d2, "bullet", x, y))
            assert np.all(ad.action("r", x) @ y == eval_product(d2, "bullet", y, x))


def test_mu_identity_rep_over_d2():
    d2 = dual_numbers()
    mu = zeros((2, 2, 2))
    mu[0] = eye(2)
    rep = Representation(mu, zeros((2, 2, 2)), zeros((2, 2, 2)))
    report = validate_representation(d2, rep)
    expected = oracles.rep_axioms_hold(*(oracles.tolist(a) for a in (d2.star, d2.bullet, mu, rep.l, rep.r)))
    assert report.passed == expected
    # mu is the algebra map 1 -> id, t -> 0, and the only nonzero bullet value e1 . e2 = e2
    # is sent to mu(e2) = 0, so every family holds
    assert report.passed


def test_semidirect_with_trivial_rep_is_direct_sum():
    d2 = dual_numbers()
    sd = semidirect(d2, trivial_representation(2, 1))
    assert sd.dim == 3
    assert not sd.star[:, 2].any() and not sd.star[2].any()
    assert not sd.bullet[:, 2].any() and not sd.bullet[2].any()
    assert validate_algebra(sd).passed


def test_broken_rep_gives_compatibility_witness_on_fiber():
    d2 = dual_numbers()
    ad = adjoint(d2)
    bad = Representation(ad.mu, 2 * ad.l, ad.r)
    assert not validate_representation(d2, bad)["l_mu_compatible"].passed
    report = validate_algebra(semidirect(d2, bad))
    assert not report["compatible"].passed
    assert any(k >= 2 for k in report["compatible"].witness)


def test_dimension_mismatch():
    with pytest.raises(InputError):
        validate_representation(dual_numbers(), trivial_representation(3, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_semidirect_iff_and_oracle(seed):
    rng = random.Random(seed)
    ((alg, rep),) = rep_candidates(rng, 1)
    verdict = validate_representation(alg, rep).passed
    assert validate_algebra(semidirect(alg, rep)).passed == verdict
    assert verdict == oracles.rep_axioms_hold(
        *(oracles.tolist(a) for a in (alg.star, alg.bullet, rep.mu, rep.l, rep.r))
    )


def test_representation_equality():
    a, b = trivial_representation(2, 2), trivial_representation(2, 2)
    assert a == b and a != adjoint(dual_numbers())
    with pytest.raises(InputError):
        Representation(zeros((2, 2, 2)), zeros((2, 2, 2)), zeros((2, 3, 3)))
