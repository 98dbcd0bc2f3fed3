import random

import numpy as np
import pytest

from gen import (
    abelian_extension,
    algebra_fixtures,
    d2_extension,
    extension_fixtures,
    rand_combination,
    rand_matrix,
    random_section,
)
from comprelie.algebra import ComPreLieAlgebra, preserves_products, validate_algebra, zero_algebra
from comprelie.catalog import dual_numbers
from comprelie.cohomology import Cochain2, are_cohomologous, cohomology_space, d1
from comprelie.errors import InputError, InvariantBreach, NotACocycleError
from comprelie.extensions import (
    AbelianExtension,
    build_extension,
    check_section,
    extensions_isomorphic,
    extract_cocycle,
    induced_rep,
    isomorphic_via_cohomology,
    validate_extension,
)
from comprelie.linalg import eye, frac_array, zeros
from comprelie.representations import adjoint, semidirect, trivial_representation

D2 = dual_numbers()
AD = adjoint(D2)


def test_zero_cocycle_gives_semidirect():
    E = build_extension(D2, AD, Cochain2.zero(2, 2))
    assert E.carrier == semidirect(D2, AD)
    assert extract_cocycle(E).is_zero()


def test_abelian_example():
    E = abelian_extension()
    assert E.carrier.dim == 2
    # (e, 0) * (e, 0) = (0, u)
    assert E.carrier.star[0, 0].tolist() == [0, 1]
    assert not E.carrier.bullet.any()
    assert validate_algebra(E.carrier).passed
    assert validate_extension(E).passed


def test_rejects_non_cocycle_with_witness():
    c = Cochain2(zeros((2, 2, 2)), zeros((2, 2, 2)))
    c.psi[0, 0, 0] = 1
    with pytest.raises(NotACocycleError) as info:
        build_extension(D2, AD, c)
    family, triple = info.value.witness
    assert family in (1, 2, 3) and len(triple) == 3
    with pytest.raises(InputError):
        build_extension(D2, AD, Cochain2.zero(1, 2))


def test_tampering_is_detected():
    E = d2_extension()
    star = E.carrier.star.copy()
    star[3, 3, 2] = 1  # a V-block product
    bad = AbelianExtension(E.base, E.m, ComPreLieAlgebra(star, E.carrier.bullet), E.i, E.j, E.s0)
    report = validate_extension(bad)
    assert not report["trivial_fiber"].passed and report["trivial_fiber"].witness == (1, 1)
    s0 = E.s0.copy()
    s0[0, 0] = 2
    report = validate_extension(AbelianExtension(E.base, E.m, E.carrier, E.i, E.j, s0))
    assert not report["section"].passed and report["exact_sequence"].passed


@pytest.mark.parametrize("name", ["d2/adjoint", "t3/adjoint", "abelian1/trivial", "d2/trivial2"])
def test_round_trip_and_induced_rep(name):
    alg, rep = algebra_fixtures()[name]
    space = cohomology_space(alg, rep, 2)
    rng = random.Random(name)
    for _ in range(5):
        c = space.cochain(rand_combination(rng, space.Z))
        E = build_extension(alg, rep, c)
        assert validate_extension(E).passed
        assert extract_cocycle(E, E.s0) == c
        assert induced_rep(E) == rep


def test_trivial_rep_zero_cocycle():
    rep = trivial_representation(2, 1)
    assert induced_rep(build_extension(D2, rep, Cochain2.zero(2, 1))) == rep


@pytest.mark.parametrize("name", list(extension_fixtures()))
def test_section_change_gives_cohomologous_cocycle(name):
    E = extension_fixtures()[name]
    rng = random.Random(7)
    for _ in range(5):
        s = random_section(E, rng)
        assert induced_rep(E, s) == induced_rep(E)
        c, c0 = extract_cocycle(E, s), extract_cocycle(E)
        f = E.fiber_coords(s - E.s0)
        # c(s) - c(s0) = d1(s - s0) read in V
        assert c - c0 == d1(E.base, induced_rep(E), f)
        assert are_cohomologous(E.base, induced_rep(E), c, c0) is not None


def test_bad_section_rejected():
    E = d2_extension()
    with pytest.raises(InputError):
        check_section(E, zeros((4, 2)))
    with pytest.raises(InputError):
        check_section(E, eye(2))


def test_isomorphism_examples():
    E = d2_extension()
    assert np.all(extensions_isomorphic(E, E) == eye(4))
    space = cohomology_space(D2, AD, 2)
    h = space.H_reps[0]
    rng = random.Random(3)
    N = rand_matrix(rng, 2, 2)
    E2 = build_extension(D2, AD, h + d1(D2, AD, N))
    F = extensions_isomorphic(E, E2)
    assert F is not None and preserves_products(E.carrier, E2.carrier, F)
    # F commutes with the inclusions and projections
    assert np.all(F @ E.i == E2.i) and np.all(E2.j @ F == E.j)
    assert isomorphic_via_cohomology(E, E2) is not None
    E3 = build_extension(D2, AD, h * 2)
    assert extensions_isomorphic(E, E3) is None
    assert isomorphic_via_cohomology(E, E3) is None


def test_abelian_classes_distinct():
    alg, rep = zero_algebra(1), trivial_representation(1, 1)
    E1 = build_extension(alg, rep, Cochain2(frac_array([[[1]]]), zeros((1, 1, 1))))
    E0 = build_extension(alg, rep, Cochain2.zero(1, 1))
    assert extensions_isomorphic(E1, E0) is None


def test_different_bases_rejected():
    with pytest.raises(InputError):
        extensions_isomorphic(abelian_extension(), d2_extension())


def test_fiber_coords_guard():
    E = d2_extension()
    with pytest.raises(InvariantBreach):
        E.fiber_coords(frac_array([1, 0, 0, 0]))
    assert E.fiber_coords(frac_array([0, 0, 2, 3])).tolist() == [2, 3]
