"""Small Com-PreLie algebras used as worked examples and test fixtures."""
from __future__ import annotations

from .algebra import ComPreLieAlgebra, zero_algebra
from .linalg import zeros
from .representations import adjoint, semidirect


def truncated_polynomials(k: int) -> ComPreLieAlgebra:
    """Q[t]/(t^k) with f . g = f * (t g').

    On monomials: t^a * t^b = t^(a+b) and t^a . t^b = b t^(a+b), both zero once
    a + b >= k.  The pre-Lie product is f D(g) for the derivation D = t d/dt.
    """
    star, bullet = zeros((k, k, k)), zeros((k, k, k))
    for a in range(k):
        for b in range(k - a):
            star[a, b, a + b] = 1
            bullet[a, b, a + b] = b
    labels = tuple("1" if a == 0 else ("t" if a == 1 else f"t^{a}") for a in range(k))
    return ComPreLieAlgebra(star, bullet, labels)


def dual_numbers() -> ComPreLieAlgebra:
    """Q[t]/(t^2) with f . g = f t g'; the 2-dim example D2."""
    return truncated_polynomials(2)


def dual_numbers_semidirect() -> ComPreLieAlgebra:
    """D2 semidirect its adjoint representation (4-dim)."""
    d2 = dual_numbers()
    return semidirect(d2, adjoint(d2))


__all__ = ["truncated_polynomials", "dual_numbers", "dual_numbers_semidirect", "zero_algebra"]
