"""Low-degree Com-PreLie cohomology with coefficients in a representation.

A 1-cochain is an (m, n) matrix N (column j = N(e_j)).  A 2-cochain is a pair
(phi, psi) of (n, n, m) arrays, ``phi[i, j]`` = phi(e_i, e_j) in V, with phi
symmetric.

Coordinates: a 1-cochain flattens column-major (basis index major, output
coordinate minor).  A 2-cochain flattens phi over i <= j lexicographically,
then psi over all (i, j), output coordinate minor in both blocks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import ComPreLieAlgebra, validate_algebra
from .errors import InputError, UnsupportedCaseError
from .linalg import (
    SubspaceBasis,
    complement_basis,
    frac_array,
    integer_scaled,
    kernel_basis,
    solve,
    zeros,
)
from .representations import Representation, check_dims, validate_representation


@dataclass(frozen=True, eq=False)
class Cochain2:
    phi: np.ndarray
    psi: np.ndarray

    def __post_init__(self):
        phi, psi = frac_array(self.phi), frac_array(self.psi)
        if phi.ndim != 3 or phi.shape[0] != phi.shape[1]:
            raise InputError(f"phi must have shape (n, n, m), got {phi.shape}")
        if psi.shape != phi.shape:
            raise InputError(f"psi has shape {psi.shape}, phi has {phi.shape}")
        if np.any(phi != phi.transpose(1, 0, 2)):
            i, j = next(
                (i, j)
                for i, j in itertools.product(range(phi.shape[0]), repeat=2)
                if np.any(phi[i, j] != phi[j, i])
            )
            raise InputError(f"phi is not symmetric: phi[{i}][{j}] != phi[{j}][{i}]")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psi", psi)

    @property
    def alg_dim(self) -> int:
        return self.phi.shape[0]

    @property
    def mod_dim(self) -> int:
        return self.phi.shape[2]

    @classmethod
    def zero(cls, n: int, m: int) -> "Cochain2":
        return cls(zeros((n, n, m)), zeros((n, n, m)))

    def _check(self, other):
        if not isinstance(other, Cochain2) or other.phi.shape != self.phi.shape:
            raise InputError("cochains of different shapes")

    def __add__(self, other):
        self._check(other)
        return Cochain2(self.phi + other.phi, self.psi + other.psi)

    def __sub__(self, other):
        self._check(other)
        return Cochain2(self.phi - other.phi, self.psi - other.psi)

    def __neg__(self):
        return Cochain2(-self.phi, -self.psi)

    def __mul__(self, a):
        return Cochain2(self.phi * a, self.psi * a)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Cochain2):
            return NotImplemented
        return (
            self.phi.shape == other.phi.shape
            and bool(np.all(self.phi == other.phi))
            and bool(np.all(self.psi == other.psi))
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not np.any(self.phi) and not np.any(self.psi)

    def coordinates(self) -> np.ndarray:
        n = self.alg_dim
        upper = [self.phi[i, j] for i in range(n) for j in range(i, n)]
        parts = upper + [self.psi.reshape(n * n, -1)]
        return np.concatenate([np.asarray(p, dtype=object).reshape(-1) for p in parts])

    @classmethod
    def from_coordinates(cls, coords, n: int, m: int) -> "Cochain2":
        c = frac_array(coords).reshape(-1)
        if c.shape[0] != cochain2_dim(n, m):
            raise InputError(f"expected {cochain2_dim(n, m)} coordinates, got {c.shape[0]}")
        phi = zeros((n, n, m))
        pos = 0
        for i in range(n):
            for j in range(i, n):
                phi[i, j] = phi[j, i] = c[pos:pos + m]
                pos += m
        psi = c[pos:].reshape(n, n, m)
        return cls(phi, psi)


def cochain1_dim(n: int, m: int) -> int:
    return n * m


def cochain2_dim(n: int, m: int) -> int:
    return (n * (n + 1) // 2 + n * n) * m


def cochain1_coordinates(N) -> np.ndarray:
    return frac_array(N).T.reshape(-1)


def cochain1_from_coordinates(coords, n: int, m: int) -> np.ndarray:
    return frac_array(coords).reshape(n, m).T.copy()


def _cochain1(alg, rep, N) -> np.ndarray:
    N = frac_array(N)
    if N.shape != (rep.mod_dim, alg.dim):
        raise InputError(f"1-cochain must be {rep.mod_dim}x{alg.dim}, got shape {N.shape}")
    return N


def _cochain2(alg, rep, c: Cochain2) -> Cochain2:
    if c.phi.shape != (alg.dim, alg.dim, rep.mod_dim):
        raise InputError(
            f"2-cochain must have shape {(alg.dim, alg.dim, rep.mod_dim)}, got {c.phi.shape}"
        )
    return c


def _bilinear(terms, alg, rep, *cochain):
    """Evaluate ``terms`` (linear in the structure data and in the cochain) on
    integer-scaled copies, then divide the common scale back out."""
    D1, consts = integer_scaled(alg.star, alg.bullet, rep.mu, rep.l, rep.r)
    D2, coch = integer_scaled(*cochain)
    return tuple(frac_array(t) / (D1 * D2) for t in terms(*consts, *coch))


def _d1_terms(s, b, mu, l, r, N):
    phi = (
        np.einsum("auv,vb->abu", mu, N)
        - np.einsum("abk,uk->abu", s, N)
        + np.einsum("buv,va->abu", mu, N)
    )
    psi = (
        np.einsum("auv,vb->abu", l, N)
        - np.einsum("abk,uk->abu", b, N)
        + np.einsum("buv,va->abu", r, N)
    )
    return phi, psi


def d1(alg: ComPreLieAlgebra, rep: Representation, N) -> Cochain2:
    """(phi, psi) with phi(x,y) = mu(x)N(y) - N(x*y) + mu(y)N(x) and
    psi(x,y) = l(x)N(y) - N(x.y) + r(y)N(x)."""
    check_dims(alg, rep)
    N = _cochain1(alg, rep, N)
    return Cochain2(*_bilinear(_d1_terms, alg, rep, N))


def is_1cocycle(alg: ComPreLieAlgebra, rep: Representation, N) -> bool:
    return d1(alg, rep, N).is_zero()


def _d2_terms(s, b, mu, l, r, phi, psi):
    # phi(x, y*z) + mu(x)phi(y,z) - phi(x*y, z) - mu(z)phi(x,y)
    T1 = (
        np.einsum("yzk,xku->xyzu", s, phi)
        + np.einsum("xuv,yzv->xyzu", mu, phi)
        - np.einsum("xyk,kzu->xyzu", s, phi)
        - np.einsum("zuv,xyv->xyzu", mu, phi)
    )

    # psi(x.y, z) + r(z)psi(x,y) - psi(x, y.z) - l(x)psi(y,z)
    #   - psi(y.x, z) - r(z)psi(y,x) + psi(y, x.z) + l(y)psi(x,z)
    T2 = (
        np.einsum("xyk,kzu->xyzu", b, psi)
        + np.einsum("zuv,xyv->xyzu", r, psi)
        - np.einsum("yzk,xku->xyzu", b, psi)
        - np.einsum("xuv,yzv->xyzu", l, psi)
        - np.einsum("yxk,kzu->xyzu", b, psi)
        - np.einsum("zuv,yxv->xyzu", r, psi)
        + np.einsum("xzk,yku->xyzu", b, psi)
        + np.einsum("yuv,xzv->xyzu", l, psi)
    )

    # psi(x, y*z) + l(x)phi(y,z) - phi(x.y, z) - mu(z)psi(x,y)
    #   - phi(y, x.z) - mu(y)psi(x,z)
    T3 = (
        np.einsum("yzk,xku->xyzu", s, psi)
        + np.einsum("xuv,yzv->xyzu", l, phi)
        - np.einsum("xyk,kzu->xyzu", b, phi)
        - np.einsum("zuv,xyv->xyzu", mu, psi)
        - np.einsum("xzk,yku->xyzu", b, phi)
        - np.einsum("yuv,xzv->xyzu", mu, psi)
    )
    return T1, T2, T3


def d2_defect(alg: ComPreLieAlgebra, rep: Representation, c: Cochain2):
    """The three cocycle defects T1, T2, T3, each an (n, n, n, m) array over (x, y, z)."""
    check_dims(alg, rep)
    _cochain2(alg, rep, c)
    return _bilinear(_d2_terms, alg, rep, c.phi, c.psi)


def is_2cocycle(alg: ComPreLieAlgebra, rep: Representation, c: Cochain2) -> bool:
    return not any(np.any(T) for T in d2_defect(alg, rep, c))


def first_defect(alg, rep, c: Cochain2):
    """(family index 1..3, basis triple) of the first nonvanishing defect, or None."""
    for k, T in enumerate(d2_defect(alg, rep, c), start=1):
        for idx in np.ndindex(*T.shape[:3]):
            if np.any(T[idx]):
                return k, idx
    return None


def _matrix_of(func, dim_in: int, scale: int = 1) -> np.ndarray:
    """Matrix of a linear map given as a function on integer unit vectors.

    ``func`` may work on integer-scaled data; columns are divided by ``scale``.
    """
    cols = []
    for k in range(dim_in):
        e = np.zeros(dim_in, dtype=object)
        e[k] = 1
        cols.append(func(e))
    if not cols:
        return zeros((len(func(np.zeros(0, dtype=object))), 0))
    M = np.stack(cols, axis=1)
    return frac_array(M) / scale if scale != 1 else frac_array(M)


def _scaled(alg, rep):
    return integer_scaled(alg.star, alg.bullet, rep.mu, rep.l, rep.r)


def _split2(v, n: int, m: int):
    phi = np.zeros((n, n, m), dtype=object)
    pos = 0
    for i in range(n):
        for j in range(i, n):
            phi[i, j] = phi[j, i] = v[pos:pos + m]
            pos += m
    return phi, v[pos:].reshape(n, n, m)


def d1_matrix(alg: ComPreLieAlgebra, rep: Representation) -> np.ndarray:
    """Columns: coordinates of d1 applied to the unit 1-cochains."""
    check_dims(alg, rep)
    n, m = alg.dim, rep.mod_dim
    D, consts = _scaled(alg, rep)

    def column(v):
        phi, psi = _d1_terms(*consts, v.reshape(n, m).T)
        upper = [phi[i, j] for i in range(n) for j in range(i, n)]
        return np.concatenate([np.asarray(upper, dtype=object).reshape(-1), psi.reshape(-1)])

    return _matrix_of(column, cochain1_dim(n, m), D)


def d2_matrix(alg: ComPreLieAlgebra, rep: Representation) -> np.ndarray:
    """Columns: the flattened defects (T1, T2, T3) of the unit 2-cochains."""
    check_dims(alg, rep)
    n, m = alg.dim, rep.mod_dim
    D, consts = _scaled(alg, rep)

    def column(v):
        T = _d2_terms(*consts, *_split2(v, n, m))
        return np.concatenate([t.reshape(-1) for t in T])

    return _matrix_of(column, cochain2_dim(n, m), D)


def are_cohomologous(alg, rep, c: Cochain2, c_prime: Cochain2) -> np.ndarray | None:
    """A 1-cochain f with c - c' = d1(f), or None if there is none."""
    check_dims(alg, rep)
    _cochain2(alg, rep, c)
    _cochain2(alg, rep, c_prime)
    x = solve(d1_matrix(alg, rep), (c - c_prime).coordinates())
    if x is None:
        return None
    return cochain1_from_coordinates(x, alg.dim, rep.mod_dim)


@dataclass(frozen=True, eq=False)
class CocycleSpace:
    degree: int
    ambient_dim: int
    Z: SubspaceBasis
    B: SubspaceBasis | None
    H_dim: int
    H_reps: list = field(default_factory=list)
    alg_dim: int = 0
    mod_dim: int = 0

    def cochain(self, coords):
        if self.degree == 1:
            return cochain1_from_coordinates(coords, self.alg_dim, self.mod_dim)
        return Cochain2.from_coordinates(coords, self.alg_dim, self.mod_dim)


def require_valid(alg: ComPreLieAlgebra, rep: Representation) -> None:
    check_dims(alg, rep)
    ra = validate_algebra(alg)
    if not ra.passed:
        bad = [k for k, c in ra.checks.items() if not c.passed]
        raise InputError(f"algebra fails axioms: {', '.join(bad)}")
    rr = validate_representation(alg, rep)
    if not rr.passed:
        bad = [k for k, c in rr.checks.items() if not c.passed]
        raise InputError(f"representation fails axioms: {', '.join(bad)}")


def cohomology_space(alg: ComPreLieAlgebra, rep: Representation, degree: int) -> CocycleSpace:
    require_valid(alg, rep)
    n, m = alg.dim, rep.mod_dim
    if degree == 1:
        Z = kernel_basis(d1_matrix(alg, rep))
        reps = [cochain1_from_coordinates(v, n, m) for v in Z]
        # no 1-coboundaries in this theory: H^1 is reported as Z^1
        return CocycleSpace(1, cochain1_dim(n, m), Z, None, Z.dim, reps, n, m)
    if degree == 2:
        dim = cochain2_dim(n, m)
        Z = kernel_basis(d2_matrix(alg, rep))
        B = SubspaceBasis.spanned_by(dim, d1_matrix(alg, rep).T)
        H = complement_basis(B, Z)
        reps = [Cochain2.from_coordinates(v, n, m) for v in H]
        return CocycleSpace(2, dim, Z, B, Z.dim - B.dim, reps, n, m)
    raise InputError(f"degree must be 1 or 2, got {degree}")


# ---------------------------------------------------------------------------
# general (m, n)-cochains


@dataclass(frozen=True, eq=False)
class GeneralCochain:
    """f(y_1..y_m ; x_1..x_n) with values in V.

    ``values`` has shape (d,)*(m+n) + (mod_dim,), the y slots first.
    """

    m: int
    n: int
    values: np.ndarray

    def __post_init__(self):
        vals = frac_array(self.values)
        if self.m < 0 or self.n < 0:
            raise InputError("cochain degrees must be non-negative")
        if vals.ndim != self.m + self.n + 1:
            raise InputError(
                f"({self.m},{self.n})-cochain needs {self.m + self.n + 1} axes, got {vals.ndim}"
            )
        if len(set(vals.shape[:-1])) > 1:
            raise InputError(f"argument axes must share one length, got {vals.shape}")
        object.__setattr__(self, "values", vals)

    def __eq__(self, other):
        if not isinstance(other, GeneralCochain):
            return NotImplemented
        return (
            (self.m, self.n) == (other.m, other.n)
            and self.values.shape == other.values.shape
            and bool(np.all(self.values == other.values))
        )

    __hash__ = None


def _parity(perm) -> int:
    inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def shuffles(i: int, m: int) -> tuple:
    """All (i, m-i)-shuffles sigma as tuples (sigma(0), ..., sigma(m-1))."""
    out = []
    for first in itertools.combinations(range(m), i):
        rest = [k for k in range(m) if k not in first]
        out.append(tuple(first) + tuple(rest))
    return tuple(out)


def shuffle_check(f: GeneralCochain) -> bool:
    vals = f.values
    m, n = f.m, f.n
    tail = list(range(m, vals.ndim))
    for i in range(1, m):
        total = zeros(vals.shape)
        for sigma in shuffles(i, m):
            # slot sigma(k) holds y_k
            total = total + _parity(sigma) * vals.transpose(list(sigma) + tail)
        if np.any(total):
            return False
    # antisymmetry in x_1..x_{n-1}
    for a in range(m, m + n - 2):
        axes = list(range(vals.ndim))
        axes[a], axes[a + 1] = axes[a + 1], axes[a]
        if np.any(vals + vals.transpose(axes)):
            return False
    return True


def _eval(values: np.ndarray, args) -> np.ndarray:
    """Evaluate a multilinear tensor; each arg is a basis index or a coefficient vector."""
    res = values
    for a in args:
        if isinstance(a, (int, np.integer)):
            res = res[a]
        else:
            res = np.tensordot(a, res, axes=(0, 0))
    return res


def _harrison(alg, rep, f: GeneralCochain) -> GeneralCochain:
    d, m, n = alg.dim, f.m, f.n
    V = rep.mod_dim
    out = zeros((d,) * (m + 1 + n) + (V,))
    for idx in np.ndindex(*((d,) * (m + 1 + n))):
        ys, xs = idx[: m + 1], idx[m + 1:]
        val = rep.mu[ys[0]] @ _eval(f.values, ys[1:] + xs)
        for i in range(1, m + 1):
            prod = alg.star[ys[i - 1], ys[i]]
            args = ys[: i - 1] + (prod,) + ys[i + 1:] + xs
            val = val + (-1) ** i * _eval(f.values, args)
        val = val + (-1) ** (m + 1) * (rep.mu[ys[m]] @ _eval(f.values, ys[:m] + xs))
        out[idx] = val
    return GeneralCochain(m + 1, n, out)


def _dzhumadildaev(alg, rep, f: GeneralCochain) -> GeneralCochain:
    d, n = alg.dim, f.n
    V = rep.mod_dim
    b = alg.bullet
    out = zeros((d,) * (n + 1) + (V,))
    for xs in np.ndindex(*((d,) * (n + 1))):
        val = zeros(V)
        last = xs[n]
        for i in range(n):
            sign = 1 if i % 2 == 0 else -1  # (-1)^(i+1) with 1-based i
            hat = xs[:i] + xs[i + 1:]
            val = val + sign * (rep.l[xs[i]] @ _eval(f.values, hat))
            moved = xs[:i] + xs[i + 1:n] + (xs[i],)
            val = val + sign * (rep.r[last] @ _eval(f.values, moved))
            prod = b[xs[i], last]
            val = val - sign * _eval(f.values, xs[:i] + xs[i + 1:n] + (prod,))
        for i in range(n):
            for j in range(i + 1, n):
                # (-1)^(i+j) is unchanged by the shift to 0-based indices
                sign = 1 if (i + j) % 2 == 0 else -1
                br = b[xs[i], xs[j]] - b[xs[j], xs[i]]
                rest = tuple(x for k, x in enumerate(xs) if k not in (i, j))
                val = val + sign * _eval(f.values, (br,) + rest)
        out[xs] = val
    return GeneralCochain(0, n + 1, out)


def general_coboundary(alg: ComPreLieAlgebra, rep: Representation, f: GeneralCochain,
                       part: str) -> GeneralCochain:
    check_dims(alg, rep)
    if f.values.shape[-1] != rep.mod_dim or (
        f.values.ndim > 1 and f.values.shape[0] != alg.dim
    ):
        raise InputError(f"cochain shape {f.values.shape} does not match algebra/module")
    if part == "harrison":
        return _harrison(alg, rep, f)
    if part == "dzhumadildaev":
        if f.m != 0:
            raise UnsupportedCaseError(
                "the Dzhumadil'daev part is only implemented for m = 0 cochains"
            )
        if f.n < 1:
            raise InputError("Dzhumadil'daev coboundary needs n >= 1")
        return _dzhumadildaev(alg, rep, f)
    raise InputError(f"unknown coboundary part {part!r}")
