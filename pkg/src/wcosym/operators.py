"""Finite truncations of weighted composition operators and conjugations.

Everything acts on span{1, z, ..., z^(N-1)} with the monomial basis, which
is orthonormal in the norm sum |a_n|^2, so adjoints are conjugate
transposes and anti-linear operators are matrices applied to conjugated
coordinates.  Residuals are always measured on a leading k x k block with
k + 32 <= N: truncation corrupts the trailing rows and columns of
products, and the geometric decay of the symbol coefficients confines
that corruption away from the leading block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Tuple, Union

import numpy as np

from .errors import (
    BadParameterDomainError,
    BlockTooLargeError,
    DimensionMismatchError,
    NotSelfMapError,
    SymbolPoleError,
)
from .mobius import ConstantMap, MobiusMap, cowen_adjoint, is_self_map, IDENTITY
from .series import RationalSymbol, expand_rational, mobius_series

BLOCK_PAD = 32
PASS_TOL = 1e-7
FAIL_TOL = 1e-3
_POLE_GUARD = 1.0 + 1e-9


@dataclass(frozen=True)
class TruncatedOperator:
    """N x N matrix of an operator; column j holds the coefficients of the
    image of z^j."""

    dim: int
    mat: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=complex)
        if m.shape != (self.dim, self.dim):
            raise DimensionMismatchError(f"matrix shape {m.shape} != ({self.dim}, {self.dim})")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix entries must be finite")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)


@dataclass(frozen=True)
class AntiLinearMatrix:
    """Matrix U of an anti-linear operator x -> U conj(x)."""

    dim: int
    u: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.u, dtype=complex)
        if m.shape != (self.dim, self.dim):
            raise DimensionMismatchError(f"matrix shape {m.shape} != ({self.dim}, {self.dim})")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "u", m)


@dataclass(frozen=True)
class Conjugation:
    """Parameters of the three conjugations.

    kind "J": plain coefficient conjugation, lam and alpha unused.
    kind "C1": weight lam, composition z -> alpha z, |lam| = |alpha| = 1.
    kind "C2": weight lam k_alpha, composition the alpha-involution of the
    disk, |lam| = 1 and 0 < |alpha| < 1.
    """

    kind: Literal["J", "C1", "C2"]
    lam: complex = 1.0
    alpha: complex = 0.0

    def __post_init__(self):
        if self.kind not in ("J", "C1", "C2"):
            raise BadParameterDomainError(f"unknown conjugation kind {self.kind!r}")
        if self.kind != "J":
            if abs(abs(complex(self.lam)) - 1.0) > 1e-12:
                raise BadParameterDomainError("|lam| must equal 1")
        if self.kind == "C1" and abs(abs(complex(self.alpha)) - 1.0) > 1e-12:
            raise BadParameterDomainError("C1 needs |alpha| = 1")
        if self.kind == "C2" and not 0.0 < abs(complex(self.alpha)) < 1.0:
            raise BadParameterDomainError("C2 needs 0 < |alpha| < 1")
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "alpha", complex(self.alpha))


def _wco_columns(psi_s: np.ndarray, phi: Union[MobiusMap, ConstantMap], n: int) -> np.ndarray:
    mat = np.zeros((n, n), dtype=complex)
    if isinstance(phi, ConstantMap):
        mat[:, 0] = psi_s
        for j in range(1, n):
            mat[:, j] = mat[:, j - 1] * phi.value
        return mat
    phi_s = mobius_series(phi, n).coeffs
    col = psi_s
    mat[:, 0] = col
    for j in range(1, n):
        col = np.convolve(col, phi_s)[:n]
        mat[:, j] = col
    return mat


def build_wco(
    psi: RationalSymbol,
    phi: Union[MobiusMap, ConstantMap],
    n: int,
) -> TruncatedOperator:
    """Truncation of f -> psi (f o phi): column j = series of psi * phi^j.

    The weight must be analytic on the closed disk (pole strictly
    outside); phi must be a self-map.  Each column is exact through order
    n because Cauchy products never pull in higher coefficients.
    """
    pole = psi.pole()
    if abs(pole) <= _POLE_GUARD:
        raise SymbolPoleError(f"weight pole at {pole} not outside the closed disk")
    if isinstance(phi, ConstantMap):
        if abs(phi.value) >= 1.0:
            raise NotSelfMapError("constant map value must lie inside the disk")
    elif not is_self_map(phi):
        raise NotSelfMapError("composition symbol is not a self-map")
    psi_s = expand_rational(psi, n).coeffs
    return TruncatedOperator(n, _wco_columns(psi_s, phi, n))


def adjoint(t: TruncatedOperator) -> TruncatedOperator:
    """Conjugate transpose (the monomial basis is orthonormal)."""
    return TruncatedOperator(t.dim, t.mat.conj().T)


def conjugation_matrix(c: Conjugation, n: int) -> AntiLinearMatrix:
    """Matrix U with the conjugation acting as x -> U conj(x)."""
    if c.kind == "J":
        return AntiLinearMatrix(n, np.eye(n, dtype=complex))
    if c.kind == "C1":
        return AntiLinearMatrix(n, np.diag(c.lam * c.alpha ** np.arange(n)))
    alpha = c.alpha
    weight = RationalSymbol(c.lam * np.sqrt(1.0 - abs(alpha) ** 2), 0.0, 1.0, -np.conj(alpha))
    vmap = MobiusMap(-np.conj(alpha) / alpha, np.conj(alpha), -np.conj(alpha), 1.0)
    return AntiLinearMatrix(n, build_wco(weight, vmap, n).mat)


def _check_block(n: int, k: int):
    if k + BLOCK_PAD > n:
        raise BlockTooLargeError(f"need k + {BLOCK_PAD} <= N, got k={k}, N={n}")


def involution_residual(a: AntiLinearMatrix, k: int) -> Tuple[float, float]:
    """(involution defect, isometry defect) on the leading k x k block.

    C^2 x = U conj(U) x, so the first component is ||U conj(U) - I||; the
    anti-linear isometry axiom reduces to U^H U = I, the second component.
    """
    _check_block(a.dim, k)
    eye = np.eye(a.dim, dtype=complex)
    inv = (a.u @ a.u.conj() - eye)[:k, :k]
    iso = (a.u.conj().T @ a.u - eye)[:k, :k]
    return float(np.linalg.norm(inv)), float(np.linalg.norm(iso))


def symmetry_residual(t: TruncatedOperator, a: AntiLinearMatrix, k: int) -> float:
    """|| T - U T^t conj(U) || on the leading block.

    For anti-linear C: x -> U conj(x) the condition T = C T* C reduces to
    T = U T^t conj(U).
    """
    if t.dim != a.dim:
        raise DimensionMismatchError(f"dims differ: {t.dim} != {a.dim}")
    _check_block(t.dim, k)
    res = t.mat - a.u @ t.mat.T @ a.u.conj()
    return float(np.linalg.norm(res[:k, :k]))


def normality_residual(t: TruncatedOperator, k: int) -> float:
    """|| T*T - TT* || on the leading block."""
    _check_block(t.dim, k)
    m = t.mat.conj().T @ t.mat - t.mat @ t.mat.conj().T
    return float(np.linalg.norm(m[:k, :k]))


def adjoint_factorization_residual(
    m: MobiusMap, n: int, k: int, sigma_sign: int = -1
) -> float:
    """|| (C_phi)^H - M_g C_sigma (M_h)^H || on the leading block.

    All four factors are built at dimension n; since M_g is lower
    triangular and M_h* lowers degree, the truncated identity holds to
    rounding when the sigma sign convention is the correct one.
    """
    _check_block(n, k)
    if not is_self_map(m):
        raise NotSelfMapError("factorization residual needs a self-map")
    triple = cowen_adjoint(m, sigma_sign=sigma_sign)
    if sigma_sign == -1 and not is_self_map(triple.sigma):
        raise NotSelfMapError("sigma is not a self-map")
    one = np.zeros(n, dtype=complex)
    one[0] = 1.0
    c_phi = _wco_columns(one, m, n)
    m_g = build_wco(triple.g, IDENTITY, n).mat
    # the flipped-sign variant of sigma need not be a self-map; build its
    # columns directly so the wrong convention can be exhibited failing
    c_sigma = _wco_columns(one, triple.sigma, n)
    m_h = build_wco(triple.h, IDENTITY, n).mat
    res = c_phi.conj().T - m_g @ c_sigma @ m_h.conj().T
    return float(np.linalg.norm(res[:k, :k]))
