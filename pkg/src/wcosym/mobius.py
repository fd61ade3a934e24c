"""Exact algebra and classification of linear-fractional self-maps of the disk.

Maps are stored projectively as coefficient quadruples (a, b, c, d) of
z -> (az + b)/(cz + d), normalized so the coefficient of largest modulus
equals 1; two maps are equal iff their canonical quadruples agree.  The
classification (interior / hyperbolic / parabolic, automorphism or not)
is decided from the fixed-point quadratic and closed-form coefficient
criteria, never from boundary sampling.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from .errors import (
    ConstantMapError,
    DegenerateMapError,
    IdentityMapError,
    NotSelfMapError,
    PoleAtInputError,
)
from .series import RationalSymbol

INFINITY = complex(float("inf"), 0.0)

SELF_MAP_SLACK = 1e-10
BOUNDARY_TOL = 1e-9
PARABOLIC_TOL = 1e-9
AUT_TOL = 1e-9
EQUAL_TOL = 1e-9
_DEGENERATE_TOL = 1e-13
_POLE_EPS = 1e-13


def _is_inf(z: complex) -> bool:
    return cmath.isinf(z)


@dataclass(frozen=True)
class ConstantMap:
    """Constant map z -> value, kept distinct from degenerate quadruples."""

    value: complex


@dataclass(frozen=True)
class MobiusMap:
    """Non-degenerate linear-fractional map (az + b)/(cz + d).

    The stored quadruple is canonical: scaled so the largest-modulus
    coefficient is exactly 1 (ties broken in the order a, b, c, d).
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        q = [complex(self.a), complex(self.b), complex(self.c), complex(self.d)]
        if not all(np.isfinite(v.real) and np.isfinite(v.imag) for v in q):
            raise ValueError("coefficients must be finite")
        scale = max(abs(v) for v in q)
        if scale == 0.0:
            raise DegenerateMapError("all coefficients vanish")
        det = q[0] * q[3] - q[1] * q[2]
        if abs(det) <= _DEGENERATE_TOL * scale * scale:
            raise DegenerateMapError(
                "ad - bc vanishes; use ConstantMap for constant maps"
            )
        pivot = next(v for v in q if abs(v) == scale)
        q = [v / pivot for v in q]
        for name, v in zip(("a", "b", "c", "d"), q):
            object.__setattr__(self, name, v)

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def quadruple(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d])

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def derivative(self, z: complex) -> complex:
        den = self.c * z + self.d
        return self.det / (den * den)


IDENTITY = MobiusMap(1.0, 0.0, 0.0, 1.0)


def blaschke(p: complex) -> MobiusMap:
    """Disk involution (p - z)/(1 - conj(p) z)."""
    return MobiusMap(-1.0, p, -np.conj(p), 1.0)


class MapClass(str, Enum):
    IDENTITY = "Identity"
    CONSTANT = "Constant"
    INTERIOR_FIXED_POINT = "InteriorFixedPoint"
    ELLIPTIC_AUTOMORPHISM = "EllipticAutomorphism"
    HYPERBOLIC_AUTOMORPHISM = "HyperbolicAutomorphism"
    HYPERBOLIC_NON_AUTOMORPHISM = "HyperbolicNonAutomorphism"
    PARABOLIC_AUTOMORPHISM = "ParabolicAutomorphism"
    PARABOLIC_NON_AUTOMORPHISM = "ParabolicNonAutomorphism"


@dataclass(frozen=True)
class MapClassification:
    map_class: MapClass
    dw_point: Optional[complex]
    dw_derivative: Optional[complex]
    is_automorphism: bool


@dataclass(frozen=True)
class AutNormalForm:
    """Automorphism written as beta (gamma - z)/(1 - conj(gamma) z).

    ``rotation`` is the orientation flag: when True the map is the plain
    rotation z -> beta z (the gamma = 0 case carries an extra sign in the
    display above, so the rotation factor is reported directly instead).
    """

    beta: complex
    gamma: complex
    rotation: bool = False

    def to_map(self) -> MobiusMap:
        if self.rotation:
            return MobiusMap(self.beta, 0.0, 0.0, 1.0)
        return MobiusMap(-self.beta, self.beta * self.gamma, -np.conj(self.gamma), 1.0)


@dataclass(frozen=True)
class CowenTriple:
    """Auxiliary functions of the adjoint factorization C_phi* = M_g C_sigma M_h*."""

    g: RationalSymbol
    sigma: MobiusMap
    h: RationalSymbol  # polynomial: h(z) = c z + d stored with unit denominator


# ---------------------------------------------------------------------------
# elementary operations
# ---------------------------------------------------------------------------

def evaluate(m: MobiusMap, z: complex) -> complex:
    den = m.c * z + m.d
    scale = max(abs(m.c) * abs(z), abs(m.d), 1.0)
    if abs(den) < _POLE_EPS * scale:
        raise PoleAtInputError(f"pole at z = {z}")
    return (m.a * z + m.b) / den


MapLike = Union[MobiusMap, ConstantMap]


def compose(m1: MapLike, m2: MapLike) -> MapLike:
    """The map z -> m1(m2(z)), canonicalized.

    Composition of non-degenerate maps is coefficient-level matrix
    multiplication and stays non-degenerate (determinants multiply);
    constants propagate through either slot.
    """
    if isinstance(m2, ConstantMap):
        v = m2.value if isinstance(m1, ConstantMap) else evaluate(m1, m2.value)
        return ConstantMap(v)
    if isinstance(m1, ConstantMap):
        return ConstantMap(m1.value)
    a = m1.a * m2.a + m1.b * m2.c
    b = m1.a * m2.b + m1.b * m2.d
    c = m1.c * m2.a + m1.d * m2.c
    d = m1.c * m2.b + m1.d * m2.d
    scale = max(abs(a), abs(b), abs(c), abs(d))
    if scale == 0.0 or abs(a * d - b * c) <= _DEGENERATE_TOL * scale * scale:
        # numerically degenerate composite: constant with value a/c = b/d
        return ConstantMap(b / d if abs(d) >= abs(c) else a / c)
    return MobiusMap(a, b, c, d)


def proj_distance(m1: MapLike, m2: MapLike) -> float:
    """Projective distance between maps: scaled norm of the 2x2 minors.

    Zero iff the coefficient quadruples are proportional, i.e. the maps
    are equal; insensitive to the choice of representatives.
    """
    if isinstance(m1, ConstantMap) or isinstance(m2, ConstantMap):
        if isinstance(m1, ConstantMap) and isinstance(m2, ConstantMap):
            return abs(m1.value - m2.value) / max(1.0, abs(m1.value), abs(m2.value))
        return float("inf")
    v1 = m1.quadruple()
    v2 = m2.quadruple()
    minors = np.outer(v1, v2) - np.outer(v2, v1)
    return float(np.linalg.norm(minors) / (np.linalg.norm(v1) * np.linalg.norm(v2)))


def mobius_equal(m1: MapLike, m2: MapLike, tol: float = EQUAL_TOL) -> bool:
    return proj_distance(m1, m2) <= tol


def fixed_points(m: MobiusMap) -> list:
    """Fixed points in C union {INFINITY}, double roots repeated.

    Roots of c z^2 + (d - a) z - b = 0; the linear case (c = 0) fixes
    infinity as well.
    """
    if mobius_equal(m, IDENTITY):
        raise IdentityMapError("every point of the identity map is fixed")
    a, b, c, d = m.a, m.b, m.c, m.d
    if abs(c) <= _DEGENERATE_TOL:
        if abs(d - a) <= _DEGENERATE_TOL * max(abs(a), abs(d)):
            return [INFINITY, INFINITY]  # translation-like: only infinity fixed
        return [b / (d - a), INFINITY]
    disc = (d - a) * (d - a) + 4.0 * c * b
    scale = max(abs(a), abs(b), abs(c), abs(d))
    if abs(disc) <= PARABOLIC_TOL * scale:
        z0 = (a - d) / (2.0 * c)
        return [z0, z0]
    sq = cmath.sqrt(disc)
    # stable quadratic: pick the sign avoiding cancellation; q != 0 once
    # the parabolic (disc ~ 0) branch above is excluded
    s = -(d - a)
    q = 0.5 * (s + sq) if abs(s + sq) >= abs(s - sq) else 0.5 * (s - sq)
    return [q / c, -b / q]


def sup_modulus(m: MobiusMap) -> float:
    """sup of |m| over the closed unit disk (infinite if the pole intrudes).

    The image of the disk is the disk with center (b conj(d) - a conj(c))
    / (|d|^2 - |c|^2) and radius |ad - bc| / (|d|^2 - |c|^2).
    """
    gap = abs(m.d) ** 2 - abs(m.c) ** 2
    if gap <= 0:
        return float("inf")
    num = abs(m.b * np.conj(m.d) - m.a * np.conj(m.c)) + abs(m.det)
    return num / gap


def is_self_map(m: MobiusMap) -> bool:
    """Exact criterion |b conj(d) - a conj(c)| + |ad - bc| <= |d|^2 - |c|^2."""
    gap = abs(m.d) ** 2 - abs(m.c) ** 2
    if gap <= 0:
        return False
    num = abs(m.b * np.conj(m.d) - m.a * np.conj(m.c)) + abs(m.det)
    return num <= gap + SELF_MAP_SLACK


def is_automorphism(m: MobiusMap) -> bool:
    """|a|^2 + |b|^2 = |c|^2 + |d|^2 and a conj(b) = c conj(d).

    Equivalent to |az + b| = |cz + d| on the unit circle; combined with
    non-degeneracy and the self-map property this characterizes the disk
    automorphisms.  Equality in the self-map criterion alone is not
    sufficient.
    """
    if not is_self_map(m):
        return False
    scale = max(abs(v) for v in (m.a, m.b, m.c, m.d)) ** 2
    mod_gap = abs(abs(m.a) ** 2 + abs(m.b) ** 2 - abs(m.c) ** 2 - abs(m.d) ** 2)
    cross_gap = abs(m.a * np.conj(m.b) - m.c * np.conj(m.d))
    return bool(mod_gap <= AUT_TOL * scale and cross_gap <= AUT_TOL * scale)


def classify(m: MapLike) -> MapClassification:
    """Fixed-point classification with Denjoy-Wolff data.

    The Denjoy-Wolff point is the interior fixed point when one exists,
    otherwise the boundary fixed point with derivative at most 1.
    """
    if isinstance(m, ConstantMap):
        return MapClassification(MapClass.CONSTANT, m.value, 0.0 + 0.0j, False)
    if mobius_equal(m, IDENTITY):
        return MapClassification(MapClass.IDENTITY, None, 1.0 + 0.0j, True)
    if not is_self_map(m):
        raise NotSelfMapError(f"{m} is not a self-map of the unit disk")
    aut = is_automorphism(m)
    points = fixed_points(m)
    finite = [p for p in points if not _is_inf(p)]
    interior = [p for p in finite if abs(p) < 1.0 - BOUNDARY_TOL]
    if interior:
        p = interior[0]
        cls = MapClass.ELLIPTIC_AUTOMORPHISM if aut else MapClass.INTERIOR_FIXED_POINT
        return MapClassification(cls, p, m.derivative(p), aut)
    boundary = [p for p in finite if abs(abs(p) - 1.0) <= BOUNDARY_TOL]
    if not boundary:
        raise NotSelfMapError("no fixed point in the closed disk")
    if len(boundary) == 2 and abs(boundary[0] - boundary[1]) <= 10 * BOUNDARY_TOL:
        zeta = boundary[0]
        cls = MapClass.PARABOLIC_AUTOMORPHISM if aut else MapClass.PARABOLIC_NON_AUTOMORPHISM
        return MapClassification(cls, zeta, m.derivative(zeta), aut)
    # hyperbolic: the Denjoy-Wolff point has |derivative| <= 1
    zeta = min(boundary, key=lambda p: abs(m.derivative(p)))
    deriv = m.derivative(zeta)
    if abs(deriv - 1.0) <= PARABOLIC_TOL:
        cls = MapClass.PARABOLIC_AUTOMORPHISM if aut else MapClass.PARABOLIC_NON_AUTOMORPHISM
    else:
        cls = MapClass.HYPERBOLIC_AUTOMORPHISM if aut else MapClass.HYPERBOLIC_NON_AUTOMORPHISM
    return MapClassification(cls, zeta, deriv, aut)


def aut_normal_form(m: MobiusMap) -> Optional[AutNormalForm]:
    """(beta, gamma) with m = beta (gamma - z)/(1 - conj(gamma) z), or None.

    Rotations come back with the orientation flag set and beta equal to
    the rotation factor itself; |beta| = 1 is enforced by renormalizing.
    """
    if not is_automorphism(m):
        return None
    if abs(m.c) <= EQUAL_TOL * max(abs(m.a), abs(m.d)):
        beta = m.a / m.d
        beta /= abs(beta)
        return AutNormalForm(beta, 0.0 + 0.0j, rotation=True)
    gamma = np.conj(-m.c / m.d)
    beta = -m.a / m.d
    beta /= abs(beta)
    return AutNormalForm(complex(beta), complex(gamma), rotation=False)


def cowen_adjoint(m: MapLike, sigma_sign: int = -1) -> CowenTriple:
    """Auxiliary functions g, sigma, h of the adjoint factorization.

    sigma(z) = (conj(a) z - conj(c)) / (-conj(b) z + conj(d)); the
    ``sigma_sign`` switch flips the sign of the conj(c) term and exists
    only so the wrong variant can be exhibited failing the factorization
    residual.
    """
    if isinstance(m, ConstantMap):
        raise ConstantMapError("adjoint factorization needs a non-constant map")
    ac, bc, cc, dc = (np.conj(v) for v in (m.a, m.b, m.c, m.d))
    g = RationalSymbol(1.0, 0.0, dc, -bc)
    sigma = MobiusMap(ac, sigma_sign * cc, -bc, dc)
    h = RationalSymbol(m.d, m.c, 1.0, 0.0)
    return CowenTriple(g, sigma, h)


def lft_normality_defects(quad) -> Tuple[float, float]:
    """(modulus gap, commuting defect) of the K_{sigma(0)}-normality
    condition, computed on a raw coefficient quadruple.

    The commuting defect is the residual of the three cross-multiplied
    coefficient equations of (phi o sigma)(z) = (sigma o phi)(z),
    normalized by the input scale so that degenerate quadruples (whose
    composites can vanish identically) are handled without blow-up:
    vanishing composites satisfy the written equations vacuously.
    """
    a, b, c, d = (complex(v) for v in quad)
    if abs(d) == 0.0:
        return float("inf"), float("inf")
    mq = np.array([[a, b], [c, d]])
    sq = np.array([[np.conj(a), -np.conj(c)], [-np.conj(b), np.conj(d)]])
    gap = abs(abs(b / d) - abs(sq[0, 1] / sq[1, 1]))
    p1, q1, r1, s1 = (mq @ sq).reshape(-1)
    p2, q2, r2, s2 = (sq @ mq).reshape(-1)
    cross = np.array(
        [
            p1 * r2 - p2 * r1,
            q1 * s2 - q2 * s1,
            p1 * s2 + q1 * r2 - p2 * s1 - q2 * r1,
        ]
    )
    scale = float(np.linalg.norm(mq)) ** 2 * float(np.linalg.norm(sq)) ** 2
    return gap, float(np.linalg.norm(cross)) / scale


def normality_lft_check(
    m: MapLike, tol: float = EQUAL_TOL, require_self_map: bool = True
) -> bool:
    """Closed-form normality test for the weight K_{sigma(0)}.

    True iff |m(0)| = |sigma(0)| and m and sigma commute under
    composition (projective comparison of the composites).
    """
    if isinstance(m, ConstantMap):
        raise ConstantMapError("normality check needs a non-constant map")
    if require_self_map and not is_self_map(m):
        raise NotSelfMapError("normality check needs a self-map")
    gap, defect = lft_normality_defects((m.a, m.b, m.c, m.d))
    return gap <= tol and defect <= tol
