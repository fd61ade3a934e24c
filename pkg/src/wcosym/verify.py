"""Named verification suites cross-checking predicates against matrix oracles.

Each suite samples one parametric statement about these operator families,
evaluates the closed-form predicate and an independent truncation (or
coefficient-level) oracle on every sample, and classifies the outcome with
an explicit inconclusive band between the pass and fail thresholds so that
truncation noise can never silently misclassify a near-boundary draw.
Disagreements are reported as discrepancy records, never patched.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from . import families as fam
from .errors import UnknownSuiteError
from .mobius import (
    ConstantMap,
    IDENTITY,
    MapClass,
    MobiusMap,
    aut_normal_form,
    classify,
    is_self_map,
    lft_normality_defects,
    mobius_equal,
    proj_distance,
    sup_modulus,
)
from .operators import (
    Conjugation,
    adjoint_factorization_residual,
    build_wco,
    conjugation_matrix,
    involution_residual,
    normality_residual,
    symmetry_residual,
)
from .series import RationalSymbol


@dataclass(frozen=True)
class SuiteConfig:
    dim: int = 64
    block: int = 12
    samples: int = 200
    seed: int = 2024
    pass_tol: float = 1e-7
    fail_tol: float = 1e-3
    pred_tol: float = 1e-10

    def __post_init__(self):
        if self.block + 32 > self.dim:
            raise ValueError(f"need block + 32 <= dim, got {self.block} + 32 > {self.dim}")
        if not self.pass_tol < self.fail_tol:
            raise ValueError("pass_tol must be below fail_tol")


@dataclass
class SampleRecord:
    params: Dict[str, object]
    residuals: Dict[str, float] = field(default_factory=dict)
    predicates: Dict[str, object] = field(default_factory=dict)
    oracles: Dict[str, object] = field(default_factory=dict)
    verdict: str = "pass"
    note: str = ""


@dataclass
class VerificationReport:
    suite_id: str
    config: SuiteConfig
    records: List[SampleRecord]
    known_discrepancy: bool = False

    @property
    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "inconclusive": 0, "discrepancy": 0}
        for r in self.records:
            counts[r.verdict] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def exit_status(self) -> int:
        s = self.summary
        if s["fail"] == 0 and s["discrepancy"] == 0:
            return 0
        return 3 if self.known_discrepancy else 1


# ---------------------------------------------------------------------------
# sampling helpers (all deterministic in the generator stream)
# ---------------------------------------------------------------------------

def _disk(rng, radius=1.0, min_radius=0.0):
    # uniform on the disk via rejection from the bounding square
    while True:
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if min_radius / radius <= abs(z) <= 1.0:
            return radius * z


def _angle(rng):
    return cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))


def _band_verdict(residual: float, cfg: SuiteConfig) -> str:
    if residual <= cfg.pass_tol:
        return "pass"
    if residual >= cfg.fail_tol:
        return "fail"
    return "band"


def _agreement(claims_normal: bool, oracle_band: str) -> str:
    if oracle_band == "band":
        return "inconclusive"
    if claims_normal == (oracle_band == "pass"):
        return "pass"
    return "discrepancy"


def _matrix_normality(pair: fam.SymbolPair, cfg: SuiteConfig, dim: Optional[int] = None) -> float:
    t = build_wco(pair.psi, pair.phi, dim or cfg.dim)
    return normality_residual(t, cfg.block)


# ---------------------------------------------------------------------------
# individual suites
# ---------------------------------------------------------------------------

def suite_prop21_normal(cfg: SuiteConfig) -> VerificationReport:
    """Interior-fixed-point family: every member passes the normality oracle."""
    rng = np.random.default_rng(cfg.seed)
    records = []
    for _ in range(cfg.samples):
        p = _disk(rng, 0.5)
        delta = _disk(rng, 0.7)
        gamma = 0.5 + rng.uniform(0.0, 1.0)
        pair = fam.normal_interior_symbols(fam.InteriorParams(p, delta, gamma))
        res = _matrix_normality(pair, cfg)
        rec = SampleRecord(
            params={"p": p, "delta": delta, "gamma": gamma},
            residuals={"normality": res},
            predicates={"in_family": True},
            oracles={"normality_band": _band_verdict(res, cfg)},
        )
        rec.verdict = _agreement(True, rec.oracles["normality_band"])
        records.append(rec)
    return VerificationReport("prop21-normal", cfg, records)


def _lft_oracle(quad) -> Dict[str, object]:
    gap, defect = lft_normality_defects(quad)
    return {
        "modulus_gap": gap,
        "commute_defect": defect,
        "normal": bool(gap <= 1e-9 and defect <= 1e-9),
    }


def suite_prop22_commutation(cfg: SuiteConfig) -> VerificationReport:
    """Weight K_{sigma(0)}: matrix normality iff the commuting condition."""
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        kind = i % 4
        if kind == 0:  # generic self-map, generically non-normal
            while True:
                m = MobiusMap(0.4 + 0.3 * _disk(rng), _disk(rng, 0.35), _disk(rng, 0.35), 1.0)
                if is_self_map(m) and sup_modulus(m) <= 0.9:
                    break
        elif kind == 1:  # automorphism: commuting holds, normal
            g = _disk(rng, 0.5, 0.05)
            form = fam.DiskForm(_angle(rng), g)
            m = form.to_map()
        elif kind == 2:  # real coefficients with b = -c: sigma = m
            a0 = rng.uniform(-0.5, 0.5)
            a1 = rng.uniform(-0.55, 0.55)
            phi = fam.j_symbols(fam.JParams(a0, a1)).phi
            if isinstance(phi, ConstantMap):
                continue
            m = phi
        else:  # strict parabolic from the branch arc
            theta = rng.uniform(math.pi + 0.3, 1.5 * math.pi - 0.35)
            a0 = 0.5j * (1.0 + cmath.exp(1j * theta))
            m = fam.parabolic_j_symbols(a0, +1).phi
        sigma0 = cowen_sigma0(m)
        psi = RationalSymbol(1.0, 0.0, 1.0, -np.conj(sigma0))
        lft = _lft_oracle((m.a, m.b, m.c, m.d))
        res = _matrix_normality(fam.SymbolPair(psi, m), cfg, dim=max(cfg.dim, 96))
        band = _band_verdict(res, cfg)
        rec = SampleRecord(
            params={"a": m.a, "b": m.b, "c": m.c, "d": m.d},
            residuals={"normality": res},
            predicates={"lft_condition": lft["normal"]},
            oracles={"normality_band": band, **lft},
        )
        rec.verdict = _agreement(bool(lft["normal"]), band)
        records.append(rec)
    return VerificationReport("prop22-commutation", cfg, records)


def cowen_sigma0(m: MobiusMap) -> complex:
    return -np.conj(m.c) / np.conj(m.d)


def suite_conjugation_axioms(cfg: SuiteConfig) -> VerificationReport:
    """Involution and anti-linear isometry axioms for the three kinds.

    The coefficient conjugation and the rotation-weighted kind are exact
    at any dimension; the kernel-weighted kind converges geometrically in
    |alpha|, which at N = 48 and block 16 keeps the residual below 1e-8
    for |alpha| up to roughly 0.35 (measured), so draws stay below 0.32.
    """
    rng = np.random.default_rng(cfg.seed)
    dim = max(cfg.dim, 48)
    block = max(cfg.block, 16)
    records = []
    j = conjugation_matrix(Conjugation("J"), dim)
    inv, iso = involution_residual(j, block)
    records.append(
        SampleRecord(
            params={"kind": "J"},
            residuals={"involution": inv, "isometry": iso},
            verdict="pass" if max(inv, iso) <= 1e-14 else "fail",
        )
    )
    per_kind = max(1, (cfg.samples - 1) // 2)
    for _ in range(per_kind):
        c = Conjugation("C1", _angle(rng), _angle(rng))
        inv, iso = involution_residual(conjugation_matrix(c, dim), block)
        records.append(
            SampleRecord(
                params={"kind": "C1", "lam": c.lam, "alpha": c.alpha},
                residuals={"involution": inv, "isometry": iso},
                verdict="pass" if max(inv, iso) <= 1e-14 else "fail",
            )
        )
    for _ in range(per_kind):
        alpha = _disk(rng, 0.32, 0.05)
        c = Conjugation("C2", _angle(rng), alpha)
        inv, iso = involution_residual(conjugation_matrix(c, dim), block)
        records.append(
            SampleRecord(
                params={"kind": "C2", "lam": c.lam, "alpha": c.alpha},
                residuals={"involution": inv, "isometry": iso},
                verdict="pass" if max(inv, iso) <= 1e-8 else "fail",
            )
        )
    return VerificationReport("conjugation-axioms", cfg, records)


def _symmetry_suite(suite_id, cfg, draw, conjugation_of, perturb):
    """Shared shape of the three symmetric-form suites: in-family draws
    must pass, perturbed controls must fail."""
    rng = np.random.default_rng(cfg.seed)
    records = []
    n_controls = max(1, cfg.samples // 5)
    for i in range(cfg.samples):
        params, pair = draw(rng)
        u = conjugation_matrix(conjugation_of(params), cfg.dim)
        t = build_wco(pair.psi, pair.phi, cfg.dim)
        res = symmetry_residual(t, u, cfg.block)
        band = _band_verdict(res, cfg)
        rec = SampleRecord(
            params=params,
            residuals={"symmetry": res},
            predicates={"in_family": True},
            oracles={"symmetry_band": band},
            verdict=_agreement(True, band),
        )
        records.append(rec)
    for i in range(n_controls):
        params, pair = draw(rng)
        u = conjugation_matrix(conjugation_of(params), cfg.dim)
        bad = perturb(pair)
        t = build_wco(bad.psi, bad.phi, cfg.dim)
        res = symmetry_residual(t, u, cfg.block)
        band = _band_verdict(res, cfg)
        rec = SampleRecord(
            params={**params, "perturbed": True},
            residuals={"symmetry": res},
            predicates={"in_family": False},
            oracles={"symmetry_band": band},
            verdict=_agreement(False, band),
        )
        records.append(rec)
    return VerificationReport(suite_id, cfg, records)


def _perturb_weight(pair: fam.SymbolPair) -> fam.SymbolPair:
    psi = pair.psi
    bump = 0.3 * max(1.0, abs(psi.n0))
    return fam.SymbolPair(RationalSymbol(psi.n0, psi.n1 + bump, psi.d0, psi.d1), pair.phi)


def suite_jsym_form(cfg: SuiteConfig) -> VerificationReport:
    def draw(rng):
        while True:
            a0 = _disk(rng, 0.7)
            a1 = _disk(rng, 0.75, 0.02)
            b = 0.5 + rng.uniform(0.0, 1.0)
            pair = fam.j_symbols(fam.JParams(a0, a1, b))
            if isinstance(pair.phi, ConstantMap) or is_self_map(pair.phi):
                return {"a0": a0, "a1": a1, "b": b}, pair

    return _symmetry_suite("jsym-form", cfg, draw, lambda p: Conjugation("J"), _perturb_weight)


def suite_c1sym_form(cfg: SuiteConfig) -> VerificationReport:
    def draw(rng):
        while True:
            alpha = _angle(rng)
            c0 = _disk(rng, 0.7)
            c1 = _disk(rng, 0.75, 0.02)
            d = 0.5 + rng.uniform(0.0, 1.0)
            pair = fam.c1_symbols(fam.C1Params(alpha, c0, c1, d))
            if isinstance(pair.phi, ConstantMap) or is_self_map(pair.phi):
                return {"alpha": alpha, "c0": c0, "c1": c1, "d": d}, pair

    return _symmetry_suite(
        "c1sym-form", cfg, draw, lambda p: Conjugation("C1", 1.0, p["alpha"]), _perturb_weight
    )


def _draw_c2_selfmap(rng, alpha_hi=0.5):
    """C2 parameters whose composition symbol is a strict self-map and
    whose weight pole stays well outside the closed disk."""
    while True:
        alpha = _disk(rng, alpha_hi, 0.1)
        t = _disk(rng, 0.3)
        u = _disk(rng, 0.3)
        v = 1.0 + 0.0j
        c1 = (u - np.conj(alpha) * v) / (abs(alpha) ** 2 - 1.0)
        c2 = c1 - t
        c0_sq = v + alpha * c1
        if abs(c0_sq - alpha * c1) < 0.2:
            continue
        params = fam.C2Params.from_c0_squared(alpha, c0_sq, c1, c2)
        try:
            pair = fam.c2_symbols(params)
        except Exception:
            continue
        if isinstance(pair.phi, ConstantMap):
            continue
        if sup_modulus(pair.phi) > 0.9:
            continue
        if abs(pair.psi.pole()) < 1.8:
            continue
        return params, pair


def suite_c2sym_form(cfg: SuiteConfig) -> VerificationReport:
    def draw(rng):
        params, pair = _draw_c2_selfmap(rng)
        d = {"alpha": params.alpha, "c0": params.c0, "c1": params.c1, "c2": params.c2}
        return d, pair

    return _symmetry_suite(
        "c2sym-form", cfg, draw, lambda p: Conjugation("C2", 1.0, p["alpha"]), _perturb_weight
    )


# --- automorphism lemmas -----------------------------------------------------

def suite_lemma31_aut(cfg: SuiteConfig) -> VerificationReport:
    """Forward-built rotation-free automorphisms are recovered with
    gamma = (a1 + 1)/a0; random non-automorphisms come back empty."""
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        if i % 2 == 0:
            g = _disk(rng, 0.8, 0.05)
            a0 = np.conj(g)
            a1 = np.conj(g) * (abs(g) ** 2 - 1.0) / g
            form = fam.j_aut_form(a0, a1)
            ok = (
                isinstance(form, fam.DiskForm)
                and abs(form.gamma - g) <= 1e-9
                and mobius_equal(form.to_map(), fam.j_symbols(fam.JParams(a0, a1)).phi, 1e-10)
            )
            rec = SampleRecord(
                params={"a0": a0, "a1": a1, "gamma": g},
                predicates={"expected": "disk"},
                oracles={"form": type(form).__name__},
                verdict="pass" if ok else "fail",
            )
        else:
            a0 = _disk(rng, 0.6, 0.05)
            a1 = _disk(rng, 0.6)
            phi = fam.j_symbols(fam.JParams(a0, a1)).phi
            if isinstance(phi, ConstantMap) or aut_normal_form(phi) is not None:
                continue
            form = fam.j_aut_form(a0, a1)
            rec = SampleRecord(
                params={"a0": a0, "a1": a1},
                predicates={"expected": "none"},
                oracles={"form": type(form).__name__},
                verdict="pass" if form is None else "fail",
            )
        records.append(rec)
    return VerificationReport("lemma31-aut", cfg, records)


def suite_lemma32_aut(cfg: SuiteConfig) -> VerificationReport:
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        alpha = _angle(rng)
        if i % 2 == 0:
            g = _disk(rng, 0.8, 0.05)
            c0 = np.conj(g) / alpha
            c1 = (abs(g) ** 2 - 1.0) * np.conj(g) / (g * alpha)
            form = fam.c1_aut_form(alpha, c0, c1)
            ok = (
                isinstance(form, fam.DiskForm)
                and abs(form.gamma - g) <= 1e-9
                and abs(form.beta - np.conj(g) / (g * alpha)) <= 1e-9
            )
            rec = SampleRecord(
                params={"alpha": alpha, "c0": c0, "c1": c1, "gamma": g},
                predicates={"expected": "disk"},
                oracles={"form": type(form).__name__},
                verdict="pass" if ok else "fail",
            )
        else:
            c0 = _disk(rng, 0.6, 0.05)
            c1 = _disk(rng, 0.6)
            pair = fam.c1_symbols(fam.C1Params(alpha, c0, c1))
            if isinstance(pair.phi, ConstantMap) or aut_normal_form(pair.phi) is not None:
                continue
            form = fam.c1_aut_form(alpha, c0, c1)
            rec = SampleRecord(
                params={"alpha": alpha, "c0": c0, "c1": c1},
                predicates={"expected": "none"},
                oracles={"form": type(form).__name__},
                verdict="pass" if form is None else "fail",
            )
        records.append(rec)
    return VerificationReport("lemma32-aut", cfg, records)


def _c2_params_from_aut(alpha: complex, beta: complex, gamma: complex, c1: complex) -> fam.C2Params:
    """Invert the disk form: the stated c0^2 and c2 relations with c1 free."""
    denom = beta * gamma - alpha
    c0_sq = (abs(alpha) ** 2 * beta * gamma - alpha) / (np.conj(alpha) * denom) * c1
    c2 = (1.0 - (alpha * np.conj(gamma) / np.conj(alpha)) * (abs(alpha) ** 2 - 1.0) / denom) * c1
    return fam.C2Params.from_c0_squared(alpha, c0_sq, c1, c2)


def suite_lemma33_aut(cfg: SuiteConfig) -> VerificationReport:
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        if i % 3 == 2:  # identity case
            alpha = _disk(rng, 0.8, 0.1)
            c1 = _disk(rng, 0.8, 0.1)
            params = fam.C2Params.from_c0_squared(alpha, c1 / np.conj(alpha), c1, c1)
            form = fam.c2_aut_form(params)
            phi = fam.c2_symbols(params, check_self_map=False).phi
            ok = isinstance(form, fam.IdentityForm) and mobius_equal(phi, IDENTITY, 1e-9)
            rec = SampleRecord(
                params={"alpha": alpha, "c1": c1},
                predicates={"expected": "identity"},
                oracles={"form": type(form).__name__},
                verdict="pass" if ok else "fail",
            )
        else:
            alpha = _disk(rng, 0.8, 0.1)
            g = _disk(rng, 0.8, 0.05)
            beta = (abs(alpha) ** 2 - alpha * np.conj(g)) / (np.conj(alpha) * g - abs(alpha) ** 2)
            if abs(beta * g - alpha) < 0.05:
                continue
            params = _c2_params_from_aut(alpha, beta, g, 1.0 + 0.0j)
            form = fam.c2_aut_form(params)
            ok = (
                isinstance(form, fam.DiskForm)
                and abs(form.gamma - g) <= 1e-8
                and abs(form.beta - beta) <= 1e-8
            )
            rec = SampleRecord(
                params={"alpha": alpha, "gamma": g, "beta": beta},
                predicates={"expected": "disk"},
                oracles={"form": type(form).__name__},
                verdict="pass" if ok else "fail",
            )
        records.append(rec)
    return VerificationReport("lemma33-aut", cfg, records)


# --- normality iff suites ----------------------------------------------------

def _draw_j_predicate_true(rng):
    while True:
        a0 = _disk(rng, 0.52, 0.05)
        x = rng.uniform(-0.6, 0.6)
        y = -a0.imag * (1.0 - abs(a0) ** 2) / abs(a0) ** 2
        a1 = (x + 1j * y) * a0
        if abs(a1) > 0.7:
            continue
        phi = fam.j_symbols(fam.JParams(a0, a1)).phi
        if isinstance(phi, ConstantMap) or not is_self_map(phi):
            continue
        return a0, a1


def _draw_j_predicate_false(rng):
    while True:
        a0 = _disk(rng, 0.52, 0.05)
        a1 = _disk(rng, 0.7, 0.02)
        if abs(fam.j_normal_expression(a0, a1)) < 1e-3:
            continue
        phi = fam.j_symbols(fam.JParams(a0, a1)).phi
        if isinstance(phi, ConstantMap) or not is_self_map(phi):
            continue
        return a0, a1


def _oracle_consistency_j(cfg: SuiteConfig) -> VerificationReport:
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        if i % 2 == 0:
            a0, a1 = _draw_j_predicate_true(rng)
        else:
            a0, a1 = _draw_j_predicate_false(rng)
        pred = fam.j_normal_predicate(a0, a1, cfg.pred_tol)
        pair = fam.j_symbols(fam.JParams(a0, a1))
        res = _matrix_normality(pair, cfg)
        band = _band_verdict(res, cfg)
        rec = SampleRecord(
            params={"a0": a0, "a1": a1},
            residuals={"normality": res},
            predicates={"normal": pred, "expression": fam.j_normal_expression(a0, a1)},
            oracles={"normality_band": band},
            verdict=_agreement(pred, band),
        )
        records.append(rec)
    return VerificationReport("prop41-iff", cfg, records)


def _solve_c1_predicate(rng, alpha, c0):
    """Solve the real-linear condition for c1 (minimum-norm when the
    system is rank-deficient)."""
    k = -(np.conj(c0) - alpha * c0) * (1.0 - abs(c0) ** 2)
    # alpha c0 conj(c1) - conj(c0) c1 = k as a 2x2 real system in (Re, Im) c1
    p = alpha * c0
    q = np.conj(c0)
    mat = np.array(
        [
            [p.real - q.real, p.imag + q.imag],
            [p.imag - q.imag, -(p.real + q.real)],
        ]
    )
    rhs = np.array([k.real, k.imag])
    sol, *_ = np.linalg.lstsq(mat, rhs, rcond=None)
    base = complex(sol[0], sol[1])
    # rank-deficient direction: add a multiple of the kernel to vary draws
    u, s, vt = np.linalg.svd(mat)
    if s[-1] < 1e-10:
        kern = complex(vt[-1, 0], vt[-1, 1])
        base = base + rng.uniform(-0.4, 0.4) * kern
    return base


def _draw_c1_predicate_true(rng):
    while True:
        alpha = _angle(rng)
        c0 = _disk(rng, 0.52, 0.05)
        c1 = _solve_c1_predicate(rng, alpha, c0)
        if abs(c1) > 0.7 or abs(c1) < 1e-3:
            continue
        if abs(fam.c1_normal_expression(alpha, c0, c1)) > 1e-12:
            continue
        pair = fam.c1_symbols(fam.C1Params(alpha, c0, c1))
        if isinstance(pair.phi, ConstantMap) or not is_self_map(pair.phi):
            continue
        return alpha, c0, c1


def _draw_c1_predicate_false(rng):
    while True:
        alpha = _angle(rng)
        c0 = _disk(rng, 0.52, 0.05)
        c1 = _disk(rng, 0.7, 0.02)
        if abs(fam.c1_normal_expression(alpha, c0, c1)) < 1e-3:
            continue
        pair = fam.c1_symbols(fam.C1Params(alpha, c0, c1))
        if isinstance(pair.phi, ConstantMap) or not is_self_map(pair.phi):
            continue
        return alpha, c0, c1


def _oracle_consistency_c1(cfg: SuiteConfig) -> VerificationReport:
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        if i % 2 == 0:
            alpha, c0, c1 = _draw_c1_predicate_true(rng)
        else:
            alpha, c0, c1 = _draw_c1_predicate_false(rng)
        pred = fam.c1_normal_predicate(alpha, c0, c1, cfg.pred_tol)
        pair = fam.c1_symbols(fam.C1Params(alpha, c0, c1))
        res = _matrix_normality(pair, cfg)
        band = _band_verdict(res, cfg)
        rec = SampleRecord(
            params={"alpha": alpha, "c0": c0, "c1": c1},
            residuals={"normality": res},
            predicates={"normal": pred, "expression": fam.c1_normal_expression(alpha, c0, c1)},
            oracles={"normality_band": band},
            verdict=_agreement(pred, band),
        )
        records.append(rec)
    return VerificationReport("thm51-iff", cfg, records)


def _c2_params_from_tuv(alpha, t, u, v) -> fam.C2Params:
    c1 = (u - np.conj(alpha) * v) / (abs(alpha) ** 2 - 1.0)
    c2 = c1 - t
    return fam.C2Params.from_c0_squared(alpha, v + alpha * c1, c1, c2)


def _oracle_consistency_c2(cfg: SuiteConfig) -> VerificationReport:
    """Stated case conditions versus the coefficient-level oracle.

    Parameter sets satisfying the case conditions force |phi(0)| = 1, so
    no nonconstant self-map exists there and the oracle is the
    coefficient-level commuting check; the identity-case draws (predicate
    rejects, operator is the identity) are the documented discrepancy.
    """
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        kind = i % 5
        note = ""
        use_matrix = False
        if kind == 0:  # case I construction
            while True:
                alpha = _disk(rng, 0.6, 0.2)
                m = rng.uniform(0.2, 0.5)
                t = m * _angle(rng)
                u = m * _angle(rng)
                v = m * _angle(rng)
                w = t + u - np.conj(alpha) * v
                if abs(abs(w) / abs(alpha) - m) > 1e-2:
                    break
            params = _c2_params_from_tuv(alpha, t, u, v)
        elif kind == 1:  # case II construction, all-real sign pattern
            alpha = complex(rng.uniform(0.2, 0.8))
            m = rng.uniform(0.1, 0.4)
            sign = 1 if rng.random() < 0.5 else -1
            t, u, v = sign * m, -sign * m, -sign * m
            params = _c2_params_from_tuv(alpha, complex(t), complex(u), complex(v))
        elif kind == 2:  # identity case: documented discrepancy
            alpha = _disk(rng, 0.7, 0.2)
            c1 = _disk(rng, 0.5, 0.1)
            params = fam.C2Params.from_c0_squared(alpha, c1 / np.conj(alpha), c1, c1)
            note = "identity-case parameters: stated conditions reject the identity operator"
            use_matrix = True
        elif kind == 3:  # generic draw with a usable self-map
            params, _ = _draw_c2_selfmap(rng)
            use_matrix = True
        else:  # interior-normal reconstruction: normal but rejected
            p = rng.uniform(0.2, 0.6) * (1 if rng.random() < 0.5 else -1)
            angle = rng.uniform(0.45 * math.pi, 0.8 * math.pi)
            alpha = fam.c2_compatible_alpha(p, angle)
            delta = _disk(rng, 0.6)
            params = fam.c2_interior_reconstruct(alpha, p, delta)
            note = "interior-normal reconstruction: normal operator outside the stated conditions"
            use_matrix = True
        pred = fam.c2_normal_predicate(params, cfg.pred_tol)
        claims_normal = pred in (fam.C2NormalCase.CASE_I, fam.C2NormalCase.CASE_II)
        # raw coefficient quadruple of phi: valid even when it degenerates
        # to a boundary constant, where no operator truncation exists
        t, u, v, w = fam.c2_quadruple(params)
        al = params.alpha
        quad = (-w, al * u, -np.conj(al) * t, np.conj(al) * v)
        lft = _lft_oracle(quad)
        oracles: Dict[str, object] = dict(lft)
        band = "pass" if lft["normal"] else "fail"
        residuals = {}
        if use_matrix:
            pair = fam.c2_symbols(params, check_self_map=False)
            if (
                not isinstance(pair.phi, ConstantMap)
                and is_self_map(pair.phi)
                and abs(pair.psi.pole()) > 1.5
            ):
                res = _matrix_normality(pair, cfg, dim=max(cfg.dim, 96))
                residuals["normality"] = res
                band = _band_verdict(res, cfg)
        rec = SampleRecord(
            params={
                "alpha": params.alpha,
                "c0": params.c0,
                "c1": params.c1,
                "c2": params.c2,
            },
            residuals=residuals,
            predicates={"case": pred.value, "claims_normal": claims_normal},
            oracles=oracles,
            verdict=_agreement(claims_normal, band),
            note=note,
        )
        records.append(rec)
    known = any(r.verdict == "discrepancy" and r.note for r in records)
    return VerificationReport("thm61-consistency", cfg, records, known_discrepancy=known)


def oracle_consistency(family: str, cfg: SuiteConfig) -> VerificationReport:
    """Predicate-versus-oracle agreement for the three normality statements."""
    key = family.strip().lower()
    if key in ("j", "prop41"):
        return _oracle_consistency_j(cfg)
    if key in ("c1", "thm51"):
        return _oracle_consistency_c1(cfg)
    if key in ("c2", "thm61"):
        return _oracle_consistency_c2(cfg)
    raise UnknownSuiteError(f"unknown oracle-consistency family {family!r}")


# --- worked-example suites ---------------------------------------------------

def suite_ex41_equivalence(cfg: SuiteConfig) -> VerificationReport:
    """Real interior parameter: the interior-normal symbols coincide with
    the coefficient-conjugation family; off the real axis the symmetry
    residual is bounded away from zero."""
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        if i % 4 != 3:
            p = rng.uniform(0.12, 0.62) * (1 if rng.random() < 0.5 else -1)
            delta = _disk(rng, 0.7)
            a0 = p * (1.0 - delta) / (1.0 - p ** 2 * delta)
            a1 = delta * (p ** 2 - 1.0) ** 2 / (1.0 - p ** 2 * delta) ** 2
            if abs(a0) >= 0.9 or abs(a1) >= 0.9:
                continue
            gamma = (1.0 - p ** 2 * delta) / (1.0 - p ** 2)  # makes psi(0) = 1
            pair = fam.normal_interior_symbols(fam.InteriorParams(p, delta, gamma))
            jpair = fam.j_symbols(fam.JParams(a0, a1, 1.0))
            phi_gap = proj_distance(pair.phi, jpair.phi)
            psi_gap = _rational_gap(pair.psi, jpair.psi)
            ok = phi_gap <= 1e-10 and psi_gap <= 1e-10
            rec = SampleRecord(
                params={"p": p, "delta": delta, "a0": a0, "a1": a1},
                residuals={"phi_gap": phi_gap, "psi_gap": psi_gap},
                predicates={"real_p": True},
                verdict="pass" if ok else "fail",
            )
        else:
            p = _disk(rng, 0.5, 0.15)
            if abs(p.imag) < 0.1:
                sign = 1.0 if p.imag >= 0 else -1.0
                p = complex(p.real, sign * (0.1 + abs(p.imag)))
            delta = _disk(rng, 0.6)
            pair = fam.normal_interior_symbols(fam.InteriorParams(p, delta, 1.0))
            t = build_wco(pair.psi, pair.phi, cfg.dim)
            res = symmetry_residual(t, conjugation_matrix(Conjugation("J"), cfg.dim), cfg.block)
            rec = SampleRecord(
                params={"p": p, "delta": delta},
                residuals={"j_symmetry": res},
                predicates={"real_p": False},
                verdict="pass" if res >= cfg.fail_tol else "fail",
            )
        records.append(rec)
    return VerificationReport("ex41-equivalence", cfg, records)


def _rational_gap(r1: RationalSymbol, r2: RationalSymbol) -> float:
    """Projective distance between two degree-(1,1) rational functions."""
    v1 = np.array([r1.n0, r1.n1, r1.d0, r1.d1])
    v2 = np.array([r2.n0, r2.n1, r2.d0, r2.d1])
    minors = np.outer(v1, v2) - np.outer(v2, v1)
    return float(np.linalg.norm(minors) / (np.linalg.norm(v1) * np.linalg.norm(v2)))


def suite_cor41_aut(cfg: SuiteConfig) -> VerificationReport:
    """Disk-form automorphism parameters always satisfy the normality
    condition of the coefficient-conjugation family."""
    rng = np.random.default_rng(cfg.seed)
    records = []
    for _ in range(cfg.samples):
        al = _disk(rng, 0.5, 0.05)
        beta = np.conj(al) / al
        a0 = np.conj(al)
        a1 = beta * (abs(al) ** 2 - 1.0)
        expr = fam.j_normal_expression(a0, a1)
        pair = fam.j_symbols(fam.JParams(a0, a1))
        res = _matrix_normality(pair, cfg)
        cls = classify(pair.phi)
        ok = abs(expr) <= cfg.pred_tol and res <= cfg.pass_tol and cls.is_automorphism
        rec = SampleRecord(
            params={"alpha": al, "a0": a0, "a1": a1},
            residuals={"normality": res},
            predicates={"expression": expr, "map_class": cls.map_class.value},
            verdict="pass" if ok else "fail",
        )
        records.append(rec)
    return VerificationReport("cor41-aut", cfg, records)


def _parabolic_j_arc(rng, branch):
    theta = rng.uniform(math.pi + 0.3, 1.5 * math.pi - 0.35)
    a0 = 0.5j * (1.0 + cmath.exp(1j * theta))
    return a0 if branch == 1 else -a0


def suite_ex44_parabolic(cfg: SuiteConfig) -> VerificationReport:
    rng = np.random.default_rng(cfg.seed)
    dim = max(cfg.dim, 96)
    records = []
    for i in range(cfg.samples):
        branch = 1 if i % 2 == 0 else -1
        a0 = _parabolic_j_arc(rng, branch)
        pair = fam.parabolic_j_symbols(a0, branch)
        cls = classify(pair.phi)
        res = _matrix_normality(pair, cfg, dim=dim)
        dw_ok = (
            cls.map_class in (MapClass.PARABOLIC_NON_AUTOMORPHISM, MapClass.PARABOLIC_AUTOMORPHISM)
            and abs(cls.dw_point - branch) <= 1e-9
            and abs(cls.dw_derivative - 1.0) <= 1e-10
        )
        rec = SampleRecord(
            params={"a0": a0, "branch": branch},
            residuals={"normality": res},
            predicates={
                "map_class": cls.map_class.value,
                "expression": fam.j_normal_expression(a0, (1.0 - branch * a0) ** 2),
            },
            verdict="pass" if dw_ok and res <= cfg.pass_tol else "fail",
        )
        records.append(rec)
    return VerificationReport("ex44-parabolic", cfg, records)


def suite_ex51_interior(cfg: SuiteConfig) -> VerificationReport:
    """Rotation-weighted interior case: conj(p) = alpha p branch plus the
    delta = 0 constant-map branch."""
    rng = np.random.default_rng(cfg.seed)
    dim = max(cfg.dim, 96)
    records = []
    for i in range(cfg.samples):
        p = _disk(rng, 0.55, 0.1)
        alpha = np.conj(p) / p
        if i % 4 == 3:
            delta = 0.0 + 0.0j
        else:
            delta = _disk(rng, 0.65)
        gamma = (1.0 - abs(p) ** 2 * delta) / (1.0 - abs(p) ** 2)
        pair = fam.normal_interior_symbols(fam.InteriorParams(p, delta, gamma))
        if delta == 0:
            c0, c1 = p, 0.0 + 0.0j
        else:
            c0 = p * (1.0 - delta) / (1.0 - abs(p) ** 2 * delta)
            c1 = alpha * c0 ** 2 + alpha * c0 * (abs(p) ** 2 - delta) / (np.conj(p) * (delta - 1.0))
        if abs(c0) >= 0.9 or abs(c1) >= 0.9:
            continue
        cpair = fam.c1_symbols(fam.C1Params(alpha, c0, c1))
        phi_gap = proj_distance(pair.phi, cpair.phi)
        pred = fam.c1_normal_predicate(alpha, c0, c1, cfg.pred_tol)
        res = _matrix_normality(pair, cfg, dim=dim)
        u = conjugation_matrix(Conjugation("C1", 1.0, alpha), dim)
        sym = symmetry_residual(build_wco(pair.psi, pair.phi, dim), u, cfg.block)
        ok = phi_gap <= 1e-9 and pred and res <= cfg.pass_tol and sym <= cfg.pass_tol
        rec = SampleRecord(
            params={"p": p, "delta": delta, "alpha": alpha, "c0": c0, "c1": c1},
            residuals={"normality": res, "symmetry": sym, "phi_gap": phi_gap},
            predicates={"c1_normal": pred},
            verdict="pass" if ok else "fail",
        )
        records.append(rec)
    return VerificationReport("ex51-interior", cfg, records)


def suite_ex51_aut_corollary(cfg: SuiteConfig) -> VerificationReport:
    """delta = -1 is the only automorphism branch; the displayed map
    matches the composed construction."""
    rng = np.random.default_rng(cfg.seed)
    records = []
    for _ in range(cfg.samples):
        p = _disk(rng, 0.55, 0.1)
        ap2 = abs(p) ** 2  # alpha p^2 with alpha = conj(p)/p
        pair = fam.normal_interior_symbols(fam.InteriorParams(p, -1.0, 1.0))
        displayed = MobiusMap(-(1.0 + ap2), 2.0 * p, -2.0 * np.conj(p), 1.0 + ap2)
        gap = proj_distance(pair.phi, displayed)
        cls = classify(pair.phi)
        ok = gap <= 1e-10 and cls.is_automorphism
        rec = SampleRecord(
            params={"p": p},
            residuals={"phi_gap": gap},
            predicates={"map_class": cls.map_class.value},
            verdict="pass" if ok else "fail",
        )
        records.append(rec)
    return VerificationReport("ex51-aut-corollary", cfg, records)


def suite_ex54_parabolic(cfg: SuiteConfig) -> VerificationReport:
    rng = np.random.default_rng(cfg.seed)
    dim = max(cfg.dim, 96)
    records = []
    for _ in range(cfg.samples):
        zeta = _angle(rng)
        w = 0.5 + 0.33 * _disk(rng)
        c0 = zeta * w
        c1 = (1.0 - w) ** 2
        pair = fam.c1_parabolic_symbols(zeta, c0, c1)
        cls = classify(pair.phi)
        alpha = 1.0 / zeta ** 2
        expr = fam.c1_normal_expression(alpha, c0, c1)
        res = _matrix_normality(pair, cfg, dim=dim)
        ok = (
            cls.map_class in (MapClass.PARABOLIC_NON_AUTOMORPHISM, MapClass.PARABOLIC_AUTOMORPHISM)
            and abs(cls.dw_point - zeta) <= 1e-8
            and abs(cls.dw_derivative - 1.0) <= 1e-10
            and abs(expr) <= cfg.pred_tol
            and res <= cfg.pass_tol
        )
        rec = SampleRecord(
            params={"zeta": zeta, "c0": c0, "c1": c1},
            residuals={"normality": res},
            predicates={"map_class": cls.map_class.value, "expression": expr},
            verdict="pass" if ok else "fail",
        )
        records.append(rec)
    return VerificationReport("ex54-parabolic", cfg, records)


def suite_cor62_no_aut(cfg: SuiteConfig) -> VerificationReport:
    """Moduli-equality draws never come back as automorphisms, and forced
    automorphism parameters violate the moduli equalities."""
    rng = np.random.default_rng(cfg.seed)
    records = []
    for i in range(cfg.samples):
        if i % 2 == 0:
            alpha = _disk(rng, 0.7, 0.15)
            m = rng.uniform(0.2, 0.6)
            params = _c2_params_from_tuv(alpha, m * _angle(rng), m * _angle(rng), m * _angle(rng))
            form = fam.c2_aut_form(params)
            rec = SampleRecord(
                params={"alpha": alpha, "c0": params.c0, "c1": params.c1, "c2": params.c2},
                predicates={"moduli_equal": True},
                oracles={"form": type(form).__name__},
                verdict="pass" if form is None else "fail",
            )
        else:
            alpha = _disk(rng, 0.7, 0.15)
            g = _disk(rng, 0.8, 0.1)
            beta = (abs(alpha) ** 2 - alpha * np.conj(g)) / (np.conj(alpha) * g - abs(alpha) ** 2)
            if abs(beta * g - alpha) < 0.05:
                continue
            params = _c2_params_from_aut(alpha, beta, g, 1.0 + 0.0j)
            t, u, v, w = fam.c2_quadruple(params)
            violation = abs(abs(u) - abs(v)) / max(abs(u), abs(v))
            rec = SampleRecord(
                params={"alpha": alpha, "gamma": g},
                residuals={"moduli_violation": violation},
                predicates={"aut_constructed": True},
                verdict="pass" if violation >= cfg.fail_tol else "fail",
            )
        records.append(rec)
    return VerificationReport("cor62-no-aut", cfg, records)


def suite_ex61_interior(cfg: SuiteConfig) -> VerificationReport:
    """Interior reconstruction through the I-ratios under the gauge
    c1 - c2 = 1, on the compatibility locus of the conjugation parameter."""
    rng = np.random.default_rng(cfg.seed)
    dim = max(cfg.dim, 96)
    records = []
    for _ in range(cfg.samples):
        p = rng.uniform(0.15, 0.6) * (1 if rng.random() < 0.5 else -1)
        angle = rng.uniform(0.45 * math.pi, 0.8 * math.pi)
        alpha = fam.c2_compatible_alpha(p, angle)
        delta = _disk(rng, 0.6)
        params = fam.c2_interior_reconstruct(alpha, p, delta)
        t, u, v, w = fam.c2_quadruple(params)
        consistency = abs(u - np.conj(alpha) / alpha)  # gauge c1 - c2 = 1
        pair = fam.c2_symbols(params)
        gamma = (1.0 - p ** 2 * delta) / (1.0 - p ** 2)
        closed = fam.interior_phi_closed_form(fam.InteriorParams(complex(p), delta, gamma))
        phi_gap = proj_distance(pair.phi, closed)
        res = _matrix_normality(pair, cfg, dim=dim)
        un = conjugation_matrix(Conjugation("C2", 1.0, alpha), dim)
        sym = symmetry_residual(build_wco(pair.psi, pair.phi, dim), un, cfg.block)
        ok = consistency <= 1e-9 and phi_gap <= 1e-9 and res <= cfg.pass_tol and sym <= cfg.pass_tol
        rec = SampleRecord(
            params={"p": p, "delta": delta, "alpha": alpha},
            residuals={
                "normality": res,
                "symmetry": sym,
                "phi_gap": phi_gap,
                "consistency": consistency,
            },
            verdict="pass" if ok else "fail",
        )
        records.append(rec)
    return VerificationReport("ex61-interior", cfg, records)


def suite_ex63_parabolic(cfg: SuiteConfig) -> VerificationReport:
    """Construct-then-check round trip for the kernel-weighted parabolic
    discriminant."""
    rng = np.random.default_rng(cfg.seed)
    dim = max(cfg.dim, 96)
    records = []
    for i in range(cfg.samples):
        sgn = 1.0 if i % 2 == 0 else -1.0
        while True:
            # the double fixed point always lands on the circle, but only
            # about half the draws give self-maps; reject the rest
            alpha = _disk(rng, 0.6, 0.25)
            amod = abs(alpha)
            rho = (2.0 * amod ** 2 - 1.0) + 2.0j * sgn * amod * math.sqrt(1.0 - amod ** 2)
            c1 = _angle(rng) * rng.uniform(0.8, 1.2)
            t = 0.05 * _disk(rng, 1.0, 0.3)
            c2 = c1 - t
            c0_sq = (c1 + rho * t) / np.conj(alpha)
            params = fam.C2Params.from_c0_squared(alpha, c0_sq, c1, c2)
            try:
                pair = fam.c2_symbols(params)
            except fam.NotSelfMapError:
                continue
            break
        pred = fam.c2_parabolic_predicate(params, cfg.pred_tol)
        zeta = fam.c2_parabolic_dw_point(params)
        cls = classify(pair.phi)
        res = _matrix_normality(pair, cfg, dim=dim)
        ok = (
            pred
            and abs(abs(zeta) - 1.0) <= 1e-9
            and cls.map_class
            in (MapClass.PARABOLIC_NON_AUTOMORPHISM, MapClass.PARABOLIC_AUTOMORPHISM)
            and abs(cls.dw_point - zeta) <= 1e-8
            and res <= cfg.pass_tol
        )
        rec = SampleRecord(
            params={"alpha": alpha, "c0": params.c0, "c1": c1, "c2": c2},
            residuals={"normality": res},
            predicates={"parabolic": pred, "zeta": zeta, "map_class": cls.map_class.value},
            verdict="pass" if ok else "fail",
        )
        records.append(rec)
    return VerificationReport("ex63-parabolic", cfg, records)


def suite_cowen_factorization(cfg: SuiteConfig) -> VerificationReport:
    """Adjoint factorization residual; the flipped sigma sign must fail."""
    rng = np.random.default_rng(cfg.seed)
    dim = max(cfg.dim, 64)
    block = max(cfg.block, 16)
    records = []
    for _ in range(cfg.samples):
        while True:
            m = MobiusMap(0.4 + 0.3 * _disk(rng), _disk(rng, 0.3), _disk(rng, 0.3), 1.0)
            if is_self_map(m) and sup_modulus(m) <= 0.9 and abs(m.c) > 0.02:
                break
        good = adjoint_factorization_residual(m, dim, block, sigma_sign=-1)
        bad = adjoint_factorization_residual(m, dim, block, sigma_sign=+1)
        rec = SampleRecord(
            params={"a": m.a, "b": m.b, "c": m.c, "d": m.d},
            residuals={"factorization": good, "flipped_sign": bad},
            verdict="pass" if good <= 1e-8 else "fail",
        )
        records.append(rec)
    return VerificationReport("cowen-factorization", cfg, records)


# ---------------------------------------------------------------------------
# nonexistence sweeps
# ---------------------------------------------------------------------------

SWEEP_R_GRID = (1.2, 1.5, 2.0, 3.0)
SWEEP_T_AUT = (0.0 + 0.0j, 0.6j, 1.2j)
SWEEP_T_NONAUT = (0.3 + 0.0j, 0.8 + 0.0j, 0.4 + 0.5j)


def _target_quadruples(include_aut=True, include_nonaut=True):
    targets = []
    for r in SWEEP_R_GRID:
        if include_aut:
            targets += [(r, t) for t in SWEEP_T_AUT]
        if include_nonaut:
            targets += [(r, t) for t in SWEEP_T_NONAUT]
    return targets


def _quad_distance_vec(va, vb, vc, vd, target: MobiusMap):
    """Vectorized projective distance from quadruple arrays to a target."""
    w = target.quadruple()
    comps = [va, vb, vc, vd]
    norm_v = np.sqrt(sum(np.abs(x) ** 2 for x in comps))
    norm_w = np.linalg.norm(w)
    total = np.zeros_like(norm_v)
    for i in range(4):
        for jdx in range(i + 1, 4):
            total += np.abs(comps[i] * w[jdx] - comps[jdx] * w[i]) ** 2
    # the six minors appear twice in the full outer-product norm
    return np.sqrt(2.0 * total) / (norm_v * norm_w)


def _polar_grid(radii, angles, r_lo=0.03, r_hi=0.92):
    rr = np.linspace(r_lo, r_hi, radii)
    aa = np.linspace(0.0, 2.0 * math.pi, angles, endpoint=False)
    g = (rr[:, None] * np.exp(1j * aa)[None, :]).ravel()
    return g


def _local_grid(center, spread, pts=7, clip=0.97):
    re = np.linspace(center.real - spread, center.real + spread, pts)
    im = np.linspace(center.imag - spread, center.imag + spread, pts)
    g = (re[:, None] + 1j * im[None, :]).ravel()
    mags = np.abs(g)
    g = np.where(mags > clip, g / mags * clip, g)
    return g


def _sweep_j_family(target: MobiusMap):
    """min over (a0, a1) of max(map distance, normality defect)."""

    def deficiency(a0, a1):
        va = a1 - a0 ** 2
        dist = _quad_distance_vec(va, a0, -a0, np.ones_like(a0), target)
        expr = np.abs(
            a0.imag * (1.0 - np.abs(a0) ** 2) + (np.conj(a0) * a1).imag
        )
        return np.maximum(dist, expr)

    grid = _polar_grid(10, 16)
    a0g, a1g = np.meshgrid(grid, grid, indexing="ij")
    a0g, a1g = a0g.ravel(), a1g.ravel()
    best = None
    for _ in range(4):
        d = deficiency(a0g, a1g)
        i = int(np.argmin(d))
        best = (float(d[i]), complex(a0g[i]), complex(a1g[i]))
        spread = max(1e-4, 0.25 * best[0] + 0.02)
        g0 = _local_grid(best[1], spread)
        g1 = _local_grid(best[2], spread)
        a0g, a1g = np.meshgrid(g0, g1, indexing="ij")
        a0g, a1g = a0g.ravel(), a1g.ravel()
    return best


def _sweep_c1_family(target: MobiusMap):
    """min over (alpha, c0, c1) of max(map distance, normality defect).

    The coarse stage is seeded with the analytic candidate derived from
    the target's disk normal form, so a realizable target is found with
    certainty instead of by luck.
    """

    def deficiency(alpha, c0, c1):
        va = c1 - alpha * c0 ** 2
        dist = _quad_distance_vec(va, c0, -alpha * c0, np.ones_like(c0), target)
        expr = np.abs(
            (np.conj(c0) - alpha * c0) * (1.0 - np.abs(c0) ** 2)
            + alpha * c0 * np.conj(c1)
            - np.conj(c0) * c1
        )
        return np.maximum(dist, expr)

    cands = []
    form = aut_normal_form(target)
    if form is not None and not form.rotation and abs(form.gamma) > 1e-9:
        g, beta = form.gamma, form.beta
        alpha = np.conj(g) / (g * beta)
        cands.append((alpha / abs(alpha), np.conj(g) / alpha, (abs(g) ** 2 - 1) * np.conj(g) / (g * alpha)))
    angle_grid = np.exp(1j * np.linspace(0.0, 2 * math.pi, 12, endpoint=False))
    cgrid = _polar_grid(7, 10)
    best = None
    for al in angle_grid:
        c0g, c1g = np.meshgrid(cgrid, cgrid, indexing="ij")
        d = deficiency(al, c0g.ravel(), c1g.ravel())
        i = int(np.argmin(d))
        cand = (float(d[i]), complex(al), complex(c0g.ravel()[i]), complex(c1g.ravel()[i]))
        if best is None or cand[0] < best[0]:
            best = cand
    for alpha, c0, c1 in cands:
        d = float(deficiency(np.array([alpha]), np.array([c0]), np.array([c1]))[0])
        if d < best[0]:
            best = (d, alpha, c0, c1)
    for _ in range(4):
        _, alpha, c0, c1 = best
        spread = max(1e-5, 0.2 * best[0] + 0.005)
        angs = np.angle(alpha) + np.linspace(-spread, spread, 5)
        for ang in angs:
            al = cmath.exp(1j * float(ang))
            g0 = _local_grid(c0, spread)
            g1 = _local_grid(c1, spread)
            c0g, c1g = np.meshgrid(g0, g1, indexing="ij")
            d = deficiency(al, c0g.ravel(), c1g.ravel())
            i = int(np.argmin(d))
            cand = (float(d[i]), al, complex(c0g.ravel()[i]), complex(c1g.ravel()[i]))
            if cand[0] < best[0]:
                best = cand
    return best


def _sweep_c2_family(target: MobiusMap):
    """The kernel-weighted family pins (T, U, V) to the target, so the
    stated moduli equalities are violated by exactly the spread of the
    target's own coefficient moduli; minimize the match defect over alpha."""
    a, b, c, d = target.a, target.b, target.c, target.d
    spread = 1.0 - min(abs(b), abs(c), abs(d)) / max(abs(b), abs(c), abs(d))
    grid = _polar_grid(16, 24, r_lo=0.05, r_hi=0.95)
    match = np.abs(np.abs(grid) ** 2 * (1.0 - a) + c * grid - b * np.conj(grid))
    i = int(np.argmin(match))
    # alpha only controls the match defect; the moduli violation is
    # alpha-free, so the deficiency is bounded below by the spread
    return max(min(float(match[i]), 1.0), spread), complex(grid[i])


def nonexistence_sweep(family: str, cfg: SuiteConfig) -> VerificationReport:
    """Grid-plus-refinement nonexistence checks for hyperbolic symbols.

    Establishes nonexistence at sweep resolution only; each record keeps
    the witness parameters of the minimizer so a violated claim is
    surfaced with an explicit counterexample instead of a bare failure.
    """
    key = family.strip().lower()
    records = []
    known = False
    if key == "hyperbolic-nonaut":
        for r, t in _target_quadruples(include_aut=False):
            phi = fam.hyperbolic_aut_map(fam.HyperbolicParams(r, t))
            psi = RationalSymbol(1.0, 0.0, 1.0, -np.conj(cowen_sigma0(phi)))
            res = normality_residual(build_wco(psi, phi, cfg.dim), cfg.block)
            records.append(
                SampleRecord(
                    params={"r": r, "t": t},
                    residuals={"deficiency": res, "normality": res},
                    verdict="pass" if res >= cfg.fail_tol else "discrepancy",
                )
            )
        return VerificationReport("sweep-hyperbolic-nonaut", cfg, records)
    if key not in ("j-hyperbolic", "c1-hyperbolic", "c2-hyperbolic"):
        raise UnknownSuiteError(f"unknown sweep family {family!r}")
    for r, t in _target_quadruples():
        target = fam.hyperbolic_aut_map(fam.HyperbolicParams(r, t))
        witness: Dict[str, object] = {"r": r, "t": t}
        if key == "j-hyperbolic":
            deficiency, a0, a1 = _sweep_j_family(target)
            witness.update({"a0": a0, "a1": a1})
        elif key == "c1-hyperbolic":
            deficiency, alpha, c0, c1 = _sweep_c1_family(target)
            witness.update({"alpha": alpha, "c0": c0, "c1": c1})
        else:
            deficiency, alpha = _sweep_c2_family(target)
            witness.update({"alpha": alpha})
        verdict = "pass" if deficiency >= cfg.fail_tol else "discrepancy"
        note = ""
        if verdict == "discrepancy":
            known = True
            note = (
                "hyperbolic automorphism target admits a symmetric normal "
                "realization; documented deviation from the claimed nonexistence"
            )
        records.append(
            SampleRecord(
                params=witness,
                residuals={"deficiency": float(deficiency)},
                verdict=verdict,
                note=note,
            )
        )
    return VerificationReport(f"sweep-{key}", cfg, records, known_discrepancy=known)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

SUITES: Dict[str, Callable[[SuiteConfig], VerificationReport]] = {
    "prop21-normal": suite_prop21_normal,
    "prop22-commutation": suite_prop22_commutation,
    "conjugation-axioms": suite_conjugation_axioms,
    "jsym-form": suite_jsym_form,
    "c1sym-form": suite_c1sym_form,
    "c2sym-form": suite_c2sym_form,
    "lemma31-aut": suite_lemma31_aut,
    "lemma32-aut": suite_lemma32_aut,
    "lemma33-aut": suite_lemma33_aut,
    "prop41-iff": _oracle_consistency_j,
    "cor41-aut": suite_cor41_aut,
    "ex41-equivalence": suite_ex41_equivalence,
    "ex44-parabolic": suite_ex44_parabolic,
    "thm51-iff": _oracle_consistency_c1,
    "ex51-interior": suite_ex51_interior,
    "ex51-aut-corollary": suite_ex51_aut_corollary,
    "ex54-parabolic": suite_ex54_parabolic,
    "thm61-consistency": _oracle_consistency_c2,
    "cor62-no-aut": suite_cor62_no_aut,
    "ex61-interior": suite_ex61_interior,
    "ex63-parabolic": suite_ex63_parabolic,
    "cowen-factorization": suite_cowen_factorization,
    "ex42-sweep": lambda cfg: nonexistence_sweep("j-hyperbolic", cfg),
    "ex43-sweep": lambda cfg: nonexistence_sweep("hyperbolic-nonaut", cfg),
    "ex52-sweep": lambda cfg: nonexistence_sweep("c1-hyperbolic", cfg),
    "ex53-sweep": lambda cfg: nonexistence_sweep("hyperbolic-nonaut", cfg),
    "ex62-sweep": lambda cfg: nonexistence_sweep("c2-hyperbolic", cfg),
}

# smaller default sample counts for the heavier suites
SUITE_DEFAULTS: Dict[str, SuiteConfig] = {
    "prop21-normal": SuiteConfig(samples=100, dim=96),
    "prop22-commutation": SuiteConfig(samples=60, dim=96),
    "conjugation-axioms": SuiteConfig(samples=101, dim=48, block=16),
    "jsym-form": SuiteConfig(samples=100),
    "c1sym-form": SuiteConfig(samples=100),
    "c2sym-form": SuiteConfig(samples=100),
    "lemma31-aut": SuiteConfig(samples=120),
    "lemma32-aut": SuiteConfig(samples=120),
    "lemma33-aut": SuiteConfig(samples=120),
    "prop41-iff": SuiteConfig(samples=200),
    "cor41-aut": SuiteConfig(samples=60),
    "ex41-equivalence": SuiteConfig(samples=80),
    "ex44-parabolic": SuiteConfig(samples=40, dim=96),
    "thm51-iff": SuiteConfig(samples=200),
    "ex51-interior": SuiteConfig(samples=40, dim=96),
    "ex51-aut-corollary": SuiteConfig(samples=60),
    "ex54-parabolic": SuiteConfig(samples=40, dim=96),
    "thm61-consistency": SuiteConfig(samples=60, dim=96),
    "cor62-no-aut": SuiteConfig(samples=100),
    "ex61-interior": SuiteConfig(samples=30, dim=96),
    "ex63-parabolic": SuiteConfig(samples=30, dim=96),
    "cowen-factorization": SuiteConfig(samples=50, dim=64, block=16),
    "ex42-sweep": SuiteConfig(samples=20),
    "ex43-sweep": SuiteConfig(samples=12),
    "ex52-sweep": SuiteConfig(samples=20),
    "ex53-sweep": SuiteConfig(samples=12),
    "ex62-sweep": SuiteConfig(samples=20),
}

# every verified statement must own at least one registered suite
ANCHOR_SUITES: Dict[str, List[str]] = {
    "adjoint-factorization": ["cowen-factorization"],
    "interior-normal-family": ["prop21-normal"],
    "boundary-normal-commutation": ["prop22-commutation"],
    "rotation-conjugation": ["conjugation-axioms"],
    "kernel-conjugation": ["conjugation-axioms"],
    "j-symmetric-form": ["jsym-form"],
    "c1-symmetric-form": ["c1sym-form"],
    "c2-symmetric-form": ["c2sym-form"],
    "j-aut-normal-form": ["lemma31-aut"],
    "c1-aut-normal-form": ["lemma32-aut"],
    "c2-aut-normal-form": ["lemma33-aut"],
    "j-normal-iff": ["prop41-iff"],
    "j-normal-aut-corollary": ["cor41-aut"],
    "j-interior": ["ex41-equivalence"],
    "j-hyperbolic-aut-nonexistence": ["ex42-sweep"],
    "j-hyperbolic-nonaut-nonexistence": ["ex43-sweep"],
    "j-parabolic": ["ex44-parabolic"],
    "c1-normal-iff": ["thm51-iff"],
    "c1-interior": ["ex51-interior"],
    "c1-interior-aut-corollary": ["ex51-aut-corollary"],
    "c1-hyperbolic-aut-nonexistence": ["ex52-sweep"],
    "c1-hyperbolic-nonaut-nonexistence": ["ex53-sweep"],
    "c1-parabolic": ["ex54-parabolic"],
    "c2-normal-cases": ["thm61-consistency"],
    "c2-no-normal-aut": ["cor62-no-aut"],
    "c2-interior": ["ex61-interior"],
    "c2-hyperbolic-nonexistence": ["ex62-sweep", "ex43-sweep"],
    "c2-parabolic": ["ex63-parabolic"],
}


def check_registry() -> None:
    """Raise if any anchored statement lacks a registered suite."""
    missing = {
        anchor: ids
        for anchor, ids in ANCHOR_SUITES.items()
        if not ids or any(i not in SUITES for i in ids)
    }
    if missing:
        raise UnknownSuiteError(f"anchors without registered suites: {sorted(missing)}")


def default_config(suite_id: str) -> SuiteConfig:
    return SUITE_DEFAULTS.get(suite_id, SuiteConfig())


def run_suite(suite_id: str, cfg: Optional[SuiteConfig] = None) -> VerificationReport:
    """Run one registered suite; deterministic given (suite, config, seed)."""
    if suite_id not in SUITES:
        raise UnknownSuiteError(f"unknown suite id {suite_id!r}")
    if cfg is None:
        cfg = default_config(suite_id)
    return SUITES[suite_id](cfg)
