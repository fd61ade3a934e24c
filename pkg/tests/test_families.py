import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wcosym.errors import (
    BranchConditionError,
    DegenerateSymbolError,
    DiscriminantError,
    DomainViolationError,
    NotSelfMapError,
)
from wcosym.families import (
    C1Params,
    C2NormalCase,
    C2Params,
    DiskForm,
    HyperbolicParams,
    IdentityForm,
    InteriorParams,
    JParams,
    RotationForm,
    c1_aut_form,
    c1_normal_expression,
    c1_normal_predicate,
    c1_parabolic_symbols,
    c1_symbols,
    c2_aut_form,
    c2_interior_terms,
    c2_normal_predicate,
    c2_normality_terms,
    c2_parabolic_dw_point,
    c2_parabolic_predicate,
    c2_quadruple,
    c2_symbols,
    hyperbolic_aut_map,
    interior_phi_closed_form,
    j_aut_form,
    j_normal_predicate,
    j_symbols,
    normal_interior_symbols,
    parabolic_j_symbols,
)
from wcosym.mobius import (
    IDENTITY,
    ConstantMap,
    MapClass,
    MobiusMap,
    classify,
    mobius_equal,
    proj_distance,
)


class TestJSymbols:
    def test_pure_rotation(self):
        pair = j_symbols(JParams(0.0, 0.5, 1.0))
        assert mobius_equal(pair.phi, MobiusMap(0.5, 0, 0, 1), 1e-14)
        assert pair.psi.n0 == 1 and pair.psi.d1 == 0

    def test_automorphism_member(self):
        pair = j_symbols(JParams(0.5, -0.75))
        form = j_aut_form(0.5, -0.75)
        assert isinstance(form, DiskForm)
        assert abs(form.gamma - 0.5) < 1e-12
        assert proj_distance(form.to_map(), pair.phi) < 1e-12

    def test_parabolic_member(self):
        # double fixed point at 1 requires a1 = (1 - a0)^2; the printed
        # relation a1 = a0 - 1 contradicts the displayed parabolic map
        # (see the decision ledger)
        a0 = (1 + 1j) / 2
        a1 = (1 - a0) ** 2
        pair = j_symbols(JParams(a0, a1))
        cls = classify(pair.phi)
        assert cls.map_class is MapClass.PARABOLIC_AUTOMORPHISM
        assert abs(cls.dw_point - 1) < 1e-9
        assert mobius_equal(pair.phi, parabolic_j_symbols(a0, +1).phi, 1e-12)

    def test_domain_validation(self):
        with pytest.raises(DomainViolationError):
            JParams(1.2, 0.5)


class TestC1Symbols:
    def test_alpha_one_reduces_to_j(self):
        jp = j_symbols(JParams(0.4, 0.3, 1.2))
        cp = c1_symbols(C1Params(1.0, 0.4, 0.3, 1.2))
        assert proj_distance(jp.phi, cp.phi) < 1e-14
        assert jp.psi == cp.psi

    def test_automorphism_member(self):
        form = c1_aut_form(1.0, 0.5, -0.75)
        assert isinstance(form, DiskForm)
        assert abs(form.gamma - 0.5) < 1e-12
        assert abs(form.beta - 1.0) < 1e-12

    def test_parabolic_member(self):
        pair = c1_symbols(C1Params(1.0, 0.5, 0.25))
        cls = classify(pair.phi)
        assert cls.map_class in (
            MapClass.PARABOLIC_AUTOMORPHISM,
            MapClass.PARABOLIC_NON_AUTOMORPHISM,
        )
        assert abs(cls.dw_point - 1.0) < 1e-9

    def test_zero_c1_is_constant(self):
        pair = c1_symbols(C1Params(1j, 0.5, 0.0))
        assert isinstance(pair.phi, ConstantMap)
        assert pair.phi.value == 0.5


class TestC2Symbols:
    def test_identity_member(self):
        params = C2Params.from_c0_squared(0.5, 0.72, 0.36, 0.36)
        pair = c2_symbols(params)
        assert mobius_equal(pair.phi, IDENTITY, 1e-12)
        assert abs(pair.psi(0.3) - 1.0) < 1e-12

    def test_automorphism_member(self):
        params = C2Params.from_c0_squared(0.5, 1.4, 1.0, 0.7)
        form = c2_aut_form(params)
        assert isinstance(form, DiskForm)
        assert abs(form.beta + 1.0) < 1e-12
        assert abs(form.gamma - 1 / 3) < 1e-12

    def test_moduli_equal_parameters_are_never_self_maps(self):
        # |c1-c2| = |conj(a)c0^2-c1| = |c0^2 - a c1| forces |phi(0)| = 1
        params = C2Params(0.5, 0.6, 0.36, 0.54)
        with pytest.raises(NotSelfMapError):
            c2_symbols(params)
        pair = c2_symbols(params, check_self_map=False)
        assert abs(abs(pair.phi(0.0)) - 1.0) < 1e-12

    def test_sqrt_sign_irrelevant(self):
        base = C2Params.from_c0_squared(0.4 + 0.1j, 0.5 - 0.2j, 0.3, 0.1)
        flipped = C2Params(base.alpha, -base.c0, base.c1, base.c2)
        p1 = c2_symbols(base, check_self_map=False)
        p2 = c2_symbols(flipped, check_self_map=False)
        assert proj_distance(p1.phi, p2.phi) < 1e-14
        assert p1.psi == p2.psi

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateSymbolError):
            C2Params.from_c0_squared(0.5, 0.5 * 0.3, 0.3, 0.1)


class TestNormalInteriorSymbols:
    def test_origin(self):
        pair = normal_interior_symbols(InteriorParams(0.0, 0.5, 1.0))
        assert mobius_equal(pair.phi, MobiusMap(0.5, 0, 0, 1), 1e-14)
        assert abs(pair.psi(0.2) - 1.0) < 1e-14

    def test_involution_case(self):
        pair = normal_interior_symbols(InteriorParams(0.5, -1.0, 1.0))
        assert mobius_equal(pair.phi, MobiusMap(-1, 0.8, -0.8, 1), 1e-13)

    def test_constant_branch(self):
        pair = normal_interior_symbols(InteriorParams(0.5, 0.0, 1.0))
        assert isinstance(pair.phi, ConstantMap)
        assert pair.phi.value == 0.5
        s = pair.psi
        assert abs(s(0.0) - 0.75) < 1e-14 and abs(-s.d1 / s.d0 - 0.5) < 1e-14

    def test_closed_form_matches_composition(self):
        params = InteriorParams(0.3 - 0.2j, 0.4 + 0.5j, 0.7)
        assert proj_distance(
            normal_interior_symbols(params).phi, interior_phi_closed_form(params)
        ) < 1e-13

    def test_weight_value_at_fixed_point(self):
        params = InteriorParams(0.4j, 0.3, 2.5)
        pair = normal_interior_symbols(params)
        assert abs(pair.psi(0.4j) - 2.5) < 1e-12


class TestNormalPredicates:
    def test_j_real_parameters(self):
        assert j_normal_predicate(0.3, 0.2)

    def test_j_balanced_imaginary(self):
        assert j_normal_predicate(0.5j, 0.75)

    def test_j_unbalanced(self):
        assert not j_normal_predicate(0.5j, 0.5)

    def test_c1_real(self):
        assert c1_normal_predicate(1.0, 0.3, 0.5)

    def test_c1_rotated_alpha(self):
        assert not c1_normal_predicate(1j, 0.3, 0.5)
        expr = c1_normal_expression(1j, 0.3, 0.5)
        assert abs(expr - (0.123 - 0.123j)) < 1e-12

    def test_c1_negative_alpha(self):
        assert c1_normal_predicate(-1.0, 0.5, 0.75)


class TestC2NormalityTerms:
    def test_real_inputs_real_terms(self):
        terms = c2_normality_terms(C2Params(0.5, 0.6, 0.36, 0.18))
        prod = (np.conj(terms.a) - np.conj(terms.c)) * (terms.a_tilde + terms.c_tilde)
        assert abs(prod.imag) < 1e-15

    def test_worked_values(self):
        terms = c2_normality_terms(C2Params(0.5, 0.6, 0.36, 0.54))
        assert abs(terms.d - 0.2025) < 1e-12
        assert abs(terms.b - 0.0081) < 1e-12
        assert terms.d != terms.b

    def test_identity_case_vanishing(self):
        terms = c2_normality_terms(C2Params.from_c0_squared(0.5, 0.72, 0.36, 0.36))
        assert abs(terms.c) < 1e-15
        assert abs(terms.a_tilde) < 1e-15
        assert terms.b < 1e-15


class TestC2NormalPredicate:
    def test_case_i(self):
        assert c2_normal_predicate(C2Params(0.5, 0.6, 0.36, 0.54)) is C2NormalCase.CASE_I

    def test_case_ii(self):
        assert c2_normal_predicate(C2Params(0.5, 0.6, 0.36, 0.18)) is C2NormalCase.CASE_II

    def test_identity_case_rejected(self):
        # the identity operator is normal, yet the stated conditions
        # reject it: the documented discrepancy
        params = C2Params.from_c0_squared(0.5, 0.72, 0.36, 0.36)
        assert c2_normal_predicate(params) is C2NormalCase.NOT_NORMAL
        t, u, v, w = c2_quadruple(params)
        assert abs(t) < 1e-15 and abs(u) < 1e-15
        assert abs(abs(v) - 0.36 * (1 - 0.25) / 0.5) < 1e-12

    def test_case_i_implies_commuting_terms_match(self):
        # |c1 - c2| = |conj(a) c0^2 - c1| already forces A - C = At + Ct
        terms = c2_normality_terms(C2Params(0.5, 0.6, 0.36, 0.54))
        assert abs((terms.a - terms.c) - (terms.a_tilde + terms.c_tilde)) < 1e-14


class TestAutForms:
    def test_j_rotation_flag(self):
        form = j_aut_form(0.0, 0.3)
        assert isinstance(form, RotationForm)
        assert form.beta == 0.3 and not form.on_boundary

    def test_j_gamma_outside(self):
        assert j_aut_form(0.5, 0.5) is None

    def test_c1_rotation(self):
        form = c1_aut_form(1.0, 0.0, 0.3)
        assert isinstance(form, RotationForm) and not form.on_boundary

    def test_c1_rebuild_failure(self):
        assert c1_aut_form(1j, 0.5, 0.25) is None

    def test_c2_case_i_not_automorphism(self):
        assert c2_aut_form(C2Params(0.5, 0.6, 0.36, 0.54)) is None

    def test_c2_identity(self):
        assert isinstance(
            c2_aut_form(C2Params.from_c0_squared(0.5, 0.72, 0.36, 0.36)), IdentityForm
        )

    @settings(max_examples=40, deadline=None)
    @given(
        st.complex_numbers(min_magnitude=0.05, max_magnitude=0.85, allow_nan=False),
    )
    def test_j_disk_round_trip(self, g):
        a0 = np.conj(g)
        a1 = np.conj(g) * (abs(g) ** 2 - 1.0) / g
        form = j_aut_form(a0, a1)
        assert isinstance(form, DiskForm)
        assert abs(form.gamma - g) <= 1e-9
        assert proj_distance(form.to_map(), j_symbols(JParams(a0, a1)).phi) <= 1e-12


class TestParabolicConstructors:
    def test_j_branch_plus(self):
        a0 = (1 + 1j) / 2
        pair = parabolic_j_symbols(a0, +1)
        assert abs(pair.phi(1.0) - 1.0) < 1e-14
        assert abs(pair.phi.derivative(1.0) - 1.0) < 1e-14

    def test_j_branch_minus(self):
        a0 = (1 - 1j) / 2
        pair = parabolic_j_symbols(a0, -1)
        assert abs(pair.phi(-1.0) + 1.0) < 1e-13
        assert abs(pair.phi.derivative(-1.0) - 1.0) < 1e-13

    def test_j_branch_violation(self):
        with pytest.raises(BranchConditionError):
            parabolic_j_symbols(0.3, +1)

    def test_c1_worked_instance(self):
        pair = c1_parabolic_symbols(1.0, 0.5, 0.25)
        assert proj_distance(pair.phi, MobiusMap(0, 0.5, -0.5, 1)) < 1e-13
        cls = classify(pair.phi)
        assert cls.map_class is MapClass.PARABOLIC_NON_AUTOMORPHISM
        assert abs(cls.dw_derivative - 1.0) < 1e-10
        # the rotated weight satisfies the rotation-weighted normality
        # condition automatically on the discriminant locus
        assert abs(c1_normal_expression(1.0, 0.5, 0.25)) < 1e-14

    def test_c1_discriminant_violation(self):
        with pytest.raises(DiscriminantError):
            c1_parabolic_symbols(1.0, 0.5, 0.3)

    @settings(max_examples=30, deadline=None)
    @given(
        st.floats(0, 2 * cmath.pi),
        st.complex_numbers(max_magnitude=0.4, allow_nan=False),
    )
    def test_c1_parabolic_classifies(self, th, dw):
        zeta = cmath.exp(1j * th)
        w = 0.5 + 0.45 * dw / 0.4 if dw != 0 else 0.5
        c0 = zeta * w
        c1 = (1 - w) ** 2
        pair = c1_parabolic_symbols(zeta, c0, c1)
        cls = classify(pair.phi)
        assert cls.map_class in (
            MapClass.PARABOLIC_AUTOMORPHISM,
            MapClass.PARABOLIC_NON_AUTOMORPHISM,
        )
        assert abs(cls.dw_point - zeta) <= 1e-8
        assert abs(cls.dw_derivative - 1.0) <= 1e-10


class TestHyperbolicAutMap:
    def test_standard_automorphism(self):
        m = hyperbolic_aut_map(HyperbolicParams(2.0, 0.0))
        assert proj_distance(m, MobiusMap(3, 1, 1, 3)) < 1e-14
        cls = classify(m)
        assert cls.map_class is MapClass.HYPERBOLIC_AUTOMORPHISM
        assert abs(cls.dw_derivative - 0.5) < 1e-12

    def test_damped_variant_is_self_map(self):
        m = hyperbolic_aut_map(HyperbolicParams(2.0, 1.0))
        assert proj_distance(m, MobiusMap(1, 1, 0, 2)) < 1e-14
        cls = classify(m)
        assert cls.map_class is MapClass.HYPERBOLIC_NON_AUTOMORPHISM
        assert abs(cls.dw_point - 1.0) < 1e-12

    def test_derivative_scaling(self):
        cls = classify(hyperbolic_aut_map(HyperbolicParams(1.5, 0.0)))
        assert abs(cls.dw_derivative - 2 / 3) < 1e-12

    def test_negative_real_part_rejected(self):
        with pytest.raises(NotSelfMapError):
            hyperbolic_aut_map(HyperbolicParams(2.0, -0.5))

    def test_domain(self):
        with pytest.raises(DomainViolationError):
            HyperbolicParams(0.9, 0.0)


class TestC2Parabolic:
    @staticmethod
    def _construct(alpha, sign, c1, t):
        amod = abs(alpha)
        rho = (2 * amod ** 2 - 1) + 2j * sign * amod * np.sqrt(1 - amod ** 2)
        return C2Params.from_c0_squared(alpha, (c1 + rho * t) / np.conj(alpha), c1, c1 - t)

    def test_construct_then_check(self):
        params = self._construct(0.4 + 0.2j, 1, 1.0 + 0.3j, 0.04 - 0.02j)
        assert c2_parabolic_predicate(params)
        zeta = c2_parabolic_dw_point(params)
        assert abs(abs(zeta) - 1.0) < 1e-10
        cls = classify(c2_symbols(params).phi)
        assert cls.map_class in (
            MapClass.PARABOLIC_AUTOMORPHISM,
            MapClass.PARABOLIC_NON_AUTOMORPHISM,
        )
        assert abs(cls.dw_point - zeta) < 1e-8

    def test_degenerate(self):
        with pytest.raises(DegenerateSymbolError):
            c2_parabolic_predicate(C2Params(0.5, 0.7, 0.3, 0.3))

    def test_elliptic_instance_is_not_parabolic(self):
        assert not c2_parabolic_predicate(C2Params(0.5, 0.6, 0.36, 0.54))


class TestC2InteriorTerms:
    def test_i3(self):
        terms = c2_interior_terms(0.5, 0.5, 0.5)
        assert abs(terms.i3 - 3.5) < 1e-14

    def test_i1(self):
        terms = c2_interior_terms(0.5, 0.5, -1.0)
        assert abs(terms.i1 - 0.625) < 1e-14

    def test_i2_i3_product(self):
        alpha = 0.3 + 0.4j
        terms = c2_interior_terms(alpha, 0.4, 0.2 + 0.1j)
        assert abs(terms.i2 * terms.i3 - np.conj(alpha) / alpha) < 1e-14

    def test_delta_one_rejected(self):
        with pytest.raises(DomainViolationError):
            c2_interior_terms(0.5, 0.5, 1.0)

    def test_zero_p_rejected(self):
        with pytest.raises(DomainViolationError):
            c2_interior_terms(0.5, 0.0, 0.5)
