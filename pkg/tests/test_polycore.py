import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_rootspec
from polyrealize.polycore import (
    AMBIGUOUS,
    RealPolynomial,
    RootSpec,
    ZeroConstantTermError,
    ZeroRootError,
    derivative,
    evaluate,
    expand_from_roots,
    expand_real,
    negate_variable,
    reciprocal,
    sign_vector,
)

GAP_D6_ROOTS = (-0.19, -0.18, 0.13, 0.21, 0.67, 0.96)


def q1_spec() -> RootSpec:
    return RootSpec(
        real_roots=(-0.723, -0.59, -0.48),
        complex_pairs=((0.985, math.sqrt(0.977 - 0.985**2)),),
    )


class TestExpandFromRoots:
    def test_q1_coefficients(self):
        # degree-5 witness expands to the reported coefficients
        p = expand_from_roots(q1_spec())
        expected = (-0.177, -1.498, -0.125, 0.629, 0.2)
        assert p.degree == 5
        for got, want in zip(p.tail, expected):
            assert abs(got - want) <= 2e-3

    def test_single_linear_factor(self):
        p = expand_from_roots(RootSpec(real_roots=(0.5,)))
        assert p.coeffs == (1.0, -0.5)

    def test_symmetric_cancellation_is_ambiguous(self):
        p = expand_from_roots(RootSpec(real_roots=(1.0, -1.0)))
        assert p.coeffs == (1.0, 0.0, -1.0)
        assert sign_vector(p, 1e-9) is AMBIGUOUS

    def test_zero_root_rejected(self):
        with pytest.raises(ZeroRootError):
            RootSpec(real_roots=(0.0, 1.0))

    def test_empty_spec_rejected(self):
        with pytest.raises(ValueError):
            expand_from_roots(RootSpec())

    def test_permutation_invariance(self):
        for case in range(200):
            spec = random_rootspec(101, case)
            p1 = expand_from_roots(spec)
            p2 = expand_from_roots(
                RootSpec(
                    real_roots=spec.real_roots[::-1],
                    complex_pairs=spec.complex_pairs[::-1],
                )
            )
            scale = max(1.0, max(abs(c) for c in p1.coeffs))
            for a, b in zip(p1.coeffs, p2.coeffs):
                assert abs(a - b) <= 1e-12 * scale

    def test_root_reconstruction(self):
        # evaluation at every construction root is tiny relative to coefficients
        for case in range(500):
            spec = random_rootspec(77, case, max_degree=10)
            p = expand_from_roots(spec)
            bound = 1e-9 * (1.0 + max(abs(c) for c in p.coeffs))
            for r in spec.real_roots:
                assert abs(evaluate(p, r)) <= bound


class TestEvaluate:
    def test_simple(self):
        p = RealPolynomial((0.0, -1.0))  # x^2 - 1
        assert evaluate(p, 2.0) == 3.0
        assert evaluate(p, 1.0) == 0.0

    def test_gap_witness_at_zero(self):
        p = RealPolynomial(tuple(expand_real(list(GAP_D6_ROOTS))[1:]))
        assert abs(evaluate(p, 0.0) - 0.000600530112) < 1e-15


class TestDerivative:
    def test_gap_witness_derivative(self):
        p = RealPolynomial(tuple(expand_real(list(GAP_D6_ROOTS))[1:]))
        expected = (6.0, -8.0, 2.12, 0.367734, -0.07587018, -0.0025040322)
        got = derivative(p)
        assert len(got) == 6
        for a, b in zip(got, expected):
            assert abs(a - b) <= 1e-12

    def test_quadratic(self):
        assert derivative(RealPolynomial((0.0, -1.0))) == (2.0, 0.0)

    def test_linear(self):
        assert derivative(RealPolynomial((-3.0,))) == (1.0,)

    def test_degree_and_leading(self):
        for case in range(100):
            spec = random_rootspec(5, case)
            p = expand_from_roots(spec)
            d = derivative(p)
            assert len(d) == p.degree
            assert d[0] == float(p.degree)


class TestTransforms:
    def test_negate_examples(self):
        assert negate_variable(RealPolynomial((-1.0,))).coeffs == (1.0, 1.0)
        # x^2 + x - 2 has roots {1, -2}; negation gives roots {-1, 2}
        assert negate_variable(RealPolynomial((1.0, -2.0))).coeffs == (1.0, -1.0, -2.0)

    def test_negate_involution_exact(self):
        for case in range(100):
            p = expand_from_roots(random_rootspec(13, case))
            assert negate_variable(negate_variable(p)).coeffs == p.coeffs

    def test_reciprocal_examples(self):
        assert reciprocal(RealPolynomial((-2.0,))).coeffs == (1.0, -0.5)
        got = reciprocal(RealPolynomial((-3.0, 2.0)))  # roots 1, 2 -> 1, 0.5
        assert got.coeffs == pytest.approx((1.0, -1.5, 0.5), abs=1e-15)

    def test_reciprocal_zero_constant(self):
        with pytest.raises(ZeroConstantTermError):
            reciprocal(RealPolynomial((1.0, 0.0)))

    def test_involutions_and_commutation(self):
        for case in range(100):
            p = expand_from_roots(random_rootspec(29, case))
            if p.coeffs[-1] == 0.0:
                continue
            rr = reciprocal(reciprocal(p))
            for a, b in zip(rr.coeffs, p.coeffs):
                assert abs(a - b) <= 1e-12 * max(1.0, abs(b))
            lhs = negate_variable(reciprocal(p))
            rhs = reciprocal(negate_variable(p))
            for a, b in zip(lhs.coeffs, rhs.coeffs):
                assert abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))


class TestSignVector:
    def test_q1_pattern(self):
        sv = sign_vector(expand_from_roots(q1_spec()))
        assert sv.word == "+---++"
        assert sv.runs == (1, 3, 2)

    def test_degree7_moduli_witness_pattern(self):
        printed = (17.91, 98.1106, -21.793074, -1971.427200, -5976.303538,
                   -2955.965399, 6696.676474)
        sv = sign_vector(RealPolynomial(printed))
        assert sv.word == "+++----+"

    def test_ambiguous_is_falsy_value(self):
        got = sign_vector(RealPolynomial((0.0, -1.0)), 1e-9)
        assert got is AMBIGUOUS
        assert not got

    def test_tau_validation(self):
        with pytest.raises(ValueError):
            sign_vector(RealPolynomial((1.0,)), 0.0)

    @given(st.floats(min_value=0.1, max_value=10.0))
    def test_scaling_keeps_signs(self, r):
        p = expand_from_roots(RootSpec(real_roots=(r, -2 * r)))
        sv = sign_vector(p)
        assert sv is not AMBIGUOUS and sv.signs[0] == 1
