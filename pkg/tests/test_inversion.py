import random
from fractions import Fraction

import pytest

from cliffinv import (
    DimensionMismatch,
    DimensionOutOfRange,
    InvolutionChain,
    Multivector,
    NotInvertible,
    Signature,
    SubspaceViolation,
    alternate_chain,
    compose_inverse,
    conjugation,
    conjugation_delta,
    default_chain,
    discriminant,
    discriminant_closed_form,
    grade_involution,
    inverse,
    oracle_inverse,
    psi,
    psi_delta,
    reversion,
    reversion_delta,
    verify_d_equals_dprime,
)

from conftest import all_signatures


def rnd(sig, seed, bound=9):
    return Multivector.random(sig, seed, bound)


class TestChainConstruction:
    def test_default_chain_steps(self):
        assert default_chain(0).steps == ()
        assert default_chain(1).steps == (conjugation_delta(1),)
        assert default_chain(2).steps == (conjugation_delta(2),)
        assert default_chain(3).steps == (reversion_delta(3), conjugation_delta(3))
        assert default_chain(4).steps == (reversion_delta(4), psi_delta(4))
        assert default_chain(5).steps == (
            reversion_delta(5),
            psi_delta(5),
            conjugation_delta(5),
        )

    def test_default_chain_domains(self):
        assert default_chain(3).domains == (frozenset({0, 1, 2, 3}), frozenset({0, 1}))
        assert default_chain(4).domains == (frozenset(range(5)), frozenset({0, 1, 4}))
        assert default_chain(5).domains == (
            frozenset(range(6)),
            frozenset({0, 1, 4, 5}),
            frozenset({0, 5}),
        )

    def test_default_chain_out_of_range(self):
        with pytest.raises(DimensionOutOfRange):
            default_chain(6)

    def test_alternate_chain(self):
        assert alternate_chain(3).steps == (conjugation_delta(3), reversion_delta(3))
        assert alternate_chain(3).domains == (frozenset({0, 1, 2, 3}), frozenset({0, 3}))
        assert alternate_chain(4).steps == (conjugation_delta(4), psi_delta(4))
        assert alternate_chain(4).domains == (frozenset(range(5)), frozenset({0, 3, 4}))
        for n in (0, 1, 2, 5, 6):
            with pytest.raises(DimensionOutOfRange):
                alternate_chain(n)

    def test_chain_must_terminate_on_scalars(self):
        # reversion alone leaves grades {0,1} fixed at three generators
        with pytest.raises(ValueError):
            InvolutionChain(3, (reversion_delta(3),))

    def test_chain_steps_must_reverse_products_on_domain(self):
        # psi is not an anti-automorphism of the full three-generator algebra
        with pytest.raises(ValueError):
            InvolutionChain(3, (psi_delta(3), conjugation_delta(3)))

    def test_explicit_domains_are_checked(self):
        with pytest.raises(ValueError):
            InvolutionChain(
                3,
                (reversion_delta(3), conjugation_delta(3)),
                (frozenset({0, 1, 2, 3}), frozenset({0, 1, 2})),
            )


class TestComposeInverse:
    def test_unit_has_discriminant_one(self):
        for n in range(6):
            sig = Signature(0, n)
            result = compose_inverse(Multivector.unit(sig), default_chain(n))
            assert result.discriminant == 1
            assert result.inverse == Multivector.unit(sig)

    def test_two_plus_e1(self):
        sig = Signature(0, 1)
        result = compose_inverse(Multivector(sig, {0: 2, 1: 1}), default_chain(1))
        assert result.discriminant == 3
        assert result.inverse == Multivector(sig, {0: Fraction(2, 3), 1: Fraction(-1, 3)})
        assert result.factors == (Multivector(sig, {0: 2, 1: -1}),)

    def test_zero_divisor_has_no_inverse(self):
        sig = Signature(0, 1)
        result = compose_inverse(Multivector(sig, {0: 1, 1: 1}), default_chain(1))
        assert result.discriminant == 0
        assert result.inverse is None

    def test_element_times_factors_equals_discriminant(self):
        rng = random.Random(3)
        for sig in all_signatures(0):
            chain = default_chain(sig.n)
            for _ in range(10):
                a = rnd(sig, rng.randrange(10**6))
                result = compose_inverse(a, chain)
                prod = a
                for f in result.factors:
                    prod = prod * f
                assert prod == Multivector.scalar(sig, result.discriminant)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            compose_inverse(Multivector.unit(Signature(0, 2)), default_chain(3))

    @staticmethod
    def _unchecked_chain(n, steps, domains):
        chain = InvolutionChain.__new__(InvolutionChain)
        object.__setattr__(chain, "n", n)
        object.__setattr__(chain, "steps", steps)
        object.__setattr__(chain, "domains", domains)
        return chain

    def test_broken_chain_nonscalar_end_raises_subspace_violation(self):
        # Bypass validation: claim conjugation alone finishes a
        # three-generator element.  1 + e1 + e23 symmetrises to 1 - 2*e123.
        chain = self._unchecked_chain(
            3, (conjugation_delta(3),), (frozenset({0, 1, 2, 3}),)
        )
        a = Multivector(Signature(0, 3), {0: 1, 0b001: 1, 0b110: 1})
        with pytest.raises(SubspaceViolation):
            compose_inverse(a, chain)

    def test_broken_chain_escaping_support_raises_subspace_violation(self):
        # A lying domain makes the grade-1 part of a*rev(a) an escape:
        # (1+e1)*rev(1+e1) = 2 + 2*e1, outside the claimed fixed set {0}.
        chain = self._unchecked_chain(3, (reversion_delta(3),), (frozenset({0, 2}),))
        a = Multivector(Signature(0, 3), {0: 1, 0b001: 1})
        with pytest.raises(SubspaceViolation):
            compose_inverse(a, chain)


class TestInverse:
    def test_self_inverse_generator(self):
        sig = Signature(0, 2)
        e1 = Multivector.blade(sig, 0b01)
        assert inverse(e1) == e1

    def test_negative_square_generator(self):
        sig = Signature(2, 0)
        e1 = Multivector.blade(sig, 0b01)
        assert inverse(e1) == -e1

    def test_matches_matrix_oracle(self):
        sig = Signature(1, 2)
        a = Multivector(sig, {0: 1, 0b001: 2, 0b110: 1})
        assert inverse(a) == oracle_inverse(a)

    def test_round_trip_random(self):
        rng = random.Random(5)
        for sig in all_signatures(0):
            one = Multivector.unit(sig)
            for _ in range(15):
                a = rnd(sig, rng.randrange(10**6))
                try:
                    a_inv = inverse(a)
                except NotInvertible:
                    continue
                assert a * a_inv == one
                assert a_inv * a == one

    def test_not_invertible_raises(self):
        with pytest.raises(NotInvertible):
            inverse(Multivector(Signature(0, 1), {0: 1, 1: 1}))
        with pytest.raises(NotInvertible):
            inverse(Multivector.zero(Signature(2, 2)))

    def test_scalar_field_inverse(self):
        sig = Signature(0, 0)
        assert inverse(Multivector.scalar(sig, 5)) == Multivector.scalar(sig, Fraction(1, 5))
        assert discriminant(Multivector.scalar(sig, 5)) == 5


class TestDiscriminant:
    def test_zero_element(self):
        for sig in all_signatures(0):
            assert discriminant(Multivector.zero(sig)) == 0

    def test_scalar_degree_doubles_per_step(self):
        # each chain step squares a scalar, so c maps to c**(2**steps)
        for n, exponent in ((0, 1), (1, 2), (2, 2), (3, 4), (4, 4), (5, 8)):
            sig = Signature(0, n)
            c = Fraction(3)
            assert discriminant(Multivector.scalar(sig, c)) == c**exponent

    def test_zero_divisor_has_zero_discriminant(self):
        assert discriminant(Multivector(Signature(0, 1), {0: 1, 1: 1})) == 0


class TestClosedForm:
    def test_one_generator_formula(self):
        rng = random.Random(7)
        for sig in (Signature(0, 1), Signature(1, 0)):
            s1 = sig.square(1)
            for _ in range(50):
                x, y = rng.randint(-20, 20), rng.randint(-20, 20)
                a = Multivector(sig, {0: x, 1: y})
                assert discriminant_closed_form(a) == x * x - y * y * s1
                assert discriminant(a) == discriminant_closed_form(a)

    def test_two_generator_formula(self):
        rng = random.Random(8)
        for p in range(3):
            sig = Signature(p, 2 - p)
            s1, s2 = sig.square(1), sig.square(2)
            for _ in range(50):
                x, y, z, w = (rng.randint(-20, 20) for _ in range(4))
                a = Multivector(sig, {0b00: x, 0b01: y, 0b10: z, 0b11: w})
                expected = x * x - y * y * s1 - z * z * s2 + w * w * s1 * s2
                assert discriminant_closed_form(a) == expected
                assert discriminant(a) == expected

    @pytest.mark.parametrize("n", [3, 4])
    def test_matches_chain_scalar(self, n):
        rng = random.Random(9 + n)
        for p in range(n + 1):
            sig = Signature(p, n - p)
            for _ in range(60):
                a = rnd(sig, rng.randrange(10**6))
                assert discriminant_closed_form(a) == discriminant(a)

    def test_rational_coefficients(self):
        sig = Signature(2, 2)
        a = rnd(sig, 123).scale(Fraction(1, 6)) + Multivector.scalar(sig, Fraction(2, 7))
        assert discriminant_closed_form(a) == discriminant(a)

    def test_out_of_range(self):
        with pytest.raises(DimensionOutOfRange):
            discriminant_closed_form(Multivector.scalar(Signature(0, 0), 3))
        with pytest.raises(DimensionOutOfRange):
            discriminant_closed_form(Multivector.unit(Signature(2, 3)))


class TestChainAgreement:
    @pytest.mark.parametrize("n", [3, 4])
    def test_both_chains_same_scalar(self, n):
        rng = random.Random(11 + n)
        for p in range(n + 1):
            sig = Signature(p, n - p)
            for _ in range(40):
                assert verify_d_equals_dprime(rnd(sig, rng.randrange(10**6)))

    def test_zero_element(self):
        assert verify_d_equals_dprime(Multivector.zero(Signature(1, 2)))

    def test_out_of_range(self):
        with pytest.raises(DimensionOutOfRange):
            verify_d_equals_dprime(Multivector.unit(Signature(0, 2)))


class TestTwoSidedForms:
    def test_three_generator_product_symmetry(self):
        rng = random.Random(13)
        for p in range(4):
            sig = Signature(p, 3 - p)
            for _ in range(25):
                a = rnd(sig, rng.randrange(10**6))
                left = reversion(a) * grade_involution(a) * conjugation(a)
                right = conjugation(a) * grade_involution(a) * reversion(a)
                assert left == right

    def test_four_generator_product_symmetry(self):
        rng = random.Random(17)
        for p in range(5):
            sig = Signature(p, 4 - p)
            for _ in range(25):
                a = rnd(sig, rng.randrange(10**6))
                left = reversion(a) * psi(a * reversion(a))
                right = conjugation(a) * psi(a * conjugation(a))
                assert left == right

    def test_five_generator_factor_expansion(self):
        rng = random.Random(19)
        for p in range(6):
            sig = Signature(p, 5 - p)
            for _ in range(10):
                a = rnd(sig, rng.randrange(10**6))
                result = compose_inverse(a, default_chain(5))
                f1, f2, f3 = result.factors
                assert f1 == reversion(a)
                assert f2 == psi(a * reversion(a))
                tail = psi(grade_involution(a) * conjugation(a)) * (
                    grade_involution(a) * conjugation(a)
                )
                assert f3 == tail
                expanded = f1 * f2 * tail
                assert f1 * f2 * f3 == expanded
