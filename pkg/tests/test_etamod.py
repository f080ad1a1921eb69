"""Eta quotients: admissibility, Sturm bounds, characters, Hecke operators."""

import random
from fractions import Fraction

import pytest

from regulus import (
    EtaQuotient,
    EtaTextParseError,
    FirstCongruenceError,
    HalfIntegralWeightError,
    InsufficientPrecisionError,
    ModFormMeta,
    SecondCongruenceError,
    Status,
    TruncSeries,
    Zmod,
    ZZ,
    character_value,
    eta_expansion,
    euler_factor,
    validate_eta_quotient,
    hecke_tp,
    kronecker_symbol,
    parse_eta_quotient,
    raise_level,
    sturm_bound,
    sturm_compare,
)

EVENNESS_QUOTIENT = EtaQuotient(27, ((9, 1), (1, 63)))
IDENTITY_QUOTIENTS = [
    EtaQuotient(216, ((9, 1), (4, 4), (1, -1))),
    EtaQuotient(216, ((12, 3), (18, 1), (4, 4), (2, -2), (6, -1), (36, -1))),
    EtaQuotient(216, ((8, 6), (36, 1), (12, 2), (4, -3), (24, -2))),
    EtaQuotient(216, ((8, 2), (36, 1), (24, 2), (4, -1))),
]


# ---------------------------------------------------------------------------
# admissibility / metadata
# ---------------------------------------------------------------------------

class TestGhnValidate:
    def test_evenness_quotient_weight_32_level_27(self):
        meta = validate_eta_quotient(EVENNESS_QUOTIENT)
        assert (meta.weight, meta.level) == (32, 27)
        assert meta.char_s_num == 9 and meta.char_s_den == 1

    def test_identity_first_term_weight_2_level_216(self):
        meta = validate_eta_quotient(IDENTITY_QUOTIENTS[1])
        assert (meta.weight, meta.level) == (2, 216)

    def test_all_identity_quotients_weight_2_level_216(self):
        for eq in IDENTITY_QUOTIENTS:
            meta = validate_eta_quotient(eq)
            assert (meta.weight, meta.level) == (2, 216)

    def test_first_congruence_failure_reports_residue(self):
        with pytest.raises(FirstCongruenceError) as err:
            validate_eta_quotient(EtaQuotient(1, ((1, 1),)))
        assert err.value.residue == 1

    def test_second_congruence_failure(self):
        with pytest.raises(SecondCongruenceError) as err:
            validate_eta_quotient(EtaQuotient(24, ((24, 1),)))
        assert err.value.residue == 1

    def test_half_integral_weight_rejected(self):
        with pytest.raises(HalfIntegralWeightError):
            validate_eta_quotient(EtaQuotient(576, ((24, 1),)))

    def test_raise_level_smallest_multiple_of_24(self):
        eq = EtaQuotient(4, ((4, 6),))
        with pytest.raises(SecondCongruenceError):
            validate_eta_quotient(eq)
        raised = raise_level(eq)
        assert raised.level == 16
        assert validate_eta_quotient(raised).weight == 3


class TestSturmBound:
    def test_weight_2_level_216(self):
        assert sturm_bound(2, 216) == 72

    def test_weight_32_level_27(self):
        assert sturm_bound(32, 27) == 96

    def test_level_one_empty_product(self):
        assert sturm_bound(12, 1) == 1

    def test_matches_exact_rational_recomputation(self):
        rng = random.Random(7)
        for _ in range(100):
            k = rng.randrange(0, 40)
            n = rng.randrange(1, 400)
            value = Fraction(k, 12) * n
            d = 2
            nn = n
            while d * d <= nn:
                if nn % d == 0:
                    value *= Fraction(d + 1, d)
                    while nn % d == 0:
                        nn //= d
                d += 1
            if nn > 1:
                value *= Fraction(nn + 1, nn)
            assert sturm_bound(k, n) == value.numerator // value.denominator


# ---------------------------------------------------------------------------
# kronecker symbol and characters
# ---------------------------------------------------------------------------

def legendre_oracle(a, p):
    """Euler criterion: independent oracle for odd primes."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def jacobi_oracle(a, n):
    """Jacobi symbol via factoring the bottom and the Euler criterion."""
    assert n > 0 and n % 2 == 1
    result = 1
    d = 3
    while d * d <= n:
        while n % d == 0:
            result *= legendre_oracle(a, d)
            n //= d
        d += 2
    if n > 1:
        result *= legendre_oracle(a, n)
    return result


class TestKroneckerSymbol:
    def test_bottom_one_is_always_one(self):
        for a in range(-20, 21):
            assert kronecker_symbol(a, 1) == 1

    def test_two_is_nonresidue_mod_three(self):
        assert kronecker_symbol(2, 3) == -1

    def test_four_is_residue_mod_five(self):
        assert kronecker_symbol(4, 5) == 1

    def test_against_euler_criterion(self):
        for p in [3, 5, 7, 11, 13, 17, 19, 23, 97]:
            for a in range(-30, 31):
                assert kronecker_symbol(a, p) == legendre_oracle(a, p), (a, p)

    def test_against_jacobi_oracle(self):
        rng = random.Random(11)
        for _ in range(200):
            a = rng.randrange(-100, 101)
            n = rng.randrange(1, 200) * 2 + 1
            assert kronecker_symbol(a, n) == jacobi_oracle(a, n), (a, n)

    def test_completely_multiplicative_in_top(self):
        rng = random.Random(13)
        for _ in range(200):
            n = rng.randrange(0, 150) * 2 + 1
            a = rng.randrange(-60, 61)
            b = rng.randrange(-60, 61)
            assert (kronecker_symbol(a * b, n)
                    == kronecker_symbol(a, n) * kronecker_symbol(b, n))

    def test_even_bottom_values(self):
        assert kronecker_symbol(9, 2) == 1    # 9 = 1 mod 8
        assert kronecker_symbol(3, 2) == -1   # 3 = 3 mod 8
        assert kronecker_symbol(6, 2) == 0


class TestCharacterValue:
    def test_evenness_quotient_at_two(self):
        meta = validate_eta_quotient(EVENNESS_QUOTIENT)
        assert character_value(meta, 2) == 1

    def test_any_meta_at_one(self):
        for eq in IDENTITY_QUOTIENTS:
            assert character_value(validate_eta_quotient(eq), 1) == 1

    def test_even_weight_square_seed_is_trivial_on_coprime(self):
        meta = ModFormMeta(weight=4, level=36, char_s_num=36, char_s_den=1)
        for d in [1, 5, 7, 11, 13, 25]:
            assert character_value(meta, d) == 1

    def test_zero_argument_rejected(self):
        meta = validate_eta_quotient(EVENNESS_QUOTIENT)
        with pytest.raises(ValueError):
            character_value(meta, 0)


# ---------------------------------------------------------------------------
# expansions
# ---------------------------------------------------------------------------

class TestEtaExpansion:
    def test_single_eta(self):
        lead24, f = eta_expansion(EtaQuotient(1, ((1, 1),)), 30)
        assert lead24 == 1
        assert f == euler_factor(1, 1, 30)

    def test_evenness_quotient_lead24(self):
        lead24, _ = eta_expansion(EVENNESS_QUOTIENT, 10)
        assert lead24 == 72  # q^3 prefactor

    def test_nine_over_one_lead24(self):
        eq = EtaQuotient(9, ((9, 1), (1, -1)))
        lead24, f = eta_expansion(eq, 12)
        assert lead24 == 8
        assert f.coefficients() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 29, 41, 54]

    def test_lead24_additive_under_multiplication(self):
        a = EtaQuotient(12, ((12, 2), (6, -1)))
        b = EtaQuotient(8, ((8, 3), (2, 1)))
        assert (a * b).lead24 == a.lead24 + b.lead24

    def test_blowup_matches_rescaled_quotient(self):
        # substituting q -> q^4 in the 9-regular series gives the (36, 4) quotient
        eq = EtaQuotient(9, ((9, 1), (1, -1)))
        _, b9 = eta_expansion(eq, 11)
        blown = b9.substitute_power(4)
        eq4 = EtaQuotient(36, ((36, 1), (4, -1)))
        _, direct = eta_expansion(eq4, 41)
        assert blown.agrees_with(direct)


class TestEtaText:
    def test_round_trip(self):
        eq = parse_eta_quotient("27: 9^1 * 1^63")
        assert eq == EVENNESS_QUOTIENT
        assert parse_eta_quotient(eq.text()) == eq

    def test_implicit_exponent(self):
        assert parse_eta_quotient("9: 9").exponents == ((9, 1),)

    def test_negative_exponents(self):
        eq = parse_eta_quotient("216: 12^3 * 2^-2")
        assert dict(eq.exponents) == {12: 3, 2: -2}

    def test_errors_carry_positions(self):
        with pytest.raises(EtaTextParseError):
            parse_eta_quotient("no colon here")
        with pytest.raises(EtaTextParseError):
            parse_eta_quotient("27: 5^1")  # 5 does not divide 27
        with pytest.raises(EtaTextParseError):
            parse_eta_quotient("x: 1^24")


# ---------------------------------------------------------------------------
# Hecke operators
# ---------------------------------------------------------------------------

class TestHecke:
    def test_small_example_over_z(self):
        f = TruncSeries([1], ZZ, valuation=2, precision=10)
        out = hecke_tp(f, 2, 2, 1)
        assert out.coefficients() == [0, 1, 0, 0, 2]

    def test_mod_two_fast_mode_drops_second_term(self):
        f = TruncSeries([1], Zmod(2), valuation=2, precision=10)
        out = hecke_tp(f, 2, 32, 1)
        assert out.coefficients() == [0, 1, 0, 0, 0]

    def test_modular_ring_other_than_p_keeps_second_term(self):
        f = TruncSeries([1], Zmod(6), valuation=2, precision=10)
        out = hecke_tp(f, 2, 2, 1)
        assert out.coefficients() == [0, 1, 0, 0, 2]

    def test_chi_zero_drops_second_term(self):
        f = TruncSeries([1], ZZ, valuation=2, precision=10)
        out = hecke_tp(f, 2, 2, 0)
        assert out.coefficients() == [0, 1, 0, 0, 0]

    def test_composite_p_rejected(self):
        f = TruncSeries([1], ZZ, precision=10)
        with pytest.raises(ValueError):
            hecke_tp(f, 6, 2, 1)

    def test_zero_weight_rejected(self):
        f = TruncSeries([1], ZZ, precision=10)
        with pytest.raises(ValueError):
            hecke_tp(f, 2, 0, 1)

    def test_output_precision_is_floor(self):
        f = TruncSeries([1] * 11, ZZ)
        assert hecke_tp(f, 3, 2, 1).precision == 3

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("weight", [2, 3])
    def test_factorization_property(self, p, weight):
        # (f(q) * g(q^p)) | T_p  =  (sum a(pn) q^n) * g(q)   mod p
        rng = random.Random(100 * p + weight)
        ring = Zmod(p)
        for _ in range(6):
            f = TruncSeries([rng.randrange(p) for _ in range(60 * p)], ring)
            g = TruncSeries([rng.randrange(p) for _ in range(60)], ring)
            lhs = hecke_tp(f * g.substitute_power(p), p, weight, 1)
            rhs = f.extract_progression(p, 0) * g
            assert lhs.agrees_with(rhs)


class TestSturmCompare:
    def test_equal_series_pass(self):
        f = euler_factor(1, 1, 100)
        report = sturm_compare(f, f, 2, 36, 5)
        assert report.status == Status.PASS
        assert report.details["sturm_bound"] == sturm_bound(2, 36)

    def test_corruption_exactly_at_bound_is_caught(self):
        bound = sturm_bound(2, 36)  # 12
        f = TruncSeries([1] * 80, ZZ)
        g = f + TruncSeries.monomial(1, bound, 80, ZZ)
        report = sturm_compare(f, g, 2, 36, 5)
        assert report.status == Status.FAIL
        assert report.counterexamples[0][0] == bound

    def test_insufficient_precision_raises(self):
        f = TruncSeries([1] * 10, ZZ)
        with pytest.raises(InsufficientPrecisionError):
            sturm_compare(f, f, 2, 216, 5)

    def test_identity_sides_at_weight_two(self):
        # the two sides of the eta-quotient identity, aligned, mod 5
        from regulus import expand_product, ProductSpec
        P = 80
        sides = []
        for spec, shift, scale in [
            (ProductSpec(((9, 9, 1), (4, 4, 4), (1, 1, -1))), 1, 1),
        ]:
            sides.append(expand_product(spec, P).shift(shift).scale(scale))
        lhs = sides[0]
        t1 = expand_product(ProductSpec(((12, 12, 3), (18, 18, 1), (4, 4, 4),
                                         (2, 2, -2), (6, 6, -1), (36, 36, -1))), P).shift(1)
        t2 = expand_product(ProductSpec(((8, 8, 6), (36, 36, 1), (12, 12, 2),
                                         (4, 4, -3), (24, 24, -2))), P).shift(2)
        t3 = expand_product(ProductSpec(((8, 8, 2), (36, 36, 1), (24, 24, 2),
                                         (4, 4, -1))), P).shift(4).scale(3)
        rhs = t1 + t2 + t3
        report = sturm_compare(lhs, rhs, 2, 216, 5)
        assert report.status == Status.PASS
        assert report.checked_through == 72
