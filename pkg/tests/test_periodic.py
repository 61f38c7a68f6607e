"""Tests for periodic functions: DFT/IDFT, inner product, Cauchy products."""

import cmath
import random
from fractions import Fraction
from math import gcd, pi

import pytest

from ramfourier import (
    DomainError,
    PeriodicSpectrum,
    ResidueFunction,
    cauchy_product,
    cauchy_product_spectral,
    dft,
    divisors,
    even_witness,
    idft,
    inner_product_periodic,
    is_even,
    ramanujan_row,
    ramanujan_sum,
)


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol


def random_complex_function(r, rng):
    return ResidueFunction(
        r, tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(r))
    )


class TestResidueFunction:
    def test_length_must_match_modulus(self):
        with pytest.raises(DomainError):
            ResidueFunction(3, (1, 2))
        with pytest.raises(DomainError):
            ResidueFunction(0, ())

    def test_periodic_evaluation(self):
        f = ResidueFunction(4, (10, 20, 30, 40))
        assert f(1) == 10 and f(4) == 40
        assert f(5) == 10 and f(8) == 40
        for n in range(1, 9):
            assert f(n) == f(n + 4)

    def test_exactness_flag(self):
        assert ResidueFunction(2, (1, Fraction(1, 3))).is_exact
        assert not ResidueFunction(2, (1, 0.5)).is_exact


class TestDft:
    def test_constant(self):
        spectrum = dft(ResidueFunction(4, (1, 1, 1, 1)))
        expected = (0, 0, 0, 4)
        for got, want in zip(spectrum.coeffs, expected):
            assert close(got, want, 1e-12)

    def test_indicator(self):
        spectrum = dft(ResidueFunction(4, (1, 0, 0, 0)))
        expected = (-1j, -1, 1j, 1)
        for got, want in zip(spectrum.coeffs, expected):
            assert close(got, want, 1e-12)

    def test_single_point(self):
        spectrum = dft(ResidueFunction(1, (3.5,)))
        assert close(spectrum.coeffs[0], 3.5, 1e-15)


class TestIdft:
    def test_constant_spectrum(self):
        f = idft(PeriodicSpectrum(4, (0, 0, 0, 4)))
        for v in f.values:
            assert close(v, 1, 1e-12)

    def test_roundtrip_small(self):
        f = ResidueFunction(4, (1, 5, -2, 3))
        back = idft(dft(f))
        for got, want in zip(back.values, f.values):
            assert close(got, want, 1e-12)

    def test_single_point(self):
        f = idft(PeriodicSpectrum(1, (2 + 1j,)))
        assert close(f.values[0], 2 + 1j, 1e-15)

    def test_roundtrip_random(self):
        rng = random.Random(11)
        for r in range(1, 33):
            f = random_complex_function(r, rng)
            back = idft(dft(f))
            assert max(abs(a - b) for a, b in zip(back.values, f.values)) <= 1e-9


def test_dft_injective_via_linearity():
    rng = random.Random(5)
    for r in (3, 8, 17):
        f = random_complex_function(r, rng)
        g = random_complex_function(r, rng)
        delta = ResidueFunction(r, tuple(a - b for a, b in zip(f.values, g.values)))
        sf, sg, sd = dft(f), dft(g), dft(delta)
        for a, b, d in zip(sf.coeffs, sg.coeffs, sd.coeffs):
            assert close(a - b, d, 1e-9)
        # f != g, so by the exact inversion the difference spectrum cannot vanish.
        assert max(abs(c) for c in sd.coeffs) > 1e-6


class TestInnerProduct:
    def test_normalized_exponentials_are_orthonormal(self):
        r = 6
        scale = r**-0.5
        basis = [
            ResidueFunction(
                r, tuple(scale * cmath.exp(2j * pi * k * n / r) for n in range(1, r + 1))
            )
            for k in range(1, r + 1)
        ]
        for i, f in enumerate(basis):
            for j, g in enumerate(basis):
                want = 1 if i == j else 0
                assert close(inner_product_periodic(f, g), want, 1e-12)

    def test_positive_definite(self):
        f = ResidueFunction(3, (Fraction(1, 2), -2, 3))
        assert inner_product_periodic(f, f) == Fraction(1, 4) + 4 + 9
        zero = ResidueFunction(3, (0, 0, 0))
        assert inner_product_periodic(zero, zero) == 0

    def test_constant_with_itself(self):
        for r in (1, 5, 12):
            ones = ResidueFunction(r, (1,) * r)
            assert inner_product_periodic(ones, ones) == r

    def test_conjugate_linear_in_second_argument(self):
        rng = random.Random(2)
        f = random_complex_function(5, rng)
        g = random_complex_function(5, rng)
        c = 2 + 1j
        cg = ResidueFunction(5, tuple(c * v for v in g.values))
        lhs = inner_product_periodic(f, cg)
        rhs = c.conjugate() * inner_product_periodic(f, g)
        assert close(lhs, rhs, 1e-12)

    def test_modulus_mismatch(self):
        with pytest.raises(DomainError):
            inner_product_periodic(
                ResidueFunction(2, (1, 1)), ResidueFunction(3, (1, 1, 1))
            )


class TestCauchyProduct:
    def test_indicator_translation(self):
        f = ResidueFunction(4, (1, 0, 0, 0))
        g = ResidueFunction(4, (0, 1, 0, 0))
        assert cauchy_product(f, g).values == (0, 0, 1, 0)

    def test_ramanujan_row_squares_to_scaled_row(self):
        row = ResidueFunction(4, tuple(ramanujan_row(2, 4)))
        assert row.values == (-1, 1, -1, 1)
        assert cauchy_product(row, row).values == (-4, 4, -4, 4)

    def test_constants(self):
        ones = ResidueFunction(3, (1, 1, 1))
        assert cauchy_product(ones, ones).values == (3, 3, 3)

    def test_exact_values_stay_exact(self):
        f = ResidueFunction(3, (Fraction(1, 2), 1, Fraction(-1, 3)))
        h = cauchy_product(f, f)
        assert h.is_exact

    def test_modulus_mismatch(self):
        with pytest.raises(DomainError):
            cauchy_product(ResidueFunction(2, (1, 1)), ResidueFunction(3, (1, 1, 1)))


class TestCauchyProductSpectral:
    def test_agrees_with_naive(self):
        cases = [
            (ResidueFunction(4, (1, 0, 0, 0)), ResidueFunction(4, (0, 1, 0, 0))),
            (
                ResidueFunction(4, tuple(ramanujan_row(2, 4))),
                ResidueFunction(4, tuple(ramanujan_row(2, 4))),
            ),
            (ResidueFunction(3, (1, 1, 1)), ResidueFunction(3, (1, 1, 1))),
        ]
        for f, g in cases:
            naive = cauchy_product(f, g)
            spectral = cauchy_product_spectral(f, g)
            assert max(abs(a - b) for a, b in zip(naive.values, spectral.values)) <= 1e-9

    def test_agrees_with_naive_random(self):
        rng = random.Random(23)
        for r in (1, 2, 7, 16, 33):
            f = random_complex_function(r, rng)
            g = random_complex_function(r, rng)
            naive = cauchy_product(f, g)
            spectral = cauchy_product_spectral(f, g)
            assert max(abs(a - b) for a, b in zip(naive.values, spectral.values)) <= 1e-9

    def test_identity_element(self):
        # The inverse transform of the all-ones spectrum is the indicator of
        # n = 0 mod r, the unit of the Cauchy product.
        rng = random.Random(9)
        r = 6
        unit = idft(PeriodicSpectrum(r, (1,) * r))
        f = random_complex_function(r, rng)
        h = cauchy_product(f, unit)
        assert max(abs(a - b) for a, b in zip(h.values, f.values)) <= 1e-9

    def test_single_point(self):
        f = ResidueFunction(1, (2.0,))
        g = ResidueFunction(1, (3.0,))
        assert close(cauchy_product_spectral(f, g).values[0], 6.0, 1e-12)


def test_exponential_kernel_identity():
    # sum over a+b = n of e_k(a) e_j(b) is r e_k(n) when k = j, else 0.
    for r in range(1, 31):
        roots = [cmath.exp(2j * pi * (m / r)) for m in range(r)]
        rows = [[roots[(k * a) % r] for a in range(r)] for k in range(1, r + 1)]
        for ki in range(r):
            rk = rows[ki]
            for ji in range(r):
                rj = rows[ji]
                for n in range(1, r + 1):
                    total = sum(rk[a % r] * rj[(n - a) % r] for a in range(1, r + 1))
                    want = r * rk[n % r] if ki == ji else 0
                    assert abs(total - want) <= 1e-9


class TestIsEven:
    def test_gcd_function_is_even(self):
        f = ResidueFunction.from_callable(6, lambda n: gcd(n, 6))
        assert is_even(f)

    def test_identity_is_not_even(self):
        f = ResidueFunction(3, (1, 2, 3))
        assert not is_even(f)
        assert even_witness(f) == 2

    def test_ramanujan_rows_are_even(self):
        for d in divisors(12):
            row = ResidueFunction(12, tuple(ramanujan_sum(n, d) for n in range(1, 13)))
            assert is_even(row)

    def test_floating_tolerance(self):
        f = ResidueFunction(4, (1.0, 2.0, 1.0 + 1e-15, 4.0))
        assert is_even(f)
        assert not is_even(f, tol=1e-16)

    def test_even_implies_periodic(self):
        f = ResidueFunction.from_callable(8, lambda n: gcd(n, 8) ** 2)
        assert is_even(f)
        for n in range(1, 17):
            assert f(n) == f(n + 8)
