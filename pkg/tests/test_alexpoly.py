import json

import pytest
import sympy
from hypothesis import given, strategies as st

from dsplit.alexpoly import (
    IntLaurentPoly,
    T,
    cyclotomic,
    cyclotomic_split,
    homology_order,
    is_prime,
    pretzel_alexander,
    torus2_alexander,
)

ODD_PRIMES = [p for p in range(3, 60) if is_prime(p)]
PRIME_PAIRS = [(p, q) for p in ODD_PRIMES for q in ODD_PRIMES if p < q and p * q <= 105]


def P(coeffs):
    """Dense ascending coefficient list -> polynomial."""
    return IntLaurentPoly({e: c for e, c in enumerate(coeffs)})


def sympy_cyclotomic(n):
    x = sympy.Symbol("x")
    coeffs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
    return P([int(c) for c in reversed(coeffs)])


polys = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=6).map(IntLaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestArithmetic:
    def test_zero_coefficients_dropped(self):
        assert IntLaurentPoly({0: 1, 3: 0}).terms == ((0, 1),)

    def test_str(self):
        assert str(P([1, -1, 1])) == "t^2 - t + 1"
        assert str(IntLaurentPoly()) == "0"
        assert str(IntLaurentPoly({-2: 3, 1: -1})) == "-t + 3t^-2"

    def test_json_format(self):
        assert json.loads(P([1, -1, 1]).to_json()) == [[0, 1], [1, -1], [2, 1]]

    @given(polys)
    def test_json_roundtrip(self, p):
        assert IntLaurentPoly.from_json(p.to_json()) == p

    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a

    @given(polys, nonzero_polys)
    def test_exact_div_inverts_mul(self, a, b):
        if abs(b.leading_coefficient()) == 1:
            assert (a * b).exact_div(b) == a

    @given(polys, nonzero_polys)
    def test_divmod_reconstructs(self, a, b):
        if abs(b.leading_coefficient()) != 1:
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        if not r.is_zero():
            assert a.min_degree <= r.min_degree
            assert r.degree - a.min_degree < b.span

    def test_inexact_division_raises(self):
        with pytest.raises(ArithmeticError):
            (T**2 + 1).exact_div(T + 1)

    def test_big_coefficients_exact(self):
        big = (T + 1) ** 200
        assert big.coeff(100) == sympy.binomial(200, 100)
        assert big(1) == 2**200

    def test_equivalent_up_to_units(self):
        p = P([1, -1, 1])
        assert p.equivalent(-p.shift(-3))
        assert not p.equivalent(P([1, 1, 1]))

    def test_normalized(self):
        assert IntLaurentPoly({-2: 1, 0: 1}).normalized() == P([1, 0, 1])


class TestCyclotomic:
    def test_examples(self):
        assert cyclotomic(2) == T + 1
        assert cyclotomic(6) == T**2 - T + 1
        assert cyclotomic(30)(-1) == 1

    @pytest.mark.parametrize("n", range(1, 61))
    def test_matches_sympy(self, n):
        assert cyclotomic(n) == sympy_cyclotomic(n)

    @pytest.mark.parametrize("n", range(1, 61))
    def test_product_over_divisors(self, n):
        prod = IntLaurentPoly.constant(1)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == T**n - 1

    @pytest.mark.parametrize("bad", [0, -3])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ValueError):
            cyclotomic(bad)


class TestAlexander:
    def test_torus_examples(self):
        assert torus2_alexander(3) == T**2 - T + 1
        assert torus2_alexander(1) == IntLaurentPoly.constant(1)
        assert torus2_alexander(15)(-1) == 15

    def test_torus_closed_form(self):
        # t^(n-1) - t^(n-2) + ... + 1
        for n in range(1, 40, 2):
            assert torus2_alexander(n) == P([(-1) ** k for k in range(n)])

    @pytest.mark.parametrize("n", [2, 4, 0, -1])
    def test_rejects_even_or_nonpositive(self, n):
        with pytest.raises(ValueError):
            torus2_alexander(n)
        with pytest.raises(ValueError):
            pretzel_alexander(n)

    def test_pretzel_examples(self):
        assert pretzel_alexander(3) == (T**2 - T + 1) ** 2
        assert pretzel_alexander(1) == IntLaurentPoly.constant(1)
        assert pretzel_alexander(15)(-1) == 225

    @pytest.mark.parametrize("n", range(1, 32, 2))
    def test_pretzel_symmetric_and_determinant(self, n):
        d = pretzel_alexander(n)
        assert d.is_symmetric()
        assert homology_order(d) == n * n

    def test_homology_order(self):
        assert homology_order(IntLaurentPoly.constant(1)) == 1
        assert homology_order(pretzel_alexander(21)) == 441


class TestCyclotomicSplit:
    def test_3_5(self):
        f = cyclotomic_split(3, 5)
        assert f[0] * f[1] * f[2] == torus2_alexander(15)
        assert tuple(x(-1) for x in f) == (3, 5, 1)

    def test_3_7(self):
        f = cyclotomic_split(3, 7)
        assert f[0] * f[1] * f[2] == torus2_alexander(21)

    @pytest.mark.parametrize("p,q", PRIME_PAIRS)
    def test_identity_all_pairs(self, p, q):
        a, b, c = cyclotomic_split(p, q)
        assert a * b * c == torus2_alexander(p * q)
        assert (a(-1), b(-1), c(-1)) == (p, q, 1)

    def test_square_of_split_is_pretzel(self):
        a, b, c = cyclotomic_split(3, 5)
        assert (a * b * c) ** 2 == pretzel_alexander(15)

    @pytest.mark.parametrize("p,q", [(3, 3), (3, 9), (2, 5), (1, 5), (15, 7)])
    def test_rejects(self, p, q):
        with pytest.raises(ValueError):
            cyclotomic_split(p, q)
