from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from mackit.coeff import (
    ONE,
    ZERO,
    CyclotomicScalar,
    PolyQT,
    RationalFunctionQT,
    cyclotomic,
    euler_phi,
    poly_arith,
    q,
    ratfun_arith,
    reduce_mod_cyclotomic,
    t,
)
from mackit.errors import DivisionByZero, NonInvertibleDenominator

from oracles import Q, T, from_sympy, to_sympy


def R(x) -> RationalFunctionQT:
    return RationalFunctionQT(x)


# --- strategies -------------------------------------------------------------

small_coeff = st.integers(-3, 3)
term_maps = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), small_coeff, max_size=4)
polys = term_maps.map(PolyQT)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuns = st.builds(lambda n, d: RationalFunctionQT(n, d), polys, nonzero_polys)


def evaluate(f: RationalFunctionQT, qv, tv) -> complex:
    def ev(p: PolyQT):
        return sum(complex(c) * qv ** a * tv ** b for (a, b), c in p.terms().items())

    return ev(f.numerator) / ev(f.denominator)


# --- PolyQT -----------------------------------------------------------------


def test_poly_difference_of_squares():
    assert poly_arith(1 - t, 1 + t, "mul") == 1 - t ** 2


def test_poly_additive_identity():
    a = PolyQT({(1, 2): 3, (0, 0): -1})
    assert poly_arith(a, PolyQT(), "add") == a


def test_poly_expansion_matches_term_by_term_oracle():
    got = (1 - q * t) * (1 - q)
    expected = sympy.Poly(sympy.expand((1 - Q * T) * (1 - Q)), Q, T)
    assert got.terms() == {m: Fraction(int(c)) for m, c in zip(expected.monoms(), expected.coeffs())}
    assert got == PolyQT({(0, 0): 1, (1, 0): -1, (1, 1): -1, (2, 1): 1})


def test_poly_rejects_negative_exponents():
    with pytest.raises(ValueError):
        PolyQT({(-1, 0): 1})


def test_poly_records_round_trip_and_sorting():
    p = 3 * q ** 2 * t - Fraction(1, 2) * t + 7
    recs = p.to_records()
    assert recs == sorted(recs, key=lambda r: (r["qexp"], r["texp"]))
    assert recs[0] == {"qexp": 0, "texp": 0, "num": 7, "den": 1}
    assert PolyQT.from_records(recs) == p


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(polys, polys)
def test_poly_canonical_form(a, b):
    assert ((a - b).is_zero()) == (a.terms() == b.terms())
    assert all(c != 0 for c in a.terms().values())


# --- RationalFunctionQT ------------------------------------------------------


def test_ratfun_factor_cancellation():
    a = RationalFunctionQT(1 - q ** 2, 1 - t ** 2)
    b = RationalFunctionQT(1 - q, 1 - t)
    assert ratfun_arith(a, b, "div") == RationalFunctionQT(1 + q, 1 + t)


def test_ratfun_self_difference_is_zero():
    x = RationalFunctionQT(1 + q * t, 1 - q)
    assert ratfun_arith(x, x, "sub").is_zero()


def test_ratfun_common_denominator():
    got = RationalFunctionQT(1, 1 - t) + RationalFunctionQT(1, 1 + t)
    assert got == RationalFunctionQT(2, 1 - t ** 2)


def test_ratfun_division_by_zero():
    with pytest.raises(DivisionByZero):
        R(1 + q) / ZERO
    with pytest.raises(ZeroDivisionError):
        RationalFunctionQT(1, 0)


def test_ratfun_denominator_normalization():
    f = RationalFunctionQT(2 * q, -4 * t + 6 * q)
    den = f.denominator
    _, c = max(den.terms().items())
    assert c > 0
    assert den.content() == 1
    assert all(x.denominator == 1 for x in den.terms().values())
    assert sympy.simplify(to_sympy(f) - 2 * Q / (6 * Q - 4 * T)) == 0


@given(ratfuns, ratfuns, ratfuns)
def test_ratfun_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == ONE


@given(ratfuns)
def test_ratfun_is_reduced(f):
    n, d = to_sympy(f).as_numer_denom()
    assert sympy.gcd(sympy.expand(n), sympy.expand(d)).is_number


@given(ratfuns, ratfuns)
def test_ratfun_matches_sympy(a, b):
    assert from_sympy(to_sympy(a) * to_sympy(b)) == a * b
    assert from_sympy(to_sympy(a) + to_sympy(b)) == a + b


@given(ratfuns)
def test_ratfun_json_round_trip(f):
    assert RationalFunctionQT.from_json(f.to_json()) == f


def test_ratfun_frobenius_and_invert_t():
    f = RationalFunctionQT(1 - q * t, 1 - t)
    assert f.frobenius(2) == RationalFunctionQT(1 - q ** 2 * t ** 2, 1 - t ** 2)
    # (1 - q/t) / (1 - 1/t) = (t - q) / (t - 1)
    assert f.invert_t() == RationalFunctionQT(t - q, t - 1)


def test_lincomb_agrees_with_repeated_addition():
    items = [RationalFunctionQT(1 + q, 1 - t ** k) for k in range(1, 6)]
    coeffs = [Fraction(k, 3) for k in range(1, 6)]
    expected = ZERO
    for c, f in zip(coeffs, items):
        expected = expected + f * c
    assert RationalFunctionQT.lincomb(zip(coeffs, items)) == expected


# --- cyclotomic polynomials -------------------------------------------------


def test_small_cyclotomics():
    assert cyclotomic(1) == t - 1
    assert cyclotomic(3) == t ** 2 + t + 1
    assert cyclotomic(4) == t ** 2 + 1


@pytest.mark.parametrize("l", range(1, 25))
def test_product_of_cyclotomics(l):
    prod = PolyQT(1)
    for d in range(1, l + 1):
        if l % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == t ** l - 1


@pytest.mark.parametrize("l", range(1, 25))
def test_cyclotomic_matches_sympy(l):
    ref = sympy.Poly(sympy.cyclotomic_poly(l, T), T)
    assert cyclotomic(l).terms() == {(0, m[0]): Fraction(int(c)) for m, c in zip(ref.monoms(), ref.coeffs())}
    assert cyclotomic(l).degree("t") == euler_phi(l)


# --- cyclotomic quotient ----------------------------------------------------


def test_reduce_one_step():
    assert reduce_mod_cyclotomic(R(t ** 2), 3) == CyclotomicScalar(3, -t - 1)


def test_reduce_geometric_sum_mod_phi4():
    x = reduce_mod_cyclotomic(RationalFunctionQT(1 - t ** 3, 1 - t), 4)
    # 1 + t + t^2 with t^2 = -1
    assert x.to_ratfun() == R(t)


def test_inverse_of_one_minus_t_mod_phi3():
    x = reduce_mod_cyclotomic(RationalFunctionQT(1, 1 - t), 3)
    assert x.to_ratfun() == RationalFunctionQT(2 + t, 3)
    assert x * CyclotomicScalar(3, 1 - t) == CyclotomicScalar(3, 1)


def test_non_invertible_denominator():
    with pytest.raises(NonInvertibleDenominator) as info:
        reduce_mod_cyclotomic(RationalFunctionQT(1, 1 - t ** 3), 3)
    assert info.value.order == 3
    # divisible by Phi_1 and Phi_3 only; fine modulo Phi_2
    reduce_mod_cyclotomic(RationalFunctionQT(1, 1 - t ** 3), 2)


def test_residue_degree_bound():
    for l in (2, 3, 5, 6, 12):
        x = reduce_mod_cyclotomic(R((1 + q * t) ** 9), l)
        assert x.to_ratfun().numerator.degree("t") < euler_phi(l)
        assert len(x.t_coefficients()) == euler_phi(l)


orders = st.sampled_from([2, 3, 4, 5, 6, 8])


def coprime_to_phi(f: RationalFunctionQT, l: int) -> bool:
    try:
        reduce_mod_cyclotomic(f, l)
    except NonInvertibleDenominator:
        return False
    return True


@given(ratfuns, ratfuns, orders)
def test_reduction_is_a_ring_homomorphism(a, b, l):
    assume(coprime_to_phi(a, l) and coprime_to_phi(b, l))
    ra, rb = reduce_mod_cyclotomic(a, l), reduce_mod_cyclotomic(b, l)
    assert reduce_mod_cyclotomic(a + b, l) == ra + rb
    assert reduce_mod_cyclotomic(a * b, l) == ra * rb


@given(ratfuns, orders)
def test_cyclotomic_inverse(a, l):
    assume(coprime_to_phi(a, l))
    x = reduce_mod_cyclotomic(a, l)
    assume(not x.is_zero())
    assert x * x.inverse() == CyclotomicScalar(l, 1)


@given(ratfuns, orders, st.fractions(min_value=-2, max_value=2, max_denominator=5))
def test_reduction_matches_numeric_evaluation(f, l, qv):
    """Test-only float oracle: the residue and f agree at q = qv, t = each primitive root."""
    assume(coprime_to_phi(f, l))
    x = reduce_mod_cyclotomic(f, l).to_ratfun()
    for k in range(1, l + 1):
        if sympy.gcd(k, l) != 1:
            continue
        z = cmath.exp(2j * cmath.pi * k / l)
        try:
            lhs = evaluate(f, float(qv), z)
            rhs = evaluate(x, float(qv), z)
        except ZeroDivisionError:
            continue
        assert abs(lhs - rhs) < 1e-6 * max(1.0, abs(lhs))


@given(ratfuns, ratfuns, orders)
def test_cyclotomic_canonical_form(a, b, l):
    assume(coprime_to_phi(a, l) and coprime_to_phi(b, l))
    x, y = reduce_mod_cyclotomic(a, l), reduce_mod_cyclotomic(b, l)
    assert (x - y).is_zero() == (x.to_ratfun() == y.to_ratfun())
