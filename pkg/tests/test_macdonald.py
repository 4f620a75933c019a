from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

import pytest
import sympy

from mackit import macdonald
from mackit.coeff import ONE, RationalFunctionQT, q, t
from mackit.errors import NotAHorizontalStrip, WeightMismatch
from mackit.macdonald import (
    KostkaMatrix,
    b_cell,
    clear_cache,
    family,
    green_polynomial,
    integral_constants,
    kostka,
    macdonald_Htilde,
    macdonald_J,
    macdonald_K_generating,
    macdonald_norm,
    macdonald_P,
    macdonald_Q,
    macdonald_Qprime,
    pieri_Psi,
    pieri_psi,
)
from mackit.partitions import Cell, Partition, conjugate, dominance_leq, horizontal_strips, partitions
from mackit.roots import specialize_at_root
from mackit.symfun import SymFunc, convert, h, inner_hall, inner_qt, m, one, p, s, transform_alphabet

from oracles import (
    T,
    expansion_by_linear_solve,
    from_sympy,
    kostka_foulkes,
    macdonald_P_linear_solve,
    mn_character,
    parts_of,
    to_sympy,
)

R = RationalFunctionQT


# --- P and its oracle -------------------------------------------------------


def test_P_examples():
    assert macdonald_P([1]) == m([1])
    assert macdonald_P([1, 1]) == m([1, 1])
    assert macdonald_P([2]) == m([2]) + m([1, 1]) * R((1 + q) * (1 - t), 1 - q * t)


@pytest.mark.parametrize("lam", [(2,), (1, 1), (3,), (2, 1), (1, 1, 1), (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
def test_P_matches_linear_solve_oracle(lam):
    expected = {Partition(mu): from_sympy(v) for mu, v in macdonald_P_linear_solve(lam).items()}
    got = macdonald_P(lam)
    assert dict(got.items()) == {k: v for k, v in expected.items() if not v.is_zero()}


@pytest.mark.parametrize("n", range(1, 7))
def test_P_is_unitriangular_and_orthogonal(n):
    ps = partitions(n)
    Ps = {lam: macdonald_P(lam) for lam in ps}
    for lam in ps:
        assert Ps[lam][lam] == ONE
        assert all(dominance_leq(mu, lam) for mu in Ps[lam].support())
    for i, a in enumerate(ps):
        for b in ps[i + 1:]:
            assert inner_qt(Ps[a], Ps[b]).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_duality_with_Q_and_Qprime(n):
    ps = partitions(n)
    for a in ps:
        Pa = macdonald_P(a)
        for b in ps:
            want = 1 if a == b else 0
            assert inner_qt(Pa, macdonald_Q(b)) == want
            assert inner_hall(Pa, macdonald_Qprime(b)) == want


@pytest.mark.parametrize("n", range(1, 7))
def test_cauchy_identity_at_finite_degree(n):
    """sum_lam P_lam (x) Q'_lam (y) = sum_lam m_lam (x) h_lam (y), compared entry by entry."""
    ps = partitions(n)
    A = {lam: macdonald_P(lam) for lam in ps}                       # m-coordinates
    B = {lam: convert(macdonald_Qprime(lam), "h") for lam in ps}    # h-coordinates
    for alpha in ps:
        for beta in ps:
            total = RationalFunctionQT.sum(A[lam][alpha] * B[lam][beta] for lam in ps)
            assert total == (1 if alpha == beta else 0)


def test_Q_and_Qprime_examples():
    assert macdonald_Q([1]) == m([1]) * R(1 - t, 1 - q)
    assert macdonald_Qprime([1]) == s([1])
    assert macdonald_Qprime([]) == one()
    assert macdonald_norm([1]) == R(1 - q, 1 - t)


# --- integral forms -----------------------------------------------------------


def test_integral_constants_examples():
    assert integral_constants([1]) == (R(1 - t), R(1 - q))
    assert integral_constants([2]) == (R((1 - q * t) * (1 - t)), R((1 - q ** 2) * (1 - q)))
    assert integral_constants([1, 1]) == (R((1 - t ** 2) * (1 - t)), R((1 - q * t) * (1 - q)))


@pytest.mark.parametrize("n", range(1, 7))
def test_integral_form_two_ways(n):
    for mu in partitions(n):
        c, cp = integral_constants(mu)
        assert macdonald_P(mu).scale(c) == macdonald_Q(mu).scale(cp) == macdonald_J(mu)


# --- H~ and the Kostka variants ----------------------------------------------


def test_Htilde_small():
    assert macdonald_Htilde([1]) == s([1])
    assert macdonald_Htilde([2]) == s([2]) + s([1, 1]) * R(q)
    assert macdonald_Htilde([1, 1]) == s([2]) + s([1, 1]) * R(t)


def test_Htilde_from_its_definition_with_sympy():
    """t^{n(mu)} J_mu(x/(1 - 1/t); q, 1/t) computed symbolically for mu = (2, 1)."""
    mu = (2, 1)
    jp = convert(macdonald_J(mu), "p")
    out = {}
    for rho, c in jp.items():
        expr = to_sympy(c).subs(T, 1 / T) * T  # n(2,1) = 1
        for k in rho:
            expr = expr / (1 - T ** (-k))
        out[rho] = from_sympy(sympy.simplify(expr))
    assert convert(SymFunc("p", out), "s") == macdonald_Htilde(mu)


@pytest.mark.parametrize("n", range(1, 6))
def test_Ktilde_entries_are_nonnegative_integer_polynomials(n):
    mat = kostka("Ktilde", n)
    for (lam, mu), v in mat.entries.items():
        assert v.is_polynomial()
        coeffs = v.as_poly().terms().values()
        assert all(c.denominator == 1 and c > 0 for c in coeffs)


@pytest.mark.parametrize("n", range(1, 6))
def test_Ktilde_at_one_counts_standard_tableaux(n):
    """K~_{lam mu}(1, 1) = f^lam = chi^lam(1^n), independent of mu."""
    for mu in partitions(n):
        col = macdonald_Htilde(mu)
        for lam in partitions(n):
            assert col[lam].substitute(q=1, t=1) == mn_character(tuple(lam), (1,) * n)
        total = inner_hall(col, p([1] * n)).substitute(q=1, t=1)
        assert total == factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_Htilde_q_t_symmetry(n):
    for mu in partitions(n):
        swapped = macdonald_Htilde(conjugate(mu)).map_coeffs(lambda c: c.substitute(q=t, t=q))
        assert macdonald_Htilde(mu) == swapped


@pytest.mark.parametrize("n", range(1, 6))
def test_K_entries_are_polynomials(n):
    mat = kostka("K", n)
    assert all(v.is_polynomial() for v in mat.entries.values())
    # K_{lam mu}(0, t) is the Kostka-Foulkes polynomial K_{lam mu}(t)
    for (lam, mu), v in mat.entries.items():
        ref = from_sympy(kostka_foulkes(tuple(lam), tuple(mu)))
        assert v.substitute(q=0) == ref


def test_K_generating_weight_two():
    assert macdonald_K_generating([2]) == s([2]) + s([1, 1]) * R(q)
    assert macdonald_K_generating([1, 1]) == s([2]) * R(t) + s([1, 1])


def test_kostka_matrix_orientation_and_json():
    mat = kostka("Ktilde", 2)
    # rows lam, columns mu, both (2), (1,1)
    assert mat.matrix() == [[ONE, ONE], [R(q), R(t)]]
    data = mat.to_json()
    assert data["rows"] == [[2], [1, 1]] and data["cols"] == [[2], [1, 1]]
    assert KostkaMatrix.from_json(data).matrix() == mat.matrix()
    assert kostka("Kprime", 1).matrix() == [[ONE]]
    assert kostka("Ktilde", 1).matrix() == [[ONE]]


def test_kostka_matrix_at_root_json():
    mat = kostka("Ktilde", 3, at_root=2)
    back = KostkaMatrix.from_json(mat.to_json())
    assert back.root_order == 2 and back.matrix() == mat.matrix()


def test_kostka_bad_inputs():
    with pytest.raises(ValueError):
        kostka("Kbad", 2)
    with pytest.raises(ValueError):
        kostka("K", 0)
    with pytest.raises(ValueError):
        family("Z", [1])


# --- classical specializations ------------------------------------------------


@pytest.mark.parametrize("n", range(1, 6))
def test_P_at_q_equal_t_is_schur(n):
    for lam in partitions(n):
        specialized = macdonald_P(lam).map_coeffs(lambda c: c.substitute(q=t))
        assert specialized == s(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_P_at_q_zero_is_hall_littlewood(n):
    """s_lam = sum_mu K_{lam mu}(t) P_mu(x; 0, t) with charge-computed Kostka-Foulkes polynomials."""
    ps = partitions(n)
    hl = {mu: macdonald_P(mu).map_coeffs(lambda c: c.substitute(q=0)) for mu in ps}
    for lam in ps:
        total = SymFunc("m", {})
        for mu in ps:
            kf = from_sympy(kostka_foulkes(tuple(lam), tuple(mu)))
            if not kf.is_zero():
                total = total + hl[mu].scale(kf)
        assert total == s(lam)


# --- Green polynomials --------------------------------------------------------


def test_green_examples():
    assert green_polynomial([1], [1]) == 1
    assert green_polynomial([2], [1, 1]) == R(1 + q)
    with pytest.raises(WeightMismatch):
        green_polynomial([2], [1])


@pytest.mark.parametrize("n", range(1, 6))
def test_green_polynomial_is_character_sum(n):
    for mu in partitions(n):
        col = macdonald_Htilde(mu)
        for rho in parts_of(n):
            expected = RationalFunctionQT.sum(col[lam] * mn_character(tuple(lam), rho) for lam in partitions(n))
            assert green_polynomial(mu, rho) == expected


# --- Pieri coefficients --------------------------------------------------------


def test_pieri_examples():
    assert pieri_psi([2, 1], [2, 1]) == ONE
    assert pieri_psi([2], [1]) == R((1 - t) * (1 + q), 1 - q * t)
    with pytest.raises(NotAHorizontalStrip):
        pieri_psi([1, 1], [])
    assert b_cell(Partition([1]), Cell(1, 2)) == ONE
    assert b_cell(Partition([2]), Cell(1, 1)) == R(1 - q * t, 1 - q ** 2)


PIERI_CASES = [(mu, r) for n in range(0, 5) for mu in partitions(n) for r in range(1, 6 - n)]


@pytest.mark.parametrize("mu,r", PIERI_CASES, ids=lambda x: str(x))
def test_pieri_matches_linear_solve(mu, r):
    n = sum(mu) + r
    basis = {lam: macdonald_Qprime(lam) for lam in partitions(n)}
    coeffs = expansion_by_linear_solve(macdonald_Qprime(mu) * h([r]), basis)
    for lam, c in coeffs.items():
        want = pieri_psi(lam, mu) if lam in horizontal_strips(mu, r) else 0
        assert c == want


@pytest.mark.parametrize("mu,r", [((1,), 1), ((2,), 1), ((1, 1), 2), ((2, 1), 1), ((2, 1), 2)])
def test_integral_pieri_matches_linear_solve(mu, r):
    """J_mu(x/(1-t)) h_r(x/(1-q)) = sum Psi_{lam/mu} J_lam(x/(1-t))."""
    n = sum(mu) + r
    basis = {lam: macdonald_K_generating(lam) for lam in partitions(n)}
    hq = transform_alphabet(convert(h([r]), "p"), "over_one_minus_v", "q")
    coeffs = expansion_by_linear_solve(macdonald_K_generating(mu) * hq, basis)
    for lam, c in coeffs.items():
        want = pieri_Psi(lam, mu) if lam in horizontal_strips(mu, r) else 0
        assert c == want


# --- caching ---------------------------------------------------------------------


def test_concurrent_cache_fill_is_consistent():
    clear_cache()
    results = []

    def work():
        results.append(macdonald_P([3, 2, 1]).to_json())

    threads = [threading.Thread(target=work) for _ in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(r == results[0] for r in results)
    clear_cache()
    assert macdonald_P([3, 2, 1]).to_json() == results[0]


def test_specialize_rectangle_column_at_root():
    col = specialize_at_root(macdonald_Qprime([2, 2, 2]), 3)
    assert col.is_t_free()
    assert col == s([6]) - s([5, 1]) + s([4, 1, 1]) + s([3, 3]) - s([3, 2, 1]) + s([2, 2, 2])


def test_family_lookup():
    assert family("P", [2]) == macdonald_P([2])
    assert set(macdonald.FAMILIES) == {"P", "Q", "Qprime", "J", "Htilde"}
    assert macdonald_Qprime([]).coefficient([]).as_fraction() == Fraction(1)
