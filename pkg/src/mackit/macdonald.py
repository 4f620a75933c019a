"""Macdonald polynomials and their Kostka coefficients.

P_lambda is built by Gram-Schmidt against the monomial basis: with all
P_mu for mu strictly below lambda in dominance already known,

    P_lambda = m_lambda - sum_mu <m_lambda, P_mu> / <P_mu, P_mu> * P_mu

under the (q, t) scalar product. The mu range over the dominance order ideal
below lambda, so only that ideal is ever computed. The other families are
derived from P:

* Q = P / <P, P>,  Q' = Q((1-q)x/(1-t)),  J = c_mu P
* H~_mu = t^{n(mu)} J_mu(x/(1-1/t); q, 1/t)
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache

from .coeff import ONE, RationalFunctionQT, q, t
from .errors import NonPolynomialResult, NotAHorizontalStrip, WeightMismatch
from .partitions import (
    Cell,
    Partition,
    cell_stats,
    dominance_leq,
    is_horizontal_strip,
    n_stat,
    partitions,
    strip_D_set,
)
from .symfun import Basis, SymFunc, convert, inner_hall, p, transform_alphabet, z_qt

__all__ = [
    "macdonald_P",
    "macdonald_Q",
    "macdonald_Qprime",
    "macdonald_J",
    "macdonald_Htilde",
    "macdonald_norm",
    "macdonald_K_generating",
    "kostka_column",
    "clear_cache",
    "integral_constants",
    "b_cell",
    "pieri_psi",
    "pieri_Psi",
    "green_polynomial",
    "kostka",
    "KostkaMatrix",
    "FAMILIES",
    "family",
]


def _part(lam) -> Partition:
    if isinstance(lam, int):
        return Partition((lam,)) if lam else Partition()
    return Partition(lam)


# ---------------------------------------------------------------------------
# P by Gram-Schmidt
# ---------------------------------------------------------------------------


@dataclass
class _PData:
    m_coeffs: dict          # monomial expansion
    weighted: dict          # rho -> P[p_rho] * z_rho(q, t)
    norm: RationalFunctionQT


_LOCK = threading.Lock()
_P_CACHE: dict[Partition, _PData] = {}


def _m_in_p(lam: Partition) -> dict:
    return convert(SymFunc._raw(Basis.m, {lam: ONE}), Basis.p)._c


def _pair_with(lam_p: dict, data: _PData) -> RationalFunctionQT:
    """<f, P_mu>_{q,t} where f has rational power-sum coefficients lam_p."""
    pairs = []
    for rho, c in lam_p.items():
        w = data.weighted.get(rho)
        if w is not None:
            pairs.append((c.as_fraction(), w))
    return RationalFunctionQT.lincomb(pairs)


def _below(lam: Partition) -> list[Partition]:
    """Partitions strictly below lam in dominance, largest first."""
    return [mu for mu in partitions(sum(lam)) if mu != lam and dominance_leq(mu, lam)]


def _compute_P(lam: Partition) -> _PData:
    lower = _below(lam)
    lam_p = _m_in_p(lam)
    coeffs: dict[Partition, list] = {lam: [ONE]}
    for mu in lower:
        d = _P(mu)
        c = _pair_with(lam_p, d) / d.norm
        if c.is_zero():
            continue
        for nu, v in d.m_coeffs.items():
            coeffs.setdefault(nu, []).append(-(c * v))
    m_coeffs = {}
    for nu, items in coeffs.items():
        v = items[0] if len(items) == 1 else RationalFunctionQT.sum(items)
        if not v.is_zero():
            m_coeffs[nu] = v
    pp = convert(SymFunc._raw(Basis.m, m_coeffs), Basis.p)._c
    weighted = {rho: c * z_qt(rho) for rho, c in pp.items()}
    data = _PData(m_coeffs, weighted, ONE)
    data.norm = _pair_with(lam_p, data)
    return data


def _P(lam: Partition) -> _PData:
    data = _P_CACHE.get(lam)
    if data is None:
        data = _compute_P(lam)
        with _LOCK:
            data = _P_CACHE.setdefault(lam, data)
    return data


def clear_cache() -> None:
    with _LOCK:
        _P_CACHE.clear()
    _integral_constants.cache_clear()


def macdonald_P(lam) -> SymFunc:
    """P_lambda(x; q, t) in the monomial basis."""
    lam = _part(lam)
    return SymFunc._raw(Basis.m, dict(_P(lam).m_coeffs))


def macdonald_norm(lam) -> RationalFunctionQT:
    """<P_lambda, P_lambda>_{q,t}."""
    return _P(_part(lam)).norm


def macdonald_Q(lam) -> SymFunc:
    """Q_lambda = P_lambda / <P_lambda, P_lambda>_{q,t}, monomial basis."""
    lam = _part(lam)
    return macdonald_P(lam).scale(macdonald_norm(lam).inverse())


def macdonald_Qprime(lam) -> SymFunc:
    """Q'_lambda = Q_lambda((1-q)x/(1-t)), Schur basis."""
    qp = transform_alphabet(convert(macdonald_Q(lam), Basis.p), "qt_twist")
    return convert(qp, Basis.s)


@lru_cache(maxsize=None)
def _integral_constants(lam: Partition) -> tuple[RationalFunctionQT, RationalFunctionQT]:
    c = cp = ONE
    for s in lam.cells():
        a, _, l, _ = cell_stats(lam, s)
        c = c * RationalFunctionQT(1 - q ** a * t ** (l + 1))
        cp = cp * RationalFunctionQT(1 - q ** (a + 1) * t ** l)
    return c, cp


def integral_constants(mu) -> tuple[RationalFunctionQT, RationalFunctionQT]:
    """(c_mu, c'_mu): products over cells of 1 - q^a t^{l+1} and 1 - q^{a+1} t^l."""
    return _integral_constants(_part(mu))


def macdonald_J(mu) -> SymFunc:
    """Integral form J_mu = c_mu P_mu, monomial basis."""
    mu = _part(mu)
    return macdonald_P(mu).scale(integral_constants(mu)[0])


def _require_polynomial(f: SymFunc, what: str) -> SymFunc:
    for lam, c in f.items():
        if not c.is_polynomial():
            raise NonPolynomialResult(f"{what}: coefficient of s{list(lam)} is not a polynomial: {c}")
    return f


def macdonald_Htilde(mu) -> SymFunc:
    """Modified Macdonald polynomial H~_mu, Schur basis.

    In power sums: the coefficient f_rho(q, t) of J_mu becomes
    t^{n(mu)} f_rho(q, 1/t) prod_i (-t^{rho_i} / (1 - t^{rho_i})), since
    1/(1 - t^{-k}) = -t^k / (1 - t^k). Every step is a fraction in Q(q, t),
    so no negative exponent is ever stored.
    """
    mu = _part(mu)
    jp = convert(macdonald_J(mu), Basis.p)
    shift = RationalFunctionQT(t ** n_stat(mu))
    out = {}
    for rho, c in jp.items():
        fac = shift
        for k in rho:
            fac = fac * RationalFunctionQT(-(t ** k), 1 - t ** k)
        out[rho] = c.invert_t() * fac
    hs = convert(SymFunc._raw(Basis.p, out), Basis.s)
    return _require_polynomial(hs, f"H~{list(mu)}")


def macdonald_K_generating(mu) -> SymFunc:
    """J_mu(x/(1-t); q, t) in the Schur basis; its coefficients are K_{lambda mu}(q, t)."""
    mu = _part(mu)
    f = transform_alphabet(convert(macdonald_J(mu), Basis.p), "over_one_minus_v", "t")
    return _require_polynomial(convert(f, Basis.s), f"J{list(mu)}(x/(1-t))")


FAMILIES = {
    "P": macdonald_P,
    "Q": macdonald_Q,
    "Qprime": macdonald_Qprime,
    "J": macdonald_J,
    "Htilde": macdonald_Htilde,
}


def family(kind: str, lam) -> SymFunc:
    try:
        fn = FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; expected one of {', '.join(FAMILIES)}") from None
    return fn(lam)


# ---------------------------------------------------------------------------
# Pieri coefficients
# ---------------------------------------------------------------------------


def b_cell(nu: Partition, s: Cell) -> RationalFunctionQT:
    """b_nu(s) = (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l); 1 for cells outside nu."""
    nu = _part(nu)
    i, j = s
    if i > len(nu) or j > nu[i - 1]:
        return ONE
    a, _, l, _ = cell_stats(nu, s)
    return RationalFunctionQT(1 - q ** a * t ** (l + 1), 1 - q ** (a + 1) * t ** l)


def pieri_psi(lam, mu) -> RationalFunctionQT:
    """psi_{lam/mu}: coefficient of Q'_lam in Q'_mu * h_r (equivalently Q_lam in Q_mu * g_r)."""
    lam, mu = _part(lam), _part(mu)
    if not is_horizontal_strip(lam, mu):
        raise NotAHorizontalStrip(f"{list(lam)}/{list(mu)} is not a horizontal strip")
    out = ONE
    for s in sorted(strip_D_set(lam, mu)):
        out = out * b_cell(mu, s) / b_cell(lam, s)
    return out


def pieri_Psi(lam, mu) -> RationalFunctionQT:
    """Psi_{lam/mu} = psi_{lam/mu} c'_mu / c'_lam, the Pieri coefficient for J(x/(1-t))."""
    lam, mu = _part(lam), _part(mu)
    return pieri_psi(lam, mu) * integral_constants(mu)[1] / integral_constants(lam)[1]


# ---------------------------------------------------------------------------
# Kostka matrices and Green polynomials
# ---------------------------------------------------------------------------


_KOSTKA_SOURCES = {
    "K": macdonald_K_generating,
    "Ktilde": macdonald_Htilde,
    "Kprime": macdonald_Qprime,
}


@dataclass
class KostkaMatrix:
    """Schur coefficients of a Macdonald family at one weight.

    ``entries[(lam, mu)]`` is the coefficient of s_lam in the family member
    indexed by mu; rows are lam, columns mu, both in reverse-lex order.
    Entries may be rational functions or cyclotomic residues.
    """

    variant: str
    weight: int
    entries: dict = field(default_factory=dict)
    root_order: int | None = None

    @property
    def rows(self) -> list[Partition]:
        return partitions(self.weight)

    cols = rows

    def __getitem__(self, key):
        lam, mu = key
        return self.entries.get((_part(lam), _part(mu)), self._zero())

    def _zero(self):
        if self.root_order is None:
            return RationalFunctionQT(0)
        from .coeff import CyclotomicScalar

        return CyclotomicScalar(self.root_order, 0)

    def column(self, mu) -> dict:
        mu = _part(mu)
        return {lam: self[lam, mu] for lam in self.rows}

    def matrix(self) -> list[list]:
        return [[self[lam, mu] for mu in self.cols] for lam in self.rows]

    def to_json(self) -> dict:
        def enc(x):
            return x.to_ratfun().to_json() if hasattr(x, "to_ratfun") else x.to_json()

        out = {
            "variant": self.variant,
            "weight": self.weight,
            "rows": [list(lam) for lam in self.rows],
            "cols": [list(mu) for mu in self.cols],
            "entries": [[enc(x) for x in row] for row in self.matrix()],
        }
        if self.root_order is not None:
            out["root_order"] = self.root_order
        return out

    @classmethod
    def from_json(cls, obj) -> KostkaMatrix:
        n = obj["weight"]
        order = obj.get("root_order")
        rows = [Partition(r) for r in obj["rows"]]
        cols = [Partition(c) for c in obj["cols"]]
        entries = {}
        for i, lam in enumerate(rows):
            for j, mu in enumerate(cols):
                val = RationalFunctionQT.from_json(obj["entries"][i][j])
                if order is not None:
                    from .coeff import CyclotomicScalar

                    val = CyclotomicScalar(order, val)
                if not val.is_zero():
                    entries[(lam, mu)] = val
        return cls(obj["variant"], n, entries, order)


def kostka_column(variant: str, mu) -> SymFunc:
    try:
        fn = _KOSTKA_SOURCES[variant]
    except KeyError:
        raise ValueError(f"unknown Kostka variant {variant!r}; expected K, Ktilde or Kprime") from None
    return fn(mu)


def kostka(variant: str, n: int, at_root: int | None = None) -> KostkaMatrix:
    """All K_{lam mu} of one variant at weight n; ``at_root`` reduces mod Phi_l."""
    if n < 1:
        raise ValueError("weight must be positive")
    entries = {}
    for mu in partitions(n):
        col = kostka_column(variant, mu)
        if at_root is not None:
            from .roots import specialize_at_root

            col = specialize_at_root(col, at_root)
        for lam, c in col.items():
            entries[(lam, mu)] = c
    return KostkaMatrix(variant, n, entries, at_root)


def green_polynomial(mu, rho) -> RationalFunctionQT:
    """X^mu_rho(q, t) = <H~_mu, p_rho> under the Hall scalar product."""
    mu, rho = _part(mu), _part(rho)
    if sum(mu) != sum(rho):
        raise WeightMismatch(f"{list(mu)} and {list(rho)} have different weights")
    return inner_hall(macdonald_Htilde(mu), p(rho))
