"""The ring of symmetric functions over Q(q, t).

A :class:`SymFunc` is a finite map from partitions to coefficients, tagged
with one of the classical bases m, p, e, h, s. Coefficients are
:class:`~mackit.coeff.RationalFunctionQT`, or
:class:`~mackit.coeff.CyclotomicScalar` for specialized functions.

Everything multiplicative is computed in the power-sum basis, where product,
plethysm, internal product and both scalar products are diagonal or
concatenations. Transition matrices are built once per degree and cached.

Plethysm convention: p_k acts on coefficients by q -> q^k, t -> t^k (q and t
are rank-one elements of the lambda-ring). With it, ``h_r o (p_1/(1-q))`` is
h_r(x/(1-q)).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable

import flint

from .coeff import ONE, ZERO, CyclotomicScalar, PolyQT, RationalFunctionQT, as_ratfun, q, t
from .partitions import Partition, partitions, sort_key

__all__ = [
    "Basis",
    "SymFunc",
    "convert",
    "mul",
    "inner_qt",
    "inner_hall",
    "plethysm",
    "internal_product",
    "transform_alphabet",
    "principal_specialize",
    "g_prime",
    "z",
    "z_qt",
    "m",
    "p",
    "e",
    "h",
    "s",
    "one",
]


class Basis(str, Enum):
    m = "m"
    p = "p"
    e = "e"
    h = "h"
    s = "s"


def _basis(b) -> Basis:
    try:
        return b if isinstance(b, Basis) else Basis(str(b))
    except ValueError:
        raise ValueError(f"unknown basis {b!r}; expected one of m, p, e, h, s") from None


def _as_partition(lam) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, int):
        return Partition((lam,)) if lam > 0 else Partition()
    return Partition(lam)


def _is_plain_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, flint.fmpq)) and not isinstance(x, bool)


def _coeff(x):
    if isinstance(x, (RationalFunctionQT, CyclotomicScalar)):
        return x
    return as_ratfun(x)


def _lincomb(pairs):
    """Sum of scalar * coefficient pairs, dispatching on the coefficient type."""
    pairs = list(pairs)
    if not pairs:
        return ZERO
    return type(pairs[0][1]).lincomb(pairs)


def _sum(items):
    return _lincomb((1, c) for c in items)


class SymFunc:
    """Element of Lambda_F written in one basis.

    Mixed weights are allowed; zero coefficients are never stored. Values are
    immutable: every operation returns a new object.
    """

    __slots__ = ("basis", "_c")

    def __init__(self, basis, coeffs=None):
        self.basis = _basis(basis)
        c = {}
        for lam, val in (coeffs or {}).items():
            val = _coeff(val)
            if not val.is_zero():
                c[_as_partition(lam)] = val
        self._c = c

    @classmethod
    def _raw(cls, basis: Basis, coeffs: dict) -> SymFunc:
        obj = object.__new__(cls)
        obj.basis = basis
        obj._c = coeffs
        return obj

    def _like(self, basis: Basis, coeffs: dict) -> SymFunc:
        return type(self)._raw(basis, coeffs)

    # -- inspection ---------------------------------------------------------

    def coefficient(self, lam):
        return self._c.get(_as_partition(lam), ZERO)

    def __getitem__(self, lam):
        return self.coefficient(lam)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: sort_key(kv[0]))

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def __len__(self):
        return len(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._c}

    def homogeneous_component(self, n: int) -> SymFunc:
        return self._like(self.basis, {k: v for k, v in self._c.items() if sum(k) == n})

    def map_coeffs(self, fn: Callable) -> SymFunc:
        out = {}
        for lam, c in self._c.items():
            v = fn(c)
            if not v.is_zero():
                out[lam] = v
        return SymFunc._raw(self.basis, out)

    # -- arithmetic ---------------------------------------------------------

    def to(self, basis) -> SymFunc:
        return convert(self, basis)

    def _merge(self, other: SymFunc, sign: int) -> SymFunc:
        other = convert(other, self.basis)
        out = dict(self._c)
        for lam, c in other._c.items():
            cur = out.get(lam)
            v = (c if sign > 0 else -c) if cur is None else (cur + c if sign > 0 else cur - c)
            if v.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = v
        return self._like(self.basis, out)

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            other = one(self.basis) * other
        return self._merge(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            other = one(self.basis) * other
        return self._merge(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._like(self.basis, {k: -v for k, v in self._c.items()})

    def scale(self, c) -> SymFunc:
        if _is_plain_scalar(c):
            if c == 0:
                return self._like(self.basis, {})
            return self._like(self.basis, {k: v * c for k, v in self._c.items()})
        c = _coeff(c) if not isinstance(c, PolyQT) else as_ratfun(c)
        out = {}
        for k, v in self._c.items():
            w = v * c
            if not w.is_zero():
                out[k] = w
        return self._like(self.basis, out)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        if _is_plain_scalar(c):
            return self.scale(Fraction(1) / Fraction(c))
        return self.scale(_coeff(c).inverse())

    def __pow__(self, k: int):
        result = one(self.basis)
        if isinstance(self, CyclotomicSymFunc):
            result = CyclotomicSymFunc._raw(self.basis, {Partition(): CyclotomicScalar(self.order, 1)}, self.order)
        for _ in range(k):
            result = mul(result, self)
        return result

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            if _is_plain_scalar(other) or isinstance(other, (RationalFunctionQT, PolyQT)):
                other = one(self.basis) * other
            else:
                return NotImplemented
        other = convert(other, self.basis)
        return self._c == other._c

    __hash__ = None

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for lam, c in self.items():
            label = f"{self.basis.value}[{','.join(map(str, lam))}]"
            cs = str(c.to_ratfun() if isinstance(c, CyclotomicScalar) else c)
            if cs == "1":
                parts.append(label)
            elif cs == "-1":
                parts.append(f"-{label}")
            else:
                parts.append(f"({cs})*{label}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"SymFunc({self.basis.value!r}, {str(self)!r})"

    def to_json(self) -> dict:
        terms = []
        for lam, c in self.items():
            coeff = c.to_ratfun().to_json() if isinstance(c, CyclotomicScalar) else c.to_json()
            terms.append({"part": list(lam), "coeff": coeff})
        out = {"basis": self.basis.value, "terms": terms}
        if isinstance(self, CyclotomicSymFunc):
            out["root_order"] = self.order
        return out

    @classmethod
    def from_json(cls, obj) -> SymFunc:
        coeffs = {Partition(tm["part"]): RationalFunctionQT.from_json(tm["coeff"]) for tm in obj["terms"]}
        f = SymFunc(obj["basis"], coeffs)
        if "root_order" in obj:
            from .roots import specialize_at_root

            return specialize_at_root(f, obj["root_order"])
        return f


class CyclotomicSymFunc(SymFunc):
    """Symmetric function with coefficients in Q(q)[t]/(Phi_l(t))."""

    __slots__ = ("order",)

    @classmethod
    def _raw(cls, basis, coeffs, order=None):
        obj = object.__new__(cls)
        obj.basis = basis
        obj._c = coeffs
        if order is None:
            order = next(iter(coeffs.values())).order if coeffs else 0
        obj.order = order
        return obj

    def _like(self, basis, coeffs):
        return CyclotomicSymFunc._raw(basis, coeffs, self.order)

    def map_coeffs(self, fn):
        out = {}
        for lam, c in self._c.items():
            v = fn(c)
            if not v.is_zero():
                out[lam] = v
        return CyclotomicSymFunc._raw(self.basis, out, self.order)

    def scale(self, c):
        if isinstance(c, (RationalFunctionQT, PolyQT)):
            c = CyclotomicScalar(self.order, as_ratfun(c))
        return super().scale(c)

    def __eq__(self, other):
        if isinstance(other, SymFunc) and not isinstance(other, CyclotomicSymFunc):
            from .roots import specialize_at_root

            other = specialize_at_root(other, self.order)
        if isinstance(other, CyclotomicSymFunc) and other.order != self.order:
            return False
        return super().__eq__(other)

    __hash__ = None

    def is_t_free(self) -> bool:
        return all(c.is_t_free() for c in self._c.values())

    def lift(self) -> SymFunc:
        """The symfunc whose coefficients are the canonical representatives."""
        return SymFunc._raw(self.basis, {k: v.to_ratfun() for k, v in self._c.items()})


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _elem(basis, lam) -> SymFunc:
    return SymFunc._raw(_basis(basis), {_as_partition(lam): ONE})


def m(lam=()) -> SymFunc:
    return _elem("m", lam)


def p(lam=()) -> SymFunc:
    return _elem("p", lam)


def e(lam=()) -> SymFunc:
    return _elem("e", lam)


def h(lam=()) -> SymFunc:
    return _elem("h", lam)


def s(lam=()) -> SymFunc:
    return _elem("s", lam)


def one(basis="s") -> SymFunc:
    return _elem(basis, ())


# ---------------------------------------------------------------------------
# z constants
# ---------------------------------------------------------------------------


def z(lam) -> int:
    """z_lambda = prod_i i^{m_i} m_i!."""
    return _z(_as_partition(lam))


@lru_cache(maxsize=None)
def _z(lam: Partition) -> int:
    out = 1
    for i, mult in lam.multiplicities().items():
        out *= i ** mult * factorial(mult)
    return out


def z_qt(lam) -> RationalFunctionQT:
    """z_lambda(q, t) = z_lambda * prod_i (1 - q^{lambda_i}) / (1 - t^{lambda_i})."""
    return _z_qt(_as_partition(lam))


@lru_cache(maxsize=None)
def _z_qt(lam: Partition) -> RationalFunctionQT:
    out = RationalFunctionQT(_z(lam))
    for part in lam:
        out = out * RationalFunctionQT(1 - q ** part, 1 - t ** part)
    return out


# ---------------------------------------------------------------------------
# transition matrices (integer / rational), cached per degree
# ---------------------------------------------------------------------------


def _fq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _pk_times_m(k: int, mu: tuple) -> dict:
    """p_k * m_mu in the monomial basis."""
    out = {}
    for v in set(mu) | {0}:
        if v == 0:
            nu = tuple(sorted(mu + (k,), reverse=True))
        else:
            lst = list(mu)
            lst[lst.index(v)] = v + k
            nu = tuple(sorted(lst, reverse=True))
        out[nu] = out.get(nu, 0) + nu.count(v + k)
    return out


@lru_cache(maxsize=None)
def _p_to_m(n: int) -> dict:
    table = {}
    for lam in partitions(n):
        cur = {(): 1}
        for k in lam:
            nxt = {}
            for mu, c in cur.items():
                for nu, d in _pk_times_m(k, mu).items():
                    nxt[nu] = nxt.get(nu, 0) + c * d
            cur = nxt
        table[lam] = {Partition._trusted(mu): _fq(c) for mu, c in cur.items() if c}
    return table


def _strip_removals(lam: tuple, k: int):
    """All nu with lam/nu a horizontal strip of size k (rows nu_i in [lam_{i+1}, lam_i])."""
    n = len(lam)
    out = []

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                out.append(tuple(x for x in acc if x > 0))
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for val in range(lam[i], max(lo, lam[i] - left) - 1, -1):
            acc.append(val)
            rec(i + 1, left - (lam[i] - val), acc)
            acc.pop()

    rec(0, k, [])
    return out


@lru_cache(maxsize=None)
def _kostka_number(lam: tuple, mu: tuple) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Peels off the cells holding the largest letter, a horizontal strip of
    size mu_last.
    """
    if not mu:
        return 1 if not lam else 0
    if len(lam) > sum(mu) or sum(lam) != sum(mu):
        return 0
    return sum(_kostka_number(nu, mu[:-1]) for nu in _strip_removals(lam, mu[-1]))


@lru_cache(maxsize=None)
def _s_to_m(n: int) -> dict:
    parts = partitions(n)
    table = {}
    for lam in parts:
        row = {}
        for mu in parts:
            k = _kostka_number(tuple(lam), tuple(mu))
            if k:
                row[mu] = _fq(k)
        table[lam] = row
    return table


def _invert(table: dict, n: int) -> dict:
    parts = partitions(n)
    idx = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    mat = flint.fmpq_mat(size, size)
    for lam, row in table.items():
        for mu, v in row.items():
            mat[idx[lam], idx[mu]] = v
    inv = mat.inv()
    out = {}
    for i, lam in enumerate(parts):
        row = {}
        for j, mu in enumerate(parts):
            v = inv[i, j]
            if v != 0:
                row[mu] = v
        out[lam] = row
    return out


def _compose(a: dict, b: dict) -> dict:
    """Row-vector composition: (a then b)[lam][nu] = sum_mu a[lam][mu] b[mu][nu]."""
    out = {}
    for lam, row in a.items():
        acc = {}
        for mu, v in row.items():
            for nu, w in b[mu].items():
                acc[nu] = acc.get(nu, 0) + v * w
        out[lam] = {nu: x for nu, x in acc.items() if x != 0}
    return out


def _p_dict_mul(a: dict, b: dict) -> dict:
    out = {}
    for lam, x in a.items():
        for mu, y in b.items():
            nu = tuple(sorted(lam + mu, reverse=True))
            out[nu] = out.get(nu, 0) + x * y
    return {k: v for k, v in out.items() if v != 0}


@lru_cache(maxsize=None)
def _hk_in_p(k: int, sign: bool) -> dict:
    out = {}
    for rho in partitions(k):
        c = Fraction(1, z(rho))
        if sign and (k - len(rho)) % 2:
            c = -c
        out[tuple(rho)] = c
    return out


@lru_cache(maxsize=None)
def _to_p(basis: Basis, n: int) -> dict:
    if basis is Basis.m:
        return _invert(_p_to_m(n), n)
    if basis is Basis.s:
        return _compose(_s_to_m(n), _to_p(Basis.m, n))
    if basis in (Basis.h, Basis.e):
        sign = basis is Basis.e
        table = {}
        for lam in partitions(n):
            cur = {(): Fraction(1)}
            for k in lam:
                cur = _p_dict_mul(cur, _hk_in_p(k, sign))
            table[lam] = {Partition._trusted(r): _fq(c) for r, c in cur.items()}
        return table
    raise ValueError(basis)


@lru_cache(maxsize=None)
def _from_p(basis: Basis, n: int) -> dict:
    if basis is Basis.m:
        return _p_to_m(n)
    return _invert(_to_p(basis, n), n)


@lru_cache(maxsize=None)
def _m_to_s(n: int) -> dict:
    return _invert(_s_to_m(n), n)


def transition_matrix(source, target, n: int) -> dict:
    """Rows: source basis elements of degree n; entries: target coefficients."""
    source, target = _basis(source), _basis(target)
    if source is target:
        return {lam: {lam: flint.fmpq(1)} for lam in partitions(n)}
    if source is Basis.s and target is Basis.m:
        return _s_to_m(n)
    if source is Basis.m and target is Basis.s:
        return _m_to_s(n)
    if source is Basis.p:
        return _from_p(target, n)
    if target is Basis.p:
        return _to_p(source, n)
    return _compose(_to_p(source, n), _from_p(target, n))


def _apply(f: SymFunc, target: Basis) -> SymFunc:
    buckets: dict = {}
    for lam, c in f._c.items():
        row = transition_matrix(f.basis, target, sum(lam))[lam]
        for mu, v in row.items():
            buckets.setdefault(mu, []).append((v, c))
    out = {}
    for mu, pairs in buckets.items():
        val = _lincomb(pairs)
        if not val.is_zero():
            out[mu] = val
    return f._like(target, out)


def convert(f: SymFunc, target) -> SymFunc:
    """Rewrite f in the target basis (exact, degree by degree)."""
    target = _basis(target)
    if f.basis is target:
        return f
    if {f.basis, target} == {Basis.s, Basis.m} or Basis.p in (f.basis, target):
        return _apply(f, target)
    return _apply(_apply(f, Basis.p), target)


# ---------------------------------------------------------------------------
# products and pairings
# ---------------------------------------------------------------------------


def _pmul_coeffs(a: dict, b: dict) -> dict:
    buckets: dict = {}
    for lam, x in a.items():
        for mu, y in b.items():
            nu = Partition._trusted(tuple(sorted(lam + mu, reverse=True)))
            buckets.setdefault(nu, []).append(x * y)
    out = {}
    for nu, items in buckets.items():
        v = items[0] if len(items) == 1 else _sum(items)
        if not v.is_zero():
            out[nu] = v
    return out


def mul(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in Lambda_F, returned in f's basis."""
    basis = f.basis
    fp, gp = convert(f, Basis.p), convert(g, Basis.p)
    if isinstance(g, CyclotomicSymFunc) and not isinstance(f, CyclotomicSymFunc):
        fp, gp = gp, fp
    prod = fp._like(Basis.p, _pmul_coeffs(fp._c, gp._c))
    return convert(prod, basis)


def inner_qt(f: SymFunc, g: SymFunc) -> RationalFunctionQT:
    """<f, g>_{q,t} with <p_lam, p_mu> = delta z_lam(q, t)."""
    fp, gp = convert(f, Basis.p), convert(g, Basis.p)
    terms = [c * gp._c[lam] * z_qt(lam) for lam, c in fp._c.items() if lam in gp._c]
    return _sum(terms) if terms else ZERO


def inner_hall(f: SymFunc, g: SymFunc):
    """The usual scalar product, <p_lam, p_mu> = delta z_lam."""
    fp, gp = convert(f, Basis.p), convert(g, Basis.p)
    terms = [(z(lam), c * gp._c[lam]) for lam, c in fp._c.items() if lam in gp._c]
    return _lincomb(terms) if terms else ZERO


def _pk_plethysm(k: int, gp: SymFunc) -> dict:
    out = {}
    for lam, c in gp._c.items():
        out[Partition._trusted(tuple(k * x for x in lam))] = c.frobenius(k)
    return out


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """f o g, returned in the power-sum basis.

    p_k o g multiplies every part of g's power-sum indices by k and raises
    q, t to their k-th powers inside g's coefficients; f's own coefficients
    are left alone.
    """
    fp, gp = convert(f, Basis.p), convert(g, Basis.p)
    cache: dict[int, dict] = {}
    powers: dict[tuple, dict] = {(): {Partition(): ONE}}

    def pk(k):
        if k not in cache:
            cache[k] = _pk_plethysm(k, gp)
        return cache[k]

    def prod_for(lam: tuple) -> dict:
        if lam not in powers:
            powers[lam] = _pmul_coeffs(prod_for(lam[:-1]), pk(lam[-1]))
        return powers[lam]

    buckets: dict = {}
    for lam, c in fp._c.items():
        for nu, v in prod_for(tuple(lam)).items():
            buckets.setdefault(nu, []).append(c * v)
    out = {}
    for nu, items in buckets.items():
        v = _sum(items)
        if not v.is_zero():
            out[nu] = v
    return SymFunc._raw(Basis.p, out)


def internal_product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Kronecker product: p_lam * p_mu = delta z_lam p_lam (power-sum basis result)."""
    fp, gp = convert(f, Basis.p), convert(g, Basis.p)
    out = {}
    for lam, c in fp._c.items():
        if lam in gp._c:
            v = c * gp._c[lam] * z(lam)
            if not v.is_zero():
                out[lam] = v
    return fp._like(Basis.p, out)


def scale_powersums(f: SymFunc, factor: Callable[[int], RationalFunctionQT]) -> SymFunc:
    """Algebra map p_k -> factor(k) p_k, result in f's basis."""
    fp = convert(f, Basis.p)
    cache: dict[int, RationalFunctionQT] = {}

    def fac(k):
        if k not in cache:
            cache[k] = factor(k)
        return cache[k]

    out = {}
    for lam, c in fp._c.items():
        scal = ONE
        for part in lam:
            scal = scal * fac(part)
        v = c * scal
        if not v.is_zero():
            out[lam] = v
    return convert(fp._like(Basis.p, out), f.basis)


def transform_alphabet(f: SymFunc, kind: str, v: str = "q", inverse: bool = False) -> SymFunc:
    """Alphabet substitutions, expressed on power sums.

    ``qt_twist``        p_k -> (1 - q^k)/(1 - t^k) p_k, i.e. x -> (1-q)x/(1-t)
    ``over_one_minus_v`` p_k -> p_k/(1 - v^k), i.e. x -> x/(1-v), v in {q, t}

    ``inverse=True`` applies the inverse substitution.
    """
    if kind == "qt_twist":
        def factor(k):
            r = RationalFunctionQT(1 - q ** k, 1 - t ** k)
            return r.inverse() if inverse else r
    elif kind == "over_one_minus_v":
        var = {"q": q, "t": t}.get(v)
        if var is None:
            raise ValueError(f"designated variable must be 'q' or 't', got {v!r}")

        def factor(k):
            r = RationalFunctionQT(1, 1 - var ** k)
            return r.inverse() if inverse else r
    else:
        raise ValueError(f"unknown alphabet transformation {kind!r}")
    return scale_powersums(f, factor)


def principal_specialize(f: SymFunc, l: int, divide_by_one_minus_q: bool = False) -> RationalFunctionQT:
    """f evaluated on the alphabet 1, t, ..., t^{l-1} (divided by 1-q on request)."""
    fp = convert(f, Basis.p)
    cache: dict[int, RationalFunctionQT] = {}

    def val(k):
        if k not in cache:
            den = (1 - t ** k) * (1 - q ** k) if divide_by_one_minus_q else 1 - t ** k
            cache[k] = RationalFunctionQT(1 - t ** (k * l), den)
        return cache[k]

    terms = []
    for lam, c in fp._c.items():
        scal = ONE
        for part in lam:
            scal = scal * val(part)
        terms.append(c * scal)
    return _sum(terms) if terms else ZERO


def g_prime(r: int) -> SymFunc:
    """sum_{|lam| = r} z_lam(q, t)^{-1} p_lam (untwisted; twist it for the Pieri rule)."""
    return SymFunc._raw(Basis.p, {lam: z_qt(lam).inverse() for lam in partitions(r)})
