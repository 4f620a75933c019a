"""Exact coefficient arithmetic in the two parameters q and t.

Three value types live here:

``PolyQT``
    sparse polynomial in q, t with rational coefficients;
``RationalFunctionQT``
    reduced fraction of two ``PolyQT``, an element of Q(q, t);
``CyclotomicScalar``
    element of Q(q)[t]/(Phi_l(t)), the exact stand-in for "t is a primitive
    l-th root of unity".

Polynomial multiplication, exact division and gcd are delegated to FLINT
(``python-flint``) multivariate polynomials over Q with lex order, q > t.
Nothing in this module ever uses floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import flint

from .errors import DivisionByZero, NonInvertibleDenominator

__all__ = [
    "PolyQT",
    "RationalFunctionQT",
    "CyclotomicScalar",
    "poly_arith",
    "ratfun_arith",
    "cyclotomic",
    "reduce_mod_cyclotomic",
    "q",
    "t",
]

CTX = flint.fmpq_mpoly_ctx.get(("q", "t"), "lex")
_Q, _T = CTX.gens()
_ZERO = CTX.from_dict({})
_ONE = CTX.from_dict({(0, 0): 1})


def _fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, flint.fmpz):
        return flint.fmpq(c)
    if isinstance(c, Rational):
        return flint.fmpq(int(c.numerator), int(c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


def _to_fraction(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, flint.fmpq, flint.fmpz)) and not isinstance(x, bool)


def _key(p: flint.fmpq_mpoly) -> str:
    # fmpq_mpoly is unhashable; its printed form is canonical.
    return str(p)


def _deg_t(p: flint.fmpq_mpoly) -> int:
    return -1 if p.is_zero() else p.degrees()[1]


def _deg_q(p: flint.fmpq_mpoly) -> int:
    return -1 if p.is_zero() else p.degrees()[0]


# ---------------------------------------------------------------------------
# PolyQT
# ---------------------------------------------------------------------------


class PolyQT:
    """Sparse polynomial in q and t with rational coefficients.

    Construct from a dict ``{(qexp, texp): coeff}``, a scalar, or use the
    module-level generators ``q`` and ``t``::

        >>> (1 - q*t) * (1 - q)
        PolyQT('q^2*t - q*t - q + 1')
    """

    __slots__ = ("_p",)

    def __init__(self, terms=None):
        if terms is None:
            p = _ZERO
        elif isinstance(terms, flint.fmpq_mpoly):
            p = terms
        elif isinstance(terms, PolyQT):
            p = terms._p
        elif isinstance(terms, dict):
            clean = {}
            for (a, b), c in terms.items():
                a, b = int(a), int(b)
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent in term {(a, b)}")
                c = _fmpq(c)
                if c != 0:
                    clean[(a, b)] = c
            p = CTX.from_dict(clean)
        elif _is_scalar(terms):
            p = CTX.from_dict({(0, 0): _fmpq(terms)}) if terms != 0 else _ZERO
        else:
            raise TypeError(f"cannot build PolyQT from {type(terms).__name__}")
        self._p = p

    @classmethod
    def _wrap(cls, p: flint.fmpq_mpoly) -> PolyQT:
        obj = object.__new__(cls)
        obj._p = p
        return obj

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {tuple(int(x) for x in m): _to_fraction(c) for m, c in self._p.terms()}

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.is_constant()

    def degree(self, var: str = "t") -> int:
        """Degree in ``var`` ('q' or 't'); -1 for the zero polynomial."""
        return _deg_q(self._p) if var == "q" else _deg_t(self._p)

    def leading_term(self) -> tuple[tuple[int, int], Fraction]:
        """Leading term under lex order with q before t."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        m, c = next(iter(self._p.terms()))
        return tuple(m), _to_fraction(c)

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        coeffs = [_to_fraction(c) for c in self._p.coeffs()]
        num = 0
        den = 1
        for c in coeffs:
            num = _gcd(num, c.numerator)
            den = den * c.denominator // _gcd(den, c.denominator)
        return Fraction(num, den)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PolyQT):
            return other._p
        if _is_scalar(other):
            return _fmpq(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else PolyQT._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else PolyQT._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else PolyQT._wrap(o - self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else PolyQT._wrap(self._p * o)

    __rmul__ = __mul__

    def __neg__(self):
        return PolyQT._wrap(-self._p)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial; use RationalFunctionQT")
        return PolyQT._wrap(self._p ** k)

    def __truediv__(self, other):
        return RationalFunctionQT(self) / other

    def __rtruediv__(self, other):
        return RationalFunctionQT(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, flint.fmpq):
            o = CTX.from_dict({(0, 0): o}) if o != 0 else _ZERO
        return self._p == o

    def __hash__(self):
        return hash(tuple(sorted(self.terms().items())))

    def frobenius(self, k: int) -> PolyQT:
        """q -> q^k, t -> t^k."""
        return PolyQT._wrap(self._p.inflate([k, k])) if k != 1 else self

    # -- text ---------------------------------------------------------------

    def __str__(self):
        return str(self._p) if not self.is_zero() else "0"

    def __repr__(self):
        return f"PolyQT({str(self)!r})"

    def to_records(self) -> list[dict]:
        """Canonical JSON form: records sorted by (qexp, texp)."""
        out = []
        for (a, b), c in sorted(self.terms().items()):
            out.append({"qexp": int(a), "texp": int(b), "num": int(c.numerator), "den": int(c.denominator)})
        return out

    @classmethod
    def from_records(cls, records) -> PolyQT:
        return cls({(r["qexp"], r["texp"]): Fraction(r["num"], r["den"]) for r in records})


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


q = PolyQT._wrap(_Q)
t = PolyQT._wrap(_T)


def poly_arith(a: PolyQT, b: PolyQT, op: str) -> PolyQT:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


# ---------------------------------------------------------------------------
# RationalFunctionQT
# ---------------------------------------------------------------------------


def _normalize_lc(n, d):
    lc = d.leading_coefficient()
    if lc != 1:
        n = n / lc
        d = d / lc
    return n, d


def _reduce(n, d):
    if n.is_zero():
        return _ZERO, _ONE
    if d.is_constant():
        return _normalize_lc(n, d)
    g = n.gcd(d)
    if not g.is_one():
        n = n / g
        d = d / g
    return _normalize_lc(n, d)


def _as_mpoly(x):
    if isinstance(x, flint.fmpq_mpoly):
        return x
    if isinstance(x, PolyQT):
        return x._p
    if _is_scalar(x):
        c = _fmpq(x)
        return CTX.from_dict({(0, 0): c}) if c != 0 else _ZERO
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


class RationalFunctionQT:
    """Element of Q(q, t), stored as a reduced fraction.

    Internally the denominator is kept monic (leading coefficient 1 under lex
    order, q before t); :attr:`numerator` and :attr:`denominator` expose the
    normalization with a content-free integer denominator whose leading
    coefficient is positive. Both normalizations are canonical, so equality
    is structural.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, numerator=0, denominator=1):
        if isinstance(numerator, RationalFunctionQT):
            other = numerator / RationalFunctionQT(denominator)
            self._n, self._d = other._n, other._d
            return
        n = _as_mpoly(numerator)
        d = _as_mpoly(denominator)
        if d.is_zero():
            raise DivisionByZero("zero denominator")
        self._n, self._d = _reduce(n, d)

    @classmethod
    def _raw(cls, n, d) -> RationalFunctionQT:
        obj = object.__new__(cls)
        obj._n = n
        obj._d = d
        return obj

    @classmethod
    def _make(cls, n, d) -> RationalFunctionQT:
        return cls._raw(*_reduce(n, d))

    # -- inspection ---------------------------------------------------------

    @property
    def numerator(self) -> PolyQT:
        return PolyQT._wrap(self._n * _fmpq(self._scale()))

    @property
    def denominator(self) -> PolyQT:
        return PolyQT._wrap(self._d * _fmpq(self._scale()))

    def _scale(self) -> Fraction:
        return 1 / PolyQT._wrap(self._d).content()

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_polynomial(self) -> bool:
        return self._d.is_one()

    def is_constant(self) -> bool:
        return self._d.is_one() and self._n.is_constant()

    def as_poly(self) -> PolyQT:
        if not self._d.is_one():
            raise ValueError(f"{self} is not a polynomial")
        return PolyQT._wrap(self._n)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if self._n.is_zero():
            return Fraction(0)
        return _to_fraction(self._n.leading_coefficient())

    def degree(self, var: str = "t") -> tuple[int, int]:
        """(numerator degree, denominator degree) in ``var``."""
        f = _deg_q if var == "q" else _deg_t
        return f(self._n), f(self._d)

    def is_free_of(self, var: str) -> bool:
        f = _deg_q if var == "q" else _deg_t
        return f(self._n) <= 0 and f(self._d) <= 0

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFunctionQT):
            return x
        if isinstance(x, PolyQT):
            return RationalFunctionQT._raw(x._p, _ONE)
        if _is_scalar(x):
            return RationalFunctionQT._raw(_as_mpoly(x), _ONE)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n1, d1, n2, d2 = self._n, self._d, o._n, o._d
        if n1.is_zero():
            return o
        if n2.is_zero():
            return self
        if d1 == d2:
            if d1.is_one():
                return RationalFunctionQT._raw(n1 + n2, d1)
            return RationalFunctionQT._make(n1 + n2, d1)
        g = d1.gcd(d2)
        if g.is_one():
            return RationalFunctionQT._raw(*_normalize_lc(n1 * d2 + n2 * d1, d1 * d2))
        d1g = d1 / g
        d2g = d2 / g
        n = n1 * d2g + n2 * d1g
        if n.is_zero():
            return ZERO
        g2 = n.gcd(g)
        d = d1g * d2
        if not g2.is_one():
            n = n / g2
            d = d / g2
        return RationalFunctionQT._raw(*_normalize_lc(n, d))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionQT._raw(-self._n, self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = _fmpq(other)
            if c == 0:
                return ZERO
            return RationalFunctionQT._raw(self._n * c, self._d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n1, d1, n2, d2 = self._n, self._d, o._n, o._d
        if n1.is_zero() or n2.is_zero():
            return ZERO
        if d1.is_one() and d2.is_one():
            return RationalFunctionQT._raw(n1 * n2, _ONE)
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1 = n1 / g
                d2 = d2 / g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2 = n2 / g
                d1 = d1 / g
        return RationalFunctionQT._raw(*_normalize_lc(n1 * n2, d1 * d2))

    __rmul__ = __mul__

    def inverse(self) -> RationalFunctionQT:
        if self._n.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RationalFunctionQT._raw(*_normalize_lc(self._d, self._n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunctionQT._raw(self._n ** k, self._d ** k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self):
        return hash((_key(self._n), _key(self._d)))

    def __bool__(self):
        return not self._n.is_zero()

    # -- substitutions ------------------------------------------------------

    def frobenius(self, k: int) -> RationalFunctionQT:
        """q -> q^k, t -> t^k (the coefficient action of p_k in plethysm)."""
        if k == 1 or (self._n.is_constant() and self._d.is_one()):
            return self
        return RationalFunctionQT._make(self._n.inflate([k, k]), self._d.inflate([k, k]))

    def invert_t(self) -> RationalFunctionQT:
        """Substitute t -> 1/t, keeping the result as a reduced fraction."""
        n, bn = _reverse_t(self._n)
        d, bd = _reverse_t(self._d)
        shift = bd - bn
        if shift > 0:
            n = n * _T ** shift
        elif shift < 0:
            d = d * _T ** (-shift)
        return RationalFunctionQT._make(n, d)

    def substitute(self, q=None, t=None) -> RationalFunctionQT:
        """Substitute values for q and/or t.

        Values may be scalars, polynomials or rational functions.
        """
        vq = _Q if q is None else q
        vt = _T if t is None else t
        poly_vals = all(_is_scalar(v) or isinstance(v, (PolyQT, flint.fmpq_mpoly)) for v in (vq, vt))
        if poly_vals:
            a, b = _as_mpoly(vq), _as_mpoly(vt)
            n = self._n.compose(a, b)
            d = self._d.compose(a, b)
            if d.is_zero():
                raise DivisionByZero(f"denominator of {self} vanishes under substitution")
            return RationalFunctionQT._make(n, d)
        rq = RationalFunctionQT(vq) if not isinstance(vq, RationalFunctionQT) else vq
        rt = RationalFunctionQT(vt) if not isinstance(vt, RationalFunctionQT) else vt
        n = _eval_generic(self._n, rq, rt)
        d = _eval_generic(self._d, rq, rt)
        if d.is_zero():
            raise DivisionByZero(f"denominator of {self} vanishes under substitution")
        return n / d

    # -- bulk ---------------------------------------------------------------

    @classmethod
    def lincomb(cls, pairs) -> RationalFunctionQT:
        """Sum of ``c * f`` over (scalar, RationalFunctionQT) pairs.

        Terms are grouped by denominator and put over a single lcm before one
        final reduction, which is much cheaper than repeated pairwise ``+``.
        """
        groups: dict[str, list] = {}
        for c, f in pairs:
            if f._n.is_zero():
                continue
            c = _fmpq(c) if _is_scalar(c) else c
            if isinstance(c, flint.fmpq):
                if c == 0:
                    continue
                term = f._n * c
            else:
                raise TypeError("lincomb scalars must be rational numbers")
            k = _key(f._d)
            slot = groups.get(k)
            if slot is None:
                groups[k] = [f._d, term]
            else:
                slot[1] = slot[1] + term
        if not groups:
            return ZERO
        if len(groups) == 1:
            d, n = next(iter(groups.values()))
            return cls._make(n, d)
        dens = [v[0] for v in groups.values()]
        lcm = dens[0]
        for d in dens[1:]:
            if d.is_one():
                continue
            g = lcm.gcd(d)
            lcm = lcm * (d / g) if not g.is_one() else lcm * d
        n = _ZERO
        for d, num in groups.values():
            n = n + num * (lcm / d)
        return cls._make(n, lcm)

    @classmethod
    def sum(cls, items) -> RationalFunctionQT:
        return cls.lincomb((1, f) for f in items)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if self._d.is_one():
            return str(PolyQT._wrap(self._n))
        n, d = self.numerator, self.denominator
        return f"({n})/({d})"

    def __repr__(self):
        return f"RationalFunctionQT({str(self)!r})"

    def to_json(self) -> dict:
        return {"num": self.numerator.to_records(), "den": self.denominator.to_records()}

    @classmethod
    def from_json(cls, obj) -> RationalFunctionQT:
        return cls(PolyQT.from_records(obj["num"]), PolyQT.from_records(obj["den"]))


def _reverse_t(p):
    """Return (t^B p(q, 1/t), B) with B = deg_t p."""
    if p.is_zero():
        return p, 0
    b = p.degrees()[1]
    if b == 0:
        return p, 0
    return CTX.from_dict({(m[0], b - m[1]): c for m, c in p.terms()}), b


def _eval_generic(p, rq: RationalFunctionQT, rt: RationalFunctionQT) -> RationalFunctionQT:
    powers_q: dict[int, RationalFunctionQT] = {}
    powers_t: dict[int, RationalFunctionQT] = {}
    pairs = []
    for (a, b), c in p.terms():
        if a not in powers_q:
            powers_q[a] = rq ** a
        if b not in powers_t:
            powers_t[b] = rt ** b
        pairs.append((c, powers_q[a] * powers_t[b]))
    return RationalFunctionQT.lincomb(pairs)


ZERO = RationalFunctionQT._raw(_ZERO, _ONE)
ONE = RationalFunctionQT._raw(_ONE, _ONE)


def ratfun_arith(a: RationalFunctionQT, b: RationalFunctionQT, op: str) -> RationalFunctionQT:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational-function operation {op!r}")


def as_ratfun(x) -> RationalFunctionQT:
    if isinstance(x, RationalFunctionQT):
        return x
    r = RationalFunctionQT._coerce(x)
    if r is None:
        raise TypeError(f"cannot convert {type(x).__name__} to RationalFunctionQT")
    return r


# ---------------------------------------------------------------------------
# cyclotomic polynomials and Q(q)[t]/(Phi_l)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cyclotomic_mpoly(l: int):
    if l < 1:
        raise ValueError("cyclotomic order must be positive")
    p = _T ** l - _ONE
    for d in range(1, l):
        if l % d == 0:
            quo, rem = divmod(p, _cyclotomic_mpoly(d))
            if not rem.is_zero():
                raise ArithmeticError("inexact cyclotomic division")
            p = quo
    return p


def cyclotomic(l: int) -> PolyQT:
    """The l-th cyclotomic polynomial Phi_l(t), by exact division of t^l - 1."""
    return PolyQT._wrap(_cyclotomic_mpoly(l))


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _mod_phi(p, l: int):
    if p.is_zero() or _deg_t(p) < euler_phi(l):
        return p
    return divmod(p, _cyclotomic_mpoly(l))[1]


class CyclotomicScalar:
    """Element of Q(q)[t]/(Phi_l(t)).

    Stored as ``num(q, t) / den(q)`` with deg_t(num) < phi(l), den monic in q
    and coprime to num. Every nonzero element is invertible.
    """

    __slots__ = ("order", "_n", "_d")

    def __init__(self, order: int, residue=0):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        if isinstance(residue, CyclotomicScalar):
            if residue.order != order:
                raise ValueError("order mismatch")
            self._n, self._d = residue._n, residue._d
            return
        if isinstance(residue, RationalFunctionQT):
            r = reduce_mod_cyclotomic(residue, order)
            self._n, self._d = r._n, r._d
            return
        if isinstance(residue, (list, tuple)):
            if len(residue) > euler_phi(order):
                raise ValueError("residue has too many t-coefficients")
            acc = RationalFunctionQT.sum(
                as_ratfun(c) * RationalFunctionQT._raw(_T ** i, _ONE) for i, c in enumerate(residue)
            )
            r = CyclotomicScalar(order, acc)
            self._n, self._d = r._n, r._d
            return
        self._n, self._d = _mod_phi(_as_mpoly(residue), order), _ONE

    @classmethod
    def _raw(cls, order, n, d) -> CyclotomicScalar:
        obj = object.__new__(cls)
        obj.order = order
        obj._n = n
        obj._d = d
        return obj

    @classmethod
    def _make(cls, order, n, d) -> CyclotomicScalar:
        n, d = _reduce(n, d)
        return cls._raw(order, n, d)

    def _check(self, other) -> CyclotomicScalar | None:
        if isinstance(other, CyclotomicScalar):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if _is_scalar(other) or isinstance(other, (PolyQT, RationalFunctionQT)):
            return CyclotomicScalar(self.order, other)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return CyclotomicScalar._make(self.order, self._n + o._n, self._d)
        return CyclotomicScalar._make(self.order, self._n * o._d + o._n * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar._raw(self.order, -self._n, self._d)

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = _fmpq(other)
            if c == 0:
                return CyclotomicScalar._raw(self.order, _ZERO, _ONE)
            return CyclotomicScalar._raw(self.order, self._n * c, self._d)
        o = self._check(other)
        if o is None:
            return NotImplemented
        n = _mod_phi(self._n * o._n, self.order)
        return CyclotomicScalar._make(self.order, n, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicScalar:
        if self._n.is_zero():
            raise NonInvertibleDenominator("zero has no inverse modulo Phi_%d" % self.order, self.order)
        inv_n = _inverse_mod_phi(self._n, self.order)
        return CyclotomicScalar(self.order, inv_n * RationalFunctionQT._raw(self._d, _ONE))

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicScalar(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._check(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self):
        return hash((self.order, _key(self._n), _key(self._d)))

    def __bool__(self):
        return not self._n.is_zero()

    def is_zero(self) -> bool:
        return self._n.is_zero()

    # -- views --------------------------------------------------------------

    def is_t_free(self) -> bool:
        return _deg_t(self._n) <= 0

    def to_ratfun(self) -> RationalFunctionQT:
        """The canonical representative of degree < phi(l) in t."""
        return RationalFunctionQT._raw(self._n, self._d)

    def t_coefficients(self) -> list[RationalFunctionQT]:
        """Coefficients of 1, t, ..., t^(phi(l)-1), each in Q(q)."""
        phi = euler_phi(self.order)
        buckets = [dict() for _ in range(phi)]
        for (a, b), c in self._n.terms():
            buckets[b][(a, 0)] = c
        return [RationalFunctionQT._make(CTX.from_dict(bk), self._d) for bk in buckets]

    @classmethod
    def lincomb(cls, pairs) -> CyclotomicScalar:
        pairs = list(pairs)
        if not pairs:
            raise ValueError("empty lincomb needs an order")
        order = pairs[0][1].order
        lifted = RationalFunctionQT.lincomb((c, x.to_ratfun()) for c, x in pairs)
        return CyclotomicScalar._raw(order, *_reduce(_mod_phi(lifted._n, order), lifted._d))

    def __str__(self):
        return f"{self.to_ratfun()} mod Phi_{self.order}(t)"

    def __repr__(self):
        return f"CyclotomicScalar({self.order}, {str(self.to_ratfun())!r})"

    def to_json(self) -> dict:
        return {"order": self.order, **self.to_ratfun().to_json()}


def _inverse_mod_phi(n, l: int) -> RationalFunctionQT:
    """Inverse of a t-polynomial n (deg < phi(l), coefficients in Q[q]) in Q(q)[t]/Phi_l.

    Solves the phi x phi linear system (multiplication-by-n matrix) x = e_0
    over Q(q) by Gaussian elimination.
    """
    phi = euler_phi(l)
    if phi == 1 or _deg_t(n) == 0:
        if _deg_t(n) > 0:
            n = _mod_phi(n, l)
        return RationalFunctionQT._make(_ONE, n)
    cols = []
    for j in range(phi):
        col = _mod_phi(n * _T ** j, l)
        entries = [dict() for _ in range(phi)]
        for (a, b), c in col.terms():
            entries[b][(a, 0)] = c
        cols.append([RationalFunctionQT._raw(CTX.from_dict(e), _ONE) for e in entries])
    # rows i, columns j: matrix[i][j] = coefficient of t^i in n * t^j
    mat = [[cols[j][i] for j in range(phi)] + [ONE if i == 0 else ZERO] for i in range(phi)]
    for col in range(phi):
        pivot = next((r for r in range(col, phi) if not mat[r][col].is_zero()), None)
        if pivot is None:
            raise NonInvertibleDenominator("singular element modulo Phi_%d" % l, l)
        mat[col], mat[pivot] = mat[pivot], mat[col]
        inv = mat[col][col].inverse()
        mat[col] = [x * inv for x in mat[col]]
        for r in range(phi):
            if r != col and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    return RationalFunctionQT.sum(mat[i][phi] * RationalFunctionQT._raw(_T ** i, _ONE) for i in range(phi))


def reduce_mod_cyclotomic(f, l: int) -> CyclotomicScalar:
    """Image of f in Q(q)[t]/(Phi_l(t)).

    Raises NonInvertibleDenominator when Phi_l divides the (reduced)
    denominator, i.e. f has a pole at every primitive l-th root of unity.
    """
    f = as_ratfun(f)
    n = _mod_phi(f._n, l)
    d = f._d
    if _deg_t(d) <= 0:
        return CyclotomicScalar._make(l, n, d)
    dr = _mod_phi(d, l)
    if dr.is_zero():
        raise NonInvertibleDenominator(f"denominator of {f} is divisible by Phi_{l}(t)", l)
    if _deg_t(dr) <= 0:
        return CyclotomicScalar._make(l, n, dr)
    inv = _inverse_mod_phi(dr, l)
    prod = RationalFunctionQT._raw(n, _ONE) * inv
    return CyclotomicScalar._make(l, _mod_phi(prod._n, l), prod._d)
