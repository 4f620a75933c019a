"""Enumerations of claim instances for the verification suites.

A claim is a ``(verifier name, kwargs)`` pair so it can be shipped to a
worker process. Enumeration order is fixed; reports are emitted in that
order whatever the completion order.
"""

from __future__ import annotations

from typing import Iterator

from . import roots
from .partitions import horizontal_strips, is_horizontal_strip, partitions, union, rectangle

Claim = tuple[str, dict]

SUITES = ("plethysm", "factorization", "congruence", "kostka-congruence", "pieri", "orthogonality")

# H~ needs a costlier pipeline than Q'; its default ceiling is lower.
HTILDE_CAP = 8


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def plethysm_claims(budget: int, htilde_budget: int) -> Iterator[Claim]:
    for n in range(1, budget + 1):
        for l in _divisors(n):
            r = n // l
            for d in _divisors(l):
                yield "verify_rectangular_plethysm", {"r": r, "l": l, "d": d}
                if n <= htilde_budget:
                    yield "verify_Htilde_rectangular", {"r": r, "l": l, "d": d}


def factorization_claims(budget: int, htilde_budget: int) -> Iterator[Claim]:
    for n in range(1, budget + 1):
        for mu in partitions(n):
            for l in (2, 3):
                yield "verify_factorization", {"mu": list(mu), "l": l, "family": "Qprime"}
                if n <= htilde_budget:
                    yield "verify_factorization", {"mu": list(mu), "l": l, "family": "Htilde"}
    for l in (2, 3):
        for k in range(1, 4):
            if k * l > budget:
                break
            for nu in partitions(k):
                yield "verify_nu_power", {"nu": list(nu), "l": l}


def congruence_claims(budget: int, htilde_budget: int) -> Iterator[Claim]:
    for l in range(2, budget + 1):
        for r in range(1, budget // l + 1):
            yield "verify_congruence", {"r": r, "l": l}
            if r * l <= htilde_budget:
                yield "verify_Htilde_congruence", {"r": r, "l": l}


def kostka_congruence_claims(budget: int, htilde_budget: int) -> Iterator[Claim]:
    top = min(budget, htilde_budget)
    for l in range(2, top + 1):
        for k in range(1, top // l + 1):
            for nu in partitions(k):
                for mu in partitions(k * l):
                    yield "verify_kostka_congruence", {"mu": list(mu), "nu": list(nu), "l": l}


def pieri_claims(budget: int, htilde_budget: int) -> Iterator[Claim]:
    top = min(budget, 7)
    for n in range(0, top):
        for mu in partitions(n):
            for r in range(1, top - n + 1):
                yield "verify_pieri", {"mu": list(mu), "r": r}
    for claim in psi_invariance_claims(min(budget, 6)):
        yield claim


def psi_invariance_claims(max_weight: int) -> Iterator[Claim]:
    """Strips lam/mu with |lam| <= max_weight whose enlargement by (r^l) is again a strip."""
    for l in (2, 3):
        for r in (1, 2):
            for n in range(0, max_weight):
                for mu in partitions(n):
                    for k in range(1, max_weight - n + 1):
                        for lam in horizontal_strips(mu, k):
                            if is_horizontal_strip(union(lam, rectangle(r, l)), union(mu, rectangle(r, l))):
                                yield "verify_psi_invariance", {"lam": list(lam), "mu": list(mu), "r": r, "l": l}


def orthogonality_claims(budget: int, htilde_budget: int) -> Iterator[Claim]:
    for n in range(1, min(budget, 6) + 1):
        yield "verify_orthogonality", {"n": n}
    for n in range(1, min(budget, 5) + 1):
        for lam in partitions(n):
            for l in range(len(lam), 5):
                if l >= 1:
                    yield "verify_principal_product", {"lam": list(lam), "l": l}
    for n in range(1, min(budget, 6) + 1):
        for lam in partitions(n):
            for l in (2, 3):
                if len(lam) <= l:
                    yield "verify_root_vanishing", {"lam": list(lam), "l": l}
    for r in range(1, 4):
        for l in range(1, 5):
            if r * l <= budget:
                yield "verify_normalization_constant", {"r": r, "l": l}
                if l >= 2:
                    yield "verify_norm_vanishing", {"r": r, "l": l}


_ENUMERATORS = {
    "plethysm": plethysm_claims,
    "factorization": factorization_claims,
    "congruence": congruence_claims,
    "kostka-congruence": kostka_congruence_claims,
    "pieri": pieri_claims,
    "orthogonality": orthogonality_claims,
}


def claims(suite: str, budget: int, htilde_budget: int | None = None) -> list[Claim]:
    """All claim instances of a suite (or ``all``) within the weight budget."""
    hb = min(budget, HTILDE_CAP) if htilde_budget is None else htilde_budget
    names = SUITES if suite == "all" else (suite,)
    out: list[Claim] = []
    for name in names:
        try:
            enum = _ENUMERATORS[name]
        except KeyError:
            raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all") from None
        out.extend(enum(budget, hb))
    return out


def run_claim(claim: Claim) -> roots.VerificationReport:
    name, kwargs = claim
    return getattr(roots, name)(**kwargs)
