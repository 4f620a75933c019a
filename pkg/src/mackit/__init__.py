"""Exact Macdonald polynomials over Q(q, t) and their specializations at roots of unity."""

from __future__ import annotations

__version__ = "0.1.0"

from .coeff import CyclotomicScalar, PolyQT, RationalFunctionQT, cyclotomic, q, reduce_mod_cyclotomic, t
from .errors import (
    BudgetExceeded,
    CellOutsideDiagram,
    DivisionByZero,
    InvalidPartition,
    InvalidStrip,
    MackitError,
    NonIntegralResult,
    NonInvertibleDenominator,
    NonPolynomialResult,
    NotAHorizontalStrip,
    WeightMismatch,
)
from .macdonald import (
    KostkaMatrix,
    green_polynomial,
    integral_constants,
    kostka,
    macdonald_Htilde,
    macdonald_J,
    macdonald_P,
    macdonald_Q,
    macdonald_Qprime,
    pieri_Psi,
    pieri_psi,
)
from .partitions import Cell, HorizontalStrip, Partition, cell_stats, conjugate, dominance_leq, partitions
from .roots import (
    CyclicCharacter,
    VerificationReport,
    cohen_inverse,
    cohen_inversion,
    congruence_decomposition,
    cyclic_character,
    moebius,
    ramanujan_sum,
    specialize_at_root,
)
from .symfun import (
    Basis,
    CyclotomicSymFunc,
    SymFunc,
    convert,
    e,
    g_prime,
    h,
    inner_hall,
    inner_qt,
    internal_product,
    m,
    mul,
    p,
    plethysm,
    principal_specialize,
    s,
    transform_alphabet,
)
