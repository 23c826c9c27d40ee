"""The universal χ_y-genus and its Taylor coefficients at ``y = -1``.

Hirzebruch-Riemann-Roch writes

    χ_y(M) = ∫_M  ∏_i  x_i (1 + y e^{-x_i}) / (1 - e^{-x_i})

over the Chern roots ``x_i``. Writing ``Q(x) = sum_k q_k(y) x^k`` for the
single-root factor, the coefficient of ``m_lambda`` in the weight-``n`` part
of the product is ``q_0^(n - len(lambda)) * prod_j q_{lambda_j}``. Converting
``m_lambda`` to Chern classes and summing gives χ_y as a polynomial in ``y``
with Chern-polynomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Union

from . import linalg
from .partitions import Partition, partitions
from .rational import format_rational, is_integral
from .series import TruncatedSeries, YPoly, render_poly
from .symmetric import ChernPolynomial, monomial_to_elementary_matrix

Coefficient = Union[ChernPolynomial, Fraction]


class FalsificationError(ArithmeticError):
    """A structural identity that should hold exactly failed."""


@dataclass(frozen=True)
class GenusPolynomial:
    """``sum_p coeffs[p] * y^p`` for a complex ``dim``-fold.

    Coefficients are :class:`ChernPolynomial` (universal form) or
    :class:`~fractions.Fraction` (evaluated on a manifold).
    """

    dim: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.dim + 1:
            raise ValueError(f"expected {self.dim + 1} coefficients, got {len(self.coeffs)}")

    @property
    def is_universal(self) -> bool:
        return isinstance(self.coeffs[0], ChernPolynomial)

    def chi_p(self, p: int) -> Coefficient:
        if not 0 <= p <= self.dim:
            raise IndexError(f"chi^p index {p} outside 0..{self.dim}")
        return self.coeffs[p]

    def as_ypoly(self) -> YPoly:
        if self.is_universal:
            raise TypeError("universal genus has Chern-polynomial coefficients")
        return YPoly(self.coeffs)

    def at(self, y: Fraction | int) -> Coefficient:
        """Specialize ``y``; a universal genus specializes to a Chern polynomial."""
        y = Fraction(y)
        if self.is_universal:
            acc = ChernPolynomial.zero(self.dim)
            for p, c in enumerate(self.coeffs):
                acc = acc + c * y**p
            return acc
        return self.as_ypoly()(y)

    def is_integral(self) -> bool:
        """All χ^p integers -- required of the Chern data of a compact complex manifold."""
        return not self.is_universal and all(is_integral(c) for c in self.coeffs)

    def __mul__(self, other: "GenusPolynomial") -> "GenusPolynomial":
        prod = self.as_ypoly() * other.as_ypoly()
        n = self.dim + other.dim
        return GenusPolynomial(n, tuple(prod.coeff(p) for p in range(n + 1)))

    def __str__(self) -> str:
        if not self.is_universal:
            return render_poly(self.coeffs, "y")
        lines = [f"chi^{p} = {c}" for p, c in enumerate(self.coeffs)]
        return "\n".join(lines)


@dataclass(frozen=True)
class KTable:
    """``K_0 .. K_n`` with ``χ_y = sum_j K_j (y + 1)^j``."""

    dim: int
    entries: tuple[ChernPolynomial, ...]

    def __getitem__(self, j: int) -> ChernPolynomial:
        return self.entries[j]

    def to_genus(self) -> GenusPolynomial:
        """Re-expand in powers of ``y``."""
        n = self.dim
        out = [ChernPolynomial.zero(n) for _ in range(n + 1)]
        for j, k in enumerate(self.entries):
            for p in range(j + 1):
                out[p] = out[p] + k * comb(j, p)
        return GenusPolynomial(n, tuple(out))


@lru_cache(maxsize=None)
def q_coefficients(n: int) -> tuple[YPoly, ...]:
    """Coefficients ``q_0 .. q_n`` of ``x (1 + y e^{-x}) / (1 - e^{-x})``."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    y = YPoly.y()
    one = TruncatedSeries.one(n + 1)
    # (1 - e^{-x}) / x, exact to order n after the shift
    todd_den = (one - TruncatedSeries.exponential(n + 1, -1)).shift_down()
    numer = TruncatedSeries.one(n) + TruncatedSeries.exponential(n, -1) * y
    q = numer / todd_den
    return q.coeffs


@lru_cache(maxsize=None)
def _universal_by_monomial(n: int) -> dict[Partition, YPoly]:
    q = q_coefficients(n)
    parts = partitions(n)
    m_to_e = monomial_to_elementary_matrix(n)
    acc = [YPoly() for _ in parts]
    for lam, row in zip(parts, m_to_e):
        coeff = q[0] ** (n - len(lam))
        for part in lam:
            coeff = coeff * q[part]
        if coeff.is_zero():
            continue
        for idx, c in enumerate(row):
            if c:
                acc[idx] = acc[idx] + coeff * c
    return {mu: poly for mu, poly in zip(parts, acc) if not poly.is_zero()}


def chi_y_by_monomial(n: int) -> dict[Partition, YPoly]:
    """χ_y grouped by Chern monomial: ``{lambda: polynomial in y}``, canonical order."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    table = _universal_by_monomial(n)
    return {lam: table[lam] for lam in partitions(n) if lam in table}


def chi_y_universal(n: int) -> GenusPolynomial:
    """χ_y in Chern numbers for complex dimension ``n``; cached per ``n``."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    table = _universal_by_monomial(n)
    coeffs = tuple(
        ChernPolynomial(n, {mu: poly.coeff(p) for mu, poly in table.items()}) for p in range(n + 1)
    )
    return GenusPolynomial(n, coeffs)


def chi_p(n: int, p: int) -> ChernPolynomial:
    if not 0 <= p <= n:
        raise IndexError(f"chi^p index {p} outside 0..{n}")
    return chi_y_universal(n).coeffs[p]


@lru_cache(maxsize=None)
def k_table(n: int) -> KTable:
    """Taylor coefficients at ``y = -1`` via the substitution ``y = t - 1``."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    shifted = {mu: poly.shift(-1) for mu, poly in _universal_by_monomial(n).items()}
    entries = tuple(
        ChernPolynomial(n, {mu: poly.coeff(j) for mu, poly in shifted.items()}) for j in range(n + 1)
    )
    return KTable(n, entries)


# --------------------------------------------------------------------------
# closed forms for K_0 .. K_4 (c_0 = 1, c_k = 0 outside 0..n)
# --------------------------------------------------------------------------


def _c(n: int, *indices: int, coeff: Fraction | int = 1) -> ChernPolynomial:
    return ChernPolynomial.monomial(indices, coeff, dim=n)


def k_closed_form(n: int, j: int) -> ChernPolynomial:
    """Closed form of ``K_j`` for ``0 <= j <= 4``."""
    if not 0 <= j <= 4:
        raise ValueError("closed forms are known for j <= 4 only")
    F = Fraction
    if j == 0:
        return _c(n, n)
    if j == 1:
        return _c(n, n, coeff=F(-n, 2))
    if j == 2:
        inner = _c(n, n, coeff=F(n * (3 * n - 5), 2)) + _c(n, 1, n - 1)
        return inner * F(1, 12)
    if j == 3:
        inner = _c(n, n, coeff=F(n * (n - 2) * (n - 3), 2)) + _c(n, 1, n - 1, coeff=n - 2)
        return inner * F(-1, 24)
    inner = (
        _c(n, n, coeff=n * (15 * n**3 - 150 * n**2 + 485 * n - 502))
        + _c(n, 1, n - 1, coeff=4 * (15 * n**2 - 85 * n + 108))
        + (_c(n, 1, 1, n - 2) + _c(n, 2, n - 2, coeff=3)) * 8
        - (_c(n, 1, 1, 1, n - 3) - _c(n, 2, 1, n - 3, coeff=3) + _c(n, 3, n - 3, coeff=3)) * 8
    )
    return inner * F(1, 5760)


@dataclass(frozen=True)
class ClosedFormCheck:
    j: int
    computed: ChernPolynomial
    expected: ChernPolynomial
    discrepancy: ChernPolynomial

    @property
    def matches(self) -> bool:
        return self.discrepancy.is_zero()


@dataclass(frozen=True)
class ClosedFormReport:
    dim: int
    checks: tuple[ClosedFormCheck, ...]

    @property
    def all_match(self) -> bool:
        return all(c.matches for c in self.checks)


def verify_k_closed_forms(n: int) -> ClosedFormReport:
    table = k_table(n)
    checks = []
    for j in range(min(n, 4) + 1):
        expected = k_closed_form(n, j)
        checks.append(ClosedFormCheck(j, table[j], expected, table[j] - expected))
    return ClosedFormReport(n, tuple(checks))


# --------------------------------------------------------------------------
# structural claims about K_j
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class OddDependence:
    """``K_{2i+1} = sum_j coefficients[j] * K_{2j}`` with zero residual."""

    index: int
    coefficients: tuple[Fraction, ...]
    residual: ChernPolynomial = field(repr=False)


def odd_k_dependence(n: int) -> tuple[OddDependence, ...]:
    """Solve each odd ``K_{2i+1}`` in the span of ``K_0, K_2, ..., K_{2i}``.

    Raises :class:`FalsificationError` if some odd coefficient is outside that span.
    """
    table = k_table(n)
    out = []
    for i in range((n - 1) // 2 + 1):
        if 2 * i + 1 > n:
            break
        evens = [table[2 * j] for j in range(i + 1)]
        columns = [k.vector() for k in evens]
        a = [list(row) for row in zip(*columns)]
        target = table[2 * i + 1]
        sol = linalg.solve(a, target.vector())
        if sol is None:
            raise FalsificationError(f"K_{2 * i + 1} is not in the span of even K_j (n={n})")
        combo = ChernPolynomial.zero(n)
        for coeff, k in zip(sol, evens):
            combo = combo + k * coeff
        residual = target - combo
        if not residual.is_zero():
            raise FalsificationError(f"nonzero residual for K_{2 * i + 1} (n={n})")
        out.append(OddDependence(2 * i + 1, tuple(sol), residual))
    return tuple(out)


def k_support(n: int, j: int) -> set[int]:
    """Chern-class indices occurring in ``K_j`` for even ``j``."""
    if j % 2 or not 0 <= j <= n:
        raise ValueError("j must be even with 0 <= j <= n")
    return k_table(n)[j].support()


def k_support_bound(n: int, j: int) -> set[int]:
    """Indices allowed in ``K_{2i}``: ``1..2i-1`` and ``n-2i+1..n``.

    The top class ``c_n`` is always allowed, which covers ``K_0 = c_n``.
    """
    i = j // 2
    return set(range(1, 2 * i)) | set(range(max(n - 2 * i + 1, 1), n + 1)) | {n}


# --------------------------------------------------------------------------
# pairing with a manifold
# --------------------------------------------------------------------------


def evaluate(poly: ChernPolynomial, manifold) -> Fraction:
    """Pair ``poly`` with the fundamental class; missing Chern numbers read as 0."""
    if poly.dim != manifold.dim:
        raise ValueError(f"dimension mismatch: polynomial {poly.dim}, manifold {manifold.dim}")
    numbers = manifold.chern_numbers
    return sum((c * numbers.get(lam, 0) for lam, c in poly.terms.items()), Fraction(0))


def evaluate_genus(manifold) -> GenusPolynomial:
    """Evaluated χ_y; check :meth:`GenusPolynomial.is_integral` for plausibility."""
    if manifold.dim < 1:
        raise ValueError("dimension must be >= 1")
    universal = chi_y_universal(manifold.dim)
    return GenusPolynomial(manifold.dim, tuple(evaluate(c, manifold) for c in universal.coeffs))


def evaluate_k(manifold) -> tuple[Fraction, ...]:
    return tuple(evaluate(k, manifold) for k in k_table(manifold.dim).entries)


def format_coefficients(values: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]
