"""Chern polynomials and the elementary/monomial symmetric-function bases.

Chern classes are the elementary symmetric polynomials of the Chern roots, so
a weight-``n`` polynomial in ``c_1, ..., c_n`` is a symmetric polynomial in
``n`` roots written in the ``e`` basis. The transition to the monomial basis
``m`` is built combinatorially (0/1 matrix counts) and inverted exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import _kernels
from .linalg import Matrix, inverse
from .partitions import Partition, partition_index, partitions
from .rational import format_rational


class ChernPolynomial:
    """Rational linear combination of weight-``dim`` Chern monomials ``c_lambda``."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Partition | tuple, Fraction | int] | None = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        clean: dict[Partition, Fraction] = {}
        for lam, coeff in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.weight != dim:
                raise ValueError(f"monomial {lam.key()!r} has weight {lam.weight}, expected {dim}")
            coeff = Fraction(coeff)
            if coeff:
                clean[lam] = clean.get(lam, Fraction(0)) + coeff
                if not clean[lam]:
                    del clean[lam]
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ChernPolynomial is immutable")

    @classmethod
    def zero(cls, dim: int) -> "ChernPolynomial":
        return cls(dim)

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff: Fraction | int = 1, *, dim: int | None = None) -> "ChernPolynomial":
        """``coeff * c_{i_1} c_{i_2} ...`` with ``c_0 = 1`` and out-of-range ``c_k = 0``.

        ``dim`` defaults to the total weight; an index above ``dim`` or below
        zero makes the monomial vanish.
        """
        indices = list(indices)
        if dim is None:
            dim = sum(i for i in indices if i > 0)
        if any(i < 0 or i > dim for i in indices):
            return cls(dim)
        lam = Partition.from_indices(i for i in indices if i > 0)
        if lam.weight != dim:
            raise ValueError(f"monomial weight {lam.weight} does not match dimension {dim}")
        return cls(dim, {lam: coeff})

    def coeff(self, lam: Partition | tuple) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "ChernPolynomial") -> None:
        if not isinstance(other, ChernPolynomial):
            raise TypeError("expected a ChernPolynomial")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "ChernPolynomial") -> "ChernPolynomial":
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return ChernPolynomial(self.dim, out)

    def __neg__(self) -> "ChernPolynomial":
        return ChernPolynomial(self.dim, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "ChernPolynomial") -> "ChernPolynomial":
        return self + (-other)

    def __mul__(self, scalar) -> "ChernPolynomial":
        if isinstance(scalar, ChernPolynomial):
            return self.product(scalar)
        scalar = Fraction(scalar)
        return ChernPolynomial(self.dim, {lam: c * scalar for lam, c in self.terms.items()})

    __rmul__ = __mul__

    def product(self, other: "ChernPolynomial") -> "ChernPolynomial":
        """Product in the graded ring; weights add."""
        out: dict[Partition, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                lam = Partition.from_indices(a + b)
                out[lam] = out.get(lam, Fraction(0)) + ca * cb
        return ChernPolynomial(self.dim + other.dim, out)

    def support(self) -> set[int]:
        """Chern-class indices appearing with nonzero coefficient."""
        return {i for lam in self.terms for i in lam}

    def vector(self) -> list[Fraction]:
        """Coordinates in the reverse-lexicographic partition basis."""
        return [self.coeff(lam) for lam in partitions(self.dim)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"ChernPolynomial({self.dim}, {{{', '.join(f'{k.key()!r}: {format_rational(v)!r}' for k, v in self.sorted_terms())}}})"

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        order = partition_index(self.dim)
        return sorted(self.terms.items(), key=lambda kv: order[kv[0]])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.sorted_terms():
            mono = monomial_name(lam)
            mag = abs(c)
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def monomial_name(lam: Partition) -> str:
    """``(2, 1, 1)`` -> ``"c2*c1^2"``; the empty partition is ``"1"``."""
    if not lam:
        return "1"
    out = []
    for i in sorted(set(lam), reverse=True):
        k = lam.count(i)
        out.append(f"c{i}" if k == 1 else f"c{i}^{k}")
    return "*".join(out)


@lru_cache(maxsize=None)
def _e_to_m(w: int) -> tuple[tuple[int, ...], ...]:
    parts = partitions(w)
    return tuple(tuple(_kernels.count_01_matrices(mu, lam) for lam in parts) for mu in parts)


def elementary_to_monomial_matrix(w: int) -> Matrix:
    """Square matrix, rows ``e_mu`` and columns ``m_lambda``, both over ``partitions(w)``.

    Entry ``(mu, lam)`` is the coefficient of ``m_lam`` in ``e_mu_1 ... e_mu_k``.
    """
    if w < 1:
        raise ValueError("weight must be >= 1")
    return [[Fraction(v) for v in row] for row in _e_to_m(w)]


@lru_cache(maxsize=None)
def _m_to_e(w: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in inverse(_e_to_m(w)))


def monomial_to_elementary_matrix(w: int) -> Matrix:
    """Inverse of :func:`elementary_to_monomial_matrix`: rows ``m_lambda``, columns ``e_mu``."""
    if w < 1:
        raise ValueError("weight must be >= 1")
    return [list(row) for row in _m_to_e(w)]


def monomial_to_elementary(lam: Partition | tuple, n: int) -> ChernPolynomial:
    """Express ``m_lam(x_1, ..., x_n)`` in ``c_i = e_i(x_1, ..., x_n)``.

    >>> str(monomial_to_elementary((2,), 2))
    '-2*c2 + c1^2'
    """
    lam = Partition(lam)
    if lam.weight != n:
        raise ValueError(f"partition weight {lam.weight} differs from the number of variables {n}")
    if n == 0:
        return ChernPolynomial(0, {Partition(): 1})
    row = _m_to_e(n)[partition_index(n)[lam]]
    return ChernPolynomial(n, dict(zip(partitions(n), row)))


def evaluate_elementary(poly: ChernPolynomial, x: Iterable[int]) -> Fraction:
    """Substitute explicit values for the Chern roots (``c_i = e_i(x)``)."""
    x = list(x)
    e = [1] + [0] * len(x)
    for v in x:
        for k in range(len(x), 0, -1):
            e[k] += e[k - 1] * v
    total = Fraction(0)
    for lam, c in poly.terms.items():
        term = c
        for i in lam:
            term *= e[i] if i <= len(x) else 0
        total += term
    return total
