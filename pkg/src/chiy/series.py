"""Univariate polynomials in ``y`` and power series in ``x`` truncated at a fixed order.

The coefficient ring of :class:`TruncatedSeries` is ``Q[y]`` (:class:`YPoly`),
which is what the χ_y integrand ``x(1 + y e^{-x}) / (1 - e^{-x})`` needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .rational import format_rational


class IllPosedDivision(ZeroDivisionError):
    """Divisor series has no invertible constant term."""


class YPoly:
    """Immutable polynomial in ``y`` with rational coefficients (low degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("YPoly is immutable")

    @classmethod
    def constant(cls, c: Fraction | int) -> "YPoly":
        return cls((c,))

    @classmethod
    def y(cls) -> "YPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other) -> "YPoly":
        other = _as_ypoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return YPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "YPoly":
        return YPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "YPoly":
        return self + (-_as_ypoly(other))

    def __rsub__(self, other) -> "YPoly":
        return _as_ypoly(other) - self

    def __mul__(self, other) -> "YPoly":
        other = _as_ypoly(other)
        if self.is_zero() or other.is_zero():
            return YPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return YPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "YPoly":
        if e < 0:
            raise ValueError("negative power")
        result = YPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        try:
            return self.coeffs == _as_ypoly(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, y: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def shift(self, a: Fraction | int) -> "YPoly":
        """Return ``p(t + a)`` as a polynomial in ``t``."""
        a = Fraction(a)
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            apow = Fraction(1)
            # (t + a)^k = sum_j C(k, j) a^(k-j) t^j
            for j in range(k, -1, -1):
                out[j] += c * comb(k, j) * apow
                apow *= a
        return YPoly(out)

    def __repr__(self) -> str:
        return f"YPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return render_poly(self.coeffs, "y")


def _as_ypoly(value) -> YPoly:
    if isinstance(value, YPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return YPoly.constant(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to YPoly")


def render_poly(coeffs: Sequence[Fraction], var: str) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class TruncatedSeries:
    """Power series ``sum_k a_k x^k`` with ``a_k`` in ``Q[y]``, kept up to ``x^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [_as_ypoly(c) for c in coeffs][: order + 1]
        cs += [YPoly()] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def exponential(cls, order: int, scale: Fraction | int = 1) -> "TruncatedSeries":
        """``exp(scale * x)`` truncated at ``order``."""
        scale = Fraction(scale)
        return cls([scale**k / factorial(k) for k in range(order + 1)], order)

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError("truncation orders differ")

    def __getitem__(self, k: int) -> YPoly:
        return self.coeffs[k]

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, YPoly)):
            other = TruncatedSeries([other], self.order)
        self._check(other)
        return TruncatedSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, YPoly)):
            other = TruncatedSeries([other], self.order)
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return TruncatedSeries([other], self.order) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, YPoly)):
            return TruncatedSeries((a * other for a in self.coeffs), self.order)
        self._check(other)
        n = self.order
        out = [YPoly()] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_divide(self, other)

    def compose_neg(self) -> "TruncatedSeries":
        """Substitute ``x -> -x``."""
        return TruncatedSeries(
            (a if k % 2 == 0 else -a for k, a in enumerate(self.coeffs)), self.order
        )

    def shift_down(self) -> "TruncatedSeries":
        """Divide by ``x``; the constant coefficient must vanish and one order is lost."""
        if not self.coeffs[0].is_zero():
            raise IllPosedDivision("series is not divisible by x")
        if self.order == 0:
            raise ValueError("cannot divide an order-0 series by x")
        return TruncatedSeries(self.coeffs[1:], self.order - 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_divide(numerator: TruncatedSeries, denominator: TruncatedSeries) -> TruncatedSeries:
    """Quotient of two series at their shared truncation order.

    The divisor's ``x^0`` coefficient must be a nonzero rational constant.
    """
    numerator._check(denominator)
    lead = denominator.coeffs[0]
    if not lead.is_constant() or lead.is_zero():
        raise IllPosedDivision("divisor constant term is not an invertible rational")
    inv = 1 / lead.coeff(0)
    n = numerator.order
    q: list[YPoly] = []
    for k in range(n + 1):
        acc = numerator.coeffs[k]
        for i in range(k):
            d = denominator.coeffs[k - i]
            if not d.is_zero():
                acc = acc - q[i] * d
        q.append(acc * inv)
    return TruncatedSeries(q, n)
