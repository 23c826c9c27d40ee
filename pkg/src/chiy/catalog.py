"""Chern data of reference manifolds and the JSON descriptor format.

A descriptor is a JSON object::

    {
      "name": "CP^2",                       # optional
      "dim": 2,
      "chern_numbers": {"2": "3", "1,1": "9"},
      "hodge": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]   # optional, row p, column q
    }

Keys of ``chern_numbers`` are comma-separated weakly decreasing positive
integers (the partition ``lambda`` of ``c_lambda``); values are exact
rationals written ``"p"`` or ``"p/q"`` (JSON integers are also accepted).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from typing import Any, Mapping, Sequence

from .genus import GenusPolynomial, evaluate_genus
from .partitions import Partition, partitions
from .rational import format_rational, is_integral, parse_rational
from .series import TruncatedSeries

Hodge = tuple[tuple[int, ...], ...]


class DescriptorError(ValueError):
    """Base class for rejected manifold descriptors."""


class MalformedDescriptorError(DescriptorError):
    pass


class MalformedKeyError(DescriptorError):
    pass


class WeightError(DescriptorError):
    pass


class HodgeMismatchError(DescriptorError):
    pass


@dataclass(frozen=True)
class ManifoldChernData:
    name: str
    dim: int
    chern_numbers: Mapping[Partition, Fraction]
    hodge: Hodge | None = None
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        clean = {}
        for lam, v in self.chern_numbers.items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.weight != self.dim:
                raise WeightError(f"partition {lam.key()!r} has weight {lam.weight}, expected {self.dim}")
            clean[lam] = Fraction(v)
        object.__setattr__(self, "chern_numbers", clean)
        if self.hodge is not None:
            grid = tuple(tuple(int(h) for h in row) for row in self.hodge)
            if len(grid) != self.dim + 1 or any(len(row) != self.dim + 1 for row in grid):
                raise MalformedDescriptorError(f"hodge grid must be {self.dim + 1}x{self.dim + 1}")
            if any(h < 0 for row in grid for h in row):
                raise MalformedDescriptorError("hodge numbers must be nonnegative")
            object.__setattr__(self, "hodge", grid)

    def chern_number(self, lam) -> Fraction:
        return self.chern_numbers.get(Partition(lam), Fraction(0))

    @property
    def is_geometric(self) -> bool:
        """All Chern numbers integral (a necessary condition for a genuine manifold)."""
        return all(is_integral(v) for v in self.chern_numbers.values())

    def full_numbers(self) -> dict[Partition, Fraction]:
        return {lam: self.chern_number(lam) for lam in partitions(self.dim)}


# --------------------------------------------------------------------------
# Hodge-side computations
# --------------------------------------------------------------------------


def chi_y_from_hodge(hodge: Sequence[Sequence[int]]) -> GenusPolynomial:
    """``χ^p = sum_q (-1)^q h^{p,q}``."""
    n = len(hodge) - 1
    coeffs = tuple(Fraction(sum((-1) ** q * h for q, h in enumerate(row))) for row in hodge)
    return GenusPolynomial(n, coeffs)


def kunneth(a: Hodge, b: Hodge) -> Hodge:
    m, n = len(a) - 1, len(b) - 1
    out = [[0] * (m + n + 1) for _ in range(m + n + 1)]
    for p1, q1 in itertools.product(range(m + 1), repeat=2):
        h1 = a[p1][q1]
        if not h1:
            continue
        for p2, q2 in itertools.product(range(n + 1), repeat=2):
            out[p1 + p2][q1 + q2] += h1 * b[p2][q2]
    return tuple(tuple(row) for row in out)


def _check_hodge(m: ManifoldChernData) -> None:
    if m.hodge is None:
        return
    from_hodge = chi_y_from_hodge(m.hodge)
    from_chern = evaluate_genus(m)
    if from_hodge.coeffs != from_chern.coeffs:
        raise HodgeMismatchError(
            f"{m.name}: chi_y from Hodge numbers ({from_hodge}) differs from chi_y from Chern numbers ({from_chern})"
        )


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------


def _numbers_from_total_class(n: int, total: Sequence[Fraction | int], degree: Fraction | int = 1):
    """Chern numbers when ``c = sum_k total[k] h^k`` and ``h^n[M] = degree``."""
    out = {}
    for lam in partitions(n):
        v = Fraction(degree)
        for part in lam:
            v *= total[part]
        out[lam] = v
    return out


def projective_space(n: int) -> ManifoldChernData:
    if n < 1:
        raise ValueError("dimension must be >= 1")
    total = [comb(n + 1, k) for k in range(n + 1)]
    hodge = tuple(tuple(int(p == q) for q in range(n + 1)) for p in range(n + 1))
    return ManifoldChernData(f"CP^{n}", n, _numbers_from_total_class(n, total), hodge)


def complex_torus(n: int) -> ManifoldChernData:
    if n < 1:
        raise ValueError("dimension must be >= 1")
    hodge = tuple(tuple(comb(n, p) * comb(n, q) for q in range(n + 1)) for p in range(n + 1))
    return ManifoldChernData(f"T^{n}", n, {lam: Fraction(0) for lam in partitions(n)}, hodge)


def hypersurface(n: int, d: int) -> ManifoldChernData:
    """Smooth degree-``d`` hypersurface in ``CP^(n+1)``; ``c = (1+h)^(n+2) / (1+dh)``."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    ambient = TruncatedSeries([comb(n + 2, k) for k in range(n + 1)], n)
    normal = TruncatedSeries([1, d], n)
    total = [c.coeff(0) for c in (ambient / normal).coeffs]
    return ManifoldChernData(f"X_{d}^{n}", n, _numbers_from_total_class(n, total, d))


def k3_surface() -> ManifoldChernData:
    """Quartic surface with its standard Hodge diamond attached."""
    k3 = hypersurface(2, 4)
    return replace(k3, name="K3", hodge=((1, 0, 1), (0, 20, 0), (1, 0, 1)))


def proportionality(dual: ManifoldChernData, todd: Fraction | int) -> ManifoldChernData:
    """Chern data of a compact quotient whose compact dual is ``dual`` and Todd genus ``todd``."""
    todd = Fraction(todd)
    if todd == 0:
        raise ValueError("proportionality factor (a Todd genus) must be nonzero")
    numbers = {lam: v * todd for lam, v in dual.full_numbers().items()}
    return ManifoldChernData(f"prop({dual.name}, {format_rational(todd)})", dual.dim, numbers)


def ball_quotient(n: int) -> ManifoldChernData:
    """Compact ball quotient with Todd genus ``(-1)^n``; no Hodge grid is attached."""
    m = proportionality(projective_space(n), (-1) ** n)
    return replace(m, name=f"B^{n}/Gamma")


def product(m: ManifoldChernData, n: ManifoldChernData) -> ManifoldChernData:
    """``M x N`` via the Whitney rule and Kunneth."""
    dm, dn = m.dim, n.dim
    total = dm + dn
    out = {}
    for lam in partitions(total):
        value = Fraction(0)
        # c_k(MxN) = sum_{i+j=k} c_i(M) c_j(N); expand the product over the parts
        for split in itertools.product(*(range(max(0, k - dn), min(k, dm) + 1) for k in lam)):
            if sum(split) != dm:
                continue
            left = Partition.from_indices(i for i in split if i)
            right = Partition.from_indices(k - i for k, i in zip(lam, split) if k - i)
            a = m.chern_number(left)
            if a:
                value += a * n.chern_number(right)
        out[lam] = value
    hodge = kunneth(m.hodge, n.hodge) if m.hodge is not None and n.hodge is not None else None
    return ManifoldChernData(f"{m.name} x {n.name}", total, out, hodge)


# --------------------------------------------------------------------------
# descriptors
# --------------------------------------------------------------------------


def from_descriptor(document: Mapping[str, Any] | str) -> ManifoldChernData:
    """Parse and validate a descriptor (a mapping or JSON text)."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise MalformedDescriptorError(f"invalid JSON: {exc}") from None
    if not isinstance(document, Mapping):
        raise MalformedDescriptorError("descriptor must be an object")
    dim = document.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MalformedDescriptorError("'dim' must be a positive integer")
    raw = document.get("chern_numbers", {})
    if not isinstance(raw, Mapping):
        raise MalformedDescriptorError("'chern_numbers' must be an object")
    numbers: dict[Partition, Fraction] = {}
    for key, value in raw.items():
        try:
            lam = Partition.from_key(str(key))
        except ValueError as exc:
            raise MalformedKeyError(f"bad partition key {key!r}: {exc}") from None
        if not lam:
            raise MalformedKeyError("empty partition key")
        if lam.weight != dim:
            raise WeightError(f"partition {key!r} has weight {lam.weight}, expected {dim}")
        if lam in numbers:
            raise MalformedKeyError(f"duplicate partition key {key!r}")
        try:
            numbers[lam] = parse_rational(value)
        except ValueError as exc:
            raise MalformedDescriptorError(f"value for {key!r}: {exc}") from None
    warnings = [f"missing Chern number c[{lam.key()}], read as 0" for lam in partitions(dim) if lam not in numbers]
    for lam in partitions(dim):
        numbers.setdefault(lam, Fraction(0))
    hodge = document.get("hodge")
    if hodge is not None:
        if not isinstance(hodge, list) or not all(isinstance(row, list) for row in hodge):
            raise MalformedDescriptorError("'hodge' must be an array of arrays")
        if any(isinstance(h, bool) or not isinstance(h, int) for row in hodge for h in row):
            raise MalformedDescriptorError("hodge numbers must be integers")
    name = document.get("name") or "M"
    if not isinstance(name, str):
        raise MalformedDescriptorError("'name' must be text")
    m = ManifoldChernData(name, dim, numbers, hodge)
    if not m.is_geometric:
        warnings.append("non-integral Chern numbers: not the data of a compact complex manifold")
    _check_hodge(m)
    return replace(m, warnings=tuple(warnings))


def to_descriptor(m: ManifoldChernData) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": m.name,
        "dim": m.dim,
        "chern_numbers": {lam.key(): format_rational(v) for lam, v in m.full_numbers().items()},
    }
    if m.hodge is not None:
        doc["hodge"] = [list(row) for row in m.hodge]
    return doc


def build(family: str, params: Sequence[int]) -> ManifoldChernData:
    """Catalog entry by family name, as used on the command line."""
    arity = {"cp": 1, "torus": 1, "hypersurface": 2, "ball-quotient": 1, "k3": 0}
    if family not in arity:
        raise ValueError(f"unknown family {family!r}")
    if len(params) != arity[family]:
        raise ValueError(f"family {family!r} takes {arity[family]} integer parameter(s)")
    if family == "cp":
        return projective_space(*params)
    if family == "torus":
        return complex_torus(*params)
    if family == "hypersurface":
        return hypersurface(*params)
    if family == "ball-quotient":
        return ball_quotient(*params)
    return k3_surface()


def parse_factor(text: str) -> ManifoldChernData:
    """Catalog entry from ``"family:p1,p2"``, e.g. ``"cp:2"`` or ``"hypersurface:2,4"``."""
    family, _, args = text.partition(":")
    try:
        params = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise ValueError(f"bad parameters in {text!r}") from None
    return build(family.strip(), params)
