"""Chern-number inequality audits.

All audits test necessary conditions only: passing never certifies that a
manifold is Kähler hyperbolic or Kähler non-elliptic.

Hyperbolic mode
    For ``0 <= i <= n/2``: ``(-1)^n K_{2i}[M] >= K_{2i}[CP^n] = C(n+1, 2i+1)``.
    The conventional integer normalizations ``A_0 = (-1)^n K_0``,
    ``A_1 = 12 (-1)^n K_2`` and ``A_2 = 5760 (-1)^n K_4`` are reported next to
    the ``K``-form values; positive scaling does not change any verdict.

Non-elliptic mode
    For ``0 <= i <= n/2``: ``(-1)^n K_{2i}[M] >= 0``. This is the form that
    follows from ``χ^p = (-1)^(n-p) h^{p,n-p}_(2)`` with ``h_(2) >= 0``. A
    differently normalized statement, ``(-1)^n A_i >= 0`` with
    ``A_i = (-1)^n K_{2i}``, would reduce to ``K_{2i} >= 0`` instead; the two
    disagree in odd dimension and only the former is checked here.

Yau mode
    ``c_2 (-c_1)^(n-2)[M] >= n / (2(n+1)) (-c_1)^n[M]``, with equality exactly
    for quotients of the unit ball.

L²-reconstruction
    ``h^{p,n-p}_(2) = (-1)^(n-p) χ^p[M]``; hyperbolic manifolds need every value
    to be a positive integer, non-elliptic ones a nonnegative integer.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Sequence

from .catalog import ManifoldChernData, chi_y_from_hodge
from .genus import GenusPolynomial, evaluate, evaluate_genus, k_table
from .partitions import Partition
from .rational import format_rational, is_integral, parse_rational

STRICT = "strict"
EQUALITY = "equality"
VIOLATED = "violated"

HYPERBOLIC = "hyperbolic"
NONELLIPTIC = "nonelliptic"
YAU = "yau"
MODES = (HYPERBOLIC, NONELLIPTIC, YAU)

# denominators of K_0, K_2, K_4 in their closed forms
DISPLAY_FACTORS = {0: 1, 1: 12, 2: 5760}

NECESSARY_ONLY = "necessary conditions only; the audit does not decide whether M is hyperbolic or non-elliptic"


def verdict(left: Fraction, right: Fraction) -> str:
    if left > right:
        return STRICT
    if left == right:
        return EQUALITY
    return VIOLATED


@dataclass(frozen=True)
class CheckRecord:
    index: int
    left: Fraction
    right: Fraction
    verdict: str
    label: str = ""
    display_factor: int | None = None

    @property
    def display_left(self) -> Fraction | None:
        return None if self.display_factor is None else self.left * self.display_factor

    @property
    def display_right(self) -> Fraction | None:
        return None if self.display_factor is None else self.right * self.display_factor

    def to_dict(self) -> dict[str, Any]:
        out = {
            "index": self.index,
            "label": self.label,
            "left": format_rational(self.left),
            "right": format_rational(self.right),
            "verdict": self.verdict,
        }
        if self.display_factor is not None:
            out["display_factor"] = self.display_factor
            out["display_left"] = format_rational(self.display_left)
            out["display_right"] = format_rational(self.display_right)
        return out

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CheckRecord":
        return cls(
            index=d["index"],
            left=parse_rational(d["left"]),
            right=parse_rational(d["right"]),
            verdict=d["verdict"],
            label=d.get("label", ""),
            display_factor=d.get("display_factor"),
        )


@dataclass(frozen=True)
class L2Reconstruction:
    """Candidate ``h^{p,n-p}_(2)`` values, ``p = 0..n``."""

    values: tuple[Fraction, ...]

    @property
    def integral(self) -> tuple[bool, ...]:
        return tuple(is_integral(v) for v in self.values)

    @property
    def positive(self) -> tuple[bool, ...]:
        return tuple(v >= 1 for v in self.values)

    @property
    def nonnegative(self) -> tuple[bool, ...]:
        return tuple(v >= 0 for v in self.values)

    def consistent(self, mode: str) -> bool:
        sign_ok = self.positive if mode == HYPERBOLIC else self.nonnegative
        return all(self.integral) and all(sign_ok)

    def to_dict(self) -> dict[str, Any]:
        return {
            "values": [format_rational(v) for v in self.values],
            "integral": list(self.integral),
            "positive": list(self.positive),
            "nonnegative": list(self.nonnegative),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "L2Reconstruction":
        return cls(tuple(parse_rational(v) for v in d["values"]))


@dataclass(frozen=True)
class AuditReport:
    manifold: str
    mode: str
    dim: int
    checks: tuple[CheckRecord, ...]
    chi_p_pattern_from: int | None = None
    full_cpn_pattern: bool | None = None
    l2_reconstruction: L2Reconstruction | None = None
    warnings: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def violated(self) -> bool:
        if any(c.verdict == VIOLATED for c in self.checks):
            return True
        return self.l2_reconstruction is not None and not self.l2_reconstruction.consistent(self.mode)

    @property
    def all_equality(self) -> bool:
        return all(c.verdict == EQUALITY for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "manifold": self.manifold,
            "mode": self.mode,
            "dim": self.dim,
            "checks": [c.to_dict() for c in self.checks],
            "chi_p_pattern_from": self.chi_p_pattern_from,
            "full_cpn_pattern": self.full_cpn_pattern,
            "l2_reconstruction": None if self.l2_reconstruction is None else self.l2_reconstruction.to_dict(),
            "violated": self.violated,
            "warnings": list(self.warnings),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "AuditReport":
        l2 = d.get("l2_reconstruction")
        return cls(
            manifold=d["manifold"],
            mode=d["mode"],
            dim=d["dim"],
            checks=tuple(CheckRecord.from_dict(c) for c in d["checks"]),
            chi_p_pattern_from=d.get("chi_p_pattern_from"),
            full_cpn_pattern=d.get("full_cpn_pattern"),
            l2_reconstruction=None if l2 is None else L2Reconstruction.from_dict(l2),
            warnings=tuple(d.get("warnings", ())),
            notes=tuple(d.get("notes", ())),
        )


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def cpn_bound(n: int, j: int) -> int:
    """``K_j[CP^n]`` up to the sign ``(-1)^j``: ``C(n+1, j+1)``."""
    return comb(n + 1, j + 1)


def chi_p_pattern_start(genus: GenusPolynomial) -> int | None:
    """Smallest ``p0`` with ``χ^p = (-1)^(n-p)`` for all ``p0 <= p <= n``."""
    n = genus.dim
    start = None
    for p in range(n, -1, -1):
        if genus.coeffs[p] != (-1) ** (n - p):
            break
        start = p
    return start


def full_cpn_pattern(genus: GenusPolynomial) -> bool:
    """``χ_y(M) = (-1)^n χ_y(CP^n)``."""
    n = genus.dim
    return all(c == (-1) ** (n + p) for p, c in enumerate(genus.coeffs))


def l2_reconstruction(genus: GenusPolynomial) -> L2Reconstruction:
    n = genus.dim
    return L2Reconstruction(tuple(Fraction((-1) ** (n - p)) * c for p, c in enumerate(genus.coeffs)))


def _data_warnings(m: ManifoldChernData, genus: GenusPolynomial) -> list[str]:
    out = list(m.warnings)
    if not m.is_geometric and not any("non-integral Chern" in w for w in out):
        out.append("non-integral Chern numbers: not the data of a compact complex manifold")
    if not genus.is_integral():
        out.append("non-integral chi^p: not the data of a compact complex manifold")
    return out


def _even_k_checks(m: ManifoldChernData, bound) -> tuple[CheckRecord, ...]:
    n = m.dim
    table = k_table(n)
    sign = (-1) ** n
    checks = []
    for i in range(n // 2 + 1):
        left = sign * evaluate(table[2 * i], m)
        right = Fraction(bound(n, 2 * i))
        checks.append(
            CheckRecord(
                index=i,
                left=left,
                right=right,
                verdict=verdict(left, right),
                label=f"(-1)^n K_{2 * i}",
                display_factor=DISPLAY_FACTORS.get(i),
            )
        )
    return tuple(checks)


# --------------------------------------------------------------------------
# audits
# --------------------------------------------------------------------------


def hyperbolic_audit(m: ManifoldChernData) -> AuditReport:
    genus = evaluate_genus(m)
    checks = _even_k_checks(m, cpn_bound)
    notes = [NECESSARY_ONLY]
    equal = [c.index for c in checks if c.verdict == EQUALITY]
    if equal:
        notes.append(
            "equality at index i corresponds to chi^p = (-1)^(n-p) for 2i <= p <= n; "
            "for i <= (n+1)/4 it corresponds to chi_y(M) = (-1)^n chi_y(CP^n)"
        )
    return AuditReport(
        manifold=m.name,
        mode=HYPERBOLIC,
        dim=m.dim,
        checks=checks,
        chi_p_pattern_from=chi_p_pattern_start(genus),
        full_cpn_pattern=full_cpn_pattern(genus),
        l2_reconstruction=l2_reconstruction(genus),
        warnings=tuple(_data_warnings(m, genus)),
        notes=tuple(notes),
    )


def nonelliptic_audit(m: ManifoldChernData) -> AuditReport:
    genus = evaluate_genus(m)
    checks = _even_k_checks(m, lambda n, j: 0)
    return AuditReport(
        manifold=m.name,
        mode=NONELLIPTIC,
        dim=m.dim,
        checks=checks,
        chi_p_pattern_from=chi_p_pattern_start(genus),
        full_cpn_pattern=full_cpn_pattern(genus),
        l2_reconstruction=l2_reconstruction(genus),
        warnings=tuple(_data_warnings(m, genus)),
        notes=(NECESSARY_ONLY,),
    )


def yau_audit(m: ManifoldChernData) -> AuditReport:
    n = m.dim
    if n < 2:
        raise ValueError("the Yau inequality needs dimension >= 2")
    c2c1 = m.chern_number(Partition((2,) + (1,) * (n - 2)))
    c1n = m.chern_number(Partition((1,) * n))
    left = (-1) ** (n - 2) * c2c1
    neg_c1n = (-1) ** n * c1n
    right = Fraction(n, 2 * (n + 1)) * neg_c1n
    check = CheckRecord(0, left, right, verdict(left, right), label="c_2 (-c_1)^(n-2) vs n/(2(n+1)) (-c_1)^n")
    warnings = list(m.warnings)
    if not m.is_geometric:
        warnings.append("non-integral Chern numbers: not the data of a compact complex manifold")
    if neg_c1n <= 0:
        warnings.append("(-c_1)^n <= 0: the canonical bundle cannot be ample, so M is not hyperbolic")
    notes = [NECESSARY_ONLY]
    if check.verdict == EQUALITY:
        notes.append("equality holds if and only if M is covered by the unit ball")
    return AuditReport(
        manifold=m.name,
        mode=YAU,
        dim=n,
        checks=(check,),
        warnings=tuple(warnings),
        notes=tuple(notes),
    )


def audit(m: ManifoldChernData, mode: str) -> AuditReport:
    if mode == HYPERBOLIC:
        return hyperbolic_audit(m)
    if mode == NONELLIPTIC:
        return nonelliptic_audit(m)
    if mode == YAU:
        return yau_audit(m)
    raise ValueError(f"unknown audit mode {mode!r}")


# --------------------------------------------------------------------------
# Hodge-grid checks and specializations
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SerreVerdict:
    passed: bool
    asymmetric: tuple[tuple[int, int], ...]
    chi_relation: bool

    def to_dict(self) -> dict[str, Any]:
        return {k: (list(map(list, v)) if k == "asymmetric" else v) for k, v in asdict(self).items()}


def serre_check(hodge: Sequence[Sequence[int]]) -> SerreVerdict:
    """``h^{p,q} = h^{n-p,n-q}`` cell by cell, and ``χ^p = (-1)^n χ^(n-p)``."""
    n = len(hodge) - 1
    bad = tuple(
        (p, q) for p in range(n + 1) for q in range(n + 1) if hodge[p][q] != hodge[n - p][n - q]
    )
    chi = chi_y_from_hodge(hodge).coeffs
    relation = all(chi[p] == (-1) ** n * chi[n - p] for p in range(n + 1))
    return SerreVerdict(not bad and relation, bad, relation)


@dataclass(frozen=True)
class Specializations:
    euler: Fraction
    todd: Fraction
    signature: Fraction

    def to_dict(self) -> dict[str, str]:
        return {k: format_rational(v) for k, v in asdict(self).items()}


def specializations(genus: GenusPolynomial) -> Specializations:
    """χ_y at ``y = -1, 0, 1``."""
    return Specializations(genus.at(-1), genus.at(0), genus.at(1))
