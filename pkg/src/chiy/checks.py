"""Structural identities of the universal χ_y-genus, one boolean per claim."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .catalog import projective_space
from .genus import (
    FalsificationError,
    chi_y_universal,
    evaluate,
    k_support,
    k_support_bound,
    k_table,
    odd_k_dependence,
    verify_k_closed_forms,
)
from .symmetric import ChernPolynomial


def duality_holds(n: int) -> bool:
    """``χ^p = (-1)^n χ^(n-p)`` as Chern polynomials."""
    g = chi_y_universal(n)
    return all(g.coeffs[p] == g.coeffs[n - p] * (-1) ** n for p in range(n + 1))


def euler_collapse_holds(n: int) -> bool:
    """χ_y at ``y = -1`` is the single monomial ``c_n``."""
    return chi_y_universal(n).at(-1) == ChernPolynomial.monomial([n])


def k_consistency_holds(n: int) -> bool:
    """``sum_j K_j (y+1)^j`` re-expands to χ_y."""
    return k_table(n).to_genus().coeffs == chi_y_universal(n).coeffs


def odd_dependence_holds(n: int) -> bool:
    try:
        deps = odd_k_dependence(n)
    except FalsificationError:
        return False
    if not all(d.residual.is_zero() for d in deps):
        return False
    # K_1 = (-n/2) K_0
    return not deps or deps[0].coefficients == (Fraction(-n, 2),)


def support_holds(n: int) -> bool:
    return all(k_support(n, j) <= k_support_bound(n, j) for j in range(0, n + 1, 2))


def cpn_bound_holds(n: int) -> bool:
    """``(-1)^j K_j[CP^n] = sum_{p>=j} C(p, j) = C(n+1, j+1)``."""
    cp = projective_space(n)
    table = k_table(n)
    for j in range(n + 1):
        value = (-1) ** j * evaluate(table[j], cp)
        if value != sum(comb(p, j) for p in range(j, n + 1)) or value != comb(n + 1, j + 1):
            return False
    return True


@dataclass(frozen=True)
class StructuralReport:
    dim: int
    results: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.results.values())


def structural_report(n: int) -> StructuralReport:
    results = {
        "duality": duality_holds(n),
        "euler_collapse": euler_collapse_holds(n),
        "k_consistency": k_consistency_holds(n),
        "closed_forms": verify_k_closed_forms(n).all_match,
        "odd_dependence": odd_dependence_holds(n),
        "support": support_holds(n),
        "cpn_bound": cpn_bound_holds(n),
    }
    return StructuralReport(n, results)
