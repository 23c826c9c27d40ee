"""Exact χ_y-genus machinery and Chern-number inequality audits."""

from .audit import (
    AuditReport,
    L2Reconstruction,
    hyperbolic_audit,
    nonelliptic_audit,
    serre_check,
    specializations,
    yau_audit,
)
from .catalog import (
    ManifoldChernData,
    ball_quotient,
    complex_torus,
    from_descriptor,
    hypersurface,
    k3_surface,
    product,
    projective_space,
    proportionality,
    to_descriptor,
)
from .genus import (
    GenusPolynomial,
    KTable,
    chi_p,
    chi_y_universal,
    evaluate,
    evaluate_genus,
    k_support,
    k_table,
    odd_k_dependence,
    q_coefficients,
    verify_k_closed_forms,
)
from .partitions import Partition, partitions
from .series import TruncatedSeries, YPoly, series_divide
from .symmetric import ChernPolynomial, elementary_to_monomial_matrix, monomial_to_elementary

__version__ = "0.1.0"
