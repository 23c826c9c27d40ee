import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chiy.audit import (
    DISPLAY_FACTORS,
    EQUALITY,
    STRICT,
    VIOLATED,
    AuditReport,
    audit,
    cpn_bound,
    hyperbolic_audit,
    nonelliptic_audit,
    serre_check,
    specializations,
    verdict,
    yau_audit,
)
from chiy.catalog import (
    ManifoldChernData,
    ball_quotient,
    complex_torus,
    from_descriptor,
    hypersurface,
    k3_surface,
    product,
    projective_space,
)
from chiy.genus import evaluate_genus, k_table
from chiy.partitions import partitions
from chiy.series import YPoly


def verdicts(report):
    return [c.verdict for c in report.checks]


# -- hyperbolic ---------------------------------------------------------------


def test_ball_quotient_two():
    r = hyperbolic_audit(ball_quotient(2))
    assert [(c.left, c.right) for c in r.checks] == [(3, 3), (1, 1)]
    assert verdicts(r) == [EQUALITY, EQUALITY]
    assert r.chi_p_pattern_from == 0
    assert r.full_cpn_pattern
    assert r.l2_reconstruction.values == (1, 1, 1)
    assert not r.violated


def test_cp2_is_necessary_only():
    r = hyperbolic_audit(projective_space(2))
    assert r.checks[0].left == r.checks[0].right == 3
    assert r.checks[0].verdict == EQUALITY
    assert any("necessary" in n for n in r.notes)


def test_torus_violates():
    r = hyperbolic_audit(complex_torus(2))
    assert (r.checks[0].left, r.checks[0].right, r.checks[0].verdict) == (0, 3, VIOLATED)
    assert r.violated


def test_display_factors():
    # integer display normalizations: A_1 = 12 K_2, A_2 = 5760 K_4 on CP^n-like data
    assert DISPLAY_FACTORS == {0: 1, 1: 12, 2: 5760}
    for n in range(2, 7):
        r = hyperbolic_audit(ball_quotient(n))
        c1 = r.checks[1]
        assert c1.display_right == 12 * comb(n + 1, 3) == 2 * (n - 1) * n * (n + 1)
        if n >= 4:
            assert r.checks[2].display_right == 5760 * comb(n + 1, 5)


CATALOG = [
    *(projective_space(n) for n in range(1, 7)),
    *(complex_torus(n) for n in range(1, 5)),
    *(ball_quotient(n) for n in range(1, 7)),
    *(hypersurface(n, d) for n in range(1, 4) for d in range(1, 6)),
    k3_surface(),
    product(projective_space(1), projective_space(1)),
    product(projective_space(1), projective_space(2)),
    product(ball_quotient(1), ball_quotient(1)),
    product(ball_quotient(2), ball_quotient(2)),
]


@pytest.mark.parametrize("m", CATALOG, ids=lambda m: m.name)
def test_first_check_is_signed_euler(m):
    r = hyperbolic_audit(m)
    n = m.dim
    assert r.checks[0].left == (-1) ** n * evaluate_genus(m).at(-1)
    assert r.checks[0].right == n + 1


@pytest.mark.parametrize("m", CATALOG, ids=lambda m: m.name)
def test_equality_propagation(m):
    r = hyperbolic_audit(m)
    n = m.dim
    for c in r.checks:
        if c.verdict != EQUALITY:
            continue
        assert r.chi_p_pattern_from is not None and r.chi_p_pattern_from <= 2 * c.index
        if c.index <= (n + 1) // 4:
            assert r.full_cpn_pattern


@pytest.mark.parametrize("m", CATALOG, ids=lambda m: m.name)
def test_l2_identity(m):
    # sum_p value(p) (-y)^p = (-1)^n chi_y
    genus = evaluate_genus(m)
    n = m.dim
    values = hyperbolic_audit(m).l2_reconstruction.values
    lhs = sum((YPoly([0, -1]) ** p * v for p, v in enumerate(values)), YPoly([]))
    assert lhs == genus.as_ypoly() * (-1) ** n


@pytest.mark.parametrize("n", range(1, 11))
def test_rhs_two_forms(n):
    for i in range(n // 2 + 1):
        assert cpn_bound(n, 2 * i) == sum(comb(p, 2 * i) for p in range(2 * i, n + 1)) == comb(n + 1, 2 * i + 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ball_quotient_equalities(n):
    r = hyperbolic_audit(ball_quotient(n))
    assert r.all_equality
    assert r.chi_p_pattern_from == 0
    assert r.full_cpn_pattern
    assert set(r.l2_reconstruction.values) == {1}


# -- non-elliptic ---------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 5))
def test_torus_nonelliptic(n):
    r = nonelliptic_audit(complex_torus(n))
    assert r.all_equality
    assert all(c.left == c.right == 0 for c in r.checks)
    assert not r.violated


def test_ball_quotient_three_nonelliptic():
    r = nonelliptic_audit(ball_quotient(3))
    assert VIOLATED not in verdicts(r)
    assert [c.left for c in r.checks] == [4, 4]


def test_negative_euler_violates():
    m = from_descriptor({"dim": 2, "chern_numbers": {"2": "-1", "1,1": "13"}})
    r = nonelliptic_audit(m)
    assert r.checks[0].verdict == VIOLATED


# -- Yau -------------------------------------------------------------------------


def test_yau_ball_quotients():
    r2 = yau_audit(ball_quotient(2))
    assert (r2.checks[0].left, r2.checks[0].right, r2.checks[0].verdict) == (3, 3, EQUALITY)
    r3 = yau_audit(ball_quotient(3))
    assert (r3.checks[0].left, r3.checks[0].right, r3.checks[0].verdict) == (24, 24, EQUALITY)


def test_yau_torus_warns():
    r = yau_audit(complex_torus(2))
    assert r.checks[0].verdict == EQUALITY
    assert r.warnings


def test_yau_rejects_curves():
    with pytest.raises(ValueError):
        yau_audit(projective_space(1))


def test_unknown_mode():
    with pytest.raises(ValueError):
        audit(projective_space(2), "elliptic")


# -- verdicts and reports ------------------------------------------------------


@given(st.fractions(), st.fractions())
def test_verdict_exact(a, b):
    v = verdict(a, b)
    assert (v == EQUALITY) == (a == b)
    assert (v == STRICT) == (a > b)
    assert (v == VIOLATED) == (a < b)


chern_data = st.integers(1, 4).flatmap(
    lambda n: st.builds(
        lambda vals: ManifoldChernData("random", n, dict(zip(partitions(n), vals))),
        st.lists(st.fractions(max_denominator=6, min_value=-50, max_value=50), min_size=len(partitions(n)), max_size=len(partitions(n))),
    )
)


@settings(max_examples=60, deadline=None)
@given(chern_data)
def test_report_round_trip(m):
    for mode in ("hyperbolic", "nonelliptic") + (("yau",) if m.dim >= 2 else ()):
        r = audit(m, mode)
        text = json.dumps(r.to_dict(), sort_keys=True)
        back = AuditReport.from_dict(json.loads(text))
        assert back == r
        assert json.dumps(back.to_dict(), sort_keys=True) == text
        # pure function of input
        assert audit(m, mode) == r


@settings(max_examples=60, deadline=None)
@given(chern_data)
def test_verdicts_match_k_values(m):
    n = m.dim
    r = hyperbolic_audit(m)
    for c in r.checks:
        k = sum(v * m.chern_number(lam) for lam, v in k_table(n)[2 * c.index].terms.items())
        assert c.left == (-1) ** n * k
        assert c.verdict == verdict(c.left, Fraction(comb(n + 1, 2 * c.index + 1)))


# -- Hodge grid checks and specializations -------------------------------------


def test_serre_check():
    assert serre_check(k3_surface().hodge).passed
    for n in range(1, 6):
        assert serre_check(projective_space(n).hodge).passed
    bad = serre_check([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert not bad.passed
    assert (0, 1) in bad.asymmetric


def test_specializations():
    s = specializations(evaluate_genus(k3_surface()))
    assert (s.euler, s.todd, s.signature) == (24, 2, -16)
    s = specializations(evaluate_genus(projective_space(2)))
    assert (s.euler, s.todd, s.signature) == (3, 1, 1)
    for n in range(1, 5):
        s = specializations(evaluate_genus(complex_torus(n)))
        assert (s.euler, s.todd, s.signature) == (0, 0, 0)
