import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiy.catalog import (
    DescriptorError,
    HodgeMismatchError,
    MalformedDescriptorError,
    MalformedKeyError,
    ManifoldChernData,
    WeightError,
    ball_quotient,
    build,
    chi_y_from_hodge,
    complex_torus,
    from_descriptor,
    hypersurface,
    k3_surface,
    parse_factor,
    product,
    projective_space,
    proportionality,
    to_descriptor,
)
from chiy.genus import evaluate_genus
from chiy.partitions import Partition
from oracles import chi_y_from_diamond


def numbers(m):
    return {k: v for k, v in m.full_numbers().items()}


def key_values(m):
    return {lam.key(): v for lam, v in m.full_numbers().items()}


def test_projective_space_examples():
    assert key_values(projective_space(1)) == {"1": 2}
    assert key_values(projective_space(2)) == {"2": 3, "1,1": 9}
    assert key_values(projective_space(3)) == {"3": 4, "2,1": 24, "1,1,1": 64}


def test_torus_examples():
    assert key_values(complex_torus(1)) == {"1": 0}
    assert set(key_values(complex_torus(2)).values()) == {0}
    assert complex_torus(1).hodge == ((1, 1), (1, 1))


def test_hypersurface_examples():
    assert key_values(hypersurface(2, 1)) == {"2": 3, "1,1": 9}
    assert key_values(hypersurface(2, 4)) == {"2": 24, "1,1": 0}
    assert key_values(hypersurface(1, 3)) == {"1": 0}


@pytest.mark.parametrize("n", range(1, 7))
def test_linear_hypersurface_is_projective_space(n):
    assert numbers(hypersurface(n, 1)) == numbers(projective_space(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_projective_space_genus(n):
    assert evaluate_genus(projective_space(n)).coeffs == tuple((-1) ** p for p in range(n + 1))


def test_proportionality_examples():
    assert key_values(proportionality(projective_space(2), 1)) == {"2": 3, "1,1": 9}
    assert key_values(proportionality(projective_space(3), -1)) == {"3": -4, "2,1": -24, "1,1,1": -64}
    k3 = k3_surface()
    assert numbers(proportionality(k3, 1)) == numbers(k3)
    with pytest.raises(ValueError):
        proportionality(projective_space(2), 0)


nonzero = st.fractions(max_denominator=50).filter(lambda f: f != 0)


@given(st.integers(1, 5), nonzero, nonzero)
def test_proportionality_composes(n, a, b):
    m = projective_space(n)
    assert numbers(proportionality(proportionality(m, a), b)) == numbers(proportionality(m, a * b))


def test_ball_quotients():
    assert key_values(ball_quotient(2)) == {"2": 3, "1,1": 9}
    assert key_values(ball_quotient(3)) == {"3": -4, "2,1": -24, "1,1,1": -64}
    assert ball_quotient(3).hodge is None


def test_product_examples():
    assert set(key_values(product(complex_torus(1), complex_torus(1))).values()) == {0}
    p11 = product(projective_space(1), projective_space(1))
    assert key_values(p11) == {"2": 4, "1,1": 8}
    assert evaluate_genus(p11).coeffs == (1, -2, 1)
    assert key_values(product(projective_space(1), complex_torus(1))) == {"2": 0, "1,1": 0}
    assert p11.hodge == ((1, 0, 0), (0, 2, 0), (0, 0, 1))


def test_product_whitney_dimension_three():
    # CP^1 x CP^2: c = (1+2a)(1+3b+3b^2) with a^2 = 0, b^3 = 0, a b^2 = 1,
    # so c1 = 2a+3b, c2 = 6ab+3b^2, c3 = 6ab^2
    m = product(projective_space(1), projective_space(2))
    assert key_values(m) == {"3": 6, "2,1": 24, "1,1,1": 54}


CATALOG = [
    *(projective_space(n) for n in range(1, 7)),
    *(complex_torus(n) for n in range(1, 5)),
    k3_surface(),
    product(projective_space(1), projective_space(1)),
    product(projective_space(1), projective_space(2)),
    product(k3_surface(), projective_space(1)),
]


@pytest.mark.parametrize("m", CATALOG, ids=lambda m: m.name)
def test_two_routes_agree(m):
    assert m.hodge is not None
    diamond = chi_y_from_diamond(m.hodge)
    assert list(chi_y_from_hodge(m.hodge).coeffs) == diamond
    assert list(evaluate_genus(m).coeffs) == diamond


@pytest.mark.parametrize("m", CATALOG, ids=lambda m: m.name)
def test_hodge_serre_symmetry(m):
    n = m.dim
    assert all(m.hodge[p][q] == m.hodge[n - p][n - q] for p in range(n + 1) for q in range(n + 1))


def test_k3():
    k3 = k3_surface()
    assert evaluate_genus(k3).coeffs == (2, -20, 2)


# -- descriptors -------------------------------------------------------------


def test_descriptor_cp2():
    m = from_descriptor({"dim": 2, "chern_numbers": {"2": "3", "1,1": "9"}})
    assert numbers(m) == numbers(projective_space(2))
    assert m.warnings == ()


def test_descriptor_sparse_warns():
    m = from_descriptor({"dim": 2, "chern_numbers": {}})
    assert numbers(m) == numbers(complex_torus(2))
    assert len(m.warnings) == 2
    assert all("missing" in w for w in m.warnings)


def test_descriptor_rational_flagged():
    m = from_descriptor('{"dim": 1, "chern_numbers": {"1": "1/3"}}')
    assert m.chern_number((1,)) == Fraction(1, 3)
    assert not m.is_geometric
    assert any("non-integral" in w for w in m.warnings)


@pytest.mark.parametrize(
    "doc,error",
    [
        ({"dim": 2, "chern_numbers": {"3": "1"}}, WeightError),
        ({"dim": 2, "chern_numbers": {"1,2": "1"}}, MalformedKeyError),
        ({"dim": 2, "chern_numbers": {"a": "1"}}, MalformedKeyError),
        ({"dim": 2, "chern_numbers": {"2": "0.5"}}, MalformedDescriptorError),
        ({"dim": 0, "chern_numbers": {}}, MalformedDescriptorError),
        ({"chern_numbers": {}}, MalformedDescriptorError),
        ("not json", MalformedDescriptorError),
        ({"dim": 1, "chern_numbers": {"1": "2"}, "hodge": [[1, 0]]}, MalformedDescriptorError),
        ({"dim": 1, "chern_numbers": {"1": "2"}, "hodge": [[1, 0], [0, -1]]}, MalformedDescriptorError),
        ({"dim": 1, "chern_numbers": {"1": "2"}, "hodge": [[1, 1], [1, 1]]}, HodgeMismatchError),
    ],
)
def test_descriptor_errors(doc, error):
    with pytest.raises(error):
        from_descriptor(doc)
    assert issubclass(error, DescriptorError)


@pytest.mark.parametrize("m", CATALOG + [ball_quotient(3)], ids=lambda m: m.name)
def test_descriptor_round_trip(m):
    doc = to_descriptor(m)
    again = from_descriptor(json.loads(json.dumps(doc)))
    assert again == m
    assert to_descriptor(again) == doc


def test_manifold_validation():
    with pytest.raises(WeightError):
        ManifoldChernData("x", 2, {Partition((3,)): 1})
    with pytest.raises(ValueError):
        projective_space(0)


def test_build_and_factor():
    assert numbers(build("cp", [2])) == numbers(projective_space(2))
    assert numbers(parse_factor("hypersurface:2,4")) == numbers(hypersurface(2, 4))
    assert build("k3", []).name == "K3"
    with pytest.raises(ValueError):
        build("sphere", [2])
    with pytest.raises(ValueError):
        build("cp", [1, 2])
    with pytest.raises(ValueError):
        parse_factor("cp:x")
