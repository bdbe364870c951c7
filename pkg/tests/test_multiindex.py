import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bpmono.multiindex import (
    DynkinDiagram,
    ExponentVector,
    UndefinedModulus,
    build_dynkin,
    correlated_pairs,
    correlated_triples,
    edge_weight,
    enumerate_indices,
    index_label,
    is_correlated,
    level_of,
    modulus_of,
    next_component,
    next_index,
    parse_index,
    rank_of,
    unrank,
)

exponents = st.lists(st.integers(1, 4), min_size=1, max_size=3).filter(lambda e: math.prod(e) <= 24)


def test_enumeration_examples():
    assert enumerate_indices((2, 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert enumerate_indices((2, 3))[:4] == [(1, 1), (1, 2), (1, 3), (2, 1)]
    assert len(enumerate_indices((2, 3))) == 6
    assert enumerate_indices((3,)) == [(1,), (2,), (3,)]


def test_exponent_vector_validation():
    with pytest.raises(ValueError):
        ExponentVector(())
    with pytest.raises(ValueError):
        ExponentVector((2, 0))
    assert ExponentVector.of("2,3").mu == 6


@given(exponents)
def test_rank_unrank_and_successor(e):
    idx = enumerate_indices(e)
    assert len(idx) == math.prod(e)
    assert idx == sorted(idx) and len(set(idx)) == len(idx)
    for r, i in enumerate(idx, 1):
        assert rank_of(i, e) == r and unrank(r, e) == i
        assert next_index(i, e) == (idx[r] if r < len(idx) else None)


def test_component_successor_is_distinct_from_index_successor():
    assert next_component(2) == 3
    assert next_index((1, 2), (2, 2)) == (2, 1)


def test_correlation_examples():
    assert is_correlated((1, 1), (2, 2))
    assert not is_correlated((1, 2), (2, 1))
    assert is_correlated((1, 1), (1, 2), (2, 2))
    assert is_correlated((1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2))
    assert not is_correlated((1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 2, 2))


@given(exponents)
def test_correlated_pairs_have_small_level(e):
    for a, b in correlated_pairs(e):
        assert 0 <= level_of(a, b) <= 1


def test_level_examples():
    assert level_of((1, 1), (2, 1)) == 1
    assert level_of((1, 2), (1, 2)) == 0
    assert level_of((1, 1), (3, 1)) == 2


def test_modulus_examples():
    assert modulus_of(1, 1, 2, 2, 2, 2) == pytest.approx(1.0)
    assert modulus_of(1, 1, 2, 1, 2, 2) == 0
    assert modulus_of(1, 1, 2, 2, 2, 4) == pytest.approx(math.sqrt(2) / 2)
    assert modulus_of(1, 1, 2, 2, 2, 4, eta2=0.1) == pytest.approx(0.1 * math.sqrt(2) / 2)
    with pytest.raises(UndefinedModulus):
        modulus_of(1, 1, 1, 2, 2, 2)


def test_dynkin_examples():
    d = build_dynkin((2, 2))
    assert len(d.vertices) == 4 and len(d.edges) == 5
    assert d.weight((1, 1), (2, 2)) == -1
    assert {d.weight(a, b) for a, b, _ in d.edges if (a, b) != ((1, 1), (2, 2))} == {1}
    d = build_dynkin((2, 4))
    assert len(d.vertices) == 8 and len(d.edges) == 13
    kinds = [("h" if a[0] == b[0] else "v" if a[1] == b[1] else "d") for a, b, _ in d.edges]
    assert (kinds.count("h"), kinds.count("v"), kinds.count("d")) == (6, 4, 3)
    d = build_dynkin((1,))
    assert len(d.vertices) == 1 and not d.edges


@given(exponents)
def test_triangles_have_weight_product_minus_one(e):
    d = build_dynkin(e)
    for a, b, c in d.triangles():
        assert d.weight(a, b) * d.weight(a, c) * d.weight(b, c) == -1
    assert len(d.triangles()) == len(correlated_triples(e))


@given(exponents, st.randoms(use_true_random=False))
def test_diagram_independent_of_insertion_order(e, rnd):
    d = build_dynkin(e)
    verts = list(d.vertices)
    rnd.shuffle(verts)
    edges = [(a, b, edge_weight(a, b)) if a < b else (b, a, edge_weight(b, a))
             for a, b in itertools.combinations(verts, 2) if is_correlated(a, b)]
    rebuilt = DynkinDiagram(d.exponents, tuple(sorted(verts)), tuple(sorted(edges)))
    assert rebuilt == d
    assert rebuilt.to_dot() == d.to_dot()


def test_dot_and_json_exports():
    d = build_dynkin((2, 2))
    dot = d.to_dot()
    assert dot.count("--") == 5 and '"11" -- "22" [label="-1"]' in dot
    js = d.to_json()
    assert js["exponents"] == [2, 2] and len(js["edges"]) == 5
    assert set(js["edges"][0]) == {"i", "j", "weight"}


def test_labels_and_parsing():
    assert index_label((1, 2)) == "12"
    assert index_label((1, 12), (2, 12)) == "[1,12]"
    assert parse_index("12", 2) == (1, 2)
    assert parse_index("[1,12]", 2) == (1, 12)
    with pytest.raises(ValueError):
        parse_index("123", 2)
