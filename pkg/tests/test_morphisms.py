from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catgraph.catalog import standard_graph as S
from catgraph.errors import InvalidMorphism, NonComposable, ObjectNotInCategory
from catgraph.graph import ALL_CATEGORIES, Category
from catgraph.limits import product
from catgraph.morphisms import (Morphism, classify_epi, classify_mono, compose, count_homs,
                                enumerate_homs, identity, is_valid, iter_homs, random_hom,
                                validate)

from conftest import categories, graphs


def test_totality_checked():
    with pytest.raises(InvalidMorphism):
        Morphism(S("K2"), S("K1"), {"v1": "v1"})


def test_validate_reports_offending_part():
    f = Morphism(S("K2"), S("K2^c"), {"v1": "v1", "v2": "v2", "e1_2": "v1"})
    r = validate(f, "G")
    assert not r.passed and r.witness == "e1_2"


def test_strictness():
    collapse = Morphism(S("K2"), S("K1"), {"v1": "v1", "v2": "v1", "e1_2": "v1"})
    assert is_valid(collapse, "G")
    assert not is_valid(collapse, "StG")


def test_object_check():
    with pytest.raises(ObjectNotInCategory):
        validate(identity(S("K1^l")), "SiLlG")


def test_compose_mismatch():
    with pytest.raises(NonComposable):
        compose(identity(S("K1")), identity(S("K2")))


@pytest.mark.parametrize("a, b, c, n", [
    ("K2", "K1^l", "G", 2),
    ("C6", "K2", "SiLlStG", 2),
    ("empty", "K3", "G", 1),
    ("K3", "K2", "SiLlStG", 0),
    ("K2", "K2", "SiLlG", 4),
    ("K2", "K2", "StG", 2),
    ("K1^l", "bouquet2", "StG", 2),
])
def test_known_counts(a, b, c, n):
    assert count_homs(S(a), S(b), c) == n
    assert len(enumerate_homs(S(a), S(b), c)) == n


def test_product_counts_into_loop():
    k1l = S("K1^l")
    counts = [count_homs(product(S(x), S("K2"), "G").apex, k1l, "G")
              for x in ("K1", "K1^l", "K2", "X4")]
    assert counts == [2, 16, 64, 512]


@st.composite
def hom_pairs(draw):
    """A category and two of its objects."""
    c = draw(categories)
    return c, draw(graphs(c=c)), draw(graphs(c=c))


@given(hom_pairs())
def test_count_matches_enumeration(case):
    c, A, B = case
    homs = list(iter_homs(A, B, c))
    assert count_homs(A, B, c) == len(homs) == len(set(homs))
    assert all(is_valid(f, c) for f in homs)


@given(hom_pairs(), st.integers(0, 10_000))
def test_random_hom_is_valid(case, seed):
    c, A, B = case
    f = random_hom(A, B, c, random.Random(seed))
    if count_homs(A, B, c) == 0:
        assert f is None
    else:
        assert is_valid(f, c)


@given(categories, st.data())
def test_composition_laws(c, data):
    A, B, C, D = (data.draw(graphs(c=c, min_vertices=1)) for _ in range(4))
    rng = random.Random(data.draw(st.integers(0, 999)))
    f, g, h = random_hom(A, B, c, rng), random_hom(B, C, c, rng), random_hom(C, D, c, rng)
    if f is not None:
        assert compose(identity(B), f) == f == compose(f, identity(A))
    if None not in (f, g, h):
        left = compose(h, compose(g, f))
        assert left == compose(compose(h, g), f)
        assert is_valid(left, c)


@given(hom_pairs())
def test_epi_verdicts_carry_witnesses(case):
    c, A, B = case
    for f in iter_homs(A, B, c):
        r = classify_epi(f, c)
        if r.passed:
            continue
        i, g = r.witness["i"], r.witness["g"]
        assert i != g and compose(i, f) == compose(g, f)
        assert is_valid(i, c) and is_valid(g, c)


@given(hom_pairs())
def test_mono_verdicts_carry_witnesses(case):
    c, A, B = case
    for f in iter_homs(A, B, c):
        r = classify_mono(f, c)
        if r.passed:
            continue
        g, h = r.witness["g"], r.witness["h"]
        assert g != h and compose(f, g) == compose(f, h)
        assert is_valid(g, c) and is_valid(h, c)


@pytest.mark.parametrize("c", ALL_CATEGORIES)
def test_epi_level(c):
    # vertex-bijective but misses the edge
    f = Morphism(S("K2^c"), S("K2"), {"v1": "v1", "v2": "v2"})
    assert classify_epi(f, c).passed == (c not in (Category.G, Category.SiG, Category.StG))


def test_mono_level_loop_collapse():
    collapse = Morphism(S("K1^l"), S("K1"), {"v1": "v1", "l1": "v1"})
    assert not classify_mono(collapse, "G").passed
    assert classify_mono(identity(S("K1^l")), "G").passed
