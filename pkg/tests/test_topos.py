from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catgraph.catalog import battery, standard_graph as S
from catgraph.errors import BadParameter, NoClassifier, NotMono, WrongCategory
from catgraph.graph import Category, isomorphic
from catgraph.morphisms import (Morphism, classify_epi, compose, count_homs, identity,
                                iter_homs, random_hom)
from catgraph.topos import (characteristic_morphism, check_choice, check_two_valued,
                            classifier_check, classifier_obstruction, evaluate, exponential,
                            l5_instance, pigeonhole_refutation, refute_exponentiation,
                            subobject_classifier, transpose, verify_exponential)

K2 = S("K2")


def incl(sub: str, big: str) -> Morphism:
    a = S(sub)
    return Morphism(a, S(big), {p: p for p in a.parts})


def test_classifier_shapes():
    assert len(subobject_classifier("G").omega) == 4
    assert len(subobject_classifier("SiG").omega) == 4
    st_ = subobject_classifier("StG")
    assert len(st_.omega) == 6
    assert st_.truth.mapping == {"v1": "T", "l1": "l_true"}
    for c in ("SiLlG", "SiStG", "SiLlStG"):
        assert subobject_classifier(c) is None


def test_chi_cases_in_grphs():
    chi = characteristic_morphism(incl("K2^c", "K2"), "G")
    assert chi("e1_2") == "l_T"
    one = Morphism(S("K1"), K2, {"v1": "v1"})
    chi = characteristic_morphism(one, "G")
    assert chi.mapping == {"v1": "T", "v2": "F", "e1_2": "e_TF"}
    whole = characteristic_morphism(identity(K2), "G")
    assert set(whole.images) == {"T"}


def test_chi_strict_cases():
    k2l = S("K2^l")
    a = Morphism(S("K1"), k2l, {"v1": "v1"})
    chi = characteristic_morphism(a, "StG")
    assert chi("l1") == "l_T" and chi("l2") == "l_F" and chi("e1_2") == "e_TF"


def test_chi_rejects_non_mono():
    collapse = Morphism(K2, S("K1"), {"v1": "v1", "v2": "v1", "e1_2": "v1"})
    with pytest.raises(NotMono):
        characteristic_morphism(collapse, "G")
    with pytest.raises(NoClassifier):
        characteristic_morphism(identity(K2), "SiLlG")


@pytest.mark.parametrize("c", ["G", "SiG", "StG"])
def test_classifier_sound_on_small_monos(c):
    for X in battery(3, c):
        for A in battery(3, c):
            for m in iter_homs(A, X, c):
                r = classifier_check(m, c) if _mono(m, c) else None
                assert r is None or r.passed, r.message


def _mono(m, c):
    from catgraph.morphisms import classify_mono
    return classify_mono(m, c).passed


@pytest.mark.parametrize("c, big", [("SiLlG", "K2"), ("SiStG", "K2^l")])
def test_classifier_obstructions(c, big):
    r = classifier_obstruction(c)
    assert r.passed
    assert isomorphic(r.witness["pullback"], S(big))
    assert not isomorphic(r.witness["pullback"], r.witness["subobject"])


def test_exponential_vertex_count_matches_homs():
    e = exponential(K2, K2, "SiLlG")
    assert len(e.exp.vertices) == count_homs(K2, K2, "SiLlG")
    e = exponential(K2, K2, "SiStG")
    assert len(e.exp.vertices) == 4


@pytest.mark.parametrize("c", ["SiLlG", "SiStG"])
def test_exponential_adjunction_small(c):
    tests = [t for t in (S("K1"), K2, S("K3"), S("K1^l")) if t in battery(6, c)]
    e = exponential(K2, K2, c)
    assert verify_exponential(e, tests).passed


@pytest.mark.parametrize("c", ["SiLlG", "SiStG"])
def test_transpose_of_ev_is_identity(c):
    e = exponential(K2, S("K3"), c)
    assert transpose(e.ev, e) == identity(e.exp)


@given(st.sampled_from(["SiLlG", "SiStG"]), st.integers(0, 500))
def test_transpose_round_trip_random(c, seed):
    rng = random.Random(seed)
    bat = battery(3, c)
    G, H, X = (rng.choice(bat) for _ in range(3))
    e = exponential(G, H, c)
    from catgraph.limits import product
    g = random_hom(product(X, G, c).apex, H, c, rng)
    if g is None:
        return
    gbar = transpose(g, e, X)
    assert evaluate(gbar, e) == g


def test_transpose_is_injective():
    c = "SiLlG"
    from catgraph.limits import product
    X, G, H = K2, K2, S("K3")
    e = exponential(G, H, c)
    gs = list(iter_homs(product(X, G, c).apex, H, c))
    assert len({transpose(g, e, X) for g in gs}) == len(gs)


def test_no_exponential_outside_two_categories():
    for c in ("G", "SiG", "StG", "SiLlStG"):
        assert exponential(K2, K2, c) is None


def test_refute_grphs_sequence():
    r = refute_exponentiation("G")
    assert r.passed
    assert r.data["sequence"] == [2, 16, 64, 512, 2, 14, 48, 336, 414, 98, (7, 7)]
    assert r.data["solutions"] == [(7, 7)]
    assert r.data["edges"] == 24


def test_refute_other_categories():
    assert refute_exponentiation("SiG").data["final"] == (8, 4)
    st_ = refute_exponentiation("StG")
    assert st_.data["counts"] == [1, 4, 16] and st_.data["final"] == (16, 4)
    sl = refute_exponentiation("SiLlStG")
    assert sl.data["counts"] == [4, 4, 2] and sl.data["final"] == (2, "odd-cycle")
    with pytest.raises(WrongCategory):
        refute_exponentiation("SiLlG")


def test_pigeonhole_examples():
    assert pigeonhole_refutation({i: (0, 0, 0, 0) for i in range(1, 25)}) == (1, 2)
    pats = [tuple(int(b) for b in f"{k:04b}") for k in range(16)]
    asg = {i: pats[(i - 1) % 16] for i in range(1, 25)}
    i, j = pigeonhole_refutation(asg)
    assert j == 17 and asg[i] == asg[j]
    with pytest.raises(BadParameter):
        pigeonhole_refutation({1: (0, 0, 0, 0)})


@given(st.lists(st.tuples(*[st.integers(0, 1)] * 4), min_size=24, max_size=24))
def test_pigeonhole_always_collides(patterns):
    asg = dict(enumerate(patterns, 1))
    i, j = pigeonhole_refutation(asg)
    assert i < j and asg[i] == asg[j]


@pytest.mark.parametrize("c", list(Category))
def test_choice_fails_on_instance(c):
    assert check_choice(l5_instance(), c) is None


def test_choice_finds_sections():
    assert check_choice(identity(K2), "G") == identity(K2)
    k2c, k1 = S("K2^c"), S("K1")
    f = Morphism(k2c, k1, {"v1": "v1", "v2": "v1"})
    g = check_choice(f, "G")
    assert g is not None and compose(f, compose(g, f)) == f


@pytest.mark.parametrize("c", ["G", "SiG", "StG"])
def test_choice_on_edgeless_surjections(c):
    # every vertex surjection between edgeless graphs has a section
    for A in battery(4, c):
        for B in battery(4, c):
            if A.edges or B.edges:
                continue
            for f in iter_homs(A, B, c):
                if classify_epi(f, c).passed:
                    assert check_choice(f, c) is not None


def test_two_valued():
    g = check_two_valued("G")
    assert not g.passed and len(g.data["omega"]["parts"]) == 4
    s = check_two_valued("StG")
    assert not s.passed and len(s.data["omega"]["parts"]) == 6
    assert check_two_valued("G", omega=S("K2^c")).passed
    with pytest.raises(NoClassifier):
        check_two_valued("SiStG")
