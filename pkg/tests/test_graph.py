from __future__ import annotations

import pytest
from hypothesis import given

from catgraph.catalog import battery, standard_graph
from catgraph.errors import (BadParameter, DanglingEndpoint, DuplicateId,
                             EmptyVertexNonemptyParts, UnknownName, VertexWithIncidence)
from catgraph.graph import (Category, Graph, components, in_category, is_isomorphic,
                            is_simple, isomorphic)

from conftest import graphs


def test_basic_accessors():
    g = standard_graph("K2^l1")
    assert g.vertices == ("v1", "v2")
    assert set(g.edges) == {"e1_2", "l1"}
    assert g.loops == ("l1",)
    assert g.boundary("v1") == ("v1", "v1")
    assert g.edges_between("v2", "v1") == ("e1_2",)
    assert g.neighbours("v1") == frozenset({"v1", "v2"})


@pytest.mark.parametrize("kwargs, err", [
    (dict(parts=["a", "a"], vertices=["a"], incidence={}), DuplicateId),
    (dict(parts=["e"], vertices=[], incidence={"e": ("x", "x")}), EmptyVertexNonemptyParts),
    (dict(parts=["a", "e"], vertices=["a"], incidence={"e": ("a", "b")}), DanglingEndpoint),
    (dict(parts=["a"], vertices=["a"], incidence={"a": ("a", "a")}), VertexWithIncidence),
    (dict(parts=["a", "e"], vertices=["a"], incidence={}), BadParameter),
])
def test_construction_errors(kwargs, err):
    with pytest.raises(err):
        Graph(**kwargs)


def test_catalog_shapes():
    assert len(standard_graph("K4")) == 10
    assert len(standard_graph("K3^l")) == 9
    assert len(standard_graph("C6").edges) == 6
    assert len(standard_graph("P3").edges) == 2
    assert len(standard_graph("Omega_Grphs")) == 4
    assert len(standard_graph("Omega_StGrphs")) == 6
    assert standard_graph("empty").parts == ()
    u = standard_graph("K1^l+K2")
    assert len(u.vertices) == 3 and len(components(u)) == 2


@pytest.mark.parametrize("name, err", [("C2", BadParameter), ("Q7", UnknownName),
                                       ("K2+", BadParameter)])
def test_catalog_errors(name, err):
    with pytest.raises(err):
        standard_graph(name)


def test_battery_sizes():
    assert [len(battery(n)) for n in range(6)] == [1, 2, 4, 8, 16, 32]
    assert len(battery(4, "SiG")) == 12
    assert len(battery(4, "SiLlStG")) == 7


def test_battery_is_up_to_iso():
    bat = battery(4)
    for i, a in enumerate(bat):
        for b in bat[i + 1:]:
            assert not isomorphic(a, b)


def test_category_parse():
    assert Category.parse("sillstgrphs") is Category.SiLlStG
    assert Category.parse("Grphs") is Category.G
    with pytest.raises(BadParameter):
        Category.parse("Foo")


@given(graphs(max_vertices=4, max_edges=4))
def test_json_round_trip(g):
    assert Graph.from_dict(g.to_dict()) == g


@given(graphs(max_vertices=4, max_edges=4))
def test_relabel_is_isomorphic(g):
    r = g.relabel({p: f"x_{p}" for p in g.parts})
    iso = is_isomorphic(g, r)
    assert iso is not None
    fwd, inv = iso
    assert (inv @ fwd).images == tuple(g.parts)


@given(graphs(max_vertices=4, max_edges=4))
def test_components_partition_parts(g):
    comps = components(g)
    assert sorted(p for comp in comps for p in comp) == sorted(g.parts)
    for comp in comps:
        for e in g.edges:
            a, b = g.incidence[e]
            assert (e in comp) == (a in comp) == (b in comp)


@given(graphs(c=Category.SiG))
def test_strategy_respects_category(g):
    assert is_simple(g) and in_category(g, Category.SiG)
