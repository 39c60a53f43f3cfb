"""Free and cofree graphs, and projective/injective/generator/cogenerator objects."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .catalog import battery as make_battery
from .catalog import complete, standard_graph
from .graph import Category, Graph, components
from .morphisms import (Morphism, classify_epi, classify_mono, compose, count_homs,
                        iter_homs, require_object)
from .report import Report, to_jsonable

PROPERTIES = ("projective", "injective", "generator", "cogenerator")


@dataclass
class ObjectClassification:
    subject: Graph
    category: Category
    prop: str
    verdict: bool
    witness: Any = None
    message: str = ""
    nonexistent: bool = False  # no object of c has the property at all

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {"subject": self.subject.to_dict(), "category": self.category.value,
                "property": self.prop, "verdict": self.verdict,
                "nonexistent": self.nonexistent, "message": self.message,
                "witness": to_jsonable(self.witness)}


# -- free and cofree --------------------------------------------------------------

def free_graph(X: Iterable[str], c: Category | str) -> Graph:
    """Edgeless graph on ``X``; the same in every category."""
    Category.parse(c)
    xs = sorted(set(X))
    return Graph(xs, xs, {}, name=f"K{len(xs)}^c")


def cofree_graph(X: Iterable[str], c: Category | str) -> Graph | None:
    """Complete graph on ``X`` (with a loop at each vertex in the strict looped cases)."""
    c = Category.parse(c)
    if c is Category.SiLlStG:
        return None
    xs = sorted(set(X))
    inc: dict[str, tuple[str, str]] = {}
    for i, a in enumerate(xs):
        for b in xs[i + 1:]:
            inc[f"e({a},{b})"] = (a, b)
    loops = c in (Category.StG, Category.SiStG)
    if loops:
        inc.update({f"l({a})": (a, a) for a in xs})
    return Graph(xs + list(inc), xs, inc, name=f"K{len(xs)}" + ("^l" if loops else ""))


def cofree_obstruction(X: Iterable[str], max_parts: int = 4) -> Report:
    """No SiLlStG candidate ``C`` can receive ``K_{|V(C)|+1}``, so constant maps never lift."""
    xs = sorted(set(X))
    if not xs:
        xs = []
    rows = {}
    for C in make_battery(max_parts, Category.SiLlStG):
        K = complete(len(C.vertices) + 1)
        rows[C.name] = count_homs(K, C, Category.SiLlStG)
    ok = all(n == 0 for n in rows.values())
    return Report(ok, "a complete graph one vertex larger than a candidate has no strict map "
                      "into it, so the constant vertex function has no lift",
                  data={"X": xs, "homs_from_larger_complete": rows})


def unit_extensions(X: Iterable[str], G: Graph, c: Category | str) -> Report:
    """Each vertex function ``X -> V(G)`` extends to exactly one map ``F(X) -> G``."""
    c = Category.parse(c)
    F = free_graph(X, c)
    n = count_homs(F, G, c)
    want = len(G.vertices) ** len(F.vertices)
    return Report(n == want, f"{n} maps vs {want} vertex functions", data={"homs": n, "functions": want})


def counit_extensions(X: Iterable[str], G: Graph, c: Category | str) -> Report:
    """Each vertex function ``V(G) -> X`` lifts to exactly one map ``G -> C(X)``."""
    c = Category.parse(c)
    C = cofree_graph(X, c)
    if C is None:
        return Report(False, f"{c} has no cofree graph")
    n = count_homs(G, C, c)
    want = len(C.vertices) ** len(G.vertices)
    return Report(n == want, f"{n} maps vs {want} vertex functions", data={"homs": n, "functions": want})


# -- predicates -------------------------------------------------------------------

def _edge_per_component(g: Graph) -> bool:
    for comp in components(g):
        n = sum(1 for e in g.edges if g.incidence[e][0] in comp)
        if n > 1:
            return False
    return True


def _spanning_complete(g: Graph, loops: bool) -> bool:
    vs = g.vertices
    if not vs:
        return False
    for i, a in enumerate(vs):
        if loops and not g.edges_between(a, a):
            return False
        for b in vs[i + 1:]:
            if not g.edges_between(a, b):
                return False
    return True


def _has_nonloop_edge(g: Graph) -> bool:
    return any(g.incidence[e][0] != g.incidence[e][1] for e in g.edges)


def _has_k2l(g: Graph) -> bool:
    looped = [v for v in g.vertices if g.edges_between(v, v)]
    return any(g.edges_between(a, b) for i, a in enumerate(looped) for b in looped[i + 1:])


def projective_predicate(g: Graph, c: Category) -> bool:
    # a loop never lifts through the epi K2 -> K1^l, so loops are excluded
    if c in (Category.G, Category.SiG, Category.StG):
        return not g.loops and _edge_per_component(g)
    return not g.edges


def injective_predicate(g: Graph, c: Category) -> bool:
    if c is Category.SiLlStG:
        return False
    return _spanning_complete(g, loops=c in (Category.StG, Category.SiStG))


def generator_predicate(g: Graph, c: Category) -> bool:
    if c in (Category.G, Category.SiG):
        return _has_nonloop_edge(g)
    if c is Category.SiLlG:
        return bool(g.vertices)
    if c is Category.StG:
        return False
    return bool(g.vertices) and not g.edges


def cogenerator_predicate(g: Graph, c: Category) -> bool:
    if c in (Category.G, Category.SiG):
        return bool(g.loops) and _has_nonloop_edge(g)
    if c is Category.SiLlG:
        return bool(g.edges)
    if c is Category.StG:
        two_loops = any(len(g.edges_between(v, v)) >= 2 for v in g.vertices)
        return two_loops and _has_k2l(g)
    if c is Category.SiStG:
        return _has_k2l(g)
    return False


# -- presentations ----------------------------------------------------------------

def projective_presentation(g: Graph, c: Category | str) -> tuple[Graph, Morphism]:
    """A projective graph with an epimorphism onto ``g``.

    In the part-level categories every edge is isolated with fresh copies of
    its endpoints, and a loop is opened into a single edge whose two ends
    both map back to its vertex; elsewhere the edgeless graph on the
    vertices is used.
    """
    c = Category.parse(c)
    require_object(g, c)
    if projective_predicate(g, c):
        return g, Morphism(g, g, {p: p for p in g.parts})
    if c not in (Category.G, Category.SiG, Category.StG):
        P = Graph(g.vertices, g.vertices, {}, name=f"K{len(g.vertices)}^c")
        return P, Morphism(P, g, {v: v for v in g.vertices})
    touched = {v for e in g.edges for v in g.incidence[e]}
    parts, vertices, inc, mapping = [], [], {}, {}
    for v in g.vertices:
        if v not in touched:
            parts.append(v)
            vertices.append(v)
            mapping[v] = v
    for e in g.edges:
        a, b = g.incidence[e]
        ends = [f"{e}@{a}", f"{e}@{b}"] if a != b else [f"{e}@{a}#1", f"{e}@{a}#2"]
        for nv, x in zip(ends, (a, b)):
            parts.append(nv)
            vertices.append(nv)
            mapping[nv] = x
        parts.append(e)
        inc[e] = (ends[0], ends[1])
        mapping[e] = e
    P = Graph(parts, vertices, inc, name=f"split({g.name or 'g'})")
    return P, Morphism(P, g, mapping)


def injective_extension(g: Graph, c: Category | str) -> Morphism | None:
    """A mono from ``g`` into an injective graph: ``g`` with the missing edges
    (and loops, where required) added.  An empty ``g`` goes into the
    one-vertex injective graph.  None in SiLlStG."""
    c = Category.parse(c)
    require_object(g, c)
    if c is Category.SiLlStG:
        return None
    loops = c in (Category.StG, Category.SiStG)
    if not g.vertices:
        tgt = cofree_graph(["v"], c)
        return Morphism(g, tgt, {})
    inc = dict(g.incidence)
    taken = set(g.parts)
    vs = g.vertices
    for i, a in enumerate(vs):
        if loops and not g.edges_between(a, a):
            nm = _fresh(f"l({a})", taken)
            inc[nm] = (a, a)
        for b in vs[i + 1:]:
            if not g.edges_between(a, b):
                nm = _fresh(f"e({a},{b})", taken)
                inc[nm] = (a, b)
    tgt = Graph(list(vs) + list(inc), vs, inc, name="injective_extension")
    return Morphism(g, tgt, {p: p for p in g.parts})


def _fresh(base: str, taken: set[str]) -> str:
    nm = base
    while nm in taken:
        nm += "'"
    taken.add(nm)
    return nm


# -- classification with witnesses -------------------------------------------------

def _lift_exists(h: Morphism, f: Morphism, c: Category) -> Morphism | None:
    """Some ``k`` with ``h . k == f`` (``f: P -> C``, ``h: B -> C``)."""
    for k in iter_homs(f.dom, h.dom, c):
        if compose(h, k) == f:
            return k
    return None


def _extension_exists(m: Morphism, f: Morphism, c: Category) -> Morphism | None:
    """Some ``k`` with ``k . m == f`` (``m: A -> B``, ``f: A -> I``)."""
    for k in iter_homs(m.cod, f.cod, c):
        if compose(k, m) == f:
            return k
    return None


def _battery_epis(c: Category, max_parts: int):
    bat = make_battery(max_parts, c)
    for B in bat:
        for C in bat:
            for h in iter_homs(B, C, c):
                if classify_epi(h, c).passed:
                    yield h


def _battery_monos(c: Category, max_parts: int):
    bat = make_battery(max_parts, c)
    for A in bat:
        for B in bat:
            for m in iter_homs(A, B, c):
                if classify_mono(m, c).passed:
                    yield m


def _parallel_pairs(c: Category, max_parts: int):
    bat = make_battery(max_parts, c)
    for A in bat:
        for B in bat:
            homs = list(iter_homs(A, B, c))
            for i, f in enumerate(homs):
                for h in homs[i + 1:]:
                    yield f, h


def is_projective(g: Graph, c: Category | str, check_parts: int = 2) -> ObjectClassification:
    c = Category.parse(c)
    require_object(g, c)
    if projective_predicate(g, c):
        for h in _battery_epis(c, check_parts):
            for f in iter_homs(g, h.cod, c):
                if _lift_exists(h, f, c) is None:
                    return ObjectClassification(g, c, "projective", False, {"epi": h, "map": f},
                                                "characterization holds but a lift is missing")
        return ObjectClassification(g, c, "projective", True, None,
                                    "every map into an epi's codomain lifts (battery-checked)")
    P, h = projective_presentation(g, c)
    ident = Morphism(g, g, {p: p for p in g.parts})
    lift = _lift_exists(h, ident, c)
    msg = "the identity does not lift along the presentation epi"
    return ObjectClassification(g, c, "projective", False,
                                {"epi": h, "map": ident, "lift": lift}, msg)


def is_injective(g: Graph, c: Category | str, check_parts: int = 2) -> ObjectClassification:
    c = Category.parse(c)
    require_object(g, c)
    S = standard_graph
    if c is Category.SiLlStG:
        K = complete(len(g.vertices) + 1)
        if g.vertices:
            one = S("K1")
            m = Morphism(one, K, {"v1": "v1"})
            f = Morphism(one, g, {"v1": g.vertices[0]})
        else:
            m = Morphism(S("empty"), S("K1"), {})
            f = Morphism(S("empty"), g, {})
        return ObjectClassification(
            g, c, "injective", False,
            {"mono": m, "map": f, "extensions": count_homs(m.cod, g, c)},
            "a strict loopless map from a larger complete graph would be vertex-injective",
            nonexistent=True)
    if injective_predicate(g, c):
        for m in _battery_monos(c, check_parts):
            for f in iter_homs(m.dom, g, c):
                if _extension_exists(m, f, c) is None:
                    return ObjectClassification(g, c, "injective", False, {"mono": m, "map": f},
                                                "characterization holds but an extension is missing")
        return ObjectClassification(g, c, "injective", True, None,
                                    "every map out of a mono's domain extends (battery-checked)")
    if not g.vertices:
        m = Morphism(S("empty"), S("K1"), {})
        f = Morphism(S("empty"), g, {})
    else:
        loops = c in (Category.StG, Category.SiStG)
        bad = next((v for v in g.vertices if loops and not g.edges_between(v, v)), None)
        if bad is not None:
            m = Morphism(S("K1"), S("K1^l"), {"v1": "v1"})
            f = Morphism(S("K1"), g, {"v1": bad})
        else:
            u, v = next(pair_ for pair_ in _missing_pairs(g))
            m = Morphism(S("K2^c"), S("K2"), {"v1": "v1", "v2": "v2"})
            f = Morphism(S("K2^c"), g, {"v1": u, "v2": v})
    return ObjectClassification(g, c, "injective", False,
                                {"mono": m, "map": f, "extension": _extension_exists(m, f, c)},
                                "a map out of a mono's domain does not extend")


def _missing_pairs(g: Graph):
    vs = g.vertices
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if not g.edges_between(a, b):
                yield a, b


def _inseparable_generator_pair(g: Graph, c: Category) -> tuple[Morphism, Morphism]:
    S = standard_graph
    k1, k2c = S("K1"), S("K2^c")
    points = (Morphism(k1, k2c, {"v1": "v1"}), Morphism(k1, k2c, {"v1": "v2"}))
    if c in (Category.G, Category.SiG):
        k2, k1l = S("K2"), S("K1^l")
        return (Morphism(k2, k1l, {"v1": "v1", "v2": "v1", "e1_2": "v1"}),
                Morphism(k2, k1l, {"v1": "v1", "v2": "v1", "e1_2": "l1"}))
    if c is Category.StG:
        if g.edges and not g.loops:
            return (Morphism(k2c, k2c, {"v1": "v1", "v2": "v2"}),
                    Morphism(k2c, k2c, {"v1": "v2", "v2": "v1"}))
        k2, par = S("K2"), S("par2")
        return (Morphism(k2, par, {"v1": "v1", "v2": "v2", "e1_2": "e1"}),
                Morphism(k2, par, {"v1": "v1", "v2": "v2", "e1_2": "e2"}))
    return points


def _inseparable_cogenerator_pair(g: Graph, c: Category) -> tuple[Morphism, Morphism]:
    S = standard_graph
    k1 = S("K1")
    if c in (Category.G, Category.SiG):
        if not g.loops:
            k1l = S("K1^l")
            return (Morphism(k1l, k1l, {"v1": "v1", "l1": "l1"}),
                    Morphism(k1l, k1l, {"v1": "v1", "l1": "v1"}))
        k2 = S("K2")
        return Morphism(k1, k2, {"v1": "v1"}), Morphism(k1, k2, {"v1": "v2"})
    if c is Category.SiLlG:
        k2 = S("K2")
        return Morphism(k1, k2, {"v1": "v1"}), Morphism(k1, k2, {"v1": "v2"})
    if c is Category.StG and not any(len(g.edges_between(v, v)) >= 2 for v in g.vertices):
        k1l, b2 = S("K1^l"), S("bouquet2")
        return (Morphism(k1l, b2, {"v1": "v", "l1": "l1"}),
                Morphism(k1l, b2, {"v1": "v", "l1": "l2"}))
    if c in (Category.StG, Category.SiStG):
        k2l = S("K2^l")
        return Morphism(k1, k2l, {"v1": "v1"}), Morphism(k1, k2l, {"v1": "v2"})
    K = S("K2") if not g.edges else complete(len(g.vertices) + 1)
    return Morphism(k1, K, {"v1": "v1"}), Morphism(k1, K, {"v1": "v2"})


def _separates_all(g: Graph, c: Category, max_parts: int, into: bool):
    """First battery pair no map out of (or into) ``g`` separates."""
    for f, h in _parallel_pairs(c, max_parts):
        if into:
            ok = any(compose(t, f) != compose(t, h) for t in iter_homs(f.cod, g, c))
        else:
            ok = any(compose(f, t) != compose(h, t) for t in iter_homs(g, f.dom, c))
        if not ok:
            return f, h
    return None


def is_generator(g: Graph, c: Category | str, check_parts: int = 3) -> ObjectClassification:
    c = Category.parse(c)
    require_object(g, c)
    if generator_predicate(g, c):
        bad = _separates_all(g, c, check_parts, into=False)
        if bad:
            return ObjectClassification(g, c, "generator", False, {"pair": bad},
                                        "characterization holds but a pair is not separated")
        return ObjectClassification(g, c, "generator", True, None,
                                    "every battery parallel pair is separated")
    f, h = _inseparable_generator_pair(g, c)
    seps = [t for t in iter_homs(g, f.dom, c) if compose(f, t) != compose(h, t)]
    return ObjectClassification(g, c, "generator", False, {"pair": (f, h), "separating": seps},
                                "no map out of the graph separates the pair",
                                nonexistent=c is Category.StG)


def is_cogenerator(g: Graph, c: Category | str, check_parts: int = 3) -> ObjectClassification:
    c = Category.parse(c)
    require_object(g, c)
    if cogenerator_predicate(g, c):
        bad = _separates_all(g, c, check_parts, into=True)
        if bad:
            return ObjectClassification(g, c, "cogenerator", False, {"pair": bad},
                                        "characterization holds but a pair is not separated")
        return ObjectClassification(g, c, "cogenerator", True, None,
                                    "every battery parallel pair is separated")
    f, h = _inseparable_cogenerator_pair(g, c)
    seps = [t for t in iter_homs(f.cod, g, c) if compose(t, f) != compose(t, h)]
    return ObjectClassification(g, c, "cogenerator", False, {"pair": (f, h), "separating": seps},
                                "no map into the graph separates the pair",
                                nonexistent=c is Category.SiLlStG)


CLASSIFIERS = {"projective": is_projective, "injective": is_injective,
               "generator": is_generator, "cogenerator": is_cogenerator}


def classify(g: Graph, prop: str, c: Category | str) -> ObjectClassification:
    from .errors import BadParameter
    try:
        fn = CLASSIFIERS[prop]
    except KeyError:
        raise BadParameter(f"unknown property {prop!r}; expected one of {', '.join(PROPERTIES)}")
    return fn(g, c)
