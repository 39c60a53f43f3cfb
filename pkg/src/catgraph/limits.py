"""Finite limits and colimits in the six categories, plus a bounded UMP checker."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from scipy.cluster.hierarchy import DisjointSet

from .catalog import battery as make_battery
from .catalog import standard_graph
from .errors import NotCospan, NotParallel
from .graph import EMPTY, Category, Graph, in_category, pair
from .morphisms import (Morphism, compose, count_homs, is_valid, iter_homs,
                        require_object, require_valid)
from .report import Report


@dataclass
class ConeResult:
    """A constructed object with its structural morphisms."""

    apex: Graph
    legs: dict[str, Morphism] = field(default_factory=dict)
    _pair_index: dict | None = field(default=None, repr=False, compare=False)

    def __getitem__(self, name: str) -> Morphism:
        return self.legs[name]

    def to_dict(self) -> dict:
        return {"apex": self.apex.to_dict(),
                "legs": {k: v.to_dict() for k, v in self.legs.items()}}


# -- terminal / initial ---------------------------------------------------------

def terminal(c: Category | str) -> Graph | None:
    c = Category.parse(c)
    if c is Category.SiLlStG:
        return None
    if c in (Category.StG, Category.SiStG):
        return standard_graph("K1^l")
    return standard_graph("K1")


def terminal_obstruction(c: Category | str, max_parts: int = 4) -> Report:
    """Show that no candidate in a finite battery is terminal.

    Each candidate either has no edge (so ``K2`` has no map into it) or has an
    edge ``u_v`` with ``u != v`` (so ``K1`` has two maps into it).
    """
    c = Category.parse(c)
    if terminal(c) is not None:
        return Report(False, f"{c} has a terminal object", witness=terminal(c))
    K1, K2 = standard_graph("K1"), standard_graph("K2")
    reasons = {}
    for T in make_battery(max_parts, c):
        label = T.name or T.to_json()
        if not T.edges:
            n = count_homs(K2, T, c)
            reasons[label] = f"edgeless: |hom(K2, T)| = {n}"
            ok = n == 0
        else:
            n = count_homs(K1, T, c)
            reasons[label] = f"has an edge: |hom(K1, T)| = {n}"
            ok = n >= 2
        if not ok:
            return Report(False, "a candidate escapes both cases", witness=T)
    return Report(True, f"no terminal object in {c}: every candidate fails one of the two cases",
                  data={"candidates": reasons})


def initial(c: Category | str) -> Graph:
    Category.parse(c)
    return EMPTY


# -- products ---------------------------------------------------------------------

def _pid(a: str, b: str) -> str:
    return f"({a},{b})"


def product(A: Graph, B: Graph, c: Category | str) -> ConeResult:
    """Binary product with projections ``pi_A`` and ``pi_B``.

    Pairs of parts with both endpoint orders (the ``bar`` parts) are formed
    as in the conceptual product; strict categories drop mixed vertex/edge
    pairs and simple categories identify edges with the same endpoints.
    """
    c = Category.parse(c)
    require_object(A, c, "first factor")
    require_object(B, c, "second factor")
    vertices = [_pid(a, b) for a in A.vertices for b in B.vertices]
    inc: dict[str, tuple[str, str]] = {}
    proj: dict[str, tuple[str, str]] = {_pid(a, b): (a, b) for a in A.vertices for b in B.vertices}
    for alpha in A.parts:
        a1, a2 = A.boundary(alpha)
        for beta in B.parts:
            va, vb = A.is_vertex(alpha), B.is_vertex(beta)
            if va and vb:
                continue
            if c.strict and va != vb:
                continue
            b1, b2 = B.boundary(beta)
            pid = _pid(alpha, beta)
            inc[pid] = (_pid(a1, b1), _pid(a2, b2))
            proj[pid] = (alpha, beta)
            if a1 != a2 and b1 != b2:
                bid = f"bar{pid}"
                inc[bid] = (_pid(a2, b1), _pid(a1, b2))
                proj[bid] = (alpha, beta)
    if c.simple:
        keep: dict[tuple[str, str], str] = {}
        for e in sorted(inc):
            key = pair(*inc[e])
            if key not in keep:
                keep[key] = e
        kept = set(keep.values())
        inc = {e: ends for e, ends in inc.items() if e in kept}
        proj = {p: ab for p, ab in proj.items() if p in kept or p in vertices}
    P = Graph(vertices + list(inc), vertices, inc)
    pi_a = Morphism._unchecked(P, A, {p: ab[0] for p, ab in proj.items()})
    pi_b = Morphism._unchecked(P, B, {p: ab[1] for p, ab in proj.items()})
    return ConeResult(P, {"pi_A": pi_a, "pi_B": pi_b})


def _index_by_legs(apex: Graph, legs: list[Morphism]) -> dict[tuple, list[str]]:
    idx: dict[tuple, list[str]] = defaultdict(list)
    for p in apex.parts:
        idx[tuple(m(p) for m in legs) + (apex.is_vertex(p),)].append(p)
    return idx


def pairing(f: Morphism, g: Morphism, prod: ConeResult) -> Morphism | None:
    """The mediator ``<f, g>: T -> A x B`` by part lookup, or None if none exists."""
    P = prod.apex
    pa, pb = prod["pi_A"], prod["pi_B"]
    if prod._pair_index is None:
        prod._pair_index = _index_by_legs(P, [pa, pb])
    idx = prod._pair_index
    T = f.dom
    mapping: dict[str, str] = {}
    for v in T.vertices:
        hit = idx.get((f(v), g(v), True))
        if not hit:
            return None
        mapping[v] = hit[0]
    for e in T.edges:
        x, y = T.incidence[e]
        want = pair(mapping[x], mapping[y])
        found = None
        for is_v in (False, True):
            for p in idx.get((f(e), g(e), is_v), ()):
                if P.boundary(p) == want:
                    found = p
                    break
            if found:
                break
        if found is None:
            return None
        mapping[e] = found
    return Morphism._unchecked(T, P, mapping)


def product_of_maps(f: Morphism, g: Morphism, src: ConeResult, dst: ConeResult) -> Morphism | None:
    """``f x g`` from ``src`` (product of the domains) to ``dst``."""
    return pairing(compose(f, src["pi_A"]), compose(g, src["pi_B"]), dst)


# -- coproducts -----------------------------------------------------------------

def coproduct(A: Graph, B: Graph, c: Category | str) -> ConeResult:
    c = Category.parse(c)
    require_object(A, c, "first summand")
    require_object(B, c, "second summand")
    tags = (("inl:", A), ("inr:", B))
    parts, vertices, inc = [], [], {}
    for tag, g in tags:
        parts += [tag + p for p in g.parts]
        vertices += [tag + v for v in g.vertices]
        inc.update({tag + e: (tag + a, tag + b) for e, (a, b) in g.incidence.items()})
    S = Graph(parts, vertices, inc)
    i_a = Morphism._unchecked(A, S, {p: "inl:" + p for p in A.parts})
    i_b = Morphism._unchecked(B, S, {p: "inr:" + p for p in B.parts})
    return ConeResult(S, {"i_A": i_a, "i_B": i_b})


def copairing(f: Morphism, g: Morphism, cop: ConeResult) -> Morphism:
    mapping = {"inl:" + p: q for p, q in f.mapping.items()}
    mapping.update({"inr:" + p: q for p, q in g.mapping.items()})
    return Morphism._unchecked(cop.apex, f.cod, mapping)


# -- equalizers ---------------------------------------------------------------------

def _require_parallel(f: Morphism, g: Morphism) -> None:
    if f.dom != g.dom or f.cod != g.cod:
        raise NotParallel("morphisms do not share domain and codomain")


def equalizer(f: Morphism, g: Morphism, c: Category | str) -> ConeResult:
    c = Category.parse(c)
    _require_parallel(f, g)
    require_valid(f, c)
    require_valid(g, c)
    A = f.dom
    keep = [v for v in A.vertices if f(v) == g(v)]
    keep_set = set(keep)
    for e in A.edges:
        x, y = A.incidence[e]
        if f(e) == g(e) and x in keep_set and y in keep_set:
            keep.append(e)
    E = A.subgraph(keep)
    incl = Morphism._unchecked(E, A, {p: p for p in E.parts})
    return ConeResult(E, {"incl": incl})


# -- coequalizers ---------------------------------------------------------------------

def _class_id(members: Iterable[str]) -> str:
    members = sorted(members)
    if len(members) == 1:
        return members[0]
    return "[" + ",".join(members) + "]"


def _quotient(f: Morphism, g: Morphism, c: Category):
    """Union-find closure of the generating identifications plus category fixes.

    Returns ``(classes, vertex_flags, incidence_by_rep, ds)`` keyed by the
    union-find representative.
    """
    B = f.cod
    ds = DisjointSet(B.parts)
    for a in f.dom.parts:
        ds.merge(f(a), g(a))

    def shape():
        classes: dict[str, list[str]] = defaultdict(list)
        for p in B.parts:
            classes[ds[p]].append(p)
        is_vertex = {r: any(B.is_vertex(p) for p in ms) for r, ms in classes.items()}
        ends = {}
        for r, ms in classes.items():
            if is_vertex[r]:
                continue
            x, y = B.incidence[ms[0]]
            ends[r] = pair(ds[x], ds[y])
        return classes, is_vertex, ends

    classes, is_vertex, ends = shape()
    if c.simple:
        changed = False
        if c is Category.SiLlG:
            for r, (x, y) in list(ends.items()):
                if x == y:
                    ds.merge(r, x)
                    changed = True
        if changed:
            classes, is_vertex, ends = shape()
        by_ends: dict[tuple[str, str], list[str]] = defaultdict(list)
        for r, e in ends.items():
            by_ends[e].append(r)
        merged = False
        for rs in by_ends.values():
            for r in rs[1:]:
                ds.merge(rs[0], r)
                merged = True
        if merged:
            classes, is_vertex, ends = shape()
    return classes, is_vertex, ends, ds


def coequalizer(f: Morphism, g: Morphism, c: Category | str) -> ConeResult | None:
    """Quotient of the codomain identifying ``f(a)`` with ``g(a)``.

    Returns None in the simple loopless strict category when the quotient is
    forced to contain a loop (see :func:`coequalizer_obstruction`).
    """
    c = Category.parse(c)
    _require_parallel(f, g)
    require_valid(f, c)
    require_valid(g, c)
    B = f.cod
    classes, is_vertex, ends, ds = _quotient(f, g, c)
    if c is Category.SiLlStG and any(x == y for x, y in ends.values()):
        return None
    name = {r: _class_id(ms) for r, ms in classes.items()}
    vertices = [name[r] for r in classes if is_vertex[r]]
    inc = {name[r]: (name[x], name[y]) for r, (x, y) in ends.items()}
    Q = Graph(vertices + list(inc), vertices, inc)
    q = Morphism._unchecked(B, Q, {p: name[ds[p]] for p in B.parts})
    return ConeResult(Q, {"q": q})


def coequalizer_obstruction(f: Morphism, g: Morphism, c: Category | str) -> Report:
    """Explain why no coequalizer exists in the simple loopless strict category.

    Any map ``h`` with ``h.f == h.g`` identifies the endpoint classes of some
    edge class, so the image of that edge would have to be a loop.
    """
    c = Category.parse(c)
    _require_parallel(f, g)
    classes, is_vertex, ends, _ = _quotient(f, g, Category.StG)
    for r, (x, y) in sorted(ends.items()):
        if x == y:
            edge_members = sorted(classes[r])
            return Report(True, "an edge class has both endpoints in one vertex class, forcing a loop",
                          witness={"edge_class": edge_members,
                                   "vertex_class": sorted(classes[x])})
    return Report(False, "no edge class is forced to become a loop")


def coequalizer_mediator(h: Morphism, coeq: ConeResult) -> Morphism:
    q = coeq["q"]
    mapping = {}
    for p in q.dom.parts:
        mapping.setdefault(q(p), h(p))
    return Morphism._unchecked(coeq.apex, h.cod, mapping)


# -- pullbacks -------------------------------------------------------------------

def pullback(f: Morphism, g: Morphism, c: Category | str) -> ConeResult:
    """Pullback of ``f: A -> C`` and ``g: B -> C`` as an equalizer inside ``A x B``."""
    c = Category.parse(c)
    if f.cod != g.cod:
        raise NotCospan("morphisms do not share a codomain")
    require_valid(f, c)
    require_valid(g, c)
    prod = product(f.dom, g.dom, c)
    eq = equalizer(compose(f, prod["pi_A"]), compose(g, prod["pi_B"]), c)
    incl = eq["incl"]
    return ConeResult(eq.apex, {"p_A": compose(prod["pi_A"], incl),
                                "p_B": compose(prod["pi_B"], incl)})


# -- universal mapping property checker ---------------------------------------------

UMP_KINDS = ("terminal", "initial", "product", "coproduct", "equalizer", "coequalizer", "pullback")


def _injective_on(items, key) -> tuple | None:
    seen = {}
    for m in items:
        k = key(m)
        if k in seen:
            return seen[k], m
        seen[k] = m
    return None


def verify_ump(kind: str, result: ConeResult | Graph, battery: list[Graph] | None,
               c: Category | str, f: Morphism | None = None,
               g: Morphism | None = None) -> Report:
    """Check existence and uniqueness of mediators against every test object.

    For each test object the canonical comparison map (e.g. ``m -> (pi_A m,
    pi_B m)`` for products) must be injective and the two hom-sets must have
    the same size, which together make it a bijection.
    """
    c = Category.parse(c)
    if kind not in UMP_KINDS:
        raise ValueError(f"unknown UMP kind {kind!r}")
    if battery is None:
        battery = make_battery(4, c)
    cone = result if isinstance(result, ConeResult) else ConeResult(result, {})
    apex = cone.apex
    checked = []

    def fail(msg, witness=None, **data):
        return Report(False, msg, witness=witness, data={"kind": kind, **data})

    if not in_category(apex, c):
        return fail(f"the constructed object is not an object of {c}")
    for name, leg in cone.legs.items():
        if not is_valid(leg, c):
            return fail(f"structural map {name} is not a morphism of {c}", witness=name)

    if kind == "terminal":
        for T in battery:
            n = count_homs(T, apex, c)
            if n != 1:
                return fail(f"{n} morphisms from a test object", witness=T, count=n)
        return Report(True, f"terminal in {c} over {len(battery)} test objects")
    if kind == "initial":
        for T in battery:
            n = count_homs(apex, T, c)
            if n != 1:
                return fail(f"{n} morphisms to a test object", witness=T, count=n)
        return Report(True, f"initial in {c} over {len(battery)} test objects")

    if kind == "product":
        pa, pb = cone["pi_A"], cone["pi_B"]
        for T in battery:
            homs = list(iter_homs(T, apex, c))
            expected = count_homs(T, pa.cod, c) * count_homs(T, pb.cod, c)
            clash = _injective_on(homs, lambda m: (compose(pa, m), compose(pb, m)))
            if clash:
                return fail("two maps into the product have equal projections", witness=T,
                            maps=list(clash))
            if len(homs) != expected:
                return fail(f"|hom(T, P)| = {len(homs)} but |hom(T, A) x hom(T, B)| = {expected}",
                            witness=T, got=len(homs), expected=expected)
            checked.append(len(homs))
        return Report(True, f"product UMP holds in {c} over {len(battery)} test objects",
                      data={"counts": checked})

    if kind == "coproduct":
        ia, ib = cone["i_A"], cone["i_B"]
        for T in battery:
            homs = list(iter_homs(apex, T, c))
            expected = count_homs(ia.dom, T, c) * count_homs(ib.dom, T, c)
            clash = _injective_on(homs, lambda m: (compose(m, ia), compose(m, ib)))
            if clash:
                return fail("two maps out of the coproduct agree on both summands", witness=T)
            if len(homs) != expected:
                return fail(f"|hom(S, T)| = {len(homs)} but expected {expected}", witness=T,
                            got=len(homs), expected=expected)
            checked.append(len(homs))
        return Report(True, f"coproduct UMP holds in {c} over {len(battery)} test objects",
                      data={"counts": checked})

    if f is None or g is None:
        raise ValueError(f"{kind} verification needs the diagram morphisms f and g")

    if kind == "equalizer":
        e = cone["incl"]
        if compose(f, e) != compose(g, e):
            return fail("the inclusion does not equalize f and g")
        for T in battery:
            homs = list(iter_homs(T, apex, c))
            expected = sum(1 for h in iter_homs(T, f.dom, c) if compose(f, h) == compose(g, h))
            if _injective_on(homs, lambda m: compose(e, m)):
                return fail("two maps into the equalizer agree after inclusion", witness=T)
            if len(homs) != expected:
                return fail(f"{len(homs)} maps into the equalizer vs {expected} equalizing maps",
                            witness=T, got=len(homs), expected=expected)
            checked.append(len(homs))
        return Report(True, f"equalizer UMP holds in {c} over {len(battery)} test objects",
                      data={"counts": checked})

    if kind == "coequalizer":
        q = cone["q"]
        if compose(q, f) != compose(q, g):
            return fail("the quotient map does not coequalize f and g")
        for T in battery:
            homs = list(iter_homs(apex, T, c))
            expected = sum(1 for h in iter_homs(f.cod, T, c) if compose(h, f) == compose(h, g))
            if _injective_on(homs, lambda m: compose(m, q)):
                return fail("two maps out of the quotient agree after the quotient map", witness=T)
            if len(homs) != expected:
                return fail(f"{len(homs)} maps out of the quotient vs {expected} coequalizing maps",
                            witness=T, got=len(homs), expected=expected)
            checked.append(len(homs))
        return Report(True, f"coequalizer UMP holds in {c} over {len(battery)} test objects",
                      data={"counts": checked})

    # pullback
    pa, pb = cone["p_A"], cone["p_B"]
    if compose(f, pa) != compose(g, pb):
        return fail("the square does not commute")
    for T in battery:
        homs = list(iter_homs(T, apex, c))
        left = Counter(compose(f, h) for h in iter_homs(T, f.dom, c))
        right = Counter(compose(g, k) for k in iter_homs(T, g.dom, c))
        expected = sum(n * right[key] for key, n in left.items())
        if _injective_on(homs, lambda m: (compose(pa, m), compose(pb, m))):
            return fail("two maps into the pullback agree on both legs", witness=T)
        if len(homs) != expected:
            return fail(f"{len(homs)} maps into the pullback vs {expected} commuting pairs",
                        witness=T, got=len(homs), expected=expected)
        checked.append(len(homs))
    return Report(True, f"pullback UMP holds in {c} over {len(battery)} test objects",
                  data={"counts": checked})
