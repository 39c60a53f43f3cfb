"""Graph morphisms, hom-set enumeration and the epi/mono characterizations."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, Mapping

from .errors import InvalidMorphism, NonComposable, ObjectNotInCategory
from .graph import Category, Graph, components, in_category, pair
from .report import Report


class Morphism:
    """A total map on parts ``dom -> cod``.

    Construction only checks totality; incidence and strictness are checked
    by :func:`validate` relative to a category.
    """

    __slots__ = ("dom", "cod", "_map", "_images", "_hash")

    def __init__(self, dom: Graph, cod: Graph, mapping: Mapping[str, str]):
        mapping = {str(k): str(v) for k, v in mapping.items()}
        if set(mapping) != set(dom.parts):
            missing = sorted(set(dom.parts) - set(mapping))
            extra = sorted(set(mapping) - set(dom.parts))
            raise InvalidMorphism(f"map is not total on the domain (missing {missing}, extra {extra})")
        cod_parts = set(cod.parts)
        for p, q in mapping.items():
            if q not in cod_parts:
                raise InvalidMorphism(f"{p!r} maps to {q!r}, which is not a part of the codomain")
        self._init(dom, cod, mapping)

    def _init(self, dom: Graph, cod: Graph, mapping: dict[str, str]) -> None:
        self.dom = dom
        self.cod = cod
        self._map = mapping
        self._images = tuple(mapping[p] for p in dom.parts)
        self._hash = hash((dom, cod, self._images))

    @classmethod
    def _unchecked(cls, dom: Graph, cod: Graph, mapping: dict[str, str]) -> "Morphism":
        m = cls.__new__(cls)
        m._init(dom, cod, mapping)
        return m

    @property
    def mapping(self) -> Mapping[str, str]:
        return MappingProxyType(self._map)

    @property
    def images(self) -> tuple[str, ...]:
        """Images of ``dom.parts`` in order."""
        return self._images

    def __call__(self, p: str) -> str:
        return self._map[p]

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self._hash == other._hash and self._images == other._images
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{p}->{q}" for p, q in zip(self.dom.parts, self._images))
        return f"Morphism({body})"

    def image(self) -> set[str]:
        return set(self._images)

    def vertex_map(self) -> dict[str, str]:
        return {v: self._map[v] for v in self.dom.vertices}

    def is_strict(self) -> bool:
        return all(not self.cod.is_vertex(self._map[e]) for e in self.dom.edges)

    def is_injective(self) -> bool:
        return len(set(self._images)) == len(self._images)

    def is_surjective(self) -> bool:
        return set(self._images) == set(self.cod.parts)

    def is_vertex_injective(self) -> bool:
        vs = [self._map[v] for v in self.dom.vertices]
        return len(set(vs)) == len(vs)

    def is_vertex_surjective(self) -> bool:
        return {self._map[v] for v in self.dom.vertices} == set(self.cod.vertices)

    def to_dict(self) -> dict:
        return {"dom": self.dom.to_dict(), "cod": self.cod.to_dict(),
                "map": dict(sorted(self._map.items()))}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Morphism":
        return cls(Graph.from_dict(data["dom"]), Graph.from_dict(data["cod"]), data["map"])


def identity(g: Graph) -> Morphism:
    return Morphism._unchecked(g, g, {p: p for p in g.parts})


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g . f``: apply ``f`` first."""
    if f.cod != g.dom:
        raise NonComposable("codomain of the first map differs from domain of the second")
    gm = g._map
    return Morphism._unchecked(f.dom, g.cod, {p: gm[q] for p, q in f._map.items()})


def require_object(g: Graph, c: Category, role: str = "graph") -> None:
    if not in_category(g, c):
        raise ObjectNotInCategory(f"{role} is not an object of {c}")


def check_parts(f: Morphism, strict: bool) -> tuple[str, str] | None:
    """Return ``(part, reason)`` for the first incidence/strictness violation."""
    dom, cod, m = f.dom, f.cod, f._map
    for v in dom.vertices:
        if not cod.is_vertex(m[v]):
            return v, f"vertex {v!r} maps to non-vertex {m[v]!r}"
    for e in dom.edges:
        x, y = dom.incidence[e]
        q = m[e]
        if cod.boundary(q) != pair(m[x], m[y]):
            return e, f"edge {e!r} maps to {q!r} without preserving incidence"
        if strict and cod.is_vertex(q):
            return e, f"edge {e!r} maps to vertex {q!r} under a strict category"
    return None


def validate(f: Morphism, c: Category | str) -> Report:
    c = Category.parse(c)
    require_object(f.dom, c, "domain")
    require_object(f.cod, c, "codomain")
    problem = check_parts(f, c.strict)
    if problem is None:
        return Report(True, f"valid morphism of {c}")
    return Report(False, problem[1], witness=problem[0])


def is_valid(f: Morphism, c: Category | str) -> bool:
    c = Category.parse(c)
    return in_category(f.dom, c) and in_category(f.cod, c) and check_parts(f, c.strict) is None


def require_valid(f: Morphism, c: Category) -> None:
    require_object(f.dom, c, "domain")
    require_object(f.cod, c, "codomain")
    problem = check_parts(f, c.strict)
    if problem is not None:
        raise InvalidMorphism(problem[1])


# -- hom enumeration ------------------------------------------------------------

class _Plan:
    """Vertex order for backtracking plus the edges that close at each step."""

    def __init__(self, A: Graph, vertices: list[str]):
        self.order = vertices
        pos = {v: i for i, v in enumerate(vertices)}
        self.closing: list[list[tuple[str, str]]] = [[] for _ in vertices]
        for e in A.edges:
            x, y = A.incidence[e]
            if x not in pos:
                continue
            if pos[x] < pos[y]:
                x, y = y, x
            # edge closes when its later endpoint x is placed; partner y
            self.closing[pos[x]].append((e, y))


def _component_orders(A: Graph) -> list[list[str]]:
    out = []
    for comp in components(A):
        vs = sorted(v for v in comp if A.is_vertex(v))
        order, seen, queue = [], {vs[0]}, [vs[0]]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(A.neighbours(v)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        out.append(order)
    return out


class _Target:
    """Cached candidate tables for a codomain under a strictness flag."""

    def __init__(self, B: Graph, strict: bool):
        self.B = B
        self.strict = strict
        self._cands: dict[tuple[str, str], tuple[str, ...]] = {}
        nbr: dict[str, set[str]] = {w: set() for w in B.vertices}
        for e in B.edges:
            a, b = B.incidence[e]
            nbr[a].add(b)
            nbr[b].add(a)
        if not strict:
            for w in B.vertices:
                nbr[w].add(w)
        self.nbr = nbr

    def cands(self, a: str, b: str) -> tuple[str, ...]:
        key = (a, b) if a <= b else (b, a)
        hit = self._cands.get(key)
        if hit is None:
            hit = self.B.edges_between(a, b)
            if a == b and not self.strict:
                hit = hit + (a,)
            self._cands[key] = hit
        return hit

    def allowed(self, v: str, closing: list[tuple[str, str]], assign: dict[str, str]):
        partners = [assign[y] for _, y in closing if y != v]
        if partners:
            cand = set(self.nbr[partners[0]])
            for p in partners[1:]:
                cand &= self.nbr[p]
            pool = sorted(cand)
        else:
            pool = self.B.vertices
        if any(y == v for _, y in closing):
            pool = [w for w in pool if w in self.nbr[w]]
        return pool


def _vertex_assignments(plan: _Plan, tgt: _Target) -> Iterator[dict[str, str]]:
    order, closing = plan.order, plan.closing
    assign: dict[str, str] = {}
    n = len(order)

    def rec(i: int):
        if i == n:
            yield dict(assign)
            return
        v = order[i]
        for w in tgt.allowed(v, closing[i], assign):
            assign[v] = w
            yield from rec(i + 1)
        assign.pop(v, None)

    yield from rec(0)


def iter_homs(A: Graph, B: Graph, c: Category | str) -> Iterator[Morphism]:
    """Yield every morphism ``A -> B`` valid in ``c`` in canonical order.

    Vertex maps are enumerated first; each is extended edge by edge to every
    codomain part with the required incidence.
    """
    c = Category.parse(c)
    require_object(A, c, "domain")
    require_object(B, c, "codomain")
    tgt = _Target(B, c.strict)
    plan = _Plan(A, [v for order in _component_orders(A) for v in order])
    edges = A.edges
    for vmap in _vertex_assignments(plan, tgt):
        choices = [tgt.cands(vmap[A.incidence[e][0]], vmap[A.incidence[e][1]]) for e in edges]
        for combo in itertools.product(*choices):
            mapping = dict(vmap)
            mapping.update(zip(edges, combo))
            yield Morphism._unchecked(A, B, mapping)


@dataclass
class HomSet:
    dom: Graph
    cod: Graph
    category: Category
    morphisms: list[Morphism] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.morphisms)

    def __iter__(self):
        return iter(self.morphisms)

    def __contains__(self, f: Morphism) -> bool:
        return f in set(self.morphisms)

    def to_dict(self) -> dict:
        return {"category": self.category.value, "count": len(self.morphisms),
                "morphisms": [dict(sorted(f.mapping.items())) for f in self.morphisms]}


def enumerate_homs(A: Graph, B: Graph, c: Category | str) -> HomSet:
    c = Category.parse(c)
    return HomSet(A, B, c, list(iter_homs(A, B, c)))


def count_homs(A: Graph, B: Graph, c: Category | str) -> int:
    """|hom_c(A, B)| without materializing morphisms.

    Components are counted independently and multiplied.
    """
    c = Category.parse(c)
    require_object(A, c, "domain")
    require_object(B, c, "codomain")
    tgt = _Target(B, c.strict)
    total = 1
    for order in _component_orders(A):
        plan = _Plan(A, order)
        total *= _count_component(plan, tgt)
        if total == 0:
            return 0
    return total


def _count_component(plan: _Plan, tgt: _Target) -> int:
    order, closing = plan.order, plan.closing
    n = len(order)
    assign: dict[str, str] = {}
    if n == 1 and not closing[0]:
        return len(tgt.B.vertices)

    def rec(i: int) -> int:
        if i == n:
            return 1
        v = order[i]
        total = 0
        for w in tgt.allowed(v, closing[i], assign):
            assign[v] = w
            weight = 1
            for _, y in closing[i]:
                weight *= len(tgt.cands(w, assign[y]))
            if weight:
                total += weight * rec(i + 1)
        assign.pop(v, None)
        return total

    return rec(0)


def random_hom(A: Graph, B: Graph, c: Category | str,
               rng: random.Random) -> Morphism | None:
    """A random valid morphism (randomized backtracking), or None if none exist."""
    c = Category.parse(c)
    tgt = _Target(B, c.strict)
    plan = _Plan(A, [v for order in _component_orders(A) for v in order])
    order, closing = plan.order, plan.closing
    assign: dict[str, str] = {}

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        pool = list(tgt.allowed(v, closing[i], assign))
        rng.shuffle(pool)
        for w in pool:
            assign[v] = w
            if rec(i + 1):
                return True
        assign.pop(v, None)
        return False

    if not rec(0):
        return None
    mapping = dict(assign)
    for e in A.edges:
        x, y = A.incidence[e]
        mapping[e] = rng.choice(tgt.cands(assign[x], assign[y]))
    return Morphism._unchecked(A, B, mapping)


# -- epi / mono -------------------------------------------------------------------

PART_LEVEL = (Category.G, Category.StG, Category.SiG)


def fresh_id(base: str, taken) -> str:
    new = base + "'"
    while new in taken:
        new += "'"
    return new


def append_vertex_copy(B: Graph, v: str) -> tuple[Graph, Morphism, Morphism]:
    """``C`` = ``B`` plus a twin of ``v``; returns (C, inclusion, shift to the twin)."""
    taken = set(B.parts)
    twin = fresh_id(v, taken)
    taken.add(twin)
    inc = dict(B.incidence)
    shift = {p: p for p in B.parts}
    shift[v] = twin
    new_parts = list(B.parts) + [twin]
    for e in B.edges:
        a, b = B.incidence[e]
        if v in (a, b):
            e2 = fresh_id(e, taken)
            taken.add(e2)
            new_parts.append(e2)
            inc[e2] = (twin if a == v else a, twin if b == v else b)
            shift[e] = e2
    C = Graph(new_parts, list(B.vertices) + [twin], inc)
    incl = Morphism._unchecked(B, C, {p: p for p in B.parts})
    return C, incl, Morphism._unchecked(B, C, shift)


def append_parallel_edge(B: Graph, e: str) -> tuple[Graph, Morphism, Morphism]:
    twin = fresh_id(e, set(B.parts))
    inc = dict(B.incidence)
    inc[twin] = B.incidence[e]
    C = Graph(list(B.parts) + [twin], B.vertices, inc)
    shift = {p: p for p in B.parts}
    shift[e] = twin
    return (C, Morphism._unchecked(B, C, {p: p for p in B.parts}),
            Morphism._unchecked(B, C, shift))


def classify_epi(f: Morphism, c: Category | str) -> Report:
    """Decide epi-ness by the surjectivity characterization.

    A negative verdict carries ``{"C", "i", "g"}`` with ``i != g`` and
    ``i . f == g . f``.
    """
    c = Category.parse(c)
    require_valid(f, c)
    B = f.cod
    hit = f.image()
    if c in PART_LEVEL:
        missed = [p for p in B.parts if p not in hit]
        level = "parts"
    else:
        missed = [v for v in B.vertices if v not in hit]
        level = "vertices"
    if not missed:
        return Report(True, f"surjective on {level}: epimorphism in {c}")
    p = missed[0]
    if B.is_vertex(p):
        C, i, g = append_vertex_copy(B, p)
        how = "appended twin vertex"
    elif c is Category.SiG:
        from .catalog import standard_graph

        C = standard_graph("K1^l")
        (w,), (loop,) = C.vertices, C.edges
        i = Morphism._unchecked(B, C, {q: w for q in B.parts})
        g = Morphism._unchecked(B, C, {q: (loop if q == p else w) for q in B.parts})
        how = "two maps to the one-loop vertex"
    else:
        C, i, g = append_parallel_edge(B, p)
        how = "appended parallel edge"
    return Report(False, f"part {p!r} is missed; {how} separates two maps agreeing on the image",
                  witness={"missed": p, "C": C, "i": i, "g": g})


def classify_mono(f: Morphism, c: Category | str) -> Report:
    """Decide mono-ness by the injectivity characterization.

    A negative verdict carries ``{"g", "h"}`` with ``g != h`` and
    ``f . g == f . h``.
    """
    c = Category.parse(c)
    require_valid(f, c)
    from .catalog import standard_graph

    A = f.dom
    if c in PART_LEVEL:
        seen: dict[str, str] = {}
        clash = None
        for p in A.parts:
            q = f(p)
            if q in seen:
                clash = (seen[q], p)
                break
            seen[q] = p
        level = "parts"
    else:
        seen = {}
        clash = None
        for v in A.vertices:
            q = f(v)
            if q in seen:
                clash = (seen[q], v)
                break
            seen[q] = v
        level = "vertices"
    if clash is None:
        return Report(True, f"injective on {level}: monomorphism in {c}")
    d, e = clash
    if A.is_vertex(d) and A.is_vertex(e):
        K1 = standard_graph("K1")
        (x,) = K1.vertices
        g = Morphism._unchecked(K1, A, {x: d})
        h = Morphism._unchecked(K1, A, {x: e})
    else:
        K2 = standard_graph("K2")
        x1, x2 = K2.vertices
        (x,) = K2.edges
        if A.is_vertex(d):
            d, e = e, d
        d1, d2 = A.boundary(d)
        e1, e2 = A.boundary(e)
        if f(e1) != f(d1):
            e1, e2 = e2, e1
        g = Morphism._unchecked(K2, A, {x1: d1, x2: d2, x: d})
        h = Morphism._unchecked(K2, A, {x1: e1, x2: e2, x: e})
    return Report(False, f"parts {clash[0]!r} and {clash[1]!r} collide",
                  witness={"collision": list(clash), "g": g, "h": h})
