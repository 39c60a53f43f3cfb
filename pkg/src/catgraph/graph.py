"""Conceptual graphs: a part set, a distinguished vertex subset, and incidence.

Vertices never carry an explicit incidence entry; a vertex ``v`` is incident
to the diagonal pair ``(v, v)`` by representation.  Part ids are opaque
strings and the global total order on them is plain string order.
"""
from __future__ import annotations

import enum
import json
from collections import Counter, defaultdict
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from scipy.cluster.hierarchy import DisjointSet

from .errors import (
    BadParameter,
    DanglingEndpoint,
    DuplicateId,
    EmptyVertexNonemptyParts,
    VertexWithIncidence,
)

Pair = tuple[str, str]


def pair(u: str, v: str) -> Pair:
    """Canonical unordered pair: smaller id first."""
    return (u, v) if u <= v else (v, u)


class Category(enum.Enum):
    """The six concrete categories of graphs."""

    G = "G"
    SiG = "SiG"
    SiLlG = "SiLlG"
    StG = "StG"
    SiStG = "SiStG"
    SiLlStG = "SiLlStG"

    @property
    def simple(self) -> bool:
        return self in (Category.SiG, Category.SiLlG, Category.SiStG, Category.SiLlStG)

    @property
    def loopless(self) -> bool:
        return self in (Category.SiLlG, Category.SiLlStG)

    @property
    def strict(self) -> bool:
        return self in (Category.StG, Category.SiStG, Category.SiLlStG)

    @property
    def long_name(self) -> str:
        return _LONG_NAMES[self]

    @classmethod
    def parse(cls, name: "str | Category") -> "Category":
        if isinstance(name, Category):
            return name
        key = name.strip().lower()
        for cat in cls:
            if key in (cat.value.lower(), _LONG_NAMES[cat].lower()):
                return cat
        raise BadParameter(f"unknown category {name!r}")

    def __str__(self) -> str:
        return self.value


_LONG_NAMES = {
    Category.G: "Grphs",
    Category.SiG: "SiGrphs",
    Category.SiLlG: "SiLlGrphs",
    Category.StG: "StGrphs",
    Category.SiStG: "SiStGrphs",
    Category.SiLlStG: "SiLlStGrphs",
}

ALL_CATEGORIES = tuple(Category)


class Graph:
    """An immutable finite conceptual graph.

    Parameters
    ----------
    parts : iterable of str
        Every part id (vertices and edges).
    vertices : iterable of str
        The distinguished vertex subset.
    incidence : mapping
        Edge id -> pair of vertex ids.  Vertices must not appear as keys.
    name : str, optional
        Display label; ignored by equality.
    """

    __slots__ = ("_parts", "_vertices", "_vertex_set", "_edges", "_incidence",
                 "_key", "_hash", "_by_pair", "_adj", "name")

    def __init__(self, parts: Iterable[str], vertices: Iterable[str],
                 incidence: Mapping[str, Iterable[str]] | None = None,
                 name: str | None = None):
        parts = [str(p) for p in parts]
        seen: set[str] = set()
        for p in parts:
            if p in seen:
                raise DuplicateId(f"part id {p!r} occurs twice")
            seen.add(p)
        vertex_list = [str(v) for v in vertices]
        if len(set(vertex_list)) != len(vertex_list):
            raise DuplicateId("vertex ids are not distinct")
        vertex_set = frozenset(vertex_list)
        if not vertex_set <= seen:
            missing = sorted(vertex_set - seen)
            raise BadParameter(f"vertices {missing} are not parts")
        if not vertex_set and seen:
            raise EmptyVertexNonemptyParts("a graph with no vertices must have no parts")
        incidence = dict(incidence or {})
        inc: dict[str, Pair] = {}
        for e, ends in incidence.items():
            e = str(e)
            if e in vertex_set:
                raise VertexWithIncidence(f"vertex {e!r} was given an explicit incidence")
            if e not in seen:
                raise BadParameter(f"incidence given for unknown part {e!r}")
            ends = tuple(str(x) for x in ends)
            if len(ends) != 2:
                raise BadParameter(f"incidence of {e!r} must be a pair, got {ends}")
            for x in ends:
                if x not in vertex_set:
                    raise DanglingEndpoint(f"edge {e!r} has endpoint {x!r} which is not a vertex")
            inc[e] = pair(*ends)
        for p in seen - vertex_set:
            if p not in inc:
                raise BadParameter(f"edge {p!r} has no incidence entry")

        self._parts = tuple(sorted(seen))
        self._vertices = tuple(sorted(vertex_set))
        self._vertex_set = vertex_set
        self._edges = tuple(sorted(inc))
        self._incidence = MappingProxyType(dict(sorted(inc.items())))
        self._key = (self._parts, self._vertices, tuple(self._incidence.items()))
        self._hash = hash(self._key)
        self._by_pair: dict[Pair, tuple[str, ...]] | None = None
        self._adj: dict[str, frozenset[str]] | None = None
        self.name = name

    # -- accessors ---------------------------------------------------------
    @property
    def parts(self) -> tuple[str, ...]:
        return self._parts

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[str]:
        return self._vertex_set

    @property
    def edges(self) -> tuple[str, ...]:
        return self._edges

    @property
    def incidence(self) -> Mapping[str, Pair]:
        return self._incidence

    @property
    def loops(self) -> tuple[str, ...]:
        return tuple(e for e in self._edges if self._incidence[e][0] == self._incidence[e][1])

    def is_vertex(self, p: str) -> bool:
        return p in self._vertex_set

    def boundary(self, p: str) -> Pair:
        """Incidence of any part; a vertex sits on its own diagonal."""
        if p in self._vertex_set:
            return (p, p)
        return self._incidence[p]

    def edges_between(self, u: str, v: str) -> tuple[str, ...]:
        """Edges (not vertices) whose incidence is the pair ``u_v``."""
        if self._by_pair is None:
            table: dict[Pair, list[str]] = defaultdict(list)
            for e in self._edges:
                table[self._incidence[e]].append(e)
            self._by_pair = {k: tuple(v) for k, v in table.items()}
        return self._by_pair.get(pair(u, v), ())

    def neighbours(self, v: str) -> frozenset[str]:
        """Vertices joined to ``v`` by some edge (``v`` itself if it has a loop)."""
        if self._adj is None:
            adj: dict[str, set[str]] = {w: set() for w in self._vertices}
            for a, b in self._incidence.values():
                adj[a].add(b)
                adj[b].add(a)
            self._adj = {w: frozenset(s) for w, s in adj.items()}
        return self._adj[v]

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return (f"Graph({label}{len(self._vertices)} vertices, "
                f"{len(self._edges)} edges)")

    # -- derived graphs ----------------------------------------------------
    def relabel(self, mapping: Mapping[str, str] | Callable[[str], str],
                name: str | None = None) -> "Graph":
        f = mapping if callable(mapping) else mapping.__getitem__
        return Graph([f(p) for p in self._parts], [f(v) for v in self._vertices],
                     {f(e): (f(a), f(b)) for e, (a, b) in self._incidence.items()},
                     name=name if name is not None else self.name)

    def subgraph(self, keep: Iterable[str], name: str | None = None) -> "Graph":
        keep = set(keep)
        return Graph([p for p in self._parts if p in keep],
                     [v for v in self._vertices if v in keep],
                     {e: self._incidence[e] for e in self._edges if e in keep},
                     name=name)

    # -- serialization -----------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "parts": list(self._parts),
            "vertices": list(self._vertices),
            "incidence": {e: list(ends) for e, ends in self._incidence.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        try:
            return cls(data["parts"], data["vertices"], data.get("incidence", {}))
        except KeyError as exc:
            raise BadParameter(f"graph JSON is missing field {exc}") from None

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in self._vertices:
            lines.append(f'  "{v}";')
        for e in self._edges:
            a, b = self._incidence[e]
            lines.append(f'  "{a}" -- "{b}" [label="{e}"];')
        lines.append("}")
        return "\n".join(lines)


def make_graph(parts: Iterable[str], vertices: Iterable[str],
               incidence: Mapping[str, Iterable[str]] | None = None,
               name: str | None = None) -> Graph:
    return Graph(parts, vertices, incidence, name=name)


EMPTY = Graph([], [], {}, name="empty")


# -- predicates ------------------------------------------------------------

def is_simple(g: Graph) -> bool:
    """At most one edge per unordered vertex pair (loops included)."""
    ends = [g.incidence[e] for e in g.edges]
    return len(ends) == len(set(ends))


def is_loopless(g: Graph) -> bool:
    return not g.loops


def in_category(g: Graph, c: Category | str) -> bool:
    c = Category.parse(c)
    if c.simple and not is_simple(g):
        return False
    if c.loopless and not is_loopless(g):
        return False
    return True


def components(g: Graph) -> list[frozenset[str]]:
    """Connected components as part sets, ordered by their smallest vertex."""
    ds = DisjointSet(g.vertices)
    for e in g.edges:
        a, b = g.incidence[e]
        ds.merge(a, b)
    groups: dict[str, set[str]] = defaultdict(set)
    for v in g.vertices:
        groups[ds[v]].add(v)
    for e in g.edges:
        groups[ds[g.incidence[e][0]]].add(e)
    comps = [frozenset(s) for s in groups.values()]
    return sorted(comps, key=lambda s: min(x for x in s if x in g.vertex_set))


# -- isomorphism -------------------------------------------------------------

def _multiplicities(g: Graph) -> Counter:
    return Counter(g.incidence[e] for e in g.edges)


def _signature(g: Graph, mult: Counter, v: str) -> tuple:
    loops = mult.get((v, v), 0)
    others = sorted(n for (a, b), n in mult.items() if a != b and v in (a, b))
    return (loops, tuple(others))


def find_isomorphism(g: Graph, h: Graph) -> dict[str, str] | None:
    """Part bijection g -> h preserving vertices and incidence, or None.

    Exhaustive backtracking over vertex bijections, pruned by a local
    signature (loop count and multiset of edge multiplicities); edges are
    then matched within each incidence class.
    """
    if (len(g.vertices), len(g.edges)) != (len(h.vertices), len(h.edges)):
        return None
    mg, mh = _multiplicities(g), _multiplicities(h)
    if sorted(mg.values()) != sorted(mh.values()):
        return None
    sig_g = {v: _signature(g, mg, v) for v in g.vertices}
    sig_h = {v: _signature(h, mh, v) for v in h.vertices}
    if sorted(sig_g.values()) != sorted(sig_h.values()):
        return None

    # most constrained vertices first, then grow along adjacency
    order: list[str] = []
    remaining = set(g.vertices)
    while remaining:
        start = max(sorted(remaining), key=lambda v: (len(sig_g[v][1]), sig_g[v]))
        stack = [start]
        while stack:
            v = stack.pop()
            if v not in remaining:
                continue
            remaining.discard(v)
            order.append(v)
            stack.extend(sorted(g.neighbours(v) & remaining, reverse=True))

    assign: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        for u, x in assign.items():
            if mg.get(pair(v, u), 0) != mh.get(pair(w, x), 0):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h.vertices:
            if w in used or sig_h[w] != sig_g[v] or not consistent(v, w):
                continue
            assign[v] = w
            used.add(w)
            if search(i + 1):
                return True
            del assign[v]
            used.discard(w)
        return False

    if not search(0):
        return None
    bijection = dict(assign)
    for pr in mg:
        target = pair(assign[pr[0]], assign[pr[1]])
        for e, f in zip(g.edges_between(*pr), h.edges_between(*target)):
            bijection[e] = f
    return bijection


def is_isomorphic(g: Graph, h: Graph):
    """Return ``(forward, inverse)`` isomorphism morphisms, or None."""
    from .morphisms import Morphism

    fwd = find_isomorphism(g, h)
    if fwd is None:
        return None
    inv = {b: a for a, b in fwd.items()}
    return Morphism(g, h, fwd), Morphism(h, g, inv)


def isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def dumps(obj, pretty: bool = False) -> str:
    return json.dumps(obj, sort_keys=True, indent=2 if pretty else None)
