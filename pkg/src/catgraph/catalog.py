"""Named graphs and exhaustive test batteries.

Grammar for :func:`standard_graph` (terms may be joined with ``+`` for a
disjoint union, whose parts are prefixed ``1:``, ``2:``, ...):

``empty``, ``K<n>``, ``K<n>^c``, ``K<n>^l``, ``K2^l1``, ``C<n>`` (n >= 3),
``P<n>`` (path on n vertices), ``par<k>`` (two vertices, k parallel edges),
``bouquet<k>`` (one vertex, k loops), ``Omega_Grphs``, ``Omega_StGrphs``,
``L5_A``, ``L5_B``, ``X4``.
"""
from __future__ import annotations

import functools
import itertools
import re

from .errors import BadParameter, UnknownName
from .graph import EMPTY, Category, Graph, in_category, pair

CATALOG_FORMS = (
    "empty", "K<n>", "K<n>^c", "K<n>^l", "K2^l1", "C<n>", "P<n>", "par<k>",
    "bouquet<k>", "Omega_Grphs", "Omega_StGrphs", "L5_A", "L5_B", "X4",
)


def complete(n: int, loops: bool = False, edges: bool = True, name: str | None = None) -> Graph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    inc: dict[str, tuple[str, str]] = {}
    if edges:
        for i, j in itertools.combinations(range(1, n + 1), 2):
            inc[f"e{i}_{j}"] = (f"v{i}", f"v{j}")
    if loops:
        for i in range(1, n + 1):
            inc[f"l{i}"] = (f"v{i}", f"v{i}")
    return Graph(vs + list(inc), vs, inc, name=name)


def cycle(n: int) -> Graph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    inc = {f"e{i}_{i % n + 1}": (f"v{i}", f"v{i % n + 1}") for i in range(1, n + 1)}
    return Graph(vs + list(inc), vs, inc, name=f"C{n}")


def path(n: int) -> Graph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    inc = {f"e{i}_{i + 1}": (f"v{i}", f"v{i + 1}") for i in range(1, n)}
    return Graph(vs + list(inc), vs, inc, name=f"P{n}")


def parallel(k: int) -> Graph:
    inc = {f"e{i}": ("v1", "v2") for i in range(1, k + 1)}
    return Graph(["v1", "v2", *inc], ["v1", "v2"], inc, name=f"par{k}")


def bouquet(k: int) -> Graph:
    inc = {f"l{i}": ("v", "v") for i in range(1, k + 1)}
    return Graph(["v", *inc], ["v"], inc, name=f"bouquet{k}")


def disjoint_union(graphs: list[Graph], name: str | None = None) -> Graph:
    parts, vertices, inc = [], [], {}
    for i, g in enumerate(graphs, 1):
        tag = f"{i}:"
        parts += [tag + p for p in g.parts]
        vertices += [tag + v for v in g.vertices]
        inc.update({tag + e: (tag + a, tag + b) for e, (a, b) in g.incidence.items()})
    return Graph(parts, vertices, inc, name=name)


_FIXED = {
    "omega_grphs": lambda: Graph(["T", "F", "l_T", "e_TF"], ["T", "F"],
                                 {"l_T": ("T", "T"), "e_TF": ("T", "F")}, name="Omega_Grphs"),
    "omega_stgrphs": lambda: Graph(
        ["T", "F", "l_true", "l_T", "l_F", "e_TF"], ["T", "F"],
        {"l_true": ("T", "T"), "l_T": ("T", "T"), "l_F": ("F", "F"), "e_TF": ("T", "F")},
        name="Omega_StGrphs"),
    "l5_a": lambda: Graph(["a1", "a2"], ["a1", "a2"], {}, name="L5_A"),
    "l5_b": lambda: Graph(["b1", "b2", "beta"], ["b1", "b2"], {"beta": ("b1", "b2")}, name="L5_B"),
    "x4": lambda: Graph(["x1", "x2", "loop", "edge"], ["x1", "x2"],
                        {"loop": ("x1", "x1"), "edge": ("x1", "x2")}, name="X4"),
    "k2^l1": lambda: Graph(["v1", "v2", "e1_2", "l1"], ["v1", "v2"],
                           {"e1_2": ("v1", "v2"), "l1": ("v1", "v1")}, name="K2^l1"),
    "empty": lambda: EMPTY,
}
_ALIASES = {"omega_g": "omega_grphs", "omega_stg": "omega_stgrphs", "0": "empty", "∅": "empty"}


def _single(term: str) -> Graph:
    raw = term.strip()
    key = raw.replace("ℓ", "l").lower()
    key = _ALIASES.get(key, key)
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"k(\d+)(\^(c|l))?", key)
    if m:
        n = int(m.group(1))
        kind = m.group(3)
        label = f"K{n}" + (f"^{kind}" if kind else "")
        return complete(n, loops=kind == "l", edges=kind != "c", name=label)
    m = re.fullmatch(r"(c|p|par|bouquet)(\d+)", key)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "c":
            if n < 3:
                raise BadParameter("cycles need n >= 3")
            return cycle(n)
        if kind == "p":
            if n < 1:
                raise BadParameter("paths need n >= 1")
            return path(n)
        return parallel(n) if kind == "par" else bouquet(n)
    raise UnknownName(f"unknown catalog graph {raw!r}; known forms: {', '.join(CATALOG_FORMS)}")


def standard_graph(name: str) -> Graph:
    """Look up a catalog graph by name (see module docstring for the grammar)."""
    terms = [t for t in name.split("+")]
    if any(not t.strip() for t in terms):
        raise BadParameter(f"malformed catalog name {name!r}")
    if len(terms) == 1:
        return _single(terms[0])
    return disjoint_union([_single(t) for t in terms], name=name)


# -- batteries -------------------------------------------------------------------

def _canonical_pairs(n: int, pairs: tuple[tuple[int, int], ...]) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(pair(perm[a], perm[b]) for a, b in pairs))
        if best is None or key < best:
            best = key
    return best


@functools.lru_cache(maxsize=None)
def _all_graphs(max_parts: int) -> tuple[Graph, ...]:
    out = [EMPTY]
    for nv in range(1, max_parts + 1):
        slots = list(itertools.combinations_with_replacement(range(nv), 2))
        for ne in range(0, max_parts - nv + 1):
            seen = set()
            for combo in itertools.combinations_with_replacement(slots, ne):
                canon = _canonical_pairs(nv, combo)
                if canon in seen:
                    continue
                seen.add(canon)
                vs = [f"v{i + 1}" for i in range(nv)]
                inc = {f"e{k + 1}": (vs[a], vs[b]) for k, (a, b) in enumerate(canon)}
                label = f"V{nv}[" + ",".join(f"{a + 1}{b + 1}" for a, b in canon) + "]"
                out.append(Graph(vs + list(inc), vs, inc, name=label))
    return tuple(out)


def battery(max_parts: int = 4, c: Category | str | None = None) -> list[Graph]:
    """Every graph with at most ``max_parts`` parts, one per isomorphism class.

    Optionally restricted to objects of category ``c``.
    """
    if max_parts < 0:
        raise BadParameter("max_parts must be non-negative")
    graphs = _all_graphs(max_parts)
    if c is None:
        return list(graphs)
    c = Category.parse(c)
    return [g for g in graphs if in_category(g, c)]
