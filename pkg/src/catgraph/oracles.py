"""Brute-force reference implementations used to cross-check the fast paths.

Nothing here touches the search code in :mod:`catgraph.morphisms`; maps are
plain tuples of images aligned with ``dom.parts``.
"""
from __future__ import annotations

import functools
import itertools

from .catalog import battery as make_battery
from .graph import Category, Graph

Map = tuple  # images aligned with dom.parts


def _ends(g: Graph, p: str) -> frozenset:
    if g.is_vertex(p):
        return frozenset((p,))
    return frozenset(g.incidence[p])


def _object_ok(g: Graph, c: Category) -> bool:
    if c.simple:
        seen = set()
        for e in g.edges:
            k = _ends(g, e)
            if k in seen:
                return False
            seen.add(k)
    if c.loopless and any(len(_ends(g, e)) == 1 for e in g.edges):
        return False
    return True


@functools.lru_cache(maxsize=None)
def raw_homs(A: Graph, B: Graph, c: Category) -> tuple[Map, ...]:
    """Every part map ``P(A) -> P(B)`` that is a morphism of ``c``."""
    out = []
    index = {p: i for i, p in enumerate(A.parts)}
    for images in itertools.product(B.parts, repeat=len(A.parts)):
        ok = True
        for p, q in zip(A.parts, images):
            if A.is_vertex(p):
                if not B.is_vertex(q):
                    ok = False
                    break
                continue
            if c.strict and B.is_vertex(q):
                ok = False
                break
            ends = frozenset(images[index[x]] for x in A.incidence[p])
            if _ends(B, q) != ends:
                ok = False
                break
        if ok:
            out.append(tuple(images))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def brute_homs(A: Graph, B: Graph, c: Category) -> tuple[Map, ...]:
    """Same set as :func:`raw_homs`: every vertex function, then every choice
    of compatible image for each edge independently."""
    vpos = [i for i, p in enumerate(A.parts) if A.is_vertex(p)]
    epos = [i for i, p in enumerate(A.parts) if not A.is_vertex(p)]
    out = []
    for vimg in itertools.product(B.vertices, repeat=len(vpos)):
        at = dict(zip((A.parts[i] for i in vpos), vimg))
        choices = []
        for i in epos:
            ends = frozenset(at[x] for x in A.incidence[A.parts[i]])
            choices.append([q for q in B.parts
                            if _ends(B, q) == ends and not (c.strict and B.is_vertex(q))])
        for eimg in itertools.product(*choices):
            row = [None] * len(A.parts)
            for i, q in zip(vpos, vimg):
                row[i] = q
            for i, q in zip(epos, eimg):
                row[i] = q
            out.append(tuple(row))
    return tuple(sorted(out))


def compose_maps(g: Map, f: Map, mid: Graph) -> Map:
    """``g . f`` where ``f`` lands in ``mid``."""
    index = {p: i for i, p in enumerate(mid.parts)}
    return tuple(g[index[q]] for q in f)


@functools.lru_cache(maxsize=None)
def _bat(max_parts: int, c: Category) -> tuple[Graph, ...]:
    return tuple(make_battery(max_parts, c))


def brute_is_epi(f: Map, A: Graph, B: Graph, c: Category, max_parts: int = 6) -> bool:
    for C in _bat(max_parts, c):
        seen = {}
        for g in brute_homs(B, C, c):
            k = compose_maps(g, f, B)
            if k in seen and seen[k] != g:
                return False
            seen[k] = g
    return True


def brute_is_mono(f: Map, A: Graph, B: Graph, c: Category, max_parts: int = 6) -> bool:
    for Z in _bat(max_parts, c):
        seen = {}
        for g in brute_homs(Z, A, c):
            k = compose_maps(f, g, A)
            if k in seen and seen[k] != g:
                return False
            seen[k] = g
    return True


@functools.lru_cache(maxsize=None)
def battery_epis(c: Category, max_parts: int, test_parts: int) -> tuple:
    out = []
    for B in _bat(max_parts, c):
        for C in _bat(max_parts, c):
            for h in brute_homs(B, C, c):
                if brute_is_epi(h, B, C, c, test_parts):
                    out.append((B, C, h))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def battery_monos(c: Category, max_parts: int, test_parts: int) -> tuple:
    out = []
    for A in _bat(max_parts, c):
        for B in _bat(max_parts, c):
            for m in brute_homs(A, B, c):
                if brute_is_mono(m, A, B, c, test_parts):
                    out.append((A, B, m))
    return tuple(out)


def brute_projective(P: Graph, c: Category, max_parts: int = 3, test_parts: int = 5,
                     cover_parts: int = 6) -> bool:
    """Lifting against small battery epis, plus lifting the identity of ``P``
    through every battery epi onto ``P`` with at most ``cover_parts`` parts."""
    for B, C, h in battery_epis(c, max_parts, test_parts):
        reach = {compose_maps(h, k, B) for k in brute_homs(P, B, c)}
        if any(f not in reach for f in brute_homs(P, C, c)):
            return False
    ident = tuple(P.parts)
    for B in _bat(cover_parts, c):
        for h in brute_homs(B, P, c):
            if not brute_is_epi(h, B, P, c, test_parts):
                continue
            if not any(compose_maps(h, k, B) == ident for k in brute_homs(P, B, c)):
                return False
    return True


def brute_injective(I: Graph, c: Category, max_parts: int = 3, test_parts: int = 5) -> bool:
    for A, B, m in battery_monos(c, max_parts, test_parts):
        reach = {compose_maps(k, m, B) for k in brute_homs(B, I, c)}
        if any(f not in reach for f in brute_homs(A, I, c)):
            return False
    return True


def brute_generator(S: Graph, c: Category, dom_parts: int = 4, cod_parts: int = 4) -> bool:
    """Every parallel pair ``A -> B`` is told apart by some probe ``S -> A``."""
    for A in _bat(dom_parts, c):
        probes = brute_homs(S, A, c)
        for B in _bat(cod_parts, c):
            homs = brute_homs(A, B, c)
            # f and h are separated iff their restrictions along some probe differ
            sig = {}
            for f in homs:
                key = tuple(compose_maps(f, t, A) for t in probes)
                if key in sig:
                    return False
                sig[key] = f
    return True


def brute_cogenerator(S: Graph, c: Category, dom_parts: int = 3, cod_parts: int = 6) -> bool:
    """Every parallel pair ``A -> B`` is told apart by some probe ``B -> S``."""
    for B in _bat(cod_parts, c):
        probes = brute_homs(B, S, c)
        for A in _bat(dom_parts, c):
            sig = {}
            for f in brute_homs(A, B, c):
                key = tuple(compose_maps(t, f, B) for t in probes)
                if key in sig:
                    return False
                sig[key] = f
    return True
