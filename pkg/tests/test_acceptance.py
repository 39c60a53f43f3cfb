"""Acceptance criteria.  Each test records one PASS/FAIL line in RESULTS,
which conftest prints at the end of the run."""
from __future__ import annotations

from pathlib import Path

from catgraph.catalog import battery, standard_graph as S
from catgraph.graph import ALL_CATEGORIES, Category, isomorphic
from catgraph.limits import (coequalizer, coequalizer_obstruction, product, terminal,
                             terminal_obstruction, verify_ump)
from catgraph.morphisms import (Morphism, classify_epi, classify_mono, count_homs,
                                enumerate_homs, identity, iter_homs)
from catgraph.oracles import (brute_cogenerator, brute_generator, brute_homs, brute_injective,
                              brute_is_epi, brute_is_mono, brute_projective)
from catgraph.special import is_cogenerator, is_generator, is_injective, is_projective
from catgraph.tables import axiom_table, diff_tables, properties_table
from catgraph.topos import (check_choice, check_two_valued, classifier_check,
                            classifier_obstruction, exponential, l5_instance,
                            refute_exponentiation, verify_exponential)

RESULTS: dict[int, str] = {}
GOLDEN = Path(__file__).parent / "golden"
K2 = S("K2")


def record(n: int, title: str, problems: list[str]) -> None:
    status = "PASS" if not problems else "FAIL"
    line = f"criterion {n:2d} [{status}] {title}"
    if problems:
        line += ": " + "; ".join(problems)
    RESULTS[n] = line
    assert not problems, line


def test_criterion_01_grphs_exponential_counts():
    k1l = S("K1^l")
    problems = []
    if count_homs(K2, k1l, "G") != 2:
        problems.append("hom(K2, K1^l) != 2")
    for x, want in (("K1^l", 16), ("K2", 64), ("X4", 512)):
        P = product(S(x), K2, "G").apex
        got = len(enumerate_homs(P, k1l, "G"))
        if got != want:
            problems.append(f"hom({x} x K2, K1^l) = {got}, want {want}")
    r = refute_exponentiation("G")
    d = r.data
    if not r.passed or d["vertices"] != 2 or d["edges"] != 24 or d["loop_split"] != (7, 7):
        problems.append(f"profile {d.get('vertices')}, {d.get('edges')}, {d.get('loop_split')}")
    if d.get("solutions") != [(7, 7)]:
        problems.append(f"loop split solutions {d.get('solutions')}")
    record(1, "Grphs exponential counts 2, 16, 64, 512 and profile (2, 24, (7, 7))", problems)


def test_criterion_02_product_isomorphisms():
    problems = []
    for c, a, b, want in (("G", "K2", "K2", "K4"), ("StG", "K3", "K2", "C6"),
                          ("StG", "K2", "K2", "K2+K2")):
        if not isomorphic(product(S(a), S(b), c).apex, S(want)):
            problems.append(f"{a} x {b} in {c} is not {want}")
    record(2, "product isomorphisms K4, C6, K2+K2", problems)


def test_criterion_03_simple_graph_exponential_refutation():
    problems = []
    r = refute_exponentiation("SiG")
    if not r.passed or r.data["final"] != (8, 4):
        problems.append(f"final counts {r.data.get('final')}")
    per = r.data["per_graph"]
    if len(per) != 8 or max(per.values()) != 4:
        problems.append(f"two-vertex simple graphs: {per}")
    record(3, "SiG exponential refutation, 8 maps vs at most 4 over all 2-vertex graphs", problems)


def test_criterion_04_strict_refutations():
    problems = []
    st_ = refute_exponentiation("StG")
    if not st_.passed or st_.data["counts"] != [1, 4, 16] or st_.data["final"] != (16, 4):
        problems.append(f"StG counts {st_.data.get('counts')} final {st_.data.get('final')}")
    if terminal("SiLlStG") is not None or not terminal_obstruction("SiLlStG").passed:
        problems.append("SiLlStG terminal obstruction")
    twist = Morphism(K2, K2, {"v1": "v2", "v2": "v1", "e1_2": "e1_2"})
    if coequalizer(identity(K2), twist, "SiLlStG") is not None:
        problems.append("SiLlStG coequalizer of id and twist was built")
    ob = coequalizer_obstruction(identity(K2), twist, "SiLlStG")
    if not ob.passed or ob.witness.get("edge_class") != ["e1_2"]:
        problems.append("loop witness missing")
    if count_homs(S("C6"), K2, "SiLlStG") != 2:
        problems.append("hom(C6, K2) != 2")
    if not refute_exponentiation("SiLlStG").passed:
        problems.append("SiLlStG exponential refutation")
    record(4, "StG counts 1, 4, 16 vs 4; SiLlStG terminal, coequalizer and hom(C6, K2) = 2",
           problems)


def test_criterion_05_classifier_soundness():
    problems = []
    checked = 0
    for c in (Category.G, Category.SiG, Category.StG):
        bat = battery(4, c)
        for X in bat:
            for A in bat:
                for m in iter_homs(A, X, c):
                    if not classify_mono(m, c).passed:
                        continue
                    checked += 1
                    r = classifier_check(m, c)
                    if not r.passed:
                        problems.append(f"{c}: {A.name} -> {X.name}: {r.message}")
    for c, big in ((Category.SiStG, "K2^l"), (Category.SiLlG, "K2")):
        r = classifier_obstruction(c)
        pb, sub = r.witness["pullback"], r.witness["subobject"]
        if not r.passed or not isomorphic(pb, S(big)) or isomorphic(pb, sub):
            problems.append(f"{c} pullback counterexample")
    record(5, f"classifier soundness on {checked} monos; SiStG and SiLlG counterexamples", problems)


def test_criterion_06_exponential_adjunction():
    problems = []
    triples = 0
    for c in (Category.SiLlG, Category.SiStG):
        bat = battery(4, c)
        for G in bat:
            for H in bat:
                triples += len(bat)
                r = verify_exponential(exponential(G, H, c), bat)
                if not r.passed:
                    problems.append(f"{c}: {G.name}, {H.name}: {r.message}")
    record(6, f"exponential adjunction, every g transposed, on {triples} triples", problems)


def test_criterion_07_choice_and_two_valued():
    problems = []
    for c in ALL_CATEGORIES:
        if check_choice(l5_instance(), c) is not None:
            problems.append(f"choice instance has a section in {c}")
    for c, n in (("G", 4), ("StG", 6)):
        r = check_two_valued(c)
        if r.passed or len(r.data["omega"]["parts"]) != n:
            problems.append(f"two-valued check in {c}")
    record(7, "choice fails in all six categories; two-valued fails in G and StG", problems)


def _coequalizer_divergence(target: str) -> list[str]:
    t = S(target)
    f = Morphism(K2, t, {"v1": "v1", "v2": "v2", "e1_2": "e1_2"})
    g = Morphism(K2, t, {"v1": "v2", "v2": "v1", "e1_2": "e1_2"})
    out = []
    q = coequalizer(f, g, "G")
    if len(q.apex.vertices) != 1 or len(q.apex.loops) != 2:
        out.append(f"{target}: G quotient has {len(q.apex.loops)} loops, want 2")
    if not verify_ump("coequalizer", q, battery(4, "G"), "G", f, g).passed:
        out.append(f"{target}: G quotient fails UMP")
    qs = coequalizer(f, g, "SiG")
    if not isomorphic(qs.apex, S("K1^l")):
        out.append(f"{target}: SiG quotient is not K1^l")
    r = verify_ump("coequalizer", qs, battery(4, "SiG"), "SiG", f, g)
    if not r.passed:
        out.append(f"{target}: SiG quotient fails UMP ({r.message})")
    return out


def test_criterion_08_coequalizer_divergence():
    # the parallel pair is read both as landing in two looped vertices and in
    # one looped vertex; the criterion passes if either reading satisfies it
    readings = {t: _coequalizer_divergence(t) for t in ("K2^l", "K2^l1")}
    ok = [t for t, p in readings.items() if not p]
    problems = [] if ok else [p for ps in readings.values() for p in ps]
    record(8, "swap coequalizer: two loops in G, K1^l in SiG, both universal", problems)


def test_criterion_09_tables():
    problems = []
    axioms = axiom_table()
    for row, col, got, want in diff_tables(axioms, (GOLDEN / "axiom_table.txt").read_text()):
        problems.append(f"axioms {row}/{col}: computed {got}, reference {want}")
    if "L4 Natural numbers" not in axioms.asserted:
        problems.append("natural numbers row not flagged")
    props = properties_table()
    for row, col, got, want in diff_tables(props, (GOLDEN / "properties_table.txt").read_text()):
        problems.append(f"properties {row}/{col}: computed {got}, reference {want}")
    record(9, "axiom and special-object tables match the reference grids", problems)


def test_criterion_10_oracle_equivalence():
    problems = []
    for c in ALL_CATEGORIES:
        bat = battery(4, c)
        for A in bat:
            for B in bat:
                fast = list(iter_homs(A, B, c))
                rows = sorted(tuple(f(p) for p in A.parts) for f in fast)
                if rows != list(brute_homs(A, B, c)):
                    problems.append(f"{c}: hom({A.name}, {B.name})")
                for f, row in zip(fast, (tuple(f(p) for p in A.parts) for f in fast)):
                    if classify_epi(f, c).passed != brute_is_epi(row, A, B, c):
                        problems.append(f"{c}: epi verdict on {f}")
                    if classify_mono(f, c).passed != brute_is_mono(row, A, B, c):
                        problems.append(f"{c}: mono verdict on {f}")
        for g in bat:
            checks = ((is_projective, brute_projective), (is_injective, brute_injective),
                      (is_generator, brute_generator), (is_cogenerator, brute_cogenerator))
            for fast, brute in checks:
                if fast(g, c).verdict != brute(g, c):
                    problems.append(f"{c}: {fast.__name__} on {g.name}")
    record(10, "fast paths agree with brute-force oracles on all graphs with at most 4 parts",
           problems)
