from __future__ import annotations

from pathlib import Path

import pytest

from catgraph.graph import Category
from catgraph.tables import (AXIOM_ROWS, COLUMNS, PROPERTY_ROWS, axiom_table, diff_tables,
                             parse_rendered, properties_table)

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def axioms():
    return axiom_table()


@pytest.fixture(scope="module")
def props():
    return properties_table()


def test_properties_table_matches_reference(props):
    assert diff_tables(props, (GOLDEN / "properties_table.txt").read_text()) == []


def test_axiom_table_matches_outside_simple_graphs(axioms):
    diffs = diff_tables(axioms, (GOLDEN / "axiom_table.txt").read_text())
    assert all(col == "SiG" for _, col, _, _ in diffs)


def test_simple_graph_deviations_are_backed_by_failed_checks(axioms):
    diffs = diff_tables(axioms, (GOLDEN / "axiom_table.txt").read_text())
    assert sorted(r for r, *_ in diffs) == ["Coequalizer", "Colimits", "L1 Limits", "Product"]
    assert all(got == "N" and want == "Y" for _, _, got, want in diffs)
    assert "|hom(T, P)| = 2" in axioms.notes[("Product", Category.SiG)]
    assert "2 maps out of the quotient vs 8" in axioms.notes[("Coequalizer", Category.SiG)]


def test_natural_numbers_row_is_marked(axioms):
    assert "L4 Natural numbers" in axioms.asserted
    assert "* asserted" in axioms.render()


def test_render_round_trip(axioms, props):
    for t, rows in ((axioms, AXIOM_ROWS), (props, PROPERTY_ROWS)):
        cells = parse_rendered(t.render())
        assert len(cells) == len(rows) * len(COLUMNS)
        d = t.to_dict()
        assert list(d["rows"]) == list(rows)
