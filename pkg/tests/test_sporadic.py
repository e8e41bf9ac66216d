"""Bundled sporadic group data and the word tables that run on it.

The .grp files are regenerated by scripts/build_sporadic_fixtures.py,
which proves each order against the published value before writing.
These tests re-prove the orders from the shipped files alone, so a
corrupted or hand-edited data file cannot slip through.
"""

import os

import pytest

from beauville.catalog import SPORADIC, data_dir, run_row, sporadic_rows
from beauville.errors import MissingData
from beauville.groupfile import load_group_file, resolve_group_spec
from beauville.triples import is_mixable, triple_type
from beauville.words import evaluate

ORDERS = {
    "m11": (11, 7_920),
    "m12": (12, 95_040),
    "m22": (22, 443_520),
    "m23": (23, 10_200_960),
    "m24": (24, 244_823_040),
}

BUNDLED = sorted(ORDERS)


def load(name):
    return load_group_file(os.path.join(data_dir(), SPORADIC[name].file))


class TestFixtures:
    @pytest.mark.parametrize("name", BUNDLED)
    def test_degree_and_order(self, name):
        degree, order = ORDERS[name]
        g = load(name)
        assert g.degree == degree
        assert g.order() == order
        assert g.gen_names == ("a", "b")

    @pytest.mark.parametrize("name", BUNDLED)
    def test_generator_signature(self, name):
        g = load(name)
        a, b = g.generators
        oa, ob, oab = SPORADIC[name].signature
        assert (a.order(), b.order(), (a * b).order()) == (oa, ob, oab)

    @pytest.mark.parametrize("name", BUNDLED)
    def test_words_realize_published_types(self, name):
        g = load(name)
        entry = SPORADIC[name]
        env = {"a": g.generators[0], "b": g.generators[1]}
        x1, y1, x2, y2 = (evaluate(w, env) for w in entry.words)
        assert triple_type(x1, y1).as_tuple() == entry.type6[0]
        assert triple_type(x2, y2).as_tuple() == entry.type6[1]

    @pytest.mark.parametrize("name", BUNDLED)
    def test_quadruple_is_mixable(self, name):
        g = load(name)
        entry = SPORADIC[name]
        env = {"a": g.generators[0], "b": g.generators[1]}
        quad = tuple(evaluate(w, env) for w in entry.words)
        outcome = is_mixable(g, *quad)
        assert outcome.ok, outcome.violations


class TestSquaredRows:
    @pytest.mark.parametrize(
        "name", [n for n in BUNDLED if SPORADIC[n].squared is not None]
    )
    def test_lifted_row_passes(self, name):
        row = {r.tag: r for r in sporadic_rows()}[f"{name}-squared"]
        result = run_row(row)
        assert result.verdict == "pass", result.detail
        assert result.structure.group.degree == 2 * ORDERS[name][0]

    def test_j2_has_no_squared_row(self):
        assert SPORADIC["j2"].squared is None


class TestAbsentData:
    @pytest.mark.parametrize("name", ["j2", "hs"])
    def test_not_bundled(self, name):
        assert not os.path.exists(os.path.join(data_dir(), SPORADIC[name].file))
        with pytest.raises(MissingData):
            resolve_group_spec(SPORADIC[name].file, data_dir=data_dir())
