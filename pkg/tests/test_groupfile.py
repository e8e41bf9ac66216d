"""Group-data files and textual group specs."""

import os

import pytest

from beauville.errors import DegreeMismatch, MissingData, ParseError
from beauville.groupfile import (
    load_group_file,
    resolve_group_spec,
    save_group_file,
)
from beauville.groups import symmetric_group


def write(tmp_path, text, name="g.grp"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestLoad:
    def test_basic_file(self, tmp_path):
        path = write(
            tmp_path,
            "# a comment\n"
            "degree 11\n"
            "gen a = (1,2,3,4,5,6,7,8,9,10,11)\n"
            "gen b = (3,7,11,8)(4,10,5,6)  # trailing comment\n",
        )
        g = load_group_file(path)
        assert g.degree == 11
        assert g.order() == 7920
        assert g.gen_names == ("a", "b")
        assert g.name == "g"

    def test_blank_lines_ignored(self, tmp_path):
        path = write(tmp_path, "\ndegree 3\n\ngen a = (1,2,3)\n\n")
        assert load_group_file(path).order() == 3

    def test_identity_generator(self, tmp_path):
        path = write(tmp_path, "degree 4\ngen a = ()\ngen b = (1,2)(3,4)\n")
        assert load_group_file(path).order() == 2

    def test_generator_before_degree(self, tmp_path):
        path = write(tmp_path, "gen a = (1,2)\ndegree 2\n")
        with pytest.raises(ParseError, match="line 1.*degree"):
            load_group_file(path)

    def test_malformed_gen_line(self, tmp_path):
        path = write(tmp_path, "degree 3\ngen a (1,2,3)\n")
        with pytest.raises(ParseError, match="line 2"):
            load_group_file(path)

    def test_duplicate_name(self, tmp_path):
        path = write(tmp_path, "degree 3\ngen a = (1,2)\ngen a = (2,3)\n")
        with pytest.raises(ParseError, match="line 3.*duplicate"):
            load_group_file(path)

    def test_point_past_degree(self, tmp_path):
        path = write(tmp_path, "degree 5\ngen a = (1,2)\ngen b = (4,6)\n")
        with pytest.raises(DegreeMismatch, match="line 3"):
            load_group_file(path)

    def test_empty_file(self, tmp_path):
        path = write(tmp_path, "# nothing but comments\n")
        with pytest.raises(ParseError, match="degree"):
            load_group_file(path)

    def test_degree_without_generators(self, tmp_path):
        path = write(tmp_path, "degree 9\n")
        with pytest.raises(ParseError, match="no generators"):
            load_group_file(path)

    def test_bad_cycle_syntax_keeps_line_number(self, tmp_path):
        path = write(tmp_path, "degree 4\ngen a = (1,2\n")
        with pytest.raises(ParseError, match="line 2"):
            load_group_file(path)


class TestSaveRoundTrip:
    def test_round_trip(self, tmp_path):
        g = symmetric_group(5)
        path = str(tmp_path / "s5.grp")
        save_group_file(path, g, comment="symmetric on 5 points")
        back = load_group_file(path)
        assert back.degree == g.degree
        assert back.order() == g.order()
        assert back.gen_names == g.gen_names
        assert [tuple(p) for p in back.generators] == [
            tuple(p) for p in g.generators
        ]

    def test_comment_lands_in_file(self, tmp_path):
        path = str(tmp_path / "c.grp")
        save_group_file(path, symmetric_group(3), comment="two\nlines")
        text = open(path).read()
        assert text.startswith("# two\n# lines\n")

    def test_unnamed_generators_refused(self, tmp_path):
        from beauville.bsgs import build_bsgs
        from beauville.perm import parse_cycles

        g = build_bsgs([parse_cycles("(1,2,3)", 3)], degree=3)
        with pytest.raises(ValueError):
            save_group_file(str(tmp_path / "x.grp"), g)


class TestResolveSpec:
    @pytest.mark.parametrize(
        "spec,order,degree",
        [
            ("alt:6", 360, 6),
            ("sym:4", 24, 4),
            ("psl2:7", 168, 8),
            ("dihedral:5", 10, 5),
            ("cyclic:12", 12, 12),
            ("dicyclic:2", 8, 8),
        ],
    )
    def test_family_tags(self, spec, order, degree):
        g = resolve_group_spec(spec)
        assert g.order() == order
        assert g.degree == degree

    def test_product_prefix(self):
        g = resolve_group_spec("product:alt:5")
        assert g.order() == 60 * 60
        assert g.degree == 10

    def test_nested_product(self):
        g = resolve_group_spec("product:product:cyclic:3")
        assert g.order() == 81
        assert g.degree == 12

    def test_non_integer_parameter(self):
        with pytest.raises(ParseError, match="integer"):
            resolve_group_spec("alt:x")

    def test_missing_parameter(self):
        with pytest.raises(ParseError):
            resolve_group_spec("psl2:")

    def test_direct_path(self, tmp_path):
        path = write(tmp_path, "degree 3\ngen a = (1,2,3)\n")
        assert resolve_group_spec(path).order() == 3

    def test_data_dir_fallback(self, tmp_path):
        write(tmp_path, "degree 4\ngen r = (1,2,3,4)\n", name="c4.grp")
        g = resolve_group_spec("c4.grp", data_dir=str(tmp_path))
        assert g.order() == 4
        assert g.gen_names == ("r",)

    def test_bundled_data(self):
        from beauville.catalog import data_dir

        g = resolve_group_spec("m11.grp", data_dir=data_dir())
        assert g.order() == 7920

    def test_unknown_spec_is_missing_data(self):
        with pytest.raises(MissingData):
            resolve_group_spec("no-such-group.grp")

    def test_whitespace_tolerated(self):
        assert resolve_group_spec("  alt:6  ").order() == 360
