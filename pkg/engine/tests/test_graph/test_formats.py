"""Tests for DIMACS and edge-list readers, the writer, and file loading."""

from pathlib import Path

import pytest

from engine.config.schema import GraphFormat, WeightScheme
from engine.graph.dimacs import GraphFormatError, parse_dimacs, write_dimacs
from engine.graph.edgelist import parse_edge_list
from engine.graph.generators import gen_er
from engine.graph.loader import load_graph, save_graph


class TestParseDimacs:
    def test_basic(self):
        g = parse_dimacs(b"p edge 3 2\ne 1 2\ne 2 3")
        assert g.n == 3
        assert list(g.edges()) == [(0, 1), (1, 2)]
        assert g.weights == (1, 1, 1)

    def test_duplicate_edge_lines_collapse(self):
        g = parse_dimacs(b"p edge 2 1\ne 1 2\ne 2 1")
        assert g.n == 2
        assert list(g.edges()) == [(0, 1)]

    def test_no_edges(self):
        g = parse_dimacs(b"p edge 1 0")
        assert g.n == 1
        assert g.edge_count == 0

    def test_comments_and_blank_lines(self):
        g = parse_dimacs("c hello\n\np edge 2 1\nc mid\ne 1 2\n")
        assert g.edge_count == 1

    def test_missing_p_line(self):
        with pytest.raises(GraphFormatError, match="missing 'p' line"):
            parse_dimacs(b"c only comments\n")

    def test_duplicate_p_line(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_dimacs(b"p edge 2 1\np edge 2 1\n")
        assert exc.value.line == 2

    def test_unsupported_problem_type(self):
        with pytest.raises(GraphFormatError, match="unsupported problem type 'sp'") as exc:
            parse_dimacs(b"c shortest path\np sp 3 2\na 1 2 5\n")
        assert exc.value.line == 2

    def test_col_problem_type_accepted(self):
        g = parse_dimacs(b"p col 3 2\ne 1 2\ne 2 3\n")
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_vertex_out_of_range(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_dimacs(b"p edge 2 1\ne 1 3\n")
        assert exc.value.line == 2
        assert "out of range" in str(exc.value)

    def test_zero_id_out_of_range(self):
        with pytest.raises(GraphFormatError, match="out of range"):
            parse_dimacs(b"p edge 2 1\ne 0 1\n")

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop") as exc:
            parse_dimacs(b"p edge 3 1\nc\ne 2 2\n")
        assert exc.value.line == 3

    def test_non_integer(self):
        with pytest.raises(GraphFormatError, match="integer") as exc:
            parse_dimacs(b"p edge 3 1\ne 1 x\n")
        assert exc.value.line == 2

    def test_edge_before_p(self):
        with pytest.raises(GraphFormatError, match="before"):
            parse_dimacs(b"e 1 2\np edge 2 1\n")

    def test_format_error_is_value_error(self):
        with pytest.raises(ValueError):
            parse_dimacs(b"")


class TestParseEdgeList:
    def test_zero_based(self):
        g = parse_edge_list(b"0 1\n1 2")
        assert g.n == 3
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_one_based_detected(self):
        g = parse_edge_list(b"1 2")
        assert g.n == 2
        assert list(g.edges()) == [(0, 1)]

    def test_empty(self):
        assert parse_edge_list(b"").n == 0

    def test_comments(self):
        g = parse_edge_list("# header\n% also\n0 1\n")
        assert g.edge_count == 1

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_edge_list(b"0 1\n2 2\n")

    def test_non_integer(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_edge_list(b"0 1\na b\n")
        assert exc.value.line == 2


class TestWriteDimacs:
    def test_output(self, path4):
        assert write_dimacs(path4) == b"p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"

    def test_reparse_preserves_structure(self):
        g = gen_er(25, 0.2, seed=3)
        assert parse_dimacs(write_dimacs(g)).same_structure(g)


class TestLoadGraph:
    def test_petersen(self, petersen_path: Path):
        g = load_graph(petersen_path)
        assert g.n == 10
        assert g.edge_count == 15
        assert g.degrees() == [3] * 10
        assert g.name == "petersen"

    def test_weights_applied(self, petersen_path: Path):
        g = load_graph(petersen_path, weights=WeightScheme.MOD200)
        assert g.weights == tuple(range(1, 11))

    def test_edgelist_file(self, tmp_path: Path):
        path = tmp_path / "tiny.txt"
        path.write_text("1 2\n2 3\n")
        g = load_graph(path, GraphFormat.EDGELIST)
        assert g.n == 3

    def test_save_then_load(self, tmp_path: Path, square):
        path = save_graph(square, tmp_path / "out" / "square.clq")
        assert load_graph(path).same_structure(square)

    def test_explicit_name_overrides_stem(self, petersen_path: Path):
        assert load_graph(petersen_path, name="pet").name == "pet"
        assert load_graph(petersen_path, name=None).name == "petersen"

    def test_missing_file(self, tmp_path: Path):
        with pytest.raises(OSError):
            load_graph(tmp_path / "nope.clq")
