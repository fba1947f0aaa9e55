"""Unit tests for graph6 and edge-list interchange."""

import pytest

from cyclepack.exceptions import GraphFormatError
from cyclepack.families import complete_graph, petersen_graph
from cyclepack.graph import Graph
from cyclepack.graph6 import (
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph6_lines,
)


class TestParseGraph6:
    """Test graph6 decoding."""

    def test_triangle(self):
        """Test 'Bw' is K₃."""
        graph = parse_graph6("Bw")
        assert graph.n == 3
        assert graph.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_header_and_whitespace_accepted(self):
        """Test the optional header and surrounding whitespace are ignored."""
        assert parse_graph6("  >>graph6<<Bw\n") == complete_graph(3)

    def test_petersen_round_trip(self):
        """Test parse(emit(Petersen)) reproduces the adjacency."""
        assert parse_graph6(emit_graph6(petersen_graph())) == petersen_graph()

    def test_empty_string(self):
        """Test an empty line is rejected."""
        with pytest.raises(GraphFormatError, match="Empty"):
            parse_graph6("   ")

    def test_header_only(self):
        """Test a bare header is rejected."""
        with pytest.raises(GraphFormatError, match="Empty"):
            parse_graph6(">>graph6<<")

    def test_sparse6_rejected(self):
        """Test sparse6 input is refused with a clear message."""
        with pytest.raises(GraphFormatError, match="sparse6"):
            parse_graph6(":Bw")

    def test_character_out_of_range(self):
        """Test characters below '?' are reported with their position."""
        with pytest.raises(GraphFormatError) as exc_info:
            parse_graph6("B w")
        assert exc_info.value.position == 1

    def test_truncated_payload(self):
        """Test a missing bit payload is reported."""
        with pytest.raises(GraphFormatError, match="payload"):
            parse_graph6("C")

    def test_truncated_size_header(self):
        """Test a long-form size marker without its bytes is reported."""
        with pytest.raises(GraphFormatError, match="size header"):
            parse_graph6("~")


class TestEmitGraph6:
    """Test graph6 encoding."""

    def test_two_isolated_vertices(self):
        """Test emit(K̄₂) is 'A?'."""
        assert emit_graph6(Graph(2)) == "A?"

    def test_complete_graphs(self):
        """Test K₃ and K₄ encodings."""
        assert emit_graph6(complete_graph(3)) == "Bw"
        assert emit_graph6(complete_graph(4)) == "C~"

    def test_no_newline_or_header(self):
        """Test output is a bare graph6 string."""
        text = emit_graph6(petersen_graph())
        assert "\n" not in text
        assert not text.startswith(">>")


class TestEdgeLists:
    """Test edge-list decoding and encoding."""

    def test_parse_skips_comments_and_blanks(self):
        """Test comments and blank lines are ignored."""
        graph = parse_edge_list("# triangle\n0 1\n\n1 2\n2 0\n")
        assert graph == complete_graph(3)

    def test_explicit_vertex_count(self):
        """Test n adds isolated vertices."""
        graph = parse_edge_list("0 1\n", n=4)
        assert graph.n == 4
        assert graph.edge_count == 1

    def test_bad_line(self):
        """Test a non-numeric line is reported with its line number."""
        with pytest.raises(GraphFormatError) as exc_info:
            parse_edge_list("0 1\n0 x\n")
        assert exc_info.value.position == 2

    def test_self_loop(self):
        """Test loops are rejected."""
        with pytest.raises(GraphFormatError, match="Self loop"):
            parse_edge_list("1 1\n")

    def test_vertex_beyond_n(self):
        """Test an index not below n is rejected."""
        with pytest.raises(GraphFormatError, match="out of range"):
            parse_edge_list("0 2\n", n=2)

    def test_emit(self):
        """Test one 'u v' line per edge."""
        assert emit_edge_list(complete_graph(3)) == "0 1\n0 2\n1 2\n"


class TestReadGraph6Lines:
    """Test stream decoding."""

    def test_skips_blank_and_comment_lines(self):
        """Test only graph lines are yielded, in order."""
        decoded = list(read_graph6_lines(["Bw\n", "# comment\n", "\n", "A?\n"]))
        assert [line for line, _ in decoded] == ["Bw", "A?"]
        assert decoded[1][1] == Graph(2)

    def test_error_names_line_number(self):
        """Test a malformed line reports its position in the stream."""
        with pytest.raises(GraphFormatError, match="Line 2") as exc_info:
            list(read_graph6_lines(["Bw\n", "B w\n"]))
        assert exc_info.value.position == 2
