import random

import pytest

from clustercolor import Graph, Layering, PaceParseError, TreeDecomposition
from clustercolor.pace import (
    graph_to_pace,
    layering_to_text,
    pace_to_graph,
    pace_to_td,
    read_graph,
    read_layering,
    read_td,
    td_to_pace,
    text_to_layering,
    write_graph,
    write_layering,
    write_td,
)

from helpers import random_decomposition


def test_graph_round_trip():
    g = Graph(4, [(0, 1), (2, 3), (1, 2)])
    assert pace_to_graph(graph_to_pace(g)) == g


def test_graph_text_shape():
    text = graph_to_pace(Graph(3, [(0, 2)]))
    assert text == "p tw 3 1\n1 3\n"


def test_graph_parses_comments_and_blanks():
    g = pace_to_graph("c comment\n\np tw 3 2\n1 2\nc mid\n2 3\n")
    assert g.n == 3
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_graph_parse_errors_carry_line_numbers():
    with pytest.raises(PaceParseError) as err:
        pace_to_graph("p tw 2 1\n1 5\n")
    assert err.value.line == 2
    with pytest.raises(PaceParseError) as err:
        pace_to_graph("p tw x 1\n")
    assert err.value.line == 1
    with pytest.raises(PaceParseError) as err:
        pace_to_graph("1 2\n")
    assert "header" in str(err.value)
    with pytest.raises(PaceParseError):
        pace_to_graph("")
    with pytest.raises(PaceParseError) as err:
        pace_to_graph("p tw 3 1\n2 2\n")
    assert "self-loop" in str(err.value)


def test_td_round_trip_preserves_empty_bags():
    td = TreeDecomposition(
        [frozenset({0, 1}), frozenset(), frozenset({1, 2})],
        [(0, 1), (1, 2)],
    )
    back = pace_to_td(td_to_pace(td, 3))
    assert back.bags == td.bags
    assert set(back.edges) == set(td.edges)


def test_td_text_shape():
    td = TreeDecomposition([frozenset({0}), frozenset({0, 2})], [(0, 1)])
    assert td_to_pace(td, 3) == "s td 2 2 3\nb 1 1\nb 2 1 3\n1 2\n"


def test_td_parse_errors():
    with pytest.raises(PaceParseError) as err:
        pace_to_td("s td 2 1 3\nb 5 1\n")
    assert err.value.line == 2
    with pytest.raises(PaceParseError):
        pace_to_td("s td 2 1 3\nb 1 1\nb 1 2\n")
    with pytest.raises(PaceParseError):
        pace_to_td("s td 1 1 2\nb 1 9\n")
    with pytest.raises(PaceParseError):
        pace_to_td("s td 0 0 0\n")
    with pytest.raises(PaceParseError):
        pace_to_td("nonsense\n")


def test_layering_round_trip_with_empty_layers():
    ly = Layering([(0, 2), (), (1,)])
    assert text_to_layering(layering_to_text(ly)).layers == ly.layers
    empty = Layering([])
    assert layering_to_text(empty) == ""
    assert text_to_layering("").layers == ()


def test_layering_parse_errors():
    with pytest.raises(PaceParseError) as err:
        text_to_layering("1 2\n0\n")
    assert err.value.line == 2
    with pytest.raises(PaceParseError):
        text_to_layering("1 2\n2\n")


def test_file_io_round_trip(tmp_path):
    g = Graph(5, [(0, 4), (1, 2)])
    td = TreeDecomposition([frozenset({0, 4}), frozenset({1, 2, 3})], [(0, 1)])
    ly = Layering([(0, 1), (2, 3, 4)])
    write_graph(g, tmp_path / "x.gr")
    write_td(td, g.n, tmp_path / "x.td")
    write_layering(ly, tmp_path / "x.layers")
    assert read_graph(tmp_path / "x.gr") == g
    assert read_td(tmp_path / "x.td").bags == td.bags
    assert read_layering(tmp_path / "x.layers").layers == ly.layers


def test_random_round_trips():
    rng = random.Random(11)
    for _ in range(40):
        g, td = random_decomposition(rng)
        assert pace_to_graph(graph_to_pace(g)) == g
        back = pace_to_td(td_to_pace(td, g.n))
        assert back.bags == td.bags
        assert sorted(tuple(sorted(e)) for e in back.edges) == sorted(
            tuple(sorted(e)) for e in td.edges
        )
