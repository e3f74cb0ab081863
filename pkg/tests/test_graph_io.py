import json

import pytest

from src.exceptions import GraphParseError, NotBijectiveError
from src.utils.graph_io import dump_graph, load_graph, parse_edge_list, parse_json_graph, parse_labeling


def test_bundled_instances(ex25, fig1):
    assert ex25.n == 5
    assert set(ex25.edges) == {(1, 4), (3, 4), (3, 5), (2, 5)}
    assert fig1.n == 16 and fig1.edge_count == 15
    assert fig1.degree(16) == 5


def test_bundled_edge_list_instance():
    g = load_graph("c4.txt")
    assert g.edges == ((1, 2), (1, 4), (2, 3), (3, 4))


def test_json_adjacency_order():
    g = parse_json_graph('{"n": 3, "edges": [[1, 2], [2, 3]], "adjacency_order": {"2": [3, 1]}}')
    assert g.ordered_neighbors(2) == (3, 1)


def test_json_errors_are_parse_errors():
    with pytest.raises(GraphParseError) as info:
        parse_json_graph('{"n": 3,\n "edges": [[1, 2]\n')
    assert info.value.line is not None
    assert info.value.exit_code == 65

    with pytest.raises(GraphParseError):
        parse_json_graph('{"edges": [[1, 2]]}')
    with pytest.raises(GraphParseError):
        parse_json_graph('{"n": 2, "edges": [[1, 1]]}')


@pytest.mark.parametrize("bad_edge,fragment", [
    ("[3, 3]", "loop at vertex 3"),
    ("[2, 9]", "outside 1..4"),
    ("[2, 1]", "duplicate of edges[0]"),
    ("[2]", "expected two endpoints"),
    ('[2, "x"]', "edges.2.1"),
])
def test_json_edge_errors_carry_line_numbers(bad_edge, fragment):
    text = '{\n  "n": 4,\n  "edges": [\n    [1, 2],\n    [2, 3],\n    ' + bad_edge + '\n  ]\n}\n'
    with pytest.raises(GraphParseError) as info:
        parse_json_graph(text, "g.json")
    assert info.value.line == 6
    assert fragment in str(info.value)
    assert str(info.value).startswith("g.json:6: ")


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(GraphParseError) as info:
        parse_edge_list("3 2\n1 2\n2 x\n")
    assert info.value.line == 3

    with pytest.raises(GraphParseError) as info:
        parse_edge_list("3 2\n1 2\n2 1\n")
    assert info.value.line == 3

    with pytest.raises(GraphParseError) as info:
        parse_edge_list("# comment\n3 3\n1 2\n2 3\n")
    assert "announces 3 edges" in str(info.value)


def test_load_graph_detects_format(tmp_path):
    edges_file = tmp_path / "p3.edges"
    edges_file.write_text("3 2\n1 2\n2 3\n")
    json_file = tmp_path / "p3.json"
    json_file.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3]]}))
    assert load_graph(edges_file) == load_graph(json_file)


def test_load_graph_missing_file(tmp_path):
    with pytest.raises(GraphParseError):
        load_graph(tmp_path / "absent.json")


def test_dump_then_load(tmp_path, fig3):
    path = dump_graph(fig3, tmp_path / "out" / "fig3.json")
    assert load_graph(path) == fig3


def test_parse_labeling():
    assert parse_labeling("3,1,2", 3).perm == (3, 1, 2)
    assert parse_labeling("[2, 1]", 2).perm == (2, 1)
    with pytest.raises(GraphParseError):
        parse_labeling("1,a", 2)
    with pytest.raises(NotBijectiveError):
        parse_labeling("1,1", 2)
