import networkx as nx
import pytest
from hypothesis import given

from lexwreath.graph import complete, cycle, empty, lex_product, path
from lexwreath.graph_io import (
    EdgeListError, Graph6Error, GraphSpecError, parse_edge_list, parse_graph6, parse_spec,
    read_graph_file, write_edge_list, write_graph6,
)

from conftest import graphs, seeded
from lexwreath.graph import all_graphs, random_graph


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).strip()


def test_graph6_empty2():
    assert write_graph6(empty(2)) == b"A?"
    assert parse_graph6("A?") == empty(2)


def test_graph6_roundtrip_cycle():
    assert parse_graph6(write_graph6(cycle(5))) == cycle(5)


def test_graph6_exhaustive_up_to_5():
    for n in range(1, 6):
        for g in all_graphs(n):
            enc = write_graph6(g)
            assert enc == nx_graph6(g)
            assert parse_graph6(enc) == g


def test_graph6_random_up_to_8_and_large():
    rng = seeded(7)
    for _ in range(300):
        g = random_graph(rng.randint(6, 8), rng)
        assert write_graph6(g) == nx_graph6(g)
        assert parse_graph6(write_graph6(g)) == g
    big = random_graph(70, rng)
    assert write_graph6(big) == nx_graph6(big)
    assert parse_graph6(write_graph6(big)) == big


@given(graphs(max_n=8))
def test_graph6_roundtrip_property(g):
    assert parse_graph6(write_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "A??", "A@", "B\x01", "~?", "?"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_edge_list():
    assert parse_edge_list("n 3\n0 1\n1 2\n2 0") == complete(3)
    assert parse_edge_list("n 4\n0 1\n0 1").edge_count == 1
    assert parse_edge_list("# comment\n  n 4 \n 0   1 # trailing\n\n").edge_count == 1
    with pytest.raises(EdgeListError, match="self-loop"):
        parse_edge_list("n 2\n0 0")
    with pytest.raises(EdgeListError, match="out of range"):
        parse_edge_list("n 2\n0 2")
    with pytest.raises(EdgeListError):
        parse_edge_list("0 1")


@given(graphs(max_n=7))
def test_edge_list_roundtrip(g):
    assert parse_edge_list(write_edge_list(g)) == g


def test_parse_spec_examples():
    g = parse_spec("K2*C6")
    assert g == lex_product(complete(2), cycle(6))
    assert g.vertex_count == 12
    assert parse_spec("E3") == empty(3)
    assert parse_spec("K2 * P3 * E2") == lex_product(lex_product(complete(2), path(3)), empty(2))
    assert parse_spec("g6:A?") == empty(2)


@pytest.mark.parametrize("x", ["C3", "K2", "E2", "P3", "C5"])
@pytest.mark.parametrize("y", ["C4", "K1", "E3", "P2"])
def test_parse_spec_product_is_left_fold(x, y):
    assert parse_spec(f"{x}*{y}") == lex_product(parse_spec(x), parse_spec(y))


@pytest.mark.parametrize("text, offset", [
    ("C2", 0), ("K2*", 3), ("X5", 0), ("K2*Q3", 3), ("Kx", 1), ("K2*g6:A", 6), ("", 0), ("*K2", 0),
])
def test_parse_spec_errors_carry_offsets(text, offset):
    with pytest.raises(GraphSpecError) as info:
        parse_spec(text)
    assert info.value.offset == offset


def test_parse_spec_files(tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("n 3\n0 1\n1 2\n0 2\n")
    g6 = tmp_path / "c5.g6"
    g6.write_bytes(write_graph6(cycle(5)) + b"\n")
    assert parse_spec(f"@{f}") == complete(3)
    assert parse_spec(f"@{g6}*K2") == lex_product(cycle(5), complete(2))
    assert read_graph_file(g6) == cycle(5)
    with pytest.raises(GraphSpecError):
        parse_spec(f"@{tmp_path / 'missing'}")
