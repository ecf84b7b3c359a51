import random

import networkx as nx
import pytest

from bruteforce import random_graph, ref_canonical_code
from oremax import (CANONICAL_MAX_ORDER, CapacityError, Graph,
                    Graph6ParseError, ParameterError, add_edge, bit_code,
                    bits, build_backbone, canonical_form, empty_graph,
                    from_bit_code, from_edges, from_graph6, induced_subgraph,
                    is_clique, is_isomorphic, relabel, relabeling_codes,
                    to_dot, to_edge_list, to_graph6)


def k_n(n):
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n):
    return from_edges(n, list(zip(range(n - 1), range(1, n))))


def cycle(n):
    return from_edges(n, list(zip(range(n), [*range(1, n), 0])))


# --- construction -----------------------------------------------------------


def test_empty_graph():
    assert empty_graph(0).order == 0
    assert empty_graph(0).size == 0
    g = empty_graph(4)
    assert g.order == 4 and g.size == 0
    assert all(g.degree(v) == 0 for v in g.vertices())


def test_empty_graph_capacity():
    empty_graph(62)
    with pytest.raises(CapacityError):
        empty_graph(63)
    with pytest.raises(ParameterError):
        empty_graph(-1)


def test_add_edge():
    g = add_edge(empty_graph(2), 0, 1)
    assert g.size == 1 and g.has_edge(0, 1) and g.has_edge(1, 0)
    assert add_edge(g, 1, 0).size == 1  # idempotent
    with pytest.raises(ParameterError):
        add_edge(empty_graph(4), 3, 3)
    with pytest.raises(IndexError):
        add_edge(empty_graph(4), 0, 4)


def test_graph_invariants_rejected():
    with pytest.raises(ParameterError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ParameterError):
        Graph(2, (0b01, 0b10))  # self loops
    with pytest.raises(ParameterError):
        Graph(2, (0b110, 0b001))  # bit beyond order
    with pytest.raises(ParameterError):
        Graph(3, (0, 0))  # row count


def test_size_examples():
    assert k_n(4).size == 6
    assert empty_graph(5).size == 0
    t, _ = build_backbone(2, 3)
    assert t.size == 10


def test_size_is_half_degree_sum_random():
    rng = random.Random(2024)
    for _ in range(50):
        g = random_graph(rng, rng.randrange(1, 9))
        assert g.size * 2 == sum(g.degree(v) for v in g.vertices())


def test_symmetry_after_random_add_sequences():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(2, 8)
        g = empty_graph(n)
        for _ in range(rng.randrange(0, 12)):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u != v:
                g = add_edge(g, u, v)
        for u in g.vertices():
            assert not g.rows[u] >> u & 1
            for v in bits(g.rows[u]):
                assert g.has_edge(v, u)


def test_induced_subgraph():
    assert is_clique(induced_subgraph(k_n(4), [0, 1, 2]), [0, 1, 2])
    assert induced_subgraph(k_n(4), []).order == 0
    with pytest.raises(IndexError):
        induced_subgraph(k_n(4), [0, 4])


def test_induced_subgraph_backbone_middle_blocks():
    # consecutive K2 blocks with the full join between them give K4
    t, bm = build_backbone(2, 3)
    inner = induced_subgraph(t, bits(bm.blocks[1] | bm.blocks[2]))
    assert inner.order == 4 and inner.size == 6


def test_is_clique():
    g = k_n(4)
    assert is_clique(g, [2])
    assert is_clique(g, [])
    assert is_clique(g, range(4))
    assert not is_clique(cycle(4), range(4))


def test_is_clique_matches_pairwise_random():
    rng = random.Random(77)
    for _ in range(60):
        g = random_graph(rng, 7)
        s = [v for v in range(7) if rng.random() < 0.5]
        expect = all(g.has_edge(u, v)
                     for i, u in enumerate(s) for v in s[i + 1:])
        assert is_clique(g, s) == expect


def test_relabel():
    g = path(3)
    h = relabel(g, [2, 0, 1])  # old 0 -> 2, old 1 -> 0, old 2 -> 1
    assert h.has_edge(2, 0) and h.has_edge(0, 1) and not h.has_edge(2, 1)
    with pytest.raises(ParameterError):
        relabel(g, [0, 0, 1])


# --- canonical forms --------------------------------------------------------


def test_canonical_form_label_invariance():
    p3a = from_edges(3, [(0, 1), (1, 2)])
    p3b = from_edges(3, [(0, 2), (2, 1)])
    assert canonical_form(p3a) == canonical_form(p3b)
    assert canonical_form(k_n(3)) != canonical_form(p3a)


def test_canonical_form_random_relabelings_of_backbone():
    t, _ = build_backbone(2, 3)
    want = canonical_form(t)
    rng = random.Random(9)
    for _ in range(100):
        perm = list(range(t.order))
        rng.shuffle(perm)
        assert canonical_form(relabel(t, perm)) == want


def test_canonical_form_against_reference():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(0, 7))
        got = bit_code(from_graph6(canonical_form(g).g6))
        assert got == ref_canonical_code(g)


def test_canonical_form_separates_nonisomorphic():
    pairs = [
        (path(4), cycle(4)),
        (k_n(4), cycle(4)),
        (path(5), cycle(5)),
        (from_edges(6, [(0, 1), (2, 3), (4, 5)]), path(6)),
    ]
    for g, h in pairs:
        assert canonical_form(g) != canonical_form(h)


def test_canonical_form_guard():
    with pytest.raises(CapacityError):
        canonical_form(empty_graph(CANONICAL_MAX_ORDER + 1))


def test_is_isomorphic():
    assert not is_isomorphic(cycle(4), path(4))
    g = random_graph(random.Random(1), 7)
    perm = list(range(7))
    random.Random(2).shuffle(perm)
    assert is_isomorphic(g, relabel(g, perm))


def test_relabeling_codes_is_full_orbit():
    from itertools import permutations
    g = path(4)
    want = set()
    for perm in permutations(range(4)):
        want.add(bit_code(relabel(g, perm)))
    assert relabeling_codes(g) == want


def test_bit_code_round_trip():
    rng = random.Random(12)
    for _ in range(80):
        n = rng.randrange(0, 9)
        g = random_graph(rng, n)
        assert from_bit_code(n, bit_code(g)) == g
    with pytest.raises(ParameterError):
        from_bit_code(3, 8)  # only 3 cells


# --- graph6 -----------------------------------------------------------------


def test_graph6_known_bytes():
    assert to_graph6(k_n(2)) == "A_"
    assert to_graph6(k_n(3)) == "Bw"
    assert from_graph6("A_") == k_n(2)
    assert from_graph6("Bw") == k_n(3)


def test_graph6_matches_networkx():
    rng = random.Random(404)
    for _ in range(60):
        n = rng.randrange(0, 9)
        g = random_graph(rng, n)
        ref = nx.Graph()
        ref.add_nodes_from(range(n))
        ref.add_edges_from((u, v) for u in range(n) for v in bits(g.rows[u])
                           if u < v)
        want = nx.to_graph6_bytes(ref, header=False).rstrip(b"\n")
        assert to_graph6(g).encode("ascii") == want
        assert from_graph6(want) == g


def test_graph6_round_trip_corpus():
    rng = random.Random(55)
    for _ in range(120):
        g = random_graph(rng, rng.randrange(0, 9), rng.random())
        assert from_graph6(to_graph6(g)) == g


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<Bw") == k_n(3)


def test_graph6_parse_errors():
    with pytest.raises(Graph6ParseError) as err:
        from_graph6("")
    assert err.value.offset == 0
    with pytest.raises(Graph6ParseError) as err:
        from_graph6(">>graph6<<")
    assert err.value.offset == 10
    with pytest.raises(Graph6ParseError):
        from_graph6("~??")  # multi-byte order form unsupported
    with pytest.raises(Graph6ParseError) as err:
        from_graph6("B")  # truncated data
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError) as err:
        from_graph6("A_o")  # extra byte
    assert err.value.offset == 2
    with pytest.raises(Graph6ParseError) as err:
        from_graph6("A" + chr(62))  # below printable graph6 range
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError) as err:
        from_graph6("Ao")  # non-zero padding bit
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError):
        from_graph6(chr(127) + "x")  # order byte past 62
    with pytest.raises(Graph6ParseError):
        from_graph6(b"A\xff")


# --- text formats -----------------------------------------------------------


def test_to_edge_list():
    assert to_edge_list(k_n(2)) == "0 1"
    assert to_edge_list(empty_graph(3)) == ""
    t, _ = build_backbone(1, 2)
    assert to_edge_list(t) == "0 1\n1 2"


def test_to_dot():
    text = to_dot(empty_graph(3))
    assert text == "graph g {\n  0;\n  1;\n  2;\n}"
    text = to_dot(path(3))
    assert "0 -- 1;" in text and "1 -- 2;" in text
    # deterministic output
    assert text == to_dot(path(3))
