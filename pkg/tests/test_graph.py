import random

import pytest

from threshpoly.graph import (
    CreationSequence,
    ThresholdGraph,
    edge_count,
    edge_query,
    parse_sequence,
    to_dense_adjacency,
)


def graph(text):
    return ThresholdGraph.from_string(text)


class TestParse:
    def test_empty_is_single_vertex(self):
        seq = parse_sequence("")
        assert seq.n == 1
        assert seq.bits == ()

    def test_single_edge(self):
        seq = parse_sequence("1")
        assert seq.n == 2
        assert seq.bits == (1,)

    def test_direct_transcription(self):
        seq = parse_sequence("101")
        assert seq.n == 4
        assert seq.bits == (1, 0, 1)

    def test_invalid_character_names_position(self):
        with pytest.raises(ValueError, match="position 3"):
            parse_sequence("10x1")

    def test_inconsistent_sequence_rejected(self):
        with pytest.raises(ValueError):
            CreationSequence(3, (1,))
        with pytest.raises(ValueError):
            CreationSequence(0, ())
        with pytest.raises(ValueError):
            CreationSequence(3, (1, 2))


class TestEdgeQuery:
    def test_k2(self):
        assert edge_query(graph("1"), 1, 2) is True

    def test_isolated_first_vertex(self):
        assert edge_query(graph("0"), 2, 1) is False

    def test_mixed_sequence(self):
        g = graph("101")
        assert edge_query(g, 2, 4) is False
        assert edge_query(g, 3, 4) is True

    def test_symmetry(self):
        g = graph("1100101")
        for i in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                if i != j:
                    assert edge_query(g, i, j) == edge_query(g, j, i)

    def test_domain_errors(self):
        g = graph("1")
        with pytest.raises(ValueError):
            edge_query(g, 1, 1)
        with pytest.raises(ValueError):
            edge_query(g, 0, 1)
        with pytest.raises(ValueError):
            edge_query(g, 1, 3)


class TestEdgeCount:
    def test_small_cliques(self):
        assert edge_count(graph("1")) == 1
        assert edge_count(graph("11")) == 3

    def test_matches_enumeration(self):
        g = graph("101")
        brute = sum(
            1
            for i in range(1, g.n + 1)
            for j in range(i + 1, g.n + 1)
            if edge_query(g, i, j)
        )
        assert brute == edge_count(g) == 4

    def test_random_sequences_match_enumeration(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randint(1, 30)
            g = graph("".join(rng.choice("01") for _ in range(n - 1)))
            brute = sum(
                1
                for i in range(1, n + 1)
                for j in range(i + 1, n + 1)
                if edge_query(g, i, j)
            )
            assert brute == edge_count(g)


class TestDenseAdjacency:
    def test_k2(self):
        assert to_dense_adjacency(graph("1")).entries == ((0, 1), (1, 0))

    def test_single_vertex(self):
        assert to_dense_adjacency(graph("")).entries == ((0,),)

    def test_k3(self):
        assert to_dense_adjacency(graph("11")).entries == (
            (0, 1, 1),
            (1, 0, 1),
            (1, 1, 0),
        )

    def test_agrees_with_edge_query(self):
        g = graph("1100101")
        a = to_dense_adjacency(g).entries
        for i in range(g.n):
            assert a[i][i] == 0
            for j in range(g.n):
                if i != j:
                    assert bool(a[i][j]) == edge_query(g, i + 1, j + 1)
                    assert a[i][j] == a[j][i]

    def test_edge_count_is_half_the_entry_sum(self):
        g = graph("10110")
        a = to_dense_adjacency(g).entries
        assert sum(sum(row) for row in a) == 2 * edge_count(g)

    def test_size_cap(self):
        g = graph("1" * 10)
        with pytest.raises(ValueError, match="cap"):
            to_dense_adjacency(g, cap=5)

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("THRESH_ORACLE_CAP", "4")
        with pytest.raises(ValueError):
            to_dense_adjacency(graph("1111"))
        monkeypatch.setenv("THRESH_ORACLE_CAP", "64")
        assert to_dense_adjacency(graph("1111")).n == 5


def test_vertex_one_isolated_iff_first_bit_clear():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 16)
        g = graph("".join(rng.choice("01") for _ in range(n - 1)))
        isolated = all(not edge_query(g, 1, j) for j in range(2, n + 1))
        assert isolated == (g.bits[0] == 0)
