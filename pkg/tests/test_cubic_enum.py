import networkx as nx
import pytest

from hexcover.cubic_enum import crosscheck, enumerate_cubic, load_corpus, read_corpus_cache, write_corpus_cache
from hexcover.graph import is_connected

SIZES = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


@pytest.mark.parametrize("n", sorted(SIZES))
def test_strategies_agree(n):
    a = enumerate_cubic(n, "insertion")
    b = enumerate_cubic(n, "pairing")
    assert len(a) == SIZES[n]
    assert a.certificates == b.certificates


@pytest.mark.parametrize("n", [8, 10])
def test_corpus_is_pairwise_non_isomorphic(n):
    graphs = enumerate_cubic(n).graphs
    nxg = [nx.Graph(g.edges()) for g in graphs]
    for i in range(len(nxg)):
        assert graphs[i].is_cubic() and is_connected(graphs[i])
        for j in range(i):
            assert not nx.is_isomorphic(nxg[i], nxg[j])


def test_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_cubic(7)
    with pytest.raises(ValueError):
        enumerate_cubic(18)
    with pytest.raises(ValueError):
        enumerate_cubic(8, "guessing")


def test_cache_roundtrip(tmp_path):
    c = enumerate_cubic(10)
    path = tmp_path / "cubic-10.g6"
    write_corpus_cache(c, path)
    assert read_corpus_cache(10, path) == c
    assert load_corpus(10, tmp_path) == c


def test_damaged_cache_is_ignored(tmp_path):
    path = tmp_path / "cubic-8.g6"
    path.write_bytes(b"E{Sw\n")
    assert read_corpus_cache(8, path) is None
    assert load_corpus(8, tmp_path) == enumerate_cubic(8)
    assert read_corpus_cache(8, path) == enumerate_cubic(8)


def test_crosscheck_small(catalog, tmp_path):
    rep = crosscheck(12, catalog, tmp_path)
    assert rep.ok, rep.table()
    assert [r.n for r in rep.rows] == [4, 6, 8, 10, 12]
