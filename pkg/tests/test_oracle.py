import itertools

import pytest

from relaxplex import Graph, is_kplex, max_extension_bruteforce, max_kplex_bruteforce

from conftest import complete, cycle, gnp, read_graph, DATA


def subsets_max(g, k):
    """Plain enumeration over all 2^n subsets."""
    best = 0
    for r in range(g.n, 0, -1):
        if any(is_kplex(g, c, k) for c in itertools.combinations(range(g.n), r)):
            return r
    return best


def test_examples():
    assert max_kplex_bruteforce(cycle(5), 2).size == 3
    assert max_kplex_bruteforce(Graph.from_edges(4, []), 3).size == 3
    assert max_kplex_bruteforce(complete(4), 1).size == 4
    assert max_kplex_bruteforce(Graph.from_edges(0, []), 2).size == 0


def test_witness_is_lexicographically_first():
    res = max_kplex_bruteforce(cycle(5), 2)
    assert res.witness == (0, 1, 2)


@pytest.mark.parametrize("seed", range(30))
def test_matches_plain_enumeration(seed):
    g = gnp(9, (0.2, 0.5, 0.8)[seed % 3], seed)
    for k in (1, 2, 3):
        res = max_kplex_bruteforce(g, k)
        assert res.size == subsets_max(g, k)
        assert len(res.witness) == res.size and is_kplex(g, res.witness, k)


def test_extension_examples():
    g = read_graph(DATA / "coloring_wins.clq")
    assert max_extension_bruteforce(g, 2, [0], range(1, 6)) == 3
    assert max_extension_bruteforce(g, 2, [0, 1], []) == 2
    h = gnp(10, 0.5, 7)
    assert max_extension_bruteforce(h, 2, [], range(10)) == max_kplex_bruteforce(h, 2).size


def test_guards():
    with pytest.raises(ValueError, match="limited"):
        max_kplex_bruteforce(Graph.from_edges(26, []), 2)
    with pytest.raises(ValueError, match="limited"):
        max_extension_bruteforce(Graph.from_edges(22, []), 2, [], range(21))
    with pytest.raises(ValueError, match="not a k-plex"):
        max_extension_bruteforce(Graph.from_edges(3, []), 1, [0, 1], [2])


@pytest.mark.parametrize("seed", range(20))
def test_consistency_and_monotone_in_k(seed):
    g = gnp(11, 0.4, 100 + seed)
    sizes = [max_kplex_bruteforce(g, k).size for k in range(1, 6)]
    assert sizes == sorted(sizes)
    assert sizes[1] == max_extension_bruteforce(g, 2, [], range(g.n))
