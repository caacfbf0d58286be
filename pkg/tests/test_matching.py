import itertools
import random

import pytest

from resmatch.graph import Bipartition, build_graph
from resmatch.matching import (
    CapExceededError,
    Matching,
    iter_all_matchings,
    matching_from_pairs,
    max_matching,
    max_matching_bipartite,
    nu,
    nu_bruteforce,
    validate_matching,
)


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete(n):
    return build_graph(n, list(itertools.combinations(range(1, n + 1), 2)))


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return build_graph(n, edges)


PETERSEN = build_graph(
    10,
    [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
     (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
     (6, 8), (8, 10), (10, 7), (7, 9), (9, 6)],
)


def test_matching_container():
    m = matching_from_pairs([(3, 1), (2, 4)], 5)
    assert len(m) == 2
    assert m.covered() == frozenset({1, 2, 3, 4})
    assert m.sorted_edges() == [(1, 3), (2, 4)]
    assert m.to_lines() == "m 1 3\nm 2 4\n"
    with pytest.raises(ValueError, match="share"):
        matching_from_pairs([(1, 2), (2, 3)], 3)
    with pytest.raises(ValueError, match="outside"):
        matching_from_pairs([(1, 9)], 3)


@pytest.mark.parametrize(
    "g, expect",
    [
        (path(1), 0),
        (path(2), 1),
        (path(5), 2),
        (cycle(5), 2),
        (cycle(6), 3),
        (complete(4), 2),
        (PETERSEN, 5),
    ],
)
def test_nu_known_values(g, expect):
    assert nu(g) == expect


def test_blossom_handles_odd_cycle_with_tail():
    # a C5 with a pendant edge needs a blossom flip to reach 3
    g = build_graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (3, 6)])
    assert nu(g) == 3


def test_blossom_matches_bruteforce_exhaustively_small():
    # every labeled graph on up to 4 vertices
    for n in range(5):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            g = build_graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            assert nu(g) == nu_bruteforce(g)


def test_blossom_matches_bruteforce_random():
    rng = random.Random(2024)
    for _ in range(400):
        g = random_graph(rng.randint(5, 9), rng.choice([0.2, 0.4, 0.6]), rng)
        assert nu(g) == nu_bruteforce(g, cap=36), g.sorted_edges()


def test_max_matching_is_deterministic_per_seed():
    g = PETERSEN
    a = max_matching(g, seed=3)
    b = max_matching(g, seed=3)
    assert a == b
    assert len(a) == 5


def test_seeds_reach_different_matchings_on_p5():
    found = {max_matching(path(5), seed=s).edges for s in range(20)}
    assert len(found) > 1


def test_hopcroft_karp_agrees_with_blossom():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(2, 12)
        half = (n + 1) // 2
        edges = [
            (u, v)
            for u in range(1, half + 1)
            for v in range(half + 1, n + 1)
            if rng.random() < 0.4
        ]
        g = build_graph(n, edges)
        m = max_matching_bipartite(g)
        assert validate_matching(g, m).valid
        assert len(m) == nu(g)


def test_hopcroft_karp_rejects_non_bipartite():
    with pytest.raises(ValueError, match="not bipartite"):
        max_matching_bipartite(cycle(5))


def test_hopcroft_karp_rejects_wrong_bipartition():
    g = path(3)
    with pytest.raises(ValueError, match="invalid bipartition"):
        max_matching_bipartite(g, Bipartition(frozenset({1, 2}), frozenset({3})))


def test_validate_matching_flags():
    # on P4 the middle edge is maximal but not maximum
    g4 = path(4)
    maximal_not_max = matching_from_pairs([(2, 3)], 4)
    flags = validate_matching(g4, maximal_not_max)
    assert flags.valid and flags.maximal and not flags.maximum and not flags.perfect

    g = path(5)
    maximum = matching_from_pairs([(1, 2), (3, 4)], 5)
    flags = validate_matching(g, maximum)
    assert flags.valid and flags.maximal and flags.maximum and not flags.perfect

    not_maximal = matching_from_pairs([(1, 2)], 5)
    flags = validate_matching(g, not_maximal)
    assert flags.valid and not flags.maximal

    foreign = Matching(frozenset({(1, 5)}), 5)
    assert not validate_matching(g, foreign).valid
    wrong_host = matching_from_pairs([(1, 2)], 4)
    assert not validate_matching(g, wrong_host).valid


def test_validate_matching_perfect():
    g = cycle(6)
    m = matching_from_pairs([(1, 2), (3, 4), (5, 6)], 6)
    flags = validate_matching(g, m)
    assert flags.valid and flags.maximal and flags.maximum and flags.perfect


def test_bruteforce_cap():
    g = complete(8)  # 28 edges
    with pytest.raises(CapExceededError):
        nu_bruteforce(g, cap=24)
    assert nu_bruteforce(g, cap=28) == 4


def test_iter_all_matchings_counts():
    # matchings of P4 (including the empty one): {}, {12}, {23}, {34}, {12,34}
    seen = list(iter_all_matchings(path(4)))
    assert len(seen) == 5
    assert len({frozenset(m) for m in seen}) == 5
    # matchings of a triangle: empty + one per edge
    assert sum(1 for _ in iter_all_matchings(cycle(3))) == 4


def test_iter_all_matchings_yields_each_once_random():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng.randint(1, 7), 0.5, rng)
        seen = [frozenset(m) for m in iter_all_matchings(g)]
        assert len(seen) == len(set(seen))
        best = max((len(m) for m in seen), default=0)
        assert best == nu(g)
