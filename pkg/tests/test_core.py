import random

import pytest

from gemcensus.core import (
    ColouredGraph, Disconnected, FixedPoint, MalformedCode, NotCrystallization, NotInvolution,
    canonical_code, colour_isomorphic, connected_sum, from_code, is_bipartite,
    is_contracted, is_crystallization, is_manifold_gem, regular_genus, split_condition_sharp,
)

# the 2-vertex sphere and the 8-vertex crystallization of RP^3
SPHERE = ColouredGraph(2, [[1, 0]] * 4)
RP3 = from_code("8;1,2,3,4,0,5,6,7,5,0,7,6,6,7,0,5,7,6,5,0,2,1,4,3,3,4,1,2,4,3,2,1")


def test_rejects_non_involution():
    with pytest.raises(NotInvolution):
        ColouredGraph(4, [[1, 0, 3, 2], [1, 0, 3, 2], [2, 3, 0, 1], [1, 2, 3, 0]])
    with pytest.raises(FixedPoint):
        ColouredGraph(2, [[1, 0], [1, 0], [1, 0], [0, 1]])


def test_rejects_disconnected():
    m = [1, 0, 3, 2]
    with pytest.raises(Disconnected):
        ColouredGraph(4, [m] * 4)


def test_from_edges_missing_edge():
    with pytest.raises(NotInvolution):
        ColouredGraph.from_edges(2, [(0, 1, 0), (0, 1, 1), (0, 1, 2)])


def test_sphere_basics():
    assert is_crystallization(SPHERE)
    assert is_bipartite(SPHERE)
    assert regular_genus(SPHERE) == 0
    assert SPHERE.code() == "2;1,1,1,1,0,0,0,0"


def test_rp3():
    assert is_crystallization(RP3) and is_bipartite(RP3)
    assert regular_genus(RP3) == 1


def test_genus_needs_crystallization():
    s = connected_sum(RP3, 0, RP3, 0)
    g = ColouredGraph(s.order, s.adj)
    assert is_manifold_gem(g)
    if not is_contracted(g):
        with pytest.raises(NotCrystallization):
            regular_genus(g)


def test_code_relabel_invariance():
    rng = random.Random(1)
    for _ in range(30):
        v = list(range(RP3.order))
        rng.shuffle(v)
        c = [0, 1, 2, 3]
        rng.shuffle(c)
        h = RP3.relabel(v, c)
        assert canonical_code(h) == RP3.code()
        assert colour_isomorphic(h, RP3)


def test_from_code_rejects_bad_text():
    with pytest.raises(MalformedCode):
        from_code("8;1,2,3")
    with pytest.raises(MalformedCode):
        from_code("x;1")
    with pytest.raises(MalformedCode):
        from_code("2;1,1,1,1,0,0,0,1")


def test_from_code_non_canonical():
    code = "2;1,1,1,1,0,0,0,0"
    assert from_code(code).order == 2
    g = RP3.relabel([7, 6, 5, 4, 3, 2, 1, 0])
    text = "8;" + ",".join(str(g.adj[c][v]) for v in range(8) for c in range(4))
    if text != RP3.code():
        with pytest.raises(MalformedCode):
            from_code(text)
        assert from_code(text, check_canonical=False).code() == RP3.code()


def test_sum_and_split():
    s = connected_sum(RP3, 0, RP3, 3)
    assert s.order == 14
    parts = split_condition_sharp(s)
    assert parts is not None
    assert [p.code() for p in parts] == [RP3.code(), RP3.code()]


def test_prime_graph_does_not_split():
    assert split_condition_sharp(RP3) is None
    assert split_condition_sharp(SPHERE) is None
