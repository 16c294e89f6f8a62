import pytest

from gemcensus.core import is_bipartite, is_crystallization, is_manifold_gem
from gemcensus.invariants import first_homology, seifert_homology
from gemcensus.seifert import (
    LST_TABLE, InvalidParams, InvalidSpec, NoSuchBoundaryEdge, SeifertSpec, assemble,
    barycentric_coloured_graph, base_lst, crystallize, layering, lst, pants_block,
)

import oracles


def test_base_lst():
    t = base_lst()
    assert t.ntet == 1
    assert t.label_set() == (-3, 1, 2)
    assert str(t.first_homology()) == "Z"


@pytest.mark.parametrize("params", [(1, 1, -2), (1, 2, -3), (2, 3, -5), (3, 4, -7), (1, 4, -5), (5, 3, -8)])
def test_lst_labels(params):
    t = lst(params)
    assert t.label_set() == tuple(sorted(params))
    assert t.edge_consistent() and t.is_orientable()
    assert str(t.first_homology()) == "Z"


def test_lst_rejects_bad_params():
    with pytest.raises(InvalidParams):
        lst((2, 4, -6))
    with pytest.raises(InvalidParams):
        lst((1, 1, 1))


def test_layering_needs_existing_edge():
    with pytest.raises(NoSuchBoundaryEdge):
        layering(base_lst(), 7)


def test_pants_block():
    t = pants_block()
    assert t.ntet == 3 and len(t.boundary_faces()) == 6
    assert t.is_orientable()


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        SeifertSpec(((2, 1, -3), (4, -3, 1), (4, 1, -5)))
    with pytest.raises(InvalidSpec):
        SeifertSpec(((2, 1, -3), (4, 1, -5)))
    s = SeifertSpec.parse("(2,1,-3) (4,1,-5) (4,-5,1)")
    assert s.fibres() == [(2, 1), (4, 1), (4, -1)]
    assert SeifertSpec(s.triples, ("sigma", "theta", "sigma")).fibres() == [(2, 3), (4, 1), (4, -1)]


def test_closed_triangulation():
    t = assemble(SeifertSpec(((2, 1, -3), (4, 1, -5), (4, -5, 1))))
    assert t.is_closed() and t.is_orientable() and t.edge_consistent()
    g = barycentric_coloured_graph(t)
    assert g.order == 24 * t.ntet
    assert is_manifold_gem(g) and is_bipartite(g)
    assert first_homology(g) == t.first_homology() == seifert_homology([(2, 1), (4, 1), (4, -1)])


def test_crystallize():
    fib, trip = LST_TABLE[0]
    g, log = crystallize(barycentric_coloured_graph(assemble(SeifertSpec(trip))))
    assert is_crystallization(g)
    assert str(first_homology(g)) == oracles.seifert_abelian(fib)
    assert log.moves


def test_s2xs1_filling():
    t = assemble(SeifertSpec(((1, 1, -2), (1, 1, -2), (1, -3, 2))))
    assert str(t.first_homology()) == "Z"
