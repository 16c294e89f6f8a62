import pytest

from gemcensus.core import is_manifold_gem
from gemcensus.invariants import first_homology
from gemcensus.moves import (
    Dipole, MoveLog, NotADipole, NotARhoPair, RhoPair, add_dipole,
    cancel_generalized_dipole, delete_dipole, find_dipoles, find_generalized_dipoles,
    find_rho_pairs, is_rigid, reduce_to_rigid, switch_rho_pair,
)

from test_core import RP3


def test_add_then_delete_dipole():
    for cols in ((0,), (1, 2), (0, 1, 3)):
        big = add_dipole(RP3, 0, cols)
        assert big.order == 10
        d = Dipole(8, 9, tuple(sorted(cols)))
        assert d in find_dipoles(big)
        assert delete_dipole(big, d).code() == RP3.code()


def test_delete_rejects_non_dipole():
    with pytest.raises(NotADipole):
        delete_dipole(RP3, Dipole(0, 1, (0,)))


def test_reduce_to_rigid_undoes_insertions():
    g = add_dipole(add_dipole(RP3, 3, (2,)), 5, (0, 3))
    r, log = reduce_to_rigid(g)
    assert r.code() == RP3.code()
    assert isinstance(log, MoveLog) and len(log.moves) == 2 and log.h == 0


def test_rigid_graph_has_no_rho_pairs():
    assert is_rigid(RP3)
    assert find_rho_pairs(RP3) == []
    with pytest.raises(NotARhoPair):
        switch_rho_pair(RP3, RhoPair(0, (0, 1), (2, 3), 2, (1, 2)))


def test_generalized_dipoles_preserve_homology(catalogue20):
    h0 = None
    for e in catalogue20:
        g = e.graph()
        h0 = first_homology(g)
        for d in find_generalized_dipoles(g, 3, 3):
            out = cancel_generalized_dipole(g, d)
            assert out.order == g.order - d.m - d.n - 1 + d.m * d.n
            assert is_manifold_gem(out)
            assert first_homology(out) == h0
    assert h0 is not None


def test_rho2_switches_preserve_manifold(catalogue20):
    seen = 0
    for e in list(catalogue20)[:6]:
        g = e.graph()
        for d in find_generalized_dipoles(g, 3, 3):
            h = cancel_generalized_dipole(g, d)
            h1 = first_homology(h)
            for p in find_rho_pairs(h):
                s, is3 = switch_rho_pair(h, p)
                assert not is3 and p.kind == 2
                assert is_manifold_gem(s) and first_homology(s) == h1
                seen += 1
    assert seen > 0


def test_rho3_switch_splits_off_handle():
    from gemcensus.seifert import SeifertSpec, assemble, barycentric_coloured_graph
    t = assemble(SeifertSpec(((1, 1, -2), (1, 1, -2), (1, -3, 2))))
    r, log = reduce_to_rigid(barycentric_coloured_graph(t))
    assert log.h == 1
    assert any(m.startswith("R3") for m in log.moves)
    assert r.order == 2 and "h=1" in log.summary()
