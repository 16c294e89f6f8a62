import random

import pytest

from gemcensus.invariants import (
    GroupPresentation, HomologyResult, abelian_group, face_vector, first_homology,
    fundamental_group, match_presentation, seifert_first_homology, seifert_general_group,
    seifert_group, smith_normal_form, tietze_simplify,
)

import oracles
from test_core import RP3, SPHERE


def test_snf_against_sympy():
    rng = random.Random(3)
    for _ in range(40):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        free, tors = oracles.snf_invariants(rows, c)
        diag = smith_normal_form(rows)
        assert c - len(diag) == free
        assert tuple(d for d in diag if d > 1) == tors
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0


def test_homology_result_text():
    h = HomologyResult(1, (2, 4))
    assert str(h) == "Z+Z/2+Z/4"
    assert HomologyResult.parse(str(h)) == h
    assert str(HomologyResult(0)) == "0" and HomologyResult(0).order == 1
    assert HomologyResult(0, (3,)).order == 3
    with pytest.raises(ValueError):
        HomologyResult(0, (2, 3))


def test_small_graphs():
    assert str(first_homology(SPHERE)) == "0"
    assert str(first_homology(RP3)) == "Z/2"
    assert face_vector(SPHERE).euler == 0


def test_catalogue_h1_matches_oracle(catalogue20):
    for e in catalogue20:
        g = e.graph()
        assert str(first_homology(g)) == oracles.graph_h1(g.adj)


def test_presentation_abelianizes_to_h1(catalogue20):
    for e in catalogue20:
        g = e.graph()
        p = fundamental_group(g)
        assert p.abelianize() == first_homology(g)
        q = tietze_simplify(p)
        assert q.ngens <= p.ngens
        assert q.abelianize() == first_homology(g)


def test_sphere_group_is_trivial():
    assert tietze_simplify(fundamental_group(SPHERE)).ngens == 0


def test_presentation_rejects_unknown_generator():
    with pytest.raises(ValueError):
        GroupPresentation(1, ((1, 2),))


def test_seifert_families():
    # S^3/Q8 = (S^2,(2,1),(2,1),(2,-1))
    assert str(seifert_first_homology("i", 2, 2, 2)) == "Z/2+Z/2"
    assert seifert_first_homology("ii", 3, 3, 4, 1) == seifert_general_group([(3, 1), (3, -1), (4, 1)]).abelianize()
    assert str(seifert_first_homology("iii")) == oracles.seifert_abelian([(3, 1), (3, 1), (5, -4)])
    with pytest.raises(ValueError):
        seifert_group("iv")
    with pytest.raises(ValueError):
        seifert_group("ii", 1, 2, 3, 0)


def test_general_presentation_against_oracle():
    for fib in ([(2, 1), (4, 1), (4, -1)], [(3, 1), (3, 2), (4, -3)], [(2, 1), (2, 1), (2, -1)]):
        assert str(seifert_general_group(fib).abelianize()) == oracles.seifert_abelian(fib)


def test_match_presentation_shifts():
    m = match_presentation([(3, 1), (3, 2), (4, -3)])
    assert m is not None
    assert seifert_first_homology(*m) == seifert_general_group([(3, 1), (3, 2), (4, -3)]).abelianize()
    assert match_presentation([(1, 1), (2, 1), (3, 1)]) is None


def test_abelian_group():
    assert str(abelian_group(2, [[2, 0], [0, 0]])) == "Z+Z/2"
    assert str(abelian_group(0, [])) == "0"
