import pytest

from gemcensus.classify import (
    BudgetExhausted, SearchBudget, class_fingerprint, detect_connected_sums, gamma_class, ingest_known,
)
from gemcensus.catalog import MalformedFile
from gemcensus.core import from_code

from test_core import RP3


@pytest.fixture(scope="module")
def classes20(catalogue20):
    return gamma_class(catalogue20)


def test_partition(classes20, catalogue20):
    codes = [c for r in classes20 for c in r.codes]
    assert sorted(codes) == sorted(catalogue20.codes())
    assert [r.id for r in classes20] == list(range(len(classes20)))
    for r in classes20:
        assert r.representative in r.codes
        assert dict(r.members)[r.representative] == 0
        assert min(h for _, h in r.members) == 0


def test_subclasses_homogeneous(classes20):
    for r in classes20:
        by_h = {}
        for c, h in r.members:
            by_h.setdefault(h, set()).add(class_fingerprint(from_code(c, check_canonical=False)))
        assert all(len(v) == 1 for v in by_h.values())


def test_deterministic(catalogue20, classes20):
    again = gamma_class(reversed(list(catalogue20)))
    assert again == classes20


def test_threads_same_result(catalogue20, classes20):
    assert gamma_class(catalogue20, threads=2) == classes20


def test_names_from_known(catalogue20, classes20):
    target = next(r for r in classes20 if len(r.members) > 1)
    recs = gamma_class(catalogue20, known=[(target.representative, "M")])
    named = [r for r in recs if r.name is not None]
    assert len(named) == 1 and named[0].name == "M"
    for c, h in named[0].members:
        assert named[0].member_name(c) == ("M" if h == 0 else f"M #_{h} H")


def test_tiny_budget_flags_unresolved(catalogue20):
    errors = []
    recs = gamma_class(catalogue20, budget=SearchBudget((4, 4), 4, 1), errors=errors)
    flagged = [r for r in recs if r.unresolved]
    assert flagged and len(errors) == len(flagged)
    assert all(isinstance(e, BudgetExhausted) for e in errors)
    assert {e.code for e in errors} == {r.representative for r in flagged}


def test_budget_parse():
    b = SearchBudget.parse("3,2,4,10")
    assert b.max_gd_size == (3, 2) and b.max_order_inflation == 4 and b.max_sequence_length == 10
    with pytest.raises(ValueError):
        SearchBudget.parse("1,2")
    with pytest.raises(ValueError):
        SearchBudget((0, 1))


def test_ingest_known(tmp_path):
    p = tmp_path / "known.txt"
    p.write_text(f"# comment\n{RP3.code()} RP3\n")
    assert ingest_known([p]) == [(RP3.code(), "RP3")]
    p.write_text("8;1,2 X\n")
    with pytest.raises(MalformedFile):
        ingest_known([p])
    p.write_text("justone\n")
    with pytest.raises(MalformedFile):
        ingest_known([p])


def test_detect_connected_sums(catalogue20):
    sums = detect_connected_sums(catalogue20)
    assert [(c.split(";")[0], [s.split(";")[0] for s in parts]) for c, parts in sums] == [
        ("14", ["8", "8"]), ("18", ["8", "12"])]
    assert sums[0][1] == [RP3.code(), RP3.code()]
