import io

import pytest

from gemcensus.catalog import (
    MalformedFile, VersionMismatch, diff, dump_catalogue, dump_classes, load_catalogue,
    load_classes, named_table, parse_catalogue, parse_classes, save_catalogue, save_classes,
)
from gemcensus.classify import ClassRecord


def test_catalogue_round_trip(tmp_path, catalogue20):
    path = tmp_path / "c.txt"
    save_catalogue(catalogue20, path)
    back = load_catalogue(path, verify=True)
    assert back.codes() == catalogue20.codes()
    assert back.counts() == catalogue20.counts()
    assert back.header == catalogue20.header
    assert dump_catalogue(back) == path.read_text()


def test_catalogue_stream(catalogue20):
    buf = io.StringIO()
    save_catalogue(catalogue20, buf)
    assert load_catalogue(io.StringIO(buf.getvalue())).codes() == catalogue20.codes()


def test_catalogue_errors(catalogue20):
    text = dump_catalogue(catalogue20)
    with pytest.raises(MalformedFile):
        parse_catalogue("")
    with pytest.raises(MalformedFile):
        parse_catalogue("hello\n")
    with pytest.raises(VersionMismatch):
        parse_catalogue(text.replace("1.0", "2.0", 1))
    with pytest.raises(MalformedFile):
        parse_catalogue(text + text.splitlines()[-1] + "\n")
    with pytest.raises(MalformedFile):
        parse_catalogue(text + "14;1,2;X;2\n")
    bad = text.splitlines()
    bad[-1] = bad[-1].replace(",", ",9", 1)
    with pytest.raises(MalformedFile):
        parse_catalogue("\n".join(bad), verify=True)


def test_diff(catalogue20):
    small = catalogue20.filter(lambda e: e.order <= 16)
    rep = diff(small, catalogue20)
    assert not rep.only_a and sorted(rep.only_b) == [18, 20]
    assert len(rep.only_b[18]) == 5
    assert rep.mirrored().only_a == rep.only_b
    assert all(line.startswith("+ ") for line in rep.format().splitlines())
    assert not diff(catalogue20, catalogue20)


def test_classes_round_trip(tmp_path):
    recs = [ClassRecord(0, "2;1,1,1,1,0,0,0,0", [("2;1,1,1,1,0,0,0,0", 0)], "S3"),
            ClassRecord(1, "8;x", [("8;x", 0), ("10;y", 1)], None, True)]
    path = tmp_path / "k.txt"
    save_classes(recs, path)
    back = load_classes(path)
    assert back == recs
    assert dump_classes(back) == path.read_text()


def test_classes_errors():
    with pytest.raises(MalformedFile):
        parse_classes("# gemcensus-classes 1.0\n8;x h=0\n")
    with pytest.raises(MalformedFile):
        parse_classes("# gemcensus-classes 1.0\nclass 0 rep=a name=?\nb h=0\n")
    with pytest.raises(MalformedFile):
        parse_classes("# gemcensus-classes 1.0\nclass 0 rep=a name=?\na h=zero\n")


def test_named_tables():
    t2 = named_table(2)
    assert t2.rows and all(r.tetrahedra % 2 == 0 for r in t2.rows)
    assert any("Q_8" in r.name or "Q8" in r.name for r in t2.by_tetrahedra(18))
    t3 = named_table(3)
    assert t3.by_tetrahedra(16)
    with pytest.raises(ValueError):
        named_table(4)
