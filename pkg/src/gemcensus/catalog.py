"""Catalogue and class files, diffs, and the bundled tables of named manifolds.

Catalogue file::

    # gemcensus-catalogue 1.0
    # max_order=26
    14;1,2,3,...;B;2

Each entry line is the code (which itself reads ``order;sequence``) followed by
``B`` or ``N`` and the regular genus.

Class file::

    # gemcensus-classes 1.0
    class 0 rep=<code> name=<name or ?>
    # unresolved
    <code> h=0
"""
from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Iterable

from ._tables import TABLE2, TABLE3
from .classify import ClassRecord
from .core import Code, GraphError, from_code
from .generation import Catalogue, CatalogueEntry

CATALOGUE_MAGIC = "gemcensus-catalogue"
CLASSES_MAGIC = "gemcensus-classes"
FORMAT_VERSION = "1.0"


class MalformedFile(ValueError):
    pass


class VersionMismatch(MalformedFile):
    pass


def _open(target, mode):
    if isinstance(target, (str, os.PathLike)):
        return open(target, mode, encoding="utf-8", newline="\n")
    return _NoClose(target)


class _NoClose:
    def __init__(self, fh):
        self.fh = fh

    def __enter__(self):
        return self.fh

    def __exit__(self, *exc):
        return False


def _check_magic(line: str, magic: str, where: str):
    parts = line.strip().lstrip("#").split()
    if len(parts) != 2 or parts[0] != magic:
        raise MalformedFile(f"{where}: missing '# {magic} <version>' header")
    major = parts[1].split(".")[0]
    if major != FORMAT_VERSION.split(".")[0]:
        raise VersionMismatch(f"{where}: format version {parts[1]} is not supported (need {FORMAT_VERSION})")


# --- catalogues -------------------------------------------------------------

def dump_catalogue(cat: Catalogue) -> str:
    out = io.StringIO()
    out.write(f"# {CATALOGUE_MAGIC} {FORMAT_VERSION}\n")
    for k in sorted(cat.header):
        out.write(f"# {k}={cat.header[k]}\n")
    for e in cat.entries:
        out.write(f"{e.code};{'B' if e.bipartite else 'N'};{e.genus}\n")
    return out.getvalue()


def save_catalogue(cat: Catalogue, target) -> None:
    with _open(target, "w") as fh:
        fh.write(dump_catalogue(cat))


def parse_catalogue(text: str, where: str = "<catalogue>", *, verify: bool = False) -> Catalogue:
    lines = text.splitlines()
    if not lines:
        raise MalformedFile(f"{where}: empty file")
    _check_magic(lines[0], CATALOGUE_MAGIC, where)
    header: dict[str, str] = {}
    entries = []
    for ln, line in enumerate(lines[1:], 2):
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            body = s[1:].strip()
            if "=" in body:
                k, v = body.split("=", 1)
                header[k.strip()] = v.strip()
            continue
        parts = s.rsplit(";", 2)
        if len(parts) != 3 or parts[1] not in ("B", "N"):
            raise MalformedFile(f"{where}:{ln}: expected '<order>;<code>;B|N;<genus>'")
        code, bip, gen = parts
        try:
            genus = int(gen)
            c = Code(code)
            order = c.order
        except (ValueError, GraphError) as exc:
            raise MalformedFile(f"{where}:{ln}: {exc}") from exc
        if verify:
            try:
                from_code(code)
            except (GraphError, ValueError) as exc:
                raise MalformedFile(f"{where}:{ln}: {exc}") from exc
        entries.append(CatalogueEntry(c, order, bip == "B", genus))
    codes = [e.code for e in entries]
    if len(set(codes)) != len(codes):
        raise MalformedFile(f"{where}: duplicate codes")
    return Catalogue(entries, header)


def load_catalogue(source, *, verify: bool = False) -> Catalogue:
    where = str(source) if isinstance(source, (str, os.PathLike)) else "<stream>"
    with _open(source, "r") as fh:
        return parse_catalogue(fh.read(), where, verify=verify)


@dataclass
class DiffReport:
    only_a: dict[int, list[str]] = field(default_factory=dict)
    only_b: dict[int, list[str]] = field(default_factory=dict)

    def __bool__(self):
        return bool(self.only_a or self.only_b)

    def mirrored(self) -> "DiffReport":
        return DiffReport(self.only_b, self.only_a)

    def format(self) -> str:
        lines = []
        for order in sorted(set(self.only_a) | set(self.only_b)):
            for c in self.only_a.get(order, []):
                lines.append(f"- {c}")
            for c in self.only_b.get(order, []):
                lines.append(f"+ {c}")
        return "\n".join(lines)


def _group(codes: Iterable[str], entries: dict[str, CatalogueEntry]) -> dict[int, list[str]]:
    out: dict[int, list[str]] = {}
    for c in codes:
        out.setdefault(entries[c].order, []).append(c)
    from .generation import _code_key
    return {k: sorted(v, key=_code_key) for k, v in sorted(out.items())}


def diff(a: Catalogue, b: Catalogue) -> DiffReport:
    """Codes present in exactly one catalogue, grouped by order."""
    ea = {e.code: e for e in a.entries}
    eb = {e.code: e for e in b.entries}
    return DiffReport(_group(set(ea) - set(eb), ea), _group(set(eb) - set(ea), eb))


# --- class files ------------------------------------------------------------

def dump_classes(records: Iterable[ClassRecord]) -> str:
    out = io.StringIO()
    out.write(f"# {CLASSES_MAGIC} {FORMAT_VERSION}\n")
    for r in records:
        out.write(f"class {r.id} rep={r.representative} name={r.name if r.name else '?'}\n")
        if r.unresolved:
            out.write("# unresolved\n")
        for c, h in r.members:
            out.write(f"{c} h={h}\n")
    return out.getvalue()


def save_classes(records: Iterable[ClassRecord], target) -> None:
    with _open(target, "w") as fh:
        fh.write(dump_classes(records))


def parse_classes(text: str, where: str = "<classes>") -> list[ClassRecord]:
    lines = text.splitlines()
    if not lines:
        raise MalformedFile(f"{where}: empty file")
    _check_magic(lines[0], CLASSES_MAGIC, where)
    records: list[ClassRecord] = []
    for ln, line in enumerate(lines[1:], 2):
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            if s[1:].strip() == "unresolved" and records:
                records[-1].unresolved = True
            continue
        if s.startswith("class "):
            try:
                head, rest = s[6:].split(" rep=", 1)
                rep, name = rest.split(" name=", 1)
                cid = int(head)
            except ValueError as exc:
                raise MalformedFile(f"{where}:{ln}: bad class header") from exc
            records.append(ClassRecord(cid, rep, [], None if name == "?" else name))
            continue
        if not records:
            raise MalformedFile(f"{where}:{ln}: member line before any class header")
        try:
            code, h = s.split(" h=")
            records[-1].members.append((code, int(h)))
        except ValueError as exc:
            raise MalformedFile(f"{where}:{ln}: expected '<code> h=<k>'") from exc
    for r in records:
        if r.representative not in dict(r.members):
            raise MalformedFile(f"{where}: class {r.id} representative is not a member")
    return records


def load_classes(source) -> list[ClassRecord]:
    where = str(source) if isinstance(source, (str, os.PathLike)) else "<stream>"
    with _open(source, "r") as fh:
        return parse_classes(fh.read(), where)


# --- named tables -----------------------------------------------------------

@dataclass(frozen=True)
class NamedRow:
    tetrahedra: int
    six_tuple: str | None
    name: str
    position: str | None


@dataclass
class NamedTable:
    rows: list[NamedRow]

    def __post_init__(self):
        for r in self.rows:
            if r.tetrahedra % 2 or not r.name:
                raise MalformedFile(f"bad table row {r}")

    def by_tetrahedra(self, n: int) -> list[NamedRow]:
        return [r for r in self.rows if r.tetrahedra == n]

    def format(self) -> str:
        return "\n".join(f"{r.tetrahedra}\t{r.six_tuple or '-'}\t{r.name}\t{r.position or '-'}" for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "NamedTable":
        rows = []
        for line in text.splitlines():
            if not line.strip():
                continue
            t, six, name, pos = line.split("|")
            rows.append(NamedRow(int(t), six or None, name, pos or None))
        return cls(rows)


def named_table(which: int) -> NamedTable:
    """2: orientable prime genus-two manifolds; 3: non-orientable ones."""
    if which == 2:
        return NamedTable.parse(TABLE2)
    if which == 3:
        return NamedTable.parse(TABLE3)
    raise ValueError("table must be 2 or 3")
