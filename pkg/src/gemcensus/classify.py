"""Move-equivalence classes of a catalogue.

Each catalogue graph is the root of a bounded search.  One step cancels a
generalized dipole (or inserts a dipole and cancels another one) and then
reduces to a rigid graph; the rho3 switches made on the way are counted.  Two
graphs are in one class when their searches meet.  A weighted union-find
keeps, for every code, its rho3 count relative to the class root, so that
``h`` of a member is its count above the class minimum.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import ColouredGraph, Code, canonical_code, from_code, is_bipartite, regular_genus, split_condition_sharp
from .invariants import first_homology
from .moves import (
    MoveError,
    add_dipole,
    cancel_generalized_dipole,
    delete_dipole,
    find_dipoles,
    find_generalized_dipoles,
    reduce_to_rigid,
)

log = logging.getLogger(__name__)


class BudgetExhausted(RuntimeError):
    """A graph's search was truncated before it met any other catalogue graph."""

    def __init__(self, code: str, reason: str):
        super().__init__(f"{code}: {reason}")
        self.code = code
        self.reason = reason


@dataclass(frozen=True)
class SearchBudget:
    max_gd_size: tuple[int, int] = (4, 4)
    max_order_inflation: int = 4
    max_sequence_length: int = 12
    dipole_moves: bool = False

    def __post_init__(self):
        m, n = self.max_gd_size
        if m < 1 or n < 1 or self.max_order_inflation < 1 or self.max_sequence_length < 1:
            raise ValueError("budget values must be positive")

    @classmethod
    def parse(cls, text: str) -> "SearchBudget":
        """``m,n,inflate,len``."""
        try:
            m, n, inf, ln = (int(x) for x in text.split(","))
        except ValueError as exc:
            raise ValueError(f"budget must be m,n,inflate,len, got {text!r}") from exc
        return cls((m, n), inf, ln)


@dataclass
class ClassRecord:
    id: int
    representative: str
    members: list[tuple[str, int]]
    name: str | None = None
    unresolved: bool = False

    def member_name(self, code: str) -> str | None:
        if self.name is None:
            return None
        h = dict(self.members)[code]
        return _hname(self.name, h)

    @property
    def codes(self) -> list[str]:
        return [c for c, _ in self.members]


def _hname(name: str, h: int) -> str:
    return name if h == 0 else f"{name} #_{h} H"


def _key(code: str):
    o, body = code.split(";", 1)
    return (int(o), [int(x) for x in body.split(",")])


class _Potentials:
    """Union-find with integer offsets: ``pot(x) - pot(root(x))``."""

    def __init__(self):
        self.parent: dict[str, str] = {}
        self.off: dict[str, int] = {}
        self.conflicts: list[tuple[str, str, int]] = []

    def add(self, x: str):
        if x not in self.parent:
            self.parent[x] = x
            self.off[x] = 0

    def find(self, x: str) -> tuple[str, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress, accumulating offsets from the top
        acc = 0
        for y in reversed(path):
            acc += self.off[y]
            self.off[y] = acc
            self.parent[y] = root
        return root, (self.off[path[0]] if path else 0)

    def union(self, x: str, y: str, d: int):
        """Record ``pot(x) = pot(y) + d``."""
        self.add(x)
        self.add(y)
        rx, ox = self.find(x)
        ry, oy = self.find(y)
        if rx == ry:
            if ox - oy != d:
                self.conflicts.append((x, y, d))
            return
        # keep the smaller code as root for determinism
        if _key(rx) < _key(ry):
            self.parent[ry] = rx
            self.off[ry] = ox - oy - d
        else:
            self.parent[rx] = ry
            self.off[rx] = oy + d - ox


class MoveGraph:
    """Neighbours of rigid codes under one search step, cached per code.

    Each neighbour is stored with the order of the graph right after the move
    (before reduction) so one cache entry serves every order bound.
    """

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.cache: dict[str, tuple[int, list[tuple[str, int, int]]]] = {}

    def _expand(self, code: str, bound: int) -> list[tuple[str, int, int]]:
        g = from_code(code, check_canonical=False)
        m, n = self.budget.max_gd_size
        out: dict[str, tuple[int, int]] = {}

        def note(c, peak, h):
            if c != code and (c not in out or out[c][0] > peak):
                out[c] = (peak, h)

        for d in find_generalized_dipoles(g, m, n):
            peak = g.order - d.m - d.n - 1 + d.m * d.n
            if peak > bound:
                continue
            try:
                r, lg = reduce_to_rigid(cancel_generalized_dipole(g, d))
            except MoveError:
                continue
            note(r.code(), peak, lg.h)
        if self.budget.dipole_moves and g.order + 2 <= bound:
            for v in range(g.order):
                for col in range(4):
                    try:
                        big = add_dipole(g, v, (col,))
                    except MoveError:
                        continue
                    for d in find_dipoles(big):
                        if {d.x, d.y} == {g.order, g.order + 1}:
                            continue
                        try:
                            r, lg = reduce_to_rigid(delete_dipole(big, d))
                        except MoveError:
                            continue
                        note(r.code(), g.order + 2, lg.h)
        return sorted(((c, p, h) for c, (p, h) in out.items()), key=lambda t: _key(t[0]))

    def neighbours(self, code: str, bound: int) -> list[tuple[str, int]]:
        """``(rigid code, rho3 count)`` reachable in one step with intermediate orders <= bound."""
        hit = self.cache.get(code)
        if hit is None or hit[0] < bound:
            hit = (bound, self._expand(code, bound))
            self.cache[code] = hit
        return [(c, h) for c, p, h in hit[1] if p <= bound]


def _expand_job(args):
    budget, code, bound = args
    return code, bound, MoveGraph(budget)._expand(code, bound)


def _search(code: str, mg: MoveGraph, budget: SearchBudget, pool=None):
    """Level-by-level BFS from a rigid code.  Returns (potential per reached code, truncated)."""
    bound = int(code.split(";", 1)[0]) + budget.max_order_inflation
    pot = {code: 0}
    level = [code]
    truncated = False
    for depth in range(budget.max_sequence_length + 1):
        if not level:
            break
        if pool is not None:
            todo = [c for c in level if c not in mg.cache or mg.cache[c][0] < bound]
            for c, bd, res in pool.map(_expand_job, [(budget, c, bound) for c in todo]):
                mg.cache[c] = (bd, res)
        nxt = []
        for c in level:
            nbrs = mg.neighbours(c, bound)
            if depth == budget.max_sequence_length:
                if any(x not in pot for x, _ in nbrs):
                    truncated = True
                continue
            for x, h in nbrs:
                if x not in pot:
                    # c = x # h copies of H
                    pot[x] = pot[c] - h
                    nxt.append(x)
        level = nxt
    return pot, truncated


def _rigid_form(code: str) -> tuple[str, int]:
    g = from_code(code, check_canonical=False)
    r, lg = reduce_to_rigid(g)
    return r.code(), lg.h


def _run_searches(codes, uf, mg, budget, truncated, pool, progress):
    for idx, code in enumerate(codes):
        uf.add(code)
        root, h0 = _rigid_form(code)
        if root != code:
            uf.union(code, root, h0)
        pot, trunc = _search(root, mg, budget, pool)
        truncated[code] = trunc
        for x, p in pot.items():
            if x != root:
                uf.union(x, root, p)
        if progress is not None:
            progress(f"searched {idx + 1}/{len(codes)}: {len(pot)} codes reached")


def gamma_class(catalogue: Iterable, known: Sequence[tuple[str, str]] = (),
                budget: SearchBudget | None = None, *,
                progress: Callable[[str], None] | None = None,
                errors: list | None = None, threads: int = 1) -> list[ClassRecord]:
    """Partition ``catalogue`` (entries or codes) into classes.

    ``known`` pairs (code, manifold name) name the classes they reach.  Graphs
    whose search was cut short and met nothing are returned as singleton
    classes flagged ``unresolved``; a :class:`BudgetExhausted` for each is
    appended to ``errors`` when given.  ``threads`` > 1 expands each search
    level in a process pool; the result does not depend on it.
    """
    budget = budget or SearchBudget()
    codes = sorted({str(getattr(e, "code", e)) for e in catalogue}, key=_key)
    uf = _Potentials()
    mg = MoveGraph(budget)
    truncated: dict[str, bool] = {}
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        _run_searches(codes, uf, mg, budget, truncated, pool, progress)
    finally:
        if pool is not None:
            pool.shutdown()
    named: list[tuple[str, str]] = []
    for kc, name in known:
        kc = str(kc)
        r, h = _rigid_form(kc)
        uf.add(kc)
        if r != kc:
            uf.union(kc, r, h)
        if r in uf.parent:
            named.append((kc, name))
    groups: dict[str, list[tuple[str, int]]] = {}
    for code in codes:
        root, off = uf.find(code)
        groups.setdefault(root, []).append((code, off))
    records = []
    for members in sorted(groups.values(), key=lambda ms: _key(ms[0][0])):
        low = min(o for _, o in members)
        members = sorted(((c, o - low) for c, o in members), key=lambda t: _key(t[0]))
        rep = min((c for c, h in members if h == 0), key=_key)
        unresolved = len(members) == 1 and truncated[members[0][0]]
        records.append(ClassRecord(len(records), rep, members, None, unresolved))
    if uf.conflicts:
        log.warning("%d inconsistent rho3 counts ignored", len(uf.conflicts))
    # names: a known code at potential pk gives the representative M #_(p_rep - pk) H
    by_root = {uf.find(r.representative)[0]: r for r in records}
    for kc, name in named:
        root, pk = uf.find(kc)
        rec = by_root.get(root)
        if rec is None or rec.name is not None:
            continue
        _, prep = uf.find(rec.representative)
        k = prep - pk
        if k >= 0:
            rec.name = _hname(name, k)
    for rec in records:
        if rec.unresolved:
            exc = BudgetExhausted(rec.representative, "search truncated without meeting another graph")
            log.info(str(exc))
            if errors is not None:
                errors.append(exc)
    return records


def class_fingerprint(g: ColouredGraph) -> tuple[str, bool, int]:
    return (str(first_homology(g)), is_bipartite(g), regular_genus(g))


def ingest_known(paths: Iterable) -> list[tuple[str, str]]:
    """Read ``<code> <name>`` lines (``#`` comments allowed)."""
    from .catalog import MalformedFile
    from .core import GraphError
    out = []
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            for ln, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split(None, 1)
                if len(parts) != 2:
                    raise MalformedFile(f"{path}:{ln}: expected '<code> <name>'")
                try:
                    code = canonical_code(from_code(parts[0], check_canonical=False))
                except (GraphError, ValueError) as exc:
                    raise MalformedFile(f"{path}:{ln}: {exc}") from exc
                out.append((code, parts[1].strip()))
    return out


def _split_all(g: ColouredGraph) -> list[str]:
    parts = split_condition_sharp(g)
    if not parts:
        r, _ = reduce_to_rigid(g)
        return [r.code()]
    out = []
    for p in parts:
        out.extend(_split_all(p))
    return out


def detect_connected_sums(catalogue: Iterable) -> list[tuple[str, list[str]]]:
    """Entries satisfying the four-edge cut condition, with summands split recursively and reduced."""
    out = []
    for e in catalogue:
        code = str(getattr(e, "code", e))
        g = from_code(code, check_canonical=False)
        if split_condition_sharp(g):
            out.append((code, sorted(_split_all(g), key=_key)))
    return out


__all__ = [
    "SearchBudget", "ClassRecord", "BudgetExhausted", "MoveGraph", "gamma_class",
    "class_fingerprint", "ingest_known", "detect_connected_sums", "Code",
]
