"""Exhaustive generation of rigid genus-two crystallizations.

Pipeline: the {0,1}-coloured part of a graph is a disjoint union of
alternating cycles, so it is fixed by a partition of ``p``.  Colour 2 is added
by a planar, rho-pair-free matching search (``_ribbon``), which yields the
sphere seeds.  Colour 3 is added the same way keeping the three residues that
contain it planar.  Results are deduplicated by canonical code.

For genus two we may permute colours so that ``g01 = 3``; the seeds are then
the completions of three alternating cycles.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from ._ribbon import RibbonSearch
from .core import (
    ColouredGraph,
    Code,
    canonical_sequence,
    count_cycles,
    from_code,
    is_bipartite,
    is_crystallization,
    regular_genus,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SphereSeed:
    """A planar rigid 3-coloured graph on colours 0, 1, 2."""

    order: int
    adj: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def g(self, i: int, j: int) -> int:
        return count_cycles(self.order, self.adj[i], self.adj[j])

    def key(self) -> tuple[int, ...]:
        return tuple(canonical_sequence(self.order, self.adj, 3))


@dataclass(frozen=True)
class CatalogueEntry:
    code: Code
    order: int
    bipartite: bool
    genus: int

    def graph(self) -> ColouredGraph:
        return from_code(self.code, check_canonical=False)


def cycles01(parts: Sequence[int]):
    """Disjoint alternating {0,1}-cycles with half-lengths ``parts``.

    Returns ``(order, colour0, colour1, cycle index per vertex, first vertex per cycle)``.
    """
    n = 2 * sum(parts)
    a = [0] * n
    b = [0] * n
    cyc = [0] * n
    first = []
    base = 0
    for k, half in enumerate(parts):
        m = 2 * half
        first.append(base)
        for i in range(m):
            v = base + i
            cyc[v] = k
            if i % 2 == 0:
                a[v] = v + 1
                a[v + 1] = v
                b[v] = base + (i - 1) % m
            else:
                b[v] = base + (i + 1) % m
        base += m
    return n, a, b, cyc, first


def partitions(p: int, parts: int | None = None, least: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-decreasing partitions of ``p`` (optionally with exactly ``parts`` parts)."""
    if parts is None:
        if p == 0:
            yield ()
            return
        for first in range(least, p + 1):
            for rest in partitions(p - first, None, first):
                yield (first,) + rest
        return
    if parts == 0:
        if p == 0:
            yield ()
        return
    for first in range(least, p // parts + 1):
        for rest in partitions(p - first, parts - 1, first):
            yield (first,) + rest


def _untouched_cycle_rule(parts, cyc, first, new) -> Callable[[int, int], bool]:
    """Isomorph pruning: an untouched {0,1}-cycle is entered only at its first
    vertex, and only the first of several untouched cycles of equal length."""
    spans = [range(f, f + 2 * L) for f, L in zip(first, parts)]

    def touched(k):
        return any(new[w] >= 0 for w in spans[k])

    def allow(u, v):
        k = cyc[v]
        if k == cyc[u] or touched(k):
            return True
        if v != first[k]:
            return False
        for k2 in range(k):
            if k2 != cyc[u] and parts[k2] == parts[k] and not touched(k2):
                return False
        return True

    return allow


def _seeds_for_parts(parts) -> Iterator[SphereSeed]:
    n, a, b, cyc, first = cycles01(parts)
    rs = RibbonSearch(n, [a, b], [(0, 1)], rigid=True)
    rs.allow = _untouched_cycle_rule(parts, cyc, first, rs.new)
    for m in rs.run():
        yield SphereSeed(n, (tuple(a), tuple(b), tuple(m)))


def _seed_genus_ok(s: SphereSeed) -> bool:
    gs = sorted((s.g(0, 1), s.g(0, 2), s.g(1, 2)))
    return gs[0] == 3


def generate_sphere_seeds(p: int, genus_filter: bool = True) -> list[SphereSeed]:
    """All rigid planar 3-coloured graphs of order ``2p`` up to colour-isomorphism.

    With ``genus_filter`` only seeds with some ``g_ij = 3`` and all ``g_ij >= 3``
    are returned (every such seed is represented with ``g01 = 3``).
    """
    if p < 1:
        raise ValueError("p must be positive")
    found: dict[tuple[int, ...], SphereSeed] = {}
    plist = partitions(p, 3) if genus_filter else partitions(p)
    for parts in plist:
        for s in _seeds_for_parts(parts):
            if genus_filter and not _seed_genus_ok(s):
                continue
            found.setdefault(s.key(), s)
    return [found[k] for k in sorted(found)]


def _rigid(order, adj) -> bool:
    from .moves import is_rigid_adj
    return is_rigid_adj(order, adj)


def complete_with_colour3(seed: SphereSeed) -> list[ColouredGraph]:
    """All colour-3 completions giving rigid crystallizations, deduplicated by code."""
    n = seed.order
    rs = RibbonSearch(n, seed.adj, [(0, 1), (0, 2), (1, 2)], rigid=True)
    out: dict[str, ColouredGraph] = {}
    for m in rs.run():
        adj = list(seed.adj) + [tuple(m)]
        if not _rigid(n, adj):
            continue
        g = ColouredGraph(n, adj)
        if not is_crystallization(g):
            continue
        out.setdefault(g.code(), g)
    return [out[c] for c in sorted(out, key=_code_key)]


def _code_key(c: str):
    o, body = c.split(";", 1)
    return (int(o), [int(x) for x in body.split(",")])


def _complete_codes(seed: SphereSeed) -> list[str]:
    return [g.code() for g in complete_with_colour3(seed)]


@dataclass
class Catalogue:
    entries: list[CatalogueEntry] = field(default_factory=list)
    header: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = sorted(set(self.entries), key=lambda e: _code_key(e.code))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def codes(self) -> list[str]:
        return [e.code for e in self.entries]

    def counts(self) -> dict[int, tuple[int, int]]:
        """Order -> (bipartite count, non-bipartite count)."""
        out: dict[int, list[int]] = {}
        for e in self.entries:
            c = out.setdefault(e.order, [0, 0])
            c[0 if e.bipartite else 1] += 1
        return {k: (v[0], v[1]) for k, v in sorted(out.items())}

    def filter(self, pred) -> "Catalogue":
        return Catalogue([e for e in self.entries if pred(e)], dict(self.header))


def generate_catalogue(max_order: int, genus: int = 2, *, min_order: int = 2,
                       bipartite: bool | None = None, threads: int = 1,
                       progress: Callable[[str], None] | None = None) -> Catalogue:
    """Rigid genus-``genus`` crystallizations with at most ``max_order`` vertices."""
    if genus != 2:
        raise ValueError("only genus two catalogues are supported")
    if max_order % 2:
        raise ValueError("max_order must be even")
    entries: list[CatalogueEntry] = []
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for order in range(max(2, min_order), max_order + 1, 2):
            t0 = time.perf_counter()
            seeds = generate_sphere_seeds(order // 2, genus_filter=True)
            if pool is not None:
                results = pool.map(_complete_codes, seeds)
            else:
                results = map(_complete_codes, seeds)
            codes: set[str] = set()
            for cs in results:
                codes.update(cs)
            found = 0
            for c in codes:
                g = from_code(c, check_canonical=False)
                gen = regular_genus(g)
                if gen != genus:
                    continue
                bip = is_bipartite(g)
                if bipartite is not None and bip != bipartite:
                    continue
                entries.append(CatalogueEntry(Code(c), order, bip, gen))
                found += 1
            msg = f"order {order}: {len(seeds)} seeds, {found} crystallizations ({time.perf_counter() - t0:.2f}s)"
            log.info(msg)
            if progress is not None:
                progress(msg)
    finally:
        if pool is not None:
            pool.shutdown()
    header = {"max_order": str(max_order), "genus": str(genus),
              "filter": {None: "all", True: "bipartite", False: "nonbipartite"}[bipartite]}
    return Catalogue(entries, header)


def table1(cat: Catalogue, orders: Iterable[int]) -> str:
    """Per-order count table: one row of bipartite and one of non-bipartite counts."""
    orders = list(orders)
    counts = cat.counts()
    w = max(4, *(len(str(o)) + 1 for o in orders))
    head = "2p".ljust(8) + "".join(str(o).rjust(w) for o in orders)
    bip = "#C2".ljust(8) + "".join(str(counts.get(o, (0, 0))[0]).rjust(w) for o in orders)
    non = "#C~2".ljust(8) + "".join(str(counts.get(o, (0, 0))[1]).rjust(w) for o in orders)
    return "\n".join([head, bip, non])
