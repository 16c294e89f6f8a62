"""Dipole moves, generalized (m,n)-dipoles and rho-pair switches.

All operations return new graphs.  Vertex numbering after a move is
deterministic: surviving vertices keep their relative order and new vertices
are appended.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .core import COLOURS, ColouredGraph, Disconnected, GraphError, component_labels, cycle_labels


class MoveError(ValueError):
    pass


class NotADipole(MoveError):
    pass


class WouldAnnihilate(MoveError):
    pass


class NotAGeneralizedDipole(MoveError):
    pass


class NotARhoPair(MoveError):
    pass


class Disconnects(MoveError):
    pass


@dataclass(frozen=True)
class Dipole:
    x: int
    y: int
    colours: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.colours)

    def token(self) -> str:
        return f"D-{{{','.join(map(str, self.colours))}}}@({self.x},{self.y})"


@dataclass(frozen=True)
class GeneralizedDipole:
    """Cycle ``x0,x1..xm`` in colours (i, j) and ``x0,y1..yn`` in colours (h, k)."""

    x0: int
    colours: tuple[int, int, int, int]
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.xs)

    @property
    def n(self) -> int:
        return len(self.ys)

    def token(self) -> str:
        return f"GD@({self.x0},{self.m},{self.n})"


@dataclass(frozen=True)
class RhoPair:
    colour: int
    e: tuple[int, int]
    f: tuple[int, int]
    kind: int  # 2 or 3
    shared: tuple[int, ...]  # the colours h with e, f on a common {colour,h}-cycle

    def token(self) -> str:
        return f"R{self.kind}@{self.colour}:({self.e[0]},{self.e[1]}),({self.f[0]},{self.f[1]})"


@dataclass
class MoveLog:
    moves: list[str] = field(default_factory=list)
    rho3_count: int = 0

    def record(self, token: str, rho3: bool = False):
        self.moves.append(token)
        if rho3:
            self.rho3_count += 1

    def extend(self, other: "MoveLog"):
        self.moves.extend(other.moves)
        self.rho3_count += other.rho3_count

    @property
    def h(self) -> int:
        return self.rho3_count

    def summary(self) -> str:
        kinds: dict[str, int] = {}
        for t in self.moves:
            key = t.split("@", 1)[0]
            kinds[key] = kinds.get(key, 0) + 1
        parts = [f"{k}x{v}" for k, v in sorted(kinds.items())]
        return f"moves={len(self.moves)} h={self.rho3_count}" + (" " + " ".join(parts) if parts else "")


def _rebuild(order: int, adj, keep: Sequence[int], extra: int = 0, *, check=True) -> ColouredGraph:
    """Renumber: ``keep`` vertices first (in order), then ``extra`` new vertices already
    numbered from ``len(keep)`` in ``adj``-space via negative ids ``-1..-extra``."""
    index = {v: i for i, v in enumerate(keep)}
    base = len(keep)
    for t in range(extra):
        index[-1 - t] = base + t
    n = base + extra
    out = [[0] * n for _ in COLOURS]
    for c in COLOURS:
        for v, w in adj[c].items():
            out[c][index[v]] = index[w]
    try:
        return ColouredGraph(n, out, check=check)
    except Disconnected as exc:
        raise Disconnects(str(exc)) from exc


# --- k-dipoles -------------------------------------------------------------

def _joining(g: ColouredGraph, x: int, y: int) -> tuple[int, ...]:
    return tuple(c for c in COLOURS if g.adj[c][x] == y)


def _is_dipole(g: ColouredGraph, x: int, y: int, cols: tuple[int, ...], labels=None) -> bool:
    if not 1 <= len(cols) <= 3 or _joining(g, x, y) != cols:
        return False
    rest = tuple(c for c in COLOURS if c not in cols)
    if labels is not None and rest in labels:
        lab = labels[rest]
    else:
        lab = component_labels(g.order, g.adj, rest)[0]
    return lab[x] != lab[y]


def find_dipoles(g: ColouredGraph, k: int | None = None) -> list[Dipole]:
    """All dipoles (of type ``k`` if given), ordered by (x, y)."""
    labels = {}
    out = []
    for x in range(g.order):
        seen = set()
        for c in COLOURS:
            y = g.adj[c][x]
            if y <= x or y in seen:
                continue
            seen.add(y)
            cols = _joining(g, x, y)
            if len(cols) == 4 or (k is not None and len(cols) != k):
                continue
            rest = tuple(c for c in COLOURS if c not in cols)
            if rest not in labels:
                labels[rest] = component_labels(g.order, g.adj, rest)[0]
            if labels[rest][x] != labels[rest][y]:
                out.append(Dipole(x, y, cols))
    return out


def first_dipole(g: ColouredGraph, k: int) -> Dipole | None:
    ds = find_dipoles(g, k)
    return ds[0] if ds else None


def delete_dipole(g: ColouredGraph, d: Dipole) -> ColouredGraph:
    x, y = d.x, d.y
    if not _is_dipole(g, x, y, tuple(d.colours)):
        raise NotADipole(f"{d.token()} is not a dipole")
    if g.order <= 2:
        raise WouldAnnihilate("cannot delete the last two vertices")
    adj = [dict() for _ in COLOURS]
    keep = [v for v in range(g.order) if v not in (x, y)]
    for c in COLOURS:
        m = g.adj[c]
        for v in keep:
            adj[c][v] = m[v]
        if c not in d.colours:
            a, b = m[x], m[y]
            adj[c][a] = b
            adj[c][b] = a
    return _rebuild(g.order, adj, keep)


def add_dipole(g: ColouredGraph, site, colours: Sequence[int]) -> ColouredGraph:
    """Insert a dipole on ``colours``; it is the inverse of :func:`delete_dipole`.

    ``site`` is either a vertex ``v`` (the new dipole is inserted on the edges
    at ``v`` of the remaining colours) or a sequence of ``(u, w)`` edges, one
    per remaining colour in increasing colour order; ``u`` ends are attached to
    the first new vertex.  The new vertices are numbered ``order`` and
    ``order + 1``.
    """
    cols = tuple(sorted(set(colours)))
    if not 1 <= len(cols) <= 3:
        raise NotADipole("a dipole involves one to three colours")
    rest = [c for c in COLOURS if c not in cols]
    if isinstance(site, int):
        edges = [(site, g.adj[c][site]) for c in rest]
    else:
        edges = [tuple(e) for e in site]
    if len(edges) != len(rest):
        raise NotADipole("need one edge per remaining colour")
    n = g.order
    x, y = n, n + 1
    adj = [list(m) + [0, 0] for m in g.adj]
    for c in cols:
        adj[c][x] = y
        adj[c][y] = x
    for c, (u, w) in zip(rest, edges):
        if g.adj[c][u] != w:
            raise NotADipole(f"({u},{w}) is not a {c}-coloured edge")
        adj[c][u] = x
        adj[c][x] = u
        adj[c][w] = y
        adj[c][y] = w
    h = ColouredGraph(n + 2, adj)
    if not _is_dipole(h, x, y, cols):
        raise NotADipole("insertion site does not produce a dipole")
    return h


# --- generalized dipoles ---------------------------------------------------

_SPLITS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def _path(g: ColouredGraph, x0: int, i: int, j: int) -> list[int]:
    """Vertices after ``x0`` on its {i,j}-cycle, starting along colour i."""
    out = []
    v = g.adj[i][x0]
    c = j
    while v != x0:
        out.append(v)
        v = g.adj[c][v]
        c = i if c == j else j
    return out


def _gd_at(g: ColouredGraph, x0: int, split) -> GeneralizedDipole | None:
    (i, j), (h, k) = split
    xs = _path(g, x0, i, j)
    ys = _path(g, x0, h, k)
    sx, sy = set(xs), set(ys)
    if sx & sy:
        return None
    # the product construction needs Theta's only internal edges to be the two cycles
    for v in xs:
        if g.adj[h][v] in sx or g.adj[k][v] in sx or g.adj[h][v] in sy or g.adj[k][v] in sy:
            return None
    for v in ys:
        if g.adj[i][v] in sy or g.adj[j][v] in sy or g.adj[i][v] in sx or g.adj[j][v] in sx:
            return None
    return GeneralizedDipole(x0, (i, j, h, k), tuple(xs), tuple(ys))


def find_generalized_dipoles(g: ColouredGraph, max_m: int, max_n: int) -> list[GeneralizedDipole]:
    """(m,n)-dipoles with ``m <= max_m`` and ``n <= max_n``, ordered by pivot then colour split.

    ``m`` belongs to the cycle through colour 0.
    """
    out = []
    if max_m <= 0 or max_n <= 0:
        return out
    for split in _SPLITS:
        (i, j), (h, k) = split
        labx, _ = cycle_labels(g.order, g.adj[i], g.adj[j])
        laby, _ = cycle_labels(g.order, g.adj[h], g.adj[k])
        sizex: dict[int, int] = {}
        sizey: dict[int, int] = {}
        for v in range(g.order):
            sizex[labx[v]] = sizex.get(labx[v], 0) + 1
            sizey[laby[v]] = sizey.get(laby[v], 0) + 1
        for x0 in range(g.order):
            if sizex[labx[x0]] - 1 > max_m or sizey[laby[x0]] - 1 > max_n:
                continue
            d = _gd_at(g, x0, split)
            if d is not None:
                out.append(d)
    out.sort(key=lambda d: (d.x0, d.colours))
    return out


def cancel_generalized_dipole(g: ColouredGraph, d: GeneralizedDipole) -> ColouredGraph:
    """Replace the two cycles by the product of the paths ``x1..xm`` and ``y1..yn``.

    Product vertices ``(x_t, y_s)`` are numbered row-major after the surviving
    vertices.
    """
    i, j, h, k = d.colours
    chk = _gd_at(g, d.x0, ((i, j), (h, k)))
    if chk is None or chk.xs != d.xs or chk.ys != d.ys:
        raise NotAGeneralizedDipole(f"{d.token()} is not a generalized dipole")
    xs, ys = d.xs, d.ys
    m, n = len(xs), len(ys)
    gone = set(xs) | set(ys) | {d.x0}
    keep = [v for v in range(g.order) if v not in gone]
    xi = {v: t for t, v in enumerate(xs)}
    yi = {v: s for s, v in enumerate(ys)}

    def P(t, s):
        return -1 - (t * n + s)

    adj = [dict() for _ in COLOURS]
    for c in COLOURS:
        for v in keep:
            w = g.adj[c][v]
            if w not in gone:
                adj[c][v] = w
    # x-path edges (colours i, j) copied along every y; y-path edges along every x
    for c in (i, j):
        for v in xs:
            w = g.adj[c][v]
            if w in xi:
                for s in range(n):
                    adj[c][P(xi[v], s)] = P(xi[w], s)
    for c in (h, k):
        for v in ys:
            w = g.adj[c][v]
            if w in yi:
                for t in range(m):
                    adj[c][P(t, yi[v])] = P(t, yi[w])
    # hanging edges: y_s's i/j edges go to row x_1 / x_m, x_r's h/k edges to column y_1 / y_n
    for s, v in enumerate(ys):
        for c, t in ((i, 0), (j, m - 1)):
            z = g.adj[c][v]
            adj[c][z] = P(t, s)
            adj[c][P(t, s)] = z
    for t, v in enumerate(xs):
        for c, s in ((h, 0), (k, n - 1)):
            z = g.adj[c][v]
            adj[c][z] = P(t, s)
            adj[c][P(t, s)] = z
    return _rebuild(g.order, adj, keep, m * n)


# --- rho-pairs -------------------------------------------------------------

def _rho_pairs_adj(order: int, adj, ncol: int, first_only: bool = False) -> list[RhoPair]:
    out = []
    cols = range(ncol)
    labs = {}
    for i in cols:
        for h in cols:
            if h != i:
                labs[i, h] = cycle_labels(order, adj[i], adj[h])[0]
    for i in cols:
        others = [h for h in cols if h != i]
        edges = [(v, adj[i][v]) for v in range(order) if v < adj[i][v]]
        buckets: dict[tuple[int, int, int, int], list[tuple[int, int]]] = {}
        for a, b in combinations(others, 2):
            la, lb = labs[i, a], labs[i, b]
            for e in edges:
                buckets.setdefault((a, b, la[e[0]], lb[e[0]]), []).append(e)
        pairs: set[tuple] = set()
        for key, es in buckets.items():
            if len(es) > 1:
                for e, f in combinations(es, 2):
                    pairs.add((e, f))
        for e, f in sorted(pairs):
            shared = tuple(h for h in others if labs[i, h][e[0]] == labs[i, h][f[0]])
            out.append(RhoPair(i, e, f, len(shared), shared))
            if first_only:
                return out
    return out


def find_rho_pairs(g: ColouredGraph) -> list[RhoPair]:
    """All rho-pairs ordered by (colour, e, f); ``kind`` is 2 or 3."""
    return _rho_pairs_adj(g.order, g.adj, 4)


def is_rigid_adj(order: int, adj, colours: Sequence[int] | None = None) -> bool:
    """No rho-pairs among the given colours (all colours present in ``adj`` by default).

    With three colours this is the seed notion: no two equally coloured
    edges share both bicoloured cycles through them.
    """
    if colours is not None:
        adj = [adj[c] for c in colours]
    return not _rho_pairs_adj(order, adj, len(adj), first_only=True)


def is_rigid(g: ColouredGraph, colours: Sequence[int] | None = None) -> bool:
    return is_rigid_adj(g.order, g.adj, colours)


def _orient(g: ColouredGraph, pair: RhoPair):
    """Orient both edges along the lowest shared {i,j}-cycle; return (a,b),(c,d)."""
    i = pair.colour
    j = pair.shared[0]
    a0 = min(pair.e)
    f_set = set(pair.f)
    v = a0
    c = i
    steps = 0
    first = None
    while True:
        w = g.adj[c][v]
        if c == i and {v, w} == f_set:
            first = (v, w)
            break
        v = w
        c = j if c == i else i
        steps += 1
        if steps > 2 * g.order:
            raise NotARhoPair("edges do not share the cycle")
    return (a0, g.adj[i][a0]), first


def switch_rho_pair(g: ColouredGraph, pair: RhoPair) -> tuple[ColouredGraph, bool]:
    """Replace ``(a,b), (c,d)`` by ``(a,d), (c,b)``; returns (graph, is_rho3)."""
    i = pair.colour
    valid = {(p.e, p.f): p for p in find_rho_pairs(g) if p.colour == i}
    key = (min(pair.e, pair.f), max(pair.e, pair.f))
    if key not in valid:
        raise NotARhoPair(f"{pair.token()} is not a rho-pair")
    pair = valid[key]
    (a, b), (c, d) = _orient(g, pair)
    adj = [list(m) for m in g.adj]
    adj[i][a] = d
    adj[i][d] = a
    adj[i][c] = b
    adj[i][b] = c
    try:
        h = ColouredGraph(g.order, adj)
    except Disconnected as exc:
        raise Disconnects(str(exc)) from exc
    return h, pair.kind == 3


# --- reduction -------------------------------------------------------------

def reduce_to_rigid(g: ColouredGraph, log: MoveLog | None = None) -> tuple[ColouredGraph, MoveLog]:
    """Cancel dipoles (1, then 2, then 3) and switch rho-pairs (rho2 first) until rigid."""
    if log is None:
        log = MoveLog()
    while True:
        done = False
        for k in (1, 2, 3):
            if g.order <= 2:
                break
            d = first_dipole(g, k)
            if d is not None:
                g = delete_dipole(g, d)
                log.record(d.token())
                done = True
                break
        if done:
            continue
        pairs = find_rho_pairs(g)
        if not pairs:
            return g, log
        p2 = [p for p in pairs if p.kind == 2]
        p = p2[0] if p2 else pairs[0]
        g, is3 = switch_rho_pair(g, p)
        log.record(p.token(), is3)


__all__ = [
    "Dipole", "GeneralizedDipole", "RhoPair", "MoveLog", "MoveError", "NotADipole",
    "WouldAnnihilate", "NotAGeneralizedDipole", "NotARhoPair", "Disconnects",
    "find_dipoles", "delete_dipole", "add_dipole", "find_generalized_dipoles",
    "cancel_generalized_dipole", "find_rho_pairs", "is_rigid", "is_rigid_adj",
    "switch_rho_pair", "reduce_to_rigid", "GraphError",
]
