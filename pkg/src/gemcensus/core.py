"""Four-coloured graphs: the data model, residues, canonical codes and connected sums.

A graph of order ``2p`` is stored as four involutions, one per colour, each a
tuple of length ``2p`` mapping a vertex to its neighbour along that colour.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

COLOURS = (0, 1, 2, 3)
COLOUR_PERMS = tuple(permutations(COLOURS))


class GraphError(ValueError):
    """Base class for invalid coloured graphs."""


class NotInvolution(GraphError):
    pass


class FixedPoint(GraphError):
    pass


class OddOrder(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotCrystallization(GraphError):
    pass


class MalformedCode(ValueError):
    pass


def _check_involutions(order: int, adj: Sequence[Sequence[int]]) -> None:
    if order <= 0 or order % 2:
        raise OddOrder(f"order must be even and positive, got {order}")
    for c, m in enumerate(adj):
        if len(m) != order:
            raise NotInvolution(f"colour {c}: map has length {len(m)}, expected {order}")
        for v, w in enumerate(m):
            if not 0 <= w < order:
                raise NotInvolution(f"colour {c}: vertex {v} maps outside the vertex set")
            if w == v:
                raise FixedPoint(f"colour {c}: vertex {v} is fixed")
            if m[w] != v:
                raise NotInvolution(f"colour {c}: {v}->{w} but {w}->{m[w]}")


def components(order: int, adj: Sequence[Sequence[int]], colours: Iterable[int]) -> list[list[int]]:
    """Connected components of the subgraph spanned by ``colours``.

    Components are sorted lists, ordered by their minimum vertex.
    """
    colours = tuple(colours)
    seen = [False] * order
    out = []
    for s in range(order):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for c in colours:
                w = adj[c][u]
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        out.append(comp)
    return out


def component_labels(order: int, adj: Sequence[Sequence[int]], colours: Iterable[int]) -> tuple[list[int], int]:
    """Label each vertex with the index of its component in ``colours``."""
    colours = tuple(colours)
    lab = [-1] * order
    n = 0
    for s in range(order):
        if lab[s] >= 0:
            continue
        lab[s] = n
        stack = [s]
        while stack:
            u = stack.pop()
            for c in colours:
                w = adj[c][u]
                if lab[w] < 0:
                    lab[w] = n
                    stack.append(w)
        n += 1
    return lab, n


def cycle_labels(order: int, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], int]:
    """Label vertices by the {a,b}-coloured cycle through them."""
    lab = [-1] * order
    n = 0
    for s in range(order):
        if lab[s] >= 0:
            continue
        v = s
        while lab[v] < 0:
            lab[v] = n
            w = a[v]
            lab[w] = n
            v = b[w]
        n += 1
    return lab, n


def count_cycles(order: int, a: Sequence[int], b: Sequence[int]) -> int:
    return cycle_labels(order, a, b)[1]


class ColouredGraph:
    """Immutable 4-regular properly edge-coloured multigraph.

    ``adj[c][v]`` is the vertex joined to ``v`` by the ``c``-coloured edge.
    """

    __slots__ = ("order", "adj", "_code")

    def __init__(self, order: int, adj: Sequence[Sequence[int]], *, check: bool = True,
                 connected: bool = True):
        adj = tuple(tuple(int(x) for x in m) for m in adj)
        if len(adj) != 4:
            raise GraphError(f"expected 4 colour maps, got {len(adj)}")
        if check:
            _check_involutions(order, adj)
            if connected and len(components(order, adj, COLOURS)) != 1:
                raise Disconnected("graph is not connected")
        self.order = order
        self.adj = adj
        self._code = None

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int, int]], **kw) -> "ColouredGraph":
        """Build from ``(u, v, colour)`` triples."""
        adj = [[-1] * order for _ in COLOURS]
        for u, v, c in edges:
            if adj[c][u] >= 0 or adj[c][v] >= 0:
                raise NotInvolution(f"colour {c}: vertex used twice at edge ({u},{v})")
            adj[c][u] = v
            adj[c][v] = u
        for c in COLOURS:
            if -1 in adj[c]:
                raise NotInvolution(f"colour {c}: vertex {adj[c].index(-1)} has no edge")
        return cls(order, adj, **kw)

    def __repr__(self):
        return f"ColouredGraph(order={self.order}, code={self.code()!r})"

    def __eq__(self, other):
        return isinstance(other, ColouredGraph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def edges(self, colour: int | None = None) -> list[tuple[int, int, int]]:
        """Edges as ``(min, max, colour)`` sorted by colour then endpoints."""
        cols = COLOURS if colour is None else (colour,)
        return [(v, self.adj[c][v], c) for c in cols for v in range(self.order) if v < self.adj[c][v]]

    def residues(self, colours: Iterable[int]) -> "ResiduePartition":
        colours = frozenset(colours)
        return ResiduePartition(colours, components(self.order, self.adj, sorted(colours)))

    def g(self, i: int, j: int) -> int:
        """Number of {i,j}-coloured cycles."""
        return count_cycles(self.order, self.adj[i], self.adj[j])

    def code(self) -> "Code":
        if self._code is None:
            self._code = canonical_code(self)
        return self._code

    def relabel(self, vperm: Sequence[int], cperm: Sequence[int] = COLOURS) -> "ColouredGraph":
        """Image under vertex map ``v -> vperm[v]`` and colour map ``c -> cperm[c]``."""
        n = self.order
        adj = [[0] * n for _ in COLOURS]
        for c in COLOURS:
            m = self.adj[c]
            new = adj[cperm[c]]
            for v in range(n):
                new[vperm[v]] = vperm[m[v]]
        return ColouredGraph(n, adj, check=False)


class ResiduePartition:
    __slots__ = ("colour_set", "components")

    def __init__(self, colour_set, comps):
        self.colour_set = frozenset(colour_set)
        self.components = comps

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __repr__(self):
        return f"ResiduePartition({sorted(self.colour_set)}, {self.components})"


def build(order: int, adjacency: Sequence[Sequence[int]]) -> ColouredGraph:
    return ColouredGraph(order, adjacency)


def residues(g: ColouredGraph, colours: Iterable[int]) -> ResiduePartition:
    return g.residues(colours)


def is_contracted(g: ColouredGraph) -> bool:
    for i in COLOURS:
        others = [c for c in COLOURS if c != i]
        if component_labels(g.order, g.adj, others)[1] != 1:
            return False
    return True


def is_bipartite(g: ColouredGraph) -> bool:
    side = [-1] * g.order
    for s in range(g.order):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for c in COLOURS:
                w = g.adj[c][u]
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def residue_euler(g: ColouredGraph, colours: Sequence[int], comp: Sequence[int]) -> int:
    """Euler characteristic v - e + f of the surface a 3-residue bounds."""
    a, b, c = (g.adj[k] for k in colours)
    inside = set(comp)
    v = len(comp)
    f = 0
    for x, y in ((a, b), (a, c), (b, c)):
        seen = set()
        for s in comp:
            if s in seen:
                continue
            f += 1
            u = s
            while u not in seen:
                seen.add(u)
                w = x[u]
                seen.add(w)
                u = y[w]
    assert all(a[u] in inside for u in comp)
    return v - 3 * v // 2 + f


def is_manifold_gem(g: ColouredGraph) -> bool:
    """True iff every 3-residue is a 2-sphere (Euler characteristic 2)."""
    for i in COLOURS:
        cols = [c for c in COLOURS if c != i]
        for comp in components(g.order, g.adj, cols):
            if residue_euler(g, cols, comp) != 2:
                return False
    return True


def is_crystallization(g: ColouredGraph) -> bool:
    return is_contracted(g) and is_manifold_gem(g)


def regular_genus(g: ColouredGraph) -> int:
    if not is_crystallization(g):
        raise NotCrystallization("regular genus formula needs a crystallization")
    return min(g.g(0, i) for i in (1, 2, 3)) - 1


# --- canonical codes -------------------------------------------------------

class Code(str):
    """Canonical code text ``<order>;<w_1>,<w_2>,...``."""

    @property
    def order(self) -> int:
        return int(self.split(";", 1)[0])


def _canonical_sequence(order: int, adj: Sequence[Sequence[int]], perms: Sequence[Sequence[int]]) -> list[int]:
    """Lexicographically least rooted BFS emission over all roots and colour orders.

    ``perms[k]`` lists the original colours in visiting order.
    """
    ncol = len(perms[0])
    total = order * ncol
    best: list[int] | None = None
    for perm in perms:
        maps = [adj[c] for c in perm]
        for root in range(order):
            num = [-1] * order
            num[root] = 0
            queue = [root]
            nxt = 1
            pos = 0
            out = []
            smaller = best is None
            aborted = False
            qi = 0
            while qi < len(queue):
                u = queue[qi]
                qi += 1
                for m in maps:
                    w = m[u]
                    k = num[w]
                    if k < 0:
                        k = num[w] = nxt
                        nxt += 1
                        queue.append(w)
                    if not smaller:
                        b = best[pos]
                        if k > b:
                            aborted = True
                            break
                        if k < b:
                            smaller = True
                    out.append(k)
                    pos += 1
                if aborted:
                    break
            if aborted or len(out) != total:
                # unreachable vertices cannot occur for connected input
                continue
            if smaller:
                best = out
    assert best is not None
    return best


def canonical_sequence(order: int, adj: Sequence[Sequence[int]], ncol: int = 4) -> list[int]:
    perms = list(permutations(range(ncol)))
    return _canonical_sequence(order, adj, perms)


def canonical_code(g: ColouredGraph) -> Code:
    seq = _canonical_sequence(g.order, g.adj, COLOUR_PERMS)
    return Code(f"{g.order};" + ",".join(map(str, seq)))


def parse_code(text: str, ncol: int = 4) -> tuple[int, list[list[int]]]:
    try:
        head, body = text.strip().split(";", 1)
        order = int(head)
        seq = [int(x) for x in body.split(",")] if body else []
    except ValueError as exc:
        raise MalformedCode(f"cannot parse code {text!r}") from exc
    if order <= 0 or len(seq) != order * ncol:
        raise MalformedCode(f"code {text!r}: expected {order * ncol} entries, got {len(seq)}")
    adj = [[seq[ncol * v + c] for v in range(order)] for c in range(ncol)]
    return order, adj


def from_code(c: str, *, check_canonical: bool = True) -> ColouredGraph:
    order, adj = parse_code(c)
    try:
        g = ColouredGraph(order, adj)
    except GraphError as exc:
        raise MalformedCode(f"code does not describe a coloured graph: {exc}") from exc
    if check_canonical:
        if canonical_code(g) != c.strip():
            raise MalformedCode("code is well formed but not canonical")
        g._code = Code(c.strip())
    return g


def colour_isomorphic(g: ColouredGraph, h: ColouredGraph) -> bool:
    return g.order == h.order and g.code() == h.code()


# --- connected sums --------------------------------------------------------

def connected_sum(g1: ColouredGraph, v1: int, g2: ColouredGraph, v2: int) -> ColouredGraph:
    """Remove ``v1`` and ``v2`` and glue the hanging edges colour by colour.

    Vertices of ``g1 - v1`` keep their relative order and come first.
    """
    n1, n2 = g1.order, g2.order
    map1 = {}
    for v in range(n1):
        if v != v1:
            map1[v] = len(map1)
    map2 = {}
    for v in range(n2):
        if v != v2:
            map2[v] = len(map1) + len(map2)
    n = n1 + n2 - 2
    adj = [[-1] * n for _ in COLOURS]
    for c in COLOURS:
        m1, m2 = g1.adj[c], g2.adj[c]
        a = m1[v1]
        b = m2[v2]
        for v, nv in map1.items():
            w = m1[v]
            adj[c][nv] = map2[b] if w == v1 else map1[w]
        for v, nv in map2.items():
            w = m2[v]
            adj[c][nv] = map1[a] if w == v2 else map2[w]
    return ColouredGraph(n, adj)


def _bridges(n: int, nbrs: list[list[tuple[int, int]]]) -> set[int]:
    """Bridge edge ids of a multigraph given as (neighbour, edge id) lists."""
    disc = [-1] * n
    low = [0] * n
    out = set()
    t = 0
    for s in range(n):
        if disc[s] >= 0:
            continue
        disc[s] = low[s] = t
        t += 1
        stack = [(s, -1, iter(nbrs[s]))]
        while stack:
            u, pe, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == pe:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, eid, iter(nbrs[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.add(pe)
    return out


def _cap(g: ColouredGraph, comp: list[int], removed: Sequence[tuple[int, int]]) -> ColouredGraph:
    """Summand on ``comp``: one new vertex takes the hanging end of each removed edge."""
    index = {v: i for i, v in enumerate(comp)}
    cap = len(comp)
    adj = [[-1] * (cap + 1) for _ in COLOURS]
    for c in COLOURS:
        cut = set(removed[c])
        for v in comp:
            w = g.adj[c][v]
            if {v, w} == cut:
                adj[c][index[v]] = cap
                adj[c][cap] = index[v]
            else:
                adj[c][index[v]] = index[w]
    return ColouredGraph(cap + 1, adj)


def split_condition_sharp(g: ColouredGraph) -> tuple[ColouredGraph, ColouredGraph] | None:
    """Undo a connected sum if four edges, one per colour, disconnect ``g``.

    Quadruples are scanned colour 0 outermost, each colour's edges in
    (min, max) order; the first valid split is returned. Both sides must
    have at least 3 vertices, otherwise the split only peels off a copy of
    the 2-vertex sphere.
    """
    n = g.order
    if n < 6:
        return None
    e_by_c = [g.edges(c) for c in COLOURS]
    for e0 in e_by_c[0]:
        for e1 in e_by_c[1]:
            for e2 in e_by_c[2]:
                gone = {(e0[0], e0[1], 0), (e1[0], e1[1], 1), (e2[0], e2[1], 2)}
                nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
                eid = 0
                id3 = {}
                for c in COLOURS:
                    for (u, v, _) in e_by_c[c]:
                        if (u, v, c) in gone:
                            continue
                        nbrs[u].append((v, eid))
                        nbrs[v].append((u, eid))
                        if c == 3:
                            id3[eid] = (u, v)
                        eid += 1
                br = _bridges(n, nbrs)
                cands = sorted(id3[b] for b in br if b in id3)
                for e3 in cands:
                    res = _try_split(g, (e0[:2], e1[:2], e2[:2], e3))
                    if res is not None:
                        return res
    return None


def _try_split(g: ColouredGraph, removed):
    n = g.order
    cut = [set(e) for e in removed]
    side = [-1] * n
    side[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for c in COLOURS:
            w = g.adj[c][u]
            if {u, w} == cut[c]:
                continue
            if side[w] < 0:
                side[w] = 0
                stack.append(w)
    A = [v for v in range(n) if side[v] == 0]
    B = [v for v in range(n) if side[v] != 0]
    if len(A) < 3 or len(B) < 3:
        return None
    sa = set(A)
    for u, v in removed:
        if (u in sa) == (v in sa):
            return None
    if len(components(n, _masked(g, removed), COLOURS)) != 2:
        return None
    return _cap(g, A, removed), _cap(g, B, removed)


def _masked(g, removed):
    """Adjacency with removed edges turned into self-loops (for component search)."""
    adj = [list(m) for m in g.adj]
    for c, (u, v) in enumerate(removed):
        adj[c][u] = u
        adj[c][v] = v
    return adj
