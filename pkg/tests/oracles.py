"""Independent reference computations used by the tests.

Nothing here calls the optimized generator, the package's Smith normal form or
its homology code.  The brute-force catalogue checks every colour-2 matching on
standard colour-0/1 cycles and then every colour-3 matching, with all
conditions evaluated on numpy arrays of matchings.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from gemcensus.core import ColouredGraph, canonical_code


# --- homology via sympy -----------------------------------------------------

def snf_invariants(rows, ncols: int) -> tuple[int, tuple[int, ...]]:
    """(rank of cokernel, torsion) of the integer map given by ``rows``."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return ncols, ()
    m = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(int(m[i, i])) for i in range(min(m.shape)) if m[i, i] != 0]
    return ncols - len(diag), tuple(d for d in diag if d > 1)


def h1_string(rank: int, torsion) -> str:
    parts = []
    if rank:
        parts.append("Z" if rank == 1 else f"Z^{rank}")
    parts += [f"Z/{d}" for d in sorted(torsion)]
    return "+".join(parts) if parts else "0"


def _cycles(adj, cols, n):
    lab = list(range(n))
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            lab[u] = s
            for c in cols:
                w = adj[c][u]
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return lab


def graph_h1(adj) -> str:
    """H1 of the pseudocomplex dual to a 4-coloured graph, by cellular chains.

    A face with vertex colours S at graph vertex v is the residue of the
    complementary colours through v; a colour-d edge is a triangle on the
    other three colours.
    """
    n = len(adj[0])
    cols = range(4)
    vert = {}
    for a in cols:
        lab = _cycles(adj, [c for c in cols if c != a], n)
        for v in range(n):
            vert[a, v] = ("v", a, lab[v])
    edge = {}
    for a, b in itertools.combinations(cols, 2):
        lab = _cycles(adj, [c for c in cols if c not in (a, b)], n)
        for v in range(n):
            edge[a, b, v] = ("e", a, b, lab[v])
    vids = {x: i for i, x in enumerate(sorted(set(vert.values())))}
    eids = {x: i for i, x in enumerate(sorted(set(edge.values())))}
    where = {}
    for (a, b, v), e in edge.items():
        where.setdefault(e, v)
    d1 = []
    for e in sorted(eids):
        _, a, b, _ = e
        v = where[e]
        row = [0] * len(vids)
        row[vids[vert[b, v]]] += 1
        row[vids[vert[a, v]]] -= 1
        d1.append(row)
    d2 = []
    for d in cols:
        a, b, c = (x for x in cols if x != d)
        for v in range(n):
            if adj[d][v] < v:
                continue
            row = [0] * len(eids)
            row[eids[edge[b, c, v]]] += 1
            row[eids[edge[a, c, v]]] -= 1
            row[eids[edge[a, b, v]]] += 1
            d2.append(row)
    rank_d1 = Matrix(d1).rank() if d1 else 0
    free, tors = snf_invariants(d2, len(eids))
    # cokernel of d2 is C1/B1; H1 = Z1/B1 has rank free - rank(d1)
    return h1_string(free - rank_d1, tors)


def seifert_abelian(fibres) -> str:
    """Abelianization of <c_i, h | [c_i,h], c_i^a_i h^b_i, c_1...c_k> by sympy SNF."""
    k = len(fibres)
    rows = []
    for i, (a, b) in enumerate(fibres):
        r = [0] * (k + 1)
        r[i] = a
        r[k] = b
        rows.append(r)
    rows.append([1] * k + [0])
    free, tors = snf_invariants(rows, k + 1)
    return h1_string(free, tors)


# --- brute-force catalogue --------------------------------------------------

@lru_cache(maxsize=None)
def all_matchings(n: int) -> np.ndarray:
    """Every fixed-point-free involution of range(n), one per row."""
    out = []

    def rec(m, free):
        if not free:
            out.append(list(m))
            return
        u = free[0]
        for k in range(1, len(free)):
            v = free[k]
            m[u], m[v] = v, u
            rec(m, free[1:k] + free[k + 1:])

    rec([-1] * n, list(range(n)))
    return np.array(out, dtype=np.int16).reshape(len(out), n)


def _orbits(perms, n):
    """Component labels (minimum vertex) of the group generated by ``perms``."""
    rows = perms[0].shape[0]
    lab = np.broadcast_to(np.arange(n, dtype=np.int16), (rows, n)).copy()
    while True:
        new = lab
        for p in perms:
            new = np.minimum(new, np.take_along_axis(new, p, axis=1))
        new = np.take_along_axis(new, new.astype(np.int64), axis=1)
        if np.array_equal(new, lab):
            return lab
        lab = new


def _count(lab, n):
    return (lab == np.arange(n, dtype=lab.dtype)).sum(axis=1)


def _rows(x, rows):
    return np.broadcast_to(np.asarray(x, dtype=np.int16), (rows, len(x)))


def _distinct(keys):
    s = np.sort(keys, axis=1)
    return 1 + (np.diff(s, axis=1) != 0).sum(axis=1)


def _rigid_mask(adj, n):
    """No two c-edges sharing their {c,i}- and {c,j}-cycles."""
    rows = adj[0].shape[0]
    ncol = len(adj)
    labs = {}
    for c, i in itertools.combinations(range(ncol), 2):
        labs[c, i] = labs[i, c] = _orbits([adj[c], adj[i]], n).astype(np.int32)
    ok = np.ones(rows, dtype=bool)
    for c in range(ncol):
        others = [i for i in range(ncol) if i != c]
        for i, j in itertools.combinations(others, 2):
            keys = labs[c, i] * n + labs[c, j]
            ok &= _distinct(keys) == n // 2
    return ok


def _standard01(parts):
    n = 2 * sum(parts)
    a0 = [v ^ 1 for v in range(n)]
    a1 = [0] * n
    s = 0
    for k in parts:
        vs = list(range(s, s + 2 * k))
        for t in range(k):
            u, w = vs[2 * t + 1], vs[(2 * t + 2) % (2 * k)]
            a1[u], a1[w] = w, u
        s += 2 * k
    return a0, a1


def _partitions(p, least=1):
    if p == 0:
        yield ()
        return
    for k in range(least, p + 1):
        for rest in _partitions(p - k, k):
            yield (k,) + rest


def _canon(adj, ncol):
    """Colour-preserving canonical form: minimum BFS relabelling over start vertices."""
    n = len(adj[0])
    best = None
    for s in range(n):
        new = {s: 0}
        order = [s]
        k = 0
        while k < len(order):
            u = order[k]
            k += 1
            for c in range(ncol):
                w = adj[c][u]
                if w not in new:
                    new[w] = len(order)
                    order.append(w)
        if len(order) < n:
            return None
        form = tuple(new[adj[c][u]] for u in order for c in range(ncol))
        if best is None or form < best:
            best = form
    return best


def brute_seeds(p: int) -> list[tuple[list[int], ...]]:
    """Connected planar rigid 3-coloured graphs on 2p vertices, up to colour-preserving isomorphism."""
    n = 2 * p
    ms = all_matchings(n)
    rows = ms.shape[0]
    seen = {}
    for parts in _partitions(p):
        a0, a1 = _standard01(parts)
        A0, A1 = _rows(a0, rows), _rows(a1, rows)
        g01 = len(parts)
        g02 = _count(_orbits([A0, ms], n), n)
        g12 = _count(_orbits([A1, ms], n), n)
        keep = g01 + g02 + g12 == 2 + p
        conn = _count(_orbits([A0, A1, ms], n), n) == 1
        keep &= conn
        idx = np.nonzero(keep)[0]
        if not len(idx):
            continue
        sub = ms[idx]
        r = len(idx)
        keep2 = _rigid_mask([_rows(a0, r), _rows(a1, r), sub], n)
        for m in sub[keep2]:
            adj = (a0, a1, [int(x) for x in m])
            key = _canon(adj, 3)
            seen.setdefault(key, adj)
    return [seen[k] for k in sorted(seen)]


def brute_catalogue(p: int) -> dict[str, bool]:
    """Canonical code -> bipartite for every rigid genus-two crystallization of order 2p."""
    n = 2 * p
    ms = all_matchings(n)
    rows = ms.shape[0]
    out: dict[str, bool] = {}
    for seed in brute_seeds(p):
        S = [_rows(x, rows) for x in seed]
        g = {}
        for i in range(3):
            g[i, 3] = _count(_orbits([S[i], ms], n), n)
        for i, j in itertools.combinations(range(3), 2):
            g[i, j] = len(set(_cycle_ids(seed[i], seed[j])))
        keep = np.ones(rows, dtype=bool)
        # each residue containing colour 3 is a connected sphere
        for i, j in itertools.combinations(range(3), 2):
            keep &= g[i, j] + g[i, 3] + g[j, 3] == 2 + p
        genus = np.minimum(np.minimum(g[0, 1], g[0, 2]), g[0, 3]) - 1
        keep &= genus == 2
        idx = np.nonzero(keep)[0]
        if not len(idx):
            continue
        sub = ms[idx]
        r = len(idx)
        Ssub = [_rows(x, r) for x in seed]
        for i in range(3):
            others = [Ssub[c] for c in range(3) if c != i]
            keep_c = _count(_orbits(others + [sub], n), n) == 1
            sub, Ssub = sub[keep_c], [x[keep_c] for x in Ssub]
        if not len(sub):
            continue
        sub = sub[_rigid_mask(Ssub + [sub], n)]
        for m in sub:
            full = [list(x) for x in seed] + [[int(x) for x in m]]
            cg = ColouredGraph(n, full)
            out.setdefault(canonical_code(cg), _bipartite(full))
    return out


def _cycle_ids(a, b):
    n = len(a)
    lab = [-1] * n
    k = 0
    for s in range(n):
        if lab[s] >= 0:
            continue
        u = s
        while lab[u] < 0:
            lab[u] = k
            w = a[u]
            lab[w] = k
            u = b[w]
        k += 1
    return lab


def _bipartite(adj) -> bool:
    n = len(adj[0])
    side = [-1] * n
    side[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for c in range(len(adj)):
            w = adj[c][u]
            if side[w] < 0:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return False
    return True


def full_canon(adj) -> tuple:
    """Canonical form under vertex relabelling and colour permutation."""
    return min(_canon([adj[c] for c in perm], len(adj)) for perm in itertools.permutations(range(len(adj))))
