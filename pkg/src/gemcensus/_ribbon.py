"""Backtracking search for a new colour class keeping given 3-residues planar.

Each residue spanned by two existing colours ``a, b`` and the new colour is
tracked as a ribbon graph.  Planar graphs with even faces are bipartite, so
every vertex carries a phase: phase +1 uses the rotation ``a -> b -> new`` and
phase -1 the reverse.  A new edge between two components always keeps the
surface a union of spheres (after flipping one side's phase if needed); an
edge inside one component must join two corners of a common face with
opposite phases.  Every node of the search tree is therefore a planar
partial embedding.

With ``rigid=True`` the search also rejects partial matchings that already
contain a rho-pair: for an existing colour ``c``, every {c,new}-path keeps a
bitmask, per other existing colour ``d``, of the {c,d}-cycles its c-edges lie
on; two paths may only merge if those masks are disjoint.  New-colour edges
are compared once their bicoloured cycles close.
"""
from __future__ import annotations

from typing import Callable, Iterator, Sequence

from .core import cycle_labels


class RibbonSearch:
    def __init__(self, order: int, adj: Sequence[Sequence[int]], pairs: Sequence[tuple[int, int]],
                 *, rigid: bool = False, allow: Callable[[int, int], bool] | None = None):
        self.n = order
        self.adj = [list(m) for m in adj]
        self.pairs = list(pairs)
        self.allow = allow
        self.rigid = rigid
        self.new = [-1] * order
        self.comp = []
        self.phase = []
        self.ncomp = []
        for a, b in self.pairs:
            comp = [-1] * order
            phase = [0] * order
            k = 0
            for s in range(order):
                if comp[s] >= 0:
                    continue
                v, ph = s, 1
                while comp[v] < 0:
                    comp[v] = k
                    phase[v] = ph
                    w = self.adj[a][v]
                    comp[w] = k
                    phase[w] = -ph
                    v = self.adj[b][w]
                k += 1
            self.comp.append(comp)
            self.phase.append(phase)
            self.ncomp.append(k)
        self.old = sorted({c for pr in self.pairs for c in pr})
        if rigid:
            self._init_rigid()

    # -- rigidity bookkeeping ---------------------------------------------

    def _init_rigid(self):
        n = self.n
        adj = self.adj
        # end[c][v]: far end of the {c,new}-path through unmatched v
        self.end = {c: list(adj[c]) for c in self.old}
        self.masks = {}
        for c in self.old:
            ms = []
            for d in self.old:
                if d == c:
                    continue
                lab, _ = cycle_labels(n, adj[c], adj[d])
                ms.append([1 << lab[v] for v in range(n)])
            self.masks[c] = ms
        # closed-cycle id of each new-colour edge (keyed by min endpoint), per old colour
        self.ncyc = {c: {} for c in self.old}
        self.ncount = 0

    def _rigid_join(self, u: int, v: int):
        """Update path data for new edge (u, v); return undo log or None if a rho-pair appears."""
        log = []
        end = self.end
        adj = self.adj
        new = self.new
        closed = []
        for c in self.old:
            e = end[c]
            x, y = e[u], e[v]
            ms = self.masks[c]
            if x == v:
                closed.append(c)
                continue
            for m in ms:
                if m[u] & m[v]:
                    self._undo_log(log)
                    return None
            log.append(("end", c, x, e[x]))
            log.append(("end", c, y, e[y]))
            e[x] = y
            e[y] = x
            for k, m in enumerate(ms):
                merged = m[u] | m[v]
                log.append(("mask", c, k, x, m[x]))
                log.append(("mask", c, k, y, m[y]))
                m[x] = merged
                m[y] = merged
        for c in closed:
            edges = []
            w = u
            while True:
                edges.append(min(w, new[w]))
                w = adj[c][new[w]]
                if w == u:
                    break
            self.ncount += 1
            cid = self.ncount
            table = self.ncyc[c]
            for f in edges:
                log.append(("ncyc", c, f, table.get(f)))
                table[f] = cid
            for i, f in enumerate(edges):
                for g in edges[i + 1:]:
                    for c2 in self.old:
                        if c2 == c:
                            continue
                        t2 = self.ncyc[c2]
                        if f in t2 and t2.get(f) == t2.get(g):
                            self._undo_log(log)
                            return None
        return log

    def _undo_log(self, log):
        for item in reversed(log):
            if item[0] == "end":
                _, c, x, val = item
                self.end[c][x] = val
            elif item[0] == "mask":
                _, c, k, x, val = item
                self.masks[c][k][x] = val
            else:
                _, c, f, val = item
                if val is None:
                    del self.ncyc[c][f]
                else:
                    self.ncyc[c][f] = val

    # -- planarity ---------------------------------------------------------

    def _face_corners(self, r: int, u: int) -> tuple[set[int], int]:
        """Unmatched vertices whose insertion corner lies on u's corner face, and their phase sum."""
        a, b = self.pairs[r]
        adj = self.adj
        new = self.new
        phase = self.phase[r]
        start = (u, a if phase[u] > 0 else b)
        corners = set()
        bal = 0
        v, c = start
        while True:
            if new[v] < 0 and c == (a if phase[v] > 0 else b):
                corners.add(v)
                bal += phase[v]
            w = new[v] if c == -1 else adj[c][v]
            if new[w] < 0:
                nc = b if c == a else a
            elif phase[w] > 0:
                nc = b if c == a else (-1 if c == b else a)
            else:
                nc = -1 if c == a else (b if c == -1 else a)
            v, c = w, nc
            if (v, c) == start:
                break
        return corners, bal

    def candidates(self, u: int) -> list[int]:
        n = self.n
        new = self.new
        ok = [new[v] < 0 and v != u for v in range(n)]
        for r in range(len(self.pairs)):
            comp = self.comp[r]
            phase = self.phase[r]
            corners, bal = self._face_corners(r, u)
            if self.ncomp[r] == 1 and bal != 0:
                return []
            cu, pu = comp[u], phase[u]
            for v in range(n):
                if ok[v] and comp[v] == cu and (phase[v] == pu or v not in corners):
                    ok[v] = False
        out = [v for v in range(n) if ok[v]]
        if self.allow is not None:
            out = [v for v in out if self.allow(u, v)]
        return out

    def _join(self, u: int, v: int):
        saved = []
        self.new[u] = v
        self.new[v] = u
        for r in range(len(self.pairs)):
            comp = self.comp[r]
            if comp[u] != comp[v]:
                phase = self.phase[r]
                saved.append((r, comp[:], phase[:]))
                cv, cu = comp[v], comp[u]
                flip = phase[u] == phase[v]
                for w in range(self.n):
                    if comp[w] == cv:
                        comp[w] = cu
                        if flip:
                            phase[w] = -phase[w]
                self.ncomp[r] -= 1
        return saved

    def _undo(self, u: int, v: int, saved):
        self.new[u] = -1
        self.new[v] = -1
        for r, comp, phase in saved:
            self.comp[r] = comp
            self.phase[r] = phase
            self.ncomp[r] += 1

    def run(self) -> Iterator[list[int]]:
        """Yield every completed matching (as an involution list) with all residues connected planar."""
        new = self.new
        try:
            u = new.index(-1)
        except ValueError:
            if all(k == 1 for k in self.ncomp):
                yield list(new)
            return
        for v in self.candidates(u):
            if self.rigid:
                new[u] = v
                new[v] = u
                log = self._rigid_join(u, v)
                new[u] = new[v] = -1
                if log is None:
                    continue
            saved = self._join(u, v)
            yield from self.run()
            self._undo(u, v, saved)
            if self.rigid:
                self._undo_log(log)
