"""Algebraic invariants of the pseudocomplex K(G) dual to a gem.

K(G) has one vertex per 3-residue, one edge per bicoloured cycle, one triangle
per edge of G and one tetrahedron per vertex of G.  In the tetrahedron of a
graph vertex ``v`` the corner labelled ``c`` is the residue of ``v`` missing
colour ``c``, and the side joining corners ``a < b`` is the cycle of ``v`` in
the two colours other than ``a, b``.  Sides are oriented from the smaller
corner label to the larger one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    COLOURS,
    ColouredGraph,
    NotCrystallization,
    component_labels,
    cycle_labels,
    is_manifold_gem,
)


# --- Smith normal form -----------------------------------------------------

def smith_normal_form(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form (each entry divides the next)."""
    A = [list(map(int, r)) for r in rows]
    if not A:
        return []
    nr, nc = len(A), len(A[0])
    diag = []
    t = 0
    while t < nr and t < nc:
        # pivot: smallest nonzero |entry| in the remaining block
        piv = None
        for i in range(t, nr):
            Ai = A[i]
            for j in range(t, nc):
                x = Ai[j]
                if x and (piv is None or abs(x) < piv[0]):
                    piv = (abs(x), i, j)
                    if piv[0] == 1:
                        break
            if piv is not None and piv[0] == 1:
                break
        if piv is None:
            break
        _, i, j = piv
        A[t], A[i] = A[i], A[t]
        if j != t:
            for r in A:
                r[t], r[j] = r[j], r[t]
        while True:
            p = A[t][t]
            dirty = False
            # clear column t
            for i in range(t + 1, nr):
                x = A[i][t]
                if x:
                    q = x // p
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, nc):
                            if At[j]:
                                Ai[j] -= q * At[j]
                    if A[i][t]:
                        dirty = True
            # clear row t
            At = A[t]
            for j in range(t + 1, nc):
                x = At[j]
                if x:
                    q = x // p
                    if q:
                        for r in A[t:]:
                            if r[t]:
                                r[j] -= q * r[t]
                    if At[j]:
                        dirty = True
            if not dirty:
                # divisibility with the rest of the block
                bad = None
                for i in range(t + 1, nr):
                    for j in range(t + 1, nc):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                At = A[t]
                Ab = A[bad]
                for j in range(t, nc):
                    At[j] += Ab[j]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            best = (abs(A[t][t]), t, t)
            for i in range(t + 1, nr):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, nc):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for r in A:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class HomologyResult:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion coefficients must exceed 1")

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return "+".join(parts) if parts else "0"

    @property
    def order(self) -> int:
        """Order of the group (0 when infinite)."""
        if self.rank:
            return 0
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @classmethod
    def parse(cls, text: str) -> "HomologyResult":
        text = text.strip()
        if text == "0":
            return cls(0)
        rank = 0
        tors = []
        for part in text.split("+"):
            if part == "Z":
                rank += 1
            elif part.startswith("Z^"):
                rank += int(part[2:])
            elif part.startswith("Z/"):
                tors.append(int(part[2:]))
            else:
                raise ValueError(f"bad homology term {part!r}")
        return cls(rank, tuple(sorted(tors)))


def abelian_group(ngens: int, relations: Iterable[Sequence[int]]) -> HomologyResult:
    """Group with ``ngens`` generators and the given integer relation rows."""
    rows = [list(r) for r in relations if any(r)]
    diag = smith_normal_form(rows) if rows and ngens else []
    rank = ngens - len(diag)
    tors = tuple(d for d in diag if d > 1)
    return HomologyResult(rank, tors)


# --- K(G) ------------------------------------------------------------------

@dataclass(frozen=True)
class FaceVector:
    vertices: int
    edges: int
    triangles: int
    tetrahedra: int

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.triangles - self.tetrahedra

    def __iter__(self):
        return iter((self.vertices, self.edges, self.triangles, self.tetrahedra))


class _Complex:
    """Cell indexing of K(G)."""

    def __init__(self, g: ColouredGraph):
        n = g.order
        self.g = g
        # vertices: (colour c, residue of the other three colours)
        self.vlab = {}
        self.vbase = {}
        nv = 0
        for c in COLOURS:
            lab, k = component_labels(n, g.adj, [x for x in COLOURS if x != c])
            self.vlab[c] = lab
            self.vbase[c] = nv
            nv += k
        self.nv = nv
        # edges: corners a<b, cycle in the complementary colours
        self.elab = {}
        self.ebase = {}
        ne = 0
        for a in COLOURS:
            for b in COLOURS:
                if a < b:
                    x, y = [c for c in COLOURS if c not in (a, b)]
                    lab, k = cycle_labels(n, g.adj[x], g.adj[y])
                    self.elab[a, b] = lab
                    self.ebase[a, b] = ne
                    ne += k
        self.ne = ne

    def vertex(self, c: int, v: int) -> int:
        return self.vbase[c] + self.vlab[c][v]

    def edge(self, a: int, b: int, v: int) -> int:
        return self.ebase[a, b] + self.elab[a, b][v]

    def edge_ends(self) -> list[tuple[int, int]]:
        ends = [None] * self.ne
        for (a, b), lab in self.elab.items():
            for v in range(self.g.order):
                e = self.ebase[a, b] + lab[v]
                if ends[e] is None:
                    ends[e] = (self.vertex(a, v), self.vertex(b, v))
        return ends

    def triangles(self) -> list[tuple[int, int, int]]:
        """One triangle per edge of G as (side ab, side bc, side ac) with a<b<c its corners."""
        out = []
        for c in COLOURS:
            a, b, d = [x for x in COLOURS if x != c]
            for v in range(self.g.order):
                if v < self.g.adj[c][v]:
                    out.append((self.edge(a, b, v), self.edge(b, d, v), self.edge(a, d, v)))
        return out


def face_vector(g: ColouredGraph) -> FaceVector:
    cx = _Complex(g)
    return FaceVector(cx.nv, cx.ne, 2 * g.order, g.order)


def first_homology(g: ColouredGraph) -> HomologyResult:
    """H1 of K(G) from the cellular chain complex."""
    cx = _Complex(g)
    # K(G) is connected, so the boundary map on edges has rank nv - 1
    rank1 = cx.nv - 1
    rel = []
    for ab, bc, ac in cx.triangles():
        row = [0] * cx.ne
        row[ab] += 1
        row[bc] += 1
        row[ac] -= 1
        rel.append(row)
    diag = smith_normal_form(rel)
    rank = cx.ne - rank1 - len(diag)
    return HomologyResult(rank, tuple(d for d in diag if d > 1))


# --- presentations ---------------------------------------------------------

@dataclass(frozen=True)
class GroupPresentation:
    """Generators ``1..ngens``; a relator is a word of signed generator indices."""

    ngens: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > self.ngens:
                    raise ValueError(f"relator {r} uses an unknown generator")

    def abelianize(self) -> HomologyResult:
        rows = []
        for r in self.relators:
            row = [0] * self.ngens
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return abelian_group(self.ngens, rows)

    def __str__(self):
        return f"{self.ngens}:" + ",".join(_word_str(r) for r in self.relators)


def _word_str(w: Sequence[int]) -> str:
    if not w:
        return "1"
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        e = (j - i) * (1 if w[i] > 0 else -1)
        out.append(f"x{abs(w[i])}" + ("" if e == 1 else f"^{e}"))
        i = j
    return "".join(out)


def _power(w: Sequence[int], e: int) -> list[int]:
    if e >= 0:
        return list(w) * e
    inv = [-x for x in reversed(w)]
    return inv * (-e)


def fundamental_group(g: ColouredGraph) -> GroupPresentation:
    """Edge-path presentation of pi1 of K(G): non-tree edges modulo triangle boundaries."""
    if not is_manifold_gem(g):
        raise NotCrystallization("fundamental group needs a manifold gem")
    cx = _Complex(g)
    ends = cx.edge_ends()
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(cx.nv)]
    for e, (p, q) in enumerate(ends):
        nbrs[p].append((e, q))
        nbrs[q].append((e, p))
    for lst in nbrs:
        lst.sort()
    tree = set()
    seen = [False] * cx.nv
    seen[0] = True
    queue = [0]
    for u in queue:
        for e, w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                tree.add(e)
                queue.append(w)
    gens = {}
    for e in range(cx.ne):
        if e not in tree:
            gens[e] = len(gens) + 1
    rels = []
    for ab, bc, ac in cx.triangles():
        word = []
        for e, s in ((ab, 1), (bc, 1), (ac, -1)):
            if e in gens:
                word.append(s * gens[e])
        rels.append(tuple(_reduce(word)))
    return GroupPresentation(len(gens), tuple(rels))


def _reduce(w: Iterable[int]) -> list[int]:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def _cyclic_reduce(w: list[int]) -> list[int]:
    w = _reduce(w)
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def _canon_relator(w: list[int]) -> tuple[int, ...]:
    """Least cyclic permutation of w or its inverse."""
    if not w:
        return ()
    cands = []
    for u in (w, [-x for x in reversed(w)]):
        for k in range(len(u)):
            cands.append(tuple(u[k:] + u[:k]))
    return min(cands)


def tietze_simplify(p: GroupPresentation, budget: int = 1000) -> GroupPresentation:
    """Greedy Tietze reduction: drop trivial/duplicate relators and eliminate
    generators occurring exactly once in some relator."""
    ngens = p.ngens
    rels = [_cyclic_reduce(list(r)) for r in p.relators]
    steps = 0
    while steps < budget:
        rels = [r for r in rels if r]
        uniq = sorted({_canon_relator(r) for r in rels}, key=lambda r: (len(r), r))
        rels = [list(r) for r in uniq]
        best = None
        for ri, r in enumerate(rels):
            counts: dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for gen in sorted(counts):
                if counts[gen] == 1:
                    key = (len(r), gen)
                    if best is None or key < best[0]:
                        best = (key, ri, gen)
                    break
        if best is None:
            break
        _, ri, gen = best
        r = rels.pop(ri)
        k = next(t for t, x in enumerate(r) if abs(x) == gen)
        rot = r[k:] + r[:k]
        # rot = gen^s * rest = 1  =>  gen = rest^-1 (s=1) or rest (s=-1)
        rest = rot[1:]
        value = [-x for x in reversed(rest)] if rot[0] > 0 else list(rest)
        inv_value = [-x for x in reversed(value)]
        new = []
        for q in rels:
            w = []
            for x in q:
                if x == gen:
                    w.extend(value)
                elif x == -gen:
                    w.extend(inv_value)
                else:
                    w.append(x)
            new.append(w)
        # renumber generators above gen
        def shift(x):
            a = abs(x)
            a2 = a - 1 if a > gen else a
            return a2 if x > 0 else -a2
        rels = [_cyclic_reduce([shift(x) for x in w]) for w in new]
        ngens -= 1
        steps += 1
    rels = [r for r in rels if r]
    uniq = sorted({_canon_relator(r) for r in rels}, key=lambda r: (len(r), r))
    return GroupPresentation(ngens, tuple(uniq))


# --- Seifert presentations -------------------------------------------------

A, B = 1, 2


def seifert_group(kind: str, a1: int = 0, a2: int = 0, a3: int = 0, eps: int | None = None) -> GroupPresentation:
    """Two-generator presentations of the three families (kind ``i``, ``ii``, ``iii``)."""
    if kind == "i":
        if a1 <= 0 or a2 <= 0 or a3 == 0:
            raise ValueError("kind i needs a1, a2 > 0 and a3 != 0")
        r1 = _power([A], a1) + _power([B], -a2)
        r2 = _power([A], a1) + _power([A, B], -a3)
    elif kind == "ii":
        if min(a1, a2, a3) <= 0 or eps not in (1, -1):
            raise ValueError("kind ii needs positive a_i and eps = +-1")
        r1 = _power([A], a3) + _power([B], -a2)
        r2 = _power([A], a3) + _power([-eps * A, eps * B], -a1)
    elif kind == "iii":
        r1 = _power([A], 5) + _power([B], -3)
        r2 = _power([A], 5) + _power([A, -B, -B], 3)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return GroupPresentation(2, (tuple(_reduce(r1)), tuple(_reduce(r2))))


def seifert_fibres(kind: str, a1: int = 0, a2: int = 0, a3: int = 0, eps: int | None = None) -> list[tuple[int, int]]:
    """Unnormalized Seifert invariants of the space whose group ``seifert_group`` presents."""
    if kind == "i":
        e = -a3 // abs(a3)
        return [(a1, 1), (a2, 1), (abs(a3), e)]
    if kind == "ii":
        return [(a1, 1), (a2, -eps), (a3, eps)]
    if kind == "iii":
        return [(3, 1), (3, 1), (5, -4)]
    raise ValueError(f"unknown kind {kind!r}")


def seifert_first_homology(kind: str, a1: int = 0, a2: int = 0, a3: int = 0, eps: int | None = None) -> HomologyResult:
    return seifert_group(kind, a1, a2, a3, eps).abelianize()


def seifert_general_group(fibres: Sequence[tuple[int, int]]) -> GroupPresentation:
    """The standard presentation <q_i, h | [q_i,h], q_i^a_i h^b_i, q_1...q_r> over S^2."""
    r = len(fibres)
    h = r + 1
    rels = []
    for i in range(1, r + 1):
        rels.append((i, h, -i, -h))
    for i, (a, b) in enumerate(fibres, start=1):
        rels.append(tuple(_power([i], a) + _power([h], b)))
    rels.append(tuple(range(1, r + 1)))
    return GroupPresentation(r + 1, tuple(rels))


def seifert_homology(fibres: Sequence[tuple[int, int]]) -> HomologyResult:
    return seifert_general_group(fibres).abelianize()


def _shifted(fibres, reach: int = 3):
    """Fibre lists with the same space: beta_i + k_i alpha_i with sum k_i = 0."""
    fs = list(fibres)
    ks = range(-reach, reach + 1)
    for k1 in ks:
        for k2 in ks:
            k3 = -k1 - k2
            yield [(a, b + k * a) for (a, b), k in zip(fs, (k1, k2, k3))]


def _match_exact(fs):
    from itertools import permutations
    if sorted(fs) == sorted([(3, 1), (3, 1), (5, -4)]):
        return ("iii", 0, 0, 0, None)
    for (x1, x2, x3) in permutations(fs):
        if x1[1] == 1 and x2[1] == 1 and x3[1] in (1, -1):
            return ("i", x1[0], x2[0], -x3[1] * x3[0], None)
    for (x1, x2, x3) in permutations(fs):
        if x1[1] == 1 and x3[1] in (1, -1) and x2[1] == -x3[1]:
            return ("ii", x1[0], x2[0], x3[0], x3[1])
    return None


def match_presentation(fibres: Sequence[tuple[int, int]]):
    """Find a two-generator family presenting the space with ``fibres``.

    The fibres may be reordered, all betas negated (orientation reversal
    keeps the group) and the betas shifted by multiples of their alphas as
    long as the shifts sum to zero.  Returns ``(kind, a1, a2, a3,
    eps)`` or None.
    """
    fs = list(fibres)
    if len(fs) != 3 or any(a <= 0 for a, _ in fs):
        return None
    if any(a == 1 for a, _ in fs):
        return None
    for base in (fs, [(a, -b) for a, b in fs]):
        for cand in _shifted(base):
            hit = _match_exact(cand)
            if hit is not None:
                return hit
    return None


def h1_string(g: ColouredGraph) -> str:
    return str(first_homology(g))

