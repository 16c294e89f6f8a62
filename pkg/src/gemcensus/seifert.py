"""Coloured triangulations of Seifert spaces over S^2 with three exceptional fibres.

Layout used throughout:

* A triangulation is a set of tetrahedra with vertices 0..3 and face gluings
  ``(t, f) -> (t2, perm)``: vertex ``i`` of ``t`` goes to ``perm[i]`` of ``t2``
  and the face opposite ``f`` onto the face opposite ``perm[f]``.
* Layered solid tori carry, for every oriented tetrahedron edge ``a -> b``
  (``a < b``), its class in H1 of the solid torus (= Z).  Boundary labels are
  these values read cyclically around a boundary face, so they sum to zero.
* The base solid torus is one tetrahedron with face 012 glued to face 123 by
  ``i -> i+1``; its edge values are 01=12=23=1, 02=13=2, 03=3.
* The pants block is P x S^1 where P is a triangle ``abc`` with all corners
  identified, cut as one prism of three tetrahedra whose top is glued to its
  bottom::

      T0 = [a0 b0 c0 c1]   T1 = [a0 b0 b1 c1]   T2 = [a0 a1 b1 c1]

  The three side squares ``ab``, ``bc``, ``ac`` are the tori where the solid
  tori go; their vertical sides become the regular fibre through the corner.
"""
from __future__ import annotations

import copy
from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd
from typing import Sequence

from .core import ColouredGraph
from .moves import MoveLog, reduce_to_rigid


class SeifertError(ValueError):
    pass


class InvalidParams(SeifertError):
    pass


class NoSuchBoundaryEdge(SeifertError):
    pass


class InvalidSpec(SeifertError):
    pass


PERMS = list(permutations(range(4)))
PERM_INDEX = {p: i for i, p in enumerate(PERMS)}


def _inverse(p):
    q = [0] * 4
    for i, x in enumerate(p):
        q[x] = i
    return tuple(q)


def _sign(p) -> int:
    s = 1
    p = list(p)
    for i in range(4):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def _face(f: int) -> tuple[int, int, int]:
    return tuple(x for x in range(4) if x != f)


@dataclass
class Triangulation:
    ntet: int = 0
    glue: dict = field(default_factory=dict)
    # (t, a, b) with a < b -> H1 value of the edge a->b (layered solid tori only)
    values: dict = field(default_factory=dict)

    def add_tet(self) -> int:
        self.ntet += 1
        return self.ntet - 1

    def join(self, t: int, f: int, t2: int, perm: Sequence[int]):
        perm = tuple(perm)
        f2 = perm[f]
        if (t, f) in self.glue or (t2, f2) in self.glue:
            raise SeifertError(f"face ({t},{f}) or ({t2},{f2}) already glued")
        self.glue[t, f] = (t2, perm)
        self.glue[t2, f2] = (t, _inverse(perm))

    def gluings(self) -> list[tuple[int, int, int, int, tuple[int, ...]]]:
        """Each gluing once as ``(tet, face, tet', face', perm)``."""
        out = []
        for (t, f), (t2, perm) in sorted(self.glue.items()):
            if (t, f) <= (t2, perm[f]):
                out.append((t, f, t2, perm[f], perm))
        return out

    def boundary_faces(self) -> list[tuple[int, int]]:
        return [(t, f) for t in range(self.ntet) for f in range(4) if (t, f) not in self.glue]

    def is_closed(self) -> bool:
        return not self.boundary_faces()

    def edge_classes(self):
        """Union-find over oriented edges; returns ``find((t,a,b)) -> (root, sign)``."""
        parent = {}
        for t in range(self.ntet):
            for a in range(4):
                for b in range(a + 1, 4):
                    parent[t, a, b] = ((t, a, b), 1)

        def find(x):
            s = 1
            path = []
            while parent[x][0] != x:
                path.append(x)
                p, ps = parent[x]
                s *= ps
                x = p
            root = x
            # path compression
            acc = s
            for y in path:
                p, ps = parent[y]
                parent[y] = (root, acc)
                acc *= ps
            return root, s

        def canon(t, a, b):
            return ((t, a, b), 1) if a < b else ((t, b, a), -1)

        bad = False
        for (t, f), (t2, perm) in self.glue.items():
            for a, b in ((x, y) for x in _face(f) for y in _face(f) if x < y):
                e1, s1 = canon(t, a, b)
                e2, s2 = canon(t2, perm[a], perm[b])
                r1, q1 = find(e1)
                r2, q2 = find(e2)
                rel = s1 * q1 * s2 * q2
                if r1 != r2:
                    parent[r1] = (r2, rel)
                elif rel != 1:
                    bad = True
        self._edge_bad = bad
        return find

    def vertex_classes(self):
        parent = {(t, v): (t, v) for t in range(self.ntet) for v in range(4)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (t, f), (t2, perm) in self.glue.items():
            for v in _face(f):
                a, b = find((t, v)), find((t2, perm[v]))
                if a != b:
                    parent[a] = b
        return find

    def is_orientable(self) -> bool:
        o = [0] * self.ntet
        for s in range(self.ntet):
            if o[s]:
                continue
            o[s] = 1
            stack = [s]
            while stack:
                t = stack.pop()
                for f in range(4):
                    if (t, f) not in self.glue:
                        continue
                    t2, perm = self.glue[t, f]
                    want = -o[t] * _sign(perm)
                    if not o[t2]:
                        o[t2] = want
                        stack.append(t2)
                    elif o[t2] != want:
                        return False
        return True

    def edge_consistent(self) -> bool:
        self.edge_classes()
        return not self._edge_bad

    def first_homology(self):
        """Cellular H1 (the 1-skeleton is assumed connected)."""
        from .invariants import abelian_group
        find = self.edge_classes()
        vfind = self.vertex_classes()
        nverts = len({vfind((t, v)) for t in range(self.ntet) for v in range(4)})
        roots = {}
        for t in range(self.ntet):
            for a in range(4):
                for b in range(a + 1, 4):
                    r, _ = find((t, a, b))
                    roots.setdefault(r, len(roots))
        rows = []
        seen = set()
        for t in range(self.ntet):
            for f in range(4):
                if (t, f) in seen:
                    continue
                seen.add((t, f))
                if (t, f) in self.glue:
                    t2, perm = self.glue[t, f]
                    seen.add((t2, perm[f]))
                u, v, w = _face(f)
                row = [0] * len(roots)
                for (x, y), s in (((v, w), 1), ((u, w), -1), ((u, v), 1)):
                    r, q = find((t, x, y))
                    row[roots[r]] += s * q
                rows.append(row)
        res = abelian_group(len(roots), rows)
        # one generator per tree edge of the 1-skeleton dies in H1
        from .invariants import HomologyResult
        return HomologyResult(res.rank - (nverts - 1), res.torsion)

    # --- labelled solid tori ---------------------------------------------

    def value(self, t: int, a: int, b: int) -> int:
        return self.values[t, a, b] if a < b else -self.values[t, b, a]

    def boundary_labels(self) -> dict[tuple[int, int], tuple[int, int, int]]:
        """For each boundary face, values of its sides ``uv, vw, wu`` (``u<v<w``)."""
        out = {}
        for t, f in self.boundary_faces():
            u, v, w = _face(f)
            out[t, f] = (self.value(t, u, v), self.value(t, v, w), self.value(t, w, u))
        return out

    def label_set(self) -> tuple[int, int, int]:
        """Boundary labels normalized to have two positive entries, sorted."""
        (face, labs), *_ = self.boundary_labels().items()
        return _normalize(labs)


def _normalize(labs) -> tuple[int, int, int]:
    labs = tuple(labs)
    if sum(1 for x in labs if x > 0) < 2:
        labs = tuple(-x for x in labs)
    return tuple(sorted(labs))


def _check_params(params) -> tuple[int, int, int]:
    ps = tuple(int(x) for x in params)
    if len(ps) != 3 or sum(ps) != 0:
        raise InvalidParams(f"{params}: parameters must be three integers summing to 0")
    if 0 in ps or gcd(abs(ps[0]), abs(ps[1])) != 1:
        raise InvalidParams(f"{params}: parameters must be nonzero and coprime")
    return _normalize(ps)


def base_lst() -> Triangulation:
    t = Triangulation()
    t.add_tet()
    t.join(0, 3, 0, (1, 2, 3, 0))
    t.values = {(0, 0, 1): 1, (0, 1, 2): 1, (0, 2, 3): 1, (0, 0, 2): 2, (0, 1, 3): 2, (0, 0, 3): 3}
    return t


def _find_edge(t: Triangulation, face, label: int):
    """Side of boundary ``face`` whose value is +-label, as (a, b)."""
    tet, f = face
    u, v, w = _face(f)
    for a, b in ((u, v), (v, w), (u, w)):
        if abs(t.value(tet, a, b)) == abs(label):
            return a, b
    return None


def layering(t: Triangulation, edge_label: int) -> Triangulation:
    """Glue one tetrahedron onto both boundary faces along the boundary edge ``edge_label``.

    New tetrahedron N: face 012 goes onto one boundary face and 013 onto the
    other, its edge 01 onto the chosen edge; faces 023 and 123 form the new
    boundary.
    """
    faces = t.boundary_faces()
    if len(faces) != 2:
        raise SeifertError("layering needs exactly two boundary faces")
    X, Y = faces
    ex, ey = _find_edge(t, X, edge_label), _find_edge(t, Y, edge_label)
    if ex is None or ey is None:
        raise NoSuchBoundaryEdge(f"no boundary edge labelled {edge_label}")
    for swap_x in (False, True):
        for swap_y in (False, True):
            s = copy.deepcopy(t)
            n = s.add_tet()
            xa, xb = (ex[1], ex[0]) if swap_x else ex
            xc = next(v for v in _face(X[1]) if v not in (xa, xb))
            ya, yb = (ey[1], ey[0]) if swap_y else ey
            yc = next(v for v in _face(Y[1]) if v not in (ya, yb))
            px = [0] * 4
            px[0], px[1], px[2], px[3] = xa, xb, xc, X[1]
            py = [0] * 4
            py[0], py[1], py[3], py[2] = ya, yb, yc, Y[1]
            s.join(n, 3, X[0], px)
            s.join(n, 2, Y[0], py)
            if not (s.edge_consistent() and s.is_orientable()):
                continue
            vals = {}
            for (a, b) in ((0, 1), (0, 2), (1, 2)):
                vals[a, b] = t.value(X[0], px[a], px[b])
            for (a, b) in ((0, 3), (1, 3)):
                vals[a, b] = t.value(Y[0], py[a], py[b])
            if vals[0, 1] != t.value(Y[0], py[0], py[1]):
                continue
            vals[2, 3] = vals[0, 3] - vals[0, 2]
            if vals[1, 2] + vals[2, 3] - vals[1, 3] != 0:
                continue
            if vals[2, 3] == 0:
                continue
            for (a, b), val in vals.items():
                s.values[n, a, b] = val
            return s
    raise SeifertError("no consistent layering found")


def lst(params) -> Triangulation:
    """Layered solid torus with boundary label set ``params``."""
    target = _check_params(params)
    a, b = target[1], target[2]
    if (a, b) == (1, 2):
        return base_lst()
    if (a, b) == (1, 1):
        return layering(base_lst(), 3)
    j, k = a, b
    prev = lst((j, k - j, -k))
    return layering(prev, k - j)


# --- pants block and assembly ---------------------------------------------

# squares: list of (tet, face) pairs with local vertex roles (vertical edge, horizontal edge)
_PRISM = [("a0", "b0", "c0", "c1"), ("a0", "b0", "b1", "c1"), ("a0", "a1", "b1", "c1")]


def _local(t: int, name: str) -> int:
    return _PRISM[t].index(name)


def pants_block() -> Triangulation:
    t = Triangulation()
    for _ in range(3):
        t.add_tet()
    t.join(0, 2, 1, (0, 1, 2, 3))
    t.join(1, 1, 2, (0, 1, 2, 3))
    t.join(2, 0, 0, (3, 0, 1, 2))
    return t


def _square_triangles():
    """For squares ab, bc, ac: the two boundary faces with their vertical and
    horizontal sides as local vertex pairs, plus the sign of the horizontal
    side relative to the boundary orientation of P."""
    spec = {
        "ab": (1, [(1, "c1", ("b0", "b1"), ("a0", "b0")), (2, "c1", ("a0", "a1"), ("a1", "b1"))]),
        "bc": (1, [(0, "a0", ("c0", "c1"), ("b0", "c0")), (1, "a0", ("b0", "b1"), ("b1", "c1"))]),
        "ac": (-1, [(0, "b0", ("c0", "c1"), ("a0", "c0")), (2, "b1", ("a0", "a1"), ("a1", "c1"))]),
    }
    out = {}
    for sq, (sign, tris) in spec.items():
        faces = []
        for t, opp, vert, hor in tris:
            faces.append((t, _local(t, opp), tuple(_local(t, v) for v in vert),
                          tuple(_local(t, v) for v in hor)))
        out[sq] = (sign, faces)
    return out


SQUARES = ("ab", "bc", "ac")


@dataclass(frozen=True)
class SeifertSpec:
    """Three LST triples ``(alpha, theta, sigma)``.

    ``modes[i]`` is ``"theta"`` (the fibre is ``(alpha, theta)``) or
    ``"sigma"`` (the fibre is ``(alpha, -sigma)``).  By default ``theta`` is
    used when ``theta > 0``.  ``assemble`` rejects a triple whose requested
    fibre is not realized by either gluing of its solid torus (this happens
    when theta and sigma are both negative).
    """

    triples: tuple[tuple[int, int, int], ...]
    modes: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.triples) != 3:
            raise InvalidSpec("exactly three triples are needed")
        for tr in self.triples:
            if len(tr) != 3 or sum(tr) != 0:
                raise InvalidSpec(f"triple {tr} does not sum to zero")
            try:
                _check_params(tr)
            except InvalidParams as exc:
                raise InvalidSpec(str(exc)) from exc
            if tr[0] <= 0:
                raise InvalidSpec(f"triple {tr}: alpha must be positive")
        modes = self.modes
        if modes is None:
            modes = tuple("theta" if tr[1] > 0 else "sigma" for tr in self.triples)
            object.__setattr__(self, "modes", modes)
        if len(modes) != 3 or any(m not in ("theta", "sigma") for m in modes):
            raise InvalidSpec(f"bad modes {modes}")

    def fibres(self) -> list[tuple[int, int]]:
        return [(a, th if m == "theta" else -sg) for (a, th, sg), m in zip(self.triples, self.modes)]

    @classmethod
    def parse(cls, text: str, modes=None) -> "SeifertSpec":
        import re
        nums = [int(x) for x in re.findall(r"-?\d+", text)]
        if len(nums) != 9:
            raise InvalidSpec(f"expected nine integers, got {len(nums)}")
        return cls(tuple(tuple(nums[i:i + 3]) for i in (0, 3, 6)), modes)


def assemble(spec: SeifertSpec) -> Triangulation:
    """Closed triangulation of (S^2, fibres of ``spec``).

    Each solid torus goes onto a square with the alpha edge on the vertical
    side.  Of the candidate gluings (face order, which remaining edge is
    horizontal) the first consistent, orientable one whose meridian realizes
    the requested fibre is used.  The prism forces the ac diagonal to run the
    other way round, so ab and bc realize ``beta`` in {theta, sigma} and ac
    realizes {-theta, -sigma}; the triples are tried on the squares in every
    order.
    """
    if not isinstance(spec, SeifertSpec):
        spec = SeifertSpec(tuple(tuple(x) for x in spec))
    items = list(zip(spec.triples, (b for _, b in spec.fibres())))
    last = None
    for order in permutations(range(3)):
        try:
            return _assemble([items[i] for i in order])
        except InvalidSpec as exc:
            last = exc
    raise last


def _assemble(items) -> Triangulation:
    K = pants_block()
    squares = _square_triangles()
    for sq, ((alpha, theta, sigma), beta) in zip(SQUARES, items):
        L = lst((alpha, theta, sigma))
        off = K.ntet
        for key, val in L.values.items():
            K.values[key[0] + off, key[1], key[2]] = val
        for (t, f), (t2, perm) in L.glue.items():
            K.glue[t + off, f] = (t2 + off, perm)
        K.ntet += L.ntet
        lfaces = [(t + off, f) for t, f in L.boundary_faces()]
        hsign, tris = squares[sq]
        chosen = None
        for hor, order in product((theta, sigma), ((0, 1), (1, 0))):
            faces = [lfaces[i] for i in order]
            for roles in product(*(_roles(K, lt, lf, alpha, hor) for lt, lf in faces)):
                trial = copy.deepcopy(K)
                fibre = None
                for (lt, lf), (ea, eh), (pt, pf, vert, horz) in zip(faces, roles, tris):
                    perm = _match_face(lf, ea, eh, pf, vert, horz)
                    trial.join(lt, lf, pt, perm)
                    if fibre is None:
                        inv = _inverse(perm)
                        va = trial.value(lt, inv[vert[0]], inv[vert[1]])
                        vh = hsign * trial.value(lt, inv[horz[0]], inv[horz[1]])
                        # meridian is va*q - vh*h up to sign; orientation fixed so beta = vh*sgn(va)
                        fibre = (abs(va), vh if va > 0 else -vh)
                if fibre == (alpha, beta) and trial.edge_consistent() and trial.is_orientable():
                    chosen = trial
                    break
            if chosen is not None:
                break
        if chosen is None:
            raise InvalidSpec(f"LST{(alpha, theta, sigma)} does not realize fibre ({alpha},{beta}) on square {sq}")
        K = chosen
    if not K.is_closed():
        raise InvalidSpec("assembly left boundary faces")
    K.values = {}
    return K


def _roles(K, lt, lf, alpha, hor):
    """Candidate (alpha side, horizontal side) pairs of the LST face (lt, lf)."""
    lv = _face(lf)
    sides = [(lv[0], lv[1]), (lv[1], lv[2]), (lv[0], lv[2])]
    return [(ea, eh) for ea in sides for eh in sides
            if ea != eh and abs(K.value(lt, *ea)) == abs(alpha) and abs(K.value(lt, *eh)) == abs(hor)]


def _match_face(lf, ea, eh, pf, vert, horz):
    """Vertex map from the LST face opposite ``lf`` to the pants face opposite
    ``pf`` taking side ``ea`` onto the vertical side and ``eh`` onto the horizontal one."""
    lv = _face(lf)
    pv = _face(pf)
    opp_a = next(v for v in lv if v not in ea)
    opp_h = next(v for v in lv if v not in eh)
    perm = [0] * 4
    perm[opp_a] = next(v for v in pv if v not in vert)
    perm[opp_h] = next(v for v in pv if v not in horz)
    third = next(v for v in lv if v not in (opp_a, opp_h))
    perm[third] = next(v for v in pv if v in vert and v in horz)
    perm[lf] = pf
    return tuple(perm)


# --- coloured graph --------------------------------------------------------

def barycentric_coloured_graph(t: Triangulation) -> ColouredGraph:
    """Dual graph of the barycentric subdivision: a vertex per (tetrahedron, flag).

    The flag ``pi`` stands for vertex pi0 < edge pi0pi1 < face pi0pi1pi2 < tetrahedron;
    colour c < 3 swaps pi_c and pi_c+1, colour 3 crosses the face opposite pi3.
    """
    if not t.is_closed():
        raise InvalidSpec("triangulation has boundary faces")
    n = 24 * t.ntet
    adj = [[0] * n for _ in range(4)]
    for tet in range(t.ntet):
        for k, p in enumerate(PERMS):
            v = 24 * tet + k
            for c in range(3):
                q = list(p)
                q[c], q[c + 1] = q[c + 1], q[c]
                adj[c][v] = 24 * tet + PERM_INDEX[tuple(q)]
            t2, s = t.glue[tet, p[3]]
            q = tuple(s[x] for x in p)
            adj[3][v] = 24 * t2 + PERM_INDEX[q]
    return ColouredGraph(n, adj)


def crystallize(g: ColouredGraph) -> tuple[ColouredGraph, MoveLog]:
    return reduce_to_rigid(g)


# Seifert spaces and LST triples used to cross-check the construction.
LST_TABLE: list[tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int, int], ...]]] = [
    (((3, 1), (3, 2), (4, -3)), ((3, 1, -4), (3, 2, -5), (4, -7, 3))),
    (((2, 1), (4, 1), (4, -1)), ((2, 1, -3), (4, 1, -5), (4, -5, 1))),
    (((2, 1), (4, 1), (5, -4)), ((2, 1, -3), (4, 1, -5), (5, -9, 4))),
    (((3, 1), (3, 1), (3, 1)), ((3, -2, -1), (3, 1, -4), (3, 1, -4))),
    (((3, 1), (3, 1), (4, -1)), ((3, 1, -4), (3, 1, -4), (4, -5, 1))),
    (((2, 1), (3, 1), (7, -6)), ((2, 1, -3), (3, 1, -4), (7, -13, 6))),
    (((3, 1), (3, 1), (4, -3)), ((3, 1, -4), (3, 1, -4), (4, -7, 3))),
    (((2, 1), (3, 2), (6, -5)), ((2, 1, -3), (3, 2, -5), (6, -11, 5))),
    (((3, 1), (3, 2), (5, -4)), ((3, 1, -4), (3, 2, -5), (5, -9, 4))),
    (((2, 1), (3, 1), (6, -1)), ((2, 1, -3), (3, 1, -4), (6, -7, 1))),
    (((2, 1), (4, 1), (5, -3)), ((2, 1, -3), (4, 1, -5), (5, -8, 3))),
    (((2, 1), (4, 3), (5, -4)), ((2, 1, -3), (4, 3, -7), (5, -9, 4))),
    (((2, 1), (4, 1), (6, -5)), ((2, 1, -3), (4, 1, -5), (6, -11, 5))),
    (((3, 1), (3, 2), (3, -1)), ((3, 1, -4), (3, 2, -5), (3, -4, 1))),
    (((2, 1), (4, 1), (4, 1)), ((2, 1, -3), (4, -3, 1), (4, 1, -5))),
    (((3, 2), (4, 1), (4, -3)), ((3, 2, -5), (4, 1, -5), (4, -7, 3))),
    (((2, 1), (4, 1), (5, -1)), ((2, 1, -3), (4, 1, -5), (5, -6, 1))),
    (((2, 1), (5, 1), (5, -4)), ((2, 1, -3), (5, 1, -6), (5, -9, 4))),
    (((3, 1), (3, 1), (4, 1)), ((3, 1, -4), (3, 1, -4), (4, -3, -1))),
    (((3, 1), (4, 1), (4, -1)), ((3, 1, -4), (4, 1, -5), (4, -5, 1))),
    (((3, 1), (3, 1), (5, -1)), ((3, 1, -4), (3, 1, -4), (5, -6, 1))),
    (((2, 1), (3, 1), (8, -7)), ((2, 1, -3), (3, 1, -4), (8, -15, 7))),
    (((2, 1), (3, 1), (7, -5)), ((2, 1, -3), (3, 1, -4), (7, -12, 5))),
    (((3, 1), (3, 1), (5, -4)), ((3, 1, -4), (3, 1, -4), (5, -9, 4))),
]
