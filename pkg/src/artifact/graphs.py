"""Half-edge graphs with optional vertex and edge labels.

A graph on vertices 0..n-1 is given by an edge list; edge i owns half-edges 2i (at its
first endpoint) and 2i+1 (at its second), so the involution is h -> h ^ 1.  Vertex
labels carry genus weights or torus colors, edge labels carry degrees; plain graphs
use 0 everywhere.

Isomorphism testing works on the labeled multigraph: colour refinement, then
individualization over every non-singleton cell.  All leaves of that search are
kept, so the leaves with the minimal code give the vertex automorphisms exactly.
Half-edge automorphisms are lifts of these: permutations of parallel edges with
equal labels, plus independent flips of loops.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .partitions import Partition
from .wreath2 import TwoPartition

MAX_VERTICES = 16
MAX_HALF_EDGES = 32


class ResourceError(RuntimeError):
    """Graph exceeds the configured size bounds."""


class Automorphism:
    __slots__ = ("vperm", "hperm")

    def __init__(self, vperm: Tuple[int, ...], hperm: Tuple[int, ...]):
        self.vperm = vperm
        self.hperm = hperm

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        # (self * other)(x) = self(other(x))
        return Automorphism(tuple(self.vperm[i] for i in other.vperm),
                            tuple(self.hperm[i] for i in other.hperm))

    def inverse(self) -> "Automorphism":
        vi = [0] * len(self.vperm)
        for i, j in enumerate(self.vperm):
            vi[j] = i
        hi = [0] * len(self.hperm)
        for i, j in enumerate(self.hperm):
            hi[j] = i
        return Automorphism(tuple(vi), tuple(hi))

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.hperm == other.hperm and self.vperm == other.vperm

    def __hash__(self):
        return hash((self.vperm, self.hperm))

    def __repr__(self):
        return f"Automorphism(v={self.vperm}, h={self.hperm})"


class Graph:
    """Connected or not, loops and multi-edges allowed."""

    __slots__ = ("n", "edges", "vlabels", "elabels", "_cache")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], vlabels=None, elabels=None):
        self.n = int(n)
        es = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} refers to a missing vertex")
            es.append((u, v))
        self.edges: Tuple[Tuple[int, int], ...] = tuple(es)
        self.vlabels = tuple(vlabels) if vlabels is not None else (0,) * self.n
        self.elabels = tuple(elabels) if elabels is not None else (0,) * len(es)
        if len(self.vlabels) != self.n or len(self.elabels) != len(es):
            raise ValueError("label list length mismatch")
        self._cache: dict = {}

    # half-edge structure
    @property
    def num_half_edges(self) -> int:
        return 2 * len(self.edges)

    def root(self, h: int) -> int:
        return self.edges[h >> 1][h & 1]

    @staticmethod
    def iota(h: int) -> int:
        return h ^ 1

    def half_edges_at(self, v: int) -> List[int]:
        fib = self._cache.get("fibers")
        if fib is None:
            fib = [[] for _ in range(self.n)]
            for i, (a, b) in enumerate(self.edges):
                fib[a].append(2 * i)
                fib[b].append(2 * i + 1)
            self._cache["fibers"] = fib
        return fib[v]

    def valence(self, v: int) -> int:
        return len(self.half_edges_at(v))

    def valences(self) -> List[int]:
        return [self.valence(v) for v in range(self.n)]

    @property
    def nu(self) -> Tuple[int, ...]:
        """Generalized partition of valences, zeros included."""
        return tuple(sorted(self.valences(), reverse=True))

    @property
    def b1(self) -> int:
        return len(self.edges) - self.n + self.num_components()

    def num_components(self) -> int:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(x) for x in range(self.n)})

    def is_connected(self) -> bool:
        return self.n > 0 and self.num_components() == 1

    def loops(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def with_edges(self, extra, extra_labels=None, new_vertices=0, new_vlabels=None) -> "Graph":
        extra = list(extra)
        return type(self)._build(
            self.n + new_vertices,
            self.edges + tuple(extra),
            self.vlabels + tuple(new_vlabels if new_vlabels is not None else (0,) * new_vertices),
            self.elabels + tuple(extra_labels if extra_labels is not None else (0,) * len(extra)),
            self)

    @classmethod
    def _build(cls, n, edges, vlabels, elabels, like=None):
        return cls(n, edges, vlabels, elabels)

    # canonical form
    def _adj(self):
        adj = self._cache.get("adj")
        if adj is None:
            adj = defaultdict(list)
            for (u, v), lab in zip(self.edges, self.elabels):
                a, b = (u, v) if u <= v else (v, u)
                adj[(a, b)].append(lab)
            adj = {k: tuple(sorted(v)) for k, v in adj.items()}
            self._cache["adj"] = adj
        return adj

    def _check_bounds(self):
        if self.n > MAX_VERTICES or self.num_half_edges > MAX_HALF_EDGES:
            raise ResourceError(
                f"graph with {self.n} vertices and {self.num_half_edges} half-edges exceeds the bounds "
                f"({MAX_VERTICES}, {MAX_HALF_EDGES})")

    def _search(self):
        r = self._cache.get("search")
        if r is None:
            self._check_bounds()
            r = _canonical_search(self.n, self.vlabels, self._adj())
            self._cache["search"] = r
        return r

    def certificate(self):
        code, _ = self._search()
        return (type(self).__name__, self.n, code)

    def vertex_automorphisms(self) -> List[Tuple[int, ...]]:
        return self._search()[1]

    def automorphisms(self) -> List[Automorphism]:
        r = self._cache.get("auts")
        if r is None:
            r = _lift_automorphisms(self, self.vertex_automorphisms())
            self._cache["auts"] = r
        return r

    def aut_order(self) -> int:
        r = self._cache.get("aut_order")
        if r is None:
            r = 0
            for vp in self.vertex_automorphisms():
                r += _lift_count(self, vp)
            self._cache["aut_order"] = r
        return r

    def is_isomorphic(self, other: "Graph") -> bool:
        return self.certificate() == other.certificate()

    def relabel(self, vperm: Sequence[int], edge_order: Optional[Sequence[int]] = None, flips=None) -> "Graph":
        """Isomorphic copy: vertex v becomes vperm[v]; edges reordered and optionally reversed."""
        order = list(edge_order) if edge_order is not None else list(range(len(self.edges)))
        flips = flips or [False] * len(self.edges)
        es, ls = [], []
        for k, i in enumerate(order):
            u, v = self.edges[i]
            if flips[k]:
                u, v = v, u
            es.append((vperm[u], vperm[v]))
            ls.append(self.elabels[i])
        vl = [None] * self.n
        for v in range(self.n):
            vl[vperm[v]] = self.vlabels[v]
        return type(self)._build(self.n, es, vl, ls, self)

    def to_json(self) -> dict:
        return {"vertices": [{"label": lab} for lab in self.vlabels],
                "edges": [[u, v] for u, v in self.edges]}

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={list(self.edges)})"


class VGraph(Graph):
    """Graph with a nonnegative genus weight at each vertex."""

    __slots__ = ()

    def __init__(self, n, edges, weights=None, elabels=None):
        super().__init__(n, edges, weights, elabels)
        if any((not isinstance(w, int)) or w < 0 for w in self.vlabels):
            raise ValueError("weights must be nonnegative integers")

    @classmethod
    def _build(cls, n, edges, vlabels, elabels, like=None):
        return cls(n, edges, vlabels, elabels)

    @property
    def weights(self) -> Tuple[int, ...]:
        return self.vlabels

    @property
    def genus(self) -> int:
        return sum(self.vlabels) + self.b1

    def is_stable(self) -> bool:
        return all(2 * w - 2 + self.valence(v) > 0 for v, w in enumerate(self.vlabels))

    def fine_profile(self) -> Dict[int, Tuple[int, ...]]:
        out: Dict[int, List[int]] = defaultdict(list)
        for v, w in enumerate(self.vlabels):
            out[w].append(self.valence(v))
        return {w: tuple(sorted(vs, reverse=True)) for w, vs in sorted(out.items())}

    def to_json(self) -> dict:
        return {"vertices": [{"weight": w} for w in self.vlabels],
                "edges": [[u, v] for u, v in self.edges]}


class TorusGraph:
    """Fixed points and invariant curves of a torus action, with curve classes."""

    def __init__(self, n: int, edges: Iterable[Tuple[int, int, Sequence[int]]]):
        self.n = n
        self.edges: List[Tuple[int, int, Tuple[int, ...]]] = []
        seen = set()
        for a, b, cls in edges:
            if a == b:
                raise ValueError("torus graphs have no loops")
            cls = tuple(int(x) for x in cls)
            if not any(cls):
                raise ValueError("curve classes must be nonzero")
            if any(x < 0 for x in cls):
                raise ValueError("curve classes must be effective (nonnegative)")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError("torus graphs are simple")
            seen.add(key)
            self.edges.append((key[0], key[1], cls))
        dims = {len(c) for _, _, c in self.edges}
        if len(dims) > 1:
            raise ValueError("class vectors must have equal length")
        self.rank = dims.pop() if dims else 1
        self._index = {(a, b): i for i, (a, b, _) in enumerate(self.edges)}

    @classmethod
    def projective_space(cls, r: int) -> "TorusGraph":
        return cls(r + 1, [(a, b, (1,)) for a in range(r + 1) for b in range(a + 1, r + 1)])

    def edge_between(self, a: int, b: int) -> Optional[int]:
        return self._index.get((min(a, b), max(a, b)))

    def edge_class(self, i: int) -> Tuple[int, ...]:
        return self.edges[i][2]

    def neighbors(self, a: int) -> List[int]:
        out = []
        for x, y, _ in self.edges:
            if x == a:
                out.append(y)
            elif y == a:
                out.append(x)
        return sorted(out)

    def to_json(self) -> dict:
        return {"vertices": self.n, "edges": [[a, b] for a, b, _ in self.edges],
                "class": [list(c) for _, _, c in self.edges]}

    @classmethod
    def from_json(cls, data) -> "TorusGraph":
        n = data["vertices"]
        if isinstance(n, list):
            n = len(n)
        edges = data["edges"]
        classes = data.get("class")
        if classes is None:
            classes = [e[2] for e in edges]
        return cls(n, [(e[0], e[1], c) for e, c in zip(edges, classes)])


class DecoratedGraph(Graph):
    """Graph G with a map to a torus graph (vertex colors) and edge degrees delta."""

    __slots__ = ("torus",)

    def __init__(self, n, edges, colors, degrees, torus: TorusGraph):
        super().__init__(n, edges, colors, degrees)
        self.torus = torus
        for (u, v), d in zip(self.edges, self.elabels):
            if d < 1:
                raise ValueError("edge degrees are positive")
            if torus.edge_between(self.vlabels[u], self.vlabels[v]) is None:
                raise ValueError("edge does not map to a torus curve")

    @classmethod
    def _build(cls, n, edges, vlabels, elabels, like=None):
        return cls(n, edges, vlabels, elabels, like.torus)

    @property
    def colors(self):
        return self.vlabels

    @property
    def degrees(self):
        return self.elabels

    def curve_class(self) -> Tuple[int, ...]:
        out = [0] * self.torus.rank
        for (u, v), d in zip(self.edges, self.elabels):
            cls = self.torus.edge_class(self.torus.edge_between(self.vlabels[u], self.vlabels[v]))
            for i, x in enumerate(cls):
                out[i] += d * x
        return tuple(out)

    def to_json(self) -> dict:
        return {"vertices": [{"color": c} for c in self.vlabels],
                "edges": [[u, v, d] for (u, v), d in zip(self.edges, self.elabels)]}


def graph_from_json(data) -> Graph:
    verts = data["vertices"]
    n = verts if isinstance(verts, int) else len(verts)
    edges = [tuple(e[:2]) for e in data["edges"]]
    if isinstance(verts, list) and verts and all("weight" in v for v in verts):
        return VGraph(n, edges, [int(v["weight"]) for v in verts])
    return Graph(n, edges)


# ---------------------------------------------------------------- canonical search

def _refine(n, colors, nbrs):
    while True:
        sigs = []
        for v in range(n):
            sigs.append((colors[v], tuple(sorted((colors[w], lab) for w, lab in nbrs[v]))))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _canonical_search(n, vlabels, adj):
    nbrs: List[List[tuple]] = [[] for _ in range(n)]
    for (a, b), labs in adj.items():
        if a == b:
            continue
        else:
            nbrs[a].append((b, labs))
            nbrs[b].append((a, labs))
    # initial colours: label, valence, loop data
    init = []
    for v in range(n):
        val = sum(len(lab) * (2 if a == b else 1) for (a, b), lab in adj.items() if v in (a, b))
        init.append((vlabels[v], val, adj.get((v, v), ())))
    ranks = {s: i for i, s in enumerate(sorted(set(init)))}
    colors0 = [ranks[s] for s in init]

    plain_nbrs = [[(w, lab) for w, lab in nbrs[v] if w >= 0] for v in range(n)]

    best = [None]
    leaves: List[List[int]] = []

    def leaf_code(order):
        pos = {v: i for i, v in enumerate(order)}
        labs = tuple(vlabels[v] for v in order)
        entries = []
        for (a, b), lab in adj.items():
            i, j = pos[a], pos[b]
            if i > j:
                i, j = j, i
            entries.append((i, j, lab))
        entries.sort()
        return (labs, tuple(entries))

    def rec(colors):
        colors = _refine(n, colors, plain_nbrs)
        cells = defaultdict(list)
        for v, c in enumerate(colors):
            cells[c].append(v)
        if len(cells) == n:
            order = sorted(range(n), key=lambda v: colors[v])
            code = leaf_code(order)
            if best[0] is None or code < best[0]:
                best[0] = code
                leaves.clear()
                leaves.append(order)
            elif code == best[0]:
                leaves.append(order)
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        for v in cells[target]:
            nc = [2 * c + 1 for c in colors]
            nc[v] = 2 * colors[v]
            rec(nc)

    if n == 0:
        return ((), ()), [()]
    rec(colors0)
    ref = leaves[0]
    auts = []
    for order in leaves:
        perm = [0] * n
        for i in range(n):
            perm[ref[i]] = order[i]
        auts.append(tuple(perm))
    auts = sorted(set(auts))
    return best[0], auts


def _edge_classes(G: Graph):
    cls = G._cache.get("eclasses")
    if cls is None:
        cls = defaultdict(list)
        for i, ((u, v), lab) in enumerate(zip(G.edges, G.elabels)):
            a, b = (u, v) if u <= v else (v, u)
            cls[(a, b, lab)].append(i)
        cls = dict(cls)
        G._cache["eclasses"] = cls
    return cls


def _lift_count(G: Graph, vp) -> int:
    from math import factorial
    out = 1
    for (a, b, _), es in _edge_classes(G).items():
        m = len(es)
        out *= factorial(m) * (2 ** m if a == b else 1)
    return out


def _lift_automorphisms(G: Graph, vperms) -> List[Automorphism]:
    classes = _edge_classes(G)
    out = []
    for vp in vperms:
        options = []
        for (a, b, lab), es in classes.items():
            ta, tb = vp[a], vp[b]
            key = (min(ta, tb), max(ta, tb), lab)
            targets = classes[key]
            per = []
            for img in permutations(targets):
                if a == b:
                    for flips in product((0, 1), repeat=len(es)):
                        m = {}
                        for e, f, fl in zip(es, img, flips):
                            m[2 * e] = 2 * f + fl
                            m[2 * e + 1] = 2 * f + (1 - fl)
                        per.append(m)
                else:
                    m = {}
                    for e, f in zip(es, img):
                        # half-edge of e at a must land on the half-edge of f at vp[a]
                        ea = 0 if G.edges[e][0] == a else 1
                        fa = 0 if G.edges[f][0] == ta else 1
                        m[2 * e + ea] = 2 * f + fa
                        m[2 * e + (1 - ea)] = 2 * f + (1 - fa)
                    per.append(m)
            options.append(per)
        for combo in product(*options):
            h = [0] * G.num_half_edges
            for m in combo:
                for x, y in m.items():
                    h[x] = y
            out.append(Automorphism(tuple(vp), tuple(h)))
    return out


def graph_canonical(G: Graph):
    return G.certificate()


def graph_automorphisms(G: Graph) -> List[Automorphism]:
    return G.automorphisms()


# ---------------------------------------------------------------- cycle types

def _local_cycle_type(G: Graph, tau: Automorphism, v: int, j: int) -> Partition:
    fib = G.half_edges_at(v)
    if not fib:
        return ()
    hp = tau.hperm

    def power(h):
        for _ in range(j):
            h = hp[h]
        return h

    seen = set()
    lens = []
    for h in fib:
        if h in seen:
            continue
        k = 0
        x = h
        while x not in seen:
            seen.add(x)
            x = power(x)
            k += 1
        lens.append(k)
    return tuple(sorted(lens, reverse=True))


def _vertex_cycles(vperm) -> List[List[int]]:
    seen = set()
    out = []
    for v in range(len(vperm)):
        if v in seen:
            continue
        cyc = []
        x = v
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = vperm[x]
        out.append(cyc)
    return out


def cycle_type(tau: Automorphism, G: Graph) -> TwoPartition:
    """Theta^tau: each j-cycle of vertices contributes part j to Theta(mu), mu the type of tau^j on a fiber."""
    pairs = []
    for cyc in _vertex_cycles(tau.vperm):
        mu = _local_cycle_type(G, tau, cyc[0], len(cyc))
        pairs.append((mu, (len(cyc),)))
    return TwoPartition(pairs)


def cycle_type_weighted(tau: Automorphism, G: Graph, length: Optional[int] = None) -> Tuple[TwoPartition, ...]:
    """(Theta_0, ..., Theta_g): cycle types restricted to vertices of each weight."""
    pieces: Dict[int, list] = defaultdict(list)
    for cyc in _vertex_cycles(tau.vperm):
        mu = _local_cycle_type(G, tau, cyc[0], len(cyc))
        pieces[G.vlabels[cyc[0]]].append((mu, (len(cyc),)))
    top = max(pieces) + 1 if pieces else 0
    if length is None:
        length = top
    if length < top:
        raise ValueError("tuple length shorter than the largest weight")
    return tuple(TwoPartition(pieces.get(h, ())) for h in range(length))


# ---------------------------------------------------------------- enumeration

def _dedupe_add(store: dict, G: Graph) -> bool:
    c = G.certificate()
    if c in store:
        return False
    store[c] = G
    return True


def _children(G: Graph) -> Iterator[Graph]:
    n = G.n
    for v in range(n):
        yield G.with_edges([(v, v)])
    for u in range(n):
        for v in range(u + 1, n):
            yield G.with_edges([(u, v)])
    for v in range(n):
        yield G.with_edges([(v, n)], new_vertices=1)


def _sort_key(G: Graph):
    return (len(G.edges), G.n, repr(G.certificate()))


def _grow(max_edges: int, max_vertices: Optional[int] = None, max_b1: Optional[int] = None) -> List[Graph]:
    level = {Graph(1, []).certificate(): Graph(1, [])}
    out = list(level.values())
    for _ in range(max_edges):
        nxt: dict = {}
        for G in level.values():
            for H in _children(G):
                if max_vertices is not None and H.n > max_vertices:
                    continue
                if max_b1 is not None and H.b1 > max_b1:
                    continue
                _dedupe_add(nxt, H)
        level = nxt
        out.extend(level.values())
    out.sort(key=_sort_key)
    return out


def enumerate_connected_multigraphs(max_edges: int, min_valence: int = 0) -> List[Graph]:
    """One representative per class of connected multigraphs with at most max_edges edges."""
    if max_edges < 0:
        return []
    if max_edges > 10:
        raise ResourceError("max_edges beyond the configured bound (10)")
    return [G for G in _grow(max_edges) if min(G.valences()) >= min_valence]


_STABLE_CACHE: Dict[int, List[VGraph]] = {}


def _weight_assignments(n: int, total: int, floors: List[int]) -> Iterator[Tuple[int, ...]]:
    rest = total - sum(floors)
    if rest < 0:
        return

    def rec(i, left):
        if i == n - 1:
            yield (left,)
            return
        for x in range(left + 1):
            for tail in rec(i + 1, left - x):
                yield (x,) + tail

    if n == 0:
        if rest == 0:
            yield ()
        return
    for extra in rec(0, rest):
        yield tuple(f + x for f, x in zip(floors, extra))


def enumerate_stable_graphs(g: int) -> List[VGraph]:
    """Iso-classes of connected stable graphs of genus g >= 2."""
    if g < 2:
        raise ValueError("stable graphs are enumerated for g >= 2")
    if g in _STABLE_CACHE:
        return list(_STABLE_CACHE[g])
    shapes = _grow(3 * g - 3, max_vertices=2 * g - 2, max_b1=g)
    store: dict = {}
    for G in shapes:
        vals = G.valences()
        floors = [2 if k == 0 else 1 if k in (1, 2) else 0 for k in vals]
        if G.b1 + sum(floors) > g:
            continue
        for w in _weight_assignments(G.n, g - G.b1, floors):
            _dedupe_add(store, VGraph(G.n, G.edges, w))
    out = sorted(store.values(), key=lambda H: (len(H.edges), H.n, repr(H.certificate())))
    _STABLE_CACHE[g] = out
    return list(out)


def subdivide(G: VGraph) -> VGraph:
    """Insert one weight-0 vertex in the middle of every edge."""
    n = G.n
    edges = []
    for i, (u, v) in enumerate(G.edges):
        x = n + i
        edges.append((u, x))
        edges.append((x, v))
    return VGraph(n + len(G.edges), edges, tuple(G.vlabels) + (0,) * len(G.edges))


def stabilize(G: VGraph) -> VGraph:
    """Smooth away weight-0 valence-2 vertices that are not the base of a loop."""
    n = G.n
    weights = list(G.vlabels)
    edges = [list(e) for e in G.edges]
    alive = [True] * n
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not alive[v] or weights[v] != 0:
                continue
            inc = [i for i, e in enumerate(edges) if e is not None and v in e]
            if len(inc) != 2 or any(edges[i][0] == edges[i][1] for i in inc):
                continue
            a = [x for x in edges[inc[0]] if x != v][0]
            b = [x for x in edges[inc[1]] if x != v][0]
            edges[inc[0]] = [a, b]
            edges[inc[1]] = None
            alive[v] = False
            changed = True
    keep = [v for v in range(n) if alive[v]]
    idx = {v: i for i, v in enumerate(keep)}
    es = [(idx[e[0]], idx[e[1]]) for e in edges if e is not None]
    return VGraph(len(keep), es, [weights[v] for v in keep])


def subdivided_stable_graphs(g: int) -> List[VGraph]:
    return [subdivide(G) for G in enumerate_stable_graphs(g)]


def filter_graph_genus(graphs: Iterable[VGraph], gamma: int) -> List[VGraph]:
    return [G for G in graphs if G.b1 == gamma]


def core_graphs(gamma: int) -> List[Graph]:
    """Connected graphs with b1 = gamma >= 2 and every valence at least 3."""
    if gamma < 2:
        return []
    return [Graph(G.n, G.edges) for G in enumerate_stable_graphs(gamma) if not any(G.vlabels)]


def _subdivision_closure(seeds: List[Graph], accept) -> List[Graph]:
    """All graphs reachable by subdividing edges and attaching pendant vertices, pruned by accept."""
    store: dict = {}
    frontier = []
    for G in seeds:
        if accept(G) and _dedupe_add(store, G):
            frontier.append(G)
    while frontier:
        nxt = []
        for G in frontier:
            for H in _closure_children(G):
                if accept(H) and _dedupe_add(store, H):
                    nxt.append(H)
        frontier = nxt
    return sorted(store.values(), key=_sort_key)


def _closure_children(G: Graph) -> Iterator[Graph]:
    n = G.n
    for v in range(n):
        yield G.with_edges([(v, n)], new_vertices=1)
    seen = set()
    for i, (u, v) in enumerate(G.edges):
        key = (min(u, v), max(u, v), G.elabels[i])
        if key in seen:
            continue
        seen.add(key)
        rest = [e for j, e in enumerate(G.edges) if j != i]
        yield type(G)._build(n + 1, rest + [(u, n), (n, v)], G.vlabels + (0,), (0,) * (len(rest) + 2), G)


def leftover_cost(G: Graph) -> int:
    """Lower bound for 2g - 2 + (residual degree) over all vertex insertions on G."""
    c = [0, 0, 0]
    for k in G.valences():
        if k < 3:
            c[k] += 1
    return 2 * (G.b1 - 1) + 3 * c[0] + 2 * c[1] + c[2]


def thmB_graphs(g_max: int, N: int) -> List[Graph]:
    """Connected graphs that can contribute to genus <= g_max, degree <= N.

    A vertex of valence k carrying a_h leaves residual degree at least max(0, 3-2h-k), so
    its share of 2g-2+n is at least 3, 2, 1, 0 for k = 0, 1, 2, >=3.  Summing gives
    leftover_cost(G) <= 2*g_max - 2 + N, and b1 <= g_max.  Both are monotone along
    subdivision and pendant attachment, so the closure of the cores can be pruned.
    """
    W = 2 * g_max - 2 + N
    seeds: List[Graph] = [Graph(1, []), Graph(1, [(0, 0)])]
    for gamma in range(2, g_max + 1):
        seeds.extend(core_graphs(gamma))

    def accept(G):
        return G.b1 <= g_max and leftover_cost(G) <= W

    return _subdivision_closure(seeds, accept)


def cycle_graph(k: int) -> Graph:
    """The cycle with k vertices (k = 1 is the loop)."""
    if k == 1:
        return Graph(1, [(0, 0)])
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def subdivisions(G: Graph, max_total: int) -> List[Graph]:
    """All iso-classes obtained by subdividing the edges of G with at most max_total new vertices."""
    out: dict = {}
    m = len(G.edges)

    def rec(i, left, counts):
        if i == m:
            n = G.n
            es = []
            for (u, v), k in zip(G.edges, counts):
                chain = [u] + list(range(n, n + k)) + [v]
                n += k
                es.extend(zip(chain, chain[1:]))
            _dedupe_add(out, Graph(n, es))
            return
        for k in range(left + 1):
            rec(i + 1, left - k, counts + [k])

    rec(0, max_total, [])
    return sorted(out.values(), key=_sort_key)


def enumerate_decorated(T: TorusGraph, beta: Sequence[int], max_edges: Optional[int] = None) -> List[DecoratedGraph]:
    """Connected (G, f, delta) over T with total class beta; edgeless graphs excluded."""
    beta = tuple(int(x) for x in beta)
    if len(beta) != T.rank:
        raise ValueError("class vector has the wrong length")
    if not any(beta) or not T.edges:
        return []

    def fits(G: DecoratedGraph):
        c = G.curve_class()
        return all(x <= y for x, y in zip(c, beta))

    store: dict = {}
    frontier = []
    for a in range(T.n):
        G = DecoratedGraph(1, [], [a], [], T)
        store[G.certificate()] = G
        frontier.append(G)
    while frontier:
        nxt = []
        for G in frontier:
            if max_edges is not None and len(G.edges) >= max_edges:
                continue
            for H in _decorated_children(G, beta):
                if fits(H) and _dedupe_add(store, H):
                    nxt.append(H)
        frontier = nxt
    out = [G for G in store.values() if G.edges and G.curve_class() == beta]
    return sorted(out, key=_sort_key)


def _decorated_children(G: DecoratedGraph, beta) -> Iterator[DecoratedGraph]:
    T = G.torus
    top = max(beta)
    n = G.n
    for v in range(n):
        for b in T.neighbors(G.vlabels[v]):
            for d in range(1, top + 1):
                yield DecoratedGraph(n + 1, G.edges + ((v, n),), G.vlabels + (b,), G.elabels + (d,), T)
    for u in range(n):
        for v in range(u + 1, n):
            if T.edge_between(G.vlabels[u], G.vlabels[v]) is None:
                continue
            for d in range(1, top + 1):
                yield DecoratedGraph(n, G.edges + ((u, v),), G.vlabels, G.elabels + (d,), T)


def chromatic_polynomial_value(n: int, edges: Sequence[Tuple[int, int]], k: int) -> int:
    """Number of proper k-colourings, by deletion-contraction on a simple graph."""
    simple = set()
    for u, v in edges:
        if u == v:
            return 0
        simple.add((min(u, v), max(u, v)))
    return _chrom(n, frozenset(simple), k)


def chromatic_polynomial(n: int, edges: Sequence[Tuple[int, int]]) -> List[int]:
    """Coefficients (constant first) of the chromatic polynomial in the number of colours."""
    simple = set()
    for u, v in edges:
        if u == v:
            return [0]
        simple.add((min(u, v), max(u, v)))
    return _chrom_poly(n, frozenset(simple))


@lru_cache(maxsize=None)
def _chrom_poly(n, edges) -> List[int]:
    if not edges:
        return [0] * n + [1]
    e = min(edges)
    rest = edges - {e}
    u, v = e
    merged = set()
    for a, b in rest:
        a = u if a == v else a
        b = u if b == v else b
        a = a - 1 if a > v else a
        b = b - 1 if b > v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    big = _chrom_poly(n, rest)
    small = _chrom_poly(n - 1, frozenset(merged))
    out = list(big)
    for i, c in enumerate(small):
        out[i] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _chrom(n, edges, k):
    if not edges:
        return k ** n
    e = min(edges)
    rest = edges - {e}
    u, v = e
    # contract v into u and relabel down
    merged = set()
    for a, b in rest:
        a = u if a == v else a
        b = u if b == v else b
        a = a - 1 if a > v else a
        b = b - 1 if b > v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return _chrom(n, rest, k) - _chrom(n - 1, frozenset(merged), k)


__all__ = [
    "Graph", "VGraph", "DecoratedGraph", "TorusGraph", "Automorphism", "ResourceError",
    "graph_canonical", "graph_automorphisms", "cycle_type", "cycle_type_weighted",
    "enumerate_connected_multigraphs", "enumerate_stable_graphs", "subdivide", "stabilize",
    "subdivided_stable_graphs", "filter_graph_genus", "core_graphs", "thmB_graphs",
    "cycle_graph", "subdivisions", "enumerate_decorated", "chromatic_polynomial_value",
    "chromatic_polynomial",
    "leftover_cost", "graph_from_json",
]
