"""Brute-force reference computations used to check the library.

Nothing here imports graph canonical forms or automorphism code from the
package; everything is done by exhaustive search over small labelled objects.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from artifact import partitions as P
from artifact.scalars import L, MotivicScalar
from artifact.wreath2 import TwoPartition


# ------------------------------------------------------------------ labelled multigraphs

def canon_edges(n, edges):
    """Minimum sorted edge list over all vertex relabellings (isomorphism invariant)."""
    best = None
    for perm in permutations(range(n)):
        es = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or es < best:
            best = es
    return (n, best)


def canon_weighted(n, edges, weights):
    best = None
    for perm in permutations(range(n)):
        w = [0] * n
        for v in range(n):
            w[perm[v]] = weights[v]
        es = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        key = (tuple(w), es)
        if best is None or key < best:
            best = key
    return (n, best)


def connected(n, edges):
    seen = {0}
    stack = [0]
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    return len(seen) == n


def multigraph_classes(num_edges):
    """Iso-classes of connected multigraphs with exactly num_edges edges, by exhaustion."""
    out = set()
    for n in range(1, num_edges + 2):
        slots = [(u, v) for u in range(n) for v in range(u, n)]
        for es in combinations_with_replacement(slots, num_edges):
            if connected(n, es):
                out.add(canon_edges(n, es))
    return out


def stable_tree_classes(g):
    """Stable weighted trees of genus g, from Pruefer sequences."""
    out = set()
    for n in range(1, 2 * g - 1):
        for edges in labelled_trees(n):
            val = Counter()
            for u, v in edges:
                val[u] += 1
                val[v] += 1
            for w in product(range(g + 1), repeat=n):
                if sum(w) != g:
                    continue
                if all(2 * w[v] - 2 + val[v] > 0 for v in range(n)):
                    out.add(canon_weighted(n, edges, w))
    return out


def labelled_trees(n):
    if n == 1:
        yield ()
        return
    if n == 2:
        yield ((0, 1),)
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [v for v in range(n) if degree[v] == 1]
        edges.append((u, v))
        yield tuple(edges)


# ------------------------------------------------------------------ automorphisms by search

def fibers(n, edges):
    """Half-edge 2i sits at edges[i][0], 2i+1 at edges[i][1]."""
    fib = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        fib[u].append(2 * i)
        fib[v].append(2 * i + 1)
    return fib


def brute_automorphisms(n, edges, vlabels=None):
    """All (vperm, hperm) commuting with the root map and the involution h -> h^1."""
    vlabels = vlabels or (0,) * n
    fib = fibers(n, edges)
    H = 2 * len(edges)
    out = []
    for vp in permutations(range(n)):
        if any(vlabels[v] != vlabels[vp[v]] or len(fib[v]) != len(fib[vp[v]]) for v in range(n)):
            continue
        choices = [permutations(fib[vp[v]]) for v in range(n)]
        for images in product(*choices):
            hp = [None] * H
            for v in range(n):
                for h, x in zip(fib[v], images[v]):
                    hp[h] = x
            if all(hp[h ^ 1] == hp[h] ^ 1 for h in range(H)):
                out.append((tuple(vp), tuple(hp)))
    return out


def vertex_automorphisms(n, edges, vlabels=None):
    vlabels = vlabels or (0,) * n
    mult = Counter(tuple(sorted(e)) for e in edges)
    out = []
    for vp in permutations(range(n)):
        if any(vlabels[v] != vlabels[vp[v]] for v in range(n)):
            continue
        img = Counter(tuple(sorted((vp[u], vp[v]))) for u, v in edges)
        if img == mult:
            out.append(vp)
    return out


def perm_cycle_type(perm):
    seen = set()
    out = []
    for s in range(len(perm)):
        if s in seen:
            continue
        k = 0
        x = s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def theta_of(vp, hp, fib):
    """Cycle type of a block permutation: for each vertex j-cycle, the type of hp^j on one fiber."""
    pairs = []
    seen = set()
    for v in range(len(vp)):
        if v in seen:
            continue
        cyc = [v]
        seen.add(v)
        x = vp[v]
        while x != v:
            cyc.append(x)
            seen.add(x)
            x = vp[x]
        j = len(cyc)
        local = {}
        for h in fib[v]:
            y = h
            for _ in range(j):
                y = hp[y]
            local[h] = y
        pos = {h: i for i, h in enumerate(fib[v])}
        mu = perm_cycle_type([pos[local[h]] for h in fib[v]]) if fib[v] else ()
        pairs.append((mu, (j,)))
    return TwoPartition(pairs)


# ------------------------------------------------------------------ the group S_nu

def block_layout(nu):
    """Vertices with valences nu, half-edges numbered consecutively by vertex."""
    fib = []
    h = 0
    for k in nu:
        fib.append(list(range(h, h + k)))
        h += k
    return fib, h


def wreath_elements(nu):
    """Every element of S_nu as (vperm, hperm)."""
    fib, H = block_layout(nu)
    n = len(nu)
    for vp in permutations(range(n)):
        if any(nu[v] != nu[vp[v]] for v in range(n)):
            continue
        for images in product(*[permutations(fib[vp[v]]) for v in range(n)]):
            hp = [None] * H
            for v in range(n):
                for h, x in zip(fib[v], images[v]):
                    hp[h] = x
            yield tuple(vp), tuple(hp)


def compose(a, b):
    """(a b)(x) = a(b(x)) on pairs (vperm, hperm)."""
    return (tuple(a[0][i] for i in b[0]), tuple(a[1][i] for i in b[1]))


def invert(a):
    vi = [0] * len(a[0])
    for i, j in enumerate(a[0]):
        vi[j] = i
    hi = [0] * len(a[1])
    for i, j in enumerate(a[1]):
        hi[j] = i
    return (tuple(vi), tuple(hi))


def conjugacy_classes(nu):
    """Orbits of S_nu on itself under conjugation."""
    elems = list(wreath_elements(nu))
    left = set(elems)
    classes = []
    while left:
        x = next(iter(left))
        orbit = {compose(compose(g, x), invert(g)) for g in elems}
        classes.append(orbit)
        left -= orbit
    return classes


# ------------------------------------------------------------------ induced characters

def perfect_matchings(items):
    if not items:
        yield ()
        return
    a = items[0]
    for i in range(1, len(items)):
        b = items[i]
        rest = items[1:i] + items[i + 1:]
        for m in perfect_matchings(rest):
            yield ((a, b),) + m


def induced_ppchar(n, edges):
    """Frobenius characteristic of Ind_{Aut G}^{S_nu} 1, via fixed points on labelled structures.

    S_nu acts on involutions of the half-edge set by conjugation.  The orbit of G's
    own involution is S_nu / Aut(G), so the permutation character on that orbit is
    the induced character.
    """
    val = [0] * n
    for u, v in edges:
        val[u] += 1
        val[v] += 1
    order = sorted(range(n), key=lambda v: -val[v])
    nu = tuple(val[v] for v in order)
    fib, H = block_layout(nu)
    # place G's half-edges into the blocks
    slot = {v: iter(fib[i]) for i, v in enumerate(order)}
    pairs = [(next(slot[u]), next(slot[v])) for u, v in edges]
    iota = [0] * H
    for a, b in pairs:
        iota[a], iota[b] = b, a
    elems = list(wreath_elements(nu))
    orbit = {tuple(_conj_involution(hp, iota)) for _, hp in elems}
    counts = Counter()
    chi = {}
    for vp, hp in elems:
        th = theta_of(vp, hp, fib)
        counts[th] += 1
        if th not in chi:
            chi[th] = sum(1 for s in orbit if tuple(_conj_involution(hp, s)) == s)
    total = len(elems)
    return {th: Fraction(chi[th] * c, total) for th, c in counts.items() if chi[th]}


def _conj_involution(hp, iota):
    out = [0] * len(iota)
    for h, x in enumerate(iota):
        out[hp[h]] = hp[x]
    return out


def vertex_cycle_index(n, edges):
    """Classical cycle index of Aut(G) acting on vertices."""
    auts = vertex_automorphisms(n, edges)
    acc = Counter(perm_cycle_type(vp) for vp in auts)
    return {mu: Fraction(c, len(auts)) for mu, c in acc.items()}


def half_edge_cycle_index(n, edges):
    auts = brute_automorphisms(n, edges)
    acc = Counter(perm_cycle_type(hp) for _, hp in auts)
    return {mu: Fraction(c, len(auts)) for mu, c in acc.items()}


# ------------------------------------------------------------------ genus zero

def open_m0n(k):
    """e(M_{0,k}) = (L-2)(L-3)...(L-k+2)."""
    out = MotivicScalar.one()
    for j in range(2, k - 1):
        out = out * (L - j)
    return out


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def rooted_trees(leaves, memo=None):
    """Sum over stable rooted trees on the given leaves of the product of open strata."""
    memo = {} if memo is None else memo
    key = tuple(leaves)
    if key in memo:
        return memo[key]
    total = MotivicScalar.zero()
    for part in set_partitions(list(leaves)):
        if len(part) < 2:
            continue
        term = open_m0n(len(part) + 1)
        for block in part:
            if len(block) >= 2:
                term = term * rooted_trees(sorted(block), memo)
        total = total + term
    memo[key] = total
    return total


def euler_m0n_bar(n):
    """e(Mbar_{0,n}) by summing over stable trees with n labelled legs."""
    if n == 3:
        return MotivicScalar.one()
    return rooted_trees(list(range(n - 1)))


def pair_partition_character():
    """Frobenius characteristic of S_4 permuting the three pairings of {0,1,2,3}."""
    pairings = [frozenset(frozenset(p) for p in m) for m in perfect_matchings([0, 1, 2, 3])]
    acc = Counter()
    for s in permutations(range(4)):
        fixed = sum(1 for m in pairings if frozenset(frozenset(s[x] for x in p) for p in m) == m)
        acc[perm_cycle_type(s)] += fixed
    return {mu: Fraction(c, factorial(4)) for mu, c in acc.items() if c}


def powersum_to_schur(coeffs, n):
    """<f, s_lam> for f = sum c_mu p_mu, via characters."""
    out = {}
    for lam in P.partitions(n):
        v = sum(Fraction(P.character(lam, mu)) * c for mu, c in coeffs.items())
        if v:
            out[lam] = v
    return out
