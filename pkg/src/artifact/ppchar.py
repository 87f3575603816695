"""Polya-Petersen characters and the orbisum tables built from them."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import graphs as GR
from .graphs import DecoratedGraph, Graph, TorusGraph, VGraph
from .wreath2 import TwoPartition, W2Elem


def cycle_type_counts(G: Graph) -> Dict[TwoPartition, int]:
    """|Aut^Theta(G)| for every Theta realized by an automorphism."""
    cached = G._cache.get("ct_counts")
    if cached is None:
        cached = defaultdict(int)
        for tau in G.automorphisms():
            cached[GR.cycle_type(tau, G)] += 1
        cached = dict(cached)
        G._cache["ct_counts"] = cached
    return cached


def ppchar(G: Graph) -> W2Elem:
    """zeta_G = (1/|Aut G|) sum_tau p_{Theta^tau}."""
    order = G.aut_order()
    return W2Elem({th: Fraction(k, order) for th, k in cycle_type_counts(G).items()})


def ppchar_decorated(G: DecoratedGraph) -> W2Elem:
    """Average over Aut(G, f, delta); cycle types are read on the underlying graph."""
    return ppchar(G)


def ppchar_weighted(G: VGraph, length: Optional[int] = None) -> Dict[Tuple[TwoPartition, ...], Fraction]:
    key = ("ct_weighted", length)
    counts = G._cache.get(key)
    if counts is None:
        counts = defaultdict(int)
        for tau in G.automorphisms():
            counts[GR.cycle_type_weighted(tau, G, length)] += 1
        counts = dict(counts)
        G._cache[key] = counts
    order = G.aut_order()
    return {tup: Fraction(k, order) for tup, k in counts.items()}


# ---------------------------------------------------------------- orbisums

def _profile_family(nu: Tuple[int, ...]) -> List[Graph]:
    """Every connected multigraph whose valence multiset is nu."""
    m2 = sum(nu)
    if m2 % 2:
        return []
    m = m2 // 2
    b1 = m - len(nu) + 1
    if b1 < 0 or not nu:
        return []
    c = [0, 0, 0]
    for k in nu:
        if k < 3:
            c[k] += 1
    cost = 2 * (b1 - 1) + 3 * c[0] + 2 * c[1] + c[2]
    N = cost - 2 * b1 + 2
    return [G for G in _family(b1, N) if G.nu == nu]


_FAMILIES: Dict[Tuple[int, int], List[Graph]] = {}


def _family(g_max: int, N: int) -> List[Graph]:
    key = (g_max, N)
    if key not in _FAMILIES:
        _FAMILIES[key] = GR.thmB_graphs(g_max, N)
    return _FAMILIES[key]


_O_CACHE: Dict[Tuple[int, ...], Dict[TwoPartition, Fraction]] = {}


def orbisum_O_profile(nu: Sequence[int]) -> Dict[TwoPartition, Fraction]:
    """O(Theta) for every Theta with profile nu, memoized per profile."""
    nu = tuple(sorted(nu, reverse=True))
    table = _O_CACHE.get(nu)
    if table is None:
        acc: Dict[TwoPartition, Fraction] = defaultdict(Fraction)
        for G in _profile_family(nu):
            order = G.aut_order()
            for th, k in cycle_type_counts(G).items():
                acc[th] += Fraction(k, order)
        table = dict(acc)
        _O_CACHE[nu] = table
    return table


def orbisum_O(theta: TwoPartition) -> Fraction:
    """O(Theta) = sum over connected multigraphs G of |Aut^Theta(G)| / |Aut(G)|."""
    if theta.norm % 2:
        return Fraction(0)
    return orbisum_O_profile(theta.profile).get(theta, Fraction(0))


def orbisum_O_table(max_edges: int) -> Dict[TwoPartition, Fraction]:
    """All nonzero O(Theta) with ||Theta|| <= 2 * max_edges, from the plain multigraph stream."""
    acc: Dict[TwoPartition, Fraction] = defaultdict(Fraction)
    for G in GR.enumerate_connected_multigraphs(max_edges):
        order = G.aut_order()
        for th, k in cycle_type_counts(G).items():
            acc[th] += Fraction(k, order)
    return dict(sorted(acc.items(), key=lambda kv: kv[0].sort_key()))


def _K_table(g: int, gamma: Optional[int]) -> Dict[Tuple[TwoPartition, ...], Fraction]:
    graphs = GR.subdivided_stable_graphs(g)
    if gamma is not None:
        graphs = GR.filter_graph_genus(graphs, gamma)
    acc: Dict[Tuple[TwoPartition, ...], Fraction] = defaultdict(Fraction)
    for G in graphs:
        for tup, c in ppchar_weighted(G, g + 1).items():
            acc[tup] += c
    return dict(acc)


_K_CACHE: Dict[Tuple[int, Optional[int]], dict] = {}


def orbisum_K_table(g: int, gamma: Optional[int] = None):
    key = (g, gamma)
    if key not in _K_CACHE:
        if g < 2:
            raise ValueError("K is defined for g >= 2")
        _K_CACHE[key] = _K_table(g, gamma)
    return _K_CACHE[key]


def _pad(tup: Sequence[TwoPartition], g: int) -> Tuple[TwoPartition, ...]:
    tup = tuple(tup)
    if len(tup) > g + 1:
        if any(t.pairs for t in tup[g + 1:]):
            return None
        tup = tup[:g + 1]
    return tup + (TwoPartition(),) * (g + 1 - len(tup))


def orbisum_K(g: int, tup: Sequence[TwoPartition]) -> Fraction:
    t = _pad(tup, g)
    if t is None:
        return Fraction(0)
    return orbisum_K_table(g).get(t, Fraction(0))


def orbisum_K_gamma(g: int, gamma: int, tup: Sequence[TwoPartition]) -> Fraction:
    t = _pad(tup, g)
    if t is None:
        return Fraction(0)
    return orbisum_K_table(g, gamma).get(t, Fraction(0))


def orbisum_maps_table(T: TorusGraph, beta) -> Dict[TwoPartition, Fraction]:
    acc: Dict[TwoPartition, Fraction] = defaultdict(Fraction)
    for G in GR.enumerate_decorated(T, beta):
        for th, c in ppchar(G).terms.items():
            acc[th] += c
    return dict(sorted(acc.items(), key=lambda kv: kv[0].sort_key()))


def orbisum_maps(T: TorusGraph, beta, theta: TwoPartition) -> Fraction:
    return orbisum_maps_table(T, beta).get(theta, Fraction(0))
