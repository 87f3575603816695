import random
from fractions import Fraction
from math import comb

import pytest

from artifact import graphs as GR
from artifact.graphs import Graph, TorusGraph, VGraph
from artifact.ppchar import (cycle_type_counts, orbisum_K, orbisum_K_gamma, orbisum_K_table,
                             orbisum_maps, orbisum_maps_table, orbisum_O, orbisum_O_table, ppchar,
                             ppchar_weighted)
from artifact.symfunc import SymFunc
from artifact.wreath2 import TwoPartition as T, two_partitions_of, w2_forget, wreath_order
import oracles

EDGE_ID = T({(1,): (1, 1)})
EDGE_SWAP = T({(1,): (2,)})
LOOP_ID = T({(1, 1): (1,)})
LOOP_FLIP = T({(2,): (1,)})


def random_graph(seed, max_vertices=6, max_edges=8):
    """Random connected multigraph; at most two loops per vertex and triple edges, to keep Aut small."""
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    mult = {e: 1 for e in edges}
    for _ in range(4 * max_edges):
        if len(edges) >= max_edges or (edges and rng.random() < 0.25):
            break
        u, v = sorted((rng.randrange(n), rng.randrange(n)))
        if mult.get((u, v), 0) < (2 if u == v else 3):
            mult[(u, v)] = mult.get((u, v), 0) + 1
            edges.append((u, v))
    return Graph(n, edges)


def test_examples():
    assert ppchar(Graph(2, [(0, 1)])).terms == {EDGE_ID: Fraction(1, 2), EDGE_SWAP: Fraction(1, 2)}
    assert ppchar(Graph(1, [(0, 0)])).terms == {LOOP_ID: Fraction(1, 2), LOOP_FLIP: Fraction(1, 2)}
    assert ppchar(Graph(1, [])).terms == {T({(): (1,)}): 1}


@pytest.mark.parametrize("G", GR.enumerate_connected_multigraphs(4), ids=repr)
def test_coefficients_are_aut_fractions(G):
    z = ppchar(G).terms
    order = G.aut_order()
    classes = dict(two_partitions_of(G.nu))
    assert sum(z.values()) == 1
    ident = [tau for tau in G.automorphisms() if tau.hperm == tuple(range(G.num_half_edges))]
    assert len(ident) == 1
    assert z[GR.cycle_type(ident[0], G)] == Fraction(1, order)
    for th, c in z.items():
        assert th in classes
        assert c == Fraction(cycle_type_counts(G)[th], order)
    assert z == oracles.induced_ppchar(G.n, G.edges)


@pytest.mark.parametrize("seed", range(50))
def test_vertex_cycle_index(seed):
    G = random_graph(seed)
    phi1 = w2_forget(ppchar(G), "vertices")
    expect = SymFunc(oracles.vertex_cycle_index(G.n, G.edges))
    assert phi1 == expect


@pytest.mark.parametrize("seed", range(20))
def test_half_edge_cycle_index(seed):
    G = random_graph(seed, max_vertices=4, max_edges=4)
    phi2 = w2_forget(ppchar(G), "half-edges")
    assert phi2 == SymFunc(oracles.half_edge_cycle_index(G.n, G.edges))


def test_weighted_mass_and_refinement():
    for G in GR.subdivided_stable_graphs(2) + GR.subdivided_stable_graphs(3):
        w = ppchar_weighted(G, 4)
        assert sum(w.values()) == 1
        for tup in w:
            merged = T()
            for th in tup:
                merged = merged + th
            assert merged.norm == G.num_half_edges
            assert merged.profile == G.nu


def test_O_examples():
    assert orbisum_O(EDGE_ID) == Fraction(1, 2)
    assert orbisum_O(LOOP_ID) == Fraction(1, 2)
    assert orbisum_O(T({(1,): (1,)})) == 0


def test_O_sums_to_class_counts():
    table = orbisum_O_table(4)
    for m in range(5):
        total = sum(c for th, c in table.items() if th.norm == 2 * m)
        assert total == len(oracles.multigraph_classes(m))


def test_O_profile_path_matches_table():
    table = orbisum_O_table(4)
    for th, c in table.items():
        assert orbisum_O(th) == c


def test_K_examples():
    # the single weight-2 vertex: only the empty 2-partition at weights 0 and 1
    point = (T(), T(), T({(): (1,)}))
    assert orbisum_K(2, point) == 1
    trees = orbisum_K_table(2, 0)
    assert sum(trees.values()) == 2
    assert orbisum_K_gamma(2, 0, point) == 1
    odd = (T({(1,): (1,)}), T(), T())
    assert orbisum_K(2, odd) == 0
    total = orbisum_K_table(2)
    assert sum(total.values()) == len(GR.enumerate_stable_graphs(2))


def test_K_gamma_partition():
    for g in (2, 3):
        full = orbisum_K_table(g)
        acc = {}
        for gamma in range(g + 1):
            for tup, c in orbisum_K_table(g, gamma).items():
                acc[tup] = acc.get(tup, 0) + c
        assert acc == full


def test_maps_examples():
    for r in (1, 2, 3):
        Pr = TorusGraph.projective_space(r)
        assert orbisum_maps(Pr, (1,), EDGE_ID) == comb(r + 1, 2)
        assert orbisum_maps(Pr, (1,), EDGE_SWAP) == 0
    assert orbisum_maps_table(TorusGraph.projective_space(2), (0,)) == {}
