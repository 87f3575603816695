"""Fast fixture-free checks behind ``artifact selftest``."""

from __future__ import annotations

import sys
from fractions import Fraction

from . import formulas as F
from . import graphs as GR
from .ppchar import ppchar
from .scalars import L, MotivicScalar, scalar_specialize
from .symfunc import SymFunc, h, p
from .wreath2 import TwoPartition, two_partitions_of, wreath_order


def _checks():
    yield "scalar product", (L - 2) * (L + 1) == L * L - L - 2
    yield "scalar adams", (L + 1).adams(2) == L * L + 1
    yield "adams composition", MotivicScalar.symbol("s").adams(3).adams(2) == MotivicScalar.symbol("s", 6)
    yield "rank specialization", str(scalar_specialize(L * L + 1, "rank")) == "q^2 + 1"
    yield "skew", p(2).skew((2,)) == 2
    yield "schur expansion", p(1, 1).to_schur() == {(2,): 1, (1, 1): 1}
    yield "plethysm", h(2).plethysm(p(1) + p(2)) == h(2) + p(1, 2) + h(2).adams(2)
    yield "wreath class sizes", all(sum(s for _, s in two_partitions_of(nu)) == wreath_order(nu)
                                    for nu in [(2, 2), (3, 1, 0), (1, 1, 1, 1)])
    edge = GR.Graph(2, [(0, 1)])
    z = ppchar(edge)
    yield "edge character", z.terms == {TwoPartition({(1,): (1, 1)}): Fraction(1, 2),
                                        TwoPartition({(1,): (2,)}): Fraction(1, 2)}
    yield "theta graph automorphisms", GR.Graph(2, [(0, 1)] * 3).aut_order() == 12
    yield "stable graphs of genus 2", len(GR.enumerate_stable_graphs(2)) == 7
    g0 = F.genus_slice(F.theorem_B(F.genus0_inputs(5), 0, 5), 0)
    yield "genus 0, n = 4", g0.degree_part(4).to_schur() == {(4,): L + 1}
    yield "genus 0, n = 5 rank", g0.rank()[5] == L * L + 5 * L + 1
    inp = F.InputSeries.random(1, 3, seed=11)
    yield "Theorem B = GK (g <= 1, N = 3)", F.theorem_B(inp, 1, 3) == F.gk_formula(inp, 1, 3)
    inp = F.InputSeries.random(2, 2, seed=12)
    yield "Theorem A = Theorem B slice (g = 2)", F.theorem_A(2, inp, 2) == F.genus_slice(F.theorem_B(inp, 2, 2), 2)


def run(stream=sys.stdout) -> bool:
    ok = True
    for name, passed in _checks():
        stream.write(f"{'ok  ' if passed else 'FAIL'} {name}\n")
        ok = ok and bool(passed)
    return ok
