"""Graph-sum formulas for the Serre characteristics of compactified moduli.

Conventions.  The input a = sum_h a_h t^(h-1) and the output abar = sum_g abar_g t^(g-1)
are GradedSeries truncated by the weight 2t + degree (equivalently 2g - 2 + n).  A
computation for genus <= g_max and degree <= N works at weight W = 2*g_max - 2 + N,
needs a_h to degree W + 2 - 2h, and returns every genus <= g_max term of weight <= W.
Inputs of genus above g_max never influence that range and are treated as zero.
"""

from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from . import graphs as GR
from . import partitions as P
from .ppchar import orbisum_K_table, orbisum_O_profile, ppchar, ppchar_weighted
from .scalars import L, MotivicScalar
from .symfunc import GradedSeries, SymFunc, TruncationError, _cmin
from .wreath2 import Action, UndefinedInsertionError, W2Elem, two_partitions_of

PROVENANCES = ("oracle", "fixture", "random-formal", "user")


class SupportError(ValueError):
    """An input entry has terms outside n > 2 - 2h."""


def weight_bound(g_max: int, N: int) -> int:
    return 2 * g_max - 2 + N


def required_input_degrees(g_max: int, N: int) -> Dict[int, int]:
    """Degree to which each a_h must be known for genus <= g_max, degree <= N."""
    W = weight_bound(g_max, N)
    return {h: W + 2 - 2 * h for h in range(g_max + 1)}


def a_priori_bounds(g_max: int, N: int) -> dict:
    """Everything the engine derives from (g_max, N) before touching any input."""
    W = weight_bound(g_max, N)
    return {
        "g_max": g_max,
        "N": N,
        "weight": W,
        "input_degrees": required_input_degrees(g_max, N),
        "max_b1": g_max,
        "leftover_cost": W,
        "stable_graph_edges": {g: 3 * g - 3 for g in range(2, g_max + 1)},
        "stable_graph_vertices": {g: 2 * g - 2 for g in range(2, g_max + 1)},
    }


class InputSeries:
    """The family {a_h}: one SymFunc per genus, each with its own degree truncation."""

    def __init__(self, entries: Mapping[int, SymFunc], provenance: Optional[Mapping[int, str]] = None,
                 allow_unsupported: bool = False):
        self.entries: Dict[int, SymFunc] = {}
        for h, f in entries.items():
            h = int(h)
            if h < 0:
                raise ValueError("genus must be nonnegative")
            if not isinstance(f, SymFunc):
                raise TypeError("entries must be SymFunc values")
            self.entries[h] = f
        self.provenance = {h: (provenance or {}).get(h, "user") for h in self.entries}
        for h, tag in self.provenance.items():
            if tag not in PROVENANCES:
                raise ValueError(f"unknown provenance {tag!r}")
        self.allow_unsupported = allow_unsupported
        if not allow_unsupported:
            self.validate()

    def validate(self):
        for h, f in self.entries.items():
            for lam in f.terms():
                if not sum(lam) > 2 - 2 * h:
                    raise SupportError(
                        f"a_{h} has a term in degree {sum(lam)}; genus {h} needs n > {2 - 2 * h}")

    @property
    def h_max(self) -> int:
        return max(self.entries, default=-1)

    def get(self, h: int) -> SymFunc:
        f = self.entries.get(h)
        return f if f is not None else SymFunc.zero()

    def degree_cap(self, h: int):
        f = self.entries.get(h)
        return None if f is None else f.cap

    def check(self, g_max: int, N: int, genera: Optional[Iterable[int]] = None):
        """Refuse to run with under-truncated inputs, reporting the required degrees."""
        need = required_input_degrees(g_max, N)
        short = []
        for h in (genera if genera is not None else need):
            f = self.entries.get(h)
            if f is not None and f.cap is not None and f.cap < need[h]:
                short.append(f"a_{h} known to degree {f.cap}, needs {need[h]}")
        if short:
            raise TruncationError("insufficient input truncation: " + "; ".join(short))

    def graded(self, W: Optional[int] = None, g_max: Optional[int] = None) -> GradedSeries:
        """sum_h a_h t^(h-1), truncated at weight W (genera above g_max dropped)."""
        coeffs = {}
        for h, f in self.entries.items():
            if g_max is not None and h > g_max:
                continue
            coeffs[h - 1] = f
        if not coeffs:
            return GradedSeries.zero(W)
        out = GradedSeries.from_coefficients(coeffs)
        if W is not None:
            out = out.truncate(W)
        return out

    def restricted(self, g_max: int) -> "InputSeries":
        return InputSeries({h: f for h, f in self.entries.items() if h <= g_max},
                           {h: t for h, t in self.provenance.items() if h <= g_max},
                           self.allow_unsupported)

    def truncated(self, g_max: int, N: int) -> "InputSeries":
        need = required_input_degrees(g_max, N)
        return InputSeries({h: f.truncate(need[h]) for h, f in self.entries.items() if h in need},
                           self.provenance, self.allow_unsupported)

    @classmethod
    def random(cls, g_max: int, N: int, seed: int = 0, density: float = 0.6,
               symbols: bool = True, genus0: Optional[SymFunc] = None) -> "InputSeries":
        """Random support-conforming inputs with small motivic coefficients."""
        rng = random.Random(seed)
        need = required_input_degrees(g_max, N)
        entries = {}
        prov = {}
        for h, deg in need.items():
            if h == 0 and genus0 is not None:
                entries[0] = genus0.truncate(deg)
                prov[0] = "oracle"
                continue
            data = {}
            for n in range(max(0, 3 - 2 * h), deg + 1):
                for mu in P.partitions(n):
                    if rng.random() > density:
                        continue
                    c = _random_scalar(rng, symbols)
                    if not c.is_zero():
                        data[mu] = c
            entries[h] = SymFunc(data, deg)
            prov[h] = "random-formal"
        return cls(entries, prov)

    def __repr__(self):
        return "InputSeries(" + ", ".join(f"a_{h}: N={f.cap}" for h, f in sorted(self.entries.items())) + ")"


def _random_scalar(rng: random.Random, symbols: bool) -> MotivicScalar:
    c = MotivicScalar.const(Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))))
    if rng.random() < 0.5:
        c = c + L * rng.randint(-2, 2)
    if symbols and rng.random() < 0.25:
        c = c + MotivicScalar.symbol("S") * rng.randint(-1, 1)
    return c


# ---------------------------------------------------------------- genus 0 oracle

def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(num: List[int], den: List[int]):
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = Fraction(num[i + len(den) - 1], lead)
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    return q, num


def _points_of_degree(d: int) -> List[int]:
    """P_d(q) = sum_{e | d} mobius(d/e) (q^e + 1), the count of degree-d points of P^1 times d."""
    from .symfunc import mobius
    out = [0] * (d + 1)
    for e in range(1, d + 1):
        if d % e == 0:
            m = mobius(d // e)
            out[e] += m
            out[0] += m
    return out


def genus0_smooth(N: int) -> SymFunc:
    """a_0 = sum_{n >= 3} e^{S_n}(M_{0,n}) to degree N, by counting points on P^1.

    The coefficient of p_mu / z_mu is the number of configurations in P^1 fixed by
    Frobenius twisted by mu, divided by |PGL_2| = q^3 - q.
    """
    if N < 3:
        raise ValueError("genus-0 series starts in degree 3")
    den = [0, -1, 0, 1]
    data = {}
    for n in range(3, N + 1):
        for mu in P.partitions(n):
            poly = [1]
            for d, m in P.mults(mu):
                Pd = _points_of_degree(d)
                for j in range(m):
                    f = list(Pd)
                    f[0] -= j * d
                    poly = _poly_mul(poly, f)
            q, r = _poly_divmod(poly, den)
            if any(r):
                raise AssertionError(f"non-exact division for mu={mu}")
            data[mu] = MotivicScalar.poly_L(q) * Fraction(1, P.zee(mu))
    return SymFunc(data, N)


def genus0_inputs(N: int) -> InputSeries:
    return InputSeries({0: genus0_smooth(N)}, {0: "oracle"})


# ---------------------------------------------------------------- helpers

def _restrict_genus(f: GradedSeries, g_max: int) -> GradedSeries:
    return f.restrict(tmax=g_max - 1)


def _require(f: GradedSeries, W: int, what: str) -> GradedSeries:
    if f.cap is not None and f.cap < W:
        raise TruncationError(f"{what}: result only exact to weight {f.cap}, need {W}")
    return f.truncate(W)


def genus_slice(f: GradedSeries, g: int) -> SymFunc:
    return f.coefficient(g - 1)


def _p1(cap=None) -> GradedSeries:
    return GradedSeries({(0, (1,)): 1}, cap)


# ---------------------------------------------------------------- Getzler-Kapranov oracle

def gk_formula(inputs: InputSeries, g_max: int, N: int) -> GradedSeries:
    """abar = Log(exp(sum_n t^n (n/2 d^2/dp_n^2 + d/dp_2n)) Exp(a)), genus <= g_max."""
    from .symfunc import gk_diff_op
    inputs.check(g_max, N)
    W = weight_bound(g_max, N)
    a = inputs.graded(W, g_max)
    if a.is_zero():
        return GradedSeries.zero(W)
    E = a.exp()
    out = gk_diff_op(E).log()
    return _require(_restrict_genus(out, g_max), W, "gk_formula")


def abar0(N: int, inputs: Optional[InputSeries] = None) -> SymFunc:
    """abar_0 to degree N, from the given a_0 or the point-count oracle."""
    if inputs is None:
        inputs = genus0_inputs(N)
    out = gk_formula(inputs.restricted(0), 0, N)
    return genus_slice(out, 0)


# ---------------------------------------------------------------- Theorem B

def theorem_B(inputs: InputSeries, g_max: int, N: int, method: str = "graphs") -> GradedSeries:
    """abar = sum_G t^|E(G)| (zeta_G * a), over the graphs allowed by (g_max, N).

    ``method="graphs"`` evaluates graph by graph; ``method="theta"`` groups the same sum
    by 2-partitions, sum_Theta O(Theta) t^{||Theta||/2} (p_Theta * a).
    """
    inputs.check(g_max, N)
    W = weight_bound(g_max, N)
    a = inputs.graded(W, g_max)
    if a.is_zero():
        return GradedSeries.zero(W)
    act = Action(a)
    family = GR.thmB_graphs(g_max, N)
    total = GradedSeries.zero(W)
    if method == "graphs":
        for G in family:
            total = total + act.apply(ppchar(G), len(G.edges), W, g_max - 1)
    elif method == "theta":
        profiles = sorted({G.nu for G in family})
        for nu in profiles:
            table = orbisum_O_profile(nu)
            for theta, _ in two_partitions_of(nu):
                O = table.get(theta)
                if not O:
                    continue
                m = theta.norm // 2
                term = act.monomial(theta, W - 2 * m, g_max - 1 - m).scale(O).times_t(m)
                total = total + _restrict_genus(term, g_max).truncate(W)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _require(total, W, "theorem_B")


# ---------------------------------------------------------------- Theorem A and compact type

def caterpillar_insertions(a0: SymFunc) -> Tuple[SymFunc, SymFunc]:
    """c1 = 1/(1 - a0''), c2 = (1 + 2 adot0)/(1 - psi_2(a0''))."""
    for lam in a0.terms():
        if sum(lam) < 3:
            raise ValueError("a_0 must start in degree 3")
    a2 = a0.skew((1, 1))
    adot = a0.partial(2)
    c1 = (1 - a2).invert() if not a2.is_zero() else SymFunc.one(a2.cap)
    den = 1 - a2.adams(2)
    inv = den.invert() if not a2.is_zero() else SymFunc.one(a2.cap)
    c2 = (1 + adot.scale(2)) * inv
    return c1, c2


class _Insertions(Mapping):
    """Lazy w_h^mu for Theorem A: dbar_mu a_h when stable, caterpillars otherwise."""

    def __init__(self, inputs: InputSeries, N: int):
        self.inputs = inputs
        self.N = N
        self._cache: Dict[Tuple[int, tuple], SymFunc] = {}
        self._cat = None

    def __getitem__(self, key):
        h, mu = key
        r = self._cache.get(key)
        if r is None:
            r = w_insertion(h, mu, self.inputs, self).truncate(self.N)
            self._cache[key] = r
        return r

    def caterpillars(self):
        if self._cat is None:
            c1, c2 = caterpillar_insertions(self.inputs.get(0))
            self._cat = (c1.truncate(self.N), c2.truncate(self.N))
        return self._cat

    def __iter__(self):
        return iter(self._cache)

    def __len__(self):
        return len(self._cache)


def w_insertion(h: int, mu, inputs: InputSeries, _ctx: Optional[_Insertions] = None) -> SymFunc:
    mu = P.make_positive(mu)
    if 2 * h - 2 + sum(mu) > 0:
        return inputs.get(h).skew(mu)
    if h == 0 and sum(mu) == 2:
        if _ctx is not None:
            c1, c2 = _ctx.caterpillars()
        else:
            c1, c2 = caterpillar_insertions(inputs.get(0))
        return c1 if mu == (1, 1) else c2
    raise UndefinedInsertionError(f"no insertion for h={h}, mu={mu}")


def attach_rational_tails(f: SymFunc, abar0_: SymFunc, inverse: bool = False) -> SymFunc:
    """f o (p1 + abar0'), or with inverse=True, f o (p1 + abar0')^{-1}."""
    base = SymFunc.p((1,)) + abar0_.partial(1)
    if inverse:
        base = plethystic_inverse(base, f.cap)
    return f.plethysm(base)


def plethystic_inverse(g: SymFunc, N) -> SymFunc:
    """h with g o h = p1, for g = p1 + (terms of degree >= 2)."""
    if N is None:
        raise TruncationError("plethystic inverse needs a degree bound")
    rest = (g - SymFunc.p((1,))).truncate(N)
    for lam in rest.terms():
        if sum(lam) < 2:
            raise ValueError("base must be p1 plus terms of degree >= 2")
    h = SymFunc.p((1,), N=N)
    for _ in range(N):
        h = SymFunc.p((1,), N=N) - rest.plethysm(h)
    return h


def _theorem_A_bracket(g: int, inputs: InputSeries, N: int, gamma: Optional[int]) -> SymFunc:
    from .wreath2 import w2_act_weighted
    table = orbisum_K_table(g, gamma)
    ins = _Insertions(inputs, N)
    return w2_act_weighted(table, ins)


def theorem_A(g: int, inputs: InputSeries, N: int, abar0_: Optional[SymFunc] = None,
              gamma: Optional[int] = None) -> SymFunc:
    """abar_g to degree N, summing over the subdivided stable graphs of genus g."""
    if g < 2:
        raise ValueError("theorem_A needs g >= 2")
    inputs.check(g, N, range(g + 1))
    if abar0_ is None:
        abar0_ = abar0(N + 1, inputs)
    elif abar0_.cap is not None and abar0_.cap < N + 1:
        raise TruncationError(f"abar_0 known to degree {abar0_.cap}, needs {N + 1}")
    bracket = _theorem_A_bracket(g, inputs, N, gamma)
    out = attach_rational_tails(bracket, abar0_.truncate(N + 1)).truncate(N)
    if out.cap is not None and out.cap < N:
        raise TruncationError(f"theorem_A: result exact only to degree {out.cap}, need {N}")
    return out


def theorem_ct(g: int, gamma: int, inputs: InputSeries, N: int, abar0_: Optional[SymFunc] = None) -> SymFunc:
    """abar_g^(gamma): the part supported on dual graphs with first Betti number gamma."""
    return theorem_A(g, inputs, N, abar0_, gamma=gamma)


def compact_type_series(inputs: InputSeries, g_max: int, N: int,
                        abar0_: Optional[SymFunc] = None) -> Dict[int, SymFunc]:
    """abar_g^(0) for g <= g_max, each to degree W + 2 - 2g."""
    W = weight_bound(g_max, N)
    deg = {g: W + 2 - 2 * g for g in range(g_max + 1)}
    if abar0_ is None:
        abar0_ = abar0(deg[0], inputs)
    out = {0: abar0_.truncate(deg[0])}
    if g_max >= 1:
        a1 = inputs.get(1).truncate(deg[1])
        out[1] = attach_rational_tails(a1, abar0_.truncate(deg[1] + 1)).truncate(deg[1])
    for g in range(2, g_max + 1):
        out[g] = theorem_ct(g, 0, inputs, deg[g], abar0_)
    return out


# ---------------------------------------------------------------- core functional equation

def _core_graphs_labeled(gamma: int) -> List[GR.VGraph]:
    """Subdivided cores with b1 = gamma; subdivision vertices carry label 1."""
    out = []
    for C in GR.core_graphs(gamma):
        n = C.n
        edges = []
        for i, (u, v) in enumerate(C.edges):
            edges += [(u, n + i), (n + i, v)]
        out.append(GR.VGraph(n + len(C.edges), edges, (0,) * n + (1,) * len(C.edges)))
    return out


def theorem_core(inputs: InputSeries, g_max: int, N: int,
                 ct_series: Optional[Mapping[int, SymFunc]] = None) -> GradedSeries:
    """abar from compact-type pieces and cores.

    Every dual graph is a tree, or a core (a cycle, or a subdivided graph of minimal
    valence 3) with compact-type curves grafted at its legs.  Cycles are summed
    directly; longer chains on the edges of higher cores are the series
    b_{1^2} = 1/(t(1 - t a'')) and b_2 = (1 + 2t adot)/(t(1 - psi_2(t a''))).
    """
    inputs.check(g_max, N)
    W = weight_bound(g_max, N)
    a = inputs.graded(W, g_max)
    if ct_series is None:
        ct_series = compact_type_series(inputs, g_max, N)
    coeffs = {g - 1: f for g, f in ct_series.items() if g <= g_max}
    T = GradedSeries.from_coefficients(coeffs).truncate(W) if coeffs else GradedSeries.zero(W)
    if a.is_zero():
        return _require(_restrict_genus(T, g_max), W, "theorem_core")

    tT = T.times_t(1)
    base = _p1() + tT.partial(1)
    base = base.truncate(base.cap)

    act = Action(a)
    bracket = GradedSeries.zero(W)
    for k in range(1, W + 1):
        C = GR.cycle_graph(k)
        bracket = bracket + act.apply(ppchar(C), k, W, g_max - 1)

    if g_max >= 2:
        a2 = a.skew((1, 1))
        ta2 = a2.times_t(1)
        tinv = GradedSeries.t_power(-1)
        b11 = tinv * (1 - ta2).invert()
        b2 = tinv * ((1 + a.partial(2).times_t(1).scale(2)) * (1 - ta2.adams(2)).invert())
        sub_factor = {(1, 1): b11, (2,): b2}
        cache: Dict[Tuple[int, int, tuple], GradedSeries] = {}

        def factor(label, j, mu):
            key = (label, j, mu)
            f = cache.get(key)
            if f is None:
                base_f = act.base(mu) if label == 0 else sub_factor[mu]
                f = base_f.adams(j)
                cache[key] = f
            return f

        for gamma in range(2, g_max + 1):
            for G in _core_graphs_labeled(gamma):
                for tup, c in ppchar_weighted(G, 2).items():
                    prod = None
                    for label, theta in enumerate(tup):
                        for j, mu in theta.factors():
                            f = factor(label, j, mu)
                            prod = f if prod is None else prod.mul(f)
                    term = prod.scale(c).times_t(len(G.edges))
                    bracket = bracket + _restrict_genus(term, g_max).truncate(W)

    grafted = bracket.plethysm(base)
    out = T + _restrict_genus(grafted, g_max)
    return _require(_restrict_genus(out, g_max), W, "theorem_core")


# ---------------------------------------------------------------- Theorem C

def theorem_C(T: GR.TorusGraph, beta, abar: GradedSeries, g_max: Optional[int] = None) -> GradedSeries:
    """sum over decorated graphs (G, f, delta) of class beta of t^|E| (zeta * abar)."""
    act = Action(abar)
    total = GradedSeries.zero(abar.cap)
    for G in GR.enumerate_decorated(T, beta):
        total = total + act.apply(ppchar(G), len(G.edges), abar.cap,
                                  None if g_max is None else g_max - 1)
    return total


def decorated_census(r: int, d: int) -> int:
    """Number of decorated-graph classes over the torus graph of P^r in degree d."""
    return len(GR.enumerate_decorated(GR.TorusGraph.projective_space(r), (d,)))


def decorated_census_burnside(r: int, d: int) -> int:
    """The same count via shapes (G, delta) and chromatic polynomials of quotient graphs.

    For each connected shape with total degree d, the colourings by the r+1 fixed
    points that make every edge non-constant are counted up to Aut(G, delta) by
    Burnside: tau fixes a colouring iff it is constant on vertex orbits, which is a
    proper colouring of the quotient graph.
    """
    total = Fraction(0)
    for S, vp, weight in _burnside_terms(d):
        total += weight * GR.chromatic_polynomial_value(*_quotient(S, vp), r + 1)
    if total.denominator != 1:
        raise AssertionError("Burnside count is not an integer")
    return int(total)


def decorated_census_polynomial(d: int) -> List[Fraction]:
    """The census over P^r in degree d as a polynomial in r (constant term first)."""
    coeffs: List[Fraction] = [Fraction(0)]
    for S, vp, weight in _burnside_terms(d):
        chi = GR.chromatic_polynomial(*_quotient(S, vp))
        # substitute k = r + 1
        for i, c in enumerate(chi):
            for j in range(i + 1):
                while len(coeffs) <= j:
                    coeffs.append(Fraction(0))
                coeffs[j] += weight * c * comb(i, j)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _burnside_terms(d: int):
    for S in _shapes(d):
        order = S.aut_order()
        for vp in S.vertex_automorphisms():
            yield S, vp, Fraction(GR._lift_count(S, vp), order)


def _quotient(S: GR.Graph, vp):
    orbit = {}
    for cyc in GR._vertex_cycles(vp):
        for v in cyc:
            orbit[v] = cyc[0]
    reps = sorted(set(orbit.values()))
    idx = {v: i for i, v in enumerate(reps)}
    return len(reps), [(idx[orbit[u]], idx[orbit[v]]) for u, v in S.edges]


def _shapes(d: int) -> List[GR.Graph]:
    """Connected loopless multigraphs with positive edge degrees summing to d."""
    store: dict = {}
    start = GR.Graph(1, [])
    frontier = [start]
    while frontier:
        nxt = []
        for G in frontier:
            used = sum(G.elabels)
            for delta in range(1, d - used + 1):
                n = G.n
                kids = [G.with_edges([(v, n)], [delta], 1, [0]) for v in range(n)]
                kids += [G.with_edges([(u, v)], [delta]) for u in range(n) for v in range(u + 1, n)]
                for H in kids:
                    if GR._dedupe_add(store, H):
                        nxt.append(H)
        frontier = nxt
    return [G for G in store.values() if sum(G.elabels) == d]


__all__ = [
    "InputSeries", "SupportError", "weight_bound", "required_input_degrees", "a_priori_bounds",
    "genus0_smooth", "genus0_inputs", "gk_formula", "abar0", "theorem_B", "caterpillar_insertions",
    "w_insertion", "attach_rational_tails", "plethystic_inverse", "theorem_A", "theorem_ct",
    "compact_type_series", "theorem_core", "theorem_C", "decorated_census",
    "decorated_census_burnside", "decorated_census_polynomial", "genus_slice",
]
