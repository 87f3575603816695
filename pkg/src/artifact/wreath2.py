"""2-partitions, the algebra they span, and its action on genus-graded series.

A 2-partition maps partitions (including the empty one) to partitions, with finite
support.  The monomial p_Theta is the product over mu and over parts j of Theta(mu)
of the generators p_j(mu); it acts on a series a by

    p_j(mu) * a = psi_j(dbar_mu a),

with psi_j sending t^k to t^{jk}.  Monomials act multiplicatively.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from . import partitions as P
from .partitions import Partition
from .scalars import MotivicScalar
from .scalars import terms_mul_into
from .symfunc import GradedSeries, SymFunc, _as_terms

GeneralizedPartition = Tuple[int, ...]


class UndefinedInsertionError(KeyError):
    pass


def _mu_order(mu: Partition):
    return (sum(mu), tuple(reversed(mu)))


class TwoPartition:
    """Finitely supported map Part* -> Part*, stored as sorted (mu, theta) pairs."""

    __slots__ = ("pairs", "_hash")

    def __init__(self, assignment: Mapping[Partition, Partition] | Iterable = ()):
        items = assignment.items() if isinstance(assignment, Mapping) else assignment
        merged: Dict[Partition, Partition] = {}
        for mu, theta in items:
            mu = P.make_positive(mu)
            theta = P.make_positive(theta)
            if not theta:
                continue
            merged[mu] = P.union(merged.get(mu, ()), theta)
        self.pairs = tuple(sorted(merged.items(), key=lambda kv: _mu_order(kv[0])))
        self._hash = hash(self.pairs)

    @classmethod
    def _from_sorted(cls, pairs):
        obj = cls.__new__(cls)
        obj.pairs = pairs
        obj._hash = hash(pairs)
        return obj

    @classmethod
    def generator(cls, j: int, mu) -> "TwoPartition":
        return cls({tuple(mu): (j,)})

    def __call__(self, mu) -> Partition:
        mu = P.make_positive(mu)
        for m, th in self.pairs:
            if m == mu:
                return th
        return ()

    def as_dict(self) -> Dict[Partition, Partition]:
        return dict(self.pairs)

    @property
    def norm(self) -> int:
        return sum(sum(th) * sum(mu) for mu, th in self.pairs)

    @property
    def profile(self) -> GeneralizedPartition:
        """nu_i = total number of parts of Theta(mu) over |mu| = i."""
        out: List[int] = []
        for mu, th in self.pairs:
            out.extend([sum(mu)] * sum(th))
        return tuple(sorted(out, reverse=True))

    @property
    def vertex_count(self) -> int:
        return sum(sum(th) for _, th in self.pairs)

    def __add__(self, other: "TwoPartition") -> "TwoPartition":
        if not self.pairs:
            return other
        if not other.pairs:
            return self
        merged = dict(self.pairs)
        for mu, th in other.pairs:
            merged[mu] = P.union(merged.get(mu, ()), th)
        return TwoPartition._from_sorted(tuple(sorted(merged.items(), key=lambda kv: _mu_order(kv[0]))))

    def __eq__(self, other):
        return isinstance(other, TwoPartition) and self.pairs == other.pairs

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple((_mu_order(mu), th) for mu, th in self.pairs)

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.pairs:
            return "{}"
        body = ", ".join(f"{P.to_exp_str(mu)} -> {P.to_exp_str(th)}" for mu, th in self.pairs)
        return "{" + body + "}"

    __repr__ = __str__

    def to_json(self):
        return [[list(mu), list(th)] for mu, th in self.pairs]

    @classmethod
    def from_json(cls, data):
        return cls([(tuple(mu), tuple(th)) for mu, th in data])

    def factors(self) -> List[Tuple[int, Partition]]:
        """The generators p_j(mu) whose product is p_Theta, in canonical order."""
        return [(j, mu) for mu, th in self.pairs for j in th]


UNIT = TwoPartition()


def _gp_mults(nu) -> Dict[int, int]:
    if isinstance(nu, Mapping):
        return {int(i): int(k) for i, k in nu.items() if k}
    out: Dict[int, int] = {}
    for i in nu:
        out[int(i)] = out.get(int(i), 0) + 1
    return out


def wreath_order(nu) -> int:
    """|S_nu| for S_nu = prod_i S_i wr S_{nu_i}."""
    m = _gp_mults(nu)
    out = 1
    for i, k in m.items():
        out *= factorial(i) ** k * factorial(k)
    return out


def centralizer_order(theta: TwoPartition) -> int:
    """Order of the centralizer of an element of class Theta in S_nu."""
    out = 1
    for mu, th in theta.pairs:
        out *= P.zee(th) * P.zee(mu) ** len(th)
    return out


def _compositions(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def two_partitions_of(nu) -> List[Tuple[TwoPartition, int]]:
    """All Theta with profile nu, with the sizes of the matching S_nu classes."""
    m = _gp_mults(nu)
    order = wreath_order(m)
    blocks = []
    for i in sorted(m):
        mus = P.partitions(i)
        choices = []
        for comp in _compositions(m[i], len(mus)):
            per = [P.partitions(c) for c in comp]
            for thetas in product(*per):
                choices.append(tuple((mu, th) for mu, th in zip(mus, thetas) if th))
        blocks.append(choices)
    out = []
    for combo in product(*blocks):
        pairs = [pr for block in combo for pr in block]
        theta = TwoPartition(pairs)
        out.append((theta, order // centralizer_order(theta)))
    out.sort(key=lambda x: x[0].sort_key())
    return out


class W2Elem:
    """Finite linear combination of monomials p_Theta."""

    __slots__ = ("terms", "bound")

    def __init__(self, terms: Optional[Mapping[TwoPartition, object]] = None, bound: Optional[int] = None):
        clean: Dict[TwoPartition, object] = {}
        for th, c in (terms or {}).items():
            if bound is not None and th.norm > bound:
                continue
            v = clean.get(th, 0) + c
            clean[th] = v
        self.terms = {th: c for th, c in clean.items() if not _is_zero(c)}
        self.bound = bound

    @classmethod
    def monomial(cls, theta: TwoPartition, coeff=1) -> "W2Elem":
        return cls({theta: coeff})

    @classmethod
    def gen(cls, j: int, mu) -> "W2Elem":
        return cls({TwoPartition.generator(j, mu): 1})

    @classmethod
    def one(cls) -> "W2Elem":
        return cls({UNIT: 1})

    def _bound(self, other):
        bs = [b for b in (self.bound, other.bound) if b is not None]
        return min(bs) if bs else None

    def __add__(self, other):
        if not isinstance(other, W2Elem):
            return NotImplemented
        acc = dict(self.terms)
        for th, c in other.terms.items():
            acc[th] = acc.get(th, 0) + c
        return W2Elem(acc, self._bound(other))

    def __neg__(self):
        return W2Elem({th: -c for th, c in self.terms.items()}, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MotivicScalar)):
            return W2Elem({th: c * other for th, c in self.terms.items()}, self.bound)
        if not isinstance(other, W2Elem):
            return NotImplemented
        return w2_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, MotivicScalar)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, W2Elem):
            return NotImplemented
        return self.terms == other.terms

    def total_mass(self):
        return sum(self.terms.values())

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*p{th}" for th, c in self.items())

    __repr__ = __str__


def _is_zero(c) -> bool:
    if isinstance(c, MotivicScalar):
        return c.is_zero()
    return c == 0


def w2_mul(a: W2Elem, b: W2Elem) -> W2Elem:
    bound = a._bound(b)
    acc: Dict[TwoPartition, object] = {}
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            th = ta + tb
            if bound is not None and th.norm > bound:
                continue
            acc[th] = acc.get(th, 0) + ca * cb
    return W2Elem(acc, bound)


class Action:
    """Memoized evaluation of monomials p_Theta acting on a fixed series.

    ``insert(j, mu)`` supplies the factor attached to the generator p_j(mu); the
    default is psi_j(dbar_mu a).  Products over prefixes of the canonical factor list
    are cached, since monomials coming from related graphs share long prefixes.
    """

    def __init__(self, a: GradedSeries, insert=None, cap=None):
        self.a = a
        self.cap = cap
        self._custom = insert
        self._base: Dict[Partition, GradedSeries] = {}
        self._factor: Dict[Tuple[int, Partition], GradedSeries] = {}
        self._prefix: Dict[tuple, GradedSeries] = {}

    def base(self, mu: Partition) -> GradedSeries:
        f = self._base.get(mu)
        if f is None:
            f = self.a.skew(mu)
            self._base[mu] = f
        return f

    def factor(self, j: int, mu: Partition) -> GradedSeries:
        key = (j, mu)
        f = self._factor.get(key)
        if f is None:
            if self._custom is not None:
                f = self._custom(j, mu)
            else:
                f = self.base(mu).adams(j)
            self._factor[key] = f
        return f

    def monomial(self, theta: TwoPartition, cap=None, tmax=None) -> GradedSeries:
        """p_Theta acting on a; with cap/tmax, only terms that can reach those bounds."""
        facs = tuple(theta.factors())
        if not facs:
            return GradedSeries.one(cap)
        fs = [self.factor(j, mu) for j, mu in facs]
        # bounds for each prefix: subtract what the remaining factors must add
        caps = [cap] * len(facs)
        tmaxs = [tmax] * len(facs)
        for k in range(len(facs) - 2, -1, -1):
            nxt = fs[k + 1]
            wfl = nxt.weight_floor()
            tmin = min((t for t, _ in nxt.raw()), default=None)
            if wfl is None or tmin is None:
                return GradedSeries.zero(cap)
            caps[k] = None if caps[k + 1] is None else caps[k + 1] - wfl
            tmaxs[k] = None if tmaxs[k + 1] is None else tmaxs[k + 1] - tmin
        return self._product(facs, fs, len(facs), caps, tmaxs)

    def _product(self, facs, fs, k, caps, tmaxs) -> GradedSeries:
        key = (facs[:k], caps[k - 1], tmaxs[k - 1])
        r = self._prefix.get(key)
        if r is not None:
            return r
        if k == 1:
            r = fs[0]
            if caps[0] is not None:
                r = r.truncate(caps[0])
            if tmaxs[0] is not None:
                r = r.restrict(tmax=tmaxs[0])
        else:
            head = self._product(facs, fs, k - 1, caps, tmaxs)
            r = head.mul(fs[k - 1], cap=caps[k - 1], tmax=tmaxs[k - 1])
        self._prefix[key] = r
        return r

    def apply(self, w: W2Elem, shift: int = 0, cap=None, tmax=None) -> GradedSeries:
        """t^shift * sum_Theta c_Theta (p_Theta acting on a), restricted to weight <= cap, t <= tmax."""
        cap = _cmin2(cap, self.cap)
        mcap = None if cap is None else cap - 2 * shift
        mt = None if tmax is None else tmax - shift
        acc: dict = {}
        out_cap = cap
        for th, c in w.items():
            term = self.monomial(th, mcap, mt)
            out_cap = _cmin2(out_cap, None if term.cap is None else term.cap + 2 * shift)
            cterms = _as_terms(c)
            for (t, lam), v in term.raw().items():
                if mcap is not None and 2 * t + sum(lam) > mcap:
                    continue
                if mt is not None and t > mt:
                    continue
                slot = acc.setdefault((t + shift, lam), {})
                terms_mul_into(slot, v, cterms)
        acc = {k: v for k, v in acc.items() if v and (out_cap is None or 2 * k[0] + sum(k[1]) <= out_cap)}
        return GradedSeries._make(acc, out_cap, -1)


def _cmin2(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def w2_act(w: W2Elem, a: GradedSeries, cap=None) -> GradedSeries:
    """p_j(mu) acts by psi_j(dbar_mu a) with t -> t^j; monomials act multiplicatively."""
    if isinstance(a, SymFunc):
        a = a.graded()
    return Action(a, cap=cap).apply(w)


WeightedMonomial = Tuple[TwoPartition, ...]


def w2_act_weighted(w: Mapping[WeightedMonomial, object], insertions: Mapping[Tuple[int, Partition], SymFunc]) -> SymFunc:
    """Evaluate sum c * prod_h prod_mu psi_{Theta_h(mu)}(w_h^mu) on ungraded insertions."""
    adams_cache: Dict[Tuple[int, int, Partition], SymFunc] = {}

    def factor(h, j, mu):
        key = (h, j, mu)
        f = adams_cache.get(key)
        if f is None:
            try:
                base = insertions[(h, mu)]
            except KeyError:
                raise UndefinedInsertionError(f"no insertion supplied for weight {h}, mu={mu}") from None
            f = base.adams(j)
            adams_cache[key] = f
        return f

    total: Optional[SymFunc] = None
    for mono, c in sorted(w.items(), key=lambda kv: tuple(t.sort_key() for t in kv[0])):
        term: Optional[SymFunc] = None
        for h, theta in enumerate(mono):
            for j, mu in theta.factors():
                f = factor(h, j, mu)
                term = f if term is None else term * f
        if term is None:
            term = SymFunc.one()
        term = term.scale(c)
        total = term if total is None else total + term
    return total if total is not None else SymFunc.zero()


def w2_forget(w: W2Elem, which: str) -> SymFunc:
    """phi_1 (vertices): p_j(mu) -> p_j.  phi_2 (half-edges): p_j(mu) -> p_j o p_mu."""
    acc: Dict[Partition, object] = {}
    for th, c in w.terms.items():
        parts: List[int] = []
        for mu, theta in th.pairs:
            for j in theta:
                if which == "vertices":
                    parts.append(j)
                elif which in ("half-edges", "halfedges"):
                    parts.extend(j * x for x in mu)
                else:
                    raise ValueError(f"unknown forgetful mode {which!r}")
        lam = tuple(sorted(parts, reverse=True))
        acc[lam] = acc.get(lam, 0) + c
    return SymFunc({lam: c for lam, c in acc.items() if not _is_zero(c)})
