"""Truncated symmetric functions in the power-sum basis, and their genus-graded version.

Values store a flat map ``(t, partition) -> scalar terms``.  A ``SymFunc`` lives in t^0
and is exact in degrees ``<= N``.  A ``GradedSeries`` is truncated by the stability
weight ``2t + |lambda|``: it is exact for every monomial of weight ``<= cap`` and
makes no claim above it.  ``cap=None`` means the value is exact (a finite sum).

Operations propagate caps so that a result never claims more than its inputs
determine; a derivative, for instance, lowers the cap by the degree it removes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Optional, Tuple

from . import partitions as P
from .partitions import Partition
from .scalars import (
    MotivicScalar,
    terms_adams,
    terms_add_into,
    terms_mul_into,
    terms_scale,
)

Key = Tuple[int, Partition]


class TruncationError(ValueError):
    """A requested result lies outside what the inputs determine."""


class NotInvertibleError(ValueError):
    pass


class PlethysmBaseError(ValueError):
    pass


class OrderError(ValueError):
    """Exp/Log called on a series whose order does not make the sum finite."""


# caps: None stands for +infinity
def _cmin(*caps):
    vals = [c for c in caps if c is not None]
    return min(vals) if vals else None


def _cadd(a, b):
    if a is None or b is None:
        return None
    return a + b


def _cmax(a, b):
    if a is None or b is None:
        return None
    return max(a, b)


def _w(key: Key) -> int:
    return 2 * key[0] + sum(key[1])


def _as_terms(c) -> dict:
    if isinstance(c, MotivicScalar):
        return c.raw()
    if isinstance(c, (int, Fraction)):
        return {(): c} if c else {}
    raise TypeError(f"cannot use {c!r} as a coefficient")


@lru_cache(maxsize=None)
def _skew_mono(lam: Partition, mu: Partition):
    """dbar_mu p_lam = coef * p_rest, or None."""
    if not mu:
        return 1, lam
    have = dict(P.mults(lam))
    coef = 1
    for i, m in P.mults(mu):
        k = have.get(i, 0)
        if k < m:
            return None
        coef *= i ** m * (factorial(k) // factorial(k - m))
        have[i] = k - m
    return coef, P.from_mults(have)


@lru_cache(maxsize=None)
def _partial_mono(lam: Partition, i: int):
    have = dict(P.mults(lam))
    k = have.get(i, 0)
    if not k:
        return None
    have[i] = k - 1
    return k, P.from_mults(have)


class GradedSeries:
    """Element of K0 (x) Lambda-hat ((t)) known up to stability weight ``cap``."""

    __slots__ = ("_d", "cap", "floor")

    def __init__(self, data: Optional[dict] = None, cap: Optional[int] = None,
                 floor: Optional[int] = None, *, _raw: bool = False):
        d = {}
        if data:
            for key, c in data.items():
                t, lam = key
                lam = P.make_positive(lam) if not _raw else lam
                terms = c if _raw else _as_terms(c)
                if not terms:
                    continue
                if cap is not None and 2 * t + sum(lam) > cap:
                    continue
                if _raw:
                    d[(t, lam)] = terms
                else:
                    acc = d.setdefault((t, lam), {})
                    terms_add_into(acc, terms)
                    if not acc:
                        del d[(t, lam)]
        self._d = d
        self.cap = cap
        if floor is None:
            floor = min([-1] + [t for t, _ in d])
        self.floor = floor
        self._check()

    def _check(self):
        pass

    # ----- construction helpers
    @classmethod
    def _make(cls, d, cap, floor):
        obj = cls.__new__(cls)
        obj._d = d
        obj.cap = cap
        obj.floor = floor
        return obj

    @classmethod
    def zero(cls, cap=None):
        return cls._make({}, cap, -1 if cls is GradedSeries else 0)

    @classmethod
    def one(cls, cap=None):
        d = {(0, ()): {(): 1}} if cap is None or cap >= 0 else {}
        return cls._make(d, cap, -1 if cls is GradedSeries else 0)

    @classmethod
    def monomial(cls, t: int, lam, coeff=1, cap=None):
        return GradedSeries({(t, tuple(lam)): coeff}, cap)

    @classmethod
    def t_power(cls, k: int):
        return GradedSeries._make({(k, ()): {(): 1}}, None, min(-1, k))

    @classmethod
    def from_coefficients(cls, coeffs: Dict[int, "SymFunc"], floor=-1):
        """sum_t coeffs[t] * t^k; the cap is the weakest one implied by the pieces."""
        d = {}
        caps = []
        for t, f in coeffs.items():
            if not isinstance(f, GradedSeries):
                raise TypeError("coefficients must be SymFunc values")
            for (_, lam), c in f._d.items():
                d[(t, lam)] = c
            caps.append(None if f.cap is None else f.cap + 2 * t)
        cap = _cmin(*caps) if caps else None
        d = {k: v for k, v in d.items() if cap is None or _w(k) <= cap}
        return GradedSeries._make(d, cap, min([floor] + list(coeffs)))

    # ----- inspection
    def items(self):
        for key in sorted(self._d, key=lambda k: (k[0], sum(k[1]), k[1])):
            yield key, MotivicScalar(self._d[key], _trusted=True)

    def terms(self) -> Dict[Key, MotivicScalar]:
        return dict(self.items())

    def raw(self) -> dict:
        return self._d

    def __len__(self):
        return len(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __getitem__(self, key) -> MotivicScalar:
        t, lam = key
        return MotivicScalar(self._d.get((t, P.make_positive(lam)), {}), _trusted=True)

    def min_weight(self):
        return min((_w(k) for k in self._d), default=None)

    def weight_floor(self):
        """Lower bound on the weight of every monomial, known or not (None = +inf)."""
        return _cmin(self.min_weight(), _cadd(self.cap, 1))

    def t_exponents(self):
        return sorted({t for t, _ in self._d})

    def coefficient(self, t: int) -> "SymFunc":
        d = {(0, lam): c for (s, lam), c in self._d.items() if s == t}
        return SymFunc._make(d, _cadd(self.cap, -2 * t), 0)

    def truncate(self, cap) -> "GradedSeries":
        cap = _cmin(cap, self.cap)
        d = {k: v for k, v in self._d.items() if cap is None or _w(k) <= cap}
        return type(self)._make(d, cap, self.floor)

    def restrict(self, tmax: Optional[int] = None, degree: Optional[int] = None) -> "GradedSeries":
        """Drop monomials with t > tmax or degree > ``degree`` (presentation helper)."""
        d = {k: v for k, v in self._d.items()
             if (tmax is None or k[0] <= tmax) and (degree is None or sum(k[1]) <= degree)}
        return type(self)._make(d, self.cap, self.floor)

    def _result_type(self, other):
        if type(self) is SymFunc and (other is None or type(other) is SymFunc):
            return SymFunc
        return GradedSeries

    # ----- ring operations
    def _coerce(self, other):
        if isinstance(other, GradedSeries):
            return other
        if isinstance(other, (int, Fraction, MotivicScalar)):
            terms = _as_terms(other)
            d = {(0, ()): terms} if terms else {}
            return SymFunc._make(d, None, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        cap = _cmin(self.cap, o.cap)
        d = {}
        for src in (self._d, o._d):
            for k, c in src.items():
                if cap is not None and _w(k) > cap:
                    continue
                acc = d.get(k)
                if acc is None:
                    d[k] = c
                else:
                    acc = dict(acc)
                    terms_add_into(acc, c)
                    if acc:
                        d[k] = acc
                    else:
                        del d[k]
        return self._result_type(o)._make(d, cap, min(self.floor, o.floor))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._make({k: terms_scale(c, -1) for k, c in self._d.items()}, self.cap, self.floor)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "GradedSeries":
        if isinstance(c, (int, Fraction)):
            if c == 0:
                return type(self)._make({}, self.cap, self.floor)
            return type(self)._make({k: terms_scale(v, c) for k, v in self._d.items()}, self.cap, self.floor)
        terms = _as_terms(c)
        d = {}
        for k, v in self._d.items():
            acc = {}
            terms_mul_into(acc, v, terms)
            if acc:
                d[k] = acc
        return type(self)._make(d, self.cap, self.floor)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MotivicScalar)):
            return self.scale(other)
        if isinstance(other, GradedSeries):
            return self.mul(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, MotivicScalar)):
            return self.scale(other)
        return NotImplemented

    def product_cap(self, other):
        if type(self) is SymFunc and type(other) is SymFunc:
            return _cmin(self.cap, other.cap)
        return _cmin(_cadd(self.cap, other.weight_floor()),
                     _cadd(other.cap, self.weight_floor()),
                     _cmax(self.cap, other.cap))

    def mul(self, other: "GradedSeries", cap=None, tmax=None) -> "GradedSeries":
        """Product; ``tmax`` drops products with t above it (the result is then a restriction)."""
        cap = _cmin(self.product_cap(other), cap)
        rtype = self._result_type(other)
        floor = self.floor + other.floor
        if not self._d or not other._d:
            return rtype._make({}, cap, floor)
        a, b = self._d, other._d
        if len(a) > len(b):
            a, b = b, a
        bl = sorted(((_w(k), k[0], k[1], c) for k, c in b.items()), key=lambda x: x[0])
        out: dict = {}
        union = P.union
        for (ta, la), ca in a.items():
            wa = 2 * ta + sum(la)
            lim = None if cap is None else cap - wa
            for wb, tb, lb, cb in bl:
                if lim is not None and wb > lim:
                    break
                if tmax is not None and ta + tb > tmax:
                    continue
                key = (ta + tb, union(la, lb))
                acc = out.get(key)
                if acc is None:
                    acc = out[key] = {}
                terms_mul_into(acc, ca, cb)
        out = {k: v for k, v in out.items() if v}
        return rtype._make(out, cap, floor)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use invert() for reciprocals")
        out = type(self).one()
        for _ in range(n):
            out = out * self
        return out

    def times_t(self, k: int) -> "GradedSeries":
        d = {(t + k, lam): c for (t, lam), c in self._d.items()}
        return GradedSeries._make(d, _cadd(self.cap, 2 * k), self.floor + k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        cap = _cmin(self.cap, o.cap)
        a = self.truncate(cap)._d
        b = o.truncate(cap)._d
        return a == b

    def __hash__(self):
        raise TypeError("series are compared modulo truncation and are unhashable")

    # ----- operators
    def adams(self, n: int, extend_floor: bool = True) -> "GradedSeries":
        """psi_n: p_j -> p_{jn}, scalars by Adams, and t^k -> t^{nk}."""
        if not isinstance(n, int) or n < 1:
            raise ValueError("Adams index must be a positive integer")
        if n == 1:
            return self
        if not extend_floor and any(n * t < self.floor for t, _ in self._d):
            raise TruncationError(
                f"psi_{n} pushes terms below the t-floor {self.floor}")
        cap = None if self.cap is None else min(n * (self.cap + 1) - 1, self.cap)
        d = {}
        for (t, lam), c in self._d.items():
            key = (n * t, tuple(n * x for x in lam))
            if cap is not None and _w(key) > cap:
                continue
            d[key] = terms_adams(n, c)
        floor = n * self.floor if extend_floor else self.floor
        return type(self)._make(d, cap, floor)

    def adams_mu(self, mu: Partition) -> "GradedSeries":
        """psi_mu(f) = prod_i psi_i(f)^{mu_i}; psi of the empty partition is 1."""
        out = type(self).one()
        for i in mu:
            out = out * self.adams(i)
        return out

    def skew(self, mu) -> "GradedSeries":
        """dbar_mu = prod_i (i d/dp_i)^{mu_i}."""
        mu = P.make_positive(mu)
        if not mu:
            return self
        d = {}
        for (t, lam), c in self._d.items():
            r = _skew_mono(lam, mu)
            if r is None:
                continue
            coef, rest = r
            key = (t, rest)
            acc = d.get(key)
            if acc is None:
                d[key] = terms_scale(c, coef)
            else:
                terms_add_into(acc, c, coef)
        d = {k: v for k, v in d.items() if v}
        return type(self)._make(d, _cadd(self.cap, -sum(mu)), self.floor)

    def partial(self, i: int) -> "GradedSeries":
        if i < 1:
            raise ValueError("p_i needs i >= 1")
        d = {}
        for (t, lam), c in self._d.items():
            r = _partial_mono(lam, i)
            if r is None:
                continue
            coef, rest = r
            d[(t, rest)] = terms_scale(c, coef)
        return type(self)._make(d, _cadd(self.cap, -i), self.floor)

    def constant_term(self) -> MotivicScalar:
        return MotivicScalar(self._d.get((0, ()), {}), _trusted=True)

    def invert(self) -> "GradedSeries":
        """1/(1 + r) as a geometric series; r must have positive weight."""
        c0 = self.constant_term()
        if c0 != 1:
            raise NotInvertibleError("leading coefficient must be exactly 1")
        r = self - 1
        mw = r.min_weight()
        if mw is not None and mw < 1:
            raise NotInvertibleError("the non-constant part must have positive weight")
        if self.cap is None and not r.is_zero():
            raise NotInvertibleError("reciprocal of an exact non-constant series needs a truncation")
        neg = -r
        out = type(self).one(self.cap)
        power = type(self).one(self.cap)
        while True:
            power = power.mul(neg, cap=self.cap)
            if power.is_zero():
                break
            out = out + power
        return type(self)._make(out._d, self.cap, self.floor)

    def _check_base(self):
        # a degree-0 term t^k (k >= 1) still has positive weight, so it is allowed
        for (t, lam) in self._d:
            if t < 0:
                raise PlethysmBaseError("plethysm base must not contain negative powers of t")
            if not lam and t == 0:
                raise PlethysmBaseError("plethysm base has a nonzero constant term")

    def plethysm(self, g: "GradedSeries") -> "GradedSeries":
        """self o g: p_n -> psi_n(g); scalars of self pass through unchanged."""
        g = self._coerce(g)
        g._check_base()
        rtype = self._result_type(g)
        if rtype is SymFunc:
            cap = _cmin(self.cap, g.cap)
        else:
            tmins = [t for (t, lam) in self._d if lam]
            shift = 2 * min(tmins) if tmins else 0
            cap = _cmin(self.cap, _cadd(g.cap, shift))
        if rtype is SymFunc:
            piece_cap = cap
        else:
            piece_cap = _cadd(cap, -shift)
        powers: Dict[Tuple[int, int], GradedSeries] = {}

        def power(k, m):
            key = (k, m)
            if key not in powers:
                if m == 1:
                    powers[key] = g.adams(k).truncate(piece_cap)
                else:
                    powers[key] = power(k, m - 1).mul(power(k, 1), cap=piece_cap)
            return powers[key]

        out: dict = {}
        for (tf, lam), cf in sorted(self._d.items()):
            lim = None if cap is None else cap - 2 * tf
            if lim is not None and sum(lam) > lim:
                continue
            prod = None
            for k, m in P.mults(lam):
                piece = power(k, m)
                prod = piece if prod is None else prod.mul(piece, cap=lim)
            if prod is None:
                acc = out.setdefault((tf, ()), {})
                terms_add_into(acc, cf)
                continue
            for (tg, lg), cg in prod._d.items():
                key = (tf + tg, lg)
                if cap is not None and _w(key) > cap:
                    continue
                acc = out.setdefault(key, {})
                terms_mul_into(acc, cf, cg)
        out = {k: v for k, v in out.items() if v}
        floor = self.floor if rtype is GradedSeries else 0
        return rtype._make(out, cap, floor)

    def exp(self) -> "GradedSeries":
        """Plethystic exponential sum_mu psi_mu(f)/z_mu, as exp(sum_k psi_k(f)/k)."""
        mw = self.min_weight()
        if mw is not None and mw < 1:
            raise OrderError("Exp needs every term of positive weight")
        if self.is_zero():
            return type(self).one(self.cap)
        if self.cap is None:
            raise OrderError("Exp of an exact nonzero series is infinite; truncate first")
        x = type(self).zero(self.cap)
        k = 1
        while k * mw <= self.cap:
            x = x + self.adams(k).scale(Fraction(1, k))
            k += 1
        return _exp_series(x)

    def log(self) -> "GradedSeries":
        """Plethystic logarithm: the inverse of exp()."""
        if self.constant_term() != 1:
            raise OrderError("Log needs constant term 1")
        r = self - 1
        mw = r.min_weight()
        if mw is not None and mw < 1:
            raise OrderError("Log needs the non-constant part of positive weight")
        if r.is_zero():
            return type(self).zero(self.cap)
        if self.cap is None:
            raise OrderError("Log of an exact series needs a truncation")
        lg = _log_series(r)
        out = type(self).zero(self.cap)
        k = 1
        while k * mw <= self.cap:
            mob = _mobius(k)
            if mob:
                out = out + lg.adams(k).scale(Fraction(mob, k))
            k += 1
        return out

    def rank(self) -> Dict[Tuple[int, int], MotivicScalar]:
        """p_1 -> x, p_n -> 0: map (t, n) to the coefficient of x^n/n!."""
        out = {}
        for (t, lam), c in self._d.items():
            if all(x == 1 for x in lam):
                n = len(lam)
                out[(t, n)] = MotivicScalar(terms_scale(c, factorial(n)), _trusted=True)
        return dict(sorted(out.items()))

    def to_schur(self) -> Dict[Key, MotivicScalar]:
        """Coefficients in the Schur basis, <f, s_lam> = sum_mu chi^lam(mu) c_mu."""
        by_deg: Dict[Tuple[int, int], list] = {}
        for (t, lam), c in self._d.items():
            by_deg.setdefault((t, sum(lam)), []).append((lam, c))
        out = {}
        for (t, n), items in sorted(by_deg.items()):
            for lam in P.partitions(n):
                acc: dict = {}
                for mu, c in items:
                    ch = P.character(lam, mu)
                    if ch:
                        terms_add_into(acc, c, ch)
                if acc:
                    out[(t, lam)] = MotivicScalar(acc, _trusted=True)
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self}, cap={self.cap})"

    def __str__(self):
        if not self._d:
            return "0"
        parts = []
        for (t, lam), c in self.items():
            mono = "p" + ("".join(f"[{x}]" for x in lam) if lam else "[]")
            if type(self) is GradedSeries:
                mono += f"*t^{t}"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


class SymFunc(GradedSeries):
    """Truncated symmetric function in the power-sum basis (degree <= N)."""

    __slots__ = ()

    def __init__(self, data: Optional[dict] = None, N: Optional[int] = None):
        d = {}
        for lam, c in (data or {}).items():
            d[(0, tuple(lam))] = c
        super().__init__(d, N, 0)

    def _check(self):
        if any(t != 0 for t, _ in self._d):
            raise ValueError("SymFunc values live in t^0")

    @property
    def N(self):
        return self.cap

    @classmethod
    def p(cls, lam, coeff=1, N=None) -> "SymFunc":
        return cls({tuple(P.make_positive(lam)): coeff}, N)

    @classmethod
    def from_graded(cls, f: GradedSeries) -> "SymFunc":
        return f.coefficient(0)

    def terms(self) -> Dict[Partition, MotivicScalar]:
        return {lam: c for (_, lam), c in self.items()}

    def __getitem__(self, lam) -> MotivicScalar:
        return super().__getitem__((0, lam))

    def degree_part(self, n: int) -> "SymFunc":
        d = {k: v for k, v in self._d.items() if sum(k[1]) == n}
        return SymFunc._make(d, self.cap, 0)

    def graded(self, t: int = 0) -> GradedSeries:
        return self.times_t(t) if t else GradedSeries._make(dict(self._d), self.cap, -1)

    def rank(self) -> Dict[int, MotivicScalar]:
        return {n: c for (_, n), c in super().rank().items()}

    def to_schur(self) -> Dict[Partition, MotivicScalar]:
        return {lam: c for (_, lam), c in super().to_schur().items()}

    def __str__(self):
        if not self._d:
            return "0"
        parts = []
        for (t, lam), c in self.items():
            mono = "p" + ("".join(f"[{x}]" for x in lam) if lam else "[]")
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def p(*parts, N=None) -> SymFunc:
    return SymFunc.p(parts, 1, N)


def from_schur(coeffs: Dict[Partition, object], N=None) -> SymFunc:
    """sum_lam c_lam s_lam with s_lam = sum_mu chi^lam(mu) p_mu / z_mu."""
    d: dict = {}
    for lam, c in coeffs.items():
        lam = P.make_positive(lam)
        terms = _as_terms(c)
        for mu in P.partitions(sum(lam)):
            ch = P.character(lam, mu)
            if ch:
                acc = d.setdefault((0, mu), {})
                terms_add_into(acc, terms, Fraction(ch, P.zee(mu)))
    d = {k: v for k, v in d.items() if v and (N is None or sum(k[1]) <= N)}
    return SymFunc._make(d, N, 0)


def graded_from_schur(coeffs: Dict[Key, object], cap=None) -> GradedSeries:
    pieces: Dict[int, dict] = {}
    for (t, lam), c in coeffs.items():
        pieces.setdefault(t, {})[lam] = c
    d = {}
    for t, sub in pieces.items():
        for (_, mu), v in from_schur(sub)._d.items():
            d[(t, mu)] = v
    return GradedSeries(d, cap, _raw=True)


def h(n: int, N=None) -> SymFunc:
    """Complete homogeneous h_n = sum_mu p_mu / z_mu."""
    return SymFunc({mu: Fraction(1, P.zee(mu)) for mu in P.partitions(n)}, N)


def e(n: int, N=None) -> SymFunc:
    return SymFunc({mu: Fraction((-1) ** (n - len(mu)), P.zee(mu)) for mu in P.partitions(n)}, N)


def _exp_series(x: GradedSeries) -> GradedSeries:
    out = type(x).one(x.cap)
    power = type(x).one(x.cap)
    m = 1
    while True:
        power = power.mul(x, cap=x.cap).scale(Fraction(1, m))
        if power.is_zero():
            break
        out = out + power
        m += 1
    return out


def _log_series(r: GradedSeries) -> GradedSeries:
    out = type(r).zero(r.cap)
    power = type(r).one(r.cap)
    m = 1
    while True:
        power = power.mul(r, cap=r.cap)
        if power.is_zero():
            break
        out = out + power.scale(Fraction((-1) ** (m + 1), m))
        m += 1
    return out


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result = 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    if n > 1:
        result = -result
    return result


mobius = _mobius


def gk_diff_op(f: GradedSeries) -> GradedSeries:
    """exp(sum_n t^n (n/2 d^2/dp_n^2 + d/dp_{2n})) applied to f."""
    cur = f if type(f) is GradedSeries else GradedSeries._make(dict(f._d), f.cap, -1)
    total = cur
    j = 1
    while True:
        nxt: dict = {}
        for (t, lam), c in cur._d.items():
            m = dict(P.mults(lam))
            for n, k in m.items():
                if k >= 2:
                    rest = dict(m)
                    rest[n] = k - 2
                    key = (t + n, P.from_mults(rest))
                    acc = nxt.setdefault(key, {})
                    terms_add_into(acc, c, Fraction(n * k * (k - 1), 2 * j))
                if n % 2 == 0:
                    rest = dict(m)
                    rest[n] = k - 1
                    key = (t + n // 2, P.from_mults(rest))
                    acc = nxt.setdefault(key, {})
                    terms_add_into(acc, c, Fraction(k, j))
        nxt = {k: v for k, v in nxt.items() if v}
        if not nxt:
            break
        cur = GradedSeries._make(nxt, f.cap, f.floor)
        total = total + cur
        j += 1
    return total


# function-style aliases mirroring the operation names
def sf_adams(n, f, extend_floor=True):
    return f.adams(n, extend_floor)


def sf_plethysm(f, g):
    return f.plethysm(g)


def sf_skew(mu, f):
    return f.skew(mu)


def sf_partial(i, f):
    return f.partial(i)


def sf_invert(f):
    return f.invert()


def sf_exp(f):
    return f.exp()


def sf_log(f):
    return f.log()


def sf_rank(f):
    return f.rank()


def sf_basis_convert(f, target: str):
    if target == "schur":
        return f.to_schur()
    if target == "powersum":
        return f.terms()
    raise ValueError(f"unknown basis {target!r}")


def hall_pairing(f: SymFunc, g: SymFunc) -> MotivicScalar:
    """<p_mu, p_lam> = delta z_mu, extended bilinearly."""
    acc: dict = {}
    for (t, lam), c in f._d.items():
        other = g._d.get((t, lam))
        if other:
            terms_mul_into(acc, c, other, P.zee(lam))
    return MotivicScalar(acc, _trusted=True)
