"""Exact coefficient ring: polynomials in the Lefschetz class L and opaque motive symbols.

A monomial key is a sorted tuple of ``(name, adams_index, exponent)`` triples.  The
Lefschetz class uses the reserved name ``"L"`` with adams index 1; an Adams operation
raises its exponent, while for a formal symbol it multiplies the adams index.
Coefficients are ``int`` or ``Fraction``; no floating point is ever produced.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, Iterable, Tuple, Union

Key = Tuple[Tuple[str, int, int], ...]
Coeff = Union[int, Fraction]

LEFSCHETZ = "L"


class UnsupportedClassError(ValueError):
    """A scalar cannot be specialized in the requested mode."""


@lru_cache(maxsize=None)
def key_mul(a: Key, b: Key) -> Key:
    if not a:
        return b
    if not b:
        return a
    merged: Dict[Tuple[str, int], int] = {}
    for name, m, e in a:
        merged[(name, m)] = e
    for name, m, e in b:
        merged[(name, m)] = merged.get((name, m), 0) + e
    return tuple(sorted((name, m, e) for (name, m), e in merged.items()))


@lru_cache(maxsize=None)
def key_adams(k: int, a: Key) -> Key:
    out: Dict[Tuple[str, int], int] = {}
    for name, m, e in a:
        if name == LEFSCHETZ:
            slot = (name, 1)
            out[slot] = out.get(slot, 0) + e * k
        else:
            slot = (name, m * k)
            out[slot] = out.get(slot, 0) + e
    return tuple(sorted((name, m, e) for (name, m), e in out.items()))


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def terms_add_into(acc: dict, src: dict, scale: Coeff = 1) -> None:
    """acc += scale * src, in place on raw term dictionaries."""
    for k, c in src.items():
        v = acc.get(k, 0) + c * scale
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def terms_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    if len(a) == 1 and len(b) == 1:
        (ka, ca), = a.items()
        (kb, cb), = b.items()
        return {key_mul(ka, kb): ca * cb}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = key_mul(ka, kb)
            v = out.get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def terms_mul_into(acc: dict, a: dict, b: dict, scale: Coeff = 1) -> None:
    """acc += scale * a * b on raw term dictionaries."""
    for ka, ca in a.items():
        cs = ca * scale
        for kb, cb in b.items():
            k = key_mul(ka, kb)
            v = acc.get(k, 0) + cs * cb
            if v:
                acc[k] = v
            else:
                del acc[k]


def terms_adams(k: int, a: dict) -> dict:
    if k == 1:
        return a
    out: dict = {}
    for key, c in a.items():
        nk = key_adams(k, key)
        v = out.get(nk, 0) + c
        if v:
            out[nk] = v
        else:
            del out[nk]
    return out


def terms_scale(a: dict, c: Coeff) -> dict:
    if c == 0:
        return {}
    if c == 1:
        return a
    return {k: v * c for k, v in a.items()}


class MotivicScalar:
    """Immutable element of Q[L, symbols] with Adams operations."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict | None = None, *, _trusted: bool = False):
        if terms is None:
            terms = {}
        elif not _trusted:
            clean = {}
            for k, c in terms.items():
                if not isinstance(c, (int, Fraction)):
                    if isinstance(c, Rational):
                        c = Fraction(c)
                    else:
                        raise TypeError(f"coefficient {c!r} is not an exact rational")
                c = _norm(c)
                if c:
                    clean[_canon_key(k)] = clean.get(_canon_key(k), 0) + c
            terms = {k: c for k, c in clean.items() if c}
        self._terms = terms
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: Coeff) -> "MotivicScalar":
        return cls({(): c})

    @classmethod
    def zero(cls) -> "MotivicScalar":
        return cls({}, _trusted=True)

    @classmethod
    def one(cls) -> "MotivicScalar":
        return cls({(): 1}, _trusted=True)

    @classmethod
    def L(cls, k: int = 1) -> "MotivicScalar":
        if k < 0:
            raise ValueError("negative powers of L are not represented")
        if k == 0:
            return cls.one()
        return cls({((LEFSCHETZ, 1, k),): 1}, _trusted=True)

    @classmethod
    def symbol(cls, name: str, adams: int = 1) -> "MotivicScalar":
        if name == LEFSCHETZ:
            raise ValueError("'L' is reserved for the Lefschetz class")
        if adams < 1:
            raise ValueError("adams index must be >= 1")
        return cls({((name, adams, 1),): 1}, _trusted=True)

    @classmethod
    def poly_L(cls, coeffs: Iterable[Coeff]) -> "MotivicScalar":
        """Build sum c_i L^i from a coefficient list (constant term first)."""
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                terms[((LEFSCHETZ, 1, i),) if i else ()] = _norm(Fraction(c))
        return cls(terms, _trusted=True)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def raw(self) -> dict:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == () for k in self._terms)

    def constant_term(self) -> Coeff:
        return self._terms.get((), 0)

    def symbols(self) -> set:
        return {(n, m) for k in self._terms for n, m, _ in k if n != LEFSCHETZ}

    def _coerce(self, other) -> "MotivicScalar | None":
        if isinstance(other, MotivicScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return MotivicScalar.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        terms_add_into(acc, o._terms)
        return MotivicScalar(acc, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MotivicScalar({k: -c for k, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        terms_add_into(acc, o._terms, -1)
        return MotivicScalar(acc, _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MotivicScalar(terms_scale(self._terms, _norm(other)), _trusted=True)
        if isinstance(other, MotivicScalar):
            return MotivicScalar(terms_mul(self._terms, other._terms), _trusted=True)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = MotivicScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def adams(self, k: int) -> "MotivicScalar":
        return scalar_adams(k, self)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_items(self):
        """Terms in a deterministic order: by total degree, then key."""
        return sorted(self._terms.items(), key=lambda kv: (_key_degree(kv[0]), kv[0]), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.sort_items():
            mono = _key_str(k)
            if mono == "":
                parts.append(str(_norm(c)))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                cs = str(c)
                if isinstance(c, Fraction) and c.denominator != 1:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"MotivicScalar({self})"


def _canon_key(k) -> Key:
    if not k:
        return ()
    merged: Dict[Tuple[str, int], int] = {}
    for name, m, e in k:
        if e < 0:
            raise ValueError("negative exponents are not represented")
        if e == 0:
            continue
        if name == LEFSCHETZ:
            m = 1
        merged[(name, m)] = merged.get((name, m), 0) + e
    return tuple(sorted((n, m, e) for (n, m), e in merged.items()))


def _key_degree(k: Key) -> int:
    return sum(e for _, _, e in k)


def _key_str(k: Key) -> str:
    out = []
    for name, m, e in k:
        base = name if (name == LEFSCHETZ or m == 1) else f"psi{m}({name})"
        out.append(base if e == 1 else f"{base}^{e}")
    return "*".join(out)


def scalar_adams(k: int, a: MotivicScalar) -> MotivicScalar:
    if not isinstance(k, int) or k < 1:
        raise ValueError("Adams index must be a positive integer")
    return MotivicScalar(terms_adams(k, a._terms), _trusted=True)


class Specialized:
    """A polynomial over Q in named variables, the image of a specialization."""

    __slots__ = ("terms", "variables")

    def __init__(self, terms: dict, variables: tuple):
        self.terms = {k: c for k, c in terms.items() if c}
        self.variables = variables

    def __eq__(self, other):
        if isinstance(other, Specialized):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, **values) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = Fraction(c)
            for var, e in mono:
                term *= Fraction(values[var]) ** e
            total += term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda kv: (sum(e for _, e in kv[0]), kv[0]), reverse=True):
            m = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append("-" + m)
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def scalar_specialize(a: MotivicScalar, mode: str) -> Specialized:
    """rank: L -> q, symbols become tagged indeterminates; e-polynomial: L -> uv."""
    out: dict = {}
    if mode == "rank":
        for k, c in a._terms.items():
            mono = []
            for name, m, e in k:
                var = "q" if name == LEFSCHETZ else (name if m == 1 else f"{name}[{m}]")
                mono.append((var, e))
            key = tuple(sorted(mono))
            out[key] = out.get(key, 0) + c
        return Specialized(out, ("q",))
    if mode in ("e-polynomial", "epoly"):
        for k, c in a._terms.items():
            e_total = 0
            for name, m, e in k:
                if name != LEFSCHETZ:
                    raise UnsupportedClassError(
                        f"symbol {name!r} has no E-polynomial specialization")
                e_total += e
            key = (("u", e_total), ("v", e_total)) if e_total else ()
            out[key] = out.get(key, 0) + c
        return Specialized(out, ("u", "v"))
    raise ValueError(f"unknown specialization mode {mode!r}")


L = MotivicScalar.L()
ONE = MotivicScalar.one()
ZERO = MotivicScalar.zero()
