"""Integer partitions as weakly decreasing tuples, with the small combinatorics we need."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Tuple

Partition = Tuple[int, ...]
EMPTY: Partition = ()


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return (EMPTY,)
    out: List[Partition] = []

    def rec(rem: int, cap: int, acc: list):
        if rem == 0:
            out.append(tuple(acc))
            return
        for k in range(min(rem, cap), 0, -1):
            acc.append(k)
            rec(rem - k, k, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_upto(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions(k)


def make(parts) -> Partition:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if parts and parts[-1] < 0:
        raise ValueError("negative part")
    return parts


def make_positive(parts) -> Partition:
    p = make(parts)
    if p and p[-1] == 0:
        raise ValueError("partition parts must be positive")
    return p


def from_mults(m: Dict[int, int]) -> Partition:
    out = []
    for i, k in m.items():
        out.extend([i] * k)
    return make(out)


@lru_cache(maxsize=None)
def mults(mu: Partition) -> Tuple[Tuple[int, int], ...]:
    """Multiplicities as sorted (part, count) pairs."""
    return tuple(sorted(Counter(mu).items()))


@lru_cache(maxsize=None)
def zee(mu: Partition) -> int:
    z = 1
    for i, m in mults(mu):
        z *= i ** m * factorial(m)
    return z


_UNION: Dict[Tuple[Partition, Partition], Partition] = {}


def union(a: Partition, b: Partition) -> Partition:
    """The semigroup sum: concatenate parts."""
    if not a:
        return b
    if not b:
        return a
    key = (a, b)
    r = _UNION.get(key)
    if r is None:
        r = tuple(sorted(a + b, reverse=True))
        _UNION[key] = r
    return r


def scale(mu: Partition, k: int) -> Partition:
    return tuple(k * x for x in mu)


def contains(mu: Partition, sub: Partition) -> bool:
    c = Counter(mu)
    c.subtract(Counter(sub))
    return all(v >= 0 for v in c.values())


def difference(mu: Partition, sub: Partition) -> Partition:
    c = Counter(mu)
    c.subtract(Counter(sub))
    out = []
    for k, v in c.items():
        if v < 0:
            raise ValueError(f"{sub} is not contained in {mu}")
        out.extend([k] * v)
    return make(out)


def to_str(mu: Partition) -> str:
    """Exponent-free rendering used in tables: parts separated by spaces."""
    return " ".join(str(x) for x in mu) if mu else "0"


def to_exp_str(mu: Partition) -> str:
    """Exponent notation, e.g. (1^2 2)."""
    if not mu:
        return "()"
    bits = []
    for i, m in mults(mu):
        bits.append(str(i) if m == 1 else f"{i}^{m}")
    return "(" + " ".join(bits) + ")"


def conjugacy_order(mu: Partition) -> int:
    """Size of the S_n conjugacy class of cycle type mu."""
    return factorial(sum(mu)) // zee(mu)


@lru_cache(maxsize=None)
def _chi(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = mu[1:]
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        m = len(newbeta)
        newlam = tuple(x for x in (newbeta[i] - (m - 1 - i) for i in range(m)) if x > 0)
        total += (-1) ** height * _chi(newlam, rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible S_n character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    return _chi(tuple(lam), tuple(mu))
