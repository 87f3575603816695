"""JSON persistence for series, input families and graphs, with line-precise schema errors."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from . import partitions as P
from .formulas import InputSeries, SupportError
from .scalars import LEFSCHETZ, MotivicScalar
from .symfunc import GradedSeries, SymFunc, from_schur

FIXTURE_ENV = "ARTIFACT_FIXTURES"


class SchemaError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None, path: str = ""):
        self.line = line
        self.path = path
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{path + ': ' if path else ''}{msg}")


# ---------------------------------------------------------------- position index

class _Indexer:
    """Map JSON paths to the line where each value starts."""

    def __init__(self, text: str):
        self.s = text
        self.i = 0
        self.line = 1
        self.lines: Dict[tuple, int] = {}

    def _ws(self):
        s = self.s
        while self.i < len(s) and s[self.i] in " \t\r\n":
            if s[self.i] == "\n":
                self.line += 1
            self.i += 1

    def run(self):
        self._ws()
        self._value(())
        return self.lines

    def _value(self, path):
        self._ws()
        self.lines[path] = self.line
        c = self.s[self.i]
        if c == "{":
            self.i += 1
            self._ws()
            if self.s[self.i] == "}":
                self.i += 1
                return
            while True:
                self._ws()
                key = self._string()
                self._ws()
                self.i += 1  # colon
                self._value(path + (key,))
                self._ws()
                c = self.s[self.i]
                self.i += 1
                if c == "}":
                    return
        elif c == "[":
            self.i += 1
            self._ws()
            if self.s[self.i] == "]":
                self.i += 1
                return
            k = 0
            while True:
                self._value(path + (k,))
                k += 1
                self._ws()
                c = self.s[self.i]
                self.i += 1
                if c == "]":
                    return
        elif c == '"':
            self._string()
        else:
            while self.i < len(self.s) and self.s[self.i] not in ",]} \t\r\n":
                self.i += 1

    def _string(self):
        s = self.s
        self.i += 1
        start = self.i
        while s[self.i] != '"':
            if s[self.i] == "\\":
                self.i += 1
            self.i += 1
        raw = s[start:self.i]
        self.i += 1
        return json.loads('"' + raw + '"')


class _Doc:
    def __init__(self, text: str):
        try:
            self.data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SchemaError(f"invalid JSON: {e.msg}", e.lineno) from None
        self.lines = _Indexer(text).run()

    def fail(self, path: tuple, msg: str):
        p = path
        while p and p not in self.lines:
            p = p[:-1]
        raise SchemaError(msg, self.lines.get(p), _path_str(path))


def _path_str(path) -> str:
    out = ""
    for k in path:
        out += f"[{k}]" if isinstance(k, int) else (f".{k}" if out else k)
    return out


# ---------------------------------------------------------------- scalars

def scalar_to_json(c: MotivicScalar) -> list:
    out = []
    for key, v in c.sort_items():
        v = Fraction(v)
        out.append([v.numerator, v.denominator, [[n, m, e] for n, m, e in key]])
    return out


def scalar_from_json(doc: _Doc, data, path) -> MotivicScalar:
    if not isinstance(data, list):
        doc.fail(path, "scalar must be a list of [num, den, monomial] records")
    terms = {}
    for i, rec in enumerate(data):
        p = path + (i,)
        if not (isinstance(rec, list) and len(rec) == 3 and isinstance(rec[0], int)
                and isinstance(rec[1], int) and isinstance(rec[2], list)):
            doc.fail(p, "scalar record must be [numerator, denominator, [[generator, adams, exponent], ...]]")
        if rec[1] == 0:
            doc.fail(p, "zero denominator")
        key = []
        for j, g in enumerate(rec[2]):
            if not (isinstance(g, list) and len(g) == 3 and isinstance(g[0], str)
                    and isinstance(g[1], int) and isinstance(g[2], int) and g[1] >= 1 and g[2] >= 0):
                doc.fail(p + (2, j), "generator must be [name, adams >= 1, exponent >= 0]")
            key.append((g[0], 1 if g[0] == LEFSCHETZ else g[1], g[2]))
        terms[tuple(key)] = terms.get(tuple(key), 0) + Fraction(rec[0], rec[1])
    try:
        return MotivicScalar(terms)
    except ValueError as e:
        doc.fail(path, str(e))


# ---------------------------------------------------------------- series

def _generators(values) -> list:
    gens = set()
    for f in values:
        for _, c in f.items():
            for key in c.raw():
                for n, m, _ in key:
                    gens.add(n if m == 1 else f"{n}[{m}]")
    return sorted(gens)


def _entries(pieces: Dict[int, SymFunc], basis: str) -> list:
    entries = []
    for g in sorted(pieces):
        f = pieces[g]
        coeffs = f.to_schur() if basis == "schur" else f.terms()
        by_n: Dict[int, list] = {}
        for lam, c in sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            if c.is_zero():
                continue
            by_n.setdefault(sum(lam), []).append({"partition": list(lam), "scalar": scalar_to_json(c)})
        for n in sorted(by_n):
            entries.append({"genus": g, "n": n, "terms": by_n[n]})
    return entries


def series_to_json(value: Union[InputSeries, GradedSeries, SymFunc], basis: str = "powersum",
                   g_max: Optional[int] = None) -> dict:
    if basis not in ("powersum", "schur"):
        raise ValueError(f"unknown basis {basis!r}")
    if isinstance(value, InputSeries):
        pieces = dict(value.entries)
        header = {"kind": "inputs", "N": {str(h): f.cap for h, f in sorted(pieces.items())},
                  "provenance": {str(h): t for h, t in sorted(value.provenance.items())}}
    elif isinstance(value, SymFunc):
        pieces = {0: value}
        header = {"kind": "symfunc", "N": value.cap}
    else:
        ts = value.t_exponents()
        top = g_max if g_max is not None else (max(ts) + 1 if ts else 0)
        pieces = {t + 1: value.coefficient(t) for t in range(min(ts + [-1]), top)}
        header = {"kind": "graded", "weight_cap": value.cap}
    gens = _generators(pieces.values())
    genera = sorted(pieces)
    header.update({"generators": gens, "basis": basis,
                   "genus_range": [genera[0], genera[-1]] if genera else []})
    return {"header": header, "entries": _entries(pieces, basis)}


def _load_entries(doc: _Doc, basis: str) -> Dict[int, Dict[Tuple[int, ...], MotivicScalar]]:
    data = doc.data
    ents = data.get("entries")
    if not isinstance(ents, list):
        doc.fail(("entries",), "'entries' must be a list")
    out: Dict[int, Dict[Tuple[int, ...], MotivicScalar]] = {}
    for i, e in enumerate(ents):
        p = ("entries", i)
        if not isinstance(e, dict):
            doc.fail(p, "entry must be an object")
        for k in ("genus", "n", "terms"):
            if k not in e:
                doc.fail(p, f"entry is missing '{k}'")
        g, n = e["genus"], e["n"]
        if not isinstance(g, int) or g < 0:
            doc.fail(p + ("genus",), "genus must be a nonnegative integer")
        if not isinstance(n, int) or n < 0:
            doc.fail(p + ("n",), "n must be a nonnegative integer")
        if not isinstance(e["terms"], list):
            doc.fail(p + ("terms",), "terms must be a list")
        slot = out.setdefault(g, {})
        for j, term in enumerate(e["terms"]):
            q = p + ("terms", j)
            if not isinstance(term, dict) or "partition" not in term or "scalar" not in term:
                doc.fail(q, "term must have 'partition' and 'scalar'")
            lam = term["partition"]
            if not (isinstance(lam, list) and all(isinstance(x, int) and x > 0 for x in lam)):
                doc.fail(q + ("partition",), "partition must be a list of positive integers")
            if sum(lam) != n:
                doc.fail(q + ("partition",), f"partition {lam} does not have size n = {n}")
            c = scalar_from_json(doc, term["scalar"], q + ("scalar",))
            lam = P.make_positive(lam)
            slot[lam] = slot.get(lam, MotivicScalar.zero()) + c
    return out


def _to_symfunc(coeffs, basis, N) -> SymFunc:
    if basis == "schur":
        return from_schur(coeffs, N)
    return SymFunc(coeffs, N)


def series_from_json(text: str, allow_unsupported: bool = False):
    """Parse a series file into an InputSeries, GradedSeries or SymFunc (by header kind)."""
    doc = _Doc(text)
    data = doc.data
    if not isinstance(data, dict):
        doc.fail((), "top level must be an object")
    header = data.get("header")
    if not isinstance(header, dict):
        doc.fail(("header",), "missing 'header' object")
    basis = header.get("basis", "powersum")
    if basis not in ("powersum", "schur"):
        doc.fail(("header", "basis"), "basis must be 'powersum' or 'schur'")
    kind = header.get("kind", "inputs")
    if kind not in ("inputs", "graded", "symfunc"):
        doc.fail(("header", "kind"), "kind must be 'inputs', 'graded' or 'symfunc'")
    pieces = _load_entries(doc, basis)
    if kind == "inputs":
        Nh = header.get("N")
        caps = {}
        for g in pieces:
            if isinstance(Nh, dict):
                cap = Nh.get(str(g))
            else:
                cap = Nh
            if cap is not None and not isinstance(cap, int):
                doc.fail(("header", "N"), "N must be an integer, null, or a map genus -> integer")
            caps[g] = cap
        if isinstance(Nh, dict):
            for k, v in Nh.items():
                if int(k) not in pieces:
                    pieces[int(k)] = {}
                    caps[int(k)] = v
        prov = header.get("provenance", {})
        entries = {g: _to_symfunc(coeffs, basis, caps[g]) for g, coeffs in pieces.items()}
        for g, f in entries.items():
            for lam in f.terms():
                if not allow_unsupported and not sum(lam) > 2 - 2 * g:
                    line = _find_entry_line(doc, g, sum(lam))
                    raise SchemaError(
                        f"support rule violated: genus {g} entry in degree {sum(lam)} (need n > {2 - 2 * g})",
                        line, "entries")
        try:
            return InputSeries(entries, {int(k): v for k, v in prov.items()}, allow_unsupported)
        except (SupportError, ValueError) as e:
            raise SchemaError(str(e), doc.lines.get(("header",))) from None
    if kind == "symfunc":
        return _to_symfunc(pieces.get(0, {}), basis, header.get("N"))
    cap = header.get("weight_cap")
    coeffs = {g - 1: _to_symfunc(c, basis, None) for g, c in pieces.items()}
    d = {}
    for t, f in coeffs.items():
        for (_, lam), v in f.raw().items():
            d[(t, lam)] = v
    return GradedSeries(d, cap, _raw=True)


def _find_entry_line(doc: _Doc, g: int, n: int) -> Optional[int]:
    for i, e in enumerate(doc.data.get("entries", [])):
        if e.get("genus") == g and e.get("n") == n:
            return doc.lines.get(("entries", i))
    return None


def load_series(path, allow_unsupported: bool = False):
    text = Path(path).read_text()
    return series_from_json(text, allow_unsupported)


def save_series(value, path, basis: str = "powersum", g_max: Optional[int] = None) -> None:
    Path(path).write_text(dumps(series_to_json(value, basis, g_max)))


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


# ---------------------------------------------------------------- fixtures

def fixture_dir() -> Optional[Path]:
    env = os.environ.get(FIXTURE_ENV)
    if env:
        p = Path(env)
        return p if p.is_dir() else None
    for base in (Path.cwd(), Path(__file__).resolve().parents[2]):
        p = base / "fixtures"
        if p.is_dir():
            return p
    return None


def load_fixtures(genera=(1, 2, 3), directory: Optional[Path] = None) -> Optional[InputSeries]:
    """Literature inputs a_h, one file a<h>.json each; None when any is missing."""
    d = directory or fixture_dir()
    if d is None:
        return None
    entries = {}
    prov = {}
    for h in genera:
        f = Path(d) / f"a{h}.json"
        if not f.exists():
            return None
        s = load_series(f)
        if not isinstance(s, InputSeries) or h not in s.entries:
            raise SchemaError(f"{f} does not provide a_{h}")
        if s.provenance.get(h) != "fixture":
            raise SchemaError(f"{f} must carry provenance 'fixture' for genus {h}")
        entries[h] = s.entries[h]
        prov[h] = "fixture"
    return InputSeries(entries, prov)
