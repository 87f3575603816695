"""Command-line front end: ``artifact <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional

from . import formulas as F
from . import graphs as GR
from . import partitions as P
from .ppchar import orbisum_K_table, orbisum_maps_table, orbisum_O_table, ppchar
from .seriesio import SchemaError, dumps, load_series, scalar_to_json, series_to_json
from .symfunc import GradedSeries, SymFunc, TruncationError

THREADS_ENV = "ARTIFACT_THREADS"


class UserError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UserError(message)


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise UserError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UserError(f"{THREADS_ENV} must be a positive integer")
    return n


def _positive(name):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < 0:
            raise argparse.ArgumentTypeError(f"{name} must be nonnegative")
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="artifact", description="Equivariant Serre characteristics of moduli of stable curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, genus=True, max_n=True, inputs=True):
        if max_n:
            sp.add_argument("--max-n", type=_positive("--max-n"), default=4, help="largest number of markings n")
        if genus:
            sp.add_argument("--max-genus", type=_positive("--max-genus"), default=1)
        if inputs:
            sp.add_argument("--inputs", help="series file with a_h (default: genus-0 oracle only)")
        sp.add_argument("--basis", choices=("schur", "powersum"), default=None)
        sp.add_argument("--format", choices=("table", "json"), default="table")
        sp.add_argument("--out", help="write output here instead of stdout")

    common(sub.add_parser("gk", help="Getzler-Kapranov formula"))
    sp = sub.add_parser("thmB", help="sum over all connected graphs")
    common(sp)
    sp.add_argument("--method", choices=("graphs", "theta"), default="graphs")
    sp = sub.add_parser("thmA", help="fixed genus g >= 2 via stable graphs")
    common(sp, genus=False)
    sp.add_argument("--genus", type=_positive("--genus"), required=True)
    sp = sub.add_parser("ct", help="graph-genus gamma part (gamma = 0: compact type)")
    common(sp, genus=False)
    sp.add_argument("--genus", type=_positive("--genus"), required=True)
    sp.add_argument("--graph-genus", type=_positive("--graph-genus"), default=0)
    common(sub.add_parser("core", help="core functional equation"))
    sp = sub.add_parser("maps", help="torus-fixed stable maps")
    common(sp)
    sp.add_argument("--target-pr", type=_positive("--target-pr"))
    sp.add_argument("--torus-graph")
    sp.add_argument("--degree", required=True, help="curve class: an integer or comma-separated vector")
    sp = sub.add_parser("ppchar", help="Polya-Petersen character of a graph file")
    sp.add_argument("--inputs", required=True, help="graph JSON")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.add_argument("--out")
    sp = sub.add_parser("orbisum", help="orbisum tables O, K, K^(gamma) or O_{X,beta}")
    sp.add_argument("--degree", help="O: max edges; maps: curve class")
    sp.add_argument("--genus", type=_positive("--genus"))
    sp.add_argument("--graph-genus", type=_positive("--graph-genus"))
    sp.add_argument("--target-pr", type=_positive("--target-pr"))
    sp.add_argument("--torus-graph")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.add_argument("--out")
    sp = sub.add_parser("genus0", help="a_0, the open genus-0 series, from the point-count oracle")
    sp.add_argument("--max-n", type=_positive("--max-n"), default=5)
    sp.add_argument("--basis", choices=("schur", "powersum"), default=None)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.add_argument("--out")
    sp = sub.add_parser("bounds", help="a-priori truncation requirements")
    sp.add_argument("--max-genus", type=_positive("--max-genus"), default=1)
    sp.add_argument("--max-n", type=_positive("--max-n"), default=4)
    sub.add_parser("selftest", help="fast fixture-free checks")
    return p


# ---------------------------------------------------------------- helpers

def _inputs(args, g_max: int, N: int) -> F.InputSeries:
    need = F.required_input_degrees(g_max, N)
    if args.inputs:
        try:
            inp = load_series(args.inputs)
        except FileNotFoundError:
            raise UserError(f"no such file: {args.inputs}") from None
        if not isinstance(inp, F.InputSeries):
            raise UserError(f"{args.inputs} is not an input-series file")
        missing = [h for h in need if h >= 1 and h not in inp.entries]
        if 0 not in inp.entries:
            inp = F.InputSeries({**inp.entries, 0: F.genus0_smooth(max(3, need[0]))},
                                {**inp.provenance, 0: "oracle"})
    else:
        inp = F.genus0_inputs(max(3, need[0]))
        missing = [h for h in need if h >= 1]
    if missing:
        print("note: no input for genus " + ", ".join(map(str, missing)) + "; treated as zero",
              file=sys.stderr)
    return inp


def _render_scalar(c) -> str:
    s = str(c)
    return f"({s})" if (" + " in s or " - " in s) else s


def _table_symfunc(f: SymFunc, basis: str, label: str, N: int) -> List[str]:
    coeffs = f.to_schur() if basis == "schur" else f.terms()
    sym = "s" if basis == "schur" else "p"
    lines = []
    for n in range(N + 1):
        body = ""
        for lam, c in sorted(coeffs.items(), key=lambda kv: kv[0], reverse=True):
            if sum(lam) != n or c.is_zero():
                continue
            sign = " + "
            if all(v < 0 for v in c.raw().values()):
                sign, c = " - ", -c
            mono = f"{sym}[{P.to_str(lam)}]"
            term = mono if c == 1 else f"{_render_scalar(c)}*{mono}"
            if not body:
                body = term if sign == " + " else "-" + term
            else:
                body += sign + term
        if body:
            lines.append(f"{label} n={n}: " + body)
    return lines


def _emit(args, text: str):
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _output_graded(args, series: GradedSeries, g_max: int, N: int, g_min: int = 0):
    basis = args.basis or ("schur" if args.format == "table" else "powersum")
    if args.format == "json":
        pieces = {g: series.coefficient(g - 1).restrict(degree=N) for g in range(g_min, g_max + 1)}
        doc = series_to_json(_pieces_as_graded(pieces), basis, g_max + 1)
        doc["header"]["N"] = N
        _emit(args, dumps(doc))
        return
    lines = []
    for g in range(g_min, g_max + 1):
        lines += _table_symfunc(series.coefficient(g - 1), basis, f"g={g}", N)
    _emit(args, "\n".join(lines) + ("\n" if lines else ""))


def _pieces_as_graded(pieces) -> GradedSeries:
    d = {}
    for g, f in pieces.items():
        for (_, lam), v in f.raw().items():
            d[(g - 1, lam)] = v
    return GradedSeries(d, None, _raw=True)


def _output_symfunc(args, f: SymFunc, g: int, N: int):
    basis = args.basis or ("schur" if args.format == "table" else "powersum")
    if args.format == "json":
        doc = series_to_json(_pieces_as_graded({g: f}), basis, g)
        doc["header"]["N"] = N
        _emit(args, dumps(doc))
        return
    lines = _table_symfunc(f, basis, f"g={g}", N)
    _emit(args, "\n".join(lines) + ("\n" if lines else ""))


def _class(text: str):
    try:
        return tuple(int(x) for x in str(text).split(","))
    except ValueError:
        raise UserError(f"curve class must be integers separated by commas, got {text!r}") from None


def _torus(args) -> GR.TorusGraph:
    if args.torus_graph and args.target_pr is not None:
        raise UserError("give either --torus-graph or --target-pr, not both")
    if args.torus_graph:
        try:
            data = json.loads(Path(args.torus_graph).read_text())
            return GR.TorusGraph.from_json(data)
        except (OSError, ValueError, KeyError, TypeError) as e:
            raise UserError(f"bad torus graph file: {e}") from None
    if args.target_pr is None:
        raise UserError("maps needs --target-pr or --torus-graph")
    return GR.TorusGraph.projective_space(args.target_pr)


def _load_graph(path) -> GR.Graph:
    try:
        data = json.loads(Path(path).read_text())
        return GR.graph_from_json(data)
    except FileNotFoundError:
        raise UserError(f"no such file: {path}") from None
    except (ValueError, KeyError, TypeError, IndexError) as e:
        raise UserError(f"bad graph file: {e}") from None


def _theta_rows(table, fmt):
    if fmt == "json":
        return dumps([{"theta": th.to_json(), "value": str(v)} for th, v in table])
    width = max((len(str(th)) for th, _ in table), default=0)
    return "".join(f"{str(th):<{width}}  {v}\n" for th, v in table)


# ---------------------------------------------------------------- commands

def cmd_gk(args):
    g, N = args.max_genus, args.max_n
    out = F.gk_formula(_inputs(args, g, N), g, N)
    _output_graded(args, out, g, N)


def cmd_thmB(args):
    g, N = args.max_genus, args.max_n
    out = F.theorem_B(_inputs(args, g, N), g, N, method=args.method)
    _output_graded(args, out, g, N)


def cmd_core(args):
    g, N = args.max_genus, args.max_n
    out = F.theorem_core(_inputs(args, g, N), g, N)
    _output_graded(args, out, g, N)


def cmd_thmA(args):
    g, N = args.genus, args.max_n
    if g < 2:
        raise UserError("thmA needs --genus >= 2 (use thmB or gk for g <= 1)")
    out = F.theorem_A(g, _inputs(args, g, N), N)
    _output_symfunc(args, out, g, N)


def cmd_ct(args):
    g, N = args.genus, args.max_n
    if g < 2:
        raise UserError("ct needs --genus >= 2")
    if args.graph_genus > g:
        raise UserError("--graph-genus cannot exceed --genus")
    out = F.theorem_ct(g, args.graph_genus, _inputs(args, g, N), N)
    _output_symfunc(args, out, g, N)


def cmd_maps(args):
    T = _torus(args)
    beta = _class(args.degree)
    g, N = args.max_genus, args.max_n
    abar = F.gk_formula(_inputs(args, g, N), g, N)
    out = F.theorem_C(T, beta, abar, g_max=g).truncate(F.weight_bound(g, N))
    _output_graded(args, out, g, N)


def cmd_ppchar(args):
    G = _load_graph(args.inputs)
    z = ppchar(G)
    _emit(args, _theta_rows(z.items(), args.format))


def cmd_orbisum(args):
    if args.target_pr is not None or args.torus_graph:
        if args.degree is None:
            raise UserError("orbisum for maps needs --degree")
        T = _torus(args)
        table = orbisum_maps_table(T, _class(args.degree))
        _emit(args, _theta_rows(list(table.items()), args.format))
        return
    if args.genus is not None:
        if args.genus < 2:
            raise UserError("K is defined for --genus >= 2")
        table = orbisum_K_table(args.genus, args.graph_genus)
        rows = sorted(table.items(), key=lambda kv: tuple(t.sort_key() for t in kv[0]))
        if args.format == "json":
            text = dumps([{"thetas": [t.to_json() for t in tup], "value": str(v)} for tup, v in rows])
        else:
            text = "".join(" ; ".join(str(t) for t in tup) + f"  {v}\n" for tup, v in rows)
        _emit(args, text)
        return
    if args.degree is None:
        raise UserError("orbisum needs --degree (max edges), --genus, or a target")
    try:
        m = int(args.degree)
    except ValueError:
        raise UserError("--degree must be an integer for the O table") from None
    table = orbisum_O_table(m)
    _emit(args, _theta_rows(list(table.items()), args.format))


def cmd_genus0(args):
    N = args.max_n
    if N < 3:
        raise UserError("--max-n must be at least 3 for genus 0")
    out = F.genus0_smooth(N).graded(-1)
    _output_graded(args, out, 0, N)


def cmd_bounds(args):
    sys.stdout.write(dumps(F.a_priori_bounds(args.max_genus, args.max_n)))


def cmd_selftest(args):
    from .selftest import run
    ok = run(sys.stdout)
    if not ok:
        raise AssertionError("selftest failed")


COMMANDS = {
    "gk": cmd_gk, "thmB": cmd_thmB, "thmA": cmd_thmA, "ct": cmd_ct, "core": cmd_core,
    "maps": cmd_maps, "ppchar": cmd_ppchar, "orbisum": cmd_orbisum, "genus0": cmd_genus0,
    "bounds": cmd_bounds, "selftest": cmd_selftest,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        _threads()
        args = build_parser().parse_args(argv)
        COMMANDS[args.command](args)
        return 0
    except UserError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (TruncationError, SchemaError, F.SupportError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:
        # --help and friends
        return int(e.code or 0)
    except Exception as e:  # internal failure
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
