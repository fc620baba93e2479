"""Command-line entry point: ``distgraphs <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 incomplete search.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .appendix import (PAPER_TABLE, LConstraint, config_result, appendix_entry, appendix_table,
                       enumerate_configs, to_csv as appendix_csv, to_text as appendix_text)
from .build import DimacsError, SignplaceConfig, build_config, build_gn, from_dimacs
from .cache import ResultCache
from .constructions import cobra, double_cobra, nagy_set, quad_packing, spectrum
from .formulas import alpha_formula, c_const, chi_lower_bound, nagy_alpha, prop9_check
from .model import Graph
from .solver import SOLVER_VERSION, SolverSettings, default_threads, max_independent_set

log = logging.getLogger("distgraphs")

EXIT_OK, EXIT_USAGE, EXIT_INCOMPLETE = 0, 1, 2
DEFAULT_EXACT_MAX_N = 8


class UsageError(Exception):
    pass


def _settings(args, time_limit=None) -> SolverSettings:
    return SolverSettings(threads=args.threads or default_threads(), time_limit=time_limit)


def _open_cache(args) -> ResultCache | None:
    if args.no_cache:
        return None
    return ResultCache(args.cache_dir)


def solve_with_cache(g: Graph, settings: SolverSettings, cache: ResultCache | None) -> dict:
    if cache is not None:
        rec = cache.lookup(g, settings)
        if rec is not None:
            return {"complete": True, "alpha": rec.alpha, "lower": rec.alpha, "upper": rec.alpha,
                    "witness": rec.witness, "nodes": 0, "cached": True}
    rep = max_independent_set(g, settings)
    if rep.complete and cache is not None:
        cache.store(g, rep.alpha, rep.witness.members, settings)
    out = rep.to_dict()
    out["cached"] = False
    return out


# --- commands -------------------------------------------------------------

def cmd_alpha(args) -> tuple[list[dict], int]:
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    mode = args.mode or "both"
    row: dict = {"n": n}
    code = EXIT_OK
    if mode in ("formula", "both"):
        row["formula"] = alpha_formula(n) if n >= 3 else 0
    if mode in ("exact", "both"):
        if n > DEFAULT_EXACT_MAX_N and args.budget is None:
            raise UsageError(f"exact mode is limited to n <= {DEFAULT_EXACT_MAX_N}; pass --budget SECONDS to go further")
        res = solve_with_cache(build_gn(n), _settings(args, args.budget), _open_cache(args))
        row.update(exact=res["alpha"], complete=res["complete"], lower=res["lower"], upper=res["upper"],
                   nodes=res["nodes"], cached=res["cached"])
        if not res["complete"]:
            code = EXIT_INCOMPLETE
    if mode == "both":
        row["match"] = row.get("exact") == row["formula"] if row["complete"] else None
    return [row], code


KIND_ALIASES = {"quad": "quad-packing", "cobra": "cobra", "double-cobra": "double-cobra", "nagy": "nagy-set"}


def _expected_size(kind: str, n: int) -> int:
    return {"quad-packing": 4 * n - 4 * c_const(n), "cobra": 3 * n - 14,
            "double-cobra": 6 * n - 28, "nagy-set": nagy_alpha(n)}[kind]


def cmd_construct(args) -> tuple[list[dict], int]:
    kind = KIND_ALIASES[args.kind]
    makers = {"quad-packing": quad_packing, "cobra": cobra, "double-cobra": double_cobra, "nagy-set": nagy_set}
    try:
        c = makers[kind](args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    row = {"kind": kind, "n": args.n, "size": len(c)}
    if args.verify:
        row["independent"] = c.is_independent()
        row["expected_size"] = _expected_size(kind, args.n)
        row["size_ok"] = len(c) == row["expected_size"]
        row["spectrum"] = sorted(spectrum(c)) if len(c) >= 2 else []
    if args.out:
        Path(args.out).write_text(c.to_text(), encoding="utf-8")
        row["out"] = str(args.out)
    else:
        row["vertices"] = [str(v) for v in c.vertices]
    code = EXIT_OK
    if args.verify and not (row["independent"] and row["size_ok"]):
        code = EXIT_USAGE
    return [row], code


def _cached_configs(configs, cache: ResultCache | None, settings: SolverSettings) -> dict:
    known = {}
    if cache is None:
        return known
    for cfg in configs:
        g = build_config(cfg)
        rec = cache.lookup(g, settings)
        if rec is not None:
            known[cfg] = config_result(cfg, g, rec.alpha, True, rec.alpha, rec.alpha, 0, rec.witness or ())
    return known


def _store_configs(entries, cache: ResultCache | None, known: dict, settings: SolverSettings):
    if cache is None:
        return
    done = {(k.d, k.s) for k in known}
    for e in entries:
        for c in e.configs:
            if c.complete and (c.d, c.s) not in done:
                cache.store(build_config(SignplaceConfig(c.d, c.s)), c.alpha, c.witness, settings)
                done.add((c.d, c.s))


def cmd_appendix(args) -> tuple[list[dict], int, list]:
    threads = args.threads or default_threads()
    settings = SolverSettings(threads=1)
    cache = _open_cache(args)
    if args.all or args.m is None:
        rows = PAPER_TABLE
    else:
        try:
            lc = LConstraint.parse(args.l)
        except ValueError:
            raise UsageError(f"bad --l value {args.l!r}; use N, =N, >=N or any") from None
        rows = ((args.m, lc, None),)
    needed = {c for m, lc, _ in rows for c in enumerate_configs(m, lc)}
    known = _cached_configs(needed, cache, settings)
    if args.all or args.m is None:
        entries = appendix_table(threads=threads, settings=settings, solved=known)
    else:
        m, lc, _ = rows[0]
        entries = [appendix_entry(m, lc, threads=threads, settings=settings, solved=known)]
    _store_configs(entries, cache, known, settings)
    out = []
    for e in entries:
        out.append({
            "m": e.m, "l_constraint": str(e.l_constraint), "paper_bound": e.paper_bound,
            "computed": e.computed, "complete": e.complete, "status": e.status,
            "configs": [{"d": c.d, "s": c.s, "alpha": c.alpha, "order": c.order,
                         "witness_m": c.witness_m, "witness_l": c.witness_l} for c in e.configs],
        })
    code = EXIT_OK if all(e.complete for e in entries) else EXIT_INCOMPLETE
    return out, code, entries


def cmd_chi(args) -> tuple[list[dict], int]:
    lo, hi = args.from_n, args.to_n if args.to_n is not None else args.from_n
    if lo < 3 or hi < lo:
        raise UsageError("need 3 <= --from <= --to")
    rows = []
    for n in range(lo, hi + 1):
        b = chi_lower_bound(n)
        rows.append({"n": n, "order": b.order, "alpha": b.alpha, "bound": b.bound})
    return rows, EXIT_OK


def cmd_solve_dimacs(args) -> tuple[list[dict], int]:
    path = Path(args.path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        g = from_dimacs(text)
    except DimacsError as e:
        raise UsageError(f"{path}: {e}") from None
    res = solve_with_cache(g, _settings(args, args.budget), _open_cache(args))
    row = {"path": str(path), "order": g.order, "edges": g.n_edges, **res}
    return [row], EXIT_OK if res["complete"] else EXIT_INCOMPLETE


def cmd_prop9(args) -> tuple[list[dict], int]:
    r = prop9_check()
    row = {
        "s1_size": r.s1_size,
        "bases_per_pair_missing_first": r.covered_if_missing_first,
        "bases_per_pair_otherwise": r.covered_otherwise,
        "equation": f"{r.covered_if_missing_first}a + {r.covered_otherwise}b = {2 * r.s1_size}",
        "solutions": [list(s) for s in r.solutions],
        "pairs_total": r.pairs_total,
        "feasible_with_total": [list(s) for s in r.feasible],
        "contradiction": r.contradiction,
        "chi_lower_bound_q9": r.chi_bound,
    }
    return [row], EXIT_OK


# --- output ---------------------------------------------------------------

def _flat(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(_flat(x)) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return "" if v is None else v


def render(command: str, params: dict, rows: list[dict], fmt: str, elapsed_ms: int, entries=None) -> str:
    if fmt == "json":
        doc = {"command": command, "params": params, "results": rows,
               "solver_version": SOLVER_VERSION, "version": __version__, "elapsed_ms": elapsed_ms}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if command == "appendix" and entries is not None:
        return appendix_csv(entries) if fmt == "csv" else appendix_text(entries)
    if fmt == "csv":
        cols = list(dict.fromkeys(k for r in rows for k in r))
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _flat(r.get(k)) for k in cols})
        return buf.getvalue()
    if command == "construct" and "vertices" in rows[0] and len(rows) == 1:
        r = rows[0]
        head = [f"{r['kind']} {r['n']} {r['size']}"]
        extra = [f"# {k}: {_flat(v)}" for k, v in r.items() if k not in ("kind", "n", "size", "vertices")]
        return "\n".join(extra + head + r["vertices"]) + "\n"
    lines = []
    for r in rows:
        lines.append("  ".join(f"{k}={_flat(v)}" for k, v in r.items()))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: DISTGRAPHS_THREADS or CPU count)")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--no-cache", action="store_true")

    p = argparse.ArgumentParser(prog="distgraphs", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("alpha", parents=[common], help="independence number of G_n")
    a.add_argument("--n", type=int, required=True)
    g = a.add_mutually_exclusive_group()
    g.add_argument("--exact", dest="mode", action="store_const", const="exact")
    g.add_argument("--formula", dest="mode", action="store_const", const="formula")
    g.add_argument("--both", dest="mode", action="store_const", const="both")
    a.add_argument("--budget", type=float, default=None, help="time budget in seconds")

    c = sub.add_parser("construct", parents=[common], help="generate an extremal independent set")
    c.add_argument("--kind", choices=sorted(KIND_ALIASES), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--verify", action="store_true")
    c.add_argument("--out", default=None)

    ap = sub.add_parser("appendix", parents=[common], help="signplace-configuration table")
    ap.add_argument("--m", type=int, default=None)
    ap.add_argument("--l", default=None, help="place constraint: N, =N, >=N or any")
    ap.add_argument("--all", action="store_true")

    ch = sub.add_parser("chi", parents=[common], help="chromatic lower bounds from alpha(G_n)")
    ch.add_argument("--from", dest="from_n", type=int, required=True)
    ch.add_argument("--to", dest="to_n", type=int, default=None)

    sd = sub.add_parser("solve-dimacs", parents=[common], help="exact MIS of a DIMACS graph")
    sd.add_argument("path")
    sd.add_argument("--budget", type=float, default=None)

    sub.add_parser("prop9", parents=[common], help="counting argument for n = 9")
    return p


COMMANDS = {"alpha": cmd_alpha, "construct": cmd_construct, "appendix": cmd_appendix,
            "chi": cmd_chi, "solve-dimacs": cmd_solve_dimacs, "prop9": cmd_prop9}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    t0 = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    rows, code = result[0], result[1]
    entries = result[2] if len(result) > 2 else None
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("command", "format", "cache_dir", "no_cache")}
    elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    sys.stdout.write(render(args.command, params, rows, args.format, elapsed_ms, entries))
    if code == EXIT_INCOMPLETE:
        print("incomplete: search budget exhausted before the value was proven", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
