"""Command line: solve, info, stats, bench.

Exit codes: 0 success, 1 budget or time limit exhausted, 2 bad input or an
instance outside the solvers' preconditions.
"""

from __future__ import annotations

import argparse
import csv
import json
import multiprocessing
import sys
import time
from pathlib import Path

import tomli

from .arith import poly_str
from .comprep import CompactRep, cr_norm, element_to_strings
from .field import FieldError, FunctionField
from .parse import PolySyntaxError, bivariate_to_coeffs, parse_bivariate, parse_poly
from .solvers import ALGORITHMS, PreconditionError, check_c, search_stats, unit_matrix
from .sunit import BudgetExceeded

EXIT_OK, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2
CSV_COLUMNS = ["field", "n", "g", "q", "deg_c", "algorithm", "seconds", "status", "solutions"]


class SpecError(ValueError):
    """Malformed field-spec or suite file; the message carries line and column."""


# -- field specs -----------------------------------------------------------------


def _locate(text, key):
    """(line, column) of the first character inside the quoted value of ``key``."""
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.lstrip()
        if stripped.startswith(key) and "=" in stripped:
            q = line.find('"', line.find("="))
            if q < 0:
                q = line.find("'", line.find("="))
            return lineno, q + 2
    return 1, 1


def load_field_spec(path) -> FunctionField:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"{path}: cannot read ({exc.strerror})") from None
    return parse_field_spec(text, str(path))


def parse_field_spec(text: str, origin: str = "<spec>") -> FunctionField:
    try:
        data = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        line = getattr(exc, "lineno", "?")
        col = getattr(exc, "colno", "?")
        msg = getattr(exc, "msg", str(exc))
        raise SpecError(f"{origin}:{line}:{col}: {msg}") from None
    for key in ("q", "f"):
        if key not in data:
            raise SpecError(f"{origin}:1:1: missing key '{key}'")
    q = data["q"]
    if not isinstance(q, int) or isinstance(q, bool):
        line, _ = _locate(text, "q")
        raise SpecError(f"{origin}:{line}:1: q must be an integer")
    if not isinstance(data["f"], str):
        line, _ = _locate(text, "f")
        raise SpecError(f"{origin}:{line}:1: f must be a quoted polynomial")
    try:
        terms = parse_bivariate(data["f"], q)
    except PolySyntaxError as exc:
        line, col = _locate(text, "f")
        raise SpecError(f"{origin}:{line}:{col + exc.column - 1}: {exc.args[0]}") from None
    name = data.get("name") or Path(origin).stem
    return FunctionField(q, bivariate_to_coeffs(terms, q), name=name)


def parse_c(text: str, q: int):
    try:
        return parse_poly(text, q)
    except PolySyntaxError as exc:
        raise SpecError(f"--c:1:{exc.column}: {exc.args[0]}") from None


# -- formatting ----------------------------------------------------------------------


def format_count(value: int, q: int | None = None, limit: int = 30) -> str:
    """Decimal, or q^E when the decimal expansion would be unreasonably long."""
    s = str(value)
    if len(s) <= limit or not q:
        return s
    e, v = 0, value
    while v % q == 0 and v > 1:
        v //= q
        e += 1
    if v == 1:
        return f"{q}^{e}"
    return f"~10^{len(s) - 1}"


def _solution_payload(a):
    if isinstance(a, CompactRep):
        return a.to_json()
    return element_to_strings(a)


def _solution_text(a):
    if isinstance(a, CompactRep):
        return json.dumps(a.to_json())
    return str(a)


# -- commands -------------------------------------------------------------------------


def _solve(F, c, algorithm, timeout, threads):
    deadline = time.perf_counter() + timeout if timeout else None
    if algorithm == "oracle":
        from .oracle import brute_solve

        return brute_solve(F, c), {}
    fn = ALGORITHMS[algorithm]
    kwargs = {"deadline": deadline}
    if algorithm != "gp" and threads > 1:
        kwargs["workers"] = threads
    S = fn(F, c, **kwargs)
    return S.solutions, S.stats


def cmd_solve(args) -> int:
    t0 = time.perf_counter()
    F = load_field_spec(args.field)
    t1 = time.perf_counter()
    c = check_c(F, parse_c(args.c, F.q))
    sols, stats = _solve(F, c, args.algorithm, args.timeout, args.threads)
    t2 = time.perf_counter()
    timing = {"field": round(t1 - t0, 4), "solve": round(t2 - t1, 4)}
    if args.output == "json":
        out = {
            "field": F.name,
            "q": F.q,
            "f": F.f_str(),
            "c": poly_str(c),
            "algorithm": args.algorithm,
            "count": len(sols),
            "solutions": [_solution_payload(a) for a in sols],
            "stats": {k: v for k, v in stats.items() if k != "seconds"},
            "timing": timing,
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"field {F.name}: q={F.q}, n={F.n}, g={F.genus}")
        print(f"c = {poly_str(c)}, algorithm {args.algorithm}")
        print(f"{len(sols)} solution(s) up to associates")
        for i, a in enumerate(sols, 1):
            norm = cr_norm(a) if isinstance(a, CompactRep) else a.norm()
            print(f"  [{i}] {_solution_text(a)}")
            print(f"      norm = {norm}")
        for k, v in stats.items():
            if k != "seconds":
                print(f"{k}: {v}")
        print(f"time: field {timing['field']:.3f}s, solve {timing['solve']:.3f}s")
    return EXIT_OK


def cmd_info(args) -> int:
    F = load_field_spec(args.field)
    places = ", ".join(f"e={P.e} deg={P.degree}" for P in F.infinite_places)
    k = len(F.infinite_places)
    count = ["no", "one", "two", "three", "four", "five"][k] if k <= 5 else str(k)
    word = f"{count} infinite place" + ("s" if k != 1 else "")
    print(f"field {F.name}: q={F.q}, f = {F.f_str()}")
    print(f"n={F.n}, g={F.genus}, C_f={F.C_f}")
    print(f"g={F.genus}, {word} {places}, unit rank {F.unit_rank}")
    print("reduced basis norms: " + ", ".join(str(s) for s in F.inf_norms))
    try:
        M = unit_matrix(F, args.budget)
        print("unit value matrix: " + (json.dumps(M.rows) if M.rows else "[] (no units beyond constants)"))
        print(f"regulator: {M.regulator}")
    except BudgetExceeded as exc:
        print(f"unit value matrix: unavailable ({exc})")
    try:
        from .sunit import class_group_small

        G = class_group_small(F, args.budget)
        print(f"class group Cl0: order {G.order}, invariants {G.invariants or '[] (trivial)'}")
    except BudgetExceeded as exc:
        print(f"class group: unavailable ({exc})")
    return EXIT_OK


def cmd_stats(args) -> int:
    F = load_field_spec(args.field)
    c = check_c(F, parse_c(args.c, F.q))
    st = search_stats(F, c)
    q = F.q
    if args.output == "json":
        print(json.dumps({
            "gp_count": format_count(st.gp_count, q),
            "gp_exponent": st.gp_exponent,
            "tuple_bound": st.tuple_bound,
            "ideal_count": st.ideal_count,
        }))
    else:
        print(f"Gaal-Pohst candidates: {format_count(st.gp_count, q)}")
        print(f"exhaustive-cr tuples:  {st.tuple_bound}")
        print(f"index-calculus ideals: {st.ideal_count}")
    return EXIT_OK


# -- bench -------------------------------------------------------------------------------


def _bench_worker(field_path, c_text, algorithm, threads, conn):
    try:
        F = load_field_spec(field_path)
        c = check_c(F, parse_c(c_text, F.q))
        t = time.process_time()
        sols, _ = _solve(F, c, algorithm, None, threads)
        conn.send(("OK", time.process_time() - t, len(sols)))
    except (BudgetExceeded, TimeoutError):
        conn.send(("TIMEOUT", None, None))
    except Exception as exc:  # reported in the CSV, the run goes on
        conn.send(("ERROR", None, f"{type(exc).__name__}: {exc}"))
    finally:
        conn.close()


def run_bench_row(field_path, c_text, algorithm, timeout, threads=1, repeat=1):
    """(status, CPU seconds, solutions) for one row; best of ``repeat`` child-process runs."""
    best = None
    for _ in range(max(1, repeat)):
        status, secs, sols = _run_once(field_path, c_text, algorithm, timeout, threads)
        if status != "OK":
            return status, secs, sols
        if best is None or secs < best[1]:
            best = (status, secs, sols)
    return best


def _run_once(field_path, c_text, algorithm, timeout, threads):
    ctx = multiprocessing.get_context("fork")
    recv, send = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_bench_worker, args=(field_path, c_text, algorithm, threads, send))
    start = time.perf_counter()
    proc.start()
    send.close()
    if recv.poll(timeout):
        status, secs, sols = recv.recv()
    else:
        status, secs, sols = "TIMEOUT", None, None
    elapsed = time.perf_counter() - start
    if proc.is_alive():
        proc.kill()
    proc.join()
    if status == "TIMEOUT":
        secs = elapsed
    return status, secs, sols


def load_suite(path) -> list:
    """Rows (field_path, c, algorithm, repeat) from a TOML suite with [[case]] tables."""
    path = Path(path)
    try:
        data = tomli.loads(path.read_text())
    except OSError as exc:
        raise SpecError(f"{path}: cannot read ({exc.strerror})") from None
    except tomli.TOMLDecodeError as exc:
        raise SpecError(f"{path}:{getattr(exc, 'lineno', '?')}:{getattr(exc, 'colno', '?')}: "
                        f"{getattr(exc, 'msg', str(exc))}") from None
    rows = []
    default_algs = data.get("algorithms", ["index-calculus", "exhaustive-cr", "gp"])
    default_repeat = data.get("repeat", 1)
    for i, case in enumerate(data.get("case", []), 1):
        if "field" not in case or "c" not in case:
            raise SpecError(f"{path}: case {i} needs 'field' and 'c'")
        fp = Path(case["field"])
        if not fp.is_absolute():
            fp = path.parent / fp
        for alg in case.get("algorithms", default_algs):
            if alg not in ALGORITHMS and alg != "oracle":
                raise SpecError(f"{path}: case {i}: unknown algorithm {alg!r}")
            rows.append((str(fp), case["c"], alg, case.get("repeat", default_repeat)))
    return rows


def cmd_bench(args) -> int:
    rows = load_suite(args.suite)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    records = []
    fields = {}
    with out.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for field_path, c_text, alg, repeat in rows:
            try:
                if field_path not in fields:
                    F = load_field_spec(field_path)
                    fields[field_path] = (F.name, F.n, F.genus, F.q)
                name, n, g, q = fields[field_path]
                deg_c = parse_c(c_text, q).deg
            except (SpecError, FieldError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                name, n, g, q, deg_c = Path(field_path).stem, "", "", "", ""
                status, secs, sols = "ERROR", None, None
            else:
                status, secs, sols = run_bench_row(field_path, c_text, alg, args.timeout,
                                                   args.threads, repeat)
            rec = [name, n, g, q, deg_c, alg, f"{secs:.4f}" if secs is not None else "",
                   status, sols if status == "OK" else ""]
            writer.writerow(rec)
            fh.flush()
            records.append(dict(zip(CSV_COLUMNS, rec)))
            if not args.quiet:
                print(",".join(str(x) for x in rec), flush=True)
    if records:
        write_figures(records, out)
    return EXIT_OK


def write_figures(records, csv_path: Path):
    """Average seconds against n and against g, one line per algorithm (PNG)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    for axis in ("n", "g"):
        data = {}
        for r in records:
            if r["status"] != "OK":
                continue
            data.setdefault(r["algorithm"], {}).setdefault(int(r[axis]), []).append(float(r["seconds"]))
        if not data:
            continue
        fig, ax = plt.subplots(figsize=(5, 3.5))
        for alg in sorted(data):
            xs = sorted(data[alg])
            ys = [sum(data[alg][x]) / len(data[alg][x]) for x in xs]
            ax.plot(xs, ys, marker="o", label=alg)
        ax.set_xlabel(axis)
        ax.set_ylabel("average seconds")
        ax.set_yscale("log")
        ax.legend()
        fig.tight_layout()
        fig.savefig(csv_path.with_name(f"{csv_path.stem}_{axis}.png"), dpi=120)
        plt.close(fig)


# -- entry point -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ffnorm", description="Norm equations in global function fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_c):
        p.add_argument("--field", required=True, help="field-spec file (q = ..., f = \"...\")")
        if need_c:
            p.add_argument("--c", required=True, help="right-hand side, a polynomial in x")
        p.add_argument("--output", choices=["text", "json"], default="text")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--timeout", type=float, default=None, help="seconds (solve: none by default)")

    p = sub.add_parser("solve", help="solve N(alpha) = c up to constants")
    common(p, True)
    p.add_argument("--algorithm", choices=["gp", "exhaustive-cr", "index-calculus", "oracle"],
                   default="index-calculus")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("info", help="field invariants")
    common(p, False)
    p.add_argument("--budget", type=int, default=50000, help="class enumeration limit")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("stats", help="search-space sizes of the three solvers")
    common(p, True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bench", help="run a suite, write CSV and figures")
    p.add_argument("suite", help="TOML suite with [[case]] field/c/algorithms entries")
    p.add_argument("--out", default="bench.csv")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timeout", type=float, default=300.0)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, FieldError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, TimeoutError) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
