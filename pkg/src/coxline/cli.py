"""Command-line front end.

Exit codes: 0 success, 2 infeasible design or malformed input, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .analysis import alphas, asymptotic_wer, exact_word_error, union_bound
from .document import DocumentError, code_to_document, dumps, load_document
from .errors import DesignError
from .linecode import InvariantViolation, design_code, verify_code
from .optimizer import MAX_B, enumerate_designs
from .sim import SimConfig, simulate
from .tables import TABLE

EXIT_INFEASIBLE = 2
EXIT_INVARIANT = 3


def _vec(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("()").split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer vector {text!r}") from exc


def _roots(text: str) -> list[list[int]]:
    return [_vec(part) for part in text.split(";") if part.strip()]


def _etas(args) -> list[float]:
    if args.eta_range:
        try:
            start, stop, step = (float(x) for x in args.eta_range.split(":"))
        except ValueError as exc:
            raise DocumentError(f"bad --eta-range {args.eta_range!r}") from exc
        count = int(round((stop - start) / step)) + 1
        return [start + i * step for i in range(count)]
    return [float(x) for x in args.eta.split(",") if x]


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)


def _fmt(x: float) -> str:
    return repr(float(x))


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _fail(code: int, reason: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": reason, "message": message}) + "\n")
    return code


def _candidate_summary(c) -> dict:
    out = {
        "partition": list(c.partition),
        "w1": list(c.w1.components) if c.w1 else None,
        "feasible": c.feasible,
    }
    if c.feasible:
        out.update(
            {
                "root_permutations": [list(r) for r in c.rootset.roots],
                "alphas": list(c.profile.alphas),
                "d_min_sq_normalized": str(c.normalized_d_min),
                "negation": c.negation,
                "cliques": c.cliques,
            }
        )
    else:
        out["reason"] = c.reason
        out["skipped"] = c.skipped
    return out


def cmd_design(args) -> int:
    if args.b is not None:
        ranked = enumerate_designs(args.b, max_b=args.max_b)
        best = next((c for c in ranked if c.feasible), None)
        if best is None:
            return _fail(EXIT_INFEASIBLE, "design-infeasible", f"no feasible design for b={args.b}")
        doc = code_to_document(best.code, best.profile)
        doc["search"] = [_candidate_summary(c) for c in ranked]
    else:
        code = design_code(args.w1, roots=args.roots, allow_negation=args.allow_negation)
        verify_code(code)
        doc = code_to_document(code)
    _emit(dumps(doc), args.output)
    return 0


def cmd_search(args) -> int:
    ranked = enumerate_designs(args.b, max_b=args.max_b)
    if args.format == "json":
        _emit(json.dumps([_candidate_summary(c) for c in ranked], indent=2) + "\n", args.output)
        return 0
    header = ["rank", "partition", "w1", "feasible", "d_min_sq_normalized", "alphas", "reason"]
    rows = []
    for i, c in enumerate(ranked, 1):
        rows.append(
            [
                i if c.feasible else "",
                "+".join(map(str, c.partition)),
                " ".join(map(str, c.w1.components)) if c.w1 else "",
                int(c.feasible),
                str(c.normalized_d_min) if c.feasible else "",
                " ".join(f"{a:.4f}" for a in c.profile.alphas) if c.feasible else "",
                c.reason,
            ]
        )
    if args.format == "csv":
        _emit(_csv(header, rows), args.output)
    else:
        lines = [f"{'rank':>4}  {'partition':<14} {'w1':<28} {'d_min^2/E':<10} alphas / reason"]
        for r in rows:
            tail = r[5] if r[3] else r[6]
            lines.append(f"{str(r[0]):>4}  {r[1]:<14} {r[2]:<28} {r[4]:<10} {tail}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def table_rows(b: int | None = None) -> list[dict]:
    """Recompute every performance-table entry from its initial vector."""
    out = []
    for entry in TABLE:
        if b is not None and entry.b != b:
            continue
        code = design_code(entry.w1)
        prof = alphas(code)
        out.append(
            {
                "b": entry.b,
                "w1": entry.w1,
                "roots": code.rootset.roots,
                "alphas": prof.alphas,
                "alpha_sq": prof.alpha_sq,
            }
        )
    return out


def cmd_table(args) -> int:
    rows = table_rows(args.b)
    if args.format == "json":
        data = [
            {
                "b": r["b"],
                "w1": list(r["w1"]),
                "root_permutations": [list(x) for x in r["roots"]],
                "alphas": list(r["alphas"]),
                "alpha_sq": [str(a) for a in r["alpha_sq"]],
            }
            for r in rows
        ]
        _emit(json.dumps(data, indent=2) + "\n", args.output)
        return 0
    flat = [
        [
            r["b"],
            " ".join(map(str, r["w1"])),
            "; ".join(" ".join(map(str, x)) for x in r["roots"]),
            " ".join(f"{a:.2f}" for a in r["alphas"]),
        ]
        for r in rows
    ]
    if args.format == "csv":
        _emit(_csv(["b", "w1", "root_permutations", "alphas"], flat), args.output)
        return 0
    lines = []
    for r in rows:
        roots = [" ".join(f"{x:>2}" for x in root) for root in r["roots"]]
        alph = ", ".join(f"{a:.2f}" for a in r["alphas"])
        w1 = " ".join(f"{x:>2}" for x in r["w1"])
        lines.append(f"b={r['b']}  w1=({w1})  roots=({roots[0]})  alpha={alph}")
        lines += [f"{'':{len(w1) + 12}}  ({x})" for x in roots[1:]]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(str(exc)) from exc
    return load_document(text)


def cmd_analyze(args) -> int:
    code = _load(args.document)
    prof = alphas(code)
    rows = [
        [_fmt(e), _fmt(exact_word_error(prof, e)), _fmt(union_bound(prof, e)), _fmt(asymptotic_wer(prof, e))]
        for e in _etas(args)
    ]
    _emit(_csv(["eta", "p_exact", "p_union", "p_asymptotic"], rows), args.output)
    return 0


def cmd_simulate(args) -> int:
    code = _load(args.document)
    prof = alphas(code)
    cfg = SimConfig(tuple(_etas(args)), args.trials, args.seed, args.shards, args.oracle)
    res = simulate(code, cfg, prof)
    header = [
        "eta", "p_exact", "p_union", "p_asymptotic", "trials", "word_errors", "wer",
        "wer_lo", "wer_hi", "bit_errors", "ber", "ber_lo", "ber_hi", "ber_theory", "z_score",
    ]
    if args.oracle:
        header += ["oracle_checked", "oracle_disagreements"]
    rows = []
    for p in res.points:
        row = [
            _fmt(p.eta), _fmt(p.theory_exact), _fmt(union_bound(prof, p.eta)),
            _fmt(asymptotic_wer(prof, p.eta)), p.trials, p.word_errors, _fmt(p.wer),
            _fmt(p.wer_ci[0]), _fmt(p.wer_ci[1]), p.bit_errors, _fmt(p.ber),
            _fmt(p.ber_ci[0]), _fmt(p.ber_ci[1]), _fmt(p.theory_ber), _fmt(p.z_score),
        ]
        if args.oracle:
            row += [p.oracle_checked, p.oracle_disagreements]
        rows.append(row)
    _emit(_csv(header, rows), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxline", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("design", help="build a code and write its JSON design document")
    g = d.add_mutually_exclusive_group(required=True)
    g.add_argument("--b", type=int, help="search all partitions of b+1")
    g.add_argument("--w1", type=_vec, help='explicit initial vector, e.g. "-1,0,1"')
    d.add_argument("--roots", type=_roots, help='root permutations, e.g. "-1,1,0;1,-1,0"')
    d.add_argument("--allow-negation", choices=("auto", "on", "off"), default="auto")
    d.add_argument("--max-b", type=int, default=MAX_B)
    d.add_argument("--output", "-o")
    d.set_defaults(func=cmd_design)

    s = sub.add_parser("search", help="rank designs over partitions of b+1")
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--max-b", type=int, default=MAX_B)
    s.add_argument("--format", choices=("text", "csv", "json"), default="text")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="recompute the performance table of reference codes")
    t.add_argument("--b", type=int)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.add_argument("--output", "-o")
    t.set_defaults(func=cmd_table)

    for name, func, helptext in (
        ("analyze", cmd_analyze, "error-probability curves for a design document"),
        ("simulate", cmd_simulate, "Monte Carlo error rates for a design document"),
    ):
        a = sub.add_parser(name, help=helptext)
        a.add_argument("document")
        eg = a.add_mutually_exclusive_group(required=True)
        eg.add_argument("--eta", help="comma-separated Eb/N0 values (linear)")
        eg.add_argument("--eta-range", help="start:stop:step, stop inclusive")
        a.add_argument("--output", "-o")
        a.add_argument("--format", choices=("csv",), default="csv")
        if name == "simulate":
            a.add_argument("--trials", type=int, default=100_000)
            a.add_argument("--seed", type=int, default=0)
            a.add_argument("--shards", type=int, default=1)
            a.add_argument("--oracle", action="store_true", help="cross-check against exhaustive ML")
        a.set_defaults(func=func)
    return p


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--w1 -1,0,1" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--w1", "--roots") and i + 1 < len(argv) and argv[i + 1][:2].lstrip("-").isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except (DesignError, ValueError) as exc:
        reason = getattr(exc, "reason", "malformed-input")
        return _fail(EXIT_INFEASIBLE, reason, str(exc))
    except InvariantViolation as exc:
        return _fail(EXIT_INVARIANT, "invariant-violation", str(exc))


if __name__ == "__main__":
    sys.exit(main())
