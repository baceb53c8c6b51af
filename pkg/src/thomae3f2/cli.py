"""Command line: eval | transform | verify | prove | closed-form | batch.

Parameters are given as a, b, c, d, e (upper then lower), comma-separated;
rationals such as 1/2 are accepted.  Exit codes: 0 all pass, 1 numerical
failure, 2 input or precondition error (one ``error ...`` line on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .jobs import error_record, run_job
from .records import JobSpec, ResultRecord

SIG = 15


def fmt(v) -> str:
    if isinstance(v, bool) or v is None:
        return str(v).lower() if isinstance(v, bool) else "-"
    if isinstance(v, float):
        return f"{v:.{SIG}g}"
    if isinstance(v, list):
        return "(" + ", ".join(fmt(x) for x in v) + ")"
    return str(v)


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # repeated on every subparser so flags work before or after the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = parser.add_argument_group("global options")
    g.add_argument("--tol-rel", type=float, default=d(None), help="relative series tolerance (default 1e-12)")
    g.add_argument("--tol-abs", type=float, default=d(None), help="absolute series tolerance (default 0)")
    g.add_argument("--max-terms", type=int, default=d(None), help="term budget per series (default 2000000)")
    g.add_argument("--quad-error", type=float, default=d(None), help="quadrature target error (default 1e-12)")
    g.add_argument("--format", choices=("text", "json"), default=d("text"))
    g.add_argument("--seed", type=int, default=d(None), help="seed for --random sampling (default 0)")
    g.add_argument("--auto-transform", action="store_true", default=d(False),
                   help="evaluate through the representation with the largest excess")
    g.add_argument("--no-tail-correction", dest="tail_correction", action="store_false", default=d(True),
                   help="plain truncation at unit argument")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thomae3f2", description="Hypergeometric 2F1/3F2 evaluation and "
                                     "numerical certification of the Thomae, Kummer and Euler relations.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate 3F2(a,b,c;d,e;1) or 2F1(a,b;c;x)")
    _global_flags(p, suppress=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--3f2", dest="params3", metavar="A,B,C,D,E")
    grp.add_argument("--2f1", dest="params2", metavar="A,B,C")
    p.add_argument("--x", type=float, help="2F1 argument in [0, 1] (default 1)")

    p = sub.add_parser("transform", help="apply a transformation and evaluate the result")
    _global_flags(p, suppress=True)
    p.add_argument("identity", choices=("thomae", "kummer", "euler2", "identity", "auto"))
    p.add_argument("--params", required=True)
    p.add_argument("--x", type=float, help="euler2 only: evaluate the transformed side at x")

    p = sub.add_parser("verify", help="check an identity on given or sampled parameters")
    _global_flags(p, suppress=True)
    p.add_argument("identity", choices=("thomae", "kummer", "gauss", "saalschutz", "euler2"))
    p.add_argument("--params")
    p.add_argument("--random", type=int, metavar="N")
    p.add_argument("--x", type=float, help="euler2 argument (default 0.5)")
    p.add_argument("--n", type=int)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--c")

    p = sub.add_parser("prove", help="certify every stage of the Thomae derivation")
    _global_flags(p, suppress=True)
    p.add_argument("--params", required=True)

    p = sub.add_parser("closed-form", help="Gauss, Saalschutz or beta closed forms")
    _global_flags(p, suppress=True)
    p.add_argument("identity", choices=("gauss", "saalschutz", "beta"))
    p.add_argument("--params")
    p.add_argument("--n", type=int)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--c")

    p = sub.add_parser("batch", help="run JSON-lines jobs from a file ('-' for stdin)")
    _global_flags(p, suppress=True)
    p.add_argument("file")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    params = getattr(args, "params", None)
    if args.command == "eval":
        params = args.params3 if args.params3 is not None else args.params2
    return JobSpec(
        command=args.command,
        identity=getattr(args, "identity", None),
        params=params,
        x=getattr(args, "x", None),
        n=getattr(args, "n", None),
        a=getattr(args, "a", None),
        b=getattr(args, "b", None),
        c=getattr(args, "c", None),
        random=getattr(args, "random", None),
        seed=args.seed,
        tol_rel=args.tol_rel,
        tol_abs=args.tol_abs,
        max_terms=args.max_terms,
        quad_error=args.quad_error,
        auto_transform=args.auto_transform,
        tail_correction=args.tail_correction,
        format=args.format,
    )


def error_line(err: dict) -> str:
    """Single line of key=value pairs; string values are JSON-quoted."""
    keys = ["kind", "stage", "condition", "message"]
    return "error " + " ".join(f"{k}={json.dumps(err[k])}" for k in keys if k in err)


def render_text(rec: ResultRecord) -> str:
    lines = [rec.command + "  " + "  ".join(f"{k}={fmt(v)}" for k, v in rec.inputs.items())]
    if rec.error is not None:
        lines.append(error_line(rec.error))
        return "\n".join(lines)
    if rec.stage_values is not None:
        width = max(len(label) for label, _ in rec.stage_values)
        for label, v in rec.stage_values:
            lines.append(f"  {label:<{width}}  {fmt(v)}")
    values = dict(rec.values)
    cases = values.pop("cases", None)
    if cases is not None and len(cases) > 1:
        for i, case in enumerate(cases):
            ins = " ".join(f"{k}={fmt(v)}" for k, v in case["inputs"].items())
            mark = "pass" if case["passed"] else "FAIL"
            lines.append(f"  [{i}] {ins}  discrepancy={fmt(case['discrepancy'])}  {mark}")
    elif cases:
        case = cases[0]
        lines.append(f"  lhs  {fmt(case['lhs'])}")
        lines.append(f"  rhs  {fmt(case['rhs'])}")
    if rec.value is not None and rec.command in ("eval", "transform", "closed-form"):
        lines.append(f"  value  {fmt(rec.value)}")
    for k, v in values.items():
        lines.append(f"  {k}  {fmt(v)}")
    for k, v in rec.diagnostics.items():
        if isinstance(v, dict):
            continue
        if isinstance(v, list):
            for item in v:
                lines.append(f"  {k}: {item}")
            continue
        lines.append(f"  {k}  {fmt(v)}")
    if rec.passed is not None:
        lines.append("PASS" if rec.passed else "FAIL")
    return "\n".join(lines)


def emit(rec: ResultRecord, fmt_name: str, out) -> None:
    if fmt_name == "json":
        out.write(rec.to_json() + "\n")
    else:
        out.write(render_text(rec) + "\n")
    if rec.error is not None and rec.error.get("input_error"):
        sys.stderr.write(error_line(rec.error) + "\n")


def run_batch(path: str, defaults: argparse.Namespace, out) -> int:
    """One JSON record per input line, in order, then a summary line."""
    stream = sys.stdin if path == "-" else open(path, encoding="utf-8")
    passed = failed = 0
    with stream:
        for lineno, line in enumerate(stream, 1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
                if not isinstance(data, dict):
                    raise ValueError("job must be a JSON object")
                # command-line settings fill fields the job leaves unset
                for key in ("tol_rel", "tol_abs", "max_terms", "quad_error", "seed"):
                    if key not in data and getattr(defaults, key) is not None:
                        data[key] = getattr(defaults, key)
                job = JobSpec.from_dict(data)
                rec = run_job(job)
            except (ValueError, TypeError) as exc:
                rec = error_record("batch", exc, {"line": lineno}).normalized()
            out.write(rec.to_json() + "\n")
            if rec.error is None and rec.passed is not False:
                passed += 1
            else:
                failed += 1
    total = passed + failed
    if total == 0:
        out.write("0 jobs\n")
    else:
        out.write(f"{total} jobs, {passed} pass / {failed} fail\n")
    return 0 if failed == 0 else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    if args.command == "batch":
        try:
            return run_batch(args.file, args, out)
        except OSError as exc:
            sys.stderr.write(error_line({"kind": type(exc).__name__, "message": str(exc)}) + "\n")
            return 2
    try:
        job = job_from_args(args)
    except ValueError as exc:
        rec = error_record(args.command, exc).normalized()
    else:
        rec = run_job(job)
    emit(rec, args.format, out)
    return rec.exit_code


if __name__ == "__main__":
    sys.exit(main())
