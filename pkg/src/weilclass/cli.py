"""Command-line surface: check, newton, profile, enumerate.

Exit codes are a stable contract: 0 means success (for ``check``: the input is
the characteristic polynomial of a simple class), 1 means valid input with a
negative verdict, 2 means a usage, validation, or certification error.
Polynomials are comma-separated ascending coefficients, constant term first.
All randomized behavior takes the job seed (default 0), never entropy.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, fields

from .enumerate import (
    CSV_HEADER,
    CapExceeded,
    EnumerationJob,
    classify_all,
    partition_job,
    record_to_csv_line,
    record_to_json_line,
    report_to_record,
    summary_to_json,
)
from .hondatate import classify
from .intpoly import IntPoly, ShapeError
from .padic import CertificationError, DEFAULT_PRECISION_CAP, newton_polygon, qp_factor_profile, vertex_lattice_check, vp
from .weil import WeilCandidate, is_prime

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


@dataclass
class CliConfig:
    """Defaults, overridable by a key=value config file, then by flags."""

    format: str = "text"
    precision_cap: int = DEFAULT_PRECISION_CAP
    pruning_depth: int | None = None
    seed: int = 0
    workers: int = 1
    tags: int = 1  # interpretation-tag verbosity: 0 silent, 1 shown


def load_config(path: str | None) -> CliConfig:
    cfg = CliConfig()
    if path is None:
        path = os.environ.get("WEILCLASS_CONFIG")
    if not path:
        return cfg
    names = {f.name for f in fields(CliConfig)}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in names:
                raise ValueError(f"unknown config key {key!r}")
            if key == "format":
                cfg.format = value
            else:
                setattr(cfg, key, int(value))
    return cfg


def _parse_ints(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ShapeError(f"expected comma-separated integers, got {text!r}")


def _poly_from_arg(text: str) -> IntPoly:
    return IntPoly.from_coeffs(_parse_ints(text))


def _invariant_strings(report):
    out = []
    for inv in report.invariants:
        place = "real" if inv.place == "real" else "p"
        out.append(f"{place}:{inv.value.numerator}/{inv.value.denominator}")
    return out


def cmd_check(args, cfg: CliConfig) -> int:
    if not is_prime(args.p):
        print(f"error: {args.p} is not prime", file=sys.stderr)
        return EXIT_ERROR
    coeffs = _parse_ints(args.coeffs)
    c = WeilCandidate(args.p, args.n, args.g, coeffs)
    report = classify(c)
    record = report_to_record(report)
    if cfg.tags == 0:
        record["tags"] = []
    if cfg.format == "json":
        print(record_to_json_line(record))
    else:
        print(f"candidate: p={c.p} n={c.n} g={c.g} q={c.q} a={c.a}")
        print(f"weil: {'yes' if report.weil else 'no'}")
        print(f"simple: {'yes' if report.simple_char_poly else 'no'}")
        if report.min_poly is not None:
            print(f"min_poly: {report.min_poly}")
            print(f"e: {report.multiplicity}")
        if report.dimension is not None:
            print(f"dim: {report.dimension}")
        print(f"case: {report.case_label}")
        print(f"real_root: {'yes' if report.real_root_flag else 'no'}")
        if report.invariants:
            print("invariants: " + " ".join(_invariant_strings(report)))
        if cfg.tags and report.interpretation_tags:
            print("tags: " + " ".join(report.interpretation_tags))
    return EXIT_OK if report.simple_char_poly else EXIT_NEGATIVE


def cmd_newton(args, cfg: CliConfig) -> int:
    if not is_prime(args.p):
        print(f"error: {args.p} is not prime", file=sys.stderr)
        return EXIT_ERROR
    f = _poly_from_arg(args.poly)
    polygon = newton_polygon(f, args.p)
    if cfg.format == "json":
        import json

        doc = {
            "p": args.p,
            "poly": list(f.coeffs),
            "vertices": [list(v) for v in polygon.vertices],
            "segments": [[f"{s.numerator}/{s.denominator}", length] for s, length in polygon.segments],
        }
        if args.n:
            doc["lattice_check_n"] = args.n
            doc["lattice_check"] = vertex_lattice_check(polygon, args.n)
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(f"newton polygon at p={args.p} for {f}")
        print("points: " + " ".join(f"({i},{'inf' if v == float('inf') else v})" for i, v in polygon.points))
        print("vertices: " + " ".join(f"({i},{v})" for i, v in polygon.vertices))
        print("segments (root valuation x length): " + ", ".join(f"{s} x {length}" for s, length in polygon.segments))
        if args.n:
            ok = vertex_lattice_check(polygon, args.n)
            print(f"lattice check (n={args.n}): {'pass' if ok else 'fail'}")
    return EXIT_OK


def cmd_profile(args, cfg: CliConfig) -> int:
    if not is_prime(args.p):
        print(f"error: {args.p} is not prime", file=sys.stderr)
        return EXIT_ERROR
    f = _poly_from_arg(args.poly)
    profile = qp_factor_profile(f, args.p, precision_cap=cfg.precision_cap)
    if cfg.format == "json":
        import json

        doc = {
            "p": args.p,
            "poly": list(f.coeffs),
            "factors": [[d, f"{s.numerator}/{s.denominator}"] for d, s in profile.factors],
            "precision_used": profile.precision_used,
        }
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(f"factor profile at p={args.p} for {f}")
        print("factors (degree, root valuation): " + " ".join(f"({d},{s})" for d, s in profile.factors))
        print(f"precision exponent: {profile.precision_used}")
        print(f"sum degree*valuation: {vp(f.coeff(0), args.p)}")
    return EXIT_OK


def _run_partitions(job: EnumerationJob, workers: int):
    parts = partition_job(job, workers)
    if len(parts) <= 1 or workers <= 1:
        return [classify_all(job)]
    try:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(classify_all, parts))
    except Exception:
        return [classify_all(part) for part in parts]


def cmd_enumerate(args, cfg: CliConfig) -> int:
    if not is_prime(args.p):
        print(f"error: {args.p} is not prime", file=sys.stderr)
        return EXIT_ERROR
    job = EnumerationJob(
        p=args.p,
        n=args.n,
        g=args.g,
        mode=args.mode,
        count=args.count,
        seed=args.seed if args.seed is not None else cfg.seed,
        pruning_depth=cfg.pruning_depth,
    )
    workers = args.workers or cfg.workers
    results = _run_partitions(job, workers) if job.mode == "full" else [classify_all(job)]
    records = []
    for _, reports in results:
        for report in reports:
            record = report_to_record(report)
            if cfg.tags == 0:
                record["tags"] = []
            records.append(record)
    merged = results[0][0]
    for other, _ in results[1:]:
        merged.visited += other.visited
        merged.weil += other.weil
        merged.wall_time += other.wall_time
        for k, v in other.per_case.items():
            merged.per_case[k] = merged.per_case.get(k, 0) + v
        for k, v in other.per_e_dim.items():
            merged.per_e_dim[k] = merged.per_e_dim.get(k, 0) + v
    fmt = args.record_format or ("csv" if cfg.format == "csv" else "jsonl")
    lines = []
    if fmt == "csv":
        lines.append(CSV_HEADER)
        lines.extend(record_to_csv_line(r) for r in records)
    else:
        lines.extend(record_to_json_line(r) for r in records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
        print(summary_to_json(merged))
    else:
        for line in lines:
            print(line)
        print(summary_to_json(merged), file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weilclass", description="Exact Weil-polynomial tests and Honda-Tate classification")
    parser.add_argument("--config", help="key=value config file (or set WEILCLASS_CONFIG)")
    parser.add_argument("--format", choices=["text", "json", "csv"], help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="classify one candidate")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--coeffs", required=True, help="a_1,...,a_g")

    s = sub.add_parser("newton", help="Newton polygon of a polynomial")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--poly", required=True, help="coefficients, constant first")
    s.add_argument("--n", type=int, default=0, help="run the lattice vertex check against n")

    s = sub.add_parser("profile", help="Q_p irreducible-factor profile")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--poly", required=True, help="coefficients, constant first")

    s = sub.add_parser("enumerate", help="enumerate and classify candidates")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--mode", choices=["full", "sample"], default="full")
    s.add_argument("--count", type=int, default=10000, help="sample size (sample mode)")
    s.add_argument("--seed", type=int, default=None, help="sample seed (default from config, 0)")
    s.add_argument("--out", help="write records to this file (summary then goes to stdout)")
    s.add_argument("--format", dest="record_format", choices=["jsonl", "csv"], default=None)
    s.add_argument("--workers", type=int, default=0, help="partition full runs across workers")

    return parser


def _merge_value_flags(argv):
    """Glue values onto --coeffs/--poly so leading minus signs parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--coeffs", "--poly") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_value_flags(list(argv)))
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.format:
        cfg.format = args.format
    try:
        if args.command == "check":
            return cmd_check(args, cfg)
        if args.command == "newton":
            return cmd_newton(args, cfg)
        if args.command == "profile":
            return cmd_profile(args, cfg)
        if args.command == "enumerate":
            return cmd_enumerate(args, cfg)
    except (ShapeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CertificationError as exc:
        print(f"certification error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
