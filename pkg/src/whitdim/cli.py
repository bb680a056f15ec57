"""Command-line front end: run verification suites, stream machine-readable reports.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage error,
3 an enumeration exceeded the feasibility limit.  Reports are emitted one
JSON object per line (or CSV rows with --format csv) in a deterministic
order with stable keys; only the elapsed_ms field varies between runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import engine
from .counting import (
    FEASIBILITY_LIMIT,
    FeasibilityError,
    count_rect_by_rank,
    grassmann_count,
    prasad_delta,
)
from .dimension import dimension_report
from .gfield import SUPPORTED_Q

COMMANDS = ("verify", "lemma1", "chain", "brute", "counts", "all")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n_min: int = 1
    n_max: int = 1
    k: Optional[int] = None
    q_list: list = field(default_factory=lambda: [2, 3])
    feasibility_limit: int = FEASIBILITY_LIMIT
    output: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError("unknown command %r" % self.command)
        if self.n_min > self.n_max:
            raise UsageError("empty n range %d..%d" % (self.n_min, self.n_max))
        if self.n_min < 1:
            raise UsageError("n must be >= 1")
        bad = [q for q in self.q_list if q not in SUPPORTED_Q]
        if bad:
            raise UsageError("unsupported q values %r (supported: %r)" % (bad, SUPPORTED_Q))
        if self.format not in ("json", "csv"):
            raise UsageError("format must be json or csv")


def _parse_range(text: str):
    if ".." in text:
        lo, _, hi = text.partition("..")
    else:
        lo = hi = text
    try:
        return int(lo), int(hi)
    except ValueError:
        raise UsageError("bad n range %r (expected N or A..B)" % text) from None


def _parse_q(values):
    out = []
    for chunk in values:
        for piece in str(chunk).split(","):
            piece = piece.strip()
            if piece:
                try:
                    out.append(int(piece))
                except ValueError:
                    raise UsageError("bad q value %r" % piece) from None
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whitdim",
        description="Exact verification of the dimension identity, its proof "
        "chain, and the finite-field counting oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "verify": "main identity: closed product vs raw dimension sum",
        "lemma1": "inner double sum vs its closed form, per k",
        "chain": "every rewrite step of the derivation",
        "brute": "brute-force / mid-derivation / closed dimension agreement",
        "counts": "matrix-counting enumerations vs closed formulas",
        "all": "union of every other command's checks",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=descriptions[name])
        p.add_argument("--n", "--n-range", dest="n", default=None,
                       help="single n or inclusive range A..B")
        p.add_argument("--k", type=int, default=None,
                       help="restrict lemma1 to one k (default: all 0..n)")
        p.add_argument("--q", action="append", default=None,
                       help="field sizes, comma-separated or repeated")
        p.add_argument("--limit", type=int, default=FEASIBILITY_LIMIT,
                       help="enumeration feasibility limit (candidates)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default=None, help="write reports to PATH")
    return parser


def config_from_args(args) -> RunConfig:
    needs_n = args.command in ("verify", "lemma1", "chain", "brute", "all")
    if args.n is None and needs_n:
        raise UsageError("--n is required for %r" % args.command)
    n_min, n_max = _parse_range(args.n) if args.n is not None else (1, 1)
    q_list = _parse_q(args.q) if args.q else [2, 3]
    return RunConfig(
        command=args.command,
        n_min=n_min,
        n_max=n_max,
        k=args.k,
        q_list=q_list,
        feasibility_limit=args.limit,
        output=args.output,
        format=args.format,
    )


# ---------------------------------------------------------------------------
# report generators: yield (ok, dict) pairs
# ---------------------------------------------------------------------------


def _gen_verify(cfg: RunConfig):
    for n in range(cfg.n_min, cfg.n_max + 1):
        rep = engine.verify_main(n)
        yield rep.equal, rep.to_json_dict()


def _gen_lemma1(cfg: RunConfig):
    for n in range(cfg.n_min, cfg.n_max + 1):
        ks = [cfg.k] if cfg.k is not None else list(range(n + 1))
        for k in ks:
            if not 0 <= k <= n:
                raise UsageError("k=%d out of range 0..%d" % (k, n))
            t0 = time.perf_counter()
            lhs, rhs = engine.inner_sum_sides(n, k)
            rep = engine.VerificationReport(
                identity="inner-sum",
                n=n,
                k=k,
                equal=lhs == rhs,
                lhs=lhs.to_json_dict(),
                rhs=rhs.to_json_dict(),
                elapsed_ms=(time.perf_counter() - t0) * 1000.0,
            )
            yield rep.equal, rep.to_json_dict()


def _gen_chain(cfg: RunConfig):
    for n in range(cfg.n_min, cfg.n_max + 1):
        for rep in engine.simplification_chain(n) + engine.conclusion_chain(n):
            yield rep.equal, rep.to_json_dict()


def _gen_brute(cfg: RunConfig):
    for n in range(cfg.n_min, cfg.n_max + 1):
        for q in cfg.q_list:
            rep = dimension_report(n, q, cfg.feasibility_limit)
            yield rep["agree"], rep


def _gen_counts(cfg: RunConfig):
    qs = [q for q in cfg.q_list]
    for q in qs:
        for s in range(1, 4):
            for t in range(1, 4):
                for k in range(min(s, t) + 1):
                    enum, formula = count_rect_by_rank(s, t, k, q, cfg.feasibility_limit)
                    yield enum == formula, {
                        "params": {"kind": "rect-rank", "s": s, "t": t, "k": k, "q": q},
                        "enumerated": enum,
                        "formula": formula,
                        "equal": enum == formula,
                    }
        for size in range(0, 4):
            for k in range(size + 1):
                m = size - k
                enum, formula = prasad_delta(m, k, q, cfg.feasibility_limit)
                yield enum == formula, {
                    "params": {"kind": "trace-delta", "m": m, "k": k, "q": q},
                    "enumerated": enum,
                    "formula": formula,
                    "equal": enum == formula,
                }
        for n in range(1, 5):
            for m in range(n + 1):
                enum, formula = grassmann_count(n, m, q, cfg.feasibility_limit)
                yield enum == formula, {
                    "params": {"kind": "grassmann", "n": n, "m": m, "q": q},
                    "enumerated": enum,
                    "formula": formula,
                    "equal": enum == formula,
                }


_GENERATORS = {
    "verify": (_gen_verify,),
    "lemma1": (_gen_lemma1,),
    "chain": (_gen_chain,),
    "brute": (_gen_brute,),
    "counts": (_gen_counts,),
    "all": (_gen_verify, _gen_lemma1, _gen_chain, _gen_brute, _gen_counts),
}


def _csv_row(report: dict):
    check = report.get("identity") or report.get("params", {}).get("kind") or "dimension"
    ok = report.get("equal", report.get("agree"))
    detail = {
        key: value
        for key, value in report.items()
        if key not in ("identity", "equal", "agree", "elapsed_ms")
    }
    return [
        check,
        report.get("n", detail.get("params", {}).get("n", "")),
        report.get("k", detail.get("params", {}).get("k", "")),
        report.get("q", detail.get("params", {}).get("q", "")),
        "true" if ok else "false",
        json.dumps(detail, separators=(",", ":")),
    ]


def run(cfg: RunConfig, stream) -> int:
    """Execute the configured suite, writing reports to the stream."""
    all_ok = True
    writer = None
    if cfg.format == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["check", "n", "k", "q", "ok", "detail"])
    try:
        for gen in _GENERATORS[cfg.command]:
            for ok, report in gen(cfg):
                all_ok = all_ok and bool(ok)
                if writer is not None:
                    writer.writerow(_csv_row(report))
                else:
                    stream.write(json.dumps(report, separators=(", ", ": ")) + "\n")
    except FeasibilityError as exc:
        msg = {"error": "infeasible", "detail": str(exc), "candidates": exc.candidates}
        stream.write(json.dumps(msg) + "\n")
        return EXIT_INFEASIBLE
    return EXIT_OK if all_ok else EXIT_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", newline="") as fh:
            return run(cfg, fh)
    if cfg.format == "csv":
        # csv wants universal newline control; wrap stdout once
        buf = io.StringIO()
        code = run(cfg, buf)
        sys.stdout.write(buf.getvalue())
        return code
    return run(cfg, sys.stdout)


def main_entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
