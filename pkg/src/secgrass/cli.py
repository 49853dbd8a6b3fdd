"""Command-line front end.

Usage::

    secgrass catalog [--filter TEXT] [--json]
    secgrass dims --variety scroll:2,2 --kind GHK --h 1 --k 2 [--json]
    secgrass scan --variety veronese:2,2 --max-k 2 [--json]
    secgrass paper [--json]

Exit codes:
    0  success
    1  suite value mismatch or failed implication check
    2  usage error
    3  sampling failure (no generic point within the retry cap)
    4  variety failed validation (degenerate or not immersive)
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .errors import SampleFailure, SecgrassError
from .exactfield import DEFAULT_PRIME
from .secdim import ComputeCfg, Dims, check_inequalities
from .varieties import CATALOG, Variety, from_selector, load_variety, validate

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SAMPLING, EXIT_INVALID = 0, 1, 2, 3, 4
SCHEMA = 1


class UsageError(Exception):
    pass


class ValidationFailed(Exception):
    def __init__(self, report):
        super().__init__(f"{report.name} failed validation")
        self.report = report


@dataclass
class Report:
    command: str
    variety: dict | None
    cfg: ComputeCfg
    results: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    suite: list = field(default_factory=list)
    status: str = "pass"

    def as_dict(self) -> dict:
        d = {
            "schema": SCHEMA,
            "tool": {"name": "secgrass", "version": __version__},
            "command": self.command,
            "config": {"prime": str(self.cfg.prime), "seed": self.cfg.seed,
                       "trials": self.cfg.trials, "retry_cap": self.cfg.retry_cap,
                       "cross_check": self.cfg.cross_check},
            "variety": self.variety,
            "results": [_jsonable(e.as_dict()) for e in self.results],
            "checks": [_jsonable(c.as_dict()) for c in self.checks],
            "status": self.status,
        }
        if self.suite:
            d["suite"] = self.suite
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"


def _jsonable(d: dict) -> dict:
    # primes exceed the 53-bit range of many JSON readers
    if "prime" in d:
        d = dict(d, prime=str(d["prime"]))
    return d


# ---------------------------------------------------------------------------
# Variety resolution
# ---------------------------------------------------------------------------

def resolve_variety(args) -> tuple[Variety, dict]:
    if args.variety_file and args.variety:
        raise UsageError("give either --variety or --variety-file, not both")
    if args.variety_file:
        path = Path(args.variety_file)
        try:
            raw = path.read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        V = load_variety(raw.decode())
        return V, {"name": V.name, "sha256": hashlib.sha256(raw).hexdigest()}
    if not args.variety:
        raise UsageError("a variety is required (--variety or --variety-file)")
    V = from_selector(args.variety)
    return V, {"name": V.name, "selector": args.variety}


def _cfg(args) -> ComputeCfg:
    return ComputeCfg(prime=args.prime, seed=args.seed, trials=args.trials,
                      retry_cap=args.retry_cap, cross_check=args.cross_check)


def _require_valid(V: Variety, cfg: ComputeCfg):
    report = validate(V, cfg)
    if not report.ok:
        raise ValidationFailed(report)
    return report


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_catalog(filter_text: str = "") -> list[dict]:
    rows = []
    for sel in CATALOG:
        if filter_text and filter_text not in sel:
            continue
        V = from_selector(sel)
        rows.append({"name": V.name, "n": V.n, "r": V.r, "degree": V.degree,
                     "is_cone": V.is_cone})
    return rows


def cmd_dims(V: Variety, descriptor: dict, kind: str, h, k, cfg: ComputeCfg) -> Report:
    dims = Dims(V, cfg)
    report = Report("dims", descriptor, cfg)
    if kind == "span":
        report.results.append(dims.span())
        return report
    if k is None:
        raise UsageError(f"--k is required for kind {kind}")
    if not 0 <= k <= V.r:
        raise UsageError(f"k={k} outside 0..{V.r}")
    _require_valid(V, cfg)
    if kind == "S":
        report.results.append(dims.S(k))
    elif kind == "G":
        report.results.append(dims.G(k))
    elif kind == "GHK":
        if h is None or not 0 <= h < k:
            raise UsageError(f"kind GHK needs 0 <= h < k, got h={h}, k={k}")
        report.results.append(dims.GHK(h, k))
    else:
        raise UsageError(f"unknown kind {kind!r}")
    return report


def cmd_scan(V: Variety, descriptor: dict, max_k: int, cfg: ComputeCfg) -> Report:
    if max_k < 0:
        raise UsageError("--max-k must be non-negative")
    _require_valid(V, cfg)
    dims = Dims(V, cfg)
    report = Report("scan", descriptor, cfg)
    top = min(max_k, V.r)
    results = [dims.span()]
    results += [dims.S(k) for k in range(top + 1)]
    results += [dims.G(k) for k in range(top + 1)]
    results += [dims.GHK(h, k) for k in range(1, top + 1) for h in range(k)]
    report.results = results
    report.checks = check_inequalities(V, max_k, cfg, dims=dims)
    report.status = "fail" if any(c.failed for c in report.checks) else "pass"
    return report


def paper_fixtures() -> dict[str, Variety]:
    names = ["veronese:2,2", "veronese:2,3@P5", "scroll:2,2", "scroll:3,1",
             "scroll:4,0", "cone-rnc4"]
    return {name: from_selector(name) for name in names}


# (fixture, quantity, h, k, expected)
PAPER_LINES = (
    ("veronese:2,2", "S", None, 1, 4),
    ("scroll:2,2", "S", None, 1, 5),
    ("scroll:2,2", "S", None, 2, 5),
    ("veronese:2,2", "GHK", 1, 2, 8),
    ("veronese:2,3@P5", "GHK", 1, 2, 8),
    ("scroll:2,2", "GHK", 1, 2, 7),
    ("scroll:3,1", "GHK", 1, 2, 7),
    ("scroll:4,0", "GHK", 1, 2, 7),
    ("cone-rnc4", "GHK", 1, 2, 7),
)
PAPER_MAX_K = 3


def cmd_paper(cfg: ComputeCfg, fixtures: dict[str, Variety] | None = None) -> Report:
    """Run the fixed surface suite. ``fixtures`` lets callers substitute varieties."""
    fixtures = fixtures or paper_fixtures()
    tables = {name: Dims(V, cfg) for name, V in fixtures.items()}
    report = Report("paper", None, cfg)
    for name, quantity, h, k, expected in PAPER_LINES:
        d = tables[name]
        est = d.S(k) if quantity == "S" else d.GHK(h, k)
        report.results.append(est)
        line = {"variety": name, "quantity": quantity, "h": h, "k": k,
                "expected": expected, "actual": est.dim, "pass": est.dim == expected}
        if quantity == "GHK":
            line["below_expected"] = est.dim < est.expdim
            line["pass"] = line["pass"] and line["below_expected"] == (expected < est.expdim)
        report.suite.append(line)
    for name, V in fixtures.items():
        checks = check_inequalities(V, PAPER_MAX_K, cfg, dims=tables[name])
        report.checks.extend(checks)
        failures = [c.rule for c in checks if c.failed]
        report.suite.append({"variety": name, "quantity": "checks", "h": None, "k": PAPER_MAX_K,
                             "expected": 0, "actual": len(failures), "failed_rules": failures,
                             "pass": not failures})
    report.status = "pass" if all(line["pass"] for line in report.suite) else "fail"
    return report


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [["-" if v is None else str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_text(report: Report) -> str:
    out = []
    cfg = report.cfg
    head = f"secgrass {__version__} | {report.command}"
    if report.variety:
        head += f" | {report.variety['name']}"
    out.append(f"{head} | p={cfg.prime} seed={cfg.seed} trials={cfg.trials}\n")
    if report.suite:
        out.append(_table(["variety", "quantity", "h", "k", "expected", "actual", "ok"],
                          [[l["variety"], l["quantity"], l["h"], l["k"], l["expected"],
                            l["actual"], "ok" if l["pass"] else "MISMATCH"]
                           for l in report.suite]))
    elif report.results:
        out.append(_table(["kind", "h", "k", "dim", "expdim", "defect", "ranks"],
                          [[e.kind, e.h, e.k, e.dim, e.expdim, e.defect,
                            ",".join(map(str, e.trial_ranks))] for e in report.results]))
    # the paper suite already summarises its checks per fixture
    shown = [c for c in report.checks if c.failed] if report.suite else report.checks
    if shown:
        out.append(_table(["variety", "rule", "h", "k", "hypothesis", "conclusion", "status"],
                          [[c.variety, c.rule, c.h, c.k, c.hypothesis_held, c.conclusion_held,
                            "FAIL" if c.failed else "ok"] for c in shown]))
    out.append(f"status: {report.status}\n")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--retry-cap", type=int, default=8)
    common.add_argument("--cross-check", action="store_true",
                        help="repeat one trial in exact rational arithmetic")
    common.add_argument("--json", action="store_true", help="emit a canonical JSON report")

    selector = argparse.ArgumentParser(add_help=False)
    selector.add_argument("--variety", help="builtin selector, e.g. scroll:3,1")
    selector.add_argument("--variety-file", help="variety document (JSON)")

    parser = argparse.ArgumentParser(
        prog="secgrass",
        description="Dimensions of secant varieties and Grassmannians of secant varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="list builtin varieties")
    cat.add_argument("--filter", default="", help="substring filter on names")
    cat.add_argument("--json", action="store_true")

    dims = sub.add_parser("dims", parents=[common, selector], help="one dimension")
    dims.add_argument("--kind", choices=["S", "G", "GHK", "span"], required=True)
    dims.add_argument("--h", type=int)
    dims.add_argument("--k", type=int)

    scan = sub.add_parser("scan", parents=[common, selector], help="all dimensions up to max-k")
    scan.add_argument("--max-k", type=int, default=2)

    sub.add_parser("paper", parents=[common], help="run the surface verification suite")
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    if args.command == "catalog":
        rows = cmd_catalog(args.filter)
        if args.json:
            stdout.write(json.dumps({"schema": SCHEMA, "catalog": rows}, sort_keys=True, indent=2) + "\n")
        else:
            stdout.write(_table(["name", "n", "r", "degree", "is_cone"],
                                [[r["name"], r["n"], r["r"], r["degree"], r["is_cone"]]
                                 for r in rows]))
        return EXIT_OK

    try:
        cfg = _cfg(args)
        if args.command == "paper":
            report = cmd_paper(cfg)
        else:
            V, descriptor = resolve_variety(args)
            if args.command == "dims":
                report = cmd_dims(V, descriptor, args.kind, args.h, args.k, cfg)
            else:
                report = cmd_scan(V, descriptor, args.max_k, cfg)
    except ValidationFailed as exc:
        if args.json:
            stdout.write(json.dumps({"schema": SCHEMA, "status": "invalid",
                                     "validation": exc.report.as_dict()},
                                    sort_keys=True, indent=2) + "\n")
        else:
            stdout.write(f"validation failed: {exc.report.as_dict()}\n")
        return EXIT_INVALID
    except SampleFailure as exc:
        print(f"secgrass: sampling failure: {exc}", file=sys.stderr)
        return EXIT_SAMPLING
    except (UsageError, SecgrassError, ValueError) as exc:
        print(f"secgrass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    stdout.write(report.to_json() if args.json else render_text(report))
    return EXIT_OK if report.status == "pass" else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
