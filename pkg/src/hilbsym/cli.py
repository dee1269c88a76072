"""Command-line entry point.

Exit codes::

    0  success
    2  usage error
    3  input error
    4  cap exceeded
    5  invariant violation (an identity that must hold failed)
    6  cache corruption
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .center import CenterElement
from .characters import character_table
from .checks import all_passed, run_suites
from .config import RunConfig
from .errors import (
    CacheCorruptionError,
    CapExceededError,
    DegreeMismatchError,
    HilbsymError,
    InputError,
    InvariantViolation,
)
from .expr import evaluate
from .fock import commutator_check
from .hilbert import betti_numbers, cached_graded_ring
from .quotient import SymplecticGroupSpec, quotient_report

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_CAP = 4
EXIT_INVARIANT = 5
EXIT_CACHE = 6

log = logging.getLogger("hilbsym")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS defaults let the flags appear before or after the subcommand.
    p = argparse.ArgumentParser(add_help=False)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output", action="store_const", const="json", default=argparse.SUPPRESS)
    fmt.add_argument("--csv", dest="output", action="store_const", const="csv", default=argparse.SUPPRESS)
    p.add_argument("--cache-dir", default=argparse.SUPPRESS, help="cache directory (overrides $HILBSYM_CACHE_DIR)")
    p.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help="largest n accepted by any command")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled checks")
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for verify")
    p.add_argument("-v", "--verbose", dest="verbosity", action="count", default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = _Parser(prog="hilbsym", parents=[common],
                     description="Exact computations in the centers of symmetric group algebras.")
    parser.add_argument("--version", action="version", version=f"hilbsym {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chartable", parents=[common], help="character table of S_n")
    p.add_argument("n", type=int)
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")

    p = sub.add_parser("center", parents=[common], help="evaluate an expression in Z_n")
    p.add_argument("n", type=int)
    p.add_argument("--basis", choices=["c", "s", "h", "m"], default="c")
    p.add_argument("--expr", required=True)

    p = sub.add_parser("fock", parents=[common], help="Heisenberg commutator checks")
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--check-commutators", action="store_true")
    p.add_argument("--max-index", type=int, default=4)

    hilb = sub.add_parser("hilb", parents=[common], help="graded ring of the length filtration")
    hsub = hilb.add_subparsers(dest="hilb_command", required=True, parser_class=_Parser)
    for name, text in (("betti", "Betti numbers"), ("cup", "structure constants"),
                       ("verify", "invariant suite")):
        hp = hsub.add_parser(name, parents=[common], help=text)
        hp.add_argument("n", type=int)

    p = sub.add_parser("quotient", parents=[common], help="class algebra of a symplectic group")
    p.add_argument("--input", required=True, help="group spec JSON file")
    p.add_argument("--graded-ring", action="store_true")
    p.add_argument("--check-age", action="store_true")
    p.add_argument("--reference", default=None)
    p.add_argument("--cap", type=int, default=None, help="group order cap")
    p.add_argument("--exhaustive-cap", type=int, default=None,
                   help="largest |G| for exhaustive subadditivity")

    p = sub.add_parser("verify", parents=[common], help="run every invariant suite")
    p.add_argument("n", type=int)
    return parser


def _config(args) -> RunConfig:
    cfg = RunConfig(
        cache_dir=RunConfig.resolve_cache_dir(getattr(args, "cache_dir", None)),
        output=getattr(args, "output", "text"),
        verbosity=getattr(args, "verbosity", 0),
        seed=getattr(args, "seed", 0),
        jobs=getattr(args, "jobs", 1),
        use_cache=not getattr(args, "no_cache", False),
        **({"max_n": args.max_n} if hasattr(args, "max_n") else {}),
        **({"exhaustive_cap": args.exhaustive_cap} if getattr(args, "exhaustive_cap", None) else {}),
    )
    return cfg


def _check_n(n: int, cfg: RunConfig) -> None:
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    if n > cfg.max_n:
        raise CapExceededError(f"n={n} exceeds --max-n {cfg.max_n}")


def _dump(payload: dict, cfg: RunConfig) -> str:
    return json.dumps({**payload, "config": cfg.to_json()}, sort_keys=True, indent=2)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# commands; each returns (exit status, text)


def cmd_chartable(args, cfg):
    _check_n(args.n, cfg)
    table = character_table(args.n, cfg.cache_dir, use_cache=cfg.use_cache, max_n=cfg.max_n)
    if cfg.output == "json":
        return EXIT_OK, _dump(table.to_json(), cfg)
    labels = [str(p) for p in table.partitions]
    if cfg.output == "csv":
        return EXIT_OK, _csv([["chi"] + labels] + [[l] + list(r) for l, r in zip(labels, table.values)])
    cells = [[""] + labels] + [[l] + [str(v) for v in r] for l, r in zip(labels, table.values)]
    widths = [max(len(row[k]) for row in cells) for k in range(len(cells[0]))]
    return EXIT_OK, "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells)


def cmd_center(args, cfg):
    _check_n(args.n, cfg)
    value = evaluate(args.expr)
    if isinstance(value, Fraction):
        payload = {"n": args.n, "expr": args.expr, "value": _frac(value)}
    else:
        if value.n != args.n:
            raise DegreeMismatchError(f"expression has degree {value.n}, expected {args.n}")
        value = value.to(args.basis)
        payload = {"n": args.n, "expr": args.expr, "basis": args.basis,
                   "coords": [[list(lam), _frac(x)] for lam, x in value.coords.items()]}
    if cfg.output == "csv":
        rows = [["partition", "coefficient"]] + [[str(tuple(l)).replace(" ", ""), x] for l, x in payload.get("coords", [])]
        return EXIT_OK, _csv(rows) if "coords" in payload else payload["value"]
    return EXIT_OK, _dump(payload, cfg)


def cmd_fock(args, cfg):
    if not args.check_commutators:
        raise UsageError("fock: nothing to do; pass --check-commutators")
    if args.cap < 2 or args.max_index < 1:
        raise InputError("fock needs --cap >= 2 and --max-index >= 1")
    if args.cap > cfg.max_n:
        raise CapExceededError(f"Fock cap {args.cap} exceeds --max-n {cfg.max_n}")
    reports = [commutator_check(i, j, args.cap)
               for i in range(1, args.max_index + 1)
               for j in range(1, args.max_index + 1) if i + j <= args.cap]
    failure = next((dict(r.first_failure, i=r.i, j=r.j) for r in reports if not r.passed), None)
    payload = {"cap": args.cap, "max_index": args.max_index,
               "pairs": [r.to_json() for r in reports],
               "status": "pass" if failure is None else "fail", "first_failure": failure}
    return (EXIT_OK if failure is None else EXIT_INVARIANT), _dump(payload, cfg)


def cmd_hilb(args, cfg):
    n = args.n
    _check_n(n, cfg)
    if args.hilb_command == "betti":
        betti = betti_numbers(n)
        if cfg.output == "json":
            return EXIT_OK, _dump({"n": n, "betti_even": betti}, cfg)
        if cfg.output == "csv":
            return EXIT_OK, _csv([["degree", "dimension"]] + [[2 * k, b] for k, b in enumerate(betti)])
        return EXIT_OK, " ".join(map(str, betti))
    if args.hilb_command == "cup":
        ring = cached_graded_ring(n, cfg.cache_dir if cfg.use_cache else None)
        triples = sorted(ring.triples())
        if cfg.output == "json":
            return EXIT_OK, _dump({"n": n, "triples": [[list(a), list(b), list(c_), _frac(g)]
                                                       for a, b, c_, g in triples]}, cfg)
        if cfg.output == "csv":
            return EXIT_OK, _csv([["lambda", "mu", "nu", "coefficient"]]
                                 + [[str(a), str(b), str(c_), _frac(g)] for a, b, c_, g in triples])
        return EXIT_OK, "\n".join(f"{a} {b} {c_} {_frac(g)}" for a, b, c_, g in triples)
    return _report_suites(run_suites(n, ["hilbert"], jobs=cfg.jobs), n, cfg)


def cmd_quotient(args, cfg):
    spec = SymplecticGroupSpec.load(args.input)
    cap = args.cap
    if cap is not None and cap <= 0:
        raise InputError("--cap must be positive")
    report = quotient_report(spec, graded_ring=args.graded_ring, check_age=args.check_age,
                             reference=args.reference, cap=cap,
                             exhaustive_cap=cfg.exhaustive_cap, seed=cfg.seed)
    ok = all(c["passed"] for c in report["checks"].values())
    ok = ok and report.get("reference", {}).get("matches_reference", True)
    return (EXIT_OK if ok else EXIT_INVARIANT), _dump(report, cfg)


def cmd_verify(args, cfg):
    _check_n(args.n, cfg)
    return _report_suites(run_suites(args.n, jobs=cfg.jobs), args.n, cfg)


def _report_suites(results, n, cfg):
    status = EXIT_OK if all_passed(results) else EXIT_INVARIANT
    if cfg.output == "json":
        return status, _dump({"n": n, "suites": results, "status": "pass" if status == EXIT_OK else "fail"}, cfg)
    lines = []
    for suite, checks in results.items():
        for check in checks:
            mark = "PASS" if check["passed"] else "FAIL"
            extra = f"  ({check['detail']})" if check["detail"] else ""
            lines.append(f"{mark} {suite}.{check['name']}{extra}")
    lines.append(f"verify n={n}: {'all passed' if status == EXIT_OK else 'FAILURES'}")
    return status, "\n".join(lines)


COMMANDS = {
    "chartable": cmd_chartable,
    "center": cmd_center,
    "fock": cmd_fock,
    "hilb": cmd_hilb,
    "quotient": cmd_quotient,
    "verify": cmd_verify,
}

_ERROR_CODES = [
    (UsageError, EXIT_USAGE, "usage"),
    (CacheCorruptionError, EXIT_CACHE, "cache_corruption"),
    (InvariantViolation, EXIT_INVARIANT, "invariant_violation"),
    (CapExceededError, EXIT_CAP, "cap_exceeded"),
    (InputError, EXIT_INPUT, "input"),
    (HilbsymError, EXIT_INPUT, "input"),
]


def dispatch(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """Run one command; returns the exit status and writes to the given streams."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    wants_json = "--json" in argv
    try:
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:  # --help / --version
            return int(exc.code or 0)
        cfg = _config(args)
        logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2),
                            format="%(levelname)s %(name)s: %(message)s", stream=stderr)
        status, text = COMMANDS[args.command](args, cfg)
    except Exception as exc:
        for kind, code, label in _ERROR_CODES:
            if isinstance(exc, kind):
                break
        else:
            raise
        if wants_json:
            print(json.dumps({"error": label, "exit_code": code, "message": str(exc)}, sort_keys=True),
                  file=stderr)
        else:
            print(f"hilbsym: {label} error: {exc}", file=stderr)
        return code
    print(text, file=stdout)
    return status


def main() -> None:
    sys.exit(dispatch())
