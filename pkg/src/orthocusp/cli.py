"""Command-line front end.

Subcommands: ``validate``, ``andreev``, ``right-angled``, ``nikulin``,
``enumerate``, ``verify {lemma31|tables|minima|n7|all}``, ``bounds``.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 I/O
error.  Output is deterministic; ``--machine`` switches to line-oriented
``key=value`` records.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from types import SimpleNamespace
from typing import Any, Mapping

from . import andreev, bounds, cusplink, enum3, nikulin
from .core import (Poly3Error, RIGHT_ANGLED_PROFILE, canonical_code,
                   parse_poly3, to_face_lattice, to_poly3, validate)
from .data import FIXTURES, load_fixture

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: the subcommand plus its options (input
    paths, budgets, flags, worker count)."""

    command: str
    machine: bool = False
    options: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        workers = self.options.get("workers")
        if workers is not None and workers < 1:
            raise ValueError("worker count must be at least 1")


class _Out:
    """Collects plain-text or machine-readable lines."""

    def __init__(self, machine: bool):
        self.machine = machine

    def text(self, line: str):
        if not self.machine:
            print(line)

    def kv(self, key: str, value):
        if self.machine:
            print(f"{key}={value}")

    def both(self, key: str, value, line: str | None = None):
        if self.machine:
            print(f"{key}={value}")
        else:
            print(line if line is not None else f"{key}: {value}")


def _read_poly(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO) from None
    return parse_poly3(text)


def _cache_dir(explicit: str | None) -> Path | None:
    if explicit:
        return Path(explicit)
    env = os.environ.get("ORTHOCUSP_CACHE")
    return Path(env) if env else None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_validate(args, out: _Out) -> int:
    p = _read_poly(args.file)
    profile = RIGHT_ANGLED_PROFILE if args.right_angled_profile else None
    report = validate(p, profile)
    out.kv("valid", "yes" if report.valid else "no")
    out.kv("clean", "yes" if report.clean else "no")
    out.text(f"vertices={p.vertex_count} edges={p.edge_count} faces={p.face_count}"
             f" cusps={len(p.ideal_vertices)}")
    for line in report.lines():
        out.both("issue", line, line)
    if report.clean:
        out.text("ok")
        return EXIT_OK
    return EXIT_CHECK_FAILED


def cmd_andreev(args, out: _Out) -> int:
    p = _read_poly(args.file)
    if args.right_angled:
        angles = andreev.right_angles(p)
    elif args.angles:
        try:
            text = Path(args.angles).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"cannot read {args.angles}: {exc}", file=sys.stderr)
            return EXIT_IO
        angles = andreev.parse_angles(text)
    else:
        print("need an angle file or --right-angled", file=sys.stderr)
        return EXIT_USAGE
    report = andreev.check_andreev(p, angles)
    for line in report.lines():
        out.text(line)
    out.kv("verdict", report.verdict)
    return EXIT_OK if report.verdict == "pass" else EXIT_CHECK_FAILED


def cmd_right_angled(args, out: _Out) -> int:
    p = _read_poly(args.file)
    report = andreev.check_right_angled(p)
    for line in report.lines():
        out.text(line)
    out.kv("verdict", report.verdict)
    return EXIT_OK if report.verdict == "pass" else EXIT_CHECK_FAILED


def cmd_nikulin(args, out: _Out) -> int:
    if args.file is None:
        if args.n is None or args.k is None or args.l is None:
            print("need --n/--k/--l or a POLY3 file", file=sys.stderr)
            return EXIT_USAGE
        value = nikulin.nikulin_rhs(args.n, args.k, args.l)
        print(value)
        return EXIT_OK
    p = _read_poly(args.file)
    lattice = to_face_lattice(p)
    audit = nikulin.audit(lattice)
    out.text(f"a-vector: {[lattice.a(k) for k in range(3)]}, cusps: {lattice.cusp_count()}")
    for rec in audit.records:
        out.both(f"audit.k{rec.k}l{rec.l}",
                 f"{rec.average}<{rec.bound}:{'ok' if rec.strict_ok else 'boundary-or-violated'}",
                 f"average a_{rec.k}^{rec.l} = {rec.average}, strict bound {rec.bound}: "
                 + ("ok" if rec.strict_ok else "not strictly below"))
    small = nikulin.check_small(lattice)
    for line in small.lines():
        out.both("small", line, line)
    return EXIT_OK if small.passed else EXIT_CHECK_FAILED


def _enum_cache_paths(cache: Path):
    return cache / "index.txt", cache


def cmd_enumerate(args, out: _Out) -> int:
    filt = enum3.FILTER_RIGHT_ANGLED if args.realizable else enum3.FILTER_ALL
    spec = enum3.EnumSpec(args.faces, args.cusps, filt)
    cache = _cache_dir(args.out)
    if args.check_cache:
        if cache is None:
            print("--check-cache needs --out or ORTHOCUSP_CACHE", file=sys.stderr)
            return EXIT_USAGE
        return _check_cache(spec, cache, out, workers=args.workers)
    report = enum3.enumerate_types(spec, workers=args.workers, hard_cap=args.cap)
    for line in report.lines():
        out.text(line)
    for n in sorted(report.counts_by_faces):
        out.kv(f"count.faces{n}", report.counts_by_faces[n])
    out.kv("total", len(report.types))
    if cache is not None:
        try:
            cache.mkdir(parents=True, exist_ok=True)
            index = []
            for t in report.types:
                hexcode = t.code.hex()
                index.append(hexcode)
                name = hashlib.sha256(t.code).hexdigest()[:12] + ".poly3"
                (cache / name).write_text(
                    to_poly3(t.polyhedron, comment=f"faces={t.faces} code={hexcode}"),
                    encoding="utf-8")
            (cache / "index.txt").write_text(
                "".join(code + "\n" for code in sorted(index)), encoding="utf-8")
        except OSError as exc:
            print(f"cannot write cache: {exc}", file=sys.stderr)
            return EXIT_IO
        out.text(f"wrote {len(report.types)} types to {cache}")
    return EXIT_OK


def _check_cache(spec, cache: Path, out: _Out, workers: int) -> int:
    index_path = cache / "index.txt"
    try:
        stored = [line.strip() for line in index_path.read_text(encoding="utf-8").splitlines()
                  if line.strip()]
    except OSError as exc:
        print(f"cannot read {index_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    recomputed = []
    for path in sorted(cache.glob("*.poly3")):
        p = parse_poly3(path.read_text(encoding="utf-8"))
        recomputed.append(canonical_code(p).hex())
    ok = sorted(stored) == sorted(recomputed) and len(stored) == len(set(stored))
    out.both("cache", "ok" if ok else "MISMATCH",
             f"cache of {len(stored)} codes: {'verified' if ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_bounds(args, out: _Out) -> int:
    cert = bounds.main_bounds()
    for line in cert.lines(expand=args.certificate and not out.machine):
        out.text(line)
    for n in sorted(cert.table):
        out.kv(f"bound.n{n}", cert.table[n])
    return EXIT_OK


def cmd_verify(args, out: _Out) -> int:
    stage = args.stage
    workers = args.workers
    failures = 0
    if stage in ("tables", "all"):
        for name in ("table1", "table2", "case41"):
            rep = cusplink.verify_builtin(name)
            line = f"{name}: {rep.rows} rows {'OK' if rep.ok else 'FAILED'}"
            out.both(f"tables.{name}", "ok" if rep.ok else "fail", line)
            for prob in rep.problems:
                out.text("  " + prob)
            failures += 0 if rep.ok else 1
    if stage in ("lemma31", "all"):
        rep = enum3.verify_lemma31(workers=workers)
        for line in rep.lines():
            out.text(line)
        out.kv("lemma31", "ok" if rep.ok else "fail")
        failures += 0 if rep.ok else 1
    if stage in ("minima", "all"):
        rep = enum3.two_cusp_minima(budget=args.budget, workers=workers)
        for line in rep.lines():
            out.text(line)
        out.kv("minima", "ok" if rep.ok else "fail")
        failures += 0 if rep.ok else 1
    if stage in ("n7", "all"):
        cert = bounds.n7_certificate()
        for line in cert.lines():
            out.text(line)
        out.kv("n7", "ok" if cert.complete else "fail")
        failures += 0 if cert.complete else 1
    if stage == "all":
        for name in FIXTURES:
            p = load_fixture(name)
            ok = validate(p).valid
            out.both(f"fixture.{name}", "ok" if ok else "fail",
                     f"fixture {name}: {'valid' if ok else 'INVALID'}")
            failures += 0 if ok else 1
        pins = (nikulin.nikulin_rhs(6, 3, 2) == 12 and nikulin.nikulin_rhs(7, 3, 2) == 9)
        out.both("nikulin.pins", "ok" if pins else "fail",
                 f"face-average bound pins (12 and 9): {'ok' if pins else 'FAILED'}")
        failures += 0 if pins else 1
        cert = bounds.main_bounds()
        want = {6: 3, 7: 17, 8: 36, 9: 91, 10: 254, 11: 741, 12: 2200}
        ok = cert.table == want
        out.both("bounds.table", "ok" if ok else "fail",
                 f"lower-bound table: {'ok' if ok else 'FAILED'}")
        failures += 0 if ok else 1
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthocusp",
        description="Exact combinatorial checks for right-angled hyperbolic polyhedra.")
    parser.add_argument("--machine", action="store_true",
                        help="emit line-oriented key=value records")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="structural validation of a POLY3 file")
    sp.add_argument("file")
    sp.add_argument("--right-angled-profile", action="store_true",
                    help="also check degrees (finite 3, ideal 4)")

    sp = sub.add_parser("andreev", help="acute-angled realizability conditions")
    sp.add_argument("file")
    sp.add_argument("--angles", help="angle file: lines 'angle: u v p q'")
    sp.add_argument("--right-angled", action="store_true",
                    help="use the all-right assignment (every angle pi/2)")

    sp = sub.add_parser("right-angled", help="right-angled realizability conditions")
    sp.add_argument("file")

    sp = sub.add_parser("nikulin", help="face-average bound or lattice audit")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--l", type=int)

    sp = sub.add_parser("enumerate", help="exhaustive enumeration of combinatorial types")
    sp.add_argument("--faces", type=int, required=True)
    sp.add_argument("--cusps", type=int, default=0)
    sp.add_argument("--realizable", action="store_true",
                    help="keep only types passing the right-angled conditions")
    sp.add_argument("--out", help="directory for POLY3 files and index.txt"
                                  " (default: $ORTHOCUSP_CACHE if set)")
    sp.add_argument("--check-cache", action="store_true",
                    help="verify a previously written cache instead of regenerating")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--cap", type=int, default=enum3.DEFAULT_CAP,
                    help="hard face-budget cap (default 13)")

    sp = sub.add_parser("verify", help="named verification pipelines")
    sp.add_argument("stage", choices=("lemma31", "tables", "minima", "n7", "all"))
    sp.add_argument("--budget", type=int, default=10,
                    help="face budget for the two-cusp minima stage")
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("bounds", help="certified cusp-count lower bounds")
    sp.add_argument("--certificate", action="store_true",
                    help="expand the full arithmetic trail")
    return parser


_HANDLERS = {
    "validate": cmd_validate,
    "andreev": cmd_andreev,
    "right-angled": cmd_right_angled,
    "nikulin": cmd_nikulin,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
}


def run(config: RunConfig) -> int:
    """Dispatch one invocation; the rendered report goes to stdout."""
    handler = _HANDLERS.get(config.command)
    if handler is None:
        print(f"unknown command {config.command!r}", file=sys.stderr)
        return EXIT_USAGE
    out = _Out(machine=config.machine)
    try:
        return handler(SimpleNamespace(**config.options), out)
    except Poly3Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    options = {k: v for k, v in vars(args).items()
               if k not in ("command", "machine", "func")}
    try:
        config = RunConfig(command=args.command, machine=args.machine,
                           options=options)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
