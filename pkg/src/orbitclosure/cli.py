"""Command line front end.

    orbitclosure verify --suite all --primes 2,3 --trials 1000 --seed 42 --format json
    orbitclosure enumerate --system S --prime 2 --out vs_f2.csv
    orbitclosure orbit --base eta --prime 2

Exit status: 0 when every executed check passes, 1 when any check fails,
2 on usage or configuration errors (including an exceeded enumeration
budget).  The budget can be raised through the ORBITCLOSURE_BUDGET
environment variable.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from .exactfield import PrimeField, is_prime
from .paperdata import PaperData
from .structconst import (
    BUDGET_ENV,
    BudgetExceededError,
    enumeration_budget,
    vectors_to_csv,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SYSTEM_CHOICES = ("S1", "S2", "S3", "S", "T3", "T", "TS3", "Sprime", "jacobi3")


class UsageError(Exception):
    pass


def _primes(text: str) -> tuple[int, ...]:
    try:
        ps = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated list of integers: {text!r}") from None
    if not ps:
        raise argparse.ArgumentTypeError("no primes given")
    for p in ps:
        if not is_prime(p):
            raise argparse.ArgumentTypeError(f"{p} is not prime")
    return ps


def _prime(text: str) -> int:
    (p,) = _primes(text)
    return p


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitclosure", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=("all", "cover", "witness", "minors", "axioms", "sets"))
    v.add_argument("--primes", type=_primes, default=(2, 3))
    v.add_argument("--trials", type=_positive, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--timing", action="store_true", help="include duration_ms in JSON output")
    v.add_argument("--inject-fault", metavar="FAULT",
                   help="mutate the data before verifying: s3:GEN:TERM or entry:WITNESS:ROW:COL (1-based)")

    e = sub.add_parser("enumerate", help="list the F_p points of a polynomial system (reduced coordinates)")
    e.add_argument("--system", required=True, choices=SYSTEM_CHOICES)
    e.add_argument("--prime", type=_prime, required=True)
    e.add_argument("--out")

    o = sub.add_parser("orbit", help="list the GL(3, F_p)-orbit of a base vector")
    o.add_argument("--base", required=True, choices=("eta", "rho", "zero"))
    o.add_argument("--prime", type=_prime, required=True)
    o.add_argument("--full", action="store_true", help="27 coordinates instead of the reduced 9")
    o.add_argument("--out")
    return parser


def apply_fault(data: PaperData, fault: str) -> PaperData:
    parts = fault.split(":")
    try:
        if parts[0] == "s3" and len(parts) == 3:
            return data.with_flipped_s3_sign(int(parts[1]), int(parts[2]))
        if parts[0] == "entry" and len(parts) == 4:
            data.witness(parts[1])
            return data.with_flipped_entry(parts[1], int(parts[2]) - 1, int(parts[3]) - 1)
    except (IndexError, KeyError, ValueError) as exc:
        raise UsageError(f"bad fault {fault!r}: {exc}") from None
    raise UsageError(f"bad fault {fault!r}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verify(args) -> int:
    from .verifier import SuiteConfig, run_suite

    data = PaperData.default()
    if args.inject_fault:
        data = apply_fault(data, args.inject_fault)
    cfg = SuiteConfig(primes=args.primes, trials=args.trials, seed=args.seed,
                      budget=enumeration_budget(), data=data)
    start = time.perf_counter()
    report = run_suite(args.suite, cfg)
    report.duration_ms = (time.perf_counter() - start) * 1000
    if args.format == "json":
        _emit(report.to_json(timing=args.timing), args.out)
    else:
        _emit(report.to_text(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _enumerate(args) -> int:
    from .verifier import enumerate_variety

    data = PaperData.default()
    points = enumerate_variety(data.system(args.system), args.prime, enumeration_budget())
    _emit(points.to_csv(), args.out)
    return EXIT_OK


def _orbit(args) -> int:
    import numpy as np

    from .structconst import orbit_array, reduce3_array

    F = PrimeField(args.prime)
    v = PaperData.default().base_vector(args.base, F)
    rows = orbit_array(np.array(v.to_ints()), 3, args.prime, enumeration_budget())
    rows = rows if args.full else reduce3_array(rows)
    _emit(vectors_to_csv(map(tuple, rows.tolist()), reduced=not args.full), args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handlers = {"verify": _verify, "enumerate": _enumerate, "orbit": _orbit}
    try:
        return handlers[args.command](args)
    except (UsageError, BudgetExceededError, ValueError) as exc:
        hint = f" (raise {BUDGET_ENV} to allow more)" if isinstance(exc, BudgetExceededError) else ""
        print(f"orbitclosure: error: {exc}{hint}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
