"""Command-line entry point.

Exit status: 0 on success, 1 when a verification or consistency check fails,
2 for usage errors and requests beyond a command's size cap.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import claims
from ._parallel import default_workers
from .boolfn import BooleanFunction, krawtchouk4, krawtchouk4_closed, mm_bent
from .errors import CapacityError, ConsistencyError, DimensionError, DomainError
from .graphs import build_distance_graph
from .hamming import build_hamming, enumerate_codewords, export_json, rm_star_dual_check, weight_partition
from .sefcc import SefccTable, construct, count_pairs, verify_valid
from .spectral import full_spectrum

log = logging.getLogger("hamfcc")

DEFAULT_SEED = 20260415


class VerificationFailed(Exception):
    pass


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_code(args) -> None:
    _write(args.out, export_json(build_hamming(args.n)))


def cmd_graph(args) -> None:
    code = build_hamming(args.n)
    words = enumerate_codewords(code)
    even, odd = weight_partition(words)
    vertices = {"all": words, "even": even, "odd": odd}[args.set]
    _write(args.out, build_distance_graph(vertices, args.distance).to_edge_list())


def cmd_spectrum(args) -> None:
    report = full_spectrum(args.n, method=args.method, dedupe=args.dedupe, workers=args.workers)
    _write(args.out, report.to_csv())
    log.info("lambda_min=%d argmin=%d", report.lambda_min, len(report.argmin_us))


def cmd_bent(args) -> None:
    _write(args.out, mm_bent(args.n).to_text())


def cmd_construct(args) -> None:
    f_u = BooleanFunction.from_text(Path(args.fu).read_text()) if args.fu else None
    table = construct(args.n, f_u, swap_pairs=args.swap_pairs, force=args.force)
    _write(args.out, table.to_json())


def cmd_verify(args) -> None:
    table = SefccTable.from_json(Path(args.table).read_text())
    if table.n != args.n:
        raise DimensionError(f"table is for n={table.n}, --n is {args.n}")
    validity = verify_valid(table)
    doc = {"valid": validity.valid, "failed_condition": validity.failed, "detail": validity.detail}
    if validity:
        doc.update(count_pairs(table, workers=args.workers).to_dict())
    _write(args.report, _dump_json(doc))
    if not validity:
        raise VerificationFailed(f"condition {validity.failed}: {validity.detail}")


def cmd_oracle(args) -> None:
    ids = None if args.claims == "all" else [c.strip() for c in args.claims.split(",") if c.strip()]
    unknown = [c for c in ids or [] if c not in claims.CLAIMS]
    if unknown:
        raise DomainError(f"unknown claim ids: {', '.join(unknown)}")
    reports = claims.run_claims(args.n, ids, seed=args.seed)
    _write(args.out, _dump_json([r.to_dict() for r in reports]))
    failed = [r.claim_id for r in reports if not r.match]
    if failed:
        raise VerificationFailed(f"claims failed: {', '.join(failed)}")


def cmd_kraw_check(args) -> None:
    checked = 0
    for N in range(args.max_N + 1):
        for w in range(N + 1):
            a, b = krawtchouk4(w, N), krawtchouk4_closed(w, N)
            if a != b:
                raise VerificationFailed(f"K4({w};{N}) definitional {a} != closed form {b}")
            checked += 1
    print(f"kraw-check: {checked} (w, N) pairs agree for N <= {args.max_N}")


def cmd_dual_check(args) -> None:
    ok = rm_star_dual_check(args.n)
    print(f"dual-check n={args.n}: {'equal' if ok else 'NOT equal'}")
    if not ok:
        raise VerificationFailed("dual of the even-weight subcode differs from RM*(1,n)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hamfcc", description=__doc__.splitlines()[0])
    p.add_argument("--workers", type=int, default=default_workers(), help="process count for parallel scans")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampling-based checks")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("code", help="export the Hamming code")
    s.add_argument("action", choices=["export"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_code)

    s = sub.add_parser("graph", help="export a distance graph as an edge list")
    s.add_argument("action", choices=["export"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--set", choices=["all", "even", "odd"], default="even")
    s.add_argument("--distance", type=int, default=4)
    s.add_argument("--out")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("spectrum", help="eigenvalue of every character, as CSV")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=["walsh", "direct", "both"], default="both")
    s.add_argument("--dedupe", action="store_true", help="also report distinct minimizing eigenvectors")
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("bent", help="write the inner-product bent function")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_bent)

    s = sub.add_parser("construct", help="build the full encoder table")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--fu", help="Boolean function file for the cut vector")
    s.add_argument("--swap-pairs", action="store_true", help="give even-weight codewords {01,10}")
    s.add_argument("--force", action="store_true", help="accept an f_u that is not a minimizer")
    s.add_argument("--out", default="table.json")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="check validity and count distance-2 pairs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--table", required=True)
    s.add_argument("--report", default="report.json")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="compare brute-force oracles with the fast paths")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--claims", default="all")
    s.add_argument("--out", default="report.json")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("kraw-check", help="closed-form vs definitional K4 sweep")
    s.add_argument("--max-N", dest="max_N", type=int, default=63)
    s.set_defaults(func=cmd_kraw_check)

    s = sub.add_parser("dual-check", help="dual of the even-weight subcode vs RM*(1,n)")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_dual_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        args.func(args)
    except (ConsistencyError, VerificationFailed) as exc:
        print(f"hamfcc: verification failed: {exc}", file=sys.stderr)
        return 1
    except (CapacityError, DomainError, DimensionError) as exc:
        print(f"hamfcc: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"hamfcc: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
