"""Command-line interface.

Exit codes: 0 when the requested property holds (or plain output was
produced), 1 when a property was refuted with a witness, 2 on usage or
input errors.  All diagnostic output goes to stderr; stdout carries
stable ``key=value`` lines so the commands compose in shell pipelines.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bounds import lower_bounds, t_dn_lower_bound
from .constructions import affine_plane_matrix, identity_matrix, random_disjunct_corpus
from .disjunctness import find_isolated_columns, is_d_disjunct, max_disjunct_order
from .group_testing import (
    BudgetExceededError,
    OutcomeVector,
    naive_decode,
    verify_identification,
)
from .matrix import BinaryMatrix, DmatFormatError, load_matrix, save_matrix, write_matrix
from .pairs import (
    PairGraph,
    classify_pairs,
    matching_number,
    private_pair_budget,
    verify_lemma3,
)
from .search import exhaustive_T
from .matrix import _iter_bits


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _write_output(matrix: BinaryMatrix, target: str) -> None:
    if target == "-":
        sys.stdout.write(write_matrix(matrix))
    else:
        save_matrix(matrix, target)
        print(f"wrote={target} t={matrix.t} n={matrix.n}")


def _cmd_construct(args) -> int:
    if args.kind == "affine":
        matrix = affine_plane_matrix(args.q)
        _write_output(matrix, args.output)
    elif args.kind == "identity":
        matrix = identity_matrix(args.n)
        _write_output(matrix, args.output)
    else:  # random
        corpus = random_disjunct_corpus(
            args.d,
            args.t,
            args.n,
            args.seed,
            args.attempts,
            mixed_weights=args.mixed_weights,
            isolated_free=args.isolated_free,
        )
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, matrix in enumerate(corpus):
            path = outdir / f"d{args.d}_s{args.seed}_{i:03d}.dmat"
            save_matrix(matrix, path)
            print(f"wrote={path} t={matrix.t} n={matrix.n}")
        print(f"kept={len(corpus)} attempts={args.attempts}")
    return 0


def _cmd_check(args) -> int:
    matrix = load_matrix(args.file)
    if args.max:
        print(f"max_disjunct_order={max_disjunct_order(matrix)}")
        return 0
    verdict = is_d_disjunct(matrix, args.d)
    if verdict.is_disjunct:
        suffix = " vacuous=true" if verdict.vacuous else ""
        print(f"DISJUNCT d={args.d}{suffix}")
        return 0
    witness = verdict.witness
    print(f"NOT DISJUNCT d={args.d}")
    print(f"column={witness.column}")
    print(f"cover={','.join(str(c) for c in witness.covering)}")
    return 1


def _cmd_analyze(args) -> int:
    matrix = load_matrix(args.file)
    d = args.d
    isolated = find_isolated_columns(matrix)
    disjunct = is_d_disjunct(matrix, d).is_disjunct
    checks_valid = disjunct and not isolated
    if not disjunct:
        print(f"note=matrix is not {d}-disjunct; pair-bound checks skipped")
    if isolated:
        print(f"note={len(isolated)} isolated columns; pair-bound checks skipped")
    refuted = False
    for j in range(matrix.n):
        cls = classify_pairs(matrix, j)
        graph = PairGraph(
            vertices=frozenset(_iter_bits(matrix.column_mask(j))),
            edges=cls.nonprivate_pairs,
        )
        nu = matching_number(graph)
        if checks_valid:
            report = verify_lemma3(
                matrix, j, d, allow_out_of_range=True, check_disjunct=False
            )
            ok = report.bound_ok and report.matching_ok
            status = "pass" if ok else "fail"
            if not report.in_range:
                status += "-out-of-range"
            elif not ok:
                refuted = True
            bound = str(report.bound)
        else:
            status = "n/a"
            bound = "-"
        print(
            f"column={j} weight={matrix.weight(j)}"
            f" private={len(cls.private_pairs)}"
            f" nonprivate={len(cls.nonprivate_pairs)}"
            f" matching={nu} bound={bound} lemma3={status}"
        )
    budget = private_pair_budget(matrix)
    print(
        f"private_total={budget.total} pair_budget={budget.budget}"
        f" budget_ok={_bool(budget.ok)}"
    )
    return 1 if refuted else 0


def _cmd_decode(args) -> int:
    matrix = load_matrix(args.file)
    outcome = OutcomeVector.from_bitstring(args.outcomes)
    candidates = sorted(naive_decode(matrix, outcome))
    print(f"candidates={','.join(str(c) for c in candidates)}")
    return 0


def _cmd_verify_id(args) -> int:
    matrix = load_matrix(args.file)
    report = verify_identification(matrix, args.d, max_cases=args.max_cases)
    if report.ok:
        print(f"IDENTIFIABLE d={args.d} cases={report.cases}")
        return 0
    print(f"NOT IDENTIFIABLE d={args.d}")
    print(f"failing_set={','.join(str(j) for j in report.failure)}")
    return 1


def _cmd_bounds(args) -> int:
    report = lower_bounds(args.d)
    print(f"d={report.d}")
    print(f"bassalygo={report.bassalygo}")
    print(f"theorem2_real={report.theorem2_real!r}")
    print(f"theorem2={report.theorem2}")
    print(f"conjecture={report.conjecture_strong}")
    print(f"combined={report.combined}")
    print(f"kappa={report.ratio!r}")
    if args.n is not None:
        tdn = t_dn_lower_bound(args.d, args.n)
        print(f"n={tdn.n}")
        print(f"t_dn={tdn.value}")
        print(f"dominant={tdn.dominant}")
    return 0


def _cmd_search(args) -> int:
    certificates = exhaustive_T(args.d, args.tmax, budget=args.budget)
    outdir = Path(args.output) if args.output else None
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)
    for cert in certificates:
        print(
            f"t={cert.t} found={_bool(cert.found)}"
            f" exhausted={_bool(cert.exhausted)} nodes={cert.nodes}"
        )
        if cert.found and outdir is not None:
            path = outdir / f"t{cert.t}_d{cert.d}.dmat"
            save_matrix(cert.matrix, path)
            print(f"wrote={path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disjunct",
        description="Construct, verify and analyze d-disjunct group-testing matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="generate matrices")
    kinds = construct.add_subparsers(dest="kind", required=True)
    affine = kinds.add_parser("affine", help="affine plane incidence matrix")
    affine.add_argument("--q", type=int, required=True, help="prime order")
    affine.add_argument("-o", "--output", required=True, help=".dmat path or -")
    identity = kinds.add_parser("identity", help="identity matrix")
    identity.add_argument("--n", type=int, required=True)
    identity.add_argument("-o", "--output", required=True, help=".dmat path or -")
    rand = kinds.add_parser("random", help="random verified d-disjunct corpus")
    rand.add_argument("--d", type=int, required=True)
    rand.add_argument("--t", type=int, required=True)
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--seed", type=int, required=True)
    rand.add_argument("--attempts", type=int, required=True)
    rand.add_argument("--mixed-weights", action="store_true")
    rand.add_argument("--isolated-free", action="store_true")
    rand.add_argument("-o", "--output", required=True, help="output directory")
    construct.set_defaults(func=_cmd_construct)

    check = sub.add_parser("check", help="exact disjunctness check")
    group = check.add_mutually_exclusive_group(required=True)
    group.add_argument("--d", type=int, help="order to verify")
    group.add_argument("--max", action="store_true", help="report the largest order")
    check.add_argument("file", help=".dmat input")
    check.set_defaults(func=_cmd_check)

    analyze = sub.add_parser("analyze", help="per-column private-pair analysis")
    analyze.add_argument("--d", type=int, required=True)
    analyze.add_argument("file", help=".dmat input")
    analyze.set_defaults(func=_cmd_analyze)

    decode = sub.add_parser("decode", help="naive decoder for an outcome vector")
    decode.add_argument("--outcomes", required=True, help="length-t bitstring")
    decode.add_argument("file", help=".dmat input")
    decode.set_defaults(func=_cmd_decode)

    verify_id = sub.add_parser(
        "verify-id", help="exhaustive identification guarantee check"
    )
    verify_id.add_argument("--d", type=int, required=True)
    verify_id.add_argument("--max-cases", type=int, default=2_000_000)
    verify_id.add_argument("file", help=".dmat input")
    verify_id.set_defaults(func=_cmd_verify_id)

    bounds = sub.add_parser("bounds", help="evaluate row lower bounds")
    bounds.add_argument("--d", type=int, required=True)
    bounds.add_argument("--n", type=int, default=None)
    bounds.set_defaults(func=_cmd_bounds)

    search = sub.add_parser("search", help="exhaustive search for T(d) certificates")
    search.add_argument("--d", type=int, required=True)
    search.add_argument("--tmax", type=int, required=True)
    search.add_argument("--budget", type=int, default=2_000_000, help="DFS node budget")
    search.add_argument("-o", "--output", default=None, help="directory for found matrices")
    search.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DmatFormatError, BudgetExceededError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
