"""Command-line front end.

Subcommands:
    construct  build one family instance and print its certificate
    table      regenerate a published parameter table (1 or 2)
    ebits      compute the ebit count both ways from matrix files
    verify     certify or refute claimed code parameters from a code file
    selftest   run seeded consistency suites

Exit codes are a stable contract:
    0 success, 2 constraint violation, 3 internal formula mismatch,
    4 input (field/length) mismatch, 5 infeasible.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from dataclasses import dataclass

from . import errors, families
from .eaqec import ebits_product, ebits_stack
from .fmatrix import FMatrix
from .gf import FieldSpec, field_new
from .lincode import (DEFAULT_BUDGET, LinearCode, from_generator,
                      from_parity_check, galois_dual, is_mds, min_distance)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONSTRAINT = 2
EXIT_MISMATCH = 3
EXIT_INPUT = 4
EXIT_INFEASIBLE = 5


@dataclass
class CliConfig:
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    output: str = "json"  # json | csv | text
    emit_matrices: bool = False


def _parse_field(text: str) -> FieldSpec:
    """'13', '9', or '17^8' -> FieldSpec with the canonical modulus.

    Bare prime powers are factored, so q=9 means GF(3^2).
    """
    head, _, tail = text.partition("^")
    if tail:
        return field_new(int(head), int(tail))
    q = int(head)
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q > 1 and q % p == 0:
                q //= p
                e += 1
            if q != 1:
                raise ValueError(f"{text} is not a prime power")
            return field_new(p, e)
    raise ValueError(f"{text} is not a prime power")


def _parse_kv(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {item!r}")
        out[key] = value
    return out


_FAMILY_SIGNATURES = {
    "vandermonde": ("n", "k", "t", "j"),
    "grs-ext": ("k",),
    "gabidulin": ("n", "k1", "k2", "t"),
}


def _construct(family: str, params: dict[str, str]) -> families.FamilyCertificate:
    if family not in _FAMILY_SIGNATURES:
        raise ValueError(f"unknown family {family!r}; choose from "
                         f"{sorted(_FAMILY_SIGNATURES)}")
    needed = ("q",) + _FAMILY_SIGNATURES[family]
    missing = [k for k in needed if k not in params]
    extra = [k for k in params if k not in needed]
    if missing or extra:
        raise ValueError(f"family {family} takes {needed}; "
                         f"missing={missing} unexpected={extra}")
    field = _parse_field(params["q"])
    args = [int(params[k]) for k in _FAMILY_SIGNATURES[family]]
    if family == "vandermonde":
        return families.vandermonde_family(field, *args)
    if family == "grs-ext":
        return families.grs_extended_family(field, *args)
    return families.gabidulin_family(field, *args)


def _print_certificate(cert: families.FamilyCertificate, cfg: CliConfig) -> None:
    if cfg.output == "text":
        print(f"{cert.family}: computed {cert.params} "
              f"(c_product={cert.pair.c_product}, c_stack={cert.pair.c_stack}, "
              f"slack={cert.params.slack}) predicted {cert.predicted} "
              f"verified={cert.verified}")
    else:
        print(json.dumps(cert.to_json(emit_matrices=cfg.emit_matrices), indent=2))


def cmd_construct(args, cfg: CliConfig) -> int:
    try:
        cert = _construct(args.family, _parse_kv(args.params))
    except errors.ConstraintViolation as exc:
        print(f"constraint violation: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except (errors.FormulaMismatch, errors.DualityFailure) as exc:
        print(f"internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, errors.CodingError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _print_certificate(cert, cfg)
    return EXIT_OK if cert.verified else EXIT_FAILED


_TABLE1_CSV_HEADER = "q,n,k,t,j,params,c_product,c_stack,slack"
_TABLE2_CSV_HEADER = "q,n,k1,k2,t,params,c_product,c_stack,slack"


def cmd_table(args, cfg: CliConfig) -> int:
    try:
        certs = families.table1() if args.which == 1 else families.table2()
    except errors.CodingError as exc:
        print(f"table generation failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    keys = _FAMILY_SIGNATURES["vandermonde" if args.which == 1 else "gabidulin"]
    if cfg.output == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        header = _TABLE1_CSV_HEADER if args.which == 1 else _TABLE2_CSV_HEADER
        writer.writerow(header.split(","))
        for cert in certs:
            fields = [cert.inputs["q"]] + [str(cert.inputs[k]) for k in keys]
            fields += [str(cert.params), str(cert.pair.c_product),
                       str(cert.pair.c_stack), str(cert.params.slack)]
            writer.writerow(fields)
    elif cfg.output == "json":
        print(json.dumps([c.to_json(emit_matrices=cfg.emit_matrices) for c in certs],
                         indent=2))
    else:
        for cert in certs:
            _print_certificate(cert, cfg)
    for i, cert in enumerate(certs):
        if not cert.verified:
            print(f"row {i} failed verification: {cert.params} != {cert.predicted}",
                  file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_ebits(args, cfg: CliConfig) -> int:
    try:
        G1 = FMatrix.from_text(open(args.g1_file).read())
        H2 = FMatrix.from_text(open(args.h2_file).read())
        C1 = from_generator(G1, allow_zero=True)
        C2 = from_parity_check(H2)
        c_product = ebits_product(C1, C2, args.s)
        c_stack = ebits_stack(C1, C2, args.s)
    except (errors.FieldMismatch, errors.LengthMismatch, errors.ShapeMismatch,
            OSError, ValueError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    agree = c_product == c_stack
    if cfg.output == "text":
        print(f"c_product={c_product} c_stack={c_stack} "
              f"{'agree' if agree else 'DISAGREE'}")
    else:
        print(json.dumps({"c_product": c_product, "c_stack": c_stack,
                          "s": args.s, "agree": agree}))
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_verify(args, cfg: CliConfig) -> int:
    try:
        code = LinearCode.from_text(open(args.code_file).read())
    except (errors.CodingError, OSError, ValueError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.k is not None and args.k != code.k:
        print(json.dumps({"claimed_k": args.k, "actual_k": code.k, "verdict": "refuted"}))
        return EXIT_FAILED
    try:
        report = min_distance(code, budget=cfg.budget)
    except errors.Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    result = {
        "n": code.n,
        "k": code.k,
        "d": report.d,
        "method": report.method,
        "certificate": list(report.certificate) if report.certificate else None,
    }
    if args.d is not None:
        result["claimed_d"] = args.d
        result["verdict"] = "confirmed" if args.d == report.d else "refuted"
    print(json.dumps(result))
    if args.d is not None and args.d != report.d:
        return EXIT_FAILED
    return EXIT_OK


def cmd_selftest(args, cfg: CliConfig) -> int:
    """Seeded consistency suites: both ebit formulas and both dual routes."""
    rng = random.Random(cfg.seed)
    field_shapes = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (13, 1), (3, 3)]
    failures = 0
    for trial in range(args.trials):
        p, e = field_shapes[rng.randrange(len(field_shapes))]
        field = field_new(p, e)
        n = rng.randint(2, 8)
        k1 = rng.randint(1, n)
        k2 = rng.randint(1, n)
        G1 = FMatrix(field, [[rng.randrange(field.q) for _ in range(n)]
                             for _ in range(k1)], n)
        G2 = FMatrix(field, [[rng.randrange(field.q) for _ in range(n)]
                             for _ in range(k2)], n)
        C1 = from_generator(G1, allow_zero=True)
        C2 = from_generator(G2, allow_zero=True)
        for s in range(field.e):
            cp = ebits_product(C1, C2, s)
            cs = ebits_stack(C1, C2, s)
            if cp != cs:
                failures += 1
                print(f"trial {trial}: formula mismatch product={cp} stack={cs}",
                      file=sys.stderr)
            dual_direct = galois_dual(C1, s)
            dual_frob = from_generator(
                C1.H.frobenius_entrywise((field.e - s) % field.e), allow_zero=True)
            if dual_direct.G != dual_frob.G:
                failures += 1
                print(f"trial {trial}: dual route mismatch", file=sys.stderr)
    print(f"selftest: {args.trials} trials, {failures} failures (seed={cfg.seed})")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eaqeckit",
        description="Construct and verify entanglement-assisted MDS codes "
                    "over exact finite fields.")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="exhaustive-search budget (codewords)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized consistency checks")
    parser.add_argument("--output", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--emit-matrices", action="store_true",
                        help="include G1/H2 matrix text in certificates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build one family instance")
    p.add_argument("family", choices=sorted(_FAMILY_SIGNATURES))
    p.add_argument("params", nargs="+", metavar="key=value")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="regenerate a published table")
    p.add_argument("which", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("ebits", help="ebit count from matrix files")
    p.add_argument("g1_file")
    p.add_argument("h2_file")
    p.add_argument("--s", type=int, default=0, help="Galois twist parameter")
    p.set_defaults(func=cmd_ebits)

    p = sub.add_parser("verify", help="certify or refute code parameters")
    p.add_argument("code_file")
    p.add_argument("--k", type=int, default=None, help="claimed dimension")
    p.add_argument("--d", type=int, default=None, help="claimed distance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="seeded consistency suites")
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget < 1:
        print("budget must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    cfg = CliConfig(budget=args.budget, seed=args.seed,
                    output=args.output, emit_matrices=args.emit_matrices)
    return args.func(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
