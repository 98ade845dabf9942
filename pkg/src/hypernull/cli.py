"""Command-line surface: component listings, multiplicity tables, verification.

Subcommands: components, gm, am, verify, oracle-check, series.  Every tabular
command takes --format {text,json,csv} and --threads; exit codes are 0 on
success, 1 on a verification failure, 2 on usage errors.  CSV headers are
fixed (schema version 1) and documented in the README.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import algmult, genfunc, nullvariety, oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_ENUM_BOUND = 30
CSV_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class VerificationRow:
    """One row of the gm-versus-nullity comparison table."""

    n: int
    am: int
    gm: int
    holds: bool
    am_source: str
    gm_source: str


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _uniformity(text: str) -> int:
    value = int(text)
    if value < 3:
        raise argparse.ArgumentTypeError(f"uniformity must be >= 3, got {text}")
    return value


def _oracle_n_max(text: str) -> int:
    value = int(text)
    if not 3 <= value <= oracle.DEFAULT_BOUND:
        raise argparse.ArgumentTypeError(
            f"oracle check is limited to 3 <= n <= {oracle.DEFAULT_BOUND}, got {text}"
        )
    return value


def _parallel_map(fn, items, threads: int) -> list:
    if threads <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit_rows(rows: list[dict], headers: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"rows": rows}, indent=2))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(headers)
        for row in rows:
            writer.writerow([_cell(row[h]) for h in headers])
    else:
        cells = [headers] + [[_cell(row[h]) for h in headers] for row in rows]
        widths = [max(len(line[i]) for line in cells) for i in range(len(headers))]
        for line in cells:
            print("  ".join(cell.rjust(w) for cell, w in zip(line, widths)))


def _gm_table(n_max: int, enum_bound: int, threads: int) -> tuple[list[int], list[str]]:
    series = genfunc.gm_series(n_max)
    bound = min(n_max, enum_bound)
    enumerated = _parallel_map(nullvariety.gm_zero, range(1, bound + 1), threads)
    for n, value in enumerate(enumerated, start=1):
        if value != series.gm[n]:
            raise RuntimeError(
                f"enumeration and series disagree at n={n}: {value} != {series.gm[n]}"
            )
    values = enumerated + [series.gm[n] for n in range(bound + 1, n_max + 1)]
    sources = ["enumeration"] * bound + ["series"] * (n_max - bound)
    return values, sources


def cmd_components(args) -> int:
    payload = nullvariety.components_payload(args.n)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "S", "generators", "codim", "dim"])
        for item in payload["components"]:
            writer.writerow(
                [
                    payload["n"],
                    ";".join(str(i) for i in item["S"]),
                    ";".join(item["generators"]),
                    item["codim"],
                    item["dim"],
                ]
            )
    else:
        for comp in nullvariety.components(args.n):
            print(nullvariety.render_ideal(comp))
    return EXIT_OK


def cmd_gm(args) -> int:
    values, sources = _gm_table(args.n_max, args.enum_bound, args.threads)
    rows = [
        {"n": n, "gm": values[n - 1], "source": sources[n - 1]}
        for n in range(1, args.n_max + 1)
    ]
    _emit_rows(rows, ["n", "gm", "source"], args.format)
    return EXIT_OK


def cmd_am(args) -> int:
    def row(n: int) -> dict:
        rec = algmult.nullity_recursive(n, args.k)
        closed = algmult.nullity_closed_form(n, args.k)
        return {
            "n": n,
            "k": args.k,
            "D_rec": rec,
            "D_closed": closed,
            "match": rec == closed,
        }

    rows = _parallel_map(row, range(1, args.n_max + 1), args.threads)
    _emit_rows(rows, ["n", "k", "D_rec", "D_closed", "match"], args.format)
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


def cmd_verify(args) -> int:
    gm_values, gm_sources = _gm_table(args.n_max, args.enum_bound, args.threads)
    am_values = _parallel_map(
        lambda n: algmult.nullity_closed_form(n, 3), range(1, args.n_max + 1),
        args.threads,
    )
    table = [
        VerificationRow(
            n=n,
            am=am_values[n - 1],
            gm=gm_values[n - 1],
            holds=gm_values[n - 1] <= am_values[n - 1],
            am_source="closed-form",
            gm_source=gm_sources[n - 1],
        )
        for n in range(1, args.n_max + 1)
    ]
    if args.format == "json":
        rows = [
            {
                "n": row.n,
                "am": row.am,
                "gm": row.gm,
                "holds": row.holds,
                "sources": {"am": row.am_source, "gm": row.gm_source},
            }
            for row in table
        ]
        print(json.dumps({"rows": rows}, indent=2))
    else:
        rows = [
            {
                "n": row.n,
                "am": row.am,
                "gm": row.gm,
                "holds": row.holds,
                "am_source": row.am_source,
                "gm_source": row.gm_source,
            }
            for row in table
        ]
        _emit_rows(
            rows, ["n", "am", "gm", "holds", "am_source", "gm_source"], args.format
        )
    return EXIT_OK if all(row.holds for row in table) else EXIT_FAIL


def cmd_oracle_check(args) -> int:
    def check(n: int) -> dict:
        brute = {(c.variables, c.binomials) for c in oracle.brute_force_components(n)}
        structured = {
            (c.variables, c.binomials)
            for c in map(oracle.candidate_from_component, nullvariety.components(n))
        }
        return {
            "n": n,
            "components": len(structured),
            "match": brute == structured,
            "missing": sorted(
                str(sorted(v)) + "|" + str(sorted(b)) for v, b in structured - brute
            ),
            "extra": sorted(
                str(sorted(v)) + "|" + str(sorted(b)) for v, b in brute - structured
            ),
        }

    results = _parallel_map(check, range(3, args.n_max + 1), args.threads)
    rows = [{k: r[k] for k in ("n", "components", "match")} for r in results]
    if args.format == "text":
        for row in rows:
            state = "OK" if row["match"] else "MISMATCH"
            print(f"n={row['n']} {state} ({row['components']} components)")
    else:
        _emit_rows(rows, ["n", "components", "match"], args.format)
    ok = True
    for result in results:
        if not result["match"]:
            ok = False
            print(
                f"n={result['n']}: missing={result['missing']} extra={result['extra']}",
                file=sys.stderr,
            )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_series(args) -> int:
    series = genfunc.gm_series(args.n_max)
    gm_values, _ = _gm_table(args.n_max, args.enum_bound, args.threads)
    bound = min(args.n_max, args.enum_bound)

    def provenance(n: int) -> str:
        if n <= 2:
            return "override"
        return "enumeration" if n <= bound else "recurrence"

    rows = [
        {
            "n": n,
            "eta": series.per_subset[n],
            "eta_prime": series.gm[n],
            "gm_zero": gm_values[n - 1],
            "provenance": provenance(n),
        }
        for n in range(1, args.n_max + 1)
    ]
    _emit_rows(rows, ["n", "eta", "eta_prime", "gm_zero", "provenance"], args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypernull",
        description="Exact zero-eigenvalue multiplicities of loose hyperpaths",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n_max=True, enum_bound=False):
        if n_max:
            p.add_argument("--n-max", type=_positive_int, required=True)
        if enum_bound:
            p.add_argument(
                "--enum-bound",
                type=_positive_int,
                default=DEFAULT_ENUM_BOUND,
                help="largest n computed by direct enumeration (default 30)",
            )
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--threads", type=_positive_int, default=1)

    p = sub.add_parser("components", help="list the irreducible components for one n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("gm", help="geometric multiplicity of zero, n = 1..n_max")
    add_common(p, enum_bound=True)
    p.set_defaults(func=cmd_gm)

    p = sub.add_parser("am", help="nullity by both routes, n = 1..n_max")
    add_common(p)
    p.add_argument("--k", type=_uniformity, default=3)
    p.set_defaults(func=cmd_am)

    p = sub.add_parser("verify", help="check gm(0) <= nullity for n = 1..n_max")
    add_common(p, enum_bound=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-check", help="brute force vs enumeration, n = 3..n_max")
    p.add_argument("--n-max", type=_oracle_n_max, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--threads", type=_positive_int, default=1)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("series", help="series coefficients and enumeration cross-check")
    add_common(p, enum_bound=True)
    p.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
