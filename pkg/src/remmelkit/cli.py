"""Command-line surface: tables, verification suites, and explicit bijections.

Output is deterministic: identical invocations produce byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 domain/precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, combinatorics, patterns, rooks, symfunc, trees, verify
from .combinatorics import Partition, partitions
from .errors import DomainError, IdentityViolationError
from .homomorphism import phi_from_json
from .polynomials import MultiPoly

TABLE_NAMES = (
    "kostka",
    "inverse-kostka",
    "brick",
    "stirling-q",
    "eulerian",
    "q-derangement",
    "fishburn-census",
)

FAMILY_SHORTHANDS = ("even_parts", "repeated")


# -- rendering helpers -------------------------------------------------------------


def _matrix_lines(rows, row_labels, col_labels, fmt: str, title: str) -> list[str]:
    cells = [[str(v) for v in row] for row in rows]
    if fmt == "csv":
        return [",".join(row) for row in cells]
    if fmt == "json":
        payload = {
            "table": title,
            "row_labels": row_labels,
            "col_labels": col_labels,
            "rows": cells,
        }
        return [json.dumps(payload, sort_keys=True)]
    width = max(
        [len(c) for row in cells for c in row] + [len(l) for l in row_labels] + [1]
    )
    lines = [f"{title}"]
    header = " " * (width + 2) + " ".join(f"{l:>{width}}" for l in col_labels)
    lines.append(header)
    for label, row in zip(row_labels, cells):
        lines.append(f"{label:>{width}}  " + " ".join(f"{c:>{width}}" for c in row))
    return lines


def _poly_payload(poly: MultiPoly) -> dict:
    return {"str": str(poly), "terms": poly.json_terms()}


def _scalar_lines(poly: MultiPoly, fmt: str, title: str) -> list[str]:
    if fmt == "json":
        return [json.dumps({"table": title, "value": _poly_payload(poly)}, sort_keys=True)]
    return [str(poly)]


# -- table subcommand -----------------------------------------------------------------


def cmd_table(args) -> tuple[int, list[str]]:
    name, n, fmt = args.table, args.n, args.format
    if n < 0:
        raise DomainError(f"--n must be >= 0, got {n}")
    if name in ("kostka", "inverse-kostka", "brick"):
        ps = partitions(n)
        labels = [str(p) for p in ps]
        if name == "kostka":
            rows = [[symfunc.kostka(lam, mu) for mu in ps] for lam in ps]
        elif name == "inverse-kostka":
            rows = [[symfunc.inverse_kostka(mu, lam) for lam in ps] for mu in ps]
        else:
            rows = [[symfunc.brick_tabloid_count(lam, mu) for mu in ps] for lam in ps]
        return 0, _matrix_lines(rows, labels, labels, fmt, f"{name} matrix, degree {n}")
    if name == "stirling-q":
        rows = [
            [str(rooks.stirling_q(m, k)) for k in range(n + 1)] for m in range(n + 1)
        ]
        labels = [str(m) for m in range(n + 1)]
        return 0, _matrix_lines(
            rows, labels, labels, fmt, f"q-graded placement numbers through n={n}"
        )
    if name == "eulerian":
        return 0, _scalar_lines(
            combinatorics.eulerian_polynomial(n), fmt, f"descent polynomial, n={n}"
        )
    if name == "q-derangement":
        return 0, _scalar_lines(
            combinatorics.q_derangement(n), fmt, f"q-derangement polynomial, n={n}"
        )
    if name == "fishburn-census":
        census = patterns.fishburn_census(n)
        rows = []
        for run in sorted(census.by_value_run):
            rows.append(("value-run", run, census.by_value_run[run]))
        for run in sorted(census.by_leftmost_run):
            rows.append(("leftmost-run", run, census.by_leftmost_run[run]))
        if fmt == "json":
            payload = {
                "table": f"fishburn census, n={n}",
                "total": census.total,
                "counts": [
                    {"statistic": s, "value": v, "count": c} for s, v, c in rows
                ],
            }
            return 0, [json.dumps(payload, sort_keys=True)]
        if fmt == "csv":
            lines = ["statistic,value,count"]
            lines.extend(f"{s},{v},{c}" for s, v, c in rows)
            lines.append(f"total,,{census.total}")
            return 0, lines
        lines = [f"fishburn census, n={n}"]
        lines.extend(f"  {s} {v}: {c}" for s, v, c in rows)
        lines.append(f"  total: {census.total}")
        return 0, lines
    raise DomainError(f"unknown table {name!r}")


# -- phi subcommand ---------------------------------------------------------------------


def cmd_phi(args) -> tuple[int, list[str]]:
    """Push a user homomorphism through to its h-images and series."""
    from .homomorphism import apply_to_h, phi_series

    if args.values.lstrip().startswith("{"):
        payload = args.values
    else:
        with open(args.values, "r", encoding="utf-8") as handle:
            payload = handle.read()
    phi = phi_from_json(payload)
    order = args.order if args.order is not None else phi.bound
    series = phi_series(phi, order)
    if args.format == "json":
        payload = {
            "order": order,
            "h_images": [_poly_payload(series.coeff(k)) for k in range(order + 1)],
        }
        return 0, [json.dumps(payload, sort_keys=True)]
    lines = [f"h_{k}: {series.coeff(k)}" for k in range(order + 1)]
    return 0, lines


# -- verify subcommand -----------------------------------------------------------------


def cmd_verify(args) -> tuple[int, list[str]]:
    results = verify.run_suite(args.suite, args.n)
    lines = [r.line() for r in results]
    failed = sum(1 for r in results if r.status == "FAIL")
    passed = sum(1 for r in results if r.status == "PASS")
    lines.append(f"checks: {passed} passed, {failed} failed")
    return (1 if failed else 0), lines


# -- biject subcommand -----------------------------------------------------------------


def _parse_family(text: str) -> bijection.PartitionFamily:
    if text in FAMILY_SHORTHANDS:
        return bijection.PartitionFamily(text)
    if text.startswith("multiples:"):
        return bijection.PartitionFamily("multiples", m=int(text.split(":", 1)[1]))
    return bijection.family_from_json(text)


def cmd_biject_partition(args) -> tuple[int, list[str]]:
    fam_a = _parse_family(args.a)
    fam_b = _parse_family(args.b)
    n = args.n
    witness = bijection.sum_condition_witness(fam_a, fam_b, n, max_active=None)
    if witness is not None:
        raise SumConditionFailure(witness)
    active = sorted(
        set(fam_a.active_indices(n)) | set(fam_b.active_indices(n))
    )
    lines = []
    if len(active) > bijection.DEFAULT_MAX_ACTIVE:
        print(
            f"warning: {len(active)} active indices; the subset check is exponential",
            file=sys.stderr,
        )
    for lam in bijection.avoiders(fam_a, n):
        image = bijection.gm_map(fam_a, fam_b, n, lam)
        lines.append(f"{lam} -> {image}")
    return 0, lines


class SumConditionFailure(Exception):
    def __init__(self, subset):
        super().__init__(f"sum condition fails on S={set(subset)}")
        self.subset = subset


def _read_input(args) -> str:
    if args.input == "-" or args.input is None:
        return sys.stdin.read()
    with open(args.input, "r", encoding="utf-8") as handle:
        return handle.read()


def cmd_biject_tree(args) -> tuple[int, list[str]]:
    if args.unrank is not None:
        if args.n is None:
            raise DomainError("--unrank needs --n")
        tree = trees.tree_unrank(args.unrank, args.n)
        return 0, tree.as_text().splitlines()
    if args.rank:
        tree = trees.LabeledTree.from_text(_read_input(args))
        return 0, [str(trees.tree_rank(tree))]
    if args.to_func:
        tree = trees.LabeledTree.from_text(_read_input(args))
        return 0, [trees.tree_to_func(tree).as_text()]
    if args.to_tree:
        if args.n is None:
            raise DomainError("--to-tree needs --n")
        f = trees.EndoFunction.from_text(args.n, _read_input(args))
        return 0, trees.func_to_tree(f).as_text().splitlines()
    raise DomainError("choose one of --unrank, --rank, --to-func, --to-tree")


# -- argument parsing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="remmelkit",
        description=(
            "Exact combinatorics toolkit: transition-matrix tables, identity "
            "verification suites, and explicit bijections.  Matrix rows and "
            "columns are indexed by partitions in descending lexicographic "
            "order.  The REMMELKIT_MAX_N environment variable caps the "
            "permutation-enumeration budget (default 10)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print a named table or polynomial")
    p_table.add_argument("table", choices=TABLE_NAMES)
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_table.add_argument("--output", default=None, help="write here instead of stdout")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=tuple(verify.SUITES) + ("all",))
    p_verify.add_argument("--n", type=int, default=None, help="shrink the suite bound")
    p_verify.add_argument("--output", default=None)

    p_phi = sub.add_parser(
        "phi", help="expand a user homomorphism given by generator images"
    )
    p_phi.add_argument(
        "--values", required=True, help='inline JSON {"values": [...]} or a file path'
    )
    p_phi.add_argument("--order", type=int, default=None)
    p_phi.add_argument("--format", choices=("text", "json"), default="text")
    p_phi.add_argument("--output", default=None)

    p_biject = sub.add_parser("biject", help="print an explicit bijection")
    biject_sub = p_biject.add_subparsers(dest="mode", required=True)

    p_part = biject_sub.add_parser("partition", help="avoidance-class bijection")
    p_part.add_argument("--a", required=True, help="family: even_parts, repeated, multiples:M, or JSON")
    p_part.add_argument("--b", required=True)
    p_part.add_argument("--n", type=int, required=True)
    p_part.add_argument("--output", default=None)

    p_tree = biject_sub.add_parser("tree", help="function/tree/rank conversions")
    p_tree.add_argument("--unrank", type=int, default=None, metavar="R")
    p_tree.add_argument("--rank", action="store_true")
    p_tree.add_argument("--to-func", action="store_true")
    p_tree.add_argument("--to-tree", action="store_true")
    p_tree.add_argument("--n", type=int, default=None)
    p_tree.add_argument("--input", default=None, help="path or - for stdin")
    p_tree.add_argument("--output", default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            code, lines = cmd_table(args)
        elif args.command == "verify":
            code, lines = cmd_verify(args)
        elif args.command == "phi":
            code, lines = cmd_phi(args)
        elif args.mode == "partition":
            code, lines = cmd_biject_partition(args)
        else:
            code, lines = cmd_biject_tree(args)
    except SumConditionFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, IdentityViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    text = "\n".join(lines) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


def entrypoint() -> None:
    sys.exit(main())
