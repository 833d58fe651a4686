"""Command-line surface: analyze, table, classify, sums, verify.

Output formats: json (stable byte-for-byte: sorted keys, compact separators,
rationals as "num/den" strings), tsv, and pretty.  Finite sets serialize as
run-length interval strings mirroring brace notation ("181-191,200-210");
co-finite sets as {"below": ..., "all_from": n}.  No numeric logic lives
here; every command is a thin adapter over the library.

Exit codes: 0 success, 2 usage error, 3 precondition failure, 4 cap
exceeded, 5 verifier failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import arf as arf_mod
from . import symmetry as sym_mod
from .denumerant import GeneratorSet, as_generator_set
from .errors import CapExceededError, PreconditionError
from .exactmath import verify_eulerian_gf
from .identities import verify_gcd_scaling, verify_johnson, verify_watanabe
from .reports import IdentityReport, VerdictBundle
from .semigroup import (
    build,
    genus_p,
    power_sum_bernoulli,
    power_sum_gaps,
    sylvester_sum_p,
    weighted_power_sum,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4
EXIT_VERIFIER_FAILED = 5


# ---------------------------------------------------------------------------
# rendering helpers

def interval_runs(values: Iterable[int]) -> str:
    """Run-length rendering of a finite integer set: "0-23,25,27"."""
    items = sorted(values)
    runs: list[str] = []
    i = 0
    while i < len(items):
        j = i
        while j + 1 < len(items) and items[j + 1] == items[j] + 1:
            j += 1
        if j == i:
            runs.append(str(items[i]))
        else:
            runs.append(f"{items[i]}-{items[j]}")
        i = j + 1
    return ",".join(runs)


def finite_set_doc(values: Iterable[int], expand: bool) -> Any:
    ordered = sorted(values)
    return ordered if expand else interval_runs(ordered)


def cofinite_doc(below: Iterable[int], all_from: int, expand: bool) -> dict[str, Any]:
    """Merge the finite part into the tail where contiguous, then render."""
    items = sorted(below)
    while items and items[-1] == all_from - 1:
        all_from -= 1
        items.pop()
    return {"below": finite_set_doc(items, expand), "all_from": all_from}


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def jsonify(value: Any) -> Any:
    """Recursively convert to JSON-stable primitives."""
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, dict):
        return {str(k): jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    if is_dataclass(value) and not isinstance(value, type):
        return jsonify(asdict(value))
    return value


def emit(doc: dict[str, Any], fmt: str) -> None:
    doc = jsonify(doc)
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    elif fmt == "tsv":
        for line in _tsv_lines(doc):
            print(line)
    else:
        for line in _pretty_lines(doc, indent=0):
            print(line)


def _tsv_lines(doc: dict[str, Any]) -> list[str]:
    rows = doc.get("rows")
    if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
        head = [k for k in doc if k != "rows"]
        lines = [f"{k}\t{_scalar(doc[k])}" for k in sorted(head)]
        columns = sorted(rows[0])
        for lead in ("mu", "p"):
            if lead in columns:
                columns.remove(lead)
                columns.insert(0, lead)
        lines.append("\t".join(columns))
        for row in rows:
            lines.append("\t".join(_scalar(row.get(c)) for c in columns))
        return lines
    return [f"{k}\t{_scalar(v)}" for k, v in sorted(doc.items())]


def _scalar(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def _pretty_lines(value: Any, indent: int) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_pretty_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_pretty_lines(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


# ---------------------------------------------------------------------------
# argument parsing

def _parse_gens(text: str) -> GeneratorSet:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise PreconditionError(f"could not parse generators from {text!r}") from None
    return as_generator_set(values)


def _parse_p_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise PreconditionError(f"could not parse p range from {text!r}") from None
        if lo < 0 or hi < lo:
            raise PreconditionError(f"invalid p range {text!r}")
        return list(range(lo, hi + 1))
    try:
        p = int(text)
    except ValueError:
        raise PreconditionError(f"could not parse p from {text!r}") from None
    if p < 0:
        raise PreconditionError("p must be non-negative")
    return [p]


def _single_p(values: list[int]) -> int:
    if len(values) != 1:
        raise PreconditionError("this command takes a single p, not a range")
    return values[0]


# ---------------------------------------------------------------------------
# document builders

def analyze_document(gens: GeneratorSet, p: int, expand: bool = False) -> dict[str, Any]:
    sp = build(gens, p)
    report = sym_mod.classify(sp)
    members_below = [n for n in sp.small_elements if n <= sp.frobenius]
    return {
        "generators": list(sp.generators.ordered),
        "p": sp.p,
        "modulus": sp.modulus,
        "apery_by_residue": list(sp.apery_by_residue),
        "apery_sorted": list(sp.apery_sorted),
        "multiplicity": sp.multiplicity,
        "frobenius": sp.frobenius,
        "conductor": sp.conductor,
        "genus": genus_p(gens, p),
        "sylvester_sum": sylvester_sum_p(gens, p),
        "kunz": list(sp.kunz),
        "gaps": finite_set_doc(sp.gaps, expand),
        "members": cofinite_doc(members_below, sp.conductor, expand),
        "pseudo_frobenius": finite_set_doc(report.pf, expand),
        "type": report.type_count,
        "h_set": finite_set_doc(report.h_set, expand),
        "l_set": finite_set_doc(report.l_set, expand),
        "k_set": cofinite_doc(report.k_set.below, report.k_set.all_from, expand),
        "symmetric": report.symmetric,
        "pseudo_symmetric": report.pseudo_symmetric,
        "almost_symmetric": report.almost_symmetric,
        "completely_symmetric": report.completely_symmetric,
        "pattern": sym_mod.detect_pattern(sp),
        "arf": arf_mod.is_arf(sp).is_arf,
    }


_TABLE_FIELDS = {
    "frobenius": lambda sp: sp.frobenius,
    "multiplicity": lambda sp: sp.multiplicity,
    "conductor": lambda sp: sp.conductor,
    "genus": lambda sp: len(sp.gaps),
    "sylvester_sum": lambda sp: sum(sp.gaps),
    "type": lambda sp: sym_mod.type_p(sp),
}


def table_document(gens: GeneratorSet, p_values: list[int], fields: list[str]) -> dict[str, Any]:
    for f in fields:
        if f not in _TABLE_FIELDS:
            raise PreconditionError(
                f"unknown field {f!r}; choose from {sorted(_TABLE_FIELDS)}"
            )
    rows = []
    for p in p_values:
        sp = build(gens, p)
        row: dict[str, Any] = {"p": p}
        for f in fields:
            row[f] = _TABLE_FIELDS[f](sp)
        rows.append(row)
    return {"generators": list(gens.ordered), "rows": rows}


def classify_document(gens: GeneratorSet, p_values: list[int]) -> dict[str, Any]:
    rows = []
    for p in p_values:
        report = sym_mod.classify(build(gens, p))
        rows.append(
            {
                "p": p,
                "symmetric": report.symmetric,
                "pseudo_symmetric": report.pseudo_symmetric,
                "almost_symmetric": report.almost_symmetric,
                "completely_symmetric": report.completely_symmetric,
            }
        )
    return {"generators": list(gens.ordered), "rows": rows}


def sums_document(
    gens: GeneratorSet,
    p: int,
    mu_max: int,
    weight: str | None,
    mu_cap: int,
) -> dict[str, Any]:
    rows = []
    for mu in range(mu_max + 1):
        row: dict[str, Any] = {
            "mu": mu,
            "direct": power_sum_gaps(gens, p, mu, mu_cap=mu_cap),
            "from_apery": power_sum_bernoulli(gens, p, mu, mu_cap=mu_cap),
        }
        if weight is not None:
            row["weighted"] = weighted_power_sum(
                gens, p, Fraction(weight), mu, mu_cap=mu_cap
            )
        rows.append(row)
    doc: dict[str, Any] = {"generators": list(gens.ordered), "p": p, "rows": rows}
    if weight is not None:
        doc["weight"] = fraction_str(Fraction(weight))
    return doc


# ---------------------------------------------------------------------------
# verify plumbing

def _report_doc(report: Any) -> dict[str, Any]:
    if isinstance(report, IdentityReport):
        return {
            "kind": "identity",
            "identity": report.identity,
            "params": report.params,
            "lhs": report.lhs,
            "rhs": report.rhs,
            "passed": report.passed,
            "applicable": True,
            "note": report.note,
            "extras": report.extras,
        }
    if isinstance(report, VerdictBundle):
        return {
            "kind": "verdicts",
            "identity": report.name,
            "verdicts": report.verdicts,
            "passed": report.passed,
            "applicable": report.applicable,
            "note": report.note,
        }
    if isinstance(report, arf_mod.ArfReport):
        return {
            "kind": "arf",
            "is_arf": report.is_arf,
            "witness": list(report.witness) if report.witness else None,
            "apery_checks": list(report.apery_checks) if report.apery_checks else None,
            "kunz_checks": list(report.kunz_checks) if report.kunz_checks else None,
            "passed": bool(
                report.applicable
                and all(report.apery_checks or ())
                and all(report.kunz_checks or ())
            ),
            "applicable": report.applicable,
            "note": report.note,
        }
    return {"kind": "series", "passed": report.passed, "first_mismatch": report.first_mismatch, "applicable": True, "note": ""}


def _run_verify(args: argparse.Namespace) -> list[Any]:
    name = args.name
    if name in ("johnson", "watanabe"):
        fn = verify_johnson if name == "johnson" else verify_watanabe
        if args.alpha is None or args.beta is None or args.gens is None:
            raise PreconditionError(f"verify {name} needs --alpha, --beta and --gens")
        gens = _parse_gens(args.gens)
        return [fn(args.alpha, args.beta, gens, p) for p in _parse_p_range(args.p)]
    if name == "gcd-scaling":
        gens = _parse_gens(_required(args, "gens"))
        return [verify_gcd_scaling(gens, p) for p in _parse_p_range(args.p)]
    if name in ("symmetry", "pairings", "pf-consequences", "almost-symmetric"):
        gens = _parse_gens(_required(args, "gens"))
        fns = {
            "symmetry": sym_mod.verify_symmetry_equivalences,
            "pairings": sym_mod.verify_apery_pairings,
            "pf-consequences": sym_mod.verify_pf_consequences,
            "almost-symmetric": sym_mod.verify_almost_symmetric_equivalences,
        }
        return [fns[name](build(gens, p)) for p in _parse_p_range(args.p)]
    if name == "nari":
        gens = _parse_gens(_required(args, "gens"))
        return [sym_mod.verify_nari(gens)]
    if name == "arf-heredity":
        if args.a is None or args.b is None:
            raise PreconditionError("verify arf-heredity needs --a and --b")
        return [arf_mod.verify_arf_heredity(args.a, args.b, args.pmax)]
    if name == "arf-kunz":
        gens = _parse_gens(_required(args, "gens"))
        return [
            arf_mod.verify_arf_conductor_kunz(build(gens, p))
            for p in _parse_p_range(args.p)
        ]
    if name == "eulerian-gf":
        if args.exponent is None or args.order is None:
            raise PreconditionError("verify eulerian-gf needs --exponent and --order")
        return [verify_eulerian_gf(args.exponent, args.order)]
    raise PreconditionError(f"unknown verifier {name!r}")


def _required(args: argparse.Namespace, field: str) -> str:
    value = getattr(args, field, None)
    if value is None:
        raise PreconditionError(f"verify {args.name} needs --{field}")
    return value


def verify_exit_code(docs: list[dict[str, Any]]) -> int:
    failed = any(doc["applicable"] and not doc["passed"] for doc in docs)
    return EXIT_VERIFIER_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------
# command handlers

def _cmd_analyze(args: argparse.Namespace) -> int:
    gens = _parse_gens(args.gens)
    p = _single_p(_parse_p_range(args.p))
    emit(analyze_document(gens, p, expand=args.expand), args.format)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    gens = _parse_gens(args.gens)
    fields = [f.strip() for f in args.field.split(",") if f.strip()]
    if not fields:
        raise PreconditionError("--field must name at least one field")
    emit(table_document(gens, _parse_p_range(args.p), fields), args.format)
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    gens = _parse_gens(args.gens)
    emit(classify_document(gens, _parse_p_range(args.p)), args.format)
    return EXIT_OK


def _cmd_sums(args: argparse.Namespace) -> int:
    gens = _parse_gens(args.gens)
    p = _single_p(_parse_p_range(args.p))
    emit(
        sums_document(gens, p, args.mu, args.weight, args.mu_cap),
        args.format,
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    docs = [_report_doc(r) for r in _run_verify(args)]
    emit({"rows": docs, "passed": all(d["passed"] or not d["applicable"] for d in docs)}, args.format)
    return verify_exit_code(docs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psg",
        description="Exact computations on p-numerical semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, p_default: str | None = None) -> None:
        p.add_argument("--gens", required=True, help="comma-separated generators, e.g. 4,5,6")
        if p_default is None:
            p.add_argument("--p", required=True, help="p value or range lo..hi")
        else:
            p.add_argument("--p", default=p_default, help="p value or range lo..hi")
        p.add_argument("--format", choices=("json", "tsv", "pretty"), default="json")

    analyze = sub.add_parser("analyze", help="full report for one (gens, p)")
    common(analyze)
    analyze.add_argument("--expand", action="store_true", help="emit sets as integer arrays")
    analyze.set_defaults(handler=_cmd_analyze)

    table = sub.add_parser("table", help="per-p rows of selected fields")
    common(table)
    table.add_argument("--field", default="frobenius", help="comma-separated field names")
    table.set_defaults(handler=_cmd_table)

    classify = sub.add_parser("classify", help="per-p symmetry flags")
    common(classify)
    classify.set_defaults(handler=_cmd_classify)

    sums = sub.add_parser("sums", help="gap power sums (direct and from class minima)")
    common(sums)
    sums.add_argument("--mu", type=int, default=3, help="largest exponent to report")
    sums.add_argument("--weight", default=None, help='optional rational weight "num/den"')
    sums.add_argument("--mu-cap", type=int, default=8, dest="mu_cap")
    sums.set_defaults(handler=_cmd_sums)

    verify = sub.add_parser("verify", help="run a named verifier")
    verify.add_argument(
        "name",
        choices=(
            "johnson",
            "watanabe",
            "gcd-scaling",
            "symmetry",
            "pairings",
            "pf-consequences",
            "almost-symmetric",
            "nari",
            "arf-heredity",
            "arf-kunz",
            "eulerian-gf",
        ),
    )
    verify.add_argument("--gens", default=None)
    verify.add_argument("--p", default="0")
    verify.add_argument("--alpha", type=int, default=None)
    verify.add_argument("--beta", type=int, default=None)
    verify.add_argument("--a", type=int, default=None)
    verify.add_argument("--b", type=int, default=None)
    verify.add_argument("--pmax", type=int, default=5)
    verify.add_argument("--exponent", type=int, default=None)
    verify.add_argument("--order", type=int, default=None)
    verify.add_argument("--format", choices=("json", "tsv", "pretty"), default="json")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
