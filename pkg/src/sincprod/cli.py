"""Command-line front end.

Subcommands:
    integrate     exact pi-coefficient of a frequency list
    classify      dominance classification with exact inequality sides
    classic-table the 1, 1/3, 1/5, ... family up to a chosen length
    verify        closed forms vs engine strategies vs quadrature

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .closed_forms import (
    classical_frequencies,
    classify_dominance,
    evaluate,
    first_dominant_correction,
    first_dominant_value,
    three_dominant_equal_first_two,
    three_dominant_value,
    three_frequency_value,
)
from .core import (
    FrequencyList,
    format_rational,
    frequency_list,
    load_frequency_file,
    parse_rational,
)
from .engine import EnumerationStrategy, integral_coefficient
from .errors import (
    ApplicabilityError,
    SincprodError,
    VerificationError,
)
from .quadrature import crosscheck

_STRATEGIES = {
    "brute": EnumerationStrategy.BRUTE_FORCE,
    "mirror": EnumerationStrategy.MIRROR_HALVED,
    "mitm": EnumerationStrategy.MEET_IN_MIDDLE,
}


@dataclasses.dataclass
class OutputRecord:
    freqs: list[str]
    n: int
    coefficient: str
    decimal: str
    classification: str
    provenance: str
    verified: Optional[dict] = None


def _record(freqs: FrequencyList, value, classification, provenance: str, digits: int) -> OutputRecord:
    return OutputRecord(
        freqs=[format_rational(a) for a in freqs.entries],
        n=freqs.n,
        coefficient=format_rational(value.coefficient),
        decimal=value.decimal(digits),
        classification=classification.tag.value,
        provenance=provenance,
    )


def _print_record(record: OutputRecord, as_json: bool) -> None:
    if as_json:
        print(json.dumps(dataclasses.asdict(record), indent=2))
        return
    print(f"frequencies: {', '.join(record.freqs)}  (n = {record.n})")
    print(f"coefficient: {record.coefficient}")
    print(f"value: {record.decimal}  (coefficient * pi)")
    print(f"classification: {record.classification}")
    print(f"provenance: {record.provenance}")


def _freqs_from_args(args: argparse.Namespace) -> FrequencyList:
    if getattr(args, "file", None):
        if args.freqs:
            raise SincprodError("give frequencies either as arguments or with --file, not both")
        return load_frequency_file(args.file)
    if not args.freqs:
        raise SincprodError("no frequencies given (pass them as arguments or use --file)")
    return frequency_list([parse_rational(tok) for tok in args.freqs])


def _cmd_integrate(args: argparse.Namespace) -> int:
    freqs = _freqs_from_args(args)
    classification = classify_dominance(freqs)
    verified = None
    if args.strategy:
        strategy = _STRATEGIES[args.strategy]
        value = integral_coefficient(freqs, strategy)
        provenance = f"engine:{strategy.value}"
    else:
        result = evaluate(freqs, verify=not args.no_verify)
        value, provenance = result.value, result.provenance
        if result.verified:
            verified = {"method": "engine-recomputation", "match": True}
    record = _record(freqs, value, classification, provenance, args.digits)
    record.verified = verified
    _print_record(record, args.json)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    freqs = _freqs_from_args(args)
    cls = classify_dominance(freqs)
    if args.json:
        payload = {
            "freqs": [format_rational(a) for a in freqs.entries],
            "n": freqs.n,
            "classification": cls.tag.value,
            "dominated_count": cls.dominated_count,
            "boundary_flags": list(cls.boundary_flags),
            "checks": [
                {"label": c.label, "lhs": format_rational(c.lhs), "rhs": format_rational(c.rhs), "holds": c.holds}
                for c in cls.checks
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"frequencies: {freqs}  (n = {freqs.n})")
    print(f"classification: {cls.tag.value}")
    if cls.dominated_count is not None:
        print(f"dominated count N: {cls.dominated_count}")
    for check in cls.checks:
        print(f"  {check}")
    if cls.boundary_flags:
        print(f"boundary ties: {'; '.join(cls.boundary_flags)}")
    return 0


def _cmd_classic_table(args: argparse.Namespace) -> int:
    if not 1 <= args.max_n <= 12:
        raise SincprodError(f"--max-n must be between 1 and 12, got {args.max_n}")
    rows = []
    for n in range(1, args.max_n + 1):
        freqs = classical_frequencies(n)
        result = evaluate(freqs)
        rows.append(_record(freqs, result.value, result.classification, result.provenance, args.digits))
    if args.json:
        print(json.dumps({"rows": [dataclasses.asdict(r) for r in rows]}, indent=2))
        return 0
    coeff_width = max(len(r.coefficient) for r in rows)
    for row in rows:
        print(
            f"n = {row.n:2d}  coefficient = {row.coefficient:<{coeff_width}}  "
            f"value = {row.decimal}  [{row.classification}]"
        )
    return 0


def _closed_form_values(freqs: FrequencyList) -> dict[str, Fraction]:
    candidates = {
        "first-dominant": first_dominant_value,
        "first-dominant-correction": first_dominant_correction,
        "three-dominant": three_dominant_value,
        "three-dominant-equal-pair": three_dominant_equal_first_two,
        "three-factor": three_frequency_value,
    }
    values = {}
    for name, fn in candidates.items():
        try:
            values[name] = fn(freqs).coefficient
        except ApplicabilityError:
            continue
    return values


def _cmd_verify(args: argparse.Namespace) -> int:
    freqs = _freqs_from_args(args)
    if freqs.n < 2:
        raise SincprodError("verify needs at least two frequencies (quadrature excludes n = 1)")
    if args.tolerance < 1e-10:
        raise SincprodError(f"--tolerance must be at least 1e-10, got {args.tolerance}")

    exact: dict[str, Fraction] = {}
    for name, strategy in _STRATEGIES.items():
        exact[f"engine:{name}"] = integral_coefficient(freqs, strategy).coefficient
    exact.update(_closed_form_values(freqs))

    print(f"frequencies: {freqs}  (n = {freqs.n})")
    names = list(exact)
    width = max(len(name) for name in names)
    for i, name in enumerate(names, 1):
        print(f"  [{i}] {name:<{width}}  {format_rational(exact[name])}")

    print("pairwise agreement:")
    header = "  ".join(f"[{i}]" for i in range(1, len(names) + 1))
    print(f"  {'':{width + 4}}  {header}")
    for i, row in enumerate(names, 1):
        cells = "  ".join(
            f"{'=' if exact[row] == exact[col] else 'X':^3}" for col in names
        )
        print(f"  [{i}] {row:<{width}}  {cells}")

    mismatches = [
        (x, y)
        for i, x in enumerate(names)
        for y in names[i + 1 :]
        if exact[x] != exact[y]
    ]
    if mismatches:
        print("exact agreement: FAILED", file=sys.stderr)
        for x, y in mismatches:
            print(f"  mismatch: {x} != {y}", file=sys.stderr)
        return 2
    print(f"exact agreement: all {len(names)} values identical")

    report = crosscheck(freqs, args.tolerance)
    quad = report.quadrature
    print(
        f"quadrature: {quad.value!r}  vs exact {report.exact_value!r}\n"
        f"  |difference| = {report.difference:.3e}  <=  bound {quad.total_error_bound:.3e}: "
        f"{'pass' if report.passed else 'FAIL'}"
    )
    if not report.passed:
        print("verification failure: quadrature disagrees with the exact value", file=sys.stderr)
        return 2
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sincprod",
        description="Exact sinc-product integrals as rational multiples of pi.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    integrate = sub.add_parser("integrate", help="compute the exact pi-coefficient")
    integrate.add_argument("freqs", nargs="*", help="frequencies as n, n/d or finite decimals")
    integrate.add_argument("--file", help="read frequencies from a file, one per line")
    integrate.add_argument("--strategy", choices=sorted(_STRATEGIES), help="force an engine strategy")
    integrate.add_argument("--digits", type=int, default=15, help="decimal digits of coefficient*pi")
    integrate.add_argument("--json", action="store_true", help="emit one JSON object")
    integrate.add_argument("--no-verify", action="store_true", help="skip closed-form re-verification")
    integrate.set_defaults(func=_cmd_integrate)

    classify = sub.add_parser("classify", help="dominance classification with exact inequalities")
    classify.add_argument("freqs", nargs="*")
    classify.add_argument("--file", help="read frequencies from a file")
    classify.add_argument("--json", action="store_true")
    classify.set_defaults(func=_cmd_classify)

    table = sub.add_parser("classic-table", help="table for the family 1, 1/3, 1/5, ...")
    table.add_argument("--max-n", type=int, default=8, help="number of rows (1..12)")
    table.add_argument("--digits", type=int, default=15)
    table.add_argument("--json", action="store_true")
    table.set_defaults(func=_cmd_classic_table)

    verify = sub.add_parser("verify", help="cross-validate every route to the value")
    verify.add_argument("freqs", nargs="*")
    verify.add_argument("--file", help="read frequencies from a file")
    verify.add_argument("--tolerance", type=float, default=1e-8, help="quadrature target (>= 1e-10)")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits on its own errors and --help
        return 0 if not exc.code else 1
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except SincprodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
