"""Certification pipeline and command-line interface.

Runs the selected verifications for one Lie type (or a suite of types) and
emits a deterministic report: same inputs and tool version give the same
JSON up to the timing fields.  Exit status is 0 exactly when everything
selected passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import __version__
from .commalg import (
    Poly,
    build_ideal_J,
    build_ideal_Jcheck,
    hilbert_series_of_quotient,
    is_regular_sequence,
    zero_set_is_origin,
    zero_set_via_minors,
    _poly_mul,
    HilbertSeries,
)
from .billey import billey_localization
from .errors import IntegrityError, ResourceCapError
from .peterson import PetersonModel
from .report import CertificationReport, CheckRecord
from .roots import cartan_matrix, parse_lie_type
from .weyl import WeylGroup, word_to_str

CHECK_ORDER = (
    "billey_welldef",
    "quadratic",
    "monk",
    "giambelli",
    "basis",
    "graded_dims",
    "hilbert",
    "regular_sequence",
    "zero_set",
)

DEFAULT_SUITE = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2")

WORD_CAP_ENV = "PETCOH_REDUCED_WORD_CAP"

# exhaustive well-definedness sweeps get shorter as the group grows
_WELLDEF_LENGTH_BY_RANK = {1: 6, 2: 6, 3: 5, 4: 4}


@dataclass(frozen=True)
class RunConfig:
    lie_type: str
    checks: tuple[str, ...] = CHECK_ORDER
    cutoff_degree: int = 12
    output_format: str = "text"
    reduced_word_cap: int = 16

    def __post_init__(self):
        if self.cutoff_degree < 0 or self.cutoff_degree % 2:
            raise ValueError("cutoff_degree must be even and non-negative")
        unknown = set(self.checks) - set(CHECK_ORDER)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be 'text' or 'json'")

    def to_dict(self) -> dict:
        return {
            "lie_type": self.lie_type,
            "checks": list(self.checks),
            "cutoff_degree": self.cutoff_degree,
            "output_format": self.output_format,
            "reduced_word_cap": self.reduced_word_cap,
        }


def expected_equivariant_series(rank: int) -> HilbertSeries:
    """(1 + s^2)^rank / (1 - s^2)."""
    num = [1]
    for _ in range(rank):
        num = _poly_mul(num, [1, 0, 1])
    return HilbertSeries.from_fraction(num, [1, 0, -1])


def expected_ordinary_series(rank: int) -> HilbertSeries:
    """(1 + s^2)^rank."""
    num = [1]
    for _ in range(rank):
        num = _poly_mul(num, [1, 0, 1])
    return HilbertSeries.from_fraction(num, [1])


# ---------------------------------------------------------------------------
# individual checks

def _check_billey_welldef(model: PetersonModel, config: RunConfig) -> CheckRecord:
    """Localization is witness-word independent, vanishes exactly off the
    Bruhat interval, and is homogeneous; swept over a bounded length range."""
    group = model.group
    max_len = _WELLDEF_LENGTH_BY_RANK.get(model.rank, 3)
    elements = group.elements_up_to_length(max_len)
    comparisons = 0
    failures = []
    for w in elements:
        baseline = {}
        for v in elements:
            if v.length > w.length:
                continue
            value = billey_localization(group, v, w)
            baseline[v.action] = value
            if bool(value) != group.bruhat_leq(v, w):
                failures.append({"kind": "vanishing",
                                 "v": word_to_str(v.witness_word),
                                 "w": word_to_str(w.witness_word)})
            if value and not value.is_homogeneous_of_degree(v.length):
                failures.append({"kind": "degree",
                                 "v": word_to_str(v.witness_word),
                                 "w": word_to_str(w.witness_word)})
        for word in group.enumerate_reduced_words(w):
            w_alt = group.from_word(word)
            for v in elements:
                if v.length > w.length:
                    continue
                comparisons += 1
                if billey_localization(group, v, w_alt) != baseline[v.action]:
                    failures.append({"kind": "witness_dependence",
                                     "v": word_to_str(v.witness_word),
                                     "w_word": word_to_str(word)})
    return CheckRecord(
        check="billey_welldef",
        lie_type=model.type_name(),
        passed=not failures,
        parameters={"max_length": max_len, "elements": len(elements)},
        witnesses={"comparisons": comparisons, "failures": failures[:20]},
    )


def _check_quadratic(model: PetersonModel, config: RunConfig) -> CheckRecord:
    return model.verify_quadratic_relations()


def _check_monk(model: PetersonModel, config: RunConfig) -> CheckRecord:
    """Full Monk verification over every (i, K), plus the Cartan-integer
    cross-check on covers of singletons computed via the quotient formula."""
    cartan = model.cartan
    failures = []
    checked = 0
    for i in cartan.nodes():
        for K in model.subsets:
            rec = model.verify_monk(i, K)
            checked += 1
            if not rec.passed:
                failures.append({"i": i, "K": list(K)})
    cross = []
    cross_ok = True
    for i in cartan.nodes():
        for j in cartan.nodes():
            if i == j:
                continue
            c = model.monk_coefficient(i, (i,), tuple(sorted((i, j))))
            expected = -cartan.a(i, j)
            cross.append({"i": i, "j": j, "coefficient": c,
                          "expected": expected})
            if c != expected:
                cross_ok = False
    return CheckRecord(
        check="monk",
        lie_type=model.type_name(),
        passed=not failures and cross_ok,
        parameters={"identities_checked": checked},
        witnesses={
            "failures": failures,
            "cartan_cross_check": cross,
            "cartan_cross_check_ok": cross_ok,
        },
    )


def _check_giambelli(model: PetersonModel, config: RunConfig) -> CheckRecord:
    """Giambelli on every nonempty connected K, and the product rule on
    every disjoint connected pair with disconnected union."""
    cartan = model.cartan
    coefficients = []
    failures = []
    for K in model.subsets:
        if not K or not cartan.is_connected(K):
            continue
        rec = model.verify_giambelli(K)
        coefficients.append({"K": list(K),
                             "coefficient": rec.witnesses["coefficient"],
                             "reduced_words": rec.witnesses["reduced_words"]})
        if not rec.passed:
            failures.append({"kind": "giambelli", "K": list(K)})
    pairs = 0
    for J in model.subsets:
        if not J or not cartan.is_connected(J):
            continue
        for K in model.subsets:
            if not K or set(J) & set(K) or min(K) < min(J):
                continue
            if not cartan.is_connected(K):
                continue
            if cartan.is_connected(tuple(sorted(J + K))):
                continue
            pairs += 1
            rec = model.verify_disconnected_product(J, K)
            if not rec.passed:
                failures.append({"kind": "disconnected_product",
                                 "J": list(J), "K": list(K)})
    return CheckRecord(
        check="giambelli",
        lie_type=model.type_name(),
        passed=not failures,
        parameters={"connected_subsets": len(coefficients),
                    "disconnected_pairs": pairs},
        witnesses={"coefficients": coefficients, "failures": failures},
    )


def _check_basis(model: PetersonModel, config: RunConfig) -> CheckRecord:
    return model.verify_basis_triangular()


def _check_graded_dims(model: PetersonModel, config: RunConfig) -> CheckRecord:
    return model.verify_graded_dimensions(config.cutoff_degree)


def _check_hilbert(model: PetersonModel, config: RunConfig) -> CheckRecord:
    """Quotient Hilbert series match the closed forms; one series is
    recomputed under a second monomial order as an order-independence spot
    check."""
    cartan = model.cartan
    n = cartan.rank
    ideal_full = build_ideal_J(cartan)
    ideal_reduced = build_ideal_Jcheck(cartan)
    series_full = hilbert_series_of_quotient(ideal_full)
    series_reduced = hilbert_series_of_quotient(ideal_reduced)
    ok_full = series_full == expected_equivariant_series(n)
    ok_reduced = series_reduced == expected_ordinary_series(n)
    ok_order = hilbert_series_of_quotient(ideal_reduced, "grlex") == series_reduced
    return CheckRecord(
        check="hilbert",
        lie_type=model.type_name(),
        passed=ok_full and ok_reduced and ok_order,
        parameters={"rank": n},
        witnesses={
            "equivariant_series": series_full.to_json(),
            "equivariant_expected": expected_equivariant_series(n).to_json(),
            "ordinary_series": series_reduced.to_json(),
            "ordinary_expected": expected_ordinary_series(n).to_json(),
            "order_independent": ok_order,
        },
    )


def _check_regular_sequence(model: PetersonModel, config: RunConfig) -> CheckRecord:
    cartan = model.cartan
    n = cartan.rank
    ideal = build_ideal_J(cartan)
    thetas = list(ideal.generators)
    t_var = Poly.variable(n + 1, n)
    ok_full, cert_full = is_regular_sequence(ideal.var_names, thetas + [t_var])
    ok_prefix, cert_prefix = is_regular_sequence(ideal.var_names, thetas)
    return CheckRecord(
        check="regular_sequence",
        lie_type=model.type_name(),
        passed=ok_full and ok_prefix,
        parameters={"sequence_length": n + 1},
        witnesses={"with_t": cert_full, "prefix": cert_prefix},
    )


def _check_zero_set(model: PetersonModel, config: RunConfig) -> CheckRecord:
    cartan = model.cartan
    ideal = build_ideal_Jcheck(cartan)
    via_groebner = zero_set_is_origin(ideal)
    via_minors = zero_set_via_minors(cartan)
    return CheckRecord(
        check="zero_set",
        lie_type=model.type_name(),
        passed=via_groebner and via_minors and (via_groebner == via_minors),
        parameters={"rank": cartan.rank},
        witnesses={"groebner_route": via_groebner, "minor_route": via_minors},
    )


_CHECK_FUNCTIONS = {
    "billey_welldef": _check_billey_welldef,
    "quadratic": _check_quadratic,
    "monk": _check_monk,
    "giambelli": _check_giambelli,
    "basis": _check_basis,
    "graded_dims": _check_graded_dims,
    "hilbert": _check_hilbert,
    "regular_sequence": _check_regular_sequence,
    "zero_set": _check_zero_set,
}


def run_certification(config: RunConfig) -> CertificationReport:
    """Execute the selected checks in dependency order.

    Failures never short-circuit the run; resource-cap overruns become
    explicit skipped entries rather than partial answers.
    """
    types = parse_lie_type(config.lie_type)
    cartan = cartan_matrix(types)
    group = WeylGroup(cartan, reduced_word_cap=config.reduced_word_cap)
    model = PetersonModel(cartan, group)
    records = []
    timing = {}
    start = time.perf_counter()
    for name in CHECK_ORDER:
        if name not in config.checks:
            continue
        t0 = time.perf_counter()
        try:
            record = _CHECK_FUNCTIONS[name](model, config)
        except ResourceCapError as exc:
            record = CheckRecord(
                check=name,
                lie_type=model.type_name(),
                passed=None,
                skipped=True,
                witnesses={"skip_reason": str(exc)},
            )
        except IntegrityError as exc:
            record = CheckRecord(
                check=name,
                lie_type=model.type_name(),
                passed=False,
                witnesses={"integrity_error": str(exc)},
            )
        timing[name] = time.perf_counter() - t0
        records.append(record)
    timing["total"] = time.perf_counter() - start
    return CertificationReport(
        lie_type=model.type_name(),
        config=config.to_dict(),
        records=records,
        timing=timing,
        tool_version=__version__,
    )


def _run_one_suite_entry(type_name: str, template: RunConfig) -> dict:
    try:
        config = RunConfig(
            lie_type=type_name,
            checks=template.checks,
            cutoff_degree=template.cutoff_degree,
            output_format=template.output_format,
            reduced_word_cap=template.reduced_word_cap,
        )
        return run_certification(config).to_dict()
    except Exception as exc:  # isolate per-type blowups
        return {"lie_type": type_name, "error": str(exc)}


def run_suite(types, template: RunConfig | None = None, workers: int = 1) -> dict:
    """Per-type certifications plus an aggregate pass flag.

    A type that fails to run at all is isolated as an error entry; it does
    not abort the rest of the suite.  Per-type runs share no state, so they
    may execute concurrently; report assembly stays in input order either
    way.
    """
    template = template or RunConfig(lie_type="A1")
    types = list(types)
    start = time.perf_counter()
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(
                lambda name: _run_one_suite_entry(name, template), types))
    else:
        entries = [_run_one_suite_entry(name, template) for name in types]
    overall = all(
        entry.get("overall_pass", False) and "error" not in entry
        for entry in entries
    )
    return {
        "schema_version": 1,
        "tool_version": __version__,
        "types": entries,
        "overall_pass": overall,
        "timing": {"total": time.perf_counter() - start},
    }


def render_suite_text(aggregate: dict) -> str:
    lines = []
    for entry in aggregate["types"]:
        if "error" in entry:
            lines.append(f"== certification: {entry['lie_type']} ==")
            lines.append(f"[ERROR] {entry['error']}")
            continue
        lines.append(f"== certification: {entry['lie_type']} ==")
        for check in entry["checks"]:
            status = "SKIP" if check["skipped"] else (
                "PASS" if check["pass"] else "FAIL")
            lines.append(f"[{status}] {check['check']}")
        lines.append(f"overall: {'PASS' if entry['overall_pass'] else 'FAIL'}")
    lines.append(f"suite overall: "
                 f"{'PASS' if aggregate['overall_pass'] else 'FAIL'}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument parsing

def _add_common_options(parser: argparse.ArgumentParser):
    parser.add_argument("--checks", default="all",
                        help="comma-separated subset of: " + ",".join(CHECK_ORDER))
    parser.add_argument("--format", dest="output_format", default="text",
                        choices=("text", "json"))
    parser.add_argument("--out", default=None, help="write the report to a file")
    parser.add_argument("--cutoff-degree", type=int, default=12,
                        help="even degree bound for the graded-dimension check")
    parser.add_argument("--word-cap", type=int, default=None,
                        help=f"reduced-word enumeration cap "
                             f"(default 16, env {WORD_CAP_ENV})")


def _parse_checks(text: str) -> tuple[str, ...]:
    text = text.strip()
    if text == "all":
        return CHECK_ORDER
    if not text:
        return ()
    names = tuple(p.strip() for p in text.split(","))
    unknown = set(names) - set(CHECK_ORDER)
    if unknown:
        raise SystemExit(f"unknown checks: {sorted(unknown)}")
    return names


def _resolve_word_cap(cli_value) -> int:
    if cli_value is not None:
        return cli_value
    env = os.environ.get(WORD_CAP_ENV)
    if env:
        return int(env)
    return 16


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petcoh",
        description="Certify the two presentations of the equivariant "
                    "cohomology of a Peterson variety against each other.")
    sub = parser.add_subparsers(dest="command", required=True)

    certify = sub.add_parser("certify", help="run the checks for one Lie type")
    certify.add_argument("--type", required=True, dest="lie_type",
                         help="Lie type, e.g. G2 or A2+A1")
    _add_common_options(certify)

    suite = sub.add_parser("suite", help="run the checks for several types")
    suite.add_argument("--types", default=",".join(DEFAULT_SUITE),
                       help="comma-separated Lie types "
                            f"(default: {','.join(DEFAULT_SUITE)})")
    suite.add_argument("--workers", type=int, default=1,
                       help="run types concurrently with this many workers")
    _add_common_options(suite)
    return parser


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    checks = _parse_checks(args.checks)
    word_cap = _resolve_word_cap(args.word_cap)

    if args.command == "certify":
        config = RunConfig(
            lie_type=args.lie_type,
            checks=checks,
            cutoff_degree=args.cutoff_degree,
            output_format=args.output_format,
            reduced_word_cap=word_cap,
        )
        report = run_certification(config)
        if args.output_format == "json":
            _emit(report.to_json(), args.out)
        else:
            _emit(report.to_text(), args.out)
        return 0 if report.overall_pass else 1

    template = RunConfig(
        lie_type="A1",
        checks=checks,
        cutoff_degree=args.cutoff_degree,
        output_format=args.output_format,
        reduced_word_cap=word_cap,
    )
    types = [p.strip() for p in args.types.split(",") if p.strip()]
    aggregate = run_suite(types, template, workers=args.workers)
    if args.output_format == "json":
        _emit(json.dumps(aggregate, indent=2, sort_keys=True), args.out)
    else:
        _emit(render_suite_text(aggregate), args.out)
    return 0 if aggregate["overall_pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
