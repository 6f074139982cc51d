"""Command-line runner for the verification scenarios.

Examples::

    enhanced-brauer --form orthogonal --n 4 --r 2 --checks dims,levi
    enhanced-brauer --suite default --out report.json
    enhanced-brauer --suite extended --csv dims.csv
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .algebra import check_dimensions, dimension_table, span_enhanced, verify_multiplication_formula
from .duality import (
    parabolic_hypothesis, proper_subsets, sanity_gl, verify_annihilation, verify_brauer, verify_filtration,
    verify_levi, verify_parabolic, verify_restricted,
)
from .forms import ORTHOGONAL, SYMPLECTIC, GroupSpec, make_group
from .identities import verify_identities
from .reports import Report, scenario_name

ALL_CHECKS = ("dims", "brauer", "identities", "mulformula", "sanity-gl", "restricted", "levi", "parabolic",
              "filtration", "annihilation")
# checks that solve for a commutant on the enhanced space
ENHANCED_COMMUTANT_CHECKS = {"restricted", "levi", "parabolic", "filtration"}
# span and dimension checks that stay cheap at degree 3
EXTENDED_CHECKS = ("dims", "brauer", "identities", "mulformula")


@dataclass(frozen=True)
class ScenarioConfig:
    form: str
    n: int
    r: int
    checks: tuple[str, ...]
    seed: int = 0
    stress: bool = False
    timings: bool = False

    @property
    def name(self) -> str:
        return scenario_name(self.form, self.n, self.r)

    def to_dict(self) -> dict:
        return {"form": self.form, "n": self.n, "r": self.r, "checks": list(self.checks), "seed": self.seed,
                "stress": self.stress}


def default_suite(checks: Sequence[str] | None = None, seed: int = 0, stress: bool = False,
                  timings: bool = False) -> list[ScenarioConfig]:
    checks = tuple(checks or ALL_CHECKS)
    return [ScenarioConfig(ORTHOGONAL, 4, 2, checks, seed, stress, timings),
            ScenarioConfig(SYMPLECTIC, 6, 2, checks, seed, stress, timings)]


def extended_suite(checks: Sequence[str] | None = None, seed: int = 0, stress: bool = False,
                   timings: bool = False) -> list[ScenarioConfig]:
    extra = tuple(c for c in (checks or ALL_CHECKS) if c in EXTENDED_CHECKS or stress)
    return default_suite(checks, seed, stress, timings) + [ScenarioConfig(ORTHOGONAL, 6, 3, extra, seed, stress, timings)]


def _annihilation_all(group: GroupSpec, r: int, timings: bool) -> Report:
    start = time.perf_counter()
    rep = Report("annihilation", scenario_name(group.kind, group.n, r), group.epsilon, group.n, r)
    results = [verify_annihilation(group, r, J) for J in proper_subsets(r)]
    for J, sub in zip(proper_subsets(r), results):
        rep.per_level.append({"J": sorted(J), "solutions": sub.sides[0]["dim"],
                              "nonzero_rho_J": sub.details["solutions_with_nonzero_rho_J"], "passed": sub.passed})
    rep.details = {"probes": "grid", "hypothesis": parabolic_hypothesis(group, r)}
    if parabolic_hypothesis(group, r):
        rep.passed = all(sub.passed for sub in results)
    else:
        rep.notes.append("hypothesis not met; reported only")
    if timings:
        rep.elapsed_ms = round((time.perf_counter() - start) * 1000, 1)
    return rep


def _skipped(check: str, cfg: ScenarioConfig, why: str) -> Report:
    rep = Report(check, cfg.name, 1 if cfg.form == ORTHOGONAL else -1, cfg.n, cfg.r)
    rep.notes.append(why)
    return rep


def run_check(check: str, cfg: ScenarioConfig, group: GroupSpec) -> Report:
    r, t = cfg.r, cfg.timings
    if check in ENHANCED_COMMUTANT_CHECKS and r >= 3 and not cfg.stress:
        return _skipped(check, cfg, "enhanced commutant at degree >= 3 needs --stress")
    start = time.perf_counter()
    if check == "dims":
        rep = check_dimensions(group, r)
    elif check == "brauer":
        rep = verify_brauer(group, r, seed=cfg.seed, timings=t)
    elif check == "identities":
        rep = verify_identities(group, r, seed=cfg.seed)
    elif check == "mulformula":
        rep = verify_multiplication_formula(group, r, samples=None if r <= 2 else 120, seed=cfg.seed)
    elif check == "sanity-gl":
        rep = sanity_gl(group.n, r, timings=t)
    elif check == "restricted":
        rep = verify_restricted(group, r, seed=cfg.seed, timings=t)
    elif check == "levi":
        rep = verify_levi(group, r, seed=cfg.seed, timings=t)
    elif check == "parabolic":
        rep = verify_parabolic(group, r, seed=cfg.seed, timings=t)
    elif check == "filtration":
        rep = verify_filtration(group, r, timings=t)
    elif check == "annihilation":
        rep = _annihilation_all(group, r, t)
    else:
        raise ValueError(f"unknown check {check!r}")
    if t and rep.elapsed_ms is None:
        rep.elapsed_ms = round((time.perf_counter() - start) * 1000, 1)
    return rep


def run_scenario(cfg: ScenarioConfig) -> list[Report]:
    group = make_group(cfg.form, cfg.n)
    return [run_check(c, cfg, group) for c in ALL_CHECKS if c in cfg.checks]


def build_document(configs: Sequence[ScenarioConfig], reports: Sequence[Report]) -> dict:
    asserted = [r for r in reports if r.asserted]
    return {
        "tool": "enhanced-brauer",
        "version": __version__,
        "scenarios": [c.to_dict() for c in configs],
        "reports": [r.to_dict() for r in reports],
        "asserted": len(asserted),
        "failed": sum(not r.passed for r in asserted),
        "passed": all(r.passed for r in asserted),
    }


def dimension_rows(configs: Sequence[ScenarioConfig]) -> list[dict]:
    rows = []
    for cfg in configs:
        group = make_group(cfg.form, cfg.n)
        table = dimension_table(group, cfg.r, span_enhanced(group, cfg.r))
        for row in table["levels"]:
            rows.append({"form": cfg.form, "epsilon": table["epsilon"], "n": cfg.n, "r": cfg.r, "l": row["l"],
                         "dim": row["dim"], "expected": row["expected"], "match": row["match"]})
        rows.append({"form": cfg.form, "epsilon": table["epsilon"], "n": cfg.n, "r": cfg.r, "l": "total",
                     "dim": table["total"], "expected": table["expected_total"],
                     "match": None if table["expected_total"] is None else table["total"] == table["expected_total"]})
    return rows


def write_csv(path: str, rows: list[dict]):
    fields = ["form", "epsilon", "n", "r", "l", "dim", "expected", "match"]
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: ("" if row[k] is None else row[k]) for k in fields})


def parse_checks(text: str, parser: argparse.ArgumentParser) -> tuple[str, ...]:
    items = tuple(c.strip() for c in text.split(",") if c.strip())
    if not items:
        parser.error("--checks must name at least one check")
    unknown = [c for c in items if c not in ALL_CHECKS]
    if unknown:
        parser.error(f"unknown checks: {', '.join(unknown)} (choose from {', '.join(ALL_CHECKS)})")
    return items


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="enhanced-brauer",
                                description="Exact verification of enhanced Brauer algebra dualities.")
    p.add_argument("--form", choices=[ORTHOGONAL, SYMPLECTIC], help="bilinear form of a single scenario")
    p.add_argument("--n", type=int, help="dimension of V")
    p.add_argument("--r", type=int, help="tensor degree")
    p.add_argument("--checks", help="comma-separated subset of: " + ", ".join(ALL_CHECKS))
    p.add_argument("--suite", choices=["default", "extended"], help="run a predefined scenario set")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")
    p.add_argument("--out", default="-", help="JSON report path ('-' for stdout)")
    p.add_argument("--csv", help="also write the enhanced dimension table as CSV")
    p.add_argument("--stress", action="store_true", help="allow enhanced commutants at degree >= 3")
    p.add_argument("--timings", action="store_true", help="record elapsed_ms (makes reports run-dependent)")
    p.add_argument("--quiet", action="store_true", help="no per-check summary on stderr")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def configs_from_args(args, parser) -> list[ScenarioConfig]:
    checks = parse_checks(args.checks, parser) if args.checks else None
    single = [args.form, args.n, args.r]
    if any(x is not None for x in single):
        if args.suite:
            parser.error("--suite cannot be combined with --form/--n/--r")
        if any(x is None for x in single):
            parser.error("a single scenario needs --form, --n and --r")
        if args.n < 1 or args.r < 1:
            parser.error("--n and --r must be positive")
        if args.form == SYMPLECTIC and args.n % 2:
            parser.error(f"symplectic forms need even n, got {args.n}")
        return [ScenarioConfig(args.form, args.n, args.r, checks or ALL_CHECKS, args.seed, args.stress, args.timings)]
    if args.suite == "extended":
        return extended_suite(checks, args.seed, args.stress, args.timings)
    return default_suite(checks, args.seed, args.stress, args.timings)


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    configs = configs_from_args(args, parser)
    reports: list[Report] = []
    for cfg in configs:
        for rep in run_scenario(cfg):
            reports.append(rep)
            if not args.quiet:
                print(rep.summary(), file=sys.stderr)
    doc = build_document(configs, reports)
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.csv:
        write_csv(args.csv, dimension_rows(configs))
    return 0 if doc["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
