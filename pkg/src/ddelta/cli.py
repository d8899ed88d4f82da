"""Config-driven batch runner.

Reads a JSON run configuration, executes the selected verification checks
against one sequence instance, and emits a machine-readable report plus a
human-readable summary.  Exit codes: 0 all checks pass, 1 any check fails,
2 any check hit a level bound or resource budget (and none failed), 3 the
input was invalid (bad config, bad polynomial, non-permutable sequence).

Config schema (JSON object):

    {
      "p": 2,
      "vars": ["x", "y"],
      "order": "degrevlex",            # optional
      "sequence": ["x", "y"],
      "checks": [
        {"name": "colon_identities", "params": {"max": 4}},
        "verify_augmentation"           # bare name = default params
      ],
      "budget": {"max_degree": 2000, "max_pairs": 500000},   # optional
      "seed": 0                          # optional
    }

Report schema (schema_version 1): {"schema_version", "instance", "records",
"summary"}; each record is {"check", "instance", "params", "status",
"details", "wall_time"} with status in {"pass", "fail", "bound_exceeded",
"budget_exceeded"}.  Reports are deterministic for a fixed (config, seed)
up to the wall_time fields.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import complexes
from .budget import Budget, BudgetExceeded
from .cech import cech_class, cech_equal, f_fed, f_nat, scalar_action
from .fpmod import cohomology, is_complex
from .groebner import Ideal, NotPermutableRegular, RegSeqContext
from .polyring import PolyringError, RingContext, parse_polynomial, random_polynomial

SCHEMA_VERSION = 1

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_EXCEEDED = 2
EXIT_INVALID = 3


class ConfigError(ValueError):
    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


# ---------------------------------------------------------------------------
# Check catalog


@dataclass(frozen=True)
class ParamSpec:
    kind: str
    default: object
    doc: str


@dataclass(frozen=True)
class CheckSpec:
    name: str
    description: str
    params: dict
    runner: Callable

    def resolve_params(self, supplied: dict, where: str) -> dict:
        out = {}
        for key, spec in self.params.items():
            out[key] = supplied.get(key, spec.default)
        for key in supplied:
            if key not in self.params:
                raise ConfigError(where, f"unknown parameter {key!r} for check {self.name!r}")
        return out


def _check_colon_identities(rs: RegSeqContext, params: dict, rng) -> tuple:
    top = params["max"]
    failures = []
    for b in range(2, top + 1):
        for a in range(1, b):
            bracket_b = rs.bracket_power(b)
            first = bracket_b.colon(rs.f_prod ** (b - a))
            if first != rs.bracket_power(a):
                failures.append(
                    {
                        "identity": "(f^[b] : f^(b-a)) = f^[a]",
                        "a": a,
                        "b": b,
                        "lhs": [str(g) for g in first.groebner_basis()],
                        "rhs": [str(g) for g in rs.bracket_power(a).groebner_basis()],
                    }
                )
            second = bracket_b.colon_ideal(rs.bracket_power(a))
            expected = Ideal(rs.ctx, [rs.f_prod ** (b - a)], rs.budget) + bracket_b
            if second != expected:
                failures.append(
                    {
                        "identity": "(f^[b] : f^[a]) = (f^(b-a)) + f^[b]",
                        "a": a,
                        "b": b,
                        "lhs": [str(g) for g in second.groebner_basis()],
                        "rhs": [str(g) for g in expected.groebner_basis()],
                    }
                )
    status = "pass" if not failures else "fail"
    return status, {"pairs_checked": top * (top - 1) // 2, "failures": failures}


def _default_levels(rs: RegSeqContext) -> list:
    p = rs.ctx.p
    return sorted({1, 2, p + 1, p * p + 1})


def _check_complex_wellformed(rs: RegSeqContext, params: dict, rng) -> tuple:
    levels = params["levels"] or _default_levels(rs)
    failures = []
    for a in levels:
        level = complexes.build_level(rs, a, check=False)
        square_zero = is_complex(level.complex)
        cosimplicial = complexes.semicosimplicial_identities_hold(level)
        if not (square_zero and cosimplicial):
            failures.append(
                {"level": a, "square_zero": square_zero, "cosimplicial": cosimplicial}
            )
    status = "pass" if not failures else "fail"
    return status, {"levels": list(levels), "failures": failures}


def _check_frobenius_stability(rs: RegSeqContext, params: dict, rng) -> tuple:
    levels = params["levels"] or [2]
    failures = []
    for a in levels:
        level = complexes.build_level(rs, a, check=False)
        hi = complexes.build_level(rs, a + 1, check=False)
        fed = complexes.fedder_chain_map(level)
        results = {
            "differentials": fed.commutes_with_differentials(),
            "transitions": fed.commutes_with_transition(hi),
            "embedding": fed.intertwines_embedding(),
        }
        if not all(results.values()):
            failures.append({"level": a, **results})
    status = "pass" if not failures else "fail"
    return status, {"levels": list(levels), "failures": failures}


def _check_vanishing(rs: RegSeqContext, params: dict, rng) -> tuple:
    degree = params["degree"]
    start = params["start_level"]
    if not (0 <= degree < rs.c):
        raise ConfigError("params.degree", f"degree must lie in [0, {rs.c})")
    report = complexes.verify_vanishing(
        rs, degree, start, bound=params["bound"], schedule=params["schedule"]
    )
    details = {
        "degree": degree,
        "start_level": start,
        "bound": report.bound,
        "schedule": report.schedule,
        "generators": [
            {"vector": list(g.generator), "death_level": g.death_level}
            for g in report.generators
        ],
    }
    return report.status, details


def _check_cohomology_zero(rs: RegSeqContext, params: dict, rng) -> tuple:
    degree = params["degree"]
    levels = params["levels"] or [2]
    if not (0 <= degree <= rs.c):
        raise ConfigError("params.degree", f"degree must lie in [0, {rs.c}]")
    failures = []
    for a in levels:
        level = complexes.build_level(rs, a, check=False)
        coh = cohomology(level.complex, degree, rs.budget)
        if not coh.is_zero:
            failures.append(
                {"level": a, "generators": [[str(x) for x in v] for v in coh.generator_lifts]}
            )
    status = "pass" if not failures else "fail"
    return status, {"degree": degree, "levels": list(levels), "failures": failures}


def _check_augmentation(rs: RegSeqContext, params: dict, rng) -> tuple:
    failures = []
    reports = []
    for a in range(1, params["max_level"] + 1):
        rep = complexes.verify_augmentation(rs, a)
        reports.append({"level": a, "colon_equal": rep.colon_equal, "image_equal": rep.image_equal})
        if not rep.passed:
            failures.append({"level": a, "lhs": list(rep.lhs), "rhs": list(rep.rhs)})
    status = "pass" if not failures else "fail"
    return status, {"levels": reports, "failures": failures}


def _check_structure_kernels(rs: RegSeqContext, params: dict, rng) -> tuple:
    failures = []
    reports = []
    for e in params["exponents"]:
        rep = complexes.verify_structure_kernels(rs, e)
        reports.append({"e": e, "q": rep.q, "equal": rep.colon_equal, "k0": list(rep.k0_images)})
        if not rep.passed:
            failures.append({"e": e, "lhs": list(rep.colon_basis), "rhs": list(rep.expected_basis)})
    status = "pass" if not failures else "fail"
    return status, {"exponents": list(params["exponents"]), "reports": reports, "failures": failures}


def _check_codim2(rs: RegSeqContext, params: dict, rng) -> tuple:
    failures = []
    reports = []
    for e in params["exponents"]:
        rep = complexes.verify_codim2_V(rs, e)
        reports.append(
            {
                "e": e,
                "q": rep.q,
                "colon_first": rep.colon_first_ok,
                "colon_second": rep.colon_second_ok,
                "intersection": rep.intersection_ok,
            }
        )
        if not rep.passed:
            failures.append({"e": e, "witness": rep.witness, **reports[-1]})
    status = "pass" if not failures else "fail"
    return status, {"reports": reports, "failures": failures}


def _check_cech_fedder(rs: RegSeqContext, params: dict, rng) -> tuple:
    p = rs.ctx.p
    count = params["random_count"]
    failures = []
    one = rs.ctx.one()
    embedded = cech_class(rs, one, 1)
    # the embedded copy of R/f is fixed by the Fedder action
    for _ in range(count):
        r = random_polynomial(rng, rs.ctx, max_degree=params["max_degree"])
        lhs = f_fed(scalar_action(r, embedded))
        rhs = scalar_action(r.frobenius(), embedded)
        if not cech_equal(lhs, rhs):
            failures.append({"kind": "fixed_image", "r": str(r)})
    # the class at level 2 generates under the Fedder action
    xi = cech_class(rs, one, 2)
    q = 1
    for e in range(1, params["max_semilinear_e"] + 1):
        xi = f_fed(xi)
        q *= p
        if not cech_equal(xi, cech_class(rs, one, q + 1)):
            failures.append({"kind": "cyclic_generation", "e": e})
    # multiplication by f intertwines the Fedder and natural actions
    for _ in range(count):
        r = random_polynomial(rng, rs.ctx, max_degree=params["max_degree"])
        lvl = rng.randint(1, 3)
        zeta = cech_class(rs, r, lvl)
        lhs = scalar_action(rs.f_prod, f_fed(zeta))
        rhs = f_nat(scalar_action(rs.f_prod, zeta))
        if not cech_equal(lhs, rhs):
            failures.append({"kind": "augmentation_action", "xi": zeta.to_dict()})
    status = "pass" if not failures else "fail"
    return status, {"random_count": count, "failures": failures}


CHECKS = {
    spec.name: spec
    for spec in [
        CheckSpec(
            "colon_identities",
            "Exact reduced-basis equality of (f^[b] : f^(b-a)) = f^[a] and "
            "(f^[b] : f^[a]) = (f^(b-a)) + f^[b] for all 1 <= a < b <= max.",
            {"max": ParamSpec("int", 6, "largest bracket exponent b")},
            _check_colon_identities,
        ),
        CheckSpec(
            "complex_wellformed",
            "Each built level has differentials squaring to zero and satisfies "
            "the coface identities d_k d_j = d_j d_(k-1) for j < k, exactly.",
            {"levels": ParamSpec("list[int]", None, "levels to build (default 1, 2, p+1, p^2+1)")},
            _check_complex_wellformed,
        ),
        CheckSpec(
            "frobenius_stability",
            "The semilinear level-a -> level-ap chain map commutes with the "
            "differentials and the level transitions, and matches the twisted "
            "action on R/f^[a] under the summand embeddings, exactly.",
            {"levels": ParamSpec("list[int]", None, "levels to test (default [2])")},
            _check_frobenius_stability,
        ),
        CheckSpec(
            "verify_vanishing",
            "Every degree-i cohomology class of the level-a complex (i < c) dies "
            "under transitions by some level <= bound; reports minimal death levels.",
            {
                "degree": ParamSpec("int", 1, "cohomology degree i < c"),
                "start_level": ParamSpec("int", 2, "level a whose classes are traced"),
                "bound": ParamSpec("int", None, "largest level probed (default a*p^2)"),
                "schedule": ParamSpec("str", "geometric", "probe schedule: geometric or unit"),
            },
            _check_vanishing,
        ),
        CheckSpec(
            "cohomology_zero",
            "The degree-i cohomology of the complex vanishes already at each "
            "listed finite level.",
            {
                "degree": ParamSpec("int", 1, "cohomology degree"),
                "levels": ParamSpec("list[int]", None, "levels to check (default [2])"),
            },
            _check_cohomology_zero,
        ),
        CheckSpec(
            "verify_augmentation",
            "Finite-level exactness at the top degree: (f^[a] : f) equals "
            "sum_j (f^[a] : f_j), and the image of the last differential equals "
            "that sum modulo f^[a], for a = 1..max_level.",
            {"max_level": ParamSpec("int", 5, "largest level checked")},
            _check_augmentation,
        ),
        CheckSpec(
            "verify_structure_kernels",
            "Kernel of the structure morphism of the twisted Frobenius action: "
            "(f^[q+p] : f^(p-1)) = f^[q+1] for q = p^e.",
            {"exponents": ParamSpec("list[int]", [1, 2], "Frobenius exponents e")},
            _check_structure_kernels,
        ),
        CheckSpec(
            "verify_codim2_V",
            "Codimension-2 decomposition at q = p^e: "
            "((fg)^q, f^(q+p), g^(q+1)) : f^(q+1) = (f^(p-1), g^q), the same with "
            "f and g swapped, and (f^(q+1)) n (g^(q+1)) lies in "
            "((fg)^q, f^(q+p), g^(q+p)); the two generators then span a direct sum.",
            {"exponents": ParamSpec("list[int]", [1, 2], "Frobenius exponents e")},
            _check_codim2,
        ),
        CheckSpec(
            "cech_fedder",
            "Class algebra of the twisted action: the embedded copy of R/f is "
            "fixed, the level-2 class generates (image of level p^e+1 at step e), "
            "and multiplication by f intertwines the twisted and natural actions.",
            {
                "random_count": ParamSpec("int", 100, "random classes per identity"),
                "max_semilinear_e": ParamSpec("int", 3, "iterations of the action"),
                "max_degree": ParamSpec("int", 3, "degree bound for random numerators"),
            },
            _check_cech_fedder,
        ),
    ]
}


# ---------------------------------------------------------------------------
# Config


@dataclass
class RunConfig:
    p: int
    vars: tuple
    sequence: tuple  # polynomial source strings
    checks: tuple  # (name, params) pairs
    order: str = "degrevlex"
    budget: Budget = field(default_factory=Budget)
    seed: int = 0

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("config", "top level must be a JSON object")

        def need(key, kind):
            if key not in data:
                raise ConfigError(f"config.{key}", "missing required field")
            value = data[key]
            if not isinstance(value, kind):
                raise ConfigError(f"config.{key}", f"expected {kind.__name__}")
            return value

        p = need("p", int)
        vars_ = need("vars", list)
        sequence = need("sequence", list)
        raw_checks = need("checks", list)
        if not all(isinstance(v, str) for v in vars_):
            raise ConfigError("config.vars", "variable names must be strings")
        if not all(isinstance(s, str) for s in sequence):
            raise ConfigError("config.sequence", "sequence entries must be strings")
        if not sequence:
            raise ConfigError("config.sequence", "sequence must be nonempty")
        if not raw_checks:
            raise ConfigError("config.checks", "at least one check is required")
        order = data.get("order", "degrevlex")
        seed = data.get("seed", 0)
        if not isinstance(seed, int):
            raise ConfigError("config.seed", "seed must be an integer")
        budget_data = data.get("budget", {})
        if not isinstance(budget_data, dict):
            raise ConfigError("config.budget", "expected an object")
        budget = Budget(
            max_degree=budget_data.get("max_degree", Budget.max_degree),
            max_pairs=budget_data.get("max_pairs", Budget.max_pairs),
        )
        checks = []
        for idx, entry in enumerate(raw_checks):
            where = f"config.checks[{idx}]"
            if isinstance(entry, str):
                name, params = entry, {}
            elif isinstance(entry, dict):
                name = entry.get("name")
                params = entry.get("params", {})
                if not isinstance(name, str):
                    raise ConfigError(where, "check name must be a string")
                if not isinstance(params, dict):
                    raise ConfigError(f"{where}.params", "expected an object")
            else:
                raise ConfigError(where, "check entries are names or objects")
            if name not in CHECKS:
                raise ConfigError(where, f"unknown check {name!r}")
            params = CHECKS[name].resolve_params(params, f"{where}.params")
            checks.append((name, params))
        unknown = set(data) - {"p", "vars", "order", "sequence", "checks", "budget", "seed"}
        if unknown:
            raise ConfigError(f"config.{sorted(unknown)[0]}", "unknown field")
        return cls(p, tuple(vars_), tuple(sequence), tuple(checks), order, budget, seed)

    def instance_key(self) -> str:
        seq = "; ".join(self.sequence)
        return f"F_{self.p}[{','.join(self.vars)}] / ({seq})"


def _apply_env_budget(budget: Budget) -> Budget:
    md = os.environ.get("DDELTA_MAX_DEGREE")
    mp = os.environ.get("DDELTA_MAX_PAIRS")
    if md is None and mp is None:
        return budget
    return Budget(
        max_degree=int(md) if md is not None else budget.max_degree,
        max_pairs=int(mp) if mp is not None else budget.max_pairs,
    )


def build_instance(config: RunConfig) -> RegSeqContext:
    """Parse the sequence in the declared ring and certify it; raises
    ConfigError or NotPermutableRegular on invalid input."""
    try:
        ctx = RingContext(config.p, config.vars, config.order)
    except ValueError as exc:
        raise ConfigError("config", str(exc)) from exc
    polys = []
    for i, text in enumerate(config.sequence):
        try:
            polys.append(parse_polynomial(text, ctx))
        except PolyringError as exc:
            raise ConfigError(f"config.sequence[{i}]", str(exc)) from exc
    budget = _apply_env_budget(config.budget)
    rs = RegSeqContext(ctx, polys, budget)
    for name, params in config.checks:
        if name == "verify_codim2_V" and rs.c != 2:
            raise ConfigError("config.checks", "verify_codim2_V requires a sequence of length 2")
    return rs


# ---------------------------------------------------------------------------
# Execution


def _run_one(rs: RegSeqContext, instance: str, index: int, name: str, params: dict, seed: int) -> dict:
    rng = random.Random(f"{seed}:{index}:{name}")
    start = time.perf_counter()
    try:
        status, details = CHECKS[name].runner(rs, params, rng)
    except BudgetExceeded as exc:
        status, details = "budget_exceeded", {"reason": str(exc)}
    wall = time.perf_counter() - start
    return {
        "check": name,
        "instance": instance,
        "params": params,
        "status": status,
        "details": details,
        "wall_time": round(wall, 6),
    }


def run_config(config: RunConfig, jobs: int = 1, dot_dir: Optional[str] = None) -> dict:
    """Execute all requested checks and assemble the report."""
    rs = build_instance(config)
    instance = config.instance_key()
    tasks = list(enumerate(config.checks))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(
                pool.map(
                    lambda t: _run_one(rs, instance, t[0], t[1][0], t[1][1], config.seed), tasks
                )
            )
    else:
        records = [_run_one(rs, instance, i, name, params, config.seed) for i, (name, params) in tasks]
    records.sort(key=lambda r: (r["instance"], r["check"], json.dumps(r["params"], sort_keys=True)))
    summary = {"pass": 0, "fail": 0, "bound_exceeded": 0, "budget_exceeded": 0}
    for rec in records:
        summary[rec["status"]] += 1
    if dot_dir is not None:
        os.makedirs(dot_dir, exist_ok=True)
        levels = sorted(
            {
                a
                for name, params in config.checks
                if name == "complex_wellformed"
                for a in (params["levels"] or _default_levels(rs))
            }
        ) or [2]
        for a in levels:
            level = complexes.build_level(rs, a, check=False)
            path = os.path.join(dot_dir, f"level_{a}.dot")
            with open(path, "w") as fh:
                fh.write(complexes.level_dot(level) + "\n")
    return {
        "schema_version": SCHEMA_VERSION,
        "instance": instance,
        "seed": config.seed,
        "records": records,
        "summary": summary,
    }


def exit_code_for(report: dict) -> int:
    summary = report["summary"]
    if summary["fail"]:
        return EXIT_FAIL
    if summary["bound_exceeded"] or summary["budget_exceeded"]:
        return EXIT_EXCEEDED
    return EXIT_PASS


def list_checks() -> str:
    """Stable catalog of checks, their parameters, and verified statements."""
    lines = []
    for name in sorted(CHECKS):
        spec = CHECKS[name]
        lines.append(name)
        lines.append(f"  {spec.description}")
        for pname, pspec in spec.params.items():
            lines.append(f"  - {pname} ({pspec.kind}, default {pspec.default!r}): {pspec.doc}")
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ddelta",
        description="Exact finite-level verification of Frobenius-twisted complexes over F_p[x_1..x_n].",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="run the checks from a JSON config")
    run_p.add_argument("config", help="path to the JSON run configuration")
    run_p.add_argument("--jobs", type=int, default=1, help="worker threads")
    run_p.add_argument("--report", help="write the JSON report to this path")
    run_p.add_argument("--dot", help="write DOT diagrams of built levels into this directory")
    sub.add_parser("list-checks", help="print the check catalog")
    args = parser.parse_args(argv)

    if args.command == "list-checks":
        sys.stdout.write(list_checks())
        return EXIT_PASS

    try:
        with open(args.config) as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except json.JSONDecodeError as exc:
        print(f"error: config is not valid JSON: line {exc.lineno} column {exc.colno}", file=sys.stderr)
        return EXIT_INVALID

    try:
        config = RunConfig.from_dict(data)
        report = run_config(config, jobs=args.jobs, dot_dir=args.dot)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        # the budget ran out while certifying the instance itself
        print(f"error: {exc}", file=sys.stderr)
        if args.report:
            with open(args.report, "w") as fh:
                json.dump(
                    {"schema_version": SCHEMA_VERSION, "error": {"kind": "budget_exceeded", "reason": str(exc)}},
                    fh,
                    indent=2,
                    sort_keys=True,
                )
                fh.write("\n")
        return EXIT_EXCEEDED
    except NotPermutableRegular as exc:
        cert = exc.certificate
        print(f"error: {exc}", file=sys.stderr)
        failure_report = {
            "schema_version": SCHEMA_VERSION,
            "error": {
                "kind": "not_permutable_regular",
                "failures": [
                    {"T": sorted(T), "j": j} for (T, j) in cert.failures
                ],
                "improper": cert.improper,
                "unit_or_zero": list(cert.unit_or_zero),
            },
        }
        if args.report:
            with open(args.report, "w") as fh:
                json.dump(failure_report, fh, indent=2, sort_keys=True)
                fh.write("\n")
        return EXIT_INVALID

    text = json.dumps(report, indent=2, sort_keys=True)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    summary = report["summary"]
    for rec in report["records"]:
        print(f"[{rec['status']:>15}] {rec['check']} {json.dumps(rec['params'], sort_keys=True)}")
    print(
        f"{summary['pass']} pass, {summary['fail']} fail, "
        f"{summary['bound_exceeded']} bound exceeded, {summary['budget_exceeded']} budget exceeded"
    )
    return exit_code_for(report)


if __name__ == "__main__":
    sys.exit(main())
