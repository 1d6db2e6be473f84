"""Batch command line for reproducible experiments.

Subcommands: construct | solve | oracle | lowerbound | bound | verify |
atlas.  All results go to standard output in plain text or CSV; progress
chatter goes to standard error, so stdout stays machine-readable.  A fixed
default seed makes bare invocations reproducible, and output is
byte-identical across --threads settings (enumeration work is merged
deterministically).

The environment variable RAMSEY_BUDGET overrides the oracle enumeration
budget (number of enumerated instances per cell).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path

from . import bounds as bounds_mod
from . import constructions as cons
from .heuristics import mono_clique_trials, transitive_trials
from .model import (
    BicoloredGraph,
    parse_instance,
    serialize_instance,
)
from .solvers import (
    DEFAULT_ORACLE_BUDGET,
    BudgetExceeded,
    max_mono_clique,
    max_transitive_set,
    oracle_budget_estimate,
    oracle_cell_slice,
)

DEFAULT_SEED = 0xB1C0

__all__ = ["cli_main", "main", "RunConfig", "DEFAULT_SEED"]


@dataclass
class RunConfig:
    """One parsed invocation; every handler reads its knobs from here."""

    subcommand: str
    seed: int = DEFAULT_SEED
    trials: int = 100
    threads: int = 1
    budget: int = DEFAULT_ORACLE_BUDGET
    out_dir: Path = Path(".")
    instances: list[Path] = field(default_factory=list)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        explicit = getattr(args, "budget", None)
        env = os.environ.get("RAMSEY_BUDGET")
        budget = (
            explicit
            if explicit is not None
            else int(env) if env else DEFAULT_ORACLE_BUDGET
        )
        paths = getattr(args, "instances", None) or getattr(args, "certificates", [])
        return cls(
            subcommand=args.subcommand,
            seed=getattr(args, "seed", DEFAULT_SEED),
            trials=getattr(args, "trials", 100),
            threads=getattr(args, "threads", 1),
            budget=budget,
            out_dir=getattr(args, "out", Path(".")),
            instances=[Path(p) for p in paths],
        )


# ---------------------------------------------------------------------------
# oracle cells, optionally fanned out over placements


def _oracle_cell(n: int, m: int, family: str, budget: int, threads: int) -> tuple[int, str]:
    estimate = oracle_budget_estimate(n, m)
    if n * (n - 1) // 2 > 15 or estimate > budget:
        raise BudgetExceeded(
            f"cell (n={n}, m={m}) needs {estimate} enumerated instances over "
            f"C({n},2)={n * (n - 1) // 2} pair slots; cap is C(n,2) <= 15 and "
            f"budget {budget}",
            estimate=estimate,
        )
    placements = comb(n * (n - 1) // 2, m)
    if threads <= 1 or placements < 4 * threads:
        value, _, text = oracle_cell_slice(n, m, family, 0, placements)
        return value, text
    chunk = -(-placements // (threads * 4))
    jobs = [
        (n, m, family, start, min(start + chunk, placements))
        for start in range(0, placements, chunk)
    ]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_slice_worker, jobs))
    best = min(results, key=lambda r: (r[0], r[1]))
    return best[0], best[2]


def _slice_worker(job: tuple[int, int, str, int, int]) -> tuple[int, int, str]:
    return oracle_cell_slice(*job)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_construct(args: argparse.Namespace, config: RunConfig) -> int:
    name = args.name
    builder_args: dict[str, object] = {}
    if name == "matching":
        builder_args = {"n": args.n, "m": args.m}
    elif name == "triangles":
        builder_args = {"n": args.n, "m": args.m}
    elif name == "blowup":
        builder_args = {"n": args.n, "t": args.t, "seed": config.seed}
    elif name == "packing":
        builder_args = {"n": args.n, "k": args.k, "search": args.search}
    elif name == "lex-cliques":
        builder_args = {"n": args.n, "c": args.c}
    elif name == "mixed-coloring":
        builder_args = {"n": args.n, "k": args.k, "gamma": Fraction(args.gamma)}
    elif name == "mixed-digraph":
        builder_args = {
            "n": args.n,
            "k": args.k,
            "gamma": Fraction(args.gamma),
            "search": args.search,
        }
    else:
        print(f"error: unknown construction {name!r}", file=sys.stderr)
        return 2
    cert = cons.BUILDERS[name](**builder_args)

    slug_bits = [name.replace("-", "_")]
    for key in ("n", "m", "t", "k", "c", "gamma"):
        if key in builder_args:
            slug_bits.append(f"{key}{str(builder_args[key]).replace('/', '-')}")
    base = config.out_dir / "_".join(slug_bits)
    instance_path = base.with_suffix(".txt")
    cert_path = base.with_suffix(".cert.json")
    config.out_dir.mkdir(parents=True, exist_ok=True)
    instance_path.write_text(serialize_instance(cert.instance))
    payload = {
        "construction": name,
        "provenance": cert.provenance,
        "claimed_m": cert.claimed_m,
        "claimed_bound": cert.claimed_bound,
        "equality": cert.equality,
        "direction": cert.direction,
        "instance_file": instance_path.name,
        "extras": {k: _plain(v) for k, v in cert.extras.items()},
    }
    cert_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"instance={instance_path}")
    print(f"certificate={cert_path}")
    print(
        f"claimed_m={cert.claimed_m} claimed_bound={cert.claimed_bound} "
        f"equality={str(cert.equality).lower()}"
    )
    return 0


def _plain(value: object) -> object:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool):
        return str(value).lower()
    return value


def _cmd_solve(args: argparse.Namespace, config: RunConfig) -> int:
    for path in config.instances:
        instance = parse_instance(Path(path).read_text())
        if isinstance(instance, BicoloredGraph):
            family, m = "bichrome", instance.unicolored_count
            result = max_mono_clique(instance)
            detail = f"color={result.witness.color.token}"
        else:
            family, m = "semi", instance.oneway_count
            result = max_transitive_set(instance)
            detail = "order=" + ",".join(map(str, result.witness.order))
        print(f"file={path} family={family} n={instance.n} m={m}")
        print(f"optimum={result.size}")
        print("witness=" + ",".join(map(str, result.witness.vertices)))
        print(detail)
        print(f"nodes={result.nodes_explored}")
    return 0


def _cmd_oracle(args: argparse.Namespace, config: RunConfig) -> int:
    families = (
        [("coloring", "f"), ("digraph", "F")]
        if args.family == "both"
        else [("coloring", "f")] if args.family == "coloring" else [("digraph", "F")]
    )
    config.out_dir.mkdir(parents=True, exist_ok=True)
    values: dict[str, tuple[int, Path]] = {}
    for family, label in families:
        value, text = _oracle_cell(args.n, args.m, family, config.budget, config.threads)
        path = config.out_dir / f"oracle_n{args.n}_m{args.m}_{family}.txt"
        path.write_text(text)
        values[label] = (value, path)
        print(f"{label}({args.n},{args.m})={value} instance={path}")
    if args.csv:
        print("n,m,f,F,instance_file")
        f_val = values.get("f", ("", None))[0]
        big_f_val = values.get("F", ("", None))[0]
        base = config.out_dir / f"oracle_n{args.n}_m{args.m}"
        print(f"{args.n},{args.m},{f_val},{big_f_val},{base}")
    return 0


def _cmd_lowerbound(args: argparse.Namespace, config: RunConfig) -> int:
    for path in config.instances:
        instance = parse_instance(Path(path).read_text())
        if isinstance(instance, BicoloredGraph):
            witness, stats = mono_clique_trials(instance, config.trials, config.seed)
            family = "bichrome"
            detail = f"color={witness.color.token}"
        else:
            witness, stats = transitive_trials(instance, config.trials, config.seed)
            family = "semi"
            detail = "order=" + ",".join(map(str, witness.order))
        print(
            f"file={path} family={family} n={instance.n} "
            f"trials={stats.trials} seed={config.seed}"
        )
        print(f"best_size={len(witness.vertices)}")
        print("witness=" + ",".join(map(str, witness.vertices)))
        print(detail)
        print(f"mean={stats.mean}")
        print(f"guarantee={stats.guarantee}")
    return 0


def _format_value(value: "Fraction | float | int | None") -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _print_reports(reports: list) -> None:
    print("name,side,exact,value,params")
    for r in reports:
        params = ";".join(f"{k}={_plain(v)}" for k, v in sorted(r.params.items()))
        print(f"{r.name},{r.side},{str(r.exact).lower()},{_format_value(r.value)},{params}")


def _cmd_bound(args: argparse.Namespace, config: RunConfig) -> int:
    name = args.name
    if name == "classic":
        _print_reports(bounds_mod.classic_bounds(args.n))
    elif name == "first-moment":
        _print_reports([bounds_mod.first_moment_bound(Fraction(args.p), args.n)])
    elif name == "blowup":
        _print_reports([bounds_mod.blowup_bound(Fraction(args.p), args.n)])
    elif name == "best-upper":
        _print_reports([bounds_mod.best_upper_bound(Fraction(args.p), args.n)])
    elif name == "moments":
        z, y = bounds_mod.moment_compare(
            args.population, args.successes, args.draws, Fraction(args.base)
        )
        print("quantity,value")
        print(f"hypergeometric_moment,{z}")
        print(f"binomial_moment,{y}")
        print(f"inequality_holds,{str(z <= y).lower()}")
    elif name == "moment-identity":
        lhs, rhs = bounds_mod.binomial_moment_identity(
            args.population, args.successes, args.draws, args.k
        )
        print("quantity,value")
        print(f"summed,{lhs}")
        print(f"closed_form,{rhs}")
        print(f"identity_holds,{str(lhs == rhs).lower()}")
    elif name == "lll":
        check = bounds_mod.lll_condition(args.n, args.k)
        print("quantity,value")
        print(f"holds,{str(check.holds).lower()}")
        print(f"event_probability,{check.event_probability}")
        print(f"dependency_bound,{check.dependency_bound}")
        print(f"ratio,{check.ratio}")
        print(f"ratio_ok,{str(check.ratio_ok).lower()}")
    elif name == "lll-threshold":
        _print_reports([bounds_mod.lll_threshold(args.n)])
    elif name == "lower-formulas":
        _print_reports(bounds_mod.lower_bound_formulas(args.n, args.m))
    elif name == "atlas":
        _bound_atlas(args.n_max, args.m_max)
    else:
        print(f"error: unknown bound {name!r}", file=sys.stderr)
        return 2
    return 0


def _bound_atlas(n_max: int, m_max: "int | None") -> None:
    """CSV of every closed-form value per (n, m) cell."""
    print(
        "n,m,clique_exact_small_m,transitive_exact_small_m,"
        "clique_lower,transitive_lower,first_moment_upper,blowup_upper"
    )
    for n in range(1, n_max + 1):
        total = n * (n - 1) // 2
        top = total if m_max is None else min(m_max, total)
        for m in range(top + 1):
            cells = {r.name: r.value for r in bounds_mod.lower_bound_formulas(n, m)}
            p = Fraction(total - m, total) if total else Fraction(0)
            fm = bu = None
            if n >= 2 and p < 1:
                fm = bounds_mod.first_moment_bound(p, n).value
                if p > 0:
                    bu = bounds_mod.blowup_bound(p, n).value
            row = [
                str(n),
                str(m),
                _format_value(cells.get("clique-exact-small-m")),
                _format_value(cells.get("transitive-exact-small-m")),
                _format_value(cells.get("clique-lower-caro-wei")),
                _format_value(cells.get("transitive-lower-degenerate")),
                _format_value(fm),
                _format_value(bu),
            ]
            print(",".join(row))


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    all_ok = True
    for cert_path in config.instances:
        payload = json.loads(cert_path.read_text())
        instance = parse_instance(
            (cert_path.parent / payload["instance_file"]).read_text()
        )
        failures = cons.verify_claims(
            instance,
            payload["claimed_m"],
            payload["claimed_bound"],
            payload.get("equality", False),
        )
        status = "VERIFIED" if not failures else "FAILED"
        print(f"cert={cert_path} construction={payload.get('construction', '?')} {status}")
        for failure in failures:
            print(f"  violated: {failure}")
            all_ok = False
    return 0 if all_ok else 1


def _cmd_atlas(args: argparse.Namespace, config: RunConfig) -> int:
    budget = config.budget
    print("n,m,f,F,violations")
    prev_f: "int | None" = None
    prev_F: "int | None" = None
    total_violations = 0
    for n in range(1, args.n_max + 1):
        total = n * (n - 1) // 2
        top = total if args.m_max is None else min(args.m_max, total)
        prev_f = prev_F = None
        for m in range(top + 1):
            if total > 15 or oracle_budget_estimate(n, m) > budget:
                print(f"{n},{m},,,skipped-budget")
                prev_f = prev_F = None
                continue
            f_val, _ = _oracle_cell(n, m, "coloring", budget, config.threads)
            big_f, _ = _oracle_cell(n, m, "digraph", budget, config.threads)
            violations: list[str] = []
            if m <= n:
                if f_val != n - m // 2:
                    violations.append("f-exact")
                if big_f != n - m // 3:
                    violations.append("F-exact")
            if m >= n:
                if f_val < Fraction(n * n, m + n):
                    violations.append("f-lower")
                if big_f < Fraction(2 * n * n, 2 * m + n):
                    violations.append("F-lower")
            if f_val > big_f:
                violations.append("sandwich")
            if prev_f is not None and f_val > prev_f:
                violations.append("f-monotone")
            if prev_F is not None and big_f > prev_F:
                violations.append("F-monotone")
            if n >= 2 and m >= 1:
                p = Fraction(total - m, total)
                if big_f >= bounds_mod.first_moment_bound(p, n).value:
                    violations.append("F-upper-moment")
            total_violations += len(violations)
            print(f"{n},{m},{f_val},{big_f},{';'.join(violations)}")
            prev_f, prev_F = f_val, big_f
    print(f"# violations={total_violations}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biramsey",
        description=(
            "Exact solvers, randomized lower bounds, extremal constructions, "
            "and bound calculators for guaranteed monochromatic cliques and "
            "transitive subtournaments."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("construct", help="build an extremal instance plus certificate")
    p.add_argument("name", choices=sorted(cons.BUILDERS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--gamma", type=str, default="1")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--search", action="store_true",
                   help="allow the order-13 extremal tournament search")
    p.add_argument("--out", type=Path, default=Path("."))
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("solve", help="exact optimum of instance files")
    p.add_argument("instances", nargs="+")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="worst-case value of one (n, m) cell")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=["coloring", "digraph", "both"], default="both")
    p.add_argument("--out", type=Path, default=Path("."))
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("lowerbound", help="randomized lower-bound witness")
    p.add_argument("instances", nargs="+")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_lowerbound)

    p = sub.add_parser("bound", help="closed-form bound reports")
    p.add_argument(
        "name",
        choices=[
            "classic", "first-moment", "blowup", "best-upper", "moments",
            "moment-identity", "lll", "lll-threshold", "lower-formulas", "atlas",
        ],
    )
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--p", type=str, default="1/2")
    p.add_argument("--population", type=int, default=8)
    p.add_argument("--successes", type=int, default=4)
    p.add_argument("--draws", type=int, default=4)
    p.add_argument("--base", type=str, default="2")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--m-max", type=int, default=None)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("verify", help="re-check construction certificates")
    p.add_argument("certificates", nargs="+")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("atlas", help="oracle grid cross-tabulated against formulas")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_atlas)

    return parser


def cli_main(argv: "list[str] | None" = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, RunConfig.from_args(args))
    except (
        BudgetExceeded,
        cons.InfeasibleParams,
        cons.UnsupportedK,
        cons.DivisibilityViolation,
        cons.ClassSizeMismatch,
        bounds_mod.ParameterOutOfRange,
        bounds_mod.DegenerateDensity,
        FileNotFoundError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
