"""Command-line front end.

Verbs:
  run             one algorithm on one function; writes summary, curves,
                  and a provenance sidecar
  compare         a grid of algorithms x functions; one summary row each
  curve           convergence-curve export (raw or log10)
  list-functions  the benchmark registry as a table

Every experiment is reproducible from its command line: all randomness
flows from --seed, outputs carry no timestamps, and file names are derived
from the configuration so reruns overwrite deterministically.

Exit codes: 0 success, 2 usage error, 1 runtime failure.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import replace

from . import harness
from .benchmarks import make_objective, objective_names
from .core import RunConfig


def _expand_functions(spec: str) -> list[str]:
    """Expand 'f1..f9' ranges and comma lists into registry names."""
    names: list[str] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"f(\d+)\.\.f(\d+)", part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise ValueError(f"empty function range {part!r}")
            names.extend(f"f{i}" for i in range(lo, hi + 1))
        else:
            names.append(part)
    valid = objective_names()
    for name in names:
        if name not in valid:
            raise ValueError(f"unknown function {name!r}; valid names: {', '.join(valid)}")
    if not names:
        raise ValueError("no functions given")
    return names


def _expand_algorithms(spec: str) -> list[str]:
    names = [part.strip() for part in spec.split(",") if part.strip()]
    for name in names:
        if name not in harness.ALGORITHMS:
            raise ValueError(
                f"unknown algorithm {name!r}; valid names: {', '.join(harness.ALGORITHMS)}"
            )
    if not names:
        raise ValueError("no algorithms given")
    return names


def _function_slug(functions: list[str]) -> str:
    numbers = sorted(int(f[1:]) for f in functions)
    if numbers == list(range(numbers[0], numbers[0] + len(numbers))) and len(numbers) > 1:
        return f"f{numbers[0]}-f{numbers[-1]}"
    return "+".join(f"f{n}" for n in numbers)


def _output_base(args, verb: str, algorithms: list[str], functions: list[str]) -> str:
    if args.output:
        return args.output
    return (
        f"{verb}_{'+'.join(algorithms)}_{_function_slug(functions)}"
        f"_r{args.runs}_i{args.iterations}_s{args.seed}"
    )


def _build_config(args) -> RunConfig:
    return RunConfig(
        population_size=args.pop_size,
        max_iterations=args.iterations,
        tolerance=args.tolerance,
        seed=args.seed,
    )


def _resolve_params(algorithm: str, args):
    params = harness.default_params(algorithm)
    if params is None:
        return None
    if args.pop_size_given:
        if algorithm == "spso":
            params = replace(params, swarm_size=args.pop_size)
        elif algorithm == "ba":
            params = replace(params, population=args.pop_size)
    return params


def _run_grid(args, algorithms: list[str], functions: list[str]):
    config = _build_config(args)
    rows = []
    provenance: dict = {
        "runs": args.runs,
        "seed_base": args.seed,
        "jobs": args.jobs,
        "experiments": {},
    }
    all_records = {}
    for algorithm in algorithms:
        params = _resolve_params(algorithm, args)
        for function in functions:
            summary, records = harness.run_experiment(
                algorithm,
                function,
                args.runs,
                config,
                base_seed=args.seed,
                params=params,
                jobs=args.jobs,
            )
            rows.append(
                harness.build_summary_row(
                    algorithm, function, args.runs, config, summary, args.seed, params
                )
            )
            all_records[(algorithm, function)] = records
            provenance["experiments"][f"{algorithm}/{function}"] = {
                "parameters": harness.resolved_parameters(algorithm, config, params),
                "objective": make_objective(function).metadata,
                "finals": [float(v) for v in summary.finals],
                "evaluations": [r.evaluations_used for r in records],
            }
    return rows, all_records, provenance


def _print_rows(rows: list[dict]) -> None:
    print(",".join(harness.SUMMARY_COLUMNS))
    for row in rows:
        print(",".join(harness._format_cell(row[c]) for c in harness.SUMMARY_COLUMNS))


def _write_summary(args, base: str, rows: list[dict]) -> list[str]:
    if args.format == "json":
        path = f"{base}_summary.json"
        harness.write_summary_json(path, rows)
    else:
        path = f"{base}_summary.csv"
        harness.write_summary_csv(path, rows)
    return [path]


def cmd_run(args) -> int:
    algorithms = _expand_algorithms(args.algorithm)
    functions = _expand_functions(args.function)
    if len(algorithms) != 1 or len(functions) != 1:
        raise ValueError("run takes exactly one algorithm and one function; use compare for grids")
    rows, all_records, provenance = _run_grid(args, algorithms, functions)
    base = _output_base(args, "run", algorithms, functions)
    written = _write_summary(args, base, rows)
    records = all_records[(algorithms[0], functions[0])]
    curves = harness.export_curves(records, transform=args.transform)
    harness.write_curves_csv(f"{base}_curves.csv", curves)
    harness.write_provenance_json(f"{base}_provenance.json", provenance)
    written += [f"{base}_curves.csv", f"{base}_provenance.json"]
    _print_rows(rows)
    print("wrote: " + ", ".join(written))
    return 0


def cmd_compare(args) -> int:
    algorithms = _expand_algorithms(args.algorithms)
    functions = _expand_functions(args.functions)
    rows, _, provenance = _run_grid(args, algorithms, functions)
    base = _output_base(args, "compare", algorithms, functions)
    written = _write_summary(args, base, rows)
    harness.write_provenance_json(f"{base}_provenance.json", provenance)
    written.append(f"{base}_provenance.json")
    _print_rows(rows)
    print("wrote: " + ", ".join(written))
    return 0


def cmd_curve(args) -> int:
    algorithms = _expand_algorithms(args.algorithm)
    functions = _expand_functions(args.function)
    if len(algorithms) != 1 or len(functions) != 1:
        raise ValueError("curve takes exactly one algorithm and one function")
    rows, all_records, provenance = _run_grid(args, algorithms, functions)
    base = _output_base(args, "curve", algorithms, functions)
    records = all_records[(algorithms[0], functions[0])]
    curves = harness.export_curves(records, transform=args.transform)
    harness.write_curves_csv(f"{base}_curves.csv", curves)
    harness.write_provenance_json(f"{base}_provenance.json", provenance)
    _print_rows(rows)
    print(f"wrote: {base}_curves.csv, {base}_provenance.json")
    return 0


def cmd_list_functions(args) -> int:
    header = f"{'name':<5} {'label':<24} {'dim':>3} {'domain':>18} {'optimum':>12} flags"
    print(header)
    print("-" * len(header))
    for name in objective_names():
        obj = make_objective(name)
        domain = f"[{obj.space.lower[0]:g}, {obj.space.upper[0]:g}]^{obj.dim}"
        flags = []
        if obj.optimum_inconsistent:
            flags.append("optimum-inconsistent")
        if not obj.standard_form:
            flags.append("as-circulated")
        elif obj.formula_note:
            flags.append("reconciled-form")
        if obj.source_label:
            flags.append(f"tabulated-as-{obj.source_label}")
        print(
            f"{obj.name:<5} {obj.label:<24} {obj.dim:>3} {domain:>18} "
            f"{obj.declared_optimum:>12.8g} {';'.join(flags) or '-'}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="litefwa",
        description="Fireworks-style optimizers and a reproducible benchmark harness.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, single_algorithm: bool):
        if single_algorithm:
            p.add_argument("--algorithm", default="lfwa", help="algorithm name")
            p.add_argument("--function", required=True, help="benchmark name, e.g. f1")
        else:
            p.add_argument("--algorithms", default="lfwa,fwa,spso,ba", help="comma list")
            p.add_argument("--functions", default="f1..f9", help="comma list or f1..f9 range")
        p.add_argument("--runs", type=int, default=20, help="replications (default 20)")
        p.add_argument("--iterations", type=int, default=1000, help="generations per run")
        p.add_argument("--pop-size", type=int, default=None, dest="pop_size",
                       help="population size (default 5; swarm/bat baselines default 30)")
        p.add_argument("--seed", type=int, default=0, help="base seed; run i uses seed+i")
        p.add_argument("--tolerance", type=float, default=1e-5, help="success tolerance")
        p.add_argument("--output", default=None, help="output base path (no extension)")
        p.add_argument("--format", choices=["csv", "json"], default="csv",
                       help="summary file format")
        p.add_argument("--transform", choices=["raw", "log10"], default="raw",
                       help="curve value transform")
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                       help="parallel replications (default: available parallelism)")

    p_run = sub.add_parser("run", help="one algorithm on one function")
    add_common(p_run, single_algorithm=True)
    p_run.set_defaults(func=cmd_run)

    p_cmp = sub.add_parser("compare", help="grid of algorithms x functions")
    add_common(p_cmp, single_algorithm=False)
    p_cmp.set_defaults(func=cmd_compare)

    p_curve = sub.add_parser("curve", help="convergence-curve export")
    add_common(p_curve, single_algorithm=True)
    p_curve.set_defaults(func=cmd_curve)

    p_list = sub.add_parser("list-functions", help="print the benchmark registry")
    p_list.set_defaults(func=cmd_list_functions)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb != "list-functions":
        args.pop_size_given = args.pop_size is not None
        if args.pop_size is None:
            args.pop_size = 5
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - runtime failures
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
