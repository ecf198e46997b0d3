"""Command-line surface.

Exit codes: 0 success, 2 validation error (bad arguments or invalid inputs),
3 data error (missing or unreadable files).  ``SORTNET_SEED`` provides the
seed when ``--seed`` is omitted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .edelman_greene import (
    SortingNetwork,
    eg_forward,
    eg_inverse,
    render_wiring_diagram,
)
from .experiments import (
    ExperimentReport,
    canonical_motif,
    experiment_stationarity,
    experiment_theorem1,
    experiment_theorem2,
    experiment_theorem3,
)
from .geometry import (
    GeneralPositionError,
    PointConfiguration,
    certify_nonrealizable,
    goodman_pollack_pattern,
    gp_check,
    load_pattern_file,
    realize_network,
)
from .patterns import (
    Pattern,
    count_disjoint_exact,
    count_disjoint_greedy,
    find_occurrences,
)
from .sampling import SeededRng, sample_random_network, sample_uniform_syt
from .tableaux import StandardTableau, YoungDiagram, dimension, enumerate_syt

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DATA = 3


class ValidationFailure(Exception):
    pass


class DataFailure(Exception):
    pass


def _default_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("SORTNET_SEED")
    return int(env) if env else 0


def _parse_shape(text: str) -> YoungDiagram:
    if text.startswith("staircase:"):
        return YoungDiagram.staircase(int(text.split(":", 1)[1]))
    try:
        rows = [int(part) for part in text.split(",") if part.strip()]
        return YoungDiagram(rows)
    except ValueError as exc:
        raise ValidationFailure(f"bad shape {text!r}: {exc}") from exc


def _parse_swaps(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValidationFailure(f"bad swap list {text!r}") from exc


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise DataFailure(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise DataFailure(f"unreadable JSON in {path}: {exc}") from exc


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_bytes(blob: bytes, out: str | None):
    if out:
        with open(out, "wb") as fh:
            fh.write(blob)
    else:
        sys.stdout.buffer.write(blob)


def _sample_one_tableau(args):
    rows, seed, stream = args
    shape = YoungDiagram(rows)
    return sample_uniform_syt(shape, SeededRng(seed, stream)).to_json()


def _sample_one_network(args):
    n, seed, stream = args
    return sample_random_network(n, SeededRng(seed, stream)).to_json()


def _fan_out(worker, tasks, jobs: int):
    if jobs <= 1:
        return [worker(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def cmd_sample(args) -> int:
    shape = _parse_shape(args.shape)
    seed = _default_seed(args.seed)
    tasks = [(shape.rows, seed, i) for i in range(args.count)]
    results = _fan_out(_sample_one_tableau, tasks, args.jobs)
    _emit("\n".join(json.dumps(r) for r in results), args.out)
    return EXIT_OK


def cmd_sample_network(args) -> int:
    if args.n < 2:
        raise ValidationFailure("network size must be at least 2")
    seed = _default_seed(args.seed)
    tasks = [(args.n, seed, i) for i in range(args.count)]
    results = _fan_out(_sample_one_network, tasks, args.jobs)
    _emit("\n".join(json.dumps(r) for r in results), args.out)
    return EXIT_OK


def cmd_eg(args) -> int:
    if bool(args.to_network) == bool(args.to_tableau):
        raise ValidationFailure("pass exactly one of --to-network / --to-tableau")
    if args.to_network:
        data = _load_json(args.to_network)
        try:
            tableau = StandardTableau.from_json(data)
            network = eg_forward(tableau)
        except ValueError as exc:
            raise ValidationFailure(str(exc)) from exc
        _emit(json.dumps(network.to_json()), args.out)
    else:
        data = _load_json(args.to_tableau)
        try:
            network = SortingNetwork.from_json(data)
            tableau = eg_inverse(network)
        except ValueError as exc:
            raise ValidationFailure(str(exc)) from exc
        _emit(json.dumps(tableau.to_json()), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    data = _load_json(args.network)
    try:
        network = SortingNetwork.from_json(data)
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc
    _emit_bytes(render_wiring_diagram(network), args.out)
    return EXIT_OK


def cmd_pattern(args) -> int:
    data = _load_json(args.network)
    try:
        network = SortingNetwork.from_json(data)
        pattern = Pattern(_parse_swaps(args.pattern))
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc
    windows = find_occurrences(network, pattern)
    if args.exact:
        count = count_disjoint_exact(windows)
    else:
        count = count_disjoint_greedy(windows)
    payload = {
        "pattern": list(pattern.swaps),
        "windows": [w.to_json() for w in windows],
        "count": count,
        "method": "exact" if args.exact else "greedy",
    }
    _emit(json.dumps(payload), args.out)
    return EXIT_OK


def cmd_realize(args) -> int:
    data = _load_json(args.points)
    try:
        config = PointConfiguration.from_json(data)
        network = realize_network(config)
    except GeneralPositionError as exc:
        raise ValidationFailure(str(exc)) from exc
    except (ValueError, KeyError) as exc:
        raise ValidationFailure(str(exc)) from exc
    _emit(json.dumps(network.to_json()), args.out)
    return EXIT_OK


def cmd_certify(args) -> int:
    data = _load_json(args.network)
    try:
        network = SortingNetwork.from_json(data)
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc
    if args.gp_pattern:
        try:
            gp = load_pattern_file(args.gp_pattern)
        except FileNotFoundError as exc:
            raise DataFailure(str(exc)) from exc
        except ValueError as exc:
            raise ValidationFailure(str(exc)) from exc
    else:
        gp = goodman_pollack_pattern()
    witness = certify_nonrealizable(
        network, gp, widths="all" if args.wide else "canonical"
    )
    if witness is None:
        payload = {"certified": False, "verdict": "inconclusive"}
    else:
        payload = {
            "certified": True,
            "verdict": "not realizable",
            "witness": witness.to_json(),
        }
    _emit(json.dumps(payload), args.out)
    return EXIT_OK


def _emit_report(report: ExperimentReport, args) -> int:
    if args.format == "csv":
        _emit(report.to_csv_str(), args.out)
    else:
        _emit(report.to_json_str(), args.out)
    return EXIT_OK


def cmd_experiment(args) -> int:
    seed = _default_seed(args.seed)
    n_values = [int(x) for x in args.n.split(",")] if args.n else None
    try:
        if args.which == "t1":
            pattern = Pattern(_parse_swaps(args.pattern))
            report = experiment_theorem1(
                pattern, n_values or [50, 100, 200], args.samples, seed,
                prefix_factor=args.prefix_factor,
            )
        elif args.which == "t2":
            if args.motif:
                motif = StandardTableau.from_json(_load_json(args.motif))
            else:
                motif = canonical_motif(args.k)
            report = experiment_theorem2(
                motif, n_values or [100, 200], args.samples, seed,
                entry_cutoff=args.entry_cutoff,
            )
        elif args.which == "t3":
            report = experiment_theorem3(n_values or [50, 100, 200], args.samples, seed)
        else:
            report = experiment_stationarity(args.stationarity_n)
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc
    return _emit_report(report, args)


def cmd_oracle(args) -> int:
    if args.which == "enumerate":
        shape = _parse_shape(args.shape)
        try:
            tableaux = list(enumerate_syt(shape))
        except ValueError as exc:
            raise ValidationFailure(str(exc)) from exc
        if args.count_only:
            _emit(
                json.dumps({"shape": list(shape.rows), "count": len(tableaux),
                            "dimension": dimension(shape)}),
                args.out,
            )
        else:
            _emit("\n".join(json.dumps(t.to_json()) for t in tableaux), args.out)
        return EXIT_OK
    # gp-check
    pattern = None
    if args.gp_pattern:
        try:
            pattern = load_pattern_file(args.gp_pattern)
        except FileNotFoundError as exc:
            raise DataFailure(str(exc)) from exc
        except ValueError as exc:
            raise ValidationFailure(str(exc)) from exc
    result = gp_check(samples=args.samples, seed=_default_seed(args.seed), pattern=pattern)
    _emit(result.summary(), args.out)
    return EXIT_OK if result.passed else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sortnet",
        description="Sorting networks, staircase Young tableaux, and their geometry.",
    )
    parser.add_argument("--version", action="version", version=f"sortnet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("--out", help="write output to this file instead of stdout")
        if seed:
            p.add_argument("--seed", type=int, default=None,
                           help="RNG seed (default: $SORTNET_SEED or 0)")

    p = sub.add_parser("sample", help="sample uniform standard tableaux")
    p.add_argument("--shape", required=True, help='"staircase:100" or "5,3,2"')
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("sample-network", help="sample uniform sorting networks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_sample_network)

    p = sub.add_parser("eg", help="run the bijection in either direction")
    p.add_argument("--to-network", metavar="TABLEAU_JSON")
    p.add_argument("--to-tableau", metavar="NETWORK_JSON")
    common(p, seed=False)
    p.set_defaults(func=cmd_eg)

    p = sub.add_parser("render", help="render a network as an SVG wiring diagram")
    p.add_argument("network", metavar="NETWORK_JSON")
    p.add_argument("-o", "--out", help="output SVG path (default: stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("pattern", help="find and count pattern occurrences")
    p.add_argument("--network", required=True, metavar="NETWORK_JSON")
    p.add_argument("--pattern", required=True, help='swaps like "2,1,2"')
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true")
    group.add_argument("--greedy", action="store_true")
    common(p, seed=False)
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("realize", help="sweep a point configuration into a network")
    p.add_argument("points", metavar="POINTS_JSON")
    common(p, seed=False)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("certify", help="search for the non-realizability certificate")
    p.add_argument("network", metavar="NETWORK_JSON")
    p.add_argument("--gp-pattern", help="pattern file (default: shipped gp5.json)")
    p.add_argument("--wide", action="store_true",
                   help="also scan windows wider than canonical (costs a factor of n)")
    common(p, seed=False)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("experiment", help="run a desk-scale experiment")
    p.add_argument("which", choices=["t1", "t2", "t3", "stationarity"])
    p.add_argument("--pattern", default="1,2", help="t1: pattern swaps")
    p.add_argument("--prefix-factor", type=float, default=4.0,
                   help="t1: report counts inside the time prefix [1, factor*n]")
    p.add_argument("--k", type=int, default=3, help="t2: motif size")
    p.add_argument("--motif", help="t2: motif tableau JSON file")
    p.add_argument("--entry-cutoff", type=float, default=None,
                   help="t2: require motif entries above N - cutoff*n")
    p.add_argument("--n", help='comma-separated sizes, e.g. "50,100,200"')
    p.add_argument("--stationarity-n", type=int, default=4)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("oracle", help="exhaustive and statistical cross-checks")
    p.add_argument("which", choices=["enumerate", "gp-check"])
    p.add_argument("--shape", default="3,2,1", help="enumerate: the shape")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--samples", type=int, default=1_000_000,
                   help="gp-check: number of random 5-point configurations")
    p.add_argument("--gp-pattern", help="gp-check: pattern file to validate")
    common(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DataFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
