"""Command-line experiment harness.

Each subcommand reproduces one experiment or verification as CSV or JSON
on stdout (or a file via --out).  Runs are deterministic given their
flags and seed; repeated invocations are byte-identical.

Exit status: 0 on success, 1 on usage or input errors, 2 when a
mathematical check fails (Sidon property, character-sum bound,
exponential-sum bound, box-deviation bound, or signature verification).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass
from math import gcd

import numpy as np

from .discrepancy import sweep, theorem_bound
from .elgamal import elgamal_permutation, sign, verify
from .numth import GroupParams, all_generators, is_prime, mod_pow, smallest_generator
from .permstat import (
    cycle_decompose,
    family_statistics,
    fixed_point_sweep,
    random_permutation,
    stirling_cycle_distribution,
)
from .render import cycle_diagram_svg
from .sidon import (
    build_graph,
    difference_set_size,
    incomplete_exponential_sum_total,
    max_nontrivial_character_sum,
    polya_vinogradov_bound,
    sidon_character_bound,
    verify_sidon,
)

__all__ = ["RunConfig", "main"]

DEFAULT_SEED = 0
DIST_MAX_CYCLES = 20  # cycle-count tables truncate here


class InputError(Exception):
    """Bad user input (composite prime, non-generator, ...)."""


@dataclass(frozen=True)
class RunConfig:
    """Validated inputs of one CLI run.

    Prime inputs are checked with is_prime before any experiment runs;
    the seed defaults to 0 so bare invocations are reproducible.
    """

    subcommand: str
    prime: int | None = None
    max_prime: int | None = None
    generator: str = "smallest"
    seed: int = DEFAULT_SEED
    out_format: str = "csv"
    out_path: str | None = None
    k_max: int = DIST_MAX_CYCLES
    boxes: int = 0


def _require_odd_prime(n: int) -> int:
    if n < 3 or not is_prime(n):
        raise InputError(f"{n} is not an odd prime")
    return n


def _resolve_generators(p: int, selection: str) -> list[int]:
    if selection == "smallest":
        return [smallest_generator(p).g]
    if selection == "all":
        return all_generators(p)
    try:
        g = int(selection)
    except ValueError:
        raise InputError(
            f"--generator must be an integer, 'smallest', or 'all', got {selection!r}"
        ) from None
    try:
        GroupParams(p, g)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return [g]


def _resolve_single_generator(p: int, selection: str) -> int:
    if selection == "all":
        raise InputError("this subcommand needs a single generator, not 'all'")
    return _resolve_generators(p, selection)[0]


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def _table(columns: list[str], rows: list[tuple], out_format: str) -> str:
    if out_format == "json":
        return _json({"columns": columns, "rows": [list(r) for r in rows]})
    lines = [",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommand handlers; each returns True unless a mathematical check failed


def _cmd_cycles(args) -> bool:
    p = _require_odd_prime(args.prime)
    rows = []
    for g in _resolve_generators(p, args.generator):
        structure = cycle_decompose(elgamal_permutation(GroupParams(p, g)))
        multiplicity = Counter(structure.cycle_lengths)
        rows.extend(
            (g, length, multiplicity[length])
            for length in sorted(multiplicity, reverse=True)
        )
    _emit(_table(["generator", "cycle_length", "multiplicity"], rows, args.format), args.out)
    return True


def _cycle_count_table(n: int, counts: list[int]) -> list[tuple]:
    """Rows c, theory percent, empirical percent for c = 1..min(20, n)."""
    theory = stirling_cycle_distribution(n)
    hist = Counter(counts)
    total = len(counts)
    return [
        (c, 100.0 * float(theory.probs[c]), 100.0 * hist.get(c, 0) / total)
        for c in range(1, min(DIST_MAX_CYCLES, n) + 1)
    ]


def _cmd_cycle_dist(args) -> bool:
    p = _require_odd_prime(args.prime)
    stats = family_statistics(p, all_generators(p), k_max=1)
    rows = _cycle_count_table(p - 1, list(stats.cycle_counts))
    _emit(_table(["c", "theory_percent", "elgamal_percent"], rows, args.format), args.out)
    return True


def _cmd_random_baseline(args) -> bool:
    if args.degree < 1:
        raise InputError(f"--degree must be >= 1, got {args.degree}")
    if args.samples < 1:
        raise InputError(f"--samples must be >= 1, got {args.samples}")
    counts = [
        len(cycle_decompose(random_permutation(args.degree, args.seed + i)).cycle_lengths)
        for i in range(args.samples)
    ]
    rows = _cycle_count_table(args.degree, counts)
    _emit(_table(["c", "theory_percent", "random_percent"], rows, args.format), args.out)
    return True


def _cmd_kcycles(args) -> bool:
    p = _require_odd_prime(args.prime)
    if args.k_max < 1:
        raise InputError(f"--k-max must be >= 1, got {args.k_max}")
    stats = family_statistics(p, all_generators(p), k_max=args.k_max)
    rows = [
        (k, 1.0 / k, stats.avg_k_cycles[k - 1]) for k in range(1, args.k_max + 1)
    ]
    _emit(_table(["k", "theory", "empirical_average"], rows, args.format), args.out)
    return True


def _cmd_fixed_points(args) -> bool:
    if args.max_prime < 2:
        raise InputError(f"--max-prime must be >= 2, got {args.max_prime}")
    rows = [(p, avg) for p, avg in fixed_point_sweep(args.max_prime)]
    _emit(_table(["p", "avg_fixed_points"], rows, args.format), args.out)
    return True


def _cmd_sidon(args) -> bool:
    p = _require_odd_prime(args.prime)
    expected = (p - 1) ** 2 - (p - 1) + 1
    results = []
    all_ok = True
    for g in _resolve_generators(p, args.generator):
        graph = build_graph(GroupParams(p, g))
        check = verify_sidon(graph)
        size = difference_set_size(graph)
        ok = check.ok and size == expected
        all_ok &= ok
        results.append(
            {
                "generator": g,
                "ok": ok,
                "diff_set_size": size,
                "expected_diff_set_size": expected,
            }
        )
    _emit(_json({"p": p, "results": results, "pass": all_ok}), args.out)
    return all_ok


def _cmd_char_sums(args) -> bool:
    p = _require_odd_prime(args.prime)
    bound = sidon_character_bound(p)
    results = []
    all_ok = True
    for g in _resolve_generators(p, args.generator):
        value, chi = max_nontrivial_character_sum(build_graph(GroupParams(p, g)))
        ok = value < bound
        all_ok &= ok
        results.append(
            {
                "generator": g,
                "max_sum": value,
                "bound": bound,
                "argmax_s": chi.s,
                "argmax_t": chi.t,
                "pass": ok,
            }
        )
    _emit(_json({"p": p, "results": results, "pass": all_ok}), args.out)
    return all_ok


def _cmd_polya(args) -> bool:
    try:
        total = incomplete_exponential_sum_total(args.n, args.window, args.shift)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    bound = polya_vinogradov_bound(args.n)
    ok = total < bound
    _emit(
        _json(
            {
                "n": args.n,
                "window": args.window,
                "shift": args.shift,
                "total": total,
                "bound": bound,
                "pass": ok,
            }
        ),
        args.out,
    )
    return ok


def _cmd_discrepancy(args) -> bool:
    p = _require_odd_prime(args.prime)
    if args.boxes < 0:
        raise InputError(f"--boxes must be >= 0, got {args.boxes}")
    g = _resolve_single_generator(p, args.generator)
    report = sweep(build_graph(GroupParams(p, g)), args.boxes, args.seed)
    bound = theorem_bound(p)
    ok = report.max_deviation <= bound
    if args.out:
        rows = [
            (r.box.h, r.box.N, r.box.k, r.box.M, r.hits, r.expected,
             r.deviation, r.ratio, int(r.large_box))
            for r in report.records
        ]
        _emit(
            _table(
                ["h", "N", "k", "M", "hits", "expected", "deviation", "ratio", "large_box"],
                rows,
                "csv",
            ),
            args.out,
        )
    _emit(
        _json(
            {
                "p": p,
                "generator": g,
                "seed": args.seed,
                "num_boxes": len(report.records),
                "max_deviation": report.max_deviation,
                "bound": bound,
                "max_ratio": report.max_ratio,
                "pass": ok,
            }
        ),
        None,
    )
    return ok


def _cmd_render_cycles(args) -> bool:
    p = _require_odd_prime(args.prime)
    g = _resolve_single_generator(p, args.generator)
    structure = cycle_decompose(elgamal_permutation(GroupParams(p, g)))
    _emit(cycle_diagram_svg(structure), args.out)
    return True


def _cmd_sign_demo(args) -> bool:
    p = _require_odd_prime(args.prime)
    params = smallest_generator(p)
    d = params.d
    rng = np.random.default_rng(args.seed)
    secret_a = int(rng.integers(0, d))
    session_k = int(rng.integers(1, d))
    while gcd(session_k, d) != 1:
        session_k = int(rng.integers(1, d))
    message_m = int(rng.integers(0, d))
    public_A = mod_pow(params.g, secret_a, p)
    signature = sign(params, secret_a, session_k, message_m)
    checked_m = (message_m + 1) % d if args.tamper else message_m
    verified = verify(params, public_A, checked_m, signature)
    _emit(
        _json({"A": public_A, "K": signature.K, "b": signature.b, "verified": verified}),
        args.out,
    )
    return verified


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="elgamalmap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add(name: str, handler, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--out", metavar="PATH", default=None, help="write output here instead of stdout")
        return p

    p = add("cycles", _cmd_cycles, "cycle lengths of x -> g**x, per generator")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--generator", default="smallest", help="an integer, 'smallest', or 'all'")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("cycle-dist", _cmd_cycle_dist, "cycle-count distribution vs exact theory")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("random-baseline", _cmd_random_baseline, "cycle-count distribution of seeded uniform permutations")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("kcycles", _cmd_kcycles, "average k-cycle counts vs the 1/k law")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--k-max", dest="k_max", type=int, default=DIST_MAX_CYCLES)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("fixed-points", _cmd_fixed_points, "average fixed points per prime, all generators")
    p.add_argument("--max-prime", dest="max_prime", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("sidon", _cmd_sidon, "difference-uniqueness check and difference-set size")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--generator", default="smallest", help="an integer, 'smallest', or 'all'")

    p = add("char-sums", _cmd_char_sums, "largest nontrivial character sum vs sqrt(3(p-1))")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--generator", default="smallest", help="an integer, 'smallest', or 'all'")

    p = add("polya", _cmd_polya, "incomplete exponential sum total vs 5n ln n")
    p.add_argument("--n", type=int, required=True, help="modulus")
    p.add_argument("--window", type=int, required=True, help="window length N, 1 <= N < n")
    p.add_argument("--shift", type=int, default=0, help="window start h")

    p = add("discrepancy", _cmd_discrepancy, "box deviations vs 50 sqrt(p) ln(p)^2")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--generator", default="smallest", help="an integer or 'smallest'")
    p.add_argument("--boxes", type=int, default=0, help="number of random boxes")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = add("render-cycles", _cmd_render_cycles, "SVG cycle diagram, one circle per cycle")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--generator", default="smallest", help="an integer or 'smallest'")

    p = add("sign-demo", _cmd_sign_demo, "seeded sign/verify round trip")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--tamper", action="store_true", help="verify against m+1 instead of m")

    return parser


_JSON_ONLY = frozenset({"sidon", "char-sums", "polya", "discrepancy", "sign-demo"})


def _config_from_args(args) -> RunConfig:
    default_format = "json" if args.subcommand in _JSON_ONLY else "csv"
    return RunConfig(
        subcommand=args.subcommand,
        prime=getattr(args, "prime", None),
        max_prime=getattr(args, "max_prime", None),
        generator=str(getattr(args, "generator", "smallest")),
        seed=getattr(args, "seed", DEFAULT_SEED),
        out_format=getattr(args, "format", default_format),
        out_path=getattr(args, "out", None),
        k_max=getattr(args, "k_max", DIST_MAX_CYCLES),
        boxes=getattr(args, "boxes", 0),
    )


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.subcommand == "render-cycles" and not args.out:
            raise InputError("render-cycles requires --out PATH for the SVG file")
        config = _config_from_args(args)
        if config.prime is not None:
            _require_odd_prime(config.prime)
        ok = args.handler(args)
    except InputError as exc:
        print(f"elgamalmap: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"elgamalmap: error: {exc}", file=sys.stderr)
        return 1
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
