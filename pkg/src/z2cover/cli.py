"""Command-line front end.

Subcommands map one-to-one onto the library: ``cover`` for single-cover
checks and invariants, ``geography`` for the ratio-simplex coordinates,
``classify`` for the exhaustive admissible lists, ``deform`` for the
rigidity criteria, ``examples`` for the generated families, ``selftest``
for the transform property suite.  All rational output is exact ("p/q"
strings in JSON, never floats), list output is canonically sorted before
emission, and fixing the seed makes every byte of stdout reproducible
regardless of the thread count.

Exit codes: 0 success, 1 the checked object failed a validation, 2
malformed input (bad JSON, bad parameters, out-of-range ranks).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import classify, moduli, walsh
from .cover import (
    BranchData,
    CoverSpecError,
    eigensheaf_degrees,
    from_path,
    is_flat,
    to_json,
    validate,
)
from .invariants import (
    SCI_MAX,
    SCI_MIN,
    Y_MIN,
    RatioVector,
    barycenter_ratio,
    geography_point,
    hunt_scan,
    invariant_report,
    vertex_ratio,
)
from .walsh import NonIntegralError
from .wps import Weights

__all__ = [
    "main",
    "build_parser",
    "RunConfig",
    "random_ratio",
    "solutions_to_md",
    "md_to_solutions",
    "families_to_md",
]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MALFORMED = 2

THREADS_ENV = "Z2COVER_THREADS"

# scan abscissas bracketing the positive-index window of the hunt family
HUNT_SCAN = ("1/2", "11/20", "3/5", "13/20", "17/25")


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared across subcommands, resolved from flags and environment."""

    fmt: str = "json"
    threads: int = 1
    seed: int = 0
    count: int = 100
    t_max: int | None = None
    bounds_report: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        threads = getattr(args, "threads", None)
        if threads is None:
            threads = int(os.environ.get(THREADS_ENV, "1"))
        if threads < 1:
            raise ValueError(f"thread count must be positive, got {threads}")
        return cls(
            fmt=getattr(args, "fmt", "json"),
            threads=threads,
            seed=getattr(args, "seed", 0),
            count=getattr(args, "count", 100),
            t_max=getattr(args, "t_max", None),
            bounds_report=getattr(args, "bounds_report", False),
        )


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _frac(v: Fraction | None) -> str | None:
    return None if v is None else str(v)


# ---------------------------------------------------------------------------
# cover


def _cmd_cover_check(args: argparse.Namespace, cfg: RunConfig) -> int:
    report = validate(from_path(args.path))
    _emit(
        {
            "ok": report.ok,
            "parity_ok": report.parity_ok,
            "integral_degrees": report.integral_degrees,
            "weights_well_formed": report.weights_well_formed,
            "flat": report.flat,
            "branching_positive": report.branching_positive,
            "hurwitz": str(report.hurwitz),
            "half_points": report.half_points,
            "half_points_integral": report.half_points_integral,
            "messages": list(report.messages),
        }
    )
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_cover_invariants(args: argparse.Namespace, cfg: RunConfig) -> int:
    rep = invariant_report(from_path(args.path))
    _emit(
        {
            "K3": str(rep.k3),
            "chi": rep.chi,
            "euler": str(rep.euler),
            "exact": rep.euler_exact,
            "hurwitz": str(rep.hurwitz),
            "half_points": rep.half_points,
            "flat": rep.flat,
            "x": _frac(rep.x),
            "y": _frac(rep.y),
            "sci": _frac(rep.sci),
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# geography


def random_ratio(s: int, rng: random.Random) -> RatioVector:
    """Random rational point of the branch-ratio simplex."""
    n = 1 << s
    while True:
        picks = [rng.randint(0, 9) for _ in range(n - 1)]
        total = sum(picks)
        if total:
            break
    r = [Fraction(0)] + [Fraction(p, total) for p in picks]
    return RatioVector(s, tuple(r))


def _cmd_geo_sample(args: argparse.Namespace, cfg: RunConfig) -> int:
    s = args.s

    def one(index: int):
        rng = random.Random(f"{cfg.seed}:{index}")
        return index, geography_point(random_ratio(s, rng))

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(one, range(cfg.count)))
    else:
        results = [one(i) for i in range(cfg.count)]
    results.sort(key=lambda pair: pair[0])
    if cfg.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["index", "x", "y", "sci"])
        for index, pt in results:
            writer.writerow([index, pt.x, pt.y, pt.sci])
    else:
        _emit(
            {
                "s": s,
                "seed": cfg.seed,
                "count": cfg.count,
                "points": [
                    {"index": i, "x": str(p.x), "y": str(p.y), "sci": str(p.sci)}
                    for i, p in results
                ],
            }
        )
    return EXIT_OK


def _cmd_geo_extremes(args: argparse.Namespace, cfg: RunConfig) -> int:
    vx = geography_point(vertex_ratio(args.s))
    bc = geography_point(barycenter_ratio(args.s))
    _emit(
        {
            "s": args.s,
            "vertex": {"x": str(vx.x), "y": str(vx.y), "sci": str(vx.sci)},
            "barycenter": {"x": str(bc.x), "y": str(bc.y), "sci": str(bc.sci)},
            "sci_min": str(SCI_MIN),
            "sci_max": str(SCI_MAX),
            "y_min": str(Y_MIN),
            "y_max": str(bc.y),
        }
    )
    return EXIT_OK


def _cmd_geo_hunt(args: argparse.Namespace, cfg: RunConfig) -> int:
    values = args.t or list(HUNT_SCAN)
    rows = []
    for raw in values:
        t = Fraction(raw)
        f, pt = hunt_scan(args.s, t)
        rows.append(
            {
                "t": str(t),
                "F": str(f),
                "sci": str(pt.sci),
                "positive_index": pt.sci > 0,
            }
        )
    _emit({"s": args.s, "points": rows})
    return EXIT_OK


# ---------------------------------------------------------------------------
# classify


def solutions_to_md(solutions) -> str:
    """Markdown tables: catalogued rows first, everything else after."""
    main = [x for x in solutions if x.status == classify.MAIN]
    rest = [x for x in solutions if x.status != classify.MAIN]
    lines = ["| m | weights | d | k | p |", "|---|---|---|---|---|"]
    lines += [_md_row(sol, False) for sol in main]
    if rest:
        lines += [
            "",
            "supplementary:",
            "",
            "| m | weights | d | k | p | status | note |",
            "|---|---|---|---|---|---|---|",
        ]
        lines += [_md_row(sol, True) for sol in rest]
    return "\n".join(lines)


def _md_row(sol, with_status: bool) -> str:
    d = "(" + ",".join(str(v) for v in sol.d[1:]) + ")"
    cells = [str(sol.m), str(sol.weights), d, str(sol.k), str(sol.p_m)]
    if with_status:
        cells += [sol.status, sol.note]
    return "| " + " | ".join(cells) + " |"


def md_to_solutions(text: str) -> list:
    """Inverse of :func:`solutions_to_md`; derived fields are recomputed."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line.startswith("|"):
            continue
        cells = [c.strip() for c in line.strip("|").split("|")]
        if cells[0] == "m" or set(cells[0]) <= {"-"}:
            continue
        m = int(cells[0])
        weights = Weights(int(t) for t in cells[1].strip("()").split(","))
        d = (0,) + tuple(int(t) for t in cells[2].strip("()").split(","))
        status, note = (cells[5], cells[6]) if len(cells) >= 7 else (classify.MAIN, "")
        s = len(d).bit_length() - 1
        branch = BranchData(s, d)
        l = eigensheaf_degrees(branch).l
        out.append(
            classify.AdmissibleSolution(
                weights=weights,
                s=s,
                m=m,
                k=int(cells[3]),
                d=d,
                l=l,
                D=branch.total,
                p_m=int(cells[4]),
                flat=all(v % weights.L == 0 for v in l),
                status=status,
                note=note,
            )
        )
    out.sort(key=classify.AdmissibleSolution.sort_key)
    return out


def families_to_md(families) -> str:
    lines = [
        "| m | weights | degree | k | window | status |",
        "|---|---|---|---|---|---|",
    ]
    for fam in families:
        L, W = fam.weights.L, fam.weights.W
        offset = fam.m * W // L
        coeff = "t" if fam.m == 1 else f"{fam.m}t"
        window = (
            f"t >= {fam.t_min}"
            if fam.t_sup is None
            else f"{fam.t_min} <= t < {fam.t_sup}"
        )
        cells = [
            str(fam.m),
            str(fam.weights),
            f"{fam.degree_coefficient}t",
            f"{coeff} - {offset}",
            window,
            fam.status,
        ]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines)


def _solution_payload(sol) -> dict:
    return {
        "weights": list(sol.weights),
        "s": sol.s,
        "m": sol.m,
        "k": sol.k,
        "d": list(sol.d),
        "l": list(sol.l),
        "D": sol.D,
        "p": sol.p_m,
        "flat": sol.flat,
        "status": sol.status,
        "note": sol.note,
    }


def _family_payload(fam) -> dict:
    return {
        "weights": list(fam.weights),
        "m": fam.m,
        "degree_coefficient": fam.degree_coefficient,
        "t_min": fam.t_min,
        "t_sup": fam.t_sup,
        "status": fam.status,
        "note": fam.note,
    }


def _cmd_classify(args: argparse.Namespace, cfg: RunConfig) -> int:
    if cfg.bounds_report:
        print(classify.bounds_report(args.s, args.m), file=sys.stderr)
    if args.s == 1:
        families = classify.enumerate_s1(args.m, t_max=cfg.t_max)
        if cfg.fmt == "md":
            print(families_to_md(families))
        elif cfg.fmt == "csv":
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(["m", "weights", "degree", "t_min", "t_sup", "status", "note"])
            for fam in families:
                writer.writerow(
                    [
                        fam.m,
                        str(fam.weights),
                        f"{fam.degree_coefficient}t",
                        fam.t_min,
                        "" if fam.t_sup is None else fam.t_sup,
                        fam.status,
                        fam.note,
                    ]
                )
        else:
            _emit({"s": 1, "m": args.m, "families": [_family_payload(f) for f in families]})
        return EXIT_OK
    sols = []
    if args.base in ("all", "flat"):
        sols.extend(classify.enumerate_flat(args.s, args.m))
    if args.base in ("all", "projective"):
        sols.extend(classify.enumerate_L1(args.s, args.m))
    sols.sort(key=classify.AdmissibleSolution.sort_key)
    if cfg.fmt == "md":
        print(solutions_to_md(sols))
    elif cfg.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["m", "weights", "d", "k", "p", "status", "note"])
        for sol in sols:
            writer.writerow(
                [
                    sol.m,
                    str(sol.weights),
                    "(" + ",".join(str(v) for v in sol.d[1:]) + ")",
                    sol.k,
                    sol.p_m,
                    sol.status,
                    sol.note,
                ]
            )
    else:
        _emit({"s": args.s, "m": args.m, "solutions": [_solution_payload(x) for x in sols]})
    return EXIT_OK


# ---------------------------------------------------------------------------
# deform / examples


def _cmd_deform_check(args: argparse.Namespace, cfg: RunConfig) -> int:
    rep = moduli.deformation_criteria(from_path(args.path))
    _emit(
        {
            "ok": rep.ok,
            "pairwise_ok": rep.pairwise_ok,
            "failing_pairs": [list(pair) for pair in rep.failing_pairs],
            "total_degree_ok": rep.total_degree_ok,
            "weights_coprime": rep.weights_coprime,
            "genericity_assumed": rep.genericity_assumed,
            "messages": list(rep.messages),
        }
    )
    return EXIT_OK if rep.ok else EXIT_INVALID


def _cmd_examples_new_component(args: argparse.Namespace, cfg: RunConfig) -> int:
    spec = moduli.gen_new_component(args.M)
    l = eigensheaf_degrees(spec.branch).l
    rep = moduli.deformation_criteria(spec)
    _emit(
        {
            "weights": list(spec.weights),
            "s": spec.branch.s,
            "d": list(spec.branch.d),
            "l_values": sorted(set(l[1:])),
            "flat": is_flat(spec),
            "deformation_ok": rep.ok,
            "cover": json.loads(to_json(spec)),
        }
    )
    return EXIT_OK


def _cmd_examples_unbounded(args: argparse.Namespace, cfg: RunConfig) -> int:
    fam = moduli.gen_unbounded(args.s, args.kind)
    _emit(
        {
            "kind": fam.kind,
            "s": fam.s,
            "m": fam.m,
            "weights": list(fam.weights),
            "height": fam.height,
            "L": fam.L,
            "M": fam.M,
            "k": 1,
            "l_on": fam.l_on,
            "l_off": fam.l_off,
            "total_degree": fam.total,
            "flat": fam.flat,
            "p_m": fam.p_m,
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# selftest


def _cmd_selftest_fourier(args: argparse.Namespace, cfg: RunConfig) -> int:
    failures = 0
    for s in range(2, 9):
        n = 1 << s
        rng = random.Random(f"{cfg.seed}:{s}")
        for _ in range(args.rounds):
            d = [rng.randint(-20, 20) for _ in range(n)]
            hat = walsh.forward(d)
            ok = (
                walsh.inverse(hat) == list(d)
                and sum(hat) == n * d[0]
                and sum(v * v for v in hat) == n * sum(v * v for v in d)
            )
            if ok and s <= 5:
                e = [rng.randint(-9, 9) for _ in range(n)]
                conv = [sum(d[g] * e[g ^ h] for g in range(n)) for h in range(n)]
                ok = walsh.forward(conv) == [u * v for u, v in zip(hat, walsh.forward(e))]
            if not ok:
                failures += 1
        print(f"s={s}: {args.rounds} functions ok" if not failures else f"s={s}: FAILED")
        if failures:
            break
    if failures:
        print(f"fourier selftest failed (seed {cfg.seed})")
        return EXIT_INVALID
    print(f"fourier selftest passed (seed {cfg.seed})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2cover",
        description="exact invariants and classification of (Z/2)^s covers of weighted P^3",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help=f"worker threads (default: ${THREADS_ENV} or 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cover = sub.add_parser("cover", help="validate a cover file or compute its invariants")
    cover_sub = cover.add_subparsers(dest="action", required=True)
    p = cover_sub.add_parser("check", help="structural validation report")
    p.add_argument("path")
    p.set_defaults(func=_cmd_cover_check)
    p = cover_sub.add_parser("invariants", help="K^3, chi(O), e(X), geography ratios")
    p.add_argument("path")
    p.set_defaults(func=_cmd_cover_invariants)

    geo = sub.add_parser("geography", help="Chern-ratio geography of the branch simplex")
    geo_sub = geo.add_subparsers(dest="action", required=True)
    p = geo_sub.add_parser("sample", help="random rational simplex points")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_geo_sample)
    p = geo_sub.add_parser("extremes", help="vertex and barycenter coordinates with bounds")
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_geo_extremes)
    p = geo_sub.add_parser("hunt", help="positive-index points on the triple-free family")
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--t", action="append", help="mass at the base point, e.g. 3/5 (repeatable)")
    p.set_defaults(func=_cmd_geo_hunt)

    p = sub.add_parser("classify", help="exhaustive admissible covers for one (s, m)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--base", choices=("all", "flat", "projective"), default="all")
    p.add_argument("--format", dest="fmt", choices=("json", "md", "csv"), default="json")
    p.add_argument("--t-max", dest="t_max", type=int, default=None)
    p.add_argument("--bounds-report", dest="bounds_report", action="store_true")
    p.set_defaults(func=_cmd_classify)

    deform = sub.add_parser("deform", help="deformation-rigidity criteria")
    deform_sub = deform.add_subparsers(dest="action", required=True)
    p = deform_sub.add_parser("check")
    p.add_argument("path")
    p.set_defaults(func=_cmd_deform_check)

    examples = sub.add_parser("examples", help="generated families")
    examples_sub = examples.add_subparsers(dest="action", required=True)
    p = examples_sub.add_parser("new-component", help="rigid non-flat cover of P(1,1,1,M)")
    p.add_argument("--M", type=int, required=True)
    p.set_defaults(func=_cmd_examples_new_component)
    p = examples_sub.add_parser("unbounded", help="pluricanonical family member at rank s")
    p.add_argument("--kind", choices=("canonical", "bicanonical"), required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_examples_unbounded)

    selftest = sub.add_parser("selftest", help="property suites")
    selftest_sub = selftest.add_subparsers(dest="action", required=True)
    p = selftest_sub.add_parser("fourier")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=60)
    p.set_defaults(func=_cmd_selftest_fourier)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.func(args, cfg)
    except NonIntegralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (CoverSpecError, json.JSONDecodeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
