"""Command-line front end: ``poset-cohom <command> ...``.

Exit codes: 0 success, 2 unreadable input, 3 input that is not a valid
poset/space or names an unknown element, 4 verification or oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .apps import ext_dims, finite_space_cohomology, hochschild_dims, specialization_poset
from .documents import PosetDocument, SpaceDocument, random_poset
from .errors import DomainError, ParseError, UnknownElementError
from .exactla import FieldSpec
from .fixtures import FIXTURES
from .oracle import order_complex, simplicial_cohomology_dims
from .resolution import compute_cycles, expand_complex, verify_resolution

EXIT_PARSE, EXIT_DOMAIN, EXIT_VERIFY = 2, 3, 4


class VerificationFailed(Exception):
    pass


# --------------------------------------------------------------------------
# input helpers


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_poset(args):
    if args.fixture:
        if args.fixture not in FIXTURES:
            raise ParseError(f"unknown fixture {args.fixture!r}; choose from {', '.join(FIXTURES)}")
        return FIXTURES[args.fixture](), args.fixture
    if args.input is None:
        raise ParseError("give an input file (or '-' for stdin) or --fixture")
    doc = PosetDocument.parse(_read(args.input))
    return doc.to_poset(), doc.name or args.input


def _element(p, token: str):
    for e in p.elements:
        if str(e) == token:
            return e
    raise UnknownElementError(f"unknown element {token!r}")


def _scalar(a):
    return str(a) if isinstance(a, Fraction) else a


def _fmt_dims(dims) -> str:
    return "(" + ", ".join(map(str, dims)) + ")"


def _emit(args, doc: dict, text_lines: list[str]):
    if args.json:
        print(json.dumps(doc, indent=2, default=str))
    else:
        print("\n".join(text_lines))


# --------------------------------------------------------------------------
# commands


def cmd_resolution(args) -> int:
    p, name = _load_poset(args)
    x = _element(p, args.base)
    t0 = time.perf_counter()
    r = compute_cycles(p, x, args.field)
    bt = r.betti()
    elapsed = time.perf_counter() - t0

    table = {str(b): list(bt.column(b)) for b in p.topological_order if any(bt.column(b))}
    doc = {
        "command": "resolution",
        "input": name,
        "field": str(args.field),
        "base": x,
        "result": {"level_sizes": list(r.level_sizes()), "betti": table, "terminated": r.terminated},
        "timing": {"compute_seconds": elapsed},
    }
    lines = [f"resolution of S_{x} over {args.field}  ({name})",
             f"level sizes: {_fmt_dims(r.level_sizes())}",
             "betti |B^i_b| (rows b, columns i):"]
    width = max((len(k) for k in table), default=1)
    for b, col in table.items():
        lines.append(f"  {b:>{width}} : " + " ".join(f"{n:3d}" for n in col))

    if args.emit_cycles:
        doc["cycles"] = [
            [{"vertex": c.vertex, "coeffs": [_scalar(a) for a in c.coeffs]} for c in lv.cycles]
            for lv in r.levels
        ]
        for lv in r.levels[1:]:
            lines.append(f"level {lv.level}:")
            for c in lv.cycles:
                lines.append(f"  ({[_scalar(a) for a in c.coeffs]}, {c.vertex})")

    failed = False
    if args.verify:
        rep = verify_resolution(expand_complex(r))
        doc["verification"] = rep.as_dict()
        lines.append("verification: " + ", ".join(f"{k}={v}" for k, v in rep.as_dict().items()))
        failed = not rep
    _emit(args, doc, lines)
    return EXIT_VERIFY if failed else 0


def cmd_ext(args) -> int:
    p, name = _load_poset(args)
    x, b = _element(p, args.base), _element(p, args.target)
    t0 = time.perf_counter()
    table = ext_dims(p, x, b, args.field)
    elapsed = time.perf_counter() - t0
    dims = table.trimmed()
    doc = {
        "command": "ext",
        "input": name,
        "field": str(args.field),
        "base": x,
        "target": b,
        "result": {"ext_dims": list(dims)},
        "timing": {"compute_seconds": elapsed},
    }
    _emit(args, doc, [f"dim Ext^i(S_{x}, S_{b}) over {args.field}: {_fmt_dims(dims)}"])
    return 0


def cmd_hh(args) -> int:
    p, name = _load_poset(args)
    t0 = time.perf_counter()
    hh = hochschild_dims(p, args.field)
    elapsed = time.perf_counter() - t0
    doc = {
        "command": "hh",
        "input": name,
        "field": str(args.field),
        "result": {"hh_dims": list(hh.dims), "vanishes_above": hh.max_degree},
        "timing": {"compute_seconds": elapsed},
    }
    lines = [f"dim HH^i over {args.field} ({name}): {_fmt_dims(hh.dims)}  (zero above degree {hh.max_degree})"]
    failed = False
    if args.oracle:
        t0 = time.perf_counter()
        oracle = simplicial_cohomology_dims(order_complex(p), args.field)
        doc["timing"]["oracle_seconds"] = time.perf_counter() - t0
        n = max(len(oracle), len(hh.dims))
        match = list(hh.padded(n)) == oracle + [0] * (n - len(oracle))
        doc["verification"] = {"oracle_dims": oracle, "oracle_match": match}
        lines.append(f"order-complex cohomology: {_fmt_dims(oracle)}  -> {'match' if match else 'MISMATCH'}")
        failed = not match
    _emit(args, doc, lines)
    return EXIT_VERIFY if failed else 0


def cmd_space(args) -> int:
    space = SpaceDocument.from_json(_read(args.input)).to_space()
    t0 = time.perf_counter()
    dims = finite_space_cohomology(space, args.field)
    elapsed = time.perf_counter() - t0
    poset = specialization_poset(space)
    doc = {
        "command": "space",
        "input": args.input,
        "field": str(args.field),
        "result": {"cohomology_dims": list(dims), "specialization_covers": sorted(map(list, poset.covers), key=str)},
        "timing": {"compute_seconds": elapsed},
    }
    _emit(args, doc, [f"dim H^n(X; {args.field}): {_fmt_dims(dims)}"])
    return 0


def cmd_random_poset(args) -> int:
    try:
        doc = random_poset(args.n, args.p, args.seed)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    print(doc.to_json() if args.format == "json" else doc.to_text(), end="" if args.format == "text" else "\n")
    return 0


def _bench_one(task):
    index, n, p, seed, field = task
    poset = random_poset(n, p, seed).to_poset()
    t0 = time.perf_counter()
    hh = hochschild_dims(poset, field)
    return index, p, seed, list(hh.dims), time.perf_counter() - t0


def bench_stream(count: int, n: int, seed: int, p_min: float = 0.0, p_max: float = 1.0):
    """The deterministic (index, n, p, seed) stream the bench runs over."""
    rng = random.Random(seed)
    for k in range(count):
        yield k, n, rng.uniform(p_min, p_max), rng.randrange(2**32)


def run_bench(count: int, n: int, seed: int, field: FieldSpec, p_min: float = 0.0, p_max: float = 1.0,
              workers: int | None = None) -> dict:
    if workers is None:
        workers = max(1, int(os.environ.get("POSET_COHOM_THREADS", "1")))
    tasks = [t + (field,) for t in bench_stream(count, n, seed, p_min, p_max)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_bench_one, tasks))
    else:
        results = [_bench_one(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    times = [r[4] for r in results]
    slow = max(results, key=lambda r: r[4]) if results else None
    return {
        "command": "bench",
        "field": str(field),
        "count": count,
        "n": n,
        "seed": seed,
        "instances": [{"index": k, "p": p, "seed": s, "hh_dims": d} for k, p, s, d, _ in results],
        "timing": {
            "max_seconds": max(times, default=0.0),
            "mean_seconds": statistics.mean(times) if times else 0.0,
            "median_seconds": statistics.median(times) if times else 0.0,
            "per_instance_seconds": times,
            "slowest_index": slow[0] if slow else None,
            "slowest_hh_dims": slow[3] if slow else None,
            "workers": workers,
        },
    }


def cmd_bench(args) -> int:
    if args.count < 0 or args.n < 1 or not 0 <= args.p_min <= args.p_max <= 1:
        raise ParseError("bench needs count >= 0, n >= 1 and 0 <= p-min <= p-max <= 1")
    doc = run_bench(args.count, args.n, args.seed, args.field, args.p_min, args.p_max)
    t = doc["timing"]
    lines = [
        f"{args.count} random posets on {args.n} points over {args.field} (seed {args.seed})",
        f"max time:    {t['max_seconds']:.3f} s",
        f"mean time:   {t['mean_seconds']:.3f} s",
        f"median time: {t['median_seconds']:.3f} s",
    ]
    if t["slowest_hh_dims"] is not None:
        lines.append(f"dim HH^i of the slowest instance: {_fmt_dims(t['slowest_hh_dims'])}")
    _emit(args, doc, lines)
    return 0


# --------------------------------------------------------------------------
# parser


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poset-cohom",
        description="Minimal projective resolutions, Ext and Hochschild cohomology of incidence algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, poset_input=True):
        if poset_input:
            sp.add_argument("input", nargs="?", help="poset file (JSON or 'a < b' lines); '-' for stdin")
            sp.add_argument("--fixture", help=f"use a built-in poset: {', '.join(FIXTURES)}")
        sp.add_argument("--field", type=_field, default=FieldSpec(0), help="'q' (default) or 'gf:p'")
        sp.add_argument("--json", action="store_true", help="print a JSON result document")

    sp = sub.add_parser("resolution", help="cycle counts of the minimal resolution of S_x")
    common(sp)
    sp.add_argument("-x", "--base", required=True)
    sp.add_argument("--verify", action="store_true", help="check exactness and minimality on the expanded complex")
    sp.add_argument("--emit-cycles", action="store_true")
    sp.set_defaults(func=cmd_resolution)

    sp = sub.add_parser("ext", help="dim Ext^i(S_x, S_b)")
    common(sp)
    sp.add_argument("-x", "--base", required=True)
    sp.add_argument("-b", "--target", required=True)
    sp.set_defaults(func=cmd_ext)

    sp = sub.add_parser("hh", help="Hochschild cohomology dimensions")
    common(sp)
    sp.add_argument("--oracle", action="store_true", help="compare with order-complex cohomology")
    sp.set_defaults(func=cmd_hh)

    sp = sub.add_parser("space", help="cohomology of a finite T0 space")
    sp.add_argument("input", help="space JSON document; '-' for stdin")
    common(sp, poset_input=False)
    sp.set_defaults(func=cmd_space)

    sp = sub.add_parser("random-poset", help="print a seeded random poset")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-p", type=float, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_random_poset)

    sp = sub.add_parser("bench", help="time HH over seeded random posets")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("-n", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--p-min", type=float, default=0.0)
    sp.add_argument("--p-max", type=float, default=1.0)
    common(sp, poset_input=False)
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
