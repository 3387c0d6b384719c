"""Command-line entry point: ``python cli.py <command> [options]``."""

import argparse
import logging
import os
import sys
from typing import List, Optional

from arith.class_numbers import class_number_table
from arith.cusps import t_fixed_count_h2
from arith.formulas import e3_h11, predicted_orbit_size
from arith.orbifold import e2_square, orbifold_sets
from arith.quadrics import cusp_equation_shape
from orbits.census import (
    curve_invariants,
    cusp_census,
    cycle_census,
    genus_lower_bound,
    word_census,
)
from orbits.graph import build_graph
from orbits.orbit import Orbit, enumerate_stratum
from surfaces.origami import (
    Origami,
    canonical_form,
    cusp_data,
    hlk_invariant,
    is_primitive,
    monodromy_class,
    stratum_and_genus,
)
from surfaces.sl2z import parse_words
from utils.cache import cache_key, cache_path, cached_orbit, save_orbit
from utils.config import RunConfig, build_config
from utils.errors import OrigamiError
from utils.export import census_json, census_to_csv, dumps, export_graph
from utils.logging_setup import configure_logging
from utils.parsing import StratumChoice, parse_seed, parse_stratum
from verification.suites import FAIL, run_suite

logger = logging.getLogger("cli")

SUITE_NAMES = ("h2", "prym4", "prym6", "h11", "h4", "all")
ARITH_TABLES = ("class-numbers", "h3", "h2sq", "t-fixed", "sizes", "e3", "shapes")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--stratum", default="H2", help="H2, H11, H4, H4prym, H6prym, H(3,1), ...")
    parser.add_argument("--n", type=int, help="number of squares")
    parser.add_argument("--seed", help='origami "(2,3),(1,2,3)" or H(2) parameters "(1,1,0,2,2,0)"')
    parser.add_argument("--generators", choices=("parabolic", "elliptic"), default="parabolic")
    parser.add_argument("--orbit-index", type=int, default=0, help="which orbit when no seed is given")
    parser.add_argument("--brute-cap", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--cache-dir", default=None, help="defaults to ORIGAMI_CACHE_DIR")
    parser.add_argument("--out", help="output file (stdout when omitted)")


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="origami-orbits",
        description="SL(2,Z)-orbits of square-tiled surfaces and their invariants.",
    )
    parser.add_argument("--log-level", default=None, help="defaults to ORIGAMI_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    orbit = sub.add_parser("orbit", help="enumerate and cache orbits")
    _add_common(orbit)

    graph = sub.add_parser("graph", help="export an orbit graph")
    _add_common(graph)
    graph.add_argument("--format", choices=("dot", "json", "csv"), default="dot")
    graph.add_argument("--dot", help="write DOT to this path")

    census = sub.add_parser("census", help="word, cusp and cycle census")
    _add_common(census)
    census.add_argument("--max-word-len", type=int)
    census.add_argument("--format", choices=("csv", "json"), default="csv")
    census.add_argument("--girth-target", type=int, choices=(5, 13), default=5)
    census.add_argument("--words", help="comma-separated words to census as written, e.g. \"ST,(TS)^-1ST\"")

    invariants = sub.add_parser("invariants", help="HLK, monodromy and curve invariants")
    _add_common(invariants)

    arith = sub.add_parser("arith", help="arithmetic tables")
    arith.add_argument("--table", choices=ARITH_TABLES, required=True)
    arith.add_argument("--D", type=int, help="discriminant (h3) or limit (class-numbers)")
    arith.add_argument("--n", type=int)
    arith.add_argument("--d", type=int)
    arith.add_argument("--width", type=int, default=1)
    arith.add_argument("--epsilon", type=int, choices=(0, 1), default=0)
    arith.add_argument("--genus", type=int)
    arith.add_argument("--zeros", type=int, help="number of distinct zeros")
    arith.add_argument("--out")

    verify = sub.add_parser("verify", help="run acceptance suites")
    verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--slow", action="store_true")
    verify.add_argument("--brute-cap", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--max-word-len", type=int)
    return parser.parse_args(argv)


def _write(text: str, path: Optional[str]) -> None:
    if path:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        logger.info("wrote %s", path)
    else:
        sys.stdout.write(text)


def _config(args: argparse.Namespace) -> RunConfig:
    return build_config(
        command=args.command,
        stratum=getattr(args, "stratum", None),
        n=getattr(args, "n", None),
        d=getattr(args, "d", None),
        seed=getattr(args, "seed", None),
        orbit_index=getattr(args, "orbit_index", None),
        max_n=getattr(args, "max_n", None),
        out=getattr(args, "out", None),
        dot_out=getattr(args, "dot", None),
        cache_dir=getattr(args, "cache_dir", None),
        brute_cap=getattr(args, "brute_cap", None),
        workers=getattr(args, "workers", None),
        max_word_len=getattr(args, "max_word_len", None),
        generators=getattr(args, "generators", None),
        slow=getattr(args, "slow", None),
    )


def _check_seed(seed: Origami, choice: StratumChoice, n: Optional[int]) -> None:
    if n is not None and seed.n != n:
        raise OrigamiError(f"seed has {seed.n} squares, --n asks for {n}")
    found = stratum_and_genus(seed)
    if found.zero_orders != choice.signature.zero_orders:
        raise OrigamiError(f"seed lies in {found}, not {choice.signature}")


def _orbits(config: RunConfig) -> List[Orbit]:
    """The seed's orbit, or every orbit of the stratum when no seed is given."""
    choice = parse_stratum(config.stratum)
    if config.seed:
        seed = parse_seed(config.seed)
        _check_seed(seed, choice, config.n)
        orbit, _ = cached_orbit(seed, config.generators, config.cache_dir, config.workers)
        return [orbit]
    if config.n is None:
        raise OrigamiError("give --n or --seed")
    mode = "seeded" if choice.signature.zero_orders == (2,) and config.n > config.brute_cap else "brute"
    orbits = enumerate_stratum(
        config.n,
        choice.signature,
        mode=mode,
        brute_cap=config.brute_cap,
        generators=config.generators,
        workers=config.workers,
        involution=choice.involution,
        progress=config.progress,
    )
    if not orbits:
        raise OrigamiError(f"no primitive orbits in {choice} with n={config.n}")
    return orbits


def _pick(config: RunConfig) -> Orbit:
    orbits = _orbits(config)
    if not 0 <= config.orbit_index < len(orbits):
        raise OrigamiError(f"orbit index {config.orbit_index} out of range 0..{len(orbits) - 1}")
    return orbits[config.orbit_index]


def cmd_orbit(args: argparse.Namespace, config: RunConfig) -> int:
    orbits = _orbits(config)
    rows = []
    for orbit in orbits:
        if config.seed:
            digest = canonical_form(parse_seed(config.seed)).digest
            path = cache_path(config.cache_dir, cache_key(str(orbit.stratum), orbit.n, orbit.generators, digest))
        else:
            path = save_orbit(orbit, config.cache_dir, orbit.members[0].digest)
        rows.append({"label": orbit.label, "size": len(orbit), "stratum": str(orbit.stratum), "cache": path})
    _write(dumps({"orbits": rows}), config.out)
    return 0


def cmd_graph(args: argparse.Namespace, config: RunConfig) -> int:
    orbit = _pick(config)
    if config.dot_out:
        _write(export_graph(orbit, "dot"), config.dot_out)
    if config.out or not config.dot_out:
        _write(export_graph(orbit, args.format), config.out)
    return 0


def cmd_census(args: argparse.Namespace, config: RunConfig) -> int:
    orbit = _pick(config)
    words = parse_words(args.words.split(",")) if args.words else None
    census = word_census(orbit, config.max_word_len, alphabet=config.generators, words=words)
    census.cusps = cusp_census(orbit).cusps
    if args.girth_target == 13:
        census.cycles = curve_invariants(orbit).faces
    else:
        census.cycles = cycle_census(build_graph(orbit), args.girth_target - 1)
    bound = genus_lower_bound(len(orbit), census.cycles, girth_target=args.girth_target)
    logger.info("genus lower bound from short cycles: %d", bound)
    if args.format == "json":
        _write(dumps(dict(census_json(census), genus_lower_bound=bound)), config.out)
    else:
        _write(census_to_csv(census, orbit.label or ""), config.out)
    return 0


def cmd_invariants(args: argparse.Namespace, config: RunConfig) -> int:
    orbit = _pick(config)
    X = orbit.origami(0)
    mono = monodromy_class(X)
    payload = {
        "origami": str(X),
        "digest": canonical_form(X).digest,
        "stratum": str(stratum_and_genus(X)),
        "genus": stratum_and_genus(X).genus,
        "primitive": is_primitive(X),
        "monodromy": {"kind": mono.kind, "order": mono.order},
        "orbit": {"label": orbit.label, "size": len(orbit)},
        "cusp_width": cusp_data(X).width,
    }
    try:
        hlk = hlk_invariant(X)
        payload["hlk"] = {
            "label": hlk.label,
            "ordered_triple": list(hlk.ordered_triple),
            "fixed_cone_points": hlk.fixed_cone_points,
        }
    except OrigamiError as e:
        payload["hlk"] = {"error": f"{type(e).__name__}: {e}"}
    try:
        curve = curve_invariants(orbit)
        payload["curve"] = curve.to_json()
        payload["curve"]["genus_lower_bound_13"] = genus_lower_bound(curve.V, curve.faces, girth_target=13)
    except OrigamiError as e:
        payload["curve"] = {"error": f"{type(e).__name__}: {e}"}
    _write(dumps(payload), config.out)
    return 0


def _need(value: Optional[int], flag: str) -> int:
    if value is None:
        raise OrigamiError(f"this table needs {flag}")
    return value


def cmd_arith(args: argparse.Namespace, config: RunConfig) -> int:
    table = args.table
    if table == "class-numbers":
        limit = _need(args.D, "--D")
        payload = {
            "rows": [
                {"D": r.D, "h": r.h, "units": r.unit_count, "h_reduced": str(r.h_reduced)}
                for r in class_number_table(limit)
            ]
        }
    elif table == "h3":
        result = orbifold_sets(_need(args.D, "--D"), "H3")
        payload = {"D": result.D, "count": result.count, "triples": sorted(list(t) for t in result.triples)}
    elif table == "h2sq":
        n = _need(config.n, "--n")
        result = orbifold_sets(n * n, "H2sq")
        payload = {"n": n, "count": result.count, "e2": str(e2_square(n))}
    elif table == "t-fixed":
        count = t_fixed_count_h2(_need(config.n, "--n"), args.width)
        payload = {
            "n": count.n,
            "width": count.width,
            "count": count.count,
            "by_label": count.by_label,
            "params": [list(p) for p in count.params],
        }
    elif table == "sizes":
        n = _need(config.n, "--n")
        sizes = {}
        for family in ("H2_A", "H2_B", "Zmiaikou_Alt", "Zmiaikou_Sym"):
            try:
                sizes[family] = predicted_orbit_size(family, n=n)
            except OrigamiError as e:
                sizes[family] = f"{type(e).__name__}: {e}"
        payload = {"n": n, "sizes": sizes}
    elif table == "e3":
        d, n = _need(config.d, "--d"), _need(config.n, "--n")
        payload = {"d": d, "n": n, "epsilon": args.epsilon, "e3": str(e3_h11(d, n, args.epsilon))}
    else:
        genus = _need(args.genus, "--genus")
        zeros = _need(args.zeros, "--zeros")
        payload = {
            "genus": genus,
            "zeros": zeros,
            "shapes": {c: list(cusp_equation_shape(genus, zeros, c)) for c in range(2, genus + zeros)},
        }
    _write(dumps(payload), config.out)
    return 0


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    rows = run_suite(args.suite, config, config.max_n)
    for row in rows:
        print(row)
    failed = [r for r in rows if r.status == FAIL]
    print(f"{len(rows) - len(failed)} of {len(rows)} checks without failure")
    return 1 if failed else 0


COMMANDS = {
    "orbit": cmd_orbit,
    "graph": cmd_graph,
    "census": cmd_census,
    "invariants": cmd_invariants,
    "arith": cmd_arith,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(argv)
    configure_logging(args.log_level)
    try:
        config = _config(args)
        return COMMANDS[args.command](args, config)
    except OrigamiError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
