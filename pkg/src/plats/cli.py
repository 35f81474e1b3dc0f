"""Command-line interface wiring all modules together.

One binary with subcommands; input grids come from plat-format files or
standard input ('-').  Output is line oriented and exact; lines starting
with '#' are human commentary and are suppressed by --machine.  Exit
status: 0 success, 1 domain error (the error class name is printed), 2
usage error.
"""

from __future__ import annotations

import argparse
import sys

from .braid import from_braid_word, parse_braid, serialize_braid, to_braid_word
from .canonical import Verdict, canonicalize, decide_equivalence
from .census import CensusSpec, count_orbits, dedupe, genericity_ratio, sample
from .errors import PlatError
from .grid import (
    PlatGrid,
    TwistRegionId,
    bridge_distance,
    component_count,
    format_plat,
    hypothesis_report,
    is_c_highly_twisted,
    parse_plat,
    twist_region_count,
    validate,
)
from .knotcodes import fingerprint, gauss_code, to_pd_code
from .spheres import (
    Corner,
    check_sphere,
    classify_region,
    corner_fraction,
    enumerate_vertical_spheres,
    isolating_sphere_for,
)
from .svgrender import render_svg


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_grid(path: str) -> PlatGrid:
    grid = parse_plat(_read_text(path))
    result = validate(grid)
    if not result.ok:
        from .errors import InvalidGrid

        raise InvalidGrid(result.violations)
    return grid


def _positions(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.replace(",", " ").split())


class _Printer:
    def __init__(self, machine: bool):
        self.machine = machine

    def line(self, text: str = "") -> None:
        print(text)

    def note(self, text: str) -> None:
        if not self.machine:
            print(f"# {text}")


def _cmd_validate(args, out: _Printer) -> int:
    grid = parse_plat(_read_text(args.file))
    result = validate(grid)
    if result.ok:
        out.line(f"valid m={grid.width} n={grid.length} closure={grid.closure.value}")
        return 0
    for violation in result.violations:
        out.line(f"{violation.kind}: {violation.message}")
    return 1


def _cmd_braid(args, out: _Printer) -> int:
    if args.to_grid:
        word = parse_braid(_read_text(args.file), strands=args.strands)
        grid = from_braid_word(word, n=args.length)
        out.line(format_plat(grid).rstrip("\n"))
    else:
        grid = _load_grid(args.file)
        out.line(serialize_braid(to_braid_word(grid)))
    return 0


def _cmd_canon(args, out: _Printer) -> int:
    form = canonicalize(_load_grid(args.file))
    out.line(format_plat(form.grid).rstrip("\n"))
    out.note(f"realized-by: {form.realized_by.value}")
    out.note(f"orbit-size: {form.orbit_size}")
    return 0


def _cmd_eq(args, out: _Printer) -> int:
    verdict = decide_equivalence(_load_grid(args.file1), _load_grid(args.file2))
    out.line(verdict.kind.value)
    if verdict.kind is Verdict.HYPOTHESES_NOT_MET and verdict.reports is not None:
        for tag, report in zip(("grid1", "grid2"), verdict.reports):
            out.line(
                f"{tag} width_ok={str(report.width_ok).lower()}"
                f" twist_ok={str(report.twist_ok).lower()}"
                f" length_ok={str(report.length_ok).lower()}"
                f" distance={report.distance if report.distance is not None else 'none'}"
            )
    return 0


def _cmd_distance(args, out: _Printer) -> int:
    grid = _load_grid(args.file)
    distance = bridge_distance(grid)
    out.line(str(distance))
    report = hypothesis_report(grid)
    bound = 4 * grid.width * (grid.width - 2)
    if not report.length_ok:
        out.note(
            f"length {grid.length} <= {bound} = 4m(m-2): "
            "the diagram-uniqueness hypothesis fails"
        )
    else:
        out.note(f"length {grid.length} > {bound} = 4m(m-2): unique bridge sphere")
    return 0


def _cmd_spheres(args, out: _Printer) -> int:
    grid = _load_grid(args.file)
    if args.classify:
        region = TwistRegionId(args.classify[0], args.classify[1])
        out.line(classify_region(grid, region).value)
    elif args.isolate:
        region = TwistRegionId(args.isolate[0], args.isolate[1])
        pair = isolating_sphere_for(grid, region)
        out.line(f"s1 {pair.s1.kind.value} " + " ".join(map(str, pair.s1.positions)))
        out.line(f"s2 {pair.s2.kind.value} " + " ".join(map(str, pair.s2.positions)))
    elif args.check:
        spec = check_sphere(grid, _positions(args.check))
        out.line(spec.kind.value)
    elif args.corner:
        value = corner_fraction(grid, Corner(args.corner))
        out.line(f"{value.numerator}/{value.denominator}")
    elif args.list:
        for spec in enumerate_vertical_spheres(grid):
            out.line(" ".join(map(str, spec.positions)))
    else:
        out.line(str(len(enumerate_vertical_spheres(grid))))
    return 0


def _cmd_census(args, out: _Printer) -> int:
    spec = CensusSpec(
        width=args.m,
        length=args.n,
        coefficient_set=_positions(args.coeffs),
        c_min=args.cmin,
        seed=args.seed,
    )
    report = count_orbits(spec)
    out.line(f"total {report.total_grids}")
    for element, value in report.fixed_counts.items():
        out.line(f"fixed {element.value} {value}")
    out.line(f"orbits {report.orbit_count}")
    if args.rho:
        ratio = genericity_ratio(args.rho, sum(spec.row_widths()))
        out.line(f"rho[{args.rho}] {ratio.numerator}/{ratio.denominator}")
    if args.sample_k:
        grids = sample(spec, args.sample_k)
        if args.cmin:
            assert all(is_c_highly_twisted(g, args.cmin) for g in grids)
        forms = dedupe(grids)
        out.line(f"sampled {len(grids)}")
        out.line(f"distinct-canonical {len(forms)}")
        if args.dump:
            for form in forms:
                out.line("---")
                out.line(format_plat(form.grid).rstrip("\n"))
    return 0


def _cmd_pd(args, out: _Printer) -> int:
    out.line(to_pd_code(_load_grid(args.file)).format())
    return 0


def _cmd_gauss(args, out: _Printer) -> int:
    out.line(" ".join(gauss_code(_load_grid(args.file))))
    return 0


def _cmd_svg(args, out: _Printer) -> int:
    grid = _load_grid(args.file)
    overlay = None
    if args.overlay:
        overlay = check_sphere(grid, _positions(args.overlay))
    document = render_svg(grid, overlay)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document)
        out.note(f"wrote {args.output}")
    else:
        sys.stdout.write(document)
    return 0


def _cmd_fingerprint(args, out: _Printer) -> int:
    grid = _load_grid(args.file)
    print_fp = fingerprint(grid)
    out.line(f"components {print_fp.components}")
    out.line(f"determinant {print_fp.determinant}")
    if print_fp.alexander_evals is None:
        out.line("alexander none")
    else:
        for t in sorted(print_fp.alexander_evals):
            out.line(f"alexander[{t}] {print_fp.alexander_evals[t]}")
    out.note(f"twist regions: {twist_region_count(grid)}")
    out.note(f"components by tracing: {component_count(grid)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plats",
        description="Tools for highly twisted plat diagrams: canonical forms, "
        "bridge distance, sphere combinatorics, censuses, and invariants.",
    )
    parser.add_argument("--machine", action="store_true", help="suppress commentary lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a plat file")
    p.add_argument("file")

    p = sub.add_parser("braid", help="convert between grids and braid words")
    p.add_argument("file")
    p.add_argument("--to-grid", action="store_true", help="input is braid text")
    p.add_argument("--length", type=int, default=None, help="target plat length n")
    p.add_argument("--strands", type=int, default=None, help="strand count for braid text")

    p = sub.add_parser("canon", help="canonical form of a grid")
    p.add_argument("file")

    p = sub.add_parser("eq", help="decide equivalence of two grids")
    p.add_argument("file1")
    p.add_argument("file2")

    p = sub.add_parser("distance", help="bridge distance of the induced sphere")
    p.add_argument("file")

    p = sub.add_parser("spheres", help="vertical sphere combinatorics")
    p.add_argument("file")
    p.add_argument("--list", action="store_true", help="list vertical sphere vectors")
    p.add_argument("--classify", nargs=2, type=int, metavar=("I", "J"))
    p.add_argument("--isolate", nargs=2, type=int, metavar=("I", "J"))
    p.add_argument("--check", metavar="C1,C2,...")
    p.add_argument("--corner", choices=[c.value for c in Corner])

    p = sub.add_parser("census", help="orbit counting and sampling")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coeffs", required=True, help="comma-separated coefficient set")
    p.add_argument("--cmin", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample-k", type=int, default=0)
    p.add_argument("--dump", action="store_true")
    p.add_argument("--rho", type=int, default=0, help="also print the genericity ratio for this M")

    p = sub.add_parser("pd", help="planar diagram code")
    p.add_argument("file")

    p = sub.add_parser("gauss", help="signed Gauss code of a knot")
    p.add_argument("file")

    p = sub.add_parser("svg", help="render the diagram")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--overlay", default=None, help="sphere positions c1,c2,...")

    p = sub.add_parser("fingerprint", help="invariant fingerprint of the closure")
    p.add_argument("file")
    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "braid": _cmd_braid,
    "canon": _cmd_canon,
    "eq": _cmd_eq,
    "distance": _cmd_distance,
    "spheres": _cmd_spheres,
    "census": _cmd_census,
    "pd": _cmd_pd,
    "gauss": _cmd_gauss,
    "svg": _cmd_svg,
    "fingerprint": _cmd_fingerprint,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_info:
        return int(exit_info.code or 0)
    printer = _Printer(machine=args.machine)
    try:
        return _HANDLERS[args.command](args, printer)
    except (PlatError, ValueError) as error:
        print(f"{type(error).__name__}: {error}")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
