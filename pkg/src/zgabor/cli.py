"""Command-line interface.

JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 verification failure, 2 usage or parse error, 3 invalid window,
4 no guaranteed dependency.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import windows
from .classify import classify
from .dependence import NoGuaranteedDependency, find_dependency
from .fileio import WindowFormatError, read_window, window_to_dict, write_window
from .sequences import GaborSystem
from .spectral import FRAME_THRESHOLD, GRID_PER_N, fiber_sweep, frame_bounds
from .verification import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_WINDOW, EXIT_NODEP = 0, 1, 2, 3, 4


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {v}")
    return v


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_system(args) -> GaborSystem | int:
    try:
        g = read_window(args.window)
    except OSError as e:
        print(f"error: cannot read {args.window}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except WindowFormatError as e:
        print(f"error: {args.window}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if g.is_zero:
        print(f"error: {args.window}: window is identically zero", file=sys.stderr)
        return EXIT_WINDOW
    return GaborSystem(g, args.M, args.N)


def cmd_classify(args) -> int:
    v = classify(args.M, args.N, args.K)
    _emit(v.to_dict())
    return EXIT_OK


def cmd_bounds(args) -> int:
    sys_ = _load_system(args)
    if isinstance(sys_, int):
        return sys_
    if args.format == "csv":
        omega, smin, smax = fiber_sweep(sys_, args.grid or GRID_PER_N * sys_.N)
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["omega", "sigma_min", "sigma_max"])
        for row in zip(omega, smin, smax):
            w.writerow([repr(float(x)) for x in row])
        return EXIT_OK
    _emit(frame_bounds(sys_, args.grid, args.tol if args.tol is not None else FRAME_THRESHOLD).to_dict())
    return EXIT_OK


def cmd_depend(args) -> int:
    sys_ = _load_system(args)
    if isinstance(sys_, int):
        return sys_
    try:
        cert = find_dependency(sys_)
    except NoGuaranteedDependency as e:
        print(f"no guaranteed dependency: {e}", file=sys.stderr)
        print(f"classifier regime: {classify(sys_.M, sys_.N, sys_.window.support_size).dependence_class}",
              file=sys.stderr)
        return EXIT_NODEP
    _emit(cert.to_dict())
    tol = args.tol if args.tol is not None else 1e-8 * sys_.window.norm()
    if cert.residual > tol:
        print(f"certificate residual {cert.residual:.3g} exceeds --tol {tol:.3g}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_construct(args) -> int:
    fam = args.family
    try:
        if fam == "dense":
            rec = windows.ConstructionRecord(windows.dense_window(args.n or args.N), "dense",
                                             {"N": args.n or args.N})
        elif fam == "perturbed":
            rec = windows.perturbed_window(args.M, args.N, args.K, args.rho)
        elif fam == "comb":
            rec = windows.ConstructionRecord(windows.comb_window(args.M, args.K), "comb",
                                             {"M": args.M, "K": args.K})
        elif fam == "bspline":
            N = args.n or args.N
            rec = windows.ConstructionRecord(windows.bspline_window(N), "bspline", {"N": N})
        elif fam == "gaussian":
            rec = windows.gaussian_window(args.tau)
        else:
            rec = windows.dependent_infinite_window(args.M, args.N, args.eps, args.l_max)
    except (TypeError, ValueError) as e:
        print(f"error: construct {fam}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        write_window(args.out, rec.window)
    _emit({"window": window_to_dict(rec.window), "record": rec.to_dict()})
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    t0 = time.perf_counter()
    results = run_all(args.max, args.seed, log=lambda s: print(s, file=sys.stderr))
    failed = [r for r in results if not r.passed]
    _emit({"max_param": args.max, "seed": args.seed,
           "passed": not failed, "seconds": time.perf_counter() - t0,
           "criteria": [r.to_dict() for r in results]})
    for r in failed:
        print(f"FAILED criterion {r.number}: {r.name}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zgabor", description="Gabor systems E_{m/M} T_{nN} g on Z")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a parameter triple (M, N, K)")
    for name in ("M", "N", "K"):
        c.add_argument(name, type=_positive_int)
    c.set_defaults(func=cmd_classify)

    for name, func, helptext in (("bounds", cmd_bounds, "frame bounds of a window file"),
                                 ("depend", cmd_depend, "dependency certificate for a window file")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("window")
        s.add_argument("--M", type=_positive_int, required=True)
        s.add_argument("--N", type=_positive_int, required=True)
        s.add_argument("--tol", type=float, default=None,
                       help="relative frame threshold" if name == "bounds"
                       else "largest acceptable certificate residual")
        if name == "bounds":
            s.add_argument("--grid", type=_positive_int, default=None)
            s.add_argument("--format", choices=("json", "csv"), default="json")
        s.set_defaults(func=func)

    k = sub.add_parser("construct", help="build a window from one of the families")
    k.add_argument("family", choices=("dense", "perturbed", "comb", "bspline", "gaussian",
                                      "infinite_dependent"))
    k.add_argument("n", nargs="?", type=_positive_int, help="N for dense / bspline")
    k.add_argument("--M", type=_positive_int)
    k.add_argument("--N", type=_positive_int)
    k.add_argument("--K", type=_positive_int)
    k.add_argument("--rho", type=float, default=0.5)
    k.add_argument("--tau", type=float, default=1e-16)
    k.add_argument("--eps", type=float, default=0.5)
    k.add_argument("--l-max", dest="l_max", type=_positive_int, default=None)
    k.add_argument("--out", help="also write the window file here")
    k.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify-paper", help="run every acceptance check")
    v.add_argument("--max", type=int, default=6)
    v.add_argument("--seed", type=int, default=1)
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-paper" and args.max < 2:
        parser.error("--max must be >= 2")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
