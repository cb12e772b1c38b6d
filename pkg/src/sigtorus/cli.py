"""Command-line front end.

Subcommands: eval, grid, limit, slope, verify, family, torres.  Angles are
rationals "p/q" by default; decimals are accepted but disable the exact
predicates, with a printed warning.  The environment variable SIGTORUS_TOL
overrides the default zero-eigenvalue tolerance.  Exit codes: 0 ok (incl.
an unstable limit), 2 input error, 3 IO error, 4 verification failure.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .angles import TorusPoint
from .errors import BoundaryPoint, SigtorusError
from .families import make_family
from .hermitian import DEFAULT_TOL
from .links import form_at, load_link, save_link, signature_nullity
from .slope import classify_slope, slope
from .verify import SUITES, directional_limit, predict_torres, run_suite

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3
EXIT_FAIL = 4


def _tolerance(args):
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = os.environ.get("SIGTORUS_TOL")
    return float(env) if env else DEFAULT_TOL


def _point(text):
    point = TorusPoint.from_text(text)
    if not point.is_exact:
        print("warning: decimal angles disable exact predicates", file=sys.stderr)
    return point


def cmd_eval(args):
    link = load_link(args.link)
    point = _point(args.omega)
    try:
        sigma, eta = signature_nullity(link, point, _tolerance(args))
    except BoundaryPoint:
        print("error: omega has a coordinate equal to 1; the Seifert form "
              "degenerates there. Use the `torres` command for boundary "
              "predictions.", file=sys.stderr)
        return EXIT_INPUT
    print("sigma=%d eta=%d dim=%d" % (sigma, eta, form_at(link, point).n))
    return EXIT_OK


def _grid_axes(args, link):
    if args.axes:
        axes = tuple(int(x) for x in args.axes.split(","))
    else:
        axes = (1, 2)
    if len(axes) != 2 or len(set(axes)) != 2 or not all(1 <= a <= link.mu for a in axes):
        raise SigtorusError("--axes must name two distinct colors in 1..%d" % link.mu)
    rest_colors = [c for c in range(1, link.mu + 1) if c not in axes]
    rest_angles = _point(args.rest).angles if args.rest else ()
    if len(rest_angles) != len(rest_colors):
        raise SigtorusError("--rest must supply %d angle(s) for colors %r"
                            % (len(rest_colors), rest_colors))
    return axes, dict(zip(rest_colors, rest_angles))


def cmd_grid(args):
    link = load_link(args.link)
    n = args.resolution
    if n < 2:
        raise SigtorusError("--resolution must be at least 2")
    if link.mu < 2:
        raise SigtorusError("grid sweeps need at least two colors")
    axes, fixed = _grid_axes(args, link)
    tol = _tolerance(args)

    rows = []
    for i in range(1, n):
        for j in range(1, n):
            angles = [None] * link.mu
            angles[axes[0] - 1] = Fraction(i, n)
            angles[axes[1] - 1] = Fraction(j, n)
            for color, angle in fixed.items():
                angles[color - 1] = angle
            sigma, eta = signature_nullity(link, TorusPoint(angles), tol)
            rows.append((Fraction(i, n), Fraction(j, n), sigma, eta))

    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("theta1,theta2,sigma,eta\n")
            for t1, t2, sigma, eta in rows:
                fh.write("%s,%s,%d,%d\n" % (t1, t2, sigma, eta))
        if args.heatmap:
            _write_heatmap(args.heatmap, rows, n)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _write_heatmap(path, rows, n):
    """Plain (P2) PGM with the signature mapped affinely onto 0..255."""
    sigmas = [s for _, _, s, _ in rows]
    low, high = min(sigmas), max(sigmas)
    span = high - low
    side = n - 1
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("P2\n%d %d\n255\n" % (side, side))
        for r in range(side):
            line = []
            for c in range(side):
                s = rows[r * side + c][2]
                line.append(str(round((s - low) * 255 / span)) if span else "0")
            fh.write(" ".join(line) + "\n")


def cmd_limit(args):
    link = load_link(args.link)
    rest = _point(args.omega_rest or "")
    result = directional_limit(link, rest, args.side, tol=_tolerance(args))
    if result.stable:
        print("limit=%d side=%s status=stable" % (result.value, args.side))
    else:
        print("status=unstable side=%s" % args.side)
        for delta, sigma, eta in result.samples:
            print("delta=%s sigma=%d eta=%d" % (delta, sigma, eta))
    return EXIT_OK


def cmd_slope(args):
    link = load_link(args.link)
    point = _point(args.omega)
    sub = link.rest_sublink()
    if link.conway is None:
        raise SigtorusError("link file carries no conway data")
    if sub is None or sub.conway is None:
        raise SigtorusError("link file carries no sublink conway data")
    value = slope(link.conway, sub.conway, point)
    s, eps = classify_slope(value)
    text = "inf" if value.is_infinite else "%.12g" % value.value
    print("slope=%s s=%d eps=%d" % (text, s, eps))
    return EXIT_OK


def cmd_verify(args):
    link = load_link(args.link)
    reports = run_suite(link, args.suite, samples=args.samples, seed=args.seed,
                        tol=_tolerance(args))
    for rep in reports:
        print("%s %s lhs=%s rhs=%s (%s)"
              % ("PASS" if rep.passed else "FAIL", rep.check,
                 rep.lhs, rep.rhs, rep.relation))
    if args.report:
        try:
            with open(args.report, "w", encoding="utf-8") as fh:
                json.dump([rep.to_json_dict() for rep in reports], fh,
                          indent=2, sort_keys=True)
                fh.write("\n")
        except OSError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return EXIT_IO
    failures = sum(not rep.passed for rep in reports)
    print("checks=%d failures=%d" % (len(reports), failures))
    return EXIT_FAIL if failures else EXIT_OK


def cmd_family(args):
    link = make_family(args.name, args.param)
    if os.path.exists(args.out) and not args.force:
        print("error: %s exists; pass --force to overwrite" % args.out,
              file=sys.stderr)
        return EXIT_INPUT
    try:
        save_link(link, args.out)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_IO
    print("wrote %s" % args.out)
    return EXIT_OK


def cmd_torres(args):
    link = load_link(args.link)
    point = _point(args.omega) if args.omega else None
    prediction = predict_torres(link, point, _tolerance(args))
    sigma = "unresolved" if prediction.sigma is None else str(prediction.sigma)
    eta = "unresolved" if prediction.eta is None else str(prediction.eta)
    print("sigma_pred=%s eta_pred=%s midpoint=%s" % (sigma, eta, prediction.midpoint))
    for note in prediction.notes:
        print("note: %s" % note)
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="sigtorus",
        description="Multivariable link signatures from generalized Seifert data")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="signature and nullity at a torus point")
    p.add_argument("--link", required=True)
    p.add_argument("--omega", required=True, help="comma-separated angles in turns")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("grid", help="sweep a rational grid to CSV (and PGM)")
    p.add_argument("--link", required=True)
    p.add_argument("--resolution", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--heatmap")
    p.add_argument("--axes", help="two swept colors, e.g. 1,2 (default)")
    p.add_argument("--rest", help="fixed angles for the remaining colors")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("limit", help="one-sided limit of the signature")
    p.add_argument("--link", required=True)
    p.add_argument("--side", choices=("plus", "minus"), required=True)
    p.add_argument("--omega-rest", dest="omega_rest", default="",
                   help="fixed angles for colors 2..mu (empty for one color)")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("slope", help="slope value and its classification")
    p.add_argument("--link", required=True)
    p.add_argument("--omega", required=True, help="angles for colors 2..mu")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_slope)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--link", required=True)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write the JSON report array here")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="emit a built-in family link file")
    p.add_argument("--name", choices=("twist", "torus", "unlink"), required=True)
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("torres", help="boundary predictions at (1, omega')")
    p.add_argument("--link", required=True)
    p.add_argument("--omega", default="", help="angles for colors 2..mu")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_torres)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SigtorusError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
