"""Command-line surface: spectra, spectral radii, sweeps, and validation.

Outputs are deterministic: floats are printed at 15 significant digits,
lines end with "\n", and identical inputs give byte-identical files.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import analysis, forms, theory, tridiag, validate

THETA_GRID_DEFAULT = "0.1:0.1:3.1"


def fmt(x):
    """15-significant-digit decimal rendering used everywhere."""
    return format(float(x), ".15g")


def parse_grid(spec):
    """Parse "start:step:stop" (inclusive) or a single number."""
    parts = spec.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"bad grid spec {spec!r}; expected start:step:stop")
    start, step, stop = (float(p) for p in parts)
    if step <= 0 or stop < start:
        raise ValueError(f"grid spec {spec!r} is empty or decreasing")
    count = int(math.floor((stop - start) / step + 0.5)) + 1
    return [start + i * step for i in range(count)]


def even_order(n):
    """Truncation orders must be even; odd requests are bumped up."""
    if n % 2:
        print(f"warning: order {n} is odd; using {n + 1}", file=sys.stderr)
        n += 1
    if n < 4:
        raise ValueError("order must be >= 4")
    return n


def build_family(family, omega, theta):
    if family == "constant":
        return forms.PairFamily.constant(theta)
    if family == "eq3":
        if omega is None:
            raise ValueError("family eq3 requires --omega")
        return forms.PairFamily.head_omega(omega, theta)
    if family == "eq5":
        return forms.PairFamily.perturbed_heads(theta)
    if family == "two-constant":
        if omega is None:
            raise ValueError("family two-constant requires --omega")
        return forms.PairFamily.two_constant(omega, theta)
    raise ValueError(f"unknown family {family!r}")


def closed_form_rho(family, omega, theta):
    if family == "constant":
        return theory.rho_constant_angle(theta).rho
    if family == "two-constant":
        return theory.rho_two_constant_angles(omega, theta).rho
    return None


def auto_exclusion(family, omega, theta):
    """The limit-set point to drop for two-constant families with s > delta."""
    if family != "two-constant":
        return None
    p = theory.TwoAngleParams.from_angles(omega, theta)
    return theory.tilde_point(p)


def read_pair_file(path):
    """Plain-text pair: first line order k, k rows for A, blank line, k rows for B."""
    try:
        with open(path) as fh:
            lines = [ln.rstrip("\n") for ln in fh]
    except OSError as exc:
        raise ValueError(f"cannot read pair file: {exc}") from exc
    k = int(lines[0].strip())
    a_rows = [[float(v) for v in lines[1 + i].split()] for i in range(k)]
    offset = 1 + k
    while offset < len(lines) and not lines[offset].strip():
        offset += 1
    b_rows = [[float(v) for v in lines[offset + i].split()] for i in range(k)]
    return forms.GeneralPair(
        a=tridiag.DenseSymmetricMatrix(np.array(a_rows)),
        b=tridiag.DenseSymmetricMatrix(np.array(b_rows)),
    )


def write_text(path, text):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def cmd_spectrum(args):
    if args.family == "general-file":
        if not args.input:
            raise ValueError("family general-file requires --input")
        pair = read_pair_file(args.input)
        sample = tridiag.dense_sym_eigenvalues(
            tridiag.DenseSymmetricMatrix(pair.a.entries + pair.b.entries)
        )
    else:
        fam = build_family(args.family, args.omega, args.theta)
        sample = tridiag.tridiag_eigenvalues(
            forms.build_sum_truncation(fam, even_order(args.n))
        )
    lines = ["index,eigenvalue"]
    for i, v in enumerate(sample.values):
        lines.append(f"{i},{fmt(v)}")
    write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_rho(args):
    if args.family == "general-file":
        if not args.input:
            raise ValueError("family general-file requires --input")
        pair = read_pair_file(args.input)
        rho = analysis.rho_commutator_direct(pair)
        payload = {"rho_low": fmt(rho), "rho_high": fmt(rho), "branch": "direct-commutator"}
    else:
        fam = build_family(args.family, args.omega, args.theta)
        exclusion = auto_exclusion(args.family, args.omega, args.theta)
        rep = analysis.rho_numeric(fam, even_order(args.n), exclusion=exclusion)
        payload = {
            "rho_low": fmt(rep.rho_low),
            "rho_high": fmt(rep.rho_high),
            "lambda0": fmt(rep.lambda0),
            "branch": rep.branch,
        }
        closed = closed_form_rho(args.family, args.omega, args.theta)
        if closed is not None:
            payload["rho_closed"] = fmt(closed)
    write_text(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def _spectrum_lines(fam_for_theta, thetas, n, with_commutator):
    first = tridiag.tridiag_eigenvalues(forms.build_sum_truncation(fam_for_theta(thetas[0]), n))
    if with_commutator:
        lines = ["theta,index,eigenvalue,i_commutator_eig"]
    else:
        lines = ["theta," + ",".join(f"eig_{i + 1}" for i in range(first.order))]
    for theta in thetas:
        sample = tridiag.tridiag_eigenvalues(forms.build_sum_truncation(fam_for_theta(theta), n))
        if with_commutator:
            for i, lam in enumerate(sample.values):
                mu = math.sqrt(max(0.0, lam * lam * (4.0 - lam * lam)))
                lines.append(f"{fmt(theta)},{i},{fmt(lam)},{fmt(mu)}")
        else:
            lines.append(fmt(theta) + "," + ",".join(fmt(v) for v in sample.values))
    return lines


def cmd_sweep(args):
    thetas = parse_grid(args.theta)
    if not thetas:
        raise ValueError("empty theta grid")
    for t in thetas:
        if not (0.0 < t < math.pi):
            raise ValueError("theta grid must lie inside (0, pi)")
    n = even_order(args.n)
    omega = args.omega

    def fam_for(theta):
        return build_family(args.family, omega, theta)

    if args.mode == "spectrum":
        lines = _spectrum_lines(fam_for, thetas, n, with_commutator=False)
    else:
        lines = ["theta,lambda_max,rho_numeric,rho_closed"]
        for theta in thetas:
            fam = fam_for(theta)
            sample = tridiag.tridiag_eigenvalues(forms.build_sum_truncation(fam, n))
            rep = analysis.rho_numeric(fam, n, exclusion=auto_exclusion(args.family, omega, theta))
            closed = closed_form_rho(args.family, omega, theta)
            closed_txt = fmt(closed) if closed is not None else ""
            lines.append(
                f"{fmt(theta)},{fmt(sample.values[-1])},{fmt(rep.rho)},{closed_txt}"
            )
    write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_figure(args):
    thetas = parse_grid(THETA_GRID_DEFAULT)
    half_pi = math.pi / 2
    if args.number == 1:
        n = 10 if args.panel == "left" else 600
        lines = _spectrum_lines(
            lambda t: forms.PairFamily.head_omega(half_pi, t), thetas, n, with_commutator=True
        )
    elif args.number == 2:
        n = 100
        if args.panel == "left":
            lines = ["theta,lambda_max"]
            for t in thetas:
                fam = forms.PairFamily.head_omega(half_pi, t)
                sample = tridiag.tridiag_eigenvalues(forms.build_sum_truncation(fam, n))
                lines.append(f"{fmt(t)},{fmt(sample.values[-1])}")
        else:
            lines = ["omega,theta,lambda_max"]
            for om in thetas:
                for t in thetas:
                    fam = forms.PairFamily.head_omega(om, t)
                    sample = tridiag.tridiag_eigenvalues(forms.build_sum_truncation(fam, n))
                    lines.append(f"{fmt(om)},{fmt(t)},{fmt(sample.values[-1])}")
    elif args.number == 3:
        lines = _spectrum_lines(
            lambda t: forms.PairFamily.perturbed_heads(t), thetas, 100, with_commutator=True
        )
    elif args.number == 4:
        om = 0.3 if args.panel == "left" else 2.4
        lines = _spectrum_lines(
            lambda t: forms.PairFamily.two_constant(om, t), thetas, 200, with_commutator=True
        )
    else:
        raise ValueError("figure number must be 1..4")
    write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_validate(args):
    checks = validate.run_checks(perturb=args.perturb)
    report = {
        "checks": [
            {
                "name": c.name,
                "expected": fmt(c.expected),
                "observed": fmt(c.observed),
                "tolerance": fmt(c.tolerance),
                "pass": c.passed,
            }
            for c in checks
        ],
        "all_pass": all(c.passed for c in checks),
    }
    write_text(args.out, json.dumps(report, indent=2) + "\n")
    return 0 if report["all_pass"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="oneshift",
        description="Spectral radii of commutators of involution pairs in one-shifted form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, families, need_n=True):
        p.add_argument("--family", choices=families, required=True)
        p.add_argument("--omega", type=float, default=None)
        p.add_argument("--theta", type=float, default=None)
        p.add_argument("--input", default=None, help="pair file for family general-file")
        if need_n:
            p.add_argument("--n", type=int, default=600)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("csv", "json"), default=None)

    p_spec = sub.add_parser("spectrum", help="eigenvalues of one truncation")
    common(p_spec, ("constant", "eq3", "eq5", "two-constant", "general-file"))
    p_spec.set_defaults(func=cmd_spectrum)

    p_rho = sub.add_parser("rho", help="spectral radius of the commutator")
    common(p_rho, ("constant", "eq3", "eq5", "two-constant", "general-file"))
    p_rho.set_defaults(func=cmd_rho)

    p_sweep = sub.add_parser("sweep", help="grid sweep over theta")
    p_sweep.add_argument("--family", choices=("constant", "eq3", "eq5", "two-constant"), required=True)
    p_sweep.add_argument("--omega", type=float, default=None)
    p_sweep.add_argument("--theta", required=True, help='grid spec "start:step:stop"')
    p_sweep.add_argument("--n", type=int, default=600)
    p_sweep.add_argument("--mode", choices=("spectrum", "rho"), default="rho")
    p_sweep.add_argument("--out", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    p_fig = sub.add_parser("figure", help="emit a preset dataset")
    p_fig.add_argument("number", type=int, choices=(1, 2, 3, 4))
    p_fig.add_argument("--panel", choices=("left", "right"), default="right")
    p_fig.add_argument("--out", default=None)
    p_fig.set_defaults(func=cmd_figure)

    p_val = sub.add_parser("validate", help="run the self-check suite")
    p_val.add_argument("--out", default=None)
    p_val.add_argument("--perturb", action="store_true", help="inject a failure (negative control)")
    p_val.set_defaults(func=cmd_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
