"""Command-line front end: one subcommand per study, tables out.

Angles are radians unless --degrees is given, which converts every
angle-valued argument (including the disorder amplitude) on ingestion.
Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import edge, realspace, tableio, topology
from .bloch import bands, classify_pt_detail, k_grid, make_params
from .errors import NumericalError, ValidationError
from .numerics import eig_general

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptwalk",
        description=(
            "Non-unitary quantum-walk toolkit: band structures, symmetry "
            "classification, topological invariants, real-space dynamics "
            "and interface states."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--p", type=float, default=0.0, help="loss probability in [0, 1)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument(
            "--degrees", action="store_true",
            help="interpret all angle arguments in degrees",
        )

    def region_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--theta1-left", type=float, required=True)
        p.add_argument("--theta2-left", type=float, required=True)
        p.add_argument("--theta1-right", type=float, required=True)
        p.add_argument("--theta2-right", type=float, required=True)
        p.add_argument("--n-half", type=int, default=50, help="ring half-size N")

    pd = sub.add_parser("phase-diagram", help="invariants and symmetry class on an angle grid")
    pd.add_argument("--theta1-min", type=float, required=True)
    pd.add_argument("--theta1-max", type=float, required=True)
    pd.add_argument("--theta1-steps", type=int, required=True)
    pd.add_argument("--theta2-min", type=float, required=True)
    pd.add_argument("--theta2-max", type=float, required=True)
    pd.add_argument("--theta2-steps", type=int, required=True)
    pd.add_argument("--n-k", type=int, default=1024)
    common(pd)

    bd = sub.add_parser("bands", help="quasienergy bands over the momentum zone")
    bd.add_argument("--theta1", type=float, required=True)
    bd.add_argument("--theta2", type=float, required=True)
    bd.add_argument("--n-k", type=int, default=1024)
    common(bd)

    br = sub.add_parser("berry", help="geometric phases and invariants at one parameter point")
    br.add_argument("--theta1", type=float, required=True)
    br.add_argument("--theta2", type=float, required=True)
    br.add_argument("--n-k", type=int, default=1024)
    common(br)

    ev = sub.add_parser("evolve", help="real-space walk probabilities over time")
    region_args(ev)
    ev.add_argument("--steps", type=int, default=7, help="number of walk periods")
    ev.add_argument("--x0", type=int, default=0, help="starting site")
    ev.add_argument(
        "--coin", choices=("plus", "minus", "plus_i_minus"), default="plus",
    )
    ev.add_argument("--disorder", type=float, default=0.0, help="static angle disorder amplitude")
    ev.add_argument("--seed", type=int, default=0)
    common(ev)

    sp = sub.add_parser("spectrum", help="full eigenvalue spectrum of the two-region ring")
    region_args(sp)
    sp.add_argument("--disorder", type=float, default=0.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--shell-tol", type=float, default=1e-3)
    common(sp)

    es = sub.add_parser("edge-state", help="analytic interface state profile")
    region_args(es)
    es.add_argument("--gap", choices=("zero", "pi"), required=True)
    es.add_argument("--parity", choices=("odd", "even"), required=True)
    common(es)

    return parser


def _angle(value: float, degrees: bool) -> float:
    return float(np.deg2rad(value)) if degrees else float(value)


def cmd_phase_diagram(args) -> int:
    t1 = np.linspace(
        _angle(args.theta1_min, args.degrees),
        _angle(args.theta1_max, args.degrees),
        args.theta1_steps,
    )
    t2 = np.linspace(
        _angle(args.theta2_min, args.degrees),
        _angle(args.theta2_max, args.degrees),
        args.theta2_steps,
    )
    cells = topology.phase_diagram(t1, t2, args.p, n_k=args.n_k)
    rows = [
        [
            c.theta1,
            c.theta2,
            float("nan") if c.nu_zero is None else c.nu_zero,
            float("nan") if c.nu_pi is None else c.nu_pi,
            c.pt_class.value,
            int(c.boundary),
        ]
        for c in cells
    ]
    meta = {
        "p": args.p,
        "n_k": args.n_k,
        "theta1_steps": args.theta1_steps,
        "theta2_steps": args.theta2_steps,
    }
    tableio.write_table(
        args.out, meta,
        ["theta1", "theta2", "nu_zero", "nu_pi", "pt_class", "boundary_flag"],
        rows, args.format,
    )
    return 0


def cmd_bands(args) -> int:
    params = make_params(
        _angle(args.theta1, args.degrees), _angle(args.theta2, args.degrees), args.p
    )
    ks = k_grid(args.n_k)
    bp = bands(params, ks)
    rows = [
        [
            float(k),
            float(np.real(bp.eps_plus[i])), float(np.imag(bp.eps_plus[i])),
            float(np.real(bp.eps_minus[i])), float(np.imag(bp.eps_minus[i])),
            float(np.real(bp.lambda_plus[i])), float(np.imag(bp.lambda_plus[i])),
            float(np.real(bp.lambda_minus[i])), float(np.imag(bp.lambda_minus[i])),
        ]
        for i, k in enumerate(ks)
    ]
    report = classify_pt_detail(params, n_k=max(args.n_k, 64))
    meta = {
        "theta1": params.theta1,
        "theta2": params.theta2,
        "p": params.p,
        "gamma": params.gamma,
        "n_k": args.n_k,
        "pt_class": report.pt_class.value,
        "pt_subcase": report.subcase or "",
    }
    tableio.write_table(
        args.out, meta,
        [
            "k",
            "re_eps_plus", "im_eps_plus", "re_eps_minus", "im_eps_minus",
            "re_lambda_plus", "im_lambda_plus", "re_lambda_minus", "im_lambda_minus",
        ],
        rows, args.format,
    )
    return 0


def cmd_berry(args) -> int:
    params = make_params(
        _angle(args.theta1, args.degrees), _angle(args.theta2, args.degrees), args.p
    )
    tn = topology.topo_numbers(params, n_k=args.n_k)
    phi_b = topology.global_berry_phase(params, n_k=args.n_k)
    report = classify_pt_detail(params, n_k=max(args.n_k, 64))
    try:
        zak_p = topology.generalized_zak_phase(params, +1, n_k=args.n_k)
        zak_m = topology.generalized_zak_phase(params, -1, n_k=args.n_k)
    except ValidationError:
        # Per-band phases lose meaning once the loop crosses an
        # exceptional point; the summed phase above is still valid.
        zak_p = zak_m = complex(float("nan"), float("nan"))
    rows = [[
        params.theta1, params.theta2, phi_b,
        tn.nu_prime, tn.nu_double_prime, tn.nu_zero, tn.nu_pi,
        zak_p.real, zak_p.imag, zak_m.real, zak_m.imag,
    ]]
    meta = {"p": params.p, "n_k": args.n_k, "pt_class": report.pt_class.value}
    tableio.write_table(
        args.out, meta,
        [
            "theta1", "theta2", "phi_b",
            "nu_prime", "nu_double_prime", "nu_zero", "nu_pi",
            "re_zak_plus", "im_zak_plus", "re_zak_minus", "im_zak_minus",
        ],
        rows, args.format,
    )
    return 0


def _build_config(args):
    thetaL = (
        _angle(args.theta1_left, args.degrees),
        _angle(args.theta2_left, args.degrees),
    )
    thetaR = (
        _angle(args.theta1_right, args.degrees),
        _angle(args.theta2_right, args.degrees),
    )
    config = realspace.make_inhomogeneous(thetaL, thetaR, args.n_half, args.p)
    disorder = getattr(args, "disorder", 0.0)
    if disorder:
        config = realspace.apply_disorder(
            config, _angle(disorder, args.degrees), args.seed
        )
    return thetaL, thetaR, config


def cmd_evolve(args) -> int:
    _, _, config = _build_config(args)
    state = realspace.initial_state(args.x0, args.coin, args.n_half)
    series = realspace.evolve(state, config, args.steps)
    rows = []
    for t in range(args.steps + 1):
        for i, x in enumerate(series.sites):
            rows.append([
                t, int(x),
                float(series.raw[t, i]),
                float(series.corrected[t, i]),
                float(series.normalized[t, i]),
            ])
    meta = {
        "gamma": series.gamma,
        "p": args.p,
        "n_half": args.n_half,
        "steps": args.steps,
        "coin": args.coin,
        "x0": args.x0,
        "disorder": getattr(args, "disorder", 0.0),
        "seed": args.seed,
        "rng": realspace.rng_algorithm(args.seed),
        "wraparound": int(series.wraparound),
        "theta1_left": _angle(args.theta1_left, args.degrees),
        "theta2_left": _angle(args.theta2_left, args.degrees),
        "theta1_right": _angle(args.theta1_right, args.degrees),
        "theta2_right": _angle(args.theta2_right, args.degrees),
    }
    tableio.write_table(
        args.out, meta,
        ["t", "x", "p_raw", "p_corrected", "p_normalized"],
        rows, args.format,
    )
    return 0


def cmd_spectrum(args) -> int:
    _, _, config = _build_config(args)
    gamma = config.gamma
    spec = eig_general(realspace.build_floquet(config, scaled=True))
    mod_tol = (gamma - 1.0) / 2.0
    ipr_floor = 5.0 / config.n_sites
    order = np.lexsort((spec.eigenvalues.imag, spec.eigenvalues.real))
    rows = []
    for i in order:
        lam = complex(spec.eigenvalues[i])
        vec = spec.right_vectors[:, i].reshape(-1, 2)
        prob = np.sum(np.abs(vec) ** 2, axis=1)
        prob = prob / np.sum(prob)
        state_ipr = float(np.sum(prob ** 2))
        on_shell = (
            min(abs(abs(lam) - gamma), abs(abs(lam) - 1.0 / gamma)) <= args.shell_tol
        )
        flag = int(
            gamma > 1.0
            and on_shell
            and min(abs(abs(lam) - gamma), abs(abs(lam) - 1.0 / gamma)) <= mod_tol
            and state_ipr >= ipr_floor
        )
        sector = "zero" if lam.real > 0 else "pi"
        rows.append([lam.real, lam.imag, state_ipr, flag, sector])
    meta = {
        "gamma": gamma,
        "p": args.p,
        "n_half": args.n_half,
        "mod_tol": mod_tol,
        "ipr_floor": ipr_floor,
        "shell_tol": args.shell_tol,
        "disorder": args.disorder,
        "seed": args.seed,
        "rng": realspace.rng_algorithm(args.seed),
        "theta1_left": _angle(args.theta1_left, args.degrees),
        "theta2_left": _angle(args.theta2_left, args.degrees),
        "theta1_right": _angle(args.theta1_right, args.degrees),
        "theta2_right": _angle(args.theta2_right, args.degrees),
    }
    tableio.write_table(
        args.out, meta,
        ["re_lambda", "im_lambda", "ipr", "edge_flag", "gap_sector"],
        rows, args.format,
    )
    return 0


def cmd_edge_state(args) -> int:
    thetaL = (
        _angle(args.theta1_left, args.degrees),
        _angle(args.theta2_left, args.degrees),
    )
    thetaR = (
        _angle(args.theta1_right, args.degrees),
        _angle(args.theta2_right, args.degrees),
    )
    gamma = (1.0 - args.p) ** (-0.25)
    sol = edge.edge_state(thetaL, thetaR, args.gap, args.parity, gamma, args.n_half)
    sites = np.arange(-args.n_half, args.n_half + 1)
    rows = [
        [
            int(x),
            float(np.sum(np.abs(sol.psi[i]) ** 2)),
            float(sol.psi[i, 0].real), float(sol.psi[i, 0].imag),
            float(sol.psi[i, 1].real), float(sol.psi[i, 1].imag),
        ]
        for i, x in enumerate(sites)
    ]
    meta = {
        "gap": sol.gap,
        "parity": sol.parity,
        "kind": sol.kind,
        "coin": sol.coin,
        "kappa_l": sol.kappaL,
        "kappa_r": sol.kappaR,
        "r_coeff": sol.r_coeff,
        "t_coeff": sol.t_coeff,
        "re_eigenvalue": sol.eigenvalue.real,
        "im_eigenvalue": sol.eigenvalue.imag,
        "staggered_left": int(sol.staggered_left),
        "staggered_right": int(sol.staggered_right),
        "residual": sol.residual,
        "gamma": gamma,
        "p": args.p,
        "n_half": args.n_half,
    }
    tableio.write_table(
        args.out, meta,
        ["x", "prob", "re_psi0", "im_psi0", "re_psi1", "im_psi1"],
        rows, args.format,
    )
    return 0


_DISPATCH = {
    "phase-diagram": cmd_phase_diagram,
    "bands": cmd_bands,
    "berry": cmd_berry,
    "evolve": cmd_evolve,
    "spectrum": cmd_spectrum,
    "edge-state": cmd_edge_state,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
