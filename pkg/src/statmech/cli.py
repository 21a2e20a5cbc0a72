"""Command-line interface.

Every command writes either CSV (always with a header row) or a JSON object
``{command, config_echo, rows | result, diagnostics}``.  Floats are printed
with 17 significant digits and rationals as ``"p/q"`` strings, so identical
invocations give byte-identical output.

Exit codes: 0 success, 1 domain/convergence/data errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import blackbody, chempot, classicality, ensembles, huggett
from .constants import REDUCED, UNIT_ENV_VAR, get_constants
from .exceptions import InvalidArgumentError, SpectrumParseError, StatMechError
from .levels import load_spectrum, make_uniform

COMMANDS = ("occupations", "solve-mu", "free-energy", "blackbody", "huggett", "classicality", "sweep")

# what each command was computing, used to prefix error messages
_CONTEXT = {
    "occupations": "mean occupation numbers",
    "solve-mu": "chemical-potential solve for N(mu) = N_target",
    "free-energy": "Helmholtz free energy F = U - TS",
    "blackbody": "Planck / Rayleigh-Jeans / Wien spectral densities",
    "huggett": "arrangement vs occupancy-vector enumeration",
    "classicality": "thermal-wavelength classicality diagnostics",
    "sweep": "dilute-limit convergence sweep",
}


class UsageError(Exception):
    pass


# -- argument types ----------------------------------------------------------

def _real(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"{text!r} is not finite")
    return value


def _positive(text):
    value = _real(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return value


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text!r}")
    return value


def _grid(text):
    """``start:stop:count`` -> inclusive linear grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start:stop:count, got {text!r}")
    start, stop = _real(parts[0]), _real(parts[1])
    count = _positive_int(parts[2])
    return (start, stop, count)


def _uniform(text):
    """``epsilon0:spacing:count``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected epsilon0:spacing:count, got {text!r}")
    return (_real(parts[0]), _positive(parts[1]), _positive_int(parts[2]))


def _stats(text):
    try:
        return ensembles.Statistics.parse(text)
    except InvalidArgumentError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--units", choices=("reduced", "SI"), default=None,
                        help=f"constant set (default: ${UNIT_ENV_VAR} or reduced)")
    common.add_argument("--planck-h", dest="planck_h", type=_positive, help="override Planck's constant")
    common.add_argument("--speed-of-light", dest="speed_of_light", type=_positive, help="override the speed of light")
    common.add_argument("--boltzmann-k", dest="boltzmann_k", type=_positive, help="override Boltzmann's constant")
    common.add_argument("--mass", type=_positive, help="particle mass")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", help="output file (default: stdout)")
    common.add_argument("--tol", type=_positive, default=chempot.DEFAULT_TOL,
                        help="relative tolerance on particle number")

    spectrum = argparse.ArgumentParser(add_help=False)
    src = spectrum.add_mutually_exclusive_group()
    src.add_argument("--spectrum", help="CSV file with header energy,degeneracy")
    src.add_argument("--uniform", type=_uniform, metavar="E0:SPACING:COUNT",
                     help="evenly spaced non-degenerate levels")

    thermal = argparse.ArgumentParser(add_help=False)
    t = thermal.add_mutually_exclusive_group()
    t.add_argument("--beta", type=_positive, help="inverse temperature 1/kT")
    t.add_argument("--temperature", type=_positive, help="temperature (uses k)")

    parser = argparse.ArgumentParser(prog="statmech", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("occupations", parents=[common, spectrum, thermal],
                       help="mean occupation per level")
    p.add_argument("--stats", type=_stats, required=True, help="MB, BE or FD")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--mu", type=_real, help="chemical potential")
    g.add_argument("--n", type=_positive, help="particle number (solves for mu)")

    p = sub.add_parser("solve-mu", parents=[common, spectrum, thermal],
                       help="chemical potential for a target particle number")
    p.add_argument("--stats", type=_stats, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--max-iter", type=_positive_int, default=chempot.DEFAULT_MAX_ITER)

    p = sub.add_parser("free-energy", parents=[common, spectrum, thermal],
                       help="U, TS, F and grand potential at fixed N")
    p.add_argument("--stats", type=_stats, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--finite-difference", action="store_true",
                   help="also report F(N+1) - F(N)")

    p = sub.add_parser("blackbody", parents=[common], help="Planck, Rayleigh-Jeans and Wien densities")
    p.add_argument("--temperature", type=_positive, required=True)
    p.add_argument("--eps-range", type=_grid, required=True, metavar="START:STOP:COUNT",
                   help="photon energies")

    p = sub.add_parser("huggett", parents=[common], help="arrangement vs occupancy frequencies")
    p.add_argument("--n", type=_positive_int, help="number of systems")
    p.add_argument("--k", dest="k_states", type=_positive_int, help="number of states")
    p.add_argument("--impenetrable", action="store_true")
    p.add_argument("--check", action="store_true", help="run the exhaustive equivalence check")
    p.add_argument("--n-max", type=_positive_int, default=6)
    p.add_argument("--k-max", type=_positive_int, default=8)

    p = sub.add_parser("classicality", parents=[common], help="thermal wavelength vs spacing")
    p.add_argument("--temperature", type=_positive, required=True)
    p.add_argument("--volume", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--threshold", type=_positive, default=classicality.DEFAULT_THRESHOLD)

    p = sub.add_parser("sweep", parents=[common], help="convergence tables over x = beta*(eps - mu)")
    p.add_argument("--quantity", required=True,
                   choices=("be-vs-mb", "fd-vs-mb", "planck-vs-rj", "planck-vs-wien"))
    p.add_argument("--beta-eps-mu", "--x-range", dest="x_range", type=_grid, required=True,
                   metavar="START:STOP:COUNT")
    return parser


# -- helpers -----------------------------------------------------------------

def _constants(args):
    base = get_constants(args.units)
    return base.with_overrides(
        planck_h=args.planck_h, speed_of_light=args.speed_of_light,
        boltzmann_k=args.boltzmann_k, mass=args.mass,
    )


def _beta(args, constants):
    if args.beta is not None:
        return args.beta
    if args.temperature is not None:
        return 1.0 / (constants.boltzmann_k * args.temperature)
    raise UsageError("one of --beta or --temperature is required")


def _spectrum(args, constants):
    if args.spectrum is not None:
        return load_spectrum(args.spectrum, constants.unit_mode)
    if args.uniform is not None:
        e0, spacing, count = args.uniform
        return make_uniform(e0, spacing, count, constants.unit_mode)
    raise UsageError("one of --spectrum or --uniform is required")


def _linspace(grid):
    start, stop, count = grid
    return np.linspace(start, stop, count)


# -- commands ----------------------------------------------------------------

def _cmd_occupations(args, constants):
    spectrum = _spectrum(args, constants)
    beta = _beta(args, constants)
    stats = args.stats
    if args.n is not None:
        if stats is ensembles.Statistics.MB:
            profile = ensembles.occupancy_mb(spectrum, beta, args.n)
            mu = chempot.mu_mb(spectrum, beta, args.n)
        else:
            mu = chempot.solve_mu(spectrum, beta, args.n, stats, tol=args.tol).mu
            profile = ensembles.occupancy(spectrum, beta, mu, stats)
    elif args.mu is not None:
        mu = args.mu
        profile = ensembles.occupancy(spectrum, beta, mu, stats)
    else:
        raise UsageError("one of --mu or --n is required")
    rows = [
        {"energy": e, "degeneracy": g, "mean_occupancy": n, "per_state_occupancy": n / g}
        for e, g, n in profile.per_level
    ]
    diagnostics = {"mu": mu, "total_n": profile.total_n, "internal_energy": profile.internal_energy,
                   "beta": beta, "statistics": stats.value}
    return rows, None, diagnostics


def _cmd_solve_mu(args, constants):
    spectrum = _spectrum(args, constants)
    beta = _beta(args, constants)
    sol = chempot.solve_mu(spectrum, beta, args.n, args.stats, tol=args.tol, max_iter=args.max_iter)
    result = {"statistics": sol.statistics.value, "mu": sol.mu, "residual": sol.residual,
              "iterations": sol.iterations, "bracket_lo": sol.bracket[0], "bracket_hi": sol.bracket[1]}
    return None, result, {"beta": beta, "n_target": args.n, "levels": len(spectrum)}


def _cmd_free_energy(args, constants):
    spectrum = _spectrum(args, constants)
    beta = _beta(args, constants)
    rep = chempot.free_energy(spectrum, beta, args.n, args.stats, tol=args.tol)
    result = {
        "statistics": rep.statistics.value,
        "mu": rep.mu,
        "total_n": rep.total_n,
        "internal_energy": rep.internal_energy,
        "entropy_term": rep.entropy_term,
        "free_energy": rep.free_energy,
        "grand_potential": rep.grand_potential,
    }
    if args.finite_difference:
        result["mu_finite_difference"] = chempot.mu_finite_difference(
            spectrum, beta, args.n, args.stats, tol=args.tol)
    return None, result, {"beta": beta, "free_energy_from_grand": rep.free_energy_from_grand}


def _cmd_blackbody(args, constants):
    eps = _linspace(args.eps_range)
    T = args.temperature
    kT = constants.boltzmann_k * T
    p = blackbody.planck(eps, T, constants).density
    rj = blackbody.rayleigh_jeans(eps, T, constants).density
    w = blackbody.wien_mb_form(eps, T, constants).density
    rows = [
        {"epsilon": float(e), "x": float(e / kT), "planck": float(a), "rayleigh_jeans": float(b),
         "wien": float(c)}
        for e, a, b, c in zip(eps, p, rj, w)
    ]
    return rows, None, {"temperature": T, "unit_mode": constants.unit_mode}


def _cmd_huggett(args, constants):
    if args.check:
        rep = huggett.equivalence_check(args.n_max, args.k_max)
        rows = [{"n": n, "k": k, "vectors": v, "counterexamples": sum(
            1 for c in rep.counterexamples if (c.n, c.k) == (n, k))} for n, k, v in rep.cells]
        control = rep.negative_control
        diagnostics = {
            "holds": rep.holds,
            "negative_control": f"{control.n},{control.k} {control.regime}",
            "negative_control_disagrees": rep.control_disagrees,
        }
        return rows, None, diagnostics
    if args.n is None or args.k_states is None:
        raise UsageError("--n and --k are required unless --check is given")
    table = huggett.frequency_table(args.n, args.k_states, args.impenetrable)
    rows = [
        {"occupancy": " ".join(map(str, r.occupancy)), "gamma_frequency": r.gamma_frequency,
         "z_frequency": r.z_frequency, "agrees": r.agrees}
        for r in table.rows
    ]
    diagnostics = {"regime": table.regime, "gamma_count": huggett.gamma_count(table.n, table.k, table.impenetrable),
                   "z_count": len(table.rows)}
    return rows, None, diagnostics


def _cmd_classicality(args, constants):
    if constants.mass is None:
        raise UsageError("--mass is required in SI mode")
    rep = classicality.classical_regime(args.temperature, args.volume, args.n,
                                        constants.mass, constants, args.threshold)
    mu = chempot.mu_classical_asymptote(args.temperature, args.volume, args.n, constants.mass,
                                        constants.planck_h, constants.boltzmann_k)
    result = {
        "thermal_wavelength": rep.thermal_wavelength,
        "spacing": rep.spacing,
        "wavelength_ratio": rep.wavelength_ratio,
        "fermi_energy": rep.fermi_energy,
        "thermal_ratio": rep.thermal_ratio,
        "classical": rep.classical,
        "energy_criterion": rep.energy_criterion,
        "threshold": rep.threshold,
        "mu_classical": mu,
    }
    return None, result, {"unit_mode": constants.unit_mode}


def _cmd_sweep(args, constants):
    xs = _linspace(args.x_range)
    q = args.quantity
    if q in ("be-vs-mb", "fd-vs-mb"):
        if q == "be-vs-mb" and np.any(xs <= 0):
            raise InvalidArgumentError("--beta-eps-mu values must be positive for be-vs-mb")
        quantum = (ensembles.bose_occupancy if q == "be-vs-mb" else ensembles.fermi_occupancy)(xs)
        classical = np.exp(-xs)
    else:
        if np.any(xs <= 0):
            raise InvalidArgumentError("--x-range values must be positive for blackbody sweeps")
        # reduced units with kT = 1 so eps = x
        quantum = blackbody.planck(xs, 1.0, REDUCED).density
        other = blackbody.rayleigh_jeans if q == "planck-vs-rj" else blackbody.wien_mb_form
        classical = other(xs, 1.0, REDUCED).density
    rows = [
        {"x": float(x), "quantum": float(a), "classical": float(b), "relative_gap": float(abs(a - b) / b)}
        for x, a, b in zip(xs, quantum, classical)
    ]
    return rows, None, {"quantity": q, "max_relative_gap_last": rows[-1]["relative_gap"]}


_HANDLERS = {
    "occupations": _cmd_occupations,
    "solve-mu": _cmd_solve_mu,
    "free-energy": _cmd_free_energy,
    "blackbody": _cmd_blackbody,
    "huggett": _cmd_huggett,
    "classicality": _cmd_classicality,
    "sweep": _cmd_sweep,
}


# -- output ------------------------------------------------------------------

def _fmt_scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if value is None:
        return ""
    return str(value)


def _to_json(value) -> str:
    if isinstance(value, dict):
        items = (f"{json.dumps(str(k))}: {_to_json(v)}" for k, v in value.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in value) + "]"
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, Fraction):
        return json.dumps(_fmt_scalar(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return format(value, ".17g") if math.isfinite(value) else json.dumps(str(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return json.dumps(str(value))


def _config_echo(args):
    skip = {"output"}
    echo = {}
    for key in sorted(vars(args)):
        if key in skip:
            continue
        value = getattr(args, key)
        if isinstance(value, ensembles.Statistics):
            value = value.value
        echo[key] = value
    return echo


def render(command, args, rows, result, diagnostics) -> str:
    if args.format == "json":
        doc = {"command": command, "config_echo": _config_echo(args)}
        if rows is not None:
            doc["rows"] = rows
        else:
            doc["result"] = result
        doc["diagnostics"] = diagnostics
        return _to_json(doc) + "\n"
    records = rows if rows is not None else [result]
    buf = io.StringIO()
    header = list(records[0].keys()) if records else []
    buf.write(",".join(header) + "\n")
    for rec in records:
        buf.write(",".join(_fmt_scalar(rec[h]) for h in header) + "\n")
    return buf.getvalue()


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    command = args.command
    try:
        constants = _constants(args)
        args.units = constants.unit_mode
        rows, result, diagnostics = _HANDLERS[command](args, constants)
    except (UsageError, InvalidArgumentError, SpectrumParseError) as exc:
        stderr.write(f"statmech {command}: usage error: {exc}\n")
        return 2
    except StatMechError as exc:
        stderr.write(f"statmech {command}: {_CONTEXT[command]} failed: {exc}\n")
        return 1
    except ValueError as exc:
        # e.g. an unknown unit mode in the environment
        stderr.write(f"statmech {command}: usage error: {exc}\n")
        return 2

    text = render(command, args, rows, result, diagnostics)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()


__all__ = ["COMMANDS", "build_parser", "main", "run"]