"""Command-line front end.

Three commands::

    hypersqueeze identities [--samples N] [--seed S] [--tol T]
    hypersqueeze squeeze --family F [--theta .. --rho .. --chi .. --phi ..]
    hypersqueeze moments [--theta LIST] [--rho LIST] ... [--type dirac,schwinger]

The command can also be given as ``--command NAME``.  Angle flags take a
single value, a comma list, or a ``lo:hi:n`` range.  Output is JSON
(``"schema": 1``) or RFC-4180 CSV; every float is printed with 17
significant digits.  Exit codes: 0 pass, 1 check failure, 2 usage,
3 resource limit.
"""

import argparse
import csv
import io
import itertools
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import fock, identities, so23
from .errors import DimensionError, HypersqueezeError, ResourceError, UnsupportedError
from .sp2r import Sp2SqueezeParams

SCHEMA = 1
COMMANDS = ("identities", "squeeze", "moments")
FAMILIES = {
    "sp2-vacuum": (1, 40),
    "sp2-onephoton": (1, 40),
    "sp2-two-mode": (2, 40),
    "sp4-tm-vacuum": (2, 40),
    "sp4-tm-onephoton": (2, 40),
    "sp4-fm-vacuum": (4, 7),
    "sp4-fm-onephoton": (4, 7),
}
MAX_GRID_POINTS = 10000
MOMENT_COLUMNS = (
    "theta", "rho", "chi", "phi", "type", "scheme",
    "var1", "var2", "var3", "var4", "prod12", "prod34",
    "closed_var1", "closed_var2", "closed_var3", "closed_var4", "max_residual",
    "concurrence", "mean1", "mean2", "mean3", "mean4",
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Parsed command-line configuration."""

    command: str
    theta: list
    rho: list
    chi: list
    phi: list
    cutoff: int = None
    seed: int = None
    samples: int = 50
    tol: float = None
    output: str = None
    format: str = "json"
    family: str = None
    slot: tuple = None
    types: list = field(default_factory=lambda: ["dirac"])
    schemes: list = field(default_factory=lambda: ["twoMode"])
    alpha: complex = 0j
    beta: complex = 0j
    route: str = None


def fmt(x):
    """Round-trip float text with 17 significant digits."""
    return format(float(x), ".17g")


def to_json(obj):
    """Serialize with every float rendered by ``fmt``; non-finite floats become null."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else "null"
    return json.dumps(str(obj))


def to_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def parse_values(text, name):
    """``"a"``, ``"a,b,c"`` or ``"lo:hi:n"`` to a list of floats."""
    text = str(text).strip()
    try:
        if ":" in text:
            lo, hi, n = text.split(":")
            n = int(n)
            if n < 1:
                raise ValueError
            return [float(v) for v in np.linspace(float(lo), float(hi), n)]
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"cannot parse --{name} {text!r}; use a value, a comma list or lo:hi:n")
    if not vals or not all(math.isfinite(v) for v in vals):
        raise UsageError(f"--{name} needs finite values")
    return vals


def build_parser():
    p = argparse.ArgumentParser(prog="hypersqueeze", description="Sp(4;R) squeezing toolkit")
    p.add_argument("command_pos", nargs="?", choices=COMMANDS, metavar="command",
                   help="identities, squeeze or moments")
    p.add_argument("--command", choices=COMMANDS)
    for name, default in (("theta", "0"), ("rho", "0"), ("chi", "0"), ("phi", "0")):
        p.add_argument(f"--{name}", default=default, help="value, comma list or lo:hi:n")
    p.add_argument("--cutoff", type=int, help="quanta per mode (default 40, or 7 for four modes)")
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--tol", type=float)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--family", help=f"state family: {', '.join(FAMILIES)}")
    p.add_argument("--slot", help="photon slot or number-state indices, e.g. 1,0")
    p.add_argument("--type", default="dirac", help="dirac, schwinger or a comma list")
    p.add_argument("--scheme", default="twoMode", help="twoMode, fourMode or a comma list")
    p.add_argument("--alpha", default="0", help="complex displacement, e.g. 0.4+0.2j")
    p.add_argument("--beta", default="0")
    p.add_argument("--route", choices=("euler", "exp"), help="Dirac-type squeeze route")
    return p


def make_config(args):
    command = args.command or args.command_pos
    if command is None:
        raise UsageError(f"no command given; options: {', '.join(COMMANDS)}")
    if args.command and args.command_pos and args.command != args.command_pos:
        raise UsageError("conflicting commands")
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    if args.tol is not None and not (math.isfinite(args.tol) and args.tol > 0):
        raise UsageError("--tol must be a positive number")
    if args.cutoff is not None and args.cutoff < 2:
        raise UsageError("--cutoff must be at least 2")
    types = [t.strip() for t in args.type.split(",")]
    if any(t not in ("dirac", "schwinger") for t in types):
        raise UsageError("--type options: dirac, schwinger")
    schemes = [s.strip() for s in args.scheme.split(",")]
    if any(s not in ("twoMode", "fourMode") for s in schemes):
        raise UsageError("--scheme options: twoMode, fourMode")
    try:
        alpha, beta = complex(args.alpha.replace(" ", "")), complex(args.beta.replace(" ", ""))
    except ValueError:
        raise UsageError("--alpha/--beta must be complex numbers such as 0.4+0.2j")
    slot = None
    if args.slot:
        try:
            slot = tuple(int(v) for v in args.slot.split(","))
        except ValueError:
            raise UsageError("--slot must be comma-separated integers")
    rho = parse_values(args.rho, "rho")
    if any(r < 0 for r in rho):
        raise UsageError("--rho must be non-negative")
    return RunConfig(
        command=command, theta=parse_values(args.theta, "theta"), rho=rho,
        chi=parse_values(args.chi, "chi"), phi=parse_values(args.phi, "phi"),
        cutoff=args.cutoff, seed=so23.resolve_seed(args.seed), samples=args.samples,
        tol=args.tol, output=args.out, format=args.format, family=args.family, slot=slot,
        types=types, schemes=schemes, alpha=alpha, beta=beta, route=args.route)


def cmd_identities(cfg):
    """Run the matrix identity suites.

    Returns
    -------
    (str, int)
        Rendered report and exit code.
    """
    rep = identities.identities_report(cfg.samples, cfg.seed, cfg.tol)
    if cfg.format == "csv":
        rows = [(c.id, c.description, c.residual, c.tolerance, "true" if c.passed else "false")
                for c in rep.checks]
        text = to_csv(("id", "description", "residual", "tolerance", "pass"), rows)
    else:
        body = {"schema": SCHEMA, "command": "identities", "seed": cfg.seed,
                "samples": cfg.samples, "pass": rep.passed,
                "checks": [c.as_dict() for c in rep.checks]}
        text = to_json(body) + "\n"
    return text, EXIT_PASS if rep.passed else EXIT_FAIL


def _single(cfg):
    vals = {k: getattr(cfg, k) for k in ("theta", "rho", "chi", "phi")}
    for k, v in vals.items():
        if len(v) != 1:
            raise UsageError(f"squeeze takes a single --{k} value")
    return {k: v[0] for k, v in vals.items()}


def _squeeze_state(cfg):
    if cfg.family not in FAMILIES:
        raise UnsupportedError(f"unknown state family {cfg.family!r}; options: {', '.join(FAMILIES)}")
    modes, default_cutoff = FAMILIES[cfg.family]
    space = fock.FockSpace(modes, cfg.cutoff or default_cutoff)
    v = _single(cfg)
    if cfg.family.startswith("sp2"):
        p = Sp2SqueezeParams(v["rho"], v["phi"])
        if cfg.family == "sp2-two-mode":
            slot = cfg.slot or (0, 0)
            ops = fock.su11_ops(space, "twoMode")
            st = fock.squeezed_number_state(space, p, slot, "sp2TwoMode")
        else:
            slot = (1,) if cfg.family == "sp2-onephoton" else (0,)
            ops = fock.su11_ops(space, "oneMode")
            st = fock.squeezed_number_state(space, p, slot, "sp2OneMode")
        oracle = fock.squeeze_unitary(ops, p, "dirac").apply(space.basis(slot).amps)
        params = {"rho": p.rho, "phi": p.phi}
    else:
        p = so23.H22Params(v["theta"], v["rho"], v["chi"], v["phi"])
        ops = fock.sp4_ops(space, "majorana" if modes == 2 else "dirac")
        if cfg.family.endswith("vacuum"):
            slot = (0,) * modes
            st = fock.sp4_squeezed_vacuum(space, p)
        else:
            slot = cfg.slot or fock.ONEPHOTON_SLOTS[modes][0]
            st = fock.sp4_squeezed_onephoton(space, p, slot)
        oracle = fock.sp4_unitary_state(ops, p, "schwinger", slot).amps
        params = {"theta": p.theta, "rho": p.rho, "chi": p.chi, "phi": p.phi}
    return space, st, oracle, params, slot


def cmd_squeeze(cfg):
    """Amplitudes of a closed-form squeezed state with its tail bound and oracle fidelity."""
    space, st, oracle, params, slot = _squeeze_state(cfg)
    fid = fock.fidelity(st.amps, oracle)
    rows = [(occ, amp.real, amp.imag, abs(amp) ** 2) for occ, amp in st.nonzero()]
    tol = 1e-7 if cfg.tol is None else cfg.tol
    ok = 1.0 - fid <= max(tol, 10 * st.tail)
    if cfg.format == "csv":
        header = [f"n{i + 1}" for i in range(space.modes)] + ["re", "im", "abs2"]
        text = to_csv(header, [list(occ) + [re, im, a2] for occ, re, im, a2 in rows])
    else:
        body = {"schema": SCHEMA, "command": "squeeze", "family": cfg.family, "params": params,
                "slot": list(slot), "cutoff": space.cutoff, "modes": space.modes,
                "norm": st.norm(), "tail_bound": st.tail, "oracle_fidelity": fid,
                "pass": bool(ok),
                "amplitudes": [{"n": list(occ), "re": re, "im": im, "abs2": a2}
                               for occ, re, im, a2 in rows]}
        text = to_json(body) + "\n"
    return text, EXIT_PASS if ok else EXIT_FAIL


def moment_rows(cfg):
    """One dict per grid point, ordered by grid index."""
    grid = list(itertools.product(cfg.theta, cfg.rho, cfg.chi, cfg.phi, cfg.types, cfg.schemes))
    if len(grid) > MAX_GRID_POINTS:
        raise ResourceError(f"grid of {len(grid)} points exceeds the limit {MAX_GRID_POINTS}")
    spaces = {}
    for scheme in cfg.schemes:
        modes = 2 if scheme == "twoMode" else 4
        spaces[scheme] = fock.FockSpace(modes, cfg.cutoff or fock.DEFAULT_CUTOFF[modes])
    rows = []
    displaced = cfg.alpha != 0 or cfg.beta != 0
    for theta, rho, chi, phi, type_, scheme in grid:
        p = so23.H22Params(theta, rho, chi, phi)
        if displaced:
            rep = fock.squeezed_coherent_report(spaces[scheme], p, (cfg.alpha, cfg.beta),
                                                type_, scheme, cfg.route).moments
        else:
            rep = fock.squeezed_moments(spaces[scheme], p, type_, scheme, cfg.route)
        row = {"theta": theta, "rho": rho, "chi": chi, "phi": phi, "type": type_, "scheme": scheme}
        for i in range(4):
            row[f"var{i + 1}"] = float(rep.variances[i])
        row["prod12"], row["prod34"] = float(rep.products[0]), float(rep.products[1])
        for i in range(4):
            row[f"closed_var{i + 1}"] = float(rep.closed[i])
        row["max_residual"] = rep.max_residual
        row["concurrence"] = fock.concurrence_theta(theta)
        for i in range(4):
            row[f"mean{i + 1}"] = float(rep.means[i])
        rows.append(row)
    return rows


def cmd_moments(cfg):
    """Quadrature variance table over a parameter grid."""
    rows = moment_rows(cfg)
    tol = 1e-6 if cfg.tol is None else cfg.tol
    ok = all(r["max_residual"] <= tol for r in rows)
    if cfg.format == "csv":
        text = to_csv(MOMENT_COLUMNS, [[r[c] for c in MOMENT_COLUMNS] for r in rows])
    else:
        body = {"schema": SCHEMA, "command": "moments", "tol": tol, "pass": ok,
                "alpha": [cfg.alpha.real, cfg.alpha.imag], "beta": [cfg.beta.real, cfg.beta.imag],
                "rows": rows}
        text = to_json(body) + "\n"
    return text, EXIT_PASS if ok else EXIT_FAIL


HANDLERS = {"identities": cmd_identities, "squeeze": cmd_squeeze, "moments": cmd_moments}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        text, code = HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hypersqueeze: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"hypersqueeze: resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UnsupportedError, DimensionError, ValueError, HypersqueezeError) as exc:
        print(f"hypersqueeze: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
