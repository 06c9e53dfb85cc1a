"""Command-line interface.

Subcommands: eval, marginal, probs, overlap, verify, negativity, spiral.
States come either from flag shorthands (--qubit, --bell, --two-qubit) or
from a JSON file (--state-json).  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import json
import math
import sys

import click
import numpy as np

from .closedforms import spiral_samples
from .errors import CylWignerError, InvalidGrid, StateParseError
from .grids import (
    PhaseGrid,
    describe_source,
    evaluate_grid,
    negativity_scan,
    parse_scalar,
)
from .marginals import (
    extract_oam_probabilities,
    marginal_angle,
    marginal_momentum,
    transition_probability_direct,
    transition_probability_phase_space,
)
from .states import (
    BELL_KINDS,
    BellSpec,
    GeneralState,
    QubitSpec,
    TwoModeState,
    TwoQubitSpec,
    state_from_json,
)
from .verification import run_verification


def _parse_numbers(text, name, minimum, maximum):
    parts = [part.strip() for part in text.split(",")]
    if not (minimum <= len(parts) <= maximum):
        raise StateParseError(
            f"--{name} expects between {minimum} and {maximum} "
            f"comma-separated values, got {len(parts)}"
        )
    try:
        return [parse_scalar(part) for part in parts]
    except InvalidGrid as exc:
        raise StateParseError(str(exc)) from exc


def _build_source(qubit, bell, two_qubit, state_json):
    given = [opt for opt in (qubit, bell, two_qubit, state_json) if opt]
    if len(given) != 1:
        raise StateParseError(
            "give exactly one of --qubit, --bell, --two-qubit, --state-json"
        )
    if qubit:
        vals = _parse_numbers(qubit, "qubit", 4, 5)
        m0, m1 = int(vals[0]), int(vals[1])
        delta = vals[4] if len(vals) > 4 else 0.0
        return QubitSpec(m0, m1, vals[2], vals[3], delta)
    if bell:
        kind, _, mode = bell.partition(",")
        kind = kind.strip().lower()
        if kind not in BELL_KINDS:
            raise StateParseError(f"bell kind must be one of {BELL_KINDS}")
        try:
            m0 = int(mode.strip())
        except ValueError as exc:
            raise StateParseError(f"bad bell mode {mode!r}") from exc
        return BellSpec(kind, m0)
    if two_qubit:
        vals = _parse_numbers(two_qubit, "two-qubit", 7, 12)
        ints = [int(v) for v in vals[:4]]
        rest = list(vals[4:]) + [0.0] * (8 - len(vals[4:]))
        return TwoQubitSpec(*ints, *rest)
    try:
        with open(state_json, "r", encoding="utf-8") as handle:
            return state_from_json(handle.read())
    except OSError as exc:
        raise StateParseError(f"cannot read {state_json}: {exc}") from exc


def _state_options(func):
    func = click.option("--qubit", help="m0,m1,alpha,beta[,delta]")(func)
    func = click.option("--bell", help="kind,m0 with kind in "
                        "{phi+,phi-,psi+,psi-}")(func)
    func = click.option("--two-qubit", "two_qubit",
                        help="m0,m1,n0,n1,beta,gamma,phi"
                        "[,alpha10,alpha01,alpha11[,delta1,delta2]]")(func)
    func = click.option("--state-json", "state_json", type=click.Path(),
                        help="path to a state JSON file")(func)
    return func


def _write_output(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


def _emit_grid_result(result, fmt, out):
    text = result.to_csv_text() if fmt == "csv" else result.to_json_text()
    _write_output(text, out)


@click.group()
def main():
    """Phase-space toolkit for angle / orbital-angular-momentum states."""


@main.command("eval")
@_state_options
@click.option("--grid", "grid_text", required=True,
              help="e.g. theta=-pi:pi:64,p=-3:3:121 (held axes: p2=0.5)")
@click.option("--path", type=click.Choice(["closed", "bilinear", "oracle"]),
              default="closed", show_default=True)
@click.option("--scale", type=click.Choice(["raw", "two-pi-d"]),
              default="raw", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--oracle-nodes", type=int, default=512, show_default=True)
@click.option("--out", type=click.Path(), help="output file (default stdout)")
def cmd_eval(qubit, bell, two_qubit, state_json, grid_text, path, scale, fmt,
             oracle_nodes, out):
    """Evaluate the quasiprobability density over a phase-space grid."""
    try:
        source = _build_source(qubit, bell, two_qubit, state_json)
        grid = PhaseGrid.from_string(grid_text)
        result = evaluate_grid(source, grid, path=path, scale=scale,
                               oracle_nodes=oracle_nodes)
    except (CylWignerError, ValueError, TypeError) as exc:
        raise click.UsageError(str(exc))
    _emit_grid_result(result, fmt, out)


@main.command("marginal")
@_state_options
@click.option("--axis", type=click.Choice(["angle", "momentum"]), required=True)
@click.option("--grid", "grid_text", required=True,
              help="1-axis grids: theta=-pi:pi:64 or p=-3:3:121 "
              "(two of them for torus states)")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--out", type=click.Path())
def cmd_marginal(qubit, bell, two_qubit, state_json, axis, grid_text, fmt, out):
    """Write the angular or momentum marginal density on a grid."""
    from .grids import AXES_1D, AXES_2D, GridAxis, GridResult, to_state

    try:
        source = _build_source(qubit, bell, two_qubit, state_json)
        state = to_state(source)
        ndim = 1 if isinstance(state, GeneralState) else 2
        wanted = (
            ("theta",) if (axis == "angle" and ndim == 1)
            else ("p",) if ndim == 1
            else ("theta1", "theta2") if axis == "angle"
            else ("p1", "p2")
        )
        entries = {}
        for chunk in grid_text.split(","):
            name, _, spec = chunk.strip().partition("=")
            entries[name.strip().lower()] = spec.strip()
        if tuple(sorted(entries)) != tuple(sorted(wanted)):
            raise InvalidGrid(
                f"marginal over {axis} of a {ndim}-axis state needs exactly "
                f"axes {list(wanted)}"
            )
        axes = []
        for name in wanted:
            parts = entries[name].split(":")
            if len(parts) != 3:
                raise InvalidGrid(f"axis {name}: expected lo:hi:n")
            lo, hi = parse_scalar(parts[0]), parse_scalar(parts[1])
            count = int(parts[2])
            if count < 2:
                raise InvalidGrid("swept axes need at least 2 nodes")
            axes.append(GridAxis(name, lo, hi, count, not name.startswith("theta")))
        meshes = np.meshgrid(*[ax.values() for ax in axes], indexing="ij")
        flats = [mesh.ravel() for mesh in meshes]
        if axis == "angle":
            values = marginal_angle(state, *flats)
        else:
            values = marginal_momentum(state, *flats)
        result = GridResult(
            tuple(axes), np.asarray(values, dtype=np.float64).ravel(),
            {
                "tool": "cylwigner",
                "state": describe_source(source),
                "marginal": axis,
            },
        )
    except (CylWignerError, ValueError, TypeError) as exc:
        raise click.UsageError(str(exc))
    _emit_grid_result(result, fmt, out)


@main.command("probs")
@_state_options
@click.option("--method", type=click.Choice(["auto", "analytic", "quadrature"]),
              default="auto", show_default=True)
@click.option("--trunc-radius", type=float, default=1000.0, show_default=True)
@click.option("--out", type=click.Path())
def cmd_probs(qubit, bell, two_qubit, state_json, method, trunc_radius, out):
    """Momentum-mode probabilities of a state as a JSON map."""
    from .grids import to_state

    try:
        source = _build_source(qubit, bell, two_qubit, state_json)
        state = to_state(source)
        probs = extract_oam_probabilities(state, method=method,
                                          trunc_radius=trunc_radius)
    except (CylWignerError, ValueError, TypeError) as exc:
        raise click.UsageError(str(exc))
    keyed = {
        (f"{k[0]},{k[1]}" if isinstance(k, tuple) else str(k)): v
        for k, v in probs.items()
    }
    _write_output(json.dumps(keyed, indent=2, sort_keys=True) + "\n", out)


@main.command("overlap")
@click.option("--qubit", required=True, help="m0,m1,alpha,beta[,delta]")
@click.option("--qubit2", required=True, help="m0,m1,alpha,beta[,delta]")
@click.option("--method", type=click.Choice(["direct", "phase-space"]),
              default="direct", show_default=True)
@click.option("--trunc-radius", type=float, default=1000.0, show_default=True)
@click.option("--theta-nodes", type=int, default=None)
@click.option("--out", type=click.Path())
def cmd_overlap(qubit, qubit2, method, trunc_radius, theta_nodes, out):
    """Transition probability between two qubits on the same subspace."""

    def build(text):
        vals = _parse_numbers(text, "qubit", 4, 5)
        delta = vals[4] if len(vals) > 4 else 0.0
        return QubitSpec(int(vals[0]), int(vals[1]), vals[2], vals[3], delta)

    try:
        first, second = build(qubit), build(qubit2)
        if method == "direct":
            value = transition_probability_direct(first, second)
        else:
            value = transition_probability_phase_space(
                first, second, trunc_radius=trunc_radius,
                theta_nodes=theta_nodes,
            )
    except (CylWignerError, ValueError) as exc:
        raise click.UsageError(str(exc))
    _write_output(f"{value:.17g}\n", out)


@main.command("verify")
@click.option("--trunc-radius", type=float, default=1000.0, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path())
def cmd_verify(trunc_radius, seed, out):
    """Run the verification battery; exit 1 if any check misses tolerance."""
    try:
        report = run_verification(seed=seed, trunc_radius=trunc_radius)
    except (CylWignerError, ValueError) as exc:
        raise click.UsageError(str(exc))
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    _write_output(text, out)
    if not report.passed:
        sys.exit(1)


@main.command("negativity")
@_state_options
@click.option("--grid", "grid_text", required=True)
@click.option("--path", type=click.Choice(["closed", "bilinear", "oracle"]),
              default="bilinear", show_default=True)
@click.option("--oracle-nodes", type=int, default=512, show_default=True)
@click.option("--out", type=click.Path())
def cmd_negativity(qubit, bell, two_qubit, state_json, grid_text, path,
                   oracle_nodes, out):
    """Scan a grid for negative density values."""
    try:
        source = _build_source(qubit, bell, two_qubit, state_json)
        grid = PhaseGrid.from_string(grid_text)
        summary = negativity_scan(source, grid, path=path,
                                  oracle_nodes=oracle_nodes)
        summary["state"] = describe_source(source)
    except (CylWignerError, ValueError, TypeError) as exc:
        raise click.UsageError(str(exc))
    _write_output(json.dumps(summary, indent=2, sort_keys=True) + "\n", out)


@main.command("spiral")
@click.option("--two-qubit", "two_qubit", required=True,
              help="m0,m1,n0,n1,beta,gamma,phi[,alpha10,alpha01,alpha11"
              "[,delta1,delta2]]")
@click.option("--samples", type=int, default=256, show_default=True)
@click.option("--vartheta-minus", type=float, default=0.0, show_default=True)
@click.option("--out", type=click.Path())
def cmd_spiral(two_qubit, samples, vartheta_minus, out):
    """Sample the torus interference curve as (v+, theta1, theta2) rows."""
    try:
        vals = _parse_numbers(two_qubit, "two-qubit", 7, 12)
        ints = [int(v) for v in vals[:4]]
        rest = list(vals[4:]) + [0.0] * (8 - len(vals[4:]))
        spec = TwoQubitSpec(*ints, *rest)
        rows = spiral_samples(spec, samples, vartheta_minus)
    except (CylWignerError, ValueError) as exc:
        raise click.UsageError(str(exc))
    lines = ["# columns: vartheta_plus theta1 theta2"]
    lines += [" ".join(f"{v:.17g}" for v in row) for row in rows]
    _write_output("\n".join(lines) + "\n", out)


if __name__ == "__main__":
    main()
