"""Rectangular phase-space grids and their evaluation.

Axis naming is fixed: ``theta`` and ``p`` on the cylinder, ``theta1``,
``theta2``, ``p1``, ``p2`` on the torus.  Swept angle axes are half-open
(``[lo, hi)``, periodic), swept momentum axes are closed (``[lo, hi]``).
Held axes carry a single explicit value.  Rows are emitted in row-major
order over the canonical axis order, so identical invocations produce
byte-identical files.
"""

from __future__ import annotations

import io
import json
import math
import re
from dataclasses import dataclass

import numpy as np

from ._backend import BACKEND
from .closedforms import (
    bell_wigner_arrays,
    density_wigner_arrays,
    qubit_wigner_arrays,
    two_qubit_wigner_arrays,
)
from .errors import InvalidGrid
from .kernel import (
    PhasePoint,
    PhasePoint4,
    evaluate_bilinear_1d,
    evaluate_bilinear_2d,
)
from .oracle import oracle_wigner_1d, oracle_wigner_2d
from .states import (
    BellSpec,
    BlochDensity,
    GeneralState,
    QubitSpec,
    TwoModeState,
    TwoQubitSpec,
    bell_state,
    qubit_to_state,
    two_qubit_to_state,
)

AXES_1D = ("theta", "p")
AXES_2D = ("theta1", "theta2", "p1", "p2")

_PI_TOKEN = re.compile(
    r"^\s*([+-]?)\s*(\d+(?:\.\d*)?|\.\d+)?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?|\.\d+))?\s*$",
    re.IGNORECASE,
)


def parse_scalar(token: str) -> float:
    """Parse a float, allowing 'pi' multiples like '-pi', '2pi', 'pi/4'."""
    match = _PI_TOKEN.match(token)
    if match:
        sign = -1.0 if match.group(1) == "-" else 1.0
        factor = float(match.group(2)) if match.group(2) else 1.0
        divisor = float(match.group(3)) if match.group(3) else 1.0
        if divisor == 0.0:
            raise InvalidGrid(f"division by zero in {token!r}")
        return sign * factor * math.pi / divisor
    try:
        return float(token)
    except ValueError as exc:
        raise InvalidGrid(f"cannot parse number {token!r}") from exc


@dataclass(frozen=True)
class GridAxis:
    """One axis: swept over [lo, hi] with ``count`` nodes, or held at lo."""

    name: str
    lo: float
    hi: float
    count: int
    endpoint: bool

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidGrid(f"axis {self.name}: range must be finite")
        if self.count < 1:
            raise InvalidGrid(f"axis {self.name}: need at least one node")
        if self.count > 1 and self.hi <= self.lo:
            raise InvalidGrid(f"axis {self.name}: empty range")

    @property
    def held(self) -> bool:
        return self.count == 1

    def values(self) -> np.ndarray:
        if self.held:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.count, endpoint=self.endpoint)

    def describe(self) -> str:
        if self.held:
            return f"{self.name}={self.lo:.17g}"
        bracket = "]" if self.endpoint else ")"
        return f"{self.name}=[{self.lo:.17g},{self.hi:.17g}{bracket}x{self.count}"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lo": self.lo,
            "hi": self.hi,
            "count": self.count,
            "endpoint": self.endpoint,
            "held": self.held,
        }


@dataclass(frozen=True)
class PhaseGrid:
    """Axes in canonical order; dimensionality fixed by the axis names."""

    axes: tuple

    def __post_init__(self):
        names = tuple(axis.name for axis in self.axes)
        if names not in (AXES_1D, AXES_2D):
            raise InvalidGrid(
                f"grid must define exactly {AXES_1D} or {AXES_2D}, got {names}"
            )

    @property
    def ndim_state(self) -> int:
        return 1 if len(self.axes) == 2 else 2

    @property
    def shape(self) -> tuple:
        return tuple(axis.count for axis in self.axes)

    @property
    def n_points(self) -> int:
        return int(np.prod(self.shape))

    def meshes(self) -> dict:
        """Flat row-major coordinate arrays keyed by axis name."""
        grids = np.meshgrid(*[axis.values() for axis in self.axes], indexing="ij")
        return {
            axis.name: grid.ravel() for axis, grid in zip(self.axes, grids)
        }

    @classmethod
    def from_string(cls, text: str) -> "PhaseGrid":
        """Parse e.g. ``theta=-pi:pi:64,p=-3:3:121`` or held ``p2=0.5``."""
        entries = {}
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "=" not in chunk:
                raise InvalidGrid(f"expected name=value in {chunk!r}")
            name, _, spec = chunk.partition("=")
            name = name.strip().lower()
            if name in entries:
                raise InvalidGrid(f"axis {name!r} given twice")
            entries[name] = spec.strip()
        names = tuple(sorted(entries))
        if set(names) == set(AXES_1D):
            order = AXES_1D
        elif set(names) == set(AXES_2D):
            order = AXES_2D
        else:
            raise InvalidGrid(
                f"grid axes {sorted(entries)} must be exactly "
                f"{list(AXES_1D)} or {list(AXES_2D)}"
            )
        axes = []
        for name in order:
            spec = entries[name]
            parts = spec.split(":")
            is_angle = name.startswith("theta")
            if len(parts) == 1:
                value = parse_scalar(parts[0])
                axes.append(GridAxis(name, value, value, 1, True))
            elif len(parts) == 3:
                lo = parse_scalar(parts[0])
                hi = parse_scalar(parts[1])
                try:
                    count = int(parts[2])
                except ValueError as exc:
                    raise InvalidGrid(f"bad node count in {spec!r}") from exc
                if count < 2:
                    raise InvalidGrid(
                        f"axis {name}: swept axes need at least 2 nodes"
                    )
                axes.append(GridAxis(name, lo, hi, count, not is_angle))
            else:
                raise InvalidGrid(f"axis {name}: expected 'value' or 'lo:hi:n'")
        return cls(tuple(axes))


@dataclass(frozen=True)
class GridResult:
    """Evaluated grid: axis definitions, row-major values, and metadata."""

    axes: tuple
    values: np.ndarray
    metadata: dict

    def to_csv_text(self) -> str:
        out = io.StringIO()
        for key, value in self.metadata.items():
            out.write(f"# {key}: {value}\n")
        for axis in self.axes:
            out.write(f"# axis: {axis.describe()}\n")
        names = " ".join(axis.name for axis in self.axes)
        out.write(f"# columns: {names} value\n")
        meshes = np.meshgrid(*[axis.values() for axis in self.axes], indexing="ij")
        columns = [mesh.ravel() for mesh in meshes] + [self.values]
        for row in zip(*columns):
            out.write(" ".join(f"{value:.17g}" for value in row) + "\n")
        return out.getvalue()

    def to_json_text(self) -> str:
        payload = {
            "metadata": self.metadata,
            "axes": [axis.to_dict() for axis in self.axes],
            "values": [float(v) for v in self.values],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _source_ndim(source) -> int:
    if isinstance(source, (QubitSpec, BlochDensity, GeneralState)):
        return 1
    if isinstance(source, (TwoQubitSpec, BellSpec, TwoModeState)):
        return 2
    raise TypeError(f"cannot evaluate source of type {type(source).__name__}")


def describe_source(source) -> str:
    if isinstance(source, QubitSpec):
        return (
            f"qubit(m0={source.m0}, m1={source.m1}, alpha={source.alpha:.17g}, "
            f"beta={source.beta:.17g}, delta={source.delta:.17g})"
        )
    if isinstance(source, TwoQubitSpec):
        return (
            f"two-qubit(m0={source.m0}, m1={source.m1}, n0={source.n0}, "
            f"n1={source.n1}, beta={source.beta:.17g}, gamma={source.gamma:.17g}, "
            f"phi={source.phi:.17g}, alpha10={source.alpha10:.17g}, "
            f"alpha01={source.alpha01:.17g}, alpha11={source.alpha11:.17g}, "
            f"delta1={source.delta1:.17g}, delta2={source.delta2:.17g})"
        )
    if isinstance(source, BellSpec):
        return f"bell({source.kind}, m0={source.m0})"
    if isinstance(source, BlochDensity):
        return (
            f"bloch(m0={source.m0}, m1={source.m1}, a=({source.a[0]:.17g}, "
            f"{source.a[1]:.17g}, {source.a[2]:.17g}), delta={source.delta:.17g})"
        )
    return repr(source)


def to_state(source):
    """Pure-state view of a source (densities have none)."""
    if isinstance(source, QubitSpec):
        return qubit_to_state(source)
    if isinstance(source, TwoQubitSpec):
        return two_qubit_to_state(source)
    if isinstance(source, BellSpec):
        return bell_state(source.kind, source.m0)
    if isinstance(source, (GeneralState, TwoModeState)):
        return source
    raise TypeError(f"no pure-state view for {type(source).__name__}")


def _closed_form_values(source, coords) -> np.ndarray:
    if isinstance(source, QubitSpec):
        return qubit_wigner_arrays(source, coords["theta"], coords["p"])
    if isinstance(source, BlochDensity):
        return density_wigner_arrays(source, coords["theta"], coords["p"])
    if isinstance(source, TwoQubitSpec):
        return two_qubit_wigner_arrays(
            source, coords["theta1"], coords["theta2"], coords["p1"], coords["p2"]
        )
    if isinstance(source, BellSpec):
        return bell_wigner_arrays(
            source.kind, source.m0,
            coords["theta1"], coords["theta2"], coords["p1"], coords["p2"],
        )
    raise ValueError(
        "closed-form path needs a parametrized source (qubit, two-qubit, "
        "bell, or bloch); use the bilinear or oracle path for general states"
    )


def evaluate_grid(source, grid: PhaseGrid, path: str = "closed",
                  scale: str = "raw", oracle_nodes: int = 512) -> GridResult:
    """Evaluate a source over a grid along one of three paths.

    ``closed`` uses the explicit formulas (parametrized sources only),
    ``bilinear`` the exact kernel sum, ``oracle`` the offset-integral
    quadrature.  ``scale='two-pi-d'`` multiplies by (2 pi)^d, the
    convention used in surface plots.
    """
    ndim = _source_ndim(source)
    if grid.ndim_state != ndim:
        raise InvalidGrid(
            f"grid is {grid.ndim_state}-axis but the state is {ndim}-axis"
        )
    coords = grid.meshes()
    if path == "closed":
        values = np.asarray(_closed_form_values(source, coords), dtype=np.float64)
    elif path == "bilinear":
        state = to_state(source)
        if ndim == 1:
            values = evaluate_bilinear_1d(state, coords["theta"], coords["p"])
        else:
            values = evaluate_bilinear_2d(
                state, coords["theta1"], coords["theta2"],
                coords["p1"], coords["p2"],
            )
    elif path == "oracle":
        state = to_state(source)
        if ndim == 1:
            values = np.array(
                [
                    oracle_wigner_1d(state, PhasePoint(t, p), oracle_nodes)
                    for t, p in zip(coords["theta"], coords["p"])
                ]
            )
        else:
            values = np.array(
                [
                    oracle_wigner_2d(state, PhasePoint4(t1, t2, p1, p2),
                                     oracle_nodes)
                    for t1, t2, p1, p2 in zip(
                        coords["theta1"], coords["theta2"],
                        coords["p1"], coords["p2"],
                    )
                ]
            )
    else:
        raise ValueError(f"unknown path {path!r}")

    if scale == "two-pi-d":
        values = values * (2.0 * math.pi) ** ndim
    elif scale != "raw":
        raise ValueError(f"unknown scale {scale!r}")

    metadata = {
        "tool": "cylwigner",
        "state": describe_source(source),
        "path": path,
        "scale": scale,
        "backend": BACKEND,
    }
    if path == "oracle":
        metadata["oracle_nodes"] = oracle_nodes
    return GridResult(grid.axes, np.asarray(values, dtype=np.float64).ravel(),
                      metadata)


def negativity_scan(source, grid: PhaseGrid, path: str = "bilinear",
                    oracle_nodes: int = 512) -> dict:
    """Scan a grid for negative density: minimum, its location, fraction."""
    result = evaluate_grid(source, grid, path=path, oracle_nodes=oracle_nodes)
    values = result.values
    idx = int(np.argmin(values))
    unraveled = np.unravel_index(idx, grid.shape)
    argmin = {
        axis.name: float(axis.values()[k])
        for axis, k in zip(grid.axes, unraveled)
    }
    return {
        "min_value": float(values[idx]),
        "argmin": argmin,
        "negative_fraction": float(np.mean(values < 0.0)),
        "n_points": int(values.size),
        "path": path,
    }
