"""State representations: general superpositions, qubit and 2-qubit
parametrizations, Bell constructors, Bloch-vector densities, and the
winding decomposition of quasi-periodic boundary phases.

All types are immutable value objects.  Coefficients are stored as a
sorted sparse list of (mode index, complex amplitude) pairs; exact-zero
amplitudes are dropped so degenerate parametrizations collapse to basis
states.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateModes,
    DuplicateMode,
    NonNormalizedState,
    StateParseError,
    ZeroMode,
)

NORMALIZATION_TOL = 1e-12

BELL_KINDS = ("phi+", "phi-", "psi+", "psi-")


def _check_delta(delta, name="delta"):
    delta = float(delta)
    if not (0.0 <= delta < 1.0):
        raise ValueError(f"{name} must lie in [0, 1), got {delta!r}")
    return delta


def _wrap_angle(value, name):
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite")
    return value % (2.0 * math.pi)


def _clean_items(coefficients, key_check):
    items = sorted(dict(coefficients).items())
    cleaned = []
    for mode, amp in items:
        key_check(mode)
        amp = complex(amp)
        if not (math.isfinite(amp.real) and math.isfinite(amp.imag)):
            raise ValueError(f"amplitude for mode {mode!r} is not finite")
        if amp != 0:
            cleaned.append((mode, amp))
    if not cleaned:
        raise ValueError("state support is empty")
    return cleaned


def _check_norm(amps):
    norm_sq = float(np.sum(np.abs(amps) ** 2))
    if abs(norm_sq - 1.0) > NORMALIZATION_TOL:
        raise NonNormalizedState(
            f"sum |c|^2 = {norm_sq!r} deviates from 1 beyond {NORMALIZATION_TOL}"
        )


def _int_mode(mode):
    if not isinstance(mode, (int, np.integer)):
        raise ValueError(f"mode index must be an integer, got {mode!r}")


class GeneralState:
    """Normalized finite superposition of angular-momentum modes.

    ``delta`` in [0, 1) is the fractional momentum offset fixing the
    quasi-periodic boundary phase exp(i 2 pi delta) of the wave function.
    """

    __slots__ = ("_modes", "_amps", "delta")

    def __init__(self, coefficients, delta: float = 0.0):
        items = _clean_items(coefficients, _int_mode)
        modes = np.array([m for m, _ in items], dtype=np.int64)
        amps = np.array([c for _, c in items], dtype=np.complex128)
        modes.setflags(write=False)
        amps.setflags(write=False)
        object.__setattr__(self, "_modes", modes)
        object.__setattr__(self, "_amps", amps)
        object.__setattr__(self, "delta", _check_delta(delta))
        _check_norm(amps)

    def __setattr__(self, name, value):  # immutable value object
        raise AttributeError("GeneralState is immutable")

    @classmethod
    def normalized(cls, coefficients, delta: float = 0.0) -> "GeneralState":
        """Build a state from unnormalized coefficients."""
        items = dict(coefficients)
        scale = math.sqrt(sum(abs(complex(c)) ** 2 for c in items.values()))
        if scale == 0.0:
            raise NonNormalizedState("all coefficients vanish")
        return cls({m: complex(c) / scale for m, c in items.items()}, delta)

    @property
    def modes(self) -> np.ndarray:
        return self._modes

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    @property
    def support(self) -> tuple:
        return tuple(int(m) for m in self._modes)

    @property
    def coefficients(self) -> dict:
        return {int(m): complex(c) for m, c in zip(self._modes, self._amps)}

    def __eq__(self, other):
        return (
            isinstance(other, GeneralState)
            and self.delta == other.delta
            and np.array_equal(self._modes, other._modes)
            and np.array_equal(self._amps, other._amps)
        )

    def __hash__(self):
        return hash((self.delta, self._modes.tobytes(), self._amps.tobytes()))

    def __repr__(self):
        terms = ", ".join(f"{m}: {c:.6g}" for m, c in self.coefficients.items())
        return f"GeneralState({{{terms}}}, delta={self.delta:.6g})"

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "coefficients": [
                [int(m), float(c.real), float(c.imag)]
                for m, c in zip(self._modes, self._amps)
            ],
        }

    @classmethod
    def from_dict(cls, data) -> "GeneralState":
        try:
            coeffs = {
                int(entry[0]): complex(entry[1], entry[2])
                for entry in data["coefficients"]
            }
            return cls(coeffs, float(data.get("delta", 0.0)))
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise StateParseError(f"bad one-axis state payload: {exc}") from exc


def _pair_mode(mode):
    if (
        not isinstance(mode, tuple)
        or len(mode) != 2
        or not all(isinstance(m, (int, np.integer)) for m in mode)
    ):
        raise ValueError(f"mode index must be an (m, n) integer pair, got {mode!r}")


class TwoModeState:
    """Normalized finite superposition over pairs of modes (torus states)."""

    __slots__ = ("_modes1", "_modes2", "_amps", "delta1", "delta2")

    def __init__(self, coefficients, delta1: float = 0.0, delta2: float = 0.0):
        items = _clean_items(coefficients, _pair_mode)
        modes1 = np.array([m for (m, _), _ in items], dtype=np.int64)
        modes2 = np.array([n for (_, n), _ in items], dtype=np.int64)
        amps = np.array([c for _, c in items], dtype=np.complex128)
        for arr in (modes1, modes2, amps):
            arr.setflags(write=False)
        object.__setattr__(self, "_modes1", modes1)
        object.__setattr__(self, "_modes2", modes2)
        object.__setattr__(self, "_amps", amps)
        object.__setattr__(self, "delta1", _check_delta(delta1, "delta1"))
        object.__setattr__(self, "delta2", _check_delta(delta2, "delta2"))
        _check_norm(amps)

    def __setattr__(self, name, value):
        raise AttributeError("TwoModeState is immutable")

    @classmethod
    def normalized(cls, coefficients, delta1=0.0, delta2=0.0) -> "TwoModeState":
        items = dict(coefficients)
        scale = math.sqrt(sum(abs(complex(c)) ** 2 for c in items.values()))
        if scale == 0.0:
            raise NonNormalizedState("all coefficients vanish")
        return cls(
            {mn: complex(c) / scale for mn, c in items.items()}, delta1, delta2
        )

    @property
    def modes1(self) -> np.ndarray:
        return self._modes1

    @property
    def modes2(self) -> np.ndarray:
        return self._modes2

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    @property
    def support(self) -> tuple:
        return tuple(
            (int(m), int(n)) for m, n in zip(self._modes1, self._modes2)
        )

    @property
    def coefficients(self) -> dict:
        return {
            (int(m), int(n)): complex(c)
            for m, n, c in zip(self._modes1, self._modes2, self._amps)
        }

    def __eq__(self, other):
        return (
            isinstance(other, TwoModeState)
            and self.delta1 == other.delta1
            and self.delta2 == other.delta2
            and np.array_equal(self._modes1, other._modes1)
            and np.array_equal(self._modes2, other._modes2)
            and np.array_equal(self._amps, other._amps)
        )

    def __hash__(self):
        return hash(
            (
                self.delta1,
                self.delta2,
                self._modes1.tobytes(),
                self._modes2.tobytes(),
                self._amps.tobytes(),
            )
        )

    def __repr__(self):
        terms = ", ".join(f"{mn}: {c:.6g}" for mn, c in self.coefficients.items())
        return (
            f"TwoModeState({{{terms}}}, delta1={self.delta1:.6g}, "
            f"delta2={self.delta2:.6g})"
        )

    def to_dict(self) -> dict:
        return {
            "delta1": self.delta1,
            "delta2": self.delta2,
            "coefficients": [
                [int(m), int(n), float(c.real), float(c.imag)]
                for m, n, c in zip(self._modes1, self._modes2, self._amps)
            ],
        }

    @classmethod
    def from_dict(cls, data) -> "TwoModeState":
        try:
            coeffs = {
                (int(entry[0]), int(entry[1])): complex(entry[2], entry[3])
                for entry in data["coefficients"]
            }
            return cls(
                coeffs,
                float(data.get("delta1", 0.0)),
                float(data.get("delta2", 0.0)),
            )
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise StateParseError(f"bad two-axis state payload: {exc}") from exc


def state_to_json(state) -> str:
    """Serialize a state to the JSON wire format (17 significant digits)."""
    return json.dumps(state.to_dict())


def state_from_json(text: str):
    """Parse the JSON wire format; dispatches on the delta keys present."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise StateParseError("state JSON must be an object")
    if "delta1" in data or "delta2" in data:
        return TwoModeState.from_dict(data)
    return GeneralState.from_dict(data)


@dataclass(frozen=True)
class QubitSpec:
    """Two-mode superposition cos(beta) e_m0 + sin(beta) e^{i alpha} e_m1.

    beta in [0, pi/2] (the boundary values are degenerate basis states),
    alpha in [0, 2 pi), delta in [0, 1).
    """

    m0: int
    m1: int
    alpha: float
    beta: float
    delta: float = 0.0

    def __post_init__(self):
        if self.m0 == self.m1:
            raise DegenerateModes("qubit modes must differ")
        object.__setattr__(self, "alpha", _wrap_angle(self.alpha, "alpha"))
        beta = float(self.beta)
        if not (0.0 <= beta <= math.pi / 2):
            raise ValueError(f"beta must lie in [0, pi/2], got {beta!r}")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "delta", _check_delta(self.delta))


@dataclass(frozen=True)
class TwoQubitSpec:
    """General element of the 4-dimensional two-mode-pair subspace.

    Real magnitudes come from the hyperspherical angles

        b00 = cos(beta)
        b10 = sin(beta) cos(gamma)
        b01 = sin(beta) sin(gamma) cos(phi)
        b11 = sin(beta) sin(gamma) sin(phi)

    with beta, gamma in [0, pi) and phi in [0, 2 pi); the relative phases
    alpha10, alpha01, alpha11 dress the non-anchor coefficients.
    """

    m0: int
    m1: int
    n0: int
    n1: int
    beta: float
    gamma: float = 0.0
    phi: float = 0.0
    alpha10: float = 0.0
    alpha01: float = 0.0
    alpha11: float = 0.0
    delta1: float = 0.0
    delta2: float = 0.0

    def __post_init__(self):
        if self.m0 == self.m1 or self.n0 == self.n1:
            raise DegenerateModes("both mode gaps must be nonzero")
        for name in ("beta", "gamma"):
            value = float(getattr(self, name))
            if not (0.0 <= value < math.pi):
                raise ValueError(f"{name} must lie in [0, pi), got {value!r}")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "phi", _wrap_angle(self.phi, "phi"))
        for name in ("alpha10", "alpha01", "alpha11"):
            object.__setattr__(self, name, _wrap_angle(getattr(self, name), name))
        object.__setattr__(self, "delta1", _check_delta(self.delta1, "delta1"))
        object.__setattr__(self, "delta2", _check_delta(self.delta2, "delta2"))

    @property
    def b00(self) -> float:
        return math.cos(self.beta)

    @property
    def b10(self) -> float:
        return math.sin(self.beta) * math.cos(self.gamma)

    @property
    def b01(self) -> float:
        return math.sin(self.beta) * math.sin(self.gamma) * math.cos(self.phi)

    @property
    def b11(self) -> float:
        return math.sin(self.beta) * math.sin(self.gamma) * math.sin(self.phi)

    @property
    def amplitudes4(self) -> tuple:
        """(b00, b10, b01, b11) in this fixed order."""
        return (self.b00, self.b10, self.b01, self.b11)

    @classmethod
    def from_amplitudes(
        cls, m0, m1, n0, n1, b00, b10, b01, b11,
        alpha10=0.0, alpha01=0.0, alpha11=0.0, delta1=0.0, delta2=0.0,
    ) -> "TwoQubitSpec":
        """Recover the angle parametrization from real magnitudes.

        Signs that cannot be carried by the angle ranges are folded into
        the corresponding phase (or a global phase for the anchor).
        """
        b = np.array([b00, b10, b01, b11], dtype=float)
        norm_sq = float(np.sum(b * b))
        if abs(norm_sq - 1.0) > NORMALIZATION_TOL:
            raise NonNormalizedState(
                f"sum b^2 = {norm_sq!r} deviates from 1 beyond {NORMALIZATION_TOL}"
            )
        if b[0] < 0.0:  # global phase flip
            b = -b
            alpha10 += math.pi
            alpha01 += math.pi
            alpha11 += math.pi
        if b[1] < 0.0 and b[2] == 0.0 and b[3] == 0.0:
            b[1] = -b[1]
            alpha10 += math.pi
        beta = math.acos(min(1.0, max(-1.0, b[0])))
        rest = math.hypot(b[2], b[3])
        gamma = math.atan2(rest, b[1]) if (rest or b[1]) else 0.0
        phi = math.atan2(b[3], b[2]) if (b[2] or b[3]) else 0.0
        return cls(
            m0, m1, n0, n1, beta, gamma, phi % (2 * math.pi),
            alpha10, alpha01, alpha11, delta1, delta2,
        )


@dataclass(frozen=True)
class BellSpec:
    """Label for one of the four maximally entangled basis states.

    ``kind`` is one of 'phi+', 'phi-' (equal-momentum branches m0, m0 and
    -m0, -m0) or 'psi+', 'psi-' (opposite-momentum branches m0, -m0).
    """

    kind: str
    m0: int

    def __post_init__(self):
        if self.kind not in BELL_KINDS:
            raise ValueError(f"kind must be one of {BELL_KINDS}, got {self.kind!r}")
        if self.m0 == 0:
            raise ZeroMode("Bell constructions need a nonzero mode index")


@dataclass(frozen=True)
class BlochDensity:
    """2x2 density matrix on the (m0, m1) subspace as a Bloch vector."""

    m0: int
    m1: int
    a: tuple
    delta: float = 0.0

    def __post_init__(self):
        from .errors import InvalidBlochVector

        if self.m0 == self.m1:
            raise DegenerateModes("density subspace modes must differ")
        vec = tuple(float(x) for x in self.a)
        if len(vec) != 3 or not all(math.isfinite(x) for x in vec):
            raise ValueError("Bloch vector must be a finite real 3-vector")
        if math.sqrt(sum(x * x for x in vec)) > 1.0 + 1e-12:
            raise InvalidBlochVector(f"|a| = {math.sqrt(sum(x*x for x in vec))!r} > 1")
        object.__setattr__(self, "a", vec)
        object.__setattr__(self, "delta", _check_delta(self.delta))

    @property
    def purity(self) -> float:
        """tr(rho^2) = (1 + |a|^2)/2."""
        return 0.5 * (1.0 + sum(x * x for x in self.a))


class WindingDecomposition(tuple):
    """Integer winding number plus fractional offset, b = n_b + delta."""

    __slots__ = ()

    def __new__(cls, n_b: int, delta: float):
        return super().__new__(cls, (int(n_b), float(delta)))

    @property
    def n_b(self) -> int:
        return self[0]

    @property
    def delta(self) -> float:
        return self[1]

    @property
    def b(self) -> float:
        return self.n_b + self.delta


# ---------------------------------------------------------------------------
# constructors


def qubit_to_state(spec: QubitSpec) -> GeneralState:
    """Coefficients {m0: cos(beta), m1: e^{i alpha} sin(beta)}."""
    c0 = math.cos(spec.beta)
    c1 = math.sin(spec.beta) * complex(math.cos(spec.alpha), math.sin(spec.alpha))
    return GeneralState({spec.m0: c0, spec.m1: c1}, spec.delta)


def qubit_from_state(state: GeneralState, m0: int, m1: int) -> QubitSpec:
    """Read (alpha, beta) back from a two-mode state on (m0, m1).

    The anchor coefficient's phase is treated as the global phase, so the
    round trip is exact for beta strictly inside (0, pi/2).
    """
    coeffs = state.coefficients
    extra = set(coeffs) - {m0, m1}
    if extra:
        raise ValueError(f"state has support outside {{m0, m1}}: {sorted(extra)}")
    c0 = coeffs.get(m0, 0j)
    c1 = coeffs.get(m1, 0j)
    beta = math.atan2(abs(c1), abs(c0))
    global_phase = math.atan2(c0.imag, c0.real) if c0 != 0 else 0.0
    alpha = (math.atan2(c1.imag, c1.real) - global_phase) if c1 != 0 else 0.0
    return QubitSpec(m0, m1, alpha % (2 * math.pi), beta, state.delta)


def uniform_qudit(modes, delta: float = 0.0) -> GeneralState:
    """Equal-weight superposition (e_{m_0} + ... + e_{m_{d-1}}) / sqrt(d)."""
    modes = list(modes)
    if len(set(modes)) != len(modes):
        raise DuplicateMode(f"modes must be distinct, got {modes!r}")
    if not modes:
        raise ValueError("need at least one mode")
    amp = 1.0 / math.sqrt(len(modes))
    return GeneralState({int(m): amp for m in modes}, delta)


def two_qubit_to_state(spec: TwoQubitSpec) -> TwoModeState:
    """Coefficients on (m0,n0), (m1,n0), (m0,n1), (m1,n1) with their phases."""

    def phased(b, alpha):
        return b * complex(math.cos(alpha), math.sin(alpha))

    coeffs = {
        (spec.m0, spec.n0): complex(spec.b00),
        (spec.m1, spec.n0): phased(spec.b10, spec.alpha10),
        (spec.m0, spec.n1): phased(spec.b01, spec.alpha01),
        (spec.m1, spec.n1): phased(spec.b11, spec.alpha11),
    }
    return TwoModeState(coeffs, spec.delta1, spec.delta2)


def bell_state(kind: str, m0: int) -> TwoModeState:
    """One of the four entangled basis states on modes (m0, -m0).

    phi+/-: (e_{m0} e_{m0} +/- e_{-m0} e_{-m0}) / sqrt(2)
    psi+/-: (e_{m0} e_{-m0} +/- e_{-m0} e_{m0}) / sqrt(2)
    """
    spec = BellSpec(kind, int(m0))
    amp = 1.0 / math.sqrt(2.0)
    sign = 1.0 if spec.kind.endswith("+") else -1.0
    if spec.kind.startswith("phi"):
        coeffs = {(spec.m0, spec.m0): amp, (-spec.m0, -spec.m0): sign * amp}
    else:
        coeffs = {(spec.m0, -spec.m0): amp, (-spec.m0, spec.m0): sign * amp}
    return TwoModeState(coeffs)


def bell_family_state(
    family: str, mixing: float, phase: float, modes, deltas=(0.0, 0.0)
) -> TwoModeState:
    """Two-branch entangled superposition generalizing the Bell states.

    family '00-11': cos(mixing) on (m0, n0) plus e^{i phase} sin(mixing)
    on (m1, n1); family '10-01': cos(mixing) on (m1, n0) plus
    e^{i phase} sin(mixing) on (m0, n1).
    """
    m0, m1, n0, n1 = (int(m) for m in modes)
    if m0 == m1 or n0 == n1:
        raise DegenerateModes("both mode gaps must be nonzero")
    c = math.cos(mixing)
    s = math.sin(mixing) * complex(math.cos(phase), math.sin(phase))
    if family == "00-11":
        coeffs = {(m0, n0): c, (m1, n1): s}
    elif family == "10-01":
        coeffs = {(m1, n0): c, (m0, n1): s}
    else:
        raise ValueError(f"family must be '00-11' or '10-01', got {family!r}")
    return TwoModeState(coeffs, *deltas)


def product_state(first: GeneralState, second: GeneralState) -> TwoModeState:
    """Tensor product c_{mn} = a_m b_n of two one-axis states."""
    coeffs = {}
    for m, a in first.coefficients.items():
        for n, b in second.coefficients.items():
            coeffs[(m, n)] = a * b
    return TwoModeState(coeffs, first.delta, second.delta)


def expectation_L(state) -> float:
    """Expectation of the (total) angular momentum.

    sum (m + delta) |c_m|^2 for one-axis states; the two-axis version adds
    the mode indices and both offsets.
    """
    if isinstance(state, TwoModeState):
        weights = np.abs(state.amplitudes) ** 2
        eig = state.modes1 + state.modes2 + (state.delta1 + state.delta2)
        return float(np.sum(eig * weights))
    weights = np.abs(state.amplitudes) ** 2
    return float(np.sum((state.modes + state.delta) * weights))


def density_from_qubit(spec: QubitSpec) -> BlochDensity:
    """Pure-state density matrix of a qubit as a unit Bloch vector."""
    a1 = math.sin(2 * spec.beta) * math.cos(spec.alpha)
    a2 = math.sin(2 * spec.beta) * math.sin(spec.alpha)
    a3 = math.cos(2 * spec.beta)
    return BlochDensity(spec.m0, spec.m1, (a1, a2, a3), spec.delta)


def decompose_winding(b: float) -> WindingDecomposition:
    """Split a boundary winding b uniquely as integer + delta in [0, 1).

    Uses floor, so negative b gets the offset pushed into [0, 1).  In the
    single pathological rounding case (b just below zero, where b + 1
    rounds to 1.0) the result is bumped to (n_b + 1, 0.0), which still
    reconstructs b to within one ulp.
    """
    b = float(b)
    if not math.isfinite(b):
        raise ValueError(f"winding must be finite, got {b!r}")
    n_b = math.floor(b)
    delta = b - n_b
    if delta >= 1.0:
        return WindingDecomposition(n_b + 1, 0.0)
    return WindingDecomposition(n_b, delta)
