"""Self-verification: sinc identities plus cross-path agreement on random
states, collected into a JSON-serializable report.

This backs the ``verify`` CLI command.  Tolerances: exact algebraic
identities 1e-12, oracle quadrature 1e-9, truncated improper integrals
1e-3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._backend import BACKEND
from .closedforms import qubit_wigner, two_qubit_wigner
from .kernel import PhasePoint, wigner_bilinear_1d, wigner_bilinear_2d
from .marginals import (
    marginal_angle,
    momentum_integrated_density,
    transition_probability_direct,
    transition_probability_phase_space,
)
from .oracle import oracle_wigner_1d, oracle_wigner_2d, verify_sinc_identities
from .sampling import (
    random_phase_point,
    random_phase_point4,
    random_qubit_spec,
    random_qudit_state,
    random_two_qubit_spec,
)
from .states import qubit_to_state, two_qubit_to_state

EXACT_TOL = 1e-12
ORACLE_TOL = 1e-9
TRUNCATION_TOL = 1e-3


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass
class VerificationReport:
    seed: int
    trunc_radius: float
    backend: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trunc_radius": self.trunc_radius,
            "backend": self.backend,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }


def run_verification(
    seed: int = 0,
    trunc_radius: float = 1000.0,
    n_qubits: int = 8,
    n_two_qubits: int = 4,
    n_qudits: int = 3,
    n_points: int = 4,
    oracle_nodes_1d: int = 512,
    oracle_nodes_2d: int = 256,
) -> VerificationReport:
    """Run the verification battery and collect one result per check."""
    rng = np.random.default_rng(seed)
    report = VerificationReport(int(seed), float(trunc_radius), BACKEND)

    sinc = verify_sinc_identities(trunc_radius)
    for kind in ("single", "square", "orthonormality"):
        dev = max(
            row["deviation"] for row in sinc.checks if row["kind"] == kind
        )
        report.checks.append(
            CheckResult(f"sinc-{kind}", float(dev), TRUNCATION_TOL)
        )

    closed_vs_bilinear = 0.0
    bilinear_vs_oracle = 0.0
    for _ in range(n_qubits):
        spec = random_qubit_spec(rng)
        state = qubit_to_state(spec)
        for _ in range(n_points):
            pt = random_phase_point(rng)
            closed = qubit_wigner(spec, pt)
            bilinear = wigner_bilinear_1d(state, pt)
            closed_vs_bilinear = max(closed_vs_bilinear, abs(closed - bilinear))
            oracle = oracle_wigner_1d(state, pt, oracle_nodes_1d)
            bilinear_vs_oracle = max(bilinear_vs_oracle, abs(bilinear - oracle))
    for _ in range(n_qudits):
        state = random_qudit_state(rng)
        for _ in range(n_points):
            pt = random_phase_point(rng)
            bilinear = wigner_bilinear_1d(state, pt)
            oracle = oracle_wigner_1d(state, pt, oracle_nodes_1d)
            bilinear_vs_oracle = max(bilinear_vs_oracle, abs(bilinear - oracle))
    report.checks.append(
        CheckResult("closed-vs-bilinear-1d", closed_vs_bilinear, EXACT_TOL)
    )
    report.checks.append(
        CheckResult("bilinear-vs-oracle-1d", bilinear_vs_oracle, ORACLE_TOL)
    )

    closed_vs_bilinear = 0.0
    bilinear_vs_oracle = 0.0
    for _ in range(n_two_qubits):
        spec = random_two_qubit_spec(rng)
        state = two_qubit_to_state(spec)
        for _ in range(n_points):
            pt = random_phase_point4(rng)
            closed = two_qubit_wigner(spec, pt)
            bilinear = wigner_bilinear_2d(state, pt)
            closed_vs_bilinear = max(closed_vs_bilinear, abs(closed - bilinear))
            oracle = oracle_wigner_2d(state, pt, oracle_nodes_2d)
            bilinear_vs_oracle = max(bilinear_vs_oracle, abs(bilinear - oracle))
    report.checks.append(
        CheckResult("closed-vs-bilinear-2d", closed_vs_bilinear, EXACT_TOL)
    )
    report.checks.append(
        CheckResult("bilinear-vs-oracle-2d", bilinear_vs_oracle, ORACLE_TOL)
    )

    # fractional-offset covariance: shifting delta equals shifting momentum
    dev = 0.0
    for _ in range(4):
        base = random_qudit_state(rng, with_delta=False)
        for delta in (0.1, 0.25, 0.5, 0.9):
            shifted = type(base)(base.coefficients, delta)
            for _ in range(2):
                pt = random_phase_point(rng)
                with_offset = wigner_bilinear_1d(shifted, pt)
                reference = wigner_bilinear_1d(
                    base, PhasePoint(pt.theta, pt.p - delta)
                )
                dev = max(dev, abs(with_offset - reference))
    report.checks.append(CheckResult("delta-shift-covariance", dev, EXACT_TOL))

    # momentum-integrated density against the angular marginal
    dev = 0.0
    thetas = np.linspace(-math.pi, math.pi, 16, endpoint=False)
    for _ in range(2):
        spec = random_qubit_spec(rng)
        state = qubit_to_state(spec)
        numeric = momentum_integrated_density(state, thetas,
                                              trunc_radius=trunc_radius)
        exact = marginal_angle(state, thetas)
        dev = max(dev, float(np.max(np.abs(numeric - exact))))
    report.checks.append(
        CheckResult("momentum-marginal-consistency", dev, TRUNCATION_TOL)
    )

    # phase-space transition probability against the algebraic formula
    dev = 0.0
    for _ in range(4):
        first = random_qubit_spec(rng, with_delta=False)
        second = QubitSpec(
            first.m0, first.m1,
            alpha=float(rng.uniform(0.0, 2.0 * math.pi)),
            beta=float(rng.uniform(0.0, math.pi / 2)),
            delta=first.delta,
        )
        direct = transition_probability_direct(first, second)
        integral = transition_probability_phase_space(
            first, second, trunc_radius=trunc_radius
        )
        dev = max(dev, abs(direct - integral))
    report.checks.append(CheckResult("overlap-identity", dev, TRUNCATION_TOL))

    return report
