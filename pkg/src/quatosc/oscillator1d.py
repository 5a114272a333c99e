"""One-dimensional quaternionic oscillator: states, energies, Gram matrices,
ladder operators and the Schroedinger residual.

The basis candidates are two-slot states built from a pair of quantum
numbers (n, m) and a polarization angle theta: the first symplectic slot
carries cos(theta) times the n-th complex eigenfunction, the second
sin(theta) times the conjugate of the m-th one.  Orthogonality of such
states is a genuine question, so the Gram matrix is computed honestly and
reported next to its closed form

    cos(theta_a) cos(theta_b) delta_{n n'} + sin(theta_a) sin(theta_b) delta_{m m'}.

Strict identity therefore needs equal angles and index pairs that share
no n and no m across basis elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .quaternion import is_parallel
from .specfun import hermite_coeffs, hermite_norm_const
from .wavestate import (
    Mode,
    Operator,
    PhysicalParams,
    WaveState,
    apply,
    d_dx,
    evaluate,
    inner,
    mul_x,
    op_add,
    op_compose,
    right_i,
    scale,
    time_derivative,
)

__all__ = [
    "QPair",
    "GramMatrix",
    "psi_n",
    "psi_nm",
    "energy_nm",
    "energy_nm_correction_form",
    "momentum",
    "hamiltonian",
    "gram",
    "ladder",
    "build_via_ladder",
    "schrodinger_residual",
    "default_grid",
]

_PARALLEL_SAMPLES = 5
_PARALLEL_SEED = 20260810


@dataclass(frozen=True)
class QPair:
    """Quantum numbers and polarization angle of a two-slot oscillator state."""

    n: int
    m: int
    theta: float = 0.0

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError(f"quantum numbers must be non-negative, got ({self.n}, {self.m})")
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Matrix of real inner products among candidate basis states.

    closed_form holds the analytic prediction for the same labels; parallel
    and theta_equal (present for position-space states) record whether the
    pointwise quaternionic parallelism test and the equal-angle condition
    hold for each pair.
    """

    labels: tuple
    entries: np.ndarray = field(repr=False)
    t: float = 0.0
    closed_form: np.ndarray | None = field(default=None, repr=False)
    parallel: np.ndarray | None = field(default=None, repr=False)
    theta_equal: np.ndarray | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    def max_closed_form_deviation(self) -> float:
        if self.closed_form is None:
            return float("nan")
        return float(np.max(np.abs(self.entries - self.closed_form))) if self.size else 0.0

    def max_identity_deviation(self) -> float:
        return float(np.max(np.abs(self.entries - np.eye(self.size)))) if self.size else 0.0


def psi_n(n: int, params: PhysicalParams | None = None) -> WaveState:
    """The n-th complex oscillator eigenfunction as a slot-0 state."""
    params = params or PhysicalParams()
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    coeff = hermite_norm_const(n, params)
    freq = -(n + 0.5) * params.omega
    mode = Mode(0, coeff, (tuple(complex(c) for c in hermite_coeffs(n)),), freq)
    return WaveState(1, (mode,), params)


def psi_nm(q: QPair, params: PhysicalParams | None = None) -> WaveState:
    """Two-slot oscillator state: cos(theta) in slot 0 at level n, sin(theta)
    times the conjugated level-m eigenfunction in slot 1 (positive frequency)."""
    params = params or PhysicalParams()
    omega = params.omega
    mode0 = Mode(0, math.cos(q.theta) * hermite_norm_const(q.n, params),
                 (tuple(complex(c) for c in hermite_coeffs(q.n)),),
                 -(q.n + 0.5) * omega)
    mode1 = Mode(1, math.sin(q.theta) * hermite_norm_const(q.m, params),
                 (tuple(complex(c) for c in hermite_coeffs(q.m)),),
                 +(q.m + 0.5) * omega)
    return WaveState(1, (mode0, mode1), params)


def energy_nm(q: QPair, params: PhysicalParams | None = None) -> float:
    """Energy of the two-slot state: (n cos^2 + m sin^2 + 1/2) hbar omega."""
    params = params or PhysicalParams()
    c, s = math.cos(q.theta), math.sin(q.theta)
    return (q.n * c * c + q.m * s * s + 0.5) * params.energy_quantum


def energy_nm_correction_form(q: QPair, params: PhysicalParams | None = None) -> float:
    """Same energy written as the complex level plus a mixing correction:
    (n + 1/2 + (m - n) sin^2) hbar omega."""
    params = params or PhysicalParams()
    s = math.sin(q.theta)
    return (q.n + 0.5 + (q.m - q.n) * s * s) * params.energy_quantum


def momentum(dim: int = 0) -> Operator:
    """Dimensionless momentum: minus the derivative followed by right
    multiplication with i."""
    return scale(-1.0) * op_compose(right_i(), d_dx(dim))


def hamiltonian(params: PhysicalParams | None = None, dims: int = 1) -> Operator:
    """Oscillator Hamiltonian hbar omega (P^2 + X^2)/2, summed over dims."""
    params = params or PhysicalParams()
    terms = []
    for k in range(dims):
        p = momentum(k)
        x = mul_x(k)
        terms.append(0.5 * params.energy_quantum * (p * p + x * x))
    return terms[0] if dims == 1 else op_add(*terms)


def gram(pairs: list[QPair], t: float = 0.0, params: PhysicalParams | None = None,
         parallel_tol: float = 1e-10) -> GramMatrix:
    """Gram matrix of the states for the given quantum-number pairs.

    Alongside the inner products it reports the closed form and, per pair
    of labels, whether the evaluated states pass the quaternionic
    parallelism test at 5 fixed sample points and whether the angles match.
    """
    params = params or PhysicalParams()
    pairs = tuple(pairs)
    states = [psi_nm(q, params) for q in pairs]
    n = len(states)
    entries = np.zeros((n, n))
    closed = np.zeros((n, n))
    par = np.zeros((n, n), dtype=bool)
    th_eq = np.zeros((n, n), dtype=bool)
    rng = np.random.default_rng(_PARALLEL_SEED)
    sample_x = rng.uniform(-3.0, 3.0, size=_PARALLEL_SAMPLES) / params.alpha
    values = [[evaluate(s, x, t) for x in sample_x] for s in states]
    for i, qa in enumerate(pairs):
        for j, qb in enumerate(pairs):
            entries[i, j] = inner(states[i], states[j], t)
            closed[i, j] = (math.cos(qa.theta) * math.cos(qb.theta) * (qa.n == qb.n)
                            + math.sin(qa.theta) * math.sin(qb.theta) * (qa.m == qb.m))
            par[i, j] = all(is_parallel(values[i][k], values[j][k], parallel_tol)
                            for k in range(_PARALLEL_SAMPLES))
            th_eq[i, j] = qa.theta == qb.theta
    return GramMatrix(pairs, entries, t, closed, par, th_eq)


def ladder(which: str, dim: int = 0) -> Operator:
    """Lowering ('lower') or raising ('raise') operator.

    Built literally as (X +/- (P | i)) / sqrt(2), where (P | i) is the
    momentum followed by right multiplication with i; the right-i pair
    cancels, so the action reduces to (X + d/dX)/sqrt(2) for 'lower' and
    (X - d/dX)/sqrt(2) for 'raise'.
    """
    p_then_i = op_compose(right_i(), momentum(dim))
    if which == "lower":
        return (1.0 / math.sqrt(2.0)) * op_add(mul_x(dim), p_then_i)
    if which == "raise":
        return (1.0 / math.sqrt(2.0)) * op_add(mul_x(dim), -p_then_i)
    raise ValueError(f"which must be 'lower' or 'raise', got {which!r}")


def build_via_ladder(q: QPair, params: PhysicalParams | None = None) -> WaveState:
    """Construct the two-slot state algebraically: repeated raising operators
    on the bare Gaussian in each slot, with the time phases of psi_nm.

    n applications of the raising operator turn the bare Gaussian into the
    degree-n Hermite function scaled by 2^(-n/2), so the slot seed uses the
    ground constant divided by sqrt(n!) and the result coincides with
    psi_nm(q) pointwise.
    """
    params = params or PhysicalParams()
    omega = params.omega
    a0 = hermite_norm_const(0, params)
    raise_op = ladder("raise")

    def slot_build(slot, mix, level, freq):
        seed = Mode(slot, mix * a0 * math.exp(-0.5 * math.lgamma(level + 1.0)), ((1.0 + 0j,),), freq)
        s = WaveState(1, (seed,), params)
        for _ in range(level):
            s = apply(raise_op, s)
        return s

    s0 = slot_build(0, math.cos(q.theta), q.n, -(q.n + 0.5) * omega)
    s1 = slot_build(1, math.sin(q.theta), q.m, +(q.m + 0.5) * omega)
    return s0 + s1


def default_grid(params: PhysicalParams | None = None, span: float = 6.0, count: int = 41):
    """Uniform residual grid covering X in [-span, span], returned in x units."""
    params = params or PhysicalParams()
    return np.linspace(-span, span, count) / params.alpha


def schrodinger_residual(s: WaveState, grid=None, t: float = 0.0) -> float:
    """Sup-norm over the grid of the time-dependent equation residual
    hbar (d/dt s) i - H s, as a quaternion magnitude."""
    if s.dims != 1:
        raise ValueError("residual check expects a one-dimensional state")
    if grid is None:
        grid = default_grid(s.params)
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if grid.size == 0:
        raise ValueError("grid must be non-empty")
    lhs = s.params.hbar * apply(right_i(), time_derivative(s))
    residual_state = lhs - apply(hamiltonian(s.params), s)
    return max(abs(evaluate(residual_state, x, t)) for x in grid)
