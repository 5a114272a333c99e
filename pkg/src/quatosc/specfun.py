"""Special functions, normalization constants, exact Gaussian moments, quadrature.

Hermite and generalized Laguerre polynomials are evaluated by their
three-term recurrences (stable, no factorial ratios), spherical harmonics
by a normalized associated Legendre recurrence with the Condon-Shortley
phase.  The moment helpers give closed-form values of the Gaussian
integrals that make inner products exact; the quadrature rules are the
independent numerical route used to cross-check them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import roots_genlaguerre

__all__ = [
    "DEGREE_CAP",
    "QuadratureRule",
    "hermite",
    "hermite_coeffs",
    "laguerre",
    "laguerre_coeffs",
    "sph_harm",
    "hermite_norm_const",
    "laguerre_norm_const",
    "gaussian_moment",
    "radial_moment",
    "make_rule",
]

# Degree cap shared by the polynomial evaluators; keeps double precision
# coefficients finite.
DEGREE_CAP = 200

QUAD_KINDS = ("gauss_hermite", "gauss_legendre", "half_line_gaussian", "uniform_periodic")


def _check_degree(n: int, name: str) -> None:
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")
    if n > DEGREE_CAP:
        raise ValueError(f"{name}={n} exceeds the degree cap {DEGREE_CAP}")


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x).

    Uses H_{n+1} = 2x H_n - 2n H_{n-1}; accepts scalars or numpy arrays.
    """
    _check_degree(n, "n")
    x = np.asarray(x, dtype=float) if not np.isscalar(x) else x
    h_prev = np.ones_like(x) if not np.isscalar(x) else 1.0
    if n == 0:
        return h_prev
    h = 2.0 * x
    for k in range(1, n):
        h, h_prev = 2.0 * x * h - 2.0 * k * h_prev, h
    return h


@lru_cache(maxsize=None)
def hermite_coeffs(n: int) -> tuple[float, ...]:
    """Coefficients of H_n in ascending powers."""
    _check_degree(n, "n")
    if n == 0:
        return (1.0,)
    prev = np.array([1.0])
    cur = np.array([0.0, 2.0])
    for k in range(1, n):
        nxt = np.zeros(k + 2)
        nxt[1:] = 2.0 * cur
        nxt[: k] -= 2.0 * k * prev
        prev, cur = cur, nxt
    return tuple(cur)


def laguerre(u: int, alpha: float, x):
    """Generalized Laguerre polynomial L_u^{(alpha)}(x), alpha > -1.

    Uses (u+1) L_{u+1} = (2u+1+alpha-x) L_u - (u+alpha) L_{u-1}.
    """
    _check_degree(u, "u")
    if alpha <= -1:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    x = np.asarray(x, dtype=float) if not np.isscalar(x) else x
    l_prev = np.ones_like(x) if not np.isscalar(x) else 1.0
    if u == 0:
        return l_prev
    l_cur = 1.0 + alpha - x
    for k in range(1, u):
        l_cur, l_prev = ((2.0 * k + 1.0 + alpha - x) * l_cur - (k + alpha) * l_prev) / (k + 1.0), l_cur
    return l_cur


@lru_cache(maxsize=None)
def laguerre_coeffs(u: int, alpha: float) -> tuple[float, ...]:
    """Coefficients of L_u^{(alpha)} in ascending powers."""
    _check_degree(u, "u")
    if alpha <= -1:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    if u == 0:
        return (1.0,)
    prev = np.array([1.0])
    cur = np.array([1.0 + alpha, -1.0])
    for k in range(1, u):
        nxt = np.zeros(k + 2)
        nxt[: k + 1] = (2.0 * k + 1.0 + alpha) * cur
        nxt[1:] -= cur
        nxt[: k] -= (k + alpha) * prev
        nxt /= k + 1.0
        prev, cur = cur, nxt
    return tuple(cur)


def _legendre_normalized(l: int, m: int, x):
    """sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_l^m(x) for m >= 0, Condon-Shortley.

    Normalized recurrence: seeds the diagonal, then raises the degree.
    """
    p_mm = np.full_like(np.asarray(x, dtype=float), 1.0 / math.sqrt(4.0 * math.pi))
    if m > 0:
        s = np.sqrt(np.maximum(1.0 - np.asarray(x, dtype=float) ** 2, 0.0))
        for k in range(1, m + 1):
            p_mm = -math.sqrt((2.0 * k + 1.0) / (2.0 * k)) * s * p_mm
    if l == m:
        return p_mm
    p_next = math.sqrt(2.0 * m + 3.0) * np.asarray(x, dtype=float) * p_mm
    if l == m + 1:
        return p_next
    for k in range(m + 2, l + 1):
        a = math.sqrt((4.0 * k * k - 1.0) / (k * k - m * m))
        b = math.sqrt(((k - 1.0) ** 2 - m * m) / (4.0 * (k - 1.0) ** 2 - 1.0))
        p_next, p_mm = a * (np.asarray(x, dtype=float) * p_next - b * p_mm), p_next
    return p_next


def sph_harm(l: int, m: int, theta, phi):
    """Orthonormal complex spherical harmonic Y_l^m(theta, phi).

    theta is the polar angle, phi the azimuth; Condon-Shortley phase.
    Accepts scalars or broadcastable numpy arrays.
    """
    if l < 0:
        raise ValueError(f"l must be non-negative, got {l}")
    if abs(m) > l:
        raise ValueError(f"m={m} out of range for l={l}")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    ma = abs(m)
    leg = _legendre_normalized(l, ma, np.cos(theta))
    y = leg * np.exp(1j * ma * phi)
    if m < 0:
        y = (-1.0) ** ma * np.conj(y)
    if y.ndim == 0:
        return complex(y)
    return y


def hermite_norm_const(n: int, params=None) -> float:
    """Normalization (mu*omega/(pi*hbar))^(1/4) / sqrt(2^n n!) of the n-th
    oscillator eigenfunction; log-gamma based to stay finite for large n."""
    _check_degree(n, "n")
    mu, omega, hbar = (1.0, 1.0, 1.0) if params is None else (params.mu, params.omega, params.hbar)
    log_a = 0.25 * math.log(mu * omega / (math.pi * hbar)) \
        - 0.5 * (n * math.log(2.0) + math.lgamma(n + 1.0))
    return math.exp(log_a)


def laguerre_norm_const(u: int, l: int) -> float:
    """Constant N_u making rho^l exp(-rho^2/2) L_u^{(l+1/2)}(rho^2) unit-norm
    under the measure rho^2 drho: N_u = sqrt(2 u! / Gamma(u+l+3/2))."""
    if u < 0 or l < 0:
        raise ValueError("u and l must be non-negative")
    log_n = 0.5 * (math.log(2.0) + math.lgamma(u + 1.0) - math.lgamma(u + l + 1.5))
    return math.exp(log_n)


@lru_cache(maxsize=None)
def gaussian_moment(k: int) -> float:
    """Exact moment of the full-line Gaussian weight:
    integral of x^k exp(-x^2) over the real line.

    Zero for odd k; for even k follows the double-factorial recursion
    M_k = (k-1)/2 * M_{k-2} with M_0 = sqrt(pi).
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k % 2 == 1:
        return 0.0
    if k == 0:
        return math.sqrt(math.pi)
    return 0.5 * (k - 1) * gaussian_moment(k - 2)


def radial_moment(k: int) -> float:
    """Exact half-line radial moment:
    integral of rho^(2k) exp(-rho^2) rho^2 drho over [0, inf) = Gamma(k+3/2)/2."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return 0.5 * math.gamma(k + 1.5)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and weights of one of the supported integration rules.

    gauss_hermite      : sum w f(x) ~ integral f(x) exp(-x^2) dx over R
    gauss_legendre     : sum w f(x) ~ integral f(x) dx over [-1, 1]
    half_line_gaussian : sum w f(r) ~ integral f(r) exp(-r^2) r^2 dr over [0, inf)
                         (exact for f polynomial in r^2 up to degree 2*order-1)
    uniform_periodic   : sum w f(t) ~ integral f(t) dt over [0, 2 pi)
    """

    kind: str
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.nodes)

    def integrate(self, f) -> float:
        return float(np.dot(self.weights, f(self.nodes)))


def make_rule(kind: str, order: int) -> QuadratureRule:
    """Build a QuadratureRule of the given kind and node count."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if kind == "gauss_hermite":
        nodes, weights = np.polynomial.hermite.hermgauss(order)
    elif kind == "gauss_legendre":
        nodes, weights = np.polynomial.legendre.leggauss(order)
    elif kind == "half_line_gaussian":
        # Generalized Gauss-Laguerre in s = r^2 with weight s^(1/2) exp(-s):
        # integral f(r) r^2 exp(-r^2) dr = 1/2 integral f(sqrt(s)) s^(1/2) exp(-s) ds.
        s_nodes, s_weights = roots_genlaguerre(order, 0.5)
        nodes = np.sqrt(s_nodes)
        weights = 0.5 * s_weights
    elif kind == "uniform_periodic":
        nodes = 2.0 * math.pi * np.arange(order) / order
        weights = np.full(order, 2.0 * math.pi / order)
    else:
        raise ValueError(f"unsupported quadrature kind: {kind!r}")
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(kind, nodes, weights)
