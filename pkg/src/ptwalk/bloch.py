"""Momentum-space description of the homogeneous non-unitary walk.

One period of the walk on a ring composes two spin-dependent shifts, four
half-angle coin rotations and a gain-loss step that amplifies coin |0> by
gamma and suppresses coin |1> by 1/gamma.  In the symmetric time frame the
period operator acting on the two-component Bloch spinor at momentum k is

    U(k) = d0 * I - i * (d1 sx + d2 sy + d3 sz)

with d1 = i*beta purely imaginary and d0, d2, d3 real.  The complex
normalization d0^2 + d1^2 + d2^2 + d3^2 = 1 replaces the unit-length Bloch
vector of the unitary theory; it forces the two eigenvalues to multiply to
one, which is the spectral fingerprint of balanced gain and loss.

All momentum integrals in this package run over k in [-pi/2, pi/2): every
d-component depends on k only through 2k, so that interval is one full
period.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

__all__ = [
    "BZ_PERIOD",
    "ModelParams",
    "BlochVector",
    "BandPoint",
    "PTClass",
    "PTReport",
    "make_params",
    "k_grid",
    "bloch_vector",
    "floquet_momentum_matrix",
    "bands",
    "classify_pt",
    "classify_pt_detail",
]

# The d-vector has period pi in k, so loops traverse [-pi/2, pi/2) once.
BZ_PERIOD = np.pi

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class ModelParams:
    """Bulk coin angles plus the gain-loss strength and its derived factors.

    Use make_params; it validates and fills the derived fields so that
    alpha**2 - beta**2 == 1 holds to rounding.
    """

    theta1: float
    theta2: float
    p: float
    gamma: float
    alpha: float
    beta: float


def make_params(theta1: float, theta2: float, p: float) -> ModelParams:
    """Build ModelParams from the two coin angles and loss probability p."""
    theta1 = float(theta1)
    theta2 = float(theta2)
    p = float(p)
    if not (np.isfinite(theta1) and np.isfinite(theta2)):
        raise ValidationError("coin angles must be finite")
    if not (0.0 <= p < 1.0):
        raise ValidationError(f"p must lie in [0, 1), got {p}")
    root = np.sqrt(1.0 - p)
    gamma = (1.0 - p) ** (-0.25)
    alpha = gamma * (1.0 + root) / 2.0
    beta = gamma * (1.0 - root) / 2.0
    return ModelParams(theta1, theta2, p, gamma, alpha, beta)


def k_grid(n_k: int) -> np.ndarray:
    """Uniform momentum grid over one period, endpoint excluded."""
    if n_k < 8:
        raise ValidationError(f"n_k must be at least 8, got {n_k}")
    return -0.5 * np.pi + BZ_PERIOD * np.arange(n_k) / n_k


@dataclass(frozen=True)
class BlochVector:
    """Components of U(k) = d0*I - i(d1 sx + d2 sy + d3 sz) at momentum k.

    Fields are scalars or arrays matching the shape of k.
    """

    d0: np.ndarray
    d1: complex
    d2: np.ndarray
    d3: np.ndarray
    k: np.ndarray


def bloch_vector(params: ModelParams, k) -> BlochVector:
    k = np.asarray(k, dtype=float)
    c1, s1 = np.cos(params.theta1), np.sin(params.theta1)
    c2, s2 = np.cos(params.theta2), np.sin(params.theta2)
    cos2k, sin2k = np.cos(2.0 * k), np.sin(2.0 * k)
    a = params.alpha
    d0 = a * (cos2k * c1 * c2 - s1 * s2)
    d2 = a * (cos2k * c2 * s1 + c1 * s2)
    d3 = -a * sin2k * c2
    return BlochVector(d0=d0, d1=1j * params.beta, d2=d2, d3=d3, k=k)


def floquet_momentum_matrix(params: ModelParams, k: float) -> np.ndarray:
    """One-period operator at momentum k, built from its factor operators.

    The shift enters as S(k) = diag(e^{ik}, e^{-ik}); with that convention
    the product F(k) Mt G(k) reproduces the d-vector expansion exactly,
    which is the check pinning the phase convention.
    """
    k = float(k)
    rot1 = _rot(params.theta1 / 2.0)
    rot2 = _rot(params.theta2 / 2.0)
    shift = np.diag([np.exp(1j * k), np.exp(-1j * k)])
    mt = np.array([[params.alpha, params.beta], [params.beta, params.alpha]], dtype=complex)
    f = rot1 @ shift @ rot2
    g = rot2 @ shift @ rot1
    return f @ mt @ g


def _rot(angle: float) -> np.ndarray:
    # e^{-i angle sy}: real rotation in the coin plane.
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]], dtype=complex)


@dataclass(frozen=True)
class BandPoint:
    """Eigenvalue pair and quasienergies at one momentum (or an array)."""

    lambda_plus: np.ndarray
    lambda_minus: np.ndarray
    eps_plus: np.ndarray
    eps_minus: np.ndarray


def bands(params: ModelParams, k) -> BandPoint:
    """Both eigenvalue branches lambda_pm = d0 -+ i sqrt(1 - d0^2).

    For d0^2 > 1 the principal square root turns this into
    d0 +- sqrt(d0^2 - 1): real eigenvalues off the unit circle.
    Quasienergies eps = i ln(lambda) use Re(eps) in (-pi, pi], so the
    band folding puts the negative-real-axis eigenvalues at Re(eps) = pi.
    """
    bv = bloch_vector(params, k)
    root = np.emath.sqrt(1.0 - bv.d0.astype(complex) ** 2)
    lam_p = bv.d0 - 1j * root
    lam_m = bv.d0 + 1j * root
    return BandPoint(
        lambda_plus=lam_p,
        lambda_minus=lam_m,
        eps_plus=_quasienergy(lam_p),
        eps_minus=_quasienergy(lam_m),
    )


def _quasienergy(lam: np.ndarray) -> np.ndarray:
    eps = 1j * np.log(np.asarray(lam, dtype=complex))
    # np.angle returns (-pi, pi], so Re(eps) = -angle lands in [-pi, pi);
    # shift the lower endpoint to keep the pi gap on the +pi side.
    re = np.real(eps)
    shift = np.where(re <= -np.pi + 1e-15, 2.0 * np.pi, 0.0)
    return eps + shift


class PTClass(enum.Enum):
    Unbroken = "Unbroken"
    ExceptionalPoint = "ExceptionalPoint"
    PartiallyBroken = "PartiallyBroken"
    CompletelyBroken = "CompletelyBroken"


@dataclass(frozen=True)
class PTReport:
    pt_class: PTClass
    subcase: str | None
    d0sq_min: float
    d0sq_max: float


def classify_pt(params: ModelParams, n_k: int = 1024, tau: float = 1e-4) -> PTClass:
    """Phase of the sampled spectrum: all real, all off-circle, or mixed."""
    return classify_pt_detail(params, n_k=n_k, tau=tau).pt_class


def classify_pt_detail(params: ModelParams, n_k: int = 1024, tau: float = 1e-4) -> PTReport:
    """Classify by the range of d0^2 on a uniform momentum grid.

    tau separates the exceptional set from floating-point and grid noise.
    The default 1e-4 is wide enough that a 1024-point grid brushing a
    quadratic band touching (where max d0^2 - 1 can sit at ~1e-5) still
    reports ExceptionalPoint rather than a spurious broken phase.

    Off-circle spectra come in two flavors, reported via `subcase`: d0 > 1
    everywhere gives purely imaginary quasienergies, d0 < -1 everywhere
    pins Re(eps) at pi.
    """
    if n_k < 64:
        raise ValidationError(f"classification needs n_k >= 64, got {n_k}")
    bv = bloch_vector(params, k_grid(n_k))
    d0sq = bv.d0 ** 2
    lo = float(np.min(d0sq))
    hi = float(np.max(d0sq))
    if hi < 1.0 - tau:
        cls = PTClass.Unbroken
    elif lo > 1.0 + tau:
        cls = PTClass.CompletelyBroken
    elif hi <= 1.0 + tau:
        cls = PTClass.ExceptionalPoint
    else:
        cls = PTClass.PartiallyBroken
    subcase = None
    if cls is PTClass.CompletelyBroken:
        subcase = "purely imaginary spectrum" if np.all(bv.d0 > 0.0) else "Re eps = pi"
    return PTReport(pt_class=cls, subcase=subcase, d0sq_min=lo, d0sq_max=hi)
