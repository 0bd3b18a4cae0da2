"""Position-space walks on a ring of 2N+1 sites with gain and loss.

Sites carry labels x = -N .. N and a two-component coin.  One period in
the standard time frame applies, right to left,

    U' = F . M . G,   F = R(th1/2) S R(th2/2),   G = R(th2/2) S R(th1/2)

where R rotates the coin about y by the site's half angle, S shifts
coin 0 one site left and coin 1 one site right around the ring, and the
gain-loss step mixes the coin with the symmetric matrix [[alpha, beta],
[beta, alpha]] (scaled variant Mt) or the same divided by gamma
(unscaled M, which is what a passive-loss experiment implements).

Probability bookkeeping follows the unscaled evolution: raw holds
P_R = |psi_M|^2, corrected multiplies by gamma^(2t) (equivalently the
scaled evolution's norm), normalized divides each time slice by its
total.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

__all__ = [
    "TimeFrame",
    "LatticeConfig",
    "WalkState",
    "ProbabilitySeries",
    "make_homogeneous",
    "make_inhomogeneous",
    "is_pt_symmetric",
    "apply_disorder",
    "rng_algorithm",
    "build_floquet",
    "step",
    "evolve",
    "initial_state",
    "site_probabilities",
    "pseudo_anti_unitarity_defect",
]


class TimeFrame(enum.Enum):
    UPRIME_FMG = "UprimeFMG"
    UDOUBLEPRIME_GMF = "UdoubleprimeGMF"


@dataclass
class LatticeConfig:
    """Ring geometry plus per-site coin angles and the loss strength."""

    n_half: int
    theta1_profile: np.ndarray
    theta2_profile: np.ndarray
    p: float
    timeframe: TimeFrame = TimeFrame.UPRIME_FMG

    def __post_init__(self):
        self.theta1_profile = np.asarray(self.theta1_profile, dtype=float)
        self.theta2_profile = np.asarray(self.theta2_profile, dtype=float)
        if self.n_half < 2:
            raise ValidationError(f"n_half must be >= 2, got {self.n_half}")
        L = 2 * self.n_half + 1
        if self.theta1_profile.shape != (L,) or self.theta2_profile.shape != (L,):
            raise ValidationError(
                f"angle profiles must have exactly {L} entries for n_half={self.n_half}"
            )
        if not (0.0 <= self.p < 1.0):
            raise ValidationError(f"p must lie in [0, 1), got {self.p}")

    @property
    def n_sites(self) -> int:
        return 2 * self.n_half + 1

    @property
    def sites(self) -> np.ndarray:
        """Position labels x = -N .. N in profile order."""
        return np.arange(-self.n_half, self.n_half + 1)

    @property
    def gamma(self) -> float:
        return (1.0 - self.p) ** (-0.25)

    @property
    def alpha(self) -> float:
        return self.gamma * (1.0 + np.sqrt(1.0 - self.p)) / 2.0

    @property
    def beta(self) -> float:
        return self.gamma * (1.0 - np.sqrt(1.0 - self.p)) / 2.0


def make_homogeneous(
    theta1: float,
    theta2: float,
    n_half: int,
    p: float,
    timeframe: TimeFrame = TimeFrame.UPRIME_FMG,
) -> LatticeConfig:
    L = 2 * n_half + 1
    return LatticeConfig(
        n_half=n_half,
        theta1_profile=np.full(L, float(theta1)),
        theta2_profile=np.full(L, float(theta2)),
        p=float(p),
        timeframe=timeframe,
    )


def make_inhomogeneous(
    thetaL: tuple[float, float],
    thetaR: tuple[float, float],
    n_half: int,
    p: float,
    timeframe: TimeFrame = TimeFrame.UPRIME_FMG,
) -> LatticeConfig:
    """Two-region ring: left angles on x < 0, right angles on x >= 0.

    This layout is automatically symmetric under the ring reflection
    x -> N - x (mod 2N+1), so the combined parity/time-reversal spectral
    constraints apply with no tuning.
    """
    n_half = int(n_half)
    if n_half < 2:
        raise ValidationError(f"n_half must be >= 2, got {n_half}")
    L = 2 * n_half + 1
    t1 = np.where(np.arange(L) < n_half, float(thetaL[0]), float(thetaR[0]))
    t2 = np.where(np.arange(L) < n_half, float(thetaL[1]), float(thetaR[1]))
    return LatticeConfig(
        n_half=n_half, theta1_profile=t1, theta2_profile=t2,
        p=float(p), timeframe=timeframe,
    )


def is_pt_symmetric(config: LatticeConfig, tol: float = 1e-12) -> bool:
    """Check theta_{1,2}(x) = theta_{1,2}(N - x) with ring index arithmetic."""
    L = config.n_sites
    n = config.n_half
    idx = np.arange(L)
    partner = (3 * n - idx) % L
    return bool(
        np.all(np.abs(config.theta1_profile - config.theta1_profile[partner]) <= tol)
        and np.all(np.abs(config.theta2_profile - config.theta2_profile[partner]) <= tol)
    )


def rng_algorithm(seed: int | None = 0) -> str:
    """Name of the bit generator behind apply_disorder, for metadata."""
    return type(np.random.default_rng(seed).bit_generator).__name__


def apply_disorder(
    config: LatticeConfig,
    amplitude: float,
    seed: int,
    independent: bool = False,
) -> LatticeConfig:
    """Static angle disorder: one uniform draw in [-amplitude, amplitude] per site.

    The default adds the same per-site offset to both angle profiles.
    independent=True draws separately for theta1 and theta2 instead; that
    variant breaks the link the default reading implies, so it is opt-in.
    Deterministic for a fixed seed.
    """
    if amplitude < 0:
        raise ValidationError(f"disorder amplitude must be >= 0, got {amplitude}")
    rng = np.random.default_rng(seed)
    L = config.n_sites
    delta1 = rng.uniform(-amplitude, amplitude, L)
    delta2 = rng.uniform(-amplitude, amplitude, L) if independent else delta1
    return LatticeConfig(
        n_half=config.n_half,
        theta1_profile=config.theta1_profile + delta1,
        theta2_profile=config.theta2_profile + delta2,
        p=config.p,
        timeframe=config.timeframe,
    )


@dataclass
class WalkState:
    """Coin-resolved amplitudes, shape (2N+1, 2), plus the step counter."""

    amplitudes: np.ndarray
    step: int = 0


def initial_state(x0: int, coin: str, n_half: int) -> WalkState:
    """Unit-norm state localized at site x0 with a named coin state."""
    coins = {
        "plus": np.array([1.0, 1.0]) / np.sqrt(2.0),
        "minus": np.array([1.0, -1.0]) / np.sqrt(2.0),
        "plus_i_minus": np.array([(1.0 + 1.0j) / 2.0, (1.0 - 1.0j) / 2.0]),
    }
    if coin not in coins:
        raise ValidationError(f"coin must be one of {sorted(coins)}, got {coin!r}")
    if not (-n_half <= x0 <= n_half):
        raise ValidationError(f"x0 = {x0} outside ring of half-size {n_half}")
    amps = np.zeros((2 * n_half + 1, 2), dtype=complex)
    amps[x0 + n_half] = coins[coin]
    return WalkState(amplitudes=amps, step=0)


def _rotate(amps: np.ndarray, half_angles: np.ndarray) -> np.ndarray:
    c = np.cos(half_angles)
    s = np.sin(half_angles)
    out = np.empty_like(amps)
    out[:, 0] = c * amps[:, 0] - s * amps[:, 1]
    out[:, 1] = s * amps[:, 0] + c * amps[:, 1]
    return out


def _shift(amps: np.ndarray) -> np.ndarray:
    # Coin 0 hops to x-1, coin 1 to x+1, periodically.
    out = np.empty_like(amps)
    out[:, 0] = np.roll(amps[:, 0], -1)
    out[:, 1] = np.roll(amps[:, 1], +1)
    return out


def _gain_loss(amps: np.ndarray, config: LatticeConfig, scaled: bool) -> np.ndarray:
    a, b = config.alpha, config.beta
    out = np.empty_like(amps)
    out[:, 0] = a * amps[:, 0] + b * amps[:, 1]
    out[:, 1] = b * amps[:, 0] + a * amps[:, 1]
    if not scaled:
        out /= config.gamma
    return out


def step(state: WalkState, config: LatticeConfig, scaled: bool = True) -> WalkState:
    """One walk period as local operations; cost linear in the ring size."""
    amps = state.amplitudes
    if amps.shape != (config.n_sites, 2):
        raise ValidationError(
            f"state shape {amps.shape} does not match ring of {config.n_sites} sites"
        )
    h1 = config.theta1_profile / 2.0
    h2 = config.theta2_profile / 2.0
    if config.timeframe is TimeFrame.UPRIME_FMG:
        first, second = (h1, h2), (h2, h1)
    else:
        first, second = (h2, h1), (h1, h2)
    amps = _rotate(amps, first[0])
    amps = _shift(amps)
    amps = _rotate(amps, first[1])
    amps = _gain_loss(amps, config, scaled)
    amps = _rotate(amps, second[0])
    amps = _shift(amps)
    amps = _rotate(amps, second[1])
    return WalkState(amplitudes=amps, step=state.step + 1)


def build_floquet(config: LatticeConfig, scaled: bool = True) -> np.ndarray:
    """Dense one-period matrix on the flattened (site, coin) basis.

    Constructed from explicit factor matrices, independently of step(),
    so the two can be tested against each other.
    """
    L = config.n_sites
    dim = 2 * L
    idx = np.arange(L)

    def rot_block(half_angles: np.ndarray) -> np.ndarray:
        m = np.zeros((dim, dim), dtype=complex)
        c, s = np.cos(half_angles), np.sin(half_angles)
        m[2 * idx, 2 * idx] = c
        m[2 * idx, 2 * idx + 1] = -s
        m[2 * idx + 1, 2 * idx] = s
        m[2 * idx + 1, 2 * idx + 1] = c
        return m

    shift = np.zeros((dim, dim), dtype=complex)
    shift[2 * ((idx - 1) % L), 2 * idx] = 1.0
    shift[2 * ((idx + 1) % L) + 1, 2 * idx + 1] = 1.0

    m = np.zeros((dim, dim), dtype=complex)
    a, b = config.alpha, config.beta
    m[2 * idx, 2 * idx] = a
    m[2 * idx, 2 * idx + 1] = b
    m[2 * idx + 1, 2 * idx] = b
    m[2 * idx + 1, 2 * idx + 1] = a
    if not scaled:
        m /= config.gamma

    h1 = config.theta1_profile / 2.0
    h2 = config.theta2_profile / 2.0
    f = rot_block(h1) @ shift @ rot_block(h2)
    g = rot_block(h2) @ shift @ rot_block(h1)
    if config.timeframe is TimeFrame.UPRIME_FMG:
        return f @ m @ g
    return g @ m @ f


def site_probabilities(state: WalkState | np.ndarray) -> np.ndarray:
    amps = state.amplitudes if isinstance(state, WalkState) else np.asarray(state)
    return np.sum(np.abs(amps) ** 2, axis=1)


@dataclass
class ProbabilitySeries:
    """The three probability records, each of shape (t_max + 1, 2N + 1).

    raw is the loss-implemented walk's measured distribution, corrected
    undoes the per-step suppression by gamma^(2t), normalized rescales
    each time slice to unit total.  wraparound warns that the light cone
    reached the far side of the ring during the run.
    """

    raw: np.ndarray
    corrected: np.ndarray
    normalized: np.ndarray
    gamma: float
    wraparound: bool
    sites: np.ndarray


def evolve(initial: WalkState, config: LatticeConfig, t_max: int) -> ProbabilitySeries:
    """Record raw/corrected/normalized distributions for t = 0 .. t_max."""
    if t_max < 0:
        raise ValidationError(f"t_max must be >= 0, got {t_max}")
    L = config.n_sites
    raw = np.empty((t_max + 1, L))
    state = WalkState(amplitudes=initial.amplitudes.copy(), step=initial.step)
    raw[0] = site_probabilities(state)
    for t in range(1, t_max + 1):
        state = step(state, config, scaled=False)
        raw[t] = site_probabilities(state)
    gamma = config.gamma
    factors = gamma ** (2.0 * np.arange(t_max + 1))
    corrected = raw * factors[:, None]
    totals = raw.sum(axis=1)
    if np.any(totals <= 0.0):
        raise ValidationError("cannot normalize a time slice with zero total probability")
    normalized = raw / totals[:, None]
    return ProbabilitySeries(
        raw=raw,
        corrected=corrected,
        normalized=normalized,
        gamma=gamma,
        wraparound=bool(2 * t_max >= config.n_half),
        sites=config.sites,
    )


def pseudo_anti_unitarity_defect(config: LatticeConfig, scaled: bool = True) -> float:
    """Max-abs deviation of eta U^dag eta from U, eta = sum_x |x><x| (x) sx.

    Zero (to rounding) for every profile, disordered or not; this is the
    structural symmetry that keeps edge eigenvalues on the real axis.
    """
    u = build_floquet(config, scaled=scaled)
    L = config.n_sites
    eta = np.kron(np.eye(L), np.array([[0.0, 1.0], [1.0, 0.0]]))
    return float(np.max(np.abs(eta @ u.conj().T @ eta - u)))
