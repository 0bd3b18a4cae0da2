"""Shared numerical primitives: generalized eigensystems and loop quadrature.

The operators in this package are similar to unitaries only in special
regimes, so eigenvector pairs must be biorthogonal (left against right)
rather than orthogonal.  `eig_general` wraps scipy's nonsymmetric solver
and enforces that pairing, including inside degenerate clusters.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import NumericalError, RefinementError

__all__ = ["Spectrum", "eig_general", "unwrap_winding", "integrate_periodic"]


@dataclass
class Spectrum:
    """Eigendecomposition with biorthonormalized left/right vectors.

    right_vectors[:, i] and left_vectors[:, i] belong to eigenvalues[i]
    and satisfy  left_vectors[:, i].conj() @ right_vectors[:, j] = delta_ij
    except for indices listed in `defective`, where the left/right overlap
    was too small to normalize (near a defective point the decomposition
    degenerates and no scaling fixes it).
    """

    eigenvalues: np.ndarray
    right_vectors: np.ndarray
    left_vectors: np.ndarray
    residual: float
    defective: list[int] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return self.eigenvalues.size


def eig_general(
    matrix: np.ndarray, tol: float = 1e-9, overlap_tol: float = 1e-8
) -> Spectrum:
    """Full spectrum of a general complex matrix with paired left vectors.

    `tol` bounds the relative residual max_i |A r_i - lambda_i r_i| / |A|;
    exceeding it raises a NumericalError carrying the worst value.

    Degenerate eigenvalues are grouped into clusters and the left block is
    re-mixed so the biorthonormalization holds across the whole cluster,
    not just index by index.  Indices whose cluster Gram matrix is
    numerically singular (smallest singular value below `overlap_tol`)
    are reported in Spectrum.defective and left unnormalized.
    """
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NumericalError(f"eig_general needs a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericalError("eig_general input has non-finite entries")
    w, vl, vr = scipy.linalg.eig(a, left=True, right=True)

    # Cluster eigenvalues that agree to within a scale-aware tolerance.
    scale = max(np.max(np.abs(w)), 1.0)
    order = np.argsort(w.real + 1e-9 * w.imag, kind="stable")
    clusters: list[list[int]] = []
    used = np.zeros(w.size, dtype=bool)
    for i in order:
        if used[i]:
            continue
        members = np.flatnonzero(np.abs(w - w[i]) <= 1e-8 * scale)
        for j in members:
            used[j] = True
        clusters.append(list(members))

    defective: list[int] = []
    for members in clusters:
        sub_l = vl[:, members]
        sub_r = vr[:, members]
        gram = sub_l.conj().T @ sub_r
        smin = np.linalg.svd(gram, compute_uv=False)[-1]
        if smin < overlap_tol:
            defective.extend(int(m) for m in members)
            continue
        # Solve gram^H X = I so that (sub_l X)^H sub_r = I.
        fix = np.linalg.solve(gram.conj().T, np.eye(len(members), dtype=complex))
        vl[:, members] = sub_l @ fix

    resid = float(np.max(np.linalg.norm(a @ vr - vr * w[None, :], axis=0)))
    norm_a = float(np.linalg.norm(a, 2))
    if resid > tol * max(norm_a, 1.0):
        raise NumericalError(
            f"eigendecomposition residual {resid:.3e} exceeds "
            f"{tol:.1e} * |A| = {tol * norm_a:.3e}"
        )
    return Spectrum(
        eigenvalues=w,
        right_vectors=vr,
        left_vectors=vl,
        residual=resid,
        defective=sorted(defective),
    )


def unwrap_winding(angles: np.ndarray, margin: float = 0.1) -> int:
    """Integer winding of an angle sampled once around a closed loop.

    `angles` holds the angle (any representative mod 2*pi) at uniformly
    spaced points on the loop, endpoint not repeated.  Each consecutive
    increment is wrapped to the principal branch; the closing increment
    from the last sample back to the first is included.  If any wrapped
    increment comes within `margin` of the +-pi branch cut the sampling
    is too coarse to trust and a RefinementError is raised instead of
    silently picking a branch.
    """
    a = np.asarray(angles, dtype=float)
    if a.ndim != 1 or a.size < 4:
        raise NumericalError("unwrap_winding needs a 1-d array of at least 4 samples")
    diffs = np.diff(a, append=a[:1])
    wrapped = np.mod(diffs + np.pi, 2.0 * np.pi) - np.pi
    worst = float(np.max(np.abs(wrapped)))
    if worst > np.pi - margin:
        raise RefinementError(
            f"angle increment {worst:.4f} within {margin} of the branch cut; "
            "refine the grid"
        )
    total = float(np.sum(wrapped))
    winding = total / (2.0 * np.pi)
    nearest = round(winding)
    if abs(winding - nearest) > 1e-9:
        raise NumericalError(
            f"winding residue {winding - nearest:.3e} exceeds tolerance; "
            "samples do not close onto an integer multiple of 2*pi"
        )
    return int(nearest)


def integrate_periodic(samples: np.ndarray, period: float) -> complex | float:
    """Quadrature of one full period from uniform samples, endpoint excluded.

    For smooth periodic integrands the trapezoidal rule on a uniform grid
    collapses to period * mean(samples) and converges spectrally.
    """
    s = np.asarray(samples)
    if s.ndim != 1 or s.size < 8:
        raise NumericalError("integrate_periodic needs a 1-d array of at least 8 samples")
    value = period * np.mean(s)
    return complex(value) if np.iscomplexobj(s) else float(value)
