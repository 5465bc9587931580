"""Biorthogonal basis pairs generated by an invertible matrix.

Given an invertible generator T on C^N, the pair is phi_n = T e_n (columns
of T) and psi_n = (T^{-1})* e_n, with the standard coordinate basis fixed as
the ambient orthonormal frame.  The pair is biorthogonal, <phi_n, psi_m> =
delta_nm, and the tight frame bounds are the extreme singular values of T.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    LinalgError,
    adjoint,
    as_matrix,
    inverse,
    singular_extremes,
)
from .report import CheckResult
from .sequences import SequenceSpec


@dataclass(frozen=True)
class RieszBasisPair:
    """Generator, its inverse, both basis families, and the frame bounds.

    phi and psi are dim x dim matrices whose n-th columns are phi_n and
    psi_n in ambient coordinates.
    """

    dim: int
    generator: np.ndarray
    generator_inverse: np.ndarray
    phi: np.ndarray
    psi: np.ndarray
    frame_lower: float
    frame_upper: float


def from_generator(t: np.ndarray, tol: float = DEFAULT_TOL) -> RieszBasisPair:
    """Construct the basis pair from an invertible generator.

    Rejects generators with smallest singular value <= tol, reporting the
    measured value: those are not (numerically) Riesz-basis generators.
    """
    t = as_matrix(t)
    smin, smax = singular_extremes(t, tol)
    if smin <= tol:
        raise LinalgError(
            f"generator is numerically singular (sigma_min = {smin:.6e}); "
            "not a Riesz-basis generator"
        )
    t_inv = inverse(t, tol)
    return RieszBasisPair(
        dim=t.shape[0],
        generator=t,
        generator_inverse=t_inv,
        phi=t.copy(),
        psi=adjoint(t_inv),
        frame_lower=smin,
        frame_upper=smax,
    )


def verify_biorthogonality(
    pair: RieszBasisPair, tol: float = DEFAULT_TOL
) -> CheckResult:
    """max_{n,m} |<phi_n, psi_m> - delta_nm| against tol."""
    gram = adjoint(pair.psi) @ pair.phi  # entry (m, n) = <phi_n, psi_m>
    residual = float(np.abs(gram - np.eye(pair.dim)).max())
    return CheckResult.from_residual(
        "biorthogonality",
        residual,
        tol,
        note="max |<phi_n,psi_m> - delta_nm| over all n, m",
    )


def expand(pair: RieszBasisPair, f: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Both coefficient families of f.

    Returns (coeff_psi, coeff_phi) with coeff_psi[n] = <f, psi_n> (so that
    f = sum coeff_psi[n] phi_n) and coeff_phi[n] = <f, phi_n> (so that
    f = sum coeff_phi[n] psi_n).
    """
    f = np.asarray(f, dtype=complex)
    if f.shape != (pair.dim,):
        raise ValueError(f"vector has shape {f.shape}, expected ({pair.dim},)")
    coeff_psi = adjoint(pair.psi) @ f
    coeff_phi = adjoint(pair.phi) @ f
    return coeff_psi, coeff_phi


def reconstruction_residual(pair: RieszBasisPair, f: np.ndarray) -> float:
    """Worse of the two reconstruction residuals, relative to ||f||."""
    f = np.asarray(f, dtype=complex)
    coeff_psi, coeff_phi = expand(pair, f)
    via_phi = pair.phi @ coeff_psi
    via_psi = pair.psi @ coeff_phi
    scale = max(float(np.linalg.norm(f)), 1e-300)
    return max(
        float(np.linalg.norm(via_phi - f)),
        float(np.linalg.norm(via_psi - f)),
    ) / scale


def frame_inequality_check(
    pair: RieszBasisPair,
    alpha: SequenceSpec,
    f: np.ndarray,
    tol: float = DEFAULT_TOL,
) -> CheckResult:
    """Two-sided frame inequality for the weighted coefficient sums.

    Verifies  gamma_1^2 S <= ||sum_k alpha_k <f,psi_k> phi_k||^2 <= gamma_2^2 S
    with S = sum_k |alpha_k <f,psi_k>|^2, each side with slack tol (scaled by
    the magnitude of the upper bound).
    """
    f = np.asarray(f, dtype=complex)
    weights = alpha.terms(pair.dim)
    coeff_psi, _ = expand(pair, f)
    weighted = weights * coeff_psi
    coeff_mass = float(np.sum(np.abs(weighted) ** 2))
    mid = float(np.linalg.norm(pair.phi @ weighted) ** 2)
    lower = pair.frame_lower**2 * coeff_mass
    upper = pair.frame_upper**2 * coeff_mass
    scale = max(1.0, upper)
    violation = max(lower - mid, mid - upper) / scale
    return CheckResult.from_residual(
        "frame_inequality",
        max(violation, 0.0),
        tol,
        note=f"lower {lower:.6e} <= mid {mid:.6e} <= upper {upper:.6e}",
    )
