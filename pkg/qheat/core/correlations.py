"""Entanglement and discord of the steady state.

The closed forms use the populations only; the steady state is an X state in the
product basis. The density-matrix functions below them are brute-force oracles.
"""
import logging

import numpy as np
from scipy.special import xlogy

from qheat.core.config import (DISCORD_ROUNDING_FLOOR, DISCORD_GRID_SIZE, DISCORD_GRID_TOLERANCE)
from qheat.models.two_qubit import PAULI_X, PAULI_Y, PAULI_Z, IDENTITY, density_matrix_uncoupled
from qheat.schemas.correlations import CorrelationReport, DiscordCheck
from qheat.schemas.rates import Populations
from qheat.utils.entropy import LN2, xlog2x, weighted_log2, binary_log_term


def concurrence_margin(pops: Populations) -> float:
    """2 P_max - P1 - P4 - 2 sqrt(P2 P3) before clamping at zero."""
    p1, p2, p3, p4 = pops.p
    root = np.sqrt(p2 * p3)
    p_max = max(p1, p4, root)
    return float(2 * p_max - p1 - p4 - 2 * root)


def concurrence(pops: Populations) -> float:
    return max(concurrence_margin(pops), 0.0)


def k_coefficient(pops: Populations) -> float:
    p1, p2, p3, p4 = pops.p
    return float(np.hypot(p2 - p3, p1 - p4))


def mutual_information(pops: Populations) -> float:
    p1, p2, p3, p4 = pops.p
    return 2 - binary_log_term(p2 - p3) + sum(xlog2x(p) for p in pops.p)


def _conditional_entropies(pops: Populations) -> tuple[float, float]:
    """Entropy of qubit A after measuring qubit B along z (S1) and along x (S2)."""
    p1, p2, p3, p4 = pops.p
    bias = p2 - p3
    half_sum = (p1 + p4) / 2

    s1 = -(weighted_log2(p2, 2 * p2, 1 + bias)
           + weighted_log2(half_sum, p1 + p4, 1 + bias)
           + weighted_log2(half_sum, p1 + p4, 1 - bias)
           + weighted_log2(p3, 2 * p3, 1 - bias))
    s2 = 1 - binary_log_term(k_coefficient(pops)) / 2
    return s1, s2


def classical_correlation(pops: Populations) -> float:
    s1, s2 = _conditional_entropies(pops)
    return 1 - binary_log_term(pops.p2 - pops.p3) / 2 - min(s1, s2)


def discord(pops: Populations) -> float:
    value = mutual_information(pops) - classical_correlation(pops)
    if -DISCORD_ROUNDING_FLOOR < value < 0:
        return 0.0
    if value < 0:
        logging.warning(f"negative discord {value!r} for populations {pops.p}")
    return value


def correlation_report(pops: Populations) -> CorrelationReport:
    return CorrelationReport(concurrence=concurrence(pops),
                             mutual_information=mutual_information(pops),
                             classical_correlation=classical_correlation(pops),
                             discord=discord(pops),
                             k_coefficient=k_coefficient(pops))


def wootters_concurrence(rho: np.ndarray) -> float:
    yy = np.kron(PAULI_Y, PAULI_Y)
    rho_tilde = yy @ rho.conj() @ yy
    eigenvalues = np.linalg.eigvals(rho @ rho_tilde)
    roots = np.sort(np.sqrt(np.abs(eigenvalues.real)))[::-1]
    return float(max(0.0, roots[0] - roots[1:].sum()))


def von_neumann_entropy(rho: np.ndarray) -> float:
    eigenvalues = np.clip(np.linalg.eigvalsh(rho), 0.0, None)
    return float(-xlogy(eigenvalues, eigenvalues).sum() / LN2)


def partial_trace(rho: np.ndarray, keep: int) -> np.ndarray:
    """Reduced state of qubit ``keep`` (0 or 1) of a two-qubit density matrix."""
    tensor = np.asarray(rho).reshape(2, 2, 2, 2)
    if keep == 0:
        return np.einsum("ijkj->ik", tensor)
    return np.einsum("ijil->jl", tensor)


def mutual_information_from_density(rho: np.ndarray) -> float:
    return (von_neumann_entropy(partial_trace(rho, 0))
            + von_neumann_entropy(partial_trace(rho, 1))
            - von_neumann_entropy(rho))


def grid_classical_correlation(rho: np.ndarray, grid_size: int = DISCORD_GRID_SIZE) -> float:
    """Classical correlation maximized over projective measurements of qubit B on a theta x phi grid."""
    theta, phi = np.meshgrid(np.linspace(0.0, np.pi, grid_size),
                             np.linspace(0.0, 2 * np.pi, grid_size, endpoint=False),
                             indexing="ij")
    theta, phi = theta.ravel(), phi.ravel()
    directions = np.stack([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1)
    n_dot_sigma = np.einsum("gk,kij->gij", directions, np.stack([PAULI_X, PAULI_Y, PAULI_Z]))

    tensor = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    conditional_entropy = np.zeros(len(directions))
    for sign in (1.0, -1.0):
        projector = (IDENTITY + sign * n_dot_sigma) / 2
        # unnormalized state of A: Tr_B[(1 x Pi) rho]
        unnormalized = np.einsum("gik,akbi->gab", projector, tensor)
        weights = np.clip(np.linalg.eigvalsh(unnormalized), 0.0, None)
        probability = weights.sum(axis=-1)
        conditional_entropy += (xlogy(probability, probability) - xlogy(weights, weights).sum(axis=-1)) / LN2

    return von_neumann_entropy(partial_trace(rho, 0)) - float(conditional_entropy.min())


def check_classical_correlation(pops: Populations, grid_size: int = DISCORD_GRID_SIZE,
                                tolerance: float = DISCORD_GRID_TOLERANCE) -> DiscordCheck:
    """Compare the closed-form classical correlation with the measurement-grid maximum.

    The grid holds the z measurement exactly and the x measurement up to the grid
    spacing, so it never falls noticeably below the closed form. A grid value above
    the closed form by more than ``tolerance`` is flagged, not raised.
    """
    closed_form = classical_correlation(pops)
    grid = grid_classical_correlation(density_matrix_uncoupled(pops), grid_size)
    flagged = grid - closed_form > tolerance
    if flagged:
        logging.warning(f"closed-form classical correlation {closed_form!r} is below the grid value {grid!r} "
                        f"for populations {pops.p}")
    return DiscordCheck(closed_form=closed_form, grid=grid, flagged=flagged)
