"""The two-qubit XY Hamiltonian, its analytic eigensystem and the allowed transitions.

Product basis ordering is |dd>, |du>, |ud>, |uu> (first arrow: qubit 1), with
sigma_z |u> = +|u>. Eigenstates are labelled 1..4 as

    |1> = (|du> - |ud>)/sqrt2,  E1 = -kappa
    |2> = |dd>,                 E2 = -epsilon
    |3> = |uu>,                 E3 = +epsilon
    |4> = (|du> + |ud>)/sqrt2,  E4 = +kappa

independently of which state is lowest.
"""
import logging
from typing import Tuple

import numpy as np
from scipy.special import softmax

from qheat.constants.channel import Channel
from qheat.core.exceptions import DegenerateSystemError, InvalidParameterError
from qheat.schemas.rates import Populations
from qheat.schemas.system import SystemParams, EigenSystem, ChannelTable, Transition

# single-qubit operators in the (down, up) basis
IDENTITY = np.eye(2)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, 1j], [-1j, 0]], dtype=complex)
PAULI_Z = np.array([[-1, 0], [0, 1]], dtype=complex)

SQRT_HALF = 1 / np.sqrt(2)

_CHANNEL_TABLE = ChannelTable(transitions=(
    Transition(m=1, n=2, channel=Channel.A, s_left=-SQRT_HALF, s_right=SQRT_HALF),
    Transition(m=1, n=3, channel=Channel.B, s_left=SQRT_HALF, s_right=-SQRT_HALF),
    Transition(m=2, n=4, channel=Channel.B, s_left=SQRT_HALF, s_right=SQRT_HALF),
    Transition(m=3, n=4, channel=Channel.A, s_left=SQRT_HALF, s_right=SQRT_HALF),
))


def eigensystem(params: SystemParams) -> EigenSystem:
    epsilon, kappa = params.epsilon, params.kappa
    if epsilon == kappa:
        logging.error(f"eigensystem requested for degenerate system epsilon == kappa == {epsilon}")
        raise DegenerateSystemError(detail=f"epsilon == kappa == {epsilon!r} closes the 1<->2 channel gap")

    return EigenSystem(energies=(-kappa, -epsilon, epsilon, kappa),
                       omega21=kappa - epsilon,
                       omega31=kappa + epsilon)


def ground_state_label(eigen: EigenSystem) -> int:
    return int(np.argmin(eigen.energies)) + 1


def channel_table() -> ChannelTable:
    return _CHANNEL_TABLE


def product_basis_hamiltonian(params: SystemParams) -> np.ndarray:
    """H_S = eps/2 (sz1 + sz2) + kappa/2 (sx1 sx2 + sy1 sy2) as a real 4x4 matrix."""
    zeeman = np.kron(PAULI_Z, IDENTITY) + np.kron(IDENTITY, PAULI_Z)
    exchange = np.kron(PAULI_X, PAULI_X) + np.kron(PAULI_Y, PAULI_Y)
    return (params.epsilon / 2 * zeeman + params.kappa / 2 * exchange).real


def eigenbasis_vectors() -> np.ndarray:
    """Columns are |1>..|4> in the product basis."""
    return np.array([
        [0.0, 1.0, 0.0, 0.0],
        [SQRT_HALF, 0.0, 0.0, SQRT_HALF],
        [-SQRT_HALF, 0.0, 0.0, SQRT_HALF],
        [0.0, 0.0, 1.0, 0.0],
    ])


def coupling_operators() -> Tuple[np.ndarray, np.ndarray]:
    """S^L = sigma_x of qubit 1 and S^R = sigma_x of qubit 2, in the eigenbasis."""
    vectors = eigenbasis_vectors()
    s_left = vectors.T @ np.kron(PAULI_X, IDENTITY).real @ vectors
    s_right = vectors.T @ np.kron(IDENTITY, PAULI_X).real @ vectors
    return s_left, s_right


def density_matrix_uncoupled(pops: Populations) -> np.ndarray:
    """Steady state diag(P1..P4) rewritten in the product basis."""
    p1, p2, p3, p4 = pops.p
    mean, half_difference = (p1 + p4) / 2, (p4 - p1) / 2
    return np.array([
        [p2, 0.0, 0.0, 0.0],
        [0.0, mean, half_difference, 0.0],
        [0.0, half_difference, mean, 0.0],
        [0.0, 0.0, 0.0, p3],
    ])


def gibbs_populations(eigen: EigenSystem, temperature: float) -> Populations:
    if temperature < 0:
        raise InvalidParameterError(detail=f"temperature must be >= 0, got {temperature}")

    energies = np.asarray(eigen.energies)
    if temperature == 0:
        weights = np.zeros(4)
        weights[ground_state_label(eigen) - 1] = 1.0
    else:
        weights = softmax(-energies / temperature)
    return Populations(p=tuple(float(w) for w in weights))
