"""Pauli master equation of the two-qubit junction: rates, steady state and heat current.

Rates are effective: the |S|^2 = 1/2 matrix elements are absorbed into Gamma, so
the population equations use bare k's. The two-channel current keeps its explicit
1/2 prefactor.
"""
import logging
import math

import numpy as np

from qheat.constants.bath_side import BathSide
from qheat.constants.channel import Channel
from qheat.core.exceptions import NonUniqueSteadyStateError, InvalidParameterError
from qheat.models.baths import rate_pair
from qheat.models.two_qubit import eigensystem, channel_table
from qheat.schemas.bath import BathSpec
from qheat.schemas.rates import RateSet, ChannelRates, Populations
from qheat.schemas.system import SystemParams


def _channel(channel: Channel, omega: float, first_is_lower: bool,
             left: BathSpec, right: BathSpec) -> ChannelRates:
    down_left, up_left = rate_pair(left, omega)
    down_right, up_right = rate_pair(right, omega)
    if not math.isfinite(down_left + up_left + down_right + up_right):
        logging.error(f"channel {channel.value} rates overflow at T_L={left.temperature}, T_R={right.temperature}")
        raise InvalidParameterError(detail=f"bath temperatures too large, channel {channel.value} rates overflow")
    return ChannelRates(channel=channel,
                        omega=omega,
                        first_is_lower=first_is_lower,
                        down_left=down_left,
                        up_left=up_left,
                        down_right=down_right,
                        up_right=up_right)


def channel_rates(params: SystemParams, left: BathSpec, right: BathSpec) -> RateSet:
    eigen = eigensystem(params)

    # state 1 sits below state 2 only when kappa > epsilon
    a = _channel(Channel.A, abs(eigen.omega21), eigen.omega21 > 0, left, right)
    b = _channel(Channel.B, eigen.omega31, True, left, right)

    return RateSet(a=a, b=b)


def steady_populations(rates: RateSet) -> Populations:
    norm_a = rates.w12 + rates.w21
    norm_b = rates.w13 + rates.w31
    if norm_a == 0 or norm_b == 0:
        frozen = "a" if norm_a == 0 else "b"
        logging.error(f"channel {frozen} has all-zero rates")
        raise NonUniqueSteadyStateError(detail=f"channel {frozen} has all-zero rates, the steady state is not unique")

    # normalize each channel first, the raw products overflow at high temperature
    a1, a2 = rates.w12 / norm_a, rates.w21 / norm_a
    b1, b3 = rates.w13 / norm_b, rates.w31 / norm_b
    return Populations(p=(a1 * b1, a2 * b1, a1 * b3, a2 * b3))


def rate_matrix(rates: RateSet) -> np.ndarray:
    """Generator A of dP/dt = A P; A[m, n] is the total rate n -> m (0-based)."""
    generator = np.zeros((4, 4))
    generator[0, 1], generator[1, 0] = rates.w12, rates.w21
    generator[2, 3], generator[3, 2] = rates.w34, rates.w43
    generator[0, 2], generator[2, 0] = rates.w13, rates.w31
    generator[1, 3], generator[3, 1] = rates.w24, rates.w42
    generator[np.diag_indices(4)] = -generator.sum(axis=0)
    return generator


def null_space_populations(generator: np.ndarray) -> Populations:
    """Kernel of the generator, found by swapping one balance row for normalization."""
    generator = np.asarray(generator, dtype=float)
    if generator.shape != (4, 4):
        raise InvalidParameterError(detail=f"expected a 4x4 generator, got shape {generator.shape}")

    rank = np.linalg.matrix_rank(generator)
    if rank != 3:
        logging.error(f"generator rank {rank}, kernel dimension {4 - rank}")
        raise NonUniqueSteadyStateError(detail=f"generator kernel has dimension {4 - rank}, expected 1")

    system = generator.copy()
    system[-1, :] = 1.0
    rhs = np.zeros(4)
    rhs[-1] = 1.0
    solution = np.clip(np.linalg.solve(system, rhs), 0.0, None)
    solution /= solution.sum()

    return Populations(p=tuple(float(x) for x in solution))


def _channel_current(omega: float, rates: ChannelRates) -> float:
    scale = max(rates.up_left, rates.down_right, rates.down_left, rates.up_right)
    if scale == 0:
        return 0.0
    # rates in units of the largest one keep the products finite
    up_left, down_right = rates.up_left / scale, rates.down_right / scale
    down_left, up_right = rates.down_left / scale, rates.up_right / scale
    total = up_left + down_right + down_left + up_right
    return scale * omega * (up_left * down_right - down_left * up_right) / (2.0 * total)


def heat_current(params: SystemParams, rates: RateSet) -> float:
    """Steady-state current J_L; positive when heat leaves the left bath."""
    eigen = eigensystem(params)
    return _channel_current(abs(eigen.omega21), rates.a) + _channel_current(eigen.omega31, rates.b)


def heat_current_balance(params: SystemParams, rates: RateSet, pops: Populations,
                         side: BathSide = BathSide.LEFT) -> float:
    """Energy absorbed from one bath, sum over allowed (m, n) of w_mn |S_mn|^2 P_n k_{n->m}."""
    energies = eigensystem(params).energies
    current = 0.0
    for transition in channel_table().transitions:
        channel = rates.channel(transition.channel)
        if side is BathSide.LEFT:
            weight, down, up = transition.s_left_squared, channel.down_left, channel.up_left
        else:
            weight, down, up = transition.s_right_squared, channel.down_right, channel.up_right

        m, n = transition.m - 1, transition.n - 1
        gap = energies[n] - energies[m]
        # k_{m->n}: excitation when n lies above m
        rate_m_to_n, rate_n_to_m = (up, down) if gap > 0 else (down, up)
        current += weight * gap * (pops.p[m] * rate_m_to_n - pops.p[n] * rate_n_to_m)
    return current
