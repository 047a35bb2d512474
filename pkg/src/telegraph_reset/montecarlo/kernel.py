"""Compiled path kernel with counter-based randomness.

Uniform number k of path i is a pure function of (seed, i, k):

    key = mix64(seed ^ mix64(i + GOLDEN))
    u_k = (mix64(key + (k + 1) * GOLDEN) >> 11) * 2^-53

where mix64 is the SplitMix64 finalizer. Every integer constant is a uint64,
since numba promotes mixed int64/uint64 arithmetic to float64.
"""

from __future__ import annotations

import math

import numba
import numpy as np

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_ONE = np.uint64(1)
_TO_UNIT = 1.0 / 9007199254740992.0  # 2^-53

VELOCITY_1 = 1
VELOCITY_2 = 2


@numba.njit(cache=True, nogil=True)
def mix64(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@numba.njit(cache=True, nogil=True)
def path_key(seed, path_index):
    return mix64(seed ^ mix64(path_index + GOLDEN))


@numba.njit(cache=True, nogil=True)
def uniform(key, counter):
    # in [0, 1)
    return float(mix64(key + (counter + _ONE) * GOLDEN) >> _S11) * _TO_UNIT


@numba.njit(cache=True, nogil=True)
def _std_exp(key, counter):
    return -math.log1p(-uniform(key, counter))


@numba.njit(cache=True, nogil=True)
def simulate_range(lam, xi, v1, v2, q, horizon, seed, first_index, fixed_a1, fixed_a2,
                   position, velocity, atom, resets):
    """Fill outputs for paths first_index .. first_index + len(position) - 1.

    Only the last reset cycle is simulated in detail: earlier cycles are wiped
    by the reset and, with fresh mixing rates per cycle, do not influence it.
    A negative fixed rate means "draw from the GCP mixing law".
    """
    seed = np.uint64(seed)
    for n in range(position.shape[0]):
        key = path_key(seed, np.uint64(first_index + n))
        c = np.uint64(0)
        start = VELOCITY_1 if uniform(key, c) < q else VELOCITY_2
        c += _ONE
        # reset epochs: keep the last one before the horizon
        last = 0.0
        count = 0
        if xi > 0:
            while True:
                nxt = last + _std_exp(key, c) / xi
                c += _ONE
                if nxt >= horizon:
                    break
                last = nxt
                count += 1
        span = horizon - last
        a1 = fixed_a1
        if a1 < 0:
            a1 = lam * _std_exp(key, c)
            c += _ONE
        a2 = fixed_a2
        if a2 < 0:
            a2 = lam * _std_exp(key, c)
            c += _ONE
        state = start
        elapsed = 0.0
        in_v1 = 0.0
        switched = False
        while True:
            rate = a1 if state == VELOCITY_1 else a2
            if rate > 0:
                stay = _std_exp(key, c) / rate
                c += _ONE
            else:
                stay = math.inf
            if elapsed + stay >= span:
                if state == VELOCITY_1:
                    in_v1 += span - elapsed
                break
            if state == VELOCITY_1:
                in_v1 += stay
            elapsed += stay
            state = VELOCITY_2 if state == VELOCITY_1 else VELOCITY_1
            switched = True
        x = v1 * in_v1 + v2 * (span - in_v1)
        position[n] = min(max(x, v2 * span), v1 * span)
        velocity[n] = state
        atom[n] = count == 0 and not switched
        resets[n] = count
