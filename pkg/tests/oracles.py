"""Independent brute-force oracles for the rank-one-sum operators.

Everything here is written as literal scalar loops over the defining sums,
deliberately sharing no code path with the library's constructions.
"""

import numpy as np


def literal_rank_one_sum(weights, left_columns, right_columns):
    """sum_n w_n * left_n[i] * conj(right_n[j]) accumulated entry by entry."""
    dim = len(left_columns[0])
    out = [[0j for _ in range(dim)] for _ in range(dim)]
    for n, weight in enumerate(weights):
        left = left_columns[n]
        right = right_columns[n]
        for i in range(dim):
            for j in range(dim):
                out[i][j] += weight * left[i] * complex(right[j]).conjugate()
    return np.array(out, dtype=complex)


def _cols(matrix):
    return [matrix[:, k] for k in range(matrix.shape[1])]


def literal_H(pair, weights, direction):
    phi, psi = _cols(pair.phi), _cols(pair.psi)
    if direction == "phi_psi":
        return literal_rank_one_sum(weights, phi, psi)
    return literal_rank_one_sum(weights, psi, phi)


def literal_S(pair, weights, side):
    cols = _cols(pair.phi if side == "phi" else pair.psi)
    return literal_rank_one_sum(weights, cols, cols)


def literal_lowering(pair, weights, direction):
    """sum_{n>=1} gamma_n (v_{n-1} outer conj(w_n))."""
    v, w = (
        (_cols(pair.phi), _cols(pair.psi))
        if direction == "phi_psi"
        else (_cols(pair.psi), _cols(pair.phi))
    )
    shifted_left = [v[n - 1] for n in range(1, pair.dim)]
    shifted_right = [w[n] for n in range(1, pair.dim)]
    return literal_rank_one_sum(weights[1:], shifted_left, shifted_right)


def literal_raising(pair, weights, direction):
    """sum_{n<=N-2} gamma_{n+1} (v_{n+1} outer conj(w_n))."""
    v, w = (
        (_cols(pair.phi), _cols(pair.psi))
        if direction == "phi_psi"
        else (_cols(pair.psi), _cols(pair.phi))
    )
    shifted_left = [v[n + 1] for n in range(pair.dim - 1)]
    shifted_right = [w[n] for n in range(pair.dim - 1)]
    return literal_rank_one_sum(weights[1:], shifted_left, shifted_right)
