"""Radix-p discrete Fourier transform on Z / p^j.

``radix_p_dft(x, p)[m] = sum_r x[r] exp(+2 pi i m r / p**j)``.

Decimation in time: the input splits into the ``p`` cosets ``x[s::p]``,
each is transformed at length ``p**(j-1)`` (all cosets at one depth are
handled as one batch), and the results are recombined with twiddles
``exp(2 pi i s t / p**j)`` (exact integer phases) followed by a p-point
DFT.  Cost is ``O(j * p * p**j)``.
"""
from __future__ import annotations

import numpy as np

from .characters import roots_of_unity
from .padic import ParameterError


def _exponent(q: int, p: int) -> int:
    j = 0
    while q % p == 0:
        q //= p
        j += 1
    if q != 1:
        raise ParameterError(f"length is not a power of {p}")
    return j


def _dft_batch(x: np.ndarray, p: int) -> np.ndarray:
    batch, q = x.shape
    if q == 1:
        return x
    sub_len = q // p
    # x[b, s + p t] -> sub[b, s, t]
    sub = x.reshape(batch, sub_len, p).transpose(0, 2, 1).reshape(batch * p, sub_len)
    y = _dft_batch(sub, p).reshape(batch, p, sub_len)
    # output index m = c * sub_len + t:  X[m] = sum_s w_p^(c s) * w_q^(s t) * Y_s[t]
    s_idx = np.arange(p, dtype=np.int64)
    twiddle = roots_of_unity(np.outer(s_idx, np.arange(sub_len, dtype=np.int64)) % q, q)
    butterfly = roots_of_unity(np.outer(s_idx, s_idx) % p, p)
    return np.matmul(butterfly, y * twiddle).reshape(batch, q)


def radix_p_dft(x, p: int) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1:
        raise ParameterError("radix_p_dft expects a 1-d array")
    _exponent(len(x), p)
    return _dft_batch(x.reshape(1, -1).copy(), p)[0]


def direct_dft(x, p: int) -> np.ndarray:
    """Same transform by the ``O(q**2)`` matrix product; reference path."""
    x = np.asarray(x, dtype=complex)
    q = len(x)
    _exponent(q, p)
    r = np.arange(q, dtype=np.int64)
    return roots_of_unity(np.outer(r, r) % q, q) @ x
