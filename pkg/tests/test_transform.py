import numpy as np
import pytest

from padic_discrepancy.padic import ParameterError
from padic_discrepancy.transform import direct_dft, radix_p_dft


@pytest.mark.parametrize("p, j", [(2, 1), (2, 10), (3, 6), (5, 4), (7, 3), (11, 2), (13, 1)])
def test_matches_numpy_fft(p, j):
    x = np.random.default_rng(p * j).normal(size=p ** j)
    # positive exponent convention: conj of numpy's forward transform for real input
    assert np.abs(radix_p_dft(x, p) - np.conj(np.fft.fft(x))).max() < 1e-9


@pytest.mark.parametrize("p, j", [(2, 6), (3, 4), (5, 3)])
def test_matches_direct(p, j):
    rng = np.random.default_rng(j)
    x = rng.normal(size=p ** j) + 1j * rng.normal(size=p ** j)
    assert np.abs(radix_p_dft(x, p) - direct_dft(x, p)).max() < 1e-10


def test_rejects_bad_length():
    with pytest.raises(ParameterError):
        radix_p_dft(np.ones(12), 2)
    with pytest.raises(ParameterError):
        radix_p_dft(np.ones((2, 2)), 2)


def test_length_one():
    assert radix_p_dft([3.0], 5)[0] == 3
