"""Characters of Z_p, indexed by the Pruefer p-group.

A character is the root of unity ``zeta = exp(2 pi i m / p**n)`` acting by
``x -> zeta**x``, where the exponent only sees the first ``n`` digits of
``x``.  Characters are kept as exact ``(n, m)`` pairs; complex numbers only
appear at evaluation time, from an integer phase reduced mod ``p**n``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .padic import (PadicApprox, ParameterError, PrecisionError, Prime,
                    SizeError, truncate)

MAX_ENUMERATION = 2 ** 31


def root_of_unity(num: int, den: int) -> complex:
    """``exp(2 pi i num / den)`` with the phase reduced exactly first."""
    r = num % den
    if r == 0:
        return 1 + 0j
    theta = 2 * math.pi * (r / den)
    return complex(math.cos(theta), math.sin(theta))


def roots_of_unity(nums, den: int) -> np.ndarray:
    """Vectorised :func:`root_of_unity` over an integer array of numerators."""
    nums = np.asarray(nums)
    if den < 2 ** 62 and nums.dtype != object:
        r = np.mod(nums.astype(np.int64), den)
        theta = (2 * np.pi / den) * r.astype(np.float64)
    else:
        theta = np.array([2 * math.pi * ((int(v) % den) / den) for v in nums.ravel()],
                         dtype=np.float64).reshape(nums.shape)
    return np.cos(theta) + 1j * np.sin(theta)


@dataclass(frozen=True, order=True)
class Character:
    """``zeta = exp(2 pi i m / p**n)`` of order ``p**n``; ``n = 0`` is trivial."""

    p: Prime
    n: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "p", Prime(self.p))
        if self.n < 0:
            raise ParameterError(f"order exponent must be >= 0, got {self.n}")
        if self.n == 0:
            if self.m != 0:
                raise ParameterError("the trivial character has m = 0")
        elif not (1 <= self.m < self.p ** self.n and self.m % self.p != 0):
            raise ParameterError(
                f"m={self.m} is not a unit residue mod {self.p}^{self.n}")

    @classmethod
    def trivial(cls, p) -> "Character":
        return cls(p, 0, 0)

    @property
    def is_trivial(self) -> bool:
        return self.n == 0

    @property
    def order(self) -> int:
        return self.p ** self.n

    def conjugate(self) -> "Character":
        if self.n == 0:
            return self
        return Character(self.p, self.n, self.order - self.m)

    def __call__(self, x: PadicApprox) -> complex:
        return evaluate(self, x)

    def __str__(self):
        return f"{self.p}^{self.n}:{self.m}"


_CHAR_RE = re.compile(r"^\s*(\d+)\^(\d+):(\d+)\s*$")


def parse_character(text: str) -> Character:
    """Inverse of ``str(character)``: ``"2^3:5"`` -> ``Character(2, 3, 5)``."""
    match = _CHAR_RE.match(text)
    if not match:
        raise ParameterError(f"not a character literal: {text!r}")
    p, n, m = (int(g) for g in match.groups())
    return Character(p, n, m)


def order(zeta: Character) -> int:
    return zeta.order


def enumerate_nontrivial(p, K: int) -> list:
    """All characters with ``1 < order <= p**K``, ascending ``n`` then ``m``.

    There are ``p**k - p**(k-1)`` of order exactly ``p**k``, ``p**K - 1`` in all.
    """
    p = Prime(p)
    if K < 1:
        raise ParameterError(f"K must be >= 1, got {K}")
    if p ** K > MAX_ENUMERATION:
        raise SizeError(f"{p}^{K} characters is too many to enumerate")
    return [Character(p, n, m)
            for n in range(1, K + 1)
            for m in range(1, p ** n) if m % p]


def evaluate(zeta: Character, x: PadicApprox) -> complex:
    """``zeta ** x``, reading exactly ``n`` digits of ``x``."""
    if x.p != zeta.p:
        raise ParameterError(f"character of Z_{zeta.p} applied to an element of Z_{x.p}")
    if zeta.n == 0:
        return 1 + 0j
    if x.K < zeta.n:
        raise PrecisionError(
            f"character of order {zeta.p}^{zeta.n} needs {zeta.n} digits, value has {x.K}")
    return root_of_unity(zeta.m * truncate(x, zeta.n), zeta.order)


# ``eval`` is the natural name but shadows the builtin inside this module only.
eval = evaluate  # noqa: A001
