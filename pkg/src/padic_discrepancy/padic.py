"""Fixed-precision p-adic integers.

An element of Z_p is stored through its first ``K`` base-``p`` digits,
little-endian, so ``truncate(x, n)`` is a prefix read.  Precision is part of
the value: mixing precisions is an error, never a silent truncation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction

MAX_PRIME = 2 ** 16


class ParameterError(ValueError):
    """Operands disagree on p or on precision, or a parameter is out of range."""


class PrecisionError(ValueError):
    """An operation needs more digits than a value carries."""


class SizeError(ValueError):
    """A requested enumeration or table would be too large."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Prime(int):
    """An ``int`` known to be a prime ``2 <= p <= 2**16``."""

    def __new__(cls, p):
        if isinstance(p, Prime):
            return p
        if isinstance(p, bool) or int(p) != p:
            raise ParameterError(f"p must be an integer, got {p!r}")
        p = int(p)
        if p > MAX_PRIME:
            raise ParameterError(f"p={p} exceeds the supported maximum {MAX_PRIME}")
        if not _is_prime(p):
            raise ParameterError(f"p={p} is not prime")
        return super().__new__(cls, p)


@dataclass(frozen=True)
class BelowResolution:
    """Absolute value of a number whose K known digits are all zero.

    The true value is somewhere in ``[0, p**-K]``.
    """

    p: int
    K: int

    @property
    def upper(self) -> Fraction:
        return Fraction(1, self.p ** self.K)

    def __str__(self):
        return f"<= {self.p}^-{self.K}"


@dataclass(frozen=True)
class PadicApprox:
    """``a_0 + a_1 p + ... + a_{K-1} p^{K-1}``, an element of Z_p known mod p^K."""

    p: Prime
    K: int
    digits: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", Prime(self.p))
        if self.K < 1:
            raise ParameterError(f"precision must be >= 1, got {self.K}")
        digits = tuple(int(d) for d in self.digits)
        if len(digits) != self.K:
            raise ParameterError(f"expected {self.K} digits, got {len(digits)}")
        if any(d < 0 or d >= self.p for d in digits):
            raise ParameterError(f"digits must lie in [0, {self.p}): {digits}")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def from_integer(cls, v: int, p, K: int) -> "PadicApprox":
        return from_integer(v, p, K)

    @property
    def modulus(self) -> int:
        return self.p ** self.K

    @cached_property
    def value(self) -> int:
        """The represented residue in ``[0, p**K)``."""
        return truncate(self, self.K)

    def __int__(self):
        return self.value

    def __add__(self, other):
        return add(self, _coerce(other, self))

    __radd__ = __add__

    def __mul__(self, other):
        return mul(self, _coerce(other, self))

    __rmul__ = __mul__

    def __neg__(self):
        return from_integer(-self.value, self.p, self.K)

    def __sub__(self, other):
        return add(self, -_coerce(other, self))

    def __repr__(self):
        return f"PadicApprox({self.value}, p={self.p}, K={self.K})"


def _coerce(other, like: PadicApprox) -> PadicApprox:
    if isinstance(other, PadicApprox):
        return other
    if isinstance(other, int):
        return from_integer(other, like.p, like.K)
    return NotImplemented


def from_integer(v: int, p, K: int) -> PadicApprox:
    """Digit expansion of ``v mod p**K``; negative ``v`` wraps around."""
    p = Prime(p)
    if K < 1:
        raise ParameterError(f"precision must be >= 1, got {K}")
    r = int(v) % p ** K
    digits = []
    for _ in range(K):
        r, d = divmod(r, p)
        digits.append(d)
    return PadicApprox(p, K, tuple(digits))


def _check_compatible(x: PadicApprox, y: PadicApprox):
    if x.p != y.p:
        raise ParameterError(f"mismatched primes {x.p} and {y.p}")
    if x.K != y.K:
        raise ParameterError(f"mismatched precisions {x.K} and {y.K}")


def add(x: PadicApprox, y: PadicApprox) -> PadicApprox:
    _check_compatible(x, y)
    return from_integer(x.value + y.value, x.p, x.K)


def mul(x: PadicApprox, y: PadicApprox) -> PadicApprox:
    _check_compatible(x, y)
    return from_integer(x.value * y.value, x.p, x.K)


def is_unit(x: PadicApprox) -> bool:
    return x.digits[0] != 0


def valuation(x: PadicApprox):
    """Index of the first nonzero digit, or ``None`` if all K digits are zero."""
    for j, d in enumerate(x.digits):
        if d:
            return j
    return None


def padic_abs(x: PadicApprox):
    """``|x|_p`` as a Fraction, or a :class:`BelowResolution` marker for zero."""
    j = valuation(x)
    if j is None:
        return BelowResolution(int(x.p), x.K)
    return Fraction(1, x.p ** j)


def truncate(x: PadicApprox, n: int) -> int:
    """The integer ``a_0 + a_1 p + ... + a_{n-1} p^{n-1}``."""
    if n < 0:
        raise ParameterError(f"truncation length must be >= 0, got {n}")
    if n > x.K:
        raise PrecisionError(f"cannot read {n} digits from a value with precision {x.K}")
    r = 0
    for d in reversed(x.digits[:n]):
        r = r * x.p + d
    return r
