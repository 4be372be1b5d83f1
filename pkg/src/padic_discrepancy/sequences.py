"""Finite sequences alpha_1, ..., alpha_N in Z_p.

Three sources are supported: the linear family ``alpha_n = n a + b``
(indexed from ``n = 1``), an explicit list, and seeded pseudorandom
sequences whose digits are i.i.d. uniform, i.e. Haar-distributed at the
working precision.

Pseudorandom generator
----------------------
``RANDOM_GENERATOR = "splitmix64/v1"``.  Each 64-bit output is produced by
the SplitMix64 step (increment ``0x9E3779B97F4A7C15``, then the two
xor-shift-multiply rounds with ``0xBF58476D1CE4E5B9`` and
``0x94D049BB133111EB``).  A digit in ``[0, p)`` is drawn by rejecting
outputs ``>= 2**64 - (2**64 mod p)`` and reducing the accepted output mod
``p``.  Elements are filled digit by digit, ``a_0`` first, element by
element.  Nothing here depends on platform integer width.

Sequence file format
--------------------
::

    p=<prime> K=<precision>
    <decimal integer in [0, p**K)>
    ...

Lines starting with ``#`` and blank lines are ignored; lines end in LF.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .padic import PadicApprox, ParameterError, Prime, from_integer

RANDOM_GENERATOR = "splitmix64/v1"

_MASK64 = (1 << 64) - 1


class SequenceParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class SplitMix64:
    """Minimal SplitMix64 stream over Python ints."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def digit(self, p: int) -> int:
        limit = (1 << 64) - ((1 << 64) % p)
        while True:
            z = self.next()
            if z < limit:
                return z % p


@dataclass(frozen=True)
class Linear:
    a: PadicApprox
    b: PadicApprox


@dataclass(frozen=True)
class Explicit:
    values: tuple


@dataclass(frozen=True)
class Random:
    seed: int


@dataclass(frozen=True)
class SequenceSpec:
    """Declarative description of ``alpha_1, ..., alpha_N`` in Z_p mod p^K."""

    variant: object
    N: int
    p: Prime
    K: int

    def __post_init__(self):
        object.__setattr__(self, "p", Prime(self.p))
        if self.N < 1:
            raise ParameterError(f"N must be >= 1, got {self.N}")
        if self.K < 1:
            raise ParameterError(f"precision must be >= 1, got {self.K}")
        v = self.variant
        if isinstance(v, Linear):
            for name, x in (("a", v.a), ("b", v.b)):
                if x.p != self.p or x.K != self.K:
                    raise ParameterError(
                        f"{name} lives in Z_{x.p} mod p^{x.K}, expected Z_{self.p} mod p^{self.K}")
        elif isinstance(v, Explicit):
            values = tuple(v.values)
            if len(values) != self.N:
                raise ParameterError(f"explicit list has {len(values)} values, N={self.N}")
            for x in values:
                if x.p != self.p or x.K != self.K:
                    raise ParameterError(f"explicit value {x!r} has the wrong p or precision")
            object.__setattr__(self, "variant", Explicit(values))
        elif not isinstance(v, Random):
            raise ParameterError(f"unknown sequence variant {v!r}")

    @classmethod
    def linear(cls, a: int, b: int, N: int, p, K: int) -> "SequenceSpec":
        return cls(Linear(from_integer(a, p, K), from_integer(b, p, K)), N, p, K)

    @classmethod
    def explicit(cls, values, p, K: int) -> "SequenceSpec":
        vals = tuple(v if isinstance(v, PadicApprox) else from_integer(v, p, K)
                     for v in values)
        return cls(Explicit(vals), len(vals), p, K)

    @classmethod
    def random(cls, seed: int, N: int, p, K: int) -> "SequenceSpec":
        return cls(Random(int(seed)), N, p, K)


def generate_residues(spec: SequenceSpec) -> list:
    """The sequence as plain integers in ``[0, p**K)``."""
    p, K, N = spec.p, spec.K, spec.N
    q = p ** K
    v = spec.variant
    if isinstance(v, Linear):
        a, b = v.a.value, v.b.value
        return [(n * a + b) % q for n in range(1, N + 1)]
    if isinstance(v, Explicit):
        return [x.value for x in v.values]
    rng = SplitMix64(v.seed)
    out = []
    for _ in range(N):
        r, scale = 0, 1
        for _ in range(K):
            r += rng.digit(p) * scale
            scale *= p
        out.append(r)
    return out


def generate(spec: SequenceSpec) -> list:
    """The N elements as :class:`PadicApprox` values."""
    if isinstance(spec.variant, Explicit):
        return list(spec.variant.values)
    return [from_integer(r, spec.p, spec.K) for r in generate_residues(spec)]


def digit_matrix(residues, p: int, K: int) -> np.ndarray:
    """``(N, K)`` array of little-endian digits of each residue."""
    N = len(residues)
    out = np.zeros((N, K), dtype=np.int64)
    if p ** K < 2 ** 62:
        r = np.asarray(residues, dtype=np.int64)
        for j in range(K):
            out[:, j] = r % p
            r = r // p
        return out
    for i, r in enumerate(residues):
        for j in range(K):
            r, out[i, j] = divmod(r, p)
    return out


def parse_sequence_file(text: str) -> SequenceSpec:
    header = None
    values = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        p, K = header
        try:
            v = int(line, 10)
        except ValueError:
            raise SequenceParseError(lineno, f"not a decimal integer: {line!r}") from None
        if not 0 <= v < p ** K:
            raise SequenceParseError(lineno, f"{v} outside [0, {p}^{K})")
        values.append(v)
    if header is None:
        raise SequenceParseError(1, "missing 'p=<prime> K=<precision>' header")
    if not values:
        raise SequenceParseError(lineno, "no sequence values")
    p, K = header
    return SequenceSpec.explicit(values, p, K)


def _parse_header(line: str, lineno: int):
    fields = {}
    for tok in line.split():
        key, sep, val = tok.partition("=")
        if not sep or key not in ("p", "K") or key in fields:
            raise SequenceParseError(lineno, f"bad header {line!r}")
        try:
            fields[key] = int(val, 10)
        except ValueError:
            raise SequenceParseError(lineno, f"bad header {line!r}") from None
    if set(fields) != {"p", "K"}:
        raise SequenceParseError(lineno, f"bad header {line!r}")
    try:
        Prime(fields["p"])
    except ParameterError as exc:
        raise SequenceParseError(lineno, str(exc)) from None
    if fields["K"] < 1:
        raise SequenceParseError(lineno, "K must be >= 1")
    return fields["p"], fields["K"]


def emit_sequence_file(spec: SequenceSpec) -> str:
    lines = [f"p={spec.p} K={spec.K}"]
    lines.extend(str(r) for r in generate_residues(spec))
    return "\n".join(lines) + "\n"
