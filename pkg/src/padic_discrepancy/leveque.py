"""Weyl sums and the LeVeque-type discrepancy bound on Z_p.

The bound is

    D_N <= C(p) * ( sum_{zeta != 1} ||zeta||**-3 |W(zeta)|**2 )**(1/4),
    W(zeta) = (1/N) sum_n zeta**alpha_n,

with ``C(p) = (C1 * C2)**(1/4)``, ``C1 = p**9 / (p-1)**3`` from the lower
estimate ``D**4 <= C1 ||f||**2`` and ``C2 = 2 p**2`` from the Parseval upper
estimate ``||f||**2 <= C2 * sum(...)``.  The infinite character sum is cut at
order ``p**K_trunc``; the omitted part is bounded by taking ``|W| = 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import Character, root_of_unity, roots_of_unity
from .discrepancy import (exact_discrepancy, fraction_str, l2_norm_sq,
                          level_square_sums, sequence_residues)
from .fourier import radial_sq_sum
from .padic import (PadicApprox, ParameterError, PrecisionError, Prime,
                    SizeError, is_unit, truncate, valuation)
from .transform import radix_p_dft

MAX_TABLE = 2 ** 26


class DegenerateRatioError(ValueError):
    """The geometric ratio ``zeta**a`` is 1; use the direct sum instead."""


class VerificationError(AssertionError):
    pass


def weyl_sum(seq, zeta: Character) -> complex:
    """``(1/N) sum_{n=1}^N zeta**alpha_n`` by direct evaluation."""
    residues, p, K = sequence_residues(seq)
    if zeta.p != p:
        raise ParameterError(f"character over {zeta.p}, sequence over {p}")
    if zeta.n > K:
        raise PrecisionError(f"character order {p}^{zeta.n} exceeds precision {K}")
    return _weyl_sum_residues(residues, zeta)


def _weyl_sum_residues(residues, zeta: Character) -> complex:
    if zeta.n == 0:
        return 1 + 0j
    q = zeta.order
    if q < 2 ** 31:
        r = np.asarray(residues) % q
        phases = zeta.m * r.astype(np.int64) % q
    else:
        phases = np.array([zeta.m * x % q for x in residues], dtype=object)
    return complex(roots_of_unity(phases, q).mean())


@dataclass(frozen=True)
class WeylTable:
    """Weyl sums of every character of order ``<= p**K_trunc``.

    ``finest[u]`` holds ``W`` for the character ``exp(2 pi i u / p**K_trunc)``;
    the character ``(j, m)`` sits at ``u = m * p**(K_trunc - j)``.
    """

    p: int
    N: int
    K_trunc: int
    finest: np.ndarray

    def __getitem__(self, zeta: Character) -> complex:
        if zeta.n == 0:
            return 1 + 0j
        if zeta.n > self.K_trunc:
            raise KeyError(str(zeta))
        return complex(self.finest[zeta.m * self.p ** (self.K_trunc - zeta.n)])

    def level(self, j: int) -> np.ndarray:
        """Sums for all ``m mod p**j`` (primitive or not) at level ``j``."""
        return self.finest[::self.p ** (self.K_trunc - j)]

    def primitive(self, j: int) -> np.ndarray:
        lev = self.level(j)
        return lev[np.arange(len(lev)) % self.p != 0]

    def items(self):
        """``(Character, W)`` in canonical order: ascending order, then numerator."""
        for j in range(1, self.K_trunc + 1):
            lev = self.level(j)
            for m in range(1, self.p ** j):
                if m % self.p:
                    yield Character(self.p, j, m), complex(lev[m])

    def __len__(self):
        return self.p ** self.K_trunc - 1

    def leveque_sum(self) -> float:
        """``sum_{1 < ||zeta|| <= p**K_trunc} ||zeta||**-3 |W(zeta)|**2``."""
        total = 0.0
        for j in range(1, self.K_trunc + 1):
            prim = self.primitive(j)
            total += math.fsum((prim.real ** 2 + prim.imag ** 2).tolist()) / self.p ** (3 * j)
        return total

    def to_rows(self):
        return [{"character": str(z), "re": w.real, "im": w.imag, "abs": abs(w)}
                for z, w in self.items()]


def weyl_table(seq, K_trunc: int, method: str = "radix") -> WeylTable:
    """All Weyl sums up to order ``p**K_trunc``.

    ``method="radix"`` histograms the truncations mod ``p**K_trunc`` and
    applies one radix-p transform (every coarser level is a strided view of
    the finest one).  ``method="direct"`` evaluates each character with
    :func:`weyl_sum` and serves as the reference.
    """
    residues, p, K = sequence_residues(seq)
    N = len(residues)
    if K_trunc < 1:
        raise ParameterError(f"K_trunc must be >= 1, got {K_trunc}")
    if K_trunc > K:
        raise PrecisionError(f"K_trunc={K_trunc} exceeds precision {K}")
    Q = p ** K_trunc
    if Q > MAX_TABLE:
        raise SizeError(f"{p}^{K_trunc} exceeds the table limit 2^26")
    if method == "radix":
        hist = np.bincount(np.array([r % Q for r in residues], dtype=np.int64), minlength=Q)
        finest = radix_p_dft(hist.astype(float), p) / N
    elif method == "direct":
        finest = np.zeros(Q, dtype=complex)
        finest[0] = 1
        base = np.array([r % Q for r in residues], dtype=np.int64)
        for u in range(1, Q):
            v = valuation_int(u, p)
            finest[u] = _weyl_sum_residues(base, Character(p, K_trunc - v, u // p ** v))
    else:
        raise ParameterError(f"unknown method {method!r}")
    return WeylTable(p, N, K_trunc, finest)


def valuation_int(u: int, p: int) -> int:
    v = 0
    while u % p == 0:
        u //= p
        v += 1
    return v


def lemma_constants(p):
    """``(C1, C2) = (p**9 / (p-1)**3, 2 p**2)`` as exact numbers."""
    p = Prime(p)
    return Fraction(p ** 9, (p - 1) ** 3), 2 * p * p


def leveque_constant(p) -> float:
    """``C(p) = (C1 * C2)**(1/4) = (2 p**11 / (p-1)**3)**(1/4)``."""
    c1, c2 = lemma_constants(p)
    return float(c1 * c2) ** 0.25


def tail_bound(p, K_trunc: int) -> Fraction:
    """``sum_{k > K_trunc} (p**k - p**(k-1)) p**(-3k) = p**(-2 K_trunc) / (p (p+1))``."""
    p = Prime(p)
    if K_trunc < 1:
        raise ParameterError(f"K_trunc must be >= 1, got {K_trunc}")
    return Fraction(1, p ** (2 * K_trunc) * p * (p + 1))


@dataclass(frozen=True)
class BoundReport:
    p: int
    N: int
    K_trunc: int
    S_trunc: float
    tail: Fraction
    C_p: float
    bound: float

    def to_dict(self):
        return {"p": self.p, "N": self.N, "k_trunc": self.K_trunc,
                "s_trunc": self.S_trunc, "tail": fraction_str(self.tail),
                "c_p": self.C_p, "bound": self.bound}


def discrepancy_bound(seq, K_trunc: int = None, table: WeylTable = None) -> BoundReport:
    """``C(p) * (S_trunc + tail)**(1/4)``, an upper bound for ``D_N`` at any ``K_trunc``."""
    residues, p, K = sequence_residues(seq)
    if K_trunc is None:
        K_trunc = K if table is None else table.K_trunc
    if table is None:
        table = weyl_table(seq, K_trunc)
    s = table.leveque_sum()
    tail = tail_bound(p, K_trunc)
    c = leveque_constant(p)
    return BoundReport(int(p), len(residues), K_trunc, s, tail, c, c * (s + float(tail)) ** 0.25)


def leveque_sum_exact(seq, K_trunc: int) -> Fraction:
    """``S_trunc`` in exact arithmetic, without any character evaluation.

    At level j, ``sum over all m mod p**j of |W|**2 = p**j * Sq_j / N**2``
    (Plancherel on Z/p^j), with ``Sq_j`` the sum of squared disc counts; the
    non-primitive ``m`` reproduce level ``j-1``.
    """
    residues, p, K = sequence_residues(seq)
    if K_trunc > K:
        raise PrecisionError(f"K_trunc={K_trunc} exceeds precision {K}")
    N = len(residues)
    sq = level_square_sums(seq)
    total = Fraction(0)
    for j in range(1, K_trunc + 1):
        energy = Fraction(p ** j * sq[j] - p ** (j - 1) * sq[j - 1], N * N)
        total += energy / p ** (3 * j)
    return total


def parseval_l2_norm_sq(seq) -> Fraction:
    """``||f||_2^2`` summed on the Fourier side, exactly.

    ``||f||**2 = sum_{zeta != 1} Q(1/||zeta||) |W(zeta)|**2`` where
    ``Q(R) = sum_omega radial_integral(R, omega)**2``; ``Q(p**-j) = A p**(-3j)``.
    Past depth K the primitive energy per level is ``(p**j - p**(j-1)) Sq_K / N**2``.
    """
    residues, p, K = sequence_residues(seq)
    N = len(residues)
    sq = level_square_sums(seq)
    A = radial_sq_sum(Fraction(1, p), p).value * p ** 3
    total = Fraction(0)
    for j in range(1, K + 1):
        energy = Fraction(p ** j * sq[j] - p ** (j - 1) * sq[j - 1], N * N)
        total += A * energy / p ** (3 * j)
    s = Fraction(sq[K], N * N)
    total += A * (1 - Fraction(1, p)) * s * Fraction(1, p ** (2 * K) * (p * p - 1))
    return total


@dataclass(frozen=True)
class SandwichRecord:
    discrepancy: Fraction
    l2_norm_sq: Fraction
    S_trunc: float
    tail: Fraction
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def check_sandwich(seq, K_trunc: int = None, slack: float = 1e-9) -> SandwichRecord:
    """Check ``D**4 <= C1 ||f||**2`` exactly and ``||f||**2 <= C2 (S_trunc + tail)``.

    Raises :class:`VerificationError` naming the sequence if either fails.
    """
    residues, p, K = sequence_residues(seq)
    if K_trunc is None:
        K_trunc = K
    c1, c2 = lemma_constants(p)
    d = exact_discrepancy(seq).value
    l2 = l2_norm_sq(seq)
    report = discrepancy_bound(seq, K_trunc)
    lower_ok = d ** 4 <= c1 * l2
    upper_ok = float(l2) <= c2 * (report.S_trunc + float(report.tail)) + slack
    record = SandwichRecord(d, l2, report.S_trunc, report.tail, lower_ok, upper_ok)
    if not record.ok:
        raise VerificationError(f"sandwich failed for {seq!r}: {record}")
    return record


@dataclass(frozen=True)
class LinearWeyl:
    value: complex
    sine_bound: float


def linear_weyl_closed_form(a: PadicApprox, b: PadicApprox, zeta: Character, N: int) -> LinearWeyl:
    """``(1/N) sum_{n=1}^N zeta**(n a + b)`` as a geometric sum.

    With ``z = zeta**a_k``: ``zeta**b * z (1 - z**N) / (N (1 - z))``, and
    ``|value| <= 1 / (N |sin(pi m a_k / p**k)|)``.
    """
    if a.p != zeta.p or b.p != zeta.p:
        raise ParameterError("a, b and the character must share p")
    if zeta.n == 0:
        raise DegenerateRatioError("trivial character: every term is 1")
    k, q = zeta.n, zeta.order
    if min(a.K, b.K) < k:
        raise PrecisionError(f"need {k} digits of a and b")
    u = zeta.m * truncate(a, k) % q
    if u == 0:
        raise DegenerateRatioError(f"zeta**a = 1 for {zeta}; the direct sum is zeta**b")
    z = root_of_unity(u, q)
    zN = root_of_unity(u * N, q)
    zb = root_of_unity(zeta.m * truncate(b, k), q)
    value = zb * z * (1 - zN) / ((1 - z) * N)
    sine = abs(math.sin(math.pi * (u / q)))
    return LinearWeyl(value, 1.0 / (N * sine))


def non_equidistribution_witness(a: PadicApprox):
    """A nontrivial character with ``zeta**a = 1``, or ``None`` when ``a`` is a unit.

    For ``a = p**v c`` the character ``exp(2 pi i / p**v)`` works; when all
    known digits vanish any order up to ``p**K`` does, and ``p**K`` is used.
    """
    if is_unit(a):
        return None
    v = valuation(a)
    return Character(a.p, a.K if v is None else v, 1)


def corollary_constant(p) -> float:
    """``c`` with ``sum_{zeta != 1} ||zeta||**-3 |W|**2 <= c**4 / N**2`` for ``na + b``, ``a`` a unit.

    ``c**4 = (pi**2 / 12) sum_{k >= 1} p**-k = pi**2 / (12 (p - 1))``.
    """
    p = Prime(p)
    return (math.pi ** 2 / (12 * (p - 1))) ** 0.25


@dataclass(frozen=True)
class ChainLevel:
    k: int
    primitive: float   # sum over m prime to p of sin^-2(pi m a_k / p^k)
    full: float        # sum over 1 <= m < p^k
    doubled_half: float  # 2 * sum over 1 <= l <= p^k / 2 of sin^-2(pi l / p^k)
    cap: float         # p^(2k) pi^2 / 12


def corollary_chain(a: PadicApprox, K_trunc: int) -> list:
    """Per-level partial sums of the estimate chain for a unit ``a``.

    Each level should satisfy ``primitive <= full <= doubled_half <= cap``.
    """
    if not is_unit(a):
        raise ParameterError("the chain needs a unit a")
    p = a.p
    out = []
    for k in range(1, K_trunc + 1):
        q = p ** k
        ak = truncate(a, k)
        m = np.arange(1, q, dtype=np.int64)
        s = np.sin(np.pi * ((m * ak % q) / q)) ** -2
        half = np.arange(1, q // 2 + 1, dtype=np.int64)
        out.append(ChainLevel(
            k,
            math.fsum(s[m % p != 0].tolist()),
            math.fsum(s.tolist()),
            2 * math.fsum((np.sin(np.pi * half / q) ** -2).tolist()),
            q * q * math.pi ** 2 / 12,
        ))
    return out
