"""Exact discrepancy of a finite sequence in Z_p.

Exactness convention: each alpha_n *is* the integer given by its K digits
(all higher digits zero).  Under this convention the supremum over discs
splits into

* a finite maximum over depths ``0 <= k <= K``, where counts are read off
  truncations mod ``p**k``;
* a depth-limit term ``(largest multiplicity of a value) / N``.  Beyond
  depth K a nonempty disc only holds copies of one value ``v``, so its
  deviation ``m_v/N - p**-k`` increases to ``m_v/N`` without reaching it,
  while every other deviation past depth K is at most ``p**-K``, which the
  limit term already dominates.

Everything is computed with :class:`fractions.Fraction`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .padic import PadicApprox, ParameterError, PrecisionError, Prime
from .sequences import SequenceSpec, digit_matrix, generate_residues

DEPTH_LIMIT = "depth-limit"


@dataclass(frozen=True)
class Disc:
    """``D(a, p**-k) = a + p**k Z_p``."""

    p: Prime
    k: int
    a: int

    def __post_init__(self):
        object.__setattr__(self, "p", Prime(self.p))
        if self.k < 0:
            raise ParameterError(f"depth must be >= 0, got {self.k}")
        if not 0 <= self.a < self.p ** self.k:
            raise ParameterError(f"center {self.a} outside [0, {self.p}^{self.k})")

    @property
    def measure(self) -> Fraction:
        return Fraction(1, self.p ** self.k)

    def contains(self, r) -> bool:
        """Membership of an integer residue (or array of them) known mod p^k or finer."""
        return np.asarray(r) % self.p ** self.k == self.a

    def to_dict(self):
        return {"a": self.a, "k": self.k}

    def __str__(self):
        return f"D({self.a}, {self.p}^-{self.k})"


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class DiscrepancyReport:
    value: Fraction
    witness: object  # Disc, or DEPTH_LIMIT
    limit_term: Fraction
    finite_max: Fraction
    N: int
    K: int

    @property
    def attained(self) -> bool:
        return self.witness != DEPTH_LIMIT

    def to_dict(self):
        witness = self.witness.to_dict() if isinstance(self.witness, Disc) else self.witness
        return {
            "value": fraction_str(self.value),
            "witness": witness,
            "limit_term": fraction_str(self.limit_term),
            "finite_max": fraction_str(self.finite_max),
            "N": self.N,
            "K": self.K,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def sequence_residues(seq):
    """``(residues, p, K)`` for a SequenceSpec or a list of PadicApprox."""
    if isinstance(seq, SequenceSpec):
        return generate_residues(seq), seq.p, seq.K
    seq = list(seq)
    if not seq:
        raise ParameterError("empty sequence")
    p, K = seq[0].p, seq[0].K
    for x in seq:
        if not isinstance(x, PadicApprox):
            raise ParameterError(f"expected PadicApprox, got {x!r}")
        if x.p != p or x.K != K:
            raise ParameterError("sequence elements disagree on p or precision")
    return [x.value for x in seq], p, K


def local_discrepancy(seq, disc: Disc) -> Fraction:
    """``#{n : alpha_n in disc} / N - measure(disc)``."""
    residues, p, K = sequence_residues(seq)
    if disc.p != p:
        raise ParameterError(f"disc in Z_{disc.p}, sequence in Z_{p}")
    if disc.k > K:
        raise PrecisionError(f"disc depth {disc.k} exceeds sequence precision {K}")
    q = p ** disc.k
    count = sum(1 for r in residues if r % q == disc.a)
    return Fraction(count, len(residues)) - disc.measure


class _DepthGroups:
    """Runs of equal truncation at every depth, from one lexicographic sort.

    Sorting the digit rows with ``a_0`` as the primary key makes every disc at
    every depth a contiguous run; ``lcp[i]`` is the number of leading digits
    rows ``i`` and ``i+1`` share, so depth-k runs break exactly where
    ``lcp < k``.
    """

    def __init__(self, residues, p: int, K: int):
        self.p, self.K, self.N = p, K, len(residues)
        digits = digit_matrix(residues, p, K)
        order = np.lexsort(digits[:, ::-1].T)
        self.digits = digits[order]
        neq = self.digits[1:] != self.digits[:-1]
        self.lcp = np.where(neq.any(axis=1), neq.argmax(axis=1), K)

    def starts(self, k: int) -> np.ndarray:
        breaks = np.flatnonzero(self.lcp < k) + 1
        return np.concatenate(([0], breaks))

    def counts(self, k: int):
        starts = self.starts(k)
        return starts, np.diff(np.append(starts, self.N))

    def center(self, row: int, k: int) -> int:
        r = 0
        for d in reversed(self.digits[row, :k].tolist()):
            r = r * self.p + d
        return r

    def empty_center(self, k: int) -> int:
        starts = self.starts(k)
        occupied = {self.center(int(s), k) for s in starts}
        return next(r for r in range(len(occupied) + 1) if r not in occupied)


def exact_discrepancy(seq) -> DiscrepancyReport:
    """Discrepancy over all discs ``D(a, p**-k)``, ``k >= 0``, under the exactness convention."""
    residues, p, K = sequence_residues(seq)
    N = len(residues)
    groups = _DepthGroups(residues, p, K)

    # depth 0: the whole ring, deviation exactly 0
    finite_max = Fraction(0)
    witness = Disc(p, 0, 0)
    for k in range(1, K + 1):
        q = p ** k
        measure = Fraction(1, q)
        starts, counts = groups.counts(k)
        i_max, i_min = int(counts.argmax()), int(counts.argmin())
        over = Fraction(int(counts[i_max]), N) - measure
        if len(counts) < q:
            under, under_center = measure, None
        else:
            under, under_center = measure - Fraction(int(counts[i_min]), N), int(starts[i_min])
        if over > finite_max and over >= under:
            finite_max = over
            witness = Disc(p, k, groups.center(int(starts[i_max]), k))
        elif under > finite_max:
            finite_max = under
            center = (groups.empty_center(k) if under_center is None
                      else groups.center(under_center, k))
            witness = Disc(p, k, center)

    _, full = groups.counts(K)
    limit_term = Fraction(int(full.max()), N)
    if limit_term > finite_max:
        return DiscrepancyReport(limit_term, DEPTH_LIMIT, limit_term, finite_max, N, K)
    return DiscrepancyReport(finite_max, witness, limit_term, finite_max, N, K)


def level_square_sums(seq) -> list:
    """``[sum_a count(a, k)**2 for k in 0..K]``; constant past depth K."""
    residues, p, K = sequence_residues(seq)
    groups = _DepthGroups(residues, p, K)
    out = [len(residues) ** 2]
    for k in range(1, K + 1):
        _, counts = groups.counts(k)
        out.append(int((counts.astype(object) ** 2).sum()))
    return out


def l2_norm_sq(seq) -> Fraction:
    """Exact ``||f||_2^2`` of the local discrepancy ``f(x, y)`` over ``Z_p x Z_p``.

    Level ``|y| = p**-j`` has measure ``(1 - 1/p) p**-j``, and there
    ``int f(x, y)**2 dx = p**-j * (S_j / N**2 - p**-j)`` with ``S_j`` the sum of
    squared disc counts at depth j.  Levels past K share ``S_K``, so the tail
    is two geometric series.
    """
    residues, p, K = sequence_residues(seq)
    N = len(residues)
    sq = level_square_sums(seq)
    w = 1 - Fraction(1, p)
    total = Fraction(0)
    for j in range(1, K + 1):
        total += w * Fraction(1, p ** (2 * j)) * (Fraction(sq[j], N * N) - Fraction(1, p ** j))
    s = Fraction(sq[K], N * N)
    tail2 = Fraction(1, p ** (2 * K) * (p * p - 1))
    tail3 = Fraction(1, p ** (3 * K) * (p ** 3 - 1))
    return total + w * (s * tail2 - tail3)
