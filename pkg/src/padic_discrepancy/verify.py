"""Oracle suites behind ``padic-discrepancy verify``.

Each suite compares a closed form or fast path against an independent
brute-force computation and returns :class:`Check` records; nothing raises
on a failed comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import Character, enumerate_nontrivial
from .discrepancy import Disc, exact_discrepancy
from .fourier import (disc_coeff_oracle, disc_fourier_coeff,
                      haar_integrate, integral_est_bound, radial_integral,
                      radial_level_sum, radial_sq_sum)
from .leveque import (VerificationError, check_sandwich, discrepancy_bound,
                      linear_weyl_closed_form, non_equidistribution_witness,
                      weyl_sum, weyl_table)
from .padic import from_integer
from .sequences import Linear, SequenceSpec


@dataclass
class Check:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def discs_up_to(p: int, depth: int):
    return [Disc(p, k, a) for k in range(depth + 1) for a in range(p ** k)]


def characters_up_to(p: int, n: int):
    return [Character.trivial(p)] + enumerate_nontrivial(p, n)


def suite_charfun(p: int, seed: int = 0) -> list:
    worst, where = 0.0, None
    for disc in discs_up_to(p, 3):
        for zeta in characters_up_to(p, 3):
            closed = complex(disc_fourier_coeff(disc, zeta))
            dev = abs(closed - disc_coeff_oracle(disc, zeta, depth=6))
            if where is None or dev > worst:
                worst, where = dev, f"disc={disc} zeta={zeta}"
    return [Check(f"charfun p={p}", worst <= 1e-12, f"max deviation {worst:.3g} at {where}")]


def suite_subformula(p: int, seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for d in range(1, 6):
        if p ** d > 10 ** 5:
            break
        g = rng.normal(size=p ** d) + 1j * rng.normal(size=p ** d)
        for k in range(0, d + 1):
            for a in {0, p ** k - 1, int(rng.integers(p ** k))}:
                disc = Disc(p, k, a)
                lhs = haar_integrate(lambda r: disc.contains(r) * g[r], p, d)
                if k == d:
                    rhs = g[a] / p ** k
                else:
                    rhs = haar_integrate(lambda r: g[(a + p ** k * r) % p ** d], p, d - k) / p ** k
                worst = max(worst, abs(lhs - rhs))
    return [Check(f"subformula p={p}", worst <= 1e-14, f"max deviation {worst:.3g}")]


def suite_integralest(p: int, seed: int = 0) -> list:
    worst_level, est_ok, sq_ok, worst_sq = 0.0, True, True, 0.0
    where, est_where = None, "all (R, omega)"
    for k in range(1, 5):
        R = Fraction(1, p ** k)
        for omega in characters_up_to(p, 6) if p ** 6 <= 5000 else characters_up_to(p, 3):
            closed = radial_integral(R, omega)
            dev = abs(float(closed) - radial_level_sum(R, omega))
            if where is None or dev > worst_level:
                worst_level, where = dev, f"R={R} omega={omega}"
            if abs(closed) > integral_est_bound(R, omega) and est_ok:
                est_ok, est_where = False, f"violated at R={R} omega={omega}"
        exact, bound = radial_sq_sum(R, p)
        sq_ok &= exact < bound
        worst_sq = max(worst_sq, abs(float(exact) - radial_sq_numeric(R, p)))
    return [
        Check(f"integralest-closed-form p={p}", worst_level <= 1e-12,
              f"max deviation from shell sum {worst_level:.3g} at {where}"),
        Check(f"integralest-bound1 p={p}", est_ok, f"|I| <= p / max(1/R, ||w||)^2: {est_where}"),
        Check(f"integralest-bound2 p={p}", sq_ok and worst_sq <= 1e-12,
              f"exact < 2p^2R^3; numeric deviation {worst_sq:.3g}"),
    ]


def radial_sq_numeric(R, p: int, max_order_exp: int = 10) -> float:
    """Term-by-term sum of squared radial integrals to order ``p**max_order_exp``, plus the tail.

    Needs ``p**max_order_exp >= 1/R`` so that every omitted order lies past ``1/R``.
    """
    if p ** max_order_exp < 1 / Fraction(R):
        raise ValueError("max_order_exp too small for this radius")
    total = 0.0
    for n in range(0, max_order_exp + 1):
        count = 1 if n == 0 else p ** n - p ** (n - 1)
        omega = Character(p, n, 1) if n else Character.trivial(p)
        total += count * float(radial_integral(R, omega)) ** 2
    # orders p**l, l > max_order_exp: (1 - 1/p) p**4 / (p+1)**2 * p**(-3l) each level
    total += (1 - 1 / p) * p ** 4 / (p + 1) ** 2 * p ** (-3 * (max_order_exp + 1)) / (1 - p ** -3.0)
    return total


def random_specs(p: int, count: int, seed: int, K: int, max_n: int = 64):
    rng = np.random.default_rng(seed)
    for i in range(count):
        N = int(rng.integers(1, max_n + 1))
        yield SequenceSpec.random(seed * 1_000_003 + i, N, p, K)


def suite_sandwich(p: int, seed: int = 0, count: int = 20) -> list:
    failures = []
    for spec in random_specs(p, count, seed, K=10):
        try:
            rec = check_sandwich(spec)
            d = rec.discrepancy
            if not Fraction(1, spec.N) <= d <= 1:
                failures.append(f"{spec}: D={d} outside [1/N, 1]")
            if discrepancy_bound(spec).bound < d:
                failures.append(f"{spec}: bound below D")
        except VerificationError as exc:
            failures.append(str(exc))
    detail = f"{count} random sequences" if not failures else failures[0]
    return [Check(f"sandwich p={p}", not failures, detail)]


def suite_weyl_table(p: int, seed: int = 0) -> list:
    K = 8 if p == 2 else 4
    spec = SequenceSpec.random(seed, 256, p, K)
    fast = weyl_table(spec, K)
    slow = weyl_table(spec, K, method="direct")
    worst = float(np.abs(fast.finest - slow.finest).max())
    return [Check(f"weyl-table p={p}", worst < 1e-9, f"max deviation {worst:.3g} on {spec}")]


def _random_unit(rng, p: int, n: int) -> int:
    while True:
        m = int(rng.integers(1, p ** n))
        if m % p:
            return m


def suite_linear(p: int, seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    K = 6
    worst, bound_ok, where = 0.0, True, None
    for _ in range(20):
        a = _random_unit(rng, p, K)
        b = int(rng.integers(p ** K))
        N = int(rng.integers(1, 301))
        spec = SequenceSpec.linear(a, b, N, p, K)
        for n in range(1, 5):
            zeta = Character(p, n, _random_unit(rng, p, n))
            lw = linear_weyl_closed_form(from_integer(a, p, K), from_integer(b, p, K), zeta, N)
            direct = weyl_sum(spec, zeta)
            dev = abs(lw.value - direct)
            if where is None or dev > worst:
                worst, where = dev, f"a={a} b={b} N={N} zeta={zeta}"
            bound_ok &= abs(direct) <= lw.sine_bound + 1e-12
    stuck, stuck_where = True, "all cases"
    for v in (1, 2):
        a = from_integer(p ** v * _random_unit(rng, p, 2), p, K)
        zeta = non_equidistribution_witness(a)
        for N in (1, 7, 50):
            spec = SequenceSpec(Linear(a, from_integer(1, p, K)), N, p, K)
            if abs(abs(weyl_sum(spec, zeta)) - 1) >= 1e-12 and stuck:
                stuck, stuck_where = False, f"fails at a={a.value} N={N} zeta={zeta}"
    return [
        Check(f"linear-closed-form p={p}", worst < 1e-10 and bound_ok,
              f"max deviation {worst:.3g} at {where}; sine bound holds: {bound_ok}"),
        Check(f"linear-non-unit p={p}", stuck, f"|W| = 1 for the witness character: {stuck_where}"),
    ]


def suite_beer(p: int, seed: int = 0, n_max: int = 100) -> list:
    bad = []
    for a in (1, p + 1, 2 * p + 1):
        for b in (0, 1):
            for N in range(1, n_max + 1):
                d = exact_discrepancy(SequenceSpec.linear(a, b, N, p, 20)).value
                if d != Fraction(1, N):
                    bad.append((a, b, N, d))
    detail = f"D_N = 1/N for N <= {n_max}" if not bad else f"first mismatch {bad[0]}"
    return [Check(f"beer p={p}", not bad, detail)]


SUITES = {
    "charfun": suite_charfun,
    "subformula": suite_subformula,
    "integralest": suite_integralest,
    "sandwich": suite_sandwich,
    "weyl-table": suite_weyl_table,
    "linear": suite_linear,
    "beer": suite_beer,
}


def run(suite: str, primes, seed: int = 0) -> list:
    names = list(SUITES) if suite == "all" else [suite]
    checks = []
    for name in names:
        for p in primes:
            checks.extend(SUITES[name](p, seed))
    return checks
