"""Threshold functions rp, rc, sqp, sqc and the analytic inequalities behind them.

Everything is exact: integers for the threshold values and
:class:`fractions.Fraction` for the inequality checks.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import DomainError

Variant = Literal["path", "cycle"]

VARIANTS: tuple[str, ...] = ("path", "cycle")


def _check_domain(n: int, delta: int) -> None:
    if not (2 * delta > n and delta <= n - 1):
        raise DomainError(f"need n/2 < delta <= n-1, got n={n}, delta={delta}")


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be 'path' or 'cycle', got {variant!r}")


def _defining_inequality(variant: str, n: int, delta: int, r: int) -> bool:
    part = delta // r if variant == "path" else -(-delta // r)
    return n - delta + part > delta


def r_value(variant: Variant, n: int, delta: int) -> int:
    """Largest r with ``n - delta + floor(delta/r) > delta`` (ceil for cycles).

    Scans upwards from r = 1; the left-hand side is non-increasing in r so the
    first failure ends the scan.
    """
    _check_variant(variant)
    _check_domain(n, delta)
    r = 1
    while _defining_inequality(variant, n, delta, r + 1):
        r += 1
    return r


def rp(n: int, delta: int) -> int:
    return r_value("path", n, delta)


def rc(n: int, delta: int) -> int:
    return r_value("cycle", n, delta)


def threshold(variant: Variant, n: int, delta: int) -> int:
    """sqp(n, delta) for ``variant='path'``, sqc(n, delta) for ``'cycle'``."""
    r = r_value(variant, n, delta)
    x = -(-delta // r)
    if variant == "path":
        # ceil(3x/2 + 1/2) == floor((3x + 2) / 2)
        value = (3 * x + 2) // 2
    else:
        value = (3 * x) // 2
    return min(value, n)


def sqp(n: int, delta: int) -> int:
    return threshold("path", n, delta)


def sqc(n: int, delta: int) -> int:
    return threshold("cycle", n, delta)


def sqp_clamped(n: int, delta: int) -> int:
    """sqp with minimum degree at least n-1 read as the spanning case."""
    if delta >= n - 1:
        return n
    return sqp(n, delta)


def rp_clamped(n: int, delta: int) -> int:
    if delta >= n - 1:
        return 1
    return rp(n, delta)


@dataclass(frozen=True)
class ThresholdPoint:
    n: int
    delta: int
    rp: int
    rc: int
    sqp: int
    sqc: int

    @classmethod
    def at(cls, n: int, delta: int) -> "ThresholdPoint":
        return cls(n, delta, rp(n, delta), rc(n, delta), sqp(n, delta), sqc(n, delta))


# sweeps --------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    delta: int
    value: int
    jump: bool


def sweep(variant: Variant, n: int, deltas: range | tuple[int, int]) -> list[SweepRow]:
    """Tabulate the threshold over a contiguous delta range (inclusive pair or range).

    A row is marked as a jump when the value rose by more than 2 from delta-1;
    the predecessor is evaluated even when it lies just outside the range.
    """
    if isinstance(deltas, tuple):
        lo, hi = deltas
        deltas = range(lo, hi + 1)
    rows = []
    for d in deltas:
        value = threshold(variant, n, d)
        prev = threshold(variant, n, d - 1) if 2 * (d - 1) > n else None
        rows.append(SweepRow(d, value, prev is not None and value - prev > 2))
    return rows


def sweep_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["delta", "value", "jump"])
    for row in rows:
        writer.writerow([row.delta, row.value, int(row.jump)])
    return buf.getvalue()


# analytic inequalities -----------------------------------------------------


@dataclass(frozen=True)
class InequalityReport:
    n: int
    delta: int
    eta: Fraction
    mu: Fraction
    shifted_delta: int
    eq_r_holds: bool
    eq_sqpa_holds: bool
    eq_sqpb_line1_holds: bool
    eq_sqpb_line2_holds: bool
    hypotheses_met: dict[str, bool] = field(default_factory=dict)

    @property
    def eq_sqpb_holds(self) -> bool:
        return self.eq_sqpb_line1_holds and self.eq_sqpb_line2_holds

    @property
    def falsifications(self) -> list[str]:
        """Names of inequalities that fail although their hypotheses hold."""
        holds = {
            "eq_r": self.eq_r_holds,
            "eq_sqpa": self.eq_sqpa_holds,
            "eq_sqpb_line1": self.eq_sqpb_line1_holds,
            "eq_sqpb_line2": self.eq_sqpb_line2_holds,
        }
        return [name for name, ok in holds.items() if self.hypotheses_met.get(name) and not ok]


def _as_fraction(x: Fraction | int | str | float) -> Fraction:
    if isinstance(x, float):
        # floats only arrive from user input like 0.001; read them as decimals
        return Fraction(str(x))
    return Fraction(x)


def check_inequalities(n: int, delta: int, eta, mu) -> InequalityReport:
    """Evaluate the r-sandwich and the two sqp estimates used in the stability proof.

    ``delta + eta*n`` enters rp/sqp as ``delta + ceil(eta*n)``; every other
    occurrence of eta is kept exact. The unspecified eta_0(mu) and n_1(eta)
    thresholds are not enforced.
    """
    _check_domain(n, delta)
    eta = _as_fraction(eta)
    mu = _as_fraction(mu)
    if not (0 <= eta < 1) or not (0 <= mu < 1):
        raise DomainError("eta and mu must lie in [0, 1)")

    r = rp(n, delta)
    lo_delta = Fraction((r + 1) * n - r, 2 * (r + 1) - 1)
    hi_delta = Fraction(r * n - r + 1, 2 * r - 1)
    lo_r = Fraction(n - delta, 2 * delta - n + 1)
    hi_r = Fraction(delta + 1, 2 * delta - n + 1)
    eq_r = lo_delta <= delta < hi_delta and lo_r <= r < hi_r

    eta_n = eta * n
    shifted = delta + math.ceil(eta_n)
    sqp_shift = sqp_clamped(n, shifted)
    r_shift = rp_clamped(n, shifted)

    bounds = [Fraction(delta + 3 * eta_n) / r_shift - 2]
    if r_shift > 1:
        bounds.append(Fraction(delta, r_shift - 1) - 2)
    eq_sqpa = sqp_shift <= Fraction(3, 2) * min(bounds)

    three_gap = 3 * (2 * delta - n)
    line1 = sqp_shift <= Fraction(19, 20) * three_gap - 2 <= 6 * delta - 3 * n - 100 * eta_n
    line2 = sqp_shift <= 4 * delta - 2 * n

    above_mu = 2 * delta > n + 2 * mu * n
    positive = eta > 0 and mu > 0
    small_sqp = sqp_shift * 20 <= 11 * n
    hyp_b2 = positive and above_mu and r >= 3 and (r >= 5 or r == r_shift)
    hyps = {
        "eq_r": True,
        "eq_sqpa": positive and above_mu and small_sqp,
        "eq_sqpb_line1": positive and above_mu and small_sqp,
        "eq_sqpb_line2": hyp_b2,
    }
    return InequalityReport(
        n=n,
        delta=delta,
        eta=eta,
        mu=mu,
        shifted_delta=shifted,
        eq_r_holds=eq_r,
        eq_sqpa_holds=eq_sqpa,
        eq_sqpb_line1_holds=line1,
        eq_sqpb_line2_holds=line2,
        hypotheses_met=hyps,
    )
