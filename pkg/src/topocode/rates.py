"""Encoding-rate tables and the quantum Hamming bound.

Rates are exact ``Fraction``s until rendered. The asymptotic bound is a float
curve; comparisons against it use ``BOUND_TOL``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, TopocodeError
from .families import FamilySpec

BOUND_TOL = 1e-12
# instances with at most this many qubits are built and machine-checked
VERIFY_MAX_N = 136

CSV_HEADER = ["family", "n", "k", "d", "verified", "t_over_n", "k_over_n", "t_over_n_exact", "k_over_n_exact"]


@dataclass(frozen=True)
class RateRow:
    family: str
    n: int
    k: int
    d: int
    verified: bool

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ArgumentError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        if not 2 * self.t < self.d <= self.n:
            raise ArgumentError(f"need 2t < d <= n, got d={self.d}, n={self.n}")

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    @property
    def t_over_n(self) -> Fraction:
        return Fraction(self.t, self.n)

    @property
    def k_over_n(self) -> Fraction:
        return Fraction(self.k, self.n)


def binary_entropy(x: float) -> float:
    if x in (0, 1):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def hamming_bound_rate(x: float | Fraction) -> float:
    """Asymptotic quantum Hamming bound ``1 - x log2(3) - H2(x)`` at ``x = t/n``."""
    x = float(x)
    if not 0 < x < 1:
        raise ArgumentError(f"t/n must lie in (0, 1), got {x}")
    return 1 - x * math.log2(3) - binary_entropy(x)


def finite_hamming_feasible(n: int, k: int, t: int) -> bool:
    """``2^k * sum_{j<=t} 3^j C(n, j) <= 2^n`` in exact integers."""
    if not 0 <= k <= n or t < 0:
        raise ArgumentError(f"need 0 <= k <= n and t >= 0, got n={n}, k={k}, t={t}")
    volume = sum(3**j * math.comb(n, j) for j in range(min(t, n) + 1))
    return (volume << k) <= 1 << n


def verify_spec(spec: FamilySpec) -> tuple[int, int, int]:
    """Build the instance and compute ``(n, k, d)``; raises if it contradicts the formula."""
    from .code import distance, from_embedding

    code = from_embedding(spec.build())
    got = (code.n, code.k, distance(code))
    if got != spec.formula():
        raise TopocodeError(f"{spec.label()}: computed {got}, formula {spec.formula()}")
    return got


def family_row(label: str, spec: FamilySpec, verify: bool = True) -> RateRow:
    n, k, d = spec.formula()
    checked = False
    if verify and n <= VERIFY_MAX_N:
        verify_spec(spec)
        checked = True
    return RateRow(label, n, k, d, checked)


def figure1_table(verify: bool = True) -> list[RateRow]:
    """K_5, optimal toric codes for t = 2..21, and K_s for s = 9, 13, ..., 85."""
    rows = [family_row("complete_selfdual:s=5", FamilySpec("complete_selfdual", {"s": 5}), verify)]
    for t in range(2, 22):
        d = 2 * t + 1
        rows.append(family_row(f"optimal_toric:d={d}", FamilySpec("optimal_toric", {"d": d}), verify))
    for s in range(9, 86, 4):
        rows.append(family_row(f"complete_selfdual:s={s}", FamilySpec("complete_selfdual", {"s": s}), verify))
    return rows


def default_table(verify: bool = True) -> list[RateRow]:
    """The small instances of every family."""
    specs = [FamilySpec("kitaev_toric", {"d": d}) for d in (2, 3, 4, 5)]
    specs += [FamilySpec("optimal_toric", {"d": d}) for d in (3, 5, 7)]
    specs += [FamilySpec("complete_selfdual", {"s": s}) for s in (5, 9)]
    specs += [FamilySpec("planar_holed", {"h": h, "d": d}) for h in (1, 2, 4) for d in (2, 3, 5)]
    specs += [FamilySpec("connected_sum_chain", {"d": 3, "count": c}) for c in (2, 3)]
    rows = []
    for spec in specs:
        label = spec.family + ":" + ",".join(f"{k}={v}" for k, v in sorted(spec.params.items()))
        rows.append(family_row(label, spec, verify))
    return rows


def below_bound(row: RateRow, tol: float = BOUND_TOL) -> bool:
    """``k/n <= bound(t/n)``; rows with ``t = 0`` only need ``k < n``."""
    if row.t == 0:
        return row.k < row.n
    return float(row.k_over_n) <= hamming_bound_rate(row.t_over_n) + tol


def rows_to_csv(rows: list[RateRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([
            r.family, r.n, r.k, r.d, "verified" if r.verified else "formula",
            f"{float(r.t_over_n):.6f}", f"{float(r.k_over_n):.6f}",
            f"{r.t_over_n.numerator}/{r.t_over_n.denominator}",
            f"{r.k_over_n.numerator}/{r.k_over_n.denominator}",
        ])
    return buf.getvalue()


def bound_curve_csv(start: float, stop: float, samples: int) -> str:
    if samples < 2:
        raise ArgumentError("need at least 2 samples")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "rate"])
    for i in range(samples):
        x = start + (stop - start) * i / (samples - 1)
        w.writerow([f"{x:.6f}", f"{hamming_bound_rate(x):.6f}"])
    return buf.getvalue()
