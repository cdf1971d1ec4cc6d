from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topocode.errors import ArgumentError
from topocode.families import FamilySpec
from topocode.rates import (
    CSV_HEADER,
    RateRow,
    below_bound,
    binary_entropy,
    bound_curve_csv,
    default_table,
    family_row,
    figure1_table,
    finite_hamming_feasible,
    hamming_bound_rate,
    rows_to_csv,
)


def bound_oracle(x: Fraction) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 40
        xd = Decimal(x.numerator) / Decimal(x.denominator)
        ln2 = Decimal(2).ln()
        h = -(xd * xd.ln() + (1 - xd) * (1 - xd).ln()) / ln2
        return 1 - xd * Decimal(3).ln() / ln2 - h


def test_bound_examples():
    assert hamming_bound_rate(0.1) == pytest.approx(0.372508, abs=1e-6)
    assert hamming_bound_rate(0.1) == pytest.approx(float(bound_oracle(Fraction(1, 10))), abs=1e-12)
    assert hamming_bound_rate(Fraction(1, 7)) == pytest.approx(float(bound_oracle(Fraction(1, 7))), abs=1e-12)
    assert 0 < hamming_bound_rate(0.11) < 0.37
    assert binary_entropy(0.5) == 1.0


@pytest.mark.parametrize("x", [0, 1, -0.1, 1.5])
def test_bound_domain(x):
    with pytest.raises(ArgumentError):
        hamming_bound_rate(x)


@given(st.floats(0.001, 0.18), st.floats(0.001, 0.18))
def test_bound_decreasing_and_convex(a, b):
    lo, hi = sorted((a, b))
    if hi - lo < 1e-6:
        return
    assert hamming_bound_rate(lo) > hamming_bound_rate(hi)
    mid = (lo + hi) / 2
    assert hamming_bound_rate(mid) <= (hamming_bound_rate(lo) + hamming_bound_rate(hi)) / 2 + 1e-12


def test_finite_feasible():
    assert finite_hamming_feasible(10, 2, 1)
    assert finite_hamming_feasible(5, 1, 1)
    assert not finite_hamming_feasible(4, 1, 1)
    assert not finite_hamming_feasible(6, 6, 1)
    with pytest.raises(ArgumentError):
        finite_hamming_feasible(3, 4, 1)


def test_row_validation():
    with pytest.raises(ArgumentError):
        RateRow("x", 10, 11, 3, False)
    with pytest.raises(ArgumentError):
        RateRow("x", 2, 1, 3, False)


def test_k9_row():
    row = family_row("k9", FamilySpec("complete_selfdual", {"s": 9}))
    assert row.verified
    assert (row.t_over_n, row.k_over_n) == (Fraction(1, 36), Fraction(20, 36))


def test_figure1_table():
    rows = figure1_table()
    assert len(rows) == 1 + 20 + 20
    assert (rows[0].t_over_n, rows[0].k_over_n) == (Fraction(1, 10), Fraction(1, 5))
    for t, row in zip(range(2, 22), rows[1:21]):
        assert (row.n, row.k, row.t_over_n) == ((2 * t + 1) ** 2 + 1, 2, Fraction(t, (2 * t + 1) ** 2 + 1))
    assert [r.verified for r in rows[1:21]] == [r.n <= 136 for r in rows[1:21]]
    assert all(below_bound(r) for r in rows)


def test_default_table_below_bound():
    assert all(below_bound(r) for r in default_table())


def test_csv():
    rows = figure1_table(verify=False)
    text = rows_to_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1].startswith("complete_selfdual:s=5,10,2,3,formula,0.100000,0.200000,1/10,1/5")
    curve = bound_curve_csv(0.01, 0.1, 10).splitlines()
    assert curve[0] == "x,rate" and len(curve) == 11
    with pytest.raises(ArgumentError):
        bound_curve_csv(0.01, 0.1, 1)
