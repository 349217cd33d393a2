"""Triangle construction schemes, serialization, transforms and shifts."""

from fractions import Fraction as F

import pytest

from weylstir.kernels import binomial_general, strided_falling, strided_rising
from weylstir.poly import ALPHA, BETA, R, ParamPoly
from weylstir.triangles import (
    Triangle,
    binomial_transform,
    build_recurrence,
    conjecture_check,
    decompose_classical,
    entry_by_sum,
    identity_triangle,
    reflection_check,
    shat_from_s_row,
    shift_r,
    stirling_cycle,
    stirling_subset,
    symbolic_triangle,
    triangle_by_decomposition,
    triangle_by_sum,
    triangle_by_transform,
    triangle_product,
    vandermonde_ldu_check,
)

CLASSIC = [F(v) for v in (-2, -1, 0, 1, 2)] + [F(1, 2)]


def test_classical_subset_rows():
    tri = build_recurrence("S", 0, 1, 0, 5)
    assert tri.row(4) == [0, 1, 7, 6, 1]
    assert tri.row(5) == [0, 1, 15, 25, 10, 1]
    for n in range(6):
        for k in range(n + 1):
            assert tri.entry(n, k) == stirling_subset(n, k)


def test_classical_cycle_rows():
    tri = build_recurrence("S", -1, 0, 0, 5)
    assert tri.row(4) == [0, 6, 11, 6, 1]
    for n in range(6):
        for k in range(n + 1):
            assert tri.entry(n, k) == stirling_cycle(n, k)


def test_edge_invariants():
    for a in CLASSIC:
        for b in CLASSIC:
            for r in CLASSIC:
                s = build_recurrence("S", a, b, r, 6)
                sh = build_recurrence("Shat", a, b, r, 6)
                e = build_recurrence("E", a, b, r, 6)
                for n in range(7):
                    fall = strided_falling(r, n, a)
                    assert s.entry(n, 0) == fall
                    assert sh.entry(n, 0) == fall
                    assert e.entry(n, 0) == fall
                    assert s.entry(n, n) == 1
                    assert sh.entry(n, n) == b**n * _fact(n)
                    assert e.entry(n, n) == strided_rising(b - r, n, a)
                s.validate()
                sh.validate()
                e.validate()


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_entry_indexing():
    tri = build_recurrence("S", 0, 1, 0, 4)
    assert tri.entry(3, -1) == 0
    assert tri.entry(3, 4) == 0
    with pytest.raises(IndexError):
        tri.entry(5, 0)


def test_shat_is_modified_s():
    for b in (F(0), F(2), F(-1, 2)):
        s = build_recurrence("S", F(1), b, F(3), 8)
        sh = build_recurrence("Shat", F(1), b, F(3), 8)
        for n in range(9):
            assert shat_from_s_row(s.row(n), b) == sh.row(n)


def test_sum_scheme_matches_recurrence():
    for kind in ("Shat", "E"):
        t1 = build_recurrence(kind, F(1, 2), F(2), F(-1), 9)
        t2 = triangle_by_sum(kind, F(1, 2), F(2), F(-1), 9)
        assert t1.rows == t2.rows


def test_single_entry_by_sum():
    assert entry_by_sum("Shat", 3, 2, 0, 1, 0) == 6  # 2! * S(3, 2)
    with pytest.raises(ValueError):
        entry_by_sum("Shat", 3, 5, 0, 1, 0)
    with pytest.raises(ValueError):
        entry_by_sum("S", 3, 2, 0, 1, 0)


def test_transform_scheme_matches_recurrence():
    for kind in ("Shat", "E"):
        t1 = build_recurrence(kind, F(-2), F(3), F(1, 2), 9)
        t2 = triangle_by_transform(kind, F(-2), F(3), F(1, 2), 9)
        assert t1.rows == t2.rows


def test_binomial_transform_round_trip():
    e = build_recurrence("E", F(-1), F(2), F(1), 8)
    sh = build_recurrence("Shat", F(-1), F(2), F(1), 8)
    for n in range(9):
        assert binomial_transform(e.row(n), "EToShat") == sh.row(n)
        assert binomial_transform(sh.row(n), "ShatToE") == e.row(n)


def test_decomposition_single_entry_and_triangle():
    t1 = build_recurrence("S", F(3), F(-1, 2), F(2), 8)
    t2 = triangle_by_decomposition(F(3), F(-1, 2), F(2), 8)
    assert t1.rows == t2.rows
    assert decompose_classical(6, 2, F(3), F(-1, 2), F(2)) == t1.entry(6, 2)
    # zero parameters exercise the 0^0 = 1 convention
    assert triangle_by_decomposition(0, 0, 0, 5).rows == build_recurrence("S", 0, 0, 0, 5).rows


def test_defining_balance_shat():
    """(beta x + r)^(falling n, alpha) = sum_k Shat_{n,k} C(x, k),
    as polynomials in x (checked at non-integer rationals)."""
    a, b, r = F(-1), F(2), F(3, 2)
    sh = build_recurrence("Shat", a, b, r, 8)
    for x in (F(0), F(3), F(1, 2), F(-5, 3), F(7)):
        for n in range(9):
            lhs = strided_falling(b * x + r, n, a)
            rhs = sum(sh.entry(n, k) * binomial_general(x, k) for k in range(n + 1))
            assert lhs == rhs


def test_defining_balance_eulerian():
    """(beta x + r)^(falling n, alpha) = sum_k E_{n,k} C(x + n - k, n)."""
    a, b, r = F(1, 2), F(-2), F(1)
    e = build_recurrence("E", a, b, r, 8)
    for x in (F(0), F(2), F(-1, 2), F(10, 3)):
        for n in range(9):
            lhs = strided_falling(b * x + r, n, a)
            rhs = sum(
                e.entry(n, k) * binomial_general(x + n - k, n) for k in range(n + 1)
            )
            assert lhs == rhs


def test_eulerian_row_sums():
    # row n sums to n! beta^n, for any alpha and r
    for a, b, r in ((F(0), F(1), F(1)), (F(-1), F(2), F(0)), (F(1, 2), F(-3), F(5))):
        e = build_recurrence("E", a, b, r, 8)
        for n in range(9):
            assert sum(e.row(n)) == _fact(n) * b**n


def test_symbolic_triangle_entries_and_homogeneity():
    sym = symbolic_triangle("S", 4)
    assert sym.entry(1, 0) == R
    assert sym.entry(1, 1) == ParamPoly.constant(1)
    assert sym.entry(2, 1) == -ALPHA + BETA + 2 * R
    # every monomial alpha^i beta^j r^l in S_{n,k} has i + j + l = n - k
    for n in range(5):
        for k in range(n + 1):
            degs = sym.entry(n, k).total_degrees()
            assert degs <= {n - k}
    # evaluation agrees with the numeric recurrence
    num = build_recurrence("S", F(2), F(-1), F(1, 2), 4)
    for n in range(5):
        for k in range(n + 1):
            assert sym.entry(n, k).evaluate(F(2), F(-1), F(1, 2)) == num.entry(n, k)


def test_symbolic_triangle_all_kinds():
    for kind in ("S", "Shat", "E"):
        sym = symbolic_triangle(kind, 3)
        num = build_recurrence(kind, F(-2), F(3), F(1), 3)
        for n in range(4):
            for k in range(n + 1):
                assert sym.entry(n, k).evaluate(F(-2), F(3), F(1)) == num.entry(n, k)


def test_product_rule_and_inverse():
    left = build_recurrence("S", F(1, 2), F(2), F(1), 8)
    right = build_recurrence("S", F(2), F(-1), F(1, 2), 8)
    prod = triangle_product(left, right)
    direct = build_recurrence("S", F(1, 2), F(-1), F(3, 2), 8)
    assert prod.rows == direct.rows
    inv = build_recurrence("S", F(2), F(1, 2), F(-1), 8)
    assert triangle_product(left, inv).rows == identity_triangle(F(1, 2), 8).rows
    # mismatched inner parameter is rejected
    with pytest.raises(ValueError):
        triangle_product(left, build_recurrence("S", F(3), F(1), F(0), 8))


def test_ldu_and_reflection():
    assert vandermonde_ldu_check(F(-2), F(1), F(3), 8)
    assert vandermonde_ldu_check(F(1, 2), F(2), F(-1), 8)
    assert reflection_check(F(1, 2), F(2), F(-1), 8)
    assert reflection_check(F(0), F(1), F(1), 8)


def test_shift_r_newton_series():
    base = build_recurrence("S", F(1, 2), F(2), F(0), 7)
    target = build_recurrence("S", F(1, 2), F(2), F(3, 2), 7)
    assert shift_r(base, F(3, 2), "NewtonAlpha").rows == target.rows
    assert shift_r(base, F(3, 2), "NewtonBeta").rows == target.rows
    baseh = build_recurrence("Shat", F(1, 2), F(2), F(0), 7)
    targeth = build_recurrence("Shat", F(1, 2), F(2), F(3, 2), 7)
    assert shift_r(baseh, F(3, 2), "NewtonAlpha").rows == targeth.rows
    assert shift_r(baseh, F(3, 2), "NewtonBeta").rows == targeth.rows


def test_shift_r_subset_to_r_stirling():
    """Shifting the subset triangle by r = 1 gives the row-shifted subset
    numbers S(n+1, k+1), a classical difference identity."""
    base = build_recurrence("S", 0, 1, 0, 7)
    shifted = shift_r(base, F(1), "NewtonBeta")
    for n in range(8):
        for k in range(n + 1):
            assert shifted.entry(n, k) == stirling_subset(n + 1, k + 1)


def test_shift_r_modified_bookkeeping():
    """For the modified triangle at (-1, 2), the unit shift relates to the
    shifted triangle through Shat_{n+1,k+1}/(2(k+1))."""
    base = build_recurrence("Shat", -1, 2, 0, 8)
    big = build_recurrence("Shat", -1, 2, 1, 8)
    # r-shift identity specialized to beta = 2: entries divide exactly
    shifted = shift_r(base, F(1), "NewtonBeta")
    assert shifted.rows == big.rows


def test_json_round_trip():
    tri = build_recurrence("E", F(-1), F(2), F(2), 5)
    again = Triangle.from_json(tri.to_json())
    assert again == tri
    assert again.rows == tri.rows


def test_json_rejects_garbage():
    with pytest.raises(ValueError):
        Triangle.from_json("not json at all {")
    with pytest.raises(ValueError):
        Triangle.from_json('{"kind": "S"}')


def test_csv_and_latex_and_text():
    tri = build_recurrence("S", 0, 1, 0, 2)
    assert tri.to_csv().splitlines() == ["1", "0,1", "0,1,1"]
    assert "\\\\" in tri.to_latex()
    assert tri.to_text().splitlines()[2] == "0, 1, 1"


def test_conjecture_checker_reports_both_conventions():
    rep = conjecture_check(n_max=6, r_min=-2, r_max=4)
    assert rep.total == 7 * 28
    # the stated summation range matches the recurrence everywhere...
    assert not rep.mismatches_stated
    # ...while truncating j to naturals loses the r >= 3 cells
    assert rep.mismatches_truncated
    assert all(c.r >= 3 for c in rep.convention_sensitive)
