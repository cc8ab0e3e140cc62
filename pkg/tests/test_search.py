from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lf_forge.errors import BadRange, ParamOutOfRange, RangeTooSmall
from lf_forge.fibrations import x_family, knot_surgered_fibration
from lf_forge.search import (
    COROLLARIES,
    GEOGRAPHY_COLUMNS,
    LATTICE,
    LINE_12CHI,
    LINE_8CHI,
    GeographyPoint,
    ParamSolution,
    construct_bundle,
    geography_emit,
    geography_row,
    nonzero_signature_filter,
    solve_params,
    verify_corollary,
    write_csv,
)


def brute_force(h_max, k_max):
    """Quadruple loop over (h, k, n, g) checking the two defining equations."""
    out = []
    for h in range(2, h_max + 1):
        for k in range(2, k_max + 1, 2):
            for n in range(2, h + 2):
                for g in range(1, h + k + 1):
                    if h + k == n + 2 * g - 1 and 8 + 4 * h - 2 * k == 12 * n:
                        out.append((h, k, n, g))
    return out


def test_solve_examples():
    sols = [tuple(s) for s in solve_params(10, 10)]
    assert (5, 2, 2, 3) in sols
    assert (8, 2, 3, 4) in sols
    assert not any(s[:2] == (2, 2) for s in sols)


def test_solve_matches_brute_force():
    assert [tuple(s) for s in solve_params(40, 40)] == brute_force(40, 40)


def test_solve_ordering_and_tiny_grid():
    sols = solve_params(60, 60)
    assert sols == sorted(sols, key=lambda s: (s.h, s.k))
    assert solve_params(2, 2) == []


def test_solve_range_too_small():
    with pytest.raises(RangeTooSmall):
        solve_params(1, 10)
    with pytest.raises(RangeTooSmall):
        solve_params(10, 0)


def test_parallel_matches_serial():
    assert solve_params(120, 90, workers=3) == solve_params(120, 90)


def test_nonempty_at_100():
    sols = {tuple(s) for s in solve_params(100, 100)}
    assert {(5, 2, 2, 3), (8, 2, 3, 4)} <= sols


def test_param_solution_validates():
    with pytest.raises(ParamOutOfRange):
        ParamSolution(2, 2, 1, 2)
    with pytest.raises(ParamOutOfRange):
        ParamSolution(5, 2, 2, 4)


def test_construct_bundle_examples():
    y = construct_bundle(ParamSolution(5, 2, 2, 3))
    assert (y.fiber_genus, y.base_genus, y.sigma) == (7, 47, -8)
    y = construct_bundle(ParamSolution(8, 2, 3, 4))
    assert (y.fiber_genus, y.base_genus, y.sigma) == (10, 71, -12)


def test_zero_signature_solutions():
    zeros = [s for s in solve_params(200, 200) if 2 * s.n == s.h + 1]
    for s in zeros:
        assert construct_bundle(s).sigma == 0
    assert nonzero_signature_filter(zeros) == []


def test_nonzero_filter():
    kept = nonzero_signature_filter([ParamSolution(5, 2, 2, 3)])
    assert kept == [ParamSolution(5, 2, 2, 3)]
    kept = nonzero_signature_filter([ParamSolution(8, 2, 3, 4)])
    assert kept[0].sigma_mirror == 12


def test_nonzero_filter_drops_synthetic_zero():
    class Fake:
        sigma = 0

    assert nonzero_signature_filter([Fake()]) == []


def test_grid_invariants():
    for s in solve_params(200, 200):
        assert s.h >= 2 and s.k >= 2 and s.k % 2 == 0 and s.n >= 2 and s.g >= 1
        assert s.h + s.k == s.n + 2 * s.g - 1
        assert 8 + 4 * s.h - 2 * s.k == 12 * s.n
        x1, x2 = x_family(s.h, s.k), knot_surgered_fibration(s.n, s.g)
        assert x1.total.e == x2.total.e == 12 * s.n
        assert x1.fiber_genus == x2.fiber_genus
        assert x1.singular_fibers == x2.singular_fibers
        b, a = x1.total.chi_h, x1.total.c1_sq
        assert a == 12 * b - x1.total.e


def test_geography_corollary_points():
    pts = geography_emit(5, 2, 0, 4, 1)
    lattice = {(p.chi_h, p.c1_sq) for p in pts if p.tag == LATTICE}
    assert (0, -24) in lattice and (2, 0) in lattice
    line12 = {(p.chi_h, p.c1_sq) for p in pts if p.tag == LINE_12CHI}
    line8 = {(p.chi_h, p.c1_sq) for p in pts if p.tag == LINE_8CHI}
    assert (0, -24) in line8 and (0, -24) in line12 and (2, 0) in line12


def test_geography_h8():
    pts = geography_emit(8, 2, 0, 4, Fraction(1, 2))
    line12 = {(p.chi_h, p.c1_sq) for p in pts if p.tag == LINE_12CHI}
    assert (3, 0) in line12 and (0, -36) in line12
    for p in pts:
        if p.tag == LINE_12CHI:
            assert p.c1_sq == 12 * p.chi_h - 36


@pytest.mark.parametrize("h", [2, 5, 8, 13])
def test_line_8chi_intercept(h):
    pts = geography_emit(h, 2, 0, 1, 1)
    assert [p.c1_sq for p in pts if p.tag == LINE_8CHI and p.chi_h == 0] == [-4 * (h + 1)]


def test_geography_big_step_gives_endpoints():
    pts = geography_emit(5, 2, Fraction(1, 3), Fraction(5, 2), 10)
    for tag in (LINE_8CHI, LINE_12CHI):
        assert [p.chi_h for p in pts if p.tag == tag] == [Fraction(1, 3), Fraction(5, 2)]


def test_geography_fractional_steps_exact():
    pts = geography_emit(5, 2, 0, 1, Fraction(1, 3))
    assert [p.chi_h for p in pts if p.tag == LINE_8CHI] == [0, Fraction(1, 3), Fraction(2, 3), 1]


def test_geography_bad_range():
    with pytest.raises(BadRange):
        geography_emit(5, 2, 3, 1, 1)
    with pytest.raises(BadRange):
        geography_emit(5, 2, 0, 1, 0)


def test_geography_csv_schema():
    text = write_csv([geography_row(GeographyPoint(Fraction(1, 3), Fraction(-2, 3), LINE_8CHI))], GEOGRAPHY_COLUMNS)
    assert text == (
        "tag,chi_num,chi_den,c1sq_num,c1sq_den,chi_dec,c1sq_dec\n"
        "line_8chi,1,3,-2,3,0.333333,-0.666667\n"
    )


@given(st.integers(2, 60), st.integers(1, 30).map(lambda k: 2 * k))
def test_ba_on_12chi_line(h, k):
    pts = geography_emit(h, k, -40, 40, 5)
    b, a = pts[-1].chi_h, pts[-1].c1_sq
    assert (b, a) == (1 - k // 2, -4 * (h + k - 1))
    assert a == 12 * b - x_family(h, k).total.e


def test_verify_42_all_match():
    checks = verify_corollary("4.2")
    assert all(c.match for c in checks)


def test_verify_43_two_mismatches():
    checks = {c.claim: c for c in verify_corollary("4.3")}
    bad = {name: c for name, c in checks.items() if not c.match}
    assert set(bad) == {"base genus", "singular fibers (X(h,k), E(n)_K)"}
    assert bad["base genus"].computed == 71 and bad["base genus"].stated == 75
    assert bad["singular fibers (X(h,k), E(n)_K)"].computed == (72, 72)
    assert checks["signature sigma(Y)"].computed == -12


def test_verify_unknown():
    with pytest.raises(KeyError):
        verify_corollary("9.9")
    assert set(COROLLARIES) == {"4.2", "4.3"}
