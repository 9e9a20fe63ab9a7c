import pytest
from hypothesis import given, strategies as st

from shicone.digraph import build_digraph
from shicone.pathcount import (ballot_count, binom, corner_poly_A, diag_sum, diag_sum_raw, diag_sum_simplified,
                               dp_corner_poly, dp_count, gamma_B, gamma_D)

from _support import matrix_pairs


def brute_ballot(p1, p2):
    # direct recursion over north/east steps staying weakly above x = y
    (x1, y1), (x2, y2) = p1, p2
    if x1 > x2 or y1 > y2 or x1 > y1:
        return 0
    if (x1, y1) == (x2, y2):
        return 1
    return brute_ballot((x1 + 1, y1), p2) + brute_ballot((x1, y1 + 1), p2)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_ballot_matches_recursion(a, b, c, d):
    x1, y1 = min(a, b), max(a, b)
    x2, y2 = min(c, d), max(c, d)
    assert ballot_count((x1, y1), (x2, y2)) == brute_ballot((x1, y1), (x2, y2))


def test_ballot_values():
    assert ballot_count((0, 1), (5, 6)) == 132
    assert ballot_count((1, 2), (5, 6)) == 42
    assert ballot_count((2, 1), (0, 0)) == 0
    assert binom(3, 5) == 0 and binom(-1, 0) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_diag_sum_forms_agree(n):
    g = build_digraph(f"B{n}")
    for v in g.vertices:
        assert diag_sum_raw(v, n) == diag_sum_simplified(v, n) == dp_count(g, v, g.sink)


def test_diag_sum_values_for_b4():
    assert [diag_sum(p, 4) for p in [(1, 2), (4, 5), (3, 6), (1, 6), (0, 1)]] == [20, 1, 1, 2, 70]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_type_a_closed_forms_match_dp(n):
    g = build_digraph(f"A{n}")
    for a, b in matrix_pairs(g):
        assert ballot_count((a.x, a.y), (b.x, b.y)) == dp_count(g, a, b)
        assert corner_poly_A(a, b) == dp_corner_poly(g, a, b)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_type_b_closed_form_matches_dp(n):
    g = build_digraph(f"B{n}")
    for a, b in matrix_pairs(g):
        assert gamma_B(a, b, n) == dp_count(g, a, b)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_type_d_closed_form_matches_dp(n):
    g = build_digraph(f"D{n}")
    for a, b in matrix_pairs(g):
        assert gamma_D(a, b, n) == dp_count(g, a, b), (a, b)


# pairs where the naive boundary cases disagree with direct counting
NAIVE_MISMATCHES = {4: (22, 484, 52), 5: (57, 1521, 196), 6: (124, 3721, 744)}


@pytest.mark.parametrize("n", [4, 5, 6])
def test_type_d_naive_boundary_cases_overcount(n):
    g = build_digraph(f"D{n}")
    pairs = matrix_pairs(g)
    bad = sum(1 for a, b in pairs if gamma_D(a, b, n, naive_boundary=True) != dp_count(g, a, b))
    expected_bad, expected_pairs, source_to_sink = NAIVE_MISMATCHES[n]
    assert (bad, len(pairs)) == (expected_bad, expected_pairs)
    if source_to_sink is not None:
        assert gamma_D(g.source, g.sink, n, naive_boundary=True) == source_to_sink
        assert gamma_D(g.source, g.sink, n) == g.rs.invariants.catalan


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "G2", "F4"])
def test_corner_poly_at_one_is_path_count(name):
    g = build_digraph(name)
    for a, b in matrix_pairs(g)[:200]:
        assert dp_corner_poly(g, a, b)(1) == dp_count(g, a, b)


def test_corner_poly_a_identity_is_narayana():
    g = build_digraph("A4")
    assert corner_poly_A(g.source, g.sink).coeffs == (1, 10, 20, 10, 1)


def test_corner_poly_a_at_one_is_ballot():
    for x1 in range(7):
        for y1 in range(x1, 8):
            for x2 in range(x1, 7):
                for y2 in range(max(x2, y1), 8):
                    assert corner_poly_A((x1, y1), (x2, y2))(1) == ballot_count((x1, y1), (x2, y2))


@pytest.mark.parametrize("name", ["B4", "D4", "F4"])
def test_dp_corner_poly_nonnegative(name):
    g = build_digraph(name)
    for a, b in matrix_pairs(g):
        p = dp_corner_poly(g, a, b)
        assert all(c >= 0 for c in p.coeffs)
        assert p(1) == dp_count(g, a, b)
