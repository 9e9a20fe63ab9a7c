import random

import pytest
from hypothesis import given, settings, strategies as st

from shicone.det import (OverlapError, check_nonoverlapping, cone_matrix, count_regions, determinant,
                         forbidden_count, forbidden_matrix, leibniz_determinant, poincare_polynomial,
                         region_table)
from shicone.digraph import build_digraph
from shicone.oracle import PathCatalogue, count_antichains, weighted_path_sum
from shicone.poly import Poly
from shicone.weyl import element_of, enumerate_group

from _support import CHAINED, NESTED, overlap_grid, random_dag, random_walk


def random_forbidden(rng, dag, k):
    chosen = []
    for _ in range(20):
        if len(chosen) == k:
            break
        p = random_walk(rng, dag)
        if p is None or p in chosen:
            continue
        if check_nonoverlapping(chosen + [p])[0]:
            chosen.append(p)
    return chosen


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@given(square)
def test_bareiss_matches_leibniz(m):
    assert determinant(m) == leibniz_determinant(m)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.lists(st.integers(-3, 3), max_size=3), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_over_polynomials(m):
    pm = [[Poly(c) for c in row] for row in m]
    assert determinant(pm) == leibniz_determinant(pm)


def test_empty_and_singular():
    assert determinant([]) == 1
    assert determinant([[0, 0], [0, 5]]) == 0
    assert determinant([[0, 1], [1, 0]]) == -1


def test_overlap_detection():
    assert not check_nonoverlapping(NESTED)[0]
    assert not check_nonoverlapping(CHAINED)[0]
    assert check_nonoverlapping([CHAINED[0], ((1, 1), (1, 2), (2, 2))])[0]
    with pytest.raises(ValueError):
        check_nonoverlapping([((0, 0),)])


def test_overlapping_collections_are_refused_then_miscounted():
    dag = overlap_grid()
    for forbidden, det, truth in [(NESTED, 3, 4), (CHAINED, 2, 3)]:
        with pytest.raises(OverlapError):
            forbidden_count(dag, forbidden)
        assert forbidden_count(dag, forbidden, allow_overlap=True) == det
        assert weighted_path_sum(dag, forbidden) == truth
    assert forbidden_matrix(dag, NESTED) == [[1, 0, 1], [0, 1, 1], [1, 1, 5]]
    assert forbidden_matrix(dag, CHAINED) == [[1, 0, 1], [0, 1, 1], [2, 1, 5]]


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_weighted_theorem_on_random_dags(seed):
    rng = random.Random(seed)
    dag = random_dag(rng)
    forbidden = random_forbidden(rng, dag, rng.randint(0, 4))
    weights = {e: rng.randint(1, 5) for e in dag.edges}
    assert forbidden_count(dag, forbidden, weights) == weighted_path_sum(dag, forbidden, weights)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_symbolic_weights(seed):
    rng = random.Random(seed)
    dag = random_dag(rng, 9)
    forbidden = random_forbidden(rng, dag, 3)
    weights = {e: Poly([rng.randint(0, 2), rng.randint(0, 2)]) for e in dag.edges}
    got = forbidden_count(dag, forbidden, weights)
    want = weighted_path_sum(dag, forbidden, weights)
    assert Poly._lift(got) == Poly._lift(want)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A4", "B3", "D4", "G2", "F4"]), st.data())
def test_order_of_forbidden_corners_is_irrelevant(name, data):
    g = build_digraph(name)
    word = data.draw(st.lists(st.integers(1, g.rs.rank), max_size=8))
    w = element_of(g.rs, word)
    roots = w.ordered_inversions_of_inverse()
    shuffled = data.draw(st.permutations(roots))
    assert cone_matrix(g, w, shuffled).determinant() == cone_matrix(g, w).determinant()


@pytest.mark.parametrize("name", ["A4", "B3", "D4", "G2", "F4"])
def test_matrices_are_triangular_up_to_order(name):
    g = build_digraph(name)
    for w in list(enumerate_group(g.rs))[::7]:
        m = cone_matrix(g, w).matrix
        n = len(m) - 1
        for i in range(n):
            for j in range(i + 1, n):
                assert m[i][j] == 0 or m[j][i] == 0


def test_order_must_be_the_inversion_set():
    g = build_digraph("A2")
    w = element_of(g.rs, "1 2")
    with pytest.raises(ValueError):
        cone_matrix(g, w, [0])


def test_a2_matrix_with_explicit_order():
    g = build_digraph("A2")
    w = element_of(g.rs, "1 2")
    order = [g.rs.find("12"), g.rs.find("22")]
    assert cone_matrix(g, w, order).matrix == [[1, 0, 1], [0, 1, 2], [1, 1, 5]]
    assert cone_matrix(g, w).matrix == [[1, 0, 2], [0, 1, 1], [1, 1, 5]]


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "D5", "G2"])
def test_counts_match_oracles_on_sample(name):
    g = build_digraph(name)
    cat = PathCatalogue(g)
    for w in list(enumerate_group(g.rs))[::5]:
        anti, by_size = count_antichains(g.rs, w.inversions_of_inverse())
        assert count_regions(name, w.word) == anti == cat.avoiding(w.inversions_of_inverse())[0]
        poly = poincare_polynomial(name, w.word)
        assert poly.coeffs == by_size
        assert poly.coeffs[0] == 1
        assert poly.degree <= len(by_size) - 1


def test_region_table_parallel_matches_serial():
    serial = region_table("B3", refined=True, workers=1)
    parallel = region_table("B3", refined=True, workers=2)
    assert serial == parallel
    assert sum(r.count for r in serial) == 7 ** 3
