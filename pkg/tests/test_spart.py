from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psjack.qalpha import ALPHA, QAlphaError, RatFuncAlpha
from psjack.spart import (
    Order,
    SpartError,
    add_partition,
    admissible,
    cell_stats,
    conjugate,
    corners,
    dominance_compositions,
    dominance_partitions,
    dominance_superpartitions,
    enumerate_superpartitions,
    eps_partition,
    eps_superpartition,
    from_star_circ,
    parse_superpartition,
    partition_admissible,
    partitions,
    phi_m,
    remove_circle,
    remove_column,
    sort_to_partition,
    staircase,
    superpartition,
)


def _brute_dominance(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    sa = list(itertools.accumulate(a))
    sb = list(itertools.accumulate(b))
    ge = all(x >= y for x, y in zip(sa, sb))
    le = all(x <= y for x, y in zip(sa, sb))
    if ge and le:
        return Order.EQUAL
    if ge:
        return Order.GREATER
    if le:
        return Order.LESS
    return Order.INCOMPARABLE


@pytest.mark.parametrize(
    "c, expected",
    [((0, 3, 1), (3, 1, 0)), ((0, 0, 0), (0, 0, 0)), ((4, 3, 0, 4), (4, 4, 3, 0))],
)
def test_sort_to_partition(c, expected):
    assert sort_to_partition(c) == expected


def test_dominance_partitions_examples():
    assert dominance_partitions((4,), (2, 2)) is Order.GREATER
    assert dominance_partitions((3, 3), (4, 1, 1)) is Order.INCOMPARABLE
    assert dominance_partitions((2, 1), (2, 1)) is Order.EQUAL
    with pytest.raises(SpartError):
        dominance_partitions((3,), (1, 1))


def test_dominance_partitions_matches_partial_sums():
    for n in range(9):
        ps = list(partitions(n))
        for a in ps:
            for b in ps:
                assert dominance_partitions(a, b) is _brute_dominance(a, b)


def test_dominance_compositions_examples():
    assert dominance_compositions((2, 0), (1, 1)) is Order.GREATER
    assert dominance_compositions((1, 1), (1, 1)) is Order.EQUAL
    assert dominance_compositions((0, 2), (2, 0)) is Order.LESS


def test_dominance_superpartitions_examples():
    omega = superpartition((5, 3, 1), (2,))
    gamma = superpartition((3, 1, 0), (5, 2))
    lam = superpartition((4, 3, 0), (4,))
    assert dominance_superpartitions(omega, gamma) is Order.GREATER
    assert dominance_superpartitions(lam, omega) is Order.INCOMPARABLE
    assert dominance_superpartitions(lam, lam) is Order.EQUAL
    assert lam.star == (4, 4, 3, 0)
    with pytest.raises(SpartError):
        dominance_superpartitions(lam, superpartition((1,), (1,)))


@pytest.mark.parametrize("p, expected", [((3, 1), (2, 1, 1)), ((1, 1, 1), (3,)), ((2, 2), (2, 2))])
def test_conjugate(p, expected):
    assert conjugate(p) == expected


def test_cell_stats():
    assert cell_stats((3, 1), (1, 1)) == (2, 0, 1, 0)
    assert cell_stats((1,), (1, 1)) == (0, 0, 0, 0)
    assert cell_stats((2, 2), (1, 2)) == (0, 1, 1, 0)
    with pytest.raises(SpartError):
        cell_stats((2,), (2, 1))


def test_eps_partition():
    assert eps_partition((2,)) == ALPHA
    assert eps_partition((1, 1)) == RatFuncAlpha.from_scalar(-1)
    assert eps_partition((0,)).is_zero()


def test_eps_superpartition():
    assert eps_superpartition(superpartition((0,), ())).is_zero()
    assert eps_superpartition(superpartition((1, 0), ())) == ALPHA - 1
    assert eps_superpartition(superpartition((), (3, 1))).is_zero()


def test_superpartition_invariants():
    for sp in enumerate_superpartitions(6, 2, 4):
        diffs = [c - s for c, s in zip(sp.circ, sp.star)]
        assert set(diffs) <= {0, 1}
        assert sum(diffs) == sp.m
        assert from_star_circ(sp.star, sp.circ) == sp


def test_parse_and_render_round_trip():
    sp = parse_superpartition("(8,7,5;6,3,3)")
    assert sp == superpartition((8, 7, 5), (6, 3, 3))
    assert parse_superpartition(str(sp)) == sp
    assert str(superpartition((), (2, 2))) == "(∅;2,2)"
    assert parse_superpartition("(∅;2,2)") == parse_superpartition("(;2,2)")
    assert parse_superpartition("(1;)", N=3).sym == (0, 0)
    with pytest.raises(SpartError):
        parse_superpartition("(1,2;0)")


def test_phi_m():
    assert phi_m((0, 3, 1, 4), 2) == superpartition((3, 0), (4, 1))
    assert phi_m((3, 1, 0), 0) == superpartition((), (3, 1, 0))


def _compositions(n, N):
    if N == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, N - 1):
            yield (first,) + rest


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 6), N=st.integers(2, 4), data=st.data())
def test_phi_m_is_order_preserving(n, N, data):
    comps = list(_compositions(n, N))
    a = data.draw(st.sampled_from(comps))
    b = data.draw(st.sampled_from(comps))
    m = data.draw(st.integers(0, N))
    if dominance_compositions(a, b) is Order.GREATER:
        # swaps inside one block collapse to the same image, so only >= holds
        assert dominance_superpartitions(phi_m(a, m), phi_m(b, m)) in (Order.GREATER, Order.EQUAL)


def test_phi_m_strict_when_images_differ():
    assert dominance_superpartitions(phi_m((2, 0), 1), phi_m((0, 2), 1)) is Order.GREATER
    assert phi_m((1, 0), 0) == phi_m((0, 1), 0)


def test_admissible_examples():
    assert admissible(superpartition((), (4, 0)), 1, 2, 2, "weak")
    assert admissible(superpartition((), (4, 0)), 1, 4, 2, "weak")
    assert admissible(superpartition((), (2, 2, 0, 0)), 2, 2, 4, "weak")
    assert not admissible(superpartition((), (2, 2)), 1, 2, 2, "weak")
    with pytest.raises(QAlphaError):
        admissible(superpartition((), (4, 0)), 1, 3, 2)
    assert admissible(superpartition((), (4, 0)), 1, 3, 2, require_coprime=False)


def test_admissibility_implies_partition_admissibility():
    # strict weak admissibility forces both Lambda^* and Lambda^circledast to be (k+1,r,N)-admissible
    k, r, N = 1, 2, 4
    for n in range(9):
        for m in range(N + 1):
            for sp in enumerate_superpartitions(n, m, N, strict=True):
                if admissible(sp, k, r, N, "weak"):
                    assert partition_admissible(sp.star, k + 1, r, N)
                    assert partition_admissible(sp.circ, k + 1, r, N)


def test_admissibility_gap_bound():
    # circ_{i+1} - star_{i+rho(k+1)} >= rho r on admissible labels
    k, r, N = 1, 2, 5
    for n in range(11):
        for m in range(N + 1):
            for sp in enumerate_superpartitions(n, m, N, strict=True):
                if not admissible(sp, k, r, N, "weak"):
                    continue
                star, circ = list(sp.star) + [0] * N, list(sp.circ) + [0] * N
                for i in range(N):
                    for rho in range(1, N):
                        j = i + rho * (k + 1)
                        if j < N:
                            assert circ[i + 1] - star[j] >= rho * r


def test_corners_of_staircase_are_circled_inner():
    for m in range(1, 5):
        sp = superpartition(staircase(m), ())
        reports = corners(sp)
        assert reports
        assert all(c.circled and c.kind == "inner" for c in reports)


def test_corners_of_rectangle():
    reports = corners(superpartition((), (3, 3, 3)))
    assert [(c.cell, c.circled) for c in reports] == [((3, 3), False)]


def test_corner_hooks_on_worked_diagram():
    # the (k,r,N) = (4,3,18) diagram with starred corners in rows 1, 6, 9, 10
    sp = superpartition((10, 7, 2), (10, 8, 8, 8, 6, 6, 6, 5, 3, 3, 3, 0, 0, 0, 0))
    assert sp.N == 18 and sp.is_strict
    # the drawn diagram misses the weak gap at row 3 (8 - 6 < 3); hooks are classified regardless
    assert not admissible(sp, 4, 3, 18, "weak")
    hooks = {c.cell: c.hook for c in corners(sp, 4, 3)}
    assert hooks[(1, 11)] == "C~"
    assert hooks[(6, 8)] == "C"
    assert hooks[(9, 6)] == "B~"
    assert hooks[(10, 5)] == "B"


def test_corner_count_transitions():
    # removing an inner/bordering/outer corner changes the corner count by -1/0/+1
    delta = {"inner": -1, "bordering": 0, "outer": 1}
    for n in range(1, 9):
        for lam in partitions(n):
            sp = superpartition((), lam)
            before = len(corners(sp))
            for c in corners(sp):
                i, _ = c.cell
                smaller = list(lam)
                smaller[i - 1] -= 1
                after = len(corners(superpartition((), sort_to_partition(smaller))))
                assert after - before == delta[c.kind], (lam, c)


def test_diagram_surgery():
    assert remove_column(superpartition((5, 3, 1), (2,))) == superpartition((4, 2, 0), (1,))
    assert remove_circle(superpartition((5, 3, 0), (2,))) == superpartition((5, 3), (2,))
    assert add_partition(superpartition((5, 3, 1, 0), (4, 2, 1)), staircase(7)) == superpartition(
        (11, 7, 3, 0), (9, 5, 2)
    )
    with pytest.raises(SpartError):
        remove_column(superpartition((1,), (0,)))
    with pytest.raises(SpartError):
        remove_circle(superpartition((1,), ()))


def test_enumerate_superpartitions():
    assert enumerate_superpartitions(1, 0, 2) == [superpartition((), (1, 0))]
    got = set(enumerate_superpartitions(2, 1, 2))
    assert got == {superpartition((2,), (0,)), superpartition((0,), (2,)), superpartition((1,), (1,))}
    assert enumerate_superpartitions(3, 3, 2) == []


def test_enumeration_order_refines_dominance():
    labels = enumerate_superpartitions(6, 2, 4)
    for x, a in enumerate(labels):
        for b in labels[x + 1:]:
            assert dominance_superpartitions(a, b) is not Order.LESS
