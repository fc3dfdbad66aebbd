from __future__ import annotations

from fractions import Fraction

import pytest

from psjack.cluster import (
    INFINITE,
    ClusterError,
    baratta_forrester,
    cluster_order,
    cluster_specialize,
    proportionality,
    vandermonde_corollaries,
    vanishing_order,
    verify_clustering_k1,
)
from psjack.mpoly import SparsePoly, valid_label
from psjack.prescribed import prescribed_jack
from psjack.qalpha import alpha_kr
from psjack.spart import admissible, enumerate_superpartitions, superpartition

TYPES = ("AS", "AA", "SA", "SS")


def x(n, i):
    return SparsePoly.var(n, i)


def k1_labels(T, r, n_max, N_max):
    flavor = "weak" if T[0] == "A" else "moderate"
    for N in range(2, N_max + 1):
        for n in range(n_max + 1):
            for m in range(N + 1):
                for sp in enumerate_superpartitions(n, m, N, strict=T[0] == "A"):
                    if valid_label(sp, T) and admissible(sp, 1, r, N, flavor):
                        yield sp


def test_cluster_specialize_merges_the_last_variables():
    p = x(3, 1) * x(3, 2) + x(3, 3) ** 2
    assert cluster_specialize(p, 2) == x(2, 1) * x(2, 2) + x(2, 2) ** 2
    assert cluster_specialize(p, 1) == p
    with pytest.raises(ClusterError):
        cluster_specialize(p, 4)


def test_collapse_into_antisymmetric_block_rejected():
    P = prescribed_jack(superpartition((1, 0), ()), "AS")
    with pytest.raises(ClusterError):
        cluster_specialize(P, 1)


def test_vanishing_order():
    d = x(2, 1) - x(2, 2)
    assert vanishing_order(d ** 3 * (x(2, 1) + 1), 1, 2)[0] == 3
    assert vanishing_order(SparsePoly.zero(2), 1, 2)[0] == INFINITE
    assert vanishing_order(d ** 3, 1, 2, cap=2)[0] == 2


def test_cluster_order_of_P22_at_minus_three():
    P = prescribed_jack(superpartition((), (2, 2, 0, 0)), "AS").specialize(alpha_kr(2, 2))
    rho, q, orders = cluster_order(P, 2)
    assert rho == 2
    assert orders == {1: 2, 2: 2}
    assert q == SparsePoly.one(3)


def test_cluster_order_of_P4():
    P = prescribed_jack(superpartition((), (4, 0)), "AS")
    assert cluster_order(P.specialize(Fraction(-2)), 1)[0] == 2
    assert cluster_order(P.specialize(Fraction(-2, 3)), 1)[0] == 4
    assert cluster_order(P.specialize(Fraction(5)), 1)[0] == 0


def test_extra_factor_raises_the_order():
    P = prescribed_jack(superpartition((), (2, 2, 0, 0)), "AS").specialize(alpha_kr(2, 2)).poly
    extra = (x(4, 1) - x(4, 3)) * (x(4, 2) - x(4, 3))
    assert cluster_order(P * extra, 2)[0] == 3


def test_identically_vanishing_specialization():
    rho, q, _ = cluster_order(x(3, 2) - x(3, 3), 2)
    assert rho == INFINITE and q is None


@pytest.mark.parametrize("T", TYPES)
def test_k1_clustering_by_type(T):
    count = 0
    for sp in k1_labels(T, 2, 6, 3):
        report = verify_clustering_k1(sp, T, 2)
        assert report.passed, (sp, T)
        count += 1
    assert count > 3


def test_k1_hypotheses():
    with pytest.raises(ClusterError):
        verify_clustering_k1(superpartition((), (4, 0)), "AS", 3)
    with pytest.raises(ClusterError):
        verify_clustering_k1(superpartition((), (1, 1)), "AS", 2)


def test_k1_report_row():
    row = verify_clustering_k1(superpartition((), (4, 0)), "AS", 2).as_row()
    assert row["pass"] and row["order"] == 2 and row["k"] == 1


@pytest.mark.parametrize("r", [2, 4])
def test_vandermonde_corollaries(r):
    for N in range(2, 4):
        assert vandermonde_corollaries(N, r) == {"symmetric": True, "antisymmetric": True}


def test_proportionality_requires_multiple():
    p = x(2, 1) + x(2, 2).scale(Fraction(1, 2))
    assert proportionality(p.scale(Fraction(3)), p) == 3
    assert proportionality(x(2, 1), p) is None
    assert proportionality(SparsePoly.zero(2), SparsePoly.zero(2)) == 0


@pytest.mark.parametrize("kappa", [(0, 0), (1, 0), (2, 1, 0), (2, 0, 1), (0, 0, 0)])
def test_baratta_forrester_identity(kappa):
    report = baratta_forrester(kappa, 2)
    assert report["pass"], report
    if report["partition"]:
        assert report["constant"] == 1


def test_baratta_forrester_non_partition_constant():
    report = baratta_forrester((1, 2, 0), 2)
    assert report["pass"] and report["constant"] == -1


def test_baratta_forrester_rejects():
    with pytest.raises(ClusterError):
        baratta_forrester((1, 0), 3)
    with pytest.raises(ClusterError):
        baratta_forrester((0, 1, 1), 2)
