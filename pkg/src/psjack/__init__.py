"""Exact Jack polynomials with prescribed symmetry, their clustering and translation invariance."""

from __future__ import annotations

from .cluster import ClusterReport, baratta_forrester, cluster_order, cluster_specialize, verify_clustering_k1
from .invariance import (
    InvarianceVerdict,
    generate_invariant_forms,
    invariance_verdict,
    invariant_cluster,
    is_invariant_analytic,
    is_invariant_combinatorial,
    smallest_invariant,
)
from .jack import nonsym_jack
from .mpoly import SparsePoly
from .prescribed import PSJack, prescribed_jack, prescribed_jack_triangular
from .qalpha import ALPHA, RatFuncAlpha, alpha_kr
from .spart import Superpartition, parse_superpartition, superpartition

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "ClusterReport",
    "InvarianceVerdict",
    "PSJack",
    "RatFuncAlpha",
    "SparsePoly",
    "Superpartition",
    "alpha_kr",
    "baratta_forrester",
    "cluster_order",
    "cluster_specialize",
    "generate_invariant_forms",
    "invariance_verdict",
    "invariant_cluster",
    "is_invariant_analytic",
    "is_invariant_combinatorial",
    "nonsym_jack",
    "parse_superpartition",
    "prescribed_jack",
    "prescribed_jack_triangular",
    "smallest_invariant",
    "superpartition",
    "verify_clustering_k1",
]
