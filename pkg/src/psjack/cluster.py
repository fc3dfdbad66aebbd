"""Cluster specialization, vanishing orders and the k = 1 clustering identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .jack import nonsym_jack_at, twisted_staircase
from .mpoly import NotDivisible, SparsePoly, asym, exact_div, merge_vars, sym, vandermonde
from .prescribed import PSJack, eta_decreasing, prescribed_jack_triangular
from .qalpha import alpha_kr
from .spart import Superpartition, admissible, staircase, superpartition

INFINITE = "infinite"


class ClusterError(ValueError):
    """A hypothesis of a clustering statement is violated."""


@dataclass
class ClusterReport:
    label: Optional[Superpartition]
    T: str
    k: int
    r: int
    orders: dict[int, Union[int, str]]
    quotient: Optional[SparsePoly]
    passed: bool
    case: str = ""
    details: dict = field(default_factory=dict)

    @property
    def order(self) -> Union[int, str]:
        finite = [o for o in self.orders.values() if o != INFINITE]
        if not finite:
            return INFINITE
        return min(finite)

    def as_row(self) -> dict:
        return {
            "label": str(self.label) if self.label is not None else None,
            "type": self.T,
            "k": self.k,
            "r": self.r,
            "order": self.order,
            "constant": str(self.details.get("constant")) if "constant" in self.details else None,
            "pass": self.passed,
        }


def _poly_and_m(P: Union[PSJack, SparsePoly]) -> tuple[SparsePoly, int]:
    if isinstance(P, PSJack):
        m = P.m if P.T in ("AS", "AA") else 0
        return P.poly, m
    return P, 0


def cluster_specialize(P: Union[PSJack, SparsePoly], k: int, m: Optional[int] = None) -> SparsePoly:
    """Set x_{N-k+1} = ... = x_N = z; z is variable N-k+1 of the result."""
    poly, m0 = _poly_and_m(P)
    m = m0 if m is None else m
    N = poly.nvars
    if not 1 <= k <= N:
        raise ClusterError(f"cluster size {k} out of range for {N} variables")
    if N - k < m:
        raise ClusterError("collapse crosses the antisymmetric block")
    z = N - k + 1
    out = poly
    for i in range(N, z, -1):
        out = merge_vars(out, i, z)
    return out


def _difference(nvars: int, i: int, j: int) -> SparsePoly:
    return SparsePoly.var(nvars, i) - SparsePoly.var(nvars, j)


def vanishing_order(p: SparsePoly, i: int, j: int, cap: Optional[int] = None) -> tuple[Union[int, str], SparsePoly]:
    """Multiplicity of (x_i - x_j) in p together with the cofactor."""
    if p.is_zero():
        return INFINITE, p
    d = _difference(p.nvars, i, j)
    rho = 0
    while cap is None or rho < cap:
        try:
            p = exact_div(p, d)
        except NotDivisible:
            break
        rho += 1
    return rho, p


def cluster_order(P: Union[PSJack, SparsePoly], k: int, m: Optional[int] = None) -> tuple[Union[int, str], Optional[SparsePoly], dict[int, Union[int, str]]]:
    """Largest rho with prod_{j<=N-k} (x_j - z)^rho dividing the specialization.

    Returns (rho, quotient, per-variable orders); rho is "infinite" (and the
    quotient None) when the specialization vanishes identically.
    """
    spec = cluster_specialize(P, k, m)
    z = spec.nvars
    if spec.is_zero():
        return INFINITE, None, {j: INFINITE for j in range(1, z)}
    orders: dict[int, Union[int, str]] = {}
    for j in range(1, z):
        orders[j] = vanishing_order(spec, j, z)[0]
    rho = min(orders.values()) if orders else 0
    q = spec
    if rho:
        for j in range(1, z):
            for _ in range(rho):
                q = exact_div(q, _difference(z, j, z))
    return rho, q, orders


# ---------------------------------------------------------------------------
# k = 1 clustering by symmetry type
# ---------------------------------------------------------------------------


def _pairs(block: Sequence[int]) -> list[tuple[int, int]]:
    return [(a, b) for x, a in enumerate(block) for b in block[x + 1:]]


def _divide_pairs(p: SparsePoly, pairs: Sequence[tuple[int, int]], power: int) -> Optional[SparsePoly]:
    try:
        for i, j in pairs:
            for _ in range(power):
                p = exact_div(p, _difference(p.nvars, i, j))
    except NotDivisible:
        return None
    return p


def _check_hypotheses(sp: Superpartition, T: str, r: int) -> None:
    if r < 2 or r % 2:
        raise ClusterError("k = 1 clustering needs r even")
    N, m = sp.N, sp.m
    parts = sp.parts
    sym_side = parts[m:]
    sym_strict = all(a > b for a, b in zip(sym_side, sym_side[1:]))
    if T in ("AS", "AA"):
        if not (sp.is_strict and admissible(sp, 1, r, N, "weak")):
            raise ClusterError(f"{sp} is not strict weakly (1,{r},{N})-admissible")
    elif T in ("SS", "SA"):
        if not admissible(sp, 1, r, N, "moderate"):
            raise ClusterError(f"{sp} is not moderately (1,{r},{N})-admissible")
    else:
        raise ClusterError(f"unknown symmetry type {T!r}")
    if T in ("SA", "AA") and not sym_strict:
        raise ClusterError(f"{sp} needs strictly decreasing parts after position m")


def _block_and_power(T: str, m: int, N: int, r: int) -> tuple[str, list[tuple[int, int]], int]:
    I, J = list(range(1, m + 1)), list(range(m + 1, N + 1))
    if T == "AS":
        return "second block", _pairs(J), r
    if T == "SS":
        return "both blocks", _pairs(I) + _pairs(J), r
    if T == "SA":
        return "first block", _pairs(I), r
    return "all variables", _pairs(list(range(1, N + 1))), r - 1


def exact_q(sp: Superpartition, r: int) -> SparsePoly:
    """Closed form of P/Delta_J^r for type AS at alpha = -2/(r-1), up to a constant."""
    N, m = sp.N, sp.m
    eta = eta_decreasing(sp)
    dp = twisted_staircase(eta)
    kappa = tuple(e - (r - 1) * d for e, d in zip(eta, dp))
    if min(kappa) < 0 or twisted_staircase(kappa) != dp:
        raise ClusterError(f"no composition kappa with eta = kappa + (r-1) delta' for {sp}")
    I, J = list(range(1, m + 1)), list(range(m + 1, N + 1))
    E = nonsym_jack_at(kappa, Fraction(2, r - 1))
    inner = asym(E, J) if len(J) > 1 else E
    inner = exact_div(inner, vandermonde(J, N))
    q = sym(inner, I) if len(I) > 1 else inner
    factor = vandermonde(I, N) ** (r - 1)
    for i in I:
        for j in J:
            factor = factor * _difference(N, i, j) ** (r - 1)
    return factor * q


def proportionality(p: SparsePoly, q: SparsePoly) -> Optional[Fraction]:
    """c with p = c q, or None."""
    if q.is_zero():
        return None if not p.is_zero() else Fraction(0)
    e, cq = q.leading_term()
    c = Fraction(p.coeff(e)) / Fraction(cq)
    return c if p == q.scale(c) else None


def verify_clustering_k1(sp: Superpartition, T: str, r: int, cross_check: bool = True) -> ClusterReport:
    """Per-type Vandermonde divisibility of P_Lambda at alpha = -2/(r-1).

    AS: prod_{m<i<j}(x_i-x_j)^r; SS: both blocks to the power r; SA: the first
    block; AA: the full Vandermonde to the power r-1.  The
    per-variable orders are the multiplicities of (x_j - x_last) within the
    block, x_last being its final variable.
    """
    _check_hypotheses(sp, T, r)
    N, m = sp.N, sp.m
    a0 = alpha_kr(1, r)
    P = prescribed_jack_triangular(sp, T).specialize(a0).poly
    case, pairs, power = _block_and_power(T, m, N, r)
    quotient = _divide_pairs(P, pairs, power)
    block = {
        "AS": list(range(m + 1, N + 1)),
        "SS": list(range(m + 1, N + 1)) if N - m >= 2 else list(range(1, m + 1)),
        "SA": list(range(1, m + 1)),
        "AA": list(range(1, N + 1)),
    }[T]
    orders: dict[int, Union[int, str]] = {}
    if len(block) >= 2:
        last = block[-1]
        for j in block[:-1]:
            orders[j] = vanishing_order(P, j, last)[0]
    passed = quotient is not None and all(o == INFINITE or o >= power for o in orders.values())
    details: dict = {"power": power, "alpha": a0}
    if T == "AS" and cross_check and quotient is not None and not P.is_zero():
        c = proportionality(quotient, exact_q(sp, r))
        details["constant"] = c
        passed = passed and c is not None and c != 0
    return ClusterReport(sp, T, 1, r, orders, quotient, passed, case, details)


def vandermonde_corollaries(N: int, r: int) -> dict[str, bool]:
    """P_{r delta} = Delta^r (symmetric) and S_{(r-1) delta} = Delta^{r-1} (antisymmetric)."""
    a0 = alpha_kr(1, r)
    d = staircase(N)
    delta = vandermonde(range(1, N + 1), N)
    sym_label = superpartition((), tuple(r * x for x in d))
    anti_label = superpartition(tuple((r - 1) * x for x in d), ())
    P = prescribed_jack_triangular(sym_label, "AS").specialize(a0).poly
    S = prescribed_jack_triangular(anti_label, "AS").specialize(a0).poly
    return {"symmetric": P == delta ** r, "antisymmetric": S == delta ** (r - 1)}


# ---------------------------------------------------------------------------
# Baratta-Forrester duality
# ---------------------------------------------------------------------------


def _is_split(kappa: Sequence[int]) -> Optional[int]:
    """Some m with kappa[:m] weakly and kappa[m:] strictly decreasing."""
    for m in range(len(kappa), -1, -1):
        a, b = kappa[:m], kappa[m:]
        if all(x >= y for x, y in zip(a, a[1:])) and all(x > y for x, y in zip(b, b[1:])):
            return m
    return None


def baratta_forrester(kappa: Sequence[int], r: int) -> dict:
    """Check E_{kappa+(r-1)delta'}(-2/(r-1)) = c Delta^{r-1} E_kappa(2/(r-1)) and report c."""
    kappa = tuple(kappa)
    if r < 2 or r % 2:
        raise ClusterError("the duality needs r even")
    if _is_split(kappa) is None:
        raise ClusterError(f"{kappa} is not a partition followed by a strict partition")
    N = len(kappa)
    dp = twisted_staircase(kappa)
    big = tuple(a + (r - 1) * d for a, d in zip(kappa, dp))
    lhs = nonsym_jack_at(big, Fraction(-2, r - 1))
    rhs = vandermonde(range(1, N + 1), N) ** (r - 1) * nonsym_jack_at(kappa, Fraction(2, r - 1))
    c = proportionality(lhs, rhs)
    is_partition = all(x >= y for x, y in zip(kappa, kappa[1:]))
    passed = c is not None and c != 0 and (not is_partition or c == 1)
    return {"kappa": kappa, "shifted": big, "delta_prime": dp, "constant": c, "partition": is_partition, "pass": passed}
