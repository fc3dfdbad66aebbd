"""Cherednik, Sekiguchi, Sutherland and translation operators acting on SparsePoly.

Every operator takes the Jack parameter explicitly as ``alpha``: either the
formal :data:`~psjack.qalpha.ALPHA` (generic mode) or a rational number
(numeric mode).  Exchange terms use the closed-form divided difference

    (u^p v^q - u^q v^p) / (u - v) = sum_{s=0}^{p-q-1} u^{p-1-s} v^{q+s}   (p > q),

which :func:`divided_difference` cross-checks against exact division.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .mpoly import Coef, SparsePoly, check_symmetry_class, exact_div, transpose_vars
from .qalpha import ALPHA

Exps = tuple[int, ...]


@lru_cache(maxsize=None)
def dd_kernel(p: int, q: int) -> tuple[tuple[int, int, int], ...]:
    """(u^p v^q - u^q v^p)/(u - v) as ((exp_u, exp_v, coef), ...)."""
    if p == q:
        return ()
    if p > q:
        return tuple((p - 1 - s, q + s, 1) for s in range(p - q))
    return tuple((a, b, -c) for a, b, c in dd_kernel(q, p))


def divided_difference(f: SparsePoly, i: int, j: int) -> SparsePoly:
    """(1 - K_{ij}) f / (x_i - x_j) computed by exact division."""
    diff = f - transpose_vars(f, i, j)
    e = [0] * f.nvars
    e[i - 1] = 1
    d = SparsePoly.monomial(e)
    e2 = [0] * f.nvars
    e2[j - 1] = 1
    return exact_div(diff, d - SparsePoly.monomial(e2))


def _accumulate(out: dict, e: Exps, c: Coef) -> None:
    v = out.get(e)
    out[e] = c if v is None else v + c


def _pair_dd_times_var(p: SparsePoly, a: int, b: int, mult_var: int, sign: int, out: dict) -> None:
    """out += sign * x_{mult_var} * (1 - K_ab) p / (x_a - x_b), indices 0-based."""
    for e, c in p.terms.items():
        ea, eb = e[a], e[b]
        if ea == eb:
            continue
        cc = c if sign > 0 else -c
        for pa, pb, k in dd_kernel(ea, eb):
            f = list(e)
            f[a] = pa
            f[b] = pb
            f[mult_var] += 1
            _accumulate(out, tuple(f), cc if k == 1 else -cc)


def _clean(nvars: int, out: dict) -> SparsePoly:
    return SparsePoly(nvars, {e: c for e, c in out.items() if c}, _clean=True)


def xi(j: int, p: SparsePoly, alpha: Coef = ALPHA) -> SparsePoly:
    """Cherednik operator xi_j."""
    N = p.nvars
    if not 1 <= j <= N:
        raise IndexError(f"xi index {j} out of range 1..{N}")
    jj = j - 1
    out: dict = {}
    for e, c in p.terms.items():
        coef = alpha * e[jj] - (j - 1)
        if coef:
            _accumulate(out, e, c * coef)
    # i < j: x_j/(x_j - x_i)(1 - K_ij) = -x_j (1 - K_ij)/(x_i - x_j)
    for i in range(jj):
        _pair_dd_times_var(p, i, jj, jj, -1, out)
    # i > j: x_i/(x_j - x_i)(1 - K_ij) = x_i (1 - K_ji)/(x_j - x_i)
    for i in range(jj + 1, N):
        _pair_dd_times_var(p, jj, i, i, +1, out)
    return _clean(N, out)


def xi_eigenvalue(eta: Sequence[int], j: int, alpha: Coef = ALPHA) -> Coef:
    """bar eta_j = alpha eta_j - #{i<j: eta_i >= eta_j} - #{i>j: eta_i > eta_j}."""
    e = eta[j - 1]
    cnt = sum(1 for i in range(j - 1) if eta[i] >= e) + sum(1 for i in range(j, len(eta)) if eta[i] > e)
    return alpha * e - cnt


def op_H(p: SparsePoly, alpha: Coef = ALPHA) -> SparsePoly:
    """sum_i xi_i^2."""
    total = SparsePoly.zero(p.nvars)
    for j in range(1, p.nvars + 1):
        total = total + xi(j, xi(j, p, alpha), alpha)
    return total


def op_H1(p: SparsePoly, alpha: Coef = ALPHA) -> SparsePoly:
    """sum_i xi_i."""
    total = SparsePoly.zero(p.nvars)
    for j in range(1, p.nvars + 1):
        total = total + xi(j, p, alpha)
    return total


def op_I(p: SparsePoly, m: int, alpha: Coef = ALPHA) -> SparsePoly:
    """sum_{i <= m} xi_i."""
    if not 0 <= m <= p.nvars:
        raise ValueError("need 0 <= m <= N")
    total = SparsePoly.zero(p.nvars)
    for j in range(1, m + 1):
        total = total + xi(j, p, alpha)
    return total


@lru_cache(maxsize=None)
def sutherland_pair_kernel(p: int, q: int) -> tuple[tuple[int, int, int], ...]:
    """x_i x_j/(x_i-x_j) [(d_i - d_j) - (1-K_ij)/(x_i-x_j)] on u^p v^q, as (a, b, coef)."""
    bracket: dict[tuple[int, int], int] = {}
    if p:
        bracket[(p - 1, q)] = bracket.get((p - 1, q), 0) + p
    if q:
        bracket[(p, q - 1)] = bracket.get((p, q - 1), 0) - q
    for a, b, c in dd_kernel(p, q):
        bracket[(a, b)] = bracket.get((a, b), 0) - c
    poly = SparsePoly(2, {k: v for k, v in bracket.items() if v})
    if poly.is_zero():
        return ()
    quotient = exact_div(poly, SparsePoly(2, {(1, 0): 1, (0, 1): -1}))
    return tuple(sorted((a + 1, b + 1, int(c)) for (a, b), c in quotient.terms.items()))


def alpha_D(p: SparsePoly, alpha: Coef = ALPHA) -> SparsePoly:
    """alpha times the Sutherland operator D, which is linear in alpha."""
    N = p.nvars
    out: dict = {}
    for e, c in p.terms.items():
        sq = sum(x * x for x in e)
        deg = sum(e)
        coef = alpha * sq + (N - 1) * deg
        if coef:
            _accumulate(out, e, c * coef)
    for i in range(N):
        for j in range(i + 1, N):
            for e, c in p.terms.items():
                for a, b, k in sutherland_pair_kernel(e[i], e[j]):
                    f = list(e)
                    f[i] = a
                    f[j] = b
                    _accumulate(out, tuple(f), c * (2 * k))
    return _clean(N, out)


def op_D(p: SparsePoly, alpha: Coef = ALPHA) -> SparsePoly:
    """The Sutherland operator D built directly from its differential-exchange form."""
    inv = (Fraction(1) / alpha) if isinstance(alpha, (int, Fraction)) else alpha.inverse()
    return alpha_D(p, alpha).scale(inv)


def op_D_from_H(p: SparsePoly, alpha: Coef = ALPHA) -> SparsePoly:
    """D obtained from sum xi_i^2 + (N-1) sum xi_i minus a constant, divided by alpha^2.

    The constant that makes the identity hold on constants is -N(N-1)(N-2)/6.
    """
    N = p.nvars
    const = Fraction(-N * (N - 1) * (N - 2), 6)
    lhs = op_H(p, alpha) + op_H1(p, alpha).scale(N - 1) - p.scale(const)
    a2 = alpha * alpha
    inv = (Fraction(1) / a2) if isinstance(a2, (int, Fraction)) else a2.inverse()
    return lhs.scale(inv)


def sekiguchi_star(u0: Coef, p: SparsePoly, alpha: Coef = ALPHA) -> SparsePoly:
    """prod_i (u0 + xi_i) applied to p."""
    q = p
    for j in range(1, p.nvars + 1):
        q = xi(j, q, alpha) + q.scale(u0)
    return q


def sekiguchi_circ(u0: Coef, v0: Coef, p: SparsePoly, m: int, alpha: Coef = ALPHA) -> SparsePoly:
    """prod_{i<=m}(u0 + xi_i + alpha) prod_{i>m}(v0 + xi_i) applied to p."""
    if not 0 <= m <= p.nvars:
        raise ValueError("need 0 <= m <= N")
    q = p
    for j in range(1, p.nvars + 1):
        shift = u0 + alpha if j <= m else v0
        q = xi(j, q, alpha) + q.scale(shift)
    return q


def seki_eigenvalue(part: Sequence[int], u0: Coef, alpha: Coef = ALPHA) -> Coef:
    """prod_i (u0 + alpha part_i - i + 1)."""
    out: Coef = 1
    for i, x in enumerate(part, start=1):
        out = out * (u0 + alpha * x - i + 1)
    return out


def L_plus(p: SparsePoly) -> SparsePoly:
    """sum_i d/dx_i."""
    out: dict = {}
    for e, c in p.terms.items():
        for k, x in enumerate(e):
            if x:
                f = list(e)
                f[k] -= 1
                _accumulate(out, tuple(f), c * x)
    return _clean(p.nvars, out)


def q_circle(p: SparsePoly, m: int, check: bool = True) -> SparsePoly:
    """(1 + sum_{i>m} K_{i,m}) on A_I (x) S_J; zero when m = 0."""
    N = p.nvars
    if not 0 <= m <= N:
        raise ValueError("need 0 <= m <= N")
    if check:
        check_symmetry_class(p, "AS", m)
    if m == 0:
        return SparsePoly.zero(N)
    total = p
    for i in range(m + 1, N + 1):
        total = total + transpose_vars(p, i, m)
    return total


def q_box(p: SparsePoly, m: int, check: bool = True) -> SparsePoly:
    """(1 - sum_{i<=m} K_{i,m+1}) d/dx_{m+1} on A_I (x) S_J; zero when m = N."""
    N = p.nvars
    if not 0 <= m <= N:
        raise ValueError("need 0 <= m <= N")
    if check:
        check_symmetry_class(p, "AS", m)
    if m == N:
        return SparsePoly.zero(N)
    d = p.diff(m + 1)
    total = d
    for i in range(1, m + 1):
        total = total - transpose_vars(d, i, m + 1)
    return total
