"""Non-symmetric Jack polynomials E_eta by triangular eigen-solve in Q(alpha).

E_eta is the unique polynomial x^eta + (lower terms in the composition order)
with xi_j E_eta = bar(eta)_j E_eta for every j.  The solver walks the
compositions below eta in a linear extension of the order, solves one
eigen-equation per coefficient and checks all the others.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cherednik import dd_kernel, xi_eigenvalue
from .mpoly import SparsePoly
from .qalpha import ALPHA, RatFuncAlpha, alpha_kr, eval_at
from .spart import (
    Order,
    _partial_sums_cmp,
    compositions,
    leg,
    phi_m,
    sort_to_partition,
    strip_zeros,
)

Composition = tuple[int, ...]


class EigenvalueCollision(ArithmeticError):
    """No xi_j separates a lower composition from the target: the solve is not unique."""


class JackError(ValueError):
    pass


@dataclass(frozen=True)
class NSJack:
    eta: Composition
    poly: SparsePoly
    eigenvalues: tuple[RatFuncAlpha, ...]


def eigenvalues(eta: Sequence[int], alpha=ALPHA) -> tuple:
    return tuple(xi_eigenvalue(eta, j, alpha) for j in range(1, len(eta) + 1))


def compositions_below(eta: Sequence[int]) -> list[Composition]:
    """All nu with nu <= eta in the composition order, sorted decreasingly
    (sorted parts lexicographically, then nu lexicographically)."""
    eta = tuple(eta)
    N, n = len(eta), sum(eta)
    top = sort_to_partition(eta)
    out = []
    for nu in compositions(n, N):
        plus = sort_to_partition(nu)
        c = _partial_sums_cmp(top, plus)
        if c is Order.GREATER:
            out.append(nu)
        elif c is Order.EQUAL and _partial_sums_cmp(eta, nu) in (Order.GREATER, Order.EQUAL):
            out.append(nu)
    out.sort(key=lambda nu: (sort_to_partition(nu), nu), reverse=True)
    return out


def _xi_offdiag(nu: Composition, j: int) -> dict[Composition, tuple[int, int]]:
    """xi_j x^nu as {exponent: (const, alpha-coefficient)}."""
    N = len(nu)
    jj = j - 1
    out: dict[Composition, list[int]] = {nu: [-(j - 1), nu[jj]]}

    def add(e: tuple, c: int) -> None:
        v = out.setdefault(e, [0, 0])
        v[0] += c

    for i in range(jj):
        if nu[i] != nu[jj]:
            for pa, pb, k in dd_kernel(nu[i], nu[jj]):
                f = list(nu)
                f[i] = pa
                f[jj] = pb + 1
                add(tuple(f), -k)
    for i in range(jj + 1, N):
        if nu[i] != nu[jj]:
            for pa, pb, k in dd_kernel(nu[jj], nu[i]):
                f = list(nu)
                f[jj] = pa
                f[i] = pb + 1
                add(tuple(f), k)
    return {e: (v[0], v[1]) for e, v in out.items() if v[0] or v[1]}


_memo: dict[Composition, NSJack] = {}
_memo_lock = threading.Lock()


def nonsym_jack(eta: Sequence[int]) -> NSJack:
    """E_eta in generic mode, memoized by eta (its length fixes N)."""
    eta = tuple(int(x) for x in eta)
    if any(x < 0 for x in eta) or not eta:
        raise JackError(f"invalid composition {eta}")
    hit = _memo.get(eta)
    if hit is not None:
        return hit
    result = _solve(eta)
    with _memo_lock:
        _memo[eta] = result
    return result


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


def _solve(eta: Composition) -> NSJack:
    N = len(eta)
    target = eigenvalues(eta)
    order = compositions_below(eta)
    index = {nu: k for k, nu in enumerate(order)}
    residual: list[dict[Composition, RatFuncAlpha]] = [dict() for _ in range(N)]
    coeffs: dict[Composition, RatFuncAlpha] = {}
    for nu in order:
        if nu == eta:
            c = RatFuncAlpha.from_scalar(1)
        else:
            nubar = eigenvalues(nu)
            diffs = [nubar[j] - target[j] for j in range(N)]
            sep = next((j for j in range(N) if not diffs[j].is_zero()), None)
            if sep is None:
                raise EigenvalueCollision(f"eigenvalue collision between {eta} and {nu}")
            rhs = residual[sep].pop(nu, None)
            c = RatFuncAlpha.from_scalar(0) if rhs is None else -rhs / diffs[sep]
            for j in range(N):
                if j == sep:
                    continue
                r = residual[j].pop(nu, None)
                lhs = diffs[j] * c
                if r is not None:
                    lhs = lhs + r
                if not lhs.is_zero():
                    raise ArithmeticError(f"inconsistent eigen-system for E_{eta} at {nu}, xi_{j + 1}")
        if c.is_zero():
            continue
        coeffs[nu] = c
        for j in range(N):
            for e, (a, b) in _xi_offdiag(nu, j + 1).items():
                if e == nu:
                    continue
                if e not in index:
                    raise ArithmeticError(f"xi_{j + 1} left the order ideal of {eta}: {e}")
                w = c * RatFuncAlpha.linear(a, b) if b else c * a
                cur = residual[j].get(e)
                residual[j][e] = w if cur is None else cur + w
    return NSJack(eta, SparsePoly(N, coeffs, _clean=True), target)


def exchange_image(E: NSJack | Sequence[int], i: int) -> tuple[tuple[RatFuncAlpha, Composition], ...]:
    """K_i E_eta as ((coef, eta), (coef, K_i eta)); the second entry is omitted when zero."""
    eta = E.eta if isinstance(E, NSJack) else tuple(E)
    N = len(eta)
    if not 1 <= i <= N - 1:
        raise JackError("need 1 <= i <= N-1")
    bars = eigenvalues(eta)
    swapped = list(eta)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    swapped = tuple(swapped)
    if eta[i - 1] == eta[i]:
        return ((RatFuncAlpha.from_scalar(1), eta),)
    delta = bars[i - 1] - bars[i]
    inv = delta.inverse()
    if eta[i - 1] > eta[i]:
        return ((inv, eta), (1 - inv * inv, swapped))
    return ((inv, eta), (RatFuncAlpha.from_scalar(1), swapped))


def knop_sahi_factors(eta: Sequence[int]) -> list[tuple[tuple[int, int], RatFuncAlpha]]:
    """Per-cell d_eta(s) = alpha(a+1) + l1 + l2 + 1."""
    eta = tuple(eta)
    N = len(eta)
    out = []
    for i in range(N):
        for j in range(1, eta[i] + 1):
            a = eta[i] - j
            l1 = sum(1 for k in range(i) if j <= eta[k] + 1 <= eta[i])
            l2 = sum(1 for k in range(i + 1, N) if j <= eta[k] <= eta[i])
            out.append(((i + 1, j), RatFuncAlpha.linear(l1 + l2 + 1, a + 1)))
    return out


def knop_sahi_clear(eta: Sequence[int]) -> tuple[RatFuncAlpha, list]:
    """v_eta = prod_s d_eta(s) with the per-cell certificate."""
    factors = knop_sahi_factors(eta)
    v = RatFuncAlpha.from_scalar(1)
    for _, f in factors:
        v = v * f
    return v, factors


def _split_two_partitions(eta: Sequence[int]) -> Optional[int]:
    """Smallest m with eta = (lambda+, mu+), both halves weakly decreasing."""
    N = len(eta)
    for m in range(N + 1):
        a, b = eta[:m], eta[m:]
        if all(a[i] >= a[i + 1] for i in range(len(a) - 1)) and all(b[i] >= b[i + 1] for i in range(len(b) - 1)):
            return m
    return None


def superpartition_factors(eta: Sequence[int], m: int) -> list[tuple[tuple[int, int], RatFuncAlpha]]:
    """Cell factors of prod d_eta(s) written on the superpartition phi_m(eta):
    cells in a bosonic row and a fermionic column use the Lambda^circledast leg."""
    sp = phi_m(tuple(eta), m)
    star, circ = strip_zeros(sp.star), strip_zeros(sp.circ)
    fermionic_rows = set(sp.fermionic_rows)
    fermionic_cols = {j for _, j in sp.circles()}
    out = []
    for i in range(1, len(star) + 1):
        for j in range(1, star[i - 1] + 1):
            a = star[i - 1] - j
            bf = i not in fermionic_rows and j in fermionic_cols
            ll = leg(circ, i, j) if bf else leg(star, i, j)
            out.append(((i, j), RatFuncAlpha.linear(ll + 1, a + 1)))
    return out


@dataclass(frozen=True)
class Regularity:
    regular: bool
    witness: Optional[tuple[int, int]]
    value: Fraction


def regular_at(eta: Sequence[int], k: int, r: int, m: Optional[int] = None) -> Regularity:
    """Whether prod d_eta(s) is nonzero at alpha_{k,r}, from the superpartition factorization."""
    eta = tuple(eta)
    if m is None:
        m = _split_two_partitions(eta)
        if m is None:
            raise JackError(f"{eta} is not a concatenation of two partitions")
    else:
        a, b = eta[:m], eta[m:]
        if sort_to_partition(a) != a or sort_to_partition(b) != b:
            raise JackError(f"{eta} is not a concatenation of two partitions at m={m}")
    a0 = alpha_kr(k, r)
    value = Fraction(1)
    witness = None
    for cell, f in superpartition_factors(eta, m):
        v = eval_at(f, a0)
        if v == 0 and witness is None:
            witness = cell
        value *= v
    return Regularity(witness is None, witness, value)


def nonsym_jack_specialized(eta: Sequence[int], k: int, r: int) -> SparsePoly:
    """Generic E_eta evaluated at alpha_{k,r}; a pole raises QAlphaError."""
    return nonsym_jack(eta).poly.eval_alpha(alpha_kr(k, r))


def nonsym_jack_at(eta: Sequence[int], a0: Fraction) -> SparsePoly:
    """Generic E_eta evaluated at an arbitrary rational alpha."""
    return nonsym_jack(eta).poly.eval_alpha(Fraction(a0))


def minimal_permutation(kappa: Sequence[int]) -> tuple[int, ...]:
    """0-based w with kappa[w[i]] = kappa^+[i], of minimal length (ties keep left-to-right order)."""
    kappa = tuple(kappa)
    return tuple(sorted(range(len(kappa)), key=lambda i: (-kappa[i], i)))


def twisted_staircase(kappa: Sequence[int]) -> tuple[int, ...]:
    """delta' = w_kappa(delta): position w(i) receives N-1-i."""
    w = minimal_permutation(kappa)
    N = len(kappa)
    out = [0] * N
    for i, pos in enumerate(w):
        out[pos] = N - 1 - i
    return tuple(out)
