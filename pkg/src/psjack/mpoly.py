"""Sparse multivariate polynomials in x_1..x_N over Q(alpha) or Q.

A polynomial is a mapping from exponent tuples to nonzero coefficients.  The
coefficients are either :class:`~psjack.qalpha.RatFuncAlpha` (generic mode)
or :class:`fractions.Fraction` / ``int`` (numeric mode); both support the
field operations used here.  Variables are 1-based in the public API.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable, Iterator, Mapping, Optional, Sequence, Union

from .qalpha import RatFuncAlpha, eval_at
from .spart import Superpartition, is_partition

Exps = tuple[int, ...]
Coef = Union[int, Fraction, RatFuncAlpha]

SYMMETRY_TYPES = ("AS", "AA", "SA", "SS")


class NotDivisible(ArithmeticError):
    """Exact division failed; ``remainder`` is a nonzero witness."""

    def __init__(self, remainder: "SparsePoly"):
        super().__init__("not divisible")
        self.remainder = remainder


class SymmetryClassError(ValueError):
    """A polynomial is not in the claimed symmetry class."""

    def __init__(self, message: str, witness: Optional[tuple[int, int]] = None):
        super().__init__(message)
        self.witness = witness


def _is_zero(c: Coef) -> bool:
    return not c


def glex_key(e: Exps) -> tuple:
    return (sum(e), e)


class SparsePoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exps, Coef]] = None, *, _clean: bool = False):
        self.nvars = nvars
        if terms is None:
            self.terms: dict[Exps, Coef] = {}
        elif _clean:
            self.terms = dict(terms) if not isinstance(terms, dict) else terms
        else:
            out: dict[Exps, Coef] = {}
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have length {nvars}")
                if c:
                    out[tuple(e)] = c
            self.terms = out

    # constructors -------------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> SparsePoly:
        return cls(nvars, {}, _clean=True)

    @classmethod
    def const(cls, nvars: int, c: Coef) -> SparsePoly:
        return cls(nvars, {(0,) * nvars: c} if c else {}, _clean=True)

    @classmethod
    def one(cls, nvars: int) -> SparsePoly:
        return cls.const(nvars, 1)

    @classmethod
    def monomial(cls, exps: Sequence[int], c: Coef = 1) -> SparsePoly:
        return cls(len(exps), {tuple(exps): c} if c else {}, _clean=True)

    @classmethod
    def var(cls, nvars: int, i: int) -> SparsePoly:
        e = [0] * nvars
        e[i - 1] = 1
        return cls.monomial(e)

    # queries -------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, exps: Sequence[int]) -> Coef:
        return self.terms.get(tuple(exps), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[Exps, Coef]]:
        """Terms in decreasing graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exps, Coef]:
        e = max(self.terms, key=glex_key)
        return e, self.terms[e]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, RatFuncAlpha)):
            return self == SparsePoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # ring operations -----------------------------------------------------------
    def _check(self, other: SparsePoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: Any) -> SparsePoly:
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.nvars, other)
        self._check(other)
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return SparsePoly(self.nvars, out, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other: Any) -> SparsePoly:
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other: Any) -> SparsePoly:
        return (-self) + other

    def scale(self, c: Coef) -> SparsePoly:
        if not c:
            return SparsePoly.zero(self.nvars)
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if w:
                out[e] = w
        return SparsePoly(self.nvars, out, _clean=True)

    def __mul__(self, other: Any) -> SparsePoly:
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        self._check(other)
        out: dict[Exps, Coef] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return SparsePoly(self.nvars, {e: c for e, c in out.items() if c}, _clean=True)

    def __rmul__(self, other: Any) -> SparsePoly:
        return self.scale(other)

    def __truediv__(self, c: Coef) -> SparsePoly:
        if isinstance(c, SparsePoly):
            return exact_div(self, c)
        inv = (Fraction(1) / c) if isinstance(c, (int, Fraction)) else c.inverse()
        return self.scale(inv)

    def __pow__(self, k: int) -> SparsePoly:
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def map_coeffs(self, f: Callable[[Coef], Coef]) -> SparsePoly:
        out = {}
        for e, c in self.terms.items():
            v = f(c)
            if v:
                out[e] = v
        return SparsePoly(self.nvars, out, _clean=True)

    def eval_alpha(self, a0: Fraction) -> SparsePoly:
        """Specialize every generic coefficient at alpha = a0 (raises on a pole)."""
        return self.map_coeffs(lambda c: eval_at(c, a0))

    def diff(self, i: int) -> SparsePoly:
        """Partial derivative with respect to x_i."""
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = c * e[k]
        return SparsePoly(self.nvars, out, _clean=True)

    def euler(self, i: int) -> SparsePoly:
        """x_i d/dx_i."""
        k = i - 1
        return SparsePoly(self.nvars, {e: c * e[k] for e, c in self.terms.items() if e[k]}, _clean=True)

    def permute(self, perm: Sequence[int]) -> SparsePoly:
        """Replace x_i by x_{perm[i]} (0-based permutation list)."""
        out = {}
        n = self.nvars
        for e, c in self.terms.items():
            f = [0] * n
            for i in range(n):
                f[perm[i]] = e[i]
            out[tuple(f)] = c
        return SparsePoly(n, out, _clean=True)

    def add_vars(self, count: int) -> SparsePoly:
        """Embed into a ring with ``count`` extra trailing variables."""
        z = (0,) * count
        return SparsePoly(self.nvars + count, {e + z: c for e, c in self.terms.items()}, _clean=True)

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {to_plain(self)})"

    def __str__(self) -> str:
        return to_plain(self)


Poly = SparsePoly


# ---------------------------------------------------------------------------
# transpositions and (anti)symmetrizers
# ---------------------------------------------------------------------------


def transpose_vars(p: SparsePoly, i: int, j: int) -> SparsePoly:
    """The operator K_{i,j}: swap x_i and x_j."""
    n = p.nvars
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"variable index out of range 1..{n}")
    if i == j:
        return p
    a, b = i - 1, j - 1
    out = {}
    for e, c in p.terms.items():
        f = list(e)
        f[a], f[b] = f[b], f[a]
        out[tuple(f)] = c
    return SparsePoly(n, out, _clean=True)


def _perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    sign = 1
    s = list(seq)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


def _multiset_perms(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct rearrangements of a multiset, via sympy-free recursion."""
    counts = Counter(values)
    keys = sorted(counts, reverse=True)
    n = len(values)
    out = [0] * n

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    yield from rec(0)


def _normalize_index_set(K: Iterable[int], n: int) -> list[int]:
    ks = sorted(set(K))
    if ks and (ks[0] < 1 or ks[-1] > n):
        raise IndexError(f"index set {ks} out of range 1..{n}")
    return [k - 1 for k in ks]


def sym(p: SparsePoly, K: Iterable[int]) -> SparsePoly:
    """Sum over all permutations of the variables in K (not normalized)."""
    ks = _normalize_index_set(K, p.nvars)
    if len(ks) < 2:
        return p
    out: dict[Exps, Coef] = {}
    for e, c in p.terms.items():
        sub = [e[k] for k in ks]
        stab = 1
        for v in Counter(sub).values():
            stab *= factorial(v)
        w = c * stab
        for arr in _multiset_perms(sub):
            f = list(e)
            for k, v in zip(ks, arr):
                f[k] = v
            t = tuple(f)
            cur = out.get(t)
            out[t] = w if cur is None else cur + w
    return SparsePoly(p.nvars, {e: c for e, c in out.items() if c}, _clean=True)


def asym(p: SparsePoly, K: Iterable[int]) -> SparsePoly:
    """Signed sum over all permutations of the variables in K (not normalized)."""
    ks = _normalize_index_set(K, p.nvars)
    if len(ks) < 2:
        return p
    out: dict[Exps, Coef] = {}
    for e, c in p.terms.items():
        sub = [e[k] for k in ks]
        if len(set(sub)) < len(sub):
            continue
        base_sign = _perm_sign([-v for v in sub])  # sign relative to decreasing order
        for arr in itertools.permutations(sorted(sub, reverse=True)):
            s = _perm_sign([-v for v in arr]) * base_sign
            f = list(e)
            for k, v in zip(ks, arr):
                f[k] = v
            t = tuple(f)
            w = c if s > 0 else -c
            cur = out.get(t)
            out[t] = w if cur is None else cur + w
    return SparsePoly(p.nvars, {e: c for e, c in out.items() if c}, _clean=True)


def vandermonde(K: Iterable[int], nvars: int) -> SparsePoly:
    """Delta_K = prod_{i<j in K} (x_i - x_j)."""
    ks = sorted(set(K))
    e = [0] * nvars
    for pos, k in enumerate(ks):
        e[k - 1] = len(ks) - 1 - pos
    return asym(SparsePoly.monomial(e), ks)


# ---------------------------------------------------------------------------
# division and substitution
# ---------------------------------------------------------------------------


def _div_by_difference(p: SparsePoly, i: int, j: int) -> SparsePoly:
    """Exact division by (x_i - x_j) via synthetic division per bivariate slice."""
    a, b = i - 1, j - 1
    groups: dict[tuple, dict[int, Coef]] = {}
    for e, c in p.terms.items():
        rest = list(e)
        d = e[a] + e[b]
        rest[a] = 0
        rest[b] = d
        groups.setdefault(tuple(rest), {})[e[a]] = c
    out: dict[Exps, Coef] = {}
    remainder: dict[Exps, Coef] = {}
    for rest, coeffs in groups.items():
        d = rest[b]
        g_prev = 0
        # quotient sum_q g_q u^q v^{d-1-q}; c_a = g_{a-1} - g_a
        for q in range(d - 1, -1, -1):
            g = coeffs.get(q + 1, 0) + g_prev
            if g:
                f = list(rest)
                f[a] = q
                f[b] = d - 1 - q
                out[tuple(f)] = g
            g_prev = g
        leftover = coeffs.get(0, 0) + g_prev
        if leftover:
            f = list(rest)
            f[a] = 0
            f[b] = d
            remainder[tuple(f)] = leftover
    if remainder:
        raise NotDivisible(SparsePoly(p.nvars, remainder, _clean=True))
    return SparsePoly(p.nvars, out, _clean=True)


def _difference_vars(q: SparsePoly) -> Optional[tuple[int, int]]:
    if len(q.terms) != 2:
        return None
    (e1, c1), (e2, c2) = sorted(q.terms.items(), key=lambda t: t[0], reverse=True)
    if sum(e1) != 1 or sum(e2) != 1 or c1 != 1 or c2 != -1:
        return None
    return e1.index(1) + 1, e2.index(1) + 1


def exact_div(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Return t with p = q*t, or raise NotDivisible carrying the remainder."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check(q)
    if p.is_zero():
        return p
    pair = _difference_vars(q)
    if pair is not None:
        return _div_by_difference(p, *pair)
    if len(q.terms) == 1:
        (eq, cq), = q.terms.items()
        inv = (Fraction(1) / cq) if isinstance(cq, (int, Fraction)) else cq.inverse()
        out, rem = {}, {}
        for e, c in p.terms.items():
            if all(x >= y for x, y in zip(e, eq)):
                out[tuple(x - y for x, y in zip(e, eq))] = c * inv
            else:
                rem[e] = c
        if rem:
            raise NotDivisible(SparsePoly(p.nvars, rem, _clean=True))
        return SparsePoly(p.nvars, out, _clean=True)
    lt_e, lt_c = q.leading_term()
    inv = (Fraction(1) / lt_c) if isinstance(lt_c, (int, Fraction)) else lt_c.inverse()
    work = dict(p.terms)
    quotient: dict[Exps, Coef] = {}
    remainder: dict[Exps, Coef] = {}
    while work:
        e = max(work, key=glex_key)
        c = work.pop(e)
        if all(x >= y for x, y in zip(e, lt_e)):
            s = tuple(x - y for x, y in zip(e, lt_e))
            f = c * inv
            quotient[s] = f
            for eq, cq in q.terms.items():
                if eq == lt_e:
                    continue
                t = tuple(a + b for a, b in zip(s, eq))
                v = work.get(t, 0) - f * cq
                if v:
                    work[t] = v
                else:
                    work.pop(t, None)
        else:
            remainder[e] = c
    if remainder:
        raise NotDivisible(SparsePoly(p.nvars, remainder, _clean=True))
    return SparsePoly(p.nvars, quotient, _clean=True)


def divides(q: SparsePoly, p: SparsePoly) -> bool:
    try:
        exact_div(p, q)
        return True
    except NotDivisible:
        return False


def set_zero(p: SparsePoly, i: int, drop: bool = True) -> SparsePoly:
    """Set x_i = 0; with ``drop`` the variable is removed from the ring."""
    k = i - 1
    out = {}
    for e, c in p.terms.items():
        if e[k] == 0:
            out[e[:k] + e[k + 1:] if drop else e] = c
    return SparsePoly(p.nvars - 1 if drop else p.nvars, out, _clean=True)


def merge_vars(p: SparsePoly, i: int, target: int, drop: bool = True) -> SparsePoly:
    """Set x_i = x_target; with ``drop`` the variable x_i is removed."""
    a, b = i - 1, target - 1
    out: dict[Exps, Coef] = {}
    for e, c in p.terms.items():
        f = list(e)
        f[b] += f[a]
        f[a] = 0
        if drop:
            del f[a]
        t = tuple(f)
        v = out.get(t)
        out[t] = c if v is None else v + c
    return SparsePoly(p.nvars - 1 if drop else p.nvars, {e: c for e, c in out.items() if c}, _clean=True)


def compose(p: SparsePoly, images: Sequence[SparsePoly]) -> SparsePoly:
    """Substitute x_i -> images[i-1]; all images share one ring."""
    if len(images) != p.nvars:
        raise ValueError("need one image per variable")
    if not images:
        return p
    n_out = images[0].nvars
    cache: dict[tuple[int, int], SparsePoly] = {}

    def power(i: int, k: int) -> SparsePoly:
        key = (i, k)
        if key not in cache:
            if k == 0:
                cache[key] = SparsePoly.one(n_out)
            elif k == 1:
                cache[key] = images[i]
            else:
                cache[key] = power(i, k - 1) * images[i]
        return cache[key]

    acc: dict[Exps, Coef] = {}
    for e, c in p.terms.items():
        term = SparsePoly.const(n_out, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        for f, v in term.terms.items():
            w = acc.get(f)
            acc[f] = v if w is None else w + v
    return SparsePoly(n_out, {e: c for e, c in acc.items() if c}, _clean=True)


def shift(p: SparsePoly, i: int, c: Coef) -> SparsePoly:
    """Substitute x_i -> x_i - c for a scalar c."""
    images = [SparsePoly.var(p.nvars, j + 1) for j in range(p.nvars)]
    images[i - 1] = images[i - 1] - c
    return compose(p, images)


def translate(p: SparsePoly, t: Coef) -> SparsePoly:
    """Substitute x_i -> x_i + t for every i."""
    images = [SparsePoly.var(p.nvars, j + 1) + t for j in range(p.nvars)]
    return compose(p, images)


def substitute(p: SparsePoly, i: int, value: Any) -> SparsePoly:
    """Dispatch: value 0 sets x_i = 0 (variable dropped); ("var", j) sets x_i = x_j
    (variable dropped); ("shift", c) replaces x_i by x_i - c."""
    if not 1 <= i <= p.nvars:
        raise IndexError(f"variable index {i} out of range")
    if isinstance(value, (int, Fraction)) and value == 0:
        return set_zero(p, i)
    if isinstance(value, tuple) and value[0] == "var":
        return merge_vars(p, i, value[1])
    if isinstance(value, tuple) and value[0] == "shift":
        return shift(p, i, value[1])
    raise ValueError(f"unsupported substitution {value!r}")


# ---------------------------------------------------------------------------
# symmetry classes and monomial bases
# ---------------------------------------------------------------------------


def block_kinds(T: str) -> tuple[str, str]:
    """(kind on I, kind on J) with kind in {"A", "S"}."""
    if T not in SYMMETRY_TYPES:
        raise ValueError(f"unknown symmetry type {T!r}")
    return T[0], T[1]


def check_symmetry_class(p: SparsePoly, T: str, m: int) -> None:
    """Raise SymmetryClassError with a witness transposition if p is outside the class."""
    kI, kJ = block_kinds(T)
    N = p.nvars
    for lo, hi, kind in ((1, m, kI), (m + 1, N, kJ)):
        for i in range(lo, hi):
            q = transpose_vars(p, i, i + 1)
            expected = p if kind == "S" else -p
            if q != expected:
                raise SymmetryClassError("polynomial not in symmetry class", (i, i + 1))


def in_symmetry_class(p: SparsePoly, T: str, m: int) -> bool:
    try:
        check_symmetry_class(p, T, m)
        return True
    except SymmetryClassError:
        return False


def canonical_exponent(e: Sequence[int], T: str, m: int) -> tuple[Optional[Exps], int]:
    """Sort each block decreasingly; returns (canonical exponent, sign) or (None, 0)
    when an antisymmetric block has a repeated exponent."""
    kI, kJ = block_kinds(T)
    sign = 1
    blocks = []
    for part, kind in ((list(e[:m]), kI), (list(e[m:]), kJ)):
        if kind == "A":
            if len(set(part)) < len(part):
                return None, 0
            sign *= _perm_sign([-v for v in part])
        blocks.append(sorted(part, reverse=True))
    return tuple(blocks[0] + blocks[1]), sign


def valid_label(sp: Superpartition, T: str) -> bool:
    kI, kJ = block_kinds(T)
    ok = True
    if kI == "A":
        ok &= sp.is_strict
    if kJ == "A":
        ok &= sp.sym_strict
    return ok


def monomial_basis_expand(p: SparsePoly, T: str, m: int, check: bool = True) -> dict[Superpartition, Coef]:
    """Coefficients of p in the basis m_Lambda of type T (block I = {1..m})."""
    if check:
        check_symmetry_class(p, T, m)
    kI, kJ = block_kinds(T)
    out: dict[Superpartition, Coef] = {}
    for e, c in p.terms.items():
        a, s = e[:m], e[m:]
        if not (_is_canon(a, kI) and _is_canon(s, kJ)):
            continue
        out[Superpartition(a, s)] = c
    return out


def _is_canon(block: Sequence[int], kind: str) -> bool:
    if kind == "A":
        return all(block[i] > block[i + 1] for i in range(len(block) - 1))
    return is_partition(block)


def monomial(sp: Superpartition, T: str) -> SparsePoly:
    """The basis element m_Lambda of type T in N = sp.N variables."""
    kI, kJ = block_kinds(T)
    N, m = sp.N, sp.m
    p = SparsePoly.monomial(sp.parts)
    if kI == "A":
        p = asym(p, range(1, m + 1))
    else:
        p = sym(p, range(1, m + 1)).scale(Fraction(1, _stab(sp.antisym)))
    if kJ == "A":
        p = asym(p, range(m + 1, N + 1))
    else:
        p = sym(p, range(m + 1, N + 1)).scale(Fraction(1, _stab(sp.sym)))
    return p


def _stab(parts: Sequence[int]) -> int:
    out = 1
    for v in Counter(parts).values():
        out *= factorial(v)
    return out


def _block_value(parts: Sequence[int], xs: Sequence[Fraction], kind: str) -> Fraction:
    if not parts:
        return Fraction(1)
    if kind == "A":
        total = Fraction(0)
        for perm in itertools.permutations(range(len(parts))):
            term = Fraction(_perm_sign(perm))
            for v, i in zip(parts, perm):
                term *= xs[i] ** v
            total += term
        return total
    total = Fraction(0)
    for perm in _multiset_perms(parts):
        term = Fraction(1)
        for v, x in zip(perm, xs):
            term *= x ** v
        total += term
    return total


def evaluate_expansion(expansion: Mapping[Superpartition, Coef], T: str, point: Sequence[Fraction]) -> Fraction:
    """Value of sum_Lambda c_Lambda m_Lambda at a rational point, without
    building the polynomial; coefficients must be scalars."""
    kI, kJ = block_kinds(T)
    point = [Fraction(x) for x in point]
    total = Fraction(0)
    for sp, c in expansion.items():
        m = sp.m
        total += Fraction(c) * _block_value(sp.antisym, point[:m], kI) * _block_value(sp.sym, point[m:], kJ)
    return total


def reconstruct(expansion: Mapping[Superpartition, Coef], T: str, N: int) -> SparsePoly:
    total = SparsePoly.zero(N)
    for sp, c in expansion.items():
        total = total + monomial(sp, T).scale(c)
    return total


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def coef_str(c: Coef, latex: bool = False) -> str:
    if isinstance(c, RatFuncAlpha):
        return c.latex() if latex else c.render("a")
    c = Fraction(c)
    if latex and c.denominator != 1:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return str(c)


def to_json_terms(p: SparsePoly) -> list[dict]:
    return [{"exps": list(e), "coef": coef_str(c)} for e, c in p.sorted_terms()]


def _mono_str(e: Exps, latex: bool, names: Optional[Sequence[str]] = None) -> str:
    parts = []
    for i, k in enumerate(e):
        if not k:
            continue
        name = names[i] if names else (f"x_{{{i + 1}}}" if latex else f"x{i + 1}")
        if k == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{{{k}}}" if latex else f"{name}^{k}")
    return (" " if latex else "*").join(parts)


def to_plain(p: SparsePoly, names: Optional[Sequence[str]] = None) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.sorted_terms():
        mono = _mono_str(e, False, names)
        cs = coef_str(c)
        if not mono:
            pieces.append(f"({cs})" if isinstance(c, RatFuncAlpha) and not c.is_constant() else cs)
        elif cs == "1":
            pieces.append(mono)
        elif cs == "-1":
            pieces.append(f"-{mono}")
        else:
            wrap = isinstance(c, RatFuncAlpha) and not c.is_constant() or "/" in cs
            pieces.append(f"({cs})*{mono}" if wrap else f"{cs}*{mono}")
    return " + ".join(pieces).replace("+ -", "- ")


def to_latex(p: SparsePoly, names: Optional[Sequence[str]] = None) -> str:
    if p.is_zero():
        return "0"
    out = []
    for idx, (e, c) in enumerate(p.sorted_terms()):
        mono = _mono_str(e, True, names)
        neg = (c < 0) if isinstance(c, (int, Fraction)) else False
        cs = coef_str(-c if neg else c, latex=True)
        body = mono if cs == "1" and mono else (f"{cs}\\,{mono}" if mono else cs)
        if isinstance(c, RatFuncAlpha) and mono and cs != "1" and not c.is_polynomial():
            body = f"{cs}\\,{mono}"
        elif isinstance(c, RatFuncAlpha) and mono and cs != "1" and len(c.num.coeffs()) > 1:
            body = f"\\left({cs}\\right){mono}"
        sign = "-" if neg else "+"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
