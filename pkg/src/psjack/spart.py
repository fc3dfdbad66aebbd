"""Compositions, partitions and superpartitions.

A superpartition is stored as its two part lists: the antisymmetric side
``(L_1 >= ... >= L_m)`` and the symmetric side ``(L_{m+1} >= ... >= L_N)``,
zeros included, so the number of variables ``N`` is intrinsic.  The derived
partitions ``star`` (all parts sorted) and ``circ`` (antisymmetric parts
raised by one, then sorted) drive every order and diagram statistic.

Diagram cells use the matrix convention: row 1 on top, cell ``(i, j)`` with
``j`` counting columns from the left.  Row ``i`` holds ``star[i]`` boxes and,
when ``circ[i] - star[i] == 1``, a circle at column ``star[i] + 1``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .qalpha import ALPHA, RatFuncAlpha, check_kr

Composition = tuple[int, ...]
Partition = tuple[int, ...]
Cell = tuple[int, int]


class SpartError(ValueError):
    """Invalid input to a combinatorial operation."""


class Order(enum.Enum):
    GREATER = "Greater"
    LESS = "Less"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


# ---------------------------------------------------------------------------
# partitions and compositions
# ---------------------------------------------------------------------------


def sort_to_partition(c: Sequence[int]) -> Partition:
    """Parts of ``c`` in weakly decreasing order (length preserved)."""
    return tuple(sorted(c, reverse=True))


def strip_zeros(p: Sequence[int]) -> Partition:
    p = tuple(p)
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return p[:end]


def pad(p: Sequence[int], n: int) -> tuple[int, ...]:
    p = tuple(p)
    if len(p) > n:
        if any(p[n:]):
            raise SpartError(f"{p} has more than {n} nonzero parts")
        return p[:n]
    return p + (0,) * (n - len(p))


def _partial_sums_cmp(a: Sequence[int], b: Sequence[int]) -> Order:
    n = max(len(a), len(b))
    a, b = pad(a, n), pad(b, n)
    if a == b:
        return Order.EQUAL
    sa = sb = 0
    ge = le = True
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            ge = False
        elif sa > sb:
            le = False
    if ge:
        return Order.GREATER
    if le:
        return Order.LESS
    return Order.INCOMPARABLE


def dominance_partitions(a: Sequence[int], b: Sequence[int]) -> Order:
    """Dominance order between two partitions of the same degree."""
    if sum(a) != sum(b):
        raise SpartError("incomparable degrees")
    return _partial_sums_cmp(sort_to_partition(a), sort_to_partition(b))


def dominance_compositions(a: Sequence[int], b: Sequence[int]) -> Order:
    """Two-tier dominance on compositions: sorted parts first, then partial sums."""
    if sum(a) != sum(b):
        raise SpartError("incomparable degrees")
    if len(a) != len(b):
        raise SpartError("compositions of different lengths")
    first = _partial_sums_cmp(sort_to_partition(a), sort_to_partition(b))
    if first is not Order.EQUAL:
        return first
    return _partial_sums_cmp(a, b)


def composition_succ(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when a strictly dominates b as compositions."""
    return dominance_compositions(a, b) is Order.GREATER


def conjugate(p: Sequence[int]) -> Partition:
    p = strip_zeros(sort_to_partition(p))
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def cell_stats(p: Sequence[int], s: Cell) -> tuple[int, int, int, int]:
    """Arm, arm-colength, leg and leg-colength of cell ``s`` in partition ``p``."""
    i, j = s
    p = strip_zeros(p)
    if i < 1 or j < 1 or i > len(p) or j > p[i - 1]:
        raise SpartError(f"cell {s} outside diagram of {p}")
    pc = conjugate(p)
    return p[i - 1] - j, j - 1, pc[j - 1] - i, i - 1


def arm(p: Sequence[int], i: int, j: int) -> int:
    """Arm length read off row i, valid for any cell position (may be negative)."""
    return (p[i - 1] if i <= len(p) else 0) - j


def leg(p: Sequence[int], i: int, j: int) -> int:
    """Leg length: number of rows below i whose length reaches column j."""
    return sum(1 for x in p[i:] if x >= j)


def b_stat(p: Sequence[int]) -> int:
    return sum(i * x for i, x in enumerate(p))


def eps_partition(p: Sequence[int]) -> RatFuncAlpha:
    """alpha*b(p') - b(p)."""
    p = sort_to_partition(p)
    return ALPHA * b_stat(conjugate(p)) - b_stat(p)


def multiplicity_factorial(p: Sequence[int]) -> int:
    """prod_i n_p(i)! over every value appearing in ``p`` (zeros included)."""
    out = 1
    counts: dict[int, int] = {}
    for x in p:
        counts[x] = counts.get(x, 0) + 1
    for c in counts.values():
        out *= factorial(c)
    return out


def is_partition(p: Sequence[int]) -> bool:
    return all(p[i] >= p[i + 1] for i in range(len(p) - 1)) and all(x >= 0 for x in p)


def partitions(n: int, max_len: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n in decreasing lexicographic order (no zeros)."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_len < n:
            break
        for rest in partitions(n - first, max_len - 1, first):
            yield (first,) + rest


def compositions(n: int, N: int) -> Iterator[Composition]:
    """All compositions of n into N non-negative parts, lexicographically decreasing."""
    if N == 0:
        if n == 0:
            yield ()
        return
    if N == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, N - 1):
            yield (first,) + rest


def partition_admissible(p: Sequence[int], k: int, r: int, N: int) -> bool:
    """Part-gap test p_i - p_{i+k} >= r for all i <= N-k (no gcd requirement)."""
    q = pad(strip_zeros(p), max(N, len(strip_zeros(p))))
    return all(q[i] - (q[i + k] if i + k < len(q) else 0) >= r for i in range(0, N - k))


# ---------------------------------------------------------------------------
# superpartitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=False)
class Superpartition:
    """(L_1..L_m; L_{m+1}..L_N) with both sides weakly decreasing."""

    antisym: tuple[int, ...]
    sym: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "antisym", tuple(int(x) for x in self.antisym))
        object.__setattr__(self, "sym", tuple(int(x) for x in self.sym))
        for side in (self.antisym, self.sym):
            if not is_partition(side):
                raise SpartError(f"parts must be non-negative and weakly decreasing: {side}")

    # basic data ------------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.antisym)

    @property
    def N(self) -> int:
        return len(self.antisym) + len(self.sym)

    @property
    def n(self) -> int:
        return sum(self.antisym) + sum(self.sym)

    @property
    def parts(self) -> tuple[int, ...]:
        return self.antisym + self.sym

    @property
    def is_strict(self) -> bool:
        a = self.antisym
        return all(a[i] > a[i + 1] for i in range(len(a) - 1))

    @property
    def sym_strict(self) -> bool:
        s = self.sym
        return all(s[i] > s[i + 1] for i in range(len(s) - 1))

    @cached_property
    def star(self) -> Partition:
        """Lambda^* padded to N rows."""
        return sort_to_partition(self.parts)

    @cached_property
    def circ(self) -> Partition:
        """Lambda^circledast padded to N rows."""
        return sort_to_partition(tuple(x + 1 for x in self.antisym) + self.sym)

    @cached_property
    def fermionic_rows(self) -> tuple[int, ...]:
        """1-based rows that end with a circle."""
        return tuple(i + 1 for i in range(self.N) if self.circ[i] - self.star[i] == 1)

    @property
    def length(self) -> int:
        """Number of nonzero rows of Lambda^circledast."""
        return len(strip_zeros(self.circ))

    def circles(self) -> list[Cell]:
        return [(i, self.star[i - 1] + 1) for i in self.fermionic_rows]

    def boxes(self) -> list[Cell]:
        return [(i, j) for i in range(1, self.N + 1) for j in range(1, self.star[i - 1] + 1)]

    def padded(self, N: int) -> Superpartition:
        """Same label with the symmetric side padded with zeros to N variables."""
        if N < self.m + len(strip_zeros(self.sym)):
            raise SpartError(f"{self} does not fit in {N} variables")
        return Superpartition(self.antisym, pad(self.sym, N - self.m))

    def composition(self) -> Composition:
        """Concatenation (L_1..L_N) used as the exponent of the leading monomial."""
        return self.parts

    def eta_increasing(self) -> Composition:
        """(L_m..L_1, L_N..L_{m+1})."""
        return tuple(reversed(self.antisym)) + tuple(reversed(self.sym))

    # text ---------------------------------------------------------------------
    def __str__(self) -> str:
        a = ",".join(map(str, self.antisym)) if self.antisym else "∅"
        s = ",".join(map(str, self.sym)) if self.sym else "∅"
        return f"({a};{s})"

    def __repr__(self) -> str:
        return f"Superpartition{self}"

    def sort_key(self) -> tuple:
        return (self.star, self.circ)


def superpartition(antisym: Iterable[int], sym: Iterable[int]) -> Superpartition:
    return Superpartition(tuple(antisym), tuple(sym))


_SIDE = re.compile(r"^\s*(?:∅|\\emptyset|)\s*$")


def _parse_side(text: str) -> tuple[int, ...]:
    if _SIDE.match(text):
        return ()
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise SpartError(f"cannot parse parts {text!r}") from exc
    if not is_partition(parts):
        raise SpartError(f"parts must be non-negative and weakly decreasing: {text!r}")
    return parts


def parse_superpartition(text: str, N: Optional[int] = None) -> Superpartition:
    """Parse "(a1,...,am;b1,...,bK)"; a missing side may be empty or the empty-set sign.

    With ``N`` given, the symmetric side is padded with zeros to ``N - m`` parts.
    """
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")) or t.count(";") != 1:
        raise SpartError(f"cannot parse superpartition {text!r}")
    left, right = t[1:-1].split(";")
    sp = Superpartition(_parse_side(left), _parse_side(right))
    return sp.padded(N) if N is not None else sp


def parse_partition(text: str) -> Partition:
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    return _parse_side(t)


def from_star_circ(star: Sequence[int], circ: Sequence[int]) -> Superpartition:
    """Rebuild a superpartition from equal-length Lambda^* and Lambda^circledast."""
    if len(star) != len(circ):
        raise SpartError("star and circ must have the same length")
    anti, sym = [], []
    for s, c in zip(star, circ):
        if c - s == 1:
            anti.append(s)
        elif c == s:
            sym.append(s)
        else:
            raise SpartError("circ - star must be 0 or 1 in every row")
    return Superpartition(sort_to_partition(anti), sort_to_partition(sym))


def dominance_superpartitions(a: Superpartition, b: Superpartition) -> Order:
    if (a.n, a.m) != (b.n, b.m):
        raise SpartError("bi-degree mismatch")
    first = _partial_sums_cmp(a.star, b.star)
    if first is not Order.EQUAL:
        return first
    return _partial_sums_cmp(a.circ, b.circ)


def sp_leq(a: Superpartition, b: Superpartition) -> bool:
    """a <= b in superpartition dominance (same bi-degree assumed)."""
    return dominance_superpartitions(a, b) in (Order.LESS, Order.EQUAL)


def eps_superpartition(sp: Superpartition) -> RatFuncAlpha:
    """Sum over circled cells of alpha*a'(s) - l'(s) in Lambda^circledast."""
    total_a = total_l = 0
    for i, j in sp.circles():
        total_a += j - 1
        total_l += i - 1
    return ALPHA * total_a - total_l


def phi_m(c: Sequence[int], m: int) -> Superpartition:
    if not 0 <= m <= len(c):
        raise SpartError("need 0 <= m <= N")
    return Superpartition(sort_to_partition(c[:m]), sort_to_partition(c[m:]))


_FLAVORS = ("weak", "moderate", "strong")


def admissible(
    sp: Superpartition, k: int, r: int, N: Optional[int] = None, flavor: str = "weak", *, require_coprime: bool = True
) -> bool:
    """Weak, moderate or strong (k, r, N)-admissibility; parts past the end read as 0."""
    check_kr(k, r, require_coprime)
    if flavor not in _FLAVORS:
        raise SpartError(f"unknown admissibility flavor {flavor!r}")
    if N is None:
        N = sp.N
    if sp.length > N:
        raise SpartError(f"{sp} has more than {N} rows")
    star, circ = pad(strip_zeros(sp.star), N), pad(strip_zeros(sp.circ), N)
    top = star if flavor == "weak" else circ
    ok = all(circ[i] - top[i + k] >= r for i in range(N - k))
    if ok and flavor == "strong":
        ok = partition_admissible(star, k + 1, r, N)
    return ok


def is_admissible(sp: Superpartition, k: int, r: int, N: Optional[int] = None) -> bool:
    """Strongly admissible, or strict and weakly admissible."""
    return admissible(sp, k, r, N, "strong") or (sp.is_strict and admissible(sp, k, r, N, "weak"))


# ---------------------------------------------------------------------------
# corners and hooks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CornerReport:
    cell: Cell
    circled: bool
    kind: str  # "inner" | "bordering" | "outer"
    hook: str = "none"  # "B" | "B~" | "C" | "C~" | "none"
    k: Optional[int] = None
    r: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "cell": list(self.cell),
            "circled": self.circled,
            "kind": self.kind,
            "hook": self.hook,
            "k": self.k,
            "r": self.r,
        }


def _row_len(sp: Superpartition, i: int) -> int:
    """Length of row i in the diagram, counting a terminal circle as a cell."""
    if i < 1 or i > sp.N:
        return 0
    return sp.circ[i - 1]


def diagram_row_lengths(sp: Superpartition) -> list[int]:
    return [_row_len(sp, i) for i in range(1, sp.N + 1)]


def corner_cells(sp: Superpartition) -> list[Cell]:
    rows = diagram_row_lengths(sp)
    out = []
    for i, length in enumerate(rows, start=1):
        if length == 0:
            continue
        below = rows[i] if i < len(rows) else 0
        if below < length:
            out.append((i, length))
    return out


def corners(sp: Superpartition, k: Optional[int] = None, r: Optional[int] = None) -> list[CornerReport]:
    """Corner cells with inner/bordering/outer kind and, given (k, r), hook type.

    Row 0 and column 0 count as containing corners.  A corner (i, j) is outer
    when neither row i-1 nor column j-1 has a corner, inner when both do.
    """
    cells = corner_cells(sp)
    corner_rows = {i for i, _ in cells}
    corner_cols = {j for _, j in cells}
    circle_set = set(sp.circles())
    star, circ = strip_zeros(sp.star), strip_zeros(sp.circ)
    reports = []
    for i, j in cells:
        up = i - 1 == 0 or (i - 1) in corner_rows
        left = j - 1 == 0 or (j - 1) in corner_cols
        kind = "inner" if up and left else ("outer" if not up and not left else "bordering")
        circled = (i, j) in circle_set
        hook = "none"
        if k is not None and r is not None:
            jj = j - r
            if jj >= 1 and star and i <= len(star) and star[i - 1] >= jj:
                ls = leg(star, i, jj)
                lc = leg(circ, i, jj)
                if ls == k and lc == k:
                    hook = "C" if circled else "B"
                elif ls == k and lc == k + 1:
                    hook = "C~" if circled else "B~"
        reports.append(CornerReport((i, j), circled, kind, hook, k, r))
    return reports


# ---------------------------------------------------------------------------
# diagram surgery
# ---------------------------------------------------------------------------


def remove_column(sp: Superpartition) -> Superpartition:
    """Subtract 1 from every part; needs all N parts positive."""
    if any(x == 0 for x in sp.parts):
        raise SpartError("remove_column: every part must be positive")
    return Superpartition(tuple(x - 1 for x in sp.antisym), tuple(x - 1 for x in sp.sym))


def remove_circle(sp: Superpartition) -> Superpartition:
    """Delete the trailing zero antisymmetric part."""
    if sp.m == 0 or sp.antisym[-1] != 0:
        raise SpartError("remove_circle: need L_m = 0")
    return Superpartition(sp.antisym[:-1], sp.sym)


def add_partition(sp: Superpartition, p: Sequence[int]) -> Superpartition:
    """Row-wise addition of p to both Lambda^* and Lambda^circledast."""
    p = strip_zeros(sort_to_partition(p))
    if len(p) > sp.N:
        raise SpartError("add_partition: partition longer than N")
    q = pad(p, sp.N)
    star = tuple(a + b for a, b in zip(sp.star, q))
    circ = tuple(a + b for a, b in zip(sp.circ, q))
    return from_star_circ(star, circ)


def add_box_column(sp: Superpartition) -> Superpartition:
    """Add 1 to every part (the inverse of remove_column)."""
    return Superpartition(tuple(x + 1 for x in sp.antisym), tuple(x + 1 for x in sp.sym))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _weak_parts(total: int, count: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of exactly ``count`` non-negative parts summing to total."""
    if count == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, max_part), -1, -1):
        if first * count < total:
            break
        for rest in _weak_parts(total - first, count - 1, first):
            yield (first,) + rest


def _strict_parts(total: int, count: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing tuples of ``count`` non-negative parts summing to total."""
    if count == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, max_part), count - 2, -1):
        rest_total = total - first
        if rest_total < (count - 1) * (count - 2) // 2:
            continue
        if rest_total > (count - 1) * (first - 1) - (count - 1) * (count - 2) // 2:
            break
        yield from ((first,) + rest for rest in _strict_parts(rest_total, count - 1, first - 1))


def enumerate_superpartitions(
    n: int,
    m: int,
    N: int,
    predicate: Optional[Callable[[Superpartition], bool]] = None,
    *,
    strict: bool = False,
) -> list[Superpartition]:
    """Superpartitions of bi-degree (n|m) in N variables, decreasing in the total order.

    The total order is lexicographic on (Lambda^*, Lambda^circledast), which
    refines dominance.  ``strict`` restricts to strictly decreasing antisymmetric sides.
    """
    if n < 0 or not 0 <= m <= N:
        return []
    gen = _strict_parts if strict else _weak_parts
    out = []
    for a_total in range(n + 1):
        for anti in gen(a_total, m, a_total):
            for sym in _weak_parts(n - a_total, N - m, n - a_total):
                sp = Superpartition(anti, sym)
                if predicate is None or predicate(sp):
                    out.append(sp)
    out.sort(key=Superpartition.sort_key, reverse=True)
    return out


def staircase(N: int) -> Partition:
    return tuple(range(N - 1, -1, -1))
