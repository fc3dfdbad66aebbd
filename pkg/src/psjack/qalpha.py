"""Exact arithmetic in the field Q(alpha) of rational functions in the Jack parameter.

Elements are stored as a reduced pair of integer polynomials (python-flint
``fmpz_poly``).  The pair is canonical: gcd 1 over Z[alpha] (so also over Q),
positive leading coefficient in the denominator, zero stored as 0/1.  Equal
field elements therefore have identical representations, which makes ``==``
and ``hash`` structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union

from flint import fmpq, fmpq_poly, fmpz_poly

Rational = Fraction
Scalar = Union[int, Fraction, "RatFuncAlpha"]


class QAlphaError(ArithmeticError):
    """Raised for poles, indeterminate forms and invalid (k, r) parameters."""


_ONE_POLY = fmpz_poly([1])
_ZERO_POLY = fmpz_poly([])


def _as_fraction(x: int | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatFuncAlpha:
    """An element num(alpha)/den(alpha) of Q(alpha) in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: fmpz_poly | int = 0, den: fmpz_poly | int = 1, *, _reduced: bool = False):
        if not isinstance(num, fmpz_poly):
            num = fmpz_poly([num])
        if not isinstance(den, fmpz_poly):
            den = fmpz_poly([den])
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def from_scalar(cls, x: Scalar) -> RatFuncAlpha:
        if isinstance(x, RatFuncAlpha):
            return x
        if isinstance(x, int):
            return cls(fmpz_poly([x]), _ONE_POLY, _reduced=True)
        if isinstance(x, Fraction):
            return cls(fmpz_poly([x.numerator]), fmpz_poly([x.denominator]), _reduced=True)
        raise TypeError(f"cannot convert {type(x).__name__} to RatFuncAlpha")

    @classmethod
    def linear(cls, a: int | Fraction, b: int | Fraction) -> RatFuncAlpha:
        """Return a + b*alpha."""
        a, b = _as_fraction(a), _as_fraction(b)
        d = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return cls(fmpz_poly([a.numerator * (d // a.denominator), b.numerator * (d // b.denominator)]), fmpz_poly([d]))

    # predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("element depends on alpha")
        return Fraction(int(self.num[0]), int(self.den[0]))

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    # arithmetic -------------------------------------------------------------
    def __add__(self, other: Scalar) -> RatFuncAlpha:
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return o
        if o.num.is_zero():
            return self
        if self.den == o.den:
            return RatFuncAlpha(self.num + o.num, self.den)
        return RatFuncAlpha(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFuncAlpha:
        return RatFuncAlpha(-self.num, self.den, _reduced=True)

    def __sub__(self, other: Scalar) -> RatFuncAlpha:
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> RatFuncAlpha:
        return (-self) + other

    def __mul__(self, other: Scalar) -> RatFuncAlpha:
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return ZERO
        # cross-cancel first to keep the product small
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n = (self.num // g1) * (o.num // g2)
        d = (self.den // g2) * (o.den // g1)
        return RatFuncAlpha(n, d, _reduced=False)

    __rmul__ = __mul__

    def inverse(self) -> RatFuncAlpha:
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(alpha)")
        return RatFuncAlpha(self.den, self.num)

    def __truediv__(self, other: Scalar) -> RatFuncAlpha:
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> RatFuncAlpha:
        return _coerce(other) * self.inverse()

    def __pow__(self, e: int) -> RatFuncAlpha:
        if e < 0:
            return self.inverse() ** (-e)
        return RatFuncAlpha(self.num**e, self.den**e, _reduced=True)

    # comparison -------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFuncAlpha.from_scalar(other)
        if not isinstance(other, RatFuncAlpha):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((tuple(int(c) for c in self.num.coeffs()), tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # evaluation -------------------------------------------------------------
    def eval_at(self, a0: int | Fraction) -> Fraction:
        return eval_at(self, a0)

    def diff(self) -> RatFuncAlpha:
        """Derivative with respect to alpha."""
        return RatFuncAlpha(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    # rendering --------------------------------------------------------------
    def render(self, var: str = "a") -> str:
        num = _poly_str(self.num, var)
        if self.den == _ONE_POLY:
            return num
        den = _poly_str(self.den, var)
        if len(self.num.coeffs()) > 1:
            num = f"({num})"
        if len(self.den.coeffs()) > 1 or self.den.degree() > 0:
            den = f"({den})"
        return f"{num}/{den}"

    def latex(self) -> str:
        num = _poly_str(self.num, "\\alpha", latex=True)
        if self.den == _ONE_POLY:
            return num
        den = _poly_str(self.den, "\\alpha", latex=True)
        return f"\\frac{{{num}}}{{{den}}}"

    def __str__(self) -> str:
        return self.render("a")

    def __repr__(self) -> str:
        return f"RatFuncAlpha({self.render('a')})"


def _reduce(num: fmpz_poly, den: fmpz_poly) -> tuple[fmpz_poly, fmpz_poly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in Q(alpha)")
    if num.is_zero():
        return _ZERO_POLY, _ONE_POLY
    g = num.gcd(den)
    if not g.is_one():
        num = num // g
        den = den // g
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


def _coerce(x: object) -> RatFuncAlpha:
    if isinstance(x, RatFuncAlpha):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFuncAlpha.from_scalar(x)
    return NotImplemented  # type: ignore[return-value]


def _poly_str(p: fmpz_poly, var: str, latex: bool = False) -> str:
    coeffs = [int(c) for c in p.coeffs()]
    if not coeffs:
        return "0"
    pieces: list[str] = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else (f"{var}^{{{e}}}" if latex else f"{var}^{e}")
            if mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}" if latex else f"{mag}*{mono}"
        pieces.append((sign, body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


ZERO = RatFuncAlpha(_ZERO_POLY, _ONE_POLY, _reduced=True)
ONE = RatFuncAlpha(_ONE_POLY, _ONE_POLY, _reduced=True)
ALPHA = RatFuncAlpha(fmpz_poly([0, 1]), _ONE_POLY, _reduced=True)


def add(a: Scalar, b: Scalar) -> RatFuncAlpha:
    return RatFuncAlpha.from_scalar(a) + b


def sub(a: Scalar, b: Scalar) -> RatFuncAlpha:
    return RatFuncAlpha.from_scalar(a) - b


def mul(a: Scalar, b: Scalar) -> RatFuncAlpha:
    return RatFuncAlpha.from_scalar(a) * b


def div(a: Scalar, b: Scalar) -> RatFuncAlpha:
    return RatFuncAlpha.from_scalar(a) / b


def _eval_poly(p: fmpz_poly, a0: Fraction) -> Fraction:
    v = p(fmpq(a0.numerator, a0.denominator))
    return Fraction(int(v.p), int(v.q))


def eval_at(f: Scalar, a0: int | Fraction) -> Fraction:
    """Evaluate f at alpha = a0, raising on a pole."""
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    a0 = _as_fraction(a0)
    d = _eval_poly(f.den, a0)
    n = _eval_poly(f.num, a0)
    if d == 0:
        if n == 0:
            raise QAlphaError(f"0/0 indeterminate at alpha = {a0}")
        raise QAlphaError(f"pole at alpha = {a0}")
    return n / d


def check_kr(k: int, r: int, require_coprime: bool = True) -> None:
    if k < 1 or r < 2 or (require_coprime and gcd(k + 1, r - 1) != 1):
        raise QAlphaError(f"invalid (k,r) = ({k},{r}): need k >= 1, r >= 2, gcd(k+1, r-1) = 1")


def alpha_kr(k: int, r: int, require_coprime: bool = True) -> Fraction:
    """The special value alpha_{k,r} = -(k+1)/(r-1)."""
    check_kr(k, r, require_coprime)
    return Fraction(-(k + 1), r - 1)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def valuation_at(f: RatFuncAlpha, a0: Fraction) -> int:
    """Order of vanishing of f at alpha = a0 (negative for a pole)."""
    if f.is_zero():
        raise ValueError("valuation of zero")
    root = fmpq_poly([-a0.numerator, a0.denominator])
    v = 0
    for poly, step in ((f.num, 1), (f.den, -1)):
        p = fmpq_poly(poly)
        while True:
            q, rem = divmod(p, root)
            if not rem.is_zero():
                break
            p, v = q, v + step
    return v
