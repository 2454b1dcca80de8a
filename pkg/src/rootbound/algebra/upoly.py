"""Dense univariate polynomials in ``s`` over the rationals.

Coefficients are stored lowest degree first as a tuple of ``Fraction``; the
zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from ..errors import InvalidInput


class _Infinity:
    """The place at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction or str")
    return Fraction(x)


def _strip(coeffs: Sequence[Fraction]) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class UniPoly:
    coeffs: tuple = ()

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([as_fraction(c) for c in coeffs]))

    # constructors

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def linear_root(cls, v) -> "UniPoly":
        """``s - v``."""
        return cls((-as_fraction(v), 1))

    # basic properties

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInput("negative power of a polynomial in s")
        result = UniPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.lead
        if len(rem) - 1 < db:
            return UniPoly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lb
            quo[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        return UniPoly(quo), UniPoly(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InvalidInput(f"{other} does not divide {self}")
        return q

    def divides(self, other: "UniPoly") -> bool:
        """True when ``self`` divides ``other``."""
        return other.divmod(self)[1].is_zero()

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def taylor_shift(self, v) -> "UniPoly":
        """The polynomial ``z -> self(z + v)``."""
        v = as_fraction(v)
        out = list(self.coeffs)
        n = len(out)
        # repeated synthetic division (Horner scheme for shifts)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                out[j] += v * out[j + 1]
        return UniPoly(out)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def primitive(self) -> "UniPoly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        nums = [int(c * den) for c in self.coeffs]
        g = 0
        for x in nums:
            g = gcd(g, x)
        if nums[-1] < 0:
            g = -g
        return UniPoly([Fraction(x, g) for x in nums])

    def squarefree_part(self) -> "UniPoly":
        if self.is_constant():
            return UniPoly.const(1) if self else self
        return self.exact_div(upoly_gcd(self, self.derivative())).primitive()

    def sort_key(self):
        return (self.degree, self.coeffs)

    # formatting

    def __str__(self):
        return format_upoly(self)

    def __repr__(self):
        return f"UniPoly({format_upoly(self)!r})"


def format_rational(c: Fraction) -> str:
    c = as_fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_upoly(p: UniPoly, var: str = "s") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = format_rational(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def upoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _check_nonzero(alpha: UniPoly):
    if alpha.is_zero():
        raise InvalidInput("order of the zero polynomial is undefined")


def ord_at(alpha: UniPoly, v) -> int:
    """Multiplicity of ``v`` as a root of ``alpha`` (0 if not a root)."""
    _check_nonzero(alpha)
    if v is INF:
        return ord_inf(alpha)
    shifted = alpha.taylor_shift(v)
    k = 0
    while shifted.coeffs[k] == 0:
        k += 1
    return k


def ord_inf(alpha: UniPoly) -> int:
    _check_nonzero(alpha)
    return -alpha.degree


def ord_place(alpha: UniPoly, v) -> int:
    """Order of vanishing at a point of the projective line."""
    return ord_inf(alpha) if v is INF else ord_at(alpha, v)


def initial_coeff(alpha: UniPoly, v) -> Fraction:
    """Initial coefficient w.r.t. ``z -> z + v`` (finite ``v``) or ``z -> 1/z``."""
    _check_nonzero(alpha)
    if v is INF:
        return alpha.lead
    shifted = alpha.taylor_shift(v)
    return shifted.coeffs[ord_at(alpha, v)]


def upoly_content(polys: Iterable[UniPoly]) -> UniPoly:
    """Monic gcd of a family; the zero polynomial when every entry is zero."""
    g = UniPoly()
    for p in polys:
        if p.is_zero():
            continue
        g = p.monic() if g.is_zero() else upoly_gcd(g, p)
        if g.is_constant():
            return g
    return g
