"""Exact Laurent polynomials in ``q`` with rational exponents and coefficients.

``Scalar`` is the ring element used everywhere downstream.  ``RationalScalar``
is its field of fractions.  Values are immutable.

Exponents and coefficients are stored as ``int`` whenever they are integral and
as ``fractions.Fraction`` otherwise; the two compare and hash identically, and
keeping integers unboxed makes the common case noticeably faster.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]

__all__ = [
    "Scalar",
    "RationalScalar",
    "ScalarZeroDivision",
    "InexactDivision",
    "qnum",
    "q",
    "ONE",
    "ZERO",
    "as_scalar",
    "gcd",
]


class ScalarZeroDivision(ZeroDivisionError):
    """Division by the zero Scalar."""


class InexactDivision(ArithmeticError):
    """A Laurent polynomial does not divide another one exactly."""


def _norm(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _rational(x) -> Number:
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _norm(x)
    if isinstance(x, str):
        return _norm(Fraction(x))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Scalar:
    """A finite sum ``sum c_e q^e`` with rational ``e`` and nonzero rational ``c``."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping | Iterable | None = None):
        t: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                c = _rational(c)
                if c:
                    e = _rational(e)
                    v = t.get(e, 0) + c
                    if v:
                        t[e] = _norm(v)
                    else:
                        t.pop(e, None)
        self._t = t
        self._h = None

    @classmethod
    def _raw(cls, t: dict) -> "Scalar":
        s = object.__new__(cls)
        s._t = t
        s._h = None
        return s

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "Scalar":
        c = _rational(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e, c=1) -> "Scalar":
        c = _rational(c)
        return cls._raw({_rational(e): c} if c else {})

    # -- inspection ---------------------------------------------------------
    def terms(self) -> tuple:
        """Canonical term list ``((exponent, coefficient), ...)``, descending exponent."""
        return tuple(sorted(self._t.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_const(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def const_value(self) -> Number:
        if not self.is_const():
            raise ValueError(f"{self} is not a constant")
        return self._t.get(0, 0)

    def max_exp(self):
        return max(self._t)

    def min_exp(self):
        return min(self._t)

    def span(self):
        """Width ``max_exp - min_exp``; the Euclidean size on Q[q^(1/L), q^(-1/L)]."""
        if not self._t:
            return -1
        return max(self._t) - min(self._t)

    def leading(self) -> tuple:
        e = max(self._t)
        return e, self._t[e]

    def at_one(self) -> Number:
        """Value at ``q = 1``."""
        return _norm(sum(self._t.values(), Fraction(0)))

    def at(self, x: Fraction) -> Fraction:
        """Value at a positive rational ``q = x`` whose needed roots are rational."""
        total = Fraction(0)
        x = Fraction(x)
        for e, c in self._t.items():
            e = Fraction(e)
            if e.denominator == 1:
                total += c * x ** e.numerator
            else:
                base = _rational_root(x, e.denominator)
                total += c * base ** e.numerator
        return total

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        a, b = (self._t, other._t) if len(self._t) >= len(other._t) else (other._t, self._t)
        t = dict(a)
        for e, c in b.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = v + c
                if v:
                    t[e] = _norm(v) if isinstance(v, Fraction) else v
                else:
                    del t[e]
        return Scalar._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (e2, c2), = b.items()
            if e2 == 0:
                if c2 == 1:
                    return self if a is self._t else other
                return Scalar._raw({e: _norm(c * c2) for e, c in a.items()})
            if c2 == 1:
                return Scalar._raw({_norm(e + e2): c for e, c in a.items()})
            return Scalar._raw({_norm(e + e2): _norm(c * c2) for e, c in a.items()})
        t: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                v = t.get(e, 0) + c1 * c2
                t[e] = v
        return Scalar._raw({_norm(e): _norm(c) for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            if not self.is_monomial():
                raise InexactDivision(f"{self} is not a unit")
            (e, c), = self._t.items()
            return Scalar._raw({_norm(e * n): _norm(Fraction(c) ** n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- division -----------------------------------------------------------
    def divmod(self, other: "Scalar") -> tuple:
        """Euclidean division: ``self = quo*other + rem`` with ``span(rem) < span(other)``."""
        other = as_scalar(other)
        if not other._t:
            raise ScalarZeroDivision("division by zero Scalar")
        if len(other._t) == 1:
            (e2, c2), = other._t.items()
            return Scalar._raw({_norm(e - e2): _norm(Fraction(c) / c2) for e, c in self._t.items()}), ZERO
        be, bc = other.leading()
        bspan = other.span()
        r = dict(self._t)
        quo: dict = {}
        while r:
            top = max(r)
            if top - min(r) < bspan:
                break
            c = _norm(Fraction(r[top]) / bc)
            shift = _norm(top - be)
            quo[shift] = c
            for e, oc in other._t.items():
                k = _norm(e + shift)
                v = r.get(k, 0) - c * oc
                if v:
                    r[k] = _norm(v) if isinstance(v, Fraction) else v
                else:
                    r.pop(k, None)
        return Scalar._raw(quo), Scalar._raw(r)

    def divexact(self, other) -> "Scalar":
        quo, rem = self.divmod(other)
        if rem._t:
            raise InexactDivision(f"({self}) / ({other}) is not a Laurent polynomial")
        return quo

    def divides(self, other) -> bool:
        """True when ``self`` divides ``other`` in the Laurent ring."""
        return not as_scalar(other).divmod(self)[1]._t

    def __truediv__(self, other):
        if isinstance(other, RationalScalar):
            return RationalScalar(self) / other
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.divexact(other)

    def __rtruediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other.divexact(self)

    def unit_normal(self) -> tuple:
        """Return ``(u, s)`` with ``u`` a unit and ``self = u*s``, ``s`` monic with min exponent 0."""
        if not self._t:
            return ONE, self
        lo = min(self._t)
        _, lc = self.leading()
        u = Scalar.monomial(lo, lc)
        return u, Scalar._raw({_norm(e - lo): _norm(Fraction(c) / lc) for e, c in self._t.items()})

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._t == other._t
        if isinstance(other, RationalScalar):
            return other == self
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # -- text -----------------------------------------------------------------
    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Scalar({to_text(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        return parse_scalar(text)


def _rational_root(x: Fraction, k: int) -> Fraction:
    num = _int_root(x.numerator, k)
    den = _int_root(x.denominator, k)
    if num is None or den is None:
        raise ValueError(f"{x} has no rational {k}-th root")
    return Fraction(num, den)


def _int_root(n: int, k: int):
    if n < 0:
        return None
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    return None


def as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Scalar.const(x)
    return NotImplemented


def gcd(a: Scalar, b: Scalar) -> Scalar:
    """Monic gcd in the Laurent ring (a unit-normal representative)."""
    while b:
        _, r = a.divmod(b)
        a, b = b, r
    return a.unit_normal()[1]


ZERO = Scalar._raw({})
ONE = Scalar._raw({0: 1})
q = Scalar._raw({1: 1})


def qnum(n: int, d: int = 1) -> Scalar:
    """The quantum integer ``(q^{dn} - q^{-dn})/(q^d - q^{-d})`` as a Laurent polynomial."""
    if isinstance(n, Fraction):
        if n.denominator != 1:
            raise ValueError("qnum needs an integer argument")
        n = n.numerator
    if d < 1:
        raise ValueError("qnum needs d >= 1")
    sign = 1
    if n < 0:
        n, sign = -n, -1
    return Scalar._raw({d * (n - 1 - 2 * k): sign for k in range(n)})


# -- fraction field -----------------------------------------------------------

class RationalScalar:
    """A quotient of Scalars.  Equality is by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = as_scalar(num) if not isinstance(num, Scalar) else num
        if den is None:
            den = ONE
        den = as_scalar(den) if not isinstance(den, Scalar) else den
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalScalar needs Scalar parts")
        if not den:
            raise ScalarZeroDivision("zero denominator")
        if den.is_monomial():
            num, den = num.divexact(den), ONE
        elif num and den.divides(num):
            num, den = num.divexact(den), ONE
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RationalScalar):
            return other
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalScalar(other)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RationalScalar(self.num + o.num, self.den)
        return RationalScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalScalar(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.num:
            raise ScalarZeroDivision("division by zero")
        return RationalScalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        r = self.reduced()
        return hash((r.num, r.den))

    def reduced(self) -> "RationalScalar":
        """Lowest terms with a monic, min-exponent-0 denominator."""
        g = gcd(self.num, self.den) if self.num else self.den
        num = self.num.divexact(g) if self.num else ZERO
        den = self.den.divexact(g)
        u, den = den.unit_normal()
        num = num.divexact(u) if num else num
        out = object.__new__(RationalScalar)
        out.num, out.den = num, den
        return out

    def is_laurent(self) -> bool:
        return self.den.divides(self.num)

    def to_scalar(self) -> Scalar:
        """The Laurent polynomial this fraction equals; raises InexactDivision otherwise."""
        return self.num.divexact(self.den)

    def __str__(self):
        r = self.reduced()
        if r.den == ONE:
            return to_text(r.num)
        return f"({to_text(r.num)})/({to_text(r.den)})"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "RationalScalar":
        text = text.strip()
        m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", text)
        if m and _balanced(m.group(1)) and _balanced(m.group(2)):
            return RationalScalar(parse_scalar(m.group(1)), parse_scalar(m.group(2)))
        return RationalScalar(parse_scalar(text))


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


# -- text form -------------------------------------------------------------

def _fmt_rat(x: Number) -> str:
    x = _norm(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def to_text(s: Scalar) -> str:
    """Render as e.g. ``q^(3/2) - 2*q^(-1) + 1`` (descending exponents)."""
    if not s._t:
        return "0"
    parts = []
    for k, (e, c) in enumerate(s.terms()):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = _fmt_rat(a)
        else:
            if e == 1:
                mono = "q"
            elif isinstance(e, int) and e > 0:
                mono = f"q^{e}"
            else:
                mono = f"q^({_fmt_rat(e)})"
            body = mono if a == 1 else f"{_fmt_rat(a)}*{mono}"
        if k == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<m1>q(?:\^(?:\((?P<e1>[+-]?\d+(?:/\d+)?)\)|(?P<e2>\d+)))?))?
          |
          (?P<m2>q(?:\^(?:\((?P<e3>[+-]?\d+(?:/\d+)?)\)|(?P<e4>\d+)))?)
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> Scalar:
    """Inverse of :func:`to_text` (also accepts ``q^2`` without parentheses)."""
    text = text.strip()
    if not text:
        raise ValueError("empty scalar text")
    pos = 0
    terms = []
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ValueError(f"cannot parse scalar {text!r} at offset {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
            if m.group("m1"):
                e = m.group("e1") or m.group("e2") or "1"
            else:
                e = "0"
        elif m.group("m2"):
            coef = Fraction(1)
            e = m.group("e3") or m.group("e4") or "1"
        else:
            raise ValueError(f"cannot parse scalar {text!r}")
        terms.append((Fraction(e), sign * coef))
        pos = m.end()
    return Scalar(terms)
