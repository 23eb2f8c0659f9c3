"""Exact univariate polynomial and rational-function arithmetic.

Polynomials live in Z[t] with dense coefficient storage and Python's
arbitrary-precision integers.  Rational functions are kept reduced
(coprime numerator/denominator, content-free, denominator normalized to
positive constant term).  No floating point anywhere in this module.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd as _int_gcd


class IntPoly:
    """Dense polynomial over Z in the variable t, canonical form.

    ``coeffs[e]`` is the coefficient of ``t^e``; trailing zeros are
    stripped so equal polynomials compare equal.  The zero polynomial
    has an empty coefficient tuple and degree -1 (sentinel).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPoly":
        """coeff * t^power"""
        if coeff == 0:
            return cls()
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_terms(cls, terms) -> "IntPoly":
        """Build from an iterable of (power, coeff) pairs or a dict."""
        if isinstance(terms, dict):
            terms = terms.items()
        terms = list(terms)
        if not terms:
            return cls()
        size = max(p for p, _ in terms) + 1
        cs = [0] * size
        for p, c in terms:
            cs[p] += c
        return cls(cs)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, power: int) -> "IntPoly":
        """Multiply by t^power."""
        if not self.coeffs:
            return IntPoly()
        return IntPoly((0,) * power + self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({poly_to_text(self)!r})"

    # -- evaluation ---------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, float inputs."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, num: int, den: int) -> int:
        """Exact sign of p(num/den) for den > 0, using integers only."""
        if den <= 0:
            raise ValueError("den must be positive")
        d = self.degree
        if d < 0:
            return 0
        total = 0
        pw_num = 1
        pw_den = den ** d
        for c in self.coeffs:
            total += c * pw_num * pw_den
            pw_num *= num
            if pw_den:
                pw_den //= den
        return (total > 0) - (total < 0)

    # -- integer content / exact division ------------------------------

    def content(self) -> int:
        """gcd of the coefficients (nonnegative; 0 for the zero poly)."""
        g = 0
        for c in self.coeffs:
            g = _int_gcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content; sign of the leading coefficient kept."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly(tuple(c // g for c in self.coeffs))

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        """Exact quotient self / divisor in Z[t]; raises if not exact."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return IntPoly()
        dn, dd = self.degree, divisor.degree
        if dn < dd:
            raise ValueError("division is not exact")
        rem = list(self.coeffs)
        lead = divisor.leading()
        q = [0] * (dn - dd + 1)
        for i in range(dn - dd, -1, -1):
            c = rem[i + dd]
            if c % lead:
                raise ValueError("division is not exact")
            qi = c // lead
            q[i] = qi
            if qi:
                for j, dc in enumerate(divisor.coeffs):
                    rem[i + j] -= qi * dc
        if any(rem):
            raise ValueError("division is not exact")
        return IntPoly(q)


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def poly_sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def _pseudo_rem(p: IntPoly, q: IntPoly) -> IntPoly:
    """Pseudo-remainder of p by q: rem(lc(q)^(dp-dq+1) * p, q), all in Z[t]."""
    lead = q.leading()
    rem = p
    scale = p.degree - q.degree + 1
    while not rem.is_zero() and rem.degree >= q.degree:
        shift = rem.degree - q.degree
        rem = rem * lead - q.shifted(shift) * rem.leading()
        scale -= 1
    if scale > 0:
        rem = rem * (lead ** scale)
    return rem


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd in Z[t], positive leading coefficient.

    Primitive-PRS Euclidean scheme: contents are handled over Z, the
    polynomial part runs on primitive parts with pseudo-remainders, so
    no rational arithmetic and no coefficient blowup.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero() or q.is_zero():
        g = q if p.is_zero() else p
        g = g.primitive()
        return -g if g.leading() < 0 else g
    content = _int_gcd(p.content(), q.content())
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b).primitive()
        a, b = b, r
    if a.leading() < 0:
        a = -a
    return a * content if content != 1 else a


class RationalFn:
    """Reduced quotient of two integer polynomials.

    Normalization: numerator and denominator are coprime in Q[t] with no
    common integer content, and the denominator has positive constant
    term (positive leading coefficient when it vanishes at 0).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly = IntPoly((1,))):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = IntPoly(), IntPoly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0 or g.leading() != 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
            c = _int_gcd(num.content(), den.content())
            if c > 1:
                num = IntPoly(tuple(x // c for x in num.coeffs))
                den = IntPoly(tuple(x // c for x in den.coeffs))
        anchor = den[0] if den[0] != 0 else den.leading()
        if anchor < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalFn)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFn({poly_to_text(self.num)!r}, {poly_to_text(self.den)!r})"

    def __call__(self, x):
        return Fraction(self.num(x), self.den(x)) if isinstance(x, (int, Fraction)) \
            else self.num(x) / self.den(x)

    def series_coeffs(self, n_max: int) -> list[Fraction]:
        """First n_max+1 Taylor coefficients at t = 0, exact.

        Uses the linear recurrence induced by the denominator:
        den0 * c_n = num_n - sum_{m>=1} den_m * c_{n-m}.
        """
        den0 = self.den[0]
        if den0 == 0:
            raise ValueError("singular at the origin (denominator vanishes at 0)")
        coeffs: list[Fraction] = []
        for n in range(n_max + 1):
            acc = Fraction(self.num[n])
            for m in range(1, min(n, self.den.degree) + 1):
                acc -= self.den[m] * coeffs[n - m]
            coeffs.append(acc / den0)
        return coeffs


# -- text / JSON serialization ----------------------------------------

def poly_to_text(p: IntPoly) -> str:
    """Bit-exact ASCII form, increasing powers: ``1 - 4*t^3 - 1*t^6``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        body = str(abs(c)) if e == 0 else f"{abs(c)}*t^{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


_TERM_RE = re.compile(
    r"^(?P<coeff>\d+)(?:\*t\^(?P<power>\d+))?$")


def poly_from_text(s: str) -> IntPoly:
    """Inverse of poly_to_text."""
    s = s.strip()
    if s == "0":
        return IntPoly()
    tokens = s.replace("+ ", "+").replace("- ", "-").split()
    terms = []
    for tok in tokens:
        sign = 1
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            tok = tok[1:]
        m = _TERM_RE.match(tok)
        if not m:
            raise ValueError(f"bad polynomial term: {tok!r}")
        power = int(m.group("power") or 0)
        terms.append((power, sign * int(m.group("coeff"))))
    return IntPoly.from_terms(terms)


def poly_to_json(p: IntPoly) -> dict:
    """JSON form with decimal-string coefficients (64-bit-safe consumers)."""
    return {"coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(obj) -> IntPoly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return IntPoly(int(c) for c in obj["coeffs"])
