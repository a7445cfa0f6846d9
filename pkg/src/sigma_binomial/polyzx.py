"""Exact univariate polynomial arithmetic over Z and over prime fields Z_p.

Polynomials are dense coefficient sequences indexed by degree, with
trailing zeros trimmed.  Everything here is immutable and uses Python's
arbitrary-precision integers; degrees at the scale this library targets
are tiny, so no fast multiplication is attempted.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator


class ExactDivisionError(ArithmeticError):
    """Raised when an exact division over Z does not come out exact."""


class DegenerateInput(ValueError):
    """Raised for inputs outside an operation's domain, e.g. gcd(0, 0)."""


class DivisionByZero(ZeroDivisionError):
    """Raised on division by the zero polynomial."""


NEG_INF = float("-inf")


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) > 0 and g = u*a + v*b."""
    if a == 0 and b == 0:
        raise DegenerateInput("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of |n| by trial division, ascending."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class IntPoly:
    """A univariate polynomial over Z; coeffs[k] is the coefficient of x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def term(cls, coeff: int, deg: int) -> "IntPoly":
        if coeff == 0:
            return cls()
        return cls((0,) * deg + (coeff,))

    @property
    def degree(self):
        """Degree; minus infinity for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise DegenerateInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k; negative k divides exactly or raises."""
        if not self:
            return self
        if k >= 0:
            return IntPoly((0,) * k + self.coeffs)
        if any(self.coeffs[i] for i in range(min(-k, len(self.coeffs)))):
            raise ExactDivisionError("not divisible by x^%d" % -k)
        return IntPoly(self.coeffs[-k:])

    def exact_div(self, d: int) -> "IntPoly":
        """Divide every coefficient by d, which must divide exactly."""
        if d == 0:
            raise DivisionByZero("division by zero integer")
        if any(c % d for c in self.coeffs):
            raise ExactDivisionError("%r not divisible by %d" % (self, d))
        return IntPoly(c // d for c in self.coeffs)

    def __call__(self, v: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def monomials(self) -> Iterator[tuple[int, int]]:
        """Yield (deg, coeff) for nonzero coefficients, descending degree."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                yield k, self.coeffs[k]

    def content_with_sign(self) -> int:
        """gcd of coefficients carrying the sign of the leading one; 0 for 0."""
        g = 0
        for c in self.coeffs:
            g = ext_gcd(g, c)[0] if (g or c) else 0
        if g and self.lead < 0:
            g = -g
        return g

    def __repr__(self) -> str:
        return "IntPoly(%r)" % (self.coeffs,)

    def __str__(self) -> str:
        return poly_to_str(self)


X = IntPoly((0, 1))
ONE_POLY = IntPoly((1,))


class ModPoly:
    """A univariate polynomial over Z_p with p a machine-sized prime."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        self.p = p
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise DegenerateInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(("ModPoly", self.p, self.coeffs))

    def _check(self, other: "ModPoly") -> None:
        if self.p != other.p:
            raise DegenerateInput("mixed moduli %d and %d" % (self.p, other.p))

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ModPoly(self.p, out)

    def __neg__(self) -> "ModPoly":
        return ModPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        return self + (-other)

    def __mul__(self, other) -> "ModPoly":
        if isinstance(other, int):
            return ModPoly(self.p, (other * c for c in self.coeffs))
        self._check(other)
        if not self or not other:
            return ModPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ModPoly(self.p, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "ModPoly":
        if not self or k == 0:
            return self if k >= 0 else ModPoly(self.p, self.coeffs[-k:])
        return ModPoly(self.p, (0,) * k + self.coeffs)

    def monic(self) -> "ModPoly":
        if not self:
            return self
        inv = pow(self.lead, -1, self.p)
        return self * inv

    def __divmod__(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._check(other)
        if not other:
            raise DivisionByZero("division by zero polynomial")
        p = self.p
        inv = pow(other.lead, -1, p)
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        q = [0] * max(0, len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] % p
            if c == 0:
                continue
            f = (c * inv) % p
            q[k - db] = f
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] = (rem[k - db + j] - f * b) % p
        return ModPoly(p, q), ModPoly(p, rem)

    def lift(self) -> IntPoly:
        """Lift to Z[x] with coefficient representatives in [0, p)."""
        return IntPoly(self.coeffs)

    def __repr__(self) -> str:
        return "ModPoly(%d, %r)" % (self.p, self.coeffs)

    def __str__(self) -> str:
        return poly_to_str(self.lift())


def mod_reduce(a: IntPoly, p: int) -> ModPoly:
    """Reduce an integer polynomial mod a prime p."""
    return ModPoly(p, a.coeffs)


def lift(a: ModPoly) -> IntPoly:
    return a.lift()


def modpoly_divrem(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly]:
    """Quotient and remainder in Z_p[x] with deg r < deg b."""
    return divmod(a, b)


def modpoly_gcdext(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly, ModPoly]:
    """Return (g, u, v) over Z_p[x] with g = u*a + v*b, g monic or zero."""
    p = a.p
    old_r, r = a, b
    old_u, u = ModPoly(p, (1,)), ModPoly(p)
    old_v, v = ModPoly(p), ModPoly(p, (1,))
    while r:
        q, rem = divmod(old_r, r)
        old_r, r = r, rem
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r:
        inv = pow(old_r.lead, -1, p)
        old_r, old_u, old_v = old_r * inv, old_u * inv, old_v * inv
    return old_r, old_u, old_v


# ---------------------------------------------------------------------------
# Text format: signed integer-coefficient terms in the indeterminate x,
# e.g. "3*x^2+4*x+1", "x", "-2", "0".  Whitespace is insignificant.

_TERM_RE = re.compile(
    r"""^(?P<sign>[+-]?)
        (?:
            (?P<coeff>\d+)(?:\*?(?P<var1>x)(?:\^(?P<exp1>\d+))?)?
          | (?P<var2>x)(?:\^(?P<exp2>\d+))?
        )$""",
    re.VERBOSE,
)


def poly_from_str(text: str) -> IntPoly:
    """Parse the polynomial grammar; raises ValueError on malformed input."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError("malformed polynomial %r" % text)
    out = IntPoly()
    for t in terms:
        m = _TERM_RE.match(t)
        if not m:
            raise ValueError("malformed term %r in %r" % (t, text))
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coeff") is not None:
            c = sign * int(m.group("coeff"))
            if m.group("var1"):
                d = int(m.group("exp1")) if m.group("exp1") else 1
            else:
                d = 0
        else:
            c = sign
            d = int(m.group("exp2")) if m.group("exp2") else 1
        out = out + IntPoly.term(c, d)
    return out


def poly_to_str(a: IntPoly) -> str:
    """Canonical text: terms in descending degree, explicit '*' products."""
    if not a:
        return "0"
    parts = []
    for deg, c in a.monomials():
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        elif deg == 1:
            body = "x" if mag == 1 else "%d*x" % mag
        else:
            body = "x^%d" % deg if mag == 1 else "%d*x^%d" % (mag, deg)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)
