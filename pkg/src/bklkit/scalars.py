"""Exact scalar arithmetic: integer Laurent polynomials in q, and the
fractions of them needed transiently inside the bar-map machinery.

Everything is exact; there is no floating point anywhere in the package.
Coefficients are Python ints, so products of structure constants can grow
past 64 bits without harm.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction


class DegreeClass(Enum):
    ZERO = "zero"
    IN_qZq = "in qZ[q]"              # every exponent >= 1
    IN_qinvZqinv = "in q^-1Z[q^-1]"  # every exponent <= -1
    CONST_PLUS = "has constant term"
    MIXED = "mixed"


class ExactDivisionError(ArithmeticError):
    """Raised when an exact Laurent division leaves a remainder."""


def _norm(c: dict) -> dict:
    return {e: v for e, v in c.items() if v}


class Laurent:
    """Integer Laurent polynomial in q.

    Stored sparsely as {exponent: coefficient} with no zero coefficients.
    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None, *, _raw: dict | None = None):
        if _raw is not None:
            self.c = _raw
        elif coeffs is None:
            self.c = {}
        elif isinstance(coeffs, int):
            self.c = {0: coeffs} if coeffs else {}
        else:
            self.c = {int(e): int(v) for e, v in dict(coeffs).items() if v}

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, Laurent) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            if e == 0:
                term = str(abs(v))
            else:
                mag = "" if abs(v) == 1 else f"{abs(v)}*"
                term = f"{mag}q^{e}" if e != 1 else f"{mag}q"
            parts.append(("- " if v < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Laurent":
        if isinstance(other, int):
            other = Laurent(other)
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return Laurent(_raw=c)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent(_raw={e: -v for e, v in self.c.items()})

    def __sub__(self, other) -> "Laurent":
        if isinstance(other, int):
            other = Laurent(other)
        return self + (-other)

    def __rsub__(self, other) -> "Laurent":
        return Laurent(other) + (-self)

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Laurent(_raw={e: v * other for e, v in self.c.items()})
        c: dict = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        return Laurent(_raw=c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ----------------------------------------------------------

    def bar(self) -> "Laurent":
        """The involution q -> q^-1 (negate every exponent)."""
        return Laurent(_raw={-e: v for e, v in self.c.items()})

    def ev(self, q0: int) -> int:
        """Evaluate at an integer point, q0 in {1, -1} in practice."""
        if q0 == 1:
            return sum(self.c.values())
        if q0 == -1:
            return sum(v if e % 2 == 0 else -v for e, v in self.c.items())
        total = 0
        for e, v in self.c.items():
            if e < 0 and q0 ** (-e) != 1 and abs(q0) != 1:
                raise ValueError("negative exponent at non-unit point")
            total += v * q0**e
        return total

    def min_exp(self) -> int:
        return min(self.c)

    def max_exp(self) -> int:
        return max(self.c)

    def degree_class(self) -> DegreeClass:
        if not self.c:
            return DegreeClass.ZERO
        lo, hi = min(self.c), max(self.c)
        if lo >= 1:
            return DegreeClass.IN_qZq
        if hi <= -1:
            return DegreeClass.IN_qinvZqinv
        if 0 in self.c:
            return DegreeClass.CONST_PLUS
        return DegreeClass.MIXED

    def pos_part(self) -> "Laurent":
        """Terms with exponent >= 1."""
        return Laurent(_raw={e: v for e, v in self.c.items() if e >= 1})

    def neg_part(self) -> "Laurent":
        """Terms with exponent <= -1."""
        return Laurent(_raw={e: v for e, v in self.c.items() if e <= -1})

    def is_antisymmetric(self) -> bool:
        """True iff bar(p) == -p; what a solvable Lusztig column demands."""
        return all(self.c.get(-e, 0) == -v for e, v in self.c.items())

    def divexact(self, other: "Laurent") -> "Laurent":
        """Exact division; raises ExactDivisionError on any remainder."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return ZERO
        # shift both to ordinary polynomials
        slo, olo = min(self.c), min(other.c)
        num = [self.c.get(slo + i, 0) for i in range(max(self.c) - slo + 1)]
        den = [other.c.get(olo + i, 0) for i in range(max(other.c) - olo + 1)]
        q, r = _polydivmod_int(num, den)
        if q is None or any(r):
            raise ExactDivisionError(f"{other!r} does not divide {self!r}")
        shift = slo - olo
        return Laurent(_raw={i + shift: v for i, v in enumerate(q) if v})

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {str(e): self.c[e] for e in sorted(self.c)}

    @classmethod
    def from_json(cls, data: dict) -> "Laurent":
        return cls({int(e): int(v) for e, v in data.items()})


def _polydivmod_int(num: list, den: list):
    """Long division of integer coefficient lists (ascending order).

    Returns (quotient, remainder); quotient is None as soon as a leading
    coefficient fails to divide exactly.
    """
    num = list(num)
    dn = len(den) - 1
    while dn >= 0 and den[dn] == 0:
        dn -= 1
    lead = den[dn]
    qdeg = len(num) - 1 - dn
    if qdeg < 0:
        return ([0], num)
    quot = [0] * (qdeg + 1)
    for i in range(qdeg, -1, -1):
        c = num[i + dn]
        if c == 0:
            continue
        if c % lead != 0:
            return (None, num)
        f = c // lead
        quot[i] = f
        for j in range(dn + 1):
            num[i + j] -= f * den[j]
    return (quot, num)


ZERO = Laurent()
ONE = Laurent({0: 1})
Q = Laurent({1: 1})
QINV = Laurent({-1: 1})
Z_QMQINV = Laurent({1: 1, -1: -1})  # q - q^-1


def q_power(n: int) -> Laurent:
    return Laurent({n: 1})


def gauss_int(r: int) -> Laurent:
    """[r] = (q^r - q^-r)/(q - q^-1) = q^{r-1} + q^{r-3} + ... + q^{1-r}."""
    if r < 0:
        raise ValueError("gauss_int needs r >= 0")
    return Laurent({r - 1 - 2 * s: 1 for s in range(r)})


def gauss_fact(r: int) -> Laurent:
    """[r]! = [1][2]...[r], with [0]! = 1."""
    if r < 0:
        raise ValueError("gauss_fact needs r >= 0")
    out = ONE
    for s in range(1, r + 1):
        out = out * gauss_int(s)
    return out


# ---------------------------------------------------------------------------
# Rational functions in q.
#
# These appear only inside intermediate bar-map arithmetic (divided powers,
# the brute-force uniqueness solver); every externally visible coefficient
# must reduce back to a Laurent polynomial.
# ---------------------------------------------------------------------------


def _content(coeffs: list) -> int:
    from math import gcd

    g = 0
    for v in coeffs:
        g = gcd(g, v)
    return g or 1


def _poly_gcd_int(a: list, b: list) -> list:
    """Gcd of integer polynomial coefficient lists (ascending), primitive."""

    def strip(p):
        while p and p[-1] == 0:
            p = p[:-1]
        return p

    a, b = strip(a), strip(b)
    if not a:
        p = b
    elif not b:
        p = a
    else:
        fa = [Fraction(v) for v in a]
        fb = [Fraction(v) for v in b]
        while fb:
            # remainder of fa by fb
            dn = len(fb) - 1
            lead = fb[dn]
            r = list(fa)
            for i in range(len(r) - 1 - dn, -1, -1):
                c = r[i + dn]
                if c == 0:
                    continue
                f = c / lead
                for j in range(dn + 1):
                    r[i + j] -= f * fb[j]
            while r and r[-1] == 0:
                r = r[:-1]
            fa, fb = fb, r
        # clear denominators, take primitive part
        den = 1
        for v in fa:
            den = den * v.denominator // _gcd_int(den, v.denominator)
        p = [int(v * den) for v in fa]
    c = _content(p)
    p = [v // c for v in p]
    if p and p[-1] < 0:
        p = [-v for v in p]
    return p


def _gcd_int(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b) or 1


def laurent_gcd(a: Laurent, b: Laurent) -> Laurent:
    """Gcd in Z[q, q^-1], normalized monic-sign and with min exponent 0."""
    if not a:
        x = b
    elif not b:
        x = a
    else:
        alo, blo = min(a.c), min(b.c)
        la = [a.c.get(alo + i, 0) for i in range(max(a.c) - alo + 1)]
        lb = [b.c.get(blo + i, 0) for i in range(max(b.c) - blo + 1)]
        g = _poly_gcd_int(la, lb)
        return Laurent(_raw={i: v for i, v in enumerate(g) if v})
    if not x:
        return ZERO
    lo = min(x.c)
    out = {e - lo: v for e, v in x.c.items()}
    if out[max(out)] < 0:
        out = {e: -v for e, v in out.items()}
    return Laurent(_raw=out)


class ReductionError(ArithmeticError):
    """A RationalQ that had to be a Laurent polynomial was not one."""


class RationalQ:
    """Fraction num/den of integer Laurent polynomials, kept reduced.

    Normal form: den is an ordinary polynomial with nonzero constant term
    and positive leading coefficient, gcd(num, den) is a unit.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Laurent) else Laurent(num)
        den = ONE if den is None else (den if isinstance(den, Laurent) else Laurent(den))
        if not den:
            raise ZeroDivisionError("RationalQ with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        g = laurent_gcd(num, den)
        num = num.divexact(g)
        den = den.divexact(g)
        # make den an honest polynomial with nonzero constant term,
        # positive leading coefficient; absorb units into num
        lo = min(den.c)
        den = Laurent(_raw={e - lo: v for e, v in den.c.items()})
        num = Laurent(_raw={e - lo: v for e, v in num.c.items()})
        if den.c[max(den.c)] < 0:
            den, num = -den, -num
        self.num, self.den = num, den

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Laurent)):
            other = RationalQ(other)
        return (
            isinstance(other, RationalQ)
            and self.num * other.den == other.num * self.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == ONE:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"

    def __add__(self, other):
        if isinstance(other, (int, Laurent)):
            other = RationalQ(other)
        return RationalQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Laurent)):
            other = RationalQ(other)
        return self + (-other)

    def __rsub__(self, other):
        return RationalQ(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            other = RationalQ(other)
        return RationalQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalQ":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalQ(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Laurent)):
            other = RationalQ(other)
        return self * other.inverse()

    def bar(self) -> "RationalQ":
        return RationalQ(self.num.bar(), self.den.bar())

    def is_laurent(self) -> bool:
        return set(self.den.c) == {0} and abs(self.den.c[0]) == 1 or self._try() is not None

    def _try(self):
        try:
            return self.num.divexact(self.den)
        except ExactDivisionError:
            return None

    def reduce(self) -> Laurent:
        """Collapse to a Laurent polynomial; hard error if impossible."""
        out = self._try()
        if out is None:
            raise ReductionError(f"{self!r} is not a Laurent polynomial")
        return out
