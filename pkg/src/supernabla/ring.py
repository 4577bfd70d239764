"""Exact Laurent polynomials and rational functions in q, t (and optionally u).

Polynomial arithmetic is delegated to FLINT's multivariate integer
polynomials; this module adds Laurent shifts, a canonical rational-function
form and a stable text format.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as igcd

import flint
from flint.utils.flint_exceptions import DomainError

VARS = ("q", "t", "u")
_CTX = flint.fmpz_mpoly_ctx.get(VARS, "deglex")
_ZERO3 = (0, 0, 0)


class DivisionNotExact(ArithmeticError):
    pass


class ZeroDenominator(ZeroDivisionError):
    pass


class PoleAtSpecialization(ArithmeticError):
    pass


class ParseError(ValueError):
    pass


def _pad(e):
    e = tuple(e)
    if len(e) == 3:
        return e
    return e + (0,) * (3 - len(e))


def _monomial_fp(e):
    return _CTX.from_dict({tuple(e): 1})


def _order_key(e):
    # graded lex with q > t > u
    return (sum(e), e[0], e[1], e[2])


class QtPoly:
    """Laurent polynomial  x^shift * poly  with poly a FLINT polynomial.

    The shift is canonical: its component for a variable is the (negative)
    minimal exponent of that variable, or zero when no negative exponent
    occurs.  Values are immutable.
    """

    __slots__ = ("_p", "_s", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, (int, flint.fmpz)):
            terms = {_ZERO3: int(terms)}
        d = {}
        for e, c in dict(terms).items():
            if c:
                e = _pad(e)
                d[e] = d.get(e, 0) + int(c)
        d = {e: c for e, c in d.items() if c}
        shift = tuple(min([0] + [e[v] for e in d]) for v in range(3))
        if shift != _ZERO3:
            d = {tuple(e[v] - shift[v] for v in range(3)): c for e, c in d.items()}
        self._p = _CTX.from_dict(d)
        self._s = shift
        self._hash = None

    @classmethod
    def _raw(cls, p, s=_ZERO3):
        obj = cls.__new__(cls)
        obj._p = p
        obj._s = s
        obj._hash = None
        if s != _ZERO3:
            obj._canon()
        return obj

    def _canon(self):
        if self._p.is_zero():
            self._s = _ZERO3
            return
        tc = tuple(int(x) for x in self._p.term_content().monoms()[0])
        news = tuple(min(0, self._s[v] + tc[v]) for v in range(3))
        delta = tuple(self._s[v] - news[v] for v in range(3))
        if delta != _ZERO3:
            if all(x >= 0 for x in delta):
                self._p = self._p * _monomial_fp(delta)
            else:
                up = tuple(max(x, 0) for x in delta)
                down = tuple(max(-x, 0) for x in delta)
                p = self._p
                if up != _ZERO3:
                    p = p * _monomial_fp(up)
                self._p = p / _monomial_fp(down)
        self._s = news

    # construction helpers
    @classmethod
    def const(cls, c):
        return cls._raw(_CTX.constant(int(c)))

    @classmethod
    def gen(cls, name):
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls._raw(_CTX.from_dict({tuple(e): 1}))

    @classmethod
    def monomial(cls, a=0, b=0, c=0, coeff=1):
        return cls({(a, b, c): coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QtPoly):
            return x
        if isinstance(x, (int, flint.fmpz)):
            return cls.const(int(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to QtPoly")

    # inspection
    def terms(self):
        s = self._s
        return {tuple(int(e[v]) + s[v] for v in range(3)): int(c)
                for e, c in self._p.terms()}

    def is_zero(self):
        return self._p.is_zero()

    def is_laurent(self):
        return self._s != _ZERO3

    def is_constant(self):
        return self._s == _ZERO3 and self._p.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return int(self._p.coefficient(0)) if not self._p.is_zero() else 0

    def is_monomial(self):
        return len(self._p) == 1

    def uses(self, name):
        v = VARS.index(name)
        return any(e[v] for e in self.terms())

    def degree(self, name):
        v = VARS.index(name)
        if self.is_zero():
            return None
        return max(e[v] for e in self.terms())

    def min_degree(self, name):
        v = VARS.index(name)
        if self.is_zero():
            return None
        return min(e[v] for e in self.terms())

    def __len__(self):
        return len(self._p)

    def __bool__(self):
        return not self._p.is_zero()

    # arithmetic
    def _aligned(self, other):
        s1, s2 = self._s, other._s
        if s1 == s2:
            return self._p, other._p, s1
        s = tuple(min(a, b) for a, b in zip(s1, s2))
        p1, p2 = self._p, other._p
        d1 = tuple(a - b for a, b in zip(s1, s))
        d2 = tuple(a - b for a, b in zip(s2, s))
        if d1 != _ZERO3:
            p1 = p1 * _monomial_fp(d1)
        if d2 != _ZERO3:
            p2 = p2 * _monomial_fp(d2)
        return p1, p2, s

    def __add__(self, other):
        if not isinstance(other, QtPoly):
            if isinstance(other, (int, flint.fmpz)):
                other = QtPoly.const(other)
            else:
                return NotImplemented
        p1, p2, s = self._aligned(other)
        return QtPoly._raw(p1 + p2, s)

    __radd__ = __add__

    def __neg__(self):
        return QtPoly._raw(-self._p, self._s)

    def __sub__(self, other):
        if not isinstance(other, QtPoly):
            if isinstance(other, (int, flint.fmpz)):
                other = QtPoly.const(other)
            else:
                return NotImplemented
        p1, p2, s = self._aligned(other)
        return QtPoly._raw(p1 - p2, s)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QtPoly):
            s = self._s
            if other._s != _ZERO3 or s != _ZERO3:
                s = tuple(a + b for a, b in zip(s, other._s))
            return QtPoly._raw(self._p * other._p, s)
        if isinstance(other, (int, flint.fmpz)):
            return QtPoly._raw(self._p * int(other), self._s)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k >= 0:
            s = tuple(x * k for x in self._s)
            return QtPoly._raw(self._p ** k, s)
        if not self.is_monomial():
            raise DivisionNotExact("negative power of a non-monomial")
        (e, c), = self.terms().items()
        if c not in (1, -1):
            raise DivisionNotExact("negative power of a non-unit monomial")
        return QtPoly({tuple(x * k for x in e): c ** (-k)})

    def exact_div(self, other):
        other = QtPoly.coerce(other)
        if other.is_zero():
            raise ZeroDenominator("division by zero polynomial")
        s = tuple(a - b for a, b in zip(self._s, other._s))
        try:
            p = self._p / other._p
        except DomainError:
            # the divisor may carry a monomial factor the Laurent shift absorbs
            tc = tuple(int(x) for x in other._p.term_content().monoms()[0])
            if tc == _ZERO3:
                raise DivisionNotExact(f"({self}) / ({other}) is not exact") from None
            lift = self._p * _monomial_fp(tc)
            try:
                p = lift / other._p
            except DomainError:
                raise DivisionNotExact(f"({self}) / ({other}) is not exact") from None
            s = tuple(a - b for a, b in zip(s, tc))
        return QtPoly._raw(p, s)

    def __truediv__(self, other):
        if isinstance(other, (QtPoly, int, flint.fmpz)):
            return QtRat(self, QtPoly.coerce(other))
        return NotImplemented

    def __rtruediv__(self, other):
        return QtRat(QtPoly.coerce(other), self)

    # comparison
    def __eq__(self, other):
        if isinstance(other, QtPoly):
            return self._s == other._s and self._p == other._p
        if isinstance(other, (int, flint.fmpz)):
            return self._s == _ZERO3 and self._p == int(other)
        if isinstance(other, QtRat):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self._s, tuple(sorted(self._p.to_dict().items()))))
        return self._hash

    # substitution
    def substitute(self, **images):
        """Simultaneous substitution, e.g. ``p.substitute(q=q + 1, t=t + 1)``."""
        imgs = []
        for name in VARS:
            x = images.get(name)
            if x is None:
                imgs.append(QtPoly.gen(name))
            else:
                imgs.append(QtPoly.coerce(x))
        if self._s == _ZERO3 and not any(x.is_laurent() for x in imgs):
            return QtPoly._raw(self._p.compose(*(x._p for x in imgs)))
        return self._substitute_slow(imgs)

    def _substitute_slow(self, imgs):
        cache = [{} for _ in range(3)]

        def power(v, k):
            c = cache[v]
            if k not in c:
                c[k] = imgs[v] ** k
            return c[k]

        total = QtPoly()
        for e, c in self.terms().items():
            term = QtPoly.const(c)
            for v in range(3):
                if e[v]:
                    term = term * power(v, e[v])
            total = total + term
        return total

    def evaluate(self, q=None, t=None, u=None):
        """Evaluate at rational numbers; unspecified variables stay symbolic."""
        vals = {"q": q, "t": t, "u": u}
        if all(v is None or isinstance(v, int) for v in vals.values()) and self._s == _ZERO3:
            sub = {k: v for k, v in vals.items() if v is not None}
            r = self._p.subs(sub) if sub else self._p
            if all(v is not None for v in vals.values()) or r.is_constant():
                return int(r.coefficient(0)) if not r.is_zero() else 0
            return QtPoly._raw(r)
        total = Fraction(0)
        for e, c in self.terms().items():
            term = Fraction(c)
            for v, name in enumerate(VARS):
                if e[v]:
                    if vals[name] is None:
                        raise ValueError("partial evaluation at non-integers is unsupported")
                    term *= Fraction(vals[name]) ** e[v]
            total += term
        return total

    # text format
    def __str__(self):
        items = sorted(self.terms().items(), key=lambda kv: _order_key(kv[0]), reverse=True)
        if not items:
            return "0"
        out = []
        for idx, (e, c) in enumerate(items):
            factors = []
            for v, name in enumerate(VARS):
                if e[v] == 1:
                    factors.append(name)
                elif e[v]:
                    factors.append(f"{name}^{e[v]}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"QtPoly({str(self)!r})"

    @classmethod
    def parse(cls, text):
        return parse_poly(text)

    def leading_sign(self):
        if self._p.is_zero():
            return 0
        return 1 if self._p.leading_coefficient() > 0 else -1


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*((?:[qtu](?:\^-?\d+)?\s*\*?\s*)*)")
_FACTOR_RE = re.compile(r"([qtu])(?:\^(-?\d+))?")


def parse_poly(text):
    """Inverse of ``str(QtPoly)``; also accepts mild spacing variations."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return QtPoly()
    pos = 0
    terms = {}
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, facs = m.group(1), m.group(2), m.group(3)
        if sign is None and not first:
            raise ParseError(f"missing operator near {s[pos:]!r}")
        if num is None and not facs.strip():
            raise ParseError(f"empty term near {s[pos:]!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = [0, 0, 0]
        for fm in _FACTOR_RE.finditer(facs):
            e[VARS.index(fm.group(1))] += int(fm.group(2) or 1)
        key = tuple(e)
        terms[key] = terms.get(key, 0) + c
        pos = m.end()
        first = False
    return QtPoly(terms)


q = QtPoly.gen("q")
t = QtPoly.gen("t")
u = QtPoly.gen("u")
ONE = QtPoly.const(1)
ZERO = QtPoly()
M = (1 - q) * (1 - t)


def poly_gcd(a, b):
    """gcd of the polynomial parts (Laurent shifts dropped)."""
    return QtPoly._raw(a._p.gcd(b._p))


class QtRat:
    """Canonical quotient num/den.

    den is an honest polynomial without monomial factors, gcd(num, den) = 1
    (integer content included) and den's leading coefficient is positive.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, normalize=True):
        num = _as_poly(num)
        den = _as_poly(den)
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QtRat):
            return x
        if isinstance(x, QtPoly):
            return cls._make(x, ONE)
        if isinstance(x, (int, flint.fmpz)):
            return cls._make(QtPoly.const(int(x)), ONE)
        if isinstance(x, Fraction):
            return cls(QtPoly.const(x.numerator), QtPoly.const(x.denominator))
        raise TypeError(f"cannot coerce {type(x).__name__} to QtRat")

    def is_poly(self):
        return self.den._p.is_one()

    def as_poly(self):
        if not self.is_poly():
            raise DivisionNotExact(f"{self} is not a polynomial")
        return self.num

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        try:
            other = QtRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.is_poly() and other.is_poly():
            return QtRat._make(self.num + other.num, ONE)
        if self.den == other.den:
            return QtRat(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        a = self.den.exact_div(g)
        b = other.den.exact_div(g)
        return QtRat(self.num * b + other.num * a, a * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QtRat._make(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = QtRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QtRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QtRat._make(ZERO, ONE)
        if self.is_poly() and other.is_poly():
            return QtRat._make(self.num * other.num, ONE)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = poly_gcd(n1, d2)
        g2 = poly_gcd(n2, d1)
        if not g1._p.is_one():
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        if not g2._p.is_one():
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        return QtRat._make(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDenominator("inverse of zero")
        return QtRat(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = QtRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QtRat.coerce(other) * self.inverse()

    def __pow__(self, k):
        if k >= 0:
            return QtRat._make(self.num ** k, self.den ** k)
        return self.inverse() ** (-k)

    def __eq__(self, other):
        try:
            other = QtRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.is_poly() else hash((self.num, self.den))
        return self._hash

    def substitute(self, **images):
        num = self.num.substitute(**images)
        den = self.den.substitute(**images)
        if den.is_zero():
            raise PoleAtSpecialization(f"denominator {self.den} vanishes under {images}")
        return QtRat(num, den)

    def evaluate(self, q=None, t=None, u=None):
        d = self.den.evaluate(q, t, u)
        if not isinstance(d, QtPoly) and d == 0:
            raise PoleAtSpecialization(f"denominator {self.den} vanishes")
        n = self.num.evaluate(q, t, u)
        if isinstance(n, QtPoly) or isinstance(d, QtPoly):
            return QtRat(n, d)
        return Fraction(n) / Fraction(d)

    def uses(self, name):
        return self.num.uses(name) or self.den.uses(name)

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QtRat({str(self)!r})"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", text)
        if m:
            return cls(parse_poly(m.group(1)), parse_poly(m.group(2)))
        return cls(parse_poly(text))


def _as_poly(x):
    if isinstance(x, QtPoly):
        return x
    if isinstance(x, (int, flint.fmpz)):
        return QtPoly.const(int(x))
    raise TypeError(f"expected polynomial, got {type(x).__name__}")


def _normalize(num, den):
    if den.is_zero():
        raise ZeroDenominator("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    if den.is_constant():
        d = den.constant_value()
        if d == 1:
            return num, ONE
        g = igcd(int(num._p.content()), abs(d))
        if d < 0:
            g = -g
        return QtPoly._raw(num._p / g, num._s) if g != 1 else num, QtPoly.const(d // g)
    # push the Laurent shift of den (and any monomial factor) into num
    s = tuple(a - b for a, b in zip(num._s, den._s))
    dp = den._p
    tc = tuple(int(x) for x in dp.term_content().monoms()[0])
    if tc != _ZERO3:
        dp = dp / _monomial_fp(tc)
        s = tuple(a - b for a, b in zip(s, tc))
    np_ = num._p
    g = np_.gcd(dp)
    if not g.is_one():
        np_ = np_ / g
        dp = dp / g
    if dp.leading_coefficient() < 0:
        np_, dp = -np_, -dp
    return QtPoly._raw(np_, s), QtPoly._raw(dp)


def rat_normalize(r):
    """Canonical form of a (possibly unnormalized) quotient."""
    return QtRat(r.num, r.den)


def poly_arith(a, b, kind):
    a, b = QtPoly.coerce(a), QtPoly.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "exact_div":
        return a.exact_div(b)
    raise ValueError(f"unknown operation {kind!r}")


def substitute(p, **images):
    return p.substitute(**images)


def rat_sum(values):
    """Sum of many QtRat values over one common denominator."""
    polys = ZERO
    groups = {}
    for v in values:
        v = QtRat.coerce(v)
        if v.is_zero():
            continue
        if v.is_poly():
            polys = polys + v.num
        else:
            groups[v.den] = groups.get(v.den, ZERO) + v.num
    if not groups:
        return QtRat._make(polys, ONE)
    dens = list(groups)
    lcm = dens[0]
    for d in dens[1:]:
        g = poly_gcd(lcm, d)
        lcm = lcm * d.exact_div(g)
    num = polys * lcm
    for d, n in groups.items():
        num = num + n * lcm.exact_div(d)
    return QtRat(num, lcm)


def as_rat(x):
    return QtRat.coerce(x)


def qint(n, var=None):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    var = q if var is None else var
    total = ZERO
    p = ONE
    for _ in range(n):
        total = total + p
        p = p * var
    return total


def qpoch(a, b, k):
    """(a; b)_k = (1 - a)(1 - a b)...(1 - a b^(k-1))."""
    out = ONE
    x = a
    for _ in range(k):
        out = out * (1 - x)
        x = x * b
    return out


def power_series(r, order, var="q"):
    """Coefficients {exponent: Fraction} of a univariate rational function up to ``order``."""
    r = QtRat.coerce(r)
    v = VARS.index(var)
    for other in VARS:
        if other != var and r.uses(other):
            raise ValueError(f"power_series needs a function of {var} alone")
    num = {e[v]: c for e, c in r.num.terms().items()}
    den = {e[v]: c for e, c in r.den.terms().items()}
    d0 = den.get(0, 0)
    if d0 == 0:
        raise PoleAtSpecialization("denominator vanishes at 0")
    low = min(num) if num else 0
    out = {}
    # solve den * s = num coefficient by coefficient
    for n in range(low, order + 1):
        acc = Fraction(num.get(n, 0))
        for j, c in den.items():
            if j and (n - j) in out:
                acc -= c * out[n - j]
        val = acc / d0
        out[n] = val
    return {k: v for k, v in out.items() if v}
