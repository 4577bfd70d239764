"""Partitions, compositions and the classical symmetric-function layer.

Every basis is stored against the power-sum basis with exact rational
transition matrices; conversions compose two of them.  Coefficients of a
``SymFunc`` are ``QtRat`` values.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .ring import ONE, ZERO, QtPoly, QtRat, ParseError, parse_poly, q, rat_sum, t, u

BASES = ("m", "e", "h", "p", "s", "f", "hh", "sh", "H")
CLASSICAL = ("m", "e", "h", "p", "s", "f")
_HATS = {"hh": "h", "sh": "s"}


class UnsupportedBasis(ValueError):
    pass


class AlphabetMismatch(ValueError):
    pass


class UnsupportedExpression(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


class EmptyPartition(ValueError):
    pass


# ---------------------------------------------------------------- partitions

@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n, largest first: (4), (3,1), (2,2), (2,1,1), (1,1,1,1)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(mu):
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))


def z_value(mu):
    out = 1
    for part, mult in _multiplicities(mu).items():
        out *= part ** mult * factorial(mult)
    return out


def _multiplicities(seq):
    d = {}
    for x in seq:
        d[x] = d.get(x, 0) + 1
    return d


def n_stat(mu):
    """n(mu) = sum over cells of the row index."""
    return sum(j * p for j, p in enumerate(mu))


def cells(mu):
    """Cells (i, j) with i the column and j the row, rows indexed from the bottom."""
    return [(i, j) for j, p in enumerate(mu) for i in range(p)]


def arm(mu, c):
    return mu[c[1]] - c[0] - 1


def leg(mu, c):
    return conjugate(mu)[c[0]] - c[1] - 1


def hooks(mu):
    mc = conjugate(mu)
    return [mu[j] - i - 1 + mc[i] - j - 1 + 1 for i, j in cells(mu)]


def sort_partition(seq):
    return tuple(sorted((x for x in seq if x), reverse=True))


def is_partition(seq):
    return all(x > 0 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


# -------------------------------------------------------------- compositions

def compositions_of(n):
    """All compositions of n in lexicographic order of their partial-sum sets."""
    if n == 0:
        return [()]
    out = []
    for mask in range(1 << (n - 1)):
        comp, last = [], 0
        for i in range(1, n):
            if mask >> (i - 1) & 1:
                comp.append(i - last)
                last = i
        comp.append(n - last)
        out.append(tuple(comp))
    return out


def partial_sums(alpha):
    """Sigma(alpha) = {a1, a1 + a2, ...} without the final total."""
    s, out = 0, set()
    for a in alpha[:-1]:
        s += a
        out.add(s)
    return out


def composition_from_set(S, n):
    pts = sorted(S) + [n]
    out, last = [], 0
    for p in pts:
        out.append(p - last)
        last = p
    return tuple(out)


def rearrangements(seq):
    """R(seq): distinct rearrangements, in lexicographic order."""
    return sorted(set(itertools.permutations(seq)))


def pr_sequences(eta, beta):
    """PR(eta, beta): tuples of partitions nu_i of beta_i whose parts together rearrange eta."""
    target = _multiplicities(eta)
    out = []

    def rec(i, remaining, acc):
        if i == len(beta):
            if not any(remaining.values()):
                out.append(tuple(acc))
            return
        for nu in partitions_of(beta[i]):
            m = _multiplicities(nu)
            if all(remaining.get(p, 0) >= c for p, c in m.items()):
                for p, c in m.items():
                    remaining[p] -= c
                acc.append(nu)
                rec(i + 1, remaining, acc)
                acc.pop()
                for p, c in m.items():
                    remaining[p] += c

    rec(0, dict(target), [])
    return out


# ----------------------------------------------------------------- cell data

def cell_stats(mu):
    """Arms, legs, hooks and the cell polynomials B, T, Pi, w of a partition."""
    mu = tuple(mu)
    cs = cells(mu)
    mc = conjugate(mu)
    arms = {c: mu[c[1]] - c[0] - 1 for c in cs}
    legs = {c: mc[c[0]] - c[1] - 1 for c in cs}
    B = ZERO
    T = ONE
    Pi = ONE
    for i, j in cs:
        mono = q ** i * t ** j
        B = B + mono
        T = T * mono
        if (i, j) != (0, 0):
            Pi = Pi * (1 - mono)
    w = None
    if mu:
        w = ONE
        for c in cs:
            a, l = arms[c], legs[c]
            w = w * (q ** a - t ** (l + 1)) * (t ** l - q ** (a + 1))
    return {
        "cells": cs,
        "arm": arms,
        "leg": legs,
        "hooks": {c: arms[c] + legs[c] + 1 for c in cs},
        "B": B,
        "T": T,
        "Pi": Pi,
        "w": w,
        "n": n_stat(mu),
    }


@lru_cache(maxsize=None)
def B_mu(mu):
    return cell_stats(mu)["B"]


@lru_cache(maxsize=None)
def T_mu(mu):
    if not mu:
        raise EmptyPartition("T is undefined on the empty partition")
    return cell_stats(mu)["T"]


@lru_cache(maxsize=None)
def Pi_mu(mu):
    return cell_stats(mu)["Pi"]


@lru_cache(maxsize=None)
def w_mu(mu):
    if not mu:
        raise EmptyPartition("w is undefined on the empty partition")
    return cell_stats(mu)["w"]


# ------------------------------------------------------ transition matrices

def _char_table_entry(lam, rho):
    """Irreducible character chi^lam at cycle type rho (Murnaghan-Nakayama)."""
    return _mn(tuple(lam), tuple(rho))


@lru_cache(maxsize=None)
def _mn(lam, rho):
    if not rho:
        return 1 if not lam else 0
    r = rho[0]
    rest = rho[1:]
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        sign = (-1) ** sum(1 for x in beta if nb < x < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(x - (L - 1 - i) for i, x in enumerate(newbeta))
        newlam = tuple(x for x in newlam if x > 0)
        total += sign * _mn(newlam, rest)
    return total


@lru_cache(maxsize=None)
def _p_to_m_counts(rho, lam):
    """Coefficient of m_lam in p_rho: ways to distribute the parts of rho onto lam's rows."""
    target = list(lam)

    def rec(i, rem):
        if i == len(rho):
            return 1 if not any(rem) else 0
        total = 0
        for j in range(len(rem)):
            if rem[j] >= rho[i]:
                rem[j] -= rho[i]
                total += rec(i + 1, rem)
                rem[j] += rho[i]
        return total

    return rec(0, target)


def _invert(mat, keys):
    """Exact inverse of a square Fraction matrix given as dict-of-dicts."""
    n = len(keys)
    a = [[Fraction(mat[r].get(c, 0)) for c in keys] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(keys)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return {r: {c: a[i][n + j] for j, c in enumerate(keys) if a[i][n + j] != 0}
            for i, r in enumerate(keys)}


@lru_cache(maxsize=None)
def to_p_matrix(basis, n):
    """Rows b_lam = sum_rho M[lam][rho] p_rho for a classical basis b."""
    parts = partitions_of(n)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in parts}
    if basis == "s":
        return {lam: {rho: Fraction(_char_table_entry(lam, rho), z_value(rho))
                      for rho in parts if _char_table_entry(lam, rho)} for lam in parts}
    if basis in ("h", "e"):
        out = {}
        for lam in parts:
            vec = {(): Fraction(1)}
            for part in lam:
                new = {}
                for rho in partitions_of(part):
                    c = Fraction(1, z_value(rho))
                    if basis == "e":
                        c *= (-1) ** (part - len(rho))
                    for key, val in vec.items():
                        k2 = sort_partition(key + rho)
                        new[k2] = new.get(k2, 0) + val * c
                vec = new
            out[lam] = {k: v for k, v in vec.items() if v}
        return out
    if basis == "m":
        pm = {rho: {lam: Fraction(_p_to_m_counts(rho, lam)) for lam in parts
                    if _p_to_m_counts(rho, lam)} for rho in parts}
        return _invert(pm, list(parts))
    if basis == "f":
        mp = to_p_matrix("m", n)
        return {lam: {rho: c * (-1) ** (n - len(rho)) for rho, c in row.items()}
                for lam, row in mp.items()}
    raise UnsupportedBasis(basis)


@lru_cache(maxsize=None)
def from_p_matrix(basis, n):
    """Rows p_rho = sum_lam M[rho][lam] b_lam."""
    parts = partitions_of(n)
    if basis == "p":
        return to_p_matrix("p", n)
    if basis == "s":
        return {rho: {lam: Fraction(_char_table_entry(lam, rho)) for lam in parts
                      if _char_table_entry(lam, rho)} for rho in parts}
    if basis == "m":
        return {rho: {lam: Fraction(_p_to_m_counts(rho, lam)) for lam in parts
                      if _p_to_m_counts(rho, lam)} for rho in parts}
    return _invert(to_p_matrix(basis, n), list(parts))


@lru_cache(maxsize=None)
def transition(src, tgt, n):
    """Rows src_lam = sum_mu T[lam][mu] tgt_mu (exact Fractions, classical bases)."""
    a = to_p_matrix(src, n)
    b = from_p_matrix(tgt, n)
    out = {}
    for lam, row in a.items():
        acc = {}
        for rho, c in row.items():
            for mu, d in b[rho].items():
                acc[mu] = acc.get(mu, 0) + c * d
        out[lam] = {mu: v for mu, v in acc.items() if v}
    return out


def _scale(c, fr):
    """QtRat times Fraction."""
    if fr == 1:
        return c
    if fr.denominator == 1:
        return QtRat._make(c.num * fr.numerator, c.den) if c.is_poly() else c * QtRat.coerce(fr)
    return c * QtRat.coerce(fr)


def _pk_factor(rho):
    """prod (1 - q^rho_i): p_rho = this * p_rho[X/(1-q)]."""
    out = ONE
    for r in rho:
        out = out * (1 - q ** r)
    return out


# ------------------------------------------------------------------ SymFunc

class SymFunc:
    """Sparse combination of basis elements of one alphabet with QtRat coefficients."""

    __slots__ = ("basis", "coeffs", "alphabet")

    def __init__(self, basis, coeffs=None, alphabet="x"):
        if basis not in BASES:
            raise UnsupportedBasis(basis)
        self.basis = basis
        self.alphabet = alphabet
        d = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if not is_partition(lam):
                raise ValueError(f"{lam} is not a partition")
            c = QtRat.coerce(c)
            if not c.is_zero():
                d[lam] = c
        self.coeffs = d

    @classmethod
    def basis_element(cls, basis, lam, alphabet="x"):
        return cls(basis, {tuple(lam): 1}, alphabet)

    @classmethod
    def zero(cls, basis="s", alphabet="x"):
        return cls(basis, {}, alphabet)

    @classmethod
    def scalar(cls, c, alphabet="x"):
        return cls("p", {(): c}, alphabet)

    def degrees(self):
        return sorted({sum(lam) for lam in self.coeffs})

    def degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise NotHomogeneous(f"degrees {ds}")
        return ds[0] if ds else 0

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, lam):
        return self.coeffs.get(tuple(lam), QtRat.coerce(0))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _part_key(kv[0]))

    def _check(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"{self.alphabet} vs {other.alphabet}")

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            if other == 0:
                return self
            return NotImplemented
        self._check(other)
        if other.basis != self.basis:
            other = convert(other, self.basis)
        d = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            d[lam] = d[lam] + c if lam in d else c
        return SymFunc(self.basis, d, self.alphabet)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(self.basis, {k: -v for k, v in self.coeffs.items()}, self.alphabet)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return product(self, other)
        c = QtRat.coerce(other)
        return SymFunc(self.basis, {k: v * c for k, v in self.coeffs.items()}, self.alphabet)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        if self.alphabet != other.alphabet:
            return False
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, self.alphabet, tuple(self.items())))

    def map_coeffs(self, fn):
        return SymFunc(self.basis, {k: fn(v) for k, v in self.coeffs.items()}, self.alphabet)

    def substitute(self, **images):
        return self.map_coeffs(lambda c: c.substitute(**images))

    def convert(self, basis):
        return convert(self, basis)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"SymFunc({serialize(self)!r})"

    def pretty(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in self.items():
            name = f"{self.basis}[{','.join(map(str, lam))}]"
            cs = str(c)
            if c == 1:
                parts.append(name)
            elif c.is_poly() and len(c.num) == 1 and c.num.leading_sign() > 0:
                parts.append(f"{cs}*{name}")
            else:
                parts.append(f"({cs})*{name}")
        return " + ".join(parts)


def _part_key(lam):
    # graded, then the order of partitions_of
    return (sum(lam), tuple(-x for x in lam))


def serialize(f):
    body = ", ".join(f"[{','.join(map(str, lam))}]: {c}" for lam, c in f.items())
    return f"{f.basis}:{f.alphabet}:{{{body}}}"


_ENTRY_RE = re.compile(r"\[([\d,]*)\]:\s*")


def deserialize(text):
    m = re.fullmatch(r"\s*(\w+):(\w+):\{(.*)\}\s*", text, re.S)
    if not m:
        raise ParseError(f"not a serialized symmetric function: {text[:40]!r}")
    basis, alphabet, body = m.groups()
    coeffs = {}
    marks = list(_ENTRY_RE.finditer(body))
    for idx, em in enumerate(marks):
        end = marks[idx + 1].start() if idx + 1 < len(marks) else len(body)
        chunk = body[em.end():end].strip().rstrip(",").strip()
        lam = tuple(int(x) for x in em.group(1).split(",") if x)
        coeffs[lam] = QtRat.parse(chunk)
    return SymFunc(basis, coeffs, alphabet)


# ----------------------------------------------------------- constructors

def _mult_key(n):
    # an integer n names the one-part partition; a sequence names a product
    if isinstance(n, int):
        return (n,) if n else ()
    return sort_partition(n)


def e(n, alphabet="x"):
    return SymFunc("e", {_mult_key(n): 1}, alphabet)


def h(n, alphabet="x"):
    return SymFunc("h", {_mult_key(n): 1}, alphabet)


def p(n, alphabet="x"):
    return SymFunc("p", {_mult_key(n): 1}, alphabet)


def s(lam, alphabet="x"):
    return SymFunc("s", {tuple(lam): 1}, alphabet)


def m(lam, alphabet="x"):
    return SymFunc("m", {tuple(lam): 1}, alphabet)


def basis_elt(basis, lam, alphabet="x"):
    return SymFunc(basis, {tuple(lam): 1}, alphabet)


# ---------------------------------------------------------------- convert

def _to_p(f):
    if f.basis == "p":
        return f
    if f.basis == "H":
        raise UnsupportedBasis("the H basis is converted by the macdonald module")
    acc = {}
    for lam, c in f.coeffs.items():
        n = sum(lam)
        if f.basis in _HATS:
            row = to_p_matrix(_HATS[f.basis], n)[lam]
            for rho, fr in row.items():
                acc.setdefault(rho, []).append(_scale(c, fr) / _pk_factor(rho))
        else:
            for rho, fr in to_p_matrix(f.basis, n)[lam].items():
                acc.setdefault(rho, []).append(_scale(c, fr))
    return SymFunc("p", {rho: rat_sum(v) for rho, v in acc.items()}, f.alphabet)


def _from_p(f, basis):
    if basis == "p":
        return f
    acc = {}
    for rho, c in f.coeffs.items():
        n = sum(rho)
        if basis in _HATS:
            c = c * _pk_factor(rho)
            row = from_p_matrix(_HATS[basis], n)[rho]
        else:
            row = from_p_matrix(basis, n)[rho]
        for lam, fr in row.items():
            acc.setdefault(lam, []).append(_scale(c, fr))
    return SymFunc(basis, {lam: rat_sum(v) for lam, v in acc.items()}, f.alphabet)


def convert(f, target):
    """Same element written in another basis (classical bases and hat bases)."""
    if target not in BASES or target == "H":
        raise UnsupportedBasis(target)
    if f.basis == target:
        return f
    if f.basis == "H":
        raise UnsupportedBasis("the H basis is converted by the macdonald module")
    if f.basis in CLASSICAL and target in CLASSICAL and f.basis != "p" and target != "p":
        acc = {}
        for lam, c in f.coeffs.items():
            for mu, fr in transition(f.basis, target, sum(lam))[lam].items():
                acc.setdefault(mu, []).append(_scale(c, fr))
        return SymFunc(target, {mu: rat_sum(v) for mu, v in acc.items()}, f.alphabet)
    return _from_p(_to_p(f), target)


# ---------------------------------------------------------------- products

def product(f, g):
    f._check(g)
    fp, gp = _to_p(f), _to_p(g)
    acc = {}
    for a, c in fp.coeffs.items():
        for b, d in gp.coeffs.items():
            key = sort_partition(a + b)
            acc.setdefault(key, []).append(c * d)
    out = SymFunc("p", {k: rat_sum(v) for k, v in acc.items()}, f.alphabet)
    target = f.basis if f.basis == g.basis else "s"
    if target == "H":
        target = "s"
    return convert(out, target)


_DUAL = {"s": "s", "h": "m", "m": "h", "e": "f", "f": "e"}


def hall(f, g):
    """Hall scalar product."""
    f._check(g)
    if f.basis == "p" or f.basis not in _DUAL:
        fp, gp = _to_p(f), _to_p(g)
        return rat_sum(c * gp[rho] * z_value(rho) for rho, c in fp.coeffs.items() if rho in gp.coeffs)
    gd = convert(g, _DUAL[f.basis])
    return rat_sum(c * gd.coeffs[lam] for lam, c in f.coeffs.items() if lam in gd.coeffs)


@lru_cache(maxsize=None)
def _star_weight(rho):
    out = QtPoly.const((-1) ** (sum(rho) - len(rho)) * z_value(rho))
    for r in rho:
        out = out * (1 - q ** r) * (1 - t ** r)
    return out


def star_inner(f, g):
    """<p_mu, p_lam>_* = delta (-1)^(n - l(mu)) z_mu p_mu[(1-q)(1-t)]."""
    f._check(g)
    fp, gp = _to_p(f), _to_p(g)
    return rat_sum(c * gp.coeffs[rho] * _star_weight(rho)
                   for rho, c in fp.coeffs.items() if rho in gp.coeffs)


def omega(f):
    """The involution sending s_lam to s_lam'."""
    b = f.basis
    if b == "p":
        return SymFunc("p", {r: c * (-1) ** (sum(r) - len(r)) for r, c in f.coeffs.items()}, f.alphabet)
    if b == "s":
        return SymFunc("s", {conjugate(l): c for l, c in f.coeffs.items()}, f.alphabet)
    swap = {"e": "h", "h": "e", "m": "f", "f": "m"}
    if b in swap:
        return SymFunc(swap[b], dict(f.coeffs), f.alphabet)
    return convert(omega(_to_p(f)), b) if b in _HATS else omega(_to_p(f))


@lru_cache(maxsize=None)
def _e_times_s(a, nu):
    return dict(product(e(a), s(nu)).coeffs) if a else {nu: QtRat.coerce(1)}


def skew_e(f, a):
    """e_a^perp: the Hall adjoint of multiplication by e_a."""
    fs = convert(f, "s")
    acc = {}
    for d in fs.degrees():
        if d < a:
            continue
        for nu in partitions_of(d - a):
            img = _e_times_s(a, nu)
            terms = [c * img[lam] for lam, c in fs.coeffs.items() if sum(lam) == d and lam in img]
            if terms:
                acc[nu] = rat_sum(terms)
    out = SymFunc("s", acc, f.alphabet)
    return convert(out, f.basis) if f.basis in CLASSICAL else out


# --------------------------------------------------------------- plethysm

def _adams(c, k):
    """c(q^k, t^k, u^k)."""
    if k == 1 or c.num.is_constant() and c.den.is_constant():
        return c
    return _adams_cached(c, k)


@lru_cache(maxsize=4096)
def _adams_cached(c, k):
    return c.substitute(q=q ** k, t=t ** k, u=u ** k)


class Scalar:
    """Scalar alphabet a + eps*b where eps is the formal sign alphabet (eps^2 = 1)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = QtRat.coerce(a)
        self.b = QtRat.coerce(b)

    def pk(self, k):
        val = _adams(self.a, k)
        if not self.b.is_zero():
            val = val + _adams(self.b, k) * (-1) ** k
        return val

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def __add__(self, o):
        return Scalar(self.a + o.a, self.b + o.b)

    def __neg__(self):
        return Scalar(-self.a, -self.b)

    def __mul__(self, o):
        return Scalar(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a)

    def divide(self, d):
        if not d.b.is_zero() or d.a.is_zero():
            raise UnsupportedExpression("division is only by nonzero eps-free scalars")
        return Scalar(self.a / d.a, self.b / d.a)


class Alphabet:
    """Plethystic expression  cx * X + c0  with scalar alphabets cx and c0."""

    __slots__ = ("cx", "c0")

    def __init__(self, cx=None, c0=None):
        self.cx = cx if cx is not None else Scalar()
        self.c0 = c0 if c0 is not None else Scalar()

    @staticmethod
    def lift(v):
        if isinstance(v, Alphabet):
            return v
        if isinstance(v, Scalar):
            return Alphabet(None, v)
        return Alphabet(None, Scalar(v))

    def has_x(self):
        return not self.cx.is_zero()

    def __add__(self, o):
        o = Alphabet.lift(o)
        return Alphabet(self.cx + o.cx, self.c0 + o.c0)

    __radd__ = __add__

    def __neg__(self):
        return Alphabet(-self.cx, -self.c0)

    def __sub__(self, o):
        return self + (-Alphabet.lift(o))

    def __rsub__(self, o):
        return Alphabet.lift(o) - self

    def __mul__(self, o):
        o = Alphabet.lift(o)
        if self.has_x() and o.has_x():
            raise UnsupportedExpression("products of two alphabets containing X")
        return Alphabet(self.cx * o.c0 + self.c0 * o.cx, self.c0 * o.c0)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = Alphabet.lift(o)
        if o.has_x():
            raise UnsupportedExpression("division by an alphabet containing X")
        return Alphabet(self.cx.divide(o.c0), self.c0.divide(o.c0))

    def pk(self, k):
        """p_k[E] as a pair (coefficient of p_k(X), scalar part)."""
        return self.cx.pk(k), self.c0.pk(k)


X = Alphabet(Scalar(1), None)
EPS = Alphabet(None, Scalar(0, 1))


def alpha(v):
    """Scalar alphabet from a polynomial, rational function or integer."""
    return Alphabet(None, Scalar(v))


def plethysm(f, E):
    """f[E] for E in the supported grammar; the result is in the p basis."""
    E = Alphabet.lift(E)
    fp = _to_p(f)
    cache = {}

    def pk(k):
        if k not in cache:
            cache[k] = E.pk(k)
        return cache[k]

    acc = {}
    for rho, c in fp.coeffs.items():
        # expand prod_i (A_i p_{rho_i} + B_i)
        terms = {(): c}
        for r in rho:
            A, Bk = pk(r)
            new = {}
            for key, val in terms.items():
                if not A.is_zero():
                    k2 = key + (r,)
                    new.setdefault(k2, []).append(val * A)
                if not Bk.is_zero():
                    new.setdefault(key, []).append(val * Bk)
            terms = {k: rat_sum(v) for k, v in new.items()}
        for key, val in terms.items():
            acc.setdefault(sort_partition(key), []).append(val)
    return SymFunc("p", {k: rat_sum(v) for k, v in acc.items()}, f.alphabet)


def evaluate_at(f, E):
    """f[E] for a scalar alphabet E; returns a QtRat."""
    E = Alphabet.lift(E)
    if E.has_x():
        raise UnsupportedExpression("evaluation point contains X")
    res = plethysm(f, E)
    return res.coeffs.get((), QtRat.coerce(0))
