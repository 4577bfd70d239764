"""Modified Macdonald polynomials, their eigenoperators and the Super Nabla operator.

H~_mu is built from the Haglund-Haiman-Loehr filling statistics in the
monomial basis, then validated against H~_mu[1] = 1, the [1 - u] product
formula, star-orthogonality and the small known tables before it is used or
cached.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import tempfile
from functools import lru_cache
from pathlib import Path

from . import __version__
from .ring import ONE, ZERO, M, QtPoly, QtRat, PoleAtSpecialization, q, rat_sum, t, u
from .symcore import (
    CLASSICAL, EPS, NotHomogeneous, SymFunc, alpha, cell_stats, conjugate, convert, deserialize,
    evaluate_at, partitions_of, serialize, sort_partition, star_inner, transition,
    B_mu, T_mu, Pi_mu, w_mu, _DUAL,
)

CACHE_FORMAT = 1
CACHE_ENV = "SUPERNABLA_CACHE"


class ValidationError(AssertionError):
    pass


class SlotOutOfRange(IndexError):
    pass


class DegreeMismatch(ValueError):
    pass


# ------------------------------------------------------------ HHL fillings

def _hhl_data(mu):
    cs = [(i, j) for j, p in enumerate(mu) for i in range(p)]
    idx = {c: k for k, c in enumerate(cs)}
    st = cell_stats(mu)
    below = [idx.get((i, j - 1)) if j > 0 else None for i, j in cs]
    # reading order: top row first, left to right
    order = sorted(range(len(cs)), key=lambda k: (-cs[k][1], cs[k][0]))
    pos = {k: r for r, k in enumerate(order)}
    attacks = []
    for a in range(len(cs)):
        for b in range(len(cs)):
            if pos[a] >= pos[b]:
                continue
            (ia, ja), (ib, jb) = cs[a], cs[b]
            if ja == jb or (ja == jb + 1 and ia > ib):
                attacks.append((a, b))
    arms = [st["arm"][c] for c in cs]
    legs = [st["leg"][c] for c in cs]
    return cs, below, attacks, arms, legs


def _multiset_perms(content):
    """Distinct arrangements of a multiset given as a sorted tuple."""
    items = sorted(content)
    n = len(items)
    counts = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    out = [0] * n

    def rec(k):
        if k == n:
            yield tuple(out)
            return
        for x in keys:
            if counts[x]:
                counts[x] -= 1
                out[k] = x
                yield from rec(k + 1)
                counts[x] += 1

    yield from rec(0)


def htilde_monomial(mu):
    """H~_mu in the monomial basis via inv/maj statistics of fillings."""
    mu = tuple(mu)
    n = sum(mu)
    if n == 0:
        return SymFunc("m", {(): 1})
    cs, below, attacks, arms, legs = _hhl_data(mu)
    coeffs = {}
    for lam in partitions_of(n):
        content = tuple(v for v, mult in enumerate(lam, start=1) for _ in range(mult))
        acc = {}
        for sigma in _multiset_perms(content):
            maj = 0
            armsum = 0
            for k, b in enumerate(below):
                if b is not None and sigma[k] > sigma[b]:
                    maj += legs[k] + 1
                    armsum += arms[k]
            inv = sum(1 for a, b in attacks if sigma[a] > sigma[b]) - armsum
            key = (inv, maj, 0)
            acc[key] = acc.get(key, 0) + 1
        coeffs[lam] = QtPoly(acc)
    return SymFunc("m", coeffs)


# ------------------------------------------------------------------- table

class MacdonaldTable:
    """Validated H~_mu for all mu of one degree, in the s and m bases."""

    def __init__(self, n, schur, monomial):
        self.n = n
        self.schur = schur
        self.monomial = monomial
        self._star = None
        self._norm = None

    @classmethod
    def compute(cls, n):
        monomial = {mu: htilde_monomial(mu) for mu in partitions_of(n)}
        schur = {mu: convert(f, "s") for mu, f in monomial.items()}
        table = cls(n, schur, monomial)
        table.validate()
        return table

    def basis(self, which):
        if which == "s":
            return self.schur
        if which == "m":
            return self.monomial
        return {mu: convert(f, which) for mu, f in self.schur.items()}

    def star_matrix(self):
        """S[mu][lam] = <s_lam, H~_mu>_*, polynomial entries."""
        if self._star is None:
            n = self.n
            self._star = {mu: {lam: star_inner(SymFunc("s", {lam: 1}), H)
                               for lam in partitions_of(n)}
                          for mu, H in self.schur.items()}
        return self._star

    def norms(self):
        if self._norm is None:
            S = self.star_matrix()
            self._norm = {mu: rat_sum(c * S[mu][lam] for lam, c in H.coeffs.items())
                          for mu, H in self.schur.items()}
        return self._norm

    def validate(self):
        n = self.n
        for mu in partitions_of(n):
            H = self.schur[mu]
            if any(not c.is_poly() for c in H.coeffs.values()):
                raise ValidationError(f"H~{mu} has non-polynomial coefficients")
            if convert(H, "m") != self.monomial[mu]:
                raise ValidationError(f"H~{mu}: s and m forms disagree")
            if n and evaluate_at(H, alpha(1)) != 1:
                raise ValidationError(f"H~{mu}[1] != 1")
            expected = ONE
            for i, j in cell_stats(mu)["cells"]:
                expected = expected * (1 - q ** i * t ** j * u)
            if evaluate_at(H, 1 - alpha(u)) != expected:
                raise ValidationError(f"H~{mu}[1-u] product formula fails")
        if n:
            S = self.star_matrix()
            for mu in partitions_of(n):
                for nu in partitions_of(n):
                    val = rat_sum(c * S[nu][lam] for lam, c in self.schur[mu].coeffs.items())
                    if mu != nu and not val.is_zero():
                        raise ValidationError(f"<H~{mu}, H~{nu}>_* != 0")
                    if mu == nu and val != w_mu(mu):
                        raise ValidationError(f"<H~{mu}, H~{mu}>_* != w_mu")
        for mu, H in KNOWN_TABLES.get(n, {}).items():
            if self.schur[mu] != H:
                raise ValidationError(f"H~{mu} disagrees with the reference table")

    # serialization
    def to_json(self):
        body = {",".join(map(str, mu)): {"s": serialize(self.schur[mu]),
                                         "m": serialize(self.monomial[mu])}
                for mu in partitions_of(self.n)}
        blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
        doc = {
            "format": CACHE_FORMAT,
            "producer": __version__,
            "degree": self.n,
            "sha256": hashlib.sha256(blob.encode()).hexdigest(),
            "table": body,
        }
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        if doc.get("format") != CACHE_FORMAT or doc.get("producer") != __version__:
            raise ValidationError("cache entry from another format or producer version")
        body = doc["table"]
        blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
        if hashlib.sha256(blob.encode()).hexdigest() != doc["sha256"]:
            raise ValidationError("cache entry content hash mismatch")
        n = doc["degree"]
        schur, monomial = {}, {}
        for key, forms in body.items():
            mu = tuple(int(x) for x in key.split(",") if x)
            schur[mu] = deserialize(forms["s"])
            monomial[mu] = deserialize(forms["m"])
        if set(schur) != set(partitions_of(n)):
            raise ValidationError("cache entry does not cover all partitions")
        table = cls(n, schur, monomial)
        table.validate()
        return table


def _s(d):
    return SymFunc("s", d)


KNOWN_TABLES = {
    1: {(1,): _s({(1,): 1})},
    2: {(2,): _s({(2,): 1, (1, 1): q}), (1, 1): _s({(2,): 1, (1, 1): t})},
    3: {
        (3,): _s({(3,): 1, (2, 1): q + q ** 2, (1, 1, 1): q ** 3}),
        (2, 1): _s({(3,): 1, (2, 1): q + t, (1, 1, 1): q * t}),
        (1, 1, 1): _s({(3,): 1, (2, 1): t + t ** 2, (1, 1, 1): t ** 3}),
    },
}


def cache_dir():
    d = os.environ.get(CACHE_ENV)
    if d:
        return Path(d)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "supernabla"


def _cache_path(n):
    return cache_dir() / f"htilde-v{CACHE_FORMAT}-n{n}.json"


_TABLES = {}


def table(n, use_disk=True):
    """The validated table of degree n, from memory, disk cache or fresh computation."""
    if n in _TABLES:
        return _TABLES[n]
    tab = None
    path = _cache_path(n)
    if use_disk and path.exists():
        try:
            tab = MacdonaldTable.from_json(path.read_text())
        except (ValidationError, ValueError, KeyError):
            tab = None
    if tab is None:
        tab = MacdonaldTable.compute(n)
        if use_disk:
            write_cache(tab)
    _TABLES[n] = tab
    return tab


def write_cache(tab):
    path = _cache_path(tab.n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(tab.to_json())
        os.replace(tmp, path)
    except OSError:
        pass


def htilde(mu, basis="s"):
    mu = tuple(mu)
    tab = table(sum(mu))
    if basis == "m":
        return tab.monomial[mu]
    return tab.schur[mu] if basis == "s" else convert(tab.schur[mu], basis)


def htilde_eval(mu, point):
    """H~_mu[point] for a scalar plethystic point."""
    return evaluate_at(htilde(mu), point).as_poly()


# ---------------------------------------------------------- eigen-expansion

def eigen_expand(f):
    """Coefficients c_mu with f = sum c_mu H~_mu."""
    if f.basis == "H":
        return dict(f.coeffs)
    if not f.is_homogeneous():
        raise NotHomogeneous(f"degrees {f.degrees()}")
    if f.is_zero():
        return {}
    n = f.degree()
    if n == 0:
        return {(): f.coeffs[()]}
    tab = table(n)
    fs = convert(f, "s")
    S = tab.star_matrix()
    W = tab.norms()
    out = {}
    for mu in partitions_of(n):
        val = rat_sum(c * S[mu][lam] for lam, c in fs.coeffs.items())
        if not val.is_zero():
            out[mu] = val / W[mu]
    return out


def from_eigen(coeffs, basis="s", n=None):
    """sum c_mu H~_mu written in a classical basis."""
    if not coeffs:
        return SymFunc(basis, {})
    n = sum(next(iter(coeffs))) if n is None else n
    if n == 0:
        return SymFunc(basis, {(): coeffs.get((), 0)})
    forms = table(n).basis(basis)
    acc = {}
    for mu, c in coeffs.items():
        for lam, k in forms[mu].coeffs.items():
            acc.setdefault(lam, []).append(c * k)
    return SymFunc(basis, {lam: rat_sum(v) for lam, v in acc.items()})


def to_basis(f, basis="s"):
    """Convert any SymFunc, including the H~ basis, into a classical basis."""
    if f.basis == "H":
        out = from_eigen(f.coeffs, basis)
        out.alphabet = f.alphabet
        return out
    return convert(f, basis)


def eigenvalue(op, mu):
    mu = tuple(mu)
    if op == "nabla":
        return T_mu(mu) if mu else ONE
    if op == "pi":
        return Pi_mu(mu)
    if op == "xi":
        return M * B_mu(mu) * Pi_mu(mu)
    if isinstance(op, tuple) and op[0] == "delta":
        return evaluate_at(op[1], alpha(B_mu(mu)))
    raise ValueError(f"unknown operator {op!r}")


def star(f):
    """F* = F[X/M]."""
    from .symcore import X, plethysm
    return convert(plethysm(f, X / alpha(M)), "s")


def apply_eigenop(f, op, expect_poly=False):
    """Apply nabla, ('delta', F), pi or xi.  Xi(F) = M Delta_{e1} Pi F*."""
    src = star(f) if op == "xi" else f
    coeffs = eigen_expand(src)
    if not coeffs:
        return SymFunc("s", {}, f.alphabet)
    scaled = {mu: c * eigenvalue(op, mu) for mu, c in coeffs.items()}
    out = from_eigen(scaled, "s", n=f.degree())
    out.alphabet = f.alphabet
    if expect_poly:
        bad = [lam for lam, c in out.coeffs.items() if not c.is_poly()]
        if bad:
            raise ValidationError(f"operator image retains a denominator at s{bad[0]}")
    return out


def nabla(f, **kw):
    return apply_eigenop(f, "nabla", **kw)


def delta(F, f, **kw):
    return apply_eigenop(f, ("delta", F), **kw)


def Pi(f, **kw):
    return apply_eigenop(f, "pi", **kw)


def Xi(f, **kw):
    return apply_eigenop(f, "xi", **kw)


# ------------------------------------------------------------- tensors

def _vec_key(vec):
    return tuple((sum(l), tuple(-x for x in l)) for l in vec)


def canonical(vec):
    return tuple(sorted(vec, key=lambda l: (sum(l), tuple(-x for x in l))))


class TensorSymFunc:
    """Map from partition vectors (lam0, ..., lamk) to QtRat.

    Slot 0 carries the alphabet x, slot i the alphabet y_i.  When ``symmetric``
    is set only slot-sorted representatives are stored.
    """

    def __init__(self, arity, bases, coeffs, symmetric=False, names=None):
        self.arity = arity
        self.bases = tuple(bases)
        if len(self.bases) != arity:
            raise ValueError("one basis per slot")
        if symmetric and len(set(self.bases)) > 1:
            raise ValueError("symmetric storage needs equal slot bases")
        self.symmetric = symmetric
        self.names = tuple(names) if names else default_names(arity)
        d = {}
        for vec, c in coeffs.items():
            vec = tuple(tuple(l) for l in vec)
            if symmetric:
                vec = canonical(vec)
            c = QtRat.coerce(c)
            if not c.is_zero():
                d[vec] = c
        self.coeffs = d

    def degree(self):
        for vec in self.coeffs:
            return sum(vec[0])
        return 0

    def __getitem__(self, vec):
        vec = tuple(tuple(l) for l in vec)
        if self.symmetric:
            vec = canonical(vec)
        return self.coeffs.get(vec, QtRat.coerce(0))

    def full(self):
        """All coefficients, with the symmetric orbit reconstructed."""
        if not self.symmetric:
            return dict(self.coeffs)
        out = {}
        for vec, c in self.coeffs.items():
            for perm in set(itertools.permutations(vec)):
                out[perm] = c
        return out

    def items(self):
        return sorted(self.full().items(), key=lambda kv: _vec_key(kv[0]))

    def map_coeffs(self, fn):
        return TensorSymFunc(self.arity, self.bases, {k: fn(v) for k, v in self.coeffs.items()},
                             self.symmetric, self.names)

    def substitute(self, **images):
        return self.map_coeffs(lambda c: c.substitute(**images))

    def unsymmetrized(self):
        return TensorSymFunc(self.arity, self.bases, self.full(), False, self.names)

    def convert_slot(self, slot, basis):
        if self.bases[slot] == basis:
            return self
        src = self.bases[slot]
        acc = {}
        rows = {}
        for vec, c in self.full().items():
            lam = vec[slot]
            if lam not in rows:
                if src in CLASSICAL and basis in CLASSICAL:
                    rows[lam] = transition(src, basis, sum(lam))[lam]
                else:
                    # hat bases carry q-rational transition entries
                    rows[lam] = convert(SymFunc(src, {lam: 1}), basis).coeffs
            for mu, fr in rows[lam].items():
                key = vec[:slot] + (mu,) + vec[slot + 1:]
                acc.setdefault(key, []).append(c * QtRat.coerce(fr))
        bases = self.bases[:slot] + (basis,) + self.bases[slot + 1:]
        return TensorSymFunc(self.arity, bases, {k: rat_sum(v) for k, v in acc.items()},
                             False, self.names)

    def convert_all(self, basis):
        """Every slot to ``basis``; symmetric storage is kept when it was present."""
        out = self
        for slot in range(self.arity):
            out = out.convert_slot(slot, basis)
        if self.symmetric:
            out = TensorSymFunc(out.arity, out.bases, out.coeffs, True, self.names)
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorSymFunc):
            return NotImplemented
        if self.arity != other.arity:
            return False
        if self.bases != other.bases:
            other = other.convert_to(self.bases)
        return self.full() == other.full()

    def convert_to(self, bases):
        out = self
        for slot, b in enumerate(bases):
            out = out.convert_slot(slot, b)
        return out

    def __add__(self, other):
        if self.bases != other.bases:
            other = other.convert_to(self.bases)
        sym = self.symmetric and other.symmetric
        a = self.coeffs if sym else self.full()
        b = other.coeffs if sym else other.full()
        d = dict(a)
        for k, v in b.items():
            d[k] = d[k] + v if k in d else v
        return TensorSymFunc(self.arity, self.bases, d, sym, self.names)

    def __sub__(self, other):
        return self + other.map_coeffs(lambda c: -c)

    def __mul__(self, c):
        c = QtRat.coerce(c)
        return self.map_coeffs(lambda v: v * c)

    __rmul__ = __mul__

    def is_zero(self):
        return not self.coeffs

    def check_symmetry(self):
        full = self.full()
        for vec, c in full.items():
            for perm in itertools.permutations(vec):
                if full.get(perm, QtRat.coerce(0)) != c:
                    return False
        return True

    def pretty(self):
        lines = []
        for vec, c in self.items():
            label = " ".join(f"{b}[{','.join(map(str, l))}]({a})"
                             for b, l, a in zip(self.bases, vec, self.names))
            lines.append(f"{label} : {c}")
        return "\n".join(lines) if lines else "0"

    def serialize(self):
        rows = [f"tensor:{','.join(self.bases)}:{','.join(self.names)}"]
        for vec, c in self.items():
            rows.append("|".join(",".join(map(str, l)) for l in vec) + " : " + str(c))
        return "\n".join(rows)


def default_names(arity):
    if arity == 1:
        return ("x",)
    if arity == 2:
        return ("x", "y")
    return ("x",) + tuple(f"y{i}" for i in range(1, arity))


def super_nabla(f, k, basis="s"):
    """sum_mu c_mu(f) H~_mu(x) H~_mu(y_1) ... H~_mu(y_k), expanded per slot in ``basis``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    coeffs = eigen_expand(f)
    n = f.degree() if not f.is_zero() else 0
    if n == 0:
        c = coeffs.get((), QtRat.coerce(0))
        return TensorSymFunc(k + 1, (basis,) * (k + 1), {((),) * (k + 1): c}, True)
    forms = table(n).basis(basis)
    parts = partitions_of(n)
    out = {}
    for vec in itertools.combinations_with_replacement(parts, k + 1):
        terms = []
        for mu, c in coeffs.items():
            F = forms[mu].coeffs
            prod = ONE
            for lam in vec:
                if lam not in F:
                    prod = None
                    break
                prod = prod * F[lam].num
            if prod is not None:
                terms.append(c * prod)
        if terms:
            out[vec] = rat_sum(terms)
    return TensorSymFunc(k + 1, (basis,) * (k + 1), out, True)


def pair_slot(T, G, slot):
    """Hall-pair one slot against G and drop it."""
    if not 0 <= slot < T.arity:
        raise SlotOutOfRange(slot)
    if not G.is_zero() and G.degree() != T.degree():
        raise DegreeMismatch(f"{G.degree()} vs {T.degree()}")
    basis = T.bases[slot]
    dual = _DUAL.get(basis)
    Gd = convert(G, dual) if dual else convert(G, "p")
    acc = {}
    for vec, c in T.full().items():
        lam = vec[slot]
        if basis == "p":
            from .symcore import z_value
            val = Gd[lam] * z_value(lam)
        else:
            val = Gd[lam]
        if val.is_zero():
            continue
        key = vec[:slot] + vec[slot + 1:]
        acc.setdefault(key, []).append(c * val)
    bases = T.bases[:slot] + T.bases[slot + 1:]
    names = T.names[:slot] + T.names[slot + 1:]
    sym = T.symmetric
    return TensorSymFunc(T.arity - 1, bases, {k: rat_sum(v) for k, v in acc.items()}, sym, names)


def evaluate_slot(T, slot, point):
    """Replace the alphabet of one slot by a scalar plethystic point."""
    basis = T.bases[slot]
    acc = {}
    cache = {}
    for vec, c in T.full().items():
        lam = vec[slot]
        if lam not in cache:
            cache[lam] = evaluate_at(SymFunc(basis, {lam: 1}), point)
        val = cache[lam]
        if val.is_zero():
            continue
        key = vec[:slot] + vec[slot + 1:]
        acc.setdefault(key, []).append(c * val)
    bases = T.bases[:slot] + T.bases[slot + 1:]
    names = T.names[:slot] + T.names[slot + 1:]
    return TensorSymFunc(T.arity - 1, bases, {k: rat_sum(v) for k, v in acc.items()},
                         T.symmetric, names)


def as_symfunc(T):
    """A one-slot tensor as an ordinary SymFunc."""
    if T.arity != 1:
        raise ValueError("arity must be 1")
    return SymFunc(T.bases[0], {vec[0]: c for vec, c in T.full().items()})


def from_symfunc(f):
    return TensorSymFunc(1, (f.basis,), {(lam,): c for lam, c in f.coeffs.items()}, True)


# -------------------------------------------------------- specializations

SPECIALIZATIONS = ("t=1", "t=1/q", "t=0", "q=0,t=1", "q=t=1", "shift")


def specialize_t(obj, mode, qv=None, tv=None):
    """Specialize a SymFunc or TensorSymFunc; raises PoleAtSpecialization on poles.

    ``mode`` is one of t=1, t=1/q, t=0, q=0,t=1, q=t=1, shift (q -> q+1, t -> t+1)
    or numeric (with qv, tv).
    """
    if mode == "t=1":
        images = {"t": 1}
    elif mode == "t=1/q":
        images = {"t": q ** -1}
    elif mode == "t=0":
        images = {"t": 0}
    elif mode == "q=0,t=1":
        images = {"q": 0, "t": 1}
    elif mode == "q=t=1":
        images = {"q": 1, "t": 1}
    elif mode == "shift":
        images = {"q": q + 1, "t": t + 1}
    elif mode == "numeric":
        images = {"q": qv, "t": tv}
    else:
        raise ValueError(f"unknown specialization {mode!r}")
    return obj.substitute(**images)


def hat_form(f, basis="hh"):
    """A t=1 specialized SymFunc in the hat basis h^_mu = h_mu[X/(1-q)] (or s^)."""
    return convert(f, basis)


def hat_at_one(mu, which="h"):
    """h^_mu(1) or s^_mu(1), i.e. h_mu[1/(1-q)] (resp. s_mu)."""
    from .symcore import basis_elt
    return evaluate_at(basis_elt(which, mu), alpha(QtRat(1, 1 - q)))


# ------------------------------------------------------------- E_v family

def _nz(x):
    return ONE if x.is_zero() else x


def _wfun(x, y):
    return QtRat(_nz(x - y) * _nz(x - q * t * y), _nz(x - q * y) * _nz(x - t * y))


def standard_tableaux(mu):
    """SYT of shape mu as dicts cell -> label, rows increasing rightward and upward."""
    mu = tuple(mu)
    n = sum(mu)
    out = []

    def rec(shape, k, acc):
        if k == 0:
            out.append(dict(acc))
            return
        for j, p in enumerate(shape):
            if p and (j + 1 == len(shape) or shape[j + 1] < p):
                cell = (p - 1, j)
                acc[cell] = k
                new = list(shape)
                new[j] -= 1
                rec(tuple(new), k - 1, acc)
                del acc[cell]

    rec(mu, n, {})
    return out


def omega_weight(mu, theta, v):
    """Omega_mu(theta, v) with vanishing factors replaced by 1."""
    z = {c: q ** c[0] * t ** c[1] for c in theta}
    by_label = {lab: c for c, lab in theta.items()}
    val = QtRat.coerce(1)
    for b, lb in theta.items():
        for c, lc in theta.items():
            if lb > lc:
                val = val * _wfun(z[b], z[c])
    for lab in range(2, len(theta) + 1):
        b, c = by_label[lab], by_label[lab - 1]
        val = val * QtRat(z[b], _nz(z[b] - q * t * z[c]))
    for c, lc in theta.items():
        if lc != 1:
            val = val * QtRat(z[c] ** v[lc - 1], _nz(z[c] - 1))
    return val


def triangular_E(v):
    """sum_mu (sum_theta Omega_mu(theta, v)) H~_mu as a SymFunc in the H~ basis."""
    v = tuple(v)
    n = len(v)
    coeffs = {}
    for mu in partitions_of(n):
        coeffs[mu] = rat_sum(omega_weight(mu, th, v) for th in standard_tableaux(mu))
    return SymFunc("H", coeffs)
