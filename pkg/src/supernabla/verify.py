"""Identity checks and positivity experiments.

Every check computes two sides by separate code paths (eigenoperators and
Macdonald tables on one side, path or tableau enumeration or a closed formula
on the other) and returns a CheckReport.  A mismatch carries the first
differing coefficient as its witness.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import pathcomb as pc
from .macdonald import (
    Pi, TensorSymFunc, Xi, delta, eigen_expand, pair_slot, specialize_t, star, super_nabla,
    table,
)
from .ring import ONE, M, QtPoly, QtRat, q, qpoch, rat_sum, t
from .symcore import (
    SymFunc, conjugate, convert, e, evaluate_at, alpha, h, hooks, m, n_stat, omega, p, partitions_of,
    product, s, sort_partition, w_mu, z_value,
)
from .weights import content_vector


class BoundExceeded(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


class NegativeResidue(ValueError):
    pass


MATCH, MISMATCH, POSITIVE, NONPOSITIVE = "match", "mismatch", "positive", "nonpositive"


@dataclass
class CheckReport:
    check: str
    params: dict
    verdict: str
    witness: object = None
    runtime: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.verdict in (MATCH, POSITIVE)

    def to_record(self):
        """JSON-ready dict; runtime is left out so records are reproducible."""
        return {
            "check": self.check,
            "params": {k: _plain(v) for k, v in self.params.items()},
            "verdict": self.verdict,
            "witness": _plain(self.witness),
            "details": {k: _plain(v) for k, v in self.details.items()},
        }

    def to_json(self):
        return json.dumps(self.to_record(), sort_keys=True)

    def summary(self):
        ps = " ".join(f"{k}={_plain(v)}" for k, v in self.params.items())
        line = f"{self.check:<18} {ps:<32} {self.verdict}"
        if self.witness is not None:
            line += f"  witness={_plain(self.witness)}"
        return line


def _plain(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(_plain(k)): _plain(x) for k, x in v.items()}
    return str(v)


def _compare(lhs, rhs):
    """(equal, witness); the witness is the first key (in sorted order) that differs."""
    zero = QtRat.coerce(0)
    keys = sorted(set(lhs) | set(rhs), key=repr)
    for key in keys:
        a = QtRat.coerce(lhs.get(key, zero))
        b = QtRat.coerce(rhs.get(key, zero))
        if a != b:
            return False, {"key": key, "symbolic": str(a), "combinatorial": str(b)}
    return True, None


def _report(check, params, lhs, rhs, t0, details=None):
    ok, wit = _compare(lhs, rhs)
    return CheckReport(check, params, MATCH if ok else MISMATCH, wit, time.time() - t0,
                       details or {})


def _poly_from_counts(d):
    return {k: QtPoly({(e_, 0, 0): c for e_, c in v.items() if c}) for k, v in d.items()}


def _add(acc, key, exp, c=1):
    inner = acc.setdefault(key, {})
    inner[exp] = inner.get(exp, 0) + c


# ------------------------------------------------------------ bounds

DEFAULT_BOUNDS = {"t1": ((4, 2), (5, 1)), "power": ((3, 2), (4, 1)), "single": 6}


def _check_bound(kind, n, k=None, bounds=None):
    bounds = bounds or DEFAULT_BOUNDS
    if kind == "single":
        if n > bounds["single"]:
            raise BoundExceeded(f"n={n} above {bounds['single']}")
        return
    if not any(n <= bn and k <= bk for bn, bk in bounds[kind]):
        raise BoundExceeded(f"(n,k)=({n},{k}) outside {bounds[kind]}")


# ------------------------------------------------------------ t = 1 theorem

def t1_symbolic(n, k):
    """super_nabla(e_n, k) at t = 1 in the m basis on every slot."""
    return specialize_t(super_nabla(e(n), k, "m"), "t=1").unsymmetrized()


def t1_monomial_sum(n, k):
    acc = {}
    parts = partitions_of(n)
    for lams in itertools.product(parts, repeat=k + 1):
        cont = [content_vector(l) for l in lams]
        for path in pc.enumerate_mld(n, k, k + 1, cont):
            _add(acc, lams, path.area)
    return _poly_from_counts(acc)


def t1_elementary_sum(n, k, lattice=False):
    acc = {}
    for lams in itertools.product(partitions_of(n), repeat=k):
        cont = [content_vector(l) for l in lams]
        for path in pc.enumerate_mld(n, k, k, cont, (lattice,) * k):
            _add(acc, (sort_partition(pc.eta_comp(path)),) + lams, path.area)
    return _poly_from_counts(acc)


def check_t1_theorem(n, k, forms=("monomial", "elementary", "schur"), bounds=None):
    """Super nabla of e_n at t = 1 against multi-labeled Dyck path sums."""
    _check_bound("t1", n, k, bounds)
    t0 = time.time()
    sym_m = t1_symbolic(n, k)
    sym_e = sym_m.convert_slot(0, "e")
    sym_s = sym_e
    for j in range(1, k + 1):
        sym_s = sym_s.convert_slot(j, "s")
    details, first_bad = {}, None
    for form in forms:
        if form == "monomial":
            lhs, rhs = dict(sym_m.full()), t1_monomial_sum(n, k)
        elif form == "elementary":
            lhs, rhs = dict(sym_e.full()), t1_elementary_sum(n, k)
        elif form == "schur":
            lhs, rhs = dict(sym_s.full()), t1_elementary_sum(n, k, lattice=True)
        else:
            raise ValueError(form)
        ok, wit = _compare(lhs, rhs)
        details[form] = MATCH if ok else MISMATCH
        if not ok and first_bad is None:
            first_bad = {"form": form, **wit}
    verdict = MATCH if first_bad is None else MISMATCH
    return CheckReport("t1_theorem", {"n": n, "k": k}, verdict, first_bad, time.time() - t0, details)


# ------------------------------------------------------------ power sums

def power_symbolic(n, k, gamma):
    f = delta(m(gamma), omega(p(n)))
    T = specialize_t(super_nabla(f, k, "m"), "t=1").unsymmetrized()
    return T.convert_slot(0, "e")


def power_marked_sum(n, k, gamma, lattice=False):
    acc = {}
    for lams in itertools.product(partitions_of(n), repeat=k):
        cont = [content_vector(l) for l in lams]
        for mp in pc.enumerate_marked(n, k, gamma, cont, (lattice,) * k if k else None):
            _add(acc, (sort_partition(pc.marked_eta(mp)),) + lams, mp.area)
    return _poly_from_counts(acc)


def square_path_sum(n):
    """sum over square paths ending in E of q^area e_riser."""
    acc = {}
    for S in pc.square_paths(n):
        _add(acc, (sort_partition(pc.riser(S)),), pc.square_area(S))
    return _poly_from_counts(acc)


def check_power_theorem(n, k, gamma, form="elementary", bounds=None):
    """Super nabla of Delta_{m_gamma} omega p_n at t = 1 against marked-return paths.

    ``form='schur'`` compares the y-slots in the Schur basis with lattice-labeled
    paths.  For k = 0 and gamma = 1^n the square-path sum is checked as well.
    """
    gamma = tuple(x for x in gamma if x)
    if not gamma:
        raise pc.EmptyGamma("gamma must be nonempty")
    _check_bound("power", n, k, bounds)
    t0 = time.time()
    sym = power_symbolic(n, k, gamma)
    if form == "schur":
        for j in range(1, k + 1):
            sym = sym.convert_slot(j, "s")
    lhs = dict(sym.full())
    rhs = power_marked_sum(n, k, gamma, lattice=(form == "schur"))
    ok, wit = _compare(lhs, rhs)
    details = {"form": form}
    if k == 0 and gamma == (1,) * n:
        ok2, wit2 = _compare(lhs, square_path_sum(n))
        details["square_paths"] = MATCH if ok2 else MISMATCH
        if ok and not ok2:
            ok, wit = False, {"square_paths": wit2}
    return CheckReport("power_theorem", {"n": n, "k": k, "gamma": gamma, "form": form},
                       MATCH if ok else MISMATCH, wit, time.time() - t0, details)


# ------------------------------------------------------------ Schur in (q, t)

def _swap(c):
    return c.substitute(q=t, t=q)


def schur_qt(a, b):
    """s_(a,b)(q,t) = (qt)^b h_{a-b}(q,t)."""
    hpart = QtPoly({(i, a - b - i, 0): 1 for i in range(a - b + 1)})
    return QtPoly({(b, b, 0): 1}) * hpart


def schur_qt_expand(c):
    """Expansion of a q<->t symmetric polynomial in two-variable Schur polynomials."""
    c = QtRat.coerce(c)
    if not c.is_poly():
        raise NotSymmetric("not a polynomial")
    c = c.as_poly()
    if c.uses("u"):
        raise NotSymmetric("u must not occur")
    if _swap(c) != c:
        raise NotSymmetric(str(c))
    out = {}
    while not c.is_zero():
        (a, b, _), coef = max(c.terms().items(), key=lambda kv: (kv[0][0], kv[0][1]))
        if a < b or b < 0:
            raise NegativeResidue(f"leading exponent ({a},{b})")
        lam = (a, b) if b else ((a,) if a else ())
        out[lam] = out.get(lam, 0) + coef
        c = c - schur_qt(a, b) * coef
    return out


def schur_qt_reconstruct(expansion):
    acc = QtPoly.const(0)
    for lam, c in expansion.items():
        a = lam[0] if lam else 0
        b = lam[1] if len(lam) > 1 else 0
        acc = acc + schur_qt(a, b) * c
    return acc


def format_schur_qt(expansion):
    if not expansion:
        return "0"
    parts = []
    for lam in sorted(expansion, key=lambda l: (-sum(l), tuple(-x for x in l))):
        c = expansion[lam]
        if any(x > 9 for x in lam):
            name = "s(" + ",".join(map(str, lam)) + ")"
        else:
            name = "s" + "".join(map(str, lam)) if lam else "1"
        if not lam:
            parts.append(str(c))
        elif c == 1:
            parts.append(name)
        else:
            parts.append(f"{c}*{name}")
    return " + ".join(parts).replace("+ -", "- ")


# ------------------------------------------------------------ E-basis

def E_index(vec, n):
    """The E_nu label of an all-e tensor key: slots other than 1^n, sorted."""
    ones = (1,) * n
    return tuple(sorted((lam for lam in vec if lam != ones)))


def E_expand(T):
    """Group an all-e tensor into E_nu coefficients; raises if inconsistent."""
    n = T.degree()
    out = {}
    for vec, c in T.full().items():
        key = E_index(vec, n)
        if key in out and out[key] != c:
            raise ValueError(f"coefficients of E{key} disagree across slots")
        out[key] = c
    return out


def format_E(expansion, coeff_fmt=str):
    items = sorted(expansion.items(), key=lambda kv: (len(kv[0]), kv[0]))
    out = []
    for key, c in items:
        name = "E(" + ",".join("".join(map(str, l)) for l in key) + ")"
        out.append(f"({coeff_fmt(c)}) {name}")
    return " + ".join(out)


def to_all_e(T):
    out = T.unsymmetrized()
    for j in range(T.arity):
        out = out.convert_slot(j, "e")
    return out


# ------------------------------------------------------------ positivity

def _is_nonneg_poly(c):
    c = QtRat.coerce(c)
    return c.is_poly() and all(v >= 0 for v in c.as_poly().terms().values())


def check_positivity(kind, f, params=None):
    """Positivity experiments; a negative coefficient is reported, never raised.

    kind: ``schur_qt`` (every coefficient of f expands positively in s_(a,b)(q,t)),
    ``schur_coeffs`` (coefficients of f have nonnegative integer coefficients),
    ``e_at_q1t1`` (f at q = t = 1 is e-positive in every slot),
    ``e_after_shift`` (f at q -> q+1, t -> t+1 has q,t-Schur positive E_nu coefficients).
    """
    t0 = time.time()
    params = dict(params or {})
    params["kind"] = kind
    details = {}
    witness = None
    if kind == "schur_qt":
        for vec, c in sorted(f.full().items(), key=lambda kv: repr(kv[0])):
            try:
                ex = schur_qt_expand(c)
            except (NotSymmetric, NegativeResidue) as err:
                witness = {"key": vec, "reason": str(err)}
                break
            if any(v < 0 for v in ex.values()):
                witness = {"key": vec, "expansion": format_schur_qt(ex)}
                break
    elif kind == "schur_coeffs":
        for vec, c in sorted(f.full().items(), key=lambda kv: repr(kv[0])):
            if not _is_nonneg_poly(c):
                witness = {"key": vec, "coefficient": str(c)}
                break
    elif kind == "e_at_q1t1":
        T = to_all_e(specialize_t(f, "q=t=1"))
        ex = E_expand(T)
        details["E"] = {k: str(v) for k, v in ex.items()}
        for key, c in sorted(ex.items(), key=lambda kv: repr(kv[0])):
            if not _is_nonneg_poly(c):
                witness = {"E": key, "coefficient": str(c)}
                break
    elif kind == "e_after_shift":
        T = to_all_e(specialize_t(f, "shift"))
        ex = E_expand(T)
        report = {}
        for key, c in sorted(ex.items(), key=lambda kv: repr(kv[0])):
            try:
                sx = schur_qt_expand(c)
            except (NotSymmetric, NegativeResidue) as err:
                witness = witness or {"E": key, "reason": str(err)}
                report[key] = str(c)
                continue
            report[key] = format_schur_qt(sx)
            if witness is None and any(v < 0 for v in sx.values()):
                witness = {"E": key, "expansion": report[key]}
        details["E"] = report
    else:
        raise ValueError(f"unknown positivity kind {kind!r}")
    verdict = POSITIVE if witness is None else NONPOSITIVE
    return CheckReport("positivity", params, verdict, witness, time.time() - t0, details)


# ------------------------------------------------------------ classical identities

CLASSICAL = ("cauchy_qt", "xi_en", "pairing_ops", "nabla_xi_m", "newton", "t_one_over_q",
             "t_zero_w", "hat_h_one", "hat_s_one", "q0_t1_perm", "zeta_stats", "riser_zeta")


def _cauchy_lhs(n):
    """e_n[XY/M] in p (x) p: eps_rho / (z_rho prod (1-q^r)(1-t^r))."""
    out = {}
    for rho in partitions_of(n):
        den = QtPoly.const(z_value(rho))
        for r in rho:
            den = den * (ONE - q ** r) * (ONE - t ** r)
        out[(rho, rho)] = QtRat((-1) ** (n - len(rho)), den)
    return out


def _cauchy_rhs(n):
    forms = {mu: convert(f, "p") for mu, f in table(n).schur.items()}
    acc = {}
    for mu, F in forms.items():
        w = w_mu(mu)
        for a, ca in F.coeffs.items():
            for b, cb in F.coeffs.items():
                acc.setdefault((a, b), []).append(ca * cb / w)
    return {k: rat_sum(v) for k, v in acc.items()}


def _sym_dict(f):
    return dict(f.coeffs)


def _classical_cauchy(n):
    return _cauchy_lhs(n), _cauchy_rhs(n)


def _classical_xi_en(n):
    # M Delta_{e1} Pi e_n^*, assembled from the separate eigenoperators
    g = Pi(star(e(n)))
    g = delta(e(1), g)
    lhs = {lam: c * M for lam, c in g.coeffs.items()}
    return lhs, _sym_dict(convert(e(n), "s"))


def _classical_pairing(n):
    T = super_nabla(e(n), 1, "s")
    lhs, rhs = {}, {}
    got = pair_slot(T, p(n), 1)
    lhs.update({("Pi", vec[0]): c for vec, c in got.full().items()})
    rhs.update({("Pi", lam): c for lam, c in Pi(e(n)).coeffs.items()})
    for j in range(0, n + 1):
        G = product(e(j), h(n - j)) if 0 < j < n else (e(n) if j == n else h(n))
        got = pair_slot(T, G, 1)
        lhs.update({(f"Delta_e{j}", vec[0]): c for vec, c in got.full().items()})
        want = convert(delta(e(j), e(n)) if j else e(n), "s")
        rhs.update({(f"Delta_e{j}", lam): c for lam, c in want.coeffs.items()})
    return lhs, rhs


def _classical_nabla_xi_m(n):
    T = super_nabla(e(n), 1, "s").unsymmetrized().convert_slot(1, "m")
    lhs = {(vec[1], vec[0]): c for vec, c in T.full().items()}
    rhs = {}
    for lam in partitions_of(n):
        el = SymFunc("e", {lam: 1})
        for mu, c in convert(Xi(el), "s").coeffs.items():
            rhs[(lam, mu)] = c
    return lhs, rhs


def _classical_newton(n):
    ph = convert(p(n), "h")
    lhs = {lam: c for lam, c in ph.coeffs.items()}
    rhs = {mu: QtRat.coerce((-1) ** (len(mu) - 1) * pc.sr_count(mu)) for mu in partitions_of(n)}
    return lhs, rhs


def hook_coefficient(a, b, conjugate_hook=True):
    """Coefficient of s^_(a|b)(x) s^_(a|b)(y) in the t = 1/q image.

    The image of e_n pairs s^_mu with s_mu'[1-q] / s^_mu(1); for the hook (a|b)
    this is (-1)^a q^(a - C(b+1,2)) (1-q)(1-q^n)(q;q)_a (q;q)_b.  With
    ``conjugate_hook=False`` the hook is not conjugated,
    (-1)^b (1-q)(1-q^n)(q;q)_a (q;q)_b / q^C(b,2), which is the image of h_n.
    """
    n = a + b + 1
    base = (ONE - q) * (ONE - q ** n) * qpoch(q, q, a) * qpoch(q, q, b)
    if conjugate_hook:
        ex = a - b * (b + 1) // 2
        return QtRat((-1) ** a * base * q ** ex)
    return QtRat((-1) ** b * base, q ** (b * (b - 1) // 2))


def hook_form(n, conjugate_hook=True):
    """sum over hooks of hook_coefficient * s^ (x) s^, written in s (x) s."""
    acc = {}
    for b in range(n):
        a = n - 1 - b
        coef = hook_coefficient(a, b, conjugate_hook)
        sh = convert(SymFunc("sh", {(a + 1,) + (1,) * b: 1}), "s")
        for l1, c1 in sh.coeffs.items():
            for l2, c2 in sh.coeffs.items():
                acc.setdefault((l1, l2), []).append(coef * c1 * c2)
    return {k: rat_sum(v) for k, v in acc.items()}


def _classical_t_one_over_q(n):
    # e_n takes the conjugated hook coefficient, h_n the unconjugated one
    lhs, rhs = {}, {}
    for name, f, conj in (("e", e(n), True), ("h", h(n), False)):
        T = specialize_t(super_nabla(f, 1, "s"), "t=1/q").unsymmetrized()
        lhs.update({(name,) + vec: c for vec, c in T.full().items()})
        rhs.update({(name,) + k: c for k, c in hook_form(n, conj).items()})
    return lhs, rhs


def v_composition(mu):
    """(mu_1 - mu_2, ..., mu_{l-1} - mu_l, mu_l): runs of column-top cells."""
    mu = tuple(mu)
    return tuple(mu[i] - mu[i + 1] for i in range(len(mu) - 1)) + (mu[-1],)


def w_t0_exponent(mu, literal=False):
    """Power of q in w_mu(q, 0) = +-q^ex (q;q)_v(mu).

    Cells below the top of their column each give -q^(a+1), the column tops give
    (q;q)_v, and every cell gives q^a, so ex = 2 n(mu') + n - mu_1 - sum C(v_i, 2).
    ``literal=True`` gives 2 n(mu') + n - C(mu_1 + 1, 2), which agrees only when v(mu)
    has a single nonzero part.
    """
    mu = tuple(mu)
    n = sum(mu)
    if literal:
        return 2 * n_stat(conjugate(mu)) + n - mu[0] * (mu[0] + 1) // 2
    v = v_composition(mu)
    return 2 * n_stat(conjugate(mu)) + n - mu[0] - sum(x * (x - 1) // 2 for x in v)


def w_t0_closed_form(mu, literal=False):
    mu = tuple(mu)
    val = QtPoly.const((-1) ** (sum(mu) - mu[0])) * q ** w_t0_exponent(mu, literal)
    for vi in v_composition(mu):
        val = val * qpoch(q, q, vi)
    return QtRat.coerce(val)


def _classical_t_zero_w(n):
    lhs, rhs = {}, {}
    for mu in partitions_of(n):
        lhs[mu] = w_mu(mu).substitute(t=0)
        rhs[mu] = w_t0_closed_form(mu)
    return lhs, rhs


def _classical_hat_h_one(n):
    lhs = {(): evaluate_at(h(n), alpha(QtRat(1, ONE - q)))}
    den = ONE
    for i in range(1, n + 1):
        den = den * (ONE - q ** i)
    return lhs, {(): QtRat(1, den)}


def _classical_hat_s_one(n):
    lhs, rhs = {}, {}
    for mu in partitions_of(n):
        lhs[mu] = evaluate_at(s(mu), alpha(QtRat(1, ONE - q)))
        den = ONE
        for hk in hooks(mu):
            den = den * (ONE - q ** hk)
        rhs[mu] = QtRat(q ** n_stat(mu), den)
    return lhs, rhs


def _classical_q0_t1_perm(n, k=1):
    T = specialize_t(super_nabla(e(n), k, "m"), "q=0,t=1")
    ones = ((1,) * n,) * (k + 1)
    return {"count": T[ones]}, {"count": QtRat.coerce(pc.perm_no_common_descent(n, k))}


def _classical_zeta_stats(n):
    lhs, rhs = {}, {}
    paths = pc.dyck_paths(n)
    images = [pc.zeta(D) for D in paths]
    lhs["bijective"] = QtRat.coerce(int(sorted(images) == sorted(paths)))
    rhs["bijective"] = QtRat.coerce(1)
    for D, Z in zip(paths, images):
        lhs[D] = QtRat.coerce(QtPoly({(pc.dinv(D), pc.dyck_area(D), 0): 1}))
        rhs[D] = QtRat.coerce(QtPoly({(pc.dyck_area(Z), pc.bounce(Z), 0): 1}))
    return lhs, rhs


def _classical_riser_zeta(n):
    T = to_all_e(specialize_t(super_nabla(e(n), 1, "m"), "q=t=1"))
    lhs = dict(T.full())
    acc = {}
    for D in pc.dyck_paths(n):
        key = (sort_partition(pc.riser(D)), sort_partition(pc.riser(pc.zeta(D))))
        acc[key] = acc.get(key, 0) + 1
    return lhs, {k: QtRat.coerce(v) for k, v in acc.items()}


_CLASSICAL_FNS = {
    "cauchy_qt": _classical_cauchy,
    "xi_en": _classical_xi_en,
    "pairing_ops": _classical_pairing,
    "nabla_xi_m": _classical_nabla_xi_m,
    "newton": _classical_newton,
    "t_one_over_q": _classical_t_one_over_q,
    "t_zero_w": _classical_t_zero_w,
    "hat_h_one": _classical_hat_h_one,
    "hat_s_one": _classical_hat_s_one,
    "zeta_stats": _classical_zeta_stats,
    "riser_zeta": _classical_riser_zeta,
}

_CLASSICAL_LIMITS = {"newton": 8, "hat_h_one": 8, "zeta_stats": 7}


def check_classical(ident, n, k=1, bounds=None):
    if ident not in CLASSICAL:
        raise ValueError(f"unknown identity {ident!r}")
    limit = _CLASSICAL_LIMITS.get(ident)
    if limit is not None:
        if n > limit:
            raise BoundExceeded(f"n={n} above {limit}")
    elif ident == "q0_t1_perm":
        _check_bound("t1", n, k, bounds)
    else:
        _check_bound("single", n, bounds=bounds)
    t0 = time.time()
    if ident == "q0_t1_perm":
        lhs, rhs = _classical_q0_t1_perm(n, k)
        params = {"n": n, "k": k}
    else:
        lhs, rhs = _CLASSICAL_FNS[ident](n)
        params = {"n": n}
    return _report(ident, params, lhs, rhs, t0)


# ------------------------------------------------------------ suites

def run_suite(name, n=3, k=1, bounds=None):
    """Reports for a named suite: t1, power, classical, positivity or all."""
    if name not in ("t1", "power", "classical", "positivity", "all"):
        raise ValueError(f"unknown suite {name!r}")
    reports = []
    if name in ("t1", "all"):
        for nn in range(1, n + 1):
            for kk in range(1, k + 1):
                reports.append(check_t1_theorem(nn, kk, bounds=bounds))
    if name in ("power", "all"):
        for nn in range(1, min(n, 3) + 1):
            for kk in range(0, min(k, 1) + 1):
                gammas = {(1,), (1,) * nn}
                if nn >= 2:
                    gammas |= {(1, 1), (2,)}
                for g in sorted(gammas):
                    if len(g) <= nn:
                        reports.append(check_power_theorem(nn, kk, g, bounds=bounds))
    if name in ("classical", "all"):
        for ident in CLASSICAL:
            if ident == "q0_t1_perm":
                reports.append(check_classical(ident, min(n, 4), 1, bounds))
            else:
                reports.append(check_classical(ident, n, bounds=bounds))
    if name in ("positivity", "all"):
        for nn in range(1, n + 1):
            for kk in range(1, k + 1):
                T = super_nabla(e(nn), kk, "s")
                reports.append(check_positivity("schur_qt", T, {"n": nn, "k": kk}))
    return reports
