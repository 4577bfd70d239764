import json
import time

import pytest
from hypothesis import given, settings, strategies as st

from supernabla.macdonald import (
    DegreeMismatch, MacdonaldTable, SlotOutOfRange, ValidationError, Pi, Xi,
    as_symfunc, delta, eigen_expand, evaluate_slot, from_eigen, hat_at_one, htilde, htilde_eval,
    nabla, pair_slot, specialize_t, standard_tableaux, super_nabla, table, to_basis, triangular_E,
)
from supernabla.ring import M, ONE, PoleAtSpecialization, QtRat, q, t, u
from supernabla.symcore import (
    EPS, NotHomogeneous, SymFunc, B_mu, Pi_mu, alpha, conjugate, convert, e, h, hooks,
    n_stat, p, partitions_of, product, s, w_mu,
)


def S(d):
    return SymFunc("s", d)


# Reference tables from the standard literature, rows weighted by q.
REFERENCE = {
    (3,): S({(3,): 1, (2, 1): q + q ** 2, (1, 1, 1): q ** 3}),
    (2, 1): S({(3,): 1, (2, 1): q + t, (1, 1, 1): q * t}),
    (1, 1, 1): S({(3,): 1, (2, 1): t + t ** 2, (1, 1, 1): t ** 3}),
    (3, 1): S({(4,): 1, (3, 1): q + q ** 2 + t, (2, 2): q ** 2 + q * t,
               (2, 1, 1): q ** 3 + q * t + q ** 2 * t, (1, 1, 1, 1): q ** 3 * t}),
    (2, 2): S({(4,): 1, (3, 1): q + t + q * t, (2, 2): q ** 2 + t ** 2,
               (2, 1, 1): q * t + q ** 2 * t + q * t ** 2, (1, 1, 1, 1): q ** 2 * t ** 2}),
}


def swap_qt(f):
    return SymFunc(f.basis, {lam: c.substitute(q=t, t=q) for lam, c in f.coeffs.items()})


# ---------------------------------------------------------------- H~ tables

def test_degree_one():
    assert htilde((1,)) == s((1,))


@pytest.mark.parametrize("mu", sorted(REFERENCE))
def test_reference_tables(mu):
    assert htilde(mu) == REFERENCE[mu]


@pytest.mark.parametrize("n", range(1, 6))
def test_qt_duality(n):
    for mu in partitions_of(n):
        assert swap_qt(htilde(mu)) == htilde(conjugate(mu))


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_coefficients_are_positive_polynomials(n):
    for mu in partitions_of(n):
        for c in htilde(mu).coeffs.values():
            assert c.is_poly()
            assert all(v > 0 for v in c.num.terms().values())


@pytest.mark.parametrize("n", range(1, 6))
def test_q_t_one_gives_h1_power(n):
    # H~_mu(x; 1, 1) = h_1^n
    target = convert(SymFunc("h", {(1,) * n: 1}), "s")
    for mu in partitions_of(n):
        assert specialize_t(htilde(mu), "q=t=1") == target


def test_evaluations():
    for mu in partitions_of(4):
        assert htilde_eval(mu, alpha(1)) == 1
    assert htilde_eval((2, 1), 1 - alpha(u)) == (1 - u) * (1 - q * u) * (1 - t * u)
    assert htilde_eval((2, 1), alpha(M)) == M * (1 + q + t) * (1 - q) * (1 - t)


@pytest.mark.parametrize("n", range(1, 6))
def test_evaluation_at_M(n):
    for mu in partitions_of(n):
        assert htilde_eval(mu, alpha(M)) == M * B_mu(mu) * Pi_mu(mu)


def test_table_json_round_trip_and_bytes():
    tab = table(3)
    text = tab.to_json()
    assert MacdonaldTable.from_json(text).schur == tab.schur
    assert MacdonaldTable.compute(3).to_json() == text


def test_corrupt_cache_entry_is_rejected():
    doc = json.loads(table(2).to_json())
    key = "2"
    doc["table"][key]["s"] = doc["table"][key]["s"].replace("q", "t")
    with pytest.raises(ValidationError):
        MacdonaldTable.from_json(json.dumps(doc))
    doc = json.loads(table(2).to_json())
    doc["producer"] = "0.0.0-other"
    with pytest.raises(ValidationError):
        MacdonaldTable.from_json(json.dumps(doc))


def test_validation_catches_wrong_table():
    good = table(2)
    bad = MacdonaldTable(2, {(2,): S({(2,): 1, (1, 1): t}), (1, 1): good.schur[(1, 1)]},
                         dict(good.monomial))
    with pytest.raises(ValidationError):
        bad.validate()


def test_baseline_runtime():
    start = time.perf_counter()
    MacdonaldTable.compute(3)
    assert time.perf_counter() - start < 1.0


# ---------------------------------------------------------------- eigen expansion

def test_eigen_expand_basis_element():
    assert eigen_expand(htilde((3,))) == {(3,): QtRat.coerce(1)}


def test_eigen_expand_e2():
    got = eigen_expand(e(2))
    assert got == {(2,): QtRat(1, q - t), (1, 1): QtRat(-1, q - t)}


@pytest.mark.parametrize("n", range(1, 6))
def test_eigen_expand_en_closed_form(n):
    got = eigen_expand(e(n))
    for mu in partitions_of(n):
        assert got[mu] == QtRat.coerce(M * B_mu(mu) * Pi_mu(mu)) / w_mu(mu)


def test_eigen_expand_needs_homogeneous():
    with pytest.raises(NotHomogeneous):
        eigen_expand(e(2) + e(1))


@pytest.mark.parametrize("n", range(1, 5))
def test_eigen_round_trip(n):
    for lam in partitions_of(n):
        f = s(lam)
        assert from_eigen(eigen_expand(f), "s") == f


# ---------------------------------------------------------------- operators

def test_nabla_small():
    assert nabla(e(1)) == e(1)
    assert nabla(e(2)) == S({(2,): 1, (1, 1): q + t})


@pytest.mark.parametrize("n", range(1, 6))
def test_xi_fixes_en(n):
    assert Xi(e(n)) == e(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_images_are_polynomial(n):
    nabla(e(n), expect_poly=True)
    for k in range(n + 1):
        delta(e(k), e(n), expect_poly=True)


def test_nabla_en_at_q_t_one_counts_parking_functions():
    # <nabla e_n, h_1^n> at q=t=1 is (n+1)^(n-1)
    for n in range(1, 5):
        img = specialize_t(nabla(e(n)), "q=t=1")
        val = sum(c.as_poly().constant_value() * hall_count(lam)
                  for lam, c in img.coeffs.items())
        assert val == (n + 1) ** (n - 1)


def hall_count(lam):
    # number of standard tableaux of shape lam
    return len(standard_tableaux(lam))


def test_degree_zero_is_identity():
    one = SymFunc("s", {(): 3})
    assert nabla(one) == one
    T = super_nabla(one, 2)
    assert T[((), (), ())] == 3


# ---------------------------------------------------------------- super nabla

def test_super_nabla_k0():
    assert as_symfunc(super_nabla(e(3), 0)) == e(3)


def test_super_nabla_e2_k1():
    T = super_nabla(e(2), 1)
    assert T[((1, 1), (1, 1))] == q + t
    assert T[((1, 1), (2,))] == 1
    assert T[((2,), (1, 1))] == 1
    assert T[((2,), (2,))] == 0


def test_minus_epsilon_slot_is_nabla():
    for n in range(1, 5):
        T = super_nabla(e(n), 1)
        assert as_symfunc(evaluate_slot(T, 1, -EPS)) == nabla(e(n))


def test_one_minus_epsilon_u_slot():
    for n in range(1, 5):
        T = super_nabla(e(n), 1)
        got = as_symfunc(evaluate_slot(T, 1, 1 - EPS * alpha(u)))
        want = SymFunc("s", {})
        for k in range(n + 1):
            want = want + delta(e(k), e(n)) * QtRat.coerce(u ** k)
        assert got == want


@pytest.mark.parametrize("n", range(1, 5))
def test_pairing_with_en_gives_nabla(n):
    T = super_nabla(e(n), 1)
    assert as_symfunc(pair_slot(T, e(n), 1)) == nabla(e(n))


@pytest.mark.parametrize("n", range(1, 5))
def test_pairing_with_pn_gives_pi(n):
    T = super_nabla(e(n), 1)
    assert as_symfunc(pair_slot(T, p(n), 1)) == Pi(e(n))


@pytest.mark.parametrize("n", range(1, 5))
def test_pairing_with_ek_h_gives_delta(n):
    T = super_nabla(e(n), 1)
    for k in range(n + 1):
        G = product(e(k), h(n - k))
        assert as_symfunc(pair_slot(T, G, 1)) == delta(e(k), e(n))


def test_pairing_errors():
    T = super_nabla(e(2), 1)
    with pytest.raises(SlotOutOfRange):
        pair_slot(T, e(2), 2)
    with pytest.raises(DegreeMismatch):
        pair_slot(T, e(3), 1)


def test_monomial_slot_agrees_with_schur_slot():
    Ts = super_nabla(e(3), 2, "s")
    Tm = super_nabla(e(3), 2, "m")
    assert Ts.convert_all("m") == Tm


def test_table_entries():
    T = super_nabla(e(3), 2, "m")
    one = (1, 1, 1)
    T1 = specialize_t(T, "t=1")
    assert T1[(one, one, one)] == (q ** 6 + 7 * q ** 5 + 26 * q ** 4 + 67 * q ** 3
                                   + 134 * q ** 2 + 196 * q + 163)
    assert T1[(one, (2, 1), (3,))] == q ** 2 + 4 * q + 7


def test_symmetric_storage_reconstructs_orbit():
    T = super_nabla(e(3), 2)
    full = T.full()
    assert len(full) >= len(T.coeffs)
    assert T.check_symmetry()
    U = T.unsymmetrized()
    assert U == T


slot_fn = st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.sampled_from(partitions_of(n)), st.sampled_from(["s", "e", "h", "p", "m"]),
    st.integers(0, 2)))


@settings(max_examples=25, deadline=None)
@given(slot_fn)
def test_super_nabla_is_slot_symmetric(data):
    lam, basis, k = data
    T = super_nabla(SymFunc(basis, {lam: 1}), k)
    assert T.check_symmetry()
    assert T.unsymmetrized().check_symmetry()


@settings(max_examples=25, deadline=None)
@given(slot_fn)
def test_super_nabla_is_linear(data):
    lam, basis, k = data
    f = SymFunc(basis, {lam: 1})
    g = e(sum(lam))
    lhs = super_nabla(f + g * QtRat.coerce(q), k)
    rhs = super_nabla(f, k) + super_nabla(g, k) * q
    assert lhs == rhs


# ---------------------------------------------------------------- specializations

def test_hat_h_two_at_one():
    assert hat_at_one((2,), "h") == QtRat(1, (1 - q) * (1 - q ** 2))


def test_hat_s21_at_one():
    assert hat_at_one((2, 1), "s") == QtRat(q, (1 - q ** 3) * (1 - q) ** 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_hat_s_hook_formula(n):
    for mu in partitions_of(n):
        den = ONE
        for hk in hooks(mu):
            den = den * (1 - q ** hk)
        assert hat_at_one(mu, "s") == QtRat(q ** n_stat(mu), den)


def test_pole_at_specialization():
    f = SymFunc("s", {(1,): QtRat(1, 1 - t)})
    with pytest.raises(PoleAtSpecialization):
        specialize_t(f, "t=1")


def test_t_one_gives_hat_h_ratio():
    # H~_mu(x; q, 1) = h^_mu(x) / h^_mu(1)
    for mu in partitions_of(3):
        lhs = specialize_t(htilde(mu), "t=1")
        rhs = SymFunc("hh", {mu: 1}) * (1 / hat_at_one(mu, "h"))
        assert lhs == rhs


def test_unknown_specialization():
    with pytest.raises(ValueError):
        specialize_t(e(2), "t=2")


# ---------------------------------------------------------------- E_v

def test_triangular_E_degree_one():
    assert to_basis(triangular_E((0,)), "s") == s((1,))


def test_triangular_E_small():
    assert to_basis(triangular_E((0, 0)), "s") == nabla(e(2))
    assert to_basis(triangular_E((0, 1)), "s") == S({(2,): q + t, (1, 1): q ** 2 + q * t + t ** 2})


def test_standard_tableaux_counts():
    # hook length formula as the oracle
    from math import factorial
    for n in range(1, 7):
        for mu in partitions_of(n):
            prod = 1
            for hk in hooks(mu):
                prod *= hk
            assert len(standard_tableaux(mu)) == factorial(n) // prod


@pytest.mark.parametrize("v", [(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2)])
def test_triangular_E_schur_polynomial(v):
    f = to_basis(triangular_E(v), "s")
    assert all(c.is_poly() for c in f.coeffs.values())
