import itertools
import json

import pytest
from hypothesis import given, strategies as st

from kronsnp.core import (compositions, dominance_maximal_terms, dominates, kron_coeff_oracle, kron_product,
                          pad, partitions)
from kronsnp.errors import PreconditionError, SizeMismatchError
from kronsnp.kronecker import (MonomialSupport, ceil_div, dvir_max_first_row, kron_coeff,
                               monomial_coeff_multilr, monomial_positive, monomial_support, rosas_kron_tworow_pair,
                               rosas_kron_tworow_triple, rosas_phi, rosas_sigma, two_row_h_positive)
from oracles import kostka_brute


def monomial_coeff_from_characters(mu, nu, a):
    """Coefficient of x^a from the Schur expansion and tableau-counted Kostka numbers."""
    return sum(g * kostka_brute(t, a) for t, g in kron_product(mu, nu) if len(t) <= len(a))


def test_ceil_div_negative_halves():
    assert ceil_div(-1, 2) == 0
    assert ceil_div(-3, 2) == -1
    assert ceil_div(3, 2) == 2


def test_monomial_coeff_examples():
    assert monomial_coeff_multilr((2,), (2,), (1, 1)) == 1
    assert monomial_coeff_multilr((2, 1), (1, 1, 1), (2, 1)) == monomial_coeff_from_characters((2, 1), (1, 1, 1), (2, 1))
    with pytest.raises(SizeMismatchError):
        monomial_coeff_multilr((2,), (2,), (1, 2))


@given(st.integers(1, 6), st.data())
def test_monomial_coeff_matches_expansion(n, data):
    mu = data.draw(st.sampled_from(list(partitions(n))))
    nu = data.draw(st.sampled_from(list(partitions(n))))
    k = data.draw(st.integers(1, 3))
    a = data.draw(st.sampled_from(list(compositions(n, k))))
    want = monomial_coeff_from_characters(mu, nu, a)
    assert monomial_coeff_multilr(mu, nu, a) == want
    assert monomial_positive(mu, nu, a) == (want > 0)


def test_multilr_support_equals_character_support():
    for n in range(1, 9):
        P = list(partitions(n))
        for mu, nu in itertools.combinations_with_replacement(P, 2):
            for k in (1, 2, 3):
                U = monomial_support(mu, nu, k, method="character")
                V = monomial_support(mu, nu, k, method="multilr")
                assert U == V
                for a in compositions(n, k):
                    assert (monomial_coeff_multilr(mu, nu, a) > 0) == (a in U)


def test_jacobi_trudi_route_matches_characters():
    for n in range(1, 9):
        P = list(partitions(n))
        for t in itertools.combinations_with_replacement(P, 3):
            assert kron_coeff(*t, method="jacobi_trudi") == kron_coeff_oracle(*t)


def test_monomial_support_examples():
    U = monomial_support((1, 1), (1, 1), 2)
    assert U.points() == [(2, 0), (1, 1), (0, 2)]
    assert set(monomial_support((3, 2), (3, 2), 3).points()) == set(compositions(5, 3))
    # a unique maximal term gives the permutohedron of that term
    e = kron_product((3, 3), (4, 1, 1))
    (top,) = dominance_maximal_terms(e)
    for k in (2, 3, 4):
        U = monomial_support((3, 3), (4, 1, 1), k)
        want = {pad(p, k) for p in partitions(6, max_len=k) if dominates(top, p)}
        assert U.sorted_points == want


def test_monomial_support_is_permutation_closed():
    for mu, nu in [((5, 4, 4), (7, 6)), ((3, 2, 1), (2, 2, 2))]:
        U = monomial_support(mu, nu, 3)
        pts = set(U.points())
        for p in pts:
            assert all(q in pts for q in itertools.permutations(p))
            assert sum(p) == U.degree


def test_monomial_support_json():
    U = monomial_support((5, 4, 4), (7, 6), 3)
    data = json.loads(json.dumps(U.to_json()))
    assert data["k"] == 3 and data["degree"] == 13
    assert data["sorted_points"][0] == [9, 3, 1]
    assert MonomialSupport.from_json(data) == U


def test_rosas_sigma_values():
    assert rosas_sigma(2, 2, -1) == 0
    assert rosas_sigma(2, 2, 1) == 2
    for k in range(1, 5):
        for l in range(1, 5):
            assert rosas_sigma(k, l, -3) == 0


def test_rosas_phi_values():
    assert rosas_phi(4, 1, 6, 1, 5, 7) == rosas_sigma(2, 2, 1) == 2
    assert rosas_phi(4, 1, 9, 1, 5, 7) == 0
    for a, b, c, d, x in [(1, 2, 3, 1, 4), (0, 0, 2, 2, 3)]:
        assert rosas_phi(a, b, c, d, x, 0) == rosas_sigma(b + 1, d + 1, x - a - c)


def test_rosas_pair_examples():
    assert rosas_kron_tworow_pair((7, 6), (8, 5), (5, 4, 3, 1)) == 2
    assert rosas_kron_tworow_pair((2, 2), (2, 2), (2, 2)) == 1
    with pytest.raises(PreconditionError):
        rosas_kron_tworow_pair((8, 5), (7, 6), (5, 4, 3, 1))


def test_rosas_triple_examples():
    assert rosas_kron_tworow_triple((1, 1), (1, 1), (1, 1)) == 0
    assert rosas_kron_tworow_triple((2, 2), (2, 2), (2, 2)) == 1
    with pytest.raises(PreconditionError):
        rosas_kron_tworow_triple((2, 1, 1), (2, 2), (2, 2))


def test_rosas_formulas_match_oracle_small():
    for n in range(1, 11):
        two = list(partitions(n, max_len=2))
        four = list(partitions(n, max_len=4))
        for b in two:
            for g in two:
                if pad(g, 2)[1] > pad(b, 2)[1]:
                    continue
                for a in four:
                    want = kron_coeff_oracle(b, g, a)
                    assert rosas_kron_tworow_pair(b, g, a) == want
                    if len(a) <= 2:
                        assert rosas_kron_tworow_triple(a, b, g) == want


def test_two_row_h_positive():
    assert two_row_h_positive((7, 6), (8, 5), (12, 1))
    assert not two_row_h_positive((7, 6), (8, 5), (13,))
    assert two_row_h_positive((3, 3), (3, 3), (6,))
    for n in range(1, 11):
        two = list(partitions(n, max_len=2))
        for mu in two:
            for nu in two:
                if pad(mu, 2)[1] < pad(nu, 2)[1]:
                    continue
                for lam in two:
                    want = monomial_coeff_from_characters(mu, nu, pad(lam, 2)) > 0
                    assert two_row_h_positive(mu, nu, lam) == want


def test_dvir_max_first_row():
    assert dvir_max_first_row((3, 3), (4, 1, 1)) == 4
    assert dvir_max_first_row((3, 3), (6,)) == 3
    with pytest.raises(PreconditionError):
        dvir_max_first_row((5, 1), (4, 1, 1))
    for n in range(2, 13):
        for mu in partitions(n, max_len=2):
            for nu in partitions(n, max_len=3):
                if mu[0] > nu[0]:
                    continue
                m = dvir_max_first_row(mu, nu)
                e = kron_product(mu, nu)
                assert max(t[0] for t, _ in e) == m
                assert dominance_maximal_terms(e) == [tuple(x for x in (m, n - m) if x)]


def test_unique_maximum_gives_down_set():
    # two-row mu, three-row nu with mu_1 <= nu_1
    for n in range(2, 11):
        for mu in partitions(n, max_len=2):
            for nu in partitions(n, max_len=3):
                if mu[0] > nu[0]:
                    continue
                e = kron_product(mu, nu)
                (top,) = dominance_maximal_terms(e)
                for k in (2, 3, 4):
                    U = monomial_support(mu, nu, k)
                    assert U.sorted_points == {pad(p, k) for p in partitions(n, max_len=k) if dominates(top, p)}
