import json
from importlib import resources

import pytest

from kronsnp.core import SchurExpansion, dominance_maximal_terms, kostka, partitions
from kronsnp.plethysm import (plethysm, plethysm_max_monomial, plethysm_monomial_coeff, schur_monomials,
                              snp_check_plethysm)
from oracles import plethysm_brute, schur_poly


def printed(key):
    data = json.loads(resources.files("kronsnp").joinpath("data", "printed_expansions.json").read_text())
    return data[key]


def test_schur_monomials_match_tableaux():
    for mu in [(2, 1), (3,), (2, 2), (1, 1, 1)]:
        for k in (2, 3, 4):
            assert dict(schur_monomials(mu, k)) == schur_poly(mu, k)


def test_plethysm_identity_substitution():
    for n in range(1, 9):
        for mu in partitions(n):
            assert dict(plethysm((1,), mu).terms) == {mu: 1}


def test_symmetric_square_of_h2():
    for m in range(1, 6):
        want = {tuple(2 * x for x in p): 1 for p in partitions(m)}
        assert dict(plethysm((m,), (2,)).terms) == want


def test_printed_expansion():
    entry = printed("pleth_111_21")
    got = plethysm((1, 1, 1), (2, 1))
    want = {tuple(t["partition"]): int(t["coeff"]) for t in entry["terms"]}
    assert dict(got.terms) == want
    assert got[(4, 3, 1, 1)] == 2
    assert {(6, 1, 1, 1), (5, 3, 1)} <= set(dominance_maximal_terms(got))


@pytest.mark.parametrize("lam,mu", [((2,), (2,)), ((1, 1), (2,)), ((2,), (1, 1)), ((2, 1), (2,)),
                                    ((3,), (2,)), ((2,), (2, 1)), ((1, 1), (2, 1)), ((1, 1, 1), (2,)),
                                    ((2,), (3,)), ((3,), (1, 1))])
def test_plethysm_matches_power_sum_formula(lam, mu):
    k = sum(lam) * len(mu)
    assert dict(plethysm(lam, mu).terms) == plethysm_brute(lam, mu, k)


def test_terms_have_the_right_degree():
    for lam, mu in [((2, 1), (2,)), ((2,), (2, 2)), ((1, 1), (3,))]:
        e = plethysm(lam, mu)
        assert all(sum(nu) == sum(lam) * sum(mu) for nu, _ in e)


def test_truncated_expansion_is_flagged():
    full = plethysm((1, 1, 1), (2, 1))
    short = plethysm((1, 1, 1), (2, 1), nvars=3)
    assert full.nvars is None
    assert short.nvars == 3
    assert dict(short.terms) == {nu: c for nu, c in full if len(nu) <= 3}


def test_expansion_json():
    e = plethysm((2,), (2,))
    assert SchurExpansion.from_json(json.loads(json.dumps(e.to_json()))) == e


def test_max_monomial_examples():
    for m in range(1, 5):
        for n in range(1, 4):
            assert plethysm_max_monomial((m,), (n,)) == (m * n,)
        assert plethysm_max_monomial((m,), (2, 1)) == (2 * m, m)
    nu = plethysm_max_monomial((1, 1, 1), (2, 1))
    assert nu == (6, 1, 1, 1)
    e = plethysm((1, 1, 1), (2, 1))
    assert e[nu] > 0
    # the other maximal term is also present
    assert e[(5, 3, 1)] == 1


def test_max_monomial_appears_small():
    for d in range(1, 9):
        for a in range(1, d + 1):
            if d % a:
                continue
            for lam in partitions(a):
                for mu in partitions(d // a):
                    nu = plethysm_max_monomial(lam, mu)
                    assert plethysm_monomial_coeff(lam, mu, nu) > 0


def test_monomial_coeff_matches_expansion():
    e = plethysm((2, 1), (2,))

    for a in [(3, 2, 1), (4, 1, 1), (2, 2, 2), (6,), (5, 1)]:
        want = sum(c * kostka(nu, a) for nu, c in e)
        assert plethysm_monomial_coeff((2, 1), (2,), a) == want
    assert plethysm_monomial_coeff((2, 1), (2,), (1, 1)) == 0


def test_snp_probes():
    for m in range(1, 4):
        for mu in [(2,), (1, 1), (2, 1)]:
            assert snp_check_plethysm((m,), mu, 3).saturated
    assert snp_check_plethysm((2,), (2, 2), 3).saturated
    rep = snp_check_plethysm((1, 1, 1), (2, 1), 4)
    assert isinstance(rep.saturated, bool)
