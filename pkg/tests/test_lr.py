import itertools

import pytest
from hypothesis import given, strategies as st

from kronsnp.core import compositions, partitions
from kronsnp.errors import InvalidInputError
from kronsnp.lr import (delta, embed_multi_lr, lr_coeff, multi_lr, multi_lr_positive, omega,
                        p_set_membership, p_set_witness, skew_lr)
from oracles import lr_brute


def test_lr_examples():
    assert lr_coeff((6, 4, 3), (3, 1), (4, 3, 2)) == 2
    assert lr_coeff((2, 1), (1,), (1, 1)) == 1
    for lam in [(3, 2), (4, 1, 1), ()]:
        assert lr_coeff(lam, lam, ()) == 1


def test_lr_zero_cases():
    assert lr_coeff((2, 2), (3,), (1,)) == 0
    assert lr_coeff((3,), (2,), (2,)) == 0
    assert lr_coeff((3, 1), (1,), (1,)) == 0


def test_lr_matches_polynomial_multiplication():
    for n in range(1, 8):
        for lam in partitions(n):
            for a in range(n + 1):
                for mu in partitions(a):
                    for nu in partitions(n - a):
                        assert lr_coeff(lam, mu, nu) == lr_brute(lam, mu, nu), (lam, mu, nu)


def test_lr_commutative():
    for n in range(1, 11):
        for lam in partitions(n, max_len=4):
            for a in range(1, n):
                for mu in partitions(a, max_len=len(lam)):
                    for nu in partitions(n - a, max_len=len(lam)):
                        assert lr_coeff(lam, mu, nu) == lr_coeff(lam, nu, mu)


def test_skew_lr_is_the_product_expansion():
    # s_{321/21} = s_3 + 2 s_21 + s_111
    assert skew_lr((3, 2, 1), (2, 1)) == {(2, 1): 2, (3,): 1, (1, 1, 1): 1}
    assert skew_lr((2,), (3,)) == {}


def test_multi_lr_examples():
    assert multi_lr((6, 4, 3), [(3, 1), (4, 3, 2)]) == 2
    assert multi_lr((4, 2), [(4, 2)]) == 1
    assert multi_lr((3,), [(1,), (1,), (1,)]) == 1
    assert multi_lr((2, 1), [(1,), (1,), (1,)]) == 2
    assert multi_lr((3,), [(1,), (1,)]) == 0


@given(st.integers(1, 7), st.data())
def test_multi_lr_two_factors_is_lr(n, data):
    lam = data.draw(st.sampled_from(list(partitions(n))))
    a = data.draw(st.integers(0, n))
    mu = data.draw(st.sampled_from(list(partitions(a))))
    nu = data.draw(st.sampled_from(list(partitions(n - a))))
    assert multi_lr(lam, [mu, nu]) == lr_coeff(lam, mu, nu)
    assert multi_lr_positive(lam, [mu, nu]) == (lr_coeff(lam, mu, nu) > 0)


def test_multi_lr_is_order_independent():
    for lam in partitions(6):
        for al in [((2,), (1, 1), (2,)), ((3,), (2,), (1,)), ((1,), (2, 1), (1, 1))]:
            vals = {multi_lr(lam, list(p)) for p in itertools.permutations(al)}
            assert len(vals) == 1


def test_embed_example_shape():
    a1, a2, a3 = (2, 1), (1, 1), (2,)
    n = 7
    w, target, d = embed_multi_lr((4, 2, 1), [a1, a2, a3], ell=2)
    assert w == (2 * n + 2, 2 * n + 1, n + 1, n + 1, 2)
    assert target == (4, 2, 1)
    assert d == (2 * n, 2 * n, n, n)
    assert omega([a1, a2, a3], n, 2) == (16, 15, 8, 8, 2)
    assert delta(n, 2, 3) == d


def test_embed_small_cases():
    assert embed_multi_lr((2, 1), [(2, 1)], ell=2) == ((2, 1), (2, 1), ())
    w, t, d = embed_multi_lr((3,), [(1,), (1,), (1,)], ell=1)
    assert lr_coeff(w, t, d) == 1
    with pytest.raises(InvalidInputError):
        embed_multi_lr((2, 1), [(1, 1), (1,)], ell=1)


def test_embed_agrees_with_multi_lr():
    for n in range(1, 9):
        for lam in partitions(n):
            for k in (1, 2, 3):
                for a in compositions(n, k):
                    for ell in (1, 2, 3):
                        for al in itertools.product(*[list(partitions(x, max_len=ell)) for x in a]):
                            w, t, d = embed_multi_lr(lam, al, ell=ell)
                            assert lr_coeff(w, t, d) == multi_lr(lam, al), (lam, al, ell)


def test_p_set_membership_examples():
    assert p_set_membership((3,), (1, 1, 1), [(1,), (1,), (1,)])
    assert not p_set_membership((3,), (1, 1, 1), [(2,), (1,), ()])
    assert not p_set_membership((2, 1), (3,), [(3,)])
    assert p_set_membership((2, 1), (3,), [(2, 1)])


def test_p_set_never_empty():
    for n in range(1, 11):
        for mu in partitions(n):
            for k in range(1, 5):
                for a in compositions(n, k):
                    ok, w = p_set_witness(mu, a)
                    assert ok, (mu, a)
                    assert p_set_membership(mu, a, w)
