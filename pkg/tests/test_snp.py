import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kronsnp.core import compositions, kostka, kron_product, partitions
from kronsnp.errors import InvalidInputError, PreconditionError, SizeMismatchError
from kronsnp.kronecker import MonomialSupport, monomial_support
from kronsnp.snp import (in_hull, in_hull_explicit, in_hull_majorization, kron_scaling_absorbed,
                         limit_convexity_check, schur_support, snp_check_kron, snp_positivity_consequence,
                         snp_verdict)


def support_of(*points):
    pts = frozenset(tuple(sorted(p, reverse=True)) for p in points)
    return MonomialSupport(len(points[0]), sum(points[0]), pts)


def test_in_hull_examples():
    U = support_of((2, 0))
    assert in_hull((2, 0), U)
    assert in_hull((1, 1), U)
    assert not in_hull((2, 1), U)
    assert in_hull((1, 1), [(2, 0), (0, 2)])
    assert not in_hull((2, 1), [(2, 0), (0, 2)])


@st.composite
def sorted_supports(draw):
    k = draw(st.integers(2, 4))
    n = draw(st.integers(1, 7))
    cands = [p + (0,) * (k - len(p)) for p in partitions(n, max_len=k)]
    reps = draw(st.lists(st.sampled_from(cands), min_size=1, max_size=4, unique=True))
    return k, n, reps


@given(sorted_supports())
def test_majorization_matches_explicit_hull(data):
    k, n, reps = data
    pts = sorted({q for p in reps for q in itertools.permutations(p)})
    for a in compositions(n, k):
        assert in_hull_majorization(a, reps) == (in_hull_explicit(a, pts) is not None)


@given(sorted_supports(), st.data())
def test_in_hull_is_monotone(data, more):
    k, n, reps = data
    cands = [p + (0,) * (k - len(p)) for p in partitions(n, max_len=k)]
    extra = more.draw(st.sampled_from(cands))
    small = MonomialSupport(k, n, frozenset(reps))
    big = MonomialSupport(k, n, frozenset(reps) | {extra})
    for a in compositions(n, k):
        if in_hull(a, small):
            assert in_hull(a, big)


def test_snp_verdict_counterexample():
    rep = snp_verdict(support_of((2, 0)))
    assert not rep.saturated
    assert rep.missing == [(1, 1)]
    (w,) = rep.witnesses
    total = sum(Fraction(c["weight"]) * Fraction(c["vertex"][0]) for c in w["combination"])
    assert total == 1 and len(w["combination"]) <= 3
    data = json.loads(json.dumps(rep.to_json()))
    assert data["saturated"] is False and data["missing"] == [[1, 1]]


def test_schur_support_examples():
    assert set(schur_support((1, 1), 2).points()) == {(1, 1)}
    assert set(schur_support((2,), 2).points()) == {(2, 0), (1, 1), (0, 2)}
    assert set(schur_support((3, 1), 2).points()) == {(3, 1), (1, 3), (2, 2)}
    assert len(schur_support((1, 1, 1), 2)) == 0


def test_schur_support_is_kostka_support():
    for n in range(1, 8):
        for lam in partitions(n):
            for k in (1, 2, 3):
                U = schur_support(lam, k)
                for a in compositions(n, k):
                    assert (a in U) == (kostka(lam, a) > 0)


def test_schur_supports_are_saturated():
    for n in range(1, 11):
        for lam in partitions(n):
            for k in range(1, 5):
                assert snp_verdict(schur_support(lam, k)).saturated


def test_snp_check_kron_examples():
    assert snp_check_kron((5, 4, 4), (7, 6), 3).saturated
    U = monomial_support((4, 4), (4, 4), 4)
    assert set(U.points()) == set(compositions(8, 4))
    assert snp_check_kron((4, 4), (4, 4), 4).saturated
    with pytest.raises(SizeMismatchError):
        snp_check_kron((3,), (2, 1, 1), 2)


def test_fast_path_agrees_with_enumeration():
    for n in range(2, 9):
        for lam in partitions(n, max_len=2):
            for mu in partitions(n, max_len=3):
                for k in (2, 3):
                    fast = snp_check_kron(lam, mu, k, fast_path=True)
                    assert fast.saturated == snp_check_kron(lam, mu, k).saturated


def test_limit_check_trivial_and_doubling():
    assert limit_convexity_check((3, 3), (3, 3), 3, p_max=1).ok
    rep = limit_convexity_check((4, 4), (2, 2, 2, 2), 4, p_max=2)
    assert rep.ok and rep.absorbed
    assert json.loads(json.dumps(rep.to_json()))["ok"] is True


def test_midpoint_absorbed_at_two():
    lam, mu = (8, 8), (5, 3) + (1,) * 8
    assert kron_scaling_absorbed(lam, mu, (7, 3, 2, 2, 2)) == 1
    assert kron_scaling_absorbed(lam, mu, (6, 4, 2, 2, 2), p_max=2) == 2
    assert kron_scaling_absorbed(lam, mu, (6, 4, 2, 2, 2), p_max=1) is None


def test_positivity_consequence():
    lam, mu = (8, 8), (5, 3) + (1,) * 8
    half = Fraction(1, 2)
    assert snp_positivity_consequence(lam, mu, [(1, (7, 3, 2, 2, 2))])
    assert snp_positivity_consequence(lam, mu, [(half, (7, 3, 2, 2, 2)), (half, (5, 5, 2, 2, 2))])
    with pytest.raises(PreconditionError):
        snp_positivity_consequence(lam, mu, [(1, (6, 4, 2, 2, 2))])
    with pytest.raises(PreconditionError):
        snp_positivity_consequence((3, 1), (3, 1), [(half, (3, 1)), (half, (2, 1, 1))])
    with pytest.raises(InvalidInputError):
        snp_positivity_consequence((3, 1), (3, 1), [(half, (3, 1))])


def test_positivity_consequence_in_proven_regime():
    # l(lam) <= 2, l(mu) <= 3, mu_1 >= lam_1: every midpoint combination has a witness
    for n in range(2, 9):
        for lam in partitions(n, max_len=2):
            for mu in partitions(n, max_len=3):
                if mu[0] < lam[0]:
                    continue
                pos = [t for t, c in kron_product(lam, mu)]
                for a, b in itertools.combinations(pos, 2):
                    L = max(len(a), len(b))
                    pa, pb = a + (0,) * (L - len(a)), b + (0,) * (L - len(b))
                    if all((x + y) % 2 == 0 for x, y in zip(pa, pb)):
                        h = Fraction(1, 2)
                        assert snp_positivity_consequence(lam, mu, [(h, a), (h, b)])
