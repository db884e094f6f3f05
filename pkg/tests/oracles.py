"""Slow reference implementations used only by the tests.

Everything is done with explicit polynomials in a few variables, stored as
``{exponent tuple: coefficient}``. Schur coefficients are read off with the
alternant a_delta, characters come from the Frobenius formula, so none of
this touches the tableau or Murnaghan-Nakayama code in the package.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from fractions import Fraction


def parts(n, max_part=None):
    """Partitions of n, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in parts(n - first, first):
            yield (first,) + rest


def ssyt_contents(shape, k):
    """Content vector of every SSYT of ``shape`` with entries 1..k."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    filling = {}
    out = []

    def rec(i):
        if i == len(cells):
            cnt = [0] * k
            for v in filling.values():
                cnt[v - 1] += 1
            out.append(tuple(cnt))
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, k + 1):
            filling[(r, c)] = v
            rec(i + 1)
        filling.pop((r, c), None)

    rec(0)
    return out


def kostka_brute(lam, mu):
    k = len(mu)
    return sum(1 for c in ssyt_contents(lam, k) if c == tuple(mu))


def schur_poly(shape, k):
    return dict(Counter(ssyt_contents(shape, k)))


def mul(f, g):
    out = defaultdict(int)
    for a, x in f.items():
        for b, y in g.items():
            out[tuple(i + j for i, j in zip(a, b))] += x * y
    return {e: c for e, c in out.items() if c}


def power_sum(r, k):
    return {tuple(r if j == i else 0 for j in range(k)): 1 for i in range(k)}


def _perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_coeff(f, nu, k):
    """<f, s_nu> for a symmetric polynomial f in k variables: [x^{nu+delta}] a_delta f."""
    nu = tuple(nu) + (0,) * (k - len(nu))
    if len(nu) > k:
        return 0
    delta = tuple(range(k - 1, -1, -1))
    target = tuple(x + d for x, d in zip(nu, delta))
    total = 0
    for p in itertools.permutations(range(k)):
        shift = tuple(target[i] - delta[p[i]] for i in range(k))
        if min(shift) < 0:
            continue
        total += _perm_sign(p) * f.get(shift, 0)
    return total


def lr_brute(lam, mu, nu):
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    k = max(len(lam), 1)
    if len(mu) > k or len(nu) > k:
        return 0
    return schur_coeff(mul(schur_poly(mu, k), schur_poly(nu, k)), lam, k)


def cycle_type_power_sum(rho, k):
    f = {(0,) * k: 1}
    for r in rho:
        f = mul(f, power_sum(r, k))
    return f


def frobenius_character(lam, rho):
    k = max(len(lam), 1)
    return schur_coeff(cycle_type_power_sum(rho, k), lam, k)


def z(rho):
    out = 1
    for part, m in Counter(rho).items():
        out *= part ** m * math.factorial(m)
    return out


def kron_brute(lam, mu, nu):
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        return 0
    total = Fraction(0)
    for rho in parts(n):
        total += Fraction(frobenius_character(lam, rho) * frobenius_character(mu, rho)
                          * frobenius_character(nu, rho), z(rho))
    assert total.denominator == 1
    return int(total)


def hook_dimension(lam):
    n = sum(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return math.factorial(n) // hooks


def plethysm_brute(lam, mu, k):
    """s_lam[s_mu] in k variables by the power-sum expansion of s_lam.

    s_lam = sum_rho chi^lam(rho) p_rho / z_rho and p_r[s_mu] = s_mu(x^r).
    Returns ``{nu: coeff}`` for nu with at most k rows.
    """
    n = sum(lam)
    base = schur_poly(mu, k)
    total = defaultdict(Fraction)
    for rho in parts(n):
        chi = frobenius_character(lam, rho)
        if chi == 0:
            continue
        f = {(0,) * k: 1}
        for r in rho:
            f = mul(f, {tuple(r * x for x in e): c for e, c in base.items()})
        for e, c in f.items():
            total[e] += Fraction(chi * c, z(rho))
    poly = {e: int(c) for e, c in total.items() if c}
    degree = n * sum(mu)
    out = {}
    for nu in parts(degree):
        if len(nu) > k:
            continue
        c = schur_coeff(poly, nu, k)
        if c:
            out[nu] = c
    return out
