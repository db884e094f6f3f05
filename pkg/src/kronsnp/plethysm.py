"""Plethysm s_lam[s_mu] by direct substitution.

The monomials of s_mu in N variables, each repeated by its multiplicity,
become the variables of s_lam. s_lam in those variables is built one variable
at a time from horizontal strips, and only exponent vectors that can still
grow into a partition of the final degree are kept. Schur coefficients are
then peeled off from the lexicographically largest monomial down.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Sequence

from .core import SchurExpansion, kostka, partition, partitions
from .errors import InvalidInputError, PreconditionError
from .kronecker import support_from_expansion
from .snp import SNPReport, snp_verdict


@lru_cache(maxsize=None)
def _kostka_sorted(mu, weight):
    return kostka(mu, weight)


def _capped_compositions(n, cap):
    """Compositions of n with entry i at most cap[i], lexicographically largest first."""
    k = len(cap)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + cap[i]
    out = []

    def rec(i, rem, acc):
        if i == k:
            if rem == 0:
                out.append(tuple(acc))
            return
        for x in range(min(rem, cap[i]), max(0, rem - suffix[i + 1]) - 1, -1):
            acc.append(x)
            rec(i + 1, rem - x, acc)
            acc.pop()

    rec(0, n, [])
    return out


def schur_monomials(mu: Iterable[int], nvars: int, cap: Sequence[int] | None = None) -> list:
    """(exponent, multiplicity) for every monomial of s_mu(x_1..x_nvars).

    With ``cap`` only exponents entrywise below it are listed.
    """
    mu = partition(mu)
    n = sum(mu)
    if cap is None:
        cap = (mu[0] if mu else 0,) * nvars
    out = []
    for a in _capped_compositions(n, tuple(cap)):
        c = _kostka_sorted(mu, partition(sorted(a, reverse=True)))
        if c:
            out.append((a, c))
    return out


def _grow_ok(e, degree):
    # the smallest partition above e entrywise has parts max(e_j, j >= i)
    total, run = 0, 0
    for x in reversed(e):
        run = max(run, x)
        total += run
    return total <= degree


def _substitute(lam, letters, degree, cap=None):
    """Coefficients of s_lam in the given letters, one letter per copy.

    Returns {exponent: coeff} restricted to exponents that are partitions.
    ``cap`` limits exponents entrywise.
    """
    N = len(letters[0][0]) if letters else 0
    states = {((), (0,) * N): 1}
    strips_cache = {}
    for vec, mult in letters:
        for _ in range(mult):
            new = defaultdict(int)
            for (shape, e), c in states.items():
                new[(shape, e)] += c
                # grow shape by a horizontal strip of m boxes, all holding this letter
                for m in range(1, sum(lam) - sum(shape) + 1):
                    key = (shape, m)
                    if key not in strips_cache:
                        strips_cache[key] = [s for s in _outer_strips(shape, lam, m)]
                    targets = strips_cache[key]
                    if not targets:
                        continue
                    e2 = tuple(x + m * y for x, y in zip(e, vec))
                    if cap is not None and any(x > y for x, y in zip(e2, cap)):
                        continue
                    if not _grow_ok(e2, degree):
                        continue
                    for s in targets:
                        new[(s, e2)] += c
            states = new
    out = defaultdict(int)
    for (shape, e), c in states.items():
        if shape == lam and all(e[i] >= e[i + 1] for i in range(N - 1)):
            out[e] += c
    return out


def _outer_strips(shape, lam, m):
    """Shapes s inside lam with s/shape a horizontal strip of m boxes."""
    out = []
    L = len(lam)
    base = shape + (0,) * (L - len(shape))

    def rec(i, rem, acc):
        if i == L:
            if rem == 0:
                out.append(partition(acc))
            return
        hi = lam[i]
        if i > 0:
            hi = min(hi, base[i - 1])
        for add in range(0, min(rem, hi - base[i]) + 1):
            rec(i + 1, rem - add, acc + (base[i] + add,))

    rec(0, m, ())
    return out


def plethysm(lam: Iterable[int], mu: Iterable[int], nvars: int | None = None) -> SchurExpansion:
    """s_lam[s_mu] as a Schur expansion.

    Every term has at most |lam| * l(mu) rows, which is the default number of
    variables. With fewer variables the result only lists terms that fit and
    ``nvars`` is recorded on it.
    """
    lam, mu = partition(lam), partition(mu)
    degree = sum(lam) * sum(mu)
    full = max(sum(lam) * len(mu), 1)
    if nvars is None:
        nvars = full
    if nvars < 1:
        raise InvalidInputError("nvars must be positive")
    if not lam:
        return SchurExpansion(0, {(): 1})
    if not mu:
        return SchurExpansion(0, {(): 1} if len(lam) <= 1 else {})
    letters = schur_monomials(mu, nvars)
    mono = _substitute(lam, letters, degree)
    # peel off Schur functions, largest partition first
    coeffs = {partition(e): c for e, c in mono.items() if c}
    terms = {}
    for nu in partitions(degree, max_len=nvars):
        c = coeffs.get(nu, 0)
        if c == 0:
            continue
        if c < 0:
            raise PreconditionError(f"negative remainder at {nu}")
        terms[nu] = c
        for theta in partitions(degree, max_len=nvars):
            if theta in coeffs:
                coeffs[theta] -= c * kostka(nu, theta)
    return SchurExpansion(degree, terms, None if nvars >= full else nvars)


def plethysm_monomial_coeff(lam: Iterable[int], mu: Iterable[int], a: Iterable[int]) -> int:
    """Coefficient of x^a in s_lam[s_mu], computed in len(a) variables."""
    lam, mu = partition(lam), partition(mu)
    a = tuple(int(x) for x in a)
    target = tuple(sorted(a, reverse=True))
    degree = sum(lam) * sum(mu)
    if sum(a) != degree:
        return 0
    N = len(target)
    letters = schur_monomials(mu, N, cap=target)
    if not letters:
        return 0
    return _substitute(lam, letters, degree, cap=target).get(target, 0)


def plethysm_max_monomial(lam: Iterable[int], mu: Iterable[int]) -> tuple[int, ...]:
    """nu = sum_i lam_i mu^i, with mu^1 > mu^2 > ... the lexicographically
    largest exponents of s_mu.

    Exponents are taken in l(lam) * |mu| variables, enough for the leading
    ones to stop changing as variables are added.
    """
    lam, mu = partition(lam), partition(mu)
    if not lam or not mu:
        return ()
    N = len(lam) * sum(mu)
    tops = _top_support(mu, N, len(lam))
    if len(tops) < len(lam):
        raise PreconditionError("s_mu has too few monomials")
    nu = [sum(l * t[j] for l, t in zip(lam, tops)) for j in range(N)]
    return partition(sorted(nu, reverse=True))


def _top_support(mu, N, count):
    """The ``count`` lexicographically largest exponents of s_mu in N variables.

    x^a occurs in s_mu iff sorted(a) is dominated by mu. A prefix is extended
    only while its sorted prefix sums stay below those of mu.
    """
    n = sum(mu)
    bound = [0]
    for x in mu:
        bound.append(bound[-1] + x)
    out = []

    def ok(prefix):
        tot = 0
        for j, x in enumerate(sorted(prefix, reverse=True), 1):
            tot += x
            if tot > bound[min(j, len(mu))]:
                return False
        return True

    def rec(acc, rem):
        if len(out) == count:
            return
        i = len(acc)
        if i == N:
            if rem == 0:
                out.append(tuple(acc))
            return
        if rem > (N - i) * (mu[0] if mu else 0):
            return
        for x in range(min(rem, mu[0] if mu else 0), -1, -1):
            acc.append(x)
            if ok(acc):
                rec(acc, rem - x)
            acc.pop()
            if len(out) == count:
                return

    rec([], n)
    return out


def snp_check_plethysm(lam: Iterable[int], mu: Iterable[int], k: int) -> SNPReport:
    """SNP of s_lam[s_mu] in k variables."""
    exp = plethysm(lam, mu, nvars=k)
    return snp_verdict(support_from_expansion(exp, k))
