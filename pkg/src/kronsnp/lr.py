"""Littlewood-Richardson coefficients.

Everything here is built on :func:`skew_lr`, which counts LR tableaux of a
skew shape row by row. A row filled with multiplicities ``m_v`` keeps the
reverse reading word a lattice word exactly when
``count[v] + m_v <= count[v-1]`` for every ``v >= 2``, where ``count`` is the
content of the rows above. That turns the ballot condition into a check per
row.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Sequence

from .core import contains, partition, partitions, pad
from .errors import InvalidInputError, SizeMismatchError


def _row_fillings(length, above, content, bound):
    """Yield (fill, new_content) for one row.

    ``above[c]`` is the entry over column ``c`` of the row (0 if none).
    """
    nonzero = sum(1 for x in content if x)
    maxv = nonzero + 1
    if bound is not None:
        maxv = min(maxv, len(bound))
    ms = []

    def rec(v, pos):
        if pos == length:
            yield tuple(ms)
            return
        if v > maxv:
            return
        cap = length - pos
        if v >= 2:
            have_prev = content[v - 2] if v - 2 < len(content) else 0
            have = content[v - 1] if v - 1 < len(content) else 0
            cap = min(cap, have_prev - have)
        if bound is not None:
            have = content[v - 1] if v - 1 < len(content) else 0
            cap = min(cap, bound[v - 1] - have)
        # column strictness: every cell given v needs a smaller entry above
        m = 0
        while m < cap and above[pos + m] < v:
            m += 1
        cap = m
        lo = cap if v == maxv else 0
        for take in range(cap, lo - 1, -1):
            ms.append(take)
            yield from rec(v + 1, pos + take)
            ms.pop()

    for mult in rec(1, 0):
        fill = []
        for v, m in enumerate(mult, 1):
            fill.extend([v] * m)
        width = max(len(content), len(mult))
        new = tuple((content[i] if i < len(content) else 0) + (mult[i] if i < len(mult) else 0)
                    for i in range(width))
        yield tuple(fill), new


@lru_cache(maxsize=200000)
def _skew_lr(outer, inner, bound):
    L = len(outer)
    inner = pad(inner, L)
    states = {((), ()): 1}
    prev_start = 0
    for r in range(L):
        a, b = inner[r], outer[r]
        length = b - a
        if length == 0:
            # an empty row breaks column contact with the row above
            new = defaultdict(int)
            for (_, content), cnt in states.items():
                new[((), content)] += cnt
            states = new
            prev_start = a
            continue
        new = defaultdict(int)
        for (prev_fill, content), cnt in states.items():
            above = [0] * length
            for c in range(a, b):
                j = c - prev_start
                if 0 <= j < len(prev_fill):
                    above[c - a] = prev_fill[j]
            for fill, nc in _row_fillings(length, above, content, bound):
                new[(fill, nc)] += cnt
        states = new
        prev_start = a
        if not states:
            return {}
    out = defaultdict(int)
    for (_, content), cnt in states.items():
        out[partition(content)] += cnt
    return dict(out)


def skew_lr(outer: Iterable[int], inner: Iterable[int], bound: Sequence[int] | None = None) -> dict:
    """Schur expansion of the skew Schur function s_{outer/inner}.

    Returns ``{nu: c^outer_{inner, nu}}``. With ``bound`` only contents
    componentwise below ``bound`` are explored.
    """
    outer, inner = partition(outer), partition(inner)
    if not contains(outer, inner):
        return {}
    b = None if bound is None else partition(bound)
    return _skew_lr(outer, inner, b)


def lr_coeff(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^lam_{mu,nu}. Zero when the sizes do not add up."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    # the smaller inner shape usually leaves fewer tableaux to count
    if sum(mu) < sum(nu) or (sum(mu) == sum(nu) and mu < nu):
        mu, nu = nu, mu
    if not nu:
        return 1 if lam == mu else 0
    return skew_lr(lam, mu, bound=nu).get(nu, 0)


@lru_cache(maxsize=None)
def _multi_lr(lam, alphas):
    if not alphas:
        return 1 if not lam else 0
    if len(alphas) == 1:
        return 1 if lam == alphas[0] else 0
    first, rest = alphas[0], alphas[1:]
    total = 0
    for tau, c in skew_lr(lam, first).items():
        total += c * _multi_lr(tau, rest)
    return total


def multi_lr(lam: Iterable[int], alphas: Sequence[Iterable[int]]) -> int:
    """Coefficient of s_lam in the product of the s_alpha."""
    lam = partition(lam)
    al = tuple(partition(a) for a in alphas)
    if sum(lam) != sum(map(sum, al)):
        return 0
    al = tuple(a for a in al if a)
    # largest factors first keeps skew shapes small further down
    al = tuple(sorted(al, key=lambda a: (-sum(a), a)))
    return _multi_lr(lam, al)


def omega(alphas: Sequence[Iterable[int]], n: int, ell: int) -> tuple[int, ...]:
    """Stack the alpha^i into one partition, block i shifted right by n(k-i)."""
    k = len(alphas)
    parts = []
    for i, a in enumerate(alphas, 1):
        a = pad(partition(a), ell)
        if a and a[0] > n:
            raise InvalidInputError("alpha has a part larger than n")
        parts.extend(n * (k - i) + x for x in a)
    return partition(parts)


def delta(n: int, ell: int, k: int) -> tuple[int, ...]:
    parts = []
    for i in range(1, k + 1):
        parts.extend([n * (k - i)] * ell)
    return partition(parts)


def embed_multi_lr(lam: Iterable[int], alphas: Sequence[Iterable[int]], ell: int | None = None) -> tuple:
    """(omega(alpha), lam, delta) with lr_coeff(omega, lam, delta) = multi_lr(lam; alpha).

    ``ell`` defaults to the longest factor.
    """
    lam = partition(lam)
    al = [partition(a) for a in alphas]
    n = sum(lam)
    if n != sum(map(sum, al)):
        raise SizeMismatchError("embed_multi_lr: sizes differ")
    if ell is None:
        ell = max([len(a) for a in al] + [1])
    if any(len(a) > ell for a in al):
        raise InvalidInputError(f"a factor has more than {ell} parts")
    return omega(al, n, ell), lam, delta(n, ell, len(al))


def _subpartitions(outer, m):
    """Partitions of m contained in outer."""
    if not outer:
        if m == 0:
            yield ()
        return
    for p in partitions(m, max_len=len(outer), max_part=outer[0]):
        if contains(outer, p):
            yield p


def p_set_membership(mu: Iterable[int], a: Sequence[int], alphas: Sequence[Iterable[int]]) -> bool:
    """Whether |alpha^i| = a_i for all i and multi_lr(mu; alpha) > 0."""
    al = [partition(x) for x in alphas]
    if len(al) != len(a) or any(sum(x) != int(y) for x, y in zip(al, a)):
        return False
    return multi_lr_positive(mu, al)


def p_set_witness(lam: Iterable[int], a: Sequence[int]):
    """Decide whether some alpha^i |- a_i has multi_lr(lam; alpha) > 0.

    Returns ``(True, witness)`` or ``(False, None)``. Candidates are tried in
    reverse lexicographic order, so the witness is the greedy one.
    """
    lam = partition(lam)
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise InvalidInputError("negative entry in a")
    if sum(a) != sum(lam):
        raise SizeMismatchError("|a| != |lam|")

    @lru_cache(maxsize=None)
    def search(shape, i):
        if i == len(a):
            return () if not shape else None
        if i == len(a) - 1:
            return (shape,) if sum(shape) == a[i] else None
        for alpha in _subpartitions(shape, a[i]):
            for tau in sorted(skew_lr(shape, alpha), reverse=True):
                rest = search(tau, i + 1)
                if rest is not None:
                    return (alpha,) + rest
        return None

    w = search(lam, 0)
    return (w is not None), w


@lru_cache(maxsize=None)
def _multi_lr_positive(lam, alphas):
    if len(alphas) <= 1:
        return lam == (alphas[0] if alphas else ())
    first, rest = alphas[0], alphas[1:]
    return any(_multi_lr_positive(tau, rest) for tau in skew_lr(lam, first))


def multi_lr_positive(lam: Iterable[int], alphas: Sequence[Iterable[int]]) -> bool:
    """Whether multi_lr(lam; alphas) > 0, stopping at the first contribution."""
    lam = partition(lam)
    al = tuple(partition(a) for a in alphas)
    if sum(lam) != sum(map(sum, al)):
        return False
    al = tuple(sorted((a for a in al if a), key=lambda a: (-sum(a), a)))
    return _multi_lr_positive(lam, al)
