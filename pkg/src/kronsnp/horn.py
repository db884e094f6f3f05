"""Horn inequalities and the Kronecker positivity tests built from them.

Index sets are sorted tuples of 1-based integers. A triple (I, J, K) of
equal-size subsets of [r] is LR-consistent when
c^{rho(I)}_{rho(J), rho(K)} = 1.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

import numpy as np

from .core import pad, partition, partitions
from .errors import BudgetExceededError, InvalidInputError, SizeMismatchError
from .lr import skew_lr

DEFAULT_CAP = 8
AUTO_PAIR_LIMIT = 80000


def rho(I: Iterable[int]) -> tuple[int, ...]:
    """(i_s - s, ..., i_1 - 1) for I = {i_1 < ... < i_s}."""
    I = tuple(sorted(int(i) for i in I))
    if len(set(I)) != len(I) or (I and I[0] < 1):
        raise InvalidInputError(f"not a set of positive integers: {I}")
    return partition(reversed([i - t for t, i in enumerate(I, 1)]))


def _unrho(p, s):
    """Inverse of rho for subsets of size s."""
    p = pad(p, s)
    return tuple(p[s - t] + t for t in range(1, s + 1))


def _check_cap(r, cap):
    if cap is not None and r > cap:
        raise BudgetExceededError(f"r = {r} exceeds the generation cap {cap}; pass a larger cap to override")


@lru_cache(maxsize=None)
def _lr_triples(r):
    out = []
    # for r = 1 the only triple is the full one
    for s in range(1, max(r, 2)):
        subsets = list(itertools.combinations(range(1, r + 1), s))
        for I in subsets:
            rI = rho(I)
            for J in subsets:
                rJ = rho(J)
                for rK, c in skew_lr(rI, rJ).items():
                    if c != 1 or len(rK) > s or (rK and rK[0] > r - s):
                        continue
                    out.append((I, J, _unrho(rK, s)))
    out.sort(key=lambda t: (len(t[0]), t))
    return tuple(out)


def lr_consistent_triples(r: int, cap: int | None = DEFAULT_CAP) -> list:
    """All LR-consistent (I, J, K) with 1 <= |I| < r, or ([1], [1], [1]) for r = 1.

    For r > 1 the full triple ([r], [r], [r]) only restates
    |lam| = |mu| + |nu| and is left out.
    """
    if r < 1:
        raise InvalidInputError("r must be positive")
    _check_cap(r, cap)
    return list(_lr_triples(r))


@lru_cache(maxsize=None)
def _horn_matrix(r):
    triples = _lr_triples(r)
    M = np.zeros((len(triples), 3 * r), dtype=np.int64)
    for row, (I, J, K) in enumerate(triples):
        for i in I:
            M[row, i - 1] += 1
        for j in J:
            M[row, r + j - 1] -= 1
        for k in K:
            M[row, 2 * r + k - 1] -= 1
    return M


def horn_positive(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int], cap: int | None = DEFAULT_CAP) -> bool:
    """Whether (lam, mu, nu) satisfies every Horn inequality, i.e. c^lam_{mu,nu} > 0."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return False
    r = max(len(lam), len(mu), len(nu), 1)
    _check_cap(r, cap)
    v = np.array(pad(lam, r) + pad(mu, r) + pad(nu, r), dtype=np.int64)
    return bool(np.all(_horn_matrix(r) @ v <= 0))


def horn_positive_batch(r: int, vectors: np.ndarray) -> np.ndarray:
    """Vectorised Horn test. ``vectors`` has rows (lam | mu | nu), each padded to r."""
    return np.all(vectors @ _horn_matrix(r).T <= 0, axis=1)


# --- multi-LR consistent triples -------------------------------------------


def _block_pairs(ell):
    """(I_p, K_p) inside one block of size ell, |I_p| = |K_p|, K_p <= I_p entrywise."""
    out = []
    for t in range(ell + 1):
        subs = list(itertools.combinations(range(ell), t))
        for a in subs:
            for b in subs:
                if all(y <= x for x, y in zip(a, b)):
                    out.append((a, b))
    return out


def mlr_consistent_triples(ell: int, k: int, cap: int | None = DEFAULT_CAP) -> list:
    """LR-consistent triples over [ell*k] with I and K meeting each block equally.

    Block j is [ell(j-1)+1, ell*j]. Generated from block-matched (I, K)
    pairs instead of filtering all triples; the two agree (see tests).
    """
    if ell < 1 or k < 1:
        raise InvalidInputError("ell and k must be positive")
    r = ell * k
    _check_cap(r, cap)
    return list(_mlr_triples(ell, k))


def _mlr_iter(ell, k):
    r = ell * k
    per_block = _block_pairs(ell)
    for choice in itertools.product(per_block, repeat=k):
        I, K = [], []
        for p, (a, b) in enumerate(choice):
            I.extend(ell * p + x + 1 for x in a)
            K.extend(ell * p + y + 1 for y in b)
        s = len(I)
        if s == 0 or (s == r and r > 1):
            continue
        I, K = tuple(I), tuple(K)
        for rJ, c in skew_lr(rho(I), rho(K)).items():
            if c != 1 or len(rJ) > s or (rJ and rJ[0] > r - s):
                continue
            yield I, _unrho(rJ, s), K


@lru_cache(maxsize=None)
def _mlr_triples(ell, k):
    return tuple(sorted(_mlr_iter(ell, k), key=lambda t: (len(t[0]), t)))


def D(I: Iterable[int], ell: int) -> list[tuple[int, int]]:
    """Positions (i, j) with ell(i-1) + j in I."""
    return [((m - 1) // ell + 1, (m - 1) % ell + 1) for m in sorted(I)]


def _block_pair_count(ell, k):
    return len(_block_pairs(ell)) ** k


@lru_cache(maxsize=None)
def _mlr_reduced(ell, k):
    """Compact form of the mLR inequalities for (ell, k).

    For each I only the entrywise-largest J are kept: a larger J gives a
    smaller right side for every weakly decreasing mu, so the others are
    implied. Returns (Imat, Jmat, starts, jidx) with the J rows of I number
    ``t`` at ``jidx[starts[t]:starts[t+1]]``.
    """
    r = ell * k
    by_I = {}
    for I, J, _ in _mlr_iter(ell, k):
        by_I.setdefault(I, set()).add(J)
    Is = sorted(by_I, key=lambda t: (len(t), t))
    J_index = {}
    starts, jidx = [0], []
    for I in Is:
        Js = by_I[I]
        top = [J for J in Js
               if not any(O != J and all(o >= j for o, j in zip(O, J)) for O in Js)]
        for J in sorted(top):
            jidx.append(J_index.setdefault(J, len(J_index)))
        starts.append(len(jidx))
    Imat = np.zeros((len(Is), r), dtype=np.int64)
    for t, I in enumerate(Is):
        Imat[t, [m - 1 for m in I]] = 1
    Jmat = np.zeros((len(J_index), r), dtype=np.int64)
    for J, t in J_index.items():
        Jmat[t, [j - 1 for j in J]] = 1
    return Imat, Jmat, np.array(starts), np.array(jidx, dtype=np.int64)


def mlr_rhs(ell, k, mu, nu, cap=DEFAULT_CAP):
    """Rows ``Imat`` and right sides min(sum_J mu, sum_J nu), minimised over J, per I."""
    _check_cap(ell * k, cap)
    r = ell * k
    Imat, Jmat, starts, jidx = _mlr_reduced(ell, k)
    if not len(Imat):
        return Imat, np.zeros(0, dtype=np.int64)
    m = np.minimum(Jmat @ np.array(pad(mu, r)), Jmat @ np.array(pad(nu, r)))
    rhs = np.minimum.reduceat(m[jidx], starts[:-1])
    return Imat, rhs


def _alpha_candidates(lam, ell):
    """All tuples alpha^i |- lam_i with at most ell parts, flattened, as an array."""
    blocks = [[pad(p, ell) for p in partitions(x, max_len=ell)] for x in lam]
    rows = [sum(c, ()) for c in itertools.product(*blocks)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), ell * len(lam))


def kron_necessary_general(lam, mu, nu, cap: int | None = DEFAULT_CAP, method: str = "inequalities"):
    """Necessary condition for g(lam, mu, nu) > 0 from mLR-consistent triples.

    Looks for alpha^i |- lam_i, with ell = min(l(mu), l(nu)) parts each,
    satisfying every mLR inequality
    sum_{D(I)} alpha <= min(sum_J mu, sum_J nu). Returns ``(verdict, witness)``.

    ``method="inequalities"`` builds the inequalities explicitly and obeys
    ``cap`` on r = ell * l(lam). ``method="lr"`` tests each candidate alpha
    by multi-LR positivity for mu and for nu instead. An LR-consistent triple
    has K <= I entrywise, so a triple that does not meet the blocks equally
    holds for free, and the mLR rows for mu are the whole Horn system of
    c^{omega(alpha)}_{mu, delta}. Saturation then makes the two methods agree
    on integer alpha. ``method="auto"`` uses the explicit rows when r is
    within ``cap`` and there are at most AUTO_PAIR_LIMIT block-matched (I, K)
    pairs to expand, and multi-LR positivity otherwise.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise SizeMismatchError("sizes differ")
    if n == 0:
        return True, ()
    k = len(lam)
    ell = min(len(mu), len(nu))
    r = ell * k
    if method == "auto":
        small = _block_pair_count(ell, k) <= AUTO_PAIR_LIMIT
        method = "inequalities" if small and (cap is None or r <= cap) else "lr"
    if max(len(mu), len(nu)) > r:
        # the stacked partition omega(alpha) has only ell*k rows
        return False, None
    if method == "lr":
        from .lr import multi_lr_positive
        blocks = [[pad(p, ell) for p in partitions(x, max_len=ell)] for x in lam]
        for combo in itertools.product(*blocks):
            al = [partition(a) for a in combo]
            if multi_lr_positive(mu, al) and multi_lr_positive(nu, al):
                return True, tuple(combo)
        return False, None
    if method != "inequalities":
        raise InvalidInputError(f"unknown method {method!r}")
    Imat, rhs = mlr_rhs(ell, k, mu, nu, cap=cap)
    cand = _alpha_candidates(lam, ell)
    for lo in range(0, len(cand), 4096):
        chunk = cand[lo:lo + 4096]
        ok = np.all(chunk @ Imat.T <= rhs, axis=1) if len(Imat) else np.ones(len(chunk), bool)
        hits = np.flatnonzero(ok)
        if len(hits):
            a = chunk[hits[0]]
            return True, tuple(tuple(int(x) for x in a[i * ell:(i + 1) * ell]) for i in range(k))
    return False, None


def _two_row_rhs(mu, nu, p, b, c):
    r = 2 * p + c
    if b == 0:
        options = [list(range(1, r + 1))]
    else:
        options = [list(range(1, r + 1)) + list(range(r + 2, r + b + 2)),
                   list(range(1, r + b)) + [r + 2 * b]]
    L = 2 * p + 2 * b + 2 * c + 2

    def tot(part, J):
        pp = pad(part, max(L, len(part)))
        return sum(pp[j - 1] for j in J)

    return min(min(tot(mu, J), tot(nu, J)) for J in options)


def kron_necessary_two_row(lam, mu, nu):
    """Two-row specialisation of :func:`kron_necessary_general`.

    ``mu`` (or ``nu``, which is then swapped in) must have exactly two rows.
    Searches y_i in [0, floor(lam_i/2)] against every choice of disjoint
    A, B, C in [k]; for fixed sizes the worst choice is found by a small DP.
    Returns ``(verdict, y)``.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise SizeMismatchError("sizes differ")
    if len(mu) != 2:
        if len(nu) == 2:
            mu, nu = nu, mu
        else:
            raise InvalidInputError("need a two-row partition in position mu or nu")
    k = len(lam)
    if k == 0:
        return True, ()
    rhs = {}
    for p in range(k + 1):
        for b in range(k + 1 - p):
            for c in range(k + 1 - p - b):
                if p + b + c:
                    rhs[(p, b, c)] = _two_row_rhs(mu, nu, p, b, c)
    NEG = float("-inf")

    def worst(y):
        # best[p][b][c]: largest left side over disjoint A, B, C of those sizes
        best = {(0, 0, 0): 0}
        for i in range(k):
            nxt = dict(best)
            for (p, b, c), v in best.items():
                for key, add in (((p + 1, b, c), lam[i]), ((p, b + 1, c), y[i]), ((p, b, c + 1), lam[i] - y[i])):
                    if v + add > nxt.get(key, NEG):
                        nxt[key] = v + add
            best = nxt
        return best

    for y in itertools.product(*[range(x // 2 + 1) for x in lam]):
        best = worst(y)
        if all(v <= rhs[key] for key, v in best.items() if key != (0, 0, 0)):
            return True, y
    return False, None
