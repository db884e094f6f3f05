"""Saturated Newton polytope checks.

A support is saturated when every lattice point of its convex hull is in it.
Monomial supports of symmetric polynomials are closed under permuting
coordinates, so only sorted lattice points need testing. A sorted point p
lies in the hull of such a set iff p is majorized by a convex combination of
the sorted representatives, which is a small exact LP with one row per
prefix sum. The explicit LP over every point is kept as the second route and
is used to produce witnesses.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import dominates, kron_product, pad, partition, partitions
from .errors import InvalidInputError, PreconditionError, SizeMismatchError
from .kronecker import MonomialSupport, kron_coeff, monomial_positive, monomial_support, support_from_expansion
from .lp import simplex_phase1


def _frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def in_hull_explicit(point: Sequence, points: Sequence[Sequence]):
    """Convex weights expressing ``point`` over ``points``, or None.

    The simplex returns a basic solution, so at most dim + 1 weights are nonzero.
    """
    pts = [tuple(p) for p in points]
    if not pts:
        return None
    d = len(pts[0])
    A = [[Fraction(p[i]) for p in pts] for i in range(d)]
    A.append([Fraction(1)] * len(pts))
    b = [Fraction(x) for x in point] + [Fraction(1)]
    sol = simplex_phase1(A, b)
    if sol is None:
        return None
    return {pts[i]: w for i, w in enumerate(sol) if w}


def in_hull_majorization(point: Sequence, sorted_points: Iterable[Sequence]) -> bool:
    """Hull membership for a permutation-closed set given by sorted representatives."""
    reps = [tuple(sorted(p, reverse=True)) for p in sorted_points]
    if not reps:
        return False
    q = sorted((Fraction(x) for x in point), reverse=True)
    k = len(q)
    if any(len(r) != k for r in reps):
        raise InvalidInputError("points of different lengths")
    if sum(q) != sum(reps[0]):
        return False
    prefix = [list(itertools.accumulate(r)) for r in reps]
    target = list(itertools.accumulate(q))
    # sum_v t_v P_j(v) - s_j = P_j(q) for j < k, sum t_v = 1
    rows, rhs = [], []
    for j in range(k - 1):
        slack = [Fraction(0)] * (k - 1)
        slack[j] = Fraction(-1)
        rows.append([Fraction(p[j]) for p in prefix] + slack)
        rhs.append(target[j])
    rows.append([Fraction(1)] * len(reps) + [Fraction(0)] * (k - 1))
    rhs.append(Fraction(1))
    return simplex_phase1(rows, rhs) is not None


def in_hull(point: Sequence, support, method: str = "auto") -> bool:
    """Whether ``point`` lies in the convex hull of ``support``.

    ``support`` is a MonomialSupport or a list of points. For a
    MonomialSupport the default is the majorization LP.
    """
    if isinstance(support, MonomialSupport):
        if method in ("auto", "majorization"):
            return in_hull_majorization(point, support.sorted_points)
        return in_hull_explicit(point, support.points()) is not None
    if method == "majorization":
        return in_hull_majorization(point, support)
    return in_hull_explicit(point, list(support)) is not None


@dataclass
class SNPReport:
    saturated: bool
    missing: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    method: str = "lattice"

    def __bool__(self):
        return self.saturated

    def to_json(self) -> dict:
        return {"saturated": self.saturated,
                "missing": [list(m) for m in self.missing],
                "witnesses": self.witnesses,
                "method": self.method}


def _witness(point, support: MonomialSupport):
    w = in_hull_explicit(point, support.points())
    if w is None:
        return None
    return {"point": list(point),
            "combination": [{"weight": _frac_str(t), "vertex": list(v)} for v, t in w.items()]}


def snp_verdict(support: MonomialSupport, witnesses: bool = True) -> SNPReport:
    """Check saturation by testing every sorted lattice point of the degree simplex."""
    missing = []
    for a in partitions(support.degree, max_len=support.k):
        p = pad(a, support.k)
        if p in support.sorted_points:
            continue
        if in_hull_majorization(p, support.sorted_points):
            missing.append(p)
    report = SNPReport(not missing, missing)
    if witnesses:
        report.witnesses = [w for w in (_witness(m, support) for m in missing) if w]
    return report


def schur_support(lam: Iterable[int], k: int) -> MonomialSupport:
    """Monomial support of s_lam(x_1..x_k): the a with sort(a) dominated by lam.

    Empty when lam has more than k parts.
    """
    lam = partition(lam)
    n = sum(lam)
    if len(lam) > k:
        return MonomialSupport(k, n, frozenset())
    pts = frozenset(pad(p, k) for p in partitions(n, max_len=k) if dominates(lam, p))
    return MonomialSupport(k, n, pts)


def snp_check_kron(lam: Iterable[int], mu: Iterable[int], k: int, fast_path: bool = False) -> SNPReport:
    """SNP of s_lam * s_mu in k variables.

    With ``fast_path`` a unique dominance-maximal term among those with at
    most k rows settles the question without enumeration: the support is
    then the lattice points of one permutohedron.
    """
    lam, mu = partition(lam), partition(mu)
    exp = kron_product(lam, mu)
    if fast_path:
        short = [t for t, c in exp if len(t) <= k]
        top = [t for t in short if not any(u != t and dominates(u, t) for u in short)]
        if len(top) == 1:
            return SNPReport(True, [], [], method="unique-dominant")
    return snp_verdict(support_from_expansion(exp, k))


# --- limits and positivity consequences ----------------------------------------


@dataclass
class LimitReport:
    ok: bool
    absorbed: list = field(default_factory=list)
    unabsorbed: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "absorbed": [{"point": [_frac_str(x) for x in c], "p": p} for c, p in self.absorbed],
                "unabsorbed": [[_frac_str(x) for x in c] for c in self.unabsorbed]}


def scaled_support_contains(lam, mu, point: Sequence, p: int) -> bool:
    """Whether ``point`` is in (1/p) M_k(s_{p lam} * s_{p mu})."""
    q = [Fraction(x) * p for x in point]
    if any(x.denominator != 1 or x < 0 for x in q):
        return False
    L = tuple(p * x for x in partition(lam))
    M = tuple(p * x for x in partition(mu))
    return monomial_positive(L, M, [int(x) for x in q])


def limit_convexity_check(lam, mu, k: int, p_max: int = 2, samples=None) -> LimitReport:
    """Sample convex combinations of points of M_k(s_lam * s_mu) and look for
    each in (1/p) M_k(s_{p lam} * s_{p mu}) for p up to ``p_max``.

    ``samples`` is a list of (weights, points); by default every pair of
    sorted representatives with weights j/q, q <= p_max. A combination that is
    not found is reported, it does not refute anything on its own.
    """
    lam, mu = partition(lam), partition(mu)
    U = monomial_support(lam, mu, k)
    if samples is None:
        reps = sorted(U.sorted_points)
        samples = []
        for u, v in itertools.combinations(reps, 2):
            for q in range(2, p_max + 1):
                for j in range(1, q):
                    samples.append(((Fraction(j, q), Fraction(q - j, q)), (u, v)))
    combos = set()
    for weights, pts in samples:
        if sum(Fraction(w) for w in weights) != 1 or any(Fraction(w) < 0 for w in weights):
            raise InvalidInputError("weights must be nonnegative and sum to 1")
        c = tuple(sum(Fraction(w) * x[i] for w, x in zip(weights, pts)) for i in range(k))
        combos.add(tuple(sorted(c, reverse=True)))
    absorbed, unabsorbed = [], []
    for c in sorted(combos, reverse=True):
        den = 1
        for x in c:
            den = den * x.denominator // math.gcd(den, x.denominator)
        found = None
        for p in range(den, p_max + 1, den):
            if p == 1:
                if tuple(int(x) for x in c) in U.sorted_points:
                    found = 1
                    break
            elif scaled_support_contains(lam, mu, c, p):
                found = p
                break
        if found is None:
            unabsorbed.append(c)
        else:
            absorbed.append((c, found))
    return LimitReport(not unabsorbed, absorbed, unabsorbed)


def kron_scaling_absorbed(lam, mu, nu, p_max: int = 2):
    """Smallest p <= p_max with g(p lam, p mu, p nu) > 0, or None."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    for p in range(1, p_max + 1):
        if kron_coeff(tuple(p * x for x in lam), tuple(p * x for x in mu), tuple(p * x for x in nu)) > 0:
            return p
    return None


def snp_positivity_consequence(lam, mu, combination) -> bool:
    """Given g(lam, mu, alpha^i) > 0 for each term of an integral convex
    combination, decide whether some theta with g(lam, mu, theta) > 0
    dominates the combination.

    ``combination`` is a list of (weight, alpha) pairs.
    """
    lam, mu = partition(lam), partition(mu)
    n = sum(lam)
    if sum(mu) != n:
        raise SizeMismatchError("sizes differ")
    exp = kron_product(lam, mu)
    weights = [Fraction(w) for w, _ in combination]
    alphas = [partition(a) for _, a in combination]
    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise InvalidInputError("weights must be nonnegative and sum to 1")
    for a in alphas:
        if sum(a) != n:
            raise SizeMismatchError(f"{a} is not a partition of {n}")
        if exp[a] <= 0:
            raise PreconditionError(f"g(lam, mu, {a}) = 0")
    L = max(len(a) for a in alphas)
    comb = [sum(w * pad(a, L)[i] for w, a in zip(weights, alphas)) for i in range(L)]
    if any(x.denominator != 1 for x in comb):
        raise PreconditionError("the combination is not integral")
    target = partition(int(x) for x in comb)
    return any(dominates(t, target) for t, c in exp if c > 0)
