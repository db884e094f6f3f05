"""Kronecker coefficients beyond the character table.

Two independent routes are available. :func:`kronecker.kron_coeff` with
``method="jacobi_trudi"`` expands the shortest argument by the Jacobi-Trudi
determinant and evaluates each term as a monomial coefficient of
``s_mu * s_nu`` through sums of products of LR coefficients. The character
table route lives in :mod:`kronsnp.core`.

The closed formulas for two-row cases are also here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import (SchurExpansion, dominates, kron_coeff_oracle,
                   kron_product, pad, partition, partitions)
from .errors import InvalidInputError, PreconditionError, SizeMismatchError
from .lr import _subpartitions, skew_lr


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# --- monomial coefficients through multi-LR sums --------------------------


def _meet(a, b):
    return partition(min(x, y) for x, y in zip(a, b))


def monomial_coeff_multilr(mu: Iterable[int], nu: Iterable[int], a: Sequence[int]) -> int:
    """Coefficient of x^a in s_mu * s_nu, as a sum of c^mu_alpha c^nu_alpha.

    The sum runs over tuples alpha^i |- a_i. It equals <s_mu * s_nu, h_a>.
    """
    mu, nu = partition(mu), partition(nu)
    if sum(mu) != sum(nu):
        raise SizeMismatchError(f"|{mu}| != |{nu}|")
    if any(int(x) < 0 for x in a):
        raise InvalidInputError("negative exponent")
    parts = sorted((int(x) for x in a if x), reverse=True)
    if sum(parts) != sum(mu):
        raise SizeMismatchError(f"|{tuple(a)}| != |{mu}|")
    if not parts:
        return 1

    @lru_cache(maxsize=None)
    def F(m, n_, i):
        if i == len(parts) - 1:
            return 1 if m == n_ else 0
        total = 0
        for alpha in _subpartitions(_meet(m, n_), parts[i]):
            e1 = skew_lr(m, alpha)
            e2 = skew_lr(n_, alpha)
            if i == len(parts) - 2:
                total += sum(c * e2.get(t, 0) for t, c in e1.items())
                continue
            for t, c in e1.items():
                for s, d in e2.items():
                    f = F(t, s, i + 1)
                    if f:
                        total += c * d * f
        return total

    return F(mu, nu, 0)


def monomial_positive(mu: Iterable[int], nu: Iterable[int], a: Sequence[int]) -> bool:
    """True when x^a appears in s_mu * s_nu. Same recursion as above, stops early."""
    mu, nu = partition(mu), partition(nu)
    if sum(mu) != sum(nu):
        raise SizeMismatchError(f"|{mu}| != |{nu}|")
    parts = sorted((int(x) for x in a if x), reverse=True)
    if sum(parts) != sum(mu):
        return False
    if not parts:
        return True

    @lru_cache(maxsize=None)
    def F(m, n_, i):
        if i == len(parts) - 1:
            return m == n_
        for alpha in _subpartitions(_meet(m, n_), parts[i]):
            e1 = skew_lr(m, alpha)
            e2 = skew_lr(n_, alpha)
            if i == len(parts) - 2:
                if any(t in e2 for t in e1):
                    return True
                continue
            for t in e1:
                for s in e2:
                    if F(t, s, i + 1):
                        return True
        return False

    return F(mu, nu, 0)


def _sign(perm):
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def kron_coeff(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int], method: str = "auto") -> int:
    """g(lam, mu, nu).

    ``method`` is ``"character"``, ``"jacobi_trudi"`` or ``"auto"``. Auto uses
    the character table up to n = 18 and the Jacobi-Trudi route above that.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise SizeMismatchError(f"sizes differ: {lam}, {mu}, {nu}")
    if method == "auto":
        method = "character" if n <= 18 else "jacobi_trudi"
    if method == "character":
        return kron_coeff_oracle(lam, mu, nu)
    if method != "jacobi_trudi":
        raise InvalidInputError(f"unknown method {method!r}")
    if n == 0:
        return 1
    trio = sorted([lam, mu, nu], key=len)
    short, p, q = trio
    L = len(short)
    total = 0
    for w in itertools.permutations(range(L)):
        comp = [short[i] - i + w[i] for i in range(L)]
        if any(c < 0 for c in comp):
            continue
        c = monomial_coeff_multilr(p, q, comp)
        if c:
            total += _sign(w) * c
    return total


# --- monomial supports -----------------------------------------------------


@dataclass(frozen=True)
class MonomialSupport:
    """Exponent vectors with nonzero coefficient in a symmetric polynomial.

    Stored by the sorted representatives only, padded to ``k`` entries.
    """

    k: int
    degree: int
    sorted_points: frozenset

    def __contains__(self, point) -> bool:
        p = tuple(int(x) for x in point)
        if len(p) != self.k or sum(p) != self.degree or min(p, default=0) < 0:
            return False
        return tuple(sorted(p, reverse=True)) in self.sorted_points

    def __len__(self):
        return len(self.sorted_points)

    def points(self) -> list[tuple[int, ...]]:
        """All exponent vectors, permutations included."""
        out = set()
        for p in self.sorted_points:
            out.update(set(itertools.permutations(p)))
        return sorted(out, reverse=True)

    def to_json(self) -> dict:
        return {"k": self.k, "degree": self.degree,
                "sorted_points": [list(p) for p in sorted(self.sorted_points, reverse=True)]}

    @classmethod
    def from_json(cls, data) -> "MonomialSupport":
        return cls(int(data["k"]), int(data["degree"]),
                   frozenset(tuple(p) for p in data["sorted_points"]))


def support_from_expansion(expansion: SchurExpansion, k: int) -> MonomialSupport:
    """Monomial support in k variables of a Schur-positive expansion."""
    terms = [t for t, c in expansion if c > 0 and len(t) <= k]
    pts = set()
    for a in partitions(expansion.n, max_len=k):
        if any(dominates(t, a) for t in terms):
            pts.add(pad(a, k))
    return MonomialSupport(k, expansion.n, frozenset(pts))


def monomial_support(lam: Iterable[int], mu: Iterable[int], k: int, method: str = "auto") -> MonomialSupport:
    """Monomial support of s_lam * s_mu in k variables.

    ``"character"`` reads it off the full Kronecker product; ``"multilr"``
    tests each candidate exponent with :func:`monomial_positive`.
    """
    lam, mu = partition(lam), partition(mu)
    n = sum(lam)
    if sum(mu) != n:
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    if k < 1:
        raise InvalidInputError("k must be positive")
    if method == "auto":
        method = "character" if n <= 18 else "multilr"
    if method == "character":
        return support_from_expansion(kron_product(lam, mu), k)
    if method != "multilr":
        raise InvalidInputError(f"unknown method {method!r}")
    pts = set()
    for a in partitions(n, max_len=k):
        # dominance closure: anything dominated by a known point is in too
        if any(dominates(q, a) for q in pts) or monomial_positive(lam, mu, a):
            pts.add(pad(a, k))
    return MonomialSupport(k, n, frozenset(pts))


# --- closed formulas --------------------------------------------------------


def rosas_sigma(k: int, l: int, h: int) -> int:
    """Lattice-point count sigma_{k,l}(h) in a k x l rectangle."""
    if k < 1 or l < 1:
        raise InvalidInputError("rectangle sides must be positive")
    if h < 0:
        return 0
    lo, hi = min(k, l), max(k, l)
    if h < lo:
        return (h + 2) ** 2 // 4
    if h < hi:
        s = lo - 2 if (h - lo) % 2 == 0 else lo - 1
        return rosas_sigma(k, l, s) + (h - s) // 2 * lo
    rest = rosas_sigma(k, l, k + l - h - 4)
    if h % 2 == 0:
        return ceil_div(k * l, 2) - rest
    return (k * l) // 2 - rest


def _rosas_delta(a, b, x):
    if x < a:
        return 0
    if x <= a + b:
        return ceil_div(x - a + 1, 2)
    if (x - a - b) % 2 == 0:
        return ceil_div(b + 1, 2)
    return (b + 1) // 2


def rosas_phi(a: int, b: int, c: int, d: int, x: int, y: int) -> int:
    if y < 0:
        return 0
    if y <= c:
        return rosas_sigma(b + 1, d + 1, x + y - a - c)
    if y < c + d:
        return (rosas_sigma(b + 1, y - c + 1, x - a)
                + rosas_sigma(b + 1, c + d - y + 1, x - a)
                - _rosas_delta(a, b, x))
    return rosas_sigma(b + 1, d + 1, x - y + c + d - a)


def rosas_kron_tworow_pair(beta: Iterable[int], gamma: Iterable[int], alpha: Iterable[int]) -> int:
    """g(beta, gamma, alpha) for two-row beta, gamma and alpha with at most 4 rows."""
    beta, gamma, alpha = partition(beta), partition(gamma), partition(alpha)
    n = sum(alpha)
    if sum(beta) != n or sum(gamma) != n:
        raise SizeMismatchError("sizes differ")
    if len(beta) > 2 or len(gamma) > 2 or len(alpha) > 4:
        raise PreconditionError("need two-row beta, gamma and alpha with at most 4 rows")
    b2 = pad(beta, 2)[1]
    g2 = pad(gamma, 2)[1]
    if g2 > b2:
        raise PreconditionError("need gamma_2 <= beta_2")
    a1, a2, a3, a4 = pad(alpha, 4)
    a = a3 + a4
    b = a2 - a3
    c = min(a1 - a2, a3 - a4)
    d = abs(a1 + a4 - a2 - a3)
    return (rosas_phi(a, b, a + b + 1, c, g2, b2 + 1)
            - rosas_phi(a, b, a + b + c + d + 2, c, g2, b2 + 1))


def rosas_kron_tworow_triple(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """g for three partitions with at most two rows each."""
    trio = [partition(p) for p in (lam, mu, nu)]
    n = sum(trio[0])
    if any(sum(p) != n for p in trio):
        raise SizeMismatchError("sizes differ")
    if any(len(p) > 2 for p in trio):
        raise PreconditionError("all three must have at most two rows")
    g2, b2, a2 = sorted(pad(p, 2)[1] for p in trio)
    x = max(0, ceil_div(b2 + g2 + a2 - n, 2))
    y = ceil_div(b2 + g2 - a2 + 1, 2)
    return max(y - x, 0)


def two_row_h_positive(mu: Iterable[int], nu: Iterable[int], lam: Iterable[int]) -> bool:
    """Positivity of <s_mu * s_nu, h_lam> for two-row mu, nu with mu_2 >= nu_2."""
    mu, nu, lam = partition(mu), partition(nu), partition(lam)
    n = sum(mu)
    if sum(nu) != n or sum(lam) != n:
        raise SizeMismatchError("sizes differ")
    if len(mu) > 2 or len(nu) > 2 or len(lam) > 2:
        raise PreconditionError("all three must have at most two rows")
    m2, v2, l2 = pad(mu, 2)[1], pad(nu, 2)[1], pad(lam, 2)[1]
    if m2 < v2:
        raise PreconditionError("need mu_2 >= nu_2")
    return l2 >= m2 - v2


def dvir_max_first_row(mu: Iterable[int], nu: Iterable[int]) -> int:
    """Largest lam_1 with g(mu, nu, lam) > 0, for two-row mu and three-row nu, mu_1 <= nu_1."""
    mu, nu = partition(mu), partition(nu)
    if sum(mu) != sum(nu):
        raise SizeMismatchError("sizes differ")
    if len(mu) > 2 or len(nu) > 3:
        raise PreconditionError("need two-row mu and three-row nu")
    m, v = pad(mu, 2), pad(nu, 3)
    if m[0] > v[0]:
        raise PreconditionError("need mu_1 <= nu_1")
    # the size of the intersection of the two diagrams
    return sum(min(x, y) for x, y in zip(m, v))
