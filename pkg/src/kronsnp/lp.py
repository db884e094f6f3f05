"""Exact rational linear feasibility.

Two independent engines: Fourier-Motzkin elimination for small dimension and
a dense two-phase simplex with Bland's rule. Both work on ``Fraction``
entries and never round.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceededError

FM_ROW_LIMIT = 200000


def _normalise(coeffs, rhs):
    """Scale a row so the coefficients are coprime integers."""
    if all(type(c) is int for c in coeffs):
        ints = coeffs
        den = 1
    else:
        den = 1
        for c in coeffs:
            d = Fraction(c).denominator
            den = den * d // math.gcd(den, d)
        ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        return tuple(ints), Fraction(rhs)
    if g == 1 and den == 1:
        return tuple(ints), Fraction(rhs)
    return tuple(x // g for x in ints), Fraction(rhs) * den / g


def _dedupe(rows):
    """Keep the tightest right side per direction. Returns None if 0 <= negative shows up.

    Coefficients come back as coprime integer tuples.
    """
    best = {}
    for coeffs, rhs in rows:
        c, b = _normalise(coeffs, rhs)
        if not any(c):
            if b < 0:
                return None
            continue
        if c not in best or b < best[c]:
            best[c] = b
    return list(best.items())


def fm_eliminate(rows, var):
    """Project ``rows`` (list of (coeffs, rhs) meaning coeffs.x <= rhs) along ``var``."""
    pos, neg, rest = [], [], []
    for coeffs, rhs in rows:
        c = coeffs[var]
        if c > 0:
            pos.append((coeffs, rhs))
        elif c < 0:
            neg.append((coeffs, rhs))
        else:
            rest.append((coeffs, rhs))
    if len(pos) * len(neg) + len(rest) > FM_ROW_LIMIT:
        raise BudgetExceededError("Fourier-Motzkin row limit exceeded")
    out = list(rest)
    for cp, bp in pos:
        for cn, bn in neg:
            a, b = cp[var], -cn[var]
            coeffs = tuple(b * x + a * y for x, y in zip(cp, cn))
            out.append((coeffs, b * bp + a * bn))
    return _dedupe(out)


def _eq_to_le(eq):
    rows = []
    for coeffs, rhs in eq:
        rows.append((tuple(coeffs), rhs))
        rows.append((tuple(-c for c in coeffs), -rhs))
    return rows


def fm_feasible(le: Sequence, eq: Sequence = ()) -> bool:
    """Feasibility of {x : A x <= b, C x = d} by Fourier-Motzkin."""
    rows = _dedupe(list(le) + _eq_to_le(eq))
    if rows is None:
        return False
    if not rows:
        return True
    dim = len(rows[0][0])
    for v in range(dim):
        rows = fm_eliminate(rows, v)
        if rows is None:
            return False
    return True


def fm_projections(le: Sequence, eq: Sequence = ()):
    """``proj[i]`` is the system projected onto the first i+1 variables.

    Returns None when the system is infeasible.
    """
    rows = _dedupe(list(le) + _eq_to_le(eq))
    if rows is None:
        return None
    if not rows:
        return []
    dim = len(rows[0][0])
    proj = [None] * dim
    proj[dim - 1] = rows
    for v in range(dim - 1, 0, -1):
        rows = fm_eliminate(rows, v)
        if rows is None:
            return None
        proj[v - 1] = rows
    # the one-variable system must itself be feasible
    if fm_eliminate(rows, 0) is None:
        return None
    return proj


# --- simplex ---------------------------------------------------------------


def _phase1(A, b):
    """Phase one on A x = b, x >= 0. Returns (x or None, row multipliers).

    At the end the multipliers u satisfy A^T u <= 0 and b.u equals the
    remaining infeasibility, which is what the dual route below relies on.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    T, sign = [], []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        s = 1
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
            s = -1
        sign.append(s)
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row + art + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m
    # objective: minimise the sum of artificials, stored as reduced costs
    obj = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            obj[j] -= T[i][j]
    for i in range(m):
        obj[n + i] += 1
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break  # unbounded direction cannot happen in phase one
        r = best[1]
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, T[r])]
        basis[r] = enter
    u = [sign[i] * (1 - obj[n + i]) for i in range(m)]
    if -obj[-1] != 0:
        return None, u
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
        elif T[i][-1] != 0:
            return None, u
    return x, u


def simplex_phase1(A: Sequence[Sequence], b: Sequence):
    """Find x >= 0 with A x = b, or None. Dense tableau, Bland's rule."""
    return _phase1(A, b)[0]


def simplex_feasible(le: Sequence, eq: Sequence = (), dim: int | None = None):
    """Feasibility of {x free : A x <= b, C x = d}. Returns a point or None.

    Works on the Farkas system y >= 0, y A = 0, y.b = -1, which has only
    dim + 1 rows. If it has no solution, the phase one multipliers give a
    point of the original system.
    """
    rows = list(le) + _eq_to_le(eq)
    if dim is None:
        dim = len(rows[0][0]) if rows else 0
    rows = _dedupe(rows)
    if rows is None:
        return None
    if not rows:
        return [Fraction(0)] * dim
    A = [[c[j] for c, _ in rows] for j in range(dim)] + [[rhs for _, rhs in rows]]
    y, u = _phase1(A, [0] * dim + [-1])
    if y is not None:
        return None
    u0 = u[dim]
    x = [-u[j] / u0 for j in range(dim)]
    assert all(sum(c * v for c, v in zip(co, x)) <= rhs for co, rhs in rows)
    return x
