"""Linear systems for the multi-LR polytopes and their integer points."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .core import pad, partition
from .errors import InvalidInputError, PreconditionError, SizeMismatchError
from .horn import DEFAULT_CAP, D, lr_consistent_triples
from .lp import fm_feasible, fm_projections, simplex_feasible


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class LinearSystem:
    """Rows ``coeffs . x <= rhs`` and ``coeffs . x == rhs`` over named variables.

    ``boxes`` maps a variable name to rational (lower, upper) bounds. Boxes
    take part in feasibility and point search like any other row.
    """

    vars: list
    le: list = field(default_factory=list)
    eq: list = field(default_factory=list)
    boxes: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.vars)

    def _row(self, coeffs) -> tuple:
        if isinstance(coeffs, dict):
            row = [Fraction(0)] * self.dim
            for name, c in coeffs.items():
                row[self.vars.index(name)] += Fraction(c)
            return tuple(row)
        row = tuple(Fraction(c) for c in coeffs)
        if len(row) != self.dim:
            raise InvalidInputError("row length does not match the variables")
        return row

    def add_le(self, coeffs, rhs):
        self.le.append((self._row(coeffs), Fraction(rhs)))

    def add_ge(self, coeffs, rhs):
        row = self._row(coeffs)
        self.le.append((tuple(-c for c in row), -Fraction(rhs)))

    def add_eq(self, coeffs, rhs):
        self.eq.append((self._row(coeffs), Fraction(rhs)))

    def set_box(self, name, lower, upper):
        lower, upper = Fraction(lower), Fraction(upper)
        if name not in self.vars:
            raise InvalidInputError(f"unknown variable {name!r}")
        if lower > upper:
            raise InvalidInputError(f"empty box for {name}")
        self.boxes[name] = (lower, upper)

    def box_rows(self) -> list:
        rows = []
        for name, (lo, hi) in self.boxes.items():
            e = [Fraction(0)] * self.dim
            e[self.vars.index(name)] = Fraction(1)
            rows.append((tuple(e), hi))
            rows.append((tuple(-x for x in e), -lo))
        return rows

    def all_le(self) -> list:
        return self.le + self.box_rows()

    def satisfied_by(self, point: Sequence) -> bool:
        p = [Fraction(x) for x in point]
        ok_le = all(sum(c * x for c, x in zip(co, p)) <= b for co, b in self.all_le())
        return ok_le and all(sum(c * x for c, x in zip(co, p)) == b for co, b in self.eq)

    def intersect(self, other: "LinearSystem") -> "LinearSystem":
        if list(other.vars) != list(self.vars):
            raise InvalidInputError("systems use different variables")
        boxes = dict(self.boxes)
        for name, (lo, hi) in other.boxes.items():
            if name in boxes:
                lo, hi = max(lo, boxes[name][0]), min(hi, boxes[name][1])
            boxes[name] = (lo, hi)
        return LinearSystem(list(self.vars), self.le + other.le, self.eq + other.eq, boxes)

    def scaled(self, factor: int) -> "LinearSystem":
        """The system in y = factor * x."""
        f = Fraction(factor)
        return LinearSystem(list(self.vars),
                            [(tuple(c / f for c in co), b) for co, b in self.le],
                            [(tuple(c / f for c in co), b) for co, b in self.eq],
                            {v: (lo * f, hi * f) for v, (lo, hi) in self.boxes.items()})

    def to_json(self) -> dict:
        def rows(rs):
            return [{"coeffs": [_frac_str(c) for c in co], "rhs": _frac_str(b)} for co, b in rs]
        return {"vars": list(self.vars), "eq": rows(self.eq), "le": rows(self.le),
                "boxes": {v: [_frac_str(lo), _frac_str(hi)] for v, (lo, hi) in self.boxes.items()}}

    @classmethod
    def from_json(cls, data) -> "LinearSystem":
        def rows(rs):
            return [(tuple(Fraction(c) for c in r["coeffs"]), Fraction(r["rhs"])) for r in rs]
        boxes = {v: (Fraction(lo), Fraction(hi)) for v, (lo, hi) in data.get("boxes", {}).items()}
        return cls(list(data["vars"]), rows(data["le"]), rows(data["eq"]), boxes)

    def to_lp(self) -> str:
        """LP-format text with a zero objective."""
        def expr(co):
            bits = []
            for c, v in zip(co, self.vars):
                if c:
                    sign = "-" if c < 0 else "+"
                    mag = abs(c)
                    bits.append(f"{sign} {v}" if mag == 1 else f"{sign} {_frac_str(mag)} {v}")
            text = " ".join(bits) if bits else "0 " + self.vars[0]
            return text[2:] if text.startswith("+ ") else text
        lines = ["Minimize", " obj: 0 " + (self.vars[0] if self.vars else "x"), "Subject To"]
        for i, (co, b) in enumerate(self.eq):
            lines.append(f" e{i}: {expr(co)} = {_frac_str(b)}")
        for i, (co, b) in enumerate(self.le):
            lines.append(f" c{i}: {expr(co)} <= {_frac_str(b)}")
        lines.append("Bounds")
        for v in self.vars:
            if v in self.boxes:
                lo, hi = self.boxes[v]
                lines.append(f" {_frac_str(lo)} <= {v} <= {_frac_str(hi)}")
            else:
                lines.append(f" {v} free")
        lines.append("End")
        return "\n".join(lines)


# --- builders --------------------------------------------------------------


def alpha_vars(k: int, ell: int) -> list[str]:
    return [f"a{i}_{j}" for i in range(1, k + 1) for j in range(1, ell + 1)]


def build_P(mu: Iterable[int], a: Sequence[int], ell: int | None = None, cap: int | None = DEFAULT_CAP) -> LinearSystem:
    """Polytope of alpha^i |- a_i (ell parts each) with multi_lr(mu; alpha) > 0.

    ``ell`` defaults to l(mu). Rows: the part sums, weakly decreasing and
    nonnegative parts, and one Horn inequality for c^{omega(alpha)}_{mu,delta}
    per LR-consistent triple over [ell k].
    """
    mu = partition(mu)
    a = tuple(int(x) for x in a)
    n = sum(mu)
    if any(x < 0 for x in a):
        raise InvalidInputError("negative entry in a")
    if sum(a) != n:
        raise SizeMismatchError("|a| != |mu|")
    k = len(a)
    if ell is None:
        ell = max(len(mu), 1)
    r = ell * k
    if len(mu) > r:
        raise PreconditionError("mu has more rows than ell * k")
    names = alpha_vars(k, ell)
    sys = LinearSystem(names)
    idx = {(i, j): (i - 1) * ell + (j - 1) for i in range(1, k + 1) for j in range(1, ell + 1)}
    for i in range(1, k + 1):
        row = [0] * r
        for j in range(1, ell + 1):
            row[idx[i, j]] = 1
        sys.add_eq(row, a[i - 1])
        for j in range(1, ell):
            row = [0] * r
            row[idx[i, j]], row[idx[i, j + 1]] = -1, 1
            sys.add_le(row, 0)
        row = [0] * r
        row[idx[i, ell]] = -1
        sys.add_le(row, 0)
    for i in range(1, k + 1):
        for j in range(1, ell + 1):
            sys.set_box(names[idx[i, j]], 0, a[i - 1])
    mu_p = pad(mu, r)
    for I, J, K in lr_consistent_triples(r, cap=cap):
        row = [0] * r
        const = 0
        for i, j in D(I, ell):
            row[idx[i, j]] += 1
            const += n * (k - i)
        rhs = sum(mu_p[j - 1] for j in J) + sum(n * (k - d) for d, _ in D(K, ell))
        sys.add_le(row, rhs - const)
    return sys


SCRIPT_VARS = ["x", "y", "z"]


def build_script_P(mu: Iterable[int], nu: Iterable[int], a: Sequence[int]) -> LinearSystem:
    """The three-variable system for two-row mu, three-row nu with nu_1 < mu_1.

    x, y, z stand for the first parts of alpha^1, alpha^2, alpha^3. Every
    min/max bound is split into separate rows, 31 in total.
    """
    mu, nu = partition(mu), partition(nu)
    a = tuple(int(t) for t in a)
    n = sum(mu)
    if sum(nu) != n:
        raise SizeMismatchError("|mu| != |nu|")
    if len(a) != 3 or any(t < 0 for t in a):
        raise InvalidInputError("a must have three nonnegative entries")
    if sum(a) != n:
        raise SizeMismatchError("|a| != |mu|")
    if len(mu) != 2 or len(nu) != 3:
        raise PreconditionError("need l(mu) = 2 and l(nu) = 3")
    if not nu[0] < mu[0]:
        raise PreconditionError("need nu_1 < mu_1")
    m1, m2 = mu
    v1, v2, v3 = nu
    a1, a2, a3 = a
    s = LinearSystem(list(SCRIPT_VARS))
    e = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}
    # single-variable bounds
    for v, ai in zip("xyz", a):
        for low in (ai - v2, ai - m2, Fraction(ai) - Fraction(ai, 2)):
            s.add_ge(e[v], low)
        s.add_le(e[v], ai)
        s.add_le(e[v], v1)
    # pair sums
    for (p, q), (ap, aq) in (((0, 1), (a1, a2)), ((0, 2), (a1, a3)), ((1, 2), (a2, a3))):
        row = [0, 0, 0]
        row[p] = row[q] = 1
        s.add_ge(row, v3)
        s.add_ge(row, ap + aq - v1)
    s.add_ge((1, 1, 1), m1)
    # one sign flipped
    for row, ai in (((-1, 1, 1), a1), ((1, -1, 1), a2), ((1, 1, -1), a3)):
        s.add_ge(row, v2 - ai)
        s.add_ge(row, m2 - ai)
        s.add_le(row, v1 + v2 - ai)
    for v, ai in zip("xyz", a):
        s.set_box(v, 0, ai)
    return s


# --- feasibility and integer points ------------------------------------------


def lp_feasible(sys: LinearSystem, method: str = "auto") -> bool:
    """Exact feasibility. Auto uses Fourier-Motzkin up to six variables."""
    if method == "auto":
        method = "fm" if sys.dim <= 6 else "simplex"
    if method == "fm":
        return fm_feasible(sys.all_le(), sys.eq)
    if method == "simplex":
        return simplex_feasible(sys.all_le(), sys.eq, dim=sys.dim) is not None
    raise InvalidInputError(f"unknown method {method!r}")


def _interval(rows, fixed):
    """Bounds on the last variable of ``rows`` once the others are fixed."""
    lo, hi = None, None
    i = len(fixed)
    for co, b in rows:
        c = co[i]
        rest = b - sum(x * y for x, y in zip(co[:i], fixed))
        if c == 0:
            if rest < 0:
                return 1, 0
            continue
        bound = rest / c
        if c > 0:
            hi = bound if hi is None or bound < hi else hi
        else:
            lo = bound if lo is None or bound > lo else lo
    return lo, hi


def integer_points(sys: LinearSystem, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer points in lexicographic order.

    Depth-first over the variables. The interval for each variable comes from
    the exact projection of the system onto the variables so far, so every
    visited prefix extends to a real solution.
    """
    if sys.dim == 0:
        if sys.satisfied_by(()):
            yield ()
        return
    proj = fm_projections(sys.all_le(), sys.eq)
    if proj is None:
        return
    if not proj:
        raise PreconditionError("the system is unbounded")
    count = 0
    fixed: list = []

    def rec(i):
        lo, hi = _interval(proj[i], fixed)
        if lo is None or hi is None:
            raise PreconditionError("the system is unbounded")
        for v in range(math.ceil(lo), math.floor(hi) + 1):
            fixed.append(Fraction(v))
            if i == sys.dim - 1:
                if sys.satisfied_by(fixed):
                    yield tuple(int(x) for x in fixed)
            else:
                yield from rec(i + 1)
            fixed.pop()

    for p in rec(0):
        yield p
        count += 1
        if limit is not None and count >= limit:
            return


def find_integer_point(sys: LinearSystem):
    """The lexicographically smallest integer point, or None."""
    return next(integer_points(sys), None)


def find_half_integer_point(sys: LinearSystem):
    """The lexicographically smallest point in (1/2)Z^d, or None."""
    p = find_integer_point(sys.scaled(2))
    if p is None:
        return None
    return tuple(Fraction(x, 2) for x in p)


def script_P_feasible_set(mu: Iterable[int], nu: Iterable[int]) -> set[tuple[int, int, int]]:
    """All a with an integer point in build_script_P(mu, nu, a)."""
    mu, nu = partition(mu), partition(nu)
    n = sum(mu)
    out = set()
    for a1 in range(n + 1):
        for a2 in range(n + 1 - a1):
            a = (a1, a2, n - a1 - a2)
            if find_integer_point(build_script_P(mu, nu, a)) is not None:
                out.add(a)
    return out


def _weightings(m, q):
    """Weight vectors (c_1/q, ..., c_m/q) with nonnegative c summing to q."""
    for cut in itertools.combinations(range(q + m - 1), m - 1):
        prev, parts = -1, []
        for c in cut + (q + m - 1,):
            parts.append(c - prev - 1)
            prev = c
        yield tuple(Fraction(x, q) for x in parts)


def feasibility_region_convex_check(mu: Iterable[int], nu: Iterable[int], samples: Sequence[Sequence[int]],
                                    max_den: int = 4) -> bool:
    """Whether build_script_P(mu, nu, c) is nonempty for every integral convex
    combination c of the samples with weights of denominator at most max_den.

    Every sample must itself give a nonempty system.
    """
    mu, nu = partition(mu), partition(nu)
    pts = [tuple(int(x) for x in a) for a in samples]
    for a in pts:
        if not lp_feasible(build_script_P(mu, nu, a)):
            raise PreconditionError(f"the system for {a} is empty")
    if not pts:
        return True
    seen = set()
    for q in range(1, max_den + 1):
        for w in _weightings(len(pts), q):
            c = tuple(sum(t * a[i] for t, a in zip(w, pts)) for i in range(3))
            if any(x.denominator != 1 for x in c):
                continue
            c = tuple(int(x) for x in c)
            if c in seen:
                continue
            seen.add(c)
            if not lp_feasible(build_script_P(mu, nu, c)):
                return False
    return True