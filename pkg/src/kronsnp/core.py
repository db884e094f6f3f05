"""Partitions, dominance, Kostka numbers, symmetric group characters and the
character-table Kronecker oracle.

Partitions are plain tuples of positive integers in weakly decreasing order.
Trailing zeros are stripped by :func:`partition`, so ``(3, 1, 0)`` and
``(3, 1)`` are the same key everywhere in the package.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import InvalidInputError, SizeMismatchError


def partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Return the canonical tuple for ``parts``.

    Raises InvalidInputError for negative or increasing entries.
    """
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise InvalidInputError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InvalidInputError(f"parts not weakly decreasing: {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse ``"5,4,4"``. ``"0"``, ``"-"`` and ``""`` give the empty partition."""
    text = text.strip()
    if text in ("", "0", "-", "()"):
        return ()
    text = text.strip("()[]")
    try:
        return partition(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"cannot parse partition {text!r}") from exc


def format_partition(p: Iterable[int]) -> str:
    p = tuple(p)
    return ",".join(map(str, p)) if p else "0"


def size(p: Iterable[int]) -> int:
    return sum(p)


def pad(p: Iterable[int], length: int) -> tuple[int, ...]:
    p = tuple(p)
    if len(p) > length:
        raise InvalidInputError(f"{p} has more than {length} parts")
    return p + (0,) * (length - len(p))


def conjugate(p: tuple[int, ...]) -> tuple[int, ...]:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def partitions(n: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order, largest first."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rem, cap, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            if first * slots < rem:
                break
            for tail in rec(rem - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(n, max_part, max_len)


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``k`` parts, lexicographically largest first."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for tail in compositions(n - first, k - 1):
            yield (first,) + tail


def contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    """True when ``a`` dominates ``b``. Unequal sizes give False."""
    a, b = tuple(a), tuple(b)
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def horizontal_strips(outer: tuple[int, ...], m: int) -> Iterator[tuple[int, ...]]:
    """All ``inner`` with ``outer/inner`` a horizontal strip of ``m`` boxes."""
    L = len(outer)

    def rec(i, rem):
        if i == L:
            if rem == 0:
                yield ()
            return
        low = outer[i + 1] if i + 1 < L else 0
        # boxes still removable from rows i..L-1
        room = sum(outer[j] - (outer[j + 1] if j + 1 < L else 0) for j in range(i, L))
        if room < rem:
            return
        for take in range(min(rem, outer[i] - low), -1, -1):
            for tail in rec(i + 1, rem - take):
                yield (outer[i] - take,) + tail

    for inner in rec(0, m):
        yield partition(inner)


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    for inner in horizontal_strips(lam, last):
        if len(inner) <= len(rest):
            total += _kostka(inner, rest)
    return total


def kostka(lam: Iterable[int], weight: Iterable[int]) -> int:
    """Number of SSYT of shape ``lam`` and content ``weight`` (any composition)."""
    lam = partition(lam)
    w = tuple(sorted((int(x) for x in weight if x), reverse=True))
    if any(x < 0 for x in w):
        raise InvalidInputError("negative weight")
    if sum(lam) != sum(w):
        return 0
    if not dominates(lam, w):
        return 0
    return _kostka(lam, w)


# --- characters -----------------------------------------------------------


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    L = len(lam)
    beta = [lam[i] + L - 1 - i for i in range(L)]
    bset = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        c = b - r
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        nb = sorted(beta[:idx] + [c] + beta[idx + 1:], reverse=True)
        new = partition(nb[i] - (L - 1 - i) for i in range(L))
        val = _mn(new, rest)
        if val:
            total += -val if height % 2 else val
    return total


def character(lam: Iterable[int], rho: Iterable[int]) -> int:
    """chi^lam evaluated on the class of cycle type ``rho`` (Murnaghan-Nakayama)."""
    lam = partition(lam)
    rho = tuple(sorted((int(x) for x in rho if x), reverse=True))
    if sum(lam) != sum(rho):
        raise SizeMismatchError(f"|{lam}| != |{rho}|")
    return _mn(lam, rho)


def z_rho(rho: tuple[int, ...]) -> int:
    out = 1
    for part, mult in Counter(rho).items():
        out *= part ** mult * math.factorial(mult)
    return out


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    rhos = tuple(partitions(n))
    nf = math.factorial(n)
    return rhos, tuple(nf // z_rho(r) for r in rhos)


@lru_cache(maxsize=None)
def _char_row(lam: tuple[int, ...]) -> tuple[int, ...]:
    rhos, _ = _classes(sum(lam))
    return tuple(_mn(lam, r) for r in rhos)


def kron_coeff_oracle(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """g(lam, mu, nu) = (1/n!) sum over classes of |C| chi chi chi, in exact integers."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise SizeMismatchError(f"sizes differ: {lam}, {mu}, {nu}")
    if n == 0:
        return 1
    _, sizes = _classes(n)
    a, b, c = _char_row(lam), _char_row(mu), _char_row(nu)
    total = sum(s * x * y * z for s, x, y, z in zip(sizes, a, b, c))
    g, rem = divmod(total, math.factorial(n))
    assert rem == 0
    return g


# --- Schur expansions -----------------------------------------------------


@dataclass(frozen=True)
class SchurExpansion:
    """Finite sum of Schur functions of a common degree ``n``.

    ``nvars`` is set when the expansion was computed in finitely many
    variables and so only lists terms with at most ``nvars`` rows.
    """

    n: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)
    nvars: int | None = None

    def __post_init__(self):
        clean = {partition(k): int(v) for k, v in self.terms.items() if v}
        for k in clean:
            if sum(k) != self.n:
                raise SizeMismatchError(f"term {k} is not of degree {self.n}")
        ordered = dict(sorted(clean.items(), reverse=True))
        object.__setattr__(self, "terms", ordered)

    def __getitem__(self, key) -> int:
        return self.terms.get(partition(key), 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def support(self) -> list[tuple[int, ...]]:
        return list(self.terms)

    def to_json(self) -> dict:
        out = {"n": self.n,
               "terms": [{"partition": list(k), "coeff": str(v)} for k, v in self.terms.items()]}
        if self.nvars is not None:
            out["nvars"] = self.nvars
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "SchurExpansion":
        terms = {tuple(t["partition"]): int(t["coeff"]) for t in data["terms"]}
        return cls(int(data["n"]), terms, data.get("nvars"))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for k, v in self.terms.items():
            name = "s_" + "".join(map(str, k)) if all(x < 10 for x in k) else "s_(" + format_partition(k) + ")"
            bits.append(name if v == 1 else f"{v}{name}")
        return " + ".join(bits)


def kron_product(lam: Iterable[int], mu: Iterable[int]) -> SchurExpansion:
    """s_lam * s_mu as a Schur expansion, using the character oracle."""
    lam, mu = partition(lam), partition(mu)
    n = sum(lam)
    if sum(mu) != n:
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    if n == 0:
        return SchurExpansion(0, {(): 1})
    rhos, sizes = _classes(n)
    a, b = _char_row(lam), _char_row(mu)
    ab = [s * x * y for s, x, y in zip(sizes, a, b)]
    nf = math.factorial(n)
    terms = {}
    for nu in partitions(n):
        if len(nu) > len(lam) * len(mu):
            continue
        c = _char_row(nu)
        g = sum(x * y for x, y in zip(ab, c)) // nf
        if g:
            terms[nu] = g
    return SchurExpansion(n, terms)


def dominance_maximal_terms(terms) -> list[tuple[int, ...]]:
    """Partitions in the support that no other support element strictly dominates."""
    if isinstance(terms, SchurExpansion):
        supp = terms.support()
    else:
        supp = [partition(t) for t in terms]
    out = []
    for a in supp:
        if not any(b != a and dominates(b, a) for b in supp):
            out.append(a)
    return sorted(set(out), reverse=True)
