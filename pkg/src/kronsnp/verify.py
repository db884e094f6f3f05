"""Named verification suites behind ``kronsnp verify``.

Each suite returns a list of checks ``{"name", "passed", "detail"}``. Sweeps
honour a wall-clock budget and raise BudgetExceededError when it runs out,
so a suite never reports a truncated sweep as a pass.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

import numpy as np

from .core import (compositions, dominance_maximal_terms, kron_coeff_oracle, kron_product, pad,
                   partition, partitions)
from .errors import BudgetExceededError, InvalidInputError
from .horn import (horn_positive_batch, kron_necessary_general, kron_necessary_two_row,
                   lr_consistent_triples)
from .kronecker import (kron_coeff, monomial_coeff_multilr, monomial_positive, monomial_support,
                        rosas_kron_tworow_pair,
                        rosas_kron_tworow_triple, rosas_sigma)
from .lr import lr_coeff, skew_lr
from .plethysm import plethysm, plethysm_max_monomial, plethysm_monomial_coeff
from .polytopes import build_script_P, find_integer_point, lp_feasible
from .snp import kron_scaling_absorbed, snp_check_kron


def load_data(name: str):
    return json.loads(resources.files("kronsnp").joinpath("data", name).read_text())


def expansion_from_fixture(entry) -> dict:
    return {tuple(t["partition"]): int(t["coeff"]) for t in entry["terms"]}


def canonical_triple(t):
    """(I, J, K) with J and K in a fixed order; c^{rho I}_{rho J, rho K} is symmetric in J, K."""
    I, J, K = (tuple(sorted(x)) for x in t)
    return (I,) + tuple(sorted((J, K)))


class Budget:
    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.seconds = seconds

    def check(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError(f"time budget of {self.seconds} s exceeded")


def _check(name, passed, detail=None):
    return {"name": name, "passed": bool(passed), "detail": detail}


def _pmap(fn, items, threads, budget):
    """Ordered map that checks the budget between results."""
    out = []
    if threads and threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            for r in ex.map(fn, items, chunksize=8):
                budget.check()
                out.append(r)
    else:
        for x in items:
            budget.check()
            out.append(fn(x))
    return out


# --- printed values --------------------------------------------------------------


def printed_values(opts, budget):
    checks = []

    def exact(name, got, want):
        checks.append(_check(name, got == want, {"expected": want, "got": got}))

    exact("g((7,6),(8,5),(5,4,3,1))", kron_coeff((7, 6), (8, 5), (5, 4, 3, 1)), 2)
    exact("c^(6,4,3)_((3,1),(4,3,2))", lr_coeff((6, 4, 3), (3, 1), (4, 3, 2)), 2)
    exact("g((1,1),(1,1),(1,1))", kron_coeff((1, 1), (1, 1), (1, 1)), 0)
    exact("g((2,2),(2,2),(2,2))", kron_coeff((2, 2), (2, 2), (2, 2)), 1)
    exact("sigma_{2,2}(1)", rosas_sigma(2, 2, 1), 2)
    exact("sigma_{2,2}(-1)", rosas_sigma(2, 2, -1), 0)
    budget.check()
    data = load_data("printed_expansions.json")
    maxima = {"544_76": [(9, 3, 1), (8, 5)], "66_8211": [(8, 3, 1), (7, 5)]}
    for key in ("544_76", "66_8211", "88_53_1_8"):
        entry = data[key]
        got = kron_product(entry["lam"], entry["mu"])
        want = expansion_from_fixture(entry)
        diff = sorted(set(got.terms.items()) ^ set(want.items()))
        exact(f"s_{entry['lam']} * s_{entry['mu']} expansion", [list(d) for d in diff], [])
        if key in maxima:
            exact(f"dominance maxima of s_{entry['lam']} * s_{entry['mu']}",
                  [list(t) for t in dominance_maximal_terms(got)], [list(t) for t in maxima[key]])
        budget.check()
    lam, mu = (8, 8), (5, 3) + (1,) * 8
    for nu, want in (((7, 3, 2, 2, 2), 1), ((5, 5, 2, 2, 2), 1), ((6, 4, 2, 2, 2), 0)):
        exact(f"g((8,8),(5,3,1^8),{nu})", kron_coeff(lam, mu, nu), want)
    pl = data["pleth_111_21"]
    got = plethysm(pl["lam"], pl["mu"])
    exact("s_(1,1,1)[s_(2,1)] expansion", sorted(got.terms.items()), sorted(expansion_from_fixture(pl).items()))
    exact("coefficient of s_(4,3,1,1) in s_(1,1,1)[s_(2,1)]", got[(4, 3, 1, 1)], 2)
    return checks


# --- Horn fixture ----------------------------------------------------------------


def horn_fixture(opts, budget):
    path = opts.get("fixture")
    if path:
        with open(path) as fh:
            data = json.load(fh)
    else:
        data = load_data("horn_r6.json")
    r = int(data.get("r", 6))
    want = {canonical_triple(t) for t in data["triples"]}
    got = {canonical_triple(t) for t in lr_consistent_triples(r, cap=None)}
    checks = [_check(f"LR-consistent triples for r={r} match the fixture", want == got,
                     {"fixture": len(want), "computed": len(got),
                      "missing": [list(map(list, t)) for t in sorted(want - got)][:10],
                      "extra": [list(map(list, t)) for t in sorted(got - want)][:10]})]
    n_max = opts.get("n") or 12
    ell = 6
    rows, truth = [], []
    P = {m: list(partitions(m, max_len=ell)) for m in range(n_max + 1)}
    for n in range(n_max + 1):
        budget.check()
        for lam in P[n]:
            for a in range(n + 1):
                for mu in P[a]:
                    sk = skew_lr(lam, mu)
                    for nu in P[n - a]:
                        rows.append(pad(lam, ell) + pad(mu, ell) + pad(nu, ell))
                        truth.append(sk.get(nu, 0) > 0)
    horn = horn_positive_batch(ell, np.array(rows, dtype=np.int64))
    bad = [rows[i] for i in np.flatnonzero(horn != np.array(truth))]
    checks.append(_check(f"Horn test equals LR positivity, l <= {ell}, |lam| <= {n_max}", not bad,
                         {"triples": len(rows), "positive": int(sum(truth)), "disagreements": bad[:10]}))
    return checks


# --- saturation ------------------------------------------------------------------


def _saturation_item(args):
    lam, mu, k = args
    return snp_check_kron(lam, mu, k).saturated


def _equiv_item(args):
    mu, nu, k = args
    U = monomial_support(mu, nu, k, method="character")
    bad = []
    for a in compositions(sum(mu), k):
        if (monomial_coeff_multilr(mu, nu, a) > 0) != (a in U):
            bad.append(a)
    return bad


def saturation_sweeps(opts, budget):
    n1 = opts.get("n") or 12
    n2 = opts.get("n") or 14
    n3 = opts.get("n") or 10
    k1 = opts.get("k") or 4
    k3 = min(opts.get("k") or 3, 3)
    threads = opts.get("threads", 1)
    checks = []
    items = [(lam, mu, k) for n in range(1, n1 + 1) for lam in partitions(n, max_len=2)
             for mu in partitions(n, max_len=3) if mu[0] >= lam[0] for k in range(1, k1 + 1)]
    res = _pmap(_saturation_item, items, threads, budget)
    bad = [list(map(list, it[:2])) + [it[2]] for it, ok in zip(items, res) if not ok]
    checks.append(_check(f"l(lam)<=2, l(mu)<=3, mu_1>=lam_1 saturated, n<={n1}, k<={k1}", not bad,
                         {"instances": len(items), "failures": bad[:10]}))
    items = [(lam, mu, 3) for n in range(1, n2 + 1) for lam in partitions(n, max_len=3)
             for mu in partitions(n, max_len=2)]
    res = _pmap(_saturation_item, items, threads, budget)
    bad = [list(map(list, it[:2])) for it, ok in zip(items, res) if not ok]
    checks.append(_check(f"l(lam)<=3, l(mu)<=2 saturated at k=3, n<={n2}", not bad,
                         {"instances": len(items), "failures": bad[:10]}))
    items = [(mu, nu, k) for n in range(1, n3 + 1) for mu in partitions(n) for nu in partitions(n)
             if nu <= mu for k in range(1, k3 + 1)]
    res = _pmap(_equiv_item, items, threads, budget)
    bad = [[list(it[0]), list(it[1]), list(a)] for it, b in zip(items, res) for a in b]
    checks.append(_check(f"multi-LR monomial coefficients give the character support, n<={n3}, k<={k3}",
                         not bad, {"pairs": len(items), "failures": bad[:10]}))
    return checks


# --- int-point --------------------------------------------------------------------


def _script_instances(n_max):
    for n in range(1, n_max + 1):
        for mu in partitions(n, max_len=2):
            if len(mu) != 2:
                continue
            for nu in partitions(n, max_len=3):
                if len(nu) != 3 or nu[0] >= mu[0]:
                    continue
                for a in compositions(n, 3):
                    yield mu, nu, a


def _int_point_item(args):
    mu, nu, a = args
    s = build_script_P(mu, nu, a)
    f = lp_feasible(s)
    p = find_integer_point(s)
    m = monomial_positive(mu, nu, a)
    return f, p is not None, m


def int_point(opts, budget):
    n_max = opts.get("n") or 14
    items = list(_script_instances(n_max))
    res = _pmap(_int_point_item, items, opts.get("threads", 1), budget)
    gap = [it for it, (f, p, _) in zip(items, res) if f != p]
    mism = [it for it, (_, p, m) in zip(items, res) if p != m]
    fmt = lambda xs: [[list(x) for x in it] for it in xs[:10]]
    feasible = sum(1 for f, _, _ in res if f)
    return [_check(f"feasible system has an integer point, n<={n_max}", not gap,
                   {"instances": len(items), "feasible": feasible, "failures": fmt(gap)}),
            _check(f"integer point iff monomial present, n<={n_max}", not mism,
                   {"instances": len(items), "failures": fmt(mism)})]


# --- rosas-sweep ---------------------------------------------------------------------


def rosas_sweep(opts, budget):
    n_max = opts.get("n") or 16
    bad_t, bad_p, nt, np_ = [], [], 0, 0
    for n in range(1, n_max + 1):
        two = list(partitions(n, max_len=2))
        four = list(partitions(n, max_len=4))
        for i, b in enumerate(two):
            budget.check()
            for g in two:
                if pad(g, 2)[1] > pad(b, 2)[1]:
                    continue
                for a in four:
                    want = kron_coeff_oracle(b, g, a)
                    np_ += 1
                    if rosas_kron_tworow_pair(b, g, a) != want:
                        bad_p.append([list(b), list(g), list(a)])
                    if len(a) <= 2:
                        nt += 1
                        if rosas_kron_tworow_triple(b, g, a) != want:
                            bad_t.append([list(b), list(g), list(a)])
    return [_check(f"two-row/four-row formula equals the character oracle, n<={n_max}", not bad_p,
                   {"triples": np_, "failures": bad_p[:10]}),
            _check(f"three two-row formula equals the character oracle, n<={n_max}", not bad_t,
                   {"triples": nt, "failures": bad_t[:10]})]


# --- limit (doubling lists and the midpoint) ------------------------------------------


def doubling_set(lam, mu):
    """{nu : g(2 lam, 2 mu, 2 nu) > 0 and g(lam, mu, nu) = 0}."""
    lam, mu = partition(lam), partition(mu)
    exp = kron_product(lam, mu)
    L2, M2 = tuple(2 * x for x in lam), tuple(2 * x for x in mu)
    out = []
    for nu in partitions(sum(lam), max_len=len(lam) * len(mu)):
        if exp[nu] == 0 and kron_coeff(L2, M2, tuple(2 * x for x in nu), method="jacobi_trudi") > 0:
            out.append(nu)
    return out


def limit(opts, budget):
    p = opts.get("p") or 2
    data = load_data("limit_lists.json")
    checks = []
    mid = data["midpoint"]
    lam, mu = tuple(mid["lam"]), tuple(mid["mu"])
    g_a = kron_coeff(lam, mu, mid["alpha"])
    g_b = kron_coeff(lam, mu, mid["beta"])
    g_m = kron_coeff(lam, mu, mid["midpoint"])
    q = kron_scaling_absorbed(lam, mu, mid["midpoint"], p_max=p)
    checks.append(_check("midpoint (6,4,2,2,2): g = 0 at p = 1, absorbed at p = 2",
                         g_a == 1 and g_b == 1 and g_m == 0 and q == 2,
                         {"g_alpha": g_a, "g_beta": g_b, "g_midpoint": g_m, "absorbed_at": q}))
    budget.check()
    for entry in data["doubling"]:
        lam, mu = tuple(entry["lam"]), tuple(entry["mu"])
        listed = sorted(tuple(v) for v in entry["nu"])
        absorbed = {v: kron_scaling_absorbed(lam, mu, v, p_max=p) for v in listed}
        checks.append(_check(f"listed nu for {list(lam)}, {list(mu)} absorbed at p = 2",
                             all(a == 2 for a in absorbed.values()),
                             {"absorbed_at": [[list(v), a] for v, a in absorbed.items()]}))
        budget.check()
        found = sorted(doubling_set(lam, mu))
        extra = [list(v) for v in found if v not in listed]
        missing = [list(v) for v in listed if v not in found]
        checks.append(_check(f"doubling set for {list(lam)}, {list(mu)} contains the listed nu", not missing,
                             {"missing": missing}))
        checks.append(_check(f"doubling set for {list(lam)}, {list(mu)} equals the listed nu",
                             not missing and not extra,
                             {"computed": len(found), "listed": len(listed), "extra": extra}))
        budget.check()
    return checks


# --- positivity ------------------------------------------------------------------------


def positive_triples(n_max):
    """Unordered triples lam >= mu >= nu (lex) of size <= n_max with g > 0."""
    out = []
    for n in range(1, n_max + 1):
        P = list(partitions(n))
        for i, l in enumerate(P):
            for m in P[i:]:
                for nu, c in kron_product(l, m):
                    if c > 0 and nu <= m:
                        out.append((l, m, nu))
    return out


def _general_item(t):
    l, m, nu = t
    return all(kron_necessary_general(a, b, c, cap=None, method="auto")[0]
               for a, b, c in ((l, m, nu), (m, l, nu), (nu, l, m)))


def _two_row_item(t):
    l, m, nu = t
    bad = []
    for a, b, c in ((l, m, nu), (m, l, nu), (nu, l, m), (l, nu, m), (m, nu, l), (nu, m, l)):
        if len(b) == 2 and not kron_necessary_two_row(a, b, c)[0]:
            bad.append((a, b, c))
    return bad


def positivity(opts, budget):
    n_max = opts.get("n") or 10
    trip = positive_triples(n_max)
    threads = opts.get("threads", 1)
    res = _pmap(_general_item, trip, threads, budget)
    bad = [[list(x) for x in t] for t, ok in zip(trip, res) if not ok]
    checks = [_check(f"general necessary condition holds on every g > 0, n<={n_max}", not bad,
                     {"triples": len(trip), "failures": bad[:10]})]
    res = _pmap(_two_row_item, trip, threads, budget)
    bad = [[list(x) for x in t] for b in res for t in b]
    checks.append(_check(f"two-row necessary condition holds on every g > 0 with a two-row mu, n<={n_max}",
                         not bad, {"failures": bad[:10]}))
    return checks


# --- plethysm ----------------------------------------------------------------------------


def plethysm_suite(opts, budget):
    n_max = opts.get("n") or 12
    checks = []
    data = load_data("printed_expansions.json")["pleth_111_21"]
    got = plethysm(data["lam"], data["mu"])
    want = expansion_from_fixture(data)
    checks.append(_check("s_(1,1,1)[s_(2,1)] expansion", dict(got.terms) == want,
                         {"got": str(got)}))
    bad = []
    for m in range(1, 6):
        want = {tuple(2 * x for x in p): 1 for p in partitions(m)}
        if dict(plethysm((m,), (2,)).terms) != want:
            bad.append(m)
    checks.append(_check("s_(m)[s_(2)] = sum of s_(2 mu), m <= 5", not bad, {"failures": bad}))
    budget.check()
    bad, count = [], 0
    for d in range(1, n_max + 1):
        for a in range(1, d + 1):
            if d % a:
                continue
            for lam in partitions(a):
                for mu in partitions(d // a):
                    budget.check()
                    nu = plethysm_max_monomial(lam, mu)
                    count += 1
                    if plethysm_monomial_coeff(lam, mu, nu) <= 0:
                        bad.append([list(lam), list(mu), list(nu)])
    checks.append(_check(f"the maximal monomial occurs, |lam||mu| <= {n_max}", not bad,
                         {"pairs": count, "failures": bad[:10]}))
    return checks


SUITES = {
    "paper-values": (printed_values, 120),
    "horn-appendix": (horn_fixture, 600),
    "snp-theorems": (saturation_sweeps, 1800),
    "int-point": (int_point, 1800),
    "rosas-sweep": (rosas_sweep, 300),
    "limit": (limit, 900),
    "positivity": (positivity, 600),
    "plethysm": (plethysm_suite, 300),
}


def run_suite(name: str, opts: dict | None = None) -> dict:
    """Run one suite. ``opts`` may set n, k, p, threads, fixture and time (seconds)."""
    if name not in SUITES:
        raise InvalidInputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    opts = dict(opts or {})
    fn, default_time = SUITES[name]
    budget = Budget(opts.get("time", default_time))
    checks = fn(opts, budget)
    return {"suite": name, "passed": all(c["passed"] for c in checks), "checks": checks}
