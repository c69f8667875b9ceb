"""
Brute-force cross-checks and the parameter sweeps behind the property suites.

Everything here recomputes a library result by a second, independent route
(breadth-first search instead of closed formulas, straightening instead of the
inversion-set formula, orbit closure instead of greedy reduction, ...).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from . import linalg as la
from .afw import (
    AffinePermutation, AffineCoweight, AffineWeight, act_coweight, act_weight_affine,
    coset_decompose, coweight_form, identity, inversion_set, is_min_coset_rep, length,
    parabolic_subgroup, pi, reduced_word, simple_reflection, translation, y_eta,
)
from .classify import (
    from_multisegments, to_multisegments, xi_to_param, zeta,
)
from .hecke import (
    _act_finite, build_module, check_block_lemma, cpser_check, ddot_weight_list,
    ddot_weight_list_oracle, ddot_weight_multiplicity, pi_shift_weight, simple_quotient,
    stabilizer_counts, weight_space_at_zeta, weight_table, young_indices,
)
from .params import (
    AffineSymElement, ParamPair, bracket, brackets, domain_membership, dot_act,
    dot_act_embedded, dot_act_pair, generators, in_affdom, reduce_pair_to_fundamental,
    reduce_to_affdom, rho, varpi_orbit_canonical,
)

__all__ = [
    "SweepConfig", "SuiteReport", "ResourceLimitError", "bfs_group", "poincare_counts",
    "window_length_counts", "dot_orbit", "params_in_box", "straightened_h_matrices",
    "relation_failures", "run_sweep", "SUITES",
    "suite_group_law", "suite_representatives", "suite_fundamental_domains",
    "suite_zeta_weight_space", "suite_cpser", "suite_stabilizer",
    "suite_classification", "suite_varpi_twist",
]


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    n_max: int = 4
    p_max: int = 3
    kappa_range: tuple[int, int] = (1, 4)
    entry_box: tuple[int, int] = (-3, 3)
    length_bound: int = 4
    seed: int = 0
    max_elements: int = 200_000

    def __post_init__(self):
        if self.n_max < 1 or self.p_max < 1 or self.length_bound < 0:
            raise ValueError("bounds must be positive")
        if self.kappa_range[0] < 1:
            raise ValueError("kappa range must be positive")

    @property
    def empty(self) -> bool:
        lo, hi = self.entry_box
        return lo > hi or self.kappa_range[0] > self.kappa_range[1]

    @classmethod
    def from_dict(cls, data: dict) -> SweepConfig:
        data = dict(data)
        for key in ("kappa_range", "entry_box"):
            if key in data:
                data[key] = tuple(data[key])
        return cls(**data)


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, detail) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(detail)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "failures": self.failures}


# -- group enumeration -------------------------------------------------------------

def bfs_group(n: int, L: int, max_elements: int = 500_000) -> list[tuple[AffinePermutation, int]]:
    """Elements of the non-extended affine Weyl group with word length <= L,
    found by breadth-first search over s_0..s_{n-1}, with their distances."""
    if n < 2:
        raise ValueError("n >= 2 required")
    if L < 0:
        return []
    gens = [simple_reflection(n, i) for i in range(n)]
    dist = {identity(n): 0}
    frontier = [identity(n)]
    for d in range(1, L + 1):
        nxt = []
        for w in frontier:
            for g in gens:
                x = w * g
                if x not in dist:
                    dist[x] = d
                    nxt.append(x)
                    if len(dist) > max_elements:
                        raise ResourceLimitError(f"BFS exceeded {max_elements} elements")
        frontier = nxt
    return sorted(dist.items(), key=lambda t: (t[1], t[0].window))


def poincare_counts(n: int, L: int) -> list[int]:
    """Coefficients up to q^L of prod_{d=2}^n [d]_q / (1 - q^{d-1})."""
    series = [1] + [0] * L
    for d in range(2, n + 1):
        # multiply by 1 + q + ... + q^{d-1}
        series = [sum(series[k - j] for j in range(d) if k - j >= 0) for k in range(L + 1)]
        # divide by 1 - q^{d-1}
        for k in range(d - 1, L + 1):
            series[k] += series[k - (d - 1)]
    return series


def window_length_counts(n: int, L: int) -> list[int]:
    """Count grade-0 windows by their inversion count, enumerating t_eta * u
    directly with eta bounded by the length."""
    from itertools import permutations

    counts = [0] * (L + 1)
    perms = [AffinePermutation(p) for p in permutations(range(1, n + 1))]
    # l(t_eta u) >= l(t_eta) - l(u) and l(t_eta) >= max - min of eta
    spread = L + n * (n - 1) // 2
    for rest in product(range(spread + 1), repeat=n):
        if min(rest) != 0:
            continue
        m, r = divmod(-sum(rest), n)
        if r:
            continue
        t = translation(tuple(m + x for x in rest))
        for u in perms:
            lw = len(inversion_set(t * u))
            if lw <= L:
                counts[lw] += 1
    return counts


# -- parameters ---------------------------------------------------------------------

def compositions(n: int, p: int, positive: bool) -> Iterator[tuple[int, ...]]:
    lo = 1 if positive else 0
    if p == 1:
        if n >= lo:
            yield (n,)
        return
    for first in range(lo, n + 1):
        for rest in compositions(n - first, p - 1, positive):
            yield (first,) + rest


def params_in_box(p: int, kappa: int, box: tuple[int, int], n_max: int,
                  star: bool = True, n_min: int = 1) -> Iterator[ParamPair]:
    """Pairs with all entries of lambda and mu in the box and 1 <= n <= n_max."""
    lo, hi = box
    for mu in product(range(lo, hi + 1), repeat=p):
        for n in range(n_min, n_max + 1):
            for diff in compositions(n, p, star):
                lam = tuple(a + b for a, b in zip(mu, diff))
                if max(lam) <= hi:
                    yield ParamPair(kappa, lam, mu)


# -- dot orbits ---------------------------------------------------------------------

def dot_orbit(lam, kappa: int, word_bound: int, extended: bool = False) -> set[tuple[int, ...]]:
    """Closure of lam under words of length <= word_bound in sigma_0..sigma_{p-1}
    (plus varpi^{+-1} when ``extended``)."""
    if kappa <= 0:
        raise ValueError("kappa > 0 required")
    p = len(lam)
    gens = [AffineSymElement.sigma(p, i) for i in range(p)] if p > 1 else []
    if extended:
        gens += [AffineSymElement.varpi(p, 1), AffineSymElement.varpi(p, -1)]
    seen = {tuple(lam)}
    frontier = [tuple(lam)]
    for _ in range(word_bound):
        nxt = []
        for x in frontier:
            for g in gens:
                y = dot_act(g, x, kappa)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _group_ball(p: int, bound: int) -> list[AffinePermutation]:
    """Elements of the extended group of rank p within word length ``bound``
    in sigma_i and varpi^{+-1}."""
    gens = [g.normal_form for g in generators(p)]
    seen = {identity(p)}
    frontier = [identity(p)]
    for _ in range(bound):
        nxt = []
        for w in frontier:
            for g in gens:
                x = w * g
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(seen)


def _orbit_invariant(lam, kappa: int) -> tuple:
    z = [a + b for a, b in zip(lam, rho(len(lam)))]
    return sum(z), tuple(sorted(x % kappa for x in z))


def _affdom_with_sum(p: int, kappa: int, total: int) -> list[tuple[int, ...]]:
    """All AffDom points with coordinate sum ``total`` (a finite set)."""
    out = []
    # brackets b_1..b_{p-1} >= 0 with sum <= kappa determine lam up to a shift
    for bs in product(range(kappa + 1), repeat=p - 1):
        if sum(bs) > kappa:
            continue
        base = [0]
        for b in bs:
            base.append(base[-1] - b + 1)
        r = total - sum(base)
        if r % p:
            continue
        lam = tuple(x + r // p for x in base)
        if in_affdom(lam, kappa):
            out.append(lam)
    return out


# -- module cross-checks -------------------------------------------------------------

def straightened_h_matrices(pp: ParamPair) -> list[list[list[Fraction]]]:
    """h-action by recursive straightening: for w = s_i w' with l(w') < l(w),
    h_j w'1 is pushed through s_i using s_i(h) and the relation."""
    M = build_module(pp)
    n, d = pp.n, M.dim
    index = {w: k for k, w in enumerate(M.basis)}
    z = M.zeta
    cache: dict[tuple[int, int], list[Fraction]] = {}

    def act(col: int, j: int) -> list[Fraction]:
        key = (col, j)
        if key in cache:
            return cache[key]
        w = M.basis[col]
        if col == 0:
            v = [Fraction(0)] * d
            v[0] = Fraction(z[j - 1])
        else:
            i = w.left_descents()[0]
            s = simple_reflection(n, i)
            prev = index[s * w]
            sj = s(j)
            inner = act(prev, sj)
            v = la.matvec(M.s[i - 1], inner)
            pairing = (1 if j == i else 0) - (1 if j == i + 1 else 0)
            v[prev] -= pairing
        cache[key] = v
        return v

    mats = []
    for j in range(1, n + 1):
        cols = [act(c, j) for c in range(d)]
        mats.append(la.transpose(cols))
    return mats


def relation_failures(s_mats, h_mats) -> list[str]:
    """All defining relations checked as exact matrix identities."""
    n = len(h_mats)
    d = len(h_mats[0])
    eye = la.identity_matrix(d)
    out = []
    mm, sub, add = la.matmul, la.matsub, la.matadd
    for i in range(1, n):
        s = s_mats[i - 1]
        if mm(s, s) != eye:
            out.append(f"s_{i}^2 != 1")
        if i + 1 < n:
            t = s_mats[i]
            if mm(mm(s, t), s) != mm(mm(t, s), t):
                out.append(f"braid relation fails for s_{i}, s_{i+1}")
        for k in range(i + 2, n):
            t = s_mats[k - 1]
            if mm(s, t) != mm(t, s):
                out.append(f"s_{i} and s_{k} do not commute")
        for j in range(1, n + 1):
            sj = i + 1 if j == i else i if j == i + 1 else j
            lhs = sub(mm(s, h_mats[j - 1]), mm(h_mats[sj - 1], s))
            pairing = (1 if j == i else 0) - (1 if j == i + 1 else 0)
            rhs = [[Fraction(-pairing) if a == b else Fraction(0) for b in range(d)] for a in range(d)]
            if lhs != rhs:
                out.append(f"s_{i} h_{j} - s_{i}(h_{j}) s_{i} != {-pairing}")
    for a in range(n):
        for b in range(a + 1, n):
            if mm(h_mats[a], h_mats[b]) != mm(h_mats[b], h_mats[a]):
                out.append(f"h_{a+1} and h_{b+1} do not commute")
    return out


# -- acceptance-level suites ---------------------------------------------------------

def suite_group_law(cases: Iterable[tuple[int, int]] = ((2, 6), (3, 6), (4, 5)),
                    max_elements: int = 500_000) -> SuiteReport:
    rep = SuiteReport("group_law")
    for n, L in cases:
        elements = bfs_group(n, L, max_elements)
        counts = [0] * (L + 1)
        for _, d in elements:
            counts[d] += 1
        rep.check(counts == poincare_counts(n, L)[: L + 1],
                  {"n": n, "bfs_counts": counts, "poincare": poincare_counts(n, L)})
        subsets = [set(c) for k in range(1, n) for c in combinations(range(n), k)]
        parabolics = {frozenset(I): parabolic_subgroup(n, I) for I in subsets}
        for w, d in elements:
            lw = length(w)
            ok = (lw == d and len(inversion_set(w)) == lw and length(w.inverse()) == lw)
            word = reduced_word(w)
            ok = ok and word.evaluate() == w and len(word) == lw
            ok = ok and all(abs(length(simple_reflection(n, i) * w) - lw) == 1 for i in range(n))
            ok = ok and length(pi(n) * w) == lw
            if not ok:
                rep.check(False, {"n": n, "window": list(w.window), "bfs": d, "length": lw})
                continue
            for I in subsets:
                w1, u = coset_decompose(w, I)
                good = (w1 * u == w and is_min_coset_rep(w1, I)
                        and length(w1) + length(u) == lw and u in set(parabolics[frozenset(I)]))
                # uniqueness: exactly one element of W_I leaves a minimal representative
                hits = sum(1 for v in parabolics[frozenset(I)] if is_min_coset_rep(w * v.inverse(), I))
                rep.check(good and hits == 1,
                          {"n": n, "window": list(w.window), "I": sorted(I), "hits": hits})
    return rep


def suite_representatives(n: int = 3, box: int = 2) -> SuiteReport:
    rep = SuiteReport("representatives")
    finite_top = set(range(1, n))
    formula = {}
    for eta in product(range(-box, box + 1), repeat=n):
        w = translation(eta) * y_eta(eta).inverse()
        formula[w] = eta
        rep.check(length(w) == length(translation(eta)) - length(y_eta(eta)),
                  {"eta": list(eta), "length": length(w)})
    rep.check(len(formula) == (2 * box + 1) ** n, {"distinct": len(formula)})
    lmax = max(length(w) for w in formula)
    grades = {w.pi_power for w in formula}
    found = set()
    for w, _ in bfs_group(n, lmax):
        for k in grades:
            x = pi(n, k) * w
            if is_min_coset_rep(x, finite_top) and all(abs(e) <= box for e in x.translation_part()):
                found.add(x)
    rep.check(found == set(formula),
              {"only_formula": [list(w.window) for w in set(formula) - found][:5],
               "only_bfs": [list(w.window) for w in found - set(formula)][:5]})
    return rep


def suite_fundamental_domains(ps=(2, 3), kappas=range(1, 5), box=(-3, 3), orbit_bound: int = 3) -> SuiteReport:
    rep = SuiteReport("fundamental_domains")
    lo, hi = box
    for p in ps:
        for k in kappas:
            gens = [AffineSymElement.sigma(p, i) for i in range(p)]
            domain_cache: dict[int, dict] = {}
            for lam in product(range(lo, hi + 1), repeat=p):
                plus, w = reduce_to_affdom(lam, k)
                ok = in_affdom(plus, k) and dot_act(w, lam, k) == plus
                ok = ok and dot_act_embedded(w.normal_form, lam, k) == plus
                ok = ok and _orbit_invariant(plus, k) == _orbit_invariant(lam, k)
                ok = ok and all(reduce_to_affdom(dot_act(g, lam, k), k)[0] == plus for g in gens)
                # replaying the witness: every letter met a negative bracket
                cur = tuple(lam)
                for kind, i in reversed(w.letters):
                    ok = ok and bracket(cur, i, k) < 0
                    cur = dot_act(AffineSymElement.sigma(p, i), cur, k)
                # exactly one domain point carries the orbit invariant
                total = sum(plus)
                if total not in domain_cache:
                    pts = _affdom_with_sum(p, k, total)
                    domain_cache[total] = {}
                    for x in pts:
                        domain_cache[total].setdefault(_orbit_invariant(x, k), []).append(x)
                ok = ok and domain_cache[total].get(_orbit_invariant(lam, k)) == [plus]
                closure = [x for x in dot_orbit(lam, k, orbit_bound) if in_affdom(x, k)]
                ok = ok and closure in ([], [plus])
                rep.check(ok, {"p": p, "kappa": k, "lambda": list(lam), "reduced": list(plus)})
    return rep


def suite_zeta_weight_space(p_max: int = 3, n_max: int = 5, box=(-3, 3)) -> SuiteReport:
    rep = SuiteReport("zeta_weight_space")
    for p in range(1, p_max + 1):
        for pp in params_in_box(p, 1, box, n_max, star=False):
            if domain_membership(pp).I_plus:
                d = weight_space_at_zeta(build_module(pp))
                rep.check(d == 1, {"pair": pp.to_json(), "dim": d})
    return rep


def suite_cpser(n_max: int = 5, box=(-3, 3)) -> SuiteReport:
    rep = SuiteReport("cpser")
    for pp in params_in_box(2, 1, box, n_max, star=True):
        r = cpser_check(pp)
        rep.check(r.consistent, r.to_json())
    return rep


def suite_stabilizer(kappa_max: int = 5, n_max: int = 4, box=(-3, 3), p_max: int = 4) -> SuiteReport:
    rep = SuiteReport("stabilizer")
    for k in range(1, kappa_max + 1):
        for p in range(1, min(p_max, n_max) + 1):
            for pp in params_in_box(p, k, box, n_max, star=True):
                if not domain_membership(pp).I_kappa_star_plus or bracket(pp.mu, 0, k) <= 0:
                    continue
                a, b = stabilizer_counts(pp)
                rep.check(a == b, {"pair": pp.to_json(), "double_affine": a, "finite": b})
    return rep


def _encode(vecs, lo: int, span_: int):
    import numpy as np
    codes = np.zeros(vecs.shape[0], dtype=np.int64)
    for c in range(vecs.shape[1]):
        codes = codes * span_ + (vecs[:, c] - lo)
    return codes


def suite_classification(kappa_max: int = 4, n_max: int = 4, box=(-3, 3), word_bound: int = 6) -> SuiteReport:
    """Multisegments separate the classes of 'connected by a short dot-action
    word' exactly; plus the two round trips."""
    import numpy as np

    rep = SuiteReport("classification")
    lo, hi = box
    for k in range(1, kappa_max + 1):
        for p in range(1, n_max + 1):
            params = list(params_in_box(p, k, box, n_max, star=True))
            if not params:
                continue
            index = {pp: t for t, pp in enumerate(params)}
            parent = list(range(len(params)))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            lam = np.array([pp.lam for pp in params], dtype=np.int64)
            mu = np.array([pp.mu for pp in params], dtype=np.int64)
            width = hi - lo + 1
            key = _encode(np.hstack([lam, mu]), lo, width)
            order = np.argsort(key)
            sorted_key = key[order]
            r = np.array(rho(p), dtype=np.int64)
            for w in _group_ball(p, word_bound):
                # w o x = u(x + rho) + kappa eta - rho, coordinatewise
                src = np.zeros(p, dtype=np.int64)
                shift = np.zeros(p, dtype=np.int64)
                for i in range(1, p + 1):
                    wi = w(i)
                    t, q = (wi - 1) % p, (wi - 1) // p
                    src[t] = i - 1
                    shift[t] = r[i - 1] + k * q - r[t]
                lam2 = lam[:, src] + shift
                mu2 = mu[:, src] + shift
                both = np.hstack([lam2, mu2])
                inside = np.all((both >= lo) & (both <= hi), axis=1)
                if not inside.any():
                    continue
                codes = _encode(both[inside], lo, width)
                pos = np.searchsorted(sorted_key, codes)
                pos = np.minimum(pos, len(sorted_key) - 1)
                hit = sorted_key[pos] == codes
                src_idx = np.flatnonzero(inside)[hit]
                dst_idx = order[pos[hit]]
                for a, b in zip(src_idx.tolist(), dst_idx.tolist()):
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
            classes: dict[int, set] = {}
            for t, pp in enumerate(params):
                classes.setdefault(find(t), set()).add(to_multisegments(pp))
            seen_ms: dict = {}
            for root, mss in classes.items():
                rep.check(len(mss) == 1, {"kappa": k, "p": p, "class_multisegments": len(mss)})
                for ms in mss:
                    if ms in seen_ms and seen_ms[ms] != root:
                        rep.check(False, {"kappa": k, "p": p, "multisegment": ms.to_json(),
                                          "split": "same multisegment in two classes"})
                    seen_ms[ms] = root
            for pp in params:
                if not domain_membership(pp).I_kappa_star_plus:
                    continue
                back, h = xi_to_param(zeta(pp))
                rep.check(back == pp and h == p, {"pair": pp.to_json(), "round_trip": back.to_json()})
                canon = from_multisegments(to_multisegments(pp))
                # independent: canonical = varpi^r o pp with r read off the sum of mu
                r_ = (sum(canon.mu) - sum(pp.mu))
                ok = r_ % k == 0 and dot_act_pair(AffineSymElement.varpi(p, r_ // k), pp) == canon
                ok = ok and domain_membership(canon).I_kappa_star_plus
                ok = ok and varpi_orbit_canonical(pp) == canon
                rep.check(ok, {"pair": pp.to_json(), "canonical": canon.to_json()})
    return rep


def _twist_sample(count: int, seed: int) -> list[ParamPair]:
    pool = []
    for k in range(1, 4):
        for p in range(1, 4):
            for pp in params_in_box(p, k, (-2, 2), 3, star=True):
                if domain_membership(pp).I_kappa_star_plus:
                    pool.append(pp)
    rng = random.Random(seed)
    return sorted(rng.sample(pool, min(count, len(pool))), key=lambda x: (x.kappa, x.p, x.lam, x.mu))


def suite_varpi_twist(samples: int = 20, bounds=range(0, 5), seed: int = 0) -> SuiteReport:
    rep = SuiteReport("varpi_twist")
    for pp in _twist_sample(samples, seed):
        other = dot_act_pair(AffineSymElement.varpi(pp.p, 1), pp)
        m = pp.lam[-1] - pp.mu[-1]
        for B in bounds:
            a = ddot_weight_list(pp, B).entries
            b = ddot_weight_list(other, B).entries
            mapped = sorted((pi_shift_weight(xi, m, pp.kappa), d, g) for xi, d, g in a)
            rep.check(mapped == sorted(b), {"pair": pp.to_json(), "bound": B})
    return rep


# -- smaller invariant suites ----------------------------------------------------------

def suite_afw_properties(cfg: SweepConfig) -> SuiteReport:
    rep = SuiteReport("afw")
    rng = random.Random(cfg.seed)
    for n in range(2, cfg.n_max + 1):
        s = [simple_reflection(n, i) for i in range(n)]
        P = pi(n)
        e = identity(n)
        for i in range(n):
            rep.check(s[i] * s[i] == e, {"n": n, "relation": f"s{i}^2"})
            rep.check(P * s[i] == s[(i + 1) % n] * P, {"n": n, "relation": f"pi s{i}"})
            for j in range(i + 1, n):
                adjacent = (j - i) % n in (1, n - 1)
                if n == 2:
                    continue
                if adjacent:
                    rep.check(s[i] * s[j] * s[i] == s[j] * s[i] * s[j], {"n": n, "braid": (i, j)})
                else:
                    rep.check(s[i] * s[j] == s[j] * s[i], {"n": n, "commute": (i, j)})
        for _ in range(20):
            h = AffineCoweight([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)],
                              Fraction(rng.randint(-5, 5), 2), Fraction(rng.randint(-3, 3)))
            g = AffineCoweight([Fraction(rng.randint(-5, 5)) for _ in range(n)],
                               rng.randint(-3, 3), rng.randint(-3, 3))
            eta = [rng.randint(-2, 2) for _ in range(n)]
            w = translation(eta) * s[rng.randrange(n)] * P
            rep.check(coweight_form(act_coweight(w, h), act_coweight(w, g)) == coweight_form(h, g),
                      {"n": n, "window": list(w.window)})
            kappa = rng.randint(1, 5)
            z = AffineWeight([rng.randint(-4, 4) for _ in range(n)], kappa, 0)
            out = act_weight_affine(w, z)
            rep.check(out.cstar == kappa and out.is_integral(), {"n": n, "affine_action": list(w.window)})
    return rep


def suite_params_properties(cfg: SweepConfig) -> SuiteReport:
    rep = SuiteReport("params")
    lo, hi = cfg.entry_box
    for p in range(2, cfg.p_max + 1):
        for k in range(cfg.kappa_range[0], cfg.kappa_range[1] + 1):
            for lam in product(range(lo, hi + 1), repeat=p):
                rot = brackets(dot_act(AffineSymElement.varpi(p), lam, k), k)
                base = brackets(lam, k)
                rep.check(all(rot[i] == base[(i - 1) % p] for i in range(p)),
                          {"p": p, "kappa": k, "lambda": list(lam), "rotation": list(rot)})
                for i in range(p):
                    g = AffineSymElement.sigma(p, i)
                    once = dot_act(g, lam, k)
                    ok = dot_act(g, once, k) == tuple(lam)
                    if base[i] == 0:
                        ok = ok and once == tuple(lam)
                    rep.check(ok, {"p": p, "kappa": k, "lambda": list(lam), "sigma": i})
                rep.check(sum(base) == k, {"p": p, "lambda": list(lam), "bracket_sum": sum(base)})
    return rep


def suite_pairs(cfg: SweepConfig) -> SuiteReport:
    rep = SuiteReport("pairs")
    for k in range(cfg.kappa_range[0], cfg.kappa_range[1] + 1):
        for p in range(1, cfg.p_max + 1):
            gens = generators(p, with_translations=True)
            for pp in params_in_box(p, k, cfg.entry_box, cfg.n_max, star=True):
                canon, w = reduce_pair_to_fundamental(pp)
                ok = domain_membership(canon).I_kappa_star_plus and dot_act_pair(w, pp) == canon
                ms = to_multisegments(pp)
                for g in gens:
                    q = dot_act_pair(g, pp)
                    ok = ok and q.in_I_star() and to_multisegments(q) == ms
                    if g.letters[0][0] == "s":
                        ok = ok and reduce_pair_to_fundamental(q)[0] == canon
                rep.check(ok, {"pair": pp.to_json(), "canonical": canon.to_json()})
    return rep


def suite_modules(cfg: SweepConfig) -> SuiteReport:
    rep = SuiteReport("modules")
    for p in range(1, cfg.p_max + 1):
        for pp in params_in_box(p, cfg.kappa_range[0], cfg.entry_box, cfg.n_max, star=False):
            M = build_module(pp)
            fails = relation_failures(M.s, M.h)
            if straightened_h_matrices(pp) != M.h:
                fails.append("straightening disagrees with the inversion-set formula")
            for m in M.h:
                for a in range(M.dim):
                    if m[a][a] != M.weights[a][M.h.index(m)]:
                        fails.append("diagonal is not the permuted zeta")
                        break
                    if any(m[b][a] != 0 for b in range(a + 1, M.dim)):
                        fails.append("h matrix is not upper triangular")
                        break
            weight_table(M)
            flags = domain_membership(pp)
            if flags.I_plus:
                if not check_block_lemma(pp):
                    fails.append("block lemma inclusion fails")
                q = simple_quotient(M)
                fails += ["quotient: " + f for f in relation_failures(
                    [[list(r) for r in m] for m in q.s_mats], [[list(r) for r in m] for m in q.h_mats])]
            rep.check(not fails, {"pair": pp.to_json(), "failures": fails})
    return rep


def suite_fault_injection(cfg: SweepConfig) -> SuiteReport:
    """Deliberately perturb one matrix entry; the relation check must notice."""
    rep = SuiteReport("fault")
    M = build_module(ParamPair(3, (2, 1), (0, 0)))
    h = [[list(r) for r in m] for m in M.h]
    h[0][0][1] += 1
    fails = relation_failures(M.s, h)
    rep.check(not fails, {"pair": M.pp.to_json(), "injected": "h_1[0][1] += 1", "failures": fails})
    return rep


SUITES: dict[str, Callable[[SweepConfig], SuiteReport]] = {
    "afw": suite_afw_properties,
    "group_law": lambda cfg: suite_group_law(
        [(n, 6 if n < 4 else 5) for n in range(2, cfg.n_max + 1)], cfg.max_elements),
    "representatives": lambda cfg: suite_representatives(),
    "params": suite_params_properties,
    "fundamental_domains": lambda cfg: suite_fundamental_domains(
        range(2, cfg.p_max + 1), range(cfg.kappa_range[0], cfg.kappa_range[1] + 1), cfg.entry_box),
    "pairs": suite_pairs,
    "modules": suite_modules,
    "zeta_weight_space": lambda cfg: suite_zeta_weight_space(cfg.p_max, cfg.n_max, cfg.entry_box),
    "cpser": lambda cfg: suite_cpser(cfg.n_max, cfg.entry_box),
    "stabilizer": lambda cfg: suite_stabilizer(cfg.kappa_range[1], cfg.n_max, cfg.entry_box),
    "classification": lambda cfg: suite_classification(cfg.kappa_range[1], cfg.n_max, cfg.entry_box),
    "varpi_twist": lambda cfg: suite_varpi_twist(bounds=range(0, cfg.length_bound + 1), seed=cfg.seed),
    "fault": suite_fault_injection,
}


def run_sweep(cfg: SweepConfig | None = None, suites: Iterable[str] | None = None) -> list[dict]:
    """Run the named suites (default: all but the fault self-test)."""
    cfg = cfg or SweepConfig()
    if cfg.empty:
        return []
    names = list(suites) if suites is not None else [s for s in SUITES if s != "fault"]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[name](cfg).to_json() for name in sorted(names)]
