"""
Induced modules over the degenerate affine Hecke algebra, realized by exact
matrices, together with their weight theory and the weight combinatorics of
the double affine induced modules.

The module M(lam, mu) has basis the minimal left coset representatives
W^{lam-mu} of the Young subgroup W_{lam-mu}.  Basis vector ``w`` stands for
``w * 1`` where ``1`` spans the one-dimensional module on which W_{lam-mu}
acts trivially and h acts by zeta.  The defining relation used throughout is

    s_i h - s_i(h) s_i = -<alpha_i | h>.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Sequence

from . import linalg as la
from .afw import (
    AffinePermutation, AffineWeight, act_weight_affine, coset_decompose,
    enumerate_WI_min, finite_min_coset_reps, inversion_set, length, pi,
    simple_reflection, translation, y_eta,
)
from .classify import zeta, zeta_coords
from .params import AffineSymElement, ParamPair, bracket, domain_membership, dot_act_pair

__all__ = [
    "InducedModule", "WeightTable", "SimpleQuotient", "CpserReport",
    "DimensionLimitError", "dim_limit", "young_indices", "build_module",
    "weight_table", "generalized_space", "weight_space", "check_block_lemma",
    "weight_space_at_zeta", "simple_quotient", "is_irreducible",
    "composition_factors", "cpser_conditions", "cpser_check",
    "ddot_weight_multiplicity", "ddot_weight_list", "ddot_weight_list_oracle",
    "fixed_weight_subspace", "stabilizer_counts", "pi_shift_weight",
]

DEFAULT_DIM_LIMIT = 6


class DimensionLimitError(ValueError):
    pass


def dim_limit() -> int:
    raw = os.environ.get("DAHA_DIM_LIMIT")
    if raw is None:
        return DEFAULT_DIM_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"DAHA_DIM_LIMIT must be an integer, got {raw!r}") from None


def young_indices(diff: Sequence[int]) -> tuple[int, ...]:
    """Simple reflections s_i generating the Young subgroup W_{diff}."""
    n = sum(diff)
    cuts = set()
    acc = 0
    for d in diff[:-1]:
        acc += d
        cuts.add(acc)
    return tuple(i for i in range(1, n) if i not in cuts)


def _act_finite(w: AffinePermutation, z: Sequence) -> tuple:
    out = [None] * len(z)
    for i, x in enumerate(z, 1):
        out[w(i) - 1] = x
    return tuple(out)


def _transposition(n: int, a: int, b: int) -> AffinePermutation:
    window = list(range(1, n + 1))
    window[a - 1], window[b - 1] = b, a
    return AffinePermutation(tuple(window))


Mat = tuple[tuple[Fraction, ...], ...]


def _freeze(m) -> Mat:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


@dataclass(frozen=True)
class InducedModule:
    pp: ParamPair
    basis: tuple[AffinePermutation, ...]
    s_mats: tuple[Mat, ...]
    h_mats: tuple[Mat, ...]

    @property
    def n(self) -> int:
        return self.pp.n

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def zeta(self) -> tuple[int, ...]:
        return zeta_coords(self.pp)

    @cached_property
    def s(self) -> list[la.Matrix]:
        return [[list(r) for r in m] for m in self.s_mats]

    @cached_property
    def h(self) -> list[la.Matrix]:
        return [[list(r) for r in m] for m in self.h_mats]

    def generators(self) -> list[la.Matrix]:
        return self.s + self.h

    @cached_property
    def weights(self) -> list[tuple[int, ...]]:
        """w(zeta) for each basis vector w, in basis order."""
        z = self.zeta
        return [_act_finite(w, z) for w in self.basis]

    def to_json(self) -> dict:
        def dump(m):
            return [[[x.numerator, x.denominator] for x in row] for row in m]
        return {
            "pp": self.pp.to_json(),
            "basis": [list(w.window) for w in self.basis],
            "s_mats": [dump(m) for m in self.s_mats],
            "h_mats": [dump(m) for m in self.h_mats],
        }


def build_module(pp: ParamPair, limit: int | None = None) -> InducedModule:
    if not pp.in_I():
        raise ValueError(f"{pp} is not in I_p")
    n = pp.n
    if n < 1:
        raise ValueError("the induced module needs n >= 1")
    limit = dim_limit() if limit is None else limit
    if n > limit:
        raise DimensionLimitError(f"n = {n} exceeds the configured bound {limit}")
    I = young_indices(pp.diff)
    basis = finite_min_coset_reps(n, I)
    index = {w: k for k, w in enumerate(basis)}
    d = len(basis)
    z = zeta_coords(pp)

    def rep(x: AffinePermutation) -> int:
        return index[coset_decompose(x, I)[0]]

    s_mats = []
    for i in range(1, n):
        s = simple_reflection(n, i)
        m = [[0] * d for _ in range(d)]
        for col, w in enumerate(basis):
            m[rep(s * w)][col] = 1
        s_mats.append(_freeze(m))

    h = [[[0] * d for _ in range(d)] for _ in range(n)]
    for col, w in enumerate(basis):
        winv = w.inverse()
        for j in range(1, n + 1):
            h[j - 1][col][col] = z[winv(j) - 1]
        for root in inversion_set(w):
            a, b = root.i, root.j
            target = rep(w * _transposition(n, a, b))
            # <w(alpha_ab) | eps^v_j> is +1 at j = w(a) and -1 at j = w(b)
            h[w(a) - 1][target][col] += 1
            h[w(b) - 1][target][col] -= 1
    return InducedModule(pp, tuple(basis), tuple(s_mats), tuple(_freeze(m) for m in h))


# -- weights ----------------------------------------------------------------------

@dataclass(frozen=True)
class WeightTable:
    """weight -> (weight space dim, generalized weight space dim)."""
    kappa: int
    entries: tuple[tuple[tuple[int, ...], int, int], ...]
    truncated: bool = False

    def as_dict(self) -> dict[tuple[int, ...], tuple[int, int]]:
        return {w: (d, g) for w, d, g in self.entries}

    def gen_dims(self) -> dict[tuple[int, ...], int]:
        return {w: g for w, _, g in self.entries}

    @property
    def total(self) -> int:
        return sum(g for _, _, g in self.entries)

    def to_json(self) -> list:
        return [{"weight": list(w), "cstar": self.kappa, "dim": d, "gen_dim": g}
                for w, d, g in self.entries]


def _shifted(mats, xi):
    return [la.scalar_shift(m, x) for m, x in zip(mats, xi)]


def _diag_multiplicity(m, x) -> int:
    return sum(1 for i in range(len(m)) if m[i][i] == x)


def generalized_space(h_mats: Sequence[la.Matrix], xi: Sequence[int], triangular: bool = True) -> list[la.Vector]:
    """Joint generalized eigenspace of commuting matrices at ``xi``."""
    d = len(h_mats[0]) if h_mats else 0
    rows = []
    for m, x in zip(h_mats, xi):
        k = _diag_multiplicity(m, x) if triangular else d
        if k == 0:
            return []
        rows.extend(la.matpow(la.scalar_shift(m, x), k))
    return la.nullspace(rows, d)


def weight_space(h_mats: Sequence[la.Matrix], xi: Sequence[int]) -> list[la.Vector]:
    d = len(h_mats[0]) if h_mats else 0
    return la.kernel_of_stack(_shifted(h_mats, xi), d)


def weight_table(M: InducedModule) -> WeightTable:
    counts = Counter(M.weights)
    entries = []
    for xi in sorted(counts):
        gen = len(generalized_space(M.h, xi))
        if gen != counts[xi]:
            raise RuntimeError(f"generalized dimension mismatch at {xi} for {M.pp}: "
                               f"{gen} by linear algebra, {counts[xi]} by counting")
        entries.append((xi, len(weight_space(M.h, xi)), gen))
    if sum(g for _, _, g in entries) != M.dim:
        raise RuntimeError(f"generalized dimensions do not sum to {M.dim}")
    return WeightTable(M.pp.kappa, tuple(entries))


def weight_space_at_zeta(M: InducedModule) -> int:
    if not domain_membership(M.pp).I_plus:
        raise ValueError(f"{M.pp} is not in I_p^+")
    return len(weight_space(M.h, M.zeta))


def _cut_points(pp: ParamPair) -> list[int]:
    out, acc = [], 0
    for d in pp.diff:
        acc += d
        out.append(acc)
    return out


def check_block_lemma(pp: ParamPair) -> bool:
    """W^{lam-mu} intersected with the stabilizer of zeta lies inside W_X."""
    if not domain_membership(pp).I_plus:
        raise ValueError(f"{pp} is not in I_p^+")
    n = pp.n
    I = young_indices(pp.diff)
    z = zeta_coords(pp)
    cuts = _cut_points(pp)
    # n_a for a in [1, p-1] with a nonzero bracket; a = p gives n_p = n and never matters
    removed = [cuts[a - 1] for a in range(1, pp.p)
               if bracket(pp.lam, a, pp.kappa) != 0 or bracket(pp.mu, a, pp.kappa) != 0]
    for w in finite_min_coset_reps(n, I):
        if _act_finite(w, z) != z:
            continue
        # membership in W_X: w preserves [1, c] for every removed cut c
        if any(sorted(w.window[:c]) != list(range(1, c + 1)) for c in removed):
            return False
    return True


# -- simple quotients -------------------------------------------------------------

@dataclass(frozen=True)
class SimpleQuotient:
    dim_M: int
    dim_L: int
    radical: tuple[tuple[Fraction, ...], ...]
    s_mats: tuple[Mat, ...]
    h_mats: tuple[Mat, ...]

    @property
    def dim_N(self) -> int:
        return self.dim_M - self.dim_L


def _non_zeta_part(M: InducedModule) -> list[la.Vector]:
    """Sum of the generalized weight spaces other than the zeta one."""
    z = M.zeta
    cols = []
    for m, x in zip(M.h, z):
        k = _diag_multiplicity(m, x)
        p = la.matpow(la.scalar_shift(m, x), k)
        cols.extend(la.transpose(p))
    return la.span(cols, M.dim)


def maximal_submodule(M: InducedModule) -> list[la.Vector]:
    return la.largest_invariant_subspace(M.generators(), _non_zeta_part(M), M.dim)


def simple_quotient(M: InducedModule) -> SimpleQuotient:
    if not domain_membership(M.pp).I_plus:
        raise ValueError(f"{M.pp} is not in I_p^+")
    wz = len(weight_space(M.h, M.zeta))
    if wz != 1:
        raise RuntimeError(f"zeta weight space of {M.pp} has dimension {wz}, expected 1")
    N = maximal_submodule(M)
    s_q = [la.quotient(m, N)[0] for m in M.s]
    h_q = [la.quotient(m, N)[0] for m in M.h]
    return SimpleQuotient(M.dim, M.dim - len(N), tuple(tuple(v) for v in N),
                          tuple(_freeze(m) for m in s_q), tuple(_freeze(m) for m in h_q))


# -- composition series -------------------------------------------------------------

def _find_proper_submodule(gens, h_mats, candidates, d):
    for xi in candidates:
        for v in weight_space(h_mats, xi):
            sub = la.cyclic_span(gens, [v], d)
            if len(sub) < d:
                return sub
    # annihilators of submodules of the dual module are submodules
    gens_t = [la.transpose(g) for g in gens]
    h_t = [la.transpose(m) for m in h_mats]
    for xi in candidates:
        for v in weight_space(h_t, xi):
            sub = la.cyclic_span(gens_t, [v], d)
            if len(sub) < d:
                return la.nullspace(sub, d)
    return None


def is_irreducible(gens, h_mats, candidates) -> tuple[bool, list | None]:
    """Decide irreducibility; return a proper submodule when reducible.

    A reducible verdict always comes with an explicit invariant subspace.  An
    irreducible verdict is certified either by every joint eigenvector being
    cyclic with one-dimensional weight spaces, or by the generated algebra
    being the full matrix algebra.
    """
    d = len(gens[0]) if gens else 0
    if d <= 1:
        return True, None
    sub = _find_proper_submodule(gens, h_mats, candidates, d)
    if sub is not None:
        return False, sub
    if all(len(weight_space(h_mats, xi)) <= 1 for xi in candidates):
        return True, None
    integral = all(Fraction(x).denominator == 1 for g in gens for row in g for x in row)
    if integral and la.algebra_dimension_mod_p(gens) == d * d:
        return True, None
    raise RuntimeError("could not decide irreducibility")


def _gen_counts(h_mats, candidates) -> dict:
    out = {}
    for xi in candidates:
        g = len(generalized_space(h_mats, xi, triangular=False))
        if g:
            out[tuple(xi)] = g
    return out


@dataclass(frozen=True)
class Factor:
    dim: int
    weights: tuple[tuple[tuple[int, ...], int], ...]


def composition_factors(M: InducedModule) -> list[Factor]:
    """Composition factors bottom to top, each with its generalized weights."""
    candidates = sorted(set(M.weights))

    def rec(gens, n_h):
        d = len(gens[0])
        h_mats = gens[-n_h:]
        ok, sub = is_irreducible(gens, h_mats, candidates)
        if ok:
            return [Factor(d, tuple(sorted(_gen_counts(h_mats, candidates).items())))]
        low = [la.restrict(g, sub) for g in gens]
        high = [la.quotient(g, sub)[0] for g in gens]
        return rec(low, n_h) + rec(high, n_h)

    return rec(M.generators(), len(M.h))


def _factor_of_simple_quotient(M: InducedModule) -> Factor:
    q = simple_quotient(M)
    h = [[list(r) for r in m] for m in q.h_mats]
    cands = sorted(set(M.weights))
    return Factor(q.dim_L, tuple(sorted(_gen_counts(h, cands).items())))


def cpser_conditions(pp: ParamPair) -> dict:
    """Reducibility conditions for p = 2.

    ``literal_*`` are the two conditions in their commonly quoted form;
    ``a``/``b`` are the linkage conditions of the two segments
    [mu_1, lam_1 - 1] and [mu_2 - 1, lam_2 - 2], which is what the matrix
    computation confirms.
    """
    (l1, l2), (m1, m2) = pp.lam, pp.mu
    return {
        "literal_a": m2 <= m1 <= l2 + 1 and l2 <= l1,
        "literal_b": m1 <= m2 <= l1 + 1 and l1 <= l2,
        "a": m2 <= m1 <= l2 - 1 and l2 <= l1,
        "b": m1 + 2 <= m2 <= l1 + 1 and l1 + 2 <= l2,
    }


@dataclass(frozen=True)
class CpserReport:
    pp: ParamPair
    reducible: bool
    case: str
    factor_dims: tuple[int, ...]
    literal_reducible: bool
    literal_case: str
    consistent: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "pair": self.pp.to_json(), "reducible": self.reducible, "case": self.case,
            "factor_dims": list(self.factor_dims),
            "literal_reducible": self.literal_reducible, "literal_case": self.literal_case,
            "consistent": self.consistent, "detail": self.detail,
        }


def cpser_check(pp: ParamPair, limit: int | None = None) -> CpserReport:
    if pp.p != 2 or not pp.in_I_star():
        raise ValueError(f"{pp} is not in I_2^*")
    cond = cpser_conditions(pp)
    case = "a" if cond["a"] else "b" if cond["b"] else "none"
    lit = [c for c in ("a", "b") if cond["literal_" + c]]
    literal_case = "both" if len(lit) == 2 else lit[0] if lit else "none"

    M = build_module(pp, limit)
    factors = composition_factors(M)
    reducible = len(factors) > 1
    problems = []
    if cond["a"] and cond["b"]:
        problems.append("both linkage conditions hold")
    if reducible != (case != "none"):
        problems.append(f"conditions say {case}, composition length {len(factors)}")

    sigma = AffineSymElement.sigma(2, 1)
    if case != "none" and reducible:
        if case == "a":
            sub_pp = ParamPair(pp.kappa, dot_act_pair(sigma, pp).lam, pp.mu)
            top_pp = pp
        else:
            twisted = dot_act_pair(sigma, pp)
            sub_pp = twisted
            top_pp = ParamPair(pp.kappa, pp.lam, twisted.mu)
        expected = [_factor_of_simple_quotient(build_module(x, limit)) for x in (sub_pp, top_pp)]
        if factors != expected:
            problems.append(f"factors {factors} differ from L{sub_pp} and L{top_pp}")
        if case == "a":
            # M is then in I_2^+ and its radical is the unique maximal submodule
            if _factor_of_simple_quotient(M) != expected[1]:
                problems.append("simple quotient does not match the expected top")
    elif not reducible:
        other = build_module(dot_act_pair(sigma, pp), limit)
        if weight_table(M).entries != weight_table(other).entries:
            problems.append("weight tables of the sigma-twist differ")

    return CpserReport(
        pp, reducible, case, tuple(f.dim for f in factors),
        literal_case != "none", literal_case, not problems, "; ".join(problems),
    )


def fixed_weight_subspace(M: InducedModule, pp2: ParamPair) -> int:
    """dim of {v in M_{zeta(pp2)} : w v = v for w in W_{lam2 - mu2}}."""
    if pp2.n != M.n:
        raise ValueError("incompatible n")
    if not pp2.in_I():
        raise ValueError(f"{pp2} is not in I_p")
    z = zeta_coords(pp2)
    rows = []
    for m, x in zip(M.h, z):
        rows.extend(la.scalar_shift(m, x))
    for i in young_indices(pp2.diff):
        rows.extend(la.scalar_shift(M.s[i - 1], 1))
    return len(la.nullspace(rows, M.dim))


# -- double affine weights ------------------------------------------------------------

def _xi_eps(xi) -> tuple[Fraction, ...]:
    return tuple(xi.eps) if isinstance(xi, AffineWeight) else tuple(Fraction(x) for x in xi)


def ddot_weight_multiplicity(pp: ParamPair, xi) -> int:
    """#{w in the minimal coset reps of the extended affine Weyl group modulo
    W_{lam-mu} with w(zeta^kappa) = xi}, computed exactly.

    Every such w is t_eta y_eta^{-1} u with u in W^{lam-mu}, and
    w(zeta^kappa) = y_eta^{-1} u(zeta) + kappa eta.  For each u and each
    candidate v = y_eta^{-1} the vector eta is forced; it counts when it is
    integral and its stable sort is realized by v.
    """
    k = pp.kappa
    if k == 0:
        raise ValueError("kappa = 0 is not treated")
    if isinstance(xi, AffineWeight):
        if xi.delta != 0 or xi.cstar != k:
            return 0
    target = _xi_eps(xi)
    if len(target) != pp.n:
        raise ValueError("weight has the wrong length")
    if any(t.denominator != 1 for t in target):
        return 0
    return _ddot_count(pp, tuple(int(t) for t in target))


@lru_cache(maxsize=None)
def _finite_windows(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


@lru_cache(maxsize=100_000)
def _ddot_count(pp: ParamPair, target: tuple[int, ...]) -> int:
    k, n = pp.kappa, pp.n
    z = zeta_coords(pp)
    count = 0
    for u in finite_min_coset_reps(n, young_indices(pp.diff)):
        uz = _act_finite(u, z)
        for v in _finite_windows(n):
            # (v uz)[v[i]] = uz[i]; window of v is v[i] + 1
            eta = [0] * n
            for i in range(n):
                q, r = divmod(target[v[i]] - uz[i], k)
                if r:
                    break
                eta[v[i]] = q
            else:
                # y_eta^{-1} has window (order[0] + 1, ..., order[n-1] + 1)
                if tuple(sorted(range(n), key=lambda j: (eta[j], j))) == v:
                    count += 1
    return count


def _weight_key(w: AffineWeight) -> tuple[int, ...]:
    return w.int_eps()


def ddot_weight_list(pp: ParamPair, length_bound: int, grade: int = 0) -> WeightTable:
    """
    Weights w(zeta^kappa) for w in the minimal coset reps with l(w) <= bound
    inside one pi-grade (grade 0 by default), each with its exact
    multiplicity.  Always a truncation of an infinite set.

    Only generalized multiplicities are available here; the ``dim`` slot
    repeats the generalized one.
    """
    if pp.kappa == 0:
        raise ValueError("kappa = 0 is not treated")
    if length_bound < 0:
        raise ValueError("length bound must be nonnegative")
    n = pp.n
    I = young_indices(pp.diff)
    z = zeta(pp)
    seen = set()
    for w in enumerate_WI_min(n, I, length_bound=length_bound, grade=grade):
        seen.add(_weight_key(act_weight_affine(w, z)))
    entries = []
    for xi in sorted(seen):
        m = ddot_weight_multiplicity(pp, xi)
        entries.append((xi, m, m))
    return WeightTable(pp.kappa, tuple(entries), truncated=True)


def ddot_weight_list_oracle(pp: ParamPair, box: int) -> Counter:
    """Brute force: w(zeta^kappa) over all t_eta u with |eta_i| <= box that are
    minimal coset representatives."""
    n = pp.n
    I = young_indices(pp.diff)
    z = zeta(pp)
    out = Counter()
    for w in enumerate_WI_min(n, I, box=(-box, box)):
        out[_weight_key(act_weight_affine(w, z))] += 1
    return out


def stabilizer_counts(pp: ParamPair) -> tuple[int, int]:
    """(double affine count at zeta^kappa, finite count W^{lam-mu} cap W[zeta])."""
    z = zeta_coords(pp)
    I = young_indices(pp.diff)
    finite = sum(1 for w in finite_min_coset_reps(pp.n, I) if _act_finite(w, z) == z)
    return ddot_weight_multiplicity(pp, z), finite


def pi_shift_weight(xi: Sequence[int], m: int, kappa: int) -> tuple[int, ...]:
    """pi^m applied to xi + kappa c* (affine action)."""
    w = act_weight_affine(pi(len(xi), m), AffineWeight(tuple(xi), kappa, 0))
    return w.int_eps()
