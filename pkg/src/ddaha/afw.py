"""
Affine root system of type A_{n-1}^{(1)} and the extended affine Weyl group.

Elements of the extended affine Weyl group are stored in window notation:
a bijection ``w`` of the integers with ``w(i + n) = w(i) + n`` is determined by
``[w(1), ..., w(n)]``.  With this convention

    s_i   swaps i and i+1 (mod n), so s_0 has window [0, 2, ..., n-1, n+1],
    pi    is i -> i + 1, window [2, 3, ..., n+1],
    t_eta is i -> i + n * eta_i.

Every element factors uniquely as ``t_eta * u`` with ``u`` a finite
permutation; ``eta`` is the translation part and ``sum(eta)`` the pi-grade.

Weights live in span{eps_1..eps_n, c*, delta}, coweights in
span{eps_1^v..eps_n^v, c, d}.  For an arbitrary integer ``i = i0 + k n`` with
``i0`` in [1, n] we use ``eps_i = eps_{i0} - k delta`` and
``eps_i^v = eps_{i0}^v - k c``; then ``w(eps_i) = eps_{w(i)}`` for every ``w``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Sequence

__all__ = [
    "AffineWeight", "AffineCoweight", "Root", "AffinePermutation", "ReducedWord",
    "identity", "simple_reflection", "pi", "translation", "generator",
    "multiply", "act_coweight", "act_weight", "act_weight_affine",
    "inversion_set", "length", "reduced_word", "coset_decompose",
    "is_min_coset_rep", "y_eta", "parabolic_subgroup", "finite_min_coset_reps",
    "enumerate_WI_min", "eps_weight", "eps_coweight", "weight_pairing",
    "weight_form", "coweight_form",
]


def _split(i: int, n: int) -> tuple[int, int]:
    """Write ``i = r + k n`` with ``r`` in [1, n]; return ``(r, k)``."""
    k, r = divmod(i - 1, n)
    return r + 1, k


def _frac_tuple(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


# -- weights and coweights ----------------------------------------------------

@dataclass(frozen=True)
class AffineWeight:
    """``sum eps[i] eps_{i+1} + cstar c* + delta delta``."""
    eps: tuple[Fraction, ...]
    cstar: Fraction = Fraction(0)
    delta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "eps", _frac_tuple(self.eps))
        object.__setattr__(self, "cstar", Fraction(self.cstar))
        object.__setattr__(self, "delta", Fraction(self.delta))

    @property
    def n(self) -> int:
        return len(self.eps)

    def __add__(self, other: AffineWeight) -> AffineWeight:
        _check_dim(self.n, other.n)
        return AffineWeight(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            self.cstar + other.cstar, self.delta + other.delta,
        )

    def __sub__(self, other: AffineWeight) -> AffineWeight:
        return self + other.scale(-1)

    def scale(self, x) -> AffineWeight:
        x = Fraction(x)
        return AffineWeight(tuple(x * a for a in self.eps), x * self.cstar, x * self.delta)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in (*self.eps, self.cstar, self.delta))

    def int_eps(self) -> tuple[int, ...]:
        if not all(a.denominator == 1 for a in self.eps):
            raise ValueError(f"non-integral weight {self}")
        return tuple(int(a) for a in self.eps)

    def to_json(self) -> dict:
        return {"weight": [_num(a) for a in self.eps], "cstar": _num(self.cstar),
                "delta": _num(self.delta)}


@dataclass(frozen=True)
class AffineCoweight:
    """``sum epsv[i] eps^v_{i+1} + c c + d d``."""
    epsv: tuple[Fraction, ...]
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "epsv", _frac_tuple(self.epsv))
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "d", Fraction(self.d))

    @property
    def n(self) -> int:
        return len(self.epsv)

    def __add__(self, other: AffineCoweight) -> AffineCoweight:
        _check_dim(self.n, other.n)
        return AffineCoweight(
            tuple(a + b for a, b in zip(self.epsv, other.epsv)),
            self.c + other.c, self.d + other.d,
        )

    def __sub__(self, other: AffineCoweight) -> AffineCoweight:
        return self + other.scale(-1)

    def scale(self, x) -> AffineCoweight:
        x = Fraction(x)
        return AffineCoweight(tuple(x * a for a in self.epsv), x * self.c, x * self.d)


def _num(x: Fraction):
    """Exact JSON number: an int, or a ``[num, den]`` pair."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else [x.numerator, x.denominator]


def _check_dim(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"dimension mismatch: {a} != {b}")


def eps_weight(n: int, i: int) -> AffineWeight:
    """``eps_i`` for any integer ``i``."""
    r, k = _split(i, n)
    eps = [0] * n
    eps[r - 1] = 1
    return AffineWeight(eps, 0, -k)


def eps_coweight(n: int, i: int) -> AffineCoweight:
    """``eps^v_i`` for any integer ``i``."""
    r, k = _split(i, n)
    eps = [0] * n
    eps[r - 1] = 1
    return AffineCoweight(eps, -k, 0)


def weight_pairing(z: AffineWeight, h: AffineCoweight) -> Fraction:
    """The natural pairing <z | h>."""
    _check_dim(z.n, h.n)
    return sum((a * b for a, b in zip(z.eps, h.epsv)), Fraction(0)) + z.cstar * h.c + z.delta * h.d


def coweight_form(h: AffineCoweight, g: AffineCoweight) -> Fraction:
    """Invariant form on coweights: (eps^v_i|eps^v_j) = delta_ij, (c|d) = 1."""
    _check_dim(h.n, g.n)
    return sum((a * b for a, b in zip(h.epsv, g.epsv)), Fraction(0)) + h.c * g.d + h.d * g.c


def weight_form(z: AffineWeight, y: AffineWeight) -> Fraction:
    """Invariant form on weights: (eps_i|eps_j) = delta_ij, (delta|c*) = 1."""
    _check_dim(z.n, y.n)
    return sum((a * b for a, b in zip(z.eps, y.eps)), Fraction(0)) + z.cstar * y.delta + z.delta * y.cstar


# -- roots ----------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Root:
    """
    The affine root ``alpha_ij = eps_i - eps_j`` (``i`` and ``j`` arbitrary
    integers, ``i != j mod n``).  Since ``alpha_{i+n, j+n} = alpha_ij``, roots are
    stored with ``i`` in [1, n]; use :meth:`make` to normalize.
    """
    i: int
    j: int
    n: int

    @classmethod
    def make(cls, i: int, j: int, n: int) -> Root:
        if (i - j) % n == 0:
            raise ValueError(f"eps_{i} - eps_{j} is not a root for n={n}")
        r, k = _split(i, n)
        return cls(r, j - k * n, n)

    @classmethod
    def simple(cls, i: int, n: int) -> Root:
        """alpha_i for i in [0, n-1]; alpha_0 = alpha_{n, n+1} = -alpha_{1n} + delta."""
        if not 0 <= i < n:
            raise IndexError(f"simple root index {i} out of range for n={n}")
        return cls.make(i if i else n, (i if i else n) + 1, n)

    def is_positive(self) -> bool:
        return self.i < self.j

    def negate(self) -> Root:
        return Root.make(self.j, self.i, self.n)

    def weight(self) -> AffineWeight:
        return eps_weight(self.n, self.i) - eps_weight(self.n, self.j)

    def coroot(self) -> AffineCoweight:
        return eps_coweight(self.n, self.i) - eps_coweight(self.n, self.j)

    def __str__(self):
        return f"alpha_{{{self.i},{self.j}}}"


# -- the group ----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class AffinePermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if n < 1:
            raise ValueError("window must be nonempty")
        if len({x % n for x in window}) != n:
            raise ValueError(f"window {list(window)} has repeated residues mod {n}")
        # pi-grade is an integer automatically once residues are distinct

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        r, k = _split(i, self.n)
        return self.window[r - 1] + k * self.n

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        _check_dim(self.n, other.n)
        return AffinePermutation(tuple(self(x) for x in other.window))

    def inverse(self) -> AffinePermutation:
        n = self.n
        inv = [0] * n
        for i, x in enumerate(self.window, 1):
            r, k = _split(x, n)
            inv[r - 1] = i - k * n
        return AffinePermutation(tuple(inv))

    def __pow__(self, k: int) -> AffinePermutation:
        base = self if k >= 0 else self.inverse()
        out = identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    @property
    def pi_power(self) -> int:
        n = self.n
        return (sum(self.window) - n * (n + 1) // 2) // n

    def is_finite(self) -> bool:
        return sorted(self.window) == list(range(1, self.n + 1))

    def finite_part(self) -> AffinePermutation:
        """``u`` in ``self = t_eta * u``."""
        return AffinePermutation(tuple(_split(x, self.n)[0] for x in self.window))

    def translation_part(self) -> tuple[int, ...]:
        """``eta`` in ``self = t_eta * u``."""
        eta = [0] * self.n
        for x in self.window:
            r, k = _split(x, self.n)
            eta[r - 1] = k
        return tuple(eta)

    def length(self) -> int:
        return length(self)

    def right_descents(self) -> list[int]:
        """Indices i in [0, n-1] with l(w s_i) < l(w)."""
        return [i for i in range(self.n) if self(i) > self(i + 1)]

    def left_descents(self) -> list[int]:
        """Indices i in [0, n-1] with l(s_i w) < l(w), i.e. w^{-1}(alpha_i) < 0."""
        return self.inverse().right_descents()

    def to_json(self) -> dict:
        return {"n": self.n, "window": list(self.window)}

    @classmethod
    def from_json(cls, data) -> AffinePermutation:
        if isinstance(data, str):
            data = json.loads(data)
        w = cls(tuple(data["window"]))
        if w.n != data["n"]:
            raise ValueError(f"window length {w.n} does not match n={data['n']}")
        return w

    def __str__(self):
        return "[" + ",".join(map(str, self.window)) + "]"


@dataclass(frozen=True)
class ReducedWord:
    """``pi^pi_power * s_{letters[0]} * ... * s_{letters[-1]}``."""
    n: int
    pi_power: int
    letters: tuple[int, ...]

    def evaluate(self) -> AffinePermutation:
        w = pi(self.n, self.pi_power)
        for i in self.letters:
            w = w * simple_reflection(self.n, i)
        return w

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        parts = []
        if self.pi_power:
            parts.append("pi" if self.pi_power == 1 else f"pi^{self.pi_power}")
        parts += [f"s{i}" for i in self.letters]
        return "*".join(parts) or "e"


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(tuple(range(1, n + 1)))


def simple_reflection(n: int, i: int) -> AffinePermutation:
    if n < 2:
        raise ValueError("simple reflections need n >= 2")
    if not 0 <= i < n:
        raise IndexError(f"s_{i} out of range for n={n}")
    window = list(range(1, n + 1))
    if i == 0:
        window[0], window[-1] = 0, n + 1
    else:
        window[i - 1], window[i] = i + 1, i
    return AffinePermutation(tuple(window))


def pi(n: int, k: int = 1) -> AffinePermutation:
    return AffinePermutation(tuple(range(1 + k, n + 1 + k)))


def translation(eta: Sequence[int]) -> AffinePermutation:
    n = len(eta)
    return AffinePermutation(tuple(i + n * int(e) for i, e in enumerate(eta, 1)))


def generator(n: int, kind: str, eta: Sequence[int] | None = None) -> AffinePermutation:
    """
    Generator by name: ``"s0"``..``"s{n-1}"``, ``"pi"``, ``"pi^-1"``, or ``"t"``
    (with ``eta``).
    """
    if kind == "pi":
        return pi(n)
    if kind in ("pi^-1", "pi-1"):
        return pi(n, -1)
    if kind == "t":
        if eta is None or len(eta) != n:
            raise ValueError(f"translation needs an integer vector of length {n}")
        return translation(eta)
    if kind.startswith("s") and kind[1:].isdigit():
        return simple_reflection(n, int(kind[1:]))
    raise ValueError(f"unknown generator {kind!r}")


def multiply(a: AffinePermutation, b: AffinePermutation) -> AffinePermutation:
    return a * b


# -- actions --------------------------------------------------------------------

def _half_norm(eta: Sequence[int]) -> Fraction:
    return Fraction(sum(e * e for e in eta), 2)


def act_coweight(w: AffinePermutation, h: AffineCoweight) -> AffineCoweight:
    """Linear action on coweights: eps^v_i -> eps^v_{w(i)}, c -> c,
    d -> d + eta^v - (eta|eta)/2 c where eta is the translation part of w."""
    n = w.n
    _check_dim(n, h.n)
    eps = [Fraction(0)] * n
    c = h.c
    for i, a in enumerate(h.epsv, 1):
        r, k = _split(w(i), n)
        eps[r - 1] += a
        c -= k * a
    eta = w.translation_part()
    if h.d:
        for j in range(n):
            eps[j] += h.d * eta[j]
        c -= h.d * _half_norm(eta)
    return AffineCoweight(eps, c, h.d)


def act_weight(w: AffinePermutation, z: AffineWeight) -> AffineWeight:
    """Dual action on the full weight space (delta coefficient kept)."""
    n = w.n
    _check_dim(n, z.n)
    eps = [Fraction(0)] * n
    delta = z.delta
    for i, a in enumerate(z.eps, 1):
        r, k = _split(w(i), n)
        eps[r - 1] += a
        delta -= k * a
    eta = w.translation_part()
    if z.cstar:
        for j in range(n):
            eps[j] += z.cstar * eta[j]
        delta -= z.cstar * _half_norm(eta)
    return AffineWeight(eps, z.cstar, delta)


def act_weight_affine(w: AffinePermutation, z: AffineWeight) -> AffineWeight:
    """
    Affine action on weights with zero delta-part: finite part permutes the
    eps-coordinates and ``t_eta`` adds ``cstar * eta``.
    """
    if z.delta != 0:
        raise ValueError("affine action is defined on weights with zero delta component")
    out = act_weight(w, z)
    return AffineWeight(out.eps, out.cstar, 0)


def act_root(w: AffinePermutation, a: Root) -> Root:
    return Root.make(w(a.i), w(a.j), a.n)


# -- length, inversions, words ---------------------------------------------------

def inversion_set(w: AffinePermutation) -> frozenset[Root]:
    """R(w): positive roots alpha_ij (i in [1,n], i < j) with w(i) > w(j)."""
    n = w.n
    roots = set()
    for i in range(1, n + 1):
        wi = w(i)
        for j0 in range(1, n + 1):
            if j0 == i:
                continue
            m = 0 if j0 > i else 1
            while w(j0) + m * n < wi:
                roots.add(Root(i, j0 + m * n, n))
                m += 1
    return frozenset(roots)


def length(w: AffinePermutation) -> int:
    """Closed-form count of affine inversions."""
    n = w.n
    total = 0
    for i in range(1, n + 1):
        for j0 in range(1, n + 1):
            if j0 != i:
                diff = w(i) - w(j0)
                # m >= m_min with m*n < diff
                count = -(-diff // n) - (0 if j0 > i else 1)
                if count > 0:
                    total += count
    return total


def reduced_word(w: AffinePermutation) -> ReducedWord:
    """
    Strip left descents (smallest index first) until only pi^k remains, then
    move pi^k to the front using pi s_i = s_{i+1} pi.
    """
    n = w.n
    stripped = []
    cur = w
    while True:
        desc = cur.left_descents()
        if not desc:
            break
        i = desc[0]
        stripped.append(i)
        cur = simple_reflection(n, i) * cur
    k = cur.pi_power
    # w = s_{i1} ... s_{im} pi^k = pi^k s_{i1-k} ... s_{im-k}
    return ReducedWord(n, k, tuple((i - k) % n for i in stripped))


def is_min_coset_rep(w: AffinePermutation, I: Iterable[int]) -> bool:
    """``w`` lies in W^I, i.e. R(w) avoids the roots of the parabolic W_I."""
    I = set(I)
    return not any(w(i) > w(i + 1) for i in I)


def coset_decompose(w: AffinePermutation, I: Iterable[int]) -> tuple[AffinePermutation, AffinePermutation]:
    """``w = w1 * u`` with ``w1`` in W^I and ``u`` in W_I."""
    I = sorted(set(I))
    n = w.n
    w1, u = w, identity(n)
    while True:
        for i in I:
            if w1(i) > w1(i + 1):
                s = simple_reflection(n, i)
                w1, u = w1 * s, s * u
                break
        else:
            return w1, u


def y_eta(eta: Sequence[int]) -> AffinePermutation:
    """Shortest finite y with y(eta) weakly increasing (a stable sort)."""
    n = len(eta)
    order = sorted(range(n), key=lambda i: (eta[i], i))
    window = [0] * n
    for pos, i in enumerate(order, 1):
        window[i] = pos
    return AffinePermutation(tuple(window))


def parabolic_subgroup(n: int, I: Iterable[int]) -> list[AffinePermutation]:
    """All elements of W_I for a proper subset I of [0, n-1] (a finite group)."""
    I = sorted(set(I))
    if len(I) >= n:
        raise ValueError("W_I is infinite when I = [0, n-1]")
    gens = [simple_reflection(n, i) for i in I]
    seen = {identity(n)}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen, key=lambda x: (length(x), x.window))


def finite_min_coset_reps(n: int, I: Iterable[int]) -> list[AffinePermutation]:
    """W^I for I a subset of [1, n-1], sorted by length then window."""
    I = set(I)
    if 0 in I:
        raise ValueError("finite minimal coset representatives need I within [1, n-1]")
    reps = [AffinePermutation(p) for p in permutations(range(1, n + 1))]
    reps = [w for w in reps if is_min_coset_rep(w, I)]
    return sorted(reps, key=lambda x: (length(x), x.window))


def _etas_with_grade(n: int, grade: int, spread: int):
    """Integer vectors with the given coordinate sum and max - min <= spread."""
    for rest in product(range(spread + 1), repeat=n):
        if min(rest) != 0:
            continue
        m, r = divmod(grade - sum(rest), n)
        if r == 0:
            yield tuple(m + x for x in rest)


def enumerate_WI_min(
    n: int,
    I: Iterable[int],
    length_bound: int | None = None,
    box: Sequence[int] | tuple[int, int] | None = None,
    grade: int = 0,
) -> list[AffinePermutation]:
    """
    Elements of the minimal coset representatives W^I of the extended affine
    Weyl group, restricted either by a length bound (within a fixed pi-grade,
    since pi^k has length zero) or by a box ``(lo, hi)`` on the translation
    part.  For I inside [1, n-1] they are built as ``t_eta y_eta^{-1} u``.
    """
    I = set(I)
    if (length_bound is None) == (box is None):
        raise ValueError("give exactly one of length_bound or box")
    if length_bound is not None and length_bound < 0:
        return []
    if box is not None:
        lo, hi = box
        if lo > hi:
            return []
        etas = product(range(lo, hi + 1), repeat=n)
    else:
        etas = _etas_with_grade(n, grade, length_bound + n * (n - 1) // 2)

    out = set()
    if 0 not in I:
        finite = finite_min_coset_reps(n, I)
        for eta in etas:
            head = translation(eta) * y_eta(eta).inverse()
            lh = length(head)
            if length_bound is not None and lh > length_bound:
                continue
            for u in finite:
                if length_bound is None or lh + length(u) <= length_bound:
                    out.add(head * u)
    else:
        everything = [AffinePermutation(p) for p in permutations(range(1, n + 1))]
        for eta in etas:
            t = translation(eta)
            for u in everything:
                w = t * u
                if is_min_coset_rep(w, I) and (length_bound is None or length(w) <= length_bound):
                    out.add(w)
    return sorted(out, key=lambda x: (length(x), x.window))
