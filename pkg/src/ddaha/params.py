"""
Parameter pairs (lambda, mu) and the level-kappa dot action of the extended
affine symmetric group on Z^p.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .afw import AffinePermutation, identity, pi, simple_reflection, translation

__all__ = [
    "ParamPair", "AffineSymElement", "DomainFlags", "bracket", "brackets", "rho",
    "dot_act", "dot_act_embedded", "dot_act_pair", "domain_membership",
    "in_dom", "in_affdom", "in_dom_mu", "in_affdom_mu",
    "reduce_to_affdom", "reduce_pair_to_fundamental", "varpi_orbit_canonical",
]


@dataclass(frozen=True)
class ParamPair:
    kappa: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        mu = tuple(int(x) for x in self.mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "kappa", int(self.kappa))
        if len(lam) != len(mu):
            raise ValueError(f"lambda and mu have different lengths: {lam}, {mu}")
        if not lam:
            raise ValueError("p must be positive")

    @property
    def p(self) -> int:
        return len(self.lam)

    @property
    def diff(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.lam, self.mu))

    @property
    def n(self) -> int:
        return sum(self.diff)

    def in_I(self) -> bool:
        return all(d >= 0 for d in self.diff)

    def in_I_star(self) -> bool:
        return all(d > 0 for d in self.diff)

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, data) -> ParamPair:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["kappa"], tuple(data["lambda"]), tuple(data["mu"]))

    def __str__(self):
        return f"(({','.join(map(str, self.lam))}),({','.join(map(str, self.mu))}))"


# -- group elements ---------------------------------------------------------------
#
# Letters: ("s", i) for sigma_i, ("w", +-1) for varpi^{+-1}, ("t", +-i) for
# t_{e_i}^{+-1}.

def _letter_perm(p: int, letter) -> AffinePermutation:
    kind, k = letter
    if kind == "s":
        return simple_reflection(p, k)
    if kind == "w":
        return pi(p, k)
    if kind == "t":
        eta = [0] * p
        eta[abs(k) - 1] = 1 if k > 0 else -1
        return translation(eta)
    raise ValueError(f"unknown letter {letter!r}")


def _letter_str(letter) -> str:
    kind, k = letter
    if kind == "s":
        return f"σ{k}"
    if kind == "w":
        return "ϖ" if k == 1 else "ϖ^-1"
    return f"t{k}" if k > 0 else f"t{-k}^-1"


@dataclass(frozen=True)
class AffineSymElement:
    """
    A word ``g_1 g_2 ... g_k`` in the generators of the extended affine
    symmetric group of rank ``p``.  It acts by ``g_1 o (g_2 o (... o lam))``.
    """
    p: int
    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        letters = tuple((str(a), int(b)) for a, b in self.letters)
        object.__setattr__(self, "letters", letters)
        for kind, k in letters:
            if kind == "s":
                if self.p == 1 or not 0 <= k < self.p:
                    raise IndexError(f"sigma_{k} out of range for p={self.p}")
            elif kind == "w":
                if k not in (1, -1):
                    raise ValueError("varpi letters carry exponent +1 or -1")
            elif kind == "t":
                if not 1 <= abs(k) <= self.p:
                    raise IndexError(f"t_e{k} out of range for p={self.p}")
            else:
                raise ValueError(f"unknown letter kind {kind!r}")

    @classmethod
    def sigma(cls, p: int, i: int) -> AffineSymElement:
        return cls(p, (("s", i),))

    @classmethod
    def varpi(cls, p: int, k: int = 1) -> AffineSymElement:
        sign = 1 if k >= 0 else -1
        return cls(p, (("w", sign),) * abs(k))

    @classmethod
    def t(cls, p: int, i: int) -> AffineSymElement:
        return cls(p, (("t", i),))

    def __mul__(self, other: AffineSymElement) -> AffineSymElement:
        if self.p != other.p:
            raise ValueError("rank mismatch")
        return AffineSymElement(self.p, self.letters + other.letters)

    def inverse(self) -> AffineSymElement:
        inv = []
        for kind, k in reversed(self.letters):
            inv.append((kind, k if kind == "s" else -k))
        return AffineSymElement(self.p, tuple(inv))

    @property
    def normal_form(self) -> AffinePermutation:
        """The element as an affine permutation of rank p."""
        w = identity(self.p)
        for letter in self.letters:
            w = w * _letter_perm(self.p, letter)
        return w

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(_letter_str(x) for x in self.letters)


def generators(p: int, with_translations: bool = False) -> list[AffineSymElement]:
    """sigma_0..sigma_{p-1} (none for p = 1), varpi and varpi^{-1}."""
    gens = [AffineSymElement.sigma(p, i) for i in range(p)] if p > 1 else []
    gens += [AffineSymElement.varpi(p, 1), AffineSymElement.varpi(p, -1)]
    if with_translations:
        gens += [AffineSymElement.t(p, i) for i in range(1, p + 1)]
    return gens


# -- brackets and the dot action ----------------------------------------------------

def bracket(lam: Sequence[int], i: int, kappa: int) -> int:
    p = len(lam)
    if p < 1:
        raise ValueError("empty vector")
    if not 0 <= i < p:
        raise IndexError(f"bracket index {i} out of range for p={p}")
    if i == 0:
        return kappa - p + 1 - lam[0] + lam[-1]
    return lam[i - 1] - lam[i] + 1


def brackets(lam: Sequence[int], kappa: int) -> tuple[int, ...]:
    return tuple(bracket(lam, i, kappa) for i in range(len(lam)))


def rho(p: int) -> tuple[int, ...]:
    """eps-part of rho; its c*-part is p."""
    return tuple(-i for i in range(p))


def _apply_letter(letter, lam: list[int], kappa: int) -> list[int]:
    kind, k = letter
    p = len(lam)
    if kind == "s":
        if p == 1:
            raise IndexError("no sigma letters at p = 1")
        if k == 0:
            out = list(lam)
            out[0] = lam[-1] + kappa - p + 1
            out[-1] = lam[0] - kappa + p - 1
            return out
        out = list(lam)
        out[k - 1], out[k] = lam[k] - 1, lam[k - 1] + 1
        return out
    if kind == "w":
        if k == 1:
            return [lam[-1] + kappa - p + 1] + [x + 1 for x in lam[:-1]]
        return [x - 1 for x in lam[1:]] + [lam[0] - kappa + p - 1]
    if kind == "t":
        out = list(lam)
        out[abs(k) - 1] += kappa if k > 0 else -kappa
        return out
    raise ValueError(f"unknown letter {letter!r}")


def dot_act(w: AffineSymElement, lam: Sequence[int], kappa: int) -> tuple[int, ...]:
    if len(lam) != w.p:
        raise ValueError(f"vector length {len(lam)} does not match p={w.p}")
    out = [int(x) for x in lam]
    for letter in reversed(w.letters):
        out = _apply_letter(letter, out, kappa)
    return tuple(out)


def dot_act_embedded(w: AffinePermutation, lam: Sequence[int], kappa: int) -> tuple[int, ...]:
    """``w(lam + rho) - rho`` through the affine action at level kappa."""
    p = w.n
    if len(lam) != p:
        raise ValueError("length mismatch")
    r = rho(p)
    z = [a + b for a, b in zip(lam, r)]
    out = [0] * p
    for i in range(1, p + 1):
        wi = w(i)
        t, k = (wi - 1) % p + 1, (wi - 1) // p
        out[t - 1] = z[i - 1] + kappa * k
    return tuple(a - b for a, b in zip(out, r))


def dot_act_pair(w: AffineSymElement, pp: ParamPair) -> ParamPair:
    return ParamPair(pp.kappa, dot_act(w, pp.lam, pp.kappa), dot_act(w, pp.mu, pp.kappa))


# -- domains --------------------------------------------------------------------------

def _indices(p: int, affine: bool) -> range:
    # at p = 1 the index-0 condition reads [lam]_0 = kappa >= 0 and is treated as vacuous
    if affine and p > 1:
        return range(0, p)
    return range(1, p)


def in_dom(lam: Sequence[int], kappa: int = 0) -> bool:
    return all(bracket(lam, i, kappa) >= 0 for i in _indices(len(lam), False))


def in_affdom(lam: Sequence[int], kappa: int) -> bool:
    return all(bracket(lam, i, kappa) >= 0 for i in _indices(len(lam), True))


def in_dom_mu(lam: Sequence[int], mu: Sequence[int], kappa: int = 0) -> bool:
    return all(bracket(lam, i, kappa) >= 0 for i in _indices(len(lam), False)
               if bracket(mu, i, kappa) == 0)


def in_affdom_mu(lam: Sequence[int], mu: Sequence[int], kappa: int) -> bool:
    return all(bracket(lam, i, kappa) >= 0 for i in _indices(len(lam), True)
               if bracket(mu, i, kappa) == 0)


@dataclass(frozen=True)
class DomainFlags:
    dom: bool
    affdom: bool
    dom_mu: bool
    affdom_mu: bool
    I_plus: bool
    I_kappa_plus: bool
    I_star_plus: bool
    I_kappa_star_plus: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def domain_membership(pp: ParamPair) -> DomainFlags:
    """
    ``dom``/``affdom`` refer to mu; ``dom_mu``/``affdom_mu`` to lambda relative
    to mu.  The four set memberships combine them with I_p and I_p^*.
    """
    k, lam, mu = pp.kappa, pp.lam, pp.mu
    dom = in_dom(mu, k)
    aff = in_affdom(mu, k)
    dom_mu = in_dom_mu(lam, mu, k)
    aff_mu = in_affdom_mu(lam, mu, k)
    in_I, star = pp.in_I(), pp.in_I_star()
    plus = in_I and dom and dom_mu
    kplus = in_I and aff and aff_mu
    return DomainFlags(dom, aff, dom_mu, aff_mu, plus, kplus, plus and star, kplus and star)


# -- reduction ----------------------------------------------------------------------

def reduce_to_affdom(lam: Sequence[int], kappa: int) -> tuple[tuple[int, ...], AffineSymElement]:
    """Greedy reduction into AffDom: apply sigma_i for the smallest i with a
    negative bracket until none is left."""
    if kappa <= 0:
        raise ValueError("reduction needs kappa > 0")
    p = len(lam)
    cur = [int(x) for x in lam]
    applied = []
    if p > 1:
        while True:
            bad = next((i for i in range(p) if bracket(cur, i, kappa) < 0), None)
            if bad is None:
                break
            cur = _apply_letter(("s", bad), cur, kappa)
            applied.append(("s", bad))
    return tuple(cur), AffineSymElement(p, tuple(reversed(applied)))


def reduce_pair_to_fundamental(pp: ParamPair) -> tuple[ParamPair, AffineSymElement]:
    """Move ``pp`` into I^{*+}_{p,kappa}: reduce mu, then sort lambda inside the
    stabilizer of mu (generated by sigma_i with [mu]_i = 0)."""
    if pp.kappa <= 0:
        raise ValueError("reduction needs kappa > 0")
    if not pp.in_I_star():
        raise ValueError(f"{pp} is not in I_p^*")
    k, p = pp.kappa, pp.p
    mu_plus, w = reduce_to_affdom(pp.mu, k)
    lam = list(dot_act(w, pp.lam, k))
    applied = []
    if p > 1:
        while True:
            bad = next((i for i in range(p)
                        if bracket(mu_plus, i, k) == 0 and bracket(lam, i, k) < 0), None)
            if bad is None:
                break
            lam = _apply_letter(("s", bad), lam, k)
            applied.append(("s", bad))
    witness = AffineSymElement(p, tuple(reversed(applied))) * w
    return ParamPair(k, tuple(lam), mu_plus), witness


def varpi_orbit_canonical(pp: ParamPair) -> ParamPair:
    """Canonical representative of the varpi-orbit of ``pp`` in I^{*+}_{p,kappa}."""
    from .classify import from_multisegments, to_multisegments

    flags = domain_membership(pp)
    if pp.kappa <= 0 or not flags.I_kappa_star_plus:
        raise ValueError(f"{pp} is not in I^*+ at level {pp.kappa}")
    return from_multisegments(to_multisegments(pp))


def enumerate_box(p: int, lo: int, hi: int) -> Iterable[tuple[int, ...]]:
    from itertools import product
    return product(range(lo, hi + 1), repeat=p)
