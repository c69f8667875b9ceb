"""
Classification data: the weight zeta attached to a parameter pair, its inverse,
and the multisegment normal form on the cyclic quiver side.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .afw import AffineWeight
from .params import ParamPair, domain_membership, reduce_pair_to_fundamental

__all__ = [
    "Multisegment", "SigmaMatrix", "zeta", "zeta_coords", "xi_to_param",
    "same_simple", "to_multisegments", "from_multisegments", "sigma_matrix",
]


@dataclass(frozen=True)
class Multisegment:
    kappa: int
    segments: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError("multisegments need kappa > 0")
        segs = tuple(sorted((int(a), int(b)) for a, b in self.segments))
        for a, b in segs:
            if not 0 <= a < self.kappa or a > b:
                raise ValueError(f"segment ({a},{b}) is not normalized for kappa={self.kappa}")
        object.__setattr__(self, "segments", segs)

    @property
    def dim(self) -> int:
        return sum(b - a + 1 for a, b in self.segments)

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "segments": [list(s) for s in self.segments]}

    @classmethod
    def from_json(cls, data) -> Multisegment:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["kappa"], tuple(tuple(s) for s in data["segments"]))


@dataclass(frozen=True)
class SigmaMatrix:
    kappa: int
    entries: tuple[tuple[tuple[int, int], int], ...]

    def __getitem__(self, ab: tuple[int, int]) -> int:
        return dict(self.entries).get(tuple(ab), 0)

    @property
    def dim(self) -> int:
        return sum(m * (b - a + 1) for (a, b), m in self.entries)

    def to_json(self) -> list:
        return [[a, b, m] for (a, b), m in self.entries]


def _normalize_segment(a: int, b: int, kappa: int) -> tuple[int, int]:
    shift = a // kappa
    return a - shift * kappa, b - shift * kappa


def zeta_coords(pp: ParamPair) -> tuple[int, ...]:
    if not pp.in_I():
        raise ValueError(f"{pp} is not in I_p")
    out = []
    for i, (lam_i, mu_i) in enumerate(zip(pp.lam, pp.mu), 1):
        # block i: mu_i - i + 1, ..., lam_i - i
        out.extend(range(mu_i - i + 1, lam_i - i + 1))
    return tuple(out)


def zeta(pp: ParamPair) -> AffineWeight:
    """zeta^kappa_{lambda,mu}: block-linear eps part, c*-coefficient kappa."""
    return AffineWeight(zeta_coords(pp), pp.kappa, 0)


def xi_to_param(xi: AffineWeight) -> tuple[ParamPair, int]:
    """Split xi into maximal runs of +1 steps; returns the pair and h(xi) = p."""
    if not xi.is_integral():
        raise ValueError("xi must be integral")
    if xi.delta != 0:
        raise ValueError("xi must have zero delta component")
    coords = xi.int_eps()
    if not coords:
        raise ValueError("xi has no coordinates")
    runs = [[coords[0], coords[0]]]
    for x in coords[1:]:
        if x == runs[-1][1] + 1:
            runs[-1][1] = x
        else:
            runs.append([x, x])
    mu = tuple(start + i for i, (start, _) in enumerate(runs))
    lam = tuple(end + i + 1 for i, (_, end) in enumerate(runs))
    return ParamPair(int(xi.cstar), lam, mu), len(runs)


def to_multisegments(pp: ParamPair) -> Multisegment:
    if pp.kappa <= 0:
        raise ValueError("multisegments need kappa > 0")
    if not pp.in_I_star():
        raise ValueError(f"{pp} has an empty segment")
    segs = [_normalize_segment(mu_i - i + 1, lam_i - i, pp.kappa)
            for i, (lam_i, mu_i) in enumerate(zip(pp.lam, pp.mu), 1)]
    return Multisegment(pp.kappa, tuple(segs))


def sigma_matrix(ms: Multisegment) -> SigmaMatrix:
    return SigmaMatrix(ms.kappa, tuple(sorted(Counter(ms.segments).items())))


def from_multisegments(ms: Multisegment) -> ParamPair:
    if not ms.segments:
        raise ValueError("empty multisegment")
    segs = sorted(ms.segments)
    mu = tuple(a + i for i, (a, _) in enumerate(segs))
    lam = tuple(b + i + 1 for i, (_, b) in enumerate(segs))
    canonical, _ = reduce_pair_to_fundamental(ParamPair(ms.kappa, lam, mu))
    return canonical


def same_simple(a: ParamPair, b: ParamPair) -> bool:
    """Whether the two parameters name isomorphic simple modules."""
    if a.kappa != b.kappa or a.kappa <= 0:
        raise ValueError("both parameters need the same kappa > 0")
    for x in (a, b):
        if not domain_membership(x).I_kappa_star_plus:
            raise ValueError(f"{x} is not in I^*+ at level {x.kappa}")
    return a.p == b.p and to_multisegments(a) == to_multisegments(b)
