"""Formal Wall pairing with the basis spheres, from recorded intersection data.

Each basis sphere A meets the immersed sphere F only in a dual disc D and a
parallel copy D'. Points of D are recorded as (sign, exponent); each has a
partner on D' of opposite sign whose group element is shifted by t^eps.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .invariants import phi_laurent
from .rings import BiLaurent, C2Algebra, Laurent


@dataclass(frozen=True)
class DiscPoint:
    sign: int
    exp: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class PairingData:
    disc_id: str
    points: tuple[DiscPoint, ...] = ()
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps!r}")
        object.__setattr__(
            self, "points", tuple(p if isinstance(p, DiscPoint) else DiscPoint(*p) for p in self.points)
        )


@dataclass(frozen=True)
class SphereClass:
    id: str
    pairing: PairingData
    w2: int = 0

    def __post_init__(self):
        if self.w2 not in (0, 1):
            raise ValueError(f"w2 must be 0 or 1, got {self.w2!r}")

    @classmethod
    def build(cls, id: str, points=(), eps: int = 1, w2: int = 0) -> SphereClass:
        return cls(id, PairingData(id, tuple(points), eps), w2)


def lambda_disc(p: PairingData) -> Laurent:
    return Laurent((q.exp, q.sign) for q in p.points)


def lambda_sphere(s: SphereClass) -> Laurent:
    """(1 - t^eps) times the dual-disc contribution."""
    shift = Laurent([(0, 1), (s.pairing.eps, -1)])
    return shift * lambda_disc(s.pairing)


def lambda_tilde(s: SphereClass) -> C2Algebra:
    return phi_laurent(lambda_sphere(s))


def lambda_tilde_disc(p: PairingData) -> C2Algebra:
    return phi_laurent(lambda_disc(p))


def r4_data(spheres: Sequence[SphereClass]) -> tuple[tuple[Laurent, int], ...]:
    """(lambda, w2) pairs, the form a QuotientContext expects."""
    return tuple((lambda_sphere(s), s.w2) for s in spheres)


def relation4_instances(spheres: Sequence[SphereClass], window: int) -> list[BiLaurent]:
    """s^k * lambda(F, A) - w2(A) * s^k for each sphere and |k| <= window, zeros dropped."""
    out = []
    for s in spheres:
        lam = lambda_sphere(s)
        for k in range(-window, window + 1):
            r = BiLaurent.from_laurent(lam, k) - BiLaurent.monomial(s.w2, k, 0)
            if r:
                out.append(r)
    return out


def lambda_linear_combination(coeffs: Sequence[Laurent], spheres: Sequence[SphereClass]) -> Laurent:
    if len(coeffs) != len(spheres):
        raise ValueError(f"got {len(coeffs)} coefficients for {len(spheres)} spheres")
    total = Laurent()
    for g, s in zip(coeffs, spheres):
        total = total + g * lambda_sphere(s)
    return total
