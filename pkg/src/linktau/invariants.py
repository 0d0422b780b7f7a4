"""Link-homotopy invariants computed from combinatorial double-point data.

sigma        sum over double points of sign * (t^|n| - 1)
I(W)         sum over interior intersections x of W of sign(x) * s^n * t^m_x
tau          sum of I(W) over the Whitney disks, read modulo the relations
Phi          additive map Z[s^±1, t^±1] -> Z_2<t>
varphi       Z_2<t> -> Z_2, picking out the coefficient of t
omega_plus   varphi(Phi(tau))
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .rings import C2_ONE, C2_T, C2_ZERO, BiLaurent, C2Algebra, Laurent


class UnframedDiskError(ValueError):
    """tau was requested for a disk that is not marked as framed."""


def _check_sign(sign: int, what: str) -> None:
    if sign not in (1, -1):
        raise ValueError(f"{what}: sign must be +1 or -1, got {sign!r}")


@dataclass(frozen=True)
class DoublePoint:
    sign: int
    n: int
    id: str = ""

    def __post_init__(self):
        _check_sign(self.sign, f"double point {self.id or '?'}")


@dataclass(frozen=True)
class Intersection:
    """An interior intersection of a Whitney disk with the sphere."""

    sign: int
    m: int

    def __post_init__(self):
        _check_sign(self.sign, "intersection")


@dataclass(frozen=True)
class WhitneyDiskData:
    id: str
    primary: int
    intersections: tuple[Intersection, ...] = ()
    pair: str | None = None
    framed: bool = True

    def __post_init__(self):
        object.__setattr__(
            self,
            "intersections",
            tuple(x if isinstance(x, Intersection) else Intersection(*x) for x in self.intersections),
        )


@dataclass(frozen=True)
class SigmaPair:
    sigma_plus: Laurent = field(default_factory=Laurent)
    sigma_minus: Laurent = field(default_factory=Laurent)

    def __str__(self):
        return f"({self.sigma_plus}, {self.sigma_minus})"


def sigma(points: Iterable[DoublePoint]) -> Laurent:
    """Kirk's sigma for one component: sum of sign(p) * (t^|n(p)| - 1)."""
    terms: list[tuple[int, int]] = []
    for p in points:
        terms.append((abs(p.n), p.sign))
        terms.append((0, -p.sign))
    return Laurent(terms)


def sigma_pair(dp_plus: Iterable[DoublePoint], dp_minus: Iterable[DoublePoint]) -> SigmaPair:
    return SigmaPair(sigma(dp_plus), sigma(dp_minus))


def intersection_sum(w: WhitneyDiskData) -> BiLaurent:
    """I(W): each intersection contributes sign * s^primary * t^m."""
    return BiLaurent(((w.primary, x.m), x.sign) for x in w.intersections)


def tau(disks: Sequence[WhitneyDiskData]) -> BiLaurent:
    """A representative of tau in Z[s^±1, t^±1]; only meaningful modulo the relations."""
    unframed = [w.id for w in disks if not w.framed]
    if unframed:
        raise UnframedDiskError(f"tau is undefined for unframed disks: {', '.join(unframed)}")
    total = BiLaurent()
    for w in disks:
        total = total + intersection_sum(w)
    return total


def phi_monomial(a: int, k: int, l: int) -> C2Algebra:
    """Image of a*s^k*t^l: a mod 2 if k and l are both even, (a mod 2)*t otherwise."""
    if a % 2 == 0:
        return C2_ZERO
    return C2_ONE if k % 2 == 0 and l % 2 == 0 else C2_T


def phi_monomial_exponent_form(a: int, k: int, l: int) -> C2Algebra:
    """Equivalent closed form a*s^k*t^l -> (a mod 2) * t^(k + k*l + l)."""
    if a % 2 == 0:
        return C2_ZERO
    return C2_T if (k + k * l + l) % 2 else C2_ONE


def phi(x: BiLaurent) -> C2Algebra:
    out = C2_ZERO
    for (k, l), a in x.items():
        out = out + phi_monomial(a, k, l)
    return out


def phi_laurent(x: Laurent) -> C2Algebra:
    """a*t^k -> (a mod 2) * t^(k mod 2), extended additively."""
    a = b = 0
    for e, c in x.items():
        if e % 2:
            b += c
        else:
            a += c
    return C2Algebra(a, b)


def varphi(x: C2Algebra) -> int:
    return x.b


def omega_plus(disks: Sequence[WhitneyDiskData]) -> int:
    return varphi(phi(tau(disks)))
