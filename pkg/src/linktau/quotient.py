"""Equality in Z[s^±1, t^±1] modulo the additive relation family.

The relations are the additive subgroup generated by

    R1(k)      s^k t^k - s^k
    R2(k, l)   s^k t^l + s^-k t^(l-k)
    R3(k, l)   s^k t^l + s^l t^k
    R4(k; g)   s^k g(t) - w2 s^k     for each supplied pair (g, w2)

Equality is only semi-decidable here. We look for an integer combination of
relators inside a finite exponent window (sound for "equal"), then try
additive maps that kill every relator (sound for "distinct"), and otherwise
answer unknown. Every answer comes with a certificate that can be replayed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .invariants import phi
from .lattice import IntegerLattice
from .rings import BiLaurent, C2Algebra, Laurent

DEFAULT_MARGIN = 4
MAX_COMPONENT = 4096


class WindowTooSmallError(ValueError):
    pass


@dataclass(frozen=True)
class Relator:
    """One instance of a relation family."""

    kind: str
    k: int
    l: int | None = None
    g: Laurent | None = None
    w2: int = 0

    def __post_init__(self):
        if self.kind not in ("R1", "R2", "R3", "R4"):
            raise ValueError(f"unknown relation kind {self.kind!r}")
        if self.kind in ("R2", "R3") and self.l is None:
            raise ValueError(f"{self.kind} needs both k and l")
        if self.kind == "R4" and self.g is None:
            raise ValueError("R4 needs a Laurent polynomial g")

    def expand(self) -> BiLaurent:
        k, l = self.k, self.l
        if self.kind == "R1":
            return BiLaurent([((k, k), 1), ((k, 0), -1)])
        if self.kind == "R2":
            return BiLaurent([((k, l), 1), ((-k, l - k), 1)])
        if self.kind == "R3":
            return BiLaurent([((k, l), 1), ((l, k), 1)])
        return BiLaurent.from_laurent(self.g, k) - BiLaurent.monomial(self.w2, k, 0)

    def __str__(self):
        if self.kind == "R1":
            return f"R1 k={self.k}"
        if self.kind == "R4":
            return f"R4 k={self.k} w2={self.w2} g={self.g}"
        return f"{self.kind} k={self.k} l={self.l}"


@dataclass(frozen=True)
class QuotientContext:
    """R4 data plus the exponent window used for relator enumeration.

    ``window=None`` means: largest exponent magnitude of the inputs plus ``margin``.
    """

    r4_data: tuple[tuple[Laurent, int], ...] = ()
    window: int | None = None
    margin: int = DEFAULT_MARGIN

    def __post_init__(self):
        # identical pairs generate identical relators
        data = dict.fromkeys((g, int(w) & 1) for g, w in self.r4_data)
        object.__setattr__(self, "r4_data", tuple(data))
        if self.window is not None and self.window < 0:
            raise ValueError("window must be nonnegative")

    def with_window(self, window: int) -> QuotientContext:
        return QuotientContext(self.r4_data, window, self.margin)

    def resolve(self, *xs: BiLaurent) -> QuotientContext:
        need = max((x.max_abs_exponent() for x in xs), default=0)
        if self.window is None:
            return self.with_window(need + self.margin)
        if need > self.window:
            raise WindowTooSmallError(
                f"window {self.window} is smaller than the largest exponent magnitude {need}"
            )
        return self


def enumerate_relator_instances(ctx: QuotientContext) -> list[Relator]:
    """All relator instances with exponents bounded by the window, zero ones dropped."""
    if ctx.window is None:
        raise ValueError("context has no window; call resolve() first")
    w = ctx.window
    rng = range(-w, w + 1)
    out = [Relator("R1", k) for k in rng if k != 0]
    out += [Relator("R2", k, l) for k in rng for l in rng]
    out += [Relator("R3", k, l) for k in rng for l in rng]
    for g, w2 in ctx.r4_data:
        for k in rng:
            r = Relator("R4", k, g=g, w2=w2)
            if r.expand():
                out.append(r)
    return out


def enumerate_relators(ctx: QuotientContext) -> list[BiLaurent]:
    return [r.expand() for r in enumerate_relator_instances(ctx)]


@lru_cache(maxsize=16)
def _relator_lattice(ctx: QuotientContext) -> IntegerLattice:
    lat = IntegerLattice()
    for r in enumerate_relator_instances(ctx):
        lat.add(r.expand().terms, r)
    return lat


# certificates


class EqualityCertificate:
    kind = ""

    def to_text(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Equal(EqualityCertificate):
    combination: tuple[tuple[Relator, int], ...] = ()
    kind = "EQUAL"

    def value(self) -> BiLaurent:
        total = BiLaurent()
        for r, m in self.combination:
            total = total + r.expand() * m
        return total

    def replay(self, x: BiLaurent, y: BiLaurent) -> bool:
        return self.value() == x - y

    def to_text(self) -> str:
        return "\n".join(["EQUAL"] + [f"{m} {r}" for r, m in self.combination])


@dataclass(frozen=True)
class Distinct(EqualityCertificate):
    witness: str
    lhs: object
    rhs: object
    kind = "DISTINCT"

    def replay(self, x: BiLaurent, y: BiLaurent, ctx: QuotientContext | None = None) -> bool:
        """Recompute both images; with ``ctx`` also re-check that the witness kills every relator."""
        w = witness_by_name(self.witness)
        if ctx is not None and not w.is_valid(ctx):
            return False
        lhs, rhs = w(x), w(y)
        return lhs == self.lhs and rhs == self.rhs and lhs != rhs

    def to_text(self) -> str:
        return f"DISTINCT via={self.witness} lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class Unknown(EqualityCertificate):
    window: int
    kind = "UNKNOWN"

    def to_text(self) -> str:
        return f"UNKNOWN window={self.window}"


# separating homomorphisms


@dataclass(frozen=True)
class Witness:
    """An additive map out of Z[s^±1, t^±1] that vanishes on relations R1-R3.

    ``is_valid`` checks that it also vanishes on every R4 instance of a context.
    """

    name: str
    fn: Callable[[BiLaurent], object] = field(compare=False)
    r4_exponents: Callable[[], Iterable[int]] = field(compare=False)

    def __call__(self, x: BiLaurent):
        return self.fn(x)

    def is_valid(self, ctx: QuotientContext) -> bool:
        zero = self.fn(BiLaurent())
        for g, w2 in ctx.r4_data:
            for k in self.r4_exponents():
                if self.fn(Relator("R4", k, g=g, w2=w2).expand()) != zero:
                    return False
        return True


# Phi only sees k mod 2, so two R4 instances stand for all of them.
PHI_WITNESS = Witness("Phi", phi, lambda: (0, 1))


def _relation_neighbours(m: tuple[int, int]) -> list[tuple[tuple[int, int], int]]:
    """Monomials tied to m by a single two-term relator, with the induced sign."""
    k, l = m
    out = [((-k, l - k), -1), ((l, k), -1)]
    if k != 0 and l == k:
        out.append(((k, 0), 1))
    if k != 0 and l == 0:
        out.append(((k, k), 1))
    return out


@lru_cache(maxsize=4096)
def relation_component(m: tuple[int, int]) -> tuple[dict, bool]:
    """Signed connected component of m under R1-R3.

    Returns (labels, torsion). If the signs are consistent, every monomial in
    the component equals label * m in the quotient by R1-R3; otherwise the
    component is 2-torsion.
    """
    labels = {m: 1}
    torsion = False
    stack = [m]
    while stack:
        cur = stack.pop()
        for nxt, sign in _relation_neighbours(cur):
            want = sign * labels[cur]
            if nxt in labels:
                if labels[nxt] != want:
                    torsion = True
            else:
                labels[nxt] = want
                stack.append(nxt)
                if len(labels) > MAX_COMPONENT:
                    raise RuntimeError(f"component of {m} exceeds {MAX_COMPONENT} monomials")
    return dict(sorted(labels.items())), torsion


def orbit_witness(m: tuple[int, int]) -> Witness:
    """Character of the relation component containing m, with values in Z or Z/2."""
    base = next(iter(relation_component(m)[0]))
    labels, torsion = relation_component(base)

    if torsion:
        def fn(x: BiLaurent) -> int:
            return sum(x.coeff(*key) for key in labels) % 2
    else:
        def fn(x: BiLaurent) -> int:
            return sum(x.coeff(*key) * s for key, s in labels.items())

    ks = sorted({k for k, _ in labels})
    return Witness(f"orbit({base[0]},{base[1]})", fn, lambda: ks)


_ORBIT_RE = re.compile(r"orbit\((-?\d+),(-?\d+)\)")


def witness_by_name(name: str) -> Witness:
    if name == "Phi":
        return PHI_WITNESS
    m = _ORBIT_RE.fullmatch(name)
    if m:
        return orbit_witness((int(m.group(1)), int(m.group(2))))
    raise ValueError(f"unknown witness {name!r}")


def candidate_witnesses(diff: BiLaurent) -> list[Witness]:
    out = [PHI_WITNESS]
    seen = set()
    for key in diff:
        w = orbit_witness(key)
        if w.name not in seen:
            seen.add(w.name)
            out.append(w)
    return out


def are_equal_mod_R(x: BiLaurent, y: BiLaurent, ctx: QuotientContext | None = None) -> EqualityCertificate:
    ctx = (ctx or QuotientContext()).resolve(x, y)
    diff = x - y
    if not diff:
        return Equal(())
    combo = _relator_lattice(ctx).solve(diff.terms)
    if combo is not None:
        cert = Equal(tuple((r, m) for r, m in combo.items()))
        assert cert.replay(x, y), "lattice combination failed to replay"
        return cert
    for w in candidate_witnesses(diff):
        if not w.is_valid(ctx):
            continue
        lhs, rhs = w(x), w(y)
        if lhs != rhs:
            return Distinct(w.name, lhs, rhs)
    return Unknown(ctx.window)


def is_zero_mod_R(x: BiLaurent, ctx: QuotientContext | None = None) -> EqualityCertificate:
    return are_equal_mod_R(x, BiLaurent(), ctx)


# certificate text form

_TERM_RE = re.compile(
    r"(?P<m>-?\d+) (?P<kind>R[1-4]) k=(?P<k>-?\d+)"
    r"(?: l=(?P<l>-?\d+))?(?: w2=(?P<w2>[01]))?(?: g=(?P<g>.+))?"
)


def parse_certificate(text: str) -> EqualityCertificate:
    lines = [ln.rstrip() for ln in text.strip().splitlines()]
    if not lines:
        raise ValueError("empty certificate")
    head = lines[0]
    if head == "EQUAL":
        combo = []
        for ln in lines[1:]:
            m = _TERM_RE.fullmatch(ln)
            if not m:
                raise ValueError(f"bad certificate line {ln!r}")
            kind = m.group("kind")
            l = int(m.group("l")) if m.group("l") is not None else None
            g = Laurent.parse(m.group("g")) if m.group("g") is not None else None
            w2 = int(m.group("w2") or 0)
            combo.append((Relator(kind, int(m.group("k")), l, g, w2), int(m.group("m"))))
        return Equal(tuple(combo))
    m = re.fullmatch(r"DISTINCT via=(\S+) lhs=(.+) rhs=(.+)", head)
    if m and len(lines) == 1:
        name = m.group(1)
        parse_value = C2Algebra.parse if name == "Phi" else int
        return Distinct(name, parse_value(m.group(2)), parse_value(m.group(3)))
    m = re.fullmatch(r"UNKNOWN window=(\d+)", head)
    if m and len(lines) == 1:
        return Unknown(int(m.group(1)))
    raise ValueError(f"unrecognised certificate header {head!r}")

