"""Cellular chain complex of the universal cover of a handlebody with one
0-handle, one 1-handle and n 2-handles, with fundamental group Z.

Only this shape is supported. Over Z[t^±1] the boundary of the 1-cell is
multiplication by (t - 1), which is injective, so the 2-cell boundary must
vanish and H_2 is free of rank n.
"""
from __future__ import annotations

from dataclasses import dataclass

from .rings import Laurent

T_MINUS_ONE = Laurent({1: 1, 0: -1})


class UnsupportedComplexError(ValueError):
    pass


@dataclass(frozen=True)
class HandleComplex:
    n: int
    d2: tuple[Laurent, ...]
    d1: Laurent

    def __post_init__(self):
        if len(self.d2) != self.n:
            raise ValueError(f"d2 has {len(self.d2)} columns, expected {self.n}")
        if not self.is_complex():
            raise ValueError("d1 o d2 != 0")

    def is_complex(self) -> bool:
        return all(not (self.d1 * c) for c in self.d2)


def build_universal_cover_complex(n: int) -> HandleComplex:
    if n < 0:
        raise ValueError("number of 2-handles must be nonnegative")
    return HandleComplex(n, tuple(Laurent() for _ in range(n)), T_MINUS_ONE)


def h2_rank(c: HandleComplex) -> int:
    """Free rank of H_2 over Z[t^±1]."""
    if any(c.d2):
        raise UnsupportedComplexError("only complexes with vanishing d2 are supported")
    if not c.d1:
        raise UnsupportedComplexError("d1 must be injective")
    return c.n


def integral_h2_rank(n: int) -> int:
    """Rank of H_2 with Z coefficients: d2 vanishes downstairs too."""
    if n < 0:
        raise ValueError("number of 2-handles must be nonnegative")
    return n


def times_t_minus_one_is_injective_on(p: Laurent) -> bool:
    """(t - 1) * p vanishes only for p = 0.

    Degree argument: for p != 0 the top coefficient of (t - 1) * p equals the
    top coefficient of p, so the product is nonzero.
    """
    prod = T_MINUS_ONE * p
    if not p:
        return not prod
    top = p.max_degree()
    return prod.coeff(top + 1) == p.coeff(top) and bool(prod)


def check_injective_d1(samples=()) -> bool:
    """Check the degree argument on the given samples (and on 0 and 1)."""
    return all(times_t_minus_one_is_injective_on(p) for p in (Laurent(), Laurent.const(1), *samples))
