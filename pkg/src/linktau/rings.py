"""Exact arithmetic in Z[t, t^-1], Z[s^±1, t^±1] and the order-two group algebra Z_2<t>.

All three types are immutable and hashable. Coefficients are Python ints, so
there is no overflow to worry about.

Textual form (also accepted by the parsers below)::

    Laurent      t^2 + -4*t + 3
    BiLaurent    -s^-2*t^-3 + s*t + 2
    C2Algebra    1 + t

Terms are printed in decreasing lexicographic order of their exponents,
joined by `` + ``; unit coefficients and zero exponents are omitted.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Laurent",
    "BiLaurent",
    "C2Algebra",
    "bilaurent_monomial",
    "c2_mul",
    "laurent_add",
    "laurent_mul",
]


def _pruned(items: Iterable[tuple[object, int]]) -> dict:
    out: dict = {}
    for key, coeff in items:
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise TypeError(f"coefficients must be int, got {coeff!r}")
        c = out.get(key, 0) + coeff
        if c:
            out[key] = c
        else:
            out.pop(key, None)
    return out


def _format_term(coeff: int, factors: str) -> str:
    if not factors:
        return str(coeff)
    if coeff == 1:
        return factors
    if coeff == -1:
        return "-" + factors
    return f"{coeff}*{factors}"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _parse_terms(text: str, allow_s: bool) -> dict[tuple[int, int], int]:
    """Parse ``a*s^k*t^l + ...`` into {(k, l): a}."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if text == "0":
        return {}
    items = []
    for raw in text.split(" + "):
        items.append(_parse_term(raw.strip(), allow_s))
    return _pruned(items)


def _parse_term(raw: str, allow_s: bool) -> tuple[tuple[int, int], int]:
    if not raw:
        raise ValueError("empty term")
    coeff = 1
    body = raw
    m = re.match(r"^([+-]?\d+)(\*|$)", body)
    if m:
        coeff = int(m.group(1))
        body = body[m.end():]
        if (m.group(2) == "") == bool(body):
            raise ValueError(f"malformed term {raw!r}")
        if not body:
            return (0, 0), coeff
    elif body.startswith("-"):
        coeff = -1
        body = body[1:]
    k = l = 0
    factors = body.split("*")
    seen: list[str] = []
    for f in factors:
        fm = re.fullmatch(r"([st])(?:\^([+-]?\d+))?", f.strip())
        if not fm:
            raise ValueError(f"malformed term {raw!r}")
        var, exp = fm.group(1), int(fm.group(2)) if fm.group(2) else 1
        if var in seen or (var == "s" and "t" in seen):
            raise ValueError(f"malformed term {raw!r}")
        if var == "s" and not allow_s:
            raise ValueError(f"unexpected variable s in {raw!r}")
        seen.append(var)
        if var == "s":
            k = exp
        else:
            l = exp
    return (k, l), coeff


class Laurent:
    """A Laurent polynomial sum a_k t^k with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms: dict[int, int] = dict(sorted(_pruned(items).items()))
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> Laurent:
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> Laurent:
        return cls({0: c})

    @classmethod
    def parse(cls, text: str) -> Laurent:
        return cls({l: a for (_, l), a in _parse_terms(text, allow_s=False).items()})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def evaluate(self, value: int) -> int:
        """Evaluate at an integer; negative exponents require value = ±1."""
        total = 0
        for e, a in self._terms.items():
            if e < 0:
                if value not in (1, -1):
                    raise ValueError("negative exponents need value in {1, -1}")
                total += a * value ** (-e)
            else:
                total += a * value**e
        return total

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return Laurent(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -a for e, a in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent({e: a * other for e, a in self._terms.items()})
        if not isinstance(other, Laurent):
            return NotImplemented
        return Laurent(
            (e1 + e2, a1 * a2)
            for e1, a1 in self._terms.items()
            for e2, a2 in other._terms.items()
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1:
                ((e, a),) = self._terms.items()
                if a in (1, -1):
                    return Laurent({-e * -n: a ** (-n)})
            raise ValueError("only unit monomials have inverses")
        out = Laurent.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Laurent", tuple(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            _format_term(a, _power("t", e)) for e, a in sorted(self._terms.items(), reverse=True)
        )

    def __repr__(self):
        return f"Laurent({str(self)!r})"


T = Laurent.monomial(1, 1)


class BiLaurent:
    """An element sum a_{k,l} s^k t^l of Z[s^±1, t^±1].

    Keys are (k, l) exponent pairs; iteration is in increasing
    lexicographic order of the keys.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms: dict[tuple[int, int], int] = dict(sorted(_pruned(items).items()))
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int, k: int, l: int) -> BiLaurent:
        return cls({(k, l): coeff})

    @classmethod
    def from_laurent(cls, p: Laurent, s_exp: int = 0) -> BiLaurent:
        """s^s_exp * p(t)."""
        return cls({(s_exp, e): a for e, a in p.items()})

    @classmethod
    def parse(cls, text: str) -> BiLaurent:
        return cls(_parse_terms(text, allow_s=True))

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms.items())

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, k: int, l: int) -> int:
        return self._terms.get((k, l), 0)

    def max_abs_exponent(self) -> int:
        return max((max(abs(k), abs(l)) for k, l in self._terms), default=0)

    def __add__(self, other):
        if isinstance(other, int):
            other = BiLaurent({(0, 0): other})
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return BiLaurent(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return BiLaurent({key: -a for key, a in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiLaurent({(0, 0): other})
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BiLaurent({key: a * other for key, a in self._terms.items()})
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return BiLaurent(
            ((k1 + k2, l1 + l2), a1 * a2)
            for (k1, l1), a1 in self._terms.items()
            for (k2, l2), a2 in other._terms.items()
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiLaurent({(0, 0): other})
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("BiLaurent", tuple(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (k, l), a in sorted(self._terms.items(), reverse=True):
            factors = "*".join(f for f in (_power("s", k), _power("t", l)) if f)
            parts.append(_format_term(a, factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"BiLaurent({str(self)!r})"


@dataclass(frozen=True)
class C2Algebra:
    """a*1 + b*t in Z_2<t> = Z_2[t]/(t^2 - 1)."""

    a: int = 0
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", self.a & 1)
        object.__setattr__(self, "b", self.b & 1)

    @classmethod
    def parse(cls, text: str) -> C2Algebra:
        a = b = 0
        for (k, l), c in _parse_terms(text, allow_s=False).items():
            if l % 2:
                b += c
            else:
                a += c
        return cls(a, b)

    def __add__(self, other):
        if not isinstance(other, C2Algebra):
            return NotImplemented
        return C2Algebra(self.a ^ other.a, self.b ^ other.b)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return C2Algebra(self.a * other, self.b * other)
        if not isinstance(other, C2Algebra):
            return NotImplemented
        return C2Algebra(
            (self.a & other.a) ^ (self.b & other.b),
            (self.a & other.b) ^ (self.b & other.a),
        )

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.a or self.b)

    def __str__(self):
        if self.a and self.b:
            return "1 + t"
        if self.b:
            return "t"
        return "1" if self.a else "0"


C2_ZERO = C2Algebra(0, 0)
C2_ONE = C2Algebra(1, 0)
C2_T = C2Algebra(0, 1)


def laurent_add(x: Laurent, y: Laurent) -> Laurent:
    return x + y


def laurent_mul(x: Laurent, y: Laurent) -> Laurent:
    return x * y


def bilaurent_monomial(a: int, k: int, l: int) -> BiLaurent:
    return BiLaurent.monomial(a, k, l)


def c2_mul(x: C2Algebra, y: C2Algebra) -> C2Algebra:
    return x * y
