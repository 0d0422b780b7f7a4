"""Sparse integer lattices with membership certificates.

Vectors are dicts mapping hashable, totally ordered coordinate keys to ints.
Generators are kept in row-echelon form over Z (each stored row owns a
distinct leading key, its minimal key, with positive coefficient), which is
enough to decide membership: reduce the target by the rows in increasing
order of leading key and check that nothing is left.

Every stored row remembers how it was built from the original generators,
so a successful membership test returns an explicit integer combination.
"""
from __future__ import annotations

from typing import Hashable, Mapping

Vector = dict


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _axpy(y: dict, a: int, x: Mapping) -> None:
    """y += a*x in place, pruning zeros."""
    if not a:
        return
    for key, c in x.items():
        v = y.get(key, 0) + a * c
        if v:
            y[key] = v
        else:
            y.pop(key, None)


def _combine(a: int, x: Mapping, b: int, y: Mapping) -> dict:
    out = {key: a * c for key, c in x.items() if a * c}
    _axpy(out, b, y)
    return out


class IntegerLattice:
    """The Z-span of a growing set of labelled integer vectors."""

    def __init__(self):
        self._rows: dict[Hashable, tuple[dict, dict]] = {}
        self._labels: list = []
        self.generators: dict = {}

    def __len__(self):
        return len(self._labels)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vector: Mapping, label: Hashable) -> None:
        if label in self.generators:
            raise ValueError(f"duplicate generator label {label!r}")
        vec = {k: c for k, c in vector.items() if c}
        self.generators[label] = dict(vec)
        self._labels.append(label)
        self._insert(vec, {label: 1} if vec else {})

    def _insert(self, vec: dict, combo: dict) -> None:
        rows = self._rows
        while vec:
            p = min(vec)
            if p not in rows:
                if vec[p] < 0:
                    vec = {k: -c for k, c in vec.items()}
                    combo = {k: -c for k, c in combo.items()}
                rows[p] = (vec, combo)
                return
            bvec, bcombo = rows[p]
            a, b = vec[p], bvec[p]
            if a % b == 0:
                q = a // b
                _axpy(vec, -q, bvec)
                _axpy(combo, -q, bcombo)
                continue
            g, u, v = xgcd(b, a)
            # unimodular change of basis [[u, v], [-a/g, b/g]] on (bvec, vec)
            new_pivot = _combine(u, bvec, v, vec)
            new_combo = _combine(u, bcombo, v, combo)
            rest = _combine(-(a // g), bvec, b // g, vec)
            rest_combo = _combine(-(a // g), bcombo, b // g, combo)
            if new_pivot[p] < 0:
                new_pivot = {k: -c for k, c in new_pivot.items()}
                new_combo = {k: -c for k, c in new_combo.items()}
            rows[p] = (new_pivot, new_combo)
            vec, combo = rest, rest_combo

    def reduce(self, vector: Mapping) -> tuple[dict, dict]:
        """Return (remainder, combination) with vector - remainder = sum(combination * generators).

        The remainder is zero exactly when the vector lies in the lattice.
        """
        vec = {k: c for k, c in vector.items() if c}
        combo: dict = {}
        rows = self._rows
        while vec:
            p = min(vec)
            row = rows.get(p)
            if row is None or vec[p] % row[0][p]:
                break
            q = vec[p] // row[0][p]
            _axpy(vec, -q, row[0])
            _axpy(combo, q, row[1])
        return vec, combo

    def solve(self, vector: Mapping) -> dict | None:
        """Integer coefficients expressing vector in terms of the generators, or None."""
        rem, combo = self.reduce(vector)
        return None if rem else combo

    def __contains__(self, vector: Mapping) -> bool:
        return not self.reduce(vector)[0]

    def replay(self, combo: Mapping) -> dict:
        out: dict = {}
        for label, m in combo.items():
            _axpy(out, m, self.generators[label])
        return out
