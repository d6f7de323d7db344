"""Root systems of the simple Lie types, with exact rational arithmetic.

Simple roots are given in their standard Euclidean realizations (Bourbaki
numbering); the full root system is generated from them by closing under the
simple reflections.  Everything downstream only needs two exact pairings:

* simple-root coordinates of a vector in the root span, and
* the pairing of a vector with an integral cocharacter written in the basis
  of fundamental coweights, which is just the cocharacter-weighted sum of
  those coordinates.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple

from ..actions import ActionError

Vector = Tuple[Fraction, ...]

POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": {6: 36, 7: 63, 8: 120},
    "F": {4: 24},
    "G": {2: 6},
}

_LEGAL_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class IllegalTypeError(ActionError):
    pass


def _vec(entries) -> Vector:
    return tuple(Fraction(e) for e in entries)


def _unit(i: int, dim: int) -> Vector:
    return _vec([1 if k == i else 0 for k in range(dim)])


def _sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def _dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _invert(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _simple_roots(dynkin_type: str, rank: int) -> list[Vector]:
    t, n = dynkin_type, rank
    if t == "A":
        return [_sub(_unit(i, n + 1), _unit(i + 1, n + 1)) for i in range(n)]
    if t == "B":
        roots = [_sub(_unit(i, n), _unit(i + 1, n)) for i in range(n - 1)]
        roots.append(_unit(n - 1, n))
        return roots
    if t == "C":
        roots = [_sub(_unit(i, n), _unit(i + 1, n)) for i in range(n - 1)]
        roots.append(_scale(Fraction(2), _unit(n - 1, n)))
        return roots
    if t == "D":
        roots = [_sub(_unit(i, n), _unit(i + 1, n)) for i in range(n - 1)]
        roots.append(_add(_unit(n - 2, n), _unit(n - 1, n)))
        return roots
    if t == "E":
        half = Fraction(1, 2)
        alpha1 = tuple(
            half if k in (0, 7) else -half for k in range(8)
        )
        full = [
            alpha1,
            _add(_unit(0, 8), _unit(1, 8)),
            _sub(_unit(1, 8), _unit(0, 8)),
            _sub(_unit(2, 8), _unit(1, 8)),
            _sub(_unit(3, 8), _unit(2, 8)),
            _sub(_unit(4, 8), _unit(3, 8)),
            _sub(_unit(5, 8), _unit(4, 8)),
            _sub(_unit(6, 8), _unit(5, 8)),
        ]
        return full[:n]
    if t == "F":
        half = Fraction(1, 2)
        return [
            _sub(_unit(1, 4), _unit(2, 4)),
            _sub(_unit(2, 4), _unit(3, 4)),
            _unit(3, 4),
            (half, -half, -half, -half),
        ]
    if t == "G":
        return [
            _sub(_unit(0, 3), _unit(1, 3)),
            (Fraction(-2), Fraction(1), Fraction(1)),
        ]
    raise IllegalTypeError(f"unknown Dynkin type {dynkin_type!r}")


@dataclass(frozen=True)
class RootSystem:
    dynkin_type: str
    rank: int
    simple_roots: Tuple[Vector, ...]
    positive_roots: Tuple[Vector, ...]
    fundamental_weights: Tuple[Vector, ...]
    cartan_matrix: Tuple[Tuple[Fraction, ...], ...]
    gram: Tuple[Tuple[Fraction, ...], ...]  # bilinear form on the simple roots
    gram_inverse: Tuple[Tuple[Fraction, ...], ...]
    _coords_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def name(self) -> str:
        return f"{self.dynkin_type}_{self.rank}"

    @property
    def all_roots(self) -> Tuple[Vector, ...]:
        return self.positive_roots + tuple(_scale(Fraction(-1), r) for r in self.positive_roots)

    @property
    def dim_lie_algebra(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def reflect(self, v: Vector, alpha: Vector) -> Vector:
        coeff = Fraction(2) * _dot(v, alpha) / _dot(alpha, alpha)
        return _sub(v, _scale(coeff, alpha))

    def simple_reflect(self, v: Vector, k: int) -> Vector:
        return self.reflect(v, self.simple_roots[k])

    def coords(self, v: Vector) -> Tuple[Fraction, ...]:
        """Coordinates of v in the simple-root basis."""
        cached = self._coords_cache.get(v)
        if cached is not None:
            return cached
        rhs = [_dot(v, a) for a in self.simple_roots]
        out = tuple(
            sum((self.gram_inverse[i][j] * rhs[j] for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )
        self._coords_cache[v] = out
        return out

    def coroot_pairing(self, v: Vector, j: int) -> Fraction:
        """Pairing of v with the coroot of the j-th simple root (1-based)."""
        alpha = self.simple_roots[j - 1]
        return Fraction(2) * _dot(v, alpha) / _dot(alpha, alpha)

    def pairing(self, v: Vector, cocharacter: Sequence[int]) -> Fraction:
        """Pairing of v with sum_k cocharacter[k] * (k-th fundamental coweight)."""
        if len(cocharacter) != self.rank:
            raise IllegalTypeError(
                f"cocharacter has {len(cocharacter)} entries, rank is {self.rank}"
            )
        c = self.coords(v)
        return sum((Fraction(n) * c[k] for k, n in enumerate(cocharacter)), Fraction(0))

    def root_norms(self) -> set[Fraction]:
        return {_dot(a, a) for a in self.positive_roots}


@functools.lru_cache(maxsize=None)
def build_root_system(dynkin_type: str, rank: int) -> RootSystem:
    """Construct the exact root datum, checking the classical root count."""
    t = dynkin_type.upper()
    if t not in _LEGAL_RANKS or not _LEGAL_RANKS[t](rank):
        raise IllegalTypeError(f"illegal Dynkin datum {dynkin_type}_{rank}")
    simples = _simple_roots(t, rank)

    roots: set[Vector] = set(simples)
    frontier = list(simples)
    while frontier:
        new: list[Vector] = []
        for v in frontier:
            for a in simples:
                coeff = Fraction(2) * _dot(v, a) / _dot(a, a)
                w = _sub(v, _scale(coeff, a))
                if w not in roots:
                    roots.add(w)
                    new.append(w)
        frontier = new

    gram = [[_dot(a, b) for b in simples] for a in simples]
    gram_inv = _invert(gram)

    def coords(v: Vector) -> Tuple[Fraction, ...]:
        rhs = [_dot(v, a) for a in simples]
        return tuple(
            sum((gram_inv[i][j] * rhs[j] for j in range(rank)), Fraction(0))
            for i in range(rank)
        )

    positive = sorted(
        (v for v in roots if all(c >= 0 for c in coords(v))),
        key=lambda v: (sum(coords(v)), v),
    )
    expected = POSITIVE_ROOT_COUNTS[t]
    expected_n = expected[rank] if isinstance(expected, dict) else expected(rank)
    if len(positive) != expected_n:  # pragma: no cover
        raise IllegalTypeError(
            f"{t}_{rank}: generated {len(positive)} positive roots, expected {expected_n}"
        )

    cartan = tuple(
        tuple(Fraction(2) * _dot(a, b) / _dot(a, a) for b in simples) for a in simples
    )
    cartan_inv = _invert([list(row) for row in cartan])
    weights = tuple(
        tuple(
            sum((cartan_inv[j][k] * simples[j][axis] for j in range(rank)), Fraction(0))
            for axis in range(len(simples[0]))
        )
        for k in range(rank)
    )
    return RootSystem(
        dynkin_type=t,
        rank=rank,
        simple_roots=tuple(simples),
        positive_roots=tuple(positive),
        fundamental_weights=weights,
        cartan_matrix=cartan,
        gram=tuple(tuple(row) for row in gram),
        gram_inverse=tuple(tuple(row) for row in gram_inv),
    )


def fundamental_cocharacter(rank: int, node: int) -> Tuple[int, ...]:
    """The cocharacter dual to the simple root at ``node`` (1-based)."""
    if not 1 <= node <= rank:
        raise IllegalTypeError(f"node {node} outside 1..{rank}")
    return tuple(1 if k == node - 1 else 0 for k in range(rank))


@dataclass(frozen=True)
class GradingSpec:
    """Dimensions of the graded pieces induced by a cocharacter."""

    cocharacter: Tuple[int, ...]
    graded_dims: Tuple[Tuple[int, int], ...]  # (degree, dimension), sorted

    @property
    def is_short(self) -> bool:
        return all(abs(m) <= 1 for m, _ in self.graded_dims)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(m for m, _ in self.graded_dims)

    def dim(self, m: int) -> int:
        for degree, d in self.graded_dims:
            if degree == m:
                return d
        return 0


def grading(datum: RootSystem, cocharacter: Sequence[int]) -> GradingSpec:
    """Grade the Lie algebra by pairing every root with the cocharacter."""
    counts: dict[int, int] = {0: datum.rank}
    for alpha in datum.positive_roots:
        m = datum.pairing(alpha, cocharacter)
        if m.denominator != 1:  # pragma: no cover
            raise IllegalTypeError(f"non-integral pairing {m} for root {alpha}")
        m = int(m)
        counts[m] = counts.get(m, 0) + 1
        counts[-m] = counts.get(-m, 0) + 1
    dims = tuple(sorted(counts.items()))
    return GradingSpec(cocharacter=tuple(int(n) for n in cocharacter), graded_dims=dims)
