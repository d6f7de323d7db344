"""Actions on rational homogeneous varieties from cocharacter gradings.

A variety is a Dynkin diagram with one marked node, embedded by the
corresponding fundamental weight.  Its torus-fixed points are the Weyl orbit
of that weight; at the base point the tangent directions are the positive
roots supported on the marked node, and they travel along the orbit by
reflection.  Pairing with an integral cocharacter gives, at every fixed
point, the linearization weight (the weight on the hyperplane-bundle fiber,
i.e. minus the pairing of the translated fundamental weight, normalized so
the minimum is zero) and the multiset of tangent weights.

Fixed points connected through zero-weight tangent directions belong to one
fixed component of the circle action; per component the number of zero /
positive / negative tangent weights gives its dimension and the normal ranks
``nu_plus`` / ``nu_minus`` toward higher and lower critical values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from ..actions import ActionModel, ActionError, validate_action
from .roots import RootSystem, Vector, build_root_system

DEFAULT_MAX_COSETS = 100_000


class IllegalRangeError(ActionError):
    pass


class CosetLimitError(ActionError):
    pass


@dataclass(frozen=True)
class HomogeneousSpace:
    datum: RootSystem
    node: int  # 1-based marked node

    def __post_init__(self):
        if not 1 <= self.node <= self.datum.rank:
            raise IllegalRangeError(f"node {self.node} outside 1..{self.datum.rank}")

    @property
    def label(self) -> str:
        return f"{self.datum.name}({self.node})"

    @property
    def base_tangent_roots(self) -> Tuple[Vector, ...]:
        """Positive roots supported on the marked node."""
        k = self.node - 1
        return tuple(
            a for a in self.datum.positive_roots if self.datum.coords(a)[k] > 0
        )

    @property
    def dim(self) -> int:
        return len(self.base_tangent_roots)


def homogeneous_dim(datum: RootSystem, nodes: Sequence[int]) -> int:
    """Dimension of the flag variety marked at the given (1-based) nodes."""
    idx = [n - 1 for n in nodes]
    for n in nodes:
        if not 1 <= n <= datum.rank:
            raise IllegalRangeError(f"node {n} outside 1..{datum.rank}")
    count = 0
    for a in datum.positive_roots:
        c = datum.coords(a)
        if any(c[k] > 0 for k in idx):
            count += 1
    return count


@dataclass(frozen=True)
class FixedPoint:
    weight: Vector  # translate of the fundamental weight
    tangent_roots: Tuple[Vector, ...]


def enumerate_fixed_points(
    space: HomogeneousSpace, max_cosets: int = DEFAULT_MAX_COSETS
) -> Tuple[FixedPoint, ...]:
    """Weyl orbit of the marked fundamental weight with translated tangents.

    Tangent root sets are propagated through the orbit by the same simple
    reflections that move the weight; the resulting set at a point does not
    depend on the path taken.
    """
    datum = space.datum
    base = FixedPoint(
        weight=datum.fundamental_weights[space.node - 1],
        tangent_roots=tuple(sorted(space.base_tangent_roots)),
    )
    seen: Dict[Vector, FixedPoint] = {base.weight: base}
    frontier = [base]
    while frontier:
        new: list[FixedPoint] = []
        for point in frontier:
            for k in range(datum.rank):
                w = datum.simple_reflect(point.weight, k)
                if w in seen:
                    continue
                if len(seen) >= max_cosets:
                    raise CosetLimitError(
                        f"{space.label}: more than {max_cosets} fixed points; "
                        "raise max_cosets to enumerate"
                    )
                moved = FixedPoint(
                    weight=w,
                    tangent_roots=tuple(
                        sorted(datum.simple_reflect(t, k) for t in point.tangent_roots)
                    ),
                )
                seen[w] = moved
                new.append(moved)
        frontier = new
    return tuple(seen[w] for w in sorted(seen))


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass
class LieActionResult:
    """Validated model plus the tangent-weight certificates behind it."""

    model: ActionModel
    space_label: str
    cocharacter: Tuple[int, ...]
    fixed_point_count: int
    tangent_certificates: Dict[str, Tuple[int, ...]]
    is_short: bool
    equalized: bool
    warnings: Tuple[str, ...]


def build_action(
    space: HomogeneousSpace,
    cocharacter: Sequence[int],
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> LieActionResult:
    """Compute the circle action induced by a cocharacter on the variety.

    A non-short grading only warns; the equalization verdict is then derived
    from the tangent pairings themselves.
    """
    from .roots import grading

    datum = space.datum
    points = enumerate_fixed_points(space, max_cosets=max_cosets)
    l_raw = {p.weight: -datum.pairing(p.weight, cocharacter) for p in points}
    pairings = {
        p.weight: tuple(datum.pairing(t, cocharacter) for t in p.tangent_roots) for p in points
    }

    uf = _UnionFind([p.weight for p in points])
    for p in points:
        for t, m in zip(p.tangent_roots, pairings[p.weight]):
            if m == 0:
                uf.union(p.weight, datum.reflect(p.weight, t))

    groups: Dict[Vector, list[FixedPoint]] = {}
    for p in points:
        groups.setdefault(uf.find(p.weight), []).append(p)

    offset = min(l_raw.values())
    records = []
    for rep in sorted(groups):
        members = groups[rep]
        weights = {l_raw[p.weight] for p in members}
        sigs = {
            (
                sum(1 for m in pairings[p.weight] if m == 0),
                sum(1 for m in pairings[p.weight] if m > 0),
                sum(1 for m in pairings[p.weight] if m < 0),
            )
            for p in members
        }
        if len(weights) != 1 or len(sigs) != 1:  # pragma: no cover
            raise ActionError("inconsistent component grouping")
        zeros, pos, neg = next(iter(sigs))
        cert = tuple(sorted(int(m) for m in pairings[members[0].weight]))
        records.append((next(iter(weights)) - offset, zeros, pos, neg, cert, len(members)))

    # deterministic names: level index, then a letter when a level is reducible
    records.sort(key=lambda rec: (rec[0], rec[1:]))
    level_values = sorted({rec[0] for rec in records})
    components = []
    certificates: Dict[str, Tuple[int, ...]] = {}
    for value in level_values:
        at_level = [rec for rec in records if rec[0] == value]
        for idx, (w, zeros, pos, neg, cert, _count) in enumerate(at_level):
            suffix = chr(ord("a") + idx) if len(at_level) > 1 else ""
            name = f"Y{level_values.index(value)}{suffix}"
            components.append(
                {"name": name, "weight": w, "dim": zeros, "nu_minus": neg, "nu_plus": pos}
            )
            certificates[name] = cert

    equalized = all(
        m in (-1, 0, 1) for p in points for m in (int(x) for x in pairings[p.weight])
    )
    short = grading(datum, cocharacter).is_short
    warnings = [] if short else ["GradingNotShort: grading support exceeds {-1, 0, 1}"]
    model = validate_action(
        components,
        dim_x=space.dim,
        equalized=equalized,
        equalization_source="tangent-weights",
    )
    return LieActionResult(
        model=model,
        space_label=space.label,
        cocharacter=tuple(int(n) for n in cocharacter),
        fixed_point_count=len(points),
        tangent_certificates=certificates,
        is_short=short,
        equalized=equalized,
        warnings=tuple(warnings),
    )


def _grass_part(rank: int, index: int) -> str:
    if index == 0 or index == rank + 1:
        return "pt"
    return f"A_{rank}({index})"


@dataclass(frozen=True)
class GrassmannianLevel:
    label: str
    weight: int
    dim: int
    nu_minus: int
    nu_plus: int


def grassmannian_reference(n: int, i: int, k: int) -> list[GrassmannianLevel]:
    """Closed-form fixed-point data for the Grassmannian of i-planes in n+1
    space, split by a k-dimensional coordinate subspace.

    Level j (weight j) is the product of the i-j planes in the first factor
    with the j planes in the second: dimension (i-j)(k-i+j) + j(n+1-k-j),
    downward rank j(k-i+j), upward rank (i-j)(n+1-k-j).
    """
    if not (1 <= i <= k <= n + 1 - k):
        raise IllegalRangeError(f"need 1 <= i <= k <= n+1-k, got (n, i, k) = ({n}, {i}, {k})")
    out = []
    for j in range(i + 1):
        parts = [p for p in (_grass_part(k - 1, i - j), _grass_part(n - k, j)) if p != "pt"]
        label = " x ".join(parts) if parts else "pt"
        out.append(
            GrassmannianLevel(
                label=label,
                weight=j,
                dim=(i - j) * (k - i + j) + j * (n + 1 - k - j),
                nu_minus=j * (k - i + j),
                nu_plus=(i - j) * (n + 1 - k - j),
            )
        )
    return out


def grassmannian_model(n: int, i: int, k: int) -> ActionModel:
    """ActionModel assembled from the closed-form reference data."""
    levels = grassmannian_reference(n, i, k)
    comps = [
        {
            "name": f"Y{lv.weight}",
            "weight": lv.weight,
            "dim": lv.dim,
            "nu_minus": lv.nu_minus,
            "nu_plus": lv.nu_plus,
        }
        for lv in levels
    ]
    return validate_action(
        comps, dim_x=i * (n + 1 - i), equalized=True, equalization_source="tangent-weights"
    )


def grassmannian_action(n: int, i: int, k: int, max_cosets: int = DEFAULT_MAX_COSETS) -> LieActionResult:
    """The same action computed independently by coset enumeration."""
    datum = build_root_system("A", n)
    cochar = tuple(1 if idx == k - 1 else 0 for idx in range(n))
    return build_action(HomogeneousSpace(datum, i), cochar, max_cosets=max_cosets)
