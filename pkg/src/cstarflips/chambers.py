"""Exact geometry in the two-parameter divisor slice of a flat model.

Divisor classes are written ``m * L(tau_minus, tau_plus)`` and identified with
points of the (tau_minus, tau_plus) plane; all chamber bookkeeping happens in
that plane with exact rationals.  Chambers are indexed by pairs (i, j) with
``tau_minus`` between the i-th and (i+1)-st critical values and ``tau_plus``
between the (j-1)-st and j-th, intersected with ``tau_minus <= tau_plus``.

Which pairs actually occur depends only on whether the extremal fixed
components of the original variety are isolated points: an isolated sink
removes (0, 1), an isolated source removes (r-1, r).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .actions import ActionModel, ActionError, as_rational

Point = Tuple[Fraction, Fraction]


class OutOfRangeError(ActionError):
    pass


class OutOfSliceError(ActionError):
    pass


@dataclass(frozen=True)
class DivisorClass:
    """The class m * (pullback of L - tau_minus * sink divisor - (bandwidth - tau_plus) * source divisor).

    Equality is tested on (m, tau_minus, tau_plus) after canonicalizing the
    scale to 1 whenever it is positive; the zero class compares equal for any
    slice coordinates.
    """

    tau_minus: Fraction
    tau_plus: Fraction
    m: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "tau_minus", as_rational(self.tau_minus))
        object.__setattr__(self, "tau_plus", as_rational(self.tau_plus))
        object.__setattr__(self, "m", as_rational(self.m))
        if self.m < 0:
            raise OutOfSliceError("negative scale")

    def _key(self):
        if self.m == 0:
            return (Fraction(0), Fraction(0), Fraction(0))
        return (Fraction(1), self.tau_minus, self.tau_plus)

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


class CurveClass(enum.Enum):
    """Numerical curve classes spanning the dual side of the movable cone."""

    GEN = "C_gen"
    C0 = "C_0"
    CR = "C_r"
    C1R = "C_{1,r}"
    C0RM1 = "C_{0,r-1}"


@dataclass(frozen=True)
class BaseLocusDescription:
    """Stable base locus as level sets: downward cell closures of the
    ``plus_levels`` union upward cell closures of the ``minus_levels``."""

    plus_levels: frozenset[int]
    minus_levels: frozenset[int]
    flat: bool = True

    @property
    def is_empty(self) -> bool:
        return not self.plus_levels and not self.minus_levels


@dataclass(frozen=True)
class Chamber:
    pair: Tuple[int, int]
    polygon: Tuple[Point, ...]


@dataclass(frozen=True)
class SliceLocation:
    """Result of locating a divisor class in the chamber decomposition."""

    kind: str  # "interior" | "wall" | "vertex" | "outside-movable"
    chambers: Tuple[Tuple[int, int], ...] = ()
    tight: Tuple[str, ...] = ()
    fixed_divisor: str | None = None


def tau_indices(model: ActionModel, tau: Fraction) -> Tuple[int, int]:
    """Indices (min{i : a_i >= tau} - 1, max{j : a_j <= tau} + 1)."""
    tau = as_rational(tau)
    a = model.critical_values
    if tau < 0 or tau > a[-1]:
        raise OutOfRangeError(f"tau = {tau} outside [0, {a[-1]}]")
    i = min(k for k, v in enumerate(a) if v >= tau) - 1
    j = max(k for k, v in enumerate(a) if v <= tau) + 1
    return (i, j)


def stable_base_locus(
    model: ActionModel, tau_minus: Fraction, tau_plus: Fraction, flat: bool = True
) -> BaseLocusDescription:
    """Level sets of the stable base locus of m * L(tau_minus, tau_plus).

    ``plus_levels`` collects the levels with critical value <= tau_minus,
    ``minus_levels`` those with critical value >= tau_plus.  In the flat
    version the purely extremal contributions (the sink at level 0, the source
    at level r) disappear under the blowup and are stripped.
    """
    tm, tp = as_rational(tau_minus), as_rational(tau_plus)
    a = model.critical_values
    if not (0 <= tm <= tp <= a[-1]):
        raise OutOfRangeError(f"need 0 <= {tm} <= {tp} <= {a[-1]}")
    plus = {k for k, v in enumerate(a) if v <= tm}
    minus = {k for k, v in enumerate(a) if v >= tp}
    if flat:
        plus.discard(0)
        minus.discard(len(a) - 1)
    return BaseLocusDescription(frozenset(plus), frozenset(minus), flat=flat)


def extremal_case(model: ActionModel) -> str:
    sink_dim, source_dim = model.origin_dims()
    if sink_dim > 0 and source_dim > 0:
        return "bordism"
    if sink_dim == 0 and source_dim > 0:
        return "isolated-sink"
    if sink_dim > 0 and source_dim == 0:
        return "isolated-source"
    return "isolated-both"


def _dedup(points: list[Point]) -> Tuple[Point, ...]:
    out: list[Point] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


def movable_polygon(model: ActionModel) -> Tuple[Point, ...]:
    """Vertices of the movable region in the (tau_minus, tau_plus) plane.

    For criticality one with a single isolated extreme the region degenerates
    to a segment (the blowup has no small modifications); with both extremes
    isolated there is nothing to describe and the call is rejected.
    """
    a = model.critical_values
    delta = a[-1]
    zero = Fraction(0)
    case = extremal_case(model)
    if model.criticality == 1 and case == "isolated-both":
        raise OutOfRangeError(
            "criticality-one action with isolated sink and source has no movable region"
        )
    if case == "bordism":
        pts = [(zero, zero), (delta, delta), (zero, delta)]
    elif case == "isolated-sink":
        pts = [(zero, a[1]), (a[1], a[1]), (delta, delta), (zero, delta)]
    elif case == "isolated-source":
        pts = [(zero, zero), (a[-2], a[-2]), (a[-2], delta), (zero, delta)]
    else:
        pts = [(zero, a[1]), (a[1], a[1]), (a[-2], a[-2]), (a[-2], delta), (zero, delta)]
    return _dedup(pts)


def movable_cone(model: ActionModel) -> list[DivisorClass]:
    """Generators of the movable cone, one per polygon vertex."""
    return [DivisorClass(x, y) for (x, y) in movable_polygon(model)]


def chamber_pairs(model: ActionModel) -> list[Tuple[int, int]]:
    """The index pairs whose chamber lies inside the movable cone."""
    r = model.criticality
    sink_dim, source_dim = model.origin_dims()
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r + 1)]
    if sink_dim == 0 and (0, 1) in pairs:
        pairs.remove((0, 1))
    if source_dim == 0 and (r - 1, r) in pairs:
        pairs.remove((r - 1, r))
    return pairs


def chamber_polygon(model: ActionModel, pair: Tuple[int, int]) -> Tuple[Point, ...]:
    i, j = pair
    a = model.critical_values
    if j == i + 1:
        return ((a[i], a[i]), (a[i + 1], a[i + 1]), (a[i], a[i + 1]))
    return ((a[i], a[j - 1]), (a[i + 1], a[j - 1]), (a[i + 1], a[j]), (a[i], a[j]))


def chamber_decomposition(model: ActionModel) -> list[Chamber]:
    return [Chamber(pair, chamber_polygon(model, pair)) for pair in chamber_pairs(model)]


def quotient_nef_segment(model: ActionModel, i: int) -> Tuple[Point, Point]:
    """Slice of the nef cone of the i-th geometric quotient: the diagonal
    segment of the (i, i+1) chamber."""
    a = model.critical_values
    if not 0 <= i < model.criticality:
        raise OutOfRangeError(f"no geometric quotient with index {i}")
    return ((a[i], a[i]), (a[i + 1], a[i + 1]))


def in_movable(model: ActionModel, x: Fraction, y: Fraction) -> bool:
    a = model.critical_values
    if not (0 <= x <= y <= a[-1]):
        return False
    sink_dim, source_dim = model.origin_dims()
    if sink_dim == 0 and y < a[1]:
        return False
    if source_dim == 0 and x > a[-2]:
        return False
    return True


def locate_chamber(model: ActionModel, d: DivisorClass) -> SliceLocation:
    """Place a divisor class: chamber interior, wall or vertex, or outside.

    Classes in the two corner triangles cut off the movable cone (present
    exactly when the corresponding extremal component of the original variety
    is a point) are reported as outside-movable together with the divisor
    supporting the fixed part of their linear systems.
    """
    x, y = d.tau_minus, d.tau_plus
    a = model.critical_values
    r = model.criticality
    if not (0 <= x <= y <= a[-1]):
        raise OutOfSliceError(f"({x}, {y}) outside the slice region 0 <= tau- <= tau+ <= {a[-1]}")
    sink_dim, source_dim = model.origin_dims()
    if sink_dim == 0 and y < a[1]:
        return SliceLocation(kind="outside-movable", fixed_divisor="closure of X^-(Y_1)")
    if source_dim == 0 and x > a[-2]:
        return SliceLocation(
            kind="outside-movable", fixed_divisor=f"closure of X^+(Y_{{{r - 1}}})"
        )

    tight: list[str] = []
    for k, v in enumerate(a):
        if x == v:
            tight.append(f"tau_minus=a_{k}")
        if y == v:
            tight.append(f"tau_plus=a_{k}")
    if x == y:
        tight.append("tau_minus=tau_plus")

    incident = []
    for (i, j) in chamber_pairs(model):
        if a[i] <= x <= a[i + 1] and a[j - 1] <= y <= a[j]:
            incident.append((i, j))
    if not incident:
        # boundary of a removed corner with no chamber on the movable side
        return SliceLocation(kind="outside-movable", tight=tuple(tight))
    kinds = {0: "interior", 1: "wall"}
    kind = kinds.get(len(tight), "vertex")
    return SliceLocation(kind=kind, chambers=tuple(incident), tight=tuple(tight))


def intersection_number(d: DivisorClass, curve: CurveClass, model: ActionModel) -> Fraction:
    """Intersection of m * L(tau_minus, tau_plus) with the given curve class."""
    a = model.critical_values
    delta = a[-1]
    x, y = d.tau_minus, d.tau_plus
    if curve is CurveClass.GEN:
        val = y - x
    elif curve is CurveClass.C0:
        val = x
    elif curve is CurveClass.CR:
        val = delta - y
    elif curve is CurveClass.C1R:
        val = y - a[1]
    elif curve is CurveClass.C0RM1:
        val = a[-2] - x
    else:  # pragma: no cover
        raise ValueError(curve)
    return d.m * val


def relevant_curves(model: ActionModel) -> list[CurveClass]:
    """Curve classes generating the dual of the movable cone in this case."""
    curves = [CurveClass.GEN, CurveClass.C0, CurveClass.CR]
    sink_dim, source_dim = model.origin_dims()
    if sink_dim == 0:
        curves.append(CurveClass.C1R)
    if source_dim == 0:
        curves.append(CurveClass.C0RM1)
    return curves
