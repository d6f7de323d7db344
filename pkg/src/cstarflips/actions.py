"""Fixed-point models of equalized C*-actions on polarized varieties.

An action is recorded purely through combinatorial fixed-point data: each
fixed component carries the critical value of the weight map of the
polarization, its dimension, and the ranks ``nu_minus`` / ``nu_plus`` of the
two halves of its normal bundle.  ``nu_minus`` counts normal directions along
orbits joining the component to lower critical values (toward the sink),
``nu_plus`` directions toward higher ones (toward the source).  Consequently
the sink has ``nu_minus == 0`` and the source has ``nu_plus == 0``, and for
every component ``dim + nu_minus + nu_plus == dim_x``.

Weights are exact rationals throughout; a validated model is normalized so
that the sink sits at weight zero.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple

Rational = Fraction

# Violation codes emitted by validate_action / check_action.
EMPTY_SPEC = "EmptySpec"
DUPLICATE_NAME = "DuplicateName"
DIMENSION_MISMATCH = "DimensionMismatch"
NON_EXTREMAL_ZERO_NU = "NonExtremalZeroNu"
EXTREMAL_NONZERO_NU = "ExtremalNonzeroNu"
TRIVIAL_ACTION = "TrivialAction"
REDUCIBLE_EXTREMAL_LEVEL = "ReducibleExtremalLevel"
NEGATIVE_FIELD = "NegativeField"
NOT_FLAT_SHAPE = "NotFlatShape"


class ActionError(Exception):
    pass


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    component: str | None = None


class InvalidActionError(ActionError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(f"{v.code}: {v.message}" for v in self.violations))


class AlreadyFlatError(ActionError):
    pass


class NegativeDegreeError(ActionError):
    pass


class UnknownComponentError(ActionError):
    pass


class MissingOriginDimsError(ActionError):
    """Flat model lacks the extremal dimensions of the underlying variety."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class FixedComponent:
    """One irreducible fixed component with its local invariants."""

    name: str
    weight: Fraction
    dim: int
    nu_minus: int
    nu_plus: int
    inner: bool = False

    def __post_init__(self):
        object.__setattr__(self, "weight", as_rational(self.weight))


@dataclass(frozen=True)
class ActionModel:
    """A validated action, components sorted by weight and grouped in levels.

    ``flat`` marks models whose extremal components are divisors (the shape
    produced by :func:`blowup_extremal`); such models remember the extremal
    dimensions of the variety they came from in ``sink_origin_dim`` /
    ``source_origin_dim``, which drive the chamber bookkeeping downstream.
    """

    dim_x: int
    components: Tuple[FixedComponent, ...]
    flat: bool = False
    picard_rank_one: bool = True
    equalized: bool = True
    equalization_source: str = "declared"
    sink_origin_dim: int | None = None
    source_origin_dim: int | None = None
    weight_offset: Fraction = Fraction(0)

    @property
    def critical_values(self) -> Tuple[Fraction, ...]:
        return tuple(sorted({c.weight for c in self.components}))

    @property
    def criticality(self) -> int:
        return len(self.critical_values) - 1

    @property
    def bandwidth(self) -> Fraction:
        return self.critical_values[-1]

    @property
    def levels(self) -> Tuple[Tuple[Fraction, Tuple[FixedComponent, ...]], ...]:
        out = []
        for a in self.critical_values:
            out.append((a, tuple(c for c in self.components if c.weight == a)))
        return tuple(out)

    def level_components(self, k: int) -> Tuple[FixedComponent, ...]:
        return self.levels[k][1]

    @property
    def sink(self) -> FixedComponent:
        return self.level_components(0)[0]

    @property
    def source(self) -> FixedComponent:
        return self.level_components(self.criticality)[0]

    @property
    def inner_components(self) -> Tuple[FixedComponent, ...]:
        return tuple(c for c in self.components if c.inner)

    @property
    def weight_table(self) -> Mapping[str, Fraction]:
        return {c.name: c.weight for c in self.components}

    def origin_dims(self) -> Tuple[int, int]:
        """Extremal dims of the variety underlying a flat model."""
        if not self.flat:
            return (self.sink.dim, self.source.dim)
        if self.sink_origin_dim is None or self.source_origin_dim is None:
            raise MissingOriginDimsError(
                "flat model without the extremal dimensions of the original "
                "variety; build it with blowup_extremal or supply them"
            )
        return (self.sink_origin_dim, self.source_origin_dim)


def check_action(components: Iterable[FixedComponent | Mapping], dim_x: int) -> list[Violation]:
    """Collect every invariant violated by raw component data.

    Accepts either FixedComponent instances or mappings with the same field
    names.  Returns an empty list when the data is a valid model.
    """
    comps: list[FixedComponent] = []
    violations: list[Violation] = []
    for raw in components:
        if isinstance(raw, FixedComponent):
            comps.append(raw)
        else:
            comps.append(
                FixedComponent(
                    name=str(raw["name"]),
                    weight=as_rational(raw["weight"]),
                    dim=int(raw["dim"]),
                    nu_minus=int(raw["nu_minus"]),
                    nu_plus=int(raw["nu_plus"]),
                )
            )

    if not comps:
        return [Violation(EMPTY_SPEC, "no fixed components given")]

    seen: set[str] = set()
    for c in comps:
        if c.name in seen:
            violations.append(Violation(DUPLICATE_NAME, f"component name {c.name!r} repeated", c.name))
        seen.add(c.name)
        if c.dim < 0 or c.nu_minus < 0 or c.nu_plus < 0 or dim_x <= 0:
            violations.append(Violation(NEGATIVE_FIELD, f"negative field on {c.name!r}", c.name))
            continue
        if c.dim + c.nu_minus + c.nu_plus != dim_x:
            violations.append(
                Violation(
                    DIMENSION_MISMATCH,
                    f"{c.name!r}: dim + nu_minus + nu_plus = "
                    f"{c.dim + c.nu_minus + c.nu_plus} != dim_x = {dim_x}",
                    c.name,
                )
            )

    weights = sorted({c.weight for c in comps})
    if len(weights) < 2:
        violations.append(Violation(TRIVIAL_ACTION, "action has a single critical value"))
        return violations

    w_min, w_max = weights[0], weights[-1]
    for c in comps:
        if c.weight == w_min:
            if c.nu_minus != 0:
                violations.append(
                    Violation(EXTREMAL_NONZERO_NU, f"sink component {c.name!r} has nu_minus != 0", c.name)
                )
        elif c.weight == w_max:
            if c.nu_plus != 0:
                violations.append(
                    Violation(EXTREMAL_NONZERO_NU, f"source component {c.name!r} has nu_plus != 0", c.name)
                )
        else:
            if c.nu_minus == 0 or c.nu_plus == 0:
                violations.append(
                    Violation(
                        NON_EXTREMAL_ZERO_NU,
                        f"inner component {c.name!r} has nu_minus or nu_plus equal to 0",
                        c.name,
                    )
                )
    for w, label in ((w_min, "sink"), (w_max, "source")):
        if sum(1 for c in comps if c.weight == w) != 1:
            violations.append(
                Violation(REDUCIBLE_EXTREMAL_LEVEL, f"{label} level has more than one component")
            )
    return violations


def validate_action(
    components: Iterable[FixedComponent | Mapping],
    dim_x: int,
    *,
    flat: bool = False,
    picard_rank_one: bool = True,
    equalized: bool = True,
    equalization_source: str = "declared",
    sink_origin_dim: int | None = None,
    source_origin_dim: int | None = None,
) -> ActionModel:
    """Validate raw fixed-point data and return the normalized model.

    Weights are shifted so the sink sits at zero; the original minimum is kept
    as ``weight_offset`` metadata.  Raises :class:`InvalidActionError` carrying
    the full list of violations otherwise.
    """
    comps = [
        c
        if isinstance(c, FixedComponent)
        else FixedComponent(
            name=str(c["name"]),
            weight=as_rational(c["weight"]),
            dim=int(c["dim"]),
            nu_minus=int(c["nu_minus"]),
            nu_plus=int(c["nu_plus"]),
        )
        for c in components
    ]
    violations = check_action(comps, dim_x)
    if violations:
        raise InvalidActionError(violations)

    offset = min(c.weight for c in comps)
    w_max = max(c.weight for c in comps)
    normalized = tuple(
        replace(c, weight=c.weight - offset, inner=(c.weight != offset and c.weight != w_max))
        for c in sorted(comps, key=lambda c: (c.weight, c.name))
    )
    if flat:
        bad = [c for c in (normalized[0], normalized[-1]) if c.dim != dim_x - 1]
        if bad:
            raise InvalidActionError(
                [Violation(NOT_FLAT_SHAPE, f"extremal component {c.name!r} is not a divisor") for c in bad]
            )
    return ActionModel(
        dim_x=dim_x,
        components=normalized,
        flat=flat,
        picard_rank_one=picard_rank_one,
        equalized=equalized,
        equalization_source=equalization_source,
        sink_origin_dim=sink_origin_dim,
        source_origin_dim=source_origin_dim,
        weight_offset=offset,
    )


def model_warnings(model: ActionModel) -> list[str]:
    """Non-fatal flags: conditions outside the clean setup, kept as notes."""
    notes = []
    if not model.flat:
        for c, label in ((model.sink, "sink"), (model.source, "source")):
            if c.dim == model.dim_x - 1:
                notes.append(
                    f"{label} {c.name!r} is already a divisor; model treated as its own blowup"
                )
    if model.equalization_source == "declared":
        notes.append("equalization is declared, not derived from tangent weights")
    return notes


def bandwidth_criticality(model: ActionModel) -> Tuple[Fraction, int]:
    return (model.bandwidth, model.criticality)


def orbit_degree(w_sink: Fraction, w_source: Fraction) -> Fraction:
    """Degree of an orbit closure with the given extremal weights."""
    w_sink, w_source = as_rational(w_sink), as_rational(w_source)
    if w_source < w_sink:
        raise NegativeDegreeError(f"source weight {w_source} below sink weight {w_sink}")
    return w_source - w_sink


WeightTable = Mapping[str, Fraction]


def weight_map_eval(
    combination: Iterable[Tuple[Fraction, WeightTable]], component: str
) -> Fraction:
    """Evaluate a rational combination of linearized bundles on a component.

    ``combination`` is an iterable of (coefficient, weight table) pairs; the
    result is Q-linear in the coefficients.
    """
    total = Fraction(0)
    for coeff, table in combination:
        if component not in table:
            raise UnknownComponentError(f"component {component!r} missing from weight table")
        total += as_rational(coeff) * as_rational(table[component])
    return total


def is_equalized(
    model: ActionModel, tangent_weights: Mapping[str, Sequence[int]] | None = None
) -> bool:
    """Equalization verdict: every nonzero tangent weight is +-1.

    Without tangent data the model's declared flag is returned; callers that
    need the distinction should consult ``model.equalization_source``.
    """
    if tangent_weights is None:
        return model.equalized
    for c in model.components:
        if c.name not in tangent_weights:
            raise UnknownComponentError(f"no tangent weights for component {c.name!r}")
        if any(w not in (-1, 0, 1) for w in tangent_weights[c.name]):
            return False
    return True


def is_btype(model: ActionModel) -> bool:
    """Extremal fixed components are divisors."""
    return model.sink.dim == model.dim_x - 1 and model.source.dim == model.dim_x - 1


def is_bordism(model: ActionModel) -> bool:
    """B-type with all inner nu_minus, nu_plus >= 2.

    For a flat model produced by :func:`blowup_extremal` this is equivalent to
    both original extremal components being positive-dimensional, which is the
    test used when the origin dims are recorded.
    """
    if not is_btype(model):
        return False
    if model.flat and model.sink_origin_dim is not None and model.source_origin_dim is not None:
        return model.sink_origin_dim > 0 and model.source_origin_dim > 0
    return all(c.nu_minus >= 2 and c.nu_plus >= 2 for c in model.inner_components)


def blowup_extremal(model: ActionModel) -> ActionModel:
    """Blow up sink and source, producing the flat (B-type) model.

    The extremal components are replaced by divisors carrying one normal
    direction toward the interior; inner components are copied bit-exactly and
    the original extremal dims are recorded.
    """
    if model.flat:
        raise AlreadyFlatError("model already has divisorial sink and source")
    sink, source = model.sink, model.source
    delta = model.bandwidth
    new_sink = FixedComponent(
        name=f"{sink.name}_flat", weight=Fraction(0), dim=model.dim_x - 1, nu_minus=0, nu_plus=1
    )
    new_source = FixedComponent(
        name=f"{source.name}_flat", weight=delta, dim=model.dim_x - 1, nu_minus=1, nu_plus=0
    )
    comps = (new_sink,) + model.inner_components + (new_source,)
    return ActionModel(
        dim_x=model.dim_x,
        components=comps,
        flat=True,
        picard_rank_one=model.picard_rank_one,
        equalized=model.equalized,
        equalization_source=model.equalization_source,
        sink_origin_dim=sink.dim,
        source_origin_dim=source.dim,
        weight_offset=model.weight_offset,
    )


def index_set_i(model: ActionModel) -> frozenset[int]:
    """Indices i whose stable-point compactification is a small modification.

    On a flat model this is {0, ..., r-1} with 0 removed when the original
    sink is a point and r-1 removed when the original source is a point.
    """
    sink_dim, source_dim = model.origin_dims()
    r = model.criticality
    out = set(range(r))
    if sink_dim == 0:
        out.discard(0)
    if source_dim == 0:
        out.discard(r - 1)
    return frozenset(out)
