"""Small modifications of the flat model: flip graph and quotient diagram.

Each chamber pair (i, j) carries a small modification X(i, j) of the flat
model, again with a divisorial-extremes action: sink GX(i, i+1), source
GX(j-1, j), and the original inner components between critical values i and j
copied bit-exactly (weights renormalized to start at zero).  Moving to
(i+1, j) or (i, j-1) is a flip removing the cell closures attached to the
shifting level:

* the plus flip (i, j) -> (i+1, j) removes the downward closures of level
  i+1; per component Y the removed center has dimension dim Y + nu_minus(Y)
  and is replaced by a locus of dimension dim Y + nu_plus(Y) - 1, legal when
  nu_plus(Y) > 1 on every component of the level;
* the minus flip (i, j) -> (i, j-1) mirrors this at level j-1, with center
  dimension dim Y + nu_plus(Y), flipped dimension dim Y + nu_minus(Y) - 1,
  legal when nu_minus(Y) > 1.

Either way the center and flipped dimensions add up to dim X - 1 and the
criticality drops by one.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Tuple

from .actions import ActionError, ActionModel, FixedComponent
from .chambers import Point, chamber_pairs, chamber_polygon

PLUS = "plus"
MINUS = "minus"


class NotAChamberError(ActionError):
    pass


class IndexNotAdmissibleError(ActionError):
    pass


@dataclass(frozen=True)
class FlipCenter:
    """Per-component bookkeeping of one flip at the shifting level."""

    component: str
    dim: int
    center_dim: int
    flipped_dim: int


@dataclass(frozen=True)
class FlipEdge:
    from_pair: Tuple[int, int]
    to_pair: Tuple[int, int]
    direction: str  # PLUS or MINUS
    level: int  # shifting level, in the numbering of the flat model
    centers: Tuple[FlipCenter, ...]


@dataclass(frozen=True)
class FlipObstruction:
    from_pair: Tuple[int, int]
    to_pair: Tuple[int, int]
    direction: str
    level: int
    components: Tuple[str, ...]


@dataclass(frozen=True)
class GraphNode:
    pair: Tuple[int, int]
    model: ActionModel
    nef_polygon: Tuple[Point, ...]


@dataclass(frozen=True)
class FlipGraph:
    nodes: Tuple[GraphNode, ...]
    edges: Tuple[FlipEdge, ...]
    obstructions: Tuple[FlipObstruction, ...]

    def node(self, pair: Tuple[int, int]) -> GraphNode:
        for n in self.nodes:
            if n.pair == pair:
                return n
        raise NotAChamberError(f"{pair} is not a chamber of this model")


def induced_action(model: ActionModel, pair: Tuple[int, int]) -> ActionModel:
    """The action carried by X(i, j): inner levels i+1 .. j-1 of the flat
    model at weights a_k - a_i, between divisorial extremes GX(i, i+1) and
    GX(j-1, j) of dimension dim X - 1."""
    if pair not in chamber_pairs(model):
        raise NotAChamberError(f"{pair} is not a chamber of this model")
    i, j = pair
    a = model.critical_values
    base = a[i]
    inner = tuple(
        replace(c, weight=c.weight - base)
        for k in range(i + 1, j)
        for c in model.level_components(k)
    )
    sink = FixedComponent(
        name=f"GX({i},{i + 1})", weight=Fraction(0), dim=model.dim_x - 1, nu_minus=0, nu_plus=1
    )
    source = FixedComponent(
        name=f"GX({j - 1},{j})", weight=a[j] - base, dim=model.dim_x - 1, nu_minus=1, nu_plus=0
    )
    comps = tuple(sorted((sink,) + inner + (source,), key=lambda c: (c.weight, c.name)))
    return ActionModel(
        dim_x=model.dim_x,
        components=comps,
        flat=True,
        picard_rank_one=model.picard_rank_one,
        equalized=model.equalized,
        equalization_source=model.equalization_source,
    )


def _edge_candidates(pair):
    i, j = pair
    yield (PLUS, (i + 1, j), i + 1)
    yield (MINUS, (i, j - 1), j - 1)


def _flip_records(direction: str, comps) -> Tuple[Tuple[FlipCenter, ...], Tuple[str, ...]]:
    centers = []
    blocked = []
    for c in comps:
        if direction == PLUS:
            legal = c.nu_plus > 1
            center_dim = c.dim + c.nu_minus
            flipped_dim = c.dim + c.nu_plus - 1
        else:
            legal = c.nu_minus > 1
            center_dim = c.dim + c.nu_plus
            flipped_dim = c.dim + c.nu_minus - 1
        if not legal:
            blocked.append(c.name)
        centers.append(FlipCenter(c.name, c.dim, center_dim, flipped_dim))
    return tuple(centers), tuple(blocked)


def build_flip_graph(model: ActionModel) -> FlipGraph:
    """Graph of all small modifications X(i, j) with their connecting flips.

    Nodes are the chambers; a candidate edge is emitted only when its target
    is again a chamber and every component of the shifting level satisfies the
    flip inequality, otherwise the obstruction is recorded and the edge
    omitted.
    """
    pairs = chamber_pairs(model)
    nodes = tuple(
        GraphNode(pair, induced_action(model, pair), chamber_polygon(model, pair))
        for pair in pairs
    )
    edges: list[FlipEdge] = []
    obstructions: list[FlipObstruction] = []
    for pair in pairs:
        for direction, target, level in _edge_candidates(pair):
            if target not in pairs:
                continue
            centers, blocked = _flip_records(direction, model.level_components(level))
            if blocked:
                obstructions.append(FlipObstruction(pair, target, direction, level, blocked))
            else:
                edges.append(FlipEdge(pair, target, direction, level, centers))
    return FlipGraph(nodes, tuple(edges), tuple(obstructions))


@dataclass(frozen=True)
class QuotientNode:
    kind: str  # "geometric" | "semigeometric"
    indices: Tuple[int, int]
    dim: int
    label: str
    identity: str | None = None  # extremal semigeometric nodes are the fixed components


@dataclass(frozen=True)
class QuotientDiagram:
    geometric: Tuple[QuotientNode, ...]
    semigeometric: Tuple[QuotientNode, ...]
    dashed_arrows: Tuple[Tuple[str, str], ...]
    diagonal_arrows: Tuple[Tuple[str, str], ...]
    fiber_note: str


def quotient_diagram(model: ActionModel) -> QuotientDiagram:
    """The chain of geometric quotients over the semigeometric ones.

    r geometric nodes GX(i, i+1) of dimension dim X - 1 linked by r - 1 dashed
    arrows; r + 1 semigeometric nodes GX(i, i) each receiving the diagonal
    contractions from its neighbours (2r arrows).  The two outermost
    semigeometric nodes are the extremal fixed components themselves.
    """
    r = model.criticality
    sink_dim, source_dim = model.origin_dims()
    geometric = tuple(
        QuotientNode("geometric", (i, i + 1), model.dim_x - 1, f"GX({i},{i + 1})")
        for i in range(r)
    )
    semi: list[QuotientNode] = []
    for i in range(r + 1):
        if i == 0:
            semi.append(QuotientNode("semigeometric", (0, 0), sink_dim, "GX(0,0)", identity="Y_0"))
        elif i == r:
            semi.append(
                QuotientNode("semigeometric", (r, r), source_dim, f"GX({r},{r})", identity=f"Y_{r}")
            )
        else:
            semi.append(QuotientNode("semigeometric", (i, i), model.dim_x - 1, f"GX({i},{i})"))
    dashed = tuple((geometric[i].label, geometric[i + 1].label) for i in range(r - 1))
    diagonal = []
    for i in range(r + 1):
        if i >= 1:
            diagonal.append((geometric[i - 1].label, semi[i].label))
        if i <= r - 1:
            diagonal.append((geometric[i].label, semi[i].label))
    fiber = "projective spaces" if model.equalized else "weighted projective spaces"
    return QuotientDiagram(geometric, tuple(semi), dashed, tuple(diagonal), fiber)


@dataclass(frozen=True)
class P1BundleModel:
    index: int
    base_label: str
    node_pair: Tuple[int, int]
    nef_polygon: Tuple[Point, ...]


def p1_bundle_models(model: ActionModel, indices=None) -> list[P1BundleModel]:
    """The small modifications that are P1-bundles over geometric quotients,
    one for every admissible index."""
    from .actions import index_set_i

    admissible = index_set_i(model)
    if indices is None:
        indices = sorted(admissible)
    out = []
    for i in indices:
        if i not in admissible:
            raise IndexNotAdmissibleError(f"index {i} not in {sorted(admissible)}")
        out.append(
            P1BundleModel(
                index=i,
                base_label=f"GX({i},{i + 1})",
                node_pair=(i, i + 1),
                nef_polygon=chamber_polygon(model, (i, i + 1)),
            )
        )
    return out


def extremal_ray_type(model: ActionModel, end: str) -> str:
    """Contraction type at an endpoint of the quotient chain: the projective
    bundle over a positive-dimensional extremal component, or divisorial when
    that component is a point."""
    sink_dim, source_dim = model.origin_dims()
    if end == "left":
        return "divisorial" if sink_dim == 0 else "fibration"
    if end == "right":
        return "divisorial" if source_dim == 0 else "fibration"
    raise ValueError(f"end must be 'left' or 'right', got {end!r}")


@dataclass(frozen=True)
class ChainSummary:
    chain_arrows: int
    left: str
    right: str
    blowups: int
    blowdowns: int
    flips: int


def flip_chain_summary(model: ActionModel) -> ChainSummary:
    """Counts for the quotient chain: r - 1 dashed arrows plus an endpoint
    classification.  A divisorial endpoint reclassifies the adjacent step as a
    blowup (left) or blowdown (right); the small contractions of the two end
    arrows then pair up, leaving r - 2 genuine flips, against r - 1 when both
    endpoints are fibrations."""
    r = model.criticality
    left = extremal_ray_type(model, "left")
    right = extremal_ray_type(model, "right")
    blowups = 1 if left == "divisorial" else 0
    blowdowns = 1 if right == "divisorial" else 0
    if blowups + blowdowns == 0:
        flips = r - 1
    else:
        flips = max(r - 2, 0)
    return ChainSummary(
        chain_arrows=r - 1,
        left=left,
        right=right,
        blowups=blowups,
        blowdowns=blowdowns,
        flips=flips,
    )
