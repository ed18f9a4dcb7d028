"""Constructors that embed classic stability notions as threshold instances.

Each constructor takes a plain bipartite preference graph whose values lie
on the 1e-6 grid and emits an instance whose blocking predicate coincides
with the source model's.  Strict comparisons are encoded with a half-step
threshold that no grid value can land on:

  weak stability   gamma = half step,     delta = one grid step
  delta-min        gamma = D - half step, delta = D
  delta-max        gamma = half step,     delta = D
  free edges       gamma = delta = INFINITY on the free set

The emitted instances have no critical vertices or edges.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .model import Edge, Instance, Side, VertexRef
from .values import GRID_TICKS, HALF_STEP_TICKS, INFINITY, Value, as_value

#: edge description: (u index, w index, p_u, p_w)
EdgeInput = tuple[int, int, "Value | int | str", "Value | int | str"]

_HALF = Value.from_ticks(HALF_STEP_TICKS)
_STEP = Value.from_ticks(GRID_TICKS)


def _grid_value(x, what: str) -> Value:
    v = as_value(x)
    if not v.on_input_grid:
        raise ValueError(f"{what} must lie on the 1e-6 grid, got {v}")
    return v


def _build(
    u_count: int,
    w_count: int,
    edges: Sequence[EdgeInput],
    thresholds,
) -> Instance:
    built = []
    for eid, (u, w, p_u, p_w) in enumerate(edges):
        gamma, delta = thresholds(eid)
        built.append(
            Edge(
                id=eid,
                u=VertexRef(Side.U, u),
                w=VertexRef(Side.W, w),
                p_u=_grid_value(p_u, f"edge {eid} p_u"),
                p_w=_grid_value(p_w, f"edge {eid} p_w"),
                gamma_u=gamma,
                delta_u=delta,
                gamma_w=gamma,
                delta_w=delta,
                critical=False,
            )
        )
    return Instance(u_count=u_count, w_count=w_count, edges=tuple(built))


def from_weak_stability(
    u_count: int, w_count: int, edges: Sequence[EdgeInput]
) -> Instance:
    """Classic weak stability: an edge blocks iff both sides strictly improve."""
    return _build(u_count, w_count, edges, lambda _: (_HALF, _STEP))


def _check_delta(delta) -> Value:
    d = as_value(delta)
    if not d.is_finite or d <= Value(0):
        raise ValueError(f"delta must be a positive finite value, got {d}")
    if not d.on_input_grid:
        raise ValueError(f"delta must lie on the 1e-6 grid, got {d}")
    return d


def from_delta_min(
    u_count: int, w_count: int, edges: Sequence[EdgeInput], delta
) -> Instance:
    """Blocking requires both improvements to be at least delta."""
    d = _check_delta(delta)
    return _build(u_count, w_count, edges, lambda _: (d - _HALF, d))


def from_delta_max(
    u_count: int, w_count: int, edges: Sequence[EdgeInput], delta
) -> Instance:
    """Blocking requires a strict improvement on both sides and at least
    delta on one of them."""
    d = _check_delta(delta)
    return _build(u_count, w_count, edges, lambda _: (_HALF, d))


def from_free_edges(
    u_count: int,
    w_count: int,
    edges: Sequence[EdgeInput],
    free: Iterable[int],
) -> Instance:
    """Weak stability where the edges in `free` may be matched but never block."""
    free = frozenset(free)
    if not free <= set(range(len(edges))):
        raise ValueError("free set refers to unknown edge ids")

    def thresholds(eid: int):
        if eid in free:
            return (INFINITY, INFINITY)
        return (_HALF, _STEP)

    return _build(u_count, w_count, edges, thresholds)
