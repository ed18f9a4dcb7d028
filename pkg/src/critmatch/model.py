"""Domain types for matching markets with thresholds and criticality.

An instance is a bipartite multigraph.  Each edge carries one preference
value and one (gamma, delta) threshold pair per endpoint, and a critical
flag; vertices may be critical and may carry a matroid constraint (absent
means capacity 1).  A solution is a set of edge ids that is independent on
both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping

from .matroid import (
    CapacitySpec,
    IndependenceOracle,
    MatroidSpec,
    build_oracle,
    validate_spec,
)
from .values import INFINITY, Value


class Side(str, Enum):
    U = "U"
    W = "W"


@dataclass(frozen=True, order=True)
class VertexRef:
    side: Side
    index: int

    def __str__(self) -> str:
        return f"{self.side.value}{self.index}"


@dataclass(frozen=True)
class Edge:
    id: int
    u: VertexRef
    w: VertexRef
    p_u: Value
    p_w: Value
    gamma_u: Value
    delta_u: Value
    gamma_w: Value
    delta_w: Value
    critical: bool = False

    def endpoint(self, side: Side) -> VertexRef:
        return self.u if side == Side.U else self.w

    def p(self, side: Side) -> Value:
        return self.p_u if side == Side.U else self.p_w

    def gamma(self, side: Side) -> Value:
        return self.gamma_u if side == Side.U else self.gamma_w

    def delta(self, side: Side) -> Value:
        return self.delta_u if side == Side.U else self.delta_w


@dataclass(frozen=True)
class Instance:
    u_count: int
    w_count: int
    edges: tuple[Edge, ...]
    critical_vertices: frozenset[VertexRef] = frozenset()
    constraints: Mapping[VertexRef, MatroidSpec] = field(default_factory=dict)

    def __post_init__(self) -> None:
        # Canonical edge order so equal instances serialize identically.
        object.__setattr__(
            self, "edges", tuple(sorted(self.edges, key=lambda e: e.id))
        )
        object.__setattr__(
            self, "critical_vertices", frozenset(self.critical_vertices)
        )

    def edges_at(self, v: VertexRef) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.endpoint(v.side) == v)

    def incident_ids(self, v: VertexRef) -> frozenset[int]:
        return frozenset(e.id for e in self.edges if e.endpoint(v.side) == v)

    def edge_map(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    def vertices(self) -> Iterable[VertexRef]:
        for i in range(self.u_count):
            yield VertexRef(Side.U, i)
        for j in range(self.w_count):
            yield VertexRef(Side.W, j)

    def constraint_for(self, v: VertexRef) -> MatroidSpec:
        return self.constraints.get(v, CapacitySpec(1))

    def oracle_for(self, v: VertexRef) -> IndependenceOracle:
        return build_oracle(self.constraint_for(v), self.incident_ids(v))

    @property
    def is_one_to_one(self) -> bool:
        return all(
            isinstance(spec, CapacitySpec) and spec.q == 1
            for spec in self.constraints.values()
        )

    def is_critical_vertex(self, v: VertexRef) -> bool:
        return v in self.critical_vertices

    def critical_edge_ids(self) -> frozenset[int]:
        return frozenset(e.id for e in self.edges if e.critical)


@dataclass(frozen=True)
class Matching:
    edge_ids: frozenset[int] = frozenset()

    @classmethod
    def of(cls, ids: Iterable[int]) -> Matching:
        return cls(frozenset(ids))

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.edge_ids


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(instance: Instance) -> ValidationReport:
    """Check every structural assumption; returns all violations found."""
    problems: list[str] = []
    if instance.u_count < 0 or instance.w_count < 0:
        problems.append("vertex counts must be nonnegative")

    seen_ids: set[int] = set()
    for e in instance.edges:
        tag = f"edge {e.id}"
        if e.id in seen_ids:
            problems.append(f"{tag}: duplicate edge id")
        seen_ids.add(e.id)
        if e.u.side != Side.U or e.w.side != Side.W:
            problems.append(f"{tag}: endpoints must be a U vertex and a W vertex")
        if not 0 <= e.u.index < instance.u_count:
            problems.append(f"{tag}: U endpoint {e.u.index} out of range")
        if not 0 <= e.w.index < instance.w_count:
            problems.append(f"{tag}: W endpoint {e.w.index} out of range")
        for side, p in (("p_u", e.p_u), ("p_w", e.p_w)):
            if not p.is_finite:
                problems.append(f"{tag}: {side} must be finite")
            elif p < Value(0):
                problems.append(f"{tag}: preferences nonnegative, {side} = {p}")
        for name, gamma, delta in (
            ("u", e.gamma_u, e.delta_u),
            ("w", e.gamma_w, e.delta_w),
        ):
            if gamma == INFINITY and delta == INFINITY:
                continue  # fully free edge side, the one sanctioned exception
            if not gamma.is_finite:
                problems.append(
                    f"{tag}: gamma_{name} = inf requires delta_{name} = inf"
                )
            elif not Value(0) < gamma < delta:
                problems.append(
                    f"{tag}: gamma < delta required with gamma > 0, "
                    f"got gamma_{name} = {gamma}, delta_{name} = {delta}"
                )
    if seen_ids and instance.edges and seen_ids != set(range(len(instance.edges))):
        problems.append("edge ids must be dense (0..n-1)")

    for v in instance.critical_vertices:
        limit = instance.u_count if v.side == Side.U else instance.w_count
        if not 0 <= v.index < limit:
            problems.append(f"critical vertex {v} out of range")

    for v, spec in instance.constraints.items():
        limit = instance.u_count if v.side == Side.U else instance.w_count
        if not 0 <= v.index < limit:
            problems.append(f"constraint vertex {v} out of range")
            continue
        for msg in validate_spec(spec, instance.incident_ids(v)):
            problems.append(f"constraint at {v}: {msg}")

    return ValidationReport(tuple(problems))


def normalize(instance: Instance) -> Instance:
    """Demote critical edges that touch no critical vertex; idempotent."""
    crit = instance.critical_vertices
    edges = tuple(
        replace(e, critical=False)
        if e.critical and e.u not in crit and e.w not in crit
        else e
        for e in instance.edges
    )
    if edges == instance.edges:
        return instance
    return replace(instance, edges=edges)


def is_feasible(instance: Instance, m: Matching) -> bool:
    """True when m is a common independent set of the instance."""
    known = {e.id for e in instance.edges}
    if not m.edge_ids <= known:
        return False
    at: dict[VertexRef, set[int]] = {}
    emap = instance.edge_map()
    for eid in m.edge_ids:
        e = emap[eid]
        at.setdefault(e.u, set()).add(eid)
        at.setdefault(e.w, set()).add(eid)
    return all(instance.oracle_for(v).independent(ids) for v, ids in at.items())


def criticality_score(instance: Instance, m: Matching) -> int:
    """Number of critical places filled: sum over critical vertices of the
    matched critical edges incident to them."""
    if not is_feasible(instance, m):
        raise ValueError("matching is not feasible for this instance")
    emap = instance.edge_map()
    total = 0
    for eid in m.edge_ids:
        e = emap[eid]
        if e.critical:
            total += (e.u in instance.critical_vertices) + (
                e.w in instance.critical_vertices
            )
    return total


def per_edge_critical_weight(instance: Instance) -> dict[int, int]:
    """Per-edge contribution to the criticality score (0, 1, or 2)."""
    crit = instance.critical_vertices
    return {
        e.id: (e.critical * ((e.u in crit) + (e.w in crit)))
        for e in instance.edges
    }
