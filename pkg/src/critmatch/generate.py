"""Seeded random instance generator.

Same (seed, params) always produces the same instance: the draw order is
fixed and all randomness flows through one `random.Random(seed)`.  Output
is validated and normalized before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .matroid import CapacitySpec
from .model import Edge, Instance, Side, VertexRef, normalize, validate
from .values import Value


@dataclass(frozen=True)
class GenParams:
    u_count: int = 4
    w_count: int = 4
    edge_count: int = 9
    p_max: int = 4
    crit_vertex_prob: float = 0.3
    crit_edge_prob: float = 0.4
    capacity_max: int = 1

    def check(self) -> None:
        if min(self.u_count, self.w_count, self.edge_count, self.p_max) < 1:
            raise ValueError("u_count, w_count, edge_count, p_max must be >= 1")
        if self.capacity_max < 1:
            raise ValueError("capacity_max must be >= 1")
        if not (0.0 <= self.crit_vertex_prob <= 1.0 and 0.0 <= self.crit_edge_prob <= 1.0):
            raise ValueError("probabilities must lie in [0, 1]")


def generate(seed: int, params: GenParams = GenParams()) -> Instance:
    """Draw a valid, normalized instance; parallel edges are allowed."""
    params.check()
    rng = random.Random(seed)

    critical = set()
    for i in range(params.u_count):
        if rng.random() < params.crit_vertex_prob:
            critical.add(VertexRef(Side.U, i))
    for j in range(params.w_count):
        if rng.random() < params.crit_vertex_prob:
            critical.add(VertexRef(Side.W, j))

    edges = []
    for eid in range(params.edge_count):
        u = rng.randrange(params.u_count)
        w = rng.randrange(params.w_count)
        p_u = Value.from_units(rng.randint(0, params.p_max))
        p_w = Value.from_units(rng.randint(0, params.p_max))
        gamma_u = Value.from_units(rng.randint(1, params.p_max))
        delta_u = gamma_u + Value.from_units(rng.randint(1, 2))
        gamma_w = Value.from_units(rng.randint(1, params.p_max))
        delta_w = gamma_w + Value.from_units(rng.randint(1, 2))
        edges.append(
            Edge(
                id=eid,
                u=VertexRef(Side.U, u),
                w=VertexRef(Side.W, w),
                p_u=p_u,
                p_w=p_w,
                gamma_u=gamma_u,
                delta_u=delta_u,
                gamma_w=gamma_w,
                delta_w=delta_w,
                critical=rng.random() < params.crit_edge_prob,
            )
        )

    constraints = {}
    if params.capacity_max > 1:
        for i in range(params.u_count):
            q = rng.randint(1, params.capacity_max)
            if q != 1:
                constraints[VertexRef(Side.U, i)] = CapacitySpec(q)
        for j in range(params.w_count):
            q = rng.randint(1, params.capacity_max)
            if q != 1:
                constraints[VertexRef(Side.W, j)] = CapacitySpec(q)

    instance = Instance(
        u_count=params.u_count,
        w_count=params.w_count,
        edges=tuple(edges),
        critical_vertices=frozenset(critical),
        constraints=constraints,
    )
    report = validate(instance)
    if not report.ok:
        raise AssertionError(f"generator produced invalid instance: {report.violations}")
    return normalize(instance)
