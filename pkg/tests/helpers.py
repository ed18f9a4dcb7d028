"""Shared builders and definition-level predicates used across the tests."""

from __future__ import annotations

from itertools import combinations

from critmatch import Instance, Matching, Side, VertexRef
from critmatch.model import Edge
from critmatch.values import Value


def V(x) -> Value:
    if isinstance(x, Value):
        return x
    if isinstance(x, str):
        return Value.parse(x)
    return Value.from_units(x)


def mk_edge(
    eid: int,
    u: int,
    w: int,
    p_u,
    p_w,
    gammas=(1, 2),
    gammas_w=None,
    critical: bool = False,
) -> Edge:
    g_u, d_u = gammas
    g_w, d_w = gammas_w if gammas_w is not None else gammas
    return Edge(
        id=eid,
        u=VertexRef(Side.U, u),
        w=VertexRef(Side.W, w),
        p_u=V(p_u),
        p_w=V(p_w),
        gamma_u=V(g_u),
        delta_u=V(d_u),
        gamma_w=V(g_w),
        delta_w=V(d_w),
        critical=critical,
    )


def mk_instance(u_count, w_count, edges, critical_vertices=(), constraints=None):
    return Instance(
        u_count=u_count,
        w_count=w_count,
        edges=tuple(edges),
        critical_vertices=frozenset(critical_vertices),
        constraints=dict(constraints or {}),
    )


def golden_instance() -> Instance:
    """One U vertex, one critical W partner, three parallel critical edges
    with the published value/threshold pattern (p = 1,3,4)."""
    u0, w0 = VertexRef(Side.U, 0), VertexRef(Side.W, 0)
    edges = (
        mk_edge(0, 0, 0, 1, 1, gammas=(1, 2), critical=True),
        mk_edge(1, 0, 0, 3, 1, gammas=(2, 3), gammas_w=(1, 2), critical=True),
        mk_edge(2, 0, 0, 4, 1, gammas=(2, 6), gammas_w=(1, 2), critical=True),
    )
    return mk_instance(1, 1, edges, critical_vertices={u0, w0})


GOLDEN_U_ORDER = (
    "x1(2) x1(1) x1(0) a(2) a(1) b0(2) b0(1) a(0) b1(1) b0(0) b1(0) b1(2) "
    "c(2) c(1) c(0) z1(2) z1(1) z1(0)"
)


def tight_ratio_edges():
    """Five-edge path whose solver output has size 2 against a stable
    3-matching: 2 * opt == 3 * alg exactly."""
    return [
        (0, 0, 1, 1),
        (0, 1, 2, 1),
        (1, 1, 1, 1),
        (1, 2, 1, 2),
        (2, 2, 1, 1),
    ]


def all_matchings(instance: Instance):
    """Every one-to-one matching of the instance, by brute force over subsets."""
    edges = instance.edges
    out = []
    for r in range(len(edges) + 1):
        for combo in combinations(edges, r):
            used = set()
            ok = True
            for e in combo:
                if e.u in used or e.w in used:
                    ok = False
                    break
                used.add(e.u)
                used.add(e.w)
            if ok:
                out.append(Matching(frozenset(e.id for e in combo)))
    return out


def _partner_value(instance, m: Matching, v: VertexRef):
    for e in instance.edges:
        if e.id in m.edge_ids and e.endpoint(v.side) == v:
            return e.p(v.side)
    return Value(0)


def weak_blocks(instance, m: Matching, edge) -> bool:
    """Classical blocking pair: both endpoints strictly improve."""
    return edge.p_u > _partner_value(instance, m, edge.u) and edge.p_w > _partner_value(
        instance, m, edge.w
    )


def delta_min_blocks(instance, m, edge, delta: Value) -> bool:
    imp_u = edge.p_u - _partner_value(instance, m, edge.u)
    imp_w = edge.p_w - _partner_value(instance, m, edge.w)
    return imp_u >= delta and imp_w >= delta


def delta_max_blocks(instance, m, edge, delta: Value) -> bool:
    imp_u = edge.p_u - _partner_value(instance, m, edge.u)
    imp_w = edge.p_w - _partner_value(instance, m, edge.w)
    zero = Value(0)
    return imp_u > zero and imp_w > zero and (imp_u >= delta or imp_w >= delta)


def free_blocks(instance, m, edge, free: frozenset[int]) -> bool:
    return edge.id not in free and weak_blocks(instance, m, edge)
