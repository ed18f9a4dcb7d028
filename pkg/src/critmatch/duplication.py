"""Edge duplication: build the strict-preference extended instance.

Every input edge becomes a family of typed parallel copies (a, b0, b1, c,
x_i, z_j, y0, y1).  Each side ranks its incident copies by a template made
of tiers and bands.  Tier members are ordered by preference value alone.
A band orders its base copies by value and interleaves offset copies using
the shifted values p - gamma (gamma group) and p - delta (delta group), so
that an offset copy of f outranks a base copy of e exactly when f clears
the corresponding threshold against e.

Ties resolve by a fixed lexicographic key (delta group, then gamma group,
then base; declared order inside a group; ascending edge id last), which
keeps the whole construction deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .matroid import IndependenceOracle, MatroidSpec, build_oracle, rank
from .model import Instance, Side, VertexRef
from .values import Value

_TIER = -1
_DELTA, _GAMMA, _BASE = 0, 1, 2


@dataclass(frozen=True, order=True)
class CopyType:
    tag: str
    index: int = 0

    @property
    def token(self) -> str:
        if self.tag in ("x", "z"):
            return f"{self.tag}{self.index}"
        return self.tag


A = CopyType("a")
B0 = CopyType("b0")
B1 = CopyType("b1")
C = CopyType("c")
Y0 = CopyType("y0")
Y1 = CopyType("y1")


def X(i: int) -> CopyType:
    return CopyType("x", i)


def Z(j: int) -> CopyType:
    return CopyType("z", j)


@dataclass(frozen=True)
class CopyEdge:
    copy_id: int
    orig: int
    ctype: CopyType

    @property
    def token(self) -> str:
        return f"{self.ctype.token}({self.orig})"


@dataclass(frozen=True)
class Tier:
    member: CopyType


@dataclass(frozen=True)
class Band:
    base: CopyType
    gamma_group: tuple[CopyType, ...]
    delta_group: tuple[CopyType, ...]


Segment = Tier | Band


@dataclass(frozen=True)
class SegmentTemplate:
    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        seen: set[CopyType] = set()
        for seg in self.segments:
            members = (
                (seg.member,)
                if isinstance(seg, Tier)
                else (seg.base, *seg.gamma_group, *seg.delta_group)
            )
            for ctype in members:
                if ctype in seen:
                    raise ValueError(f"copy type {ctype.token} appears twice")
                seen.add(ctype)

    def positions(self) -> dict[CopyType, tuple[int, int, int]]:
        """ctype -> (segment index, role, rank inside its group)."""
        out: dict[CopyType, tuple[int, int, int]] = {}
        for si, seg in enumerate(self.segments):
            if isinstance(seg, Tier):
                out[seg.member] = (si, _TIER, 0)
            else:
                out[seg.base] = (si, _BASE, 0)
                for k, ctype in enumerate(seg.gamma_group):
                    out[ctype] = (si, _GAMMA, k)
                for k, ctype in enumerate(seg.delta_group):
                    out[ctype] = (si, _DELTA, k)
        return out


def simple_templates(s: int, t: int) -> tuple[SegmentTemplate, SegmentTemplate]:
    """Side templates for the all-edges-critical construction."""
    u = (
        [Tier(X(i)) for i in range(1, t + 1)]
        + [Band(A, (B0,), (B1,)), Tier(C)]
        + [Tier(Z(j)) for j in range(s, 0, -1)]
    )
    w = (
        [Tier(Z(j)) for j in range(1, s + 1)]
        + [Band(C, (B1,), (B0,)), Tier(A)]
        + [Tier(X(i)) for i in range(t, 0, -1)]
    )
    return SegmentTemplate(tuple(u)), SegmentTemplate(tuple(w))


def general_templates(s: int, t: int) -> tuple[SegmentTemplate, SegmentTemplate]:
    """Side templates for arbitrary critical edge sets."""
    u = (
        [Band(X(1), (X(2),), (X(3),))]
        + [Tier(X(i)) for i in range(4, t + 5)]
        + [Band(Z(s + 7), (Y0, Z(s + 6)), (Y1, Z(s + 5)))]
        + [Tier(Z(j)) for j in range(s + 4, 3, -1)]
        + [Band(A, (B0, Z(3), X(t + 5)), (B1, Z(2), X(t + 6)))]
        + [Tier(Z(1)), Tier(X(t + 7)), Tier(C)]
    )
    w = (
        [Band(Z(1), (Z(2),), (Z(3),))]
        + [Tier(Z(j)) for j in range(4, s + 5)]
        + [Band(X(t + 7), (Y1, X(t + 6)), (Y0, X(t + 5)))]
        + [Tier(X(i)) for i in range(t + 4, 3, -1)]
        + [Band(C, (B1, X(3), Z(s + 5)), (B0, X(2), Z(s + 6)))]
        + [Tier(X(1)), Tier(Z(s + 7)), Tier(A)]
    )
    return SegmentTemplate(tuple(u)), SegmentTemplate(tuple(w))


class ParallelExtensionOracle(IndependenceOracle):
    """At most one copy per original edge, projection independent below."""

    def __init__(self, copy_origs: Mapping[int, int], base: IndependenceOracle):
        self.ground = frozenset(copy_origs)
        self.orig = dict(copy_origs)
        self.base = base

    def independent(self, subset: Iterable[int]) -> bool:
        s = list(subset)
        if not set(s) <= self.ground:
            return False
        origs = [self.orig[c] for c in s]
        if len(set(origs)) != len(origs):
            return False
        return self.base.independent(origs)


def extend_matroid(
    spec: MatroidSpec, copy_origs: Mapping[int, int]
) -> IndependenceOracle:
    """Parallel extension of a vertex matroid to that vertex's copies."""
    base = build_oracle(spec, frozenset(copy_origs.values()))
    return ParallelExtensionOracle(copy_origs, base)


@dataclass(frozen=True, eq=False)
class ExtendedInstance:
    instance: Instance
    construction: str
    s: int
    t: int
    copies: tuple[CopyEdge, ...]
    template_u: SegmentTemplate
    template_w: SegmentTemplate
    rank_u: tuple[tuple[int, ...], ...]
    rank_w: tuple[tuple[int, ...], ...]
    ext_constraints: Mapping[VertexRef, IndependenceOracle]
    copy_u: tuple[int, ...] = field(repr=False, default=())
    copy_w: tuple[int, ...] = field(repr=False, default=())

    @property
    def back_map(self) -> dict[int, int]:
        return {c.copy_id: c.orig for c in self.copies}

    @property
    def all_unit(self) -> bool:
        return self.instance.is_one_to_one


def ranking_key(
    instance: Instance,
    v: VertexRef,
    copy: CopyEdge,
    template: SegmentTemplate,
) -> tuple[int, Value, int, int, int]:
    """(segment, value, group rank, rank in group, edge id); orders copies
    by ascending segment, then descending value, then the remaining fields
    ascending."""
    edge = instance.edge_map()[copy.orig]
    if edge.endpoint(v.side) != v:
        raise ValueError(f"copy {copy.token} is not incident to {v}")
    return _key_from_positions(edge, v.side, copy, template.positions())


def _key_from_positions(edge, side: Side, copy: CopyEdge, positions) -> tuple:
    try:
        seg, role, within = positions[copy.ctype]
    except KeyError:
        raise ValueError(f"copy type {copy.ctype.token} not in template") from None
    p = edge.p(side)
    if role == _GAMMA:
        return (seg, p - edge.gamma(side), _GAMMA, within, copy.orig)
    if role == _DELTA:
        return (seg, p - edge.delta(side), _DELTA, within, copy.orig)
    group = _BASE if role == _BASE else 0
    return (seg, p, group, 0, copy.orig)


def sort_key(key: tuple[int, Value, int, int, int]) -> tuple:
    seg, value, group, within, eid = key
    return (seg, -value, group, within, eid)


def build_simple(instance: Instance) -> ExtendedInstance:
    """The construction for instances whose edges are all critical (or that
    have no critical vertices at all, where criticality is vacuous)."""
    _require_normalized(instance)
    if instance.critical_vertices and not all(e.critical for e in instance.edges):
        raise ValueError(
            "simple construction requires every edge critical "
            "(or no critical vertices)"
        )
    return _build(instance, general=False)


def build_general(instance: Instance) -> ExtendedInstance:
    """The construction for arbitrary critical edge sets."""
    _require_normalized(instance)
    return _build(instance, general=True)


def _require_normalized(instance: Instance) -> None:
    crit = instance.critical_vertices
    for e in instance.edges:
        if e.critical and e.u not in crit and e.w not in crit:
            raise ValueError(
                f"edge {e.id} is critical but has no critical endpoint; "
                "normalize the instance first"
            )


def rank_sums(instance: Instance) -> tuple[int, int]:
    """(s, t): critical vertex counts per side, or matroid rank sums when
    any vertex has a non-unit constraint."""
    crit = instance.critical_vertices
    if instance.is_one_to_one:
        s = sum(1 for v in crit if v.side == Side.U)
        t = sum(1 for v in crit if v.side == Side.W)
        return s, t
    s = sum(rank(instance.oracle_for(v)) for v in crit if v.side == Side.U)
    t = sum(rank(instance.oracle_for(v)) for v in crit if v.side == Side.W)
    return s, t


def _copy_types(edge, crit_u: bool, crit_w: bool, s: int, t: int, general: bool):
    types = [A, B0, B1, C]
    if general:
        if edge.critical and crit_w:
            types.extend(X(i) for i in range(1, t + 8))
        if edge.critical and crit_u:
            types.extend(Z(j) for j in range(1, s + 8))
        if edge.critical and crit_u and crit_w:
            types.extend((Y0, Y1))
    else:
        if crit_w:
            types.extend(X(i) for i in range(1, t + 1))
        if crit_u:
            types.extend(Z(j) for j in range(1, s + 1))
    return sorted(types)


def _build(instance: Instance, general: bool) -> ExtendedInstance:
    s, t = rank_sums(instance)
    template_u, template_w = (
        general_templates(s, t) if general else simple_templates(s, t)
    )
    crit = instance.critical_vertices

    copies: list[CopyEdge] = []
    copy_u: list[int] = []
    copy_w: list[int] = []
    u_lists: list[list[int]] = [[] for _ in range(instance.u_count)]
    w_lists: list[list[int]] = [[] for _ in range(instance.w_count)]
    key_u: list[tuple] = []
    key_w: list[tuple] = []

    pos_u = template_u.positions()
    pos_w = template_w.positions()
    for edge in instance.edges:
        for ctype in _copy_types(edge, edge.u in crit, edge.w in crit, s, t, general):
            copy = CopyEdge(copy_id=len(copies), orig=edge.id, ctype=ctype)
            copies.append(copy)
            copy_u.append(edge.u.index)
            copy_w.append(edge.w.index)
            u_lists[edge.u.index].append(copy.copy_id)
            w_lists[edge.w.index].append(copy.copy_id)
            key_u.append(sort_key(_key_from_positions(edge, Side.U, copy, pos_u)))
            key_w.append(sort_key(_key_from_positions(edge, Side.W, copy, pos_w)))

    for lst in u_lists:
        lst.sort(key=key_u.__getitem__)
    for lst in w_lists:
        lst.sort(key=key_w.__getitem__)

    ext_constraints: dict[VertexRef, IndependenceOracle] = {}
    for v in instance.vertices():
        lists = u_lists if v.side == Side.U else w_lists
        incident = {cid: copies[cid].orig for cid in lists[v.index]}
        ext_constraints[v] = extend_matroid(instance.constraint_for(v), incident)

    return ExtendedInstance(
        instance=instance,
        construction="general" if general else "simple",
        s=s,
        t=t,
        copies=tuple(copies),
        template_u=template_u,
        template_w=template_w,
        rank_u=tuple(tuple(lst) for lst in u_lists),
        rank_w=tuple(tuple(lst) for lst in w_lists),
        ext_constraints=ext_constraints,
        copy_u=tuple(copy_u),
        copy_w=tuple(copy_w),
    )


def format_orders(ext: ExtendedInstance) -> str:
    """Debug dump: one line per vertex, copies best first as type(edge_id)."""
    lines = []
    for i, order in enumerate(ext.rank_u):
        tokens = " ".join(ext.copies[cid].token for cid in order)
        lines.append(f"U{i}: {tokens}")
    for j, order in enumerate(ext.rank_w):
        tokens = " ".join(ext.copies[cid].token for cid in order)
        lines.append(f"W{j}: {tokens}")
    return "\n".join(lines) + "\n"
