"""Brute-force ground truth at desk scale.

Everything here is definition-level: feasible sets are enumerated
exhaustively, blocking is decided by scanning all removal pairs, and the
criticality optimum is a maximum over the enumeration.  The solver is never
consulted to decide what is true; these oracles certify the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from .generate import GenParams, generate
from .model import (
    Edge,
    Instance,
    Matching,
    VertexRef,
    criticality_score,
    is_feasible,
    per_edge_critical_weight,
)
from .solver import solve
from .values import Value

#: hard ceiling on the edge count for exhaustive enumeration
DEFAULT_CAP = 20


class CapExceededError(ValueError):
    """Instance too large for the exhaustive oracle."""


@dataclass(frozen=True)
class Certificate:
    feasible: bool
    criticality_score: int
    criticality_optimum: int
    blocking_edges: tuple[tuple[int, int | None, int | None], ...]
    is_critical: bool
    is_cgamma_stable: bool

    def to_obj(self) -> dict[str, Any]:
        return {
            "feasible": self.feasible,
            "criticality_score": self.criticality_score,
            "criticality_optimum": self.criticality_optimum,
            "blocking_edges": [
                {"edge": eid, "f": f, "g": g} for eid, f, g in self.blocking_edges
            ],
            "is_critical": self.is_critical,
            "is_cgamma_stable": self.is_cgamma_stable,
        }


@dataclass(frozen=True)
class RatioReport:
    alg_size: int
    opt_stable_size: int
    ratio_ok: bool

    def to_obj(self) -> dict[str, Any]:
        return {
            "alg_size": self.alg_size,
            "opt_stable_size": self.opt_stable_size,
            "ratio_ok": self.ratio_ok,
        }


def _check_cap(instance: Instance, cap: int) -> None:
    if len(instance.edges) > cap:
        raise CapExceededError(
            f"{len(instance.edges)} edges exceed the enumeration cap of {cap}"
        )


def enumerate_feasible(
    instance: Instance, cap: int = DEFAULT_CAP
) -> Iterator[Matching]:
    """All common independent sets, in lexicographic order by edge id."""
    _check_cap(instance, cap)
    edges = instance.edges
    oracles = {v: instance.oracle_for(v) for v in instance.vertices()}
    at: dict[VertexRef, set[int]] = {v: set() for v in instance.vertices()}

    def addable(e: Edge) -> bool:
        return oracles[e.u].independent(at[e.u] | {e.id}) and oracles[
            e.w
        ].independent(at[e.w] | {e.id})

    chosen: list[int] = []

    def rec(start: int) -> Iterator[Matching]:
        yield Matching(frozenset(chosen))
        for k in range(start, len(edges)):
            e = edges[k]
            if addable(e):
                chosen.append(e.id)
                at[e.u].add(e.id)
                at[e.w].add(e.id)
                yield from rec(k + 1)
                chosen.pop()
                at[e.u].remove(e.id)
                at[e.w].remove(e.id)

    yield from rec(0)


def criticality_optimum(instance: Instance, cap: int = DEFAULT_CAP) -> int:
    """Maximum criticality score over every feasible set."""
    weights = per_edge_critical_weight(instance)
    best = 0
    for m in enumerate_feasible(instance, cap):
        best = max(best, sum(weights[eid] for eid in m.edge_ids))
    return best


def cgamma_blocks(
    instance: Instance, m: Matching, edge: Edge, opt: int
) -> tuple[int | None, int | None] | None:
    """Witness (f, g) that `edge` blocks `m`, or None.

    A witness removes f at u and g at w (either may be None), keeps both
    sides independent, clears the threshold disjunction with p(unmatched)=0,
    and keeps the criticality score at the optimum.
    """
    if edge.id in m.edge_ids:
        raise ValueError("blocking candidate must be outside the matching")
    weights = per_edge_critical_weight(instance)
    score = sum(weights[eid] for eid in m.edge_ids)
    if score != opt:
        raise ValueError("cgamma_blocks requires a critical base matching")

    emap = instance.edge_map()
    at_u = {eid for eid in m.edge_ids if emap[eid].endpoint(edge.u.side) == edge.u}
    at_w = {eid for eid in m.edge_ids if emap[eid].endpoint(edge.w.side) == edge.w}
    oracle_u = instance.oracle_for(edge.u)
    oracle_w = instance.oracle_for(edge.w)
    zero = Value(0)

    for f in [None, *sorted(at_u)]:
        removed_u = at_u - {f} if f is not None else at_u
        if not oracle_u.independent(removed_u | {edge.id}):
            continue
        imp_u = edge.p_u - (emap[f].p_u if f is not None else zero)
        for g in [None, *sorted(at_w)]:
            removed_w = at_w - {g} if g is not None else at_w
            if not oracle_w.independent(removed_w | {edge.id}):
                continue
            imp_w = edge.p_w - (emap[g].p_w if g is not None else zero)
            if not (
                (imp_u >= edge.gamma_u and imp_w >= edge.delta_w)
                or (imp_u >= edge.delta_u and imp_w >= edge.gamma_w)
            ):
                continue
            removed = {x for x in (f, g) if x is not None}
            new_score = (
                score - sum(weights[x] for x in removed) + weights[edge.id]
            )
            if new_score == opt:
                return (f, g)
    return None


def certify(instance: Instance, m: Matching, cap: int = DEFAULT_CAP) -> Certificate:
    """Full verification report for a candidate solution."""
    feasible = is_feasible(instance, m)
    weights = per_edge_critical_weight(instance)
    score = sum(weights.get(eid, 0) for eid in m.edge_ids)
    opt = criticality_optimum(instance, cap)
    is_critical = feasible and score == opt

    blocking: list[tuple[int, int | None, int | None]] = []
    if is_critical:
        for edge in instance.edges:
            if edge.id in m.edge_ids:
                continue
            witness = cgamma_blocks(instance, m, edge, opt)
            if witness is not None:
                blocking.append((edge.id, witness[0], witness[1]))

    return Certificate(
        feasible=feasible,
        criticality_score=score,
        criticality_optimum=opt,
        blocking_edges=tuple(blocking),
        is_critical=is_critical,
        is_cgamma_stable=is_critical and not blocking,
    )


def _is_stable(instance: Instance, m: Matching, opt: int) -> bool:
    for edge in instance.edges:
        if edge.id not in m.edge_ids and cgamma_blocks(instance, m, edge, opt):
            return False
    return True


def max_cgamma_stable(
    instance: Instance, cap: int = DEFAULT_CAP
) -> tuple[int, Matching]:
    """Size and witness of a maximum-size stable critical feasible set."""
    weights = per_edge_critical_weight(instance)
    feasible = list(enumerate_feasible(instance, cap))
    opt = max(sum(weights[eid] for eid in m.edge_ids) for m in feasible)
    candidates = [
        m for m in feasible if sum(weights[eid] for eid in m.edge_ids) == opt
    ]
    candidates.sort(key=lambda m: (-len(m.edge_ids), sorted(m.edge_ids)))
    for m in candidates:
        if _is_stable(instance, m, opt):
            return len(m.edge_ids), m
    raise RuntimeError("no stable critical set exists; this contradicts the model")


def ratio_harness(
    seed_count: int, params: GenParams = GenParams(), cap: int = DEFAULT_CAP
) -> list[RatioReport]:
    """Generate, solve, certify, and ratio-check one instance per seed.

    Reports are returned in seed order.  Solver outputs that fail
    certification raise RuntimeError (the guarantees say this cannot
    happen); a ratio violation is only recorded in its report.
    """
    if params.edge_count > cap:
        raise CapExceededError(
            f"params.edge_count {params.edge_count} exceeds the cap of {cap}"
        )
    reports: list[RatioReport] = []
    for seed in range(seed_count):
        instance = generate(seed, params)
        result = solve(instance)
        cert = certify(instance, result.matching, cap)
        if not cert.is_cgamma_stable:
            raise RuntimeError(
                f"solver output failed certification on seed {seed}: {cert.to_obj()}"
            )
        if instance.is_one_to_one:
            alt = solve(instance, engine="kernel")
            if alt.matching != result.matching:
                raise RuntimeError(f"engine disagreement on seed {seed}")
        opt_size, _ = max_cgamma_stable(instance, cap)
        alg_size = len(result.matching.edge_ids)
        reports.append(
            RatioReport(
                alg_size=alg_size,
                opt_stable_size=opt_size,
                ratio_ok=2 * opt_size <= 3 * alg_size,
            )
        )
    return reports
