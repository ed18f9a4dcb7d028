"""Matroid-kernel deferred acceptance over the extended instance.

Two-sided greedy fixed point: every U vertex proposes its greedy-optimal
independent set of the copies it has not yet lost; every W vertex keeps the
greedy-optimal independent subset of what it holds plus the new offers, and
everything it turns down is gone for good.  The loop stops when a full
round removes nothing.  The result is a stable common independent set: each
outside copy is dominated on at least one side (its addition creates a
circuit made of strictly better copies).
"""

from __future__ import annotations

from .duplication import ExtendedInstance
from .model import Side, VertexRef


def solve_kernel(ext: ExtendedInstance) -> frozenset[int]:
    """Stable common independent set of the extended instance, as copy ids."""
    chosen, _ = _run_kernel(ext)
    return chosen


def _run_kernel(ext: ExtendedInstance) -> tuple[frozenset[int], int]:
    inst = ext.instance
    oracle_u = [ext.ext_constraints[VertexRef(Side.U, i)] for i in range(inst.u_count)]
    oracle_w = [ext.ext_constraints[VertexRef(Side.W, j)] for j in range(inst.w_count)]

    available = [True] * len(ext.copies)
    held: list[set[int]] = [set() for _ in range(inst.w_count)]
    max_rounds = len(ext.copies) + 2

    for rounds in range(1, max_rounds + 1):
        offers: list[set[int]] = [set(h) for h in held]
        for u in range(inst.u_count):
            chosen: list[int] = []
            oracle = oracle_u[u]
            for cid in ext.rank_u[u]:
                if available[cid] and oracle.independent(chosen + [cid]):
                    chosen.append(cid)
            for cid in chosen:
                offers[ext.copy_w[cid]].add(cid)

        rejected_any = False
        for w in range(inst.w_count):
            candidates = offers[w]
            chosen = []
            oracle = oracle_w[w]
            for cid in ext.rank_w[w]:
                if cid in candidates and oracle.independent(chosen + [cid]):
                    chosen.append(cid)
            for cid in candidates.difference(chosen):
                available[cid] = False
                rejected_any = True
            held[w] = set(chosen)

        if not rejected_any:
            chosen = frozenset().union(*held) if held else frozenset()
            return chosen, rounds

    raise RuntimeError("kernel fixed point did not terminate")  # pragma: no cover
