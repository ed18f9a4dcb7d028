"""Edge-based deferred acceptance on the strict-preference extended instance.

U vertices propose copies in preference order; a W vertex holds its best
offer so far.  Rejections are processed eagerly through a work queue, each
copy is proposed at most once, so the run is linear in the number of copies.
The result is the unique U-optimal stable matching of the extended instance.
"""

from __future__ import annotations

from collections import deque

from .duplication import ExtendedInstance
from .model import Matching


def solve_gs(ext: ExtendedInstance) -> frozenset[int]:
    """Stable set of copy ids; requires capacity-1 constraints throughout."""
    if not ext.all_unit:
        raise ValueError("solve_gs requires capacity-1 constraints; use solve_kernel")
    matched, _ = _run(ext)
    return matched


def _run(
    ext: ExtendedInstance, initial_order: list[int] | None = None
) -> tuple[frozenset[int], int]:
    inst = ext.instance
    pos_w: list[dict[int, int]] = [
        {cid: pos for pos, cid in enumerate(order)} for order in ext.rank_w
    ]
    cursor = [0] * inst.u_count
    held: list[int | None] = [None] * inst.w_count
    queue = deque(initial_order if initial_order is not None else range(inst.u_count))
    proposals = 0

    while queue:
        u = queue.popleft()
        order = ext.rank_u[u]
        while cursor[u] < len(order):
            cid = order[cursor[u]]
            cursor[u] += 1
            proposals += 1
            w = ext.copy_w[cid]
            current = held[w]
            if current is None:
                held[w] = cid
                break
            if pos_w[w][cid] < pos_w[w][current]:
                held[w] = cid
                queue.append(ext.copy_u[current])
                break
            # rejected; try the next copy on u's list

    return frozenset(cid for cid in held if cid is not None), proposals


def project(ext: ExtendedInstance, copies: frozenset[int]) -> Matching:
    """Map matched copies back to original edge ids."""
    known = len(ext.copies)
    for cid in copies:
        if not 0 <= cid < known:
            raise ValueError(f"unknown copy id {cid}")
    return Matching(frozenset(ext.copies[cid].orig for cid in copies))
