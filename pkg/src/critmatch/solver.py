"""End-to-end pipeline: normalize, duplicate edges, run an engine, project."""

from __future__ import annotations

from dataclasses import dataclass

from .duplication import ExtendedInstance, build_general, build_simple
from .gale_shapley import project, solve_gs
from .kernel import solve_kernel
from .model import Instance, Matching, normalize


@dataclass(frozen=True)
class SolveResult:
    instance: Instance
    ext: ExtendedInstance
    copy_ids: frozenset[int]
    matching: Matching
    engine: str
    construction: str


def choose_construction(instance: Instance) -> str:
    """Simple construction exactly when every edge is critical after
    normalization, general otherwise."""
    normalized = normalize(instance)
    if all(e.critical for e in normalized.edges):
        return "simple"
    return "general"


def choose_engine(instance: Instance) -> str:
    return "gs" if instance.is_one_to_one else "kernel"


def solve(
    instance: Instance, engine: str = "auto", construction: str = "auto"
) -> SolveResult:
    """Solve a validated instance; `engine` and `construction` may be pinned."""
    normalized = normalize(instance)

    if construction == "auto":
        construction = choose_construction(normalized)
    if construction == "simple":
        ext = build_simple(normalized)
    elif construction == "general":
        ext = build_general(normalized)
    else:
        raise ValueError(f"unknown construction {construction!r}")

    if engine == "auto":
        engine = choose_engine(normalized)
    if engine == "gs":
        copy_ids = solve_gs(ext)
    elif engine == "kernel":
        copy_ids = solve_kernel(ext)
    else:
        raise ValueError(f"unknown engine {engine!r}")

    return SolveResult(
        instance=normalized,
        ext=ext,
        copy_ids=copy_ids,
        matching=project(ext, copy_ids),
        engine=engine,
        construction=construction,
    )
