"""Matroid specs, independence oracles, and the standard constructions.

Specs are the serializable descriptions (capacity, laminar family,
explicit family); oracles answer membership queries and back the kernel
engine and the brute-force verifier.  Capacity and laminar oracles have
closed-form O(|S|) tests; explicit oracles consult the downward closure of
the listed sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

#: largest explicit ground set we will exhaustively axiom-check at load
EXPLICIT_CHECK_LIMIT = 16


@dataclass(frozen=True)
class CapacitySpec:
    """Uniform matroid: independent iff |S| <= q."""

    q: int


@dataclass(frozen=True)
class LaminarSpec:
    """Laminar matroid: independent iff |S ∩ L| <= quota for every (L, quota)."""

    sets: tuple[tuple[frozenset[int], int], ...]

    def __post_init__(self) -> None:
        canonical = tuple(
            sorted(
                ((frozenset(m), q) for m, q in self.sets),
                key=lambda item: (sorted(item[0]), item[1]),
            )
        )
        object.__setattr__(self, "sets", canonical)


@dataclass(frozen=True)
class ExplicitSpec:
    """Downward closure of an explicitly listed family of independent sets."""

    independent_sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        canonical = tuple(
            sorted((frozenset(s) for s in self.independent_sets), key=sorted)
        )
        object.__setattr__(self, "independent_sets", canonical)


MatroidSpec = CapacitySpec | LaminarSpec | ExplicitSpec


def validate_spec(spec: MatroidSpec, ground: frozenset[int]) -> list[str]:
    """Return the list of violations of `spec` over `ground` (empty = valid)."""
    problems: list[str] = []
    if isinstance(spec, CapacitySpec):
        if spec.q < 0:
            problems.append(f"capacity must be >= 0, got {spec.q}")
    elif isinstance(spec, LaminarSpec):
        for members, quota in spec.sets:
            if quota < 0:
                problems.append(f"laminar quota must be >= 0, got {quota}")
            if not members <= ground:
                problems.append(f"laminar set {sorted(members)} not within ground set")
        for (a, _), (b, _) in combinations(spec.sets, 2):
            if a & b and not (a <= b or b <= a):
                problems.append(
                    f"laminar sets {sorted(a)} and {sorted(b)} overlap without nesting"
                )
    elif isinstance(spec, ExplicitSpec):
        problems.extend(_validate_explicit(spec, ground))
    else:
        problems.append(f"unknown matroid spec {type(spec).__name__}")
    return problems


def _validate_explicit(spec: ExplicitSpec, ground: frozenset[int]) -> list[str]:
    problems: list[str] = []
    if not spec.independent_sets:
        problems.append("explicit matroid must list at least one independent set")
        return problems
    for s in spec.independent_sets:
        if not s <= ground:
            problems.append(f"explicit set {sorted(s)} not within ground set")
    if problems:
        return problems
    if len(ground) > EXPLICIT_CHECK_LIMIT:
        problems.append(
            f"explicit matroid over {len(ground)} elements exceeds the "
            f"axiom-check limit of {EXPLICIT_CHECK_LIMIT}"
        )
        return problems
    # Downward closure holds by construction; the exchange axiom does not.
    family = _closure(spec.independent_sets)
    for a in family:
        for b in family:
            if len(a) < len(b) and not any(a | {x} in family for x in b - a):
                problems.append(
                    f"exchange axiom fails for {sorted(a)} and {sorted(b)}"
                )
                return problems
    return problems


def _closure(sets: Iterable[frozenset[int]]) -> set[frozenset[int]]:
    family: set[frozenset[int]] = set()
    stack = [frozenset(s) for s in sets]
    while stack:
        s = stack.pop()
        if s in family:
            continue
        family.add(s)
        stack.extend(s - {x} for x in s)
    return family


class IndependenceOracle:
    """Membership interface: a ground set plus an independence query."""

    ground: frozenset[int]

    def independent(self, subset: Iterable[int]) -> bool:
        raise NotImplementedError


class CapacityOracle(IndependenceOracle):
    def __init__(self, ground: Iterable[int], q: int):
        self.ground = frozenset(ground)
        self.q = q

    def independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return len(s) <= self.q and s <= self.ground


class LaminarOracle(IndependenceOracle):
    def __init__(self, ground: Iterable[int], sets: Iterable[tuple[frozenset[int], int]]):
        self.ground = frozenset(ground)
        self.sets = tuple(sets)

    def independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if not s <= self.ground:
            return False
        return all(len(s & members) <= quota for members, quota in self.sets)


class ExplicitOracle(IndependenceOracle):
    def __init__(self, ground: Iterable[int], independent_sets: Iterable[frozenset[int]]):
        self.ground = frozenset(ground)
        self.family = tuple(frozenset(s) for s in independent_sets)

    def independent(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return s <= self.ground and any(s <= t for t in self.family)


def build_oracle(spec: MatroidSpec, ground: Iterable[int]) -> IndependenceOracle:
    """Instantiate the oracle for `spec` over the given ground set."""
    if isinstance(spec, CapacitySpec):
        return CapacityOracle(ground, spec.q)
    if isinstance(spec, LaminarSpec):
        return LaminarOracle(ground, spec.sets)
    if isinstance(spec, ExplicitSpec):
        return ExplicitOracle(ground, spec.independent_sets)
    raise TypeError(f"unknown matroid spec {type(spec).__name__}")


# -- derived quantities ----------------------------------------------------


def rank(oracle: IndependenceOracle) -> int:
    """Size of a maximal independent set, grown greedily over sorted ground."""
    chosen: set[int] = set()
    for x in sorted(oracle.ground):
        if oracle.independent(chosen | {x}):
            chosen.add(x)
    return len(chosen)


def fundamental_circuit(
    oracle: IndependenceOracle, independent: Iterable[int], x: int
) -> frozenset[int] | None:
    """The unique circuit of `independent` + x, or None if it stays independent.

    Uses single-removal probing: y belongs to the circuit exactly when
    removing y from I + x restores independence.
    """
    base = frozenset(independent)
    if x in base:
        raise ValueError(f"element {x} already in the independent set")
    if not oracle.independent(base):
        raise ValueError("fundamental_circuit requires an independent set")
    extended = base | {x}
    if oracle.independent(extended):
        return None
    return frozenset({x} | {y for y in base if oracle.independent(extended - {y})})


def optimal_base(oracle: IndependenceOracle, order: Iterable[int]) -> frozenset[int]:
    """Greedy base for a total order listed best element first."""
    order = list(order)
    if set(order) != set(oracle.ground) or len(order) != len(oracle.ground):
        raise ValueError("order must list every ground element exactly once")
    chosen: set[int] = set()
    for x in order:
        if oracle.independent(chosen | {x}):
            chosen.add(x)
    return frozenset(chosen)


# -- constructions ----------------------------------------------------------


class _DirectSumOracle(IndependenceOracle):
    def __init__(self, a: IndependenceOracle, b: IndependenceOracle):
        self.a, self.b = a, b
        self.ground = a.ground | b.ground

    def independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return self.a.independent(s & self.a.ground) and self.b.independent(
            s & self.b.ground
        )


class _TruncationOracle(IndependenceOracle):
    def __init__(self, inner: IndependenceOracle, k: int):
        self.inner, self.k = inner, k
        self.ground = inner.ground

    def independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return len(s) <= self.k and self.inner.independent(s)


class _DeletionOracle(IndependenceOracle):
    def __init__(self, inner: IndependenceOracle, removed: frozenset[int]):
        self.inner = inner
        self.ground = inner.ground - removed

    def independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return s <= self.ground and self.inner.independent(s)


class _ContractionOracle(IndependenceOracle):
    def __init__(self, inner: IndependenceOracle, fixed: frozenset[int]):
        self.inner, self.fixed = inner, fixed
        self.ground = inner.ground - fixed

    def independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return s <= self.ground and self.inner.independent(s | self.fixed)


def direct_sum(a: IndependenceOracle, b: IndependenceOracle) -> IndependenceOracle:
    if a.ground & b.ground:
        raise ValueError("direct sum requires disjoint ground sets")
    return _DirectSumOracle(a, b)


def truncate(a: IndependenceOracle, k: int) -> IndependenceOracle:
    if k < 0:
        raise ValueError("truncation size must be >= 0")
    return _TruncationOracle(a, k)


def delete(a: IndependenceOracle, removed: Iterable[int]) -> IndependenceOracle:
    return _DeletionOracle(a, frozenset(removed))


def contract(a: IndependenceOracle, fixed: Iterable[int]) -> IndependenceOracle:
    fixed = frozenset(fixed)
    if not fixed <= a.ground:
        raise ValueError("contraction set must lie in the ground set")
    if not a.independent(fixed):
        raise ValueError("contraction requires an independent set")
    return _ContractionOracle(a, fixed)
