import random
from itertools import combinations

import pytest

from critmatch.matroid import (
    CapacitySpec,
    ExplicitSpec,
    LaminarSpec,
    build_oracle,
    contract,
    delete,
    direct_sum,
    fundamental_circuit,
    optimal_base,
    rank,
    truncate,
    validate_spec,
)


def uniform(k, n):
    """U_{k,n} as an explicit spec over ground 0..n-1."""
    ground = frozenset(range(n))
    sets = tuple(frozenset(c) for c in combinations(range(n), k))
    return build_oracle(ExplicitSpec(sets), ground)


def random_graphic_oracle(rng, n_vertices=4, n_edges=6):
    """Graphic matroid of a random multigraph: independent = acyclic."""
    edges = [
        (rng.randrange(n_vertices), rng.randrange(n_vertices)) for _ in range(n_edges)
    ]
    edges = [(a, b) for a, b in edges if a != b]
    ground = frozenset(range(len(edges)))

    def acyclic(subset):
        parent = list(range(n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for eid in subset:
            a, b = edges[eid]
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    independent = tuple(
        frozenset(s)
        for r in range(len(edges) + 1)
        for s in combinations(range(len(edges)), r)
        if acyclic(s)
    )
    spec = ExplicitSpec(independent)
    assert not validate_spec(spec, ground)
    return build_oracle(spec, ground)


def all_subsets(ground):
    items = sorted(ground)
    for r in range(len(items) + 1):
        yield from (frozenset(c) for c in combinations(items, r))


# -- specs and axiom validation ------------------------------------------------


def test_capacity_and_laminar_specs_validate():
    assert not validate_spec(CapacitySpec(2), frozenset({1, 2, 3}))
    assert validate_spec(CapacitySpec(-1), frozenset())
    nested = LaminarSpec(((frozenset({0, 1}), 1), (frozenset({0, 1, 2}), 2)))
    assert not validate_spec(nested, frozenset({0, 1, 2}))
    crossing = LaminarSpec(((frozenset({0, 1}), 1), (frozenset({1, 2}), 1)))
    assert validate_spec(crossing, frozenset({0, 1, 2}))


def test_explicit_axiom_check_rejects_non_matroids():
    # {a,b} and {c} alone: exchange fails between {c} and {a,b}
    bad = ExplicitSpec((frozenset({0, 1}), frozenset({2})))
    assert validate_spec(bad, frozenset({0, 1, 2}))
    good = ExplicitSpec((frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})))
    assert not validate_spec(good, frozenset({0, 1, 2}))


def test_explicit_axioms_hold_for_generated_matroids():
    rng = random.Random(7)
    for _ in range(10):
        oracle = random_graphic_oracle(rng)
        assert oracle.independent(frozenset())
        # downward closure on all subsets
        for s in all_subsets(oracle.ground):
            if oracle.independent(s):
                assert all(oracle.independent(s - {x}) for x in s)


# -- rank ----------------------------------------------------------------------


def test_rank_examples():
    assert rank(build_oracle(CapacitySpec(3), frozenset(range(5)))) == 3
    laminar = LaminarSpec(((frozenset({0, 1, 2, 3}), 2),))
    assert rank(build_oracle(laminar, frozenset(range(4)))) == 2
    oracle = uniform(2, 3)
    exhaustive = max(len(s) for s in all_subsets(oracle.ground) if oracle.independent(s))
    assert rank(oracle) == exhaustive == 2


# -- fundamental circuits --------------------------------------------------------


def test_fundamental_circuit_capacity_one():
    oracle = build_oracle(CapacitySpec(1), frozenset({0, 1}))
    assert fundamental_circuit(oracle, {0}, 1) == frozenset({0, 1})


def test_fundamental_circuit_none_when_still_independent():
    oracle = build_oracle(CapacitySpec(2), frozenset({0, 1}))
    assert fundamental_circuit(oracle, {0}, 1) is None


def test_fundamental_circuit_matches_minimal_dependent_scan():
    oracle = uniform(2, 3)
    circuit = fundamental_circuit(oracle, {0, 1}, 2)
    # independent oracle: smallest dependent subsets of {0,1,2} containing 2
    dependents = [
        s
        for s in all_subsets(frozenset({0, 1, 2}))
        if 2 in s and not oracle.independent(s)
    ]
    minimal = {s for s in dependents if not any(t < s for t in dependents)}
    assert minimal == {frozenset({0, 1, 2})}
    assert circuit == frozenset({0, 1, 2})


def test_fundamental_circuit_rejects_dependent_input():
    oracle = build_oracle(CapacitySpec(1), frozenset({0, 1, 2}))
    with pytest.raises(ValueError):
        fundamental_circuit(oracle, {0, 1}, 2)


# -- optimal base -----------------------------------------------------------------


def test_optimal_base_examples():
    oracle = build_oracle(CapacitySpec(2), frozenset({0, 1, 2}))
    assert optimal_base(oracle, [0, 1, 2]) == frozenset({0, 1})
    empty = build_oracle(CapacitySpec(1), frozenset())
    assert optimal_base(empty, []) == frozenset()
    with pytest.raises(ValueError):
        optimal_base(oracle, [0, 1])


def test_optimal_base_matches_max_weight_brute_force():
    rng = random.Random(11)
    for _ in range(10):
        oracle = random_graphic_oracle(rng)
        order = sorted(oracle.ground)
        rng.shuffle(order)
        greedy = optimal_base(oracle, order)
        weight = {x: 2 ** (len(order) - pos) for pos, x in enumerate(order)}
        bases = [
            s
            for s in all_subsets(oracle.ground)
            if oracle.independent(s)
            and not any(
                oracle.independent(s | {x}) for x in oracle.ground - s
            )
        ]
        best = max(bases, key=lambda s: sum(weight[x] for x in s))
        assert greedy == best


def test_optimal_base_worst_in_circuit_characterization():
    rng = random.Random(13)
    for _ in range(10):
        oracle = random_graphic_oracle(rng)
        order = sorted(oracle.ground)
        rng.shuffle(order)
        pos = {x: k for k, x in enumerate(order)}
        base = optimal_base(oracle, order)
        for x in oracle.ground - base:
            circuit = fundamental_circuit(oracle, base, x)
            assert circuit is not None
            assert max(circuit, key=pos.__getitem__) == x


# -- constructions -----------------------------------------------------------------


def test_direct_sum_example():
    a = build_oracle(CapacitySpec(1), frozenset({0, 1}))
    b = build_oracle(CapacitySpec(1), frozenset({2, 3}))
    both = direct_sum(a, b)
    assert both.independent({0, 2})
    assert not both.independent({0, 1})
    assert rank(both) == rank(a) + rank(b)
    with pytest.raises(ValueError):
        direct_sum(a, a)


def test_truncation_example():
    oracle = truncate(build_oracle(CapacitySpec(3), frozenset(range(4))), 2)
    assert not oracle.independent({0, 1, 2})
    assert oracle.independent({0, 1})
    assert rank(oracle) == 2


def test_deletion_and_contraction_match_definitions():
    base = uniform(2, 4)
    removed = delete(base, {3})
    assert removed.ground == frozenset({0, 1, 2})
    for s in all_subsets(removed.ground):
        assert removed.independent(s) == base.independent(s)

    contracted = contract(base, {0})
    assert contracted.ground == frozenset({1, 2, 3})
    for s in all_subsets(contracted.ground):
        assert contracted.independent(s) == base.independent(s | {0})
    assert contracted.independent({1})
    assert not contracted.independent({1, 2})

    full = build_oracle(CapacitySpec(1), frozenset({0, 1}))
    with pytest.raises(ValueError):
        contract(full, {0, 1})


def test_constructions_match_subset_filters_on_random_matroids():
    rng = random.Random(17)
    for _ in range(5):
        oracle = random_graphic_oracle(rng)
        ground = sorted(oracle.ground)
        if len(ground) < 2:
            continue
        k = rng.randint(0, len(ground))
        trunc = truncate(oracle, k)
        for s in all_subsets(oracle.ground):
            assert trunc.independent(s) == (oracle.independent(s) and len(s) <= k)
        j = {ground[0]}
        if oracle.independent(j):
            contr = contract(oracle, j)
            for s in all_subsets(contr.ground):
                assert contr.independent(s) == oracle.independent(s | j)
