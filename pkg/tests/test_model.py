import pytest

from critmatch import (
    CapacitySpec,
    GenParams,
    Matching,
    Side,
    VertexRef,
    criticality_score,
    generate,
    is_feasible,
    normalize,
    validate,
)
from critmatch.model import per_edge_critical_weight
from critmatch.values import INFINITY

from helpers import V, mk_edge, mk_instance


def test_validate_rejects_gamma_equal_delta():
    inst = mk_instance(1, 1, [mk_edge(0, 0, 0, 1, 1, gammas=(1, 1))])
    report = validate(inst)
    assert any("gamma < delta" in v for v in report.violations)


def test_validate_accepts_well_formed_instance():
    edges = [mk_edge(0, 0, 0, 1, 2), mk_edge(1, 1, 1, 2, 1)]
    assert validate(mk_instance(2, 2, edges)).ok


def test_validate_rejects_negative_preference():
    inst = mk_instance(1, 1, [mk_edge(0, 0, 0, "-1", 1)])
    assert any("nonnegative" in v for v in validate(inst).violations)


def test_validate_infinity_rules():
    free = mk_edge(0, 0, 0, 1, 1, gammas=(INFINITY, INFINITY))
    assert validate(mk_instance(1, 1, [free])).ok
    half_free = mk_edge(0, 0, 0, 1, 1, gammas=(INFINITY, 3))
    assert not validate(mk_instance(1, 1, [half_free])).ok
    finite_below_inf = mk_edge(0, 0, 0, 1, 1, gammas=(1, INFINITY))
    assert validate(mk_instance(1, 1, [finite_below_inf])).ok


def test_validate_rejects_structural_problems():
    out_of_range = mk_instance(1, 1, [mk_edge(0, 0, 3, 1, 1)])
    assert not validate(out_of_range).ok
    sparse_ids = mk_instance(1, 1, [mk_edge(5, 0, 0, 1, 1)])
    assert any("dense" in v for v in validate(sparse_ids).violations)
    dup = mk_instance(1, 1, [mk_edge(0, 0, 0, 1, 1), mk_edge(0, 0, 0, 1, 1)])
    assert any("duplicate" in v for v in validate(dup).violations)
    bad_constraint = mk_instance(
        1, 1, [mk_edge(0, 0, 0, 1, 1)], constraints={VertexRef(Side.U, 4): CapacitySpec(1)}
    )
    assert not validate(bad_constraint).ok


def test_normalize_demotes_orphan_critical_edges():
    inst = mk_instance(1, 1, [mk_edge(0, 0, 0, 1, 1, critical=True)])
    fixed = normalize(inst)
    assert not fixed.edges[0].critical


def test_normalize_fixed_points():
    crit = {VertexRef(Side.U, 0), VertexRef(Side.W, 0)}
    all_crit = mk_instance(
        1, 1, [mk_edge(0, 0, 0, 1, 1, critical=True)], critical_vertices=crit
    )
    assert normalize(all_crit) == all_crit
    no_crit = mk_instance(1, 1, [mk_edge(0, 0, 0, 1, 1)])
    assert normalize(no_crit) == no_crit


def test_normalize_idempotent_on_random_instances():
    for seed in range(50):
        inst = generate(seed, GenParams())
        assert normalize(inst) == inst  # generate() already normalizes
        raw = generate(seed, GenParams(crit_vertex_prob=0.1, crit_edge_prob=0.9))
        assert normalize(normalize(raw)) == normalize(raw)


def test_criticality_score_trivial_cases():
    inst = mk_instance(1, 1, [mk_edge(0, 0, 0, 1, 1)])
    assert criticality_score(inst, Matching.of([0])) == 0  # C empty

    crit = {VertexRef(Side.U, 0), VertexRef(Side.W, 0)}
    inst2 = mk_instance(
        1, 1, [mk_edge(0, 0, 0, 1, 1, critical=True)], critical_vertices=crit
    )
    assert criticality_score(inst2, Matching.of([0])) == 2


def test_criticality_score_matches_incidence_recount():
    for seed in range(30):
        inst = generate(seed, GenParams(u_count=4, w_count=4, edge_count=8))
        m = Matching.of(
            eid for eid in _greedy_matching(inst)
        )
        score = criticality_score(inst, m)
        # independent recount: sum over critical vertices of incident matched
        # critical edges
        recount = 0
        for v in inst.critical_vertices:
            for e in inst.edges:
                if e.id in m.edge_ids and e.critical and e.endpoint(v.side) == v:
                    recount += 1
        assert score == recount


def _greedy_matching(inst):
    used = set()
    for e in inst.edges:
        if e.u not in used and e.w not in used:
            used.add(e.u)
            used.add(e.w)
            yield e.id


def test_criticality_score_rejects_infeasible():
    inst = mk_instance(1, 2, [mk_edge(0, 0, 0, 1, 1), mk_edge(1, 0, 1, 1, 1)])
    with pytest.raises(ValueError):
        criticality_score(inst, Matching.of([0, 1]))  # shares U0
    assert not is_feasible(inst, Matching.of([7]))


def test_per_edge_critical_weight():
    crit = {VertexRef(Side.U, 0)}
    inst = mk_instance(
        1,
        2,
        [
            mk_edge(0, 0, 0, 1, 1, critical=True),
            mk_edge(1, 0, 1, 1, 1, critical=False),
        ],
        critical_vertices=crit,
    )
    assert per_edge_critical_weight(inst) == {0: 1, 1: 0}


def test_score_bounds_on_generated_instances():
    from critmatch.duplication import rank_sums
    from critmatch.verify import enumerate_feasible

    for seed in range(20):
        inst = generate(seed, GenParams(u_count=3, w_count=3, edge_count=6))
        s, t = rank_sums(inst)
        crit_edges = sum(1 for e in inst.edges if e.critical)
        for m in enumerate_feasible(inst):
            score = criticality_score(inst, m)
            assert 0 <= score <= min(s + t, 2 * crit_edges)
