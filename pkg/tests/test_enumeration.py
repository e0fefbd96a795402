"""Enumeration completeness, determinism, ranking, and the inequality suite."""

import pytest
from helpers import brute_isomorphic

from hyperspec import (
    FamilySpec,
    IterationOptions,
    canonical_form,
    enumerate_linear_unicyclic,
    family,
    make_hypergraph,
    rank_by_rho,
    structural_profile,
    verify_suite,
)


def test_m3_is_just_the_triangle_power(pool_by_m):
    pool = pool_by_m[3]
    assert len(pool) == 1
    assert canonical_form(pool[0]) == canonical_form(
        family(FamilySpec(tag="CyclePower", k=3, m=3, g=3)))


def test_m4_count_and_members(pool_by_m):
    pool = pool_by_m[4]
    assert len(pool) == 3
    forms = {canonical_form(h) for h in pool}
    assert canonical_form(family(FamilySpec(tag="CyclePower", k=3, m=4, g=4))) in forms
    assert canonical_form(family(FamilySpec(tag="S", k=3, m=4, g=3))) in forms
    assert canonical_form(family(FamilySpec(tag="O", k=3, m=4))) in forms


def test_m4_against_labeled_generation_oracle(pool_by_m):
    """Independent route: grow labeled candidates without any canonical
    machinery and partition them by brute-force isomorphism."""
    c3 = family(FamilySpec(tag="CyclePower", k=3, m=3, g=3))
    c4 = family(FamilySpec(tag="CyclePower", k=3, m=4, g=4))
    candidates = [c4]
    for v in range(c3.n):
        edge = (v, c3.n, c3.n + 1)
        candidates.append(make_hypergraph(3, list(c3.edges) + [edge]))
    classes = []
    for h in candidates:
        if not any(brute_isomorphic(h, rep) for rep in classes):
            classes.append(h)
    assert len(classes) == 3
    # 1:1 match with the enumerated pool
    pool = pool_by_m[4]
    for rep in classes:
        assert sum(1 for h in pool if brute_isomorphic(rep, h)) == 1


def test_m5_count_and_family_membership(pool_by_m):
    pool = pool_by_m[5]
    assert len(pool) == 11
    forms = {canonical_form(h) for h in pool}
    for tag, g in [("S", 3), ("S", 4), ("S", 5), ("T1", None), ("U1", None),
                   ("O", None), ("P", None), ("Q", None)]:
        spec = FamilySpec(tag=tag, k=3, m=5, g=g)
        assert canonical_form(family(spec)) in forms, (tag, g)


def test_m6_family_membership(pool_by_m):
    pool = pool_by_m[6]
    assert len(pool) == 41
    forms = {canonical_form(h) for h in pool}
    for tag, g in [("S", 3), ("S", 4), ("T1", None), ("T2", None), ("U1", None),
                   ("O", None), ("P", None), ("Q", None)]:
        spec = FamilySpec(tag=tag, k=3, m=6, g=g)
        assert canonical_form(family(spec)) in forms, (tag, g)


def test_pool_instances_are_linear_unicyclic(pool_by_m):
    for m, pool in pool_by_m.items():
        for h in pool:
            prof = structural_profile(h)
            assert prof.classification == "unicyclic"
            assert prof.connected and prof.linear
            assert h.m == m
            assert h.n == m * (h.k - 1)
        # pairwise distinct canonical forms
        forms = [canonical_form(h) for h in pool]
        assert len(set(forms)) == len(forms)
        assert forms == sorted(forms)


def test_enumeration_domain_errors():
    with pytest.raises(ValueError, match="fewer than 3"):
        enumerate_linear_unicyclic(3, 2)
    with pytest.raises(ValueError, match="k >= 3"):
        enumerate_linear_unicyclic(2, 4)
    with pytest.raises(ValueError, match="allow_large"):
        enumerate_linear_unicyclic(3, 7)
    with pytest.raises(RuntimeError, match="cap exceeded"):
        enumerate_linear_unicyclic(3, 5, cap=5)


def test_shuffled_expansion_order_is_irrelevant(pool_by_m):
    base = [(h.k, h.edges) for h in pool_by_m[5]]
    for seed in (1, 2):
        shuffled = enumerate_linear_unicyclic(3, 5, _shuffle_seed=seed)
        assert [(h.k, h.edges) for h in shuffled] == base


def test_parallel_jobs_match_sequential(pool_by_m):
    parallel = enumerate_linear_unicyclic(3, 5, jobs=2)
    assert [(h.k, h.edges) for h in parallel] == [(h.k, h.edges) for h in pool_by_m[5]]


def test_k4_m5_count():
    pool = enumerate_linear_unicyclic(4, 5)
    assert len(pool) == 12
    for h in pool:
        assert structural_profile(h).classification == "unicyclic"


def test_rank_top_two_at_m5(pool_by_m):
    entries = rank_by_rho(pool_by_m[5])
    s53 = canonical_form(family(FamilySpec(tag="S", k=3, m=5, g=3))).decode()
    t15 = canonical_form(family(FamilySpec(tag="T1", k=3, m=5))).decode()
    assert entries[0].canonical_id == s53
    assert entries[1].canonical_id == t15
    assert entries[0].rho - entries[1].rho > 1e-6
    assert entries[1].rho - entries[2].rho > 1e-6
    assert not entries[0].tied


def test_rank_marks_exact_ties():
    h = family(FamilySpec(tag="CyclePower", k=3, m=3, g=3))
    entries = rank_by_rho([h, h])
    assert [e.rank for e in entries] == [1, 1]
    assert all(e.tied for e in entries)


def test_strict_order_on_family_values(rho_of):
    """Strict order among the named families, using only the pairs the
    ordering argument actually establishes: S > T1 > Q > max(U1, P) and
    P > O > S(m,4).  The U1-P pair is deliberately not asserted: it flips
    direction at m = 8."""
    for m in range(5, 7):
        val = {
            "S3": rho_of(family(FamilySpec(tag="S", k=3, m=m, g=3))).rho,
            "S4": rho_of(family(FamilySpec(tag="S", k=3, m=m, g=4))).rho,
            "T1": rho_of(family(FamilySpec(tag="T1", k=3, m=m))).rho,
            "U1": rho_of(family(FamilySpec(tag="U1", k=3, m=m))).rho,
            "P": rho_of(family(FamilySpec(tag="P", k=3, m=m))).rho,
            "Q": rho_of(family(FamilySpec(tag="Q", k=3, m=m))).rho,
            "O": rho_of(family(FamilySpec(tag="O", k=3, m=m))).rho,
        }
        for hi, lo in [("S3", "T1"), ("T1", "Q"), ("Q", "U1"), ("Q", "P"),
                       ("P", "O"), ("O", "S4")]:
            assert val[hi] - val[lo] > 1e-6, (m, hi, lo)


def test_verify_suite_passes_at_small_m():
    reports = verify_suite(3, 5, 6)
    by_claim = {r.claim: r for r in reports}
    assert by_claim["Q<T1"].verdict == "pass"
    assert by_claim["P<Q"].verdict == "pass"
    assert by_claim["O<P"].verdict == "pass"
    assert by_claim["S4<O"].verdict == "pass"
    assert by_claim["U1<Q"].verdict == "pass"
    assert by_claim["S-girth-monotone"].verdict == "pass"
    assert by_claim["cross-method"].verdict == "pass"
    # domain gating: these need m >= 8
    assert by_claim["T2<U1"].verdict == "not-applicable"
    assert by_claim["Q-third-in-family-pool"].verdict == "not-applicable"


def test_verify_suite_marks_na_below_domain():
    reports = verify_suite(3, 4, 4)
    by_claim = {r.claim: r for r in reports}
    assert by_claim["S4<O"].verdict == "pass"
    assert all(i.status == "na" for i in by_claim["P<Q"].instances)
    assert by_claim["P<Q"].verdict == "not-applicable"


def test_verify_suite_rejects_empty_range():
    with pytest.raises(ValueError, match="empty"):
        verify_suite(3, 6, 5)


def test_verify_report_serialization():
    reports = verify_suite(3, 5, 5, IterationOptions(tolerance=1e-10))
    d = reports[0].to_json_dict()
    assert d["claim"] and d["verdict"] in ("pass", "fail", "not-applicable")
    assert all({"k", "m", "gap", "status"} <= set(i) for i in d["instances"])


@pytest.mark.bigpool
def test_third_place_at_m8_by_full_enumeration():
    """Best-effort full check: enumerate everything at m=8 and confirm the
    third-ranked class."""
    pool = enumerate_linear_unicyclic(3, 8, allow_large=True)
    entries = rank_by_rho(pool, IterationOptions(tolerance=1e-10))
    s83 = canonical_form(family(FamilySpec(tag="S", k=3, m=8, g=3))).decode()
    t18 = canonical_form(family(FamilySpec(tag="T1", k=3, m=8))).decode()
    q8 = canonical_form(family(FamilySpec(tag="Q", k=3, m=8))).decode()
    assert [e.canonical_id for e in entries[:3]] == [s83, t18, q8]
    assert entries[2].rho - entries[3].rho > 1e-6
