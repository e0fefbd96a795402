"""Scalar functions, root finders, and the closed-form incidence labelings."""

import pytest

from hyperspec import (
    FamilySpec,
    WeightedIncidence,
    build_B_O,
    build_B_P,
    build_B_Q_supernormal,
    check_normal,
    cycle_consistency,
    f_O,
    f_P,
    family,
    family_q_with_roles,
    gamma,
    phi,
    psi,
    rho_from_alpha,
    solve_alpha_O,
    solve_alpha_P,
    spectral_radius_tensor,
    weights_to_text,
)

ALPHA_O_R1 = 0.20512274384927082  # root of alpha = (1 - 2*alpha)^3


# --- scalar functions ---------------------------------------------------------

def test_f_p_hand_values():
    assert f_P(0.2, 1) == pytest.approx(1.0, abs=1e-15)
    assert f_P(0.2, 2) == pytest.approx(1.2, abs=1e-15)
    assert f_P(1e-9, 1) < 1e-8


def test_f_p_domain():
    with pytest.raises(ValueError):
        f_P(0.0, 1)
    with pytest.raises(ValueError):
        f_P(0.5, 1)
    with pytest.raises(ValueError):
        f_P(0.3, -1)


def test_f_o_domain():
    with pytest.raises(ValueError):
        f_O(1.0 / 3.0, 1)
    with pytest.raises(ValueError):
        f_O(0.0, 1)
    assert f_O(1e-9, 1) < 1e-8


def test_f_p_strictly_increasing_on_grid():
    lo, hi = 1e-6, 0.5 - 1e-6
    pts = [lo + (hi - lo) * i / 9999 for i in range(10000)]
    vals = [f_P(a, 1) for a in pts]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_f_o_strictly_increasing_on_grid():
    for r in (1, 3):
        hi = 1.0 / (r + 2)
        pts = [1e-6 + (hi - 2e-6) * i / 9999 for i in range(10000)]
        vals = [f_O(a, r) for a in pts]
        assert all(b > a for a, b in zip(vals, vals[1:]))


def test_solve_alpha_p_r1_is_one_fifth():
    a0 = solve_alpha_P(1)
    assert a0 == pytest.approx(0.2, abs=1e-13)
    assert abs(f_P(a0, 1) - 1.0) <= 1e-13


def test_solve_alpha_p_bounds():
    for r in range(1, 21):
        a0 = solve_alpha_P(r)
        assert a0 <= 0.2 + 1e-12
        assert a0 < 1.0 / (r + 2)


def test_solve_alpha_o_r1_matches_cubic_oracle():
    # at r=1 the root satisfies alpha = (1 - 2*alpha)^3; solve that directly
    lo, hi = 1e-12, 0.25
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if mid - (1.0 - 2.0 * mid) ** 3 < 0:
            lo = mid
        else:
            hi = mid
    oracle = 0.5 * (lo + hi)
    assert oracle == pytest.approx(ALPHA_O_R1, abs=1e-15)
    assert solve_alpha_O(1) == pytest.approx(oracle, abs=1e-12)


def test_solve_alpha_o_identity():
    # f_O(a)=1 forces r*a = 1 - a - a/(1-2a)^2
    for r in range(1, 11):
        a1 = solve_alpha_O(r)
        assert r * a1 == pytest.approx(
            1.0 - a1 - a1 / (1.0 - 2.0 * a1) ** 2, abs=1e-10)


def test_solve_alpha_o_domain_bound():
    for r in (1, 3, 10):
        assert solve_alpha_O(r) < 1.0 / (r + 2)


def test_alpha_p_below_alpha_o():
    for r in range(1, 21):
        assert solve_alpha_P(r) < solve_alpha_O(r)


def test_gamma_values():
    assert gamma(0.2) == pytest.approx(4.0 / 7.0, abs=1e-15)
    assert gamma(0.5) == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert gamma(1e-12) == pytest.approx(1.0, abs=1e-5)
    with pytest.raises(ValueError):
        gamma(1.0)


def test_phi_values():
    assert abs(phi(0.2) - 0.12) <= 1e-14
    assert phi(0.0) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ValueError):
        phi(1.5)


def test_phi_at_solved_alpha_stays_above_three_twentyfifths():
    for r in range(1, 21):
        assert phi(solve_alpha_P(r)) >= 3.0 / 25.0 - 1e-12


def test_psi_values():
    assert psi(0.2) == pytest.approx(0.04, abs=1e-15)
    assert psi(1e-6) > 0.0
    with pytest.raises(ValueError):
        psi(0.5)


def test_psi_sign_equivalence_on_grid():
    for i in range(1, 1001):
        a = 0.5 * i / 1001.0
        lhs = psi(a) > 0.0
        rhs = 1.0 - a - a / (1.0 - 2.0 * a) ** 2 > 0.0
        assert lhs == rhs


def test_rho_from_alpha():
    assert rho_from_alpha(1.0, 4) == pytest.approx(1.0)
    assert rho_from_alpha(0.2, 3) == pytest.approx(5.0 ** (1.0 / 3.0), abs=1e-15)
    assert rho_from_alpha(0.25, 2) == pytest.approx(2.0, abs=1e-15)
    with pytest.raises(ValueError):
        rho_from_alpha(0.0, 3)


# --- labelings ----------------------------------------------------------------

def test_build_p_normal_at_solved_alpha():
    rep = check_normal(build_B_P(5, 3, 0.2), 0.2)
    assert rep.mode == "normal"
    assert rep.cycle_product == pytest.approx(1.0, abs=1e-12)
    a2 = solve_alpha_P(2)
    rep6 = check_normal(build_B_P(6, 3, a2), a2)
    assert rep6.mode == "normal"


def test_build_p_wrong_alpha_is_strictly_supernormal():
    # every row but the hub is exactly 1 and every product is exactly alpha,
    # so an overweight hub row makes the labeling strictly supernormal
    rep = check_normal(build_B_P(5, 3, 0.4), 0.4)
    assert rep.mode == "supernormal-strict"
    assert max(rep.row_sums) > 1.0 + 1e-6
    assert sorted(rep.row_sums)[:-1] == pytest.approx([1.0] * 9, abs=1e-12)


def test_build_p_subnormal_alpha_is_neither():
    # alpha below the root starves the hub row
    rep = check_normal(build_B_P(5, 3, 0.1), 0.1)
    assert rep.mode == "neither"
    assert min(rep.row_sums) < 1.0 - 1e-6


def test_build_o_normal_and_consistent():
    a1 = solve_alpha_O(1)
    w = build_B_O(5, 3, a1)
    assert check_normal(w, a1).mode == "normal"
    assert cycle_consistency(w) == pytest.approx(1.0, abs=1e-12)


def test_build_o_r0_cross_check():
    a = solve_alpha_O(0)
    w = build_B_O(4, 3, a)
    assert check_normal(w, a).mode == "normal"
    rho = spectral_radius_tensor(family(FamilySpec(tag="O", k=3, m=4))).rho
    assert abs(rho - rho_from_alpha(a, 3)) <= 1e-8


def test_build_q_supernormal_certificate():
    w = build_B_Q_supernormal(5, 3, 0.2)
    rep = check_normal(w, 0.2)
    assert rep.mode == "supernormal-strict"
    assert cycle_consistency(w) == pytest.approx(1.0, abs=1e-12)
    h, roles = family_q_with_roles(3, 5)
    hub_row = rep.row_sums[roles.v2]
    assert hub_row == pytest.approx(1.0125, abs=1e-12)
    # hub slack in closed form
    a = 0.2
    expected = 1.0 + a * a / ((1 - a) ** 2 * (1 - 2 * a)) * phi(a)
    assert hub_row == pytest.approx(expected, abs=1e-12)
    # all other rows tight, all products tight
    others = [rep.row_sums[v] for v in range(h.n) if v != roles.v2]
    assert others == pytest.approx([1.0] * (h.n - 1), abs=1e-12)
    assert list(rep.edge_products) == pytest.approx([0.2] * h.m, abs=1e-12)


def test_q_certificate_places_q_above_p():
    bound = rho_from_alpha(solve_alpha_P(1), 3)
    rho_q = spectral_radius_tensor(family(FamilySpec(tag="Q", k=3, m=5))).rho
    assert rho_q > bound + 1e-6


@pytest.mark.parametrize("k", [3, 4])
@pytest.mark.parametrize("m", [5, 7, 9])
def test_certification_p_and_o(k, m):
    for tag, solver in (("P", solve_alpha_P), ("O", solve_alpha_O)):
        alpha = solver(m - 4)
        certified = rho_from_alpha(alpha, k)
        iterated = spectral_radius_tensor(family(FamilySpec(tag=tag, k=k, m=m))).rho
        assert abs(certified - iterated) <= 1e-8


def test_build_domain_errors():
    with pytest.raises(ValueError):
        build_B_P(4, 3, 0.2)
    with pytest.raises(ValueError):
        build_B_P(5, 3, 0.6)
    with pytest.raises(ValueError):
        build_B_O(5, 3, 0.4)  # needs alpha < 1/3 at r=1
    with pytest.raises(ValueError):
        build_B_Q_supernormal(5, 3, 0.3)


def test_weighted_incidence_validation():
    h = family(FamilySpec(tag="P", k=3, m=5))
    good = build_B_P(5, 3, 0.2)
    broken = dict(good.weights)
    broken.pop(next(iter(broken)))
    with pytest.raises(ValueError, match="missing"):
        WeightedIncidence(hypergraph=h, weights=broken)
    negative = dict(good.weights)
    negative[next(iter(negative))] = -1.0
    with pytest.raises(ValueError, match="positive"):
        WeightedIncidence(hypergraph=h, weights=negative)


def test_cycle_consistency_requires_unicyclic():
    from hyperspec import make_hypergraph

    h = make_hypergraph(3, [{0, 1, 2}])
    w = WeightedIncidence(hypergraph=h, weights={(0, 0): 1.0, (1, 0): 1.0, (2, 0): 1.0})
    with pytest.raises(ValueError, match="unicyclic"):
        cycle_consistency(w)


def test_cycle_consistency_detects_skew():
    a1 = solve_alpha_O(1)
    w = build_B_O(5, 3, a1)
    verts, eidx = __import__("hyperspec").unique_cycle(w.hypergraph)
    skew = dict(w.weights)
    skew[(verts[1], eidx[0])] *= 2.0
    w2 = WeightedIncidence(hypergraph=w.hypergraph, weights=skew)
    assert cycle_consistency(w2) in (pytest.approx(2.0), pytest.approx(0.5))


def test_symmetric_weights_on_cycle_are_consistent():
    h = family(FamilySpec(tag="CyclePower", k=3, m=3, g=3))
    weights = {}
    for j, e in enumerate(h.edges):
        for v in e:
            weights[(v, j)] = 0.5 if h.degrees[v] > 1 else 1.0
    w = WeightedIncidence(hypergraph=h, weights=weights)
    assert cycle_consistency(w) == pytest.approx(1.0, abs=1e-15)
    rep = check_normal(w, 0.25)
    assert rep.mode == "normal"


def test_single_edge_all_ones_is_normal_at_alpha_one():
    from hyperspec import make_hypergraph

    h = make_hypergraph(3, [{0, 1, 2}])
    w = WeightedIncidence(hypergraph=h, weights={(v, 0): 1.0 for v in range(3)})
    assert check_normal(w, 1.0).mode == "normal"


def test_weights_text_format():
    w = build_B_P(5, 3, 0.2)
    text = weights_to_text(w)
    lines = text.strip().splitlines()
    assert len(lines) == len(w.weights)
    v, j, value = lines[0].split()
    assert (int(v), int(j)) in w.weights
    assert float(value) == pytest.approx(w.weights[(int(v), int(j))])
    assert text == weights_to_text(build_B_P(5, 3, 0.2))


def test_check_normal_requires_connected():
    from hyperspec import make_hypergraph

    h = make_hypergraph(3, [{0, 1, 2}, {3, 4, 5}])
    weights = {(v, j): 1.0 for j, e in enumerate(h.edges) for v in e}
    w = WeightedIncidence(hypergraph=h, weights=weights)
    with pytest.raises(ValueError, match="connected"):
        check_normal(w, 1.0)
