"""Weighted-incidence certificates for hypergraph spectral radii.

A weighted incidence matrix assigns a positive weight B(v, e) to every
incident vertex-edge pair.  For a connected k-uniform hypergraph:

* if every vertex row sums to 1, every edge's weight product equals alpha,
  and the weight ratios multiply to 1 around the cycle ("consistent"), the
  spectral radius is exactly alpha^(-1/k);
* if row sums are >= 1 and edge products <= alpha, consistently and with
  some strict slack, the spectral radius strictly exceeds alpha^(-1/k).

This module provides the verifier plus the closed-form constructions for
the three triangle-based families: an exact labeling for P_m and O_m (the
root of a scalar equation in alpha), and a strictly slack labeling for Q_m
at P_m's alpha that certifies rho(Q_m) > rho(P_m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .families import family_o_with_roles, family_p_with_roles, family_q_with_roles
from .hypergraph import Hypergraph, structural_profile, unique_cycle

__all__ = [
    "WeightedIncidence",
    "NormalityReport",
    "check_normal",
    "cycle_consistency",
    "f_P",
    "f_O",
    "solve_alpha_P",
    "solve_alpha_O",
    "gamma",
    "phi",
    "psi",
    "rho_from_alpha",
    "build_B_P",
    "build_B_O",
    "build_B_Q_supernormal",
    "weights_to_text",
]

DEFAULT_CHECK_TOL = 1e-10
DEFAULT_SOLVE_TOL = 1e-13

# strictness margin: slack below 10x the check tolerance is not certified
_STRICT_FACTOR = 10.0


@dataclass(frozen=True)
class WeightedIncidence:
    """Positive weights on exactly the incident (vertex, edge-index) pairs."""

    hypergraph: Hypergraph
    weights: dict[tuple[int, int], float]

    def __post_init__(self) -> None:
        h = self.hypergraph
        expected = {(v, j) for j, e in enumerate(h.edges) for v in e}
        got = set(self.weights)
        if got != expected:
            missing = expected - got
            extra = got - expected
            raise ValueError(
                f"weights do not match incidences (missing {sorted(missing)[:3]}, "
                f"extra {sorted(extra)[:3]})"
            )
        for pair, w in self.weights.items():
            if not w > 0:
                raise ValueError(f"weight at {pair} must be positive, got {w}")

    def row_sum(self, v: int) -> float:
        return sum(self.weights[(v, j)] for j in self.hypergraph.incidence[v])

    def edge_product(self, j: int) -> float:
        out = 1.0
        for v in self.hypergraph.edges[j]:
            out *= self.weights[(v, j)]
        return out


@dataclass(frozen=True)
class NormalityReport:
    """Outcome of a normality check at a given alpha.

    mode is "normal" when all row sums are 1, all edge products equal
    alpha, and the cycle ratio product is 1 (within tol).  The supernormal
    modes require row sums >= 1, edge products <= alpha and consistency;
    "strict" means some row sum or product has slack beyond 10x tol so the
    strict spectral bound applies, "nonstrict" means the slack is too small
    to certify.  Everything else is "neither".
    """

    mode: str
    alpha: float
    tolerance: float
    row_sums: tuple[float, ...]
    edge_products: tuple[float, ...]
    cycle_product: float | None

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "alpha": self.alpha,
            "tolerance": self.tolerance,
            "row_sums": list(self.row_sums),
            "edge_products": list(self.edge_products),
            "cycle_product": self.cycle_product,
        }


def cycle_consistency(w: WeightedIncidence) -> float:
    """Product of B(v_i, e_i)/B(v_{i-1}, e_i) around the unique cycle.

    1.0 means consistent.  Raises ValueError unless the underlying
    hypergraph is linear unicyclic.
    """
    verts, eidx = unique_cycle(w.hypergraph)
    out = 1.0
    l = len(eidx)
    for i in range(l):
        tail = verts[i]
        head = verts[(i + 1) % l]
        out *= w.weights[(head, eidx[i])] / w.weights[(tail, eidx[i])]
    return out


def check_normal(w: WeightedIncidence, alpha: float, tol: float = DEFAULT_CHECK_TOL) -> NormalityReport:
    """Classify a weighted incidence matrix against the target alpha."""
    if not w.hypergraph.is_connected:
        raise ValueError("normality check needs a connected hypergraph")
    h = w.hypergraph
    rows = tuple(w.row_sum(v) for v in range(h.n))
    prods = tuple(w.edge_product(j) for j in range(h.m))
    profile = structural_profile(h)
    cyc = cycle_consistency(w) if profile.classification == "unicyclic" else None

    rows_eq = all(abs(r - 1.0) <= tol for r in rows)
    prods_eq = all(abs(p - alpha) <= tol for p in prods)
    consistent = cyc is None or abs(cyc - 1.0) <= tol
    super_rows = all(r >= 1.0 - tol for r in rows)
    super_prods = all(p <= alpha + tol for p in prods)
    strict_slack = any(r > 1.0 + _STRICT_FACTOR * tol for r in rows) or any(
        p < alpha - _STRICT_FACTOR * tol for p in prods
    )

    if rows_eq and prods_eq and consistent:
        mode = "normal"
    elif super_rows and super_prods and consistent:
        mode = "supernormal-strict" if strict_slack else "supernormal-nonstrict"
    else:
        mode = "neither"
    return NormalityReport(
        mode=mode,
        alpha=alpha,
        tolerance=tol,
        row_sums=rows,
        edge_products=prods,
        cycle_product=cyc,
    )


# --- scalar functions --------------------------------------------------------

def f_P(alpha: float, r: int) -> float:
    """Row sum at the max-degree vertex of the exact P-family labeling:
    2*alpha/(1 - sqrt(alpha/(1-alpha))) + r*alpha.  Strictly increasing on
    (0, 1/2); the labeling is alpha-normal exactly when this equals 1."""
    if r < 0:
        raise ValueError("pendant count r must be >= 0")
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"alpha={alpha} outside (0, 1/2)")
    beta = math.sqrt(alpha / (1.0 - alpha))
    return 2.0 * alpha / (1.0 - beta) + r * alpha


def f_O(alpha: float, r: int) -> float:
    """Row sum at the degree-2 cycle vertex of the exact O-family labeling:
    2*alpha/(1 - sqrt(alpha/(1-(r+1)*alpha))).  Strictly increasing on
    (0, 1/(r+2))."""
    if r < 0:
        raise ValueError("pendant count r must be >= 0")
    if not 0.0 < alpha < 1.0 / (r + 2):
        raise ValueError(f"alpha={alpha} outside (0, 1/(r+2)) for r={r}")
    beta = math.sqrt(alpha / (1.0 - (r + 1) * alpha))
    return 2.0 * alpha / (1.0 - beta)


def _bisect_to_one(fn, lo: float, hi: float, tol: float) -> float:
    """Root of fn(x) = 1 for fn strictly increasing with fn(lo) < 1 < fn(hi)."""
    while hi - lo > 1e-16:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if fn(mid) < 1.0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    if abs(fn(root) - 1.0) > tol:
        raise ArithmeticError(f"bisection landed at |f-1|={abs(fn(root)-1.0):.3e} > {tol}")
    return root


def solve_alpha_P(r: int, tol: float = DEFAULT_SOLVE_TOL) -> float:
    """Unique alpha in (0, 1/2) with f_P(alpha, r) = 1."""
    if r < 0:
        raise ValueError("pendant count r must be >= 0")
    eps = 1e-15
    return _bisect_to_one(lambda a: f_P(a, r), eps, 0.5 - eps, tol)


def solve_alpha_O(r: int, tol: float = DEFAULT_SOLVE_TOL) -> float:
    """Unique alpha in (0, 1/(r+2)) with f_O(alpha, r) = 1."""
    if r < 0:
        raise ValueError("pendant count r must be >= 0")
    eps = 1e-15
    hi = 1.0 / (r + 2)
    return _bisect_to_one(lambda a: f_O(a, r), eps, hi - eps * hi, tol)


def gamma(alpha: float) -> float:
    """(1-alpha)/(1 + sqrt(alpha*(1-alpha))): the unique cycle weight that
    makes the slack Q-family labeling consistent."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha={alpha} outside (0, 1)")
    return (1.0 - alpha) / (1.0 + math.sqrt(alpha * (1.0 - alpha)))


def phi(alpha: float) -> float:
    """-1 + 2*sqrt(1-alpha)*((1-alpha)^(3/2) - alpha^(3/2)); positivity of
    this quantity is what makes the Q-family row slack strictly positive."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha={alpha} outside [0, 1]")
    s = math.sqrt(1.0 - alpha)
    return -1.0 + 2.0 * s * ((1.0 - alpha) * s - alpha * math.sqrt(alpha))


def psi(alpha: float) -> float:
    """(1-2*alpha)*sqrt(alpha*(1-alpha)) - alpha; positive exactly where
    1 - alpha - alpha/(1-2*alpha)^2 is positive on (0, 1/2)."""
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"alpha={alpha} outside (0, 1/2)")
    return (1.0 - 2.0 * alpha) * math.sqrt(alpha * (1.0 - alpha)) - alpha


def rho_from_alpha(alpha: float, k: int) -> float:
    """Spectral radius certified by a consistent alpha-normal labeling."""
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    return alpha ** (-1.0 / k)


# --- closed-form constructions ------------------------------------------------

def _base_weights(h: Hypergraph, roles, alpha: float) -> dict[tuple[int, int], float]:
    """Weight 1 on every cored vertex, alpha on every pendant anchor."""
    w: dict[tuple[int, int], float] = {}
    deg = h.degrees
    for j, e in enumerate(h.edges):
        for v in e:
            if deg[v] == 1:
                w[(v, j)] = 1.0
    for j in roles.pendants_v2:
        w[(roles.v2, j)] = alpha
    for j in roles.pendants_w:
        w[(roles.w, j)] = alpha
    return w


def build_B_P(m: int, k: int, alpha: float) -> WeightedIncidence:
    """The exact P-family labeling; alpha-normal iff f_P(alpha, m-4) = 1."""
    if m < 5:
        raise ValueError("P needs m >= 5")
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"alpha={alpha} outside (0, 1/2)")
    h, roles = family_p_with_roles(k, m)
    beta = math.sqrt(alpha / (1.0 - alpha))
    if beta >= 1.0:
        raise ValueError("alpha too large: cycle weight would not be positive")
    w = _base_weights(h, roles, alpha)
    w[(roles.w, roles.e3)] = 1.0 - alpha
    w[(roles.v1, roles.e3)] = beta
    w[(roles.v3, roles.e3)] = beta
    w[(roles.v1, roles.e1)] = 1.0 - beta
    w[(roles.v3, roles.e2)] = 1.0 - beta
    w[(roles.v2, roles.e1)] = alpha / (1.0 - beta)
    w[(roles.v2, roles.e2)] = alpha / (1.0 - beta)
    return WeightedIncidence(hypergraph=h, weights=w)


def build_B_O(m: int, k: int, alpha: float) -> WeightedIncidence:
    """The exact O-family labeling; alpha-normal iff f_O(alpha, m-4) = 1.

    m = 4 is allowed (a single pendant edge at the cored cycle vertex) and
    is used as a numerical cross-check only.
    """
    if m < 4:
        raise ValueError("O needs m >= 4")
    r = m - 4
    if not 0.0 < alpha < 1.0 / (r + 2):
        raise ValueError(f"alpha={alpha} outside (0, 1/(r+2)) for r={r}")
    h, roles = family_o_with_roles(k, m)
    beta = math.sqrt(alpha / (1.0 - (r + 1) * alpha))
    w = _base_weights(h, roles, alpha)
    w[(roles.w, roles.e3)] = 1.0 - (r + 1) * alpha
    w[(roles.v1, roles.e3)] = beta
    w[(roles.v3, roles.e3)] = beta
    w[(roles.v1, roles.e1)] = 1.0 - beta
    w[(roles.v3, roles.e2)] = 1.0 - beta
    w[(roles.v2, roles.e1)] = alpha / (1.0 - beta)
    w[(roles.v2, roles.e2)] = alpha / (1.0 - beta)
    return WeightedIncidence(hypergraph=h, weights=w)


def build_B_Q_supernormal(m: int, k: int, alpha: float) -> WeightedIncidence:
    """The slack Q-family labeling at the P-family root alpha.

    Taking the cycle weight x = gamma(alpha) makes the labeling consistent
    by construction; every row sums to 1 and every edge product equals
    alpha except the max-degree row, which sums to
    alpha/(1-beta) + alpha/((1-alpha)*gamma) + r*alpha > 1.
    """
    if m < 5:
        raise ValueError("Q needs m >= 5")
    if not 0.0 < alpha <= 0.2 + 1e-12:
        raise ValueError(f"alpha={alpha} outside (0, 1/5]")
    h, roles = family_q_with_roles(k, m)
    g = gamma(alpha)
    beta = alpha / (1.0 - g)
    if beta >= 1.0:
        raise ValueError("alpha too large: cycle weight would not be positive")
    w = _base_weights(h, roles, alpha)
    w[(roles.w, roles.e2)] = 1.0 - alpha
    w[(roles.v3, roles.e2)] = g
    w[(roles.v2, roles.e2)] = alpha / ((1.0 - alpha) * g)
    w[(roles.v3, roles.e3)] = 1.0 - g
    w[(roles.v1, roles.e3)] = beta
    w[(roles.v1, roles.e1)] = 1.0 - beta
    w[(roles.v2, roles.e1)] = alpha / (1.0 - beta)
    return WeightedIncidence(hypergraph=h, weights=w)


def weights_to_text(w: WeightedIncidence) -> str:
    """Sparse (vertex, edge, weight) triples, 17 significant digits."""
    lines = [
        f"{v} {j} {format(w.weights[(v, j)], '.17g')}"
        for (v, j) in sorted(w.weights)
    ]
    return "\n".join(lines) + "\n"
