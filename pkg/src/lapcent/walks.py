"""Random-walk quantities: exact hitting/commute times, detour overheads,
their identities against the Laplacian pseudo-inverse, a seeded Monte Carlo
estimator, and the dense-regime degree approximation.

Walk transition probabilities are p_ik = a_ik / d(i). Exact hitting times
come from one linear solve per target (first-step equations), deliberately
independent of L+ so the commute and detour identities are real checks
rather than tautologies.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, require_connected, GraphError
from .spectral import SpectralBundle, resistance_matrix

STEP_CAP = 10**7  # per-run guard against pathological walks


@dataclass(frozen=True)
class HittingTable:
    """H[i, j] = expected steps i -> j; C = H + H.T; vol = Vol(G)."""

    H: np.ndarray
    C: np.ndarray
    vol: float


def hitting_times_exact(g: Graph) -> HittingTable:
    """Solve the first-step equations for every target node.

    For target j the vector h restricted to i != j satisfies
    (I - Q) h = 1 with Q the transition matrix among non-target nodes.
    """
    require_connected(g, "hitting_times_exact")
    n = g.n
    P = g.adjacency / g.degrees[:, None]
    H = np.zeros((n, n))
    idx_all = np.arange(n)
    for j in range(n):
        keep = idx_all != j
        M = np.eye(n - 1) - P[np.ix_(keep, keep)]
        H[keep, j] = np.linalg.solve(M, np.ones(n - 1))
    return HittingTable(H=H, C=H + H.T, vol=g.volume)


def detour_overhead(ht: HittingTable, i: int, k: int, j: int, check_tol: float = 1e-9) -> float:
    """Expected extra steps of the forced detour i -> k -> j over i -> j.

    Computed as H_ik + H_kj - H_ij and cross-checked against the symmetric
    commute form (C_ik + C_kj - C_ij) / 2; the two are equal for reversible
    walks.
    """
    hit_form = ht.H[i, k] + ht.H[k, j] - ht.H[i, j]
    commute_form = (ht.C[i, k] + ht.C[k, j] - ht.C[i, j]) / 2.0
    if abs(hit_form - commute_form) > check_tol:
        raise ArithmeticError(
            f"detour forms disagree at ({i},{k},{j}): {hit_form!r} vs {commute_form!r}"
        )
    return float(hit_form)


def average_detour_overhead(g: Graph, b: SpectralBundle, k: int,
                            ht: HittingTable | None = None,
                            check_tol: float = 1e-9) -> float:
    """Mean detour overhead through transit k over all (i, j) pairs,
    normalized by n^2 Vol(G); equals l+_kk, which is asserted.

    The double sum runs over all ordered pairs including i == j and
    i == k == j. Pass a precomputed table to amortize the linear solves.
    """
    if ht is None:
        ht = hitting_times_exact(g)
    n = g.n
    H = ht.H
    total = n * H[:, k].sum() + n * H[k, :].sum() - H.sum()
    value = total / (n * n * ht.vol)
    lkk = float(b.lplus[k, k])
    if abs(value - lkk) > check_tol:
        raise ArithmeticError(
            f"average detour overhead {value!r} != l+_kk {lkk!r} at node {k}"
        )
    return float(value)


def commute_row_sum_identity(g: Graph, b: SpectralBundle, k: int,
                             ht: HittingTable | None = None):
    """(lhs, rhs) of sum_j C_kj = Vol(G) (n l+_kk + Tr(L+)).

    The left side comes from the hitting-time linear solves, the right from
    the pseudo-inverse, so the identity is checked across routes.
    """
    if ht is None:
        ht = hitting_times_exact(g)
    lhs = float(ht.C[k, :].sum())
    rhs = float(ht.vol * (g.n * b.lplus[k, k] + np.trace(b.lplus)))
    return lhs, rhs


def kirchhoff_commute_identity(g: Graph, b: SpectralBundle,
                               ht: HittingTable | None = None):
    """(lhs, rhs) of K = sum_kj C_kj / (2 n Vol(G)), lhs from hitting solves."""
    if ht is None:
        ht = hitting_times_exact(g)
    lhs = float(ht.C.sum() / (2.0 * g.n * ht.vol))
    rhs = float(np.trace(b.lplus))
    return lhs, rhs


def commute_vs_resistance_gap(ht: HittingTable, b: SpectralBundle) -> float:
    """max |C_ij - Vol * Omega_ij| over all pairs."""
    return float(np.max(np.abs(ht.C - ht.vol * resistance_matrix(b))))


# -- Monte Carlo oracle -------------------------------------------------


class StepCapExceeded(GraphError):
    """A simulated walk ran past the per-run step cap."""


@dataclass(frozen=True)
class WalkEstimate:
    mean: float
    std_error: float
    runs: int
    seed: int

    def to_dict(self):
        return {"mean": self.mean, "std_error": self.std_error,
                "runs": self.runs, "seed": self.seed}


def simulate_hitting_steps(g: Graph, i: int, j: int, runs: int, seed: int,
                           run_start: int = 0, cap: int = STEP_CAP) -> np.ndarray:
    """Raw per-run step counts; deterministic in (seed, run index) only."""
    require_connected(g, "simulate_hitting_steps")
    if runs < 1:
        raise GraphError("runs must be >= 1")
    if i == j:
        raise GraphError("source and target must differ")
    indptr, nbrs, cumw = g.csr()
    steps = _kernels.walk_steps(indptr, nbrs, cumw, i, j, runs, seed,
                                run_start=run_start, cap=cap)
    if np.any(steps < 0):
        raise StepCapExceeded(
            f"walk {i}->{j} exceeded {cap} steps; input looks pathological"
        )
    return steps


def estimate_hitting_mc(g: Graph, i: int, j: int, runs: int, seed: int,
                        cap: int = STEP_CAP) -> WalkEstimate:
    """Monte Carlo hitting-time estimate with standard error.

    std_error is the sample standard deviation over sqrt(runs); it is 0.0
    for a single run.
    """
    steps = simulate_hitting_steps(g, i, j, runs, seed, cap=cap).astype(np.float64)
    mean = float(steps.mean())
    se = float(steps.std(ddof=1) / np.sqrt(runs)) if runs > 1 else 0.0
    return WalkEstimate(mean=mean, std_error=se, runs=runs, seed=seed)


@dataclass(frozen=True)
class VisitEstimate:
    """Per-node mean visit counts of the walk i -> j (start counts, the
    terminal arrival does not)."""

    means: np.ndarray
    std_errors: np.ndarray
    runs: int
    seed: int


def estimate_visits_mc(g: Graph, i: int, j: int, runs: int, seed: int,
                       cap: int = STEP_CAP) -> VisitEstimate:
    require_connected(g, "estimate_visits_mc")
    if runs < 1:
        raise GraphError("runs must be >= 1")
    if i == j:
        raise GraphError("source and target must differ")
    indptr, nbrs, cumw = g.csr()
    sums, sumsq, capped = _kernels.walk_visits(indptr, nbrs, cumw, g.n, i, j,
                                               runs, seed, cap=cap)
    if capped:
        raise StepCapExceeded(
            f"{capped} walks {i}->{j} exceeded {cap} steps"
        )
    means = sums / runs
    if runs > 1:
        var = (sumsq - runs * means**2) / (runs - 1)
        se = np.sqrt(np.maximum(var, 0.0) / runs)
    else:
        se = np.zeros(g.n)
    return VisitEstimate(means=means, std_errors=se, runs=runs, seed=seed)


# -- dense-regime approximation -----------------------------------------

CONVENTIONS = ("source-degree", "target-degree")


def approx_hitting_dense(g: Graph, i: int, j: int, convention: str = "source-degree") -> float:
    """Degree-only hitting estimate for dense graphs: Vol(G) / d.

    The default "source-degree" divides by d(i); "target-degree" divides by
    d(j) (the convention common elsewhere). This is a dense-regime heuristic,
    not an exact quantity.
    """
    if convention not in CONVENTIONS:
        raise GraphError(f"convention must be one of {CONVENTIONS}")
    d = g.degrees
    denom = d[i] if convention == "source-degree" else d[j]
    return float(g.volume / denom)


def approx_commute_dense(g: Graph, i: int, j: int) -> float:
    """Symmetric companion estimate Vol(G) (1/d(i) + 1/d(j))."""
    d = g.degrees
    return float(g.volume * (1.0 / d[i] + 1.0 / d[j]))
