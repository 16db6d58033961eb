"""Adjacency operators of the graphs X_q(delta, a), their closed-form
eigenvalues, the Ramanujan bound, and the moment/distribution statistics.

The eigenvalue of the adjacency operator A_a on the isotypic sector of the
i-th spherical representation is

    lambda_i(a) = |G| / dim(pi_i) * |S_a| * eta_i(D_a)
                = |S_a| * charsum_i(a) / |K|,

so the whole q x q eigenvalue table costs one vectorized character-sum pass
and never materializes an operator.  Dense matrices are used only as a
brute-force oracle at small q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fields import make_field_ctx
from .gl2chars import spherical_inventory
from .hecke import char_sum_table, idempotent_table, indicator, operator_matrix
from .plane import PlaneCtx

DENSE_Q_LIMIT = 13  # largest q for which dense operators are materialized


def adjacency_matrix(plane: PlaneCtx, a: int) -> np.ndarray:
    """The symmetric 0/1 adjacency matrix of X_q(delta, a); a != 0 required."""
    if a % plane.q == 0:
        raise ValueError("a = 0 gives the identity relation, not a graph")
    return operator_matrix(plane, indicator(plane, a)).real.astype(np.int64)


def eigenvalue_table(plane: PlaneCtx) -> np.ndarray:
    """lam[i, a] for all spherical indices i and all distances a."""
    cached = getattr(plane, "_eigenvalue_table", None)
    if cached is not None:
        return cached
    lam = plane.sphere_sizes[None, :] * char_sum_table(plane) / plane.field.order_k
    plane._eigenvalue_table = lam
    return lam


def eigenvalue_formula(plane: PlaneCtx, i: int, a: int) -> float:
    return float(eigenvalue_table(plane)[i, a % plane.q])


def eigenvalues_bruteforce(plane: PlaneCtx, a: int) -> np.ndarray:
    """Sorted spectrum of the dense adjacency matrix (the oracle path)."""
    if plane.q > DENSE_Q_LIMIT:
        raise ValueError(f"brute force is capped at q <= {DENSE_Q_LIMIT}")
    return np.sort(np.linalg.eigvalsh(adjacency_matrix(plane, a).astype(float)))


def eigenvalues_with_multiplicity(plane: PlaneCtx, a: int) -> np.ndarray:
    """The formula eigenvalues, each repeated dim(pi_i) times, sorted."""
    lam = eigenvalue_table(plane)[:, a % plane.q]
    dims = [r.dim for r in spherical_inventory(plane.field)]
    return np.sort(np.repeat(lam, dims))


def ramanujan_check(plane: PlaneCtx, a: int) -> tuple[bool, float]:
    """Whether max_{i>=1} |lambda_i(a)| <= 2 sqrt(q); returns (pass, margin)."""
    q = plane.q
    a %= q
    if a == 0 or a == 4 * plane.field.delta % q:
        raise ValueError("a in {0, 4 delta} is excluded from the Ramanujan bound")
    lam = eigenvalue_table(plane)[1:, a]
    margin = 2.0 * math.sqrt(q) - float(np.abs(lam).max())
    return margin >= -1e-9, margin


def moment_matrix(plane: PlaneCtx) -> tuple[np.ndarray, dict]:
    """M[i, a] = sqrt(|S_a|/dim_i) eta_i(D_a), plus the M M' = c I residuals."""
    f = plane.field
    dims = np.array([r.dim for r in spherical_inventory(f)], dtype=float)
    m = np.sqrt(plane.sphere_sizes[None, :] / dims[:, None]) * idempotent_table(plane)
    target = np.eye(plane.q) / (f.order_k * f.order_g)
    scale = 1.0 / (f.order_k * f.order_g)
    residuals = {
        "mmt": float(np.abs(m @ m.T - target).max() / scale),
        "mtm": float(np.abs(m.T @ m - target).max() / scale),
    }
    return m, residuals


def weighted_moments(plane: PlaneCtx, a: int) -> tuple[float, float]:
    """The two dimension-weighted moment sums of lambda_i(a)/sqrt(q)."""
    f = plane.field
    q = plane.q
    dims = np.array([r.dim for r in spherical_inventory(f)], dtype=float)
    lam = eigenvalue_table(plane)[:, a % q] / math.sqrt(q)
    m1 = float(np.dot(dims / q, lam) / (q - 1))
    m2 = float(np.dot(dims / q, lam ** 2) / (q - 1))
    return m1, m2


def weighted_m2_target(plane: PlaneCtx, a: int) -> float:
    """|G| |S_a| / (|K| q^2 (q-1)), the exact value of the second weighted sum."""
    f = plane.field
    q = plane.q
    return f.order_g * int(plane.sphere_sizes[a % q]) / (f.order_k * q * q * (q - 1))


def unweighted_moments(plane: PlaneCtx, a: int, upto: int = 4) -> list[float]:
    """m_k = (1/(q-1)) sum_{i>=1} (lambda_i(a)/sqrt(q))^k, k = 1..upto."""
    q = plane.q
    lam = eigenvalue_table(plane)[1:, a % q] / math.sqrt(q)
    return [float((lam ** k).mean()) for k in range(1, upto + 1)]


# ---- distribution statistics -------------------------------------------

def semicircle_cdf(x) -> np.ndarray:
    """CDF of the semicircle density (1/2pi) sqrt(4 - x^2) on [-2, 2]."""
    x = np.clip(np.asarray(x, dtype=float), -2.0, 2.0)
    return x * np.sqrt(4.0 - x * x) / (4.0 * np.pi) + np.arcsin(x / 2.0) / np.pi + 0.5


def ks_distance(values: np.ndarray) -> float:
    """One-sample Kolmogorov-Smirnov distance to the semicircle law."""
    v = np.sort(np.asarray(values, dtype=float))
    n = len(v)
    cdf = semicircle_cdf(v)
    upper = np.abs(np.arange(1, n + 1) / n - cdf)
    lower = np.abs(cdf - np.arange(n) / n)
    return float(max(upper.max(), lower.max()))


def histogram(values: np.ndarray, bins: int) -> list[dict]:
    """Closed-left bins over [-2, 2] with the matching semicircle mass."""
    edges = np.linspace(-2.0, 2.0, bins + 1)
    counts, _ = np.histogram(np.asarray(values, dtype=float), bins=edges)
    mass = np.diff(semicircle_cdf(edges))
    return [{"binLeft": float(edges[k]), "binRight": float(edges[k + 1]),
             "count": int(counts[k]), "semicircleMass": float(mass[k])}
            for k in range(bins)]


def default_a(plane: PlaneCtx) -> int:
    """Smallest a outside {0, 4 delta} by lift."""
    bad = {0, 4 * plane.field.delta % plane.q}
    return next(a for a in range(1, plane.q) if a not in bad)


# ---- reports ------------------------------------------------------------

@dataclass
class SpectrumReport:
    q: int
    delta: int
    a: int
    method: str
    degree: int
    eigenvalues: list[dict]
    ramanujan: dict
    moments: dict

    def to_dict(self) -> dict:
        return {
            "q": self.q, "delta": self.delta, "a": self.a, "method": self.method,
            "degree": self.degree, "eigenvalues": self.eigenvalues,
            "ramanujan": self.ramanujan, "moments": self.moments,
        }


def spectrum_report(plane: PlaneCtx, a: int, method: str = "formula") -> SpectrumReport:
    f = plane.field
    q = plane.q
    a %= q
    reps = spherical_inventory(f)
    lam = eigenvalue_table(plane)[:, a]
    if method == "bruteforce":
        oracle = eigenvalues_bruteforce(plane, a)
        formula = eigenvalues_with_multiplicity(plane, a)
        assert np.abs(oracle - formula).max() < 1e-6, "oracle disagrees with formula"
    eig = [{"repIndex": r.index, "kind": r.kind, "dim": r.dim,
            "lambda": float(lam[r.index])} for r in reps]
    nontrivial = float(np.abs(lam[1:]).max())
    bound = 2.0 * math.sqrt(q)
    excluded = a == 0 or a == 4 * f.delta % q
    m1w, m2w = weighted_moments(plane, a)
    m = unweighted_moments(plane, a)
    return SpectrumReport(
        q=q, delta=f.delta, a=a, method=method,
        degree=int(plane.sphere_sizes[a]),
        eigenvalues=eig,
        ramanujan={
            "bound": bound,
            "maxNontrivial": nontrivial,
            "margin": bound - nontrivial,
            "pass": None if excluded else bool(nontrivial <= bound + 1e-9),
            "excluded": excluded,
        },
        moments={
            "weightedM1": m1w, "weightedM2": m2w,
            "weightedM2Target": weighted_m2_target(plane, a),
            "m1": m[0], "m2": m[1], "m3": m[2], "m4": m[3],
        },
    )


def sato_tate_report(q_list: list[int], a_rule: str = "smallest",
                     bins: int = 20) -> dict:
    """Per-prime normalized eigenvalue statistics along a sweep.

    a_rule "smallest" picks the smallest a outside {0, 4 delta} for each q.
    Only the formula path is used, so the sweep scales to q around 250.
    """
    rows = []
    hists = {}
    for q in sorted(q_list):
        plane = PlaneCtx(make_field_ctx(q))
        a = default_a(plane)
        m1, m2, m3, m4 = unweighted_moments(plane, a)
        lam = eigenvalue_table(plane)[1:, a] / math.sqrt(q)
        rows.append({"q": q, "a": a, "m1": m1, "m2": m2, "m3": m3, "m4": m4,
                     "ks": ks_distance(lam)})
        hists[q] = histogram(lam, bins)
    return {"aRule": a_rule, "bins": bins, "moments": rows, "histograms": hists}
