"""The eigenfunction families on the plane and the identities relating them.

Four families of simultaneous eigenfunctions of the adjacency operators:

  * chi_func(i):        value chi^i(y) at the point x + y*sqrt(delta);
  * psi_star_eta(a, i): the convolution Psi_a * eta_i collapsed to a sum
                        over F_q (Psi_a is the additive character supported
                        on the y = 1 row);
  * terras_k(i, a):     the Kloosterman-type character-sum eigenfunctions;
  * evans_h(t, i, a):   the norm-one-subgroup (Soto-Andrade-type) sums.

psi_star_eta carries no |K| factor: it is (1/|K|) times the G-convolution,
which is the normalization under which the base-comparison identities hold
with their stated constants.
"""
from __future__ import annotations

import numpy as np

from .gl2chars import spherical_inventory
from .hecke import (HeckeElement, PFunction, idempotent, idempotent_table,
                    operator_matrix, indicator, projector_matrix)
from .plane import PlaneCtx


# ---- individual families ------------------------------------------------

def chi_func(plane: PlaneCtx, i: int) -> PFunction:
    """chi_i: the point x + y*sqrt(delta) maps to chi^i(y)."""
    f = plane.field
    out = np.empty(plane.n_points, dtype=complex)
    for y in range(1, plane.q):
        out[(y - 1) * plane.q:(y) * plane.q] = f.chi(i, y)
    return out


def psi_star_eta(plane: PlaneCtx, a: int, i: int) -> PFunction:
    """(Psi_a * eta_i)(x + y sqrt(delta)) = sum_u psi_a(u) eta_i(dist((x-u) + y sqrt(delta), base))."""
    f = plane.field
    q = plane.q
    if a % q == 0:
        raise ValueError("a = 0 is degenerate; the chi_i family covers that sector")
    eta = idempotent_table(plane)[i]
    eta_pts = eta[plane.dist_to_base].reshape(q - 1, q)  # [y-1, v]
    psi_row = f._roots_q[(a * np.arange(q)) % q]
    shift = (np.arange(q)[:, None] - np.arange(q)[None, :]) % q  # [x, u] -> x-u
    out = np.empty((q - 1, q), dtype=complex)
    for row in range(q - 1):
        out[row] = eta_pts[row][shift] @ psi_row
    return out.reshape(-1)


def terras_k(plane: PlaneCtx, i: int, a: int) -> PFunction:
    """K_{i, psi_a}: psi_a(-x) chi^i(y) sum_u psi_a(u) conj(chi^i)(u^2 - delta y^2)."""
    f = plane.field
    q = plane.q
    inner = np.empty(q - 1, dtype=complex)  # depends on y only
    for y in range(1, q):
        inner[y - 1] = sum(
            f.psi(a, u) * np.conj(f.chi(i, (u * u - f.delta * y * y) % q))
            for u in range(q))
    out = np.empty((q - 1, q), dtype=complex)
    xs = np.arange(q)
    psi_neg = f._roots_q[(-a * xs) % q]
    for y in range(1, q):
        out[y - 1] = psi_neg * f.chi(i, y) * inner[y - 1]
    return out.reshape(-1)


def evans_h(plane: PlaneCtx, t: int, i: int, a: int) -> PFunction:
    """H_{t, i, psi_a}, with the u = 0 term multiplied by q+1 when y = +-t.

    The argument of the quadratic character is alpha + 1/alpha + delta*y/t +
    t/(delta*y) - u^2/(t*y); for norm-one alpha, alpha + 1/alpha is the trace
    2*Re(alpha), an element of F_q.  The quadratic character is 0 at 0.

    Two conventions fixed by requiring the family to consist of simultaneous
    eigenfunctions (both verified numerically by the theorem suite):
      * the character applied to the norm-one subgroup is the one of index
        (q+1)/2 - i, the unique choice up to inversion that puts the
        function in the cuspidal sector i + (q-1)/2 (the quadratic
        character inside the sum accounts for the half-index shift);
      * the boosted u = 0 term sits at the rows y = +-t/delta, the points
        whose stabilizer orbit is a singleton (substituting t = -delta
        recovers y = +-1, as the base-comparison identity requires).
    """
    f = plane.field
    q = plane.q
    t %= q
    if t == 0:
        raise ValueError("t must be nonzero")
    # W[v] = sum over norm-one alpha of the U1-character times s(trace(alpha) + v)
    u1 = f.norm_one_subgroup  # u1[k] = (gamma^(q-1))^k, so its U1-log is k
    e = (q + 1) // 2 - i
    w = np.zeros(q, dtype=complex)
    for k, alpha in enumerate(u1):
        om = np.exp(2j * np.pi * e * k / (q + 1))
        tr = 2 * alpha[0] % q
        for v in range(q):
            w[v] += om * f.legendre((tr + v) % q)

    inv = f.inv
    y_special = t * inv(f.delta) % q
    out = np.empty((q - 1, q), dtype=complex)
    xs = np.arange(q)
    psi_neg = f._roots_q[(-a * xs) % q]
    for y in range(1, q):
        c0 = (f.delta * y * inv(t) + t * inv(f.delta * y % q)) % q
        inv_ty = inv(t * y % q)
        total = 0j
        boosted = y == y_special or y == (q - y_special) % q
        for u in range(q):
            term = f.psi(a, u) * w[(c0 - u * u * inv_ty) % q]
            if boosted and u == 0:
                term *= q + 1
            total += term
        out[y - 1] = psi_neg * (total / (q + 1))
    return out.reshape(-1)


# ---- character sums -----------------------------------------------------

def c_sum(plane_or_field, i: int, a: int) -> complex:
    """C_i(a) = sum_x psi_a(x) chi^i(x^2 - delta)."""
    f = getattr(plane_or_field, "field", plane_or_field)
    return sum(f.psi(a, x) * f.chi(i, (x * x - f.delta) % f.q) for x in range(f.q))


def fourier_coeff(plane: PlaneCtx, a: int, elem: HeckeElement) -> complex:
    """F(1; a, f) = sum_x f(D-label of x + sqrt(delta)) psi_a(x); the label is x^2."""
    f = plane.field
    return sum(np.asarray(elem)[(x * x) % f.q] * f.psi(a, x) for x in range(f.q))


# ---- verification helpers ----------------------------------------------

def _rayleigh(op: np.ndarray, v: np.ndarray) -> complex:
    return np.vdot(v, op @ v) / np.vdot(v, v)


def eigen_residual(plane: PlaneCtx, v: PFunction, bs: list[int] | None = None) -> float:
    """Worst relative residual ||A_b v - lambda v|| / ||v|| over adjacency ops."""
    if bs is None:
        bs = list(range(1, plane.q))
    nv = np.linalg.norm(v)
    if nv == 0:
        return float("nan")
    worst = 0.0
    for b in bs:
        op = operator_matrix(plane, indicator(plane, b)).real
        lam = _rayleigh(op, v)
        worst = max(worst, float(np.linalg.norm(op @ v - lam * v) / nv))
    return worst


def _gram_offdiag(funcs: list[np.ndarray]) -> float:
    """Max |<f_i, f_j>| / (||f_i|| ||f_j||) over i != j."""
    mat = np.array(funcs)
    gram = mat.conj() @ mat.T
    norms = np.sqrt(np.real(np.diag(gram)))
    rel = np.abs(gram) / np.outer(norms, norms)
    np.fill_diagonal(rel, 0.0)
    return float(rel.max())


def _rank(funcs: list[np.ndarray], tol: float = 1e-8) -> int:
    mat = np.array(funcs)
    sv = np.linalg.svd(mat, compute_uv=False)
    return int(np.count_nonzero(sv > tol * sv[0]))


def chi_sector(plane: PlaneCtx, i: int) -> int:
    """Index of the spherical representation containing chi_i."""
    q = plane.q
    i %= q - 1
    if i == 0:
        return 0
    return min(i, q - 1 - i)


def verify_theorem2(plane: PlaneCtx, null_tol: float = 1e-9) -> dict:
    """Orthogonal-basis and projector claims for the chi / Psi*eta families."""
    q = plane.q
    labels: list[tuple] = []
    funcs: list[np.ndarray] = []
    null_members: list[tuple] = []
    for i in range(1, q):
        v = chi_func(plane, i)
        labels.append(("chi", i))
        funcs.append(v)
    for a in range(1, q):
        for i in range(1, q):
            v = psi_star_eta(plane, a, i)
            if np.linalg.norm(v) < null_tol:
                null_members.append(("psi_star_eta", a, i))
            else:
                labels.append(("psi_star_eta", a, i))
                funcs.append(v)

    projectors = [projector_matrix(plane, j) for j in range(q)]
    proj_resid = 0.0
    for lbl, v in zip(labels, funcs):
        nv = np.linalg.norm(v)
        if lbl[0] == "chi":
            own = chi_sector(plane, lbl[1])
        else:
            own = lbl[2]
        for j in range(q):
            expect = v if j == own else 0.0
            proj_resid = max(proj_resid, float(
                np.linalg.norm(projectors[j] @ v - expect) / nv))

    return {
        "q": q,
        "count": len(funcs),
        "rank": _rank(funcs),
        "expected_rank": plane.n_points,
        "gram_offdiag_rel": _gram_offdiag(funcs),
        "projector_residual": proj_resid,
        "null_members": null_members,
    }


def verify_theorem3(plane: PlaneCtx, ortho_tol: float = 1e-8) -> dict:
    """Simultaneous-eigenfunction and basis claims for the K / H families.

    The published index ranges double-count a = 0, so the basis is assembled
    as: K_{i, psi_0} for i = 1..q-1, K_{i, psi_a} for i = 1..(q-1)/2 and
    nonzero a, and one H_{t0, i, psi_a} per (i, a) with nonzero a, t0 found
    by scanning t in lift order for a member orthogonal to everything kept.
    """
    q = plane.q
    members: list[tuple] = []
    funcs: list[np.ndarray] = []
    max_eig_resid = 0.0

    def admit(lbl, v):
        nonlocal max_eig_resid
        max_eig_resid = max(max_eig_resid, eigen_residual(plane, v))
        members.append(lbl)
        funcs.append(v / np.linalg.norm(v))

    for i in range(1, q):
        admit(("K", i, 0), terras_k(plane, i, 0))
    for a in range(1, q):
        for i in range(1, (q - 1) // 2 + 1):
            admit(("K", i, a), terras_k(plane, i, a))

    t0_table: dict[tuple, int] = {}
    failures: list[tuple] = []
    for a in range(1, q):
        for i in range(1, (q - 1) // 2 + 1):
            found = None
            for t in range(1, q):
                v = evans_h(plane, t, i, a)
                nv = np.linalg.norm(v)
                if nv < 1e-9:
                    continue
                v = v / nv
                mat = np.array(funcs)
                if np.abs(mat.conj() @ v).max() < ortho_tol:
                    found = t
                    break
            if found is None:
                failures.append((i, a))
            else:
                t0_table[(i, a)] = found
                admit(("H", found, i, a), evans_h(plane, found, i, a))

    return {
        "q": q,
        "count": len(funcs),
        "rank": _rank(funcs),
        "expected_rank": plane.n_points,
        "max_eigen_residual": max_eig_resid,
        "gram_offdiag_rel": _gram_offdiag(funcs),
        "t0_table": {f"{i},{a}": t for (i, a), t in sorted(t0_table.items())},
        "t0_failures": failures,
    }


def _fit_and_residual(lhs: np.ndarray, rhs: np.ndarray) -> tuple[complex, float]:
    """Least-squares c minimizing ||lhs - c*rhs||, plus the relative residual."""
    denom = np.vdot(rhs, rhs)
    scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs))
    if scale == 0:
        return 0j, 0.0
    if abs(denom) == 0:
        return 0j, float(np.linalg.norm(lhs) / scale)
    c = np.vdot(rhs, lhs) / denom
    return complex(c), float(np.linalg.norm(lhs - c * rhs) / scale)


def verify_theorem4(plane: PlaneCtx) -> dict:
    """The three base-comparison identities, with fitted constants.

    Identity 1 is checked in the form K_{i, psi_0} = conj(C_i(0)) * chi_{-i}:
    direct evaluation of the defining sums forces the conjugate index on the
    chi side (both functions lie in the same eigenspace either way); the
    residual for the published chi_{+i} pairing is reported alongside.
    """
    f = plane.field
    q = plane.q
    dims = [r.dim for r in spherical_inventory(f)]
    half = (q - 1) // 2

    id1 = {"max_residual": 0.0, "max_residual_published_index": 0.0}
    for i in range(1, q):
        k0 = terras_k(plane, i, 0)
        lhs_conj = np.conj(c_sum(plane, i, 0)) * chi_func(plane, q - 1 - i)
        lhs_pub = np.conj(c_sum(plane, i, 0)) * chi_func(plane, i)
        scale = np.linalg.norm(k0)
        id1["max_residual"] = max(id1["max_residual"],
                                  float(np.linalg.norm(lhs_conj - k0) / scale))
        id1["max_residual_published_index"] = max(
            id1["max_residual_published_index"],
            float(np.linalg.norm(lhs_pub - k0) / scale))

    id2 = {"max_residual": 0.0, "max_const_dev": 0.0, "cases": 0}
    for i in range(1, half + 1):
        paper_const = dims[i] / (f.order_g * (q + 1))
        for a in range(1, q):
            lhs = psi_star_eta(plane, a, i)
            rhs = c_sum(plane, i, a) * terras_k(plane, i, -a % q)
            c, resid = _fit_and_residual(lhs, rhs)
            id2["max_residual"] = max(id2["max_residual"], resid)
            if np.linalg.norm(rhs) > 1e-12:
                id2["max_const_dev"] = max(
                    id2["max_const_dev"],
                    abs(c - paper_const) / paper_const)
            id2["cases"] += 1

    id3 = {"max_residual": 0.0, "max_const_dev": 0.0, "cases": 0}
    for i in range(1, half + 1):
        ihat = i + half
        paper_const = dims[ihat] / f.order_g
        for a in range(1, q):
            lhs = psi_star_eta(plane, a, ihat)
            rhs = evans_h(plane, -f.delta % q, i, -a % q)
            c, resid = _fit_and_residual(lhs, rhs)
            id3["max_residual"] = max(id3["max_residual"], resid)
            if np.linalg.norm(rhs) > 1e-12:
                id3["max_const_dev"] = max(
                    id3["max_const_dev"],
                    abs(c - paper_const) / paper_const)
            id3["cases"] += 1

    return {"q": q, "identity1": id1, "identity2": id2, "identity3": id3}


def verify_section7(plane: PlaneCtx) -> dict:
    """Fourier-coefficient identities: the norm identity (with the package's
    single normalization factor q/|K| in place of the published |K| q), the
    |C_i(a)|^2 evaluation, nonvanishing, and the Jacobi-sum form of C_i(0)."""
    f = plane.field
    q = plane.q
    half = (q - 1) // 2
    dims = [r.dim for r in spherical_inventory(f)]

    norm_resid = 0.0
    csq_resid = 0.0
    min_abs_f = float("inf")
    for i in range(1, q):
        eta = idempotent(plane, i)
        for a in range(1, q):
            fc = fourier_coeff(plane, a, eta)
            v = psi_star_eta(plane, a, i)
            lhs = np.vdot(v, v)
            expect = (q / f.order_k) * fc
            norm_resid = max(norm_resid, abs(lhs - expect) / max(abs(lhs), abs(expect)))
            min_abs_f = min(min_abs_f, abs(fc))
            if 1 <= i <= half:
                pred = dims[i] / (f.order_g * (q + 1)) * abs(c_sum(plane, i, a)) ** 2
                csq_resid = max(csq_resid, abs(fc - pred) / max(abs(fc), abs(pred), 1e-300))

    # The Jacobi-sum evaluation of C_i(0) requires chi^i nontrivial, so the
    # index i = q - 1 is reported separately (there C_{q-1}(0) = q exactly).
    jac_resid = 0.0
    for i in range(1, q - 1):
        lhs = c_sum(plane, i, 0)
        rhs = -f.chi(i, (-f.delta) % q) * f.jacobi_sum(i, half)
        jac_resid = max(jac_resid, abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0))
    trivial_resid = abs(c_sum(plane, q - 1, 0) - q)

    return {
        "q": q,
        "norm_identity_residual": float(norm_resid),
        "norm_identity_factor": q / f.order_k,
        "abs_c_squared_residual": float(csq_resid),
        "min_abs_fourier": float(min_abs_f),
        "jacobi_identity_residual": float(jac_resid),
        "trivial_character_c0_residual": float(trivial_resid),
    }
