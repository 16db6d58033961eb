"""The commutative algebra of bi-K-invariant functions on GL_2(F_q).

A Hecke element is a complex vector of length q: entry a is the constant
value on the double coset D_a (labeled by pseudo-distance).  Convolution is
over the whole group; the algebra identity is (1/|K|) times the indicator
of K = D_0.

Normalization, fixed once for the whole package:
  * the idempotents eta_i are honest convolution idempotents over G,
    eta_i * eta_j = [i == j] eta_i, and sum to the algebra identity;
  * the operator T_phi on functions of the plane is
    (T_phi f)(p) = sum_{p1} f(p1) phi(p1^{-1} p), i.e. the matrix
    phi evaluated on the pairwise-distance table;
  * projector_matrix(i) = |K| * T_{eta_i} is then an orthogonal projector of
    rank dim(pi_i), and the indicator element of D_a gives the plain 0/1
    adjacency matrix of X_q(delta, a).
"""
from __future__ import annotations

import numpy as np

from .gl2chars import spherical_inventory
from .plane import PlaneCtx

HeckeElement = np.ndarray  # complex, length q
PFunction = np.ndarray     # complex, length q(q-1)


def hecke_identity(plane: PlaneCtx) -> HeckeElement:
    """The convolution identity (1/|K|) * indicator of K."""
    e = np.zeros(plane.q, dtype=complex)
    e[0] = 1.0 / plane.field.order_k
    return e


def indicator(plane: PlaneCtx, a: int) -> HeckeElement:
    e = np.zeros(plane.q, dtype=complex)
    e[a % plane.q] = 1.0
    return e


def _sphere_rep_indices(plane: PlaneCtx) -> list[int]:
    return [int(plane.sphere_indices(a)[0]) for a in range(plane.q)]


def convolve(plane: PlaneCtx, f: HeckeElement, h: HeckeElement) -> HeckeElement:
    """(f * h)(w) = sum_{g in G} f(g) h(g^{-1} w), evaluated on coset reps.

    Right-K-invariance collapses the G-sum to |K| times a sum over the plane.
    """
    k = plane.field.order_k
    db = plane.dist_to_base
    dm = plane.distance_matrix
    fv = np.asarray(f)[db]
    reps = _sphere_rep_indices(plane)
    return np.array([k * np.dot(fv, np.asarray(h)[dm[r]]) for r in reps])


def structure_constants(plane: PlaneCtx) -> np.ndarray:
    """Exact integer table c[a, b, c']: (1_{D_a} * 1_{D_b}) evaluated on D_{c'}."""
    q = plane.q
    k = plane.field.order_k
    db = plane.dist_to_base
    dm = plane.distance_matrix
    out = np.zeros((q, q, q), dtype=np.int64)
    for cc, r in enumerate(_sphere_rep_indices(plane)):
        joint = np.bincount(db * q + dm[r], minlength=q * q).reshape(q, q)
        out[:, :, cc] = joint * k
    return out


def char_sum_table(plane: PlaneCtx) -> np.ndarray:
    """S[i, a] = sum over k in K of tr pi_i(k g_a), for the canonical reps g_a.

    Vectorized over K: the class of k*g_a is read off its trace and
    determinant (for a = 0 the discriminant-zero elements are exactly the
    scalars), and the character sums reduce to small histograms over
    discrete logs.  All entries are real.
    """
    f = plane.field
    q = f.q
    leg = f.legendre_table
    sqrt_t = f.sqrt_table
    logq = f.log_table_q
    logq2 = f.log_table_q2
    inv2 = f.inv(2)
    inv4d = f.inv(4 * f.delta % q)

    grid = np.arange(q, dtype=np.int64)
    alpha = np.repeat(grid, q)
    beta = np.tile(grid, q)
    keep = (alpha != 0) | (beta != 0)
    alpha, beta = alpha[keep], beta[keep]
    nk = (alpha * alpha - f.delta * beta * beta) % q

    n_prin = (q - 3) // 2
    n_cusp = (q - 1) // 2
    jp = np.arange(1, n_prin + 1)
    cos_p = 2.0 * np.cos(2.0 * np.pi * np.outer(jp, np.arange(q - 1)) / (q - 1))
    jc = np.arange(1, n_cusp + 1)
    cos_c = 2.0 * np.cos(2.0 * np.pi * np.outer(jc, np.arange(q + 1)) / (q + 1))

    s = np.zeros((q, q))
    s[0, :] = q * q - 1
    for a in range(q):
        ya, xa, _, _ = plane.double_coset_rep(a)
        t = (alpha * (ya + 1) + beta * xa) % q
        d = nk * ya % q
        disc = (t * t - 4 * d) % q
        leg_disc = leg[disc]

        n_zero = int(np.count_nonzero(disc == 0))
        n_cent, n_non = (n_zero, 0) if a == 0 else (0, n_zero)

        split = leg_disc == 1
        ts, rs = t[split], sqrt_t[disc[split]]
        e1 = (ts + rs) * inv2 % q
        e2 = (ts - rs) * inv2 % q
        m = (logq[e1] - logq[e2]) % (q - 1)
        hist_s = np.bincount(m, minlength=q - 1)
        split_leg = int(leg[d[split]].sum())

        ell = leg_disc == -1
        te = t[ell]
        ye = sqrt_t[disc[ell] * inv4d % q]
        ell_log = logq2[te * inv2 % q, ye] % (q + 1)
        hist_e = np.bincount(ell_log, minlength=q + 1)
        ell_leg = int(leg[d[ell]].sum())

        if n_prin:
            s[1:n_prin + 1, a] = (q + 1) * n_cent + n_non + cos_p @ hist_s
        s[(q - 1) // 2, a] = q * n_cent + split_leg - ell_leg
        s[(q - 1) // 2 + 1:, a] = (q - 1) * n_cent - n_non - cos_c @ hist_e
    return s


def idempotent_table(plane: PlaneCtx) -> np.ndarray:
    """All q idempotents as rows: eta[i, a] = dim_i/(|G||K|) * charsum_i(a)."""
    cached = getattr(plane, "_idempotent_table", None)
    if cached is not None:
        return cached
    f = plane.field
    dims = np.array([r.dim for r in spherical_inventory(f)], dtype=float)
    table = dims[:, None] * char_sum_table(plane) / (f.order_g * f.order_k)
    plane._idempotent_table = table
    return table


def idempotent(plane: PlaneCtx, i: int) -> HeckeElement:
    """eta_i as a Hecke element (real-valued, returned complex)."""
    return idempotent_table(plane)[i].astype(complex)


def operator_matrix(plane: PlaneCtx, phi: HeckeElement) -> np.ndarray:
    """Dense matrix of T_phi on the canonical point basis."""
    return np.asarray(phi)[plane.distance_matrix]


def t_apply(plane: PlaneCtx, phi: HeckeElement, fvec: PFunction) -> PFunction:
    """(T_phi f)(p) = sum_{p1} f(p1) phi(p1^{-1} p)."""
    return operator_matrix(plane, phi) @ np.asarray(fvec)


def projector_matrix(plane: PlaneCtx, i: int) -> np.ndarray:
    """|K| * T_{eta_i}: the orthogonal projector onto the pi_i isotypic part."""
    return plane.field.order_k * operator_matrix(plane, idempotent(plane, i))
