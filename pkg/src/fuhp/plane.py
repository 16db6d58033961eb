"""The finite Poincare plane H_q and its coset model.

H_q is the set of z = x + y*sqrt(delta) with y != 0, identified with the
matrices [[y, x], [0, 1]].  GL_2(F_q) acts by fractional linear
transformations; K = {[[a, b*delta], [b, a]]} is the stabilizer of the base
point sqrt(delta).  The G-invariant pseudo-distance is

    dist(z1, z2) = N(z1 - z2) / (Im z1 * Im z2),

and the sphere S_a collects the points at distance a from the base point.

Points are stored as (x, y) pairs; the canonical enumeration is row-major in
(y, x) with lifts ordered 0, 1, ..., q-1, so index(x, y) = (y-1)*q + x.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .fields import FieldCtx, Fq2Elem

GL2Elem = tuple[int, int, int, int]  # (a, b, c, d) row-major


class PlaneCtx:
    """Enumerated plane: points, spheres, distances and K data for one field."""

    def __init__(self, field: FieldCtx):
        self.field = field
        q = field.q
        self.q = q
        self.n_points = q * (q - 1)
        self.base: Fq2Elem = (0, 1)  # sqrt(delta)
        self.points: list[Fq2Elem] = [(x, y) for y in range(1, q) for x in range(q)]
        self.base_index = self.point_index(self.base)

        # distance from every point to the base point, and the spheres
        xs = np.arange(q, dtype=np.int64)
        ys = np.arange(1, q, dtype=np.int64)
        num = (xs[None, :] ** 2 - field.delta * (ys[:, None] - 1) ** 2) % q
        self.dist_to_base = (num * field.inv_table[ys][:, None] % q).reshape(-1)
        self.sphere_sizes = np.bincount(self.dist_to_base, minlength=q)
        self._sphere_indices = [np.flatnonzero(self.dist_to_base == a) for a in range(q)]

    # ---- canonical enumeration -----------------------------------------

    def point_index(self, z: Fq2Elem) -> int:
        x, y = z[0] % self.q, z[1] % self.q
        assert y != 0, "not a plane point (Im z = 0)"
        return (y - 1) * self.q + x

    def point_of_index(self, idx: int) -> Fq2Elem:
        y, x = divmod(idx, self.q)
        return (x, y + 1)

    def coset_rep(self, z: Fq2Elem) -> GL2Elem:
        """The matrix [[y, x], [0, 1]] representing the coset of z = x + y*sqrt(delta)."""
        return (z[1] % self.q, z[0] % self.q, 0, 1)

    def point_of(self, m: GL2Elem) -> Fq2Elem:
        """Inverse of :meth:`coset_rep` for matrices of the [[y, x], [0, 1]] shape."""
        y, x, c, d = m
        assert (c, d) == (0, 1) and y % self.q != 0
        return (x % self.q, y % self.q)

    # ---- group action and distance -------------------------------------

    def act(self, g: GL2Elem, z: Fq2Elem) -> Fq2Elem:
        """g.z = (a z + b) / (c z + d); stays inside H_q."""
        f = self.field
        a, b, c, d = g
        num = ((a * z[0] + b) % self.q, a * z[1] % self.q)
        den = ((c * z[0] + d) % self.q, c * z[1] % self.q)
        assert den != (0, 0), "c z + d = 0 for z outside F_q is impossible"
        w = f.mul2(num, f.inv2(den))
        assert w[1] != 0, "the action must preserve Im z != 0"
        return w

    def distance(self, z1: Fq2Elem, z2: Fq2Elem) -> int:
        f = self.field
        d = f.norm(f.sub2(z1, z2))
        return d * f.inv(z1[1] * z2[1] % self.q) % self.q

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """Pairwise pseudo-distances, indexed by canonical point order.

        Dense (n x n); intended for the small-q operator paths (q <= 13 in
        practice, but nothing larger than the memory it costs).
        """
        q = self.q
        xs = np.array([p[0] for p in self.points], dtype=np.int64)
        ys = np.array([p[1] for p in self.points], dtype=np.int64)
        dx = xs[:, None] - xs[None, :]
        dy = ys[:, None] - ys[None, :]
        num = (dx * dx - self.field.delta * dy * dy) % q
        return num * self.field.inv_table[ys[:, None] * ys[None, :] % q] % q

    # ---- spheres and double cosets -------------------------------------

    def sphere_indices(self, a: int) -> np.ndarray:
        return self._sphere_indices[a % self.q]

    def sphere(self, a: int) -> list[Fq2Elem]:
        """All points at distance a from the base point, in canonical order."""
        return [self.points[i] for i in self.sphere_indices(a)]

    def double_coset_rep(self, a: int) -> GL2Elem:
        """Representative of D_a = K g K: the first point of S_a as a coset matrix."""
        idx = self.sphere_indices(a)
        if len(idx) == 0:
            raise ValueError(f"sphere S_{a} is empty")
        return self.coset_rep(self.points[idx[0]])

    # ---- the subgroup K -------------------------------------------------

    @cached_property
    def k_elements(self) -> list[GL2Elem]:
        """All q^2 - 1 matrices [[a, b*delta], [b, a]], (a, b) != (0, 0)."""
        q, d = self.q, self.field.delta
        return [(a, b * d % q, b, a)
                for a in range(q) for b in range(q) if (a, b) != (0, 0)]

    @cached_property
    def k_generator(self) -> GL2Elem:
        """Matrix of gamma: K is cyclic, the image of the extension units."""
        gx, gy = self.field.gamma
        return (gx, gy * self.field.delta % self.q, gy, gx)

    def k_orbit(self, z: Fq2Elem) -> list[Fq2Elem]:
        """Orbit of z under K (cycle under the cyclic generator)."""
        out = [z]
        w = self.act(self.k_generator, z)
        while w != z:
            out.append(w)
            w = self.act(self.k_generator, w)
        return out

    def k_orbit_size(self, z: Fq2Elem) -> int:
        return len(self.k_orbit(z))

    @cached_property
    def orbit_sizes(self) -> np.ndarray:
        """|S(z)| for every point, computed orbit by orbit."""
        out = np.zeros(self.n_points, dtype=np.int64)
        for z in self.points:
            i = self.point_index(z)
            if out[i]:
                continue
            orbit = self.k_orbit(z)
            for w in orbit:
                out[self.point_index(w)] = len(orbit)
        return out


def make_plane_ctx(field: FieldCtx) -> PlaneCtx:
    return PlaneCtx(field)
