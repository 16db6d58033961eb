"""Conjugacy classes of GL_2(F_q) and the characters of its q spherical
irreducible representations.

A class descriptor is one of
    ("central", a)          scalar matrices a*I
    ("nonsemisimple", a)    non-diagonalizable, single eigenvalue a
    ("split", a, b)         distinct eigenvalues a < b in F_q
    ("elliptic", (x, y))    eigenvalue x + y*sqrt(delta) outside F_q,
                            canonicalized so y <= q - y.

The spherical inventory, in the index order used everywhere downstream:
    0                   trivial, dim 1
    1 .. (q-3)/2        principal series Ind(chi^j, chi^-j), dim q+1
    (q-1)/2             quadratic-twisted Steinberg, dim q
    (q-1)/2 + j         cuspidal attached to omega^(j(q-1)), dim q-1,
                        j = 1 .. (q-1)/2
"""
from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldCtx
from .plane import GL2Elem

ClassDescriptor = tuple


@dataclass(frozen=True)
class SphericalRep:
    index: int
    kind: str  # "trivial" | "principal" | "steinberg" | "cuspidal"
    j: int     # series parameter; 0 for trivial and steinberg
    dim: int


def spherical_inventory(field: FieldCtx) -> list[SphericalRep]:
    """The q spherical representations in canonical index order."""
    q = field.q
    reps = [SphericalRep(0, "trivial", 0, 1)]
    for j in range(1, (q - 3) // 2 + 1):
        reps.append(SphericalRep(j, "principal", j, q + 1))
    reps.append(SphericalRep((q - 1) // 2, "steinberg", 0, q))
    for j in range(1, (q - 1) // 2 + 1):
        reps.append(SphericalRep((q - 1) // 2 + j, "cuspidal", j, q - 1))
    assert len(reps) == q
    return reps


def classify(field: FieldCtx, g: GL2Elem) -> ClassDescriptor:
    """Conjugacy class of an invertible matrix, from (trace, det, scalarness)."""
    q = field.q
    a, b, c, d = (v % q for v in g)
    det = (a * d - b * c) % q
    assert det != 0, "matrix is singular"
    if b == 0 and c == 0 and a == d:
        return ("central", a)
    t = (a + d) % q
    inv2 = field.inv(2)
    disc = (t * t - 4 * det) % q
    if disc == 0:
        return ("nonsemisimple", t * inv2 % q)
    if field.legendre(disc) == 1:
        r = int(field.sqrt_table[disc])
        e1 = (t + r) * inv2 % q
        e2 = (t - r) * inv2 % q
        return ("split", min(e1, e2), max(e1, e2))
    # eigenvalue t/2 + y*sqrt(delta) with delta*y^2 = disc/4
    y2 = disc * field.inv(4 * field.delta % q) % q
    y = int(field.sqrt_table[y2])
    y = min(y, q - y)
    return ("elliptic", (t * inv2 % q, y))


def character_value(field: FieldCtx, rep: SphericalRep, cls: ClassDescriptor) -> complex:
    """tr pi(g) for any g in the class, per the standard GL_2(F_q) table."""
    q = field.q
    kind = cls[0]
    if rep.kind == "trivial":
        return 1.0 + 0j

    if rep.kind == "principal":
        j = rep.j
        if kind == "central":
            a = cls[1]
            return (q + 1) * field.chi(j, a) * field.chi(-j, a)
        if kind == "nonsemisimple":
            a = cls[1]
            return field.chi(j, a) * field.chi(-j, a)
        if kind == "split":
            a, b = cls[1], cls[2]
            r = a * field.inv(b) % q
            return field.chi(j, r) + field.chi(-j, r)
        return 0j  # elliptic

    if rep.kind == "steinberg":
        if kind == "central":
            a = cls[1]
            return q * field.legendre(a * a % q) + 0j
        if kind == "nonsemisimple":
            return 0j
        if kind == "split":
            a, b = cls[1], cls[2]
            return field.legendre(a * b % q) + 0j
        alpha = cls[1]
        return -field.legendre(field.norm(alpha)) + 0j

    assert rep.kind == "cuspidal"
    nu_exp = rep.j * (q - 1)
    if kind == "central":
        a = cls[1]
        return (q - 1) * field.omega(nu_exp, (a, 0))
    if kind == "nonsemisimple":
        a = cls[1]
        return -field.omega(nu_exp, (a, 0))
    if kind == "split":
        return 0j
    alpha = cls[1]
    return -(field.omega(nu_exp, alpha) + field.omega(nu_exp, field.conj2(alpha)))
