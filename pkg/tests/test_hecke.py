import numpy as np
import pytest

from fuhp import (char_sum_table, character_value, classify, convolve,
                  hecke_identity, idempotent, idempotent_table, indicator,
                  operator_matrix, projector_matrix, spherical_inventory,
                  structure_constants, t_apply)
from tests.conftest import plane_for


def _mat_mul(q, g, h):
    a, b, c, d = g
    e, f_, g2, h2 = h
    return ((a * e + b * g2) % q, (a * f_ + b * h2) % q,
            (c * e + d * g2) % q, (c * f_ + d * h2) % q)


def test_identity_element():
    p = plane_for(5)
    e = hecke_identity(p)
    for a in range(5):
        f = indicator(p, a)
        assert np.abs(convolve(p, e, f) - f).max() < 1e-10
        assert np.abs(convolve(p, f, e) - f).max() < 1e-10


def test_convolution_commutative():
    p = plane_for(7)
    rng = np.random.default_rng(4)
    for _ in range(10):
        f = rng.normal(size=7) + 1j * rng.normal(size=7)
        h = rng.normal(size=7) + 1j * rng.normal(size=7)
        fh = convolve(p, f, h)
        hf = convolve(p, h, f)
        assert np.abs(fh - hf).max() < 1e-8 * max(1.0, np.abs(fh).max())


def test_structure_constants_identities():
    for q in (3, 5, 7):
        p = plane_for(q)
        k = p.field.order_k
        sizes = p.sphere_sizes.astype(np.int64)
        c = structure_constants(p)
        # convolving with the K-indicator scales by |K|
        for b in range(q):
            for cc in range(q):
                assert c[0, b, cc] == (k if b == cc else 0)
        # total mass and symmetry
        for a in range(q):
            for b in range(q):
                assert int(np.dot(c[a, b], sizes)) == int(sizes[a]) * int(sizes[b]) * k
                assert np.array_equal(c[a, b], c[b, a])


def test_structure_constants_match_convolve():
    p = plane_for(5)
    c = structure_constants(p)
    for a in range(5):
        for b in range(5):
            got = convolve(p, indicator(p, a), indicator(p, b))
            assert np.abs(got - c[a, b]).max() < 1e-8


def test_char_sum_table_against_scalar_characters():
    # the vectorized table equals the literal sum over K of trace values
    for q in (5, 7):
        p = plane_for(q)
        f = p.field
        s = char_sum_table(p)
        reps = spherical_inventory(f)
        for a in range(q):
            ga = p.double_coset_rep(a)
            classes = [classify(f, _mat_mul(q, kmat, ga)) for kmat in p.k_elements]
            for r in reps:
                direct = sum(character_value(f, r, c) for c in classes)
                assert abs(direct.imag) < 1e-8
                assert abs(s[r.index, a] - direct.real) < 1e-7


def test_idempotents_are_idempotent():
    for q in (3, 5, 7):
        p = plane_for(q)
        etas = [idempotent(p, i) for i in range(q)]
        for i in range(q):
            for j in range(q):
                got = convolve(p, etas[i], etas[j])
                expect = etas[i] if i == j else 0.0
                assert np.abs(got - expect).max() < 1e-12
        total = sum(etas)
        assert np.abs(total - hecke_identity(p)).max() < 1e-12


def test_idempotent_table_is_real():
    p = plane_for(11)
    t = idempotent_table(p)
    assert np.isrealobj(t)


def test_projector_matrices():
    q = 5
    p = plane_for(q)
    reps = spherical_inventory(p.field)
    total = np.zeros((p.n_points, p.n_points))
    for r in reps:
        proj = projector_matrix(p, r.index).real
        assert np.abs(proj - proj.T).max() < 1e-12
        assert np.abs(proj @ proj - proj).max() < 1e-10
        assert abs(np.trace(proj) - r.dim) < 1e-8
        total += proj
    assert np.abs(total - np.eye(p.n_points)).max() < 1e-10


def test_operator_matrix_and_apply():
    p = plane_for(5)
    rng = np.random.default_rng(5)
    phi = rng.normal(size=5).astype(complex)
    v = rng.normal(size=p.n_points).astype(complex)
    assert np.abs(operator_matrix(p, phi) @ v - t_apply(p, phi, v)).max() < 1e-12


def test_operators_commute():
    p = plane_for(5)
    mats = [operator_matrix(p, indicator(p, a)) for a in range(5)]
    for a in range(5):
        for b in range(5):
            assert np.abs(mats[a] @ mats[b] - mats[b] @ mats[a]).max() < 1e-9
