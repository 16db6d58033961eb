import math
import random

import numpy as np
import pytest

from fuhp import FieldError, make_field_ctx


def test_rejects_bad_q():
    for q in (2, 4, 9, 15, 1):
        with pytest.raises(FieldError):
            make_field_ctx(q)


def test_rejects_square_delta():
    with pytest.raises(FieldError):
        make_field_ctx(5, delta=4)
    with pytest.raises(FieldError):
        make_field_ctx(5, delta=0)


def test_auto_delta_is_nonsquare():
    for q in (3, 5, 7, 11, 13, 17):
        f = make_field_ctx(q)
        squares = {x * x % q for x in range(1, q)}
        assert f.delta not in squares
        assert all(d in squares for d in range(1, f.delta))


def test_generator_orders():
    for q in (3, 5, 7, 11, 13):
        f = make_field_ctx(q)
        x = 1
        for n in range(1, q - 1):
            x = x * f.g % q
            assert x != 1
        assert x * f.g % q == 1
        u = (1, 0)
        seen = set()
        for n in range(q * q - 1):
            seen.add(u)
            u = f.mul2(u, f.gamma)
        assert len(seen) == q * q - 1
        assert u == (1, 0)


def test_gamma_power_hits_base_generator():
    for q in (3, 5, 7, 11):
        f = make_field_ctx(q)
        assert f.pow2(f.gamma, q + 1) == (f.g % q, 0)


def test_arithmetic_random_pairs():
    rng = random.Random(0)
    for q in (7, 13):
        f = make_field_ctx(q)
        for _ in range(1000):
            u = (rng.randrange(q), rng.randrange(q))
            v = (rng.randrange(q), rng.randrange(q))
            assert f.add2(u, v) == ((u[0] + v[0]) % q, (u[1] + v[1]) % q)
            prod = f.mul2(u, v)
            assert prod == ((u[0] * v[0] + f.delta * u[1] * v[1]) % q,
                            (u[0] * v[1] + u[1] * v[0]) % q)
            assert f.norm(u) == f.mul2(u, f.conj2(u))[0]
            if u != (0, 0):
                assert f.mul2(u, f.inv2(u)) == (1, 0)


def test_norm_multiplicative():
    rng = random.Random(1)
    f = make_field_ctx(11)
    for _ in range(500):
        u = (rng.randrange(11), rng.randrange(11))
        v = (rng.randrange(11), rng.randrange(11))
        assert f.norm(f.mul2(u, v)) == f.norm(u) * f.norm(v) % 11


def test_sqrt_and_legendre_tables():
    for q in (5, 11, 13):
        f = make_field_ctx(q)
        for x in range(q):
            r = int(f.sqrt_table[x])
            if r >= 0:
                assert r * r % q == x
            leg = f.legendre(x)
            if x == 0:
                assert leg == 0
            else:
                assert leg == (1 if any(y * y % q == x for y in range(1, q)) else -1)


def test_psi_additive_character():
    f = make_field_ctx(7)
    for a in range(7):
        total = sum(f.psi(a, x) for x in range(7))
        expect = 7.0 if a == 0 else 0.0
        assert abs(total - expect) < 1e-12
        for x in range(7):
            for y in range(7):
                assert abs(f.psi(a, x + y) - f.psi(a, x) * f.psi(a, y)) < 1e-12


def test_chi_multiplicative_character():
    f = make_field_ctx(7)
    for i in range(6):
        total = sum(f.chi(i, x) for x in range(1, 7))
        expect = 6.0 if i % 6 == 0 else 0.0
        assert abs(total - expect) < 1e-12
    assert f.chi(1, 0) == 0


def test_omega_on_norm_one_subgroup():
    f = make_field_ctx(7)
    u1 = f.norm_one_subgroup
    assert len(u1) == 8
    assert all(f.norm(u) == 1 for u in u1)
    # omega^{i(q-1)} restricted to U_1 is a character of order dividing q+1;
    # it sums to zero exactly when the restriction is nontrivial
    for i in range(1, 8):
        total = sum(f.omega(i * (7 - 1), u) for u in u1)
        expect = 8.0 if (i * 6) % 8 == 0 else 0.0
        assert abs(total - expect) < 1e-10


def test_jacobi_sum_magnitude():
    f = make_field_ctx(11)
    half = 5
    for i in range(1, 10):
        j = f.jacobi_sum(i, half)
        if (i + half) % 10 != 0:
            assert abs(abs(j) - math.sqrt(11)) < 1e-9


def test_group_orders():
    f = make_field_ctx(5)
    assert f.order_k == 24
    assert f.order_g == 24 * 20


def test_inv_table():
    f = make_field_ctx(13)
    for x in range(1, 13):
        assert int(f.inv_table[x]) * x % 13 == 1
