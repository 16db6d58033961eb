"""Acceptance suite: the eight headline checks at their contract tolerances.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible with ``pytest -s``
or in the captured output) and asserts the same condition.
"""
import math
import time

import numpy as np
from sympy import primerange

from fuhp import (convolve, eigenvalue_table, eigenvalues_bruteforce,
                  eigenvalues_with_multiplicity, hecke_identity, idempotent,
                  make_field_ctx, moment_matrix, ramanujan_check,
                  unweighted_moments, verify_theorem2, verify_theorem3,
                  verify_theorem4, weighted_m2_target, weighted_moments)
from fuhp.plane import PlaneCtx
from tests.conftest import plane_for


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_acceptance_1_oracle_agreement():
    worst = 0.0
    for q in (3, 5, 7, 11, 13):
        p = plane_for(q)
        for a in range(1, q):
            dev = float(np.abs(eigenvalues_bruteforce(p, a)
                               - eigenvalues_with_multiplicity(p, a)).max())
            worst = max(worst, dev)
    _report("eigenvalue formula vs dense oracle (q=3,5,7,11,13; all a)",
            worst <= 1e-6, f"max deviation {worst:.3e} <= 1e-6")


def test_acceptance_2_idempotents():
    worst = 0.0
    for q in (3, 5, 7):
        p = plane_for(q)
        etas = [idempotent(p, i) for i in range(q)]
        for i in range(q):
            for j in range(q):
                got = convolve(p, etas[i], etas[j])
                expect = etas[i] if i == j else 0.0
                worst = max(worst, float(np.abs(got - expect).max()))
        worst = max(worst, float(np.abs(sum(etas) - hecke_identity(p)).max()))
    _report("Hecke idempotent relations (q=3,5,7)",
            worst <= 1e-10, f"max residual {worst:.3e} <= 1e-10")


def test_acceptance_3_first_basis():
    worst = 0.0
    ok = True
    for q in (3, 5, 7):
        r = verify_theorem2(plane_for(q))
        ok &= r["rank"] == q * (q - 1)
        worst = max(worst, r["gram_offdiag_rel"], r["projector_residual"])
    _report("character/convolution eigenbasis: rank q(q-1), orthogonality (q=3,5,7)",
            ok and worst <= 1e-8, f"max residual {worst:.3e} <= 1e-8, full rank {ok}")


def test_acceptance_4_second_basis():
    worst = 0.0
    ok = True
    for q in (5, 7):
        r = verify_theorem3(plane_for(q))
        ok &= r["rank"] == q * (q - 1) and not r["t0_failures"]
        worst = max(worst, r["max_eigen_residual"])
    _report("exponential-sum eigenbasis: rank q(q-1), eigen residuals (q=5,7)",
            ok and worst <= 1e-8, f"max residual {worst:.3e} <= 1e-8, full rank {ok}")


def test_acceptance_5_base_comparison():
    worst = 0.0
    for q in (5, 7, 11):
        r = verify_theorem4(plane_for(q))
        worst = max(worst, r["identity1"]["max_residual"],
                    r["identity2"]["max_residual"], r["identity2"]["max_const_dev"],
                    r["identity3"]["max_residual"], r["identity3"]["max_const_dev"])
    _report("three basis-comparison identities with exact constants (q=5,7,11)",
            worst <= 1e-9, f"max residual {worst:.3e} <= 1e-9")


def test_acceptance_6_moment_identities():
    worst = 0.0
    for q in (3, 5, 7, 11, 13):
        p = plane_for(q)
        _, resid = moment_matrix(p)
        worst = max(worst, resid["mmt"], resid["mtm"])
        for a in range(1, q):
            m1, m2 = weighted_moments(p, a)
            worst = max(worst, abs(m1), abs(m2 - weighted_m2_target(p, a)))
    _report("moment-matrix orthogonality and weighted sums (q=3,5,7,11,13)",
            worst <= 1e-10, f"max residual {worst:.3e} <= 1e-10")


def test_acceptance_7_ramanujan_sweep():
    t0 = time.monotonic()
    violations = []
    min_margin = float("inf")
    for q in primerange(3, 102):
        p = PlaneCtx(make_field_ctx(int(q)))
        bad = {0, 4 * p.field.delta % q}
        for a in range(1, q):
            if a in bad:
                continue
            ok, margin = ramanujan_check(p, a)
            min_margin = min(min_margin, margin)
            if not ok:
                violations.append((int(q), a))
    elapsed = time.monotonic() - t0
    _report("Ramanujan bound for every graph with q <= 101",
            not violations and elapsed < 300.0,
            f"0 violations expected, got {len(violations)}; "
            f"min margin {min_margin:.4f}; {elapsed:.1f}s < 300s")


def test_acceptance_8_moment_convergence():
    worst1 = worst2 = 0.0
    for q in primerange(11, 102):
        q = int(q)
        p = PlaneCtx(make_field_ctx(q))
        bad = {0, 4 * p.field.delta % q}
        a = next(x for x in range(1, q) if x not in bad)
        m = unweighted_moments(p, a)
        worst1 = max(worst1, abs(m[0]) * math.sqrt(q) / 5.0)
        worst2 = max(worst2, abs(m[1] - 1.0) * q / 5.0)
    ok = worst1 <= 1.0 and worst2 <= 1.0
    _report("spectral moments approach the semicircle values (11 <= q <= 101)",
            ok, f"|m1| <= 5/sqrt(q) and |m2-1| <= 5/q; "
                f"worst fractions {worst1:.3f}, {worst2:.3f} of the bounds")
