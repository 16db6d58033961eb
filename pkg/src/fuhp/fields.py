"""Exact arithmetic in F_q (q an odd prime) and its quadratic extension
F_q(sqrt(delta)), plus the additive and multiplicative characters built on
top of precomputed discrete-log tables.

Conventions:
  * elements of F_q are plain ints in {0, ..., q-1};
  * elements of F_q(sqrt(delta)) are pairs (x, y) meaning x + y*sqrt(delta);
  * chi^i(0) = 0 for every i (including i = 0) inside character sums, and
    likewise for the quadratic character; standalone evaluation at 0 is a
    caller error for the multiplicative characters.

Only prime q is supported: the additive character is then x -> exp(2*pi*i*x/q)
with no field-trace machinery needed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import factorint, isprime

Fq2Elem = tuple[int, int]


class FieldError(ValueError):
    """A (q, delta) pair violating the construction hypotheses."""


def _is_generator(c: int, q: int, prime_factors: list[int]) -> bool:
    return all(pow(c, (q - 1) // p, q) != 1 for p in prime_factors)


@dataclass(eq=False)
class FieldCtx:
    """Immutable arithmetic context for F_q and F_q(sqrt(delta)).

    Build with :func:`make_field_ctx`; treat as read-only afterwards.
    All operations are pure, so a context is safe to share between threads.
    """

    q: int
    delta: int
    g: int                      # generator of F_q^*, smallest one
    gamma: Fq2Elem              # generator of the extension units, gamma^(q+1) = g
    log_table_q: np.ndarray     # log_table_q[g^k % q] = k; entry at 0 is -1
    log_table_q2: np.ndarray    # (q, q); log_table_q2[x, y] = k with gamma^k = (x, y)

    # ---- F_q arithmetic -------------------------------------------------

    def inv(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return pow(x, self.q - 2, self.q)

    @cached_property
    def inv_table(self) -> np.ndarray:
        t = np.zeros(self.q, dtype=np.int64)
        for x in range(1, self.q):
            t[x] = pow(x, self.q - 2, self.q)
        return t

    @cached_property
    def sqrt_table(self) -> np.ndarray:
        """sqrt_table[v] = smallest square root of v, or -1 if v is not a square."""
        t = np.full(self.q, -1, dtype=np.int64)
        for x in range((self.q + 1) // 2, -1, -1):
            t[(x * x) % self.q] = x
        return t

    def legendre(self, x: int) -> int:
        """Quadratic character s(x): +1 on nonzero squares, -1 otherwise, 0 at 0."""
        x %= self.q
        if x == 0:
            return 0
        return 1 if self.log_table_q[x] % 2 == 0 else -1

    @cached_property
    def legendre_table(self) -> np.ndarray:
        t = np.zeros(self.q, dtype=np.int64)
        for x in range(1, self.q):
            t[x] = self.legendre(x)
        return t

    # ---- extension field ------------------------------------------------

    def add2(self, u: Fq2Elem, v: Fq2Elem) -> Fq2Elem:
        return ((u[0] + v[0]) % self.q, (u[1] + v[1]) % self.q)

    def sub2(self, u: Fq2Elem, v: Fq2Elem) -> Fq2Elem:
        return ((u[0] - v[0]) % self.q, (u[1] - v[1]) % self.q)

    def mul2(self, u: Fq2Elem, v: Fq2Elem) -> Fq2Elem:
        q, d = self.q, self.delta
        return ((u[0] * v[0] + d * u[1] * v[1]) % q, (u[0] * v[1] + u[1] * v[0]) % q)

    def conj2(self, u: Fq2Elem) -> Fq2Elem:
        return (u[0] % self.q, (-u[1]) % self.q)

    def norm(self, u: Fq2Elem) -> int:
        """Norm x^2 - delta*y^2 of x + y*sqrt(delta), down to F_q."""
        return (u[0] * u[0] - self.delta * u[1] * u[1]) % self.q

    def inv2(self, u: Fq2Elem) -> Fq2Elem:
        n = self.norm(u)
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in the extension field")
        ninv = self.inv(n)
        return (u[0] * ninv % self.q, (-u[1]) * ninv % self.q)

    def pow2(self, u: Fq2Elem, k: int) -> Fq2Elem:
        if k < 0:
            u, k = self.inv2(u), -k
        out: Fq2Elem = (1, 0)
        base = u
        while k:
            if k & 1:
                out = self.mul2(out, base)
            base = self.mul2(base, base)
            k >>= 1
        return out

    # ---- characters -----------------------------------------------------

    @cached_property
    def _roots_q(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.arange(self.q) / self.q)

    @cached_property
    def _roots_qm1(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.arange(self.q - 1) / (self.q - 1))

    @cached_property
    def _roots_q2m1(self) -> np.ndarray:
        n = self.q * self.q - 1
        return np.exp(2j * np.pi * np.arange(n) / n)

    def psi(self, a: int, x: int) -> complex:
        """Additive character psi_a(x) = exp(2*pi*i*a*x/q)."""
        return complex(self._roots_q[(a * x) % self.q])

    def chi(self, i: int, x: int) -> complex:
        """Multiplicative character chi^i of order dividing q-1; 0 at x = 0."""
        x %= self.q
        if x == 0:
            return 0j
        return complex(self._roots_qm1[(i * int(self.log_table_q[x])) % (self.q - 1)])

    def omega(self, i: int, alpha: Fq2Elem) -> complex:
        """Multiplicative character omega^i of the extension units; 0 at 0."""
        alpha = (alpha[0] % self.q, alpha[1] % self.q)
        if alpha == (0, 0):
            return 0j
        n = self.q * self.q - 1
        return complex(self._roots_q2m1[(i * int(self.log_table_q2[alpha])) % n])

    # ---- derived objects ------------------------------------------------

    @cached_property
    def norm_one_subgroup(self) -> list[Fq2Elem]:
        """The q+1 extension elements of norm 1, as powers of gamma^(q-1)."""
        u = self.pow2(self.gamma, self.q - 1)
        out = []
        cur: Fq2Elem = (1, 0)
        for _ in range(self.q + 1):
            out.append(cur)
            cur = self.mul2(cur, u)
        return out

    def jacobi_sum(self, i: int, j: int) -> complex:
        """J(chi^i, chi^j) = sum over x != 0, 1 of chi^i(x) chi^j(1-x)."""
        return sum(self.chi(i, x) * self.chi(j, 1 - x) for x in range(2, self.q))

    @property
    def order_k(self) -> int:
        """|K| = q^2 - 1 (K is isomorphic to the extension units)."""
        return self.q * self.q - 1

    @property
    def order_g(self) -> int:
        """|GL_2(F_q)| = (q^2 - 1)(q^2 - q)."""
        return (self.q * self.q - 1) * (self.q * self.q - self.q)


def make_field_ctx(q: int, delta: int | None = None) -> FieldCtx:
    """Build a :class:`FieldCtx`, validating all hypotheses.

    ``delta=None`` selects the smallest non-square of F_q.  Generators are
    chosen deterministically: the smallest generator g of F_q^*, then the
    smallest (by (x, y) lift order) extension generator gamma with
    gamma^(q+1) = g, so that the restriction of omega^(q+1) to F_q^* is chi.
    """
    if q % 2 == 0:
        raise FieldError(f"q = {q} is even; an odd prime is required")
    if not isprime(q):
        raise FieldError(f"q = {q} is not prime (prime powers are unsupported)")
    if q < 3:
        raise FieldError(f"q = {q} is too small; need q >= 3")

    if delta is None:
        delta = next(d for d in range(2, q) if pow(d, (q - 1) // 2, q) == q - 1)
    else:
        delta %= q
        if delta == 0 or pow(delta, (q - 1) // 2, q) != q - 1:
            r = min((x for x in range(q) if x * x % q == delta), default=None)
            raise FieldError(
                f"delta = {delta} is a square mod {q}"
                + (f" ({r}^2 = {delta})" if r is not None else "")
                + "; a non-square is required"
            )

    fac1 = list(factorint(q - 1))
    g = next(c for c in range(2, q) if _is_generator(c, q, fac1))

    log_q = np.full(q, -1, dtype=np.int64)
    cur = 1
    for k in range(q - 1):
        log_q[cur] = k
        cur = cur * g % q

    n2 = q * q - 1
    fac2 = list(factorint(n2))

    def mul2(u: Fq2Elem, v: Fq2Elem) -> Fq2Elem:
        return ((u[0] * v[0] + delta * u[1] * v[1]) % q, (u[0] * v[1] + u[1] * v[0]) % q)

    def pow2(u: Fq2Elem, k: int) -> Fq2Elem:
        out: Fq2Elem = (1, 0)
        while k:
            if k & 1:
                out = mul2(out, u)
            u = mul2(u, u)
            k >>= 1
        return out

    gamma: Fq2Elem | None = None
    for x in range(q):
        for y in range(1, q):  # generators never lie in F_q itself
            cand = (x, y)
            if any(pow2(cand, n2 // p) == (1, 0) for p in fac2):
                continue
            if pow2(cand, q + 1) == (g, 0):
                gamma = cand
                break
        if gamma is not None:
            break
    assert gamma is not None, "no compatible extension generator found"

    log_q2 = np.full((q, q), -1, dtype=np.int64)
    cur2: Fq2Elem = (1, 0)
    for k in range(n2):
        log_q2[cur2] = k
        cur2 = mul2(cur2, gamma)

    return FieldCtx(q=q, delta=delta, g=g, gamma=gamma,
                    log_table_q=log_q, log_table_q2=log_q2)
