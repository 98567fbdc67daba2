"""Finite fields GF(p^n) with elements encoded as integers 0..q-1.

An element a_0 + a_1 X + ... + a_{n-1} X^{n-1} is stored as the integer
a_0 + a_1 p + ... + a_{n-1} p^{n-1}, so the coefficient vector is read
least-significant first.  Arithmetic goes through precomputed q x q tables,
which is fine for the field sizes used to build Paley tournaments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

import numpy as np

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, n) with q == p**n, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            n = 0
            while q % p == 0:
                q //= p
                n += 1
            return (p, n) if q == 1 else None
    return None


# -- polynomials over GF(p) as coefficient lists, constant term first -------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo the nonzero polynomial b over GF(p)."""
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] * inv % p
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    # linear factors are exactly roots; check them directly first
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(poly)) % p == 0:
            return False
    for d in range(2, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, deg: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree deg.

    Candidates are ordered by (c_0, c_1, ..., c_{deg-1}), constant term first.
    """
    if deg == 1:
        return [0, 1]
    for low in product(range(p), repeat=deg):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return cand
    raise ArithmeticError(f"no irreducible polynomial of degree {deg} over GF({p})")


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    deg: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.deg

    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.deg):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def encode(self, coeffs) -> int:
        return sum(int(c) % self.p * self.p ** i for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return self.encode([-c for c in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def squares(self) -> frozenset[int]:
        """Nonzero squares of the field."""
        return frozenset(self.mul(z, z) for z in range(1, self.q))


def build_field(p: int, deg: int = 1) -> FiniteField:
    """Construct GF(p^deg) with a deterministic modulus.

    Raises ValueError if p is not prime, deg < 1, or the order is too large
    for table-driven arithmetic.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if deg < 1:
        raise ValueError(f"extension degree must be >= 1, got {deg}")
    q = p ** deg
    if q > MAX_ORDER:
        raise OverflowError(f"field order {q} exceeds {MAX_ORDER}")

    modulus = smallest_irreducible(p, deg)
    if deg == 1:
        idx = np.arange(q)
        add = (idx[:, None] + idx[None, :]) % p
        mul = (idx[:, None] * idx[None, :]) % p
    else:
        digits = np.array([[(a // p ** i) % p for i in range(deg)] for a in range(q)])
        weights = p ** np.arange(deg)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                prod = np.convolve(digits[a], digits[b])
                r = poly_mod(prod.tolist(), modulus, p)
                mul[a, b] = mul[b, a] = sum(c * p ** i for i, c in enumerate(r))

    gf = FiniteField(p, deg, tuple(modulus), add.astype(np.int64), mul)
    rng = random.Random(q)
    for a in rng.sample(range(1, q), min(8, q - 1)):
        if gf.pow(a, q - 1) != 1:
            raise ArithmeticError(f"GF({q}) self-check failed at element {a}")
    return gf
