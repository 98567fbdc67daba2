"""Block intersection polynomials and the adjacency polynomial of a DRT.

Everything here is exact: ``int`` or ``fractions.Fraction``.  Whether a
quadratic is nonnegative at every integer can flip on a single lattice
point, so no floating point is used anywhere in this module.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Sequence

log = logging.getLogger(__name__)

Number = int | Fraction


def falling_factorial(x: Number, k: int) -> Number:
    """x (x - 1) ... (x - k + 1); equals 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out: Number = 1
    for i in range(k):
        out *= x - i
    return out


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _falling_of_neg_x(k: int) -> list[Fraction]:
    """Coefficients (constant term first) of P(-x, k) = (-x)(-x-1)...(-x-k+1)."""
    poly = [Fraction(1)]
    for i in range(k):
        poly = _poly_mul(poly, [Fraction(-i), Fraction(-1)])
    return poly


@dataclass(frozen=True)
class BipInput:
    s: int
    t: int
    M: tuple[Fraction, ...]
    Lam: tuple[Fraction, ...]

    def __post_init__(self):
        if self.t < 0 or self.s < self.t:
            raise ValueError(f"need 0 <= t <= s, got s={self.s}, t={self.t}")
        if len(self.M) != self.s + 1:
            raise ValueError(f"M needs {self.s + 1} entries, got {len(self.M)}")
        if len(self.Lam) != self.t + 1:
            raise ValueError(f"Lambda needs {self.t + 1} entries, got {len(self.Lam)}")

    @classmethod
    def make(cls, M: Sequence, Lam: Sequence) -> BipInput:
        M = tuple(Fraction(x) for x in M)
        Lam = tuple(Fraction(x) for x in Lam)
        return cls(len(M) - 1, len(Lam) - 1, M, Lam)


def _bip_weights(inp: BipInput) -> list[Fraction]:
    s, t = inp.s, inp.t
    return [
        falling_factorial(s, j) * inp.Lam[j]
        - sum(falling_factorial(i, j) * inp.M[i] for i in range(j, s + 1))
        for j in range(t + 1)
    ]


def block_intersection_poly(inp: BipInput, x: Number) -> Fraction:
    """Evaluate B(x, M, Lambda) exactly."""
    x = Fraction(x)
    w = _bip_weights(inp)
    return sum(
        (comb(inp.t, j) * falling_factorial(-x, inp.t - j) * w[j] for j in range(inp.t + 1)),
        Fraction(0),
    )


def block_intersection_coeffs(inp: BipInput) -> list[Fraction]:
    """Coefficients of B(x, M, Lambda) in x, constant term first, degree t."""
    w = _bip_weights(inp)
    out = [Fraction(0)] * (inp.t + 1)
    for j in range(inp.t + 1):
        for d, c in enumerate(_falling_of_neg_x(inp.t - j)):
            out[d] += comb(inp.t, j) * c * w[j]
    return out


def drt_bip_input(v: int, s: int, M: Sequence | None = None) -> BipInput:
    """Input for a DRT of order v and a transitive subtournament of size s.

    Lambda = [v - s, k - (s-1)/2, lambda - (s-2)/3] with k = (v-1)/2 and
    lambda = (v-3)/4.  M defaults to all zeros.
    """
    k = Fraction(v - 1, 2)
    lam = Fraction(v - 3, 4)
    Lam = [Fraction(v - s), k - Fraction(s - 1, 2), lam - Fraction(s - 2, 3)]
    if M is None:
        M = [0] * (s + 1)
    return BipInput.make(M, Lam)


@dataclass(frozen=True)
class AdjPolynomial:
    """3 C(x, y) = a x^2 + b x + c for a DRT on 4m - 1 vertices."""

    m: int
    y: int
    a: int
    b: int
    c: int

    def __call__(self, x: int) -> int:
        """Value of 3 C(x, y)."""
        return (self.a * x + self.b) * x + self.c

    def value(self, x: Number) -> Fraction:
        """C(x, y) itself."""
        return Fraction(self(x) if isinstance(x, int) else (self.a * x + self.b) * x + self.c, 3)


def adjacency_poly(m: int, y: int) -> AdjPolynomial:
    # 3C = 3x(x+1)(4m-1-y) - 12mxy + 3xy(y+1) + y(y-1)(3m-y-1)
    a = 3 * (4 * m - 1 - y)
    b = a - 12 * m * y + 3 * y * (y + 1)
    c = y * (y - 1) * (3 * m - y - 1)
    return AdjPolynomial(m, y, a, b, c)


def integer_minimum(a: int, b: int, c: int) -> tuple[int, int]:
    """(argmin, min) of a x^2 + b x + c over the integers, for a > 0."""
    if a <= 0:
        raise ValueError("quadratic must open upward")
    lo = (-b) // (2 * a)  # floor of the real vertex
    best = min((lo, lo + 1), key=lambda x: (a * x + b) * x + c)
    return best, (a * best + b) * best + c


def bip_feasible(m: int, y: int) -> bool:
    """True iff C(b, y) >= 0 at every integer b."""
    p = adjacency_poly(m, y)
    if p.a <= 0:
        raise ValueError(f"need y < 4m - 1, got m={m}, y={y}")
    return integer_minimum(p.a, p.b, p.c)[1] >= 0


def bip_witness(m: int, y: int) -> int | None:
    """An integer b with C(b, y) < 0, or None if there is none."""
    p = adjacency_poly(m, y)
    x, val = integer_minimum(p.a, p.b, p.c)
    return x if val < 0 else None


def bip_bound(m: int) -> int:
    """Largest y whose every size 2..y passes the integer nonnegativity test.

    Sizes 0 and 1 are always realisable.  A feasible size following an
    infeasible one is logged but does not extend the bound.
    """
    v = 4 * m - 1
    bound = min(1, v)
    broken = False
    for y in range(2, v):
        if bip_feasible(m, y):
            if broken:
                log.warning("adjacency polynomial feasibility not monotone at m=%d, y=%d", m, y)
            else:
                bound = y
        else:
            broken = True
    return bound


@dataclass(frozen=True)
class Thm54Result:
    m: int
    applicable_cases: tuple[int, ...]
    case_bounds: dict
    bound: int
    epsilon_is_zero: bool


def thm54_bound(m: int) -> Thm54Result:
    """Closed-form case analysis on f = floor(sqrt(1 + 12m)).

    (1) s <= f - 1 always.
    (2) s <= f - 2 when 1 + 12m is a perfect square.
    (3) s <= f - 2 when 1 + 12m is not a square and f - 1 is odd.
    (4) s <= f - 2 when 1 + 12m is not a square and 2f + 1 > sqrt(1 + 48m).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 1 + 12 * m
    f = isqrt(n)
    exact = f * f == n
    cases = {1: f - 1}
    if exact:
        cases[2] = f - 2
    else:
        if (f - 1) % 2 == 1:
            cases[3] = f - 2
        # strict f > (-1 + sqrt(1 + 48m))/2  <=>  (2f + 1)^2 > 1 + 48m
        if (2 * f + 1) ** 2 > 1 + 48 * m:
            cases[4] = f - 2
    return Thm54Result(m, tuple(sorted(cases)), cases, min(cases.values()), exact)


def root_halfwidth_sq(m: int, y: int) -> Fraction | None:
    """Squared half-width of the real interval where C(x, y) < 0.

    The interval is centred at (y - 1)/2; None when C has no real roots.
    Kept as an exact rational so callers can compare against 1/4 etc.
    """
    d = 4 * m - 1 - y
    disc = -3 * d * (y - 1) * (-3 + 12 * m - 4 * y - y * y)
    if disc < 0 or d <= 0:
        return None
    return Fraction(disc, 36 * d * d)
