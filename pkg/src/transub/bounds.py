"""Upper bounds on the order of a transitive subtournament.

Each method returns a :class:`BoundReport`.  Floating-point bounds are
floored with a small guard; bounds whose exactness matters (the parity
refinement for regular tournaments) are decided in integer arithmetic.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from math import isqrt

import numpy as np

from . import bip
from .digraph import Digraph, DigraphClass, classify
from .spectral import SeidelSpectrum, spectrum

FLOOR_GUARD = 1e-9
INTERLACING_TOL = 1e-9

METHODS = ("interlacing", "hoffman_general", "hoffman_regular", "drt", "bip", "thm54")


@dataclass(frozen=True)
class BoundReport:
    method: str
    raw_value: float | None
    integer_bound: int | None
    applicable: bool
    notes: str = ""
    exact: bool = False  # raw_value is known to be exactly integer_bound

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("exact")
        return d


def _floor(x: float) -> int:
    return math.floor(x + FLOOR_GUARD)


def _na(method: str, why: str) -> BoundReport:
    return BoundReport(method, None, None, False, why)


def arccot(x: float) -> float:
    """Principal branch with values in (0, pi)."""
    return math.atan2(1.0, x)


def interlacing_value(theta: float) -> float:
    """pi / (2 arccot(theta)), the i = 1 instance of the interlacing test."""
    return math.pi / (2 * arccot(theta))


def interlacing_feasible(thetas: np.ndarray, s: int) -> bool:
    """Can a transitive tournament of order s interlace the given spectrum?"""
    for i in range(1, s // 2 + 1):
        if 1 / math.tan((2 * i - 1) * math.pi / (2 * s)) > thetas[i - 1] + INTERLACING_TOL:
            return False
    return True


def interlacing_bound(spec: SeidelSpectrum) -> BoundReport:
    thetas = spec.expanded()
    best = 1
    for s in range(spec.v, 1, -1):
        if interlacing_feasible(thetas, s):
            best = s
            break
    return BoundReport("interlacing", interlacing_value(float(thetas[0])), best, True)


def hoffman_value(alpha: float, gamma: float, v: int) -> float:
    a2, g2 = alpha * alpha, gamma * gamma
    return (3 * a2 - 3 * g2 + math.sqrt(4 * v * v * (1 + 3 * g2) + 9 * (g2 - a2) ** 2)) / (2 * v)


def hoffman_general(spec: SeidelSpectrum, v: int | None = None) -> BoundReport:
    v = spec.v if v is None else v
    non_main = spec.non_main_set
    if non_main.size == 0:
        return _na("hoffman_general", "every eigenvalue is main; gamma undefined")
    alpha = float(spec.main_set.max())
    gamma = float(non_main.max())
    if alpha > gamma:
        return _na("hoffman_general", f"alpha={alpha:.6g} > gamma={gamma:.6g}")
    raw = hoffman_value(alpha, gamma, v)
    return BoundReport("hoffman_general", raw, _floor(raw), True,
                       f"alpha={alpha:.6g}, gamma={gamma:.6g}")


def hoffman_regular(theta_max: float, v: int, theta_max_sq: int | None = None) -> BoundReport:
    """Bound for regular digraphs.

    When theta_max**2 is known to be the integer ``theta_max_sq`` the floor
    and the exactness flag are computed without floating point.
    """
    raw = hoffman_value(0.0, theta_max, v)
    if theta_max_sq is None:
        return BoundReport("hoffman_regular", raw, _floor(raw), True)
    t = theta_max_sq
    disc = 9 * t * t + 4 * v * v + 12 * t * v * v
    r = isqrt(disc)
    bound = (r - 3 * t) // (2 * v)
    exact = r * r == disc and (r - 3 * t) % (2 * v) == 0
    note = f"theta_max^2={t} (exact)"
    return BoundReport("hoffman_regular", raw, bound, True, note, exact)


def drt_bound_exact(v: int) -> BoundReport:
    """floor((-3 + sqrt(13 + 12v)) / 2) in integer arithmetic."""
    if v % 4 != 3:
        raise ValueError(f"doubly regular tournaments need v = 3 (mod 4), got {v}")
    n = 13 + 12 * v
    r = isqrt(n)
    exact = r * r == n
    raw = (-3 + math.sqrt(n)) / 2
    return BoundReport("drt", raw, (r - 3) // 2, True,
                       "exact integer" if exact else "", exact)


def parity_refine(report: BoundReport, is_regular_tournament: bool,
                  v: int | None = None) -> BoundReport:
    """Equality in the regular bound forces an even order in a regular tournament.

    The argument balances each vertex outside the subtournament, so it says
    nothing when the bound already equals the vertex count ``v``.
    """
    if v is not None and report.applicable and report.integer_bound >= v:
        return report
    if (is_regular_tournament and report.applicable and report.exact
            and report.integer_bound % 2 == 1):
        note = "; ".join(n for n in (report.notes, "parity refinement applied") if n)
        return replace(report, integer_bound=report.integer_bound - 1, notes=note, exact=False)
    return report


def exact_integer_eigenvalue_sq(g: Digraph, theta: float, max_v: int = 200) -> int | None:
    """Return t if theta**2 is (provably) the integer t, else None.

    t is accepted only if K^T K - t I is singular over the rationals.
    """
    t = round(theta * theta)
    if abs(theta * theta - t) > 1e-6 or g.v > max_v:
        return None
    k = g.skew()
    mat = (k.T @ k).tolist()
    for i in range(g.v):
        mat[i][i] -= t
    return t if _rank(mat) < g.v else None


def _rank(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / p[col]
                m[r] = [a - f * b for a, b in zip(m[r], p)]
        rank += 1
    return rank


def bip_report(m: int) -> BoundReport:
    b = bip.bip_bound(m)
    return BoundReport("bip", float(b), b, True, "integer nonnegativity of C(x, y)", True)


def thm54_report(m: int) -> BoundReport:
    res = bip.thm54_bound(m)
    cases = ",".join(str(c) for c in res.applicable_cases)
    return BoundReport("thm54", float(res.bound), res.bound, True, f"cases {cases}", True)


@dataclass(frozen=True)
class BoundSummary:
    v: int
    reports: tuple[BoundReport, ...]
    best: int

    def by_method(self, method: str) -> BoundReport:
        return next(r for r in self.reports if r.method == method)

    def to_dict(self) -> dict:
        return {"reports": [r.to_dict() for r in self.reports], "best": self.best}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _expand_methods(methods) -> set[str]:
    if methods is None:
        return set(METHODS)
    out = set()
    for m in methods:
        if m == "all":
            out |= set(METHODS)
        elif m == "hoffman":
            out |= {"hoffman_general", "hoffman_regular"}
        elif m in METHODS:
            out.add(m)
        else:
            raise ValueError(f"unknown bound method {m!r}")
    return out


def best_bound(g: Digraph, methods=None, cls: DigraphClass | None = None,
               spec: SeidelSpectrum | None = None) -> BoundSummary:
    """Run every requested method; the combined bound is the minimum, clamped to v."""
    wanted = _expand_methods(methods)
    cls = classify(g) if cls is None else cls
    needs_spec = wanted & {"interlacing", "hoffman_general", "hoffman_regular"}
    if needs_spec and spec is None:
        spec = spectrum(g)

    reports: list[BoundReport] = []
    if "interlacing" in wanted:
        reports.append(interlacing_bound(spec))
    if "hoffman_general" in wanted:
        reports.append(hoffman_general(spec, g.v))
    if "hoffman_regular" in wanted:
        if cls.is_regular:
            t = None
            if cls.is_doubly_regular:
                t = g.v
            elif cls.is_tournament:
                t = exact_integer_eigenvalue_sq(g, spec.theta_max)
            rep = hoffman_regular(spec.theta_max, g.v, t)
            reports.append(parity_refine(rep, cls.is_regular_tournament, g.v))
        else:
            reports.append(_na("hoffman_regular", "digraph is not regular"))
    if "drt" in wanted:
        if cls.is_doubly_regular:
            reports.append(parity_refine(drt_bound_exact(g.v), True, g.v))
        else:
            reports.append(_na("drt", "not a doubly regular tournament"))
    for name, fn in (("bip", bip_report), ("thm54", thm54_report)):
        if name in wanted:
            if cls.is_doubly_regular:
                reports.append(fn(cls.m))
            else:
                reports.append(_na(name, "not a doubly regular tournament"))

    values = [r.integer_bound for r in reports if r.applicable]
    best = min([g.v, *values])
    return BoundSummary(g.v, tuple(reports), best)


def drt_upper_bound(v: int) -> BoundSummary:
    """Best bound for any doubly regular tournament of order v, from v alone."""
    m = (v + 1) // 4
    # every positive eigenvalue is sqrt(v), so only the i = 1 test binds
    raw = interlacing_value(math.sqrt(v))
    reports = [
        BoundReport("interlacing", raw, _floor(raw), True),
        parity_refine(drt_bound_exact(v), True, v),
        bip_report(m),
        thm54_report(m),
    ]
    return BoundSummary(v, tuple(reports), min(v, *(r.integer_bound for r in reports)))
