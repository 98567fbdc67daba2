"""Spectrum of the Seidel matrix S = i(A - A^T) and related quadratic forms.

S is Hermitian with eigenvalues symmetric about zero.  Distinct eigenvalues
are grouped with a relative tolerance; each group keeps an orthonormal basis
of its eigenspace so that E_theta x (the orthogonal projection) can be
applied without forming v x v projectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .digraph import Digraph

GROUP_RTOL = 1e-7
MAIN_ATOL = 1e-7


class SpectralError(ArithmeticError):
    pass


def seidel_matrix(g: Digraph) -> np.ndarray:
    return 1j * g.skew().astype(float)


def seidel_action(g: Digraph, x) -> np.ndarray:
    """S_G x computed as i * (K x) with K = A - A^T."""
    x = np.asarray(x)
    if x.shape != (g.v,):
        raise ValueError(f"vector of length {g.v} expected, got shape {x.shape}")
    return 1j * (g.skew() @ x)


def characteristic_vector(v: int, vertices) -> np.ndarray:
    chi = np.zeros(v)
    idx = list(vertices)
    if len(set(idx)) != len(idx):
        raise ValueError("repeated vertex in vertex set")
    chi[idx] = 1.0
    return chi


@dataclass(frozen=True, eq=False)
class SeidelSpectrum:
    """Distinct Seidel eigenvalues (descending) with multiplicities and main angles."""

    v: int
    eigenvalues: np.ndarray
    multiplicities: np.ndarray
    main_angles: np.ndarray
    _bases: tuple[np.ndarray, ...] = field(repr=False)

    @property
    def is_main(self) -> np.ndarray:
        return self.main_angles > MAIN_ATOL

    @property
    def main_set(self) -> np.ndarray:
        return self.eigenvalues[self.is_main]

    @property
    def non_main_set(self) -> np.ndarray:
        return self.eigenvalues[~self.is_main]

    @property
    def theta_max(self) -> float:
        return float(self.eigenvalues[0])

    def expanded(self) -> np.ndarray:
        """All v eigenvalues, repeated by multiplicity, in descending order."""
        return np.repeat(self.eigenvalues, self.multiplicities)

    def project(self, index: int, x) -> np.ndarray:
        """E_theta x for the eigenvalue at position ``index``."""
        u = self._bases[index]
        return u @ (u.conj().T @ np.asarray(x, dtype=complex))

    def to_records(self) -> list[dict]:
        return [
            {
                "eigenvalue": float(t),
                "multiplicity": int(mult),
                "main_angle": float(b),
                "is_main": bool(b > MAIN_ATOL),
            }
            for t, mult, b in zip(self.eigenvalues, self.multiplicities, self.main_angles)
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_records())


def spectrum(g: Digraph) -> SeidelSpectrum:
    v = g.v
    try:
        w, vecs = np.linalg.eigh(seidel_matrix(g))
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"Hermitian eigensolver failed for v={v}: {exc}") from exc
    # eigh returns ascending order; the spectrum of a skew matrix times i is
    # symmetric, so average each value with its mirror to remove rounding skew
    w = (w - w[::-1]) / 2
    order = np.argsort(-w, kind="stable")
    w, vecs = w[order], vecs[:, order]

    tol = GROUP_RTOL * max(1.0, float(np.abs(w).max(initial=0.0)))
    groups: list[list[int]] = []
    for i, t in enumerate(w):
        if groups and abs(w[groups[-1][0]] - t) <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])

    ones = np.ones(v)
    eigenvalues, mults, angles, bases = [], [], [], []
    for grp in groups:
        vals = w[grp]
        eigenvalues.append(0.0 if abs(vals.mean()) <= tol else float(vals.mean()))
        mults.append(len(grp))
        u = vecs[:, grp]
        bases.append(u)
        proj = u.conj().T @ ones
        angles.append(float(np.linalg.norm(proj)) / np.sqrt(v))
    return SeidelSpectrum(
        v,
        np.array(eigenvalues),
        np.array(mults, dtype=np.int64),
        np.array(angles),
        tuple(bases),
    )


def project_lagrange(g: Digraph, spec: SeidelSpectrum, index: int, x) -> np.ndarray:
    """E_theta x via the interpolation product over the other eigenvalues.

    Uses only matrix-vector products with S, so it is independent of the
    eigenvectors held in ``spec``.  Accurate when distinct eigenvalues are
    well separated; loses digits when they cluster.
    """
    theta = spec.eigenvalues[index]
    y = np.asarray(x, dtype=complex)
    for j, tau in enumerate(spec.eigenvalues):
        if j != index:
            y = (seidel_action(g, y) - tau * y) / (theta - tau)
    return y


def main_angles_lagrange(g: Digraph, spec: SeidelSpectrum) -> np.ndarray:
    ones = np.ones(g.v)
    return np.array(
        [np.linalg.norm(project_lagrange(g, spec, i, ones)) / np.sqrt(g.v)
         for i in range(len(spec.eigenvalues))]
    )


def quadratic_form_F(g: Digraph, spec: SeidelSpectrum, vertices) -> float:
    """chi^T F_G chi, where F_G projects onto the main eigenspaces."""
    chi = characteristic_vector(g.v, vertices)
    total = 0.0
    for i in np.flatnonzero(spec.is_main):
        u = spec._bases[i]
        total += float(np.linalg.norm(u.conj().T @ chi) ** 2)
    return total


def quadratic_form_SS(g: Digraph, vertices) -> int:
    """chi^T S S^* chi = ||K chi||^2, computed in integers."""
    idx = list(vertices)
    if len(set(idx)) != len(idx):
        raise ValueError("repeated vertex in vertex set")
    col = g.skew()[:, idx].sum(axis=1)
    return int(col @ col)
