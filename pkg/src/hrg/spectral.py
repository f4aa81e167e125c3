"""Adjacency spectra, spectral idempotents and the local spectral checks for HRGs.

The eigensolver is a cyclic Jacobi method in round-robin ("tournament")
order: each round applies n/2 rotations on disjoint index pairs at once,
which keeps every rotation exact while letting numpy do the row/column work.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hrg.errors import ConvergenceError, NotHrg, PreconditionError
from hrg.graph import Graph, distances
from hrg.refinement import Cam, HrgReport

SOLVER_TOL = 1e-13


def _tournament(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """n-1 (or n) rounds of disjoint pairs covering every pair exactly once."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for i in range(size // 2):
            a, b = players[i], players[size - 1 - i]
            if a >= 0 and b >= 0:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.int64), np.array(qs, dtype=np.int64)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_max(a: np.ndarray) -> float:
    off = a - np.diag(np.diagonal(a))
    return float(np.abs(off).max()) if a.size else 0.0


def jacobi_eigh(a, tol: float = SOLVER_TOL, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a symmetric matrix.

    Sweeps until the largest off-diagonal entry is below ``tol * max|a|``.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T, atol=0):
        raise PreconditionError("matrix must be square and symmetric")
    v = np.eye(n)
    scale = float(np.abs(a).max()) if n else 0.0
    threshold = tol * scale
    rounds = _tournament(n) if n > 1 else []
    sweeps = 0
    while _off_max(a) > threshold:
        if sweeps == max_sweeps:
            raise ConvergenceError(sweeps, _off_max(a))
        for p, q in rounds:
            apq = a[p, q]
            live = np.abs(apq) > 0
            if not live.any():
                continue
            p, q, apq = p[live], q[live], apq[live]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            # theta^2 would overflow for tiny apq; then t ~ 1 / (2 theta)
            big = np.abs(theta) > 1e150
            t = np.ones_like(theta)
            t[big] = 0.5 / theta[big]
            mid = ~big & (theta != 0)
            th = theta[mid]
            t[mid] = np.sign(th) / (np.abs(th) + np.sqrt(th * th + 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # a <- J^T a J with J[p,p] = J[q,q] = c, J[p,q] = s, J[q,p] = -s
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = a[q, p] = 0.0
            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
        sweeps += 1
    vals = np.diagonal(a).copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], v[:, order]


@dataclass(frozen=True, eq=False)
class SpectralData:
    eigenvalues: tuple[float, ...]  # distinct, descending
    multiplicities: tuple[int, ...]
    idempotents: tuple[np.ndarray, ...]
    tol: float

    @property
    def d(self) -> int:
        return len(self.eigenvalues) - 1

    def idempotent_residual(self, a: np.ndarray | None = None) -> float:
        """Max-norm defect of E_l^2 = E_l, E_l E_k = 0, sum E_l = I (and sum lambda_l E_l = A)."""
        es = self.idempotents
        n = es[0].shape[0]
        res = float(np.abs(sum(es) - np.eye(n)).max())
        for i, e in enumerate(es):
            res = max(res, float(np.abs(e @ e - e).max()))
            for f in es[i + 1:]:
                res = max(res, float(np.abs(e @ f).max()))
        if a is not None:
            recon = sum(lam * e for lam, e in zip(self.eigenvalues, es))
            res = max(res, float(np.abs(recon - a).max()))
        return res

    def to_dict(self) -> dict:
        return {"eigenvalues": [{"value": v, "multiplicity": m}
                                for v, m in zip(self.eigenvalues, self.multiplicities)]}


def eigendecompose(g: Graph, tol: float = 1e-9, method: str = "jacobi") -> SpectralData:
    """Distinct eigenvalues (grouped within ``10 * tol``) with their spectral projectors."""
    if g.n < 1:
        raise PreconditionError("empty graph has no spectrum")
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    a = g.matrix.astype(np.float64)
    if method == "jacobi":
        vals, vecs = jacobi_eigh(a)
    elif method == "numpy":
        vals, vecs = np.linalg.eigh(a)
    else:
        raise PreconditionError(f"unknown method {method!r}")
    order = np.argsort(-vals, kind="stable")
    vals, vecs = vals[order], vecs[:, order]
    scale = max(1.0, float(np.abs(vals).max()))
    groups: list[list[int]] = []
    for i, lam in enumerate(vals):
        if groups and vals[groups[-1][-1]] - lam <= 10 * tol * scale:
            groups[-1].append(i)
        else:
            groups.append([i])
    eigenvalues = tuple(float(vals[grp].mean()) for grp in groups)
    idempotents = tuple(vecs[:, grp] @ vecs[:, grp].T for grp in groups)
    return SpectralData(eigenvalues, tuple(len(grp) for grp in groups), idempotents, tol)


@dataclass(frozen=True, eq=False)
class CrossedTable:
    root: int
    table: np.ndarray  # table[v, l] = (E_l)_{root, v}


def crossed_multiplicities(g: Graph, spec: SpectralData, root: int) -> CrossedTable:
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} out of range")
    return CrossedTable(root, np.stack([e[root] for e in spec.idempotents], axis=1))


def intertwine_check(g: Graph, report: HrgReport, root: int, cam: Cam | None = None) -> bool:
    """Exact integer check of P A = C P for the root's CAM partition."""
    if not report.is_hrg:
        raise NotHrg("intertwining needs a highly-regular graph")
    cam = cam if cam is not None else report.cam
    p = report.partitions[root].indicator()
    return bool(np.array_equal(p @ g.matrix, cam.array() @ p))


@dataclass(frozen=True)
class AppendixBResult:
    ok: bool
    spectral_regularity_dev: float
    cell_constancy_max_dev: float
    idempotent_residual: float
    intertwine_exact: bool
    tol: float

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "idempotent_residual": self.idempotent_residual,
            "intertwine_exact": self.intertwine_exact,
            "cell_constancy_max_dev": self.cell_constancy_max_dev,
            "spectral_regularity_dev": self.spectral_regularity_dev,
        }


def appendix_b_check(g: Graph, report: HrgReport, spec: SpectralData, tol: float = 1e-9) -> AppendixBResult:
    """Spectral regularity and cell-constant crossed multiplicities, within ``tol``."""
    if not report.is_hrg:
        raise NotHrg("local spectral checks need a highly-regular graph")
    if not distances(g).connected:
        raise PreconditionError("local spectral checks need a connected graph")
    diag = np.stack([np.diagonal(e) for e in spec.idempotents])
    regularity = float((diag.max(axis=1) - diag.min(axis=1)).max())
    constancy = 0.0
    exact = True
    for p in report.partitions:
        table = crossed_multiplicities(g, spec, p.root).table
        for cell in p.cells:
            block = table[list(cell)]
            constancy = max(constancy, float((block.max(axis=0) - block.min(axis=0)).max()))
        exact = exact and intertwine_check(g, report, p.root)
    residual = spec.idempotent_residual(g.matrix.astype(np.float64))
    ok = regularity < tol and constancy < tol and exact
    return AppendixBResult(ok, regularity, constancy, residual, exact, tol)
