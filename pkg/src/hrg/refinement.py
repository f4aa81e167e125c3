"""Rooted equitable-partition refinement, collapsed adjacency matrices and the index.

For a root ``u`` the coarsest equitable partition refining ``({u}, V - {u})``
is computed by iterated splitting. Its cell order is canonical: every round
replaces each cell, in place, by its sub-cells sorted by the lexicographic
signature ``(#neighbours in cell 0, #neighbours in cell 1, ...)``. Nothing in
that procedure depends on vertex names, so quotient matrices obtained at
different roots (or on isomorphic graphs) can be compared entry by entry.

A CAM partition at ``u`` is any equitable partition with ``{u}`` as a cell,
so it refines ``({u}, rest)`` and has at least as many cells as the coarsest
one. When the coarsest quotients agree at every root their common size is
therefore exactly the index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from hrg.errors import Disconnected, NotEquitable, NotHrg, NotRegular, PreconditionError
from hrg.graph import UNREACHABLE, DistanceData, Graph, distances, induced_degree_sequence


@dataclass(frozen=True)
class RootedPartition:
    root: int
    cells: tuple[tuple[int, ...], ...]
    cell_of: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_cells(cls, root: int, cells: Sequence[Sequence[int]]) -> RootedPartition:
        cells = tuple(tuple(sorted(c)) for c in cells)
        n = sum(len(c) for c in cells)
        cell_of = [-1] * n
        for t, c in enumerate(cells):
            if not c:
                raise ValueError(f"cell {t} is empty")
            for v in c:
                if not 0 <= v < n or cell_of[v] != -1:
                    raise ValueError(f"vertex {v} is repeated or out of range")
                cell_of[v] = t
        if cells[0] != (root,):
            raise ValueError(f"first cell must be the singleton root {{{root}}}")
        return cls(root, cells, tuple(cell_of))

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def indicator(self) -> np.ndarray:
        """The m x n 0/1 matrix whose row t marks the vertices of cell t."""
        p = np.zeros((self.m, len(self.cell_of)), dtype=np.int64)
        p[list(self.cell_of), range(len(self.cell_of))] = 1
        return p


@dataclass(frozen=True)
class Cam:
    """Collapsed adjacency matrix: ``c[i][j]`` neighbours in cell i of any vertex of cell j.

    ``s_sets[i]`` lists the cells at distance ``i`` from the root; cells in
    another component (disconnected graphs only) go to ``unreachable``.
    """

    c: tuple[tuple[int, ...], ...]
    s_sets: tuple[tuple[int, ...], ...]
    cell_sizes: tuple[int, ...]
    unreachable: tuple[int, ...] = ()

    @property
    def m(self) -> int:
        return len(self.c)

    def array(self) -> np.ndarray:
        return np.array(self.c, dtype=np.int64).reshape(self.m, self.m)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.array().sum(axis=0))

    def with_entry(self, i: int, j: int, value: int) -> Cam:
        rows = [list(r) for r in self.c]
        rows[i][j] = value
        return Cam(tuple(map(tuple, rows)), self.s_sets, self.cell_sizes, self.unreachable)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "cam": [list(r) for r in self.c],
            "s_sets": [list(s) for s in self.s_sets],
            "cell_sizes": list(self.cell_sizes),
        }


@dataclass(frozen=True, eq=False)
class HrgReport:
    is_hrg: bool
    cam: Cam | None
    index: int | None
    partitions: tuple[RootedPartition, ...]
    failure_witness: tuple[int, int] | None = None
    flag: str | None = None

    def to_dict(self) -> dict:
        return {
            "is_hrg": self.is_hrg,
            "index": self.index,
            "cam": [list(r) for r in self.cam.c] if self.cam else None,
            "s_sets": [list(s) for s in self.cam.s_sets] if self.cam else None,
            "cell_sizes": list(self.cam.cell_sizes) if self.cam else None,
            "failure_witness": list(self.failure_witness) if self.failure_witness else None,
        }


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome of a check, carrying a witness when it fails."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# refinement
# ---------------------------------------------------------------------------

def _neighbour_counts(g: Graph, color: np.ndarray, m: int) -> np.ndarray:
    src, dst = g.arcs
    flat = np.bincount(src * m + color[dst], minlength=g.n * m)
    return flat.reshape(g.n, m)


def refine(g: Graph, color: np.ndarray) -> np.ndarray:
    """Iterate signature splitting from an initial ordered colouring to its fixpoint.

    ``color`` must use the labels ``0..m-1``; the returned labels are again
    dense, and old colour order is preserved (sub-cells stay in their parent's slot).
    """
    color = np.asarray(color, dtype=np.int64)
    m = int(color.max()) + 1 if g.n else 0
    while True:
        keys = np.column_stack([color, _neighbour_counts(g, color, m)])
        uniq, inv = np.unique(keys, axis=0, return_inverse=True)
        if len(uniq) == m:
            return color
        color = inv.reshape(-1)
        m = len(uniq)


def rooted_coarsest_partition(g: Graph, root: int) -> RootedPartition:
    """Coarsest equitable partition refining ``({root}, V - {root})``, in refinement order."""
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} out of range")
    color = np.ones(g.n, dtype=np.int64)
    color[root] = 0
    if g.n == 1:
        color[:] = 0
    color = refine(g, color)
    m = int(color.max()) + 1
    cells = [[] for _ in range(m)]
    for v, c in enumerate(color.tolist()):
        cells[c].append(v)
    return RootedPartition(root, tuple(map(tuple, cells)), tuple(color.tolist()))


def relabel_by_distance(g: Graph, p: RootedPartition, dd: DistanceData | None = None) -> RootedPartition:
    """Stable-sort cells by their distance from the root (unreachable cells last)."""
    dd = dd if dd is not None else distances(g)
    row = dd.dist[p.root]
    key = []
    for t, cell in enumerate(p.cells):
        ds = {int(row[v]) for v in cell}
        if len(ds) != 1:
            raise PreconditionError(f"cell {t} meets several distance layers: {sorted(ds)}")
        d = ds.pop()
        key.append(float("inf") if d == UNREACHABLE else d)
    order = sorted(range(p.m), key=lambda t: key[t])
    return RootedPartition.from_cells(p.root, [p.cells[t] for t in order])


def _counts_matrix(g: Graph, p: RootedPartition) -> np.ndarray:
    """``counts[y, i]`` = neighbours of vertex y inside cell i."""
    return _neighbour_counts(g, np.array(p.cell_of, dtype=np.int64), p.m)


def equitability_witness(g: Graph, p: RootedPartition) -> tuple[int, int, int, int] | None:
    """``(cell j, y1, y2, cell i)`` if two vertices of cell j differ in their count into cell i."""
    counts = _counts_matrix(g, p)
    for j, cell in enumerate(p.cells):
        block = counts[list(cell)]
        bad = np.flatnonzero((block != block[0]).any(axis=0))
        if len(bad):
            i = int(bad[0])
            y2 = cell[int(np.flatnonzero(block[:, i] != block[0, i])[0])]
            return j, cell[0], y2, i
    return None


def quotient_matrix(g: Graph, p: RootedPartition, dd: DistanceData | None = None) -> Cam:
    """Quotient of an equitable rooted partition, relabelled distance-first.

    Raises :class:`NotEquitable` with the offending cells and vertices otherwise.
    """
    w = equitability_witness(g, p)
    if w is not None:
        raise NotEquitable(*w)
    dd = dd if dd is not None else distances(g)
    q = relabel_by_distance(g, p, dd)
    return _cam_of(g, q, dd)


def _cam_of(g: Graph, q: RootedPartition, dd: DistanceData) -> Cam:
    counts = _counts_matrix(g, q)
    reps = [cell[0] for cell in q.cells]
    c = counts[reps].T
    row = dd.dist[q.root]
    s_sets: dict[int, list[int]] = {}
    unreachable = []
    for t, r in enumerate(reps):
        d = int(row[r])
        if d == UNREACHABLE:
            unreachable.append(t)
        else:
            s_sets.setdefault(d, []).append(t)
    return Cam(
        tuple(tuple(int(x) for x in r) for r in c),
        tuple(tuple(s_sets[d]) for d in sorted(s_sets)),
        q.sizes,
        tuple(unreachable),
    )


def analyze_hrg(g: Graph, dd: DistanceData | None = None) -> HrgReport:
    """Decide highly-regularity via coarsest rooted refinement at every root.

    ``flag == "coarsest-mismatch"`` when two roots give different canonical
    quotients; a strictly finer common CAM is not ruled out in that case.
    """
    if g.valency() is None:
        raise NotRegular(f"degree sequence {sorted(set(g.degrees))} is not constant")
    if g.n < 2:
        return HrgReport(False, None, None, (), None, "trivial")
    dd = dd if dd is not None else distances(g)
    parts = []
    cams = []
    for u in range(g.n):
        q = relabel_by_distance(g, rooted_coarsest_partition(g, u), dd)
        parts.append(q)
        cams.append(_cam_of(g, q, dd))
    for u in range(1, g.n):
        if cams[u] != cams[0]:
            return HrgReport(False, None, None, tuple(parts), (0, u), "coarsest-mismatch")
    cam = cams[0]
    return HrgReport(True, cam, cam.m, tuple(parts))


def verify_cam(g: Graph, cam: Cam, partitions: Sequence[RootedPartition]) -> Verdict:
    """Check that every per-root partition is equitable with quotient ``cam`` in its own labelling.

    The failure witness is ``(root, (i, j), vertex)``: ``vertex`` lies in
    cell j of the root's partition and does not have ``c[i][j]`` neighbours in cell i.
    """
    if len(partitions) != g.n:
        raise PreconditionError(f"expected {g.n} partitions, got {len(partitions)}")
    c = cam.array()
    for p in partitions:
        if p.m != cam.m or p.cells[0] != (p.root,):
            return Verdict(False, (p.root, None, None))
        counts = _counts_matrix(g, p)
        expected = c[:, list(p.cell_of)].T
        bad = np.argwhere(counts != expected)
        if len(bad):
            y, i = (int(x) for x in bad[0])
            return Verdict(False, (p.root, (i, p.cell_of[y]), y))
    return Verdict(True)


def prop23_checks(g: Graph, report: HrgReport, dd: DistanceData | None = None) -> Verdict:
    """Layer structure, equal cell sizes and equal layer degree sequences across roots."""
    if not report.is_hrg:
        raise NotHrg("report is not highly-regular")
    dd = dd if dd is not None else distances(g)
    if not dd.connected:
        raise Disconnected("layer checks need a connected graph")
    cam = report.cam
    sizes = report.partitions[0].sizes
    ref_degrees = None
    for p in report.partitions:
        u = p.root
        layers = dd.layers(u)
        if len(layers) != len(cam.s_sets):
            return Verdict(False, ("layer-count", u))
        for i, s in enumerate(cam.s_sets):
            union = frozenset(v for t in s for v in p.cells[t])
            if union != layers[i]:
                return Verdict(False, ("layer-union", u, i))
        if p.sizes != sizes:
            return Verdict(False, ("cell-sizes", u))
        degs = [induced_degree_sequence(g, layer) for layer in layers]
        if ref_degrees is None:
            ref_degrees = degs
        elif degs != ref_degrees:
            return Verdict(False, ("degree-sequence", u))
    return Verdict(True)
