"""Symmetric association schemes, their relation graphs, and the norm-graph schemes WL(p, r, l)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from hrg.errors import AxiomViolation, InternalInconsistency, PreconditionError
from hrg.field import FiniteField, gf
from hrg.graph import Graph, distances, from_matrix
from hrg.refinement import RootedPartition, equitability_witness


@dataclass(frozen=True, eq=False)
class AssociationScheme:
    x_size: int
    d: int
    relations: tuple[np.ndarray, ...]
    p_nums: np.ndarray  # p_nums[i, j, l] = p_{i,j}^l

    def valency(self, i: int) -> int:
        return int(self.relations[i][0].sum())

    def b_matrix(self, i: int) -> np.ndarray:
        """Intersection matrix B_i with ``B_i[j, l] = p_{i,j}^l``."""
        return self.p_nums[i].copy()

    @property
    def b_mats(self) -> tuple[np.ndarray, ...]:
        return tuple(self.b_matrix(i) for i in range(self.d + 1))

    def to_json(self) -> str:
        return json.dumps({
            "x_size": self.x_size,
            "d": self.d,
            "relations": [r.astype(int).ravel().tolist() for r in self.relations],
        })


def verify_scheme(relations: Sequence) -> AssociationScheme:
    """Check SAS-1..4 exhaustively and compute all intersection numbers.

    Constancy is checked for every ``i, j, l`` including 0, which SAS-1/2 force anyway.
    """
    rels = [np.asarray(r).astype(bool) for r in relations]
    if not rels:
        raise PreconditionError("no relations given")
    n = rels[0].shape[0]
    for r in rels:
        if r.shape != (n, n):
            raise PreconditionError("relation matrices must be square and of equal size")
    d = len(rels) - 1

    eye = np.eye(n, dtype=bool)
    if not (rels[0] == eye).all():
        x, y = np.argwhere(rels[0] != eye)[0]
        raise AxiomViolation("SAS-1", (int(x), int(y)))
    cover = np.sum(rels, axis=0)
    if not (cover == 1).all():
        x, y = np.argwhere(cover != 1)[0]
        raise AxiomViolation("SAS-2", (int(x), int(y)), f"pair lies in {int(cover[x, y])} relations")
    for i, r in enumerate(rels):
        if not r.any():
            raise AxiomViolation("SAS-2", (i,), f"relation R_{i} is empty")
        if (r != r.T).any():
            x, y = np.argwhere(r != r.T)[0]
            raise AxiomViolation("SAS-3", (int(x), int(y)), f"R_{i} is not symmetric")

    mats = [r.astype(np.float64) for r in rels]
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    for i in range(d + 1):
        for j in range(d + 1):
            # (A_i A_j)[x, y] = #{z : (x,z) in R_i, (z,y) in R_j}
            prod = (mats[i] @ mats[j]).round().astype(np.int64)
            for l in range(d + 1):
                vals = prod[rels[l]]
                if (vals != vals[0]).any():
                    x, y = np.argwhere(rels[l] & (prod != vals[0]))[0]
                    raise AxiomViolation("SAS-4", (int(x), int(y)), f"p_{{{i},{j}}}^{l} not constant")
                p[i, j, l] = vals[0]
    return AssociationScheme(n, d, tuple(rels), p)


def scheme_from_json(text: str) -> AssociationScheme:
    obj = json.loads(text)
    n = obj["x_size"]
    rels = [np.array(r, dtype=bool).reshape(n, n) for r in obj["relations"]]
    if len(rels) != obj["d"] + 1:
        raise PreconditionError(f"expected {obj['d'] + 1} relations, got {len(rels)}")
    return verify_scheme(rels)


def relation_graph(s: AssociationScheme, l: int) -> Graph:
    if not 1 <= l <= s.d:
        raise PreconditionError(f"class index must lie in 1..{s.d}, got {l}")
    return from_matrix(s.relations[l].astype(np.int64))


def base_partition(s: AssociationScheme, x: int) -> RootedPartition:
    """``{xR_0, xR_1, ..., xR_d}`` with empty classes dropped."""
    cells = [np.flatnonzero(r[x]).tolist() for r in s.relations]
    return RootedPartition.from_cells(x, [c for c in cells if c])


def base_classes(s: AssociationScheme, x: int) -> list[int]:
    """Class indices i with xR_i nonempty, in the order used by :func:`base_partition`."""
    return [i for i, r in enumerate(s.relations) if r[x].any()]


def theorem5_check(s: AssociationScheme, l: int) -> bool:
    """Every base partition of the R_l graph is equitable with quotient B_l.

    A vertex of xR_j must have exactly ``p_{i,l}^j`` neighbours in xR_i.
    """
    g = relation_graph(s, l)
    bl = s.b_matrix(l)
    for x in range(s.x_size):
        part = base_partition(s, x)
        if equitability_witness(g, part) is not None:
            return False
        keep = base_classes(s, x)
        for j_pos, j in enumerate(keep):
            y = part.cells[j_pos][0]
            for i_pos, i in enumerate(keep):
                count = sum(1 for z in g.adj[y] if part.cell_of[z] == i_pos)
                if count != s.p_nums[i, l, j] or count != bl[i, j]:
                    return False
    return True


def size_balance_holds(s: AssociationScheme) -> bool:
    """``n_l p_{i,j}^l = n_i p_{l,j}^i`` for all classes (n_i = valency of R_i)."""
    nv = [s.valency(i) for i in range(s.d + 1)]
    for i in range(s.d + 1):
        for j in range(s.d + 1):
            for l in range(s.d + 1):
                if nv[l] * s.p_nums[i, j, l] != nv[i] * s.p_nums[l, j, i]:
                    return False
    return True


# ---------------------------------------------------------------------------
# concrete schemes
# ---------------------------------------------------------------------------

def distance_scheme(g: Graph) -> AssociationScheme:
    """Distance relations of a connected graph; a scheme iff g is distance-regular."""
    dd = distances(g)
    if not dd.connected:
        raise PreconditionError("distance scheme needs a connected graph")
    return verify_scheme([dd.dist == i for i in range(int(dd.diameter) + 1)])


def cyclic_scheme(n: int) -> AssociationScheme:
    """Circulant scheme on Z_n: R_i = {(x, y) : y - x = +-i}, i = 0 .. n // 2."""
    diff = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return verify_scheme([(diff == i) | (diff == (n - i) % n) for i in range(n // 2 + 1)])


def wl_relations(field: FiniteField) -> list[np.ndarray]:
    table = field.difference_table()
    norm_of_diff = field.norms[table]
    eye = np.eye(field.order, dtype=bool)
    rels = [eye]
    for i in range(1, field.p):
        rels.append((norm_of_diff == i) & ~eye)
    return rels


def wl_scheme(p: int, r: int) -> AssociationScheme:
    """Classes Delta_i = {(x, y) : N(y - x) = i}, i in F_p^x, on the points of GF(p^r)."""
    if r % 2:
        raise PreconditionError(f"extension degree must be even for symmetric classes, got {r}")
    field = gf(p, r)
    try:
        return verify_scheme(wl_relations(field))
    except AxiomViolation as e:
        raise InternalInconsistency(f"WL({p},{r}) classes failed {e.axiom}") from e


def wl_graph(p: int, r: int, l: int) -> Graph:
    if not 1 <= l < p:
        raise PreconditionError(f"l must be a nonzero element of F_{p}, got {l}")
    return relation_graph(wl_scheme(p, r), l)
