"""Distance-regular / strongly-regular detection, the index characterisation and CAM bounds.

``is_distance_regular`` and ``is_strongly_regular`` count directly on the
graph and never look at a refinement, so they serve as independent
cross-checks of the CAM-based answers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hrg.errors import Disconnected, InternalInconsistency, NotHrg, NotRegular
from hrg.graph import DistanceData, Graph, distances, induced_degree_sequence
from hrg.refinement import Cam, HrgReport, analyze_hrg


@dataclass(frozen=True)
class IntersectionArray:
    k: int
    b: tuple[int, ...]  # b_0 .. b_{d-1}
    c: tuple[int, ...]  # c_1 .. c_d
    a: tuple[int, ...]  # a_1 .. a_d

    @property
    def d(self) -> int:
        return len(self.c)

    def __post_init__(self):
        if self.b[0] != self.k or self.c[0] != 1:
            raise InternalInconsistency(f"malformed intersection array {self}")
        bs = self.b[1:] + (0,)
        if any(bi + ai + ci != self.k for bi, ai, ci in zip(bs, self.a, self.c)):
            raise InternalInconsistency(f"rows of {self} do not sum to k")


@dataclass(frozen=True)
class Theorem1Record:
    index: int
    diameter: int
    drg_by_index: bool
    drg_direct: bool

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "diameter": self.diameter,
            "drg_by_index": self.drg_by_index,
            "drg_direct": self.drg_direct,
        }


@dataclass(frozen=True)
class BoundProfile:
    b_max: tuple[int, ...]
    c_min: tuple[int, ...]
    c_max: tuple[int, ...]
    star_holds: bool
    star_witness: tuple[int, int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "b_max": list(self.b_max),
            "c_min": list(self.c_min),
            "c_max": list(self.c_max),
            "star_holds": self.star_holds,
            "star_witness": list(self.star_witness) if self.star_witness else None,
        }


def _connected_distances(g: Graph, dd: DistanceData | None) -> DistanceData:
    dd = dd if dd is not None else distances(g)
    if not dd.connected:
        raise Disconnected("graph is disconnected")
    return dd


def is_distance_regular(g: Graph, dd: DistanceData | None = None) -> IntersectionArray | None:
    dd = _connected_distances(g, dd)
    if g.valency() is None:
        return None
    d = int(dd.diameter)
    a = g.matrix.astype(np.float64)
    found: dict[int, tuple[int, int, int]] = {}
    for u in range(g.n):
        row = dd.dist[u]
        layer = np.zeros((g.n, d + 2))
        layer[np.arange(g.n), row] = 1
        # per[v, i] = neighbours of v at distance i from u
        per = (a @ layer).astype(np.int64)
        for v in range(g.n):
            i = int(row[v])
            if i == 0:
                continue
            triple = (int(per[v, i - 1]), int(per[v, i]), int(per[v, i + 1]))
            if found.setdefault(i, triple) != triple:
                return None
    k = g.valency()
    return IntersectionArray(
        k,
        b=(k,) + tuple(found[i][2] for i in range(1, d)),
        c=tuple(found[i][0] for i in range(1, d + 1)),
        a=tuple(found[i][1] for i in range(1, d + 1)),
    )


def is_strongly_regular(g: Graph) -> tuple[int, int, int] | None:
    """``(k, alpha, beta)`` or ``None``; complete graphs have no beta and give ``None``."""
    if g.n and not distances(g).connected:
        raise Disconnected("graph is disconnected")
    k = g.valency()
    if k is None:
        return None
    a = g.matrix
    common = a @ a
    off = ~np.eye(g.n, dtype=bool)
    adjacent = common[(a == 1)]
    non_adjacent = common[(a == 0) & off]
    if len(non_adjacent) == 0 or len(adjacent) == 0:
        return None
    if len(set(adjacent.tolist())) != 1 or len(set(non_adjacent.tolist())) != 1:
        return None
    return k, int(adjacent[0]), int(non_adjacent[0])


def theorem1_classify(g: Graph, report: HrgReport | None = None,
                      dd: DistanceData | None = None) -> Theorem1Record:
    """Index versus diameter, cross-checked against direct distance-regularity."""
    dd = _connected_distances(g, dd)
    report = report if report is not None else analyze_hrg(g, dd)
    if not report.is_hrg:
        raise NotHrg(f"not highly-regular ({report.flag}, witness {report.failure_witness})")
    diam = int(dd.diameter)
    by_index = report.index == diam + 1
    direct = is_distance_regular(g, dd) is not None
    if by_index != direct:
        raise InternalInconsistency(
            f"index {report.index}, diameter {diam}, direct DRG={direct}: characterisation violated"
        )
    return Theorem1Record(report.index, diam, by_index, direct)


def tridiagonal_form(cam: Cam) -> IntersectionArray | None:
    c = cam.array()
    m = cam.m
    if m < 2 or c[0, 1] != 1:
        return None
    k = int(c[1, 0])
    idx = np.arange(m)
    if (c[np.abs(idx[:, None] - idx[None, :]) >= 2] != 0).any():
        return None
    return IntersectionArray(
        k,
        b=tuple(int(c[i + 1, i]) for i in range(m - 1)),
        c=tuple(int(c[i - 1, i]) for i in range(1, m)),
        a=tuple(int(c[i, i]) for i in range(1, m)),
    )


def index_lower_bound(g: Graph, dd: DistanceData | None = None) -> int:
    """``1 + sum_i |degree set of <D_i(u)>|``, maximised over the root ``u``."""
    dd = _connected_distances(g, dd)
    if g.valency() is None:
        raise NotRegular("index bound needs a regular graph")
    best = 0
    for u in range(g.n):
        layers = dd.layers(u)[1:]
        total = 1 + sum(len(set(induced_degree_sequence(g, layer))) for layer in layers)
        best = max(best, total)
    return best


def star_scan(g: Graph, dd: DistanceData) -> tuple[int, int, int] | None:
    """First ``(u, i, x)`` with ``x`` in D_i(u), i < diam, and no neighbour in D_{i+1}(u)."""
    diam = int(dd.diameter)
    a = g.matrix
    for u in range(g.n):
        row = dd.dist[u]
        nxt = (a * (row[None, :] == row[:, None] + 1)).sum(axis=1)
        bad = np.flatnonzero((row < diam) & (nxt == 0))
        if len(bad):
            x = int(bad[0])
            return u, int(row[x]), x
    return None


def bound_profile(g: Graph, report: HrgReport, dd: DistanceData | None = None) -> BoundProfile:
    """Generalised intersection-number bounds read off the CAM, plus the (★) scan.

    Proven inequalities are asserted; a failure raises :class:`InternalInconsistency`.
    """
    if not report.is_hrg:
        raise NotHrg("bound profile needs a highly-regular graph")
    dd = _connected_distances(g, dd)
    c = report.cam.array()
    s = [list(x) for x in report.cam.s_sets]
    d = int(dd.diameter)
    k = g.valency()

    def into(target: list[int], l: int) -> int:
        return int(c[target, l].sum())

    b_max = tuple(max(into(s[i], l) for l in s[i - 1]) for i in range(1, d + 1))
    c_max = tuple(max(into(s[i - 1], l) for l in s[i]) for i in range(1, d + 1))
    c_min = tuple(min(into(s[i - 1], l) for l in s[i]) for i in range(1, d + 1))

    witness = star_scan(g, dd)
    profile = BoundProfile(b_max, c_min, c_max, witness is None, witness)

    if b_max[0] != k or b_max[-1] < 1 or any(x < y for x, y in zip(b_max, b_max[1:])):
        raise InternalInconsistency(f"b_max chain {b_max} violates k >= ... >= 1")
    if c_min[0] != 1 or c_min[-1] > k or any(x > y for x, y in zip(c_min, c_min[1:])):
        raise InternalInconsistency(f"c_min chain {c_min} violates 1 <= ... <= k")
    if any(lo > hi for lo, hi in zip(c_min, c_max)):
        raise InternalInconsistency("c_min exceeds c_max")
    if profile.star_holds:
        for i in range(1, d + 1):
            for j in range(0, d - i + 1):
                if c_max[i - 1] > b_max[j]:
                    raise InternalInconsistency(f"c_{i}^max = {c_max[i - 1]} > b_{j}^max = {b_max[j]}")
    return profile
