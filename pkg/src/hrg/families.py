"""Explicit graph families: tori T_{n,m}, complement construction, product chaining, P(r1, r2, r3)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from hrg.classify import Theorem1Record, theorem1_classify
from hrg.errors import (
    DiameterTooSmall,
    Disconnected,
    InternalInconsistency,
    IsDistanceRegular,
    NotHrg,
    PreconditionError,
)
from hrg.graph import INF, Graph, cartesian_product, complement, cycle, distances, product_of
from hrg.refinement import Cam, analyze_hrg

log = logging.getLogger(__name__)

TORUS_EXCEPTIONS = frozenset({(2, 2), (2, 4), (3, 3), (4, 4)})


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # torus | complement_of | product_list | p_family
    params: tuple = ()
    factors1: tuple[tuple[int, int], ...] = ()
    factors2: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind == "torus":
            n, m = self.params
            if not 2 <= n <= m:
                raise PreconditionError(f"torus spec needs 2 <= n <= m, got {self.params}")
        elif self.kind == "p_family":
            k, r1, r2, r3 = self.params
            if r1 + 3 * r2 + 4 * r3 != k:
                raise PreconditionError(f"r1 + 3 r2 + 4 r3 = {r1 + 3 * r2 + 4 * r3} != k = {k}")
            if (r2, r3) == (0, 0):
                raise PreconditionError("(r2, r3) must not be (0, 0)")
        elif self.kind not in ("complement_of", "product_list"):
            raise PreconditionError(f"unknown family kind {self.kind!r}")

    def build(self) -> Graph:
        if self.kind == "torus":
            return torus(*self.params)
        if self.kind == "p_family":
            return p_family_member(*self.params, list(self.factors1), list(self.factors2))
        raise PreconditionError(f"{self.kind} specs are built from input graphs, not parameters")


def torus(n: int, m: int) -> Graph:
    """T_{n,m} = C_n x C_m (C_2 is a single edge)."""
    if n < 2 or m < 2:
        raise PreconditionError(f"torus needs n, m >= 2, got ({n}, {m})")
    return cartesian_product(cycle(n), cycle(m))


def prop_a1_classify(n: int, m: int, verify: bool = True) -> bool:
    """True iff (n, m) is one of the four distance-regular tori.

    With ``verify`` the answer is compared against a classifier run on T_{n,m}.
    """
    if not 2 <= n <= m:
        raise PreconditionError(f"need 2 <= n <= m, got ({n}, {m})")
    exception = (n, m) in TORUS_EXCEPTIONS
    if verify:
        rec = theorem1_classify(torus(n, m))
        if rec.drg_by_index != exception:
            raise InternalInconsistency(f"T_{n},{m}: classifier says DRG={rec.drg_by_index}")
    return exception


def classify_graph(g: Graph) -> tuple[Theorem1Record, Cam]:
    """Connectivity, HRG and DRG status in one pass; raises on disconnected or non-HRG input."""
    dd = distances(g)
    if not dd.connected:
        raise Disconnected("graph is disconnected")
    report = analyze_hrg(g, dd)
    if not report.is_hrg:
        raise NotHrg(f"not highly-regular (witness {report.failure_witness})")
    return theorem1_classify(g, report, dd), report.cam


def theorem41_construct(g: Graph) -> Graph:
    """Complement of a connected HRG with diameter >= 3; result is HRG, diameter 2, not DRG."""
    dd = distances(g)
    if dd.diameter == INF:
        raise Disconnected("input graph is disconnected")
    report = analyze_hrg(g, dd)
    if not report.is_hrg:
        raise NotHrg("input graph is not highly-regular")
    if dd.diameter < 3:
        raise DiameterTooSmall(f"diameter {dd.diameter} < 3")
    h = complement(g)
    rec, _ = classify_graph(h)
    if rec.diameter != 2 or rec.drg_direct:
        raise InternalInconsistency(f"complement has diameter {rec.diameter}, DRG={rec.drg_direct}")
    if rec.index != report.index:
        raise InternalInconsistency(f"complement index {rec.index} != {report.index}")
    return h


def prop_a3_product(g1: Graph, g2: Graph) -> Graph:
    """Product of a connected non-DRG HRG with a connected HRG; asserted HRG and not DRG."""
    rec1, _ = classify_graph(g1)
    if rec1.drg_direct:
        raise IsDistanceRegular("first factor must not be distance-regular")
    classify_graph(g2)
    h = cartesian_product(g1, g2)
    rec, _ = classify_graph(h)
    if rec.drg_direct:
        raise InternalInconsistency("product of a non-DRG factor came out distance-regular")
    return h


def in_p1(n: int, m: int) -> bool:
    """Valency-3 tori T_{2,m} that are not distance-regular."""
    return n == 2 and m >= 2 and (n, m) not in TORUS_EXCEPTIONS


def in_p2(n: int, m: int) -> bool:
    """Valency-4 tori T_{n,m}, 3 <= n <= m, that are not distance-regular."""
    return 3 <= n <= m and (n, m) not in TORUS_EXCEPTIONS


def p_family_member(k: int, r1: int, r2: int, r3: int,
                    factors1: Sequence[tuple[int, int]], factors2: Sequence[tuple[int, int]],
                    certify: bool = True) -> Graph:
    """C_2^(r1) x (product of r2 valency-3 tori) x (product of r3 valency-4 tori)."""
    FamilySpec("p_family", (k, r1, r2, r3))
    if len(factors1) != r2 or len(factors2) != r3:
        raise PreconditionError(f"need {r2} + {r3} torus factors, got {len(factors1)} + {len(factors2)}")
    for nm in factors1:
        if not in_p1(*nm):
            raise PreconditionError(f"T_{nm} is not a valency-3 non-DRG torus")
    for nm in factors2:
        if not in_p2(*nm):
            raise PreconditionError(f"T_{nm} is not a valency-4 non-DRG torus")
    factors = [cycle(2)] * r1 + [torus(*nm) for nm in list(factors1) + list(factors2)]
    g = product_of(factors)
    if g.valency() != k:
        raise InternalInconsistency(f"product has valency {g.valency()}, expected {k}")
    if certify:
        rec, _ = classify_graph(g)
        if rec.drg_direct:
            raise InternalInconsistency("P-family member is distance-regular")
    return g


def valency_decompositions(k: int) -> Iterator[tuple[int, int, int]]:
    """All (r1, r2, r3) >= 0 with r1 + 3 r2 + 4 r3 = k and (r2, r3) != (0, 0)."""
    for r3 in range(k // 4 + 1):
        for r2 in range((k - 4 * r3) // 3 + 1):
            r1 = k - 4 * r3 - 3 * r2
            if (r2, r3) != (0, 0):
                yield r1, r2, r3


P1_POOL = ((2, 3), (2, 5), (2, 6), (2, 7), (2, 8))
P2_POOL = ((3, 4), (3, 5), (3, 6), (4, 5), (5, 5))


def family_candidates(k: int, max_order: int) -> list[FamilySpec]:
    """Valency-k members (tori for k = 3, 4; P-families otherwise) sorted by order."""
    specs: list[tuple[int, FamilySpec]] = []
    if k == 3:
        for nm in P1_POOL:
            specs.append((nm[0] * nm[1], FamilySpec("torus", nm)))
    elif k == 4:
        for nm in P2_POOL:
            specs.append((nm[0] * nm[1], FamilySpec("torus", nm)))
    else:
        for r1, r2, r3 in valency_decompositions(k):
            for f1 in combinations_with_replacement(P1_POOL, r2):
                for f2 in combinations_with_replacement(P2_POOL, r3):
                    order = 2 ** r1
                    for n, m in f1 + f2:
                        order *= n * m
                    if order <= max_order:
                        specs.append((order, FamilySpec("p_family", (k, r1, r2, r3), f1, f2)))
    specs.sort(key=lambda t: (t[0], t[1].params, t[1].factors1, t[1].factors2))
    return [s for _, s in specs]


@dataclass
class Witness:
    spec: FamilySpec
    graph: Graph = field(repr=False)
    record: Theorem1Record
    cam: Cam = field(repr=False)

    @property
    def certificate(self) -> tuple:
        """Isomorphism invariant separating members: (order, canonical CAM)."""
        return self.graph.n, self.cam.c


def theorem_a6_witnesses(k: int, count: int = 5, max_order: int = 256) -> list[Witness]:
    """``count`` pairwise non-isomorphic connected HRG-not-DRG graphs of valency k.

    Members are certified by the classifier and separated by order or canonical CAM.
    """
    if k < 3:
        raise PreconditionError("valency must be at least 3")
    out: list[Witness] = []
    seen = set()
    for spec in family_candidates(k, max_order):
        g = spec.build() if spec.kind == "torus" else p_family_member(
            *spec.params, list(spec.factors1), list(spec.factors2), certify=False)
        rec, cam = classify_graph(g)
        if rec.drg_direct or g.valency() != k:
            raise InternalInconsistency(f"{spec} is not an HRG-not-DRG of valency {k}")
        w = Witness(spec, g, rec, cam)
        if w.certificate in seen:
            continue
        seen.add(w.certificate)
        out.append(w)
        log.debug("valency %d: %s (n=%d, index=%d)", k, spec, g.n, rec.index)
        if len(out) == count:
            return out
    raise PreconditionError(f"only {len(out)} certified members of valency {k} below order {max_order}")
