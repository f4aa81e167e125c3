"""Finite simple undirected graphs: storage, ingestion, metrics and basic constructions.

Vertices are the dense integers ``0..n-1``. A :class:`Graph` keeps both a
sorted neighbour list and an integer bitset per vertex; both are derived from
the same edge set at construction time and never mutated afterwards.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from hrg.errors import GraphError, ParseError

#: Diameter of a disconnected graph.
INF = math.inf
#: Entry of the distance matrix for an unreachable pair.
UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    bits: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.adj) != self.n or len(self.bits) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise GraphError(f"loop at vertex {u}")
            if any(a >= b for a, b in zip(nbrs, nbrs[1:])):
                raise GraphError(f"neighbour list of {u} is not strictly sorted")
            if sum(1 << v for v in nbrs) != self.bits[u]:
                raise GraphError(f"bitset of {u} disagrees with its neighbour list")
            for v in nbrs:
                if not self.bits[v] >> u & 1:
                    raise GraphError(f"edge {u}-{v} is not symmetric")

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (int64, read-only)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        src, dst = self.arcs
        a[src, dst] = 1
        a.flags.writeable = False
        return a

    @cached_property
    def arcs(self) -> tuple[np.ndarray, np.ndarray]:
        """Both orientations of every edge as parallel (source, target) arrays."""
        src = np.fromiter((u for u, nb in enumerate(self.adj) for _ in nb), dtype=np.int64)
        dst = np.fromiter((v for nb in self.adj for v in nb), dtype=np.int64)
        return src, dst

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adj)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adj) for v in nb if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def valency(self) -> int | None:
        """Common degree of a regular graph, ``None`` otherwise."""
        degs = set(self.degrees)
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def is_regular(self) -> bool:
        return self.valency() is not None


@dataclass(frozen=True, eq=False)
class DistanceData:
    """All-pairs hop distances. ``dist[u, v] == UNREACHABLE`` marks disconnected pairs."""

    dist: np.ndarray
    diameter: float | int

    @property
    def connected(self) -> bool:
        return self.diameter != INF

    def layers(self, u: int) -> list[frozenset[int]]:
        """``[D_0(u), D_1(u), ...]`` up to the eccentricity of ``u``."""
        row = self.dist[u]
        ecc = int(row.max())
        return [frozenset(np.flatnonzero(row == i).tolist()) for i in range(ecc + 1)]


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {u}) rejected")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return _from_sets(nbrs)


def _from_sets(nbrs: Sequence[Iterable[int]]) -> Graph:
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    bits = tuple(sum(1 << v for v in nb) for nb in adj)
    return Graph(len(adj), adj, bits)


def from_matrix(a) -> Graph:
    """Graph from a symmetric 0/1 matrix with zero diagonal."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError("adjacency matrix must be square")
    if (a != a.T).any():
        raise GraphError("adjacency matrix is not symmetric")
    if np.diagonal(a).any():
        raise GraphError("adjacency matrix has loops")
    return _from_sets([np.flatnonzero(row).tolist() for row in a])


def distances(g: Graph) -> DistanceData:
    dist = np.full((g.n, g.n), UNREACHABLE, dtype=np.int64)
    for s in range(g.n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for v in g.adj[u]:
                if row[v] == UNREACHABLE:
                    row[v] = du
                    queue.append(v)
    dist.flags.writeable = False
    if (dist == UNREACHABLE).any():
        diameter: float | int = INF
    else:
        diameter = int(dist.max()) if g.n else 0
    return DistanceData(dist, diameter)


def diameter(g: Graph) -> float | int:
    return distances(g).diameter


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in range(g.n):
            if frontier >> u & 1:
                nxt |= g.bits[u]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return _from_sets(
        [[v for v in range(g.n) if (full ^ g.bits[u] ^ (1 << u)) >> v & 1] for u in range(g.n)]
    )


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex ``(u1, u2)`` is encoded as ``u1 * g2.n + u2``."""
    n2 = g2.n
    nbrs = []
    for u1 in range(g1.n):
        for u2 in range(n2):
            row = [u1 * n2 + v2 for v2 in g2.adj[u2]]
            row += [v1 * n2 + u2 for v1 in g1.adj[u1]]
            nbrs.append(row)
    return _from_sets(nbrs)


def product_of(factors: Sequence[Graph]) -> Graph:
    """Left-nested Cartesian product of a non-empty factor list."""
    if not factors:
        raise GraphError("product of an empty factor list")
    out = factors[0]
    for f in factors[1:]:
        out = cartesian_product(out, f)
    return out


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Induced subgraph, relabelled to ``0..len(vs)-1`` in increasing vertex order."""
    vs = sorted(set(vs))
    _check_vertices(g, vs)
    index = {v: i for i, v in enumerate(vs)}
    return _from_sets([[index[w] for w in g.adj[v] if w in index] for v in vs])


def induced_degree_sequence(g: Graph, vs: Iterable[int]) -> tuple[int, ...]:
    vs = list(vs)
    _check_vertices(g, vs)
    mask = sum(1 << v for v in set(vs))
    return tuple(sorted((g.bits[v] & mask).bit_count() for v in set(vs)))


def _check_vertices(g: Graph, vs: Iterable[int]) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def cycle(n: int) -> Graph:
    """The n-cycle; ``cycle(2)`` is the single edge K2."""
    if n < 2:
        raise GraphError(f"cycle needs n >= 2, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def hypercube(d: int) -> Graph:
    return from_edge_list(1 << d, [(u, u ^ (1 << i)) for u in range(1 << d) for i in range(d)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def _g6_size(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(g: Graph) -> str:
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    words = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(63 + x) for x in _g6_size(g.n) + words)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    data = []
    for i, ch in enumerate(s):
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise ParseError(f"byte {ch!r} outside the graph6 range", offset=i)
        data.append(x)

    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated 8-byte size header", offset=len(data))
        n, pos = _g6_word(data[2:8]), 8
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte size header", offset=len(data))
        n, pos = _g6_word(data[1:4]), 4

    nbits = n * (n - 1) // 2
    body = data[pos:]
    need = -(-nbits // 6)
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}",
                         offset=pos + min(len(body), need))
    flat = [(w >> (5 - b)) & 1 for w in body for b in range(6)]
    if any(flat[nbits:]):
        raise ParseError("nonzero padding bits", offset=len(data) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if flat[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def _g6_word(xs: Sequence[int]) -> int:
    out = 0
    for x in xs:
        out = (out << 6) | x
    return out


def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``u v`` pair per line (0-based)."""
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge list", line=1)
    no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected a vertex count, got {head!r}", line=no) from None
    edges = []
    for no, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", line=no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}", line=no) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"invalid edge {ln!r} for n={n}", line=no)
        edges.append((u, v))
    return from_edge_list(n, edges)


def parse_graph(text: str) -> Graph:
    """Auto-detect graph6 (one token, no spaces) versus the edge-list format."""
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if not first:
        raise ParseError("no graph in input", line=1)
    if first.isdigit() or " " in first or "\t" in first:
        return from_edge_list_text(text)
    return from_graph6(first)
