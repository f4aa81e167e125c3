"""Search small regular graphs for a common CAM finer than the coarsest rooted partitions.

For every connected regular graph on at most ``--max-n`` vertices that the HRG
decision rejects ("coarsest-mismatch"), enumerate all rooted equitable
partitions at every root and look for a quotient matrix, up to relabelling of
the non-root cells, with fewer than n cells that occurs at every root.
"""

import argparse
import sys
from itertools import permutations
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from conftest import small_connected_regular  # noqa: E402
from oracles import is_equitable, quotient, set_partitions  # noqa: E402

from hrg.refinement import analyze_hrg  # noqa: E402


def canonical(c, sizes):
    """Smallest row-major form of ``c`` over relabellings that fix cell 0."""
    m = len(c)
    sig = [(sizes[i], c[i][i], tuple(sorted(c[i])), tuple(sorted(r[i] for r in c))) for i in range(m)]
    rest = sorted(range(1, m), key=lambda i: sig[i])
    groups, start = [], 0
    for j in range(1, len(rest) + 1):
        if j == len(rest) or sig[rest[j]] != sig[rest[start]]:
            groups.append(rest[start:j])
            start = j
    best = None

    def rec(gi, order):
        nonlocal best
        if gi == len(groups):
            key = tuple(c[i][j] for i in order for j in order)
            best = key if best is None or key < best else best
            return
        for perm in permutations(groups[gi]):
            rec(gi + 1, order + list(perm))

    rec(0, [0])
    return best


def rooted_quotients(adj, u):
    n = len(adj)
    out = set()
    for blocks in set_partitions([v for v in range(n) if v != u]):
        cells = [[u]] + blocks
        if len(cells) < n and is_equitable(adj, cells):
            out.add((len(cells), canonical(quotient(adj, cells), [len(c) for c in cells])))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.parse_args()
    rejected = [g for g in small_connected_regular() if not analyze_hrg(g).is_hrg]
    print(f"{len(rejected)} connected regular graphs on <= 8 vertices are rejected")
    finer = 0
    for g in rejected:
        common = set.intersection(*(rooted_quotients(g.adj, u) for u in range(g.n)))
        if common:
            finer += 1
            print(f"  n={g.n} edges={g.num_edges}: common CAM with {min(m for m, _ in common)} cells")
    print(f"rejected graphs admitting a finer common CAM (m < n): {finer}")


if __name__ == "__main__":
    main()
