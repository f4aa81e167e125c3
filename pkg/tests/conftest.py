import sys
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import regular_graphs_up_to_iso  # noqa: E402

from hrg.families import torus  # noqa: E402
from hrg.graph import complement, complete, cycle, distances, from_edge_list, hypercube, petersen  # noqa: E402


def base_corpus():
    """Named graphs: cycles, small tori, cube, complete graphs, Petersen."""
    out = {f"C{n}": cycle(n) for n in range(3, 13)}
    out.update({f"T{n},{m}": torus(n, m) for n in range(2, 7) for m in range(n, 7)})
    out.update({"Q3": hypercube(3), "K4": complete(4), "K5": complete(5), "Petersen": petersen()})
    return out


def full_corpus():
    """Base corpus plus the complements of members with finite diameter >= 3."""
    out = base_corpus()
    for name, g in list(out.items()):
        d = distances(g).diameter
        if 3 <= d < float("inf"):
            out[f"co-{name}"] = complement(g)
    return out


def small_connected_regular():
    """Every connected regular graph on 2..8 vertices, one per isomorphism class."""
    found = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 2 <= n <= 7 and nx.is_connected(h) and len({d for _, d in h.degree()}) == 1:
            found.append(from_edge_list(n, list(h.edges())))
    by_k = {k: regular_graphs_up_to_iso(8, k) for k in (1, 2, 3)}
    eight = []
    for k, reps in by_k.items():
        for h in reps:
            g = from_edge_list(8, list(h.edges()))
            eight.extend([g, complement(g)])
    eight.append(complete(8))
    found.extend(g for g in eight if distances(g).connected)
    return found


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture(scope="session")
def regular_le8():
    return small_connected_regular()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
