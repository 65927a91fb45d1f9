"""Exhaustive search for the graph behind the bundled reference tables.

The reference Yhat table pins the shape of the graph: 7 singletons and
20 of the 21 element pairs are independent, so the graph is loopless
with exactly one doubled edge, i.e. 6 distinct edges on 5 vertices with
one of them repeated.  The search enumerates exactly that space up to
isomorphism, computes Y(1-p, t) for each candidate, and returns every
graph whose matrix equals the reference table.
"""

from __future__ import annotations

from itertools import combinations

from . import dichromate as dc
from . import matroid as mat
from .fixtures import REFERENCE_VERTICES, reference_y1mp
from .graphs import Multigraph


def search_reference_graph() -> list[Multigraph]:
    """All connected 5-vertex 7-edge candidates matching the reference table."""
    target = reference_y1mp()
    n = REFERENCE_VERTICES
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    seen: set[tuple] = set()
    matches = []
    for support in combinations(pairs, 6):
        for doubled in support:
            g = Multigraph(n, list(support) + [doubled])
            if not g.is_connected():
                continue
            key = g.canonical_key()
            if key in seen:
                continue
            seen.add(key)
            M = mat.from_graph(g)
            if dc.y_one_minus_p(dc.y_subset_expansion(M)) == target:
                matches.append(g)
    matches.sort(key=lambda g: g.canonical_key())
    return matches


def describe_match(g: Multigraph) -> dict:
    """Independent-set statistics of a match (basis count, forests, parallel pair)."""
    M = mat.from_graph(g)
    counts = [0] * (M.d + 1)
    for s in M.independent_masks():
        counts[s.bit_count()] += 1
    doubled = sorted(e for e in set(g.edges) if g.edges.count(e) > 1)
    return {
        "edges": [list(e) for e in g.edges],
        "spanning_trees": counts[M.d],
        "independent_counts": counts,
        "doubled_edges": [list(e) for e in doubled],
    }
