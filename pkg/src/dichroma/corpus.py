"""The built-in verification corpus.

Graphs: all connected loopless multigraphs up to isomorphism within the
given vertex/edge caps, enumerated as multisets of vertex pairs and
deduplicated by the lexicographically minimal relabeling.  Loop edges
are omitted from the enumeration because every identity this package
checks is insensitive to them on the graph side; matroid-level loops
are covered by the direct sums with the one-element rank-zero matroid
that the matroid corpus adds on top (plus dedicated loopy graphs in the
unit tests).

Matroids: graphic matroids of the corpus graphs, uniform matroids, the
duals of all of those, and direct sums with the one-element matroids of
rank zero and one.  Entries are deduplicated by exact rank table and
returned in a deterministic order with human-readable names.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations

from . import matroid as mat
from .graphs import Multigraph
from .matroid import Matroid


def connected_multigraphs(max_n: int, max_m: int) -> list[Multigraph]:
    """Connected loopless multigraphs with n <= max_n, m <= max_m, up to iso."""
    out: list[Multigraph] = []
    for n in range(1, max_n + 1):
        slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
        slot_index = {s: k for k, s in enumerate(slots)}
        perm_maps = []
        for perm in permutations(range(n)):
            perm_maps.append(
                tuple(slot_index[tuple(sorted((perm[u], perm[v])))] for u, v in slots)
            )
        seen: set[tuple[int, ...]] = set()
        lo = 0 if n == 1 else n - 1
        for m in range(lo, max_m + 1):
            for combo in combinations_with_replacement(range(len(slots)), m):
                if not _covers_and_connects(n, slots, combo):
                    continue
                key = min(tuple(sorted(pm[k] for k in combo)) for pm in perm_maps)
                if key in seen:
                    continue
                seen.add(key)
                out.append(Multigraph(n, [slots[k] for k in key]))
    return out


def _covers_and_connects(n: int, slots, combo) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for k in set(combo):
        u, v = slots[k]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def uniform_matroids(max_n: int) -> list[tuple[str, Matroid]]:
    out = []
    for n in range(max_n + 1):
        for r in range(n + 1):
            out.append((f"U({r},{n})", mat.uniform(r, n)))
    return out


def corpus_matroids(
    max_n: int = 5,
    max_m: int = 7,
    uniform_max: int = 6,
    with_duals: bool = True,
    with_sums: bool = True,
) -> list[tuple[str, Matroid]]:
    """The standard matroid corpus, deduplicated by exact rank table."""
    base: list[tuple[str, Matroid]] = []
    for g in connected_multigraphs(max_n, max_m):
        base.append((f"M(graph n={g.n} {list(g.edges)})", mat.from_graph(g)))
    base.extend(uniform_matroids(uniform_max))

    entries = list(base)
    if with_duals:
        entries.extend((f"dual({name})", M.dual()) for name, M in base)
    if with_sums:
        loop = mat.loop_matroid()
        coloop = mat.coloop_matroid()
        sums = []
        for name, M in entries:
            sums.append((f"{name}+L", M.direct_sum(loop)))
            sums.append((f"{name}+L*", M.direct_sum(coloop)))
        entries.extend(sums)

    seen: set[bytes] = set()
    out = []
    for name, M in entries:
        key = M.key()
        if key in seen:
            continue
        seen.add(key)
        out.append((name, M))
    return out


def loopless_subset(
    entries: list[tuple[str, Matroid]], max_elements: int
) -> list[tuple[str, Matroid]]:
    """Corpus members with no loops, positive rank, and at most max_elements."""
    return [
        (name, M)
        for name, M in entries
        if M.m <= max_elements and M.loop_count == 0 and M.d >= 1
    ]
