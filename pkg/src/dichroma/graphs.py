"""Multigraphs and the Potts partition polynomial Z(q, t).

Z is computed two independent ways: a direct sum over all set
partitions of the vertices (the definitional route, capped by Bell
numbers) and the deletion/contraction recursion whose base case is a
graph with no nonloop edges.  The colouring census and the
component-count distribution provide the combinatorial oracles for the
coefficient interpretations of Z, with all probability bookkeeping done
symbolically in q (exact rationals on evaluation, never floats).
"""

from __future__ import annotations

import warnings
from collections import Counter
from itertools import product
from typing import Iterable, Sequence

from .errors import InputError, NonExactDivision, SizeCapExceeded
from .poly import BiPoly, falling_factorial

PARTITION_SUM_MAX_VERTICES = 10
CENSUS_MAX_COLOURINGS = 10**7
SUBSET_SWEEP_MAX_EDGES = 22


class Multigraph:
    """Vertex count plus edge list; loops and parallel edges allowed."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for {n} vertices")
            norm.append((u, v) if u <= v else (v, u))
        self.edges = tuple(norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    def loop_indices(self) -> list[int]:
        return [i for i, (u, v) in enumerate(self.edges) if u == v]

    def nonloop_indices(self) -> list[int]:
        return [i for i, (u, v) in enumerate(self.edges) if u != v]

    def components_of_subset(self, mask: int) -> int:
        """Number of components of the spanning subgraph (V, S)."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = self.n
        for i, (u, v) in enumerate(self.edges):
            if mask >> i & 1 and u != v:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        return comps

    def components(self) -> int:
        return self.components_of_subset((1 << self.m) - 1)

    def is_connected(self) -> bool:
        return self.components() == 1

    def delete_edge(self, i: int) -> "Multigraph":
        return Multigraph(self.n, self.edges[:i] + self.edges[i + 1 :])

    def contract_edge(self, i: int) -> "Multigraph":
        """Contract a nonloop edge; parallel copies become loops."""
        u, v = self.edges[i]
        if u == v:
            raise InputError("refusing to contract a loop")

        def relabel(w: int) -> int:
            if w == v:
                return u
            return w - 1 if w > v else w

        edges = [
            tuple(sorted((relabel(a), relabel(b))))
            for j, (a, b) in enumerate(self.edges)
            if j != i
        ]
        return Multigraph(self.n - 1, edges)

    def disjoint_union(self, other: "Multigraph") -> "Multigraph":
        shifted = [(u + self.n, v + self.n) for u, v in other.edges]
        return Multigraph(self.n + other.n, list(self.edges) + shifted)

    def wedge(self, other: "Multigraph") -> "Multigraph":
        """One-point join: identify other's vertex 0 with this graph's vertex 0."""
        if self.n == 0 or other.n == 0:
            raise InputError("wedge needs a vertex on both sides")

        def relabel(w: int) -> int:
            return 0 if w == 0 else w + self.n - 1

        shifted = [tuple(sorted((relabel(u), relabel(v)))) for u, v in other.edges]
        return Multigraph(self.n + other.n - 1, list(self.edges) + shifted)

    def canonical_key(self) -> tuple:
        """Lexicographically minimal edge list over all vertex relabelings."""
        best = None
        for perm in _permutations_cache(self.n):
            cand = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in self.edges))
            if best is None or cand < best:
                best = cand
        return (self.n, best)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"


_PERMS: dict[int, list[tuple[int, ...]]] = {}


def _permutations_cache(n: int) -> list[tuple[int, ...]]:
    if n not in _PERMS:
        from itertools import permutations

        _PERMS[n] = list(permutations(range(n)))
    return _PERMS[n]


# -- set partitions ------------------------------------------------------


def restricted_growth_strings(n: int):
    """All set partitions of {0..n-1} as restricted-growth strings.

    A string a assigns each vertex a block index with a[0] = 0 and
    a[i] <= max(a[:i]) + 1, so each partition appears exactly once.
    """
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield tuple(a)
            return
        for v in range(mx + 2):
            a[i] = v
            yield from rec(i + 1, mx if v <= mx else v)

    yield from rec(1, 0)


def blocks_to_rgs(n: int, blocks: Sequence[Iterable[int]]) -> list[int]:
    """Validate a block partition of {0..n-1} and convert to assignment form."""
    assign = [-1] * n
    for b, block in enumerate(blocks):
        members = list(block)
        if not members:
            raise InputError("partition has an empty block")
        for v in members:
            if not 0 <= v < n:
                raise InputError(f"partition mentions vertex {v} outside 0..{n - 1}")
            if assign[v] != -1:
                raise InputError(f"vertex {v} appears in two blocks")
            assign[v] = b
    if -1 in assign:
        raise InputError(f"vertex {assign.index(-1)} is missing from the partition")
    return assign


def crossing_count(g: Multigraph, blocks: Sequence[Iterable[int]]) -> int:
    """Number of edges whose endpoints lie in different blocks (loops never cross)."""
    assign = blocks_to_rgs(g.n, blocks)
    return sum(1 for u, v in g.edges if assign[u] != assign[v])


# -- the partition polynomial -------------------------------------------


def z_partition_sum(g: Multigraph) -> BiPoly:
    """Z(q, t) as the sum over all vertex partitions of q^crossings * t_(blocks)."""
    if g.n > PARTITION_SUM_MAX_VERTICES:
        raise SizeCapExceeded(
            f"partition sum needs Bell({g.n}) partitions; cap is n <= {PARTITION_SUM_MAX_VERTICES}"
        )
    counts: Counter[tuple[int, int]] = Counter()
    edges = g.edges
    for a in restricted_growth_strings(g.n):
        crossings = sum(1 for u, v in edges if a[u] != a[v])
        blocks = max(a) + 1 if a else 0
        counts[(blocks, crossings)] += 1
    ff = [falling_factorial(k) for k in range(g.n + 1)]
    out = BiPoly()
    for (blocks, crossings), c in counts.items():
        out = out + ff[blocks].shift(crossings, 0) * c
    return out


def z_deletion_contraction(g: Multigraph) -> BiPoly:
    """Z(q, t) by the recursion Z = q*Z(delete) + (1-q)*Z(contract).

    Base case: a graph with no nonloop edges has Z = t^n.
    """
    nonloops = g.nonloop_indices()
    if not nonloops:
        return BiPoly.monomial(0, g.n)
    e = nonloops[0]
    q = BiPoly.var_first()
    zd = z_deletion_contraction(g.delete_edge(e))
    zc = z_deletion_contraction(g.contract_edge(e))
    return q * zd + (1 - q) * zc


def y_of_graph(g: Multigraph) -> BiPoly:
    """Z divided by t^c(G); the division is exact for every graph."""
    z = z_deletion_contraction(g)
    try:
        return z.exact_div(BiPoly.monomial(0, g.components()))
    except NonExactDivision as exc:  # pragma: no cover - would falsify divisibility
        raise NonExactDivision(f"t^c does not divide Z for {g!r}: {exc}") from exc


# -- combinatorial oracles ------------------------------------------------


def colouring_census(g: Multigraph, t: int) -> dict[int, int]:
    """Counts of t-colourings by number of proper edges.

    An edge is proper when its endpoints get different colours, so loops
    are never proper.  census[k] must match the coefficient of q^k in
    Z(q, t) evaluated at the integer t.
    """
    if t < 1:
        raise InputError("need a positive number of colours")
    if t**g.n > CENSUS_MAX_COLOURINGS:
        raise SizeCapExceeded(f"{t}^{g.n} colourings exceed cap {CENSUS_MAX_COLOURINGS}")
    census: Counter[int] = Counter()
    edges = g.edges
    for f in product(range(t), repeat=g.n):
        census[sum(1 for u, v in edges if f[u] != f[v])] += 1
    return dict(census)


def component_distribution(g: Multigraph) -> list[BiPoly]:
    """Entry k: the probability (as an exact polynomial in q) that keeping
    each edge independently with probability 1-q leaves exactly k components."""
    if g.m > SUBSET_SWEEP_MAX_EDGES:
        raise SizeCapExceeded(f"2^{g.m} edge subsets exceed the sweep cap")
    counts: Counter[tuple[int, int]] = Counter()
    for s in range(1 << g.m):
        counts[(g.components_of_subset(s), s.bit_count())] += 1
    q = BiPoly.var_first()
    keep = [(1 - q) ** s for s in range(g.m + 1)]
    out = [BiPoly() for _ in range(g.n + 1)]
    for (k, size), c in counts.items():
        out[k] = out[k] + keep[size].shift(g.m - size, 0) * c
    return out


def reliability_polynomial(g: Multigraph) -> BiPoly:
    """The coefficient of t^1 in Z(q, t), as a polynomial in q."""
    if not g.is_connected():
        warnings.warn("reliability of a disconnected graph is identically zero", stacklevel=2)
    return z_deletion_contraction(g).coeff_of_second(1)


def chromatic_polynomial(g: Multigraph) -> BiPoly:
    """The coefficient of q^m in Z(q, t), as a polynomial in t."""
    return z_deletion_contraction(g).coeff_of_first(g.m)


# -- text and JSON formats -------------------------------------------------


def from_text(text: str) -> Multigraph:
    """Parse the edge-list format: one "u v" pair per line, loops as "u u".

    Blank lines are ignored.  The vertex count is the largest endpoint
    plus one (use the JSON format to carry extra isolated vertices).
    """
    edges = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InputError(f"line {lineno}: endpoints must be integers") from exc
        if u < 0 or v < 0:
            raise InputError(f"line {lineno}: endpoints must be nonnegative")
        edges.append((u, v))
        top = max(top, u, v)
    return Multigraph(top + 1, edges)


def to_text(g: Multigraph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges) + ("\n" if g.edges else "")


def to_json(g: Multigraph) -> dict:
    return {"type": "graph", "vertices": g.n, "edges": [list(e) for e in g.edges]}
