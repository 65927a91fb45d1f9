"""The cross-module identity suite.

Every identity the package claims is checked here against the built-in
corpus (or a single supplied input): the two routes to Z and to the
Tutte polynomial, the dichromate recursions, the companion transform
and its Whitney-number assembly, the characteristic-polynomial routes,
and the homology-rank interpretation.  All comparisons are exact
polynomial or integer equality; a failing check reports a witness.

The corpus caps default to the sizes that keep a full run interactive:
graphs with n <= 5, m <= 7 for polynomial checks and n <= 4, m <= 6 for
the homology-inclusive ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import dichromate as dc
from . import homology as hm
from . import matroid as mat
from . import whitney as wh
from .corpus import connected_multigraphs, corpus_matroids, loopless_subset
from .errors import DichromaError
from .fixtures import REFERENCE_RANK, reference_y1mp, reference_yhat
from .graphs import (
    Multigraph,
    colouring_census,
    component_distribution,
    y_of_graph,
    z_deletion_contraction,
    z_partition_sum,
)
from .matroid import ElementType, Matroid
from .poly import BiPoly


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


# A handful of graphs with loop edges; the enumerated corpus is loopless,
# so these keep the loop paths of the graph-side identities exercised.
def _loopy_graphs() -> list[Multigraph]:
    return [
        Multigraph(1, [(0, 0)]),
        Multigraph(1, [(0, 0), (0, 0)]),
        Multigraph(2, [(0, 1), (0, 0)]),
        Multigraph(3, [(0, 1), (0, 2), (1, 2), (1, 1)]),
        Multigraph(3, [(0, 1), (0, 1), (2, 2), (1, 2)]),
    ]


@dataclass
class VerifyContext:
    """Shared corpus and per-matroid caches for one verification run."""

    poly_entries: list[tuple[str, Matroid]]
    hom_entries: list[tuple[str, Matroid]]
    graphs: list[tuple[str, Multigraph]]
    _y: dict = field(default_factory=dict)
    _w: dict = field(default_factory=dict)
    _yhat: dict = field(default_factory=dict)

    def y(self, M: Matroid) -> BiPoly:
        key = M.key()
        if key not in self._y:
            self._y[key] = dc.y_subset_expansion(M)
        return self._y[key]

    def w(self, M: Matroid) -> wh.WhitneyTable:
        key = M.key()
        if key not in self._w:
            self._w[key] = wh.w_polynomials(M)
        return self._w[key]

    def yhat(self, M: Matroid) -> BiPoly:
        key = M.key()
        if key not in self._yhat:
            self._yhat[key] = dc.yhat(M)
        return self._yhat[key]


def build_context(
    max_n: int = 5,
    max_m: int = 7,
    hom_max_n: int = 4,
    hom_max_m: int = 6,
    uniform_max: int = 6,
) -> VerifyContext:
    graphs = [
        (f"graph(n={g.n},{list(g.edges)})", g)
        for g in connected_multigraphs(max_n, max_m) + _loopy_graphs()
    ]
    poly_entries = corpus_matroids(max_n, max_m, uniform_max)
    hom_entries = corpus_matroids(hom_max_n, hom_max_m, min(uniform_max, 5))
    return VerifyContext(poly_entries, hom_entries, graphs)


def single_input_context(M: Matroid, g: Multigraph | None = None, name: str = "input") -> VerifyContext:
    graphs = [(name, g)] if g is not None else []
    entry = [(name, M)]
    return VerifyContext(entry, entry, graphs)


# -- individual checks ----------------------------------------------------
# Each check returns None on success or a witness string on failure.


def _check_z_oracles(ctx: VerifyContext):
    for name, g in ctx.graphs:
        if g.n <= 8:
            if z_partition_sum(g) != z_deletion_contraction(g):
                return f"{name}: partition sum differs from recursion"
    return None


def _check_z_divisibility(ctx: VerifyContext):
    for name, g in ctx.graphs:
        z = z_deletion_contraction(g)
        low = min(b for _, b in z.terms)
        if low < g.components():
            return f"{name}: t^{g.components()} does not divide Z"
    return None


def _check_z_multiplicative(ctx: VerifyContext):
    small = [g for _, g in ctx.graphs if g.n <= 3][:6]
    for g1 in small:
        for g2 in small:
            u = g1.disjoint_union(g2)
            if z_deletion_contraction(u) != z_deletion_contraction(g1) * z_deletion_contraction(g2):
                return f"disjoint union of {g1!r} and {g2!r}"
    return None


def _check_colouring_census(ctx: VerifyContext):
    for name, g in ctx.graphs:
        z = z_deletion_contraction(g)
        for t in (2, 3):
            if t**g.n > 10**6:
                continue
            census = colouring_census(g, t)
            for k in range(g.m + 1):
                expected = z.coeff_of_first(k).evaluate(0, t)
                if census.get(k, 0) != expected:
                    return f"{name}: t={t}, k={k}: census {census.get(k, 0)} != coefficient {expected}"
    return None


def _check_component_distribution(ctx: VerifyContext):
    for name, g in ctx.graphs:
        z = z_deletion_contraction(g)
        dist = component_distribution(g)
        for k in range(g.n + 1):
            if dist[k] != z.coeff_of_second(k):
                return f"{name}: k={k} distribution differs from [t^{k}]Z"
        total = sum(d.evaluate(Fraction(1, 2), 0) for d in dist)
        if total != 1:
            return f"{name}: probabilities at q=1/2 sum to {total}"
    return None


def _check_chromatic(ctx: VerifyContext):
    for name, g in ctx.graphs:
        chrom = z_deletion_contraction(g).coeff_of_first(g.m)
        if g.loop_indices():
            if not chrom.is_zero():
                return f"{name}: a loop forces the chromatic polynomial to vanish"
        elif g.m == 0:
            if chrom != BiPoly.monomial(0, g.n):
                return f"{name}: edgeless chromatic polynomial should be t^n"
        elif chrom.evaluate(0, 1) != 0:
            return f"{name}: chromatic polynomial nonzero at one colour"
    return None


def _check_graph_vs_matroid_y(ctx: VerifyContext):
    for name, g in ctx.graphs:
        if y_of_graph(g) != ctx.y(mat.from_graph(g)):
            return f"{name}: graph-side and matroid-side dichromates differ"
    return None


def _check_wedge_multiplicative(ctx: VerifyContext):
    small = [g for _, g in ctx.graphs if 1 <= g.n <= 3][:6]
    for g1 in small:
        for g2 in small:
            w = g1.wedge(g2)
            if y_of_graph(w) != y_of_graph(g1) * y_of_graph(g2):
                return f"one-point join of {g1!r} and {g2!r}"
    return None


def _check_tutte_oracles(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        if dc.tutte_subset_expansion(M) != dc.tutte_deletion_contraction(M):
            return f"{name}: Tutte subset expansion differs from recursion"
    return None


def _check_y_substitution(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        if ctx.y(M) != dc.y_from_tutte(M):
            return f"{name}: substitution route differs from subset expansion"
    return None


def _check_y_recursions(ctx: VerifyContext):
    q = BiPoly.var_first()
    qt = q * BiPoly.var_second() + 1 - q
    for name, M in ctx.poly_entries:
        y = ctx.y(M)
        for e in range(M.m):
            kind = M.element_type(e)
            if kind is ElementType.LINK:
                expected = q * ctx.y(M.delete(e)) + (1 - q) * ctx.y(M.contract(e))
            elif kind is ElementType.LOOP:
                expected = ctx.y(M.delete(e))
            else:
                expected = qt * ctx.y(M.contract(e))
            if y != expected:
                return f"{name}: element {e} ({kind.value}) recursion fails"
    return None


def _check_y_direct_sums(ctx: VerifyContext):
    small = [M for _, M in ctx.poly_entries if M.m <= 4][:8]
    for m1 in small:
        for m2 in small:
            s = m1.direct_sum(m2)
            if dc.y_subset_expansion(s) != ctx.y(m1) * ctx.y(m2):
                return f"direct sum of {m1!r} and {m2!r}"
    return None


def _check_y_shape(ctx: VerifyContext):
    one = BiPoly.const(1)
    for name, M in ctx.poly_entries:
        y = ctx.y(M)
        if y.compose(BiPoly.var_first(), one) != one:
            return f"{name}: Y(q,1) != 1"
        if y.deg_second != (M.d if M.d else 0):
            return f"{name}: deg_t Y = {y.deg_second} != d = {M.d}"
        if y.deg_first != M.m - M.loop_count:
            return f"{name}: deg_q Y = {y.deg_first} != nonloops = {M.m - M.loop_count}"
    return None


def _check_duality(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        dual = M.dual()
        if dual.dual() != M:
            return f"{name}: dual is not an involution"
        if dual.d != M.m - M.d:
            return f"{name}: dual rank is {dual.d}, expected {M.m - M.d}"
    return None


def _check_minor_rank_table(ctx: VerifyContext):
    rows = {
        ElementType.LOOP: lambda d, s: (d, s - 1, d, s - 1),
        ElementType.COLOOP: lambda d, s: (d - 1, s, d - 1, s),
        ElementType.LINK: lambda d, s: (d, s - 1, d - 1, s),
    }
    for name, M in ctx.poly_entries:
        d, s = M.d, M.m - M.d
        for e in range(M.m):
            del_ = M.delete(e)
            con = M.contract(e)
            got = (del_.d, del_.m - del_.d, con.d, con.m - con.d)
            if got != rows[M.element_type(e)](d, s):
                return f"{name}: element {e} rank/corank deltas {got}"
    return None


def _check_companion(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        try:
            y_hat = ctx.yhat(M)  # raises if division inexact or a coefficient negative
        except DichromaError as exc:
            return f"{name}: {exc}"
        if y_hat != dc.yhat_recursion(M):
            return f"{name}: companion recursion differs from transform"
        if not y_hat.is_zero() and y_hat.deg_second > M.d - 1:
            return f"{name}: deg_t companion exceeds d-1"
        for i in range(M.d):
            row = y_hat.coeff_of_second(i)
            if not row.is_zero() and min(a for a, _ in row.terms) < M.d - 1 - i:
                return f"{name}: p^{M.d - 1 - i} does not divide the t^{i} row"
    return None


def _check_companion_roundtrip(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        y = ctx.y(M)
        if dc.y_from_yhat(ctx.yhat(M), M.d) != dc.y_one_minus_p(y):
            return f"{name}: inverse companion transform fails"
        T = dc.tutte_subset_expansion(M)
        if dc.tutte_from_y(y, M.m, M.loop_count, M.d) != T:
            return f"{name}: Tutte polynomial not recovered from Y"
    return None


def _check_w_top_level(ctx: VerifyContext):
    p = BiPoly.var_first()
    for name, M in ctx.poly_entries:
        if M.d == 0:
            continue
        expected = (1 + p) ** (M.m - M.loop_count) - 1
        if ctx.w(M).w[M.d - 1] != expected:
            return f"{name}: top-level W differs from binomial expansion"
    return None


def _check_w_recursion(ctx: VerifyContext):
    p1 = 1 + BiPoly.var_first()
    for name, M in ctx.poly_entries:
        if M.d < 2:
            continue
        table = ctx.w(M)
        for e in range(M.m):
            if M.element_type(e) is ElementType.LOOP:
                continue
            b = M.coloop_indicator(e)
            wd = ctx.w(M.delete(e)).w
            wc = ctx.w(M.contract(e)).w
            for i in range(M.d - 1):
                left = wd[i - b] if 0 <= i - b < len(wd) else BiPoly.zero()
                right = wc[i] if i < len(wc) else BiPoly.zero()
                if table.w[i] != p1 * left + right:
                    return f"{name}: W recursion fails at element {e}, level {i}"
    return None


def _check_mobius_signs(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        loops_mask = 0
        for e in M.loops():
            loops_mask |= 1 << e
        for i in range(M.d):
            members = wh.family_masks(M, i)
            mu = wh.mobius_by_recursion(wh.RankedFamily(M, i, tuple(members)))
            base = 1 + i - M.d
            for s in members:
                value = mu[s] if (s.bit_count() + base) % 2 == 0 else -mu[s]
                if value < 0:
                    return f"{name}: level {i}, member {mat.elements_of(s)}: sign law broken"
                if not s & loops_mask and value == 0:
                    return f"{name}: level {i}, loop-free member {mat.elements_of(s)} has mu = 0"
                if s & loops_mask and mu[s] != 0:
                    return f"{name}: level {i}, loopy member {mat.elements_of(s)} has mu != 0"
    return None


def _check_mobius_minor_recursion(ctx: VerifyContext):
    for name, M in ctx.hom_entries:
        for i in range(M.d):
            members = wh.family_masks(M, i)
            mu = wh.mobius_by_recursion(wh.RankedFamily(M, i, tuple(members)))
            for s in members:
                if wh.mobius_by_minors(M, i, s) != mu[s]:
                    return f"{name}: level {i}, member {mat.elements_of(s)}"
    return None


def _check_whitney_assembly(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        if wh.assemble_yhat(ctx.w(M)) != ctx.yhat(M):
            return f"{name}: Whitney assembly differs from companion"
    return None


def _check_cor27(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        if wh.cor27_matrix(ctx.w(M)) != dc.y_one_minus_p(ctx.y(M)):
            return f"{name}: Whitney-number formula differs from Y(1-p,t)"
    return None


def _check_independent_counts(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        counts = [0] * (M.d + 1)
        for s in M.independent_masks():
            counts[s.bit_count()] += 1
        y1mp = dc.y_one_minus_p(ctx.y(M))
        for k in range(M.d + 1):
            if y1mp.coeff(k, M.d - k) != counts[k]:
                return f"{name}: k={k}: coefficient {y1mp.coeff(k, M.d - k)} != count {counts[k]}"
    return None


def _check_characteristic(ctx: VerifyContext):
    for name, M in ctx.poly_entries:
        chi = wh.characteristic_by_closed_sets(M)
        from_y = dc.characteristic_from_y(ctx.y(M), M.m, M.loop_count)
        if chi != from_y:
            return f"{name}: closed-set chi differs from top q-coefficient"
        if M.loop_count == 0 and M.d >= 1:
            if chi != wh.characteristic_by_whitney(ctx.w(M)):
                return f"{name}: closed-set chi differs from Whitney assembly"
    return None


def _check_gamma_routes(ctx: VerifyContext):
    for name, M in ctx.hom_entries:
        if M.loop_count:
            continue
        for i in range(M.d):
            for s in wh.family_masks(M, i):
                if hm.gamma_complex(M, i, s) != hm.independence_complex_of_minor(M, i, s):
                    return f"{name}: level {i}, member {mat.elements_of(s)}"
    return None


def _check_philip_hall(ctx: VerifyContext):
    from .simplicial import betti_numbers

    for name, M in ctx.hom_entries:
        for i in range(M.d):
            members = wh.family_masks(M, i)
            mu = wh.mobius_by_recursion(wh.RankedFamily(M, i, tuple(members)))
            for s in members:
                complex_ = hm.gamma_complex(M, i, s)
                bv = betti_numbers(complex_)
                if bv.reduced_euler() != mu[s] or complex_.reduced_euler() != mu[s]:
                    return f"{name}: level {i}, member {mat.elements_of(s)}"
                top = s.bit_count() - (M.d - i) - 1
                if any(j != top for j, _ in bv.items()):
                    return f"{name}: level {i}, member {mat.elements_of(s)}: off-top homology"
    return None


def _check_whitney_homology(ctx: VerifyContext):
    for name, M in loopless_subset(ctx.hom_entries, 7):
        rows = ctx.w(M).omega_rows()
        for i in range(M.d):
            if hm.whitney_homology_ranks(M, i) != rows[i]:
                return f"{name}: level {i} ranks differ from Whitney numbers"
    return None


def _check_cor32(ctx: VerifyContext):
    for name, M in loopless_subset(ctx.hom_entries, 7):
        if hm.cor32_characteristic(M) != wh.characteristic_by_closed_sets(M):
            return f"{name}: homological chi assembly differs"
    return None


def _check_reference_transform(ctx: VerifyContext):
    y1mp = reference_y1mp()
    yhat_ref = reference_yhat()
    d = REFERENCE_RANK
    y_q = y1mp.compose(1 - BiPoly.var_first(), BiPoly.var_second())
    if dc.yhat_from_y(y_q, d) != yhat_ref:
        return "companion transform does not map the reference tables onto each other"
    if dc.y_from_yhat(yhat_ref, d) != y1mp:
        return "inverse transform does not recover the reference table"
    return None


def _check_reference_whitney(ctx: VerifyContext):
    y1mp = reference_y1mp()
    yhat_ref = reference_yhat()
    d = REFERENCE_RANK
    ws = []
    for i in range(d):
        row = yhat_ref.coeff_of_second(i)
        ws.append(row.exact_div(BiPoly.monomial(d - 1 - i, 0)))
    table = wh.WhitneyTable(m=7, d=d, loops=0, w=tuple(ws))
    if wh.cor27_matrix(table) != y1mp:
        return "Whitney-number formula does not reproduce the reference table"
    if y1mp.coeff(4, 1) != -100 or y1mp.coeff(5, 2) != -164:
        return "pinned reference entries (-100, -164) not found"
    return None


ALL_CHECKS = [
    ("Z: partition sum equals deletion-contraction", _check_z_oracles),
    ("Z: divisible by t^components", _check_z_divisibility),
    ("Z: multiplicative over disjoint unions", _check_z_multiplicative),
    ("Z: colouring census matches q-coefficients", _check_colouring_census),
    ("Z: component distribution matches t-coefficients", _check_component_distribution),
    ("Z: top q-coefficient behaves like a chromatic polynomial", _check_chromatic),
    ("Y: graph route equals matroid route", _check_graph_vs_matroid_y),
    ("Y: multiplicative over one-point joins", _check_wedge_multiplicative),
    ("T: subset expansion equals deletion-contraction", _check_tutte_oracles),
    ("Y: substitution through T equals subset expansion", _check_y_substitution),
    ("Y: link/loop/coloop recursions", _check_y_recursions),
    ("Y: multiplicative over direct sums", _check_y_direct_sums),
    ("Y: degree shape and Y(q,1) = 1", _check_y_shape),
    ("duality: involution and rank formula", _check_duality),
    ("minors: rank/corank deltas by element type", _check_minor_rank_table),
    ("companion: nonnegative and equal to its recursion", _check_companion),
    ("companion: inverse transforms round-trip", _check_companion_roundtrip),
    ("W: top level equals binomial expansion", _check_w_top_level),
    ("W: link/coloop recursion", _check_w_recursion),
    ("Moebius: sign law and loop vanishing", _check_mobius_signs),
    ("Moebius: minor recursion equals lattice recursion", _check_mobius_minor_recursion),
    ("companion: assembles from Whitney numbers", _check_whitney_assembly),
    ("Y(1-p,t): Whitney-number formula", _check_cor27),
    ("Y(1-p,t): diagonal counts independent sets", _check_independent_counts),
    ("characteristic polynomial: triple agreement", _check_characteristic),
    ("complexes: complement route equals minor route", _check_gamma_routes),
    ("complexes: Euler characteristics equal Moebius values", _check_philip_hall),
    ("homology: Whitney homology ranks equal Whitney numbers", _check_whitney_homology),
    ("homology: characteristic polynomial assembly", _check_cor32),
    ("reference tables: transform and inverse", _check_reference_transform),
    ("reference tables: Whitney-number formula and pinned entries", _check_reference_whitney),
]


def run_checks(ctx: VerifyContext) -> list[CheckResult]:
    results = []
    for name, fn in ALL_CHECKS:
        try:
            witness = fn(ctx)
        except DichromaError as exc:
            witness = str(exc)
        results.append(CheckResult(name, witness is None, witness or ""))
    return results
