"""Level families of high-rank subsets, their Moebius functions, and the
proper unsigned Whitney numbers of the first kind.

For a matroid of rank d and a level 0 <= i <= d-1, the family at level
i consists of all subsets of rank >= d-i, ordered by inclusion with an
artificial bottom element adjoined.  The Moebius function of that
lattice is computed two independent ways:

* ``mobius_by_recursion`` -- the defining alternating-sum recursion,
  bottom-up by cardinality over the member list;
* ``mobius_by_minors`` -- a deletion/contraction recursion on the
  matroid itself (loops kill the value, the minor terms carry signs).

The two must agree everywhere; tests enforce it.  The W polynomials
collect Moebius values by height h = |S| - d + 1 + i with sign (-p)^h,
and their coefficients are the Whitney numbers, nonnegative for every
matroid (a negative one is a fatal bug signal).

The minor recursion steps outside the nominal level range: deleting a
coloop shifts the level down (possibly to -1, where the family is
empty) and contracting can leave the level equal to the new rank, where
the empty set itself becomes a member with Moebius value -1.  Both
conventions follow from the membership rule rank(S) >= d - i applied
verbatim, which is how the code implements them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IdentityError, InputError
from .matroid import Matroid, drop_bit, elements_of
from .poly import BiPoly


def family_masks(M: Matroid, i: int) -> list[int]:
    """All subsets of rank >= d - i, sorted by (cardinality, mask).

    Valid for any i >= 0; for i >= d the threshold is <= 0 and every
    subset (including the empty one) is a member.
    """
    threshold = M.d - i
    table = M.table
    members = [s for s in range(1 << M.m) if table[s] >= threshold]
    members.sort(key=lambda s: (s.bit_count(), s))
    return members


@dataclass(frozen=True)
class RankedFamily:
    """The level-i family of a matroid, with membership and height helpers."""

    matroid: Matroid
    level: int
    members: tuple[int, ...]

    def height(self, mask: int) -> int:
        return mask.bit_count() - self.matroid.d + 1 + self.level

    def __contains__(self, mask: int) -> bool:
        return self.matroid.rank(mask) >= self.matroid.d - self.level

    @property
    def max_height(self) -> int:
        return self.matroid.m - self.matroid.d + 1 + self.level


def build_family(M: Matroid, i: int) -> RankedFamily:
    if not 0 <= i <= M.d - 1:
        raise InputError(f"level {i} out of range 0..{M.d - 1}")
    members = family_masks(M, i)
    fam = RankedFamily(M, i, tuple(members))
    member_set = set(members)
    for s in members:
        for e in range(M.m):
            if not s >> e & 1 and (s | 1 << e) not in member_set:
                raise IdentityError(
                    f"family not upward closed at {elements_of(s)} + {e}"
                )  # pragma: no cover - impossible for monotone rank tables
    return fam


@dataclass(frozen=True)
class MobiusTable:
    """Moebius values from the adjoined bottom; non-members read as 0."""

    family: RankedFamily
    mu: dict

    def __getitem__(self, mask: int) -> int:
        return self.mu.get(mask, 0)


def mobius_by_recursion(family: RankedFamily) -> MobiusTable:
    """mu(S) = -(sum of mu over everything strictly below S, bottom included)."""
    mu = _mobius_values(family.members)
    return MobiusTable(family, mu)


def _mobius_values(members) -> dict[int, int]:
    mu: dict[int, int] = {}
    for s in members:  # already sorted by cardinality
        total = 1  # the adjoined bottom element
        t = (s - 1) & s
        while t:
            total += mu.get(t, 0)
            t = (t - 1) & s
        if s:
            total += mu.get(0, 0)
        mu[s] = -total
    return mu


_MINOR_MU_CACHE: dict[tuple[bytes, int, int], int] = {}


def mobius_by_minors(M: Matroid, i: int, mask: int) -> int:
    """Moebius value by deletion/contraction of the lowest element of S.

    Independent of mobius_by_recursion: never builds the lattice.  A
    loop in S forces 0; otherwise removing element e trades the value
    for minor values at level i - b (deletion, b = coloop indicator)
    and level i (contraction), with a sign on the deletion term.
    """
    key = (M.key(), i, mask)
    hit = _MINOR_MU_CACHE.get(key)
    if hit is not None:
        return hit
    if mask == 0:
        val = -1 if M.d - i <= 0 else 0
    elif M.rank(mask) < M.d - i:
        val = 0
    else:
        e = (mask & -mask).bit_length() - 1
        if M.rank(1 << e) == 0:
            val = 0
        else:
            b = M.coloop_indicator(e)
            rest = drop_bit(mask, e)
            val = -mobius_by_minors(M.delete(e), i - b, rest) + mobius_by_minors(
                M.contract(e), i, rest
            )
    _MINOR_MU_CACHE[key] = val
    return val


def clear_minor_cache() -> None:
    _MINOR_MU_CACHE.clear()


# -- Whitney numbers ------------------------------------------------------


@dataclass(frozen=True)
class WhitneyTable:
    """W polynomials and Whitney numbers for all levels of one matroid."""

    m: int
    d: int
    loops: int
    w: tuple[BiPoly, ...]  # w[i] univariate in p (first variable)

    def omega(self, i: int, j: int) -> int:
        """Whitney number at level i, height j; 0 outside the stated ranges."""
        if not (0 <= i <= self.d - 1 and 1 <= j <= self.m - self.d + 1 + i):
            return 0
        return self.w[i].coeff(j, 0)

    def omega_rows(self) -> list[list[int]]:
        """Row i lists omega at heights j = 1 .. m - d + 1 + i."""
        return [
            [self.omega(i, j) for j in range(1, self.m - self.d + 2 + i)]
            for i in range(self.d)
        ]


def w_polynomials(M: Matroid) -> WhitneyTable:
    """W_i(p) = sum of mu(S) * (-p)^height(S) over level-i members, all i.

    The coefficient of p^j is the Whitney number at height j; a negative
    coefficient contradicts the sign law and raises IdentityError.
    """
    d = M.d
    ws = []
    for i in range(d):
        members = family_masks(M, i)
        mu = _mobius_values(members)
        acc: dict[int, int] = {}
        base = 1 + i - d
        for s in members:
            h = s.bit_count() + base
            acc[h] = acc.get(h, 0) + mu[s]
        terms = {}
        for h, total in acc.items():
            c = total if h % 2 == 0 else -total
            if c < 0:
                raise IdentityError(
                    f"negative Whitney number {c} at level {i}, height {h}"
                )
            if c:
                terms[(h, 0)] = c
        ws.append(BiPoly(terms))
    return WhitneyTable(m=M.m, d=d, loops=M.loop_count, w=tuple(ws))


def assemble_yhat(table: WhitneyTable) -> BiPoly:
    """The companion polynomial from Whitney data: sum of W_i * p^(d-1-i) * t^i."""
    out = BiPoly()
    for i, w in enumerate(table.w):
        out = out + w.shift(table.d - 1 - i, i)
    return out


def cor27_matrix(table: WhitneyTable) -> BiPoly:
    """The full coefficient matrix of Y(1-p, t) assembled from Whitney numbers.

    Entry (p^k, t^i) is delta(k,0)*delta(i,d) plus the sign
    (-1)^(k+i-d) times the sum of the two adjacent Whitney numbers.
    """
    d = table.d
    terms = {}
    for i in range(d + 1):
        for k in range(table.m - table.loops + 1):
            j = k + i - d
            c = table.omega(i, j + 1) + table.omega(i - 1, j)
            c = c if j % 2 == 0 else -c
            if i == d and k == 0:
                c += 1
            if c:
                terms[(k, i)] = c
    return BiPoly(terms)


# -- characteristic polynomial ---------------------------------------------


def characteristic_by_closed_sets(M: Matroid) -> BiPoly:
    """chi(t) = sum over flats of mu(flat) * t^(d - rank), mu over the flat lattice."""
    flats = M.closed_set_masks()
    flat_set = set(flats)
    mu: dict[int, int] = {}
    bottom = flats[0]
    for f in flats:
        if f == bottom:
            mu[f] = 1
            continue
        total = 0
        t = (f - 1) & f
        while t:
            if t in flat_set:
                total += mu[t]
            t = (t - 1) & f
        if bottom == 0:
            total += mu[0]
        mu[f] = -total
    d = M.d
    out = BiPoly()
    for f in flats:
        out = out + BiPoly.monomial(0, d - M.rank(f), mu[f])
    return out


def characteristic_by_whitney(table: WhitneyTable) -> BiPoly:
    """chi(t) = (-1)^d (1-t) * sum of top Whitney numbers times (-t)^i.

    Meaningful for loopless matroids, where the top height at level i
    is m - d + 1 + i.
    """
    d = table.d
    t = BiPoly.var_second()
    s = BiPoly()
    for i in range(d):
        c = table.omega(i, table.m - d + 1 + i)
        s = s + BiPoly.monomial(0, i, c if i % 2 == 0 else -c)
    out = (1 - t) * s
    return -out if d % 2 else out
