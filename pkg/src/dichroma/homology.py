"""Complement complexes of level-family members and Whitney homology ranks.

For a member S of the level-i family, the complex consists of all
complements S - T of members T contained in S.  It equals the
independence complex of the minor N_i / (E - S), where N_i is the dual
of the i-th truncation; both constructions are implemented and their
face-for-face equality is a tested identity.

Homology is computed directly on these complexes: the order complex of
the lattice interval below S is their barycentric subdivision, so it is
never materialized.  The Whitney homology rank at degree j-1 is the sum
of beta_(j-2) over all members; homology concentrates in the top
dimension of each member's complex (height minus two), which the code
verifies as it sums, so the sum over all members equals the sum over
the height-j members alone.

Betti vectors are cached by the pair (rank threshold, restriction rank
table): the complex of S depends on nothing else, and Betti numbers are
invariant under the vertex relabeling that the table key forgets.
"""

from __future__ import annotations

from .errors import IdentityError, InputError
from .matroid import Matroid, elements_of
from .poly import BiPoly
from .simplicial import BettiVector, SimplicialComplex, betti_numbers
from .whitney import family_masks, mobius_by_recursion, build_family

_BETTI_CACHE: dict[tuple[int, bytes], BettiVector] = {}


def clear_betti_cache() -> None:
    _BETTI_CACHE.clear()


def _restriction_table(M: Matroid, mask: int) -> bytes:
    """Rank table of the restriction to mask, without building the matroid."""
    pos = elements_of(mask)
    k = len(pos)
    expanded = [0] * (1 << k)
    table = bytearray(1 << k)
    mt = M.table
    for c in range(1, 1 << k):
        low = c & -c
        expanded[c] = expanded[c ^ low] | (1 << pos[low.bit_length() - 1])
        table[c] = mt[expanded[c]]
    return bytes(table)


def _member_check(M: Matroid, i: int, mask: int) -> None:
    if not 0 <= i <= M.d - 1:
        raise InputError(f"level {i} out of range 0..{M.d - 1}")
    if M.rank(mask) < M.d - i:
        raise InputError(
            f"subset {elements_of(mask)} has rank {M.rank(mask)} < {M.d - i}, "
            f"not a level-{i} member"
        )


def gamma_complex(M: Matroid, i: int, mask: int) -> SimplicialComplex:
    """The complex of complements {S - T : T member, T subset of S} on S."""
    _member_check(M, i, mask)
    threshold = M.d - i
    pos = elements_of(mask)
    index = {e: idx for idx, e in enumerate(pos)}
    labels = tuple(M.labels[e] for e in pos)
    faces = []
    t = mask
    while True:
        if M.rank(t) >= threshold:
            comp = mask & ~t
            face = 0
            for e in elements_of(comp):
                face |= 1 << index[e]
            faces.append(face)
        if t == 0:
            break
        t = (t - 1) & mask
    return SimplicialComplex(labels, faces)


def independence_complex_of_minor(M: Matroid, i: int, mask: int) -> SimplicialComplex:
    """The same complex built the other way: J(N_i / (E - S)).

    N_i is the dual of the i-th truncation; contracting everything
    outside S leaves a matroid on S whose independence complex must
    match gamma_complex(M, i, S) face for face.
    """
    _member_check(M, i, mask)
    n_i = M.truncate(i).dual()
    minor = n_i.contract_set(M.full_mask & ~mask)
    return minor.independence_complex()


def _betti_of_member(M: Matroid, mask: int, threshold: int) -> BettiVector:
    key = (threshold, _restriction_table(M, mask))
    hit = _BETTI_CACHE.get(key)
    if hit is not None:
        return hit
    table = key[1]
    k = mask.bit_count()
    full = (1 << k) - 1
    faces = [full ^ c for c in range(1 << k) if table[c] >= threshold]
    bv = betti_numbers(SimplicialComplex(range(k), faces, validate=False))
    _BETTI_CACHE[key] = bv
    return bv


def whitney_homology_ranks(M: Matroid, i: int) -> list[int]:
    """Ranks of the Whitney homology groups of the level-i lattice.

    Entry j-1 (for 1 <= j <= m - d + 1 + i) is the total rank of
    degree-(j-2) reduced homology over all members.  Raises
    IdentityError if any member's homology is not concentrated in its
    top dimension, since that would break the height bookkeeping.
    """
    if not 0 <= i <= M.d - 1:
        raise InputError(f"level {i} out of range 0..{M.d - 1}")
    threshold = M.d - i
    base = 1 + i - M.d
    ranks = [0] * (M.m + base)
    for s in family_masks(M, i):
        bv = _betti_of_member(M, s, threshold)
        top = s.bit_count() - threshold - 1
        for j_dim, beta in bv.items():
            if j_dim != top:
                raise IdentityError(
                    f"homology of member {elements_of(s)} at level {i} not "
                    f"concentrated in top dimension: beta_{j_dim} = {beta}"
                )
            ranks[j_dim + 1] += beta
    return ranks


def shellability_consequence_check(M: Matroid, i: int, mask: int) -> dict:
    """Verify top-dimension-only homology and the Euler/Moebius match for one member.

    Returns a report dict on success; raises IdentityError on any violation.
    """
    _member_check(M, i, mask)
    complex_ = gamma_complex(M, i, mask)
    bv = betti_numbers(complex_)
    top = mask.bit_count() - (M.d - i) - 1
    off_top = {j: b for j, b in bv.items() if j != top}
    if off_top:
        raise IdentityError(f"nonzero homology off the top dimension: {off_top}")
    mu = mobius_by_recursion(build_family(M, i))[mask]
    euler = complex_.reduced_euler()
    if euler != mu:
        raise IdentityError(f"reduced Euler characteristic {euler} != Moebius value {mu}")
    sign = -1 if top % 2 else 1
    if sign * bv[top] != mu:
        raise IdentityError(
            f"top Betti number {bv[top]} with sign {sign} does not match Moebius {mu}"
        )
    return {
        "member": elements_of(mask),
        "level": i,
        "top_dimension": top,
        "betti": dict(bv.items()),
        "mobius": mu,
    }


def cor32_characteristic(M: Matroid) -> BiPoly:
    """The characteristic polynomial assembled from one top Betti number per level.

    Level i contributes the rank of the top homology group of the
    independence complex of the dual of the i-th truncation.
    """
    d = M.d
    t = BiPoly.var_second()
    s = BiPoly()
    full = M.full_mask
    for i in range(d):
        bv = _betti_of_member(M, full, d - i)
        top = M.m - d + i - 1
        beta = bv[top]
        s = s + BiPoly.monomial(0, i, beta if i % 2 == 0 else -beta)
    out = (1 - t) * s
    return -out if d % 2 else out


def homology_report(M: Matroid) -> dict:
    """Whitney homology ranks with per-member contributors, JSON-ready."""
    levels = []
    for i in range(M.d):
        threshold = M.d - i
        entries: dict[int, dict] = {}
        for s in family_masks(M, i):
            bv = _betti_of_member(M, s, threshold)
            height = s.bit_count() - threshold + 1
            entry = entries.setdefault(height, {"j": height, "wh_rank": 0, "contributors": []})
            top = height - 2
            if bv[top]:
                entry["wh_rank"] += bv[top]
                entry["contributors"].append(
                    {"S": [M.labels[e] for e in elements_of(s)], "betti": str(bv[top])}
                )
        for entry in entries.values():
            entry["wh_rank"] = str(entry["wh_rank"])
        levels.append({"i": i, "entries": [entries[j] for j in sorted(entries)]})
    return {"m": M.m, "d": M.d, "loops": M.loop_count, "levels": levels}
