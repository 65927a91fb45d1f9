"""The Tutte polynomial, its dichromate specialization Y(q, t), and the
nonnegative companion Yhat(p, t).

Conventions.  Y is stored in the q basis; Y(1-p, t) is a distinct value
produced by substitution, never a reinterpretation of the same
coefficients.  The companion is defined by

    Yhat(p, t) = ((-1)^d * Y(1+p, -t) - t^d) / (1 + t)

and the inverse transform is

    Y(1-p, t) = t^d + (1-t) * (-1)^d * Yhat(-p, -t).

The division by 1 + t is exact for every matroid, and every Yhat
coefficient is nonnegative; both facts are enforced here and treated as
fatal bug detectors when violated.

Y itself is computed natively by the corank-free subset expansion
    Y(q, t) = sum over S of q^(m-|S|) (1-q)^|S| t^(d - rank S),
with the substitution route through the Tutte polynomial kept as the
definitional reference that tests compare against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IdentityError, NonExactDivision
from .matroid import Matroid
from .poly import BiPoly, to_json


def subset_profile(M: Matroid) -> dict[tuple[int, int], int]:
    """Counts of subsets by (cardinality, rank), one 2^m sweep."""
    counts: dict[tuple[int, int], int] = {}
    table = M.table
    for s in range(1 << M.m):
        key = (s.bit_count(), table[s])
        counts[key] = counts.get(key, 0) + 1
    return counts


def tutte_subset_expansion(M: Matroid) -> BiPoly:
    """T(x, y) = sum over subsets of (x-1)^(d - rank S) * (y-1)^(|S| - rank S)."""
    d = M.d
    x1 = BiPoly.var_first() - 1
    y1 = BiPoly.var_second() - 1
    px = [BiPoly.const(1)]
    for _ in range(d):
        px.append(px[-1] * x1)
    py = [BiPoly.const(1)]
    for _ in range(M.m):
        py.append(py[-1] * y1)
    out = BiPoly()
    for (size, rank), c in subset_profile(M).items():
        out = out + px[d - rank] * py[size - rank] * c
    return out


def tutte_deletion_contraction(M: Matroid, _memo: dict | None = None) -> BiPoly:
    """T(x, y) by recursion on links, with loop/coloop factors at the base.

    Memoized on the exact rank table, so isomorphic minors reached along
    different recursion paths with identical labelings share work.
    """
    memo = _memo if _memo is not None else {}
    key = M.key()
    hit = memo.get(key)
    if hit is not None:
        return hit
    link = next((e for e in range(M.m) if M.element_type(e).value == "link"), None)
    if link is None:
        coloops = M.m - M.loop_count
        result = BiPoly.monomial(coloops, M.loop_count)
    else:
        result = tutte_deletion_contraction(M.delete(link), memo) + tutte_deletion_contraction(
            M.contract(link), memo
        )
    memo[key] = result
    return result


def y_subset_expansion(M: Matroid) -> BiPoly:
    """Y(q, t) as a direct sum over all 2^m subsets (no division needed)."""
    d = M.d
    q = BiPoly.var_first()
    keep = [BiPoly.const(1)]
    for _ in range(M.m):
        keep.append(keep[-1] * (1 - q))
    out = BiPoly()
    for (size, rank), c in subset_profile(M).items():
        out = out + keep[size].shift(M.m - size, d - rank) * c
    return out


def y_from_tutte(M: Matroid, T: BiPoly | None = None) -> BiPoly:
    """Y(q, t) = (1-q)^d * q^(m-d) * T((qt+1-q)/(1-q), 1/q), cleared exactly.

    A NonExactDivision here means T is not the Tutte polynomial of M.
    """
    if T is None:
        T = tutte_subset_expansion(M)
    q = BiPoly.var_first()
    t = BiPoly.var_second()
    num_x = q * t + 1 - q
    den_x = 1 - q
    prefactor = den_x ** M.d * q ** (M.m - M.d)
    return T.substitute_rational((num_x, den_x), (BiPoly.const(1), q), prefactor)


def yhat_from_y(Y: BiPoly, d: int) -> BiPoly:
    """Apply the companion transform to a dichromate of known rank.

    Both failure modes (a remainder mod 1 + t, or a negative
    coefficient) falsify identities that hold for every matroid, so both
    raise rather than return.
    """
    p = BiPoly.var_first()
    t = BiPoly.var_second()
    flipped = Y.compose(1 + p, -t)
    if d % 2:
        flipped = -flipped
    numerator = flipped - BiPoly.monomial(0, d)
    try:
        out = numerator.exact_div(1 + t)
    except NonExactDivision as exc:
        raise IdentityError(f"1 + t does not divide the companion numerator: {exc}") from exc
    bad = {key: c for key, c in out.terms.items() if c < 0}
    if bad:
        raise IdentityError(f"companion polynomial has negative coefficients: {bad}")
    return out


def yhat(M: Matroid) -> BiPoly:
    """The nonnegative companion of M (zero for rank-0 matroids)."""
    if M.d == 0:
        return BiPoly.zero()
    return yhat_from_y(y_subset_expansion(M), M.d)


def yhat_recursion(M: Matroid, _memo: dict | None = None) -> BiPoly:
    """The companion by its own deletion/contraction recursion.

    Yhat(M) = p*t^(d-1) + (1+p)*t^b * Yhat(M\\e) + p * Yhat(M/e) for any
    nonloop e (b = 1 exactly when e is a coloop); a matroid with no
    nonloops has companion zero.  Independent of yhat(), which goes
    through the transform of Y.
    """
    memo = _memo if _memo is not None else {}
    key = M.key()
    hit = memo.get(key)
    if hit is not None:
        return hit
    nonloops = M.nonloops()
    if not nonloops:
        result = BiPoly.zero()
    else:
        e = nonloops[0]
        b = M.coloop_indicator(e)
        p = BiPoly.var_first()
        head = BiPoly.monomial(1, M.d - 1)
        rest = (1 + p).shift(0, b) * yhat_recursion(M.delete(e), memo)
        rest = rest + p * yhat_recursion(M.contract(e), memo)
        result = head + rest
    memo[key] = result
    return result


def y_one_minus_p(Y: BiPoly) -> BiPoly:
    """Change of basis q -> 1 - p (a substitution, not a relabeling)."""
    p = BiPoly.var_first()
    return Y.compose(1 - p, BiPoly.var_second())


def y_from_yhat(Yhat: BiPoly, d: int) -> BiPoly:
    """Invert the companion transform: Y(1-p, t) from Yhat(p, t)."""
    p = BiPoly.var_first()
    t = BiPoly.var_second()
    flipped = Yhat.compose(-p, -t)
    if d % 2:
        flipped = -flipped
    return BiPoly.monomial(0, d) + (1 - t) * flipped


def tutte_from_y(Y: BiPoly, m: int, loops: int, d: int) -> BiPoly:
    """Recover T(x, y) = y^m / (y-1)^d * Y(1/y, (x-1)(y-1)).

    Needs the loop count, the one datum Y does not carry.  Inconsistent
    (Y, m, loops, d) surfaces as NonExactDivision.
    """
    x = BiPoly.var_first()
    y = BiPoly.var_second()
    sub_t = (x - 1) * (y - 1)
    cleared = Y.substitute_rational(
        (BiPoly.const(1), y), (sub_t, BiPoly.const(1)), BiPoly.monomial(0, m)
    )
    return cleared.exact_div((y - 1) ** d)


def characteristic_from_y(Y: BiPoly, m: int, loops: int) -> BiPoly:
    """The characteristic polynomial: the coefficient of q^(m - loops) in Y."""
    return Y.coeff_of_first(m - loops)


@dataclass(frozen=True)
class InvariantBundle:
    """The four polynomial invariants of one matroid, cross-validated."""

    m: int
    d: int
    loops: int
    tutte: BiPoly  # variables (x, y)
    y: BiPoly  # variables (q, t)
    y1mp: BiPoly  # variables (p, t): y with q = 1 - p substituted
    companion: BiPoly  # variables (p, t)

    def __post_init__(self):
        one = BiPoly.const(1)
        if self.y.compose(BiPoly.var_first(), one) != one:
            raise IdentityError("Y(q, 1) != 1")
        if self.d > 0 and self.y.deg_second != self.d:
            raise IdentityError(f"deg_t Y = {self.y.deg_second}, expected rank {self.d}")
        if self.y.deg_first != max(self.m - self.loops, 0):
            raise IdentityError(
                f"deg_q Y = {self.y.deg_first}, expected nonloop count {self.m - self.loops}"
            )
        if any(c < 0 for c in self.companion.terms.values()):
            raise IdentityError("companion has a negative coefficient")


def invariant_bundle(M: Matroid) -> InvariantBundle:
    y = y_subset_expansion(M)
    return InvariantBundle(
        m=M.m,
        d=M.d,
        loops=M.loop_count,
        tutte=tutte_subset_expansion(M),
        y=y,
        y1mp=y_one_minus_p(y),
        companion=yhat(M),
    )


def bundle_to_json(b: InvariantBundle) -> dict:
    return {
        "m": b.m,
        "d": b.d,
        "loops": b.loops,
        "T": to_json(b.tutte, row_var="y", col_var="x"),
        "Y": to_json(b.y, row_var="t", col_var="q"),
        "Y1mp": to_json(b.y1mp, row_var="t", col_var="p"),
        "Yhat": to_json(b.companion, row_var="t", col_var="p"),
    }
