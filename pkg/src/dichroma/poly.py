"""Exact sparse bivariate polynomial arithmetic over arbitrary-precision integers.

A polynomial is a map from exponent pairs ``(a, b)`` to nonzero integer
coefficients.  The two variable slots are positional; names like (q, t),
(p, t) or (x, y) are display labels chosen by the caller.  The zero
polynomial is the empty map, and its degree in either variable is the
sentinel ``NEG_INF`` rather than 0.

All arithmetic is exact.  Division is supported only in the exact case
(zero remainder); a nonzero remainder raises :class:`NonExactDivision`,
which downstream modules treat as a bug detector, since every division
they perform is guaranteed exact by an algebraic identity.

Values are immutable after construction: no method mutates ``terms``,
so instances are safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonExactDivision

NEG_INF = float("-inf")


class BiPoly:
    """Bivariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for key, c in terms.items():
                if c:
                    a, b = key
                    if a < 0 or b < 0:
                        raise ValueError(f"negative exponent in {key}")
                    t[(int(a), int(b))] = int(c)
        self.terms = t

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "BiPoly":
        return cls({(a, b): c})

    @classmethod
    def var_first(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def var_second(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, a: int, b: int) -> int:
        """Coefficient of first^a * second^b (0 if absent)."""
        return self.terms.get((a, b), 0)

    @property
    def deg_first(self):
        """Degree in the first variable; NEG_INF for the zero polynomial."""
        return max((a for a, _ in self.terms), default=NEG_INF)

    @property
    def deg_second(self):
        return max((b for _, b in self.terms), default=NEG_INF)

    def coeff_of_first(self, a: int) -> "BiPoly":
        """The coefficient of first^a, as a polynomial in the second variable."""
        return BiPoly({(0, b): c for (a2, b), c in self.terms.items() if a2 == a})

    def coeff_of_second(self, b: int) -> "BiPoly":
        """The coefficient of second^b, as a polynomial in the first variable."""
        return BiPoly({(a, 0): c for (a, b2), c in self.terms.items() if b2 == b})

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == BiPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _coerce(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return _raw({key: -c for key, c in self.terms.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, int):
            if other == 0:
                return BiPoly()
            return _raw({key: c * other for key, c in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, a: int, b: int) -> "BiPoly":
        """Multiply by the monomial first^a * second^b."""
        return _raw({(a1 + a, b1 + b): c for (a1, b1), c in self.terms.items()})

    # -- evaluation and substitution ------------------------------------

    def evaluate(self, first, second):
        """Exact evaluation; accepts ints or Fractions, returns the same kind."""
        total = 0
        for (a, b), c in self.terms.items():
            total += c * first**a * second**b
        return total

    def compose(self, sub_first: "BiPoly", sub_second: "BiPoly") -> "BiPoly":
        """Substitute polynomials for both variables (exact expansion)."""
        pow1 = _power_list(sub_first, int(self.deg_first) if self.terms else 0)
        pow2 = _power_list(sub_second, int(self.deg_second) if self.terms else 0)
        out = BiPoly()
        for (a, b), c in self.terms.items():
            out = out + pow1[a] * pow2[b] * c
        return out

    def exact_div(self, den: "BiPoly") -> "BiPoly":
        """Exact polynomial division: returns Q with self = den * Q.

        Uses leading-term elimination in lexicographic order (first
        variable major).  Raises NonExactDivision if any remainder
        survives, which for this package always signals either a bug or
        an input violating an exactness identity.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return BiPoly()
        lead_den = max(den.terms)
        cd = den.terms[lead_den]
        rem = dict(self.terms)
        quo: dict = {}
        while rem:
            lead = max(rem)
            c = rem[lead]
            a = lead[0] - lead_den[0]
            b = lead[1] - lead_den[1]
            if a < 0 or b < 0 or c % cd:
                raise NonExactDivision(
                    f"remainder has leading term {lead} (coeff {c}) not divisible "
                    f"by divisor leading term {lead_den} (coeff {cd})"
                )
            q = c // cd
            quo[(a, b)] = q
            for (da, db), dc in den.terms.items():
                key = (da + a, db + b)
                s = rem.get(key, 0) - q * dc
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return _raw(quo)

    def substitute_rational(
        self,
        sub_first: tuple["BiPoly", "BiPoly"],
        sub_second: tuple["BiPoly", "BiPoly"],
        prefactor: "BiPoly" | None = None,
    ) -> "BiPoly":
        """Evaluate prefactor * P(n1/d1, n2/d2) as an exact polynomial.

        Each substitution is a (numerator, denominator) pair of
        polynomials in the *target* variable pair.  The caller supplies
        the prefactor that clears all denominators (e.g. the factor in
        front of a Tutte-polynomial specialization); if the cleared
        expression is not actually a polynomial, NonExactDivision
        propagates, signalling that the supplied clearing factor was
        wrong for this input.
        """
        n1, d1 = sub_first
        n2, d2 = sub_second
        if self.is_zero():
            return BiPoly()
        deg1 = int(self.deg_first)
        deg2 = int(self.deg_second)
        pn1 = _power_list(n1, deg1)
        pd1 = _power_list(d1, deg1)
        pn2 = _power_list(n2, deg2)
        pd2 = _power_list(d2, deg2)
        cleared = BiPoly()
        for (a, b), c in self.terms.items():
            cleared = cleared + pn1[a] * pd1[deg1 - a] * pn2[b] * pd2[deg2 - b] * c
        if prefactor is not None:
            cleared = cleared * prefactor
        return cleared.exact_div(pd1[deg1] * pd2[deg2])

    # -- display -------------------------------------------------------

    def to_string(self, names: tuple[str, str] = ("q", "t")) -> str:
        """Human-readable form, highest-degree terms first."""
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            c = self.terms[(a, b)]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in ((names[0], a), (names[1], b))
                if e
            )
            if mono:
                lead = {1: "", -1: "-"}.get(c, f"{c}*")
                part = lead + mono
            else:
                part = str(c)
            parts.append(part)
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self.to_string()})"


def _raw(terms: dict) -> BiPoly:
    """Wrap an already-normalized term dict without re-copying."""
    p = BiPoly.__new__(BiPoly)
    p.terms = terms
    return p


def _coerce(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, int):
        return BiPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to BiPoly")


def _power_list(p: BiPoly, n: int) -> list[BiPoly]:
    """[p^0, p^1, ..., p^n]."""
    out = [BiPoly.const(1)]
    for _ in range(n):
        out.append(out[-1] * p)
    return out


def falling_factorial(k: int) -> BiPoly:
    """t_(k) = t(t-1)...(t-k+1) in the second variable; t_(0) = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    t = BiPoly.var_second()
    out = BiPoly.const(1)
    for i in range(k):
        out = out * (t - BiPoly.const(i))
    return out


# -- JSON wire format -------------------------------------------------
#
# Dense coefficient matrix: row index = exponent of the second variable
# (the "row_var", typically t), column index = exponent of the first.
# Coefficients are decimal strings so consumers need no 64-bit assumption.


def to_json(p: BiPoly, row_var: str = "t", col_var: str = "q") -> dict:
    if p.is_zero():
        return {"rows": [["0"]], "row_var": row_var, "col_var": col_var}
    nrows = int(p.deg_second) + 1
    ncols = int(p.deg_first) + 1
    rows = [[str(p.coeff(a, b)) for a in range(ncols)] for b in range(nrows)]
    return {"rows": rows, "row_var": row_var, "col_var": col_var}


def from_json(obj: dict) -> BiPoly:
    terms = {}
    for b, row in enumerate(obj["rows"]):
        for a, entry in enumerate(row):
            c = int(entry)
            if c:
                terms[(a, b)] = c
    return BiPoly(terms)
