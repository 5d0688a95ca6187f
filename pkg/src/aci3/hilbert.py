"""Exact arithmetic on Hilbert functions of graded artinian algebras.

A Hilbert function is stored densely from degree 0 with trailing zeros
trimmed; everything is arbitrary-precision integer arithmetic, no floating
point anywhere.  The empty value tuple represents the zero function (the
quotient by the unit ideal), which shows up as a degenerate liaison result.

Betti tables are recorded as one sorted multiset of twists per homological
level: a summand R(-j) contributes the integer j at its level.  Level 0 is
always the single twist 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Union

from .errors import DomainError


def _monomial_count(degree: int, c: int) -> int:
    """Number of monomials of the given degree in c variables (0 if degree < 0)."""
    if degree < 0:
        return 0
    return comb(degree + c - 1, c - 1)


@dataclass(frozen=True)
class HilbertFunction:
    """Finitely supported sequence H(0), H(1), ... with H(0) = 1 unless zero."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise DomainError("not-hilbert-function", f"negative value in {vals}")
        while vals and vals[-1] == 0:
            vals = vals[:-1]
        if vals and vals[0] != 1:
            raise DomainError("not-hilbert-function", f"H(0) = {vals[0]} != 1")
        object.__setattr__(self, "values", vals)

    def at(self, n: int) -> int:
        if 0 <= n < len(self.values):
            return self.values[n]
        return 0

    @property
    def is_zero(self) -> bool:
        return not self.values

    def total(self) -> int:
        """Length of the algebra (sum of all values)."""
        return sum(self.values)

    def to_json(self) -> list[int]:
        return list(self.values)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class DegreeTuple:
    """Sorted generator degrees a_1 <= ... <= a_r of a complete intersection."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        if any(d < 1 for d in degs):
            raise DomainError("input-error", f"degrees must be >= 1, got {degs}")
        if list(degs) != sorted(degs):
            raise DomainError("input-error", f"degrees must be sorted ascending, got {degs}")
        object.__setattr__(self, "degrees", degs)

    @property
    def r(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)


DegreesLike = Union[DegreeTuple, Sequence[int]]


def as_degrees(degrees: DegreesLike) -> tuple[int, ...]:
    if isinstance(degrees, DegreeTuple):
        return degrees.degrees
    return DegreeTuple(tuple(degrees)).degrees


@dataclass(frozen=True)
class BettiTable:
    """Twist multisets by homological level for an algebra in c variables.

    ``levels[i]`` is the sorted multiset of twists j of the summands R(-j) in
    homological position i; ``levels[0] == (0,)``.  Minimality of the
    resolution is *not* enforced (mapping cones are legitimately non-minimal);
    use :meth:`is_minimal` to test it.
    """

    c: int
    levels: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.c < 1:
            raise DomainError("input-error", f"need c >= 1, got c = {self.c}")
        lvls = tuple(tuple(sorted(int(j) for j in level)) for level in self.levels)
        if len(lvls) != self.c + 1:
            raise DomainError(
                "input-error",
                f"expected {self.c + 1} levels for c = {self.c}, got {len(lvls)}",
            )
        if lvls[0] != (0,):
            raise DomainError("input-error", f"level 0 must be (0,), got {lvls[0]}")
        for level in lvls:
            if any(j < 0 for j in level):
                raise DomainError("input-error", f"negative twist in {level}")
        object.__setattr__(self, "levels", lvls)

    @property
    def t(self) -> int:
        """Rank of the last free module (number of last syzygies)."""
        return len(self.levels[self.c])

    def is_minimal(self) -> bool:
        """Every twist at level i+1 strictly exceeds the minimum at level i."""
        for i in range(self.c):
            if not self.levels[i] or not self.levels[i + 1]:
                continue
            lo = min(self.levels[i])
            if any(j <= lo for j in self.levels[i + 1]):
                return False
        return True

    def max_twist(self) -> int:
        return max((j for level in self.levels for j in level), default=0)

    def to_json(self) -> dict:
        return {"c": self.c, "levels": [list(level) for level in self.levels]}

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        try:
            return cls(int(data["c"]), tuple(tuple(level) for level in data["levels"]))
        except (KeyError, TypeError) as exc:
            raise DomainError("input-error", f"malformed Betti table: {exc}") from exc


def ci_hilbert(degrees: DegreesLike) -> HilbertFunction:
    """Hilbert function of a complete intersection with the given degrees.

    Coefficients of prod_i (1 + t + ... + t^(a_i - 1)); the empty tuple gives
    the sequence (1).
    """
    degs = as_degrees(degrees)
    coeffs = [1]
    for a in degs:
        out = [0] * (len(coeffs) + a - 1)
        for i, ci in enumerate(coeffs):
            for k in range(a):
                out[i + k] += ci
        coeffs = out
    return HilbertFunction(tuple(coeffs))


def koszul_table(degrees: DegreesLike) -> BettiTable:
    """Betti table of the Koszul resolution of a complete intersection.

    Level i holds the sums of the i-element subsets of the degrees; the
    ambient variable count equals the number of degrees.
    """
    degs = as_degrees(degrees)
    c = len(degs)
    if c < 1:
        raise DomainError("input-error", "need at least one degree")
    levels = tuple(
        tuple(sorted(sum(sub) for sub in combinations(degs, i))) for i in range(c + 1)
    )
    return BettiTable(c, levels)


def difference(h: HilbertFunction, k: int = 1) -> tuple[int, ...]:
    """k-fold first difference of h, over the full range where it can be nonzero.

    Delta H(n) = H(n) - H(n-1) with H zero outside its support; the result has
    length len(h.values) + k and may be negative.
    """
    if k < 0:
        raise DomainError("input-error", f"difference order must be >= 0, got {k}")
    vals = list(h.values)
    for _ in range(k):
        nxt = []
        for n in range(len(vals) + 1):
            cur = vals[n] if n < len(vals) else 0
            prev = vals[n - 1] if n - 1 >= 0 else 0
            nxt.append(cur - prev)
        vals = nxt
    return tuple(vals)


def socle_degree(h: HilbertFunction) -> int:
    """Largest degree with H(n) > 0."""
    if h.is_zero:
        raise DomainError("empty-algebra", "socle degree of the zero algebra is undefined")
    return len(h.values) - 1


def betti_alternating_sum(b: BettiTable, upto: int) -> tuple[int, ...]:
    """Values sum_i (-1)^i sum_j C(n-j+c-1, c-1) for n = 0..upto (no checks)."""
    out = []
    for n in range(upto + 1):
        val = 0
        for i, level in enumerate(b.levels):
            sign = -1 if i % 2 else 1
            for j in level:
                val += sign * _monomial_count(n - j, b.c)
        out.append(val)
    return tuple(out)


def hilbert_from_betti(b: BettiTable, artinian: bool = True) -> HilbertFunction:
    """Hilbert function determined by a Betti table (alternating binomial sum).

    Each summand R(-j) at level i contributes (-1)^i times the count of
    monomials of degree n - j in c variables.  Raises if a value is negative,
    or (in the default artinian mode) if the support is not finite.
    """
    m = b.max_twist()
    vals = betti_alternating_sum(b, m + b.c)
    if any(v < 0 for v in vals):
        raise DomainError("not-hilbert-function", "table not a Hilbert function")
    if artinian and any(vals[n] != 0 for n in range(m + 1, m + b.c + 1)):
        # a degree-(c-1) polynomial vanishing at c consecutive points is zero,
        # so nonzero values past the top twist certify infinite support
        raise DomainError("non-artinian", "table has non-finitely-supported Hilbert function")
    return HilbertFunction(vals[: m + 1])


def _divide_unit_block(coeffs: list[int], a: int) -> Optional[list[int]]:
    """Exact quotient of the polynomial by 1 + t + ... + t^(a-1), or None."""
    if len(coeffs) < a:
        return None
    q = [0] * (len(coeffs) - a + 1)
    rem = list(coeffs)
    for i in range(len(q)):
        q[i] = rem[i]
        for k in range(a):
            rem[i + k] -= q[i]
    if any(rem):
        return None
    return q


def recognize_ci(h: HilbertFunction) -> Optional[DegreeTuple]:
    """Degrees of a complete intersection with Hilbert function h, if any.

    The number of factors is fixed at r = H(1) and all recovered degrees are
    >= 2 (factors of degree 1 would drop the codimension).  Works by trial
    division of the generating polynomial with backtracking; returns the
    lexicographically least sorted tuple, or None.
    """
    if h.is_zero:
        return None
    r = h.at(1)
    coeffs = list(h.values)

    def search(poly: list[int], remaining: int, min_a: int) -> Optional[tuple[int, ...]]:
        if remaining == 0:
            return () if poly == [1] else None
        deg = len(poly) - 1
        a = min_a
        while remaining * (a - 1) <= deg:
            q = _divide_unit_block(poly, a)
            if q is not None:
                rest = search(q, remaining - 1, a)
                if rest is not None:
                    return (a,) + rest
            a += 1
        return None

    found = search(coeffs, r, 2)
    if found is None:
        return None
    return DegreeTuple(found)


def min_generator_bound(h: HilbertFunction, c: int, j: int) -> int:
    """Lower bound for the number of degree-j minimal generators of any ideal
    whose quotient has Hilbert function h in c variables.

    Uses dim I_j - c * dim I_{j-1} clipped at 0, where dim I_n is the
    codimension of H(n) inside the full polynomial ring degree n.
    """
    if c < 1:
        raise DomainError("input-error", f"need c >= 1, got {c}")
    if j < 0:
        raise DomainError("input-error", f"need degree >= 0, got {j}")
    for n in range(len(h.values)):
        if h.at(n) > _monomial_count(n, c):
            raise DomainError(
                "not-hilbert-function",
                f"H({n}) = {h.at(n)} exceeds dim R_{n} = {_monomial_count(n, c)}: "
                f"not a Hilbert function for {c} variables",
            )

    def dim_ideal(n: int) -> int:
        if n < 0:
            return 0
        return _monomial_count(n, c) - h.at(n)

    return max(0, dim_ideal(j) - c * dim_ideal(j - 1))
