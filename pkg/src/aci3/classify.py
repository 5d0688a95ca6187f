"""Classification of graded Betti tables of almost complete intersection
artinian algebras whose Hilbert function is that of CI(a, a, a).

Such an ideal has four generators of degrees (a, a, a, h) with
a + 1 <= h <= 3a - 2, at least three first syzygies of degree 2a, and a last
syzygy of degree 3a.  Writing t for the number of last syzygies and
s = 3a + h for the duality shift of the linked Gorenstein ideal:

  * a first syzygy of degree a + h exists iff t is even, and then it is
    unique at both level 2 and level 3;
  * h >= 2a forces t odd;
  * the distinguished generator degree d* is a when t is even and h when t
    is odd.

For each parity there is a maximal table, and every other table arises from
it by cancelling couples R(-i) (+) R(-(s - i)) from levels 2 and 3 within a
fixed twist window (odd-parity families additionally require t >= 5 at the
time of cancellation, keeping t >= 3), plus the single a+h cancellation that
moves an even-parity table with t >= 4 to the odd family.

``delta_low`` and ``delta_high`` build the generator-degree sequences of the
linked Gorenstein ideals realizing the maximal tables; both satisfy the
Gaeta conditions implemented in ``gaeta_check``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional, Sequence, Union

from .errors import DomainError
from .hilbert import BettiTable

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class AciFamily:
    """Family of ACI algebras with Hilbert function H_CI(a,a,a), generator
    degrees (a, a, a, h) and the given parity of the last-syzygy count."""

    a: int
    h: int
    parity: str

    def __post_init__(self):
        a, h = self.a, self.h
        if a < 2:
            raise DomainError("invalid-family", f"need a >= 2, got {a}")
        if not a + 1 <= h <= 3 * a - 2:
            raise DomainError(
                "invalid-family", f"h outside ({a + 1} .. {3 * a - 2}): got {h}"
            )
        if self.parity not in (EVEN, ODD):
            raise DomainError("invalid-family", f"parity must be even or odd, got {self.parity!r}")
        if self.parity == EVEN and h >= 2 * a:
            raise DomainError(
                "invalid-family",
                f"h = {h} >= 2a forces an odd last-syzygy count (even family needs h <= {2 * a - 1})",
            )
        if self.parity == ODD and h < a + 2:
            raise DomainError(
                "invalid-family",
                f"h = a + 1 is rigid with t = 2: the odd family needs h >= {a + 2}",
            )

    @property
    def high(self) -> bool:
        """True for the h >= 2a branch of the odd family."""
        return self.parity == ODD and self.h >= 2 * self.a

    @property
    def shift(self) -> int:
        """Duality shift 3a + h of the self-dual part."""
        return 3 * self.a + self.h


@dataclass(frozen=True)
class GorensteinDelta:
    """Sorted odd-length generator-degree sequence of a codimension-3
    Gorenstein ideal candidate."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        if len(degs) % 2 == 0 or len(degs) < 3:
            raise DomainError("input-error", f"length must be odd and >= 3, got {len(degs)}")
        if list(degs) != sorted(degs):
            raise DomainError("input-error", f"degrees must be sorted ascending, got {degs}")
        if any(d < 1 for d in degs):
            raise DomainError("input-error", f"degrees must be >= 1, got {degs}")
        object.__setattr__(self, "degrees", degs)

    @property
    def n(self) -> int:
        return (len(self.degrees) - 1) // 2

    @property
    def theta(self) -> Optional[int]:
        """(sum of degrees) / n when integral, else None."""
        s = sum(self.degrees)
        return s // self.n if s % self.n == 0 else None

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)


DeltaLike = Union[GorensteinDelta, Sequence[int]]


def _as_delta(delta: DeltaLike) -> GorensteinDelta:
    if isinstance(delta, GorensteinDelta):
        return delta
    return GorensteinDelta(tuple(delta))


class GaetaResult(NamedTuple):
    ok: bool
    reason: Optional[str]


def gaeta_check(delta: DeltaLike) -> GaetaResult:
    """Realizability test for a codimension-3 Gorenstein degree sequence.

    Requires theta = (sum d_i) / n to be an integer and, writing the sequence
    1-based as d_1 <= ... <= d_{2n+1}, theta > d_i + d_{2n+3-i} for
    2 <= i <= n.  The reason names the first violated condition.
    """
    d = _as_delta(delta)
    degs = d.degrees
    n = d.n
    theta = d.theta
    if theta is None:
        return GaetaResult(False, f"theta = {sum(degs)}/{n} is not an integer")
    for i in range(2, n + 1):
        partner = 2 * n + 3 - i
        lhs = degs[i - 1] + degs[partner - 1]
        if theta <= lhs:
            return GaetaResult(
                False, f"theta <= d_{i} + d_{partner} ({theta} <= {lhs})"
            )
    return GaetaResult(True, None)


@dataclass(frozen=True)
class AciTable:
    """Betti table annotated with its (a, h, parity) family tags."""

    a: int
    h: int
    parity: str
    table: BettiTable

    @property
    def t(self) -> int:
        return self.table.t

    @property
    def family(self) -> AciFamily:
        return AciFamily(self.a, self.h, self.parity)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "h": self.h,
            "parity": self.parity,
            "t": self.t,
            "d_star": d_star(self),
            "levels": [list(level) for level in self.table.levels],
        }


def _free_part(fam: AciFamily) -> list[int]:
    a, h = fam.a, fam.h
    if fam.parity == EVEN:
        lo, hi = 2 * a + 1, a + h
    elif not fam.high:
        lo, hi = 2 * a + 1, a + h - 1
    else:
        lo, hi = h + 1, 3 * a - 1
    twists = list(range(lo, hi + 1))
    if (h - a) % 2 == 0:
        twists.append(fam.shift // 2)
    return sorted(twists)


def maximal_table(fam: AciFamily) -> AciTable:
    """The maximal Betti table of the family: with F the free part,
    level 3 = F + {3a}, level 2 = {h, 2a, 2a, 2a} + F, level 1 = {a, a, a, h}."""
    a, h = fam.a, fam.h
    free = _free_part(fam)
    level1 = sorted((a, a, a, h))
    level2 = sorted([h, 2 * a, 2 * a, 2 * a] + free)
    level3 = sorted(free + [3 * a])
    table = BettiTable(3, ((0,), tuple(level1), tuple(level2), tuple(level3)))
    assert table.t % 2 == (0 if fam.parity == EVEN else 1)
    return AciTable(a, h, fam.parity, table)


def allowed_couples(fam: AciFamily) -> tuple[tuple[int, int], ...]:
    """The cancellable couples {i, 3a+h-i} of the family, each listed once.

    The window is [2a+1, a+h-1] except for the h >= 2a branch, where it is
    [h+1, 3a-1]; both are symmetric about (3a+h)/2.  When h - a is even the
    middle couple pairs the two copies of the duplicated middle summand.
    """
    a, h = fam.a, fam.h
    if fam.high:
        lo = h + 1
    else:
        lo = 2 * a + 1
    s = fam.shift
    return tuple((i, s - i) for i in range(lo, s // 2 + 1))


def _remove_twists(level: tuple[int, ...], twists) -> tuple[int, ...]:
    out = list(level)
    for j in twists:
        if j not in out:
            raise DomainError("couple-not-present", f"twist {j} not present in {list(level)}")
        out.remove(j)
    return tuple(out)


def cancel_couple(tbl: AciTable, couple: tuple[int, int]) -> AciTable:
    """Remove the couple's two twists from levels 2 and 3.

    The Hilbert function is unchanged, t drops by 2 and the parity is
    preserved.  In odd-parity families this requires the current t >= 5, so
    that t never drops below 3.
    """
    fam = tbl.family
    pair = tuple(sorted(couple))
    if pair not in allowed_couples(fam):
        raise DomainError(
            "couple-not-allowed",
            f"{pair} is not an allowed cancellation couple for (a, h) = ({fam.a}, {fam.h})",
        )
    if fam.parity == ODD and tbl.t < 5:
        raise DomainError("t-floor", f"t = {tbl.t} < 5: t would drop below 3")
    levels = tbl.table.levels
    new2 = _remove_twists(levels[2], pair)
    new3 = _remove_twists(levels[3], pair)
    table = BettiTable(3, (levels[0], levels[1], new2, new3))
    return AciTable(tbl.a, tbl.h, tbl.parity, table)


def cancel_ah(tbl: AciTable) -> AciTable:
    """Cancel the single R(-(a+h)) pair, moving to the odd family.

    Only even-parity tables carry the a+h twist, and the cancellation exists
    iff t >= 4 (the result is a non-complete-intersection with odd t, so
    t - 1 >= 3 is forced).
    """
    ah = tbl.a + tbl.h
    if tbl.parity == ODD:
        raise DomainError("no-ah-syzygy", "no a+h syzygy (odd last-syzygy count)")
    if tbl.t < 4:
        raise DomainError("not-cancellable", f"t = {tbl.t} < 4: R(-{ah}) is not cancellable")
    levels = tbl.table.levels
    new2 = _remove_twists(levels[2], (ah,))
    new3 = _remove_twists(levels[3], (ah,))
    table = BettiTable(3, (levels[0], levels[1], new2, new3))
    return AciTable(tbl.a, tbl.h, ODD, table)


def d_star(tbl: AciTable) -> int:
    """Distinguished generator degree: a when t is even, h when t is odd."""
    return tbl.a if tbl.t % 2 == 0 else tbl.h


class PosetEdge(NamedTuple):
    src: int
    dst: int
    kind: str  # "couple" or "ah"
    twists: tuple[int, ...]

    def to_json(self) -> dict:
        return {"src": self.src, "dst": self.dst, "kind": self.kind,
                "twists": list(self.twists)}


@dataclass(frozen=True)
class TablePoset:
    """All tables for a given (a, h) plus the cancellation edges between them."""

    a: int
    h: int
    nodes: tuple[AciTable, ...]
    edges: tuple[PosetEdge, ...]

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "h": self.h,
            "tables": [node.to_json() for node in self.nodes],
            "edges": [edge.to_json() for edge in self.edges],
        }


def _family_nodes(fam: AciFamily) -> list[AciTable]:
    top = maximal_table(fam)
    couples = allowed_couples(fam)
    if fam.parity == EVEN:
        max_k = len(couples)
    else:
        max_k = (top.t - 3) // 2
    nodes = []
    for k in range(0, max_k + 1):
        for subset in combinations(couples, k):
            node = top
            for pair in subset:
                node = cancel_couple(node, pair)
            nodes.append(node)
    return nodes


def enumerate_tables(a: int, h: int) -> TablePoset:
    """Every Betti table reachable from the applicable maximal tables by
    allowed cancellations, with explicit couple and a+h edges.

    Nodes are ordered lexicographically by their level multisets; distinct
    couple subsets give distinct tables, so no deduplication is needed.
    """
    if a < 2:
        raise DomainError("input-error", f"need a >= 2, got {a}")
    if not a + 1 <= h <= 3 * a - 2:
        raise DomainError("h-out-of-range", f"h outside ({a + 1} .. {3 * a - 2}): got {h}")
    nodes: list[AciTable] = []
    if h <= 2 * a - 1:
        nodes.extend(_family_nodes(AciFamily(a, h, EVEN)))
    if h >= a + 2:
        nodes.extend(_family_nodes(AciFamily(a, h, ODD)))
    nodes.sort(key=lambda node: node.table.levels)
    position = {(node.parity, node.table.levels): i for i, node in enumerate(nodes)}

    edges = []
    for i, node in enumerate(nodes):
        for pair in allowed_couples(node.family):
            try:
                target = cancel_couple(node, pair)
            except DomainError:
                continue
            j = position[(target.parity, target.table.levels)]
            edges.append(PosetEdge(i, j, "couple", pair))
        try:
            target = cancel_ah(node)
        except DomainError:
            continue
        j = position[(target.parity, target.table.levels)]
        edges.append(PosetEdge(i, j, "ah", (node.a + node.h,)))
    return TablePoset(a, h, tuple(nodes), tuple(edges))


def t_max(a: int) -> int:
    """Largest last-syzygy count in the h = 2a family: a + 1 for even a,
    a for odd a."""
    if a < 2:
        raise DomainError("input-error", f"need a >= 2, got {a}")
    return a + 1 if a % 2 == 0 else a


def delta_low(a: int, h: int) -> GorensteinDelta:
    """Generator degrees of the Gorenstein link realizing the maximal tables
    for a + 1 <= h <= 2a - 1: (h-a, a, a, a+1, ..., h-1), with (a+h)/2
    doubled when h - a is even."""
    if a < 2:
        raise DomainError("input-error", f"need a >= 2, got {a}")
    if not a + 1 <= h <= 2 * a - 1:
        raise DomainError("h-out-of-range", f"h outside ({a + 1} .. {2 * a - 1}): got {h}")
    degs = [h - a, a, a] + list(range(a + 1, h))
    if (h - a) % 2 == 0:
        degs.append((a + h) // 2)
    return GorensteinDelta(tuple(sorted(degs)))


def delta_high(a: int, h: int) -> GorensteinDelta:
    """Generator degrees of the Gorenstein link realizing the maximal table
    for 2a <= h <= 3a - 2: (a, a, h-a, h-a+1, ..., 2a-1), with (a+h)/2
    doubled when h - a is even."""
    if a < 2:
        raise DomainError("input-error", f"need a >= 2, got {a}")
    if not 2 * a <= h <= 3 * a - 2:
        raise DomainError("h-out-of-range", f"h outside ({2 * a} .. {3 * a - 2}): got {h}")
    degs = [a, a] + list(range(h - a, 2 * a))
    if (h - a) % 2 == 0:
        degs.append((a + h) // 2)
    return GorensteinDelta(tuple(sorted(degs)))
