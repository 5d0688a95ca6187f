"""Graded Betti numbers of artinian monomial quotients via Koszul homology.

For R = k[x_1..x_c] and an artinian monomial ideal I, the Betti number
beta_{i,j} of R/I is the dimension of the homology in position i of the
internal-degree-j strand of (R/I) tensored with the Koszul complex on the
variables.  The strand in position i has basis e_S (x) m with S an i-element
subset of the variables and m a standard monomial of degree j - i; the
differential sends e_S (x) m to

    sum over s in S of (-1)^(position of s in sorted S) e_{S - s} (x) x_s m,

dropping terms where x_s m lands inside I.  Any consistent sign convention
yields the same homology dimensions; this one is fixed for reproducibility.

Matrices have entries in {-1, 0, 1}; ranks are computed by fraction-free
integer elimination, so the answers are exact characteristic-zero values.
Strands beyond internal degree (socle degree + c) are zero and are skipped.

This module is the in-process oracle against which every displayed
resolution with a monomial witness is checked.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import DomainError
from .hilbert import BettiTable
from .intmat import int_rank
from .monomials import MonomialIdeal, standard_monomials

MAX_STRAND_DIM = 10_000
MAX_VARIABLES = 4


def _check_instance(ideal: MonomialIdeal) -> list[list[tuple[int, ...]]]:
    if ideal.c > MAX_VARIABLES:
        raise DomainError("too-large", f"supported up to {MAX_VARIABLES} variables, got {ideal.c}")
    if ideal.is_unit:
        raise DomainError("input-error", "quotient by the unit ideal is the zero algebra")
    std = standard_monomials(ideal)  # raises on non-artinian input
    c = ideal.c
    worst = max(
        comb(c, i) * len(std[d])
        for i in range(c + 1)
        for d in range(len(std))
    )
    if worst > MAX_STRAND_DIM:
        raise DomainError("too-large", f"instance too large: strand dimension {worst}")
    return std


def strand_matrices(ideal: MonomialIdeal, j: int, std=None) -> list[list[list[int]]]:
    """Differential matrices of the degree-j Koszul strand.

    Returns [M_1, ..., M_c] where M_i is the matrix of the map from position
    i to position i-1 (rows indexed by the target basis).  Exposed so tests
    can assert that consecutive differentials compose to zero.
    """
    if std is None:
        std = _check_instance(ideal)
    c = ideal.c

    def basis(i: int):
        d = j - i
        monos = std[d] if 0 <= d < len(std) else []
        return [(S, m) for S in combinations(range(c), i) for m in monos]

    bases = [basis(i) for i in range(c + 1)]
    index = [{key: pos for pos, key in enumerate(b)} for b in bases]
    in_ideal = ideal.contains

    mats = []
    for i in range(1, c + 1):
        rows = len(bases[i - 1])
        cols = len(bases[i])
        mat = [[0] * cols for _ in range(rows)]
        for col, (S, m) in enumerate(bases[i]):
            for pos, s in enumerate(S):
                m2 = tuple(e + 1 if k == s else e for k, e in enumerate(m))
                if in_ideal(m2):
                    continue
                Srem = S[:pos] + S[pos + 1:]
                row = index[i - 1][(Srem, m2)]
                mat[row][col] += -1 if pos % 2 else 1
        mats.append(mat)
    return mats


def betti_numbers(ideal: MonomialIdeal) -> BettiTable:
    """Exact graded Betti table of R/I for an artinian monomial ideal I."""
    std = _check_instance(ideal)
    c = ideal.c
    socle = len(std) - 1
    levels: list[list[int]] = [[] for _ in range(c + 1)]
    for j in range(0, socle + c + 1):
        dims = []
        for i in range(c + 1):
            d = j - i
            dims.append(comb(c, i) * (len(std[d]) if 0 <= d <= socle else 0))
        if not any(dims):
            continue
        mats = strand_matrices(ideal, j, std)
        ranks = [int_rank(m) for m in mats]  # ranks[i-1] = rank of position i -> i-1
        for i in range(c + 1):
            rk_in = ranks[i - 1] if i >= 1 else 0
            rk_out = ranks[i] if i < c else 0
            beta = dims[i] - rk_in - rk_out
            levels[i].extend([j] * beta)
    return BettiTable(c, tuple(tuple(sorted(level)) for level in levels))


def verify_resolution(ideal: MonomialIdeal, expected: BettiTable):
    """Compare the oracle's Betti table with an expected one.

    Returns (ok, diffs) where diffs lists one entry per mismatching level.
    """
    computed = betti_numbers(ideal)
    if expected.c != computed.c:
        return False, [{"level": None,
                        "expected": f"c = {expected.c}",
                        "computed": f"c = {computed.c}"}]
    diffs = []
    for i in range(computed.c + 1):
        if computed.levels[i] != expected.levels[i]:
            diffs.append({
                "level": i,
                "expected": list(expected.levels[i]),
                "computed": list(computed.levels[i]),
            })
    return not diffs, diffs
