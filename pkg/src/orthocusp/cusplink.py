"""Symbolic model of the hyperfaces through one cusp of a right-angled
n-polyhedron.

The 2(n-1) hyperfaces through a cusp come in parallel pairs; hyperface i is
paired with 2(n-1)+1-i (ids run 1..2(n-1)).  A k-face through the cusp is
the intersection of n-k of these hyperfaces, no two of them parallel, so it
is modelled as a pair-free subset.  This file also carries the built-in
adjacency tables used by the two-cusp exclusion argument in dimension six
and the surplus/deficit averaging arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Literal, Sequence


@dataclass(frozen=True)
class CuspLink:
    """The hyperfaces through one cusp with the parallel-pair involution."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("dimension must be at least 2")

    @property
    def size(self) -> int:
        return 2 * (self.n - 1)

    def partner(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise ValueError(f"hyperface id {i} outside 1..{self.size}")
        return self.size + 1 - i

    def pair_free(self, s: Iterable[int]) -> bool:
        s = set(s)
        return all(self.partner(i) not in s for i in s)

    def cusp_faces(self, k: int) -> list[frozenset[int]]:
        """All k-faces through the cusp, as hyperface subsets of size n-k."""
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"face dimension {k} outside 1..{self.n - 1}")
        take = self.n - k
        return [frozenset(s) for s in combinations(range(1, self.size + 1), take)
                if self.pair_free(s)]


def count_cusp_faces(n: int, k: int) -> int:
    """Number of k-faces through a cusp of a right-angled n-polyhedron.

    Closed form C(n-1, n-k) * 2^(n-k); cross-checked against the explicit
    subset enumeration before returning.
    """
    link = CuspLink(n)
    formula = comb(n - 1, n - k) * 2 ** (n - k)
    enumerated = len(link.cusp_faces(k))
    if formula != enumerated:
        raise AssertionError(
            f"count mismatch for n={n} k={k}: formula {formula}, enumeration {enumerated}")
    return formula


def faces_through_edge(n: int) -> int:
    """Number of 3-faces containing a fixed edge through the cusp.

    The edge is cut out by n-1 pairwise non-parallel hyperfaces and a
    3-face containing it chooses n-3 of them: C(n-1, n-3).
    """
    if n < 4:
        raise ValueError("needs dimension at least 4")
    formula = comb(n - 1, n - 3)
    enumerated = sum(1 for _ in combinations(range(n - 1), n - 3))
    if formula != enumerated:
        raise AssertionError("binomial enumeration mismatch")
    return formula


def is_adjacent(link: CuspLink, f: frozenset[int], g: frozenset[int]) -> bool:
    """Whether two equal-dimension cusp faces meet in a face one dimension
    lower: their union must define a face (pair-free) and their overlap must
    miss exactly one hyperface of each."""
    if len(f) != len(g):
        raise ValueError("faces have different dimensions")
    if f == g:
        return False
    return len(f & g) == len(f) - 1 and link.pair_free(f | g)


CaseTag = Literal["face3", "face2", "edge"]

#: Hyperface carriers of the second cusp for the three two-cusp cases in
#: dimension six: the second cusp lies on a common 3-face, a common 2-face,
#: or an edge running between the cusps.
CARRIERS: dict[CaseTag, frozenset[int]] = {
    "face3": frozenset({1, 2, 3}),
    "face2": frozenset({1, 2, 3, 4}),
    "edge": frozenset({1, 2, 3, 4, 5}),
}


@dataclass(frozen=True)
class SecondCuspCase:
    """Position of the second cusp relative to the first, given by the set
    of first-cusp hyperfaces that also pass through it."""

    tag: CaseTag

    def __post_init__(self):
        if self.tag not in CARRIERS:
            raise ValueError(f"unknown case tag {self.tag!r}")
        link = CuspLink(6)
        if not link.pair_free(self.carrier):
            raise ValueError("carrier contains a parallel pair")

    @property
    def carrier(self) -> frozenset[int]:
        return CARRIERS[self.tag]


def two_cusp_faces(case: SecondCuspCase) -> set[frozenset[int]]:
    """The 3-faces containing both cusps: all triples inside the carrier."""
    return {frozenset(t) for t in combinations(sorted(case.carrier), 3)}


# ---------------------------------------------------------------------------
# built-in tables
# ---------------------------------------------------------------------------

def _rows(spec: Sequence[Sequence[Sequence[int]]]):
    return tuple(tuple(frozenset(m) for m in row) for row in spec)


#: Rows of pairwise-adjacent one-cusp 3-faces for the case of a single
#: shared 2-face (carrier {1,2,3,4}); each row certifies one face that must
#: exceed the twelve-face minimum.
TABLE1 = _rows([
    [(1, 2, 6), (1, 2, 7), (1, 2, 8)],
    [(1, 3, 6), (1, 3, 7), (1, 3, 9)],
    [(1, 4, 6), (1, 4, 8), (1, 4, 9)],
    [(1, 5, 7), (1, 5, 8), (1, 5, 9)],
    [(2, 3, 6), (2, 3, 7), (2, 3, 10)],
    [(2, 4, 6), (2, 4, 8), (2, 4, 10)],
    [(2, 5, 7), (2, 5, 8), (2, 5, 10)],
    [(3, 4, 6), (3, 4, 9), (3, 4, 10)],
    [(3, 5, 7), (3, 5, 9), (3, 5, 10)],
    [(4, 5, 8), (4, 5, 9), (4, 5, 10)],
    [(2, 6, 10), (2, 7, 10), (2, 8, 10)],
    [(3, 6, 10), (3, 7, 10), (3, 9, 10)],
])

#: Rows for the case of an edge joining the two cusps (carrier {1,...,5}).
TABLE2 = TABLE1 + _rows([
    [(4, 6, 10), (4, 8, 10), (4, 9, 10)],
    [(5, 7, 10), (5, 8, 10), (5, 9, 10)],
    [(1, 6, 9), (1, 7, 9), (1, 8, 9)],
    [(6, 9, 10), (7, 9, 10), (8, 9, 10)],
    [(1, 7, 8), (2, 7, 8), (5, 7, 8)],
    [(6, 7, 8), (7, 8, 9), (7, 8, 10)],
    [(1, 6, 7), (2, 6, 7), (3, 6, 7)],
    [(2, 6, 8), (4, 6, 8), (6, 8, 10)],
])

#: Rows for the case of a single shared 3-face (carrier {1,2,3}).
CASE41_ROWS = _rows([
    [(1, 2, 4), (1, 2, 5), (1, 2, 8)],
    [(1, 4, 5), (2, 4, 5), (4, 5, 8)],
    [(1, 4, 6), (2, 4, 6), (4, 6, 8)],
    [(1, 3, 9), (1, 4, 9), (1, 5, 9)],
])

BUILTIN_TABLES: dict[str, tuple[CaseTag, tuple]] = {
    "table1": ("face2", TABLE1),
    "table2": ("edge", TABLE2),
    "case41": ("face3", CASE41_ROWS),
}


@dataclass
class TableReport:
    case: CaseTag
    rows: int
    distinct_faces: int
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_table(case: SecondCuspCase,
                 rows: Sequence[Sequence[frozenset[int]]]) -> TableReport:
    """Re-derive the validity of an adjacency table instead of trusting it.

    Every row member must be a genuine 3-face through the first cusp only
    (pair-free triple not inside the carrier); row members must be pairwise
    adjacent; across the whole table all members must be distinct, so each
    row certifies a distinct surplus face.
    """
    link = CuspLink(6)
    problems: list[str] = []
    seen: set[frozenset[int]] = set()
    for ri, row in enumerate(rows):
        if len(row) != 3:
            problems.append(f"row {ri}: expected 3 members, got {len(row)}")
            continue
        for member in row:
            s = sorted(member)
            if len(member) != 3 or not all(1 <= i <= link.size for i in s):
                problems.append(f"row {ri}: {s} is not a triple of hyperface ids")
            elif not link.pair_free(member):
                problems.append(f"row {ri}: {s} contains a parallel pair")
            elif member <= case.carrier:
                problems.append(f"row {ri}: {s} lies inside the carrier (second cusp)")
            if member in seen:
                problems.append(f"row {ri}: {s} repeats an earlier member")
            seen.add(member)
        for a, b in combinations(row, 2):
            if not is_adjacent(link, a, b):
                problems.append(f"row {ri}: {sorted(a)} and {sorted(b)} are not adjacent")
    return TableReport(case=case.tag, rows=len(rows),
                       distinct_faces=len(seen), problems=problems)


def verify_builtin(name: str) -> TableReport:
    tag, rows = BUILTIN_TABLES[name]
    return verify_table(SecondCuspCase(tag), rows)


# ---------------------------------------------------------------------------
# averaging arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AveragingVerdict:
    total_bound: Fraction
    deficit_sum: int
    surplus_count: int

    @property
    def contradiction(self) -> bool:
        return self.surplus_count >= self.deficit_sum

    @property
    def margin(self) -> int:
        return self.surplus_count - self.deficit_sum

    def line(self) -> str:
        word = "contradiction" if self.contradiction else "no contradiction"
        return (f"surplus {self.surplus_count} vs deficit {self.deficit_sum}"
                f" against strict average bound {self.total_bound}: {word}")


def averaging_contradiction(total_bound: Fraction | int,
                            deficits: Sequence[int],
                            surplus_count: int) -> AveragingVerdict:
    """Strict-average counting argument.

    The average face count must stay strictly below ``total_bound``; every
    exceptional face may fall short by its deficit, every certified surplus
    face exceeds the bound by at least one.  As soon as the surpluses cover
    the total deficit the average reaches the bound, a contradiction.
    """
    if any(d < 0 for d in deficits):
        raise ValueError("deficits must be non-negative")
    if surplus_count < 0:
        raise ValueError("surplus count must be non-negative")
    return AveragingVerdict(total_bound=Fraction(total_bound),
                            deficit_sum=sum(deficits),
                            surplus_count=surplus_count)
