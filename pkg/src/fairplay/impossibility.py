"""Witness instances where no assignment is both full-game and strongly
envy-free, and the machinery to certify them by exhaustion.

For group sizes g >= 3 a fixed family works: g players who force both of the
first two days, and 2g-1 players sharing three more days.  The three shared
days hand out 3g slots, fewer than 2(2g-1), so some flexible player ends up
with at most one game while every forced player has two; that player envies
all g of them.  For g = 2 that arithmetic fails (3g = 6 = 2(2g-1)), so this
module ships a bounded exhaustive search instead of a construction and
reports exactly what it covered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from fairplay._scan import scan_verify
from fairplay.model import Assignment, Problem, is_irreducible
from fairplay.oracle import (
    EnumerationBudget,
    _assignment_from_choice,
    _combo_lists,
    count_efficient,
)

_WITNESS_DAYS = ("Mon", "Tues", "Wed", "Thur", "Frid")


@dataclass(frozen=True)
class WitnessReport:
    """Result of exhaustively checking one instance for a full-game,
    strongly envy-free assignment.

    ``conclusive`` is False only when the enumeration budget ran out first;
    a budget-limited run is never reported as a demonstrated impossibility.
    ``min_envy_pairs`` is the smallest violation-pair count seen over the
    scanned assignments (an invented severity measure, 0 iff ``ef_found``).
    """

    problem: Problem
    group_size: int
    efficient_count: int
    ef_found: bool
    first_ef_witness: Optional[Assignment]
    min_envy_pairs: int
    scanned: int
    conclusive: bool


@dataclass(frozen=True)
class SearchBounds:
    """Limits for the g=2 witness search.

    Sizes whose candidate pool (row multisets when deduplicating, raw
    matrices otherwise) exceeds ``per_size_cap`` are skipped and reported,
    so a finished search states exactly what it covered.
    """

    max_players: int
    max_days: int
    per_instance_budget: EnumerationBudget = field(default_factory=EnumerationBudget)
    symmetry_dedup: bool = True
    per_size_cap: int = 2_000_000

    def __post_init__(self):
        if self.max_players < 1 or self.max_days < 1:
            raise ValueError("bounds must be >= 1")
        if self.per_size_cap < 1:
            raise ValueError("per_size_cap must be >= 1")


@dataclass(frozen=True)
class G2SearchResult:
    """Outcome of a bounded g=2 witness search."""

    witness: Optional[tuple[Problem, WitnessReport]]
    search_complete: bool
    instances_examined: int
    instances_inconclusive: int
    sizes_searched: tuple[tuple[int, int], ...]
    sizes_skipped: tuple[tuple[int, int], ...]


def _letter_names(count: int) -> tuple[str, ...]:
    names = []
    for i in range(count):
        name = ""
        v = i
        while True:
            name = chr(ord("a") + v % 26) + name
            v = v // 26 - 1
            if v < 0:
                break
        names.append(name)
    return tuple(names)


def build_table2() -> Problem:
    """The bundled 11-player impossibility instance for games of four:
    four players share the first two days, seven share the last three."""
    return build_witness(4)


def build_witness(g: int) -> Problem:
    """Witness family for group size g >= 3; g = 4 reproduces the bundled
    11-player instance exactly."""
    if g < 3:
        raise ValueError(
            "the fixed witness family needs group size >= 3; "
            "use search_witness_g2 for g = 2"
        )
    left, right = g, 2 * g - 1
    names = _letter_names(left + right)
    rows = [(1, 1, 0, 0, 0)] * left + [(0, 0, 1, 1, 1)] * right
    return Problem(names, _WITNESS_DAYS, tuple(rows), g)


def verify_no_fair_ef(p: Problem, budget: EnumerationBudget | None = None) -> WitnessReport:
    """Scan every full-game assignment of an irreducible problem for strong
    envy-freeness.  ``ef_found=False`` with ``conclusive=True`` certifies that
    no assignment is simultaneously full-game and strongly envy-free (and
    therefore none is fairness-optimal and strongly envy-free either)."""
    if not is_irreducible(p):
        raise ValueError("verify_no_fair_ef requires an irreducible problem")
    budget = budget or EnumerationBudget()
    total = count_efficient(p)
    combos = _combo_lists(p, budget.max_assignments + 1)
    scanned, conclusive, ef_found, choice, min_envy = scan_verify(
        combos, p.n, p.availability_counts(), budget.max_assignments
    )
    witness = _assignment_from_choice(p, combos, choice) if choice is not None else None
    return WitnessReport(
        problem=p,
        group_size=p.group_size,
        efficient_count=total,
        ef_found=ef_found,
        first_ef_witness=witness,
        min_envy_pairs=min_envy,
        scanned=scanned,
        conclusive=conclusive,
    )


# --------------------------------------------------------------------------- #
# Canonical forms and the g=2 search
# --------------------------------------------------------------------------- #

def canonical_form(matrix: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Least representative of a binary matrix under row and column
    permutations: minimal column-major reading with rows sorted ascending.

    Branch and prune over column-order prefixes: per depth, keep exactly the
    prefixes whose sorted prefix reading is minimal.  Reading prefixes are
    stable as columns are appended, so the pruning is exact.
    """
    n = len(matrix)
    if n == 0:
        return ()
    m = len(matrix[0])
    if m == 0:
        return tuple(() for _ in range(n))

    # frontier entries: (chosen column set, per-original-row prefix value);
    # prefixes with equal column sets and values have identical completions
    frontier: list[tuple[frozenset[int], tuple[int, ...]]] = [(frozenset(), (0,) * n)]
    best_key = None
    for _ in range(m):
        best_key = None
        best_entries: dict[tuple, None] = {}
        for used, vals in frontier:
            for c in range(m):
                if c in used:
                    continue
                newvals = tuple(vals[i] * 2 + matrix[i][c] for i in range(n))
                key = tuple(sorted(newvals))
                if best_key is None or key < best_key:
                    best_key = key
                    best_entries = {(used | {c}, newvals): None}
                elif key == best_key:
                    best_entries.setdefault((used | {c}, newvals), None)
        frontier = [entry for entry in best_entries]
    width = m
    return tuple(tuple((v >> (width - 1 - b)) & 1 for b in range(width)) for v in best_key)


def _row_multisets(n: int, m: int):
    """Non-decreasing tuples of n non-zero m-bit rows whose column sums can
    still reach 2 everywhere (the g=2 irreducibility requirement)."""
    maxrow = (1 << m) - 1
    colcount = [0] * m
    rows: list[int] = []

    def rec(depth: int, lo: int):
        left = n - depth
        for k in range(m):
            if 2 - colcount[k] > left:
                return
        if depth == n:
            yield tuple(rows)
            return
        for r in range(lo, maxrow + 1):
            for k in range(m):
                if r >> k & 1:
                    colcount[k] += 1
            rows.append(r)
            yield from rec(depth + 1, r)
            rows.pop()
            for k in range(m):
                if r >> k & 1:
                    colcount[k] -= 1

    yield from rec(0, 1)


def _bits_to_matrix(rows: tuple[int, ...], m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r >> (m - 1 - k) & 1 for k in range(m)) for r in rows)


def _int_to_matrix(value: int, n: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(value >> (n * m - 1 - (i * m + k)) & 1 for k in range(m))
        for i in range(n)
    )


def _is_irreducible_matrix(matrix, g: int) -> bool:
    if any(sum(row) < 1 for row in matrix):
        return False
    n, m = len(matrix), len(matrix[0])
    return all(sum(matrix[i][k] for i in range(n)) >= g for k in range(m))


def _problem_from_matrix(matrix) -> Problem:
    n, m = len(matrix), len(matrix[0])
    return Problem(
        tuple(f"p{i + 1}" for i in range(n)),
        tuple(f"d{k + 1}" for k in range(m)),
        matrix,
        2,
    )


def search_witness_g2(bounds: SearchBounds) -> G2SearchResult:
    """Bounded exhaustive hunt for a g=2 instance with no full-game strongly
    envy-free assignment.

    Sizes are visited in (players, days) order; within a size, candidates in
    a fixed lexicographic order, deduplicated up to row/column permutation
    when requested.  The first witness (by this order) is returned with its
    full report.  ``search_complete`` is True only when no size was skipped
    and no instance was inconclusive, so a negative result states its exact
    coverage.
    """
    examined = 0
    inconclusive = 0
    searched: list[tuple[int, int]] = []
    skipped: list[tuple[int, int]] = []

    for n in range(2, bounds.max_players + 1):
        for m in range(1, bounds.max_days + 1):
            if bounds.symmetry_dedup:
                pool = math.comb((1 << m) - 1 + n - 1, n)
            else:
                pool = 1 << (n * m)
            if pool > bounds.per_size_cap:
                skipped.append((n, m))
                continue
            searched.append((n, m))
            seen: set = set()
            candidates = (
                _candidates_dedup(n, m, seen)
                if bounds.symmetry_dedup
                else _candidates_raw(n, m)
            )
            for matrix in candidates:
                examined += 1
                p = _problem_from_matrix(matrix)
                report = verify_no_fair_ef(p, bounds.per_instance_budget)
                if not report.conclusive:
                    inconclusive += 1
                    continue
                if not report.ef_found:
                    return G2SearchResult(
                        witness=(p, report),
                        search_complete=False,
                        instances_examined=examined,
                        instances_inconclusive=inconclusive,
                        sizes_searched=tuple(searched),
                        sizes_skipped=tuple(skipped),
                    )

    complete = not skipped and inconclusive == 0
    return G2SearchResult(
        witness=None,
        search_complete=complete,
        instances_examined=examined,
        instances_inconclusive=inconclusive,
        sizes_searched=tuple(searched),
        sizes_skipped=tuple(skipped),
    )


def _candidates_dedup(n: int, m: int, seen: set):
    for rows in _row_multisets(n, m):
        matrix = _bits_to_matrix(rows, m)
        if not _is_irreducible_matrix(matrix, 2):
            continue
        canon = canonical_form(matrix)
        if canon in seen:
            continue
        seen.add(canon)
        yield canon


def _candidates_raw(n: int, m: int):
    for value in range(1 << (n * m)):
        matrix = _int_to_matrix(value, n, m)
        if _is_irreducible_matrix(matrix, 2):
            yield matrix
