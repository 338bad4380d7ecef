"""Brute-force ground truth on desk-scale instances.

Everything here works by exhausting the full-game assignments of an
irreducible problem: each day independently contributes a choice of
``group_size * floor(available / group_size)`` players, and the assignments
are the cartesian product of those per-day choices, enumerated in odometer
order (later days spin fastest, each day's subsets in lexicographic order by
player index).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import islice, combinations
from typing import Iterator, Optional

from fairplay import solver as _solver
from fairplay._scan import scan_fair, scan_first_ef
from fairplay.model import (
    Assignment,
    GVector,
    Problem,
    is_irreducible,
)

DEFAULT_MAX_ASSIGNMENTS = 10_000_000


class BudgetExceededError(RuntimeError):
    """The enumeration cap was hit before the answer was determined."""


@dataclass(frozen=True)
class EnumerationBudget:
    """Cap on how many assignments a scan may visit.

    ``on_exceed`` picks the reaction: ``"error"`` raises, ``"truncate"``
    stops the stream and flags it.  Operations whose answer would be wrong
    when partial (the fairness optimum, a negative envy-free search) always
    raise, whatever the policy.
    """

    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS
    on_exceed: str = "error"

    def __post_init__(self):
        if self.max_assignments < 1:
            raise ValueError("budget cap must be >= 1")
        if self.on_exceed not in ("error", "truncate"):
            raise ValueError(f"unknown on_exceed policy {self.on_exceed!r}")


@dataclass(frozen=True)
class MisreportFinding:
    """Outcome of one hypothetical under-report of a player's availability."""

    player: str
    true_row: tuple[int, ...]
    reported_row: tuple[int, ...]
    games_truthful: int
    games_misreport: int
    gain: int


def _require_irreducible(p: Problem, op: str) -> None:
    if not is_irreducible(p):
        raise ValueError(f"{op} requires an irreducible problem; reduce it first")


def day_selections(p: Problem) -> tuple[list[tuple[int, ...]], list[int]]:
    """Per-day available player indices and per-day selection sizes."""
    g = p.group_size
    day_players = []
    quotas = []
    for k in range(p.m):
        players = tuple(i for i in range(p.n) if p.avail[i][k])
        day_players.append(players)
        quotas.append(g * (len(players) // g))
    return day_players, quotas


def count_efficient(p: Problem) -> int:
    """Exact number of distinct full-game assignments: the product over days
    of C(available, selected).  Arbitrary-precision, so never overflows."""
    _require_irreducible(p, "count_efficient")
    if p.is_empty:
        return 0
    day_players, quotas = day_selections(p)
    count = 1
    for players, take in zip(day_players, quotas):
        count *= math.comb(len(players), take)
    return count


def _combo_lists(p: Problem, max_leaves: int) -> list[list[tuple[int, ...]]]:
    """Materialize each day's subsets in lexicographic order, but only as many
    as a scan of ``max_leaves`` leaves can ever touch."""
    day_players, quotas = day_selections(p)
    sizes = [math.comb(len(pl), take) for pl, take in zip(day_players, quotas)]
    total = math.prod(sizes)
    leaves = min(total, max_leaves)
    lists = []
    suffix = total
    for players, take, size in zip(day_players, quotas, sizes):
        suffix //= size
        needed = min(size, (leaves - 1) // suffix + 1) if leaves > 0 else 0
        lists.append(list(islice(combinations(players, take), needed)))
    return lists


def _assignment_from_choice(
    p: Problem, combos: list[list[tuple[int, ...]]], choice: tuple[int, ...]
) -> Assignment:
    matrix = [[0] * p.m for _ in range(p.n)]
    for k, ci in enumerate(choice):
        for i in combos[k][ci]:
            matrix[i][k] = 1
    return Assignment(tuple(tuple(row) for row in matrix))


class EfficientEnumeration:
    """Iterator over all full-game assignments of an irreducible problem.

    After exhaustion, ``truncated`` tells whether the budget cut the stream
    short (only possible with the ``"truncate"`` policy) and ``yielded``
    how many assignments came out.
    """

    def __init__(self, p: Problem, budget: EnumerationBudget):
        self.truncated = False
        self.yielded = 0
        self._p = p
        self._budget = budget

    def __iter__(self) -> Iterator[Assignment]:
        self.truncated = False
        self.yielded = 0
        p = self._p
        if p.is_empty:
            return
        cap = self._budget.max_assignments
        combos = _combo_lists(p, cap + 1)
        total = count_efficient(p)
        choice = [0] * p.m

        def rec(day: int):
            if day == p.m:
                if self.yielded >= cap:
                    if self._budget.on_exceed == "error":
                        raise BudgetExceededError(
                            f"enumeration budget of {cap} exceeded "
                            f"({total} assignments exist)"
                        )
                    self.truncated = True
                    return True
                self.yielded += 1
                yield _assignment_from_choice(p, combos, tuple(choice))
                return False
            for ci in range(len(combos[day])):
                choice[day] = ci
                stop = yield from rec(day + 1)
                if stop:
                    return True
            return False

        yield from rec(0)


def enumerate_efficient(p: Problem, budget: EnumerationBudget | None = None) -> EfficientEnumeration:
    """Stream every full-game assignment exactly once, in odometer order."""
    _require_irreducible(p, "enumerate_efficient")
    return EfficientEnumeration(p, budget or EnumerationBudget())


def brute_force_fair(
    p: Problem, budget: EnumerationBudget | None = None
) -> tuple[GVector, Assignment]:
    """Exhaustively determine the lexicographically maximal fairness profile
    over all full-game assignments, plus the first assignment attaining it."""
    _require_irreducible(p, "brute_force_fair")
    budget = budget or EnumerationBudget()
    if p.is_empty:
        return GVector(()), Assignment(tuple(() for _ in range(p.n)))
    combos = _combo_lists(p, budget.max_assignments + 1)
    scanned, complete, best_g, best_choice, _ = scan_fair(
        combos, p.n, budget.max_assignments
    )
    if not complete:
        raise BudgetExceededError(
            f"budget of {budget.max_assignments} exhausted after {scanned} "
            f"assignments; the optimum cannot be certified from a partial scan"
        )
    return GVector(best_g), _assignment_from_choice(p, combos, best_choice)


def exists_efficient_strongly_ef(
    p: Problem, budget: EnumerationBudget | None = None
) -> Optional[Assignment]:
    """First full-game assignment with no strong-envy violation, or None if
    the exhaustive scan proves there is none."""
    _require_irreducible(p, "exists_efficient_strongly_ef")
    budget = budget or EnumerationBudget()
    if p.is_empty:
        return Assignment(tuple(() for _ in range(p.n)))
    combos = _combo_lists(p, budget.max_assignments + 1)
    scanned, conclusive, choice, _ = scan_first_ef(
        combos, p.n, p.availability_counts(), budget.max_assignments
    )
    if choice is not None:
        return _assignment_from_choice(p, combos, choice)
    if not conclusive:
        raise BudgetExceededError(
            f"budget of {budget.max_assignments} exhausted after {scanned} "
            f"assignments with no envy-free assignment found; absence not certified"
        )
    return None


def misreport_scan(
    p: Problem, player: str, tie_break: "_solver.TieBreakPolicy"
) -> list[MisreportFinding]:
    """Re-solve the fair assignment for every strict under-report of one
    player's availability and record what the player would gain.

    Requires the deterministic tie-break: under a random policy gains would
    be artifacts of the seed.
    """
    if tie_break.mode != "lex":
        raise ValueError("misreport_scan requires the deterministic tie-break policy")
    idx = p.player_index(player)
    true_row = p.avail[idx]
    avail_days = [k for k in range(p.m) if true_row[k]]

    truthful = _solver.solve_fair(p, tie_break)
    games_truthful = sum(truthful.assignment.matrix[idx])

    findings = []
    for mask in range((1 << len(avail_days)) - 1):
        reported = list(true_row)
        for pos, k in enumerate(avail_days):
            reported[k] = (mask >> pos) & 1
        rows = list(p.avail)
        rows[idx] = tuple(reported)
        modified = Problem(p.players, p.days, tuple(rows), p.group_size)
        report = _solver.solve_fair(modified, tie_break)
        games = sum(report.assignment.matrix[idx])
        findings.append(
            MisreportFinding(
                player=player,
                true_row=true_row,
                reported_row=tuple(reported),
                games_truthful=games_truthful,
                games_misreport=games,
                gain=games - games_truthful,
            )
        )
    findings.sort(key=lambda f: (-f.gain, f.reported_row))
    return findings
