"""Core domain model: availability problems, assignments, and the predicates
that define feasibility, efficiency, leximin fairness, and strong envy.

Everything here is an immutable value plus pure functions over values, so all
operations are safe to call concurrently on shared data.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence


class ValidationError(ValueError):
    """Raised when raw input data violates a structural invariant."""


class InfeasibleAssignmentError(ValueError):
    """Raised when an operation requires a feasible assignment and got none."""


# --------------------------------------------------------------------------- #
# Value types
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class Problem:
    """A scheduling instance: who can play on which day, and how many players
    one game needs.

    ``avail[i][k] == 1`` means player ``i`` can play on day ``k``.  A raw
    instance may contain hopeless days or players; :func:`reduce_problem`
    strips them.  Reduction may legitimately empty the instance, so zero
    players/days are representable here even though :func:`validate_problem`
    rejects empty input.
    """

    players: tuple[str, ...]
    days: tuple[str, ...]
    avail: tuple[tuple[int, ...], ...]
    group_size: int

    @property
    def n(self) -> int:
        return len(self.players)

    @property
    def m(self) -> int:
        return len(self.days)

    @property
    def is_empty(self) -> bool:
        return self.n == 0 or self.m == 0

    def availability_counts(self) -> tuple[int, ...]:
        """Per-player number of available days (row sums)."""
        return tuple(sum(row) for row in self.avail)

    def day_counts(self) -> tuple[int, ...]:
        """Per-day number of available players (column sums)."""
        return tuple(sum(row[k] for row in self.avail) for k in range(self.m))

    def player_index(self, name: str) -> int:
        try:
            return self.players.index(name)
        except ValueError:
            raise KeyError(f"unknown player {name!r}") from None


@dataclass(frozen=True)
class ReductionLog:
    """Record of what :func:`reduce_problem` removed, in removal order.

    ``rounds`` counts the alternating day/player passes that removed
    anything; a pass that finds nothing to remove ends the process and is
    not counted.
    """

    removed_days: tuple[tuple[int, str], ...]
    removed_players: tuple[tuple[int, str], ...]
    rounds: int

    @property
    def removed_anything(self) -> bool:
        return bool(self.removed_days or self.removed_players)


@dataclass(frozen=True)
class Assignment:
    """A binary play matrix aligned index-for-index with a Problem."""

    matrix: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def m(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def total_slots(self) -> int:
        return sum(sum(row) for row in self.matrix)

    def day_totals(self) -> tuple[int, ...]:
        return tuple(sum(row[k] for row in self.matrix) for k in range(self.m))


@dataclass(frozen=True)
class GVector:
    """Fairness profile: ``counts[t-1]`` is the number of players with at
    least ``t`` games.  Always non-increasing."""

    counts: tuple[int, ...]

    def padded(self, length: int) -> tuple[int, ...]:
        return self.counts + (0,) * (length - len(self.counts))


class FairnessOrder(enum.Enum):
    FIRST_FAIRER = "first-fairer"
    SECOND_FAIRER = "second-fairer"
    EQUAL = "equal"


@dataclass(frozen=True)
class EnvyPair:
    """One strong-envy violation: ``envious`` has strictly more available
    days than ``envied`` yet strictly fewer games."""

    envious: str
    envied: str
    avail_envious: int
    avail_envied: int
    games_envious: int
    games_envied: int


@dataclass(frozen=True)
class EnvyReport:
    pairs: tuple[EnvyPair, ...]

    @property
    def is_strongly_envy_free(self) -> bool:
        return not self.pairs


class Violation(NamedTuple):
    """First feasibility violation found, with coordinates.

    ``constraint`` is ``"availability"`` (someone assigned on a day they did
    not offer) or ``"day-total"`` (a day's assigned count is not a multiple
    of the group size).
    """

    constraint: str
    player: Optional[str]
    day: str
    detail: str


class Feasibility(NamedTuple):
    ok: bool
    violation: Optional[Violation]

    def __bool__(self) -> bool:  # truthiness == verdict
        return self.ok


# --------------------------------------------------------------------------- #
# Construction and reduction
# --------------------------------------------------------------------------- #

def validate_problem(
    players: Sequence[str],
    days: Sequence[str],
    matrix: Sequence[Sequence[int]],
    group_size: int,
) -> Problem:
    """Check raw input and build a Problem.

    Raises ValidationError naming the offending row/column for every
    structural defect: non-binary entries, duplicate or empty names,
    dimension mismatches, or a group size below 2.
    """
    if not isinstance(group_size, int) or group_size < 2:
        raise ValidationError(f"group size must be an integer >= 2, got {group_size!r}")
    if len(players) == 0:
        raise ValidationError("dimension mismatch: need at least one player")
    if len(days) == 0:
        raise ValidationError("dimension mismatch: need at least one day")

    for idx, name in enumerate(players):
        if not isinstance(name, str) or not name:
            raise ValidationError(f"row {idx}: empty player name")
    for idx, label in enumerate(days):
        if not isinstance(label, str) or not label:
            raise ValidationError(f"column {idx}: empty day label")
    seen: dict[str, int] = {}
    for idx, name in enumerate(players):
        if name in seen:
            raise ValidationError(
                f"row {idx}: duplicate player name {name!r} (first at row {seen[name]})"
            )
        seen[name] = idx
    seen = {}
    for idx, label in enumerate(days):
        if label in seen:
            raise ValidationError(
                f"column {idx}: duplicate day label {label!r} (first at column {seen[label]})"
            )
        seen[label] = idx

    if len(matrix) != len(players):
        raise ValidationError(
            f"dimension mismatch: {len(players)} players but {len(matrix)} matrix rows"
        )
    rows = []
    for i, row in enumerate(matrix):
        row = tuple(row)
        if len(row) != len(days):
            raise ValidationError(
                f"dimension mismatch: row {i} ({players[i]!r}) has {len(row)} cells, "
                f"expected {len(days)}"
            )
        for k, cell in enumerate(row):
            if cell not in (0, 1):
                raise ValidationError(
                    f"non-binary entry at row {i} ({players[i]!r}), "
                    f"column {k} ({days[k]!r}): {cell!r}"
                )
        rows.append(tuple(int(cell) for cell in row))

    return Problem(tuple(players), tuple(days), tuple(rows), group_size)


def reduce_problem(p: Problem) -> tuple[Problem, ReductionLog]:
    """Strip days that cannot host a single game and players left with no
    days, alternating until a fixed point.

    Survivor order is preserved.  The result can be empty; that is a legal
    outcome, visible via ``Problem.is_empty``.
    """
    g = p.group_size
    player_idx = list(range(p.n))
    day_idx = list(range(p.m))
    removed_days: list[tuple[int, str]] = []
    removed_players: list[tuple[int, str]] = []
    rounds = 0

    while True:
        changed = False
        round_no = rounds + 1

        keep_days = []
        for k in day_idx:
            if sum(p.avail[i][k] for i in player_idx) < g:
                removed_days.append((round_no, p.days[k]))
                changed = True
            else:
                keep_days.append(k)
        day_idx = keep_days

        keep_players = []
        for i in player_idx:
            if all(p.avail[i][k] == 0 for k in day_idx):
                removed_players.append((round_no, p.players[i]))
                changed = True
            else:
                keep_players.append(i)
        player_idx = keep_players

        if not changed:
            break
        rounds = round_no

    reduced = Problem(
        players=tuple(p.players[i] for i in player_idx),
        days=tuple(p.days[k] for k in day_idx),
        avail=tuple(tuple(p.avail[i][k] for k in day_idx) for i in player_idx),
        group_size=g,
    )
    log = ReductionLog(tuple(removed_days), tuple(removed_players), rounds)
    return reduced, log


def is_irreducible(p: Problem) -> bool:
    """True iff every player has a day and every day has a full game's worth
    of available players.  Vacuously true for empty problems."""
    if p.is_empty:
        return True
    if any(sum(row) < 1 for row in p.avail):
        return False
    return all(c >= p.group_size for c in p.day_counts())


# --------------------------------------------------------------------------- #
# Predicates over assignments
# --------------------------------------------------------------------------- #

def is_feasible(x: Assignment, p: Problem) -> Feasibility:
    """Check the two assignment constraints: nobody plays outside their
    availability, and each day's assigned count is a multiple of the group
    size.  Returns the verdict plus the first violation found."""
    if x.n != p.n or (x.n > 0 and x.m != p.m):
        raise ValidationError(
            f"shape mismatch: assignment {x.n}x{x.m} vs problem {p.n}x{p.m}"
        )
    for i in range(p.n):
        for k in range(p.m):
            cell = x.matrix[i][k]
            if cell not in (0, 1):
                raise ValidationError(
                    f"non-binary entry at row {i} ({p.players[i]!r}), "
                    f"column {k} ({p.days[k]!r}): {cell!r}"
                )
            if cell == 1 and p.avail[i][k] == 0:
                return Feasibility(
                    False,
                    Violation(
                        "availability",
                        p.players[i],
                        p.days[k],
                        f"availability constraint violated: player {p.players[i]!r} "
                        f"assigned on day {p.days[k]!r} but is not available",
                    ),
                )
    for k, total in enumerate(x.day_totals()):
        if total % p.group_size != 0:
            return Feasibility(
                False,
                Violation(
                    "day-total",
                    None,
                    p.days[k],
                    f"day-total constraint violated: day {p.days[k]!r} has "
                    f"{total} assigned players, not a multiple of {p.group_size}",
                ),
            )
    return Feasibility(True, None)


def max_total_games(p: Problem) -> int:
    """Maximum number of games any feasible assignment can host.

    Days are coupled only through their own totals, so the bound is the
    per-day sum of floor(available / group_size), and it is attained.
    """
    return sum(c // p.group_size for c in p.day_counts())


def is_efficient(x: Assignment, p: Problem) -> bool:
    """True iff the assignment hosts the maximum possible number of games."""
    feas = is_feasible(x, p)
    if not feas:
        raise InfeasibleAssignmentError(feas.violation.detail)
    return x.total_slots() == p.group_size * max_total_games(p)


def games_per_player(x: Assignment) -> tuple[int, ...]:
    """Row sums: how many games each player got."""
    return tuple(sum(row) for row in x.matrix)


def g_vector(x: Assignment) -> GVector:
    """Count, for each threshold t = 1..m, the players with at least t games."""
    games = games_per_player(x)
    m = x.m
    return GVector(tuple(sum(1 for d in games if d >= t) for t in range(1, m + 1)))


def g_vector_of_games(games: Sequence[int], m: int) -> GVector:
    """G-vector straight from a games-per-player vector."""
    return GVector(tuple(sum(1 for d in games if d >= t) for t in range(1, m + 1)))


def compare_fairness(u: GVector, v: GVector) -> FairnessOrder:
    """Strict lexicographic comparison of fairness profiles; shorter vectors
    are treated as zero-padded."""
    length = max(len(u.counts), len(v.counts))
    a, b = u.padded(length), v.padded(length)
    if a > b:
        return FairnessOrder.FIRST_FAIRER
    if a < b:
        return FairnessOrder.SECOND_FAIRER
    return FairnessOrder.EQUAL


def envy_report(x: Assignment, p: Problem) -> EnvyReport:
    """List every ordered pair (i, j) where i offered strictly more days than
    j yet received strictly fewer games.

    Availability is taken from ``p`` exactly as passed; audits that want the
    canonical semantics should pass the reduced problem.
    """
    feas = is_feasible(x, p)
    if not feas:
        raise InfeasibleAssignmentError(feas.violation.detail)
    avail = p.availability_counts()
    games = games_per_player(x)
    pairs = []
    for i in range(p.n):
        for j in range(p.n):
            if avail[i] > avail[j] and games[i] < games[j]:
                pairs.append(
                    EnvyPair(
                        envious=p.players[i],
                        envied=p.players[j],
                        avail_envious=avail[i],
                        avail_envied=avail[j],
                        games_envious=games[i],
                        games_envied=games[j],
                    )
                )
    return EnvyReport(tuple(pairs))


def zero_extend(x: Assignment, original: Problem, reduced: Problem) -> Assignment:
    """Lift an assignment on a reduced problem back to the original shape,
    filling removed players/days with zeros."""
    pmap = [original.player_index(name) for name in reduced.players]
    dmap = [original.days.index(label) for label in reduced.days]
    full = [[0] * original.m for _ in range(original.n)]
    for ri, oi in enumerate(pmap):
        row = x.matrix[ri]
        for rk, ok in enumerate(dmap):
            full[oi][ok] = row[rk]
    return Assignment(tuple(tuple(row) for row in full))
