"""Exact min-cost-flow engine behind the fair solver.

The fairness profile (G_1, ..., G_m) of a full-game assignment, read as a
base-(n+1) number, equals the total reward of the corresponding flow when a
player's j-th game pays (n+1)^(m-j).  Maximizing that reward over all
full-game assignments is therefore exactly the lexicographic maximization of
the profile, and it is an ordinary min-cost flow: rewards per player fall as
j grows, so the parallel unit arcs to the sink form a concave gain.

Costs are Python integers, so the big lexicographic weights are exact.
Successive shortest augmenting paths with Bellman-Ford keep every
intermediate flow cost-optimal for its value; graphs here are tiny (tens of
nodes), so no potentials are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

_INF = None  # Bellman-Ford distance marker


@dataclass
class FlowResult:
    """Outcome of one lexicographic-weight solve."""

    feasible: bool
    games: tuple[int, ...]  # per-player totals, forced games included
    gvector: tuple[int, ...]
    used_cells: frozenset[tuple[int, int]]  # (player, day) carrying flow, forced included
    augmentations: int
    relaxations: int


class _Network:
    def __init__(self, nodes: int):
        self.nodes = nodes
        self.head: list[list[int]] = [[] for _ in range(nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add(self, u: int, v: int, cap: int, cost: int) -> int:
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        self.cost.append(-cost)
        return idx


def solve_stage(
    avail: Sequence[Sequence[int]],
    quotas: Sequence[int],
    stage: int,
    forced: frozenset[tuple[int, int]] = frozenset(),
    forbidden: frozenset[tuple[int, int]] = frozenset(),
) -> FlowResult:
    """Maximize the fairness prefix (G_1, ..., G_stage) lexicographically over
    full-game assignments that contain ``forced`` and avoid ``forbidden``.

    Returns feasible=False when the day quotas cannot be met at all under
    the cell constraints.
    """
    n = len(avail)
    m = len(quotas)
    base = n + 1

    baseline = [0] * n
    remaining_quota = list(quotas)
    for (i, k) in forced:
        baseline[i] += 1
        remaining_quota[k] -= 1
    if any(q < 0 for q in remaining_quota):
        return FlowResult(False, (), (), frozenset(), 0, 0)

    # node ids: source, days, players, sink
    source = 0
    day0 = 1
    player0 = day0 + m
    sink = player0 + n
    net = _Network(sink + 1)

    for k in range(m):
        net.add(source, day0 + k, remaining_quota[k], 0)
    cell_arc: dict[int, tuple[int, int]] = {}
    for i in range(n):
        for k in range(m):
            if avail[i][k] and (i, k) not in forced and (i, k) not in forbidden:
                idx = net.add(day0 + k, player0 + i, 1, 0)
                cell_arc[idx] = (i, k)
    for i in range(n):
        for level in range(baseline[i] + 1, m + 1):
            reward = base ** (stage - level) if level <= stage else 0
            net.add(player0 + i, sink, 1, -reward)

    target = sum(remaining_quota)
    augmentations = 0
    relaxations = 0
    flow = 0
    narcs = len(net.to)

    while flow < target:
        dist: list[Optional[int]] = [_INF] * net.nodes
        prev_arc = [-1] * net.nodes
        dist[source] = 0
        for _ in range(net.nodes - 1):
            changed = False
            for e in range(narcs):
                if net.cap[e] <= 0:
                    continue
                u = net.to[e ^ 1]
                if dist[u] is _INF:
                    continue
                nd = dist[u] + net.cost[e]
                v = net.to[e]
                relaxations += 1
                if dist[v] is _INF or nd < dist[v]:
                    dist[v] = nd
                    prev_arc[v] = e
                    changed = True
            if not changed:
                break
        if dist[sink] is _INF:
            return FlowResult(False, (), (), frozenset(), augmentations, relaxations)
        # bottleneck along the path
        push = target - flow
        v = sink
        while v != source:
            e = prev_arc[v]
            push = min(push, net.cap[e])
            v = net.to[e ^ 1]
        v = sink
        while v != source:
            e = prev_arc[v]
            net.cap[e] -= push
            net.cap[e ^ 1] += push
            v = net.to[e ^ 1]
        flow += push
        augmentations += 1

    games = list(baseline)
    used = set(forced)
    for idx, cell in cell_arc.items():
        if net.cap[idx] == 0:  # unit arc fully used
            games[cell[0]] += 1
            used.add(cell)
    gvec = tuple(sum(1 for d in games if d >= t) for t in range(1, m + 1))
    return FlowResult(True, tuple(games), gvec, frozenset(used), augmentations, relaxations)
