"""Brute-force reference implementations used to cross-check the matcher."""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .perm import Embedding, Permutation

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The search space of a brute-force call is larger than the allowed budget."""


def default_budget() -> int:
    raw = os.environ.get("PERMRUN_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _check_budget(size: int, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    if size > budget:
        raise BudgetExceeded(f"search space of {size} subsets exceeds budget {budget}")


def brute_force_match(pattern: Permutation, text: Permutation,
                      budget: int | None = None) -> Embedding | None:
    """First order-isomorphic subsequence, scanning position subsets lexicographically."""
    k, n = len(pattern), len(text)
    if k > n:
        return None
    _check_budget(comb(n, k), budget)
    # compare against the pattern's rank order: position of value 1, value 2, ...
    order = [pattern.position(v) - 1 for v in range(1, k + 1)]
    tv = text.values
    for idx in combinations(range(n), k):
        prev = 0
        for o in order:
            cur = tv[idx[o]]
            if cur < prev:
                break
            prev = cur
        else:
            return Embedding(tuple(i + 1 for i in idx), tuple(tv[i] for i in idx))
    return None


def lis_length(p: Permutation | Iterable[int]) -> int:
    """Length of a longest increasing subsequence (patience piles)."""
    tops: list[int] = []
    for v in p:
        i = bisect_left(tops, v)
        if i == len(tops):
            tops.append(v)
        else:
            tops[i] = v
    return len(tops)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..l``; edges normalised to ``u < v`` and sorted."""

    l: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.l and 1 <= v <= self.l):
                raise ValueError(f"edge {u}-{v} outside 1..{self.l}")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise ValueError(f"duplicate edge {e[0]}-{e[1]}")
            norm.add(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(1, self.l + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def parse_graph(text: str) -> Graph:
    """Parse ``l m`` followed by ``m`` lines ``u v``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("graph header must be 'l m'")
    l, m = map(int, lines[0])
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edge lines, got {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"bad edge line {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    return Graph(l, tuple(edges))


def format_graph(g: Graph) -> str:
    return "\n".join([f"{g.l} {g.m}", *(f"{u} {v}" for u, v in g.edges)]) + "\n"


def has_clique(g: Graph, k: int, budget: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically first ``k``-subset of vertices that is a clique."""
    if k < 0 or k > g.l:
        return None
    _check_budget(comb(g.l, k), budget)
    adj = g.adjacency()
    for cand in combinations(range(1, g.l + 1), k):
        if all(b in adj[a] for a, b in combinations(cand, 2)):
            return cand
    return None
