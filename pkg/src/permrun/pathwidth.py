"""The position graph of a permutation and a path decomposition of width <= run(pi)."""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation, seq_runs


@dataclass(frozen=True)
class PatternGraph:
    """Vertices are positions 1..m; edges are stored as sorted ``(i, j)`` with ``i < j``."""

    m: int
    adjacent: frozenset[tuple[int, int]]  # positions next to each other
    consecutive: frozenset[tuple[int, int]]  # values differing by one

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self.adjacent | self.consecutive


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def format(self) -> str:
        return "\n".join(" ".join(map(str, b)) for b in self.bags)


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def build_pattern_graph(pi: Permutation) -> PatternGraph:
    m = len(pi)
    adjacent = frozenset((i, i + 1) for i in range(1, m))
    consecutive = frozenset(_edge(pi.position(v), pi.position(v + 1)) for v in range(1, m))
    return PatternGraph(m, adjacent, consecutive)


def extended_runs(pi: Permutation) -> list[frozenset[int]]:
    """Value sets of the runs, each extended by the extremum that precedes it."""
    seq = pi.values
    out = []
    for _, a, b in seq_runs(seq):
        lo = a - 1 if a > 0 else a
        out.append(frozenset(seq[lo:b + 1]))
    return out


def lemma_decomposition(pi: Permutation) -> PathDecomposition:
    """Bag ``v`` holds position of ``v`` plus, for every extended run, the position
    of its largest value below ``v``."""
    runs = [sorted(r) for r in extended_runs(pi)]
    bags = []
    for v in range(1, len(pi) + 1):
        values = {v}
        for r in runs:
            below = [w for w in r if w < v]
            if below:
                values.add(below[-1])
        bags.append(tuple(sorted(pi.position(w) for w in values)))
    return PathDecomposition(tuple(bags))


def validate_decomposition(g: PatternGraph, d: PathDecomposition) -> tuple[bool, int]:
    """Check vertex cover, edge cover and contiguity; the width is returned either way."""
    width = d.width
    bags = [set(b) for b in d.bags]
    seen = [i for b in bags for i in b]
    if any(not 1 <= i <= g.m for i in seen):
        return False, width
    if set(seen) != set(range(1, g.m + 1)):
        return False, width
    for a, b in g.edges:
        if not any(a in bag and b in bag for bag in bags):
            return False, width
    for vtx in range(1, g.m + 1):
        hits = [idx for idx, bag in enumerate(bags) if vtx in bag]
        if hits[-1] - hits[0] + 1 != len(hits):
            return False, width
    return True, width
