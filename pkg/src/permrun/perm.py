"""Permutation value types and run statistics.

Positions and values are 1-based throughout the public API, matching
one-line notation.  The helpers prefixed with ``seq_`` work on any sequence
of distinct numbers with 0-based indices; they are reused for blocks of a
text, which are not permutations of ``[1..m]`` themselves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Direction(enum.Enum):
    UP = "up"
    DOWN = "down"

    def flipped(self) -> "Direction":
        return Direction.DOWN if self is Direction.UP else Direction.UP


class PermutationError(ValueError):
    """Raised for malformed permutation input; ``index`` is the 0-based token index."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]
    inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        values = tuple(self.values)
        n = len(values)
        inverse = [0] * (n + 1)
        for pos, v in enumerate(values, 1):
            if not isinstance(v, int) or not 1 <= v <= n:
                raise PermutationError(f"value {v!r} out of range 1..{n}", pos - 1)
            if inverse[v]:
                raise PermutationError(f"duplicate value {v}", pos - 1)
            inverse[v] = pos
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "inverse", tuple(inverse))

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, position: int) -> int:
        """Value at 1-based ``position``."""
        if not 1 <= position <= len(self.values):
            raise IndexError(position)
        return self.values[position - 1]

    def position(self, value: int) -> int:
        """1-based position of ``value`` (the inverse permutation)."""
        if not 1 <= value <= len(self.values):
            raise KeyError(value)
        return self.inverse[value]

    def precedes(self, a: int, b: int) -> bool:
        """True iff value ``a`` stands left of value ``b``."""
        return self.position(a) < self.position(b)

    def __str__(self) -> str:
        return " ".join(map(str, self.values))


def parse_permutation(text: str) -> Permutation:
    tokens = text.split()
    values = []
    for idx, tok in enumerate(tokens):
        try:
            values.append(int(tok))
        except ValueError:
            raise PermutationError(f"token {idx} ({tok!r}) is not an integer", idx) from None
    return Permutation(tuple(values))


def flatten(seq: Sequence) -> Permutation:
    """Replace the smallest entry by 1, the next by 2, and so on."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    ranks = [0] * len(seq)
    for rank, idx in enumerate(order, 1):
        if rank > 1 and seq[order[rank - 2]] == seq[idx]:
            raise PermutationError(f"duplicate entry {seq[idx]!r}", idx)
        ranks[idx] = rank
    return Permutation(tuple(ranks))


# -- sequence-level helpers (0-based indices) --------------------------------

def seq_runs(seq: Sequence) -> list[tuple[Direction, int, int]]:
    """Alternating runs as ``(direction, first_index, last_index)``.

    The first run spans from the first element to the second local extremum;
    every later run starts right after an extremum and ends at the next one.
    A one-element sequence is a single run, reported as UP.
    """
    n = len(seq)
    if n == 0:
        return []
    if n == 1:
        return [(Direction.UP, 0, 0)]
    ext = [0]
    for i in range(1, n - 1):
        if (seq[i - 1] < seq[i]) != (seq[i] < seq[i + 1]):
            ext.append(i)
    ext.append(n - 1)
    runs = []
    start = 0
    for end in ext[1:]:
        d = Direction.UP if seq[end] > seq[end - 1] else Direction.DOWN
        runs.append((d, start, end))
        start = end + 1
    return runs


def seq_run_count(seq: Sequence) -> int:
    n = len(seq)
    if n <= 1:
        return n
    turns = sum(1 for i in range(1, n - 1) if (seq[i - 1] < seq[i]) != (seq[i] < seq[i + 1]))
    return turns + 1


def seq_valleys(seq: Sequence) -> list:
    """Elements smaller than every defined neighbour, in left-to-right order."""
    n = len(seq)
    out = []
    for i, v in enumerate(seq):
        if (i == 0 or seq[i - 1] > v) and (i == n - 1 or seq[i + 1] > v):
            out.append(v)
    return out


def seq_peaks(seq: Sequence) -> list:
    n = len(seq)
    out = []
    for i, v in enumerate(seq):
        if (i == 0 or seq[i - 1] < v) and (i == n - 1 or seq[i + 1] < v):
            out.append(v)
    return out


def seq_vales(seq: Sequence) -> list[int]:
    """Vale index (0-based, left to right) of every element, by index.

    A vale is a run down followed by a run up; a leading run up and a
    trailing run down form vales on their own.  So a new vale starts right
    after the last element of every run up.
    """
    out = [0] * len(seq)
    vale = 0
    for d, a, b in seq_runs(seq):
        for i in range(a, b + 1):
            out[i] = vale
        if d is Direction.UP:
            vale += 1
    return out


# -- permutation-level API ---------------------------------------------------

@dataclass(frozen=True)
class Run:
    direction: Direction
    start: int  # 1-based, inclusive
    end: int

    def positions(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class RunDecomposition:
    runs: tuple[Run, ...]
    run_of_position: tuple[int, ...]  # index 0 unused; run indices are 1-based
    valleys: frozenset[int]
    peaks: frozenset[int]
    vale_of_value: dict[int, int]  # vales numbered from 1

    def __len__(self) -> int:
        return len(self.runs)

    @property
    def count(self) -> int:
        return len(self.runs)

    def run_of_value(self, p: Permutation, value: int) -> int:
        return self.run_of_position[p.position(value)]

    def vale_groups(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        # insertion order of vale_of_value is positional
        for v, g in self.vale_of_value.items():
            groups.setdefault(g, []).append(v)
        return [groups[g] for g in sorted(groups)]


def run_decomposition(p: Permutation) -> RunDecomposition:
    seq = p.values
    runs = tuple(Run(d, a + 1, b + 1) for d, a, b in seq_runs(seq))
    run_of_position = [0] * (len(seq) + 1)
    for idx, r in enumerate(runs, 1):
        for pos in r.positions():
            run_of_position[pos] = idx
    vales = seq_vales(seq)
    return RunDecomposition(
        runs=runs,
        run_of_position=tuple(run_of_position),
        valleys=frozenset(seq_valleys(seq)),
        peaks=frozenset(seq_peaks(seq)),
        vale_of_value={v: vales[i] + 1 for i, v in enumerate(seq)},
    )


def run_count(p: Permutation | Sequence) -> int:
    return seq_run_count(tuple(p))


def vales(p: Permutation) -> dict[int, int]:
    return run_decomposition(p).vale_of_value


@dataclass(frozen=True)
class Embedding:
    """A matching of a pattern into a text: text positions (1-based) and values."""

    positions: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def pattern_length(self) -> int:
        return len(self.positions)

    @classmethod
    def from_positions(cls, text: Permutation, positions: Iterable[int]) -> "Embedding":
        positions = tuple(positions)
        return cls(positions, tuple(text[p] for p in positions))


def order_isomorphic(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    return sorted(range(len(a)), key=a.__getitem__) == sorted(range(len(b)), key=b.__getitem__)


def is_embedding(pattern: Permutation, text: Permutation, e: Embedding) -> bool:
    if len(e.positions) != len(pattern):
        raise ValueError(
            f"embedding has {len(e.positions)} positions, pattern has length {len(pattern)}")
    pos = e.positions
    n = len(text)
    if any(not 1 <= q <= n for q in pos):
        return False
    if any(pos[i] >= pos[i + 1] for i in range(len(pos) - 1)):
        return False
    return order_isomorphic(pattern.values, [text[q] for q in pos])
