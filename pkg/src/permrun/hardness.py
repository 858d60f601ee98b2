"""Clique -> PPM reduction: pattern and text built from a graph so that the
pattern occurs in the text iff the graph has a k-clique.

Layout of both permutations::

    [vertex block] [edge block] ... [edge block] guard-run

Every block is enclosed by an opening and a closing guard value.  Vertex
``j`` becomes the pair ``j+0.9, j`` in the vertex block, and every later
occurrence of ``j`` in an edge block takes a fresh value inside
``(j, j+0.9)``, increasing from left to right.  The guard-run is a
decreasing sequence larger than all vertex/edge values and smaller than all
bracket guards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .oracle import Graph
from .perm import Embedding, Permutation, flatten, seq_run_count


@dataclass(frozen=True)
class Token:
    """Role of one entry in a reduced permutation."""

    kind: str  # "open", "close", "vertex_hi", "vertex_lo", "edge", "run"
    block: int = -1  # 0 is the vertex block, 1.. the edge blocks
    vertex: int = 0
    index: int = 0  # position inside the guard-run


@dataclass
class HardnessInstance:
    pattern: Permutation
    text: Permutation
    k: int
    l: int
    m: int
    p_max: int
    t_max: int
    pattern_run_length: int
    text_run_length: int
    pattern_main: Permutation  # flattened vertex/edge values of the pattern, no guards
    pattern_tokens: tuple[Token, ...] = field(repr=False)
    text_tokens: tuple[Token, ...] = field(repr=False)

    def guard_positions(self, which: str) -> list[int]:
        tokens = self.pattern_tokens if which == "pattern" else self.text_tokens
        return [i for i, t in enumerate(tokens, 1) if t.kind in ("open", "close", "run")]

    def metadata(self) -> dict[str, int]:
        return {
            "k": self.k,
            "l": self.l,
            "m": self.m,
            "pattern_length": len(self.pattern),
            "text_length": len(self.text),
            "P_max": self.p_max,
            "T_max": self.t_max,
            "pattern_guard_run": self.pattern_run_length,
            "text_guard_run": self.text_run_length,
            "pattern_runs": seq_run_count(self.pattern.values),
            "text_runs": seq_run_count(self.text.values),
        }

    def format(self) -> str:
        meta = "\n".join(f"{key}={val}" for key, val in self.metadata().items())
        return f"{self.pattern}\n{self.text}\n\n{meta}\n"


def _encode(vertices: int, pairs: Sequence[tuple[int, int]], guard_run: int):
    """Build the guarded sequence of one side.

    Returns the token list and the integer values, where vertex/edge values
    are ranked first, then the guard-run, then the bracket guards.
    """
    tokens: list[Token] = []
    raw: list[Fraction] = []
    uses = {v: 0 for v in range(1, vertices + 1)}
    for u, v in pairs:
        uses[u] += 1
        uses[v] += 1
    # steps of 0.1 as long as they fit below j + 0.9; only the order matters
    step = {v: Fraction(1, 10) if c <= 8 else Fraction(9, 10 * (c + 1)) for v, c in uses.items()}
    seen = {v: 0 for v in uses}

    def fill(v: int, block: int) -> None:
        seen[v] += 1
        tokens.append(Token("edge", block, v))
        raw.append(v + seen[v] * step[v])

    tokens.append(Token("open", 0))
    raw.append(None)
    for v in range(1, vertices + 1):
        tokens += [Token("vertex_hi", 0, v), Token("vertex_lo", 0, v)]
        raw += [v + Fraction(9, 10), Fraction(v)]
    tokens.append(Token("close", 0))
    raw.append(None)
    for b, (u, v) in enumerate(pairs, 1):
        tokens.append(Token("open", b))
        raw.append(None)
        fill(u, b)
        fill(v, b)
        tokens.append(Token("close", b))
        raw.append(None)

    main_idx = [i for i, x in enumerate(raw) if x is not None]
    main = flatten([raw[i] for i in main_idx])
    size = len(main)
    blocks = 1 + len(pairs)
    top = size + guard_run + 2 * blocks
    values = [0] * len(raw)
    for i, val in zip(main_idx, main.values):
        values[i] = val
    for i, t in enumerate(tokens):
        if t.kind == "open":
            values[i] = top - 2 * t.block - 1
        elif t.kind == "close":
            values[i] = top - 2 * t.block
    for i in range(guard_run):
        tokens.append(Token("run", index=i))
        values.append(size + guard_run - i)
    return tokens, values, main, top


def reduce_clique(g: Graph, k: int) -> HardnessInstance:
    if not 1 <= k <= g.l:
        raise ValueError(f"need 1 <= k <= l, got k={k}, l={g.l}")
    guard_run = 2 + 2 * g.l ** 2
    p_tokens, p_values, p_main, p_max = _encode(k, list(combinations(range(1, k + 1), 2)), guard_run)
    t_tokens, t_values, _, t_max = _encode(g.l, list(g.edges), guard_run)
    inst = HardnessInstance(
        pattern=Permutation(tuple(p_values)),
        text=Permutation(tuple(t_values)),
        k=k, l=g.l, m=g.m,
        p_max=p_max, t_max=t_max,
        pattern_run_length=guard_run, text_run_length=guard_run,
        pattern_main=p_main,
        pattern_tokens=tuple(p_tokens), text_tokens=tuple(t_tokens),
    )
    _check_structure(inst)
    return inst


def _check_structure(inst: HardnessInstance) -> None:
    k, l = inst.k, inst.l
    assert inst.p_max == 4 + 2 * l * l + 2 * k * k, inst.p_max
    assert inst.pattern_run_length == 2 + 2 * l * l
    assert len(inst.pattern_main) == k + k * k
    assert len(inst.pattern) == inst.p_max
    assert seq_run_count(inst.pattern.values) <= 3 + 2 * k * k
    assert len(inst.text) <= 4 * (1 + l * l)


def clique_to_embedding(inst: HardnessInstance, g: Graph, clique: Sequence[int]) -> Embedding:
    """Embedding that sends pattern vertex ``i`` to the ``i``-th smallest clique vertex."""
    chosen = sorted(clique)
    if len(chosen) != inst.k or len(set(chosen)) != inst.k:
        raise ValueError(f"clique must have {inst.k} distinct vertices")
    edges = list(g.edges)
    edge_set = set(edges)
    for a, b in combinations(chosen, 2):
        if (a, b) not in edge_set:
            raise ValueError(f"{a}-{b} is not an edge; not a clique")
    text_block = {0: 0}
    for b, (u, v) in enumerate(combinations(range(1, inst.k + 1), 2), 1):
        text_block[b] = edges.index((chosen[u - 1], chosen[v - 1])) + 1

    where: dict[tuple, int] = {}
    for pos, t in enumerate(inst.text_tokens, 1):
        if t.kind == "run":
            where[("run", t.index)] = pos
        else:
            where[(t.kind, t.block, t.vertex)] = pos

    positions = []
    for t in inst.pattern_tokens:
        if t.kind == "run":
            positions.append(where[("run", t.index)])
        elif t.kind in ("open", "close"):
            positions.append(where[(t.kind, text_block[t.block], 0)])
        else:
            positions.append(where[(t.kind, text_block[t.block], chosen[t.vertex - 1])])
    return Embedding.from_positions(inst.text, positions)
