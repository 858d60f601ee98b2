"""The alternating-run matcher.

For every matching function F (pattern run -> contiguous block of text runs)
a dynamic program places the pattern values 1, 2, ..., k in increasing
order.  A state is a tuple with one coordinate per pattern run holding the
text value chosen for the largest pattern value placed so far in that run
(0 when nothing is placed yet).  Only representative choices (valleys of the
admissible part of a block) are kept, and two reduction rules keep the state
sets small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, prod
from typing import Iterator, Sequence

from .perm import Direction, Embedding, Permutation, seq_runs, seq_vales, seq_valleys

# |X_kappa| <= XBOUND_BASE ** run(T) for every state set
XBOUND_BASE = 1.2611


class BoundViolation(AssertionError):
    pass


# -- padding -----------------------------------------------------------------

@dataclass(frozen=True)
class PaddedText:
    text: Permutation
    pad: str | None  # None, "low" (smallest value appended) or "high" (n+1 appended)
    original: Permutation

    @property
    def pad_position(self) -> int | None:
        return len(self.text) if self.pad else None

    def original_value(self, v: int) -> int:
        return v - 1 if self.pad == "low" else v


def _last_direction(p: Permutation) -> Direction:
    return seq_runs(p.values)[-1][0]


def pad_text(pattern: Permutation, text: Permutation) -> PaddedText:
    """Make the text's last run point the other way from the pattern's last run.

    If both end in a run up, a new smallest element is appended (all text
    values shift up by one); if both end in a run down, ``n+1`` is appended.
    """
    if not len(pattern) or not len(text):
        return PaddedText(text, None, text)
    pd = _last_direction(pattern)
    if pd is not _last_direction(text):
        return PaddedText(text, None, text)
    if pd is Direction.UP:
        return PaddedText(Permutation(tuple(v + 1 for v in text) + (1,)), "low", text)
    return PaddedText(Permutation(text.values + (len(text) + 1,)), "high", text)


# -- matching functions ------------------------------------------------------

@dataclass(frozen=True)
class MatchingFunction:
    """Blocks of text runs, one per pattern run; run indices and positions are 1-based."""

    start_runs: tuple[int, ...]
    end_runs: tuple[int, ...]
    spans: tuple[tuple[int, int], ...]  # inclusive text position interval per block

    @property
    def run_counts(self) -> tuple[int, ...]:
        return tuple(e - s + 1 for s, e in zip(self.start_runs, self.end_runs))

    def block(self, i: int) -> range:
        a, b = self.spans[i - 1]
        return range(a, b + 1)


def _text_runs(text: Permutation):
    return [(d, a + 1, b + 1) for d, a, b in seq_runs(text.values)]


def _pattern_directions(pattern: Permutation) -> list[Direction]:
    return [d for d, _, _ in seq_runs(pattern.values)]


def make_matching_function(text: Permutation, start_runs: Sequence[int]) -> MatchingFunction:
    """Build F from the first text run of every block (the last block ends at the last run)."""
    runs = _text_runs(text)
    starts = tuple(start_runs)
    ends = starts[1:] + (len(runs),)
    spans = tuple((runs[s - 1][1], runs[e - 1][2]) for s, e in zip(starts, ends))
    return MatchingFunction(starts, ends, spans)


def is_matching_function(pattern: Permutation, text: Permutation, f: MatchingFunction) -> bool:
    pdirs = _pattern_directions(pattern)
    tdirs = [d for d, _, _ in _text_runs(text)]
    r, big_r = len(tdirs), len(pdirs)
    if len(f.start_runs) != big_r or len(f.end_runs) != big_r:
        return False
    if f.start_runs[0] != 1 or f.end_runs[-1] != r:
        return False
    for i in range(big_r):
        s, e = f.start_runs[i], f.end_runs[i]
        if not 1 <= s <= e <= r:
            return False
        if i + 1 < big_r and f.start_runs[i + 1] != e:
            return False
        if i > 0 and tdirs[s - 1] is not pdirs[i]:
            return False
        if i + 1 < big_r and tdirs[e - 1] is pdirs[i]:
            return False
    return f == make_matching_function(text, f.start_runs)


def enumerate_matching_functions(pattern: Permutation, padded_text: Permutation
                                 ) -> Iterator[MatchingFunction]:
    """All matching functions, lexicographic in their block start runs.

    A block for a pattern run up starts at the first text run or at a text
    run up, and ends at a text run down or at the last text run; dually for
    a pattern run down.  Consecutive blocks share exactly one text run.
    """
    pdirs = _pattern_directions(pattern)
    tdirs = [d for d, _, _ in _text_runs(padded_text)]
    r, big_r = len(tdirs), len(pdirs)
    if big_r == 0 or r == 0:
        return

    # the text-boundary exceptions apply only to the outer ends of the first and
    # last block; an inner boundary run must fit both neighbouring pattern runs
    def start_ok(i: int, s: int) -> bool:
        return tdirs[s - 1] is pdirs[i]

    def end_ok(i: int, e: int) -> bool:
        return tdirs[e - 1] is not pdirs[i]

    starts = [1] * big_r

    def rec(i: int) -> Iterator[MatchingFunction]:
        # starts[i] fixed; choose the end of block i (= start of block i+1)
        s = starts[i]
        if i == big_r - 1:
            yield make_matching_function(padded_text, starts)
            return
        for e in range(s, r + 1):
            if end_ok(i, e) and start_ok(i + 1, e):
                starts[i + 1] = e
                yield from rec(i + 1)

    yield from rec(0)


def matching_function_bound(run_t: int, run_p: int) -> int:
    """C(ceil(run(T)/2), run(P)-1): the counting bound on matching functions."""
    return comb((run_t + 1) // 2, run_p - 1)


# -- representative elements -------------------------------------------------

def _rep(block: Sequence[int], i: int, j: int, right: bool) -> set[int]:
    if j:
        try:
            at = list(block).index(j)
        except ValueError:
            raise ValueError(f"value {j} is not in the block") from None
        side = block[at + 1:] if right else block[:at]
    else:
        side = block
    return set(seq_valleys([v for v in side if v > i]))


def u_rep(block: Sequence[int], i: int, j: int) -> set[int]:
    """Valleys among the elements right of ``j`` and larger than ``i`` (0 = no restriction)."""
    return _rep(block, i, j, right=True)


def d_rep(block: Sequence[int], i: int, j: int) -> set[int]:
    """Valleys among the elements left of ``j`` and larger than ``i``."""
    return _rep(block, i, j, right=False)


# -- dynamic program ---------------------------------------------------------

class _PatternInfo:
    __slots__ = ("k", "runs", "dirs", "run_of", "is_max")

    def __init__(self, pattern: Permutation):
        self.k = len(pattern)
        runs = seq_runs(pattern.values)
        self.runs = len(runs)
        self.dirs = [d for d, _, _ in runs]
        run_at = [0] * self.k
        for idx, (_, a, b) in enumerate(runs):
            for q in range(a, b + 1):
                run_at[q] = idx
        # run_of[kappa] is the 0-based run of value kappa; run_of[0] := 0
        self.run_of = [0] + [run_at[pattern.position(v) - 1] for v in range(1, self.k + 1)]
        top = {}
        for v in range(1, self.k + 1):
            top[self.run_of[v]] = v
        self.is_max = [False] + [top[self.run_of[v]] == v for v in range(1, self.k + 1)]


class _Block:
    __slots__ = ("values", "index", "vale", "up_ok", "down_ok")

    def __init__(self, values: list[int], exclude: int | None):
        self.values = values
        self.index = {v: i for i, v in enumerate(values)}
        vales = seq_vales(values)
        self.vale = {v: vales[i] for i, v in enumerate(values)}
        # up_ok: a larger element stands to the right; down_ok: to the left
        self.up_ok = {}
        best = 0
        for v in reversed(values):
            self.up_ok[v] = best > v
            best = max(best, v)
        self.down_ok = {}
        best = 0
        for v in values:
            self.down_ok[v] = best > v
            best = max(best, v)
        if exclude is not None:
            self.up_ok[exclude] = self.down_ok[exclude] = None
        self.vale[0] = -1


class _Context:
    def __init__(self, pattern: Permutation, padded: PaddedText, f: MatchingFunction):
        self.info = _PatternInfo(pattern)
        self.pattern_values = pattern.values
        self.padded = padded
        self.f = f
        # work in original text values; the pad becomes 0 or n+1 and is never chosen
        tv = padded.original.values
        if padded.pad:
            tv = tv + ((0,) if padded.pad == "low" else (len(tv) + 1,))
        exclude = tv[-1] if padded.pad else None
        self.blocks = [_Block(list(tv[a - 1:b]), exclude) for a, b in f.spans]

    def candidates(self, kappa: int, x: Sequence[int]) -> list[int]:
        info = self.info
        ri = info.run_of[kappa]
        floor = x[info.run_of[kappa - 1]]
        block = self.blocks[ri]
        vals = block.values
        j = x[ri]
        up = info.dirs[ri] is Direction.UP
        if j:
            at = block.index[j]
            side = vals[at + 1:] if up else vals[:at]
        else:
            side = vals
        sub = [v for v in side if v > floor]
        reps = seq_valleys(sub)
        ok = block.up_ok if up else block.down_ok
        if info.is_max[kappa]:
            return sorted(v for v in reps if ok[v] is not None)
        return sorted(v for v in reps if ok[v])

    def step(self, kappa: int, prev: dict) -> tuple[dict, dict, list[int]]:
        """One layer: returns (X_kappa, X'_kappa, vale counts per coordinate)."""
        ri = self.info.run_of[kappa]
        produced: dict[tuple, tuple] = {}
        for x in sorted(prev):
            for nu in self.candidates(kappa, x):
                y = x[:ri] + (nu,) + x[ri + 1:]
                if y not in produced:
                    produced[y] = x
        blocks = self.blocks
        vale_counts = [
            len({blocks[i].vale[y[i]] for y in produced if y[i]})
            for i in range(self.info.runs)
        ]
        # first reduction: one tuple per vale class, smallest at coordinate ri
        classes: dict[tuple, tuple] = {}
        for y in produced:
            key = tuple(blocks[i].vale[c] for i, c in enumerate(y))
            best = classes.get(key)
            if best is None or (y[ri], y) < (best[ri], best):
                classes[key] = y
        kept = classes.values()
        # second reduction: for a run maximum only the smallest choice per context survives
        if self.info.is_max[kappa]:
            ctx: dict[tuple, tuple] = {}
            for y in kept:
                key = y[:ri] + y[ri + 1:]
                best = ctx.get(key)
                if best is None or (y[ri], y) < (best[ri], best):
                    ctx[key] = y
            kept = ctx.values()
        layer = {y: produced[y] for y in sorted(kept)}
        return layer, produced, vale_counts


@dataclass
class DPTable:
    """Full trace of the dynamic program for one matching function."""

    f: MatchingFunction
    layers: list[dict[tuple, tuple | None]]  # X_0..X_k, each tuple -> parent in X_{kappa-1}
    pre_sizes: list[int]  # |X'_kappa|, index 0 unused
    vale_counts: list[list[int]]  # v_kappa^i, index 0 unused
    product_bound: float
    exp_bound: float
    text_runs: int
    violations: list[str] = field(default_factory=list)
    # layers above the unclamped product of run(F(i))/2; only possible with a one-run block
    literal_breaches: int = 0
    # v_kappa^i above run(F(i))/2; observed only on blocks of two or three runs
    vale_breaches: list[str] = field(default_factory=list)

    def sets(self) -> list[list[tuple]]:
        return [sorted(layer) for layer in self.layers]

    @property
    def max_size(self) -> int:
        return max(len(layer) for layer in self.layers)

    def format(self) -> str:
        lines = []
        for kappa, layer in enumerate(self.layers):
            body = ", ".join("(" + ",".join(map(str, t)) + ")" for t in sorted(layer))
            lines.append(f"X_{kappa} = {{{body}}}")
        return "\n".join(lines)


def _run_dp(ctx: _Context, stop_on_empty: bool = True) -> DPTable:
    info = ctx.info
    f = ctx.f
    text_runs = len(_text_runs(ctx.padded.text))
    table = DPTable(
        f=f,
        layers=[{(0,) * info.runs: None}],
        pre_sizes=[0],
        vale_counts=[[]],
        # a one-run block still holds one choice, so its factor is at least 1
        product_bound=prod(max(1.0, c / 2) for c in f.run_counts),
        exp_bound=XBOUND_BASE ** text_runs,
        text_runs=text_runs,
    )
    for kappa in range(1, info.k + 1):
        layer, produced, counts = ctx.step(kappa, table.layers[-1])
        table.layers.append(layer)
        table.pre_sizes.append(len(produced))
        table.vale_counts.append(counts)
        _check_layer(table, kappa, info, f)
        if not layer and stop_on_empty:
            break
    return table


def _check_layer(table: DPTable, kappa: int, info: _PatternInfo, f: MatchingFunction) -> None:
    size = len(table.layers[-1])
    if size > table.product_bound:
        table.violations.append(
            f"|X_{kappa}|={size} exceeds product bound {table.product_bound:g}")
    if size > prod(c / 2 for c in f.run_counts):
        table.literal_breaches += 1
    if size > table.exp_bound:
        table.violations.append(
            f"|X_{kappa}|={size} exceeds {XBOUND_BASE}^{table.text_runs}")
    if not info.is_max[kappa]:
        for i, (v, c) in enumerate(zip(table.vale_counts[-1], f.run_counts), 1):
            if v > c / 2:
                table.vale_breaches.append(f"v_{kappa}^{i}={v} exceeds run(F({i}))/2={c / 2:g}")


def candidates(kappa: int, x: Sequence[int], f: MatchingFunction,
               pattern: Permutation, padded_text: PaddedText) -> set[int]:
    return set(_Context(pattern, padded_text, f).candidates(kappa, tuple(x)))


def dp_step(kappa: int, prev: dict | Sequence[tuple], f: MatchingFunction,
            pattern: Permutation, padded_text: PaddedText) -> dict[tuple, tuple]:
    """Compute X_kappa from X_{kappa-1}; the result maps each tuple to its parent."""
    if not isinstance(prev, dict):
        prev = {tuple(x): None for x in prev}
    layer, _, _ = _Context(pattern, padded_text, f).step(kappa, prev)
    return layer


def dp_trace(pattern: Permutation, text: Permutation, f: MatchingFunction) -> DPTable:
    """Run the whole program for one matching function of the padded text, keeping every layer."""
    padded = pad_text(pattern, text)
    if not is_matching_function(pattern, padded.text, f):
        raise ValueError(f"not a matching function for this instance: {f.start_runs}")
    return _run_dp(_Context(pattern, padded, f), stop_on_empty=False)


def iter_traces(pattern: Permutation, text: Permutation) -> Iterator[DPTable]:
    """Tables for the matching functions in canonical order, up to the first success."""
    if len(pattern) < 2 or len(pattern) > len(text):
        return
    padded = pad_text(pattern, text)
    for f in enumerate_matching_functions(pattern, padded.text):
        table = _run_dp(_Context(pattern, padded, f))
        yield table
        if len(table.layers) == len(pattern) + 1 and table.layers[-1]:
            return


def _witness(ctx: _Context, table: DPTable) -> Embedding:
    info = ctx.info
    y = next(iter(table.layers[-1]))
    chosen = [0] * (info.k + 1)
    for kappa in range(info.k, 0, -1):
        chosen[kappa] = y[info.run_of[kappa]]
        y = table.layers[kappa][y]
    text = ctx.padded.original
    values = tuple(chosen[v] for v in ctx.pattern_values)
    return Embedding(tuple(text.position(v) for v in values), values)


@dataclass
class MatchReport:
    embedding: Embedding | None
    text_runs: int  # run count of the padded text
    pattern_runs: int
    functions_tried: int
    functions_total: int | None  # known only when every function was enumerated
    max_states: int
    violations: list[str]  # state-set size bounds
    count_violations: list[str] = field(default_factory=list)  # matching-function count bounds
    literal_breaches: int = 0  # see DPTable.literal_breaches
    vale_breaches: list[str] = field(default_factory=list)  # see DPTable.vale_breaches
    f: MatchingFunction | None = None

    @property
    def matched(self) -> bool:
        return self.embedding is not None


def match_report(pattern: Permutation, text: Permutation, *, exhaust: bool = False,
                 check_bounds: bool = True) -> MatchReport:
    """Decide the instance and collect statistics.

    Matching functions are tried in canonical order and the first one with a
    nonempty final layer supplies the witness.  With ``exhaust`` every
    function is still evaluated (for statistics); the witness is unchanged.
    """
    k, n = len(pattern), len(text)
    if k == 0:
        return MatchReport(Embedding((), ()), 0, 0, 0, 0, 1, [])
    if k > n:
        return MatchReport(None, 0, 0, 0, 0, 0, [])
    if k == 1:
        # a single element matches the smallest text value
        pos = text.position(1)
        return MatchReport(Embedding((pos,), (1,)), len(seq_runs(text.values)), 1, 0, 0, 1, [])
    padded = pad_text(pattern, text)
    info = _PatternInfo(pattern)
    text_runs = len(_text_runs(padded.text))
    report = MatchReport(None, text_runs, info.runs, 0, None, 1, [])
    count = 0
    for f in enumerate_matching_functions(pattern, padded.text):
        count += 1
        ctx = _Context(pattern, padded, f)
        table = _run_dp(ctx)
        report.max_states = max(report.max_states, table.max_size)
        report.violations.extend(table.violations)
        report.literal_breaches += table.literal_breaches
        report.vale_breaches.extend(table.vale_breaches)
        if report.embedding is None and table.layers[-1] and len(table.layers) == k + 1:
            report.embedding = _witness(ctx, table)
            report.f = f
            if not exhaust:
                break
    report.functions_tried = count
    if exhaust or report.embedding is None:
        report.functions_total = count
        bound = matching_function_bound(text_runs, info.runs)
        if count > bound:
            report.count_violations.append(
                f"{count} matching functions exceed C(ceil({text_runs}/2),{info.runs - 1})={bound}")
        if count > 2 ** (text_runs / 2):
            report.count_violations.append(f"{count} matching functions exceed sqrt(2)^{text_runs}")
    if check_bounds and report.violations:
        raise BoundViolation("; ".join(report.violations))
    return report


def match(pattern: Permutation, text: Permutation) -> Embedding | None:
    return match_report(pattern, text, check_bounds=False).embedding
