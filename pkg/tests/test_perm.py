import pytest
from hypothesis import given
from hypothesis import strategies as st

from permrun.perm import (Direction, Embedding, Permutation, PermutationError, flatten,
                          is_embedding, parse_permutation, run_count, run_decomposition, vales)

T_EX = Permutation.of(1, 8, 12, 4, 7, 11, 6, 3, 2, 9, 5, 10)


@st.composite
def perms(draw, min_size=1, max_size=10):
    n = draw(st.integers(min_size, max_size))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def naive_runs(seq):
    """Split into maximal monotone pieces, giving each shared extremum to the earlier run."""
    if len(seq) == 1:
        return [list(seq)]
    runs = [[seq[0], seq[1]]]
    up = seq[1] > seq[0]
    for a, b in zip(seq[1:], seq[2:]):
        if (b > a) == up:
            runs[-1].append(b)
        else:
            up = not up
            runs.append([b])
    return runs


def test_parse_running_pattern():
    assert parse_permutation("2 3 1 4").values == (2, 3, 1, 4)


def test_parse_empty():
    p = parse_permutation("")
    assert len(p) == 0


@pytest.mark.parametrize("text, index", [("1 1 2", 1), ("1 4 2", 1), ("1 x 2", 1), ("0", 0)])
def test_parse_errors_report_token(text, index):
    with pytest.raises(PermutationError) as info:
        parse_permutation(text)
    assert info.value.index == index


def test_parse_duplicate_message():
    with pytest.raises(PermutationError, match="duplicate"):
        parse_permutation("1 1 2")


def test_inverse_and_order():
    p = Permutation.of(5, 3, 1, 4, 2)
    assert [p.position(v) for v in range(1, 6)] == [3, 5, 2, 4, 1]
    assert p.precedes(3, 4) and not p.precedes(2, 1)


def test_running_example_runs():
    dec = run_decomposition(T_EX)
    pieces = [[T_EX[q] for q in r.positions()] for r in dec.runs]
    assert pieces == [[1, 8, 12], [4], [7, 11], [6, 3, 2], [9], [5], [10]]
    assert dec.count == 7
    assert dec.valleys == {1, 4, 2, 5}
    assert dec.peaks == {12, 11, 9, 10}
    assert [r.direction for r in dec.runs] == [Direction.UP, Direction.DOWN] * 3 + [Direction.UP]


def test_run_count_small_examples():
    assert run_count(Permutation.of(2, 5, 9, 7, 4, 6, 8, 3, 1)) == 4
    assert run_count(Permutation.of(5, 3, 1, 4, 2)) == 3


def test_singleton_is_valley_and_peak():
    dec = run_decomposition(Permutation.of(1))
    assert dec.count == 1
    assert dec.valleys == dec.peaks == {1}


def test_vales_of_first_block():
    # first block of the running text, flattened: 1 7 9 | 4 6 8 | 5 3 2
    v = vales(Permutation.of(1, 7, 9, 4, 6, 8, 5, 3, 2))
    groups = {}
    for value, g in v.items():
        groups.setdefault(g, set()).add(value)
    assert sorted(groups.values(), key=min) == [{1, 7, 9}, {2, 3, 5}, {4, 6, 8}]


@pytest.mark.parametrize("values", [(1, 2, 3), (3, 2, 1)])
def test_monotone_is_one_vale(values):
    assert set(vales(Permutation(values)).values()) == {1}


@given(perms())
def test_run_invariants(p):
    dec = run_decomposition(p)
    assert [[p[q] for q in r.positions()] for r in dec.runs] == naive_runs(p.values)
    if len(p) > 1:
        assert len(dec.valleys) + len(dec.peaks) == dec.count + 1
    assert all(a.direction != b.direction for a, b in zip(dec.runs, dec.runs[1:]))
    for r in dec.runs:
        last = p[r.end]
        if len(p) > 1:
            assert last in (dec.peaks if r.direction is Direction.UP else dec.valleys)
    assert set(dec.vale_of_value) == set(p.values)


@given(perms())
def test_vales_pair_down_with_up(p):
    # independent description: each vale is one run down followed by one run up,
    # except a leading run up and a trailing run down
    runs = naive_runs(p.values)
    dirs = ["up" if len(p) == 1 or p[2] > p[1] else "down"]
    dirs += ["up" if r[0] > prev[-1] else "down" for prev, r in zip(runs, runs[1:])]
    groups, current, prev = [], [], None
    for d, r in zip(dirs, runs):
        if d == "down" and prev == "up":
            groups.append(current)
            current = []
        current += r
        prev = d
    groups.append(current)
    got = {}
    for value, g in vales(p).items():
        got.setdefault(g, []).append(value)
    assert sorted(map(sorted, got.values())) == sorted(map(sorted, groups))


def test_is_embedding_examples():
    assert is_embedding(Permutation.of(2, 3, 1, 4), T_EX, Embedding.from_positions(T_EX, (4, 7, 9, 10)))
    t = Permutation.of(5, 3, 1, 4, 2)
    e = Embedding.from_positions(t, (2, 4, 5))
    assert e.values == (3, 4, 2)
    assert is_embedding(Permutation.of(2, 3, 1), t, e)
    t = Permutation.of(2, 1)
    assert not is_embedding(Permutation.of(1, 2), t, Embedding.from_positions(t, (1, 2)))


def test_is_embedding_rejects_nonincreasing_positions():
    t = Permutation.of(1, 2, 3)
    assert not is_embedding(Permutation.of(1, 2), t, Embedding((2, 2), (2, 2)))
    assert not is_embedding(Permutation.of(1, 2), t, Embedding((3, 1), (3, 1)))


def test_is_embedding_length_mismatch():
    with pytest.raises(ValueError):
        is_embedding(Permutation.of(1, 2), Permutation.of(1, 2, 3), Embedding((1,), (1,)))


def test_flatten_interval_example():
    seq = [1.9, 1, 2.9, 2, 3.9, 3, 1.1, 2.1, 1.2, 3.1, 2.2, 3.2]
    assert flatten(seq).values == (4, 1, 8, 5, 12, 9, 2, 6, 3, 10, 7, 11)


def test_flatten_trivial():
    assert flatten([5]).values == (1,)
    assert flatten([10, 20, 30]).values == (1, 2, 3)
    with pytest.raises(PermutationError):
        flatten([1, 2, 1])


@given(st.lists(st.integers(-1000, 1000), unique=True, max_size=20))
def test_flatten_is_order_isomorphic(seq):
    flat = flatten(seq).values
    assert all((a < b) == (x < y) for a, x in zip(seq, flat) for b, y in zip(seq, flat))
