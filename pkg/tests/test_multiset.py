import pytest
from hypothesis import given, strategies as st

from hookset import (
    BetaSet,
    HookMultiset,
    IntMultiset,
    Partition,
    PreconditionError,
    beta_set,
    complement_in,
    conjugate,
    conjugate_beta,
    hooks_direct,
    hooks_via_beta,
    mdiff,
    msum,
    multiplicity,
    partition_from_beta,
)
from hookset.search import enumerate_beta_sets

from oracles import brute_hooks, pair_diffs, pair_sums

FIGURE_HOOKS = [1, 1, 2, 2, 2, 3, 5, 6]
small_multisets = st.lists(st.integers(-8, 8), max_size=8).map(IntMultiset)
beta_sets = st.sets(st.integers(1, 24), min_size=1, max_size=14).map(BetaSet)


class TestIntMultiset:
    def test_canonical_key_and_iteration(self):
        m = IntMultiset([6, 1, 2, 2, 5, 3, 2, 1])
        assert m.key() == "[1,1,2,2,2,3,5,6]"
        assert list(m) == FIGURE_HOOKS
        assert len(m) == 8

    def test_from_key_round_trip(self):
        m = IntMultiset([3, -1, 0, 3])
        assert IntMultiset.from_key(m.key()) == m

    def test_from_key_rejects_unsorted(self):
        with pytest.raises(ValueError):
            IntMultiset.from_key("[3,1]")

    def test_counts_drop_zero_multiplicities(self):
        m = IntMultiset.from_counts({1: 2, 4: 0})
        assert m.counts() == {1: 2}
        assert 4 not in m

    def test_equality_and_hash(self):
        assert IntMultiset([1, 2, 2]) == IntMultiset([2, 1, 2])
        assert hash(IntMultiset([1, 2, 2])) == hash(IntMultiset([2, 2, 1]))
        assert IntMultiset([1, 2]) != IntMultiset([1, 2, 2])

    def test_hook_multiset_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            HookMultiset([0, 1])


@pytest.mark.parametrize("values, k, expected", [(FIGURE_HOOKS, 2, 3), ([], 7, 0), (FIGURE_HOOKS, 4, 0)])
def test_multiplicity(values, k, expected):
    assert multiplicity(IntMultiset(values), k) == expected


def test_multiplicity_example_uses_diagram_oracle():
    assert brute_hooks((4, 2, 2)) == FIGURE_HOOKS


class TestMsum:
    def test_singleton_shift(self):
        assert list(msum(IntMultiset([1, 2]), IntMultiset([10]))) == [11, 12]

    def test_multiplicities_multiply(self):
        assert list(msum(IntMultiset([1, 1]), IntMultiset([1, 1]))) == [2, 2, 2, 2]

    def test_against_double_loop(self):
        # frozen from oracles.pair_sums([2,3,6],[0,1,4,5])
        expected = [2, 3, 3, 4, 6, 6, 7, 7, 7, 8, 10, 11]
        assert pair_sums([2, 3, 6], [0, 1, 4, 5]) == expected
        assert list(msum({2, 3, 6}, {0, 1, 4, 5})) == expected


class TestMdiff:
    def test_single(self):
        assert list(mdiff(IntMultiset([5]), IntMultiset([2]))) == [3]

    def test_antisymmetric(self):
        assert list(mdiff(IntMultiset([1, 2]), IntMultiset([1, 2]))) == [-1, 0, 0, 1]

    def test_positive_part_is_hook_multiset(self):
        a = BetaSet({2, 3, 6})
        diffs = mdiff(a, complement_in(a, 6))
        assert [x for x in diffs if x > 0] == list(hooks_via_beta(a))


@given(small_multisets, small_multisets)
def test_sum_and_diff_against_brute_force(m, n):
    assert list(msum(m, n)) == pair_sums(list(m), list(n))
    assert list(mdiff(m, n)) == pair_diffs(list(m), list(n))
    assert len(msum(m, n)) == len(m) * len(n) == len(mdiff(m, n))


@pytest.mark.parametrize(
    "parts, expected",
    [((4, 2, 2), FIGURE_HOOKS), ((3, 3, 1, 1), FIGURE_HOOKS), ((1,), [1]), ((), [])],
)
def test_hooks_direct(parts, expected):
    assert list(hooks_direct(Partition(parts))) == expected


@pytest.mark.parametrize(
    "elements, n, expected",
    [({2, 3, 6}, 6, {0, 1, 4, 5}), ({1}, 1, {0}), ({2, 4, 5, 9}, 9, {0, 1, 3, 6, 7, 8})],
)
def test_complement_in(elements, n, expected):
    assert complement_in(BetaSet(elements), n) == expected


def test_complement_requires_max():
    with pytest.raises(PreconditionError):
        complement_in(BetaSet({2, 3, 6}), 7)


@pytest.mark.parametrize(
    "elements, expected",
    [
        ({2, 3, 6}, FIGURE_HOOKS),
        ({1}, [1]),
        ({2, 4, 5, 9}, [1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 5, 6, 8, 9]),
    ],
)
def test_hooks_via_beta(elements, expected):
    a = BetaSet(elements)
    assert list(hooks_via_beta(a)) == expected
    assert brute_hooks(tuple(partition_from_beta(a))) == expected


@pytest.mark.parametrize(
    "elements, expected",
    [
        ({2, 3, 6}, {1, 2, 5, 6}),
        ({1}, {1}),
        # (4,4,3,1,1,1) is the conjugate of (6,3,3,2)
        ({2, 4, 5, 9}, {1, 2, 3, 6, 8, 9}),
    ],
)
def test_conjugate_beta(elements, expected):
    assert conjugate_beta(BetaSet(elements)) == expected


def test_lemma_routes_agree_exhaustively_to_12():
    # the full n <= 14 sweep lives in the acceptance suite
    for n in range(1, 13):
        for a in enumerate_beta_sets(n):
            p = partition_from_beta(a)
            assert hooks_via_beta(a) == hooks_direct(p)
            assert conjugate_beta(a) == beta_set(conjugate(p))


@given(beta_sets)
def test_lemma_routes_agree_sampled(a):
    p = partition_from_beta(a)
    assert hooks_via_beta(a) == hooks_direct(p)
    assert len(hooks_via_beta(a)) == p.boxes
    assert conjugate_beta(a) == beta_set(conjugate(p))
    assert conjugate_beta(conjugate_beta(a)) == a


@given(beta_sets)
def test_conjugation_invariance_and_max(a):
    p = partition_from_beta(a)
    h = hooks_direct(p)
    assert h == hooks_direct(conjugate(p))
    assert h.max() == a.n
