"""Cycle Lemma: the position order, rotation prefix sums, dominating shifts."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chungfeller import (
    CyclicSequence,
    IndexOutOfRange,
    InvalidCharacter,
    NonPositiveSum,
    NonUnitSum,
    canonical_rotation,
    dominating_shifts,
    nonpositive_count_at_rank,
    parse_sequence,
    partial_sums,
    precedes,
    rank_order,
    render_sequence,
    rotate,
    shifted_partial_sum,
)
from support import all_pm1_sequences

pm_terms = st.lists(st.sampled_from((1, -1)), max_size=12).map(tuple)


def _rotation_prefix_sums(terms, j):
    # independent oracle: prefix sums of the rotation, computed directly
    rotated = terms[j:] + terms[:j]
    sums = [0]
    for term in rotated:
        sums.append(sums[-1] + term)
    return sums


class TestParse:
    def test_round_trip(self):
        assert render_sequence(parse_sequence("++-")) == "++-"

    def test_invalid(self):
        with pytest.raises(InvalidCharacter) as info:
            parse_sequence("+x-")
        assert info.value.position == 1


class TestPartialSums:
    @pytest.mark.parametrize(
        "terms,expected",
        [
            ((1, 1, -1), [0, 1, 2, 1]),
            ((-1, 1, 1), [0, -1, 0, 1]),
            ((), [0]),
        ],
    )
    def test_examples(self, terms, expected):
        assert partial_sums(CyclicSequence(terms)) == expected


class TestPrecedes:
    def test_tie_broken_by_larger_index(self):
        seq = CyclicSequence((1, 1, -1))
        assert precedes(seq, 3, 1)
        assert not precedes(seq, 1, 3)

    def test_smaller_sum_first(self):
        assert precedes(CyclicSequence((1, 1, -1)), 0, 2)

    def test_irreflexive(self):
        seq = CyclicSequence((1, 1, -1))
        assert all(not precedes(seq, p, p) for p in range(4))

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            precedes(CyclicSequence((1, -1)), 0, 3)

    @given(pm_terms)
    def test_strict_total_order(self, terms):
        seq = CyclicSequence(terms)
        positions = range(len(terms) + 1)
        for p in positions:
            for q in positions:
                if p == q:
                    assert not precedes(seq, p, q)
                else:
                    assert precedes(seq, p, q) != precedes(seq, q, p)

    def test_transitive_exhaustive(self):
        for length in range(6):
            for terms in all_pm1_sequences(length):
                seq = CyclicSequence(terms)
                below = {
                    p: {q for q in range(length + 1) if precedes(seq, q, p)}
                    for p in range(length + 1)
                }
                for p in range(length + 1):
                    for q in below[p]:
                        assert below[q] <= below[p] - {q}


class TestRankOrder:
    @pytest.mark.parametrize(
        "terms,expected",
        [
            ((1, 1, -1), (0, 3, 1, 2)),
            ((1,), (0, 1)),
            # s = [0,-1,0,1]: position 1 is lowest, then the s=0 tie
            # breaks toward the larger index, so 2 before 0
            ((-1, 1, 1), (1, 2, 0, 3)),
        ],
    )
    def test_examples(self, terms, expected):
        assert rank_order(CyclicSequence(terms)) == expected

    def test_defining_property_exhaustive(self):
        for length in range(9):
            for terms in all_pm1_sequences(length):
                seq = CyclicSequence(terms)
                ranks = rank_order(seq)
                assert sorted(ranks) == list(range(length + 1))
                for i, m in enumerate(ranks):
                    assert (
                        sum(1 for q in range(length + 1) if precedes(seq, q, m)) == i
                    )


class TestShiftedPartialSum:
    def test_zero_shift_is_plain_sum(self):
        seq = CyclicSequence((1, 1, -1))
        assert shifted_partial_sum(seq, 0, 2) == 2

    def test_wrapped_position(self):
        # formula and direct rotation agree: s(0) - s(1) + k = 2
        seq = CyclicSequence((-1, 1, 1))
        oracle = _rotation_prefix_sums(seq.terms, 1)
        assert shifted_partial_sum(seq, 1, 0) == oracle[3 - 1 + 0] == 2

    def test_at_own_shift(self):
        assert shifted_partial_sum(CyclicSequence((1, 1, -1)), 3, 3) == 0

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            shifted_partial_sum(CyclicSequence((1, -1)), 3, 0)

    def test_matches_rotation_oracle_exhaustive(self):
        for length in range(13):
            for terms in all_pm1_sequences(length):
                seq = CyclicSequence(terms)
                for j in range(length + 1):
                    oracle = _rotation_prefix_sums(terms, j % length if length else 0)
                    for p in range(length + 1):
                        offset = p - j if j <= p else p - j + length
                        assert shifted_partial_sum(seq, j, p) == oracle[offset]


class TestDominatingShifts:
    def test_single(self):
        assert dominating_shifts(CyclicSequence((1, 1, -1))) == (0,)

    def test_two(self):
        assert dominating_shifts(CyclicSequence((1, 1, -1, 1))) == (0, 3)

    def test_nonpositive_sum(self):
        with pytest.raises(NonPositiveSum):
            dominating_shifts(CyclicSequence((-1, 1)))
        with pytest.raises(NonPositiveSum):
            dominating_shifts(CyclicSequence(()))

    def test_lemma_count_exhaustive_small(self):
        for length in range(1, 12):
            for terms in all_pm1_sequences(length):
                k = sum(terms)
                if k >= 1:
                    assert len(dominating_shifts(CyclicSequence(terms))) == k


class TestNonpositiveCount:
    def test_singleton(self):
        assert nonpositive_count_at_rank(CyclicSequence((1,)), 0) == 1

    def test_examples(self):
        seq = CyclicSequence((1, 1, -1))
        assert nonpositive_count_at_rank(seq, 0) == 1
        assert nonpositive_count_at_rank(seq, 2) == 3

    def test_requires_unit_sum(self):
        with pytest.raises(NonUnitSum):
            nonpositive_count_at_rank(CyclicSequence((1, 1)), 0)

    def test_rank_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            nonpositive_count_at_rank(CyclicSequence((1,)), 2)


class TestCanonicalRotation:
    @pytest.mark.parametrize(
        "terms,shift,rotated",
        [
            ((-1, 1, 1), 1, (1, 1, -1)),
            ((1,), 0, (1,)),
            ((1, -1, 1), 2, (1, 1, -1)),
        ],
    )
    def test_examples(self, terms, shift, rotated):
        got_shift, got = canonical_rotation(CyclicSequence(terms))
        assert (got_shift, got.terms) == (shift, rotated)

    def test_idempotent(self):
        shift, rotated = canonical_rotation(CyclicSequence((-1, 1, 1)))
        again_shift, again = canonical_rotation(rotated)
        assert again_shift == 0
        assert again == rotated

    def test_requires_unit_sum(self):
        with pytest.raises(NonUnitSum):
            canonical_rotation(CyclicSequence((1, 1)))
        with pytest.raises(NonUnitSum):
            canonical_rotation(CyclicSequence((-1,)))

    def test_shift_is_first_rank_mod_length(self):
        for length in range(1, 12, 2):
            for terms in all_pm1_sequences(length):
                if sum(terms) != 1:
                    continue
                seq = CyclicSequence(terms)
                shift, _ = canonical_rotation(seq)
                assert shift == rank_order(seq)[0] % length


class TestRotate:
    def test_wraps_modulo_length(self):
        seq = CyclicSequence((1, -1, 1))
        assert rotate(seq, 3) == seq

    def test_empty(self):
        assert rotate(CyclicSequence(()), 0).terms == ()
