"""Cycle Lemma machinery for +-1 sequences.

For a sequence a_1..a_L of +-1 terms with positive total sum k, exactly
k of the L cyclic rotations have every prefix sum >= 1 (the Cycle Lemma
of Dvoretzky and Motzkin).  The proof machinery implemented here orders
the positions 0..L by their partial sums:

    p comes before q  iff  s(p) < s(q), or s(p) = s(q) and p > q,

a strict total order once restricted to distinct indices.  The *rank
sequence* m_0..m_L lists the positions in that order, so m_i is the
position with exactly i positions strictly before it.  Prefix sums of
the j-th rotation never need to be recomputed from scratch: measured at
an original position p they equal

    s(p) - s(j)        for j <= p <= L,
    s(p) - s(j) + k    for 0 <= p < j.

For k = 1 the rotation at shift m_0 (mod L) is the unique one with all
proper prefix sums positive, and the m_i-th rotation has exactly i+1
nonpositive prefix sums -- the positions m_0..m_i themselves.

Sequences render as strings over '+' and '-'.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate

from .errors import IndexOutOfRange, InvalidCharacter, NonPositiveSum, NonUnitSum

_TERM_OF_CHAR = {"+": 1, "-": -1}
_CHAR_OF_TERM = {1: "+", -1: "-"}

# rank sequence m_0..m_L: a permutation of {0..L}
RankOrder = tuple[int, ...]


@dataclass(frozen=True)
class CyclicSequence:
    """Immutable +-1 sequence viewed up to rotation."""

    terms: tuple[int, ...] = ()

    def __post_init__(self):
        terms = self.terms
        if not isinstance(terms, tuple):
            terms = tuple(terms)
            object.__setattr__(self, "terms", terms)
        if terms.count(1) + terms.count(-1) != len(terms):
            raise ValueError("terms must all be +1 or -1")

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return render_sequence(self)

    @cached_property
    def _sums(self) -> tuple[int, ...]:
        return tuple(accumulate(self.terms, initial=0))

    @property
    def total(self) -> int:
        """The sum k of all terms."""
        return self._sums[-1]


def parse_sequence(text: str) -> CyclicSequence:
    """Parse a '+'/'-' string; raises InvalidCharacter for anything else."""
    terms = []
    for i, char in enumerate(text):
        term = _TERM_OF_CHAR.get(char)
        if term is None:
            raise InvalidCharacter(i, char)
        terms.append(term)
    return CyclicSequence(tuple(terms))


def render_sequence(seq: CyclicSequence) -> str:
    return "".join(_CHAR_OF_TERM[term] for term in seq.terms)


def partial_sums(seq: CyclicSequence) -> list[int]:
    """s(0..L) with s(0) = 0 and s(p) = s(p-1) + a_p."""
    return list(seq._sums)


def _check_position(seq: CyclicSequence, name: str, value: int) -> None:
    if not 0 <= value <= len(seq):
        raise IndexOutOfRange(f"{name}={value} outside 0..{len(seq)}")


def precedes(seq: CyclicSequence, p: int, q: int) -> bool:
    """Strict order on positions: smaller partial sum first, ties to the larger index."""
    _check_position(seq, "p", p)
    _check_position(seq, "q", q)
    s = seq._sums
    return s[p] < s[q] or (s[p] == s[q] and p > q)


def rank_order(seq: CyclicSequence) -> RankOrder:
    """m_0..m_L: positions sorted ascending by the `precedes` order."""
    s = seq._sums
    return tuple(sorted(range(len(seq) + 1), key=lambda p: (s[p], -p)))


def rotate(seq: CyclicSequence, j: int) -> CyclicSequence:
    """The rotation a_{j+1}..a_L a_1..a_j (shift taken modulo L)."""
    _check_position(seq, "j", j)
    if not seq.terms:
        return seq
    j %= len(seq)
    return CyclicSequence(seq.terms[j:] + seq.terms[:j])


def shifted_partial_sum(seq: CyclicSequence, j: int, p: int) -> int:
    """Prefix sum of the j-th rotation, measured at original position p."""
    _check_position(seq, "j", j)
    _check_position(seq, "p", p)
    s = seq._sums
    if j <= p:
        return s[p] - s[j]
    return s[p] - s[j] + s[-1]


def _all_prefixes_positive(terms: tuple[int, ...]) -> bool:
    height = 0
    for term in terms:
        height += term
        if height < 1:
            return False
    return True


def dominating_shifts(seq: CyclicSequence) -> tuple[int, ...]:
    """All shifts whose rotation has every proper prefix sum >= 1.

    Computed by direct rotation; the Cycle Lemma says there are exactly
    k of them, which is asserted rather than assumed.
    """
    k = seq.total
    if k <= 0:
        raise NonPositiveSum(f"sequence sum must be positive, got {k}")
    terms = seq.terms
    shifts = tuple(
        i
        for i in range(len(terms))
        if _all_prefixes_positive(terms[i:] + terms[:i])
    )
    assert len(shifts) == k
    return shifts


def nonpositive_count_at_rank(seq: CyclicSequence, i: int) -> int:
    """Number of positions with nonpositive prefix sum in the m_i-th rotation.

    Requires sum 1; the count always comes out to i + 1.
    """
    if seq.total != 1:
        raise NonUnitSum(f"sequence sum must be 1, got {seq.total}")
    _check_position(seq, "i", i)
    shift = rank_order(seq)[i]
    length = len(seq)
    return sum(
        1 for p in range(length + 1) if shifted_partial_sum(seq, shift, p) <= 0
    )


def canonical_rotation(seq: CyclicSequence) -> tuple[int, CyclicSequence]:
    """The unique dominating rotation of a sum-1 sequence, with its shift.

    The shift equals m_0 modulo L.
    """
    if seq.total != 1:
        raise NonUnitSum(f"sequence sum must be 1, got {seq.total}")
    shift = dominating_shifts(seq)[0]
    return shift, rotate(seq, shift)
