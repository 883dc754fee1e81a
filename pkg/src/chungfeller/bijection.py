"""Negativity-shifting bijections between path classes.

A balanced path with negativity k < n contains at least one positive
prime.  Writing it as

    prefix + U + inner + D + suffix

where the U...D block is the *last* positive prime and ``inner`` is its
interior Dyck path, the ``suffix`` after that prime is forced to consist
of negative primes only, i.e. it is a negative Dyck path.  Re-gluing the
pieces as

    prefix + D + suffix + U + inner

pushes exactly one more up/down pair below the axis: the new D starts at
height 0 and dives, ``suffix`` rides along at height -1, and the new U
climbs back to 0, while ``prefix`` and ``inner`` keep their old step
classifications.  This is phi_plus, a bijection from class (n, k) onto
class (n, k+1).  phi_minus performs the symmetric surgery on the last
negative prime (prefix + D + inner + U + suffix  ->  prefix + U +
suffix + D + inner) and is its exact inverse.

Both factorizations are unique, and both maps are defined verbatim when
any of the segments is empty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, NoNegativePrime, NoPositivePrime, NotDyckPath
from .paths import (
    DOWN,
    UP,
    LatticePath,
    factor_primes,
    is_dyck,
    negativity,
)


@dataclass(frozen=True)
class PositiveFactorization:
    """original = prefix + U + inner + D + suffix, around the last positive prime.

    ``inner`` is a Dyck path; ``suffix`` is a negative Dyck path.
    """

    prefix: LatticePath
    inner: LatticePath
    suffix: LatticePath

    def reassemble(self) -> LatticePath:
        return LatticePath(
            self.prefix.steps + (UP,) + self.inner.steps + (DOWN,) + self.suffix.steps
        )


@dataclass(frozen=True)
class NegativeFactorization:
    """original = prefix + D + inner + U + suffix, around the last negative prime.

    ``inner`` is a negative Dyck path; ``suffix`` is a Dyck path.
    """

    prefix: LatticePath
    inner: LatticePath
    suffix: LatticePath

    def reassemble(self) -> LatticePath:
        return LatticePath(
            self.prefix.steps + (DOWN,) + self.inner.steps + (UP,) + self.suffix.steps
        )


def _concat_bodies(primes) -> LatticePath:
    steps: tuple[int, ...] = ()
    for prime in primes:
        steps += prime.body.steps
    return LatticePath(steps)


def factor_last_positive_prime(path: LatticePath) -> PositiveFactorization:
    """Unique factorization around the last positive prime excursion."""
    primes = factor_primes(path).primes
    last = None
    for idx in range(len(primes) - 1, -1, -1):
        if primes[idx].sign == UP:
            last = idx
            break
    if last is None:
        raise NoPositivePrime("no positive prime")
    body = primes[last].body
    factorization = PositiveFactorization(
        prefix=_concat_bodies(primes[:last]),
        inner=LatticePath(body.steps[1:-1]),
        suffix=_concat_bodies(primes[last + 1 :]),
    )
    # forced by "last": everything after the prime lies on or below the axis
    assert 2 * negativity(factorization.suffix) == len(factorization.suffix)
    return factorization


def factor_last_negative_prime(path: LatticePath) -> NegativeFactorization:
    """Unique factorization around the last negative prime excursion."""
    primes = factor_primes(path).primes
    last = None
    for idx in range(len(primes) - 1, -1, -1):
        if primes[idx].sign == DOWN:
            last = idx
            break
    if last is None:
        raise NoNegativePrime("no negative prime")
    body = primes[last].body
    factorization = NegativeFactorization(
        prefix=_concat_bodies(primes[:last]),
        inner=LatticePath(body.steps[1:-1]),
        suffix=_concat_bodies(primes[last + 1 :]),
    )
    assert negativity(factorization.suffix) == 0
    return factorization


def phi_plus(path: LatticePath) -> LatticePath:
    """Raise negativity by one: prefix+U+inner+D+suffix -> prefix+D+suffix+U+inner."""
    f = factor_last_positive_prime(path)
    return LatticePath(
        f.prefix.steps + (DOWN,) + f.suffix.steps + (UP,) + f.inner.steps
    )


def phi_minus(path: LatticePath) -> LatticePath:
    """Lower negativity by one; exact inverse of phi_plus."""
    f = factor_last_negative_prime(path)
    return LatticePath(
        f.prefix.steps + (UP,) + f.suffix.steps + (DOWN,) + f.inner.steps
    )


def lift(path: LatticePath, k: int) -> LatticePath:
    """k-fold phi_plus: carries a Dyck path to class (n, k) bijectively."""
    if not is_dyck(path):
        raise NotDyckPath("lift requires a Dyck path")
    if not 0 <= k <= path.half_length:
        raise IndexOutOfRange(
            f"target negativity must be in 0..{path.half_length}, got {k}"
        )
    lifted = path
    for _ in range(k):
        lifted = phi_plus(lifted)
    return lifted
