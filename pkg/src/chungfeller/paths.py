"""Balanced lattice paths with unit up/down steps.

A path is a finite sequence of +1 (up) and -1 (down) steps starting at
height 0; it is *balanced* when it has as many ups as downs, so it ends
back at height 0.  A step from height a to height b counts as *below the
axis* iff a + b < 0.  With unit steps this midpoint rule classifies every
step touching 0 from below as "below" and every step touching 0 from
above as "above", which makes the below-axis step count of a balanced
path even.  Half that count is the path's *negativity* k; Dyck paths are
exactly the balanced paths with k = 0.

Every balanced path factors uniquely into *signed primes*: maximal
excursions that touch height 0 only at their endpoints, positive ones
strictly above the axis internally, negative ones strictly below.

The text form of a path is a string over 'U' (up) and 'D' (down).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import InvalidCharacter, NotBalanced

UP = 1
DOWN = -1

_STEP_OF_CHAR = {"U": UP, "D": DOWN}
_CHAR_OF_STEP = {UP: "U", DOWN: "D"}


@dataclass(frozen=True)
class LatticePath:
    """Immutable sequence of +-1 steps."""

    steps: tuple[int, ...] = ()

    def __post_init__(self):
        steps = self.steps
        if not isinstance(steps, tuple):
            steps = tuple(steps)
            object.__setattr__(self, "steps", steps)
        if steps.count(UP) + steps.count(DOWN) != len(steps):
            raise ValueError("steps must all be +1 or -1")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __add__(self, other: "LatticePath") -> "LatticePath":
        if not isinstance(other, LatticePath):
            return NotImplemented
        return LatticePath(self.steps + other.steps)

    def __str__(self) -> str:
        return render_path(self)

    @property
    def up_count(self) -> int:
        return self.steps.count(UP)

    @property
    def down_count(self) -> int:
        return self.steps.count(DOWN)

    @property
    def is_balanced(self) -> bool:
        return self.up_count == self.down_count

    @property
    def half_length(self) -> int:
        """n for a path of length 2n (only meaningful when balanced)."""
        return len(self.steps) // 2


EMPTY_PATH = LatticePath()


@dataclass(frozen=True)
class PathClass:
    """The class (n, k): balanced paths of length 2n with negativity k."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.k <= self.n:
            raise ValueError(f"require 0 <= k <= n, got n={self.n}, k={self.k}")

    @classmethod
    def of(cls, path: LatticePath) -> "PathClass":
        return cls(path.half_length, negativity(path))

    def contains(self, path: LatticePath) -> bool:
        return (
            len(path) == 2 * self.n
            and path.is_balanced
            and negativity(path) == self.k
        )


@dataclass(frozen=True)
class SignedPrime:
    """One prime excursion together with its sign (+1 above, -1 below)."""

    sign: int
    body: LatticePath


@dataclass(frozen=True)
class PrimeFactorization:
    """Ordered signed primes whose concatenation is the original path."""

    primes: tuple[SignedPrime, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def concatenated(self) -> LatticePath:
        steps: tuple[int, ...] = ()
        for prime in self.primes:
            steps += prime.body.steps
        return LatticePath(steps)


def parse_path(text: str) -> LatticePath:
    """Parse a 'U'/'D' string; raises InvalidCharacter for anything else."""
    steps = []
    for i, char in enumerate(text):
        step = _STEP_OF_CHAR.get(char)
        if step is None:
            raise InvalidCharacter(i, char)
        steps.append(step)
    return LatticePath(tuple(steps))


def render_path(path: LatticePath) -> str:
    """Exact inverse of parse_path."""
    return "".join(_CHAR_OF_STEP[step] for step in path.steps)


def heights(path: LatticePath) -> list[int]:
    """Height profile h(0..len): h(0) = 0, h(i) = h(i-1) + step_i."""
    return list(accumulate(path.steps, initial=0))


def negativity(path: LatticePath) -> int:
    """Half the number of below-axis steps of a balanced path.

    A step from height a to b is below the axis iff a + b < 0; for a
    balanced path the count is always even.
    """
    if not path.is_balanced:
        raise NotBalanced(
            f"path has {path.up_count} up and {path.down_count} down steps"
        )
    below = 0
    h = 0
    for step in path.steps:
        prev = h
        h += step
        if prev + h < 0:
            below += 1
    assert below % 2 == 0
    return below // 2


def factor_primes(path: LatticePath) -> PrimeFactorization:
    """Split a balanced path at every return to height 0."""
    if not path.is_balanced:
        raise NotBalanced(
            f"path has {path.up_count} up and {path.down_count} down steps"
        )
    primes = []
    h = 0
    start = 0
    for i, step in enumerate(path.steps, start=1):
        h += step
        if h == 0:
            body = LatticePath(path.steps[start:i])
            primes.append(SignedPrime(body.steps[0], body))
            start = i
    return PrimeFactorization(tuple(primes))


def is_dyck(path: LatticePath) -> bool:
    """True iff the path is balanced and never dips below the axis."""
    return path.is_balanced and negativity(path) == 0
