"""Shared helpers for the test suite."""

from itertools import product


def chi_square(observed, classes, draws):
    """Pearson statistic against the uniform distribution on `classes`."""
    expected = draws / len(classes)
    return sum((observed.get(c, 0) - expected) ** 2 / expected for c in classes)


def all_pm1_sequences(length):
    """Every +-1 tuple of the given length."""
    return product((1, -1), repeat=length)
