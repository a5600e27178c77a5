"""Keep the usage examples embedded in the module docstrings honest."""
import doctest

import pytest

import mahonian.involution
import mahonian.patterns
import mahonian.tableaux
import mahonian.verify
import mahonian.words


@pytest.mark.parametrize(
    "module",
    [
        mahonian.words,
        mahonian.patterns,
        mahonian.tableaux,
        mahonian.involution,
        mahonian.verify,
    ],
    ids=lambda m: m.__name__,
)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
