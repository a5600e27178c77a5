"""
Words over a positive-integer alphabet and their classical statistics.

A word is any sequence of letters >= 1; a permutation is a word whose
letters are exactly 1..n.  The coding map (standardization) sends a word to
the unique order-isomorphic permutation, breaking ties between equal
letters left to right; decoding inverts it on the rearrangement class of a
multiset.  All positions and set elements are 1-based.

Seven statistics live here: the first letter F, the descent count and major
index (des, MAJ), their inverse counterparts (ides, IMAJ) read off the
coded permutation, the adjacency count Adj, and STAT, a Mahonian companion
of MAJ defined as a vincular pattern sum.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import patterns
from .errors import EmptyInputError, NotCompatibleError, ParseError, SizeMismatchError

Word = tuple[int, ...]

_SEPARATED_RE = re.compile(r"[,\s]")


def is_permutation(w: Sequence[int]) -> bool:
    """True when the letters of `w` are exactly 1..n, each once."""
    return sorted(w) == list(range(1, len(w) + 1))


def check_permutation(w: Sequence[int]) -> None:
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {tuple(w)}")


def parse_word(text: str) -> Word:
    """Parse a word from text.

    Two forms are accepted: a contiguous digit string such as "212231"
    (letters 1-9 only), or comma/space-separated integers such as
    "10,2,10,3" for larger alphabets.

    >>> parse_word("212231")
    (2, 1, 2, 2, 3, 1)
    >>> parse_word("10 2 10 3")
    (10, 2, 10, 3)
    """
    s = text.strip()
    if not s:
        raise ParseError("empty word text")
    if _SEPARATED_RE.search(s):
        tokens = [tok for tok in re.split(r"[,\s]+", s) if tok]
        try:
            letters = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise ParseError(f"not a word: {text!r}") from None
    elif s.isdigit():
        letters = tuple(int(ch) for ch in s)
    else:
        raise ParseError(f"not a word: {text!r}")
    if any(x < 1 for x in letters):
        raise ParseError(f"letters must be positive: {text!r}")
    return letters


def format_word(w: Sequence[int]) -> str:
    """Digit string when every letter fits one digit, else comma-separated."""
    if all(1 <= x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def format_index_set(s: Iterable[int]) -> str:
    """Brace-delimited ascending rendering, e.g. "{2,3,4,8}"."""
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


# ------------------------------------------------------------- coding map

def code(w: Sequence[int]) -> Word:
    """Standardize a word to a permutation, equal letters ranked left to right.

    >>> code((2, 1, 2, 2, 3, 1))
    (3, 1, 4, 5, 6, 2)
    """
    if not w:
        raise EmptyInputError("cannot code an empty word")
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    ranks = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        ranks[i] = rank
    return tuple(ranks)


def sorted_word(letters: Iterable[int]) -> Word:
    """The nondecreasing word carrying a multiset of letters."""
    return tuple(sorted(letters))


def block_boundaries(letters: Iterable[int]) -> frozenset[int]:
    """Positions where a letter run of the sorted word ends, except the last.

    These are the only values the inverse descent set of a compatible
    permutation may contain.

    >>> sorted(block_boundaries((1, 1, 2, 2)))
    [2]
    """
    w = sorted_word(letters)
    return frozenset(i for i in range(1, len(w)) if w[i - 1] != w[i])


def decode(p: Sequence[int], letters: Iterable[int]) -> Word:
    """Invert the coding map: reletter `p` by the sorted letters of a multiset.

    Defined only for permutations compatible with the multiset, i.e. those
    whose inverse descent set is contained in the multiset's run boundaries.

    >>> decode((3, 1, 4, 5, 6, 2), (2, 1, 2, 2, 3, 1))
    (2, 1, 2, 2, 3, 1)
    """
    check_permutation(p)
    wbar = sorted_word(letters)
    if len(p) != len(wbar):
        raise SizeMismatchError(f"permutation size {len(p)} != multiset size {len(wbar)}")
    if p and not inverse_descent_set(p) <= block_boundaries(wbar):
        raise NotCompatibleError(
            f"{tuple(p)} is not compatible with the class of {format_word(wbar)}"
        )
    return tuple(wbar[v - 1] for v in p)


# ------------------------------------------------------------- statistics

def descent_set(w: Sequence[int]) -> frozenset[int]:
    """Positions i with w_i > w_{i+1}."""
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def descent_data(w: Sequence[int]) -> tuple[frozenset[int], int, int]:
    """(descent set, des, MAJ); the empty word has none of each."""
    d = descent_set(w)
    return d, len(d), sum(d)


def inverse_descent_set(w: Sequence[int]) -> frozenset[int]:
    """Values v of the coded word such that v+1 appears before v."""
    if not w:
        raise EmptyInputError("inverse descents of an empty word are undefined")
    cw = code(w)
    position = {value: i for i, value in enumerate(cw)}
    return frozenset(v for v in range(1, len(cw)) if position[v + 1] < position[v])


def inverse_descent_data(w: Sequence[int]) -> tuple[frozenset[int], int, int]:
    """(inverse descent set, ides, IMAJ)."""
    s = inverse_descent_set(w)
    return s, len(s), sum(s)


def shuffle_set(w: Sequence[int]) -> frozenset[int]:
    """Positions where the word crosses the threshold set by its first letter.

    >>> sorted(shuffle_set((5, 4, 6, 7, 3, 1, 9, 8, 2)))
    [1, 2, 4, 6, 8]
    """
    if not w:
        raise EmptyInputError("shuffle set of an empty word is undefined")
    first = w[0]
    return frozenset(
        i
        for i in range(1, len(w))
        if (w[i - 1] >= first > w[i]) or (w[i - 1] < first <= w[i])
    )


def adj(w: Sequence[int]) -> int:
    """Count positions of the coded word where an entry is followed by its
    predecessor, with a trailing sentinel 0 (so the last term fires iff the
    coded word ends in 1)."""
    if not w:
        raise EmptyInputError("Adj of an empty word is undefined")
    cw = code(w) + (0,)
    return sum(1 for j in range(len(w)) if cw[j] == cw[j + 1] + 1)


def stat(w: Sequence[int]) -> int:
    """STAT: the six-term vincular pattern sum; Mahonian on permutations.

    On permutations the two repeated-letter terms contribute nothing and
    the sum reduces to the four-term form.
    """
    return patterns.eval_sum("STAT_w", w)


@dataclass(frozen=True)
class StatVector:
    """All seven statistics of a word plus its three index sets."""

    first: int
    des: int
    ides: int
    adj: int
    maj: int
    imaj: int
    stat: int
    d_set: frozenset[int]
    id_set: frozenset[int]
    sh_set: frozenset[int]


def stat_vector(w: Sequence[int]) -> StatVector:
    """Bundle every statistic of a nonempty word, computed from scratch."""
    if not w:
        raise EmptyInputError("statistics of an empty word are undefined")
    d_set, n_des, total_maj = descent_data(w)
    id_set, n_ides, total_imaj = inverse_descent_data(w)
    return StatVector(
        first=w[0],
        des=n_des,
        ides=n_ides,
        adj=adj(w),
        maj=total_maj,
        imaj=total_imaj,
        stat=stat(w),
        d_set=d_set,
        id_set=id_set,
        sh_set=shuffle_set(w),
    )


# ------------------------------------------------------------- symmetries

def reverse(p: Sequence[int]) -> Word:
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> Word:
    """Replace each value x of a permutation by n+1-x."""
    check_permutation(p)
    n = len(p)
    return tuple(n + 1 - x for x in p)


def reverse_complement(p: Sequence[int]) -> Word:
    """Reversal followed by complement (their order does not matter)."""
    return complement(reverse(p))


def symmetries(p: Sequence[int]) -> tuple[Word, Word, Word]:
    """(reversal, complement, reverse-complement) of a permutation."""
    check_permutation(p)
    return reverse(p), complement(p), reverse_complement(p)
