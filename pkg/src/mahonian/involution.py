"""
Involutions on permutations that swap MAJ with STAT.

Every nonempty permutation splits into a defining triple: the subword of
letters above its first letter (top), the subword below it (bottom), and
the shuffle set recording where the word crosses that threshold.  The
triple determines the permutation: the shuffle set cuts positions 1..n into
blocks that alternate high/low starting high, and the blocks are filled
from the first letter followed by the top subword, respectively the bottom
subword.

`phi` acts on a triple by applying the tableau-switching involution to the
standardized top and to the bottom, and reflecting the shuffle set.  It
fixes des, the inverse descent set and the first letter while swapping MAJ
and STAT.  `burstein_p` replaces tableau switching with reverse-complement
and fixes Adj instead of the inverse descent set.  Both transfer to a
rearrangement class of words by coding, acting, and decoding.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInputError, InvalidTripleError
from .tableaux import foata_j
from .words import Word, check_permutation, code, decode, reverse_complement, shuffle_set


@dataclass(frozen=True)
class ShuffleTriple:
    """(top subword, bottom subword, shuffle set) of a permutation."""

    top: Word
    bottom: Word
    shuffle: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.top) + len(self.bottom) + 1

    @property
    def threshold(self) -> int:
        """The first letter of the permutation the triple describes."""
        return len(self.bottom) + 1


def decompose(p: Sequence[int]) -> ShuffleTriple:
    """Split a permutation into its defining triple.

    >>> t = decompose((5, 4, 6, 7, 3, 1, 9, 8, 2))
    >>> t.top, t.bottom, sorted(t.shuffle)
    ((6, 7, 9, 8), (4, 3, 1, 2), [1, 2, 4, 6, 8])
    """
    check_permutation(p)
    if not p:
        raise EmptyInputError("cannot decompose an empty permutation")
    first = p[0]
    top = tuple(x for x in p if x > first)
    bottom = tuple(x for x in p if x < first)
    return ShuffleTriple(top, bottom, shuffle_set(p))


def recompose(triple: ShuffleTriple) -> Word:
    """The unique permutation with the given triple.

    Fails closed: letter ranges, boundary ranges, and the alternating block
    sizes are all validated before any filling happens.
    """
    n, threshold = triple.size, triple.threshold
    if sorted(triple.top) != list(range(threshold + 1, n + 1)) or sorted(
        triple.bottom
    ) != list(range(1, threshold)):
        raise InvalidTripleError("top/bottom letters must split 1..n around the threshold")
    cuts = sorted(triple.shuffle)
    if any(not 1 <= b <= n - 1 for b in cuts):
        raise InvalidTripleError(f"shuffle boundaries must lie in 1..{n - 1}: {cuts}")
    high_positions: list[int] = []
    low_positions: list[int] = []
    start = 1
    for block_index, end in enumerate(cuts + [n]):
        target = high_positions if block_index % 2 == 0 else low_positions
        target.extend(range(start, end + 1))
        start = end + 1
    if len(high_positions) != len(triple.top) + 1:
        raise InvalidTripleError(
            f"{len(high_positions)} high positions cannot hold {len(triple.top) + 1} high letters"
        )
    out = [0] * n
    for pos, letter in zip(high_positions, (threshold,) + triple.top):
        out[pos - 1] = letter
    for pos, letter in zip(low_positions, triple.bottom):
        out[pos - 1] = letter
    return tuple(out)


def transform_shuffle(shuffle: Iterable[int], n: int) -> frozenset[int]:
    """Reflect a shuffle set for a length-n permutation.

    Boundaries k >= 2 map to n+1-k; the boundary 1 is included exactly when
    the input has odd size.  Applying the transform twice gives the input
    back.

    >>> sorted(transform_shuffle({1, 2, 4, 6, 8}, 9))
    [1, 2, 4, 6, 8]
    """
    cuts = frozenset(shuffle)
    if any(not 1 <= b <= n - 1 for b in cuts):
        raise ValueError(f"shuffle boundaries must lie in 1..{n - 1}: {sorted(cuts)}")
    image = frozenset(n + 1 - b for b in cuts if b >= 2)
    return image | {1} if len(cuts) % 2 == 1 else image


def _switch_subword(subword: Word) -> Word:
    """Tableau-switch a subword with distinct letters via standardization."""
    if not subword:
        return ()
    return decode(foata_j(code(subword)), subword)


def phi(p: Sequence[int]) -> Word:
    """Involution swapping MAJ and STAT while fixing des, Id, and the first letter.

    >>> phi((5, 4, 6, 7, 3, 1, 9, 8, 2))
    (5, 1, 9, 6, 4, 3, 7, 8, 2)
    """
    triple = decompose(p)
    return recompose(
        ShuffleTriple(
            top=_switch_subword(triple.top),
            bottom=foata_j(triple.bottom),
            shuffle=transform_shuffle(triple.shuffle, triple.size),
        )
    )


def burstein_p(p: Sequence[int]) -> Word:
    """Involution swapping MAJ and STAT while fixing Adj, des, and the first letter.

    Same shuffle-set reflection as `phi`, with reverse-complement acting on
    the subwords instead of tableau switching.
    """
    triple = decompose(p)
    top = (
        decode(reverse_complement(code(triple.top)), triple.top) if triple.top else ()
    )
    return recompose(
        ShuffleTriple(
            top=top,
            bottom=reverse_complement(triple.bottom),
            shuffle=transform_shuffle(triple.shuffle, triple.size),
        )
    )


def phi_on_class(v: Sequence[int]) -> Word:
    """Transfer `phi` to the rearrangement class of a word: code, act, decode.

    Well-defined because `phi` preserves the inverse descent set, so the
    image stays compatible with the word's multiset.

    >>> phi_on_class((4, 3, 4, 4, 2, 1, 6, 5, 1))
    (4, 1, 6, 4, 3, 2, 4, 5, 1)
    """
    if not v:
        raise EmptyInputError("cannot act on an empty word")
    return decode(phi(code(v)), v)
