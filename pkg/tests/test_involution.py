"""The triple decomposition and the MAJ/STAT-swapping involutions."""
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from mahonian import words
from mahonian.errors import EmptyInputError, InvalidTripleError
from mahonian.involution import (
    ShuffleTriple,
    burstein_p,
    decompose,
    phi,
    phi_on_class,
    recompose,
    transform_shuffle,
)
from mahonian.verify import multisets, rearrangement_class, symmetric_group

random_perms = (
    st.integers(1, 8)
    .flatmap(lambda n: st.permutations(range(1, n + 1)))
    .map(tuple)
)
random_words = st.lists(st.integers(1, 4), min_size=1, max_size=7).map(tuple)


def quintuple(w):
    _, des, maj = words.descent_data(w)
    return des, words.inverse_descent_set(w), w[0], maj, words.stat(w)


class TestDecompose:
    def test_worked_example(self):
        t = decompose((5, 4, 6, 7, 3, 1, 9, 8, 2))
        assert t.top == (6, 7, 9, 8)
        assert t.bottom == (4, 3, 1, 2)
        assert t.shuffle == {1, 2, 4, 6, 8}

    def test_identity(self):
        t = decompose((1, 2, 3, 4))
        assert t == ShuffleTriple((2, 3, 4), (), frozenset())

    def test_small_case(self):
        assert decompose((2, 3, 1)) == ShuffleTriple((3,), (1,), frozenset({2}))

    def test_singleton(self):
        assert decompose((1,)) == ShuffleTriple((), (), frozenset())

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            decompose(())

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            decompose((2, 2, 1))


class TestRecompose:
    def test_worked_examples(self):
        assert recompose(
            ShuffleTriple((6, 7, 9, 8), (4, 3, 1, 2), frozenset({1, 2, 4, 6, 8}))
        ) == (5, 4, 6, 7, 3, 1, 9, 8, 2)
        assert recompose(
            ShuffleTriple((9, 6, 7, 8), (1, 4, 3, 2), frozenset({1, 2, 4, 6, 8}))
        ) == (5, 1, 9, 6, 4, 3, 7, 8, 2)

    def test_identity(self):
        assert recompose(ShuffleTriple((2, 3, 4), (), frozenset())) == (1, 2, 3, 4)

    def test_bad_letters(self):
        with pytest.raises(InvalidTripleError):
            recompose(ShuffleTriple((2, 3), (5,), frozenset({1})))

    def test_bad_boundary_range(self):
        with pytest.raises(InvalidTripleError):
            recompose(ShuffleTriple((3,), (1,), frozenset({3})))

    def test_bad_alternation(self):
        # one low letter but no boundary leaves room only for highs
        with pytest.raises(InvalidTripleError):
            recompose(ShuffleTriple((), (1,), frozenset()))

    def test_roundtrip_exhaustive(self):
        for n in range(1, 8):
            for p in symmetric_group(n):
                assert recompose(decompose(p)) == p

    @given(random_perms)
    def test_roundtrip_random(self, p):
        assert recompose(decompose(p)) == p


class TestTransformShuffle:
    def test_worked_example(self):
        assert transform_shuffle({1, 2, 4, 6, 8}, 9) == {1, 2, 4, 6, 8}

    def test_empty(self):
        assert transform_shuffle(frozenset(), 5) == frozenset()

    def test_odd_case(self):
        assert transform_shuffle({2}, 3) == {1, 2}
        assert transform_shuffle({1, 2}, 3) == {2}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            transform_shuffle({5}, 5)
        with pytest.raises(ValueError):
            transform_shuffle({0}, 5)

    @given(st.integers(2, 12).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n - 1)))
    ))
    def test_self_inverse(self, case):
        n, cuts = case
        assert transform_shuffle(transform_shuffle(cuts, n), n) == frozenset(cuts)


class TestPhi:
    def test_worked_example(self):
        assert phi((5, 4, 6, 7, 3, 1, 9, 8, 2)) == (5, 1, 9, 6, 4, 3, 7, 8, 2)

    def test_identity_fixed(self):
        assert phi((1, 2, 3, 4, 5)) == (1, 2, 3, 4, 5)

    def test_singleton(self):
        assert phi((1,)) == (1,)

    def test_small_case_swaps_maj_stat(self):
        assert phi((2, 3, 1)) == (2, 1, 3)
        assert quintuple((2, 3, 1)) == (1, frozenset({1}), 2, 2, 1)
        assert quintuple((2, 1, 3)) == (1, frozenset({1}), 2, 1, 2)

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            phi(())

    def test_involution(self):
        for n in range(1, 6):
            for p in symmetric_group(n):
                assert phi(phi(p)) == p

    def test_quintuple_swap(self):
        for n in range(1, 6):
            for p in symmetric_group(n):
                des, idset, first, maj, stat = quintuple(p)
                assert quintuple(phi(p)) == (des, idset, first, stat, maj)

    def test_maj_pair_identity(self):
        for n in range(1, 6):
            for p in symmetric_group(n):
                _, des, maj = words.descent_data(p)
                _, _, maj_image = words.descent_data(phi(p))
                assert maj + maj_image == (n + 1) * des - (p[0] - 1)

    @given(random_perms)
    def test_involution_random(self, p):
        assert phi(phi(p)) == p


class TestBursteinP:
    def test_small_case(self):
        assert burstein_p((2, 3, 1)) == (2, 1, 3)

    def test_small_case_statistics(self):
        def adj_quintuple(p):
            _, des, maj = words.descent_data(p)
            return words.adj(p), des, p[0], maj, words.stat(p)

        assert adj_quintuple((2, 3, 1))[1:] == (1, 2, 2, 1)
        assert adj_quintuple((2, 1, 3))[1:] == (1, 2, 1, 2)

    def test_identity_fixed(self):
        assert burstein_p((1, 2, 3)) == (1, 2, 3)

    def test_involution_s5(self):
        for p in symmetric_group(5):
            assert burstein_p(burstein_p(p)) == p

    def test_adj_quintuple_swap(self):
        for n in range(1, 5):
            for p in symmetric_group(n):
                _, des, maj = words.descent_data(p)
                image = burstein_p(p)
                _, des_i, maj_i = words.descent_data(image)
                assert (words.adj(image), des_i, image[0]) == (words.adj(p), des, p[0])
                assert maj_i == words.stat(p) and words.stat(image) == maj

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            burstein_p(())


class TestPhiOnClass:
    def test_worked_example(self):
        assert phi_on_class((4, 3, 4, 4, 2, 1, 6, 5, 1)) == (4, 1, 6, 4, 3, 2, 4, 5, 1)

    def test_sorted_word_fixed(self):
        assert phi_on_class((1, 1, 2, 2)) == (1, 1, 2, 2)
        assert phi_on_class((1, 2, 3, 4)) == (1, 2, 3, 4)

    def test_table_pairing(self):
        assert phi_on_class((1, 2, 1, 2)) == (1, 2, 2, 1)
        assert phi_on_class((2, 1, 1, 2)) == (2, 2, 1, 1)
        assert phi_on_class((2, 1, 2, 1)) == (2, 1, 2, 1)

    def test_agrees_with_phi_on_permutations(self):
        for p in symmetric_group(4):
            assert phi_on_class(p) == phi(p)

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            phi_on_class(())

    def test_involution_on_classes(self):
        for letters in multisets(3, 5):
            for v in rearrangement_class(letters):
                assert phi_on_class(phi_on_class(v)) == v

    @given(random_words)
    def test_preserves_multiset(self, v):
        assert Counter(phi_on_class(v)) == Counter(v)

    @given(random_words)
    def test_quintuple_swap_random(self, v):
        des, idset, first, maj, stat = quintuple(v)
        assert quintuple(phi_on_class(v)) == (des, idset, first, stat, maj)
