import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bpmono.words import (
    BraidWord,
    FreeEndo,
    FreeWord,
    IndexOutOfRange,
    Permutation,
    RankMismatch,
    StrandMismatch,
    WordLengthOverflow,
    apply_endo,
    are_conjugate,
    artin_action,
    braids_equal,
    compose_endos,
    conjugacy_key,
    cyclic_reduce,
    exponent_sum,
    free_reduce,
    permutation_of,
)

from oracles import artin_images, burau, perm_of_letters
from strategies import braid_pairs, braid_words, free_words

F = FreeWord.parse
B = BraidWord.parse


class TestFreeWords:
    def test_reduction_examples(self):
        assert free_reduce([(1, 1), (2, 1), (2, -1), (1, 1)], 2) == F("t1^2")
        assert free_reduce([], 3).is_identity()
        assert free_reduce([(1, 1), (1, -1)]).is_identity()

    def test_rank_bound(self):
        with pytest.raises(IndexOutOfRange):
            free_reduce([(3, 1)], 2)
        with pytest.raises(IndexOutOfRange):
            FreeWord(((0, 1),))

    def test_cyclic_examples(self):
        assert cyclic_reduce(F("t1 t2 t1^-1")) == F("t2")
        r = F("t1 t2 t1 t2^-1 t1^-1 t2^-1")
        assert cyclic_reduce(r) == r
        assert cyclic_reduce(F("t2^-1 t1 t2")) == F("t1")

    def test_text_round_trip(self):
        w = F("t3^-2 t1^1")
        assert str(w) == "t3^-2 t1^1"
        assert F(str(w)) == w

    @given(free_words())
    def test_reduce_idempotent(self, w):
        assert free_reduce(w) == w
        letters = w.letters()
        assert all(a != -b for a, b in zip(letters, letters[1:]))

    @given(free_words(), free_words(max_len=5))
    def test_conjugates_share_key(self, w, u):
        assert are_conjugate(w, u * w * ~u)
        assert conjugacy_key(w) == conjugacy_key(cyclic_reduce(w))

    @given(free_words(rank=3))
    def test_parse_print(self, w):
        assert F(str(w)) == w


class TestArtin:
    def test_generator_images(self):
        f = artin_action(B(2, "s1"))
        assert f.images == (F("t1 t2 t1^-1"), F("t1"))
        g = artin_action(B(2, "S1"))
        assert g.images == (F("t2"), F("t2^-1 t1 t2"))
        assert artin_action(BraidWord(3)).is_identity()

    def test_apply_examples(self):
        f = artin_action(B(2, "s1"))
        assert apply_endo(f, F("t2")) == F("t1")
        assert apply_endo(f, F("t1")) == F("t1 t2 t1^-1")
        w = F("t1 t2^3 t1^-1")
        assert apply_endo(FreeEndo.identity(2), w) == w

    def test_compose_examples(self):
        s1, S1 = artin_action(B(2, "s1")), artin_action(B(2, "S1"))
        assert compose_endos(s1, S1).is_identity()
        assert compose_endos(s1, FreeEndo.identity(2)) == s1
        assert compose_endos(artin_action(B(3, "s1")), artin_action(B(3, "s2"))) == artin_action(B(3, "s1 s2"))

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            compose_endos(FreeEndo.identity(2), FreeEndo.identity(3))
        with pytest.raises(RankMismatch):
            apply_endo(FreeEndo.identity(2), F("t3"))

    def test_overflow_is_loud(self):
        b = B(3, "s1 s2") ** 40
        with pytest.raises(WordLengthOverflow):
            artin_action(b, max_len=50)

    @given(braid_words(max_len=10))
    def test_matches_naive_oracle(self, b):
        assert [img.letters() for img in artin_action(b).images] == artin_images(b.letters, b.strands)

    @given(braid_pairs())
    def test_homomorphism(self, pair):
        a, b = pair
        assert artin_action(a * b) == compose_endos(artin_action(a), artin_action(b))

    @given(braid_words(), braid_words(strands=4), braid_words(strands=4))
    def test_compose_associative(self, _, a, b):
        c = a * b
        f, g, h = artin_action(a), artin_action(b), artin_action(c)
        assert compose_endos(compose_endos(f, g), h) == compose_endos(f, compose_endos(g, h))

    @given(braid_words())
    def test_automorphism(self, b):
        assert compose_endos(artin_action(b), artin_action(~b)).is_identity()
        assert compose_endos(artin_action(~b), artin_action(b)).is_identity()

    @given(braid_words(max_len=8), st.integers(1, 3))
    def test_image_length_bound(self, b, k):
        f = artin_action(b)
        w = FreeWord.gen(1, k) * FreeWord.gen(2)
        longest = max(len(img) for img in f.images)
        assert len(apply_endo(f, w)) <= len(w) * longest


class TestWordProblem:
    def test_examples(self):
        assert braids_equal(B(3, "s1 s2 s1"), B(3, "s2 s1 s2"))
        assert braids_equal(B(3, "s1"), B(3, "s1"))
        assert not braids_equal(B(3, "s1 s2"), B(3, "s2 s1"))
        with pytest.raises(StrandMismatch):
            braids_equal(B(3, "s1"), B(4, "s1"))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_defining_relations(self, n):
        for i in range(1, n - 1):
            assert braids_equal(BraidWord(n, (i, i + 1, i)), BraidWord(n, (i + 1, i, i + 1)))
        for i, j in itertools.combinations(range(1, n), 2):
            if j - i >= 2:
                assert braids_equal(BraidWord(n, (i, j)), BraidWord(n, (j, i)))

    @given(braid_words(max_len=8))
    def test_equal_to_relation_rewrites(self, b):
        # inserting a relator anywhere does not change the braid
        n = b.strands
        if n < 3:
            return
        rel = BraidWord(n, (1, 2, 1, -2, -1, -2))
        k = len(b) // 2
        c = BraidWord(n, b.letters[:k] + rel.letters + b.letters[k:])
        assert braids_equal(b, c)
        assert burau(b.letters, n) == burau(c.letters, n)

    @given(braid_pairs(max_strands=5, max_len=6))
    def test_equal_implies_invariants(self, pair):
        a, b = pair
        if braids_equal(a, b):
            assert permutation_of(a) == permutation_of(b)
            assert exponent_sum(a) == exponent_sum(b)
            assert burau(a.letters, a.strands) == burau(b.letters, b.strands)
        if burau(a.letters, a.strands) != burau(b.letters, b.strands):
            assert not braids_equal(a, b)

    @given(braid_words(strands=4, max_len=6), braid_words(strands=4, max_len=6), braid_words(strands=4, max_len=6))
    def test_equivalence_relation(self, a, b, c):
        assert braids_equal(a, a)
        assert braids_equal(a, b) == braids_equal(b, a)
        if braids_equal(a, b) and braids_equal(b, c):
            assert braids_equal(a, c)

    def test_full_twist_is_central(self):
        d = B(4, "s1 s2 s3") ** 4
        for i in (1, 2, 3):
            s = BraidWord.gen(4, i)
            assert braids_equal(d * s, s * d)


class TestPermutationsAndDegree:
    def test_examples(self):
        assert permutation_of(B(3, "s1")) == Permutation.transposition(3, 1, 2)
        assert permutation_of(B(3, "s2 s1 S2")) == Permutation.transposition(3, 1, 3)
        assert permutation_of(B(3, "s1 s2")).cycle_type() == (3,)
        assert exponent_sum(B(3, "s1 s2 s1")) == 3
        assert exponent_sum(B(3, "s1 S1")) == 0
        assert exponent_sum(B(3, "s1 s2") ** 3) == 6

    @given(braid_pairs())
    def test_homomorphisms(self, pair):
        a, b = pair
        assert permutation_of(a * b) == permutation_of(a) * permutation_of(b)
        assert exponent_sum(a * b) == exponent_sum(a) + exponent_sum(b)

    @given(braid_words())
    def test_permutation_oracle(self, b):
        assert (~permutation_of(b)).images == perm_of_letters(b.letters, b.strands)

    def test_braid_text_round_trip(self):
        b = B(3, "s2 s1 S2")
        assert str(b) == "s2 s1 S2"
        assert B(3, str(b)) == b
        assert B(3, "s1^3") == BraidWord(3, (1, 1, 1))

    def test_bad_letters(self):
        with pytest.raises(IndexOutOfRange):
            BraidWord(3, (3,))
        with pytest.raises(ValueError):
            B(3, "x1")
