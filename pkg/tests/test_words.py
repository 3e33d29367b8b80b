import pytest
from hypothesis import given, strategies as st

from doodlekit.errors import IndexOutOfRange, InvalidStrandCount, UnknownToken
from doodlekit.words import (
    Letter,
    Permutation,
    TwinWord,
    closure_components,
    concat,
    format_word,
    format_word_file,
    free_reduce,
    inverse,
    parse_word,
    parse_word_file,
    pi,
    random_word,
    shift_left,
)


def w(text, n):
    return parse_word(text, n)


def letters(max_n):
    return st.builds(
        Letter,
        st.sampled_from("sr"),
        st.integers(1, max_n - 1),
    )


def twin_words(n):
    return st.builds(lambda ls: TwinWord(n, tuple(ls)), st.lists(letters(n), max_size=20))


class TestParse:
    def test_tokens(self):
        word = w("s1 r2 s1", 3)
        assert word.letters == (Letter("s", 1), Letter("r", 2), Letter("s", 1))

    def test_empty(self):
        assert w("", 4).letters == ()

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            w("s3", 3)

    def test_unknown_token(self):
        with pytest.raises(UnknownToken):
            w("t1", 3)
        with pytest.raises(UnknownToken):
            w("s", 3)

    def test_bad_strand_count(self):
        with pytest.raises(InvalidStrandCount):
            w("", 0)

    def test_one_strand_word_must_be_empty(self):
        with pytest.raises(IndexOutOfRange):
            TwinWord(1, (Letter("s", 1),))

    @given(twin_words(4))
    def test_format_parse_roundtrip(self, word):
        assert parse_word(format_word(word), 4) == word

    def test_word_file_roundtrip(self):
        word = w("s1 r2", 3)
        assert parse_word_file(format_word_file(word)) == word


class TestFreeReduce:
    def test_involution_pair(self):
        assert free_reduce(w("s1 s1", 2)) == w("", 2)

    def test_nested(self):
        assert free_reduce(w("s1 r2 r2 s1", 3)) == w("", 3)

    def test_no_adjacent_pair(self):
        assert free_reduce(w("s1 r1 s1", 2)) == w("s1 r1 s1", 2)

    @given(twin_words(4))
    def test_idempotent_and_short(self, word):
        red = free_reduce(word)
        assert free_reduce(red) == red
        assert len(red) <= len(word)
        assert pi(red).images == pi(word).images

    @given(twin_words(4))
    def test_components_invariant(self, word):
        assert closure_components(free_reduce(word)) == closure_components(word)


class TestInverse:
    def test_reversal(self):
        assert inverse(w("s1 r2", 3)) == w("r2 s1", 3)

    def test_empty(self):
        assert inverse(w("", 2)) == w("", 2)

    @given(twin_words(4))
    def test_involution(self, word):
        assert inverse(inverse(word)) == word

    @given(twin_words(4))
    def test_cancels(self, word):
        assert free_reduce(concat(word, inverse(word))) == TwinWord(4, ())

    @given(twin_words(5))
    def test_pi_inverse(self, word):
        assert pi(inverse(word)).images == pi(word).inverse().images


class TestShift:
    def test_example(self):
        assert shift_left(2, w("s1", 2)) == w("s3", 4)

    def test_identity(self):
        assert shift_left(0, w("r1 s1", 2)) == w("r1 s1", 2)

    def test_both_kinds(self):
        assert shift_left(1, w("r1 s1", 2)) == w("r2 s2", 3)


class TestPi:
    def test_hand_traced(self):
        assert pi(w("s1 r2", 3)).images == (3, 1, 2)

    def test_identity(self):
        assert pi(w("", 5)).is_identity()

    def test_virtual_braid_relation(self):
        assert pi(w("r1 r2 r1", 3)) == pi(w("r2 r1 r2", 3))

    def test_cycle_string(self):
        assert pi(w("s1 r2", 3)).cycle_string() == "(1 3 2)"
        assert pi(w("", 3)).cycle_string() == "()"

    def test_homomorphism_sampled(self, rng):
        for _ in range(1000):
            n = rng.randint(2, 6)
            u = random_word(rng, n, rng.randint(0, 20))
            v = random_word(rng, n, rng.randint(0, 20))
            assert pi(concat(u, v)) == pi(u).then(pi(v))


class TestClosureComponents:
    def test_one_crossing(self):
        assert closure_components(w("s1", 2)) == 1

    def test_identity_word(self):
        assert closure_components(w("", 3)) == 3

    def test_three_cycle(self):
        assert closure_components(w("s1 r2", 3)) == 1

    def test_conjugation_invariance(self, rng):
        for _ in range(300):
            n = rng.randint(2, 5)
            word = random_word(rng, n, rng.randint(0, 12))
            g = Letter(rng.choice("sr"), rng.randint(1, n - 1))
            conj = TwinWord(n, (g,) + word.letters + (g,))
            assert closure_components(conj) == closure_components(word)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    assert Permutation.identity(3)(2) == 2
