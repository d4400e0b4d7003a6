"""Tests for the ρ's-complement word encoding."""

import random

import pytest

from src.pdwa.encoding import (
    Base,
    TupleWord,
    all_letters,
    canonical_letter,
    decode_int,
    decode_nat,
    encode_int,
    enumerate_words,
    format_word,
    letter_index,
    parse_word,
    sign_extend,
    sign_vector,
)
from src.pdwa.errors import EncodingError


class TestDecode:
    """Test decoding of naturals and integers."""

    def test_empty_word_is_zero_as_natural(self):
        """Test the empty word decodes to 0 on every track."""
        assert decode_nat(TupleWord(arity=1, letters=()), 2) == (0,)

    def test_decode_nat(self):
        """Test positional evaluation per track."""
        assert decode_nat(TupleWord.track("101"), 2) == (5,)
        assert decode_nat(TupleWord.of([(1, 0), (0, 1)]), 2) == (2, 1)

    def test_decode_int_negative(self):
        """Test a nonzero sign digit subtracts ρ^n."""
        assert decode_int(TupleWord.track("101"), 2) == (-3,)
        assert decode_int(TupleWord.track("01"), 2) == (1,)

    def test_any_nonzero_sign_digit_is_negative(self):
        """Test sign digits other than ρ-1 still mean negative."""
        assert decode_int(TupleWord.track("21"), 3) == (-2,)
        assert decode_int(TupleWord.track("11"), 3) == (-2,)

    def test_decode_int_rejects_empty_word(self):
        """Test λ does not encode an integer tuple."""
        with pytest.raises(EncodingError):
            decode_int(TupleWord(arity=1, letters=()), 2)

    def test_digit_out_of_range(self):
        """Test digits must be below the base."""
        with pytest.raises(EncodingError):
            decode_int(TupleWord.track("2"), 2)

    def test_exhaustive_against_positional_oracle(self):
        """Test every word of length ≤ 6 at base 2 against direct evaluation."""
        for w in enumerate_words(1, 2, 6):
            digits = [letter[0] for letter in w.letters]
            value = int("".join(map(str, digits[1:])) or "0", 2)
            if digits[0]:
                value -= 2 ** (len(digits) - 1)
            assert decode_int(w, 2) == (value,)


class TestEncode:
    """Test the canonical shortest encoding."""

    def test_examples(self):
        """Test the shortest canonical words for a few values."""
        assert encode_int((-3,), 2) == TupleWord.track("101")
        assert encode_int((0,), 2) == TupleWord.track("0")
        assert encode_int((5,), 2) == TupleWord.track("0101")
        assert encode_int((1, -1), 2) == TupleWord.of([(0, 1), (1, 1)])

    def test_arity_zero(self):
        """Test the empty tuple encodes as one unit letter."""
        w = encode_int((), 2)
        assert w.letters == ((),)
        assert decode_int(w, 2) == ()

    @pytest.mark.parametrize("base", [2, 3, 10])
    def test_round_trip(self, base):
        """Test decode(encode(z)) = z on random tuples."""
        rng = random.Random(base)
        for _ in range(300):
            z = tuple(rng.randint(-1000, 1000) for _ in range(rng.randint(1, 3)))
            w = encode_int(z, base)
            assert decode_int(w, base) == z
            assert w.letters[0] == canonical_letter(w.letters[0], base)

    def test_minimal_length(self):
        """Test no shorter canonical word decodes to the same value."""
        for z in range(-20, 21):
            w = encode_int((z,), 2)
            shorter = [
                v for v in enumerate_words(1, 2, len(w) - 1)
                if decode_int(v, 2) == (z,)
            ]
            assert shorter == []

    def test_invalid_base(self):
        """Test bases below 2 are rejected."""
        with pytest.raises(EncodingError):
            Base(1)
        with pytest.raises(EncodingError):
            encode_int((1,), 1)


class TestSigns:
    """Test sign vectors and sign extension."""

    def test_sign_vector(self):
        """Test σ maps nonzero digits to -1."""
        assert sign_vector((0, 2)) == (0, -1)
        assert sign_vector((0, 0)) == (0, 0)
        assert sign_vector((1, 1)) == (-1, -1)

    def test_sign_extend_examples(self):
        """Test sign extension keeps the value."""
        assert sign_extend(TupleWord.track("01"), 1, 2) == TupleWord.track("001")
        assert sign_extend(TupleWord.track("11"), 1, 2) == TupleWord.track("111")

    def test_sign_extend_canonicalizes(self):
        """Test extension by 0 only canonicalizes the sign letter."""
        assert sign_extend(TupleWord.track("10"), 0, 3) == TupleWord.track("20")

    @pytest.mark.parametrize("base", [2, 3])
    def test_sign_extension_invariance(self, base):
        """Test decode_int is unchanged by repeating the sign letter."""
        for w in enumerate_words(2, base, 3):
            for k in range(4):
                assert decode_int(sign_extend(w, k, base), base) == decode_int(w, base)

    def test_sign_letter_freedom(self):
        """Test swapping one nonzero sign digit for another keeps the value."""
        for w in enumerate_words(1, 5, 3):
            sign = w.letters[0][0]
            if sign == 0:
                continue
            for other in range(1, 5):
                swapped = TupleWord(arity=1, letters=((other,), *w.letters[1:]))
                assert decode_int(swapped, 5) == decode_int(w, 5)

    def test_sign_extend_rejects_empty(self):
        """Test the empty word cannot be sign-extended."""
        with pytest.raises(EncodingError):
            sign_extend(TupleWord(arity=1, letters=()), 1, 2)


class TestLetters:
    """Test letter indexing, enumeration and the textual syntax."""

    def test_letter_index_matches_order(self):
        """Test letter_index inverts all_letters."""
        for base, arity in [(2, 2), (3, 2), (2, 3)]:
            for i, letter in enumerate(all_letters(arity, base)):
                assert letter_index(letter, base) == i

    def test_enumerate_counts(self):
        """Test word enumeration by length."""
        assert len(list(enumerate_words(1, 2, 2))) == 6
        assert len(list(enumerate_words(1, 2, 2, min_len=2))) == 4
        assert len(list(enumerate_words(2, 3, 2))) == 9 + 81

    def test_text_round_trip(self):
        """Test format_word / parse_word on a two-track word."""
        w = encode_int((1, -1), 2)
        assert format_word(w) == "0,1;1,1"
        assert parse_word("0,1;1,1", 2) == w

    def test_parse_word_errors(self):
        """Test malformed word text."""
        with pytest.raises(EncodingError):
            parse_word("")
        with pytest.raises(EncodingError):
            parse_word("0,a")
        with pytest.raises(EncodingError):
            parse_word("0;0,1")
        with pytest.raises(EncodingError):
            parse_word("3", 2)
