import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from branchtrace.prng import XorShift64Star


def test_stream_is_deterministic():
    a = XorShift64Star(12345)
    b = XorShift64Star(12345)
    assert [a.next_word() for _ in range(20)] == [b.next_word() for _ in range(20)]


def test_zero_seed_is_normalized():
    zero = XorShift64Star(0)
    repl = XorShift64Star(0x9E3779B97F4A7C15)
    assert [zero.next_word() for _ in range(5)] == [repl.next_word() for _ in range(5)]


def test_seed_is_masked_to_64_bits():
    assert XorShift64Star(1 << 64 | 7).next_word() == XorShift64Star(7).next_word()


def test_words_stay_in_range():
    gen = XorShift64Star(99)
    for _ in range(1000):
        assert 0 <= gen.next_word() < (1 << 64)


def test_bit_is_top_bit_of_word():
    words = XorShift64Star(5)
    bits = XorShift64Star(5)
    for _ in range(64):
        assert bits.next_bit() == words.next_word() >> 63


def test_bits_match_word_expansion():
    gen = XorShift64Star(17)
    reference = XorShift64Star(17)
    expanded = []
    for _ in range(3):
        expanded.extend(int(c) for c in format(reference.next_word(), "064b"))
    got = gen.bits(150)
    assert got.dtype == np.uint8
    assert got.tolist() == expanded[:150]


def test_bytes_are_little_endian_words():
    gen = XorShift64Star(17)
    reference = XorShift64Star(17)
    expected = b"".join(reference.next_word().to_bytes(8, "little")
                        for _ in range(2))[:11]
    assert gen.bytes(11) == expected


def test_counts_validated():
    gen = XorShift64Star(1)
    with pytest.raises(ValueError):
        gen.bits(-1)
    with pytest.raises(ValueError):
        gen.bytes(-1)
    with pytest.raises(ValueError):
        gen.below(0)
    assert gen.bits(0).size == 0
    assert gen.bytes(0) == b""


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=0, max_value=2**64))
def test_below_respects_bound(bound, seed):
    gen = XorShift64Star(seed)
    for _ in range(5):
        assert 0 <= gen.below(bound) < bound


def test_below_covers_small_range():
    gen = XorShift64Star(3)
    seen = {gen.below(4) for _ in range(200)}
    assert seen == {0, 1, 2, 3}
