import copy

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from branchtrace import dyncompose as dc
from branchtrace.errors import BlockLengthError, DomainError, KeyLengthError

keys = st.binary(min_size=32, max_size=32)
messages = st.binary(min_size=0, max_size=200)


def state_copy(state):
    clone = dc.CompositionState(*state.words())
    clone.trace = list(state.trace)
    clone.absorbed_bytes = state.absorbed_bytes
    return clone


# ------------------------------------------------------------------ init


def test_init_little_endian_layout():
    state = dc.init(bytes(range(32)))
    assert state.w0 == 0x0706050403020100
    assert state.w1 == 0x0F0E0D0C0B0A0908
    assert state.w2 == 0x1716151413121110
    assert state.w3 == 0x1F1E1D1C1B1A1918
    assert state.trace == []
    assert state.absorbed_bytes == 0


def test_init_zero_key():
    assert dc.init(bytes(32)).words() == (0, 0, 0, 0)


def test_init_is_deterministic():
    key = bytes(range(32))
    assert dc.init(key).words() == dc.init(key).words()


@pytest.mark.parametrize("bad", [b"", bytes(31), bytes(33), "0" * 32])
def test_init_rejects_bad_keys(bad):
    with pytest.raises(KeyLengthError):
        dc.init(bad)


# ---------------------------------------------------------------- rounds


def test_round_f_fixes_zero_state():
    state = dc.round_f(dc.init(bytes(32)))
    assert state.words() == (0, 0, 0, 0)


def test_round_g_on_zero_state():
    state = dc.round_g(dc.init(bytes(32)))
    assert state.words() == (
        0xA5A5A5A5A5A5A5A5,
        0,
        0,
        0x4B4B4B4B4B4B4B4B,
    )


def test_round_f_not_idempotent():
    state = dc.init(bytes(range(32)))
    once = dc.round_f(state_copy(state)).words()
    twice = dc.round_f(dc.round_f(state_copy(state))).words()
    assert once != twice


def test_rounds_stay_in_64_bits():
    state = dc.init(b"\xff" * 32)
    for _ in range(64):
        dc.round_f(state)
        dc.round_g(state)
    assert all(0 <= w < (1 << 64) for w in state.words())


# -------------------------------------------------------------- selection


def test_select_round_even_picks_f():
    state = dc.init(bytes(32))
    dc.select_round(state)
    assert state.trace == ["L"]
    assert state.words() == (0, 0, 0, 0)


def test_select_round_odd_picks_g():
    key = b"\x01" + bytes(31)
    state = dc.init(key)
    assert state.w0 == 1
    dc.select_round(state)
    assert state.trace == ["R"]


def test_sixteen_selections_reproducible():
    key = bytes(range(32))
    a = dc.init(key)
    b = dc.init(key)
    for _ in range(16):
        dc.select_round(a)
        dc.select_round(b)
    assert len(a.trace) == 16
    assert a.trace == b.trace
    assert a.words() == b.words()


# ---------------------------------------------------------------- absorb


def test_absorb_zero_block_is_pure_rounds():
    key = bytes(range(32))
    absorbed = dc.absorb(dc.init(key), bytes(32))
    rounds_only = dc.init(key)
    for _ in range(dc.ROUNDS_PER_BLOCK):
        dc.select_round(rounds_only)
    assert absorbed.words() == rounds_only.words()
    assert absorbed.trace == rounds_only.trace
    assert absorbed.absorbed_bytes == 32


def test_absorb_trace_grows_by_rounds_per_block():
    state = dc.init(bytes(32))
    dc.absorb(state, bytes(range(32)))
    dc.absorb(state, bytes(range(32)))
    assert len(state.trace) == 2 * dc.ROUNDS_PER_BLOCK


def test_absorb_distinguishes_blocks():
    a = dc.absorb(dc.init(bytes(32)), b"\x01" + bytes(31))
    b = dc.absorb(dc.init(bytes(32)), b"\x02" + bytes(31))
    assert a.words() != b.words()


@pytest.mark.parametrize("bad", [b"", bytes(31), bytes(33)])
def test_absorb_rejects_bad_blocks(bad):
    with pytest.raises(BlockLengthError):
        dc.absorb(dc.init(bytes(32)), bad)


# ---------------------------------------------------------------- digest


def test_digest_deterministic():
    key = bytes(range(32))
    msg = b"branch traces all the way down"
    assert dc.digest(key, msg) == dc.digest(key, msg)


def test_digest_empty_message_golden(golden_dir):
    expected = (golden_dir / "digest_empty_zero_key.txt").read_text().split()
    value, trace = dc.digest(bytes(32), b"")
    assert value.hex() == expected[0]
    assert trace == expected[1]


def test_digest_shape():
    value, trace = dc.digest(bytes(32), b"abc")
    assert len(value) == dc.DIGEST_LEN
    assert set(trace) <= {"L", "R"}


@pytest.mark.parametrize("length", [0, 1, 31, 32, 33, 64, 100])
def test_trace_length_depends_only_on_message_length(length):
    _, trace = dc.digest(bytes(32), bytes(length))
    assert len(trace) == dc.trace_length(length)
    _, other = dc.digest(bytes(range(32)), b"\xaa" * length)
    assert len(other) == len(trace)


def test_single_bit_flip_changes_digest():
    key = bytes(range(32))
    a, _ = dc.digest(key, bytes(32))
    b, _ = dc.digest(key, b"\x80" + bytes(31))
    assert a != b


def test_message_padding_is_unambiguous():
    key = bytes(32)
    # A message equal to another's padding must not collide.
    a, _ = dc.digest(key, b"\x01")
    b, _ = dc.digest(key, b"\x01\x80")
    assert a != b


@given(keys, messages)
def test_digest_trace_length_formula(key, message):
    value, trace = dc.digest(key, message)
    assert len(value) == 32
    assert len(trace) == dc.trace_length(len(message))


# ---------------------------------------------------------------- replay


def test_replay_reproduces_golden_digest():
    value, trace = dc.digest(bytes(32), b"")
    assert dc.replay(bytes(32), b"", trace) == value


@given(keys, messages)
@settings(max_examples=60)
def test_replay_reproduces_any_digest(key, message):
    value, trace = dc.digest(key, message)
    assert dc.replay(key, message, trace) == value


def test_replay_rejects_wrong_length_trace():
    with pytest.raises(DomainError):
        dc.replay(bytes(32), b"", "LR")


def test_replay_rejects_bad_symbols():
    _, trace = dc.digest(bytes(32), b"")
    with pytest.raises(DomainError):
        dc.replay(bytes(32), b"", "X" + trace[1:])


def test_replay_with_wrong_schedule_diverges():
    value, trace = dc.digest(bytes(32), b"")
    flipped = ("R" if trace[0] == "L" else "L") + trace[1:]
    assert dc.replay(bytes(32), b"", flipped) != value
