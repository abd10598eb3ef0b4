"""A toy keyed digest driven by state-selected round functions.

Two simple ARX rounds, f and g, are composed per absorbed block: before
each of the 16 rounds the least-significant bit of w0 picks which one
runs next, and the choice is appended to a branch trace (L for f, R for
g). The trace is returned alongside the digest; :func:`replay` forces
the same schedule and reproduces the digest bit-exactly, so the trace
is a complete description of the composed function for that input.

WARNING: this is a demonstration object for studying input-dependent
composition. It is NOT a cryptographic primitive, has had no
cryptanalysis, and must not be used to protect anything.
"""

from __future__ import annotations

from .errors import BlockLengthError, DomainError, KeyLengthError

KEY_LEN = 32
BLOCK_LEN = 32
DIGEST_LEN = 32
ROUNDS_PER_BLOCK = 16

G_CONSTANT = 0xA5A5A5A5A5A5A5A5

_MASK = (1 << 64) - 1


def _rotl(x: int, r: int) -> int:
    return ((x << r) | (x >> (64 - r))) & _MASK


class CompositionState:
    """Four 64-bit words plus the branch trace accumulated so far."""

    __slots__ = ("w0", "w1", "w2", "w3", "trace", "absorbed_bytes")

    def __init__(self, w0: int, w1: int, w2: int, w3: int):
        self.w0 = w0
        self.w1 = w1
        self.w2 = w2
        self.w3 = w3
        self.trace: list[str] = []
        self.absorbed_bytes = 0

    def words(self) -> tuple[int, int, int, int]:
        return (self.w0, self.w1, self.w2, self.w3)

    def trace_string(self) -> str:
        return "".join(self.trace)


def init(key: bytes) -> CompositionState:
    """State from a 32-byte key: w0..w3 little-endian, empty trace."""
    if not isinstance(key, (bytes, bytearray)):
        raise KeyLengthError(f"key must be bytes, got {type(key).__name__}")
    if len(key) != KEY_LEN:
        raise KeyLengthError(f"key must be exactly {KEY_LEN} bytes, got {len(key)}")
    words = [int.from_bytes(key[i : i + 8], "little") for i in range(0, 32, 8)]
    return CompositionState(*words)


def round_f(state: CompositionState) -> CompositionState:
    """Round f; updates are sequential, each line sees the ones above."""
    state.w0 = (state.w0 + state.w1) & _MASK
    state.w3 = _rotl(state.w3 ^ state.w0, 13)
    state.w2 = (state.w2 + state.w3) & _MASK
    state.w1 = _rotl(state.w1 ^ state.w2, 29)
    return state


def round_g(state: CompositionState) -> CompositionState:
    """Round g; same sequential convention as f."""
    state.w0 ^= G_CONSTANT
    state.w1 = (state.w1 + state.w3) & _MASK
    state.w2 = _rotl(state.w2 ^ state.w1, 7)
    state.w3 = _rotl((state.w3 + state.w0) & _MASK, 41)
    return state


def select_round(state: CompositionState) -> CompositionState:
    """One data-driven composition step: lsb(w0) picks f (0) or g (1)."""
    if state.w0 & 1:
        state.trace.append("R")
        return round_g(state)
    state.trace.append("L")
    return round_f(state)


def _xor_block(state: CompositionState, block: bytes) -> None:
    state.w0 ^= int.from_bytes(block[0:8], "little")
    state.w1 ^= int.from_bytes(block[8:16], "little")
    state.w2 ^= int.from_bytes(block[16:24], "little")
    state.w3 ^= int.from_bytes(block[24:32], "little")


def absorb(state: CompositionState, block: bytes) -> CompositionState:
    """XOR a 32-byte block into the words, then run 16 selected rounds."""
    if len(block) != BLOCK_LEN:
        raise BlockLengthError(
            f"block must be exactly {BLOCK_LEN} bytes, got {len(block)}"
        )
    _xor_block(state, block)
    for _ in range(ROUNDS_PER_BLOCK):
        select_round(state)
    state.absorbed_bytes += BLOCK_LEN
    return state


def _padded_blocks(message: bytes) -> list[bytes]:
    """Message blocks: 0x80-terminated padding plus a final length block.

    The length block is 16 zero bytes followed by the original message
    bit length as a little-endian 128-bit integer.
    """
    padded = bytes(message) + b"\x80"
    padded += b"\x00" * (-len(padded) % BLOCK_LEN)
    padded += b"\x00" * 16 + (8 * len(message)).to_bytes(16, "little")
    return [padded[i : i + BLOCK_LEN] for i in range(0, len(padded), BLOCK_LEN)]


def trace_length(message_len: int) -> int:
    """Rounds a digest of a message_len-byte message executes.

    Depends only on the length; the trace CONTENT depends on the data.
    """
    if not isinstance(message_len, int) or message_len < 0:
        raise DomainError(f"message length must be >= 0, got {message_len!r}")
    blocks = (message_len + 1 + BLOCK_LEN - 1) // BLOCK_LEN + 1
    return ROUNDS_PER_BLOCK * blocks


def _serialize(state: CompositionState) -> bytes:
    return b"".join(w.to_bytes(8, "little") for w in state.words())


def digest(key: bytes, message: bytes) -> tuple[bytes, str]:
    """32-byte keyed digest of the message plus its full branch trace."""
    state = init(key)
    for block in _padded_blocks(message):
        absorb(state, block)
    return _serialize(state), state.trace_string()


def replay(key: bytes, message: bytes, trace: str) -> bytes:
    """Digest again with the f/g schedule forced from ``trace``.

    No selection bits are consulted; the trace alone dictates the
    composition. Fed the trace that :func:`digest` returned for the
    same (key, message), this reproduces its digest bit-exactly.
    """
    blocks = _padded_blocks(message)
    if len(trace) != ROUNDS_PER_BLOCK * len(blocks):
        raise DomainError(
            f"trace length {len(trace)} does not match "
            f"{ROUNDS_PER_BLOCK * len(blocks)} scheduled rounds"
        )
    state = init(key)
    pos = 0
    for block in blocks:
        _xor_block(state, block)
        for _ in range(ROUNDS_PER_BLOCK):
            sym = trace[pos]
            pos += 1
            if sym == "L":
                round_f(state)
            elif sym == "R":
                round_g(state)
            else:
                raise DomainError(f"invalid branch symbol {sym!r}")
        state.absorbed_bytes += BLOCK_LEN
    return _serialize(state)
