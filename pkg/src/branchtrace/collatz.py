"""Half-or-triple-plus-one trajectories with branch recording.

Every step of a trajectory takes exactly one of two branches: halve an
even value (recorded as ``L``) or map an odd value to ``3n+1`` (recorded
as ``R``). The resulting L/R string pins down the whole computation for
that input, so it can be inverted: :func:`decode` walks the string
backwards from the terminal value and recovers the input.

All arithmetic is exact. Values routinely overshoot 64 bits, so inputs
and trajectory values are plain Python integers throughout; the batch
path in :func:`survey` uses int64 arrays only while provably safe and
falls back to exact scalar arithmetic otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError, InconsistentTrace

DEFAULT_MAX_STEPS = 100_000

L = "L"
R = "R"

# Largest int64 value whose odd step 3n+1 still fits in int64.
_INT64_STEP_GUARD = ((1 << 63) - 2) // 3
# Ranges starting above this go straight to the exact scalar path.
_INT64_INPUT_LIMIT = 1 << 62

_CHUNK = 1 << 17


class StopMode(enum.Enum):
    AT_ONE = "one"
    ON_REPEAT = "repeat"


class StopReason(enum.Enum):
    REACHED_ONE = "reached_one"
    REPEAT_DETECTED = "repeat_detected"
    STEP_CAP_EXCEEDED = "step_cap_exceeded"


@dataclass(frozen=True)
class StopRule:
    """When to stop iterating: at the value 1, or on any revisited value.

    ``max_steps`` caps every trajectory so the tool always terminates;
    hitting the cap is reported as a stop reason, not an error.
    """

    mode: StopMode = StopMode.AT_ONE
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise DomainError("max_steps must be a positive integer")

    @classmethod
    def at_one(cls, max_steps: int = DEFAULT_MAX_STEPS) -> "StopRule":
        return cls(StopMode.AT_ONE, max_steps)

    @classmethod
    def on_repeat(cls, max_steps: int = DEFAULT_MAX_STEPS) -> "StopRule":
        return cls(StopMode.ON_REPEAT, max_steps)


@dataclass(frozen=True)
class TraceRecord:
    """One trajectory: its input, branch string, and summary values."""

    n: int
    trace: str
    steps: int
    peak: int
    terminal: int
    stop_reason: StopReason

    @property
    def l_count(self) -> int:
        return self.trace.count(L)

    @property
    def r_count(self) -> int:
        return self.trace.count(R)


@dataclass(frozen=True)
class TraceSummary:
    """Per-input survey row: everything but the trace string itself."""

    n: int
    steps: int
    peak: int
    l_count: int
    stop_reason: StopReason


def _require_positive(n, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"{name} must be a positive integer, got {n!r}")


def step(n: int) -> tuple[int, str]:
    """One branch: even n halves (L branch), odd n maps to 3n+1 (R branch)."""
    _require_positive(n)
    if n & 1:
        return 3 * n + 1, R
    return n >> 1, L


def trace(n: int, rule: StopRule | None = None) -> TraceRecord:
    """Iterate from ``n`` until the stop rule fires or the step cap hits.

    Under ``AT_ONE`` iteration halts the moment the current value is 1,
    so ``trace(1)`` is the empty trace. Under ``ON_REPEAT`` it halts when
    the current value has already been visited in this trajectory.
    """
    _require_positive(n)
    if rule is None:
        rule = StopRule()
    at_one = rule.mode is StopMode.AT_ONE
    max_steps = rule.max_steps
    seen = None if at_one else {n}

    cur = n
    peak = n
    symbols: list[str] = []
    while True:
        if at_one and cur == 1:
            reason = StopReason.REACHED_ONE
            break
        if len(symbols) >= max_steps:
            reason = StopReason.STEP_CAP_EXCEEDED
            break
        if cur & 1:
            cur = 3 * cur + 1
            symbols.append(R)
        else:
            cur >>= 1
            symbols.append(L)
        if cur > peak:
            peak = cur
        if seen is not None:
            if cur in seen:
                reason = StopReason.REPEAT_DETECTED
                break
            seen.add(cur)

    return TraceRecord(
        n=n,
        trace="".join(symbols),
        steps=len(symbols),
        peak=peak,
        terminal=cur,
        stop_reason=reason,
    )


def decode(trace: str, terminal: int) -> int:
    """Walk a branch string backwards from ``terminal`` to its input.

    The last recorded symbol is undone first: an ``L`` came from the even
    predecessor ``2*current``; an ``R`` came from the odd predecessor
    ``(current - 1) / 3``, which must exist and be odd. A violated ``R``
    precondition raises :class:`InconsistentTrace` carrying the forward
    index of the failing symbol.
    """
    _require_positive(terminal, "terminal")
    for ch in trace:
        if ch not in (L, R):
            raise DomainError(f"invalid branch symbol {ch!r}")
    cur = terminal
    last = len(trace) - 1
    for k, sym in enumerate(reversed(trace)):
        index = last - k
        if sym == L:
            cur = 2 * cur
            continue
        if cur <= 1 or cur % 3 != 1:
            raise InconsistentTrace(
                f"step {index}: no odd predecessor for {cur}", index
            )
        prev = (cur - 1) // 3
        if prev % 2 == 0:
            raise InconsistentTrace(
                f"step {index}: predecessor {prev} of {cur} is even", index
            )
        cur = prev
    return cur


def replay(n: int, trace: str) -> tuple[int, int]:
    """Apply a branch string forward from ``n``; return (terminal, peak).

    Raises :class:`InconsistentTrace` if a symbol disagrees with the
    parity of the current value, i.e. the string does not describe the
    trajectory of ``n``.
    """
    _require_positive(n)
    cur = n
    peak = n
    for index, sym in enumerate(trace):
        odd = cur & 1
        if sym == L:
            if odd:
                raise InconsistentTrace(
                    f"step {index}: L branch taken at odd value {cur}", index
                )
            cur >>= 1
        elif sym == R:
            if not odd:
                raise InconsistentTrace(
                    f"step {index}: R branch taken at even value {cur}", index
                )
            cur = 3 * cur + 1
        else:
            raise DomainError(f"invalid branch symbol {sym!r}")
        if cur > peak:
            peak = cur
    return cur, peak


_REASON_CODES = (
    StopReason.REACHED_ONE,
    StopReason.REPEAT_DETECTED,
    StopReason.STEP_CAP_EXCEEDED,
)


@dataclass
class SurveyResult:
    """Columnar result of :func:`survey` over a contiguous range.

    Rows are in range order. Peaks that overflow int64 (possible only
    via the exact fallback path) are kept sparsely in ``big_peaks``.
    """

    lo: int
    hi: int
    rule: StopRule
    steps: np.ndarray
    l_count: np.ndarray
    peaks: np.ndarray
    stop_codes: np.ndarray
    big_peaks: dict[int, int]

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def peak_of(self, offset: int) -> int:
        big = self.big_peaks.get(offset)
        return big if big is not None else int(self.peaks[offset])

    def record(self, offset: int) -> TraceSummary:
        return TraceSummary(
            n=self.lo + offset,
            steps=int(self.steps[offset]),
            peak=self.peak_of(offset),
            l_count=int(self.l_count[offset]),
            stop_reason=_REASON_CODES[self.stop_codes[offset]],
        )

    def __iter__(self) -> Iterator[TraceSummary]:
        for offset in range(len(self)):
            yield self.record(offset)

    def max_steps(self) -> int:
        return int(self.steps.max())

    def max_peak(self) -> int:
        top = int(self.peaks.max())
        if self.big_peaks:
            top = max(top, max(self.big_peaks.values()))
        return top

    def non_reached_count(self) -> int:
        return int(np.count_nonzero(self.stop_codes))


def _summarize_scalar(n: int, rule: StopRule) -> tuple[int, int, int, int]:
    """Exact per-input summary (steps, peak, l_count, stop code)."""
    at_one = rule.mode is StopMode.AT_ONE
    seen = None if at_one else {n}
    cur = n
    peak = n
    steps = 0
    l_count = 0
    code = None
    while True:
        if at_one and cur == 1:
            code = 0
            break
        if steps >= rule.max_steps:
            code = 2
            break
        if cur & 1:
            cur = 3 * cur + 1
        else:
            cur >>= 1
            l_count += 1
        steps += 1
        if cur > peak:
            peak = cur
        if seen is not None:
            if cur in seen:
                code = 1
                break
            seen.add(cur)
    return steps, peak, l_count, code


def _finish_scalar(cur: int, budget: int) -> tuple[int, int, int, int]:
    """Finish an AT_ONE trajectory exactly from a mid-flight value.

    Returns (extra steps, peak from here, extra l_count, stop code).
    """
    peak = cur
    steps = 0
    l_count = 0
    while True:
        if cur == 1:
            return steps, peak, l_count, 0
        if steps >= budget:
            return steps, peak, l_count, 2
        if cur & 1:
            cur = 3 * cur + 1
        else:
            cur >>= 1
            l_count += 1
        steps += 1
        if cur > peak:
            peak = cur


def _survey_chunk_int64(
    lo: int, size: int, max_steps: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, dict[int, int]]:
    """AT_ONE summaries for [lo, lo+size) via batched int64 stepping.

    Every still-active trajectory advances one step per round, so the
    cap and step counts are exact. Any value whose odd step could
    overflow int64 is finished by the exact scalar path instead.
    """
    ns = np.arange(lo, lo + size, dtype=np.int64)
    steps = np.zeros(size, dtype=np.int64)
    l_count = np.zeros(size, dtype=np.int64)
    peaks = ns.copy()
    codes = np.zeros(size, dtype=np.uint8)
    big_peaks: dict[int, int] = {}

    idx = np.nonzero(ns != 1)[0]
    cur = ns[idx]
    taken = 0
    while idx.size:
        if taken >= max_steps:
            codes[idx] = 2
            break
        if int(cur.max()) > _INT64_STEP_GUARD:
            divert = cur > _INT64_STEP_GUARD
            for j, value in zip(idx[divert], cur[divert]):
                j = int(j)
                extra, peak_rest, extra_l, code = _finish_scalar(
                    int(value), max_steps - taken
                )
                steps[j] = taken + extra
                l_count[j] += extra_l
                codes[j] = code
                peak = max(int(peaks[j]), peak_rest)
                if peak <= np.iinfo(np.int64).max:
                    peaks[j] = peak
                else:
                    big_peaks[j] = peak
            keep = ~divert
            idx = idx[keep]
            cur = cur[keep]
            if not idx.size:
                break
        odd = (cur & 1).astype(bool)
        cur = np.where(odd, 3 * cur + 1, cur >> 1)
        taken += 1
        steps[idx] = taken
        l_count[idx] += ~odd
        peaks[idx] = np.maximum(peaks[idx], cur)
        done = cur == 1
        if done.any():
            idx = idx[~done]
            cur = cur[~done]
    return steps, l_count, peaks, codes, big_peaks


def survey(lo: int, hi: int, rule: StopRule | None = None) -> SurveyResult:
    """Summarize every trajectory for n in [lo, hi], in range order.

    The result is deterministic for a given (lo, hi, rule); internal
    chunking never reorders rows.
    """
    _require_positive(lo, "lo")
    _require_positive(hi, "hi")
    if lo > hi:
        raise DomainError(f"empty range: lo={lo} > hi={hi}")
    if rule is None:
        rule = StopRule()
    size = hi - lo + 1

    fast = rule.mode is StopMode.AT_ONE and hi <= _INT64_INPUT_LIMIT
    if fast:
        parts = []
        for chunk_lo in range(lo, hi + 1, _CHUNK):
            chunk_size = min(_CHUNK, hi - chunk_lo + 1)
            parts.append(
                (chunk_lo - lo, _survey_chunk_int64(chunk_lo, chunk_size, rule.max_steps))
            )
        steps = np.concatenate([p[1][0] for p in parts])
        l_count = np.concatenate([p[1][1] for p in parts])
        peaks = np.concatenate([p[1][2] for p in parts])
        codes = np.concatenate([p[1][3] for p in parts])
        big_peaks: dict[int, int] = {}
        for base, part in parts:
            for j, peak in part[4].items():
                big_peaks[base + j] = peak
    else:
        steps = np.zeros(size, dtype=np.int64)
        l_count = np.zeros(size, dtype=np.int64)
        peaks = np.zeros(size, dtype=np.int64)
        codes = np.zeros(size, dtype=np.uint8)
        big_peaks = {}
        int64_max = np.iinfo(np.int64).max
        for offset in range(size):
            n = lo + offset
            n_steps, peak, n_l, code = _summarize_scalar(n, rule)
            steps[offset] = n_steps
            l_count[offset] = n_l
            codes[offset] = code
            if peak <= int64_max:
                peaks[offset] = peak
            else:
                big_peaks[offset] = peak

    return SurveyResult(
        lo=lo,
        hi=hi,
        rule=rule,
        steps=steps,
        l_count=l_count,
        peaks=peaks,
        stop_codes=codes,
        big_peaks=big_peaks,
    )
