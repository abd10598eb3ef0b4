"""Rule 30 elementary cellular automaton.

Each new cell is ``left XOR (center OR right)``: when a cell and its
right-hand neighbor were both 0, the cell copies its left-hand
neighbor, otherwise it takes the opposite of that neighbor. Written as
the usual 8-entry lookup this is

    111->0  110->0  101->0  100->1  011->1  010->1  001->1  000->0

i.e. output byte 00011110 = rule number 30. The update is implemented
branch-free on whole rows: a row is stored as one Python integer with
cell i (counted from the left) at bit position ``width - 1 - i``, so a
row prints the same way it is drawn. Two boundary conventions are
supported: ``WRAP`` keeps a fixed width with cyclic neighbors, and
``EXPAND_ZERO`` grows the row by one zero-background cell per side per
step, which is how the familiar single-cell triangle develops.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceError
from .prng import XorShift64Star

RULE_NUMBER = 30

WIDTH_CAP = 1 << 20
STEP_CAP = 1 << 20


class BoundaryMode(enum.Enum):
    WRAP = "wrap"
    EXPAND_ZERO = "expand"


@dataclass(frozen=True)
class Row:
    """One generation: ``width`` cells packed into the integer ``bits``."""

    width: int
    bits: int

    def __post_init__(self):
        if not isinstance(self.width, int) or self.width < 1:
            raise DomainError(f"row width must be >= 1, got {self.width!r}")
        if not 0 <= self.bits < (1 << self.width):
            raise DomainError("row bits do not fit the declared width")

    @classmethod
    def from_bits(cls, cells) -> "Row":
        bits = 0
        width = 0
        for cell in cells:
            if cell not in (0, 1):
                raise DomainError(f"cell values must be 0 or 1, got {cell!r}")
            bits = (bits << 1) | cell
            width += 1
        if width == 0:
            raise DomainError("a row needs at least one cell")
        return cls(width, bits)

    @classmethod
    def from01(cls, text: str) -> "Row":
        if not text or set(text) - {"0", "1"}:
            raise DomainError("row text must be a non-empty string of 0/1")
        return cls(len(text), int(text, 2))

    @classmethod
    def single(cls, width: int = 1) -> "Row":
        """A lone 1 cell centered in an odd ``width``."""
        if not isinstance(width, int) or width < 1 or width % 2 == 0:
            raise DomainError(f"single-cell rows need an odd width, got {width!r}")
        return cls(width, 1 << (width // 2))

    def cell(self, i: int) -> int:
        if not 0 <= i < self.width:
            raise DomainError(f"cell index {i} outside width {self.width}")
        return (self.bits >> (self.width - 1 - i)) & 1

    def to01(self) -> str:
        return format(self.bits, f"0{self.width}b")

    def to_bit_array(self) -> np.ndarray:
        return np.frombuffer(self.to01().encode(), dtype=np.uint8) - ord("0")

    def ones(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class Grid:
    """Generations stacked oldest-first."""

    rows: tuple[Row, ...]
    mode: BoundaryMode

    @property
    def height(self) -> int:
        return len(self.rows)


def _step_bits(bits: int, width: int, mode: BoundaryMode) -> tuple[int, int]:
    """One update of a packed row; returns (new bits, new width)."""
    if mode is BoundaryMode.WRAP:
        mask = (1 << width) - 1
        left = (bits >> 1) | ((bits & 1) << (width - 1))
        right = ((bits << 1) | (bits >> (width - 1))) & mask
        return left ^ (bits | right), width
    # EXPAND_ZERO: embed the row with one background cell per side, then
    # the same shift alignment reads zeros past both old edges.
    center = bits << 1
    new_width = width + 2
    mask = (1 << new_width) - 1
    left = center >> 1
    right = (center << 1) & mask
    return (left ^ (center | right)) & mask, new_width


def step_row(row: Row, mode: BoundaryMode) -> Row:
    """Advance one generation under the given boundary convention."""
    bits, width = _step_bits(row.bits, row.width, mode)
    return Row(width, bits)


def _check_caps(initial: Row, steps: int, mode: BoundaryMode) -> None:
    if not isinstance(steps, int) or steps < 0:
        raise DomainError(f"steps must be a non-negative integer, got {steps!r}")
    if steps > STEP_CAP:
        raise ResourceError(f"steps {steps} exceeds cap {STEP_CAP}")
    final_width = initial.width
    if mode is BoundaryMode.EXPAND_ZERO:
        final_width += 2 * steps
    if final_width > WIDTH_CAP:
        raise ResourceError(f"width {final_width} exceeds cap {WIDTH_CAP}")


def evolve(initial: Row, steps: int, mode: BoundaryMode) -> Grid:
    """Grid of ``steps + 1`` rows, the initial row first."""
    _check_caps(initial, steps, mode)
    rows = [initial]
    bits, width = initial.bits, initial.width
    for _ in range(steps):
        bits, width = _step_bits(bits, width, mode)
        rows.append(Row(width, bits))
    return Grid(tuple(rows), mode)


def center_column(initial: Row, steps: int, mode: BoundaryMode) -> np.ndarray:
    """Bits at the initial center cell's site for generations 0..steps.

    The tracked site is cell ``width // 2`` of the initial row (for even
    widths that is the right one of the two middle cells). Under
    EXPAND_ZERO the site shifts by one index per generation as the row
    grows on the left. Rows are not retained, so long columns are cheap.
    """
    _check_caps(initial, steps, mode)
    center = initial.width // 2
    out = np.empty(steps + 1, dtype=np.uint8)
    bits, width = initial.bits, initial.width
    for t in range(steps + 1):
        if t > 0:
            bits, width = _step_bits(bits, width, mode)
        index = center if mode is BoundaryMode.WRAP else center + t
        out[t] = (bits >> (width - 1 - index)) & 1
    return out


def random_row(width: int, seed: int) -> Row:
    """Deterministic pseudorandom row; cell i is the i-th generator bit."""
    if not isinstance(width, int) or width < 1:
        raise DomainError(f"row width must be >= 1, got {width!r}")
    if width > WIDTH_CAP:
        raise ResourceError(f"width {width} exceeds cap {WIDTH_CAP}")
    gen = XorShift64Star(seed)
    bits = 0
    for _ in range(width):
        bits = (bits << 1) | gen.next_bit()
    return Row(width, bits)
