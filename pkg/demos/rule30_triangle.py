"""Rule 30 from a single cell: simple local rule, complicated output.

The update rule is three gates wide: new = left XOR (center OR right).
Run it from one black cell and the left edge stays regular while the
center fills with aperiodic structure. The center column is the
interesting part; the randomness demo feeds it to the test battery.
"""

from branchtrace import rule30


def main() -> None:
    print("The whole rule, as a truth table:")
    for bits in range(7, -1, -1):
        left, center, right = (bits >> 2) & 1, (bits >> 1) & 1, bits & 1
        row = rule30.Row.from_bits([left, center, right])
        out = rule30.step_row(row, rule30.BoundaryMode.WRAP).cell(1)
        print(f"  {left}{center}{right} -> {out}")

    print()
    print("Thirty generations from a single cell (expanding background):")
    grid = rule30.evolve(rule30.Row.single(), 30, rule30.BoundaryMode.EXPAND_ZERO)
    final_width = grid.rows[-1].width
    for row in grid.rows:
        pad = (final_width - row.width) // 2
        print("  " + " " * pad + row.to01().replace("0", " ").replace("1", "#"))

    column = rule30.center_column(rule30.Row.single(), 30,
                                  rule30.BoundaryMode.EXPAND_ZERO)
    print()
    print(f"Center column of those generations: "
          f"{''.join(str(b) for b in column.tolist())}")

    print()
    print("On a ring (wrap mode) the width stays fixed; width 11, seed 1:")
    start = rule30.random_row(11, 1)
    for row in rule30.evolve(start, 8, rule30.BoundaryMode.WRAP).rows:
        print("  " + row.to01().replace("0", ".").replace("1", "#"))


if __name__ == "__main__":
    main()
