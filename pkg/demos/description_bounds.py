"""Counting arguments: traces cannot be shorter than what they describe.

A trace with k halvings can only undo a factor of 2^k, so any n needs at
least floor(log2 n) halvings to get down to 1. In the other direction, d
binary branch choices can label at most 2^d distinct behaviors. Both
bounds are checked over a real range here.
"""

import math

from branchtrace import bounds


def main() -> None:
    print("Bits needed to write n, versus halvings its trajectory spends:")
    print(f"  {'n':>8} {'bits':>5} {'trace len':>9} {'halvings':>8}")
    report = bounds.bound_report(1, 2**16)
    for n in (1, 2, 27, 255, 256, 6171, 65535):
        rec = next(r for r in report.records() if r.n == n)
        print(f"  {rec.n:>8} {rec.b_bits:>5} {rec.r_symbols:>9} {rec.l_count:>8}")

    print()
    print(f"Over all n in [1, {report.hi}]:")
    print(f"  inputs where halvings < bits - 1: {len(report.violations)}")
    print(f"  mean trace length: {report.mean_trace_len:.2f} symbols")
    print(f"  log2 of the range size: {report.log2_set_size:.2f} bits")
    print("  Mean trace length exceeds the bits of the range: the traces")
    print("  are long enough to name every input, as they must be, since")
    print("  distinct inputs never share a (trace, terminal) pair.")

    print()
    print("Branch choices as labels: depth d yields 2^d distinct words.")
    for d in (1, 2, 3):
        labels = bounds.composition_labels(d)
        joined = ", ".join(f"{word}={branches}" for word, branches in labels)
        print(f"  depth {d}: {bounds.paths_at_depth(d):>2} paths: {joined}")

    print()
    n = 2**20 + 12345
    print(f"description_bits({n}) = {bounds.description_bits(n)} "
          f"(= floor(log2 n) + 1 = {math.floor(math.log2(n)) + 1})")


if __name__ == "__main__":
    main()
