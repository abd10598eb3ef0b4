"""Putting bit streams in front of the statistical test battery.

Three streams: the rule 30 center column, a seeded xorshift generator,
and a plainly periodic impostor. The battery runs monobit, runs, and
serial tests; each report carries the statistic, the p-value, and the
verdict at the chosen significance level.
"""

from branchtrace import randstat, rule30
from branchtrace.prng import XorShift64Star


def show(title: str, stream) -> None:
    print(f"{title}:")
    print(f"  entropy: {randstat.shannon_entropy(stream):.5f} bits/symbol")
    for rep in randstat.battery(stream):
        verdict = "pass" if rep.passed else "FAIL"
        note = f"  ({rep.note})" if rep.note else ""
        print(f"  {rep.test_name:<10} statistic={rep.statistic:>10.4f} "
              f"p={rep.p_value:.4f}  {verdict}{note}")
    print()


def main() -> None:
    column = rule30.center_column(rule30.Row.single(), 4096,
                                  rule30.BoundaryMode.EXPAND_ZERO)
    show("Rule 30 center column, 4097 bits", column)

    stream = XorShift64Star(42).bits(4096)
    show("xorshift64* stream, seed 42, 4096 bits", stream)

    show("Alternating 0101... impostor, 4096 bits", "01" * 2048)

    print("The impostor sails through monobit (perfectly balanced) and is")
    print("demolished by the runs and serial tests; balance alone is a weak")
    print("notion of randomness. The deterministic rule 30 column is")
    print("indistinguishable from the seeded generator at this sample size.")


if __name__ == "__main__":
    main()
