"""Branch traces of hailstone trajectories, and how to read them back.

Every trajectory under the 3n+1 map writes down which branch it took at
each step: L for a halving, R for an odd step. That string plus the
terminal value is a complete description of the starting number, and
decode() proves it by walking the string backwards.
"""

from branchtrace import collatz


def main() -> None:
    print("A few short trajectories and their branch traces:")
    for n in (6, 7, 27):
        rec = collatz.trace(n)
        shown = rec.trace if len(rec.trace) <= 40 else rec.trace[:37] + "..."
        print(f"  n={n:<3} steps={rec.steps:<4} peak={rec.peak:<6} trace={shown}")

    print()
    rec = collatz.trace(27)
    print(f"The famous n=27 run: {rec.steps} steps, peak {rec.peak}.")
    back = collatz.decode(rec.trace, rec.terminal)
    print(f"Decoding its {len(rec.trace)}-symbol trace from terminal "
          f"{rec.terminal} recovers n={back}.")

    print()
    print("The trace is the trajectory's own description of itself: the")
    print("input fully determines the branch string, and the branch string")
    print("(with the terminal) fully determines the input.")

    print()
    print("Surveying n in [1, 100000] with one vectorized pass:")
    result = collatz.survey(1, 100_000)
    print(f"  all reached 1: {result.non_reached_count() == 0}")
    print(f"  longest trajectory: {result.max_steps()} steps")
    print(f"  highest peak: {result.max_peak()}")

    print()
    print("Stopping on a repeat instead of at 1 exposes the 4-2-1 loop:")
    rec = collatz.trace(1, collatz.StopRule.on_repeat())
    print(f"  n=1 under repeat detection: trace={rec.trace!r}, "
          f"terminal={rec.terminal}, reason={rec.stop_reason.value}")


if __name__ == "__main__":
    main()
