"""A keyed digest whose round order is chosen by the data itself.

Two fixed mixing rounds, f and g, and one rule: before each round, the
low bit of the first state word picks which round runs (0 selects f,
1 selects g). The sequence of choices is the schedule, recorded as L/R
symbols. Knowing the key, the message, and the schedule lets replay()
rebuild the digest without re-deriving any choice.

This construction is a study object, not cryptography. Do not use it to
protect anything.
"""

from branchtrace import dyncompose


def main() -> None:
    key = bytes.fromhex("000102030405060708090a0b0c0d0e0f"
                        "101112131415161718191a1b1c1d1e1f")
    message = b"dynamic composition demo"

    value, schedule = dyncompose.digest(key, message)
    print(f"message: {message!r}")
    print(f"digest:  {value.hex()}")
    print(f"schedule ({len(schedule)} rounds): {schedule}")

    print()
    flipped = bytearray(message)
    flipped[0] ^= 0x01
    value2, schedule2 = dyncompose.digest(key, bytes(flipped))
    diff = sum(bin(a ^ b).count("1") for a, b in zip(value, value2))
    print("Flip one input bit and compare:")
    print(f"digest:  {value2.hex()}")
    print(f"schedule: {schedule2}")
    print(f"output bits changed: {diff}/256")
    same = sum(1 for a, b in zip(schedule, schedule2) if a == b)
    print(f"schedule positions unchanged: {same}/{len(schedule)}")

    print()
    replayed = dyncompose.replay(key, message, schedule)
    print(f"replay with the recorded schedule reproduces the digest: "
          f"{replayed == value}")

    wrong = ("L" if schedule[0] == "R" else "R") + schedule[1:]
    diverged = dyncompose.replay(key, message, wrong)
    print(f"replay with one forced wrong choice diverges: "
          f"{diverged != value}")

    print()
    print("The schedule is the program the input wrote for itself: the")
    print("digest is meaningless without it, and it is meaningless without")
    print("the input that produced it.")


if __name__ == "__main__":
    main()
