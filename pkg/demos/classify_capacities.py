"""Classify a handful of capacity vectors into their stability chambers.

Each vector is sorted, tested for admissibility (positive area on every
exceptional class, volume within the unit), and, when admissible, mapped
to the sign pattern it induces on the negative wall classes.
"""

from cpstrata.chambers import chamber_label, chamber_signature, is_admissible
from cpstrata.lattice import Capacities

SAMPLES = [
    "1/3,1/3,1/3,1/3",
    "1/2,1/4,1/4,1/4",
    "2/5,2/5,3/10,1/5",
    "2/5,2/5,2/5,1/10",
    "3/10,3/10,3/10,3/10",
    "6/25,6/25,6/25,6/25",
    "1/2,1/2,1/2",
    "11/10",
]


def main():
    for text in SAMPLES:
        caps = Capacities.parse(text)
        verdict = is_admissible(caps)
        if not verdict:
            print(f"{text:>24}  inadmissible (violates {verdict.violator})")
            continue
        sig = chamber_signature(caps)
        label = chamber_label(caps)
        print(f"{text:>24}  {label:<9} bits={sig.bit_string() or '-'}")


if __name__ == "__main__":
    main()
