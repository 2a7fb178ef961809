"""Graded dimensions of the four-ball stabilizer classifying space.

The ring is presented by four degree-2 classes, one per ball, and two
degree-5 classes, subject to quadratic relations identifying all the
pairwise diagonal classes and to relations tying the odd generators to
differences of the even ones.  After degree 3 the dimensions settle
into a period-2 pattern.
"""

from cpstrata.ballmodels import four_ball_stabilizer_presentation


def main():
    P = four_ball_stabilizer_presentation()
    print("generators:", ", ".join(
        f"{name} (deg {deg})" for name, deg in zip(P.table.names, P.table.degrees)
    ))
    print("relations:")
    for rel in P.relations:
        print("   ", rel.to_text())
    dims = [P.quotient_dimension(q) for q in range(15)]
    print("graded dimensions, degrees 0..14:", dims)


if __name__ == "__main__":
    main()
