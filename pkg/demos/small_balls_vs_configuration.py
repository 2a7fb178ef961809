"""Three small balls behave like three points: compare the two models.

The small-ball embedding space is modeled by a torus algebra with one
weighted free circle; the three-point configuration space of the plane
has its own standard model built from diagonal classes.  Their Betti
numbers agree degree by degree, for every choice of circle weights.
"""

from cpstrata.ballmodels import iemb_model
from cpstrata.dga import cohomology_ranks
from cpstrata.kriz import KrizParams, kriz_model

WEIGHTS = [(1, 0), (1, 1), (2, -1), (3, 5)]


def main():
    conf = cohomology_ranks(kriz_model(KrizParams(2, 3))).rank_list(10)
    print("three-point configuration ranks:", conf)

    for w in WEIGHTS:
        D = iemb_model(3, "small", [w])
        ranks = cohomology_ranks(D).rank_list(10)
        marker = "==" if ranks == conf else "!="
        print(f"small balls, weight {w}: {ranks} {marker} configuration")


if __name__ == "__main__":
    main()
