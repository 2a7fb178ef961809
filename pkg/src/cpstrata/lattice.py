"""Second homology of the n-fold blow-up of CP2 and its distinguished class sets.

Classes are written a*L - sum r_i*E_i in the standard basis (L, E_1, ..., E_n),
where the intersection form is diag(+1, -1, ..., -1).  Two finite families drive
everything downstream:

* exceptional classes (E.E = -1, K.E = 1), whose strict area positivity plus the
  volume bound characterises admissible capacity vectors;
* negative classes of square <= -2 drawn from the six degree-bounded shapes
  (aL with a <= 6, multiplicities in {1,2,3}), whose area signs cut the space of
  admissible capacities into stability chambers.

Both sets are tiny for n <= 8, so they are enumerated exhaustively and kept in a
fixed lexicographic order to make every downstream report reproducible.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

MAX_BLOWUPS = 8


class DimensionMismatchError(ValueError):
    """Raised when two lattice elements live over different n."""


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_BLOWUPS:
        raise ValueError(f"n must be in 1..{MAX_BLOWUPS}, got {n}")


@dataclass(frozen=True, order=True)
class H2Element:
    """a*L - sum r_i*E_i; ordering is lexicographic in (a, r) for determinism."""

    degree_a: int
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_n(len(self.multiplicities))
        object.__setattr__(self, "multiplicities", tuple(int(r) for r in self.multiplicities))

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    @classmethod
    def line(cls, n: int) -> "H2Element":
        _check_n(n)
        return cls(1, (0,) * n)

    @classmethod
    def exceptional(cls, i: int, n: int) -> "H2Element":
        """E_i, 1-based index."""
        _check_n(n)
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        return cls(0, tuple(-1 if j == i - 1 else 0 for j in range(n)))

    def self_intersection(self) -> int:
        return intersection(self, self)

    def pad(self, n: int) -> "H2Element":
        """Extend with zero multiplicities up to n blow-ups."""
        if n < self.n:
            raise ValueError("cannot shrink an element")
        return H2Element(self.degree_a, self.multiplicities + (0,) * (n - self.n))

    def to_text(self) -> str:
        parts = []
        if self.degree_a != 0:
            parts.append("L" if self.degree_a == 1 else f"{self.degree_a}L")
        for i, r in enumerate(self.multiplicities, start=1):
            if r == 0:
                continue
            term = f"E{i}" if abs(r) == 1 else f"{abs(r)}E{i}"
            parts.append(("- " if r > 0 else "+ ") + term)
        if not parts:
            return "0"
        text = " ".join(parts)
        if text.startswith("- "):
            return "-" + text[2:]
        if text.startswith("+ "):
            return text[2:]
        return text

    def to_json_dict(self) -> dict:
        return {"a": self.degree_a, "r": list(self.multiplicities)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "H2Element":
        return cls(int(data["a"]), tuple(int(r) for r in data["r"]))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Capacities:
    """Exact rational ball capacities; all strictly positive.

    Construction accepts any order; sorted() gives the canonical nonincreasing
    form that the chamber tables assume.
    """

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[Fraction | int | str]) -> None:
        vals = tuple(Fraction(v) for v in values)
        if not vals:
            raise ValueError("need at least one capacity")
        _check_n(len(vals))
        if any(v <= 0 for v in vals):
            raise ValueError(f"capacities must be strictly positive, got {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def sorted(self) -> "Capacities":
        return Capacities(tuple(sorted(self.values, reverse=True)))

    def volume_margin(self) -> Fraction:
        """1 - sum c_i^2, positive exactly when the packing fits by volume."""
        return Fraction(1) - sum(v * v for v in self.values)

    @classmethod
    def parse(cls, text: str) -> "Capacities":
        return cls(part.strip() for part in text.split(","))

    def to_json_list(self) -> list[str]:
        return [str(v) for v in self.values]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


def intersection(u: H2Element, v: H2Element) -> int:
    if u.n != v.n:
        raise DimensionMismatchError(f"mixed lattices: n={u.n} vs n={v.n}")
    return u.degree_a * v.degree_a - sum(r * s for r, s in zip(u.multiplicities, v.multiplicities))


def anticanonical(n: int) -> H2Element:
    """-K = 3L - E_1 - ... - E_n."""
    _check_n(n)
    return H2Element(3, (1,) * n)


def is_exceptional_numerical(u: H2Element) -> bool:
    return intersection(u, u) == -1 and intersection(anticanonical(u.n), u) == 1


@lru_cache(maxsize=None)
def enumerate_exceptional(n: int) -> tuple[H2Element, ...]:
    """All exceptional classes with a in [0,6], r_i in [-1,3], lexicographic.

    Vectorized scan over the full integer box (7 * 5^n candidates); the
    surviving classes are re-checked in exact integer arithmetic.
    """
    _check_n(n)
    grids = np.meshgrid(*([np.arange(-1, 4)] * n), indexing="ij")
    rvecs = np.stack([g.ravel() for g in grids], axis=1)  # (5^n, n)
    rsum = rvecs.sum(axis=1)
    rsq = (rvecs * rvecs).sum(axis=1)
    found: list[H2Element] = []
    for a in range(0, 7):
        mask = (a * a - rsq == -1) & (3 * a - rsum == 1)
        for row in rvecs[mask]:
            cand = H2Element(a, tuple(int(x) for x in row))
            assert is_exceptional_numerical(cand)
            found.append(cand)
    return tuple(sorted(found))


def _negative_shape_instances(n: int) -> Iterable[H2Element]:
    """All instantiations of the six degree <= 6 shapes over index subsets.

    Shape data: coefficient of L, multiplicities for a distinguished index set
    (2s and 3s), and multiplicity 1 (or 2 for the quintic shape) on a free
    subset of the remaining indices.
    """
    indices = range(n)
    # (a, heavy coefficient, heavy count, light coefficient)
    shapes = (
        (1, 0, 0, 1),  # L - sum E_i
        (2, 0, 0, 1),  # 2L - sum E_i
        (3, 2, 1, 1),  # 3L - 2E_m - sum E_i
        (4, 2, 3, 1),  # 4L - 2E - 2E - 2E - sum E_i
        (5, 1, 2, 2),  # 5L - E - E - sum 2E_i
        (6, 3, 1, 2),  # 6L - 3E_m - sum 2E_i
    )
    for a, heavy_coeff, heavy_count, light_coeff in shapes:
        for heavy in itertools.combinations(indices, heavy_count):
            rest = [i for i in indices if i not in heavy]
            for size in range(len(rest) + 1):
                for light in itertools.combinations(rest, size):
                    r = [0] * n
                    for i in heavy:
                        r[i] = heavy_coeff
                    for i in light:
                        r[i] = light_coeff
                    yield H2Element(a, tuple(r))


@lru_cache(maxsize=None)
def negative_wall_classes(n: int) -> tuple[H2Element, ...]:
    """Classes of self-intersection <= -2 from the degree-bounded shapes.

    Their area zero-loci are the walls between stability chambers.
    """
    _check_n(n)
    keep = {
        cand
        for cand in _negative_shape_instances(n)
        if cand.self_intersection() <= -2 and all(r >= 0 for r in cand.multiplicities)
    }
    return tuple(sorted(keep))


@lru_cache(maxsize=None)
def _negative_shape_set(n: int) -> frozenset[H2Element]:
    return frozenset(_negative_shape_instances(n))


def matches_negative_shape(u: H2Element) -> bool:
    """True when u is some instantiation of the six shapes (any square)."""
    return u in _negative_shape_set(u.n)


def area(c: Capacities, u: H2Element) -> Fraction:
    """Symplectic area a - sum c_i r_i of u under the blow-up form for c."""
    if len(c) != u.n:
        raise DimensionMismatchError(f"capacities length {len(c)} vs n={u.n}")
    return Fraction(u.degree_a) - sum(ci * ri for ci, ri in zip(c.values, u.multiplicities))


def parse_h2(text: str) -> H2Element:
    """Inverse of H2Element.to_text / to_json_dict (accepts either form)."""
    text = text.strip()
    if text.startswith("{"):
        return H2Element.from_json_dict(json.loads(text))
    tokens = text.replace("-", " - ").replace("+", " + ").split()
    a = 0
    rs: dict[int, int] = {}
    sign = 1
    for tok in tokens:
        if tok == "-":
            sign = -1
            continue
        if tok == "+":
            sign = 1
            continue
        if tok.endswith("L"):
            coeff = tok[:-1]
            a = sign * (int(coeff) if coeff else 1)
        elif "E" in tok:
            coeff_txt, idx_txt = tok.split("E")
            coeff = int(coeff_txt) if coeff_txt else 1
            # stored as a*L - sum r_i E_i, so a minus sign means r_i > 0
            rs[int(idx_txt)] = -sign * coeff
        else:
            raise ValueError(f"cannot parse term {tok!r} in {text!r}")
        sign = 1
    n = max(rs) if rs else 1
    return H2Element(a, tuple(rs.get(i, 0) for i in range(1, n + 1)))
