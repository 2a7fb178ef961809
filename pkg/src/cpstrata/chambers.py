"""Admissibility, wall signatures, and chamber enumeration for capacity vectors.

A capacity vector c is admissible when every exceptional class has strictly
positive area and the volume margin 1 - sum c_i^2 is positive.  The signs of
the areas of the negative wall classes cut the admissible set into convex
chambers; this module classifies a given c and enumerates all chambers by
exact rational feasibility checks (a simplex with a slack variable standing
in for strict inequalities; no floating point anywhere).

Conventions: capacities are sorted nonincreasing before any wall evaluation,
and an area tie (= 0) counts as the nonpositive side of the wall, matching the
inclusive ">= 1" rows of the classification tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence, Union

from .exactlp import feasible_point
from .lattice import (
    Capacities,
    H2Element,
    area,
    enumerate_exceptional,
    negative_wall_classes,
)

Relation = Literal["<", "<=", ">", ">="]
Boundary = Literal["strict", "inclusive"]

# internal inequality: (coeffs, rhs, strict) means sum a_i x_i < rhs (or <=)
_Ineq = tuple[tuple[Fraction, ...], Fraction, bool]


class AdmissibilityError(ValueError):
    def __init__(self, violator: Union[H2Element, str]):
        self.violator = violator
        super().__init__(f"inadmissible capacities, violated: {violator}")


class UnsupportedLabelError(ValueError):
    """Chamber labels are only defined for n <= 4."""


@dataclass(frozen=True)
class AdmissibilityResult:
    ok: bool
    violator: Optional[Union[H2Element, str]] = None  # H2Element or "volume"

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ChamberSignature:
    """Area signs over the canonical wall list; bit true <=> area > 0."""

    walls: tuple[H2Element, ...]
    bits: tuple[bool, ...]

    def __post_init__(self):
        if len(self.walls) != len(self.bits):
            raise ValueError("walls and bits must align")

    def __getitem__(self, wall: H2Element) -> bool:
        return self.bits[self.walls.index(wall)]

    def items(self):
        return tuple(zip(self.walls, self.bits))

    def true_count(self) -> int:
        return sum(self.bits)

    def bit_string(self) -> str:
        return "".join("T" if b else "F" for b in self.bits)

    def to_json_list(self) -> list[dict]:
        return [{"class": w.to_text(), "positive": b} for w, b in zip(self.walls, self.bits)]


@dataclass(frozen=True)
class ChamberRecord:
    signature: ChamberSignature
    witness: Capacities
    label: Optional[str]

    def to_json_dict(self) -> dict:
        return {
            "bits": self.signature.bit_string(),
            "signature": self.signature.to_json_list(),
            "witness": self.witness.to_json_list(),
            "label": self.label,
        }


@dataclass(frozen=True)
class LinearConstraintSystem:
    """Conjunction of rational half-space constraints sum a_i x_i rel b."""

    nvars: int
    constraints: tuple[tuple[tuple[Fraction, ...], Fraction, Relation], ...]

    def __init__(
        self,
        nvars: int,
        constraints: Iterable[tuple[Sequence[Fraction | int | str], Fraction | int | str, Relation]] = (),
    ):
        rows = []
        for coeffs, const, rel in constraints:
            coeffs = tuple(Fraction(a) for a in coeffs)
            if len(coeffs) != nvars:
                raise ValueError(f"coefficient vector length {len(coeffs)} != nvars {nvars}")
            if rel not in ("<", "<=", ">", ">="):
                raise ValueError(f"unknown relation {rel!r}")
            rows.append((coeffs, Fraction(const), rel))
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "constraints", tuple(rows))

    def _ineqs(self) -> list[_Ineq]:
        out: list[_Ineq] = []
        for coeffs, const, rel in self.constraints:
            if rel in ("<", "<="):
                out.append((coeffs, const, rel == "<"))
            else:
                out.append((tuple(-a for a in coeffs), -const, rel == ">"))
        return out


def _primitive_key(coeffs: tuple[Fraction, ...], rhs: Fraction):
    """Scale (coeffs, rhs) to a primitive integer vector for deduplication."""
    from math import gcd, lcm

    denoms = [x.denominator for x in coeffs] + [rhs.denominator]
    mult = lcm(*denoms) if denoms else 1
    ints = [int(x * mult) for x in coeffs] + [int(rhs * mult)]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def _dedupe(ineqs: Iterable[_Ineq]):
    """Merge duplicates (strict wins) and resolve constant rows; None = infeasible."""
    merged: dict[tuple, tuple[tuple[Fraction, ...], Fraction, bool]] = {}
    for coeffs, rhs, strict in ineqs:
        if all(a == 0 for a in coeffs):
            if rhs < 0 or (strict and rhs == 0):
                return None
            continue
        ck, rk = _primitive_key(coeffs, rhs)
        key = (ck, rk)
        prev = merged.get(key)
        if prev is None or (strict and not prev[2]):
            merged[key] = (coeffs, rhs, strict)
    return list(merged.values())


def _solve(ineqs: Iterable[_Ineq], nvars: int) -> Optional[tuple[Fraction, ...]]:
    rows = _dedupe(ineqs)
    if rows is None:
        return None
    return feasible_point(rows, nvars)


def _holds(ineq: _Ineq, point: Sequence[Fraction]) -> bool:
    coeffs, rhs, strict = ineq
    lhs = sum(a * x for a, x in zip(coeffs, point))
    return lhs < rhs if strict else lhs <= rhs


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def simplest_in_open(a: Fraction, b: Fraction) -> Fraction:
    """Smallest-denominator rational strictly between a and b (a < b)."""
    if not a < b:
        raise ValueError("need a < b")
    if b <= 0:
        return -simplest_in_open(-b, -a)
    if a < 0:
        return Fraction(0)
    fa = _floor(a)
    if a < fa + 1 < b:
        return Fraction(fa + 1)
    if a == fa:
        return fa + Fraction(1, _floor(Fraction(1) / (b - fa)) + 1)
    return fa + Fraction(1) / simplest_in_open(Fraction(1) / (b - fa), Fraction(1) / (a - fa))


def _pick_value(lo, lo_strict, hi, hi_strict) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(hi if not hi_strict else _floor(hi) - (1 if _floor(hi) == hi else 0))
    if hi is None:
        return Fraction(lo if not lo_strict else _floor(lo) + 1)
    if lo == hi:
        if lo_strict or hi_strict:
            raise ArithmeticError("empty interval surfaced during refinement")
        return lo
    if lo > hi:
        raise ArithmeticError("inconsistent interval surfaced during refinement")
    return simplest_in_open(lo, hi)


def _holds_all(ineqs: list[_Ineq], point: Sequence[Fraction]) -> bool:
    return all(_holds(row, point) for row in ineqs)


def _wiggle(point: Sequence[Fraction], ineqs: list[_Ineq], nvars: int):
    """One sweep of per-coordinate simplification with the others held fixed.

    Each coordinate moves to the smallest-denominator rational in the interval
    the remaining rows allow, so the point stays feasible throughout.
    """
    pt = list(point)
    for k in range(nvars):
        lo = hi = None
        lo_strict = hi_strict = False
        for coeffs, rhs, strict in ineqs:
            a = coeffs[k]
            if a == 0:
                continue
            rest = sum(coeffs[j] * pt[j] for j in range(nvars) if j != k)
            bound = (rhs - rest) / a
            if a > 0:
                if hi is None or bound < hi or (bound == hi and strict):
                    hi, hi_strict = bound, strict
            else:
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
        pt[k] = _pick_value(lo, lo_strict, hi, hi_strict)
    return tuple(pt)


def _simplify_point(
    point: tuple[Fraction, ...], ineqs: list[_Ineq], nvars: int
) -> tuple[Fraction, ...]:
    """Small-denominator feasible point near the given deep point.

    The slack-maximizing point sits away from every boundary, so snapping all
    coordinates to a common small denominator usually stays inside; the first
    q whose rounding passes the exact membership check wins.  If no q does,
    fall back to coordinate-wise simplification, and keep whichever candidate
    has the smallest worst denominator.
    """
    best = point
    for q in range(1, 65):
        cand = tuple(Fraction(round(x * q), q) for x in point)
        if _holds_all(ineqs, cand):
            best = cand
            break
    else:
        wiggled = _wiggle(point, ineqs, nvars)
        if max(x.denominator for x in wiggled) < max(x.denominator for x in best):
            best = wiggled
    return best


def feasible(sys: LinearConstraintSystem) -> bool:
    """Exact decision whether some rational point satisfies every constraint."""
    return _solve(sys._ineqs(), sys.nvars) is not None


def witness(sys: LinearConstraintSystem) -> Optional[tuple[Fraction, ...]]:
    """A rational point satisfying the system, with small denominators."""
    rows = _dedupe(sys._ineqs())
    if rows is None:
        return None
    point = feasible_point(rows, sys.nvars)
    if point is None:
        return None
    result = _simplify_point(point, rows, sys.nvars)
    assert _satisfies(sys, result)
    return result


def _satisfies(sys: LinearConstraintSystem, point: Sequence[Fraction]) -> bool:
    for coeffs, rhs, strict in sys._ineqs():
        lhs = sum(a * x for a, x in zip(coeffs, point))
        if lhs > rhs or (strict and lhs == rhs):
            return False
    return True


# ---------------------------------------------------------------------------
# admissibility and classification


def is_admissible(c: Capacities) -> AdmissibilityResult:
    """Strict positivity on every exceptional class plus the volume bound."""
    for u in enumerate_exceptional(c.n):
        if area(c, u) <= 0:
            return AdmissibilityResult(False, u)
    if c.volume_margin() <= 0:
        return AdmissibilityResult(False, "volume")
    return AdmissibilityResult(True)


def chamber_signature(c: Capacities) -> ChamberSignature:
    """Wall bits of the canonically sorted capacities; requires admissibility."""
    verdict = is_admissible(c)
    if not verdict:
        raise AdmissibilityError(verdict.violator)
    cs = c.sorted()
    walls = negative_wall_classes(c.n)
    return ChamberSignature(walls, tuple(area(cs, w) > 0 for w in walls))


def chamber_label(c: Capacities) -> str:
    """Row label of the classification tables (n <= 4 only)."""
    verdict = is_admissible(c)
    if not verdict:
        raise AdmissibilityError(verdict.violator)
    n = c.n
    if n <= 2:
        return "C_unique"
    if n == 3:
        return "big" if sum(c.values) >= 1 else "small"
    if n == 4:
        return f"C_{chamber_signature(c).true_count()}"
    raise UnsupportedLabelError(f"no chamber labels for n={n}; use chamber_signature")


def _label_from_signature(n: int, sig: ChamberSignature) -> str:
    """Same labels as chamber_label, read off the bits (works on cell closures)."""
    if n <= 2:
        return "C_unique"
    if n == 3:
        # the single wall is the line class; positive area means a small packing
        return "small" if sig.bits[0] else "big"
    return f"C_{sig.true_count()}"


def _is_pair_class(u: H2Element) -> bool:
    """L - E_i - E_j, the classes whose strictness the inclusive convention relaxes."""
    return u.degree_a == 1 and sorted(u.multiplicities, reverse=True) == [1, 1] + [0] * (u.n - 2)


def _admissibility_ineqs(n: int, boundary: Boundary) -> list[_Ineq]:
    """Open admissibility region intersected with the sorted cone c_1 >= ... >= c_n > 0.

    The volume bound is quadratic; for n in 2..5 it is implied by the strict
    linear constraints (the supremum of sum c_i^2 over the closed linear
    region is 1, attained only on excluded faces), and for n=1 it linearizes
    exactly to c_1 < 1.  Witnesses are volume-checked after the fact, so a
    hypothetical n >= 6 failure would surface as an error, not a wrong answer.
    """
    ineqs: list[_Ineq] = []
    zero = [Fraction(0)] * n

    def row(coeffs, rhs, strict):
        ineqs.append((tuple(coeffs), Fraction(rhs), strict))

    for i in range(n - 1):  # c_i >= c_{i+1}  <=>  c_{i+1} - c_i <= 0
        co = zero.copy()
        co[i + 1], co[i] = Fraction(1), Fraction(-1)
        row(co, 0, False)
    co = zero.copy()
    co[n - 1] = Fraction(-1)  # c_n > 0
    row(co, 0, True)
    for u in enumerate_exceptional(n):
        if u.degree_a == 0:
            continue  # basis classes: area = c_i > 0 already follows
        strict = not (boundary == "inclusive" and _is_pair_class(u))
        row([Fraction(r) for r in u.multiplicities], u.degree_a, strict)
    if n == 1:
        row([Fraction(1)], 1, True)  # exact linearization of the volume bound
    return ineqs


def _wall_ineq(u: H2Element, positive: bool) -> _Ineq:
    coeffs = tuple(Fraction(r) for r in u.multiplicities)
    if positive:  # area > 0  <=>  sum r_i c_i < a
        return (coeffs, Fraction(u.degree_a), True)
    return (tuple(-a for a in coeffs), Fraction(-u.degree_a), False)


def enumerate_chambers(n: int, boundary: Boundary = "strict") -> tuple[ChamberRecord, ...]:
    """All feasible wall signatures over the sorted admissible cone, with witnesses.

    Depth-first over the wall bits.  Each node inherits its parent's feasible
    point when that point already satisfies the new sign constraint (exactly
    one child does, so at most one simplex call happens per node), and any
    partial assignment whose system is infeasible prunes the whole subtree.

    The boundary convention decides which sign patterns count as feasible;
    witnesses are always drawn from the strictly admissible part of a pattern
    when it is nonempty (for n <= 5 it always is), so they round-trip through
    chamber_signature in either mode.
    """
    walls = negative_wall_classes(n)
    base = _admissibility_ineqs(n, boundary)
    strict_base = base if boundary == "strict" else _admissibility_ineqs(n, "strict")
    start = _solve(base, n)
    if start is None:
        return ()
    found: list[ChamberRecord] = []
    rows: list[_Ineq] = list(base)
    bits: list[bool] = []

    def leaf() -> None:
        wall_rows = rows[len(base):]
        deduped = _dedupe(strict_base + wall_rows)
        deep = None if deduped is None else feasible_point(deduped, n)
        interior = deep is not None
        if not interior:  # pattern lives only on the relaxed boundary
            deduped = _dedupe(rows)
            assert deduped is not None
            deep = feasible_point(deduped, n)
            assert deep is not None
        pt = _simplify_point(deep, deduped, n)
        cap = Capacities(pt)
        margin = cap.volume_margin()
        if margin < 0 or (interior and margin == 0):
            raise ArithmeticError(
                f"witness {pt} violates the volume bound; the linear relaxation "
                f"is not exact for n={n}"
            )
        sig = ChamberSignature(walls, tuple(bits))
        label = _label_from_signature(n, sig) if n <= 4 else None
        found.append(ChamberRecord(sig, cap, label))

    def descend(idx: int, point: tuple[Fraction, ...]) -> None:
        if idx == len(walls):
            leaf()
            return
        for positive in (True, False):
            extra = _wall_ineq(walls[idx], positive)
            rows.append(extra)
            bits.append(positive)
            if _holds(extra, point):
                descend(idx + 1, point)
            else:
                moved = _solve(rows, n)
                if moved is not None:
                    descend(idx + 1, moved)
            rows.pop()
            bits.pop()

    descend(0, start)
    return tuple(sorted(found, key=lambda rec: rec.signature.bits, reverse=True))
