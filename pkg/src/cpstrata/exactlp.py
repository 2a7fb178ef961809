"""Exact rational linear feasibility for mixed strict/nonstrict systems.

A system {sum a_ij x_j REL_i b_i} with REL_i in {<, <=} is strictly feasible
iff the linear program

    maximize eps  subject to  A x + eps * strict_i <= b,  0 <= eps <= 1

has optimal value eps* > 0.  The program is solved by a two-phase dense
simplex over fractions.Fraction with Bland's rule (no cycling, no floating
point), which stays polynomial-sized on the tiny systems that chamber
enumeration produces, unlike Fourier-Motzkin whose intermediate systems can
blow up doubly exponentially.

Free variables are split x = u - v with u, v >= 0 to reach standard form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

# one inequality: (coefficients, rhs, strict) meaning sum a_j x_j < rhs (or <=)
Ineq = tuple[tuple[Fraction, ...], Fraction, bool]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Unbounded(Exception):
    """The objective can increase without limit over the feasible set."""


class _Simplex:
    """max c.z subject to A z <= b, z >= 0, via tableau with Bland's rule."""

    def __init__(self, a: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
        self.m = len(a)
        self.n = len(c)
        # columns: structural 0..n-1, slacks n..n+m-1, artificial n+m (phase 1 only)
        self.rows: list[list[Fraction]] = []
        for i in range(self.m):
            row = list(a[i]) + [_ZERO] * self.m + [_ZERO, b[i]]
            row[self.n + i] = _ONE
            self.rows.append(row)
        self.ncols = self.n + self.m + 1  # + artificial slot; rhs sits at index ncols
        self.basis = [self.n + i for i in range(self.m)]
        self.c = list(c)

    def _pivot(self, r: int, col: int) -> None:
        piv = self.rows[r][col]
        self.rows[r] = [v / piv for v in self.rows[r]]
        base = self.rows[r]
        for i, row in enumerate(self.rows):
            if i != r and row[col] != 0:
                f = row[col]
                self.rows[i] = [v if w == 0 else v - f * w for v, w in zip(row, base)]
        if self.obj[col] != 0:
            f = self.obj[col]
            self.obj = [v if w == 0 else v - f * w for v, w in zip(self.obj, base)]
        self.basis[r] = col

    def _bland_loop(self, active_cols: int) -> None:
        while True:
            enter = next((j for j in range(active_cols) if self.obj[j] > 0), None)
            if enter is None:
                return
            leave, best = None, None
            for i, row in enumerate(self.rows):
                if row[enter] > 0:
                    ratio = row[-1] / row[enter]
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        leave, best = i, ratio
            if leave is None:
                raise Unbounded
            self._pivot(leave, enter)

    def solve(self) -> Optional[dict[int, Fraction]]:
        """Basic optimal solution as {column: value}, or None if infeasible."""
        art = self.n + self.m
        if any(row[-1] < 0 for row in self.rows):
            # phase 1: max -x0 with x0 subtracted from every row
            for row in self.rows:
                row[art] = Fraction(-1)
            self.obj = [_ZERO] * self.ncols + [_ZERO]
            self.obj[art] = Fraction(-1)
            worst = min(range(self.m), key=lambda i: self.rows[i][-1])
            self._pivot(worst, art)
            self._bland_loop(self.ncols)
            if self.obj[-1] > 0:  # objective row stores -z, so z* = -obj[-1]
                return None
            if art in self.basis:
                # basic at zero; pivot it out on any nonzero entry (degenerate,
                # keeps feasibility) or, if the row is all zero, leave it inert
                r = self.basis.index(art)
                col = next((j for j in range(art) if self.rows[r][j] != 0), None)
                if col is not None:
                    self._pivot(r, col)
            for row in self.rows:
                row[art] = _ZERO
        # phase 2 objective, expressed through the current basis
        self.obj = list(self.c) + [_ZERO] * (self.m + 1) + [_ZERO]
        for i, bi in enumerate(self.basis):
            if self.obj[bi] != 0:
                f = self.obj[bi]
                self.obj = [v - f * w for v, w in zip(self.obj, self.rows[i])]
        self._bland_loop(self.n + self.m)
        return {bi: self.rows[i][-1] for i, bi in enumerate(self.basis)}


def feasible_point(ineqs: Sequence[Ineq], nvars: int) -> Optional[tuple[Fraction, ...]]:
    """A rational point satisfying every constraint (strictness included)."""
    if not ineqs:
        return tuple([_ZERO] * nvars)
    a_rows: list[list[Fraction]] = []
    b: list[Fraction] = []
    any_strict = False
    for coeffs, rhs, strict in ineqs:
        row = [Fraction(x) for x in coeffs]
        eps_col = _ONE if strict else _ZERO
        any_strict = any_strict or strict
        a_rows.append(row + [-x for x in row] + [eps_col])
        b.append(Fraction(rhs))
    a_rows.append([_ZERO] * (2 * nvars) + [_ONE])  # eps <= 1
    b.append(_ONE)
    c = [_ZERO] * (2 * nvars) + [_ONE]
    sol = _Simplex(a_rows, b, c).solve()
    if sol is None:
        return None
    eps = sol.get(2 * nvars, _ZERO)
    if any_strict and eps <= 0:
        return None
    return tuple(sol.get(j, _ZERO) - sol.get(nvars + j, _ZERO) for j in range(nvars))
