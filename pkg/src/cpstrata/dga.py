"""Differentials on presented graded-commutative algebras.

A DgaSpec pairs a PresentedAlgebra with degree +1 values for its generators;
the differential extends by the graded Leibniz rule and descends to the
quotient once d(I) is contained in I.  Cohomology is computed degree by
degree as exact linear algebra on the quotient frames:

    rank H^q  =  dim ker(d_q) - rank(d_{q-1})

with explicit cocycle representatives taken in a complement of the
coboundaries.  Coboundary membership is decided inside the same row-reduced
frames used for the ranks, so verification of a candidate presentation of
the cohomology ring cannot disagree with the rank computation.

All arithmetic is exact rational; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .gradedalg import (
    GPolynomial,
    GeneratorTable,
    InhomogeneousError,
    PresentedAlgebra,
    SparseReducer,
    TableMismatchError,
    algebra_to_json,
)


class DifferentialError(ValueError):
    """A generator value breaks the degree +1 rule, or a check failed."""


@dataclass(frozen=True)
class CheckResult:
    """Boolean with a reason attached; falsy results name the offender."""

    ok: bool
    offender: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


class DgaSpec:
    """A differential on a presented algebra, given on generators.

    Generators missing from the mapping are closed.  Every value must be
    homogeneous of degree exactly one more than its generator; mixed-degree
    values are rejected here, at construction time.
    """

    def __init__(
        self,
        algebra: PresentedAlgebra,
        differential: Mapping[str, GPolynomial],
        degree_cap: int = 10,
    ):
        table = algebra.table
        values: dict[str, GPolynomial] = {}
        for name, value in differential.items():
            i = table.index(name)
            if value.table != table:
                raise TableMismatchError(
                    f"d({name}) lives over a different generator table"
                )
            if value.is_zero:
                continue
            if not value.is_homogeneous:
                raise InhomogeneousError(
                    f"d({name}) = {value.to_text()} is not homogeneous"
                )
            if value.degree() != table.degrees[i] + 1:
                raise DifferentialError(
                    f"d({name}) has degree {value.degree()}, "
                    f"expected {table.degrees[i] + 1}"
                )
            values[name] = value
        self.algebra = algebra
        self.table = table
        self.values = values
        self.degree_cap = int(degree_cap)
        self._dcache: dict[tuple, GPolynomial] = {}

    def generator_value(self, name: str) -> GPolynomial:
        self.table.index(name)
        return self.values.get(name, GPolynomial.zero(self.table))


def _monomial_differential(D: DgaSpec, mono) -> GPolynomial:
    cached = D._dcache.get(mono)
    if cached is not None:
        return cached
    table = D.table
    word = [name for name, e in zip(table.names, mono) for _ in range(e)]
    total = GPolynomial.zero(table)
    sign = 1
    for j, name in enumerate(word):
        dg = D.values.get(name)
        if dg is not None:
            prefix = GPolynomial.from_word(table, word[:j])
            suffix = GPolynomial.from_word(table, word[j + 1 :])
            total = total + sign * (prefix * dg * suffix)
        if table.degrees[table.index(name)] % 2:
            sign = -sign
    D._dcache[mono] = total
    return total


def differential(D: DgaSpec, p: GPolynomial) -> GPolynomial:
    """Leibniz extension of the generator values; linear over the rationals."""
    if p.table != D.table:
        raise TableMismatchError("polynomial over a different generator table")
    out = GPolynomial.zero(D.table)
    for mono, coeff in p.terms.items():
        out = out + coeff * _monomial_differential(D, mono)
    return out


def check_d_squared(D: DgaSpec) -> CheckResult:
    """d(d(g)) must vanish in the quotient for every generator g."""
    for name in D.table.names:
        g = GPolynomial.generator(D.table, name)
        dd = differential(D, differential(D, g))
        if dd.is_zero:
            continue
        if dd.degree() > D.degree_cap + 2:
            continue
        if not D.algebra.ideal_member(dd):
            return CheckResult(
                False, name, f"d(d({name})) = {dd.to_text()} is not in the ideal"
            )
    return CheckResult(True)


def check_ideal_stability(D: DgaSpec) -> CheckResult:
    """d must map the relation ideal into itself (degreewise, up to the cap).

    For a product r*m one has d(r*m) = d(r)*m +- r*d(m) and the second term
    is an ideal member outright, so stability reduces to d(r) in I for every
    listed relation r.
    """
    for r in D.algebra.relations:
        if r.degree() > D.degree_cap:
            continue
        dr = differential(D, r)
        if dr.is_zero or D.algebra.ideal_member(dr):
            continue
        return CheckResult(
            False,
            r.to_text(),
            f"d({r.to_text()}) = {dr.to_text()} leaves the ideal",
        )
    return CheckResult(True)


# ----------------------------------------------------- rational linear algebra


def _rref(rows: list[list[Fraction]], ncols: int):
    """In-place reduced row echelon; returns (echelon rows, pivot columns)."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        hit = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if hit is None:
            continue
        work[r], work[hit] = work[hit], work[r]
        piv = work[r][c]
        if piv != 1:
            work[r] = [v / piv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def _nullspace(columns: list[tuple], nrows: int) -> list[list[Fraction]]:
    """Kernel basis of the matrix whose j-th column is columns[j]."""
    ncols = len(columns)
    if ncols == 0:
        return []
    rows = [[columns[j][i] for j in range(ncols)] for i in range(nrows)]
    echelon, pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(echelon, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


# ----------------------------------------------------------------- cohomology


@dataclass
class CohomologyReport:
    """Degreewise ranks of a DGA with chosen cocycle representatives."""

    ranks: dict[int, int]
    representatives: dict[int, list[GPolynomial]]
    d_squared_ok: bool
    ideal_stable_ok: bool
    degree_cap: int

    def rank_list(self, upto: Optional[int] = None) -> list[int]:
        top = self.degree_cap if upto is None else upto
        return [self.ranks.get(q, 0) for q in range(top + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * r for q, r in self.ranks.items())

    def check_top_vanishing(self) -> CheckResult:
        """Finite-dimensional targets must have no classes at the cap edge."""
        for q in (self.degree_cap - 1, self.degree_cap):
            if self.ranks.get(q, 0):
                return CheckResult(
                    False,
                    str(q),
                    f"rank {self.ranks[q]} at degree {q} touches the cap "
                    f"{self.degree_cap}; raise the cap or expect infinite type",
                )
        return CheckResult(True)

    def to_json_dict(self) -> dict:
        return {
            "degree_cap": self.degree_cap,
            "d_squared_ok": self.d_squared_ok,
            "ideal_stable_ok": self.ideal_stable_ok,
            "ranks": {str(q): r for q, r in sorted(self.ranks.items())},
            "representatives": {
                str(q): [p.to_text() for p in reps]
                for q, reps in sorted(self.representatives.items())
            },
        }


class _QuotientDifferential:
    """Matrices of d on the quotient complement bases, built lazily."""

    def __init__(self, D: DgaSpec):
        self.D = D
        self._columns: dict[int, list[tuple]] = {}
        self._boundaries: dict[int, SparseReducer] = {}

    def columns(self, q: int) -> list[tuple]:
        """One coordinate column per complement monomial of degree q."""
        cols = self._columns.get(q)
        if cols is None:
            A = self.D.algebra
            frame = A.graded_basis(q)
            target = A.graded_basis(q + 1)
            cols = []
            for mono in frame.complement:
                image = differential(self.D, GPolynomial.monomial(A.table, mono))
                if image.is_zero:
                    cols.append(tuple(Fraction(0) for _ in target.complement))
                else:
                    cols.append(target.coordinates(image))
            self._columns[q] = cols
        return cols

    def rank(self, q: int) -> int:
        return self.boundary_reducer(q + 1).rank

    def boundary_reducer(self, q: int) -> SparseReducer:
        """Row space of im(d_{q-1}) in degree-q complement coordinates."""
        red = self._boundaries.get(q)
        if red is None:
            red = SparseReducer()
            if q >= 1:
                for col in self.columns(q - 1):
                    red.insert({i: c for i, c in enumerate(col) if c != 0})
            self._boundaries[q] = red
        return red

    def is_coboundary(self, q: int, coords) -> bool:
        row = {i: c for i, c in enumerate(coords) if c != 0}
        return self.boundary_reducer(q).member(row)


def _normalize_leading(p: GPolynomial) -> GPolynomial:
    lead = max(p.terms)
    return p * (1 / p.terms[lead])


def cohomology_ranks(D: DgaSpec) -> CohomologyReport:
    """Degreewise cohomology of the quotient DGA through the cap."""
    sq = check_d_squared(D)
    if not sq:
        raise DifferentialError(f"d^2 fails on generator {sq.offender}: {sq.detail}")
    st = check_ideal_stability(D)
    if not st:
        raise DifferentialError(f"ideal not d-stable at relation {st.offender}")

    A = D.algebra
    quot = _QuotientDifferential(D)
    ranks: dict[int, int] = {}
    reps: dict[int, list[GPolynomial]] = {}
    for q in range(D.degree_cap + 1):
        frame = A.graded_basis(q)
        dim_q = frame.quotient_dimension
        cols = quot.columns(q)
        kernel = _nullspace(cols, len(A.graded_basis(q + 1).complement))
        boundary = quot.boundary_reducer(q)
        rank_q = len(kernel) - boundary.rank
        ranks[q] = rank_q
        chosen: list[GPolynomial] = []
        scratch = SparseReducer()
        for row in boundary.rows.values():
            scratch.insert(dict(row))
        for v in kernel:
            residue = scratch.residue({i: c for i, c in enumerate(v) if c != 0})
            if not residue:
                continue
            scratch.insert(residue)
            poly = GPolynomial(
                A.table, [(frame.complement[i], c) for i, c in residue.items()]
            )
            chosen.append(_normalize_leading(poly))
        if len(chosen) != rank_q:
            raise DifferentialError(
                f"degree {q}: found {len(chosen)} independent cocycles for "
                f"rank {rank_q}"
            )
        reps[q] = chosen
    return CohomologyReport(ranks, reps, True, True, D.degree_cap)


def differential_matrix(D: DgaSpec, q: int):
    """Matrix of d_q on quotient bases, with row and column labels.

    Returns (rows, domain_labels, codomain_labels) where rows[i][j] is the
    coefficient of codomain monomial i in d(domain monomial j).  Intended for
    CSV export and external audit.
    """
    A = D.algebra
    domain = A.graded_basis(q).complement
    codomain = A.graded_basis(q + 1).complement
    cols = _QuotientDifferential(D).columns(q)
    rows = [[cols[j][i] for j in range(len(domain))] for i in range(len(codomain))]
    return (
        rows,
        [A.table.monomial_text(m) for m in domain],
        [A.table.monomial_text(m) for m in codomain],
    )


def dga_to_json(D: DgaSpec) -> dict:
    """JSON-ready description: presented algebra, differential, cap."""
    return {
        "algebra": algebra_to_json(D.algebra),
        "differential": {
            name: D.values[name].to_text() for name in sorted(D.values)
        },
        "degree_cap": D.degree_cap,
    }


# --------------------------------------------------------------- verification


def substitute(
    p: GPolynomial, mapping: Mapping[str, GPolynomial], target: GeneratorTable
) -> GPolynomial:
    """Evaluate p by sending each generator to its image polynomial.

    Images are multiplied in table order, so odd-degree bookkeeping is
    inherited from the target algebra's Koszul rule.
    """
    images = {}
    for name in p.table.names:
        img = mapping.get(name)
        if img is not None and img.table != target:
            raise TableMismatchError(f"image of {name} is over the wrong table")
        images[name] = img
    out = GPolynomial.zero(target)
    for mono, coeff in p.terms.items():
        term = GPolynomial.constant(target, coeff)
        for name, e in zip(p.table.names, mono):
            if e == 0:
                continue
            img = images[name]
            if img is None:
                raise ValueError(f"no image provided for generator {name!r}")
            for _ in range(e):
                term = term * img
        out = out + term
    return out


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of matching a candidate presentation against a DGA."""

    ok: bool
    failures: tuple[str, ...] = ()
    dims: tuple[tuple[int, int, int], ...] = field(default=(), repr=False)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def first_failure(self) -> Optional[str]:
        return self.failures[0] if self.failures else None


def verify_presentation(
    D: DgaSpec,
    P: PresentedAlgebra,
    gen_map: Mapping[str, GPolynomial],
) -> VerificationReport:
    """Certify that P presents the cohomology ring of D up to the cap.

    Passes iff every generator of P maps to a cocycle of its own degree,
    every relation of P maps into im(d) + ideal, and the graded dimensions
    of P agree with the computed ranks degree by degree.
    """
    failures: list[str] = []
    table = P.table
    for i, name in enumerate(table.names):
        img = gen_map.get(name)
        if img is None:
            failures.append(f"no image for generator {name}")
            continue
        if img.table != D.table:
            raise TableMismatchError(f"image of {name} is over the wrong table")
        if img.is_zero:
            continue
        if not img.is_homogeneous or img.degree() != table.degrees[i]:
            failures.append(
                f"generator {name}: image degree {img.degree()} != "
                f"{table.degrees[i]}"
            )
            continue
        d_img = differential(D, img)
        if not (d_img.is_zero or D.algebra.ideal_member(d_img)):
            failures.append(f"image of generator {name} is not a cocycle")
    if failures:
        return VerificationReport(False, tuple(failures))

    quot = _QuotientDifferential(D)
    for rel in P.relations:
        image = substitute(rel, gen_map, D.table)
        if image.is_zero:
            continue
        q = image.degree()
        if q > D.degree_cap:
            continue
        coords = D.algebra.graded_basis(q).coordinates(image)
        if not quot.is_coboundary(q, coords):
            failures.append(
                f"relation {rel.to_text()} does not map into im(d) + ideal"
            )
            break

    report = cohomology_ranks(D)
    dims = []
    for q in range(D.degree_cap + 1):
        dp = P.quotient_dimension(q)
        dm = report.ranks.get(q, 0)
        dims.append((q, dp, dm))
        if dp != dm:
            failures.append(f"degree {q}: presentation dim {dp} != model rank {dm}")
            break
    return VerificationReport(not failures, tuple(failures), tuple(dims))
