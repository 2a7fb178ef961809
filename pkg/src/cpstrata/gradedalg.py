"""Finitely presented graded-commutative algebras over the rationals.

Generators carry positive degrees; odd-degree generators anticommute and
square to zero, even ones are central, and optional nilpotence bounds model
truncated polynomial rings.  Monomials are exponent tuples in table order,
polynomials are sparse rational combinations, and every per-degree question
(basis of the quotient, ideal membership, canonical representatives) is
answered by exact integer row reduction over the finite monomial basis of
that degree.  No Groebner machinery: all computations live below a small
degree cap, where spanning sets {relation x monomial} are already complete.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Optional, Sequence, Union

Monomial = tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class TableMismatchError(ValueError):
    """Operands built over different generator tables."""


class InhomogeneousError(ValueError):
    """A homogeneous polynomial was required."""


@dataclass(frozen=True)
class GeneratorTable:
    """Ordered generators with degrees and optional nilpotence bounds.

    The order is the normal form: monomials list exponents generator by
    generator.  A nilpotence bound k means the k-th power vanishes; odd
    generators implicitly carry bound 2.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    nilpotence: tuple[Optional[int], ...]

    def __init__(
        self,
        names: Sequence[str],
        degrees: Sequence[int],
        nilpotence: Optional[Sequence[Optional[int]]] = None,
    ):
        names = tuple(names)
        degrees = tuple(int(d) for d in degrees)
        nil = tuple(nilpotence) if nilpotence is not None else (None,) * len(names)
        if len(names) != len(degrees) or len(names) != len(nil):
            raise ValueError("names, degrees, and nilpotence must align")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for name in names:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"unusable generator name {name!r}")
        if any(d <= 0 for d in degrees):
            raise ValueError("generator degrees must be positive")
        if any(b is not None and b < 1 for b in nil):
            raise ValueError("nilpotence bounds must be >= 1")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "nilpotence", nil)

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None

    def is_odd(self, i: int) -> bool:
        return self.degrees[i] % 2 == 1

    def max_exponent(self, i: int) -> Optional[int]:
        """Largest allowed exponent for generator i, or None if unbounded."""
        cap = None
        if self.nilpotence[i] is not None:
            cap = self.nilpotence[i] - 1
        if self.is_odd(i):
            cap = 1 if cap is None else min(cap, 1)
        return cap

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def validate_monomial(self, mono: Monomial) -> None:
        if len(mono) != self.n:
            raise ValueError(f"monomial length {len(mono)} != {self.n} generators")
        for i, e in enumerate(mono):
            if e < 0:
                raise ValueError("negative exponent")
            cap = self.max_exponent(i)
            if cap is not None and e > cap:
                raise ValueError(
                    f"exponent {e} of {self.names[i]} exceeds its nilpotence bound"
                )

    def monomial_text(self, mono: Monomial) -> str:
        factors = []
        for name, e in zip(self.names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


@lru_cache(maxsize=None)
def monomials_of_degree(table: GeneratorTable, q: int) -> tuple[Monomial, ...]:
    """All normal-form monomials of total degree q, ascending lexicographic."""
    if q < 0:
        return ()

    def rec(i: int, remaining: int) -> list[Monomial]:
        if i == table.n:
            return [()] if remaining == 0 else []
        out: list[Monomial] = []
        d = table.degrees[i]
        top = remaining // d
        cap = table.max_exponent(i)
        if cap is not None:
            top = min(top, cap)
        for e in range(top + 1):
            for rest in rec(i + 1, remaining - e * d):
                out.append((e,) + rest)
        return out

    return tuple(rec(0, q))


def normal_form(
    table: GeneratorTable, word: Sequence[str], sign: int = 1
) -> Optional[tuple[int, Monomial]]:
    """Sort a generator word into table order with the Koszul sign.

    Returns (sign, monomial), or None when the word dies (an odd generator
    repeats, or a nilpotence bound is exceeded).  Each transposition of two
    odd-degree generators flips the sign; even generators move freely.
    """
    counts = [0] * table.n
    inversions = 0
    odd_seen: list[int] = []
    for symbol in word:
        i = table.index(symbol)
        if table.is_odd(i):
            inversions += sum(1 for j in odd_seen if j > i)
            odd_seen.append(i)
        counts[i] += 1
    for i, e in enumerate(counts):
        cap = table.max_exponent(i)
        if cap is not None and e > cap:
            return None
    return (sign * (-1 if inversions % 2 else 1), tuple(counts))


def _merge_monomials(
    table: GeneratorTable, m1: Monomial, m2: Monomial
) -> Optional[tuple[int, Monomial]]:
    """Product of two normal monomials: combined exponents and Koszul sign."""
    merged = tuple(a + b for a, b in zip(m1, m2))
    for i, e in enumerate(merged):
        cap = table.max_exponent(i)
        if cap is not None and e > cap:
            return None
    inversions = 0
    for j in range(table.n):
        if m2[j] and table.is_odd(j):
            inversions += sum(1 for i in range(j + 1, table.n) if m1[i] and table.is_odd(i))
    return (-1 if inversions % 2 else 1, merged)


class GPolynomial:
    """Sparse polynomial: normal-form monomials with exact rational coefficients."""

    __slots__ = ("table", "terms")

    def __init__(
        self,
        table: GeneratorTable,
        terms: Union[Mapping[Monomial, object], Iterable[tuple[Monomial, object]]] = (),
    ):
        data: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            table.validate_monomial(mono)
            c = data.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                data[mono] = c
            elif mono in data:
                del data[mono]
        self.table = table
        self.terms = data

    # ---- constructors

    @classmethod
    def zero(cls, table: GeneratorTable) -> "GPolynomial":
        return cls(table)

    @classmethod
    def constant(cls, table: GeneratorTable, value) -> "GPolynomial":
        return cls(table, [((0,) * table.n, value)])

    @classmethod
    def monomial(cls, table: GeneratorTable, mono: Monomial, coeff=1) -> "GPolynomial":
        return cls(table, [(tuple(mono), coeff)])

    @classmethod
    def generator(cls, table: GeneratorTable, name: str) -> "GPolynomial":
        i = table.index(name)
        return cls(table, [(tuple(1 if j == i else 0 for j in range(table.n)), 1)])

    @classmethod
    def from_word(cls, table: GeneratorTable, word: Sequence[str], coeff=1) -> "GPolynomial":
        nf = normal_form(table, word)
        if nf is None:
            return cls(table)
        sign, mono = nf
        return cls(table, [(mono, Fraction(coeff) * sign)])

    @classmethod
    def parse(cls, table: GeneratorTable, text: str) -> "GPolynomial":
        """Inverse of to_text; also accepts unsorted words like G13*G12."""
        s = text.replace(" ", "")
        if not s or s == "0":
            return cls(table)
        chunks = re.findall(r"[+-]?[^+-]+", s)
        if "".join(chunks) != s:
            raise ValueError(f"cannot parse polynomial text {text!r}")
        terms: list[tuple[Monomial, Fraction]] = []
        for chunk in chunks:
            sign = 1
            if chunk[0] == "+":
                chunk = chunk[1:]
            elif chunk[0] == "-":
                sign, chunk = -1, chunk[1:]
            if not chunk:
                raise ValueError(f"empty term in {text!r}")
            coeff = Fraction(sign)
            word: list[str] = []
            for factor in chunk.split("*"):
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    coeff *= Fraction(factor)
                    continue
                m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?", factor)
                if m is None:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                word.extend([m.group(1)] * int(m.group(2) or 1))
            nf = normal_form(table, word)
            if nf is not None:
                terms.append((nf[1], coeff * nf[0]))
        return cls(table, terms)

    # ---- structure

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        return len({self.table.monomial_degree(m) for m in self.terms}) <= 1

    def degree(self) -> Optional[int]:
        """Degree of a homogeneous polynomial; None for zero."""
        degs = {self.table.monomial_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise InhomogeneousError(f"mixed degrees {sorted(degs)} in {self.to_text()}")
        return degs.pop()

    def homogeneous_part(self, q: int) -> "GPolynomial":
        return GPolynomial(
            self.table,
            [(m, c) for m, c in self.terms.items() if self.table.monomial_degree(m) == q],
        )

    def _check(self, other: "GPolynomial") -> None:
        if self.table != other.table:
            raise TableMismatchError("polynomials over different generator tables")

    # ---- arithmetic

    def __add__(self, other: "GPolynomial") -> "GPolynomial":
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        return GPolynomial(self.table, out)

    def __sub__(self, other: "GPolynomial") -> "GPolynomial":
        return self + (-other)

    def __neg__(self) -> "GPolynomial":
        return GPolynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GPolynomial):
            self._check(other)
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    merged = _merge_monomials(self.table, m1, m2)
                    if merged is None:
                        continue
                    sign, mono = merged
                    s = out.get(mono, Fraction(0)) + sign * c1 * c2
                    if s:
                        out[mono] = s
                    elif mono in out:
                        del out[mono]
            return GPolynomial(self.table, out)
        return GPolynomial(self.table, {m: c * Fraction(other) for m, c in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GPolynomial)
            and self.table == other.table
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.table, tuple(sorted(self.terms.items()))))

    # ---- display

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            body = self.table.monomial_text(mono)
            if body == "1":
                mag = str(abs(c))
            elif abs(c) == 1:
                mag = body
            else:
                mag = f"{abs(c)}*{body}"
            if not parts:
                parts.append(mag if c > 0 else f"-{mag}")
            else:
                parts.append(f" + {mag}" if c > 0 else f" - {mag}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"<GPolynomial {self.to_text()}>"


def multiply(p: GPolynomial, q: GPolynomial) -> GPolynomial:
    """Graded-commutative product (function form of p * q)."""
    return p * q


class SparseReducer:
    """Exact row reduction over integer rows keyed by orderable column labels.

    A row's pivot is its largest column.  Stored rows are primitive integer
    vectors (gcd 1, positive pivot entry); insertion eliminates against
    existing pivots with cross-multiplied integer updates, so no rationals
    appear until a residue is requested.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot column -> primitive integer row

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self):
        return set(self.rows)

    @staticmethod
    def _primitive(row: dict) -> dict:
        g = 0
        for v in row.values():
            g = gcd(g, v)
        if g > 1:
            row = {c: v // g for c, v in row.items()}
        if row[max(row)] < 0:
            row = {c: -v for c, v in row.items()}
        return row

    @staticmethod
    def _integerize(row: Mapping) -> dict:
        clean = {c: Fraction(v) for c, v in row.items() if v}
        if not clean:
            return {}
        mult = lcm(*(v.denominator for v in clean.values()))
        return {c: int(v * mult) for c, v in clean.items()}

    def insert(self, row: Mapping):
        """Reduce the row and adjoin it; returns its pivot, or None if dependent."""
        r = self._integerize(row)
        while r:
            p = max(r)
            existing = self.rows.get(p)
            if existing is None:
                self.rows[p] = self._primitive(r)
                return p
            a, b = existing[p], r[p]
            merged = {}
            for c in set(r) | set(existing):
                v = r.get(c, 0) * a - existing.get(c, 0) * b
                if v:
                    merged[c] = v
            r = merged
        return None

    def residue(self, row: Mapping) -> dict:
        """Canonical representative of the row modulo the row space.

        Pivot columns are cleared from the largest down; the result is the
        unique coset member supported on pivot-free columns.
        """
        r = {c: Fraction(v) for c, v in row.items() if v}
        while True:
            hits = [c for c in r if c in self.rows]
            if not hits:
                return r
            c = max(hits)
            pivot_row = self.rows[c]
            f = r[c] / pivot_row[c]
            for cc, vv in pivot_row.items():
                s = r.get(cc, Fraction(0)) - f * vv
                if s:
                    r[cc] = s
                elif cc in r:
                    del r[cc]

    def member(self, row: Mapping) -> bool:
        return not self.residue(row)


@dataclass(frozen=True)
class GradedBasis:
    """Degree-q linear data of a presented algebra.

    monomials: every ambient normal-form monomial of degree q (ascending lex);
    complement: the pivot-free monomials, a basis of the quotient in degree q;
    the reducer holds the row space of {relation x monomial} products.
    """

    degree: int
    monomials: tuple[Monomial, ...]
    complement: tuple[Monomial, ...]
    ideal_dimension: int
    table: GeneratorTable = field(compare=False)
    reducer: SparseReducer = field(compare=False, repr=False)

    @property
    def quotient_dimension(self) -> int:
        return len(self.complement)

    def _index(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.monomials)}

    def to_row(self, p: GPolynomial) -> dict[int, Fraction]:
        index = self._index()
        row = {}
        for mono, c in p.terms.items():
            if mono not in index:
                raise InhomogeneousError(
                    f"{p.to_text()} is not homogeneous of degree {self.degree}"
                )
            row[index[mono]] = c
        return row

    def from_row(self, row: Mapping[int, Fraction]) -> GPolynomial:
        return GPolynomial(self.table, [(self.monomials[i], c) for i, c in row.items()])

    def ideal_basis(self) -> tuple[GPolynomial, ...]:
        rows = sorted(self.reducer.rows.items(), reverse=True)
        return tuple(self.from_row(r) for _, r in rows)

    def reduce(self, p: GPolynomial) -> GPolynomial:
        """Canonical representative of p in the quotient, on complement monomials."""
        return self.from_row(self.reducer.residue(self.to_row(p)))

    def coordinates(self, p: GPolynomial) -> tuple[Fraction, ...]:
        """Coefficients of reduce(p) over the complement basis."""
        reduced = self.reduce(p)
        return tuple(reduced.terms.get(m, Fraction(0)) for m in self.complement)

    def contains(self, p: GPolynomial) -> bool:
        return self.reduce(p).is_zero


class PresentedAlgebra:
    """Graded-commutative algebra given by generators and homogeneous relations."""

    def __init__(self, table: GeneratorTable, relations: Iterable[GPolynomial] = ()):
        rels = []
        for r in relations:
            if r.table != table:
                raise TableMismatchError("relation over a different generator table")
            if r.is_zero:
                continue
            if not r.is_homogeneous:
                raise InhomogeneousError(f"relation {r.to_text()} is not homogeneous")
            rels.append(r)
        self.table = table
        self.relations = tuple(rels)
        self._frames: dict[int, GradedBasis] = {}

    def graded_basis(self, q: int) -> GradedBasis:
        frame = self._frames.get(q)
        if frame is None:
            # setdefault keeps exactly one frame if two threads race here
            frame = self._frames.setdefault(q, self._build_frame(q))
        return frame

    def _build_frame(self, q: int) -> GradedBasis:
        monos = monomials_of_degree(self.table, q)
        index = {m: i for i, m in enumerate(monos)}
        reducer = SparseReducer()
        for rel in self.relations:
            d = rel.degree()
            if d is None or d > q:
                continue
            for shift in monomials_of_degree(self.table, q - d):
                product = rel * GPolynomial.monomial(self.table, shift)
                if product.is_zero:
                    continue
                reducer.insert({index[m]: c for m, c in product.terms.items()})
        complement = tuple(m for i, m in enumerate(monos) if i not in reducer.rows)
        return GradedBasis(q, monos, complement, reducer.rank, self.table, reducer)

    def quotient_dimension(self, q: int) -> int:
        return self.graded_basis(q).quotient_dimension

    def ideal_member(self, p: GPolynomial) -> bool:
        if p.table != self.table:
            raise TableMismatchError("polynomial over a different generator table")
        if p.is_zero:
            return True
        q = p.degree()  # raises InhomogeneousError on mixed input
        return self.graded_basis(q).contains(p)

    def reduce(self, p: GPolynomial) -> GPolynomial:
        """Canonical quotient representative (degreewise) of any polynomial."""
        if p.is_zero:
            return p
        out = GPolynomial.zero(self.table)
        degs = {self.table.monomial_degree(m) for m in p.terms}
        for q in sorted(degs):
            out = out + self.graded_basis(q).reduce(p.homogeneous_part(q))
        return out


def graded_basis(algebra: PresentedAlgebra, q: int) -> GradedBasis:
    return algebra.graded_basis(q)


def quotient_dimension(algebra: PresentedAlgebra, q: int) -> int:
    return algebra.quotient_dimension(q)


def ideal_member(algebra: PresentedAlgebra, p: GPolynomial) -> bool:
    return algebra.ideal_member(p)


# ---------------------------------------------------------------------------
# JSON presentation files


def algebra_to_json(algebra: PresentedAlgebra) -> dict:
    gens = []
    for name, deg, nil in zip(
        algebra.table.names, algebra.table.degrees, algebra.table.nilpotence
    ):
        entry: dict = {"name": name, "degree": deg}
        if nil is not None:
            entry["nilpotence"] = nil
        gens.append(entry)
    return {
        "generators": gens,
        "relations": [r.to_text() for r in algebra.relations],
    }


def algebra_from_json(data: Mapping) -> PresentedAlgebra:
    gens = data["generators"]
    table = GeneratorTable(
        [g["name"] for g in gens],
        [g["degree"] for g in gens],
        [g.get("nilpotence") for g in gens],
    )
    relations = [GPolynomial.parse(table, text) for text in data.get("relations", [])]
    return PresentedAlgebra(table, relations)


def dump_algebra(algebra: PresentedAlgebra, path) -> None:
    with open(path, "w") as fh:
        json.dump(algebra_to_json(algebra), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_algebra(path) -> PresentedAlgebra:
    with open(path) as fh:
        return algebra_from_json(json.load(fh))
