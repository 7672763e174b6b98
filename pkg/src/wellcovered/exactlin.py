"""Exact linear algebra over the rationals and over prime fields GF(p).

No floating point anywhere.  Characteristic-zero rank runs fraction-free
(Bareiss) elimination on integer rows, clearing rational denominators
row-wise first; intermediate values stay integral, so there is no rounding
and no rational blowup.  GF(p) elimination works on residues with one
modular inverse per pivot and is delegated to the kernel lane.

Nullspace bases are read off the reduced row echelon form, which makes them
canonical: free columns are taken in ascending order and each basis vector
carries a 1 in its own free column.  Since the RREF depends only on the row
space, the basis is stable under any row-order or scaling differences in
how the matrix was assembled.

Prime-power fields are deliberately not implemented: for integer matrices
(every system built here is one), row reduction never leaves the prime
subfield, so the rank over GF(p^h) equals the rank over GF(p).  FieldSpec
therefore accepts only characteristic 0 or a prime p < 2^31.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from . import kernels
from .errors import InputError

Scalar = Union[int, Fraction]

_MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin; the witness set covers everything below 2^31."""
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if p % q == 0:
            return p == q
    d = p - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field of scalars, identified by its characteristic (0 or a prime)."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        c = self.characteristic
        if c == 0:
            return
        if c >= _MAX_PRIME:
            raise InputError(f"prime characteristic must be below 2^31, got {c}")
        if not _is_prime(c):
            raise InputError(f"characteristic must be 0 or a prime, got {c}")

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of exact scalars (ints or Fractions), row-major."""

    rows: int
    cols: int
    entries: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Scalar]], cols: int | None = None) -> "ExactMatrix":
        rows = [tuple(r) for r in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise InputError("ragged rows")
        elif cols is None:
            cols = 0
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[tuple[Scalar, ...]]:
        return [self.row(i) for i in range(self.rows)]


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    """Row-wise denominator clearing; scaling a row never changes the row space."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        scale = lcm(*(x.denominator if isinstance(x, Fraction) else 1 for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def _residue_rows(m: ExactMatrix, p: int) -> list[int]:
    flat = []
    for x in m.entries:
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise InputError(f"entry {x} has no residue mod {p}")
            flat.append(x.numerator * pow(x.denominator, -1, p) % p)
        else:
            flat.append(x % p)
    return flat


def _bareiss_echelon(rows: list[list[int]]) -> list[list[int]]:
    """Fraction-free forward elimination; returns the nonzero echelon rows."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    rank = 0
    prev = 1
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        for r in range(rank + 1, nr):
            f = rows[r][c]
            row = rows[r]
            top = rows[rank]
            for j in range(c, nc):
                row[j] = (pv * row[j] - f * top[j]) // prev
        prev = pv
        rank += 1
        if rank == nr:
            break
    return rows[:rank]


def rank(m: ExactMatrix, f: FieldSpec) -> int:
    """Rank of m over the field; empty matrices have rank 0."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if f.characteristic == 0:
        return len(_bareiss_echelon(_integer_rows(m)))
    return kernels.gf_rank(_residue_rows(m, f.characteristic), m.rows, m.cols, f.characteristic)


def _rref(rows: list[list[Scalar]], p: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form in place; p = 0 means exact rationals."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if p == 0:
            inv = Fraction(1, 1) / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
        else:
            inv = pow(rows[r][c], -1, p)
            rows[r] = [x * inv % p for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                if p == 0:
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                else:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows[:r], pivots


def nullspace_basis(m: ExactMatrix, f: FieldSpec) -> list[tuple[Scalar, ...]]:
    """Canonical basis of the right nullspace of m over the field.

    Exactly cols - rank(m) vectors, one per free column in ascending order,
    each with a 1 in its free column.  Over characteristic 0 the entries are
    Fractions; over GF(p) they are residues in 0..p-1.
    """
    p = f.characteristic
    if m.rows == 0 or m.cols == 0:
        if p == 0:
            one, zero = Fraction(1), Fraction(0)
        else:
            one, zero = 1, 0
        return [
            tuple(one if j == c else zero for j in range(m.cols)) for c in range(m.cols)
        ]
    if p == 0:
        echelon = _bareiss_echelon(_integer_rows(m))
        work: list[list[Scalar]] = [[Fraction(x) for x in row] for row in echelon]
    else:
        flat = _residue_rows(m, p)
        work = [
            [flat[i * m.cols + j] for j in range(m.cols)]
            for i in range(m.rows)
        ]
    rref, pivots = _rref(work, p)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        if p == 0:
            vec: list[Scalar] = [Fraction(0)] * m.cols
            vec[fc] = Fraction(1)
            for i, pc in enumerate(pivots):
                vec[pc] = -rref[i][fc]
        else:
            vec = [0] * m.cols
            vec[fc] = 1
            for i, pc in enumerate(pivots):
                vec[pc] = (-rref[i][fc]) % p
        basis.append(tuple(vec))
    return basis


def kronecker(a: ExactMatrix, m: ExactMatrix) -> ExactMatrix:
    """Kronecker product a (x) m: entry ((i1*rm+i2),(j1*cm+j2)) = a[i1,j1]*m[i2,j2]."""
    rm, cm = m.rows, m.cols
    entries = []
    for i1 in range(a.rows):
        for i2 in range(rm):
            arow = a.row(i1)
            mrow = m.row(i2)
            for x in arow:
                entries.extend(x * y for y in mrow)
    return ExactMatrix(a.rows * rm, a.cols * cm, tuple(entries))


def reduce_first_row(m: ExactMatrix) -> ExactMatrix:
    """Subtract row 0 from every other row, then drop row 0."""
    if m.rows < 1:
        raise InputError("reduce_first_row needs at least one row")
    first = m.row(0)
    entries = []
    for i in range(1, m.rows):
        entries.extend(a - b for a, b in zip(m.row(i), first))
    return ExactMatrix(m.rows - 1, m.cols, tuple(entries))


def move_dependent_row_first(m: ExactMatrix, f: FieldSpec) -> ExactMatrix:
    """Swap a row lying in the span of the other rows to position 0.

    The first row (in order) that is linearly dependent on the rows before
    it is chosen; such a row exists exactly when rank(m) < rows.  If every
    row is independent the matrix is returned unchanged.
    """
    p = f.characteristic
    if p == 0:
        work = [[Fraction(x) for x in m.row(i)] for i in range(m.rows)]
    else:
        flat = _residue_rows(m, p)
        work = [[flat[i * m.cols + j] for j in range(m.cols)] for i in range(m.rows)]
    basis: list[tuple[int, list[Scalar]]] = []  # (pivot column, normalised row)
    for i, row in enumerate(work):
        row = list(row)
        for pc, brow in basis:
            if row[pc] != 0:
                fct = row[pc]
                if p == 0:
                    row = [a - fct * b for a, b in zip(row, brow)]
                else:
                    row = [(a - fct * b) % p for a, b in zip(row, brow)]
        lead = next((c for c, x in enumerate(row) if x != 0), None)
        if lead is None:
            order = [i] + [j for j in range(m.rows) if j != i]
            return ExactMatrix.from_rows([m.row(j) for j in order], m.cols)
        if p == 0:
            inv = Fraction(1, 1) / row[lead]
            row = [x * inv for x in row]
        else:
            inv = pow(row[lead], -1, p)
            row = [x * inv % p for x in row]
        basis.append((lead, row))
        basis.sort(key=lambda t: t[0])
    return m
