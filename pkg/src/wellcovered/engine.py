"""The dimension pipeline: maximal independent sets -> linear system -> rank.

A weighting w is well-covered when every maximal independent set has the
same weight sum.  Fixing the canonical first set M_0 as baseline, that is
the homogeneous system (M_i - M_0) . w = 0 for i >= 1, so the well-covered
space is the nullspace of the difference system and its dimension is
n - rank.  The baseline choice only permutes rows, so the rank (and the
canonical nullspace basis, which depends on the row space alone) does not
depend on it; M_0 is used so reports are byte-reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .exactlin import ExactMatrix, FieldSpec, Scalar, nullspace_basis, rank
from .graphs import Graph
from .mis import DEFAULT_MIS_LIMIT, MisList, enumerate_mis


@dataclass(frozen=True)
class WcdimReport:
    """Result of one well-covered dimension computation."""

    n: int
    field: FieldSpec
    mis_count: int
    wcdim: int
    basis: tuple[tuple[Scalar, ...], ...]
    diff_rank: int
    sum_rank: int | None
    elapsed: float


def build_difference_system(mis: MisList, baseline: int = 0) -> ExactMatrix:
    """(k-1) x n integer matrix with rows M_i - M_baseline in canonical order.

    Row entries are +1 on M_i \\ M_base, -1 on M_base \\ M_i, 0 elsewhere.
    """
    k = len(mis)
    if k == 0:
        raise InputError("difference system needs a nonempty MIS list")
    if not 0 <= baseline < k:
        raise InputError(f"baseline index {baseline} out of range for {k} sets")
    n = mis.graph_n
    base = set(mis[baseline])
    rows = []
    for i, s in enumerate(mis):
        if i == baseline:
            continue
        row = [0] * n
        for v in s:
            row[v] += 1
        for v in base:
            row[v] -= 1
        rows.append(row)
    return ExactMatrix.from_rows(rows, n)


def build_sum_system(mis: MisList) -> ExactMatrix:
    """k x n 0/1 incidence matrix; row i is the indicator vector of M_i."""
    if len(mis) == 0:
        raise InputError("sum system needs a nonempty MIS list")
    n = mis.graph_n
    rows = []
    for s in mis:
        row = [0] * n
        for v in s:
            row[v] = 1
        rows.append(row)
    return ExactMatrix.from_rows(rows, n)


def compute_wcdim(
    g: Graph,
    f: FieldSpec = FieldSpec(0),
    limit: int = DEFAULT_MIS_LIMIT,
    with_sum_rank: bool = False,
) -> WcdimReport:
    """Well-covered dimension of g over f, with the canonical space basis."""
    t0 = time.perf_counter()
    mis = enumerate_mis(g, limit)
    diff = build_difference_system(mis)
    r = rank(diff, f)
    basis = tuple(nullspace_basis(diff, f))
    sum_rank = rank(build_sum_system(mis), f) if with_sum_rank else None
    return WcdimReport(
        n=g.n,
        field=f,
        mis_count=len(mis),
        wcdim=g.n - r,
        basis=basis,
        diff_rank=r,
        sum_rank=sum_rank,
        elapsed=time.perf_counter() - t0,
    )


def is_well_covered_weighting(
    g: Graph,
    w: Sequence[Scalar],
    f: FieldSpec = FieldSpec(0),
    limit: int = DEFAULT_MIS_LIMIT,
) -> bool:
    """True iff every maximal independent set of g has the same w-sum in f."""
    if len(w) != g.n:
        raise InputError(f"weight vector length {len(w)} != n = {g.n}")
    p = f.characteristic
    sums = set()
    for s in enumerate_mis(g, limit):
        total: Scalar = sum((w[v] for v in s), start=Fraction(0) if p == 0 else 0)
        if p == 0:
            sums.add(Fraction(total))
        else:
            if isinstance(total, Fraction):
                if total.denominator % p == 0:
                    raise InputError(f"weight sum {total} has no residue mod {p}")
                total = total.numerator * pow(total.denominator, -1, p)
            sums.add(total % p)
        if len(sums) > 1:
            return False
    return True


@dataclass(frozen=True)
class PathStructureResult:
    """Outcome of the path weight-structure check."""

    ok: bool
    wcdim: int
    witness: str | None = None


def path_weight_structure(g: Graph, f: FieldSpec = FieldSpec(0)) -> PathStructureResult:
    """Check the weight structure of a path on n >= 5 vertices.

    Every basis vector w of the well-covered space must satisfy
    w[0] = w[1], w[2] = ... = w[n-3] = 0, and w[n-2] = w[n-1].
    """
    n = g.n
    if n < 5:
        raise InputError(f"path structure check needs n >= 5, got {n}")
    for v in range(n):
        expected = {u for u in (v - 1, v + 1) if 0 <= u < n}
        if set(g.adj[v]) != expected:
            raise InputError("graph is not a path with consecutive labels")
    report = compute_wcdim(g, f)
    for idx, w in enumerate(report.basis):
        if w[0] != w[1]:
            return PathStructureResult(False, report.wcdim, f"basis[{idx}]: w[0] != w[1]: {w}")
        if w[n - 2] != w[n - 1]:
            return PathStructureResult(False, report.wcdim, f"basis[{idx}]: w[n-2] != w[n-1]: {w}")
        for v in range(2, n - 2):
            if w[v] != 0:
                return PathStructureResult(
                    False, report.wcdim, f"basis[{idx}]: w[{v}] != 0: {w}"
                )
    return PathStructureResult(True, report.wcdim)
