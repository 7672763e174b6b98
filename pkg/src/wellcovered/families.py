"""Deterministic generators for the named graph families under study.

Generators accept parameters below the ranges their dimension formulas
require (a UserWarning is emitted there), so the harness can probe edge
cases; the closed-form predictors in `formulas` enforce the strict ranges.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .graphs import Graph, new_graph


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance, e.g. FamilySpec('crown', (5,))."""

    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError(f"complete graph needs n >= 1, got {n}")
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"empty graph needs n >= 1, got {n}")
    return new_graph(n, [])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Blocks occupy contiguous index ranges in input order; edges join distinct blocks."""
    if not sizes or any(s < 1 for s in sizes):
        raise InputError(f"block sizes must be a nonempty list of positive ints, got {list(sizes)}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(starts[a], starts[a + 1]):
                for v in range(starts[b], starts[b + 1]):
                    edges.append((u, v))
    return new_graph(n, edges)


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with block sizes as equal as possible."""
    if r < 1 or r > n:
        raise InputError(f"turan graph needs 1 <= r <= n, got n={n}, r={r}")
    q, rem = divmod(n, r)
    return complete_multipartite([q + 1] * rem + [q] * (r - rem))


def turan_block_sizes(n: int, r: int) -> list[int]:
    if r < 1 or r > n:
        raise InputError(f"turan graph needs 1 <= r <= n, got n={n}, r={r}")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def crown(n: int) -> Graph:
    """Complete bipartite graph K_{n,n} minus a perfect matching.

    Parts are {0..n-1} and {n..2n-1}; i is adjacent to n+j exactly when i != j.
    """
    if n < 1:
        raise InputError(f"crown graph needs n >= 1, got {n}")
    if n < 3:
        warnings.warn(f"crown({n}) is below the range n >= 3 of its dimension formula")
    return new_graph(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def path(n: int) -> Graph:
    if n < 1:
        raise InputError(f"path needs n >= 1, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gear(n: int) -> Graph:
    """Rim vertices 0..2n-1 in a cycle; hub 2n adjacent to the even rim vertices."""
    if n < 3:
        raise InputError(f"gear graph needs n >= 3, got {n}")
    edges = [(i, (i + 1) % (2 * n)) for i in range(2 * n)]
    edges.extend((i, 2 * n) for i in range(0, 2 * n, 2))
    return new_graph(2 * n + 1, edges)


def petersen() -> Graph:
    """Standard Petersen graph: outer 5-cycle 0-4, inner pentagram 5-9, spokes i..5+i."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges.extend((5 + i, 5 + (i + 2) % 5) for i in range(5))
    edges.extend((i, 5 + i) for i in range(5))
    return new_graph(10, edges)


# kind -> (builder over the params tuple, expected arity; None means any length >= 1)
FAMILY_BUILDERS = {
    "complete": (lambda p: complete(*p), 1),
    "empty": (lambda p: empty_graph(*p), 1),
    "kpartite": (lambda p: complete_multipartite(list(p)), None),
    "turan": (lambda p: turan(*p), 2),
    "crown": (lambda p: crown(*p), 1),
    "path": (lambda p: path(*p), 1),
    "cycle": (lambda p: cycle(*p), 1),
    "gear": (lambda p: gear(*p), 1),
    "petersen": (lambda p: petersen(), 0),
}


def build_family(spec: FamilySpec) -> Graph:
    if spec.kind not in FAMILY_BUILDERS:
        raise InputError(f"unknown graph family {spec.kind!r}")
    builder, arity = FAMILY_BUILDERS[spec.kind]
    if arity is None:
        if not spec.params:
            raise InputError(f"family {spec.kind!r} needs at least one parameter")
    elif len(spec.params) != arity:
        raise InputError(f"family {spec.kind!r} takes {arity} parameter(s), got {len(spec.params)}")
    return builder(spec.params)
