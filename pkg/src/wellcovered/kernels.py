"""Selects the compiled or the pure-Python kernel lane at import time.

The compiled lane (`_speedups`, built from Cython) is used when available;
set the environment variable WELLCOVERED_PURE_PYTHON=1 to force the pure
lane, e.g. for benchmarking one against the other.  Both lanes implement
identical contracts; `IMPLEMENTATION` names the active one.
"""

import os

from . import _kernels_py

if os.environ.get("WELLCOVERED_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION


def maximal_cliques(adj_masks, limit):
    """All maximal cliques of a bitmask-adjacency graph, as vertex bitmasks."""
    if _impl is not _kernels_py and len(adj_masks) > 64:
        # the compiled kernel packs vertex sets into one machine word
        return _kernels_py.maximal_cliques(adj_masks, limit)
    return _impl.maximal_cliques(adj_masks, limit)


def gf_rank(entries, rows, cols, p):
    """Rank of a rows x cols integer matrix over GF(p)."""
    return _impl.gf_rank(entries, rows, cols, p)
