"""Pure-Python implementations of the two inner-loop kernels.

Vertex sets are bitmasks held in Python integers, so this lane has no limit
on the vertex count.  The compiled lane in `_speedups` mirrors these
signatures exactly; `kernels` picks a lane at import time.
"""

IMPLEMENTATION = "python"


def maximal_cliques(adj_masks, limit):
    """Enumerate all maximal cliques of a graph given as bitmask adjacency.

    Bron-Kerbosch with pivoting; the pivot is the vertex of P | X with the
    most candidate neighbours (lowest index on ties).  Returns cliques as
    vertex bitmasks in discovery order.  Raises ValueError once more than
    `limit` cliques have been collected.
    """
    n = len(adj_masks)
    full = (1 << n) - 1
    out = []

    def expand(r, p, x):
        if p == 0 and x == 0:
            out.append(r)
            if len(out) > limit:
                raise ValueError("maximal clique count exceeds limit")
            return
        px = p | x
        pivot = -1
        best = -1
        m = px
        while m:
            v = (m & -m).bit_length() - 1
            cnt = (p & adj_masks[v]).bit_count()
            if cnt > best:
                best = cnt
                pivot = v
            m &= m - 1
        cand = p & ~adj_masks[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            expand(r | bit, p & adj_masks[v], x & adj_masks[v])
            p &= ~bit
            x |= bit
            cand &= cand - 1

    expand(0, full, 0)
    return out


def gf_rank(entries, rows, cols, p):
    """Rank of a rows x cols matrix over GF(p); entries are row-major ints."""
    a = [e % p for e in entries]
    rank = 0
    for c in range(cols):
        piv = -1
        for r in range(rank, rows):
            if a[r * cols + c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            pr, pp = rank * cols, piv * cols
            for j in range(c, cols):
                a[pr + j], a[pp + j] = a[pp + j], a[pr + j]
        base = rank * cols
        inv = pow(a[base + c], p - 2, p)
        for j in range(c, cols):
            a[base + j] = a[base + j] * inv % p
        for r in range(rank + 1, rows):
            f = a[r * cols + c]
            if f:
                off = r * cols
                for j in range(c, cols):
                    a[off + j] = (a[off + j] - f * a[base + j]) % p
        rank += 1
        if rank == rows:
            break
    return rank
