"""Exact linear algebra over the rationals.

Everything here works on plain Python ints (arbitrary precision) or
fractions.Fraction; there is no floating point and hence no tolerance
anywhere.  Rank is computed by fraction-free Bareiss elimination after
splitting the matrix into connected components of its nonzero pattern —
the operators arising from block-diagonal group elements decompose into
many small blocks, and eliminating them separately keeps the integer
growth down.

The inner elimination loop exists twice: `bareiss_rank_pure` below and a
compiled twin in `liecheck._speedups` (built when Cython is available).
`bareiss_rank_fast` points at whichever is loaded; both are exported so
they can be benchmarked and cross-checked against each other.
"""

from fractions import Fraction
from math import lcm


def bareiss_rank_pure(m):
    """Rank of a list-of-rows integer matrix.  Mutates m."""
    nr = len(m)
    nc = len(m[0]) if nr else 0
    row = 0
    prev = 1
    for col in range(nc):
        if row >= nr:
            break
        piv = -1
        for r in range(row, nr):
            if m[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
        mrow = m[row]
        pivot = mrow[col]
        for r in range(row + 1, nr):
            mr = m[r]
            t = mr[col]
            # Sylvester identity: the division by the previous pivot is exact.
            for c in range(col + 1, nc):
                mr[c] = (pivot * mr[c] - t * mrow[c]) // prev
            mr[col] = 0
        prev = pivot
        row += 1
    return row


try:
    from liecheck._speedups import bareiss_rank as bareiss_rank_fast

    BACKEND = "compiled"
except ImportError:
    bareiss_rank_fast = bareiss_rank_pure
    BACKEND = "pure"


def _integer_rows(rows):
    out = []
    for row in rows:
        if any(isinstance(x, Fraction) for x in row):
            scale = lcm(*(x.denominator for x in map(Fraction, row)))
            out.append([int(x * scale) for x in map(Fraction, row)])
        else:
            out.append([int(x) for x in row])
    return out


def _components(rows, nc):
    """Split into blocks of rows/columns connected through nonzero entries."""
    parent = list(range(nc))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    supports = []
    for row in rows:
        sup = [c for c, x in enumerate(row) if x]
        supports.append(sup)
        for c in sup[1:]:
            ra, rb = find(sup[0]), find(c)
            if ra != rb:
                parent[rb] = ra

    by_root = {}
    for i, sup in enumerate(supports):
        if sup:
            by_root.setdefault(find(sup[0]), []).append(i)

    blocks = []
    for row_idx in by_root.values():
        cols = sorted({c for i in row_idx for c in supports[i]})
        remap = {c: j for j, c in enumerate(cols)}
        block = []
        for i in row_idx:
            packed = [0] * len(cols)
            for c in supports[i]:
                packed[remap[c]] = rows[i][c]
            block.append(packed)
        blocks.append(block)
    return blocks


def rank(rows, backend=None):
    """Exact rank of a matrix given as a list of equal-length rows."""
    rows = _integer_rows(rows)
    if not rows:
        return 0
    nc = len(rows[0])
    elim = {"pure": bareiss_rank_pure, "fast": bareiss_rank_fast, None: bareiss_rank_fast}[backend]
    return sum(elim(block) for block in _components(rows, nc))


def kernel_dim(rows, ncols, backend=None):
    """Dimension of {x : Mx = 0} for the ncols-column matrix M."""
    return ncols - rank(rows, backend=backend)
