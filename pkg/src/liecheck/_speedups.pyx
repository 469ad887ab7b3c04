# cython: language_level=3
"""Compiled twin of liecheck._exact.bareiss_rank_pure.

Entries are Python ints (they overflow machine words under elimination),
so the arithmetic stays in object space; the win over the pure version is
the loop and indexing overhead.
"""


def bareiss_rank(list m):
    cdef Py_ssize_t nr = len(m)
    cdef Py_ssize_t nc = len(<list> m[0]) if nr else 0
    cdef Py_ssize_t row = 0
    cdef Py_ssize_t col, r, c, piv
    cdef list mr, mrow
    cdef object prev = 1
    cdef object pivot, t
    for col in range(nc):
        if row >= nr:
            break
        piv = -1
        for r in range(row, nr):
            if (<list> m[r])[col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
        mrow = <list> m[row]
        pivot = mrow[col]
        for r in range(row + 1, nr):
            mr = <list> m[r]
            t = mr[col]
            for c in range(col + 1, nc):
                mr[c] = (pivot * mr[c] - t * mrow[c]) // prev
            mr[col] = 0
        prev = pivot
        row += 1
    return row
