# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef int* _to_buf(object vals, Py_ssize_t n) except NULL:
    cdef int* buf = <int*>malloc((n + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i = 0
    for v in vals:
        buf[i] = v
        i += 1
    return buf


def contains_pattern(vals, tau):
    cdef bint ab = tau[0] < tau[1]
    cdef bint bc = tau[1] < tau[2]
    cdef bint ac = tau[0] < tau[2]
    cdef Py_ssize_t n = len(vals)
    cdef Py_ssize_t i, j, k
    cdef int x, y, z
    cdef int* buf = _to_buf(vals, n)
    try:
        for i in range(n - 2):
            x = buf[i]
            for j in range(i + 1, n - 1):
                y = buf[j]
                if (x < y) != ab:
                    continue
                for k in range(j + 1, n):
                    z = buf[k]
                    if (y < z) == bc and (x < z) == ac:
                        return True
        return False
    finally:
        free(buf)


def ends_with_pattern(vals, tau):
    cdef bint ab = tau[0] < tau[1]
    cdef bint bc = tau[1] < tau[2]
    cdef bint ac = tau[0] < tau[2]
    cdef Py_ssize_t n = len(vals)
    cdef Py_ssize_t i, j
    cdef int x, y, z
    if n < 3:
        return False
    cdef int* buf = _to_buf(vals, n)
    try:
        z = buf[n - 1]
        for j in range(1, n - 1):
            y = buf[j]
            if (y < z) != bc:
                continue
            for i in range(j):
                x = buf[i]
                if (x < y) == ab and (x < z) == ac:
                    return True
        return False
    finally:
        free(buf)


def inversions(vals):
    cdef Py_ssize_t n = len(vals)
    cdef Py_ssize_t i, j
    cdef long count = 0
    cdef int* buf = _to_buf(vals, n)
    for i in range(n - 1):
        for j in range(i + 1, n):
            if buf[i] > buf[j]:
                count += 1
    free(buf)
    return count


def inversions_by_residue(vals, int mu):
    cdef Py_ssize_t n = len(vals)
    cdef Py_ssize_t a, b
    cdef int slot
    out = [0] * mu
    cdef int* buf = _to_buf(vals, n)
    for a in range(n - 1):
        slot = (buf[a] - 1) % mu
        for b in range(a + 1, n):
            if buf[a] > buf[b]:
                out[slot] += 1
    free(buf)
    return out


def word_inversions(bits):
    cdef long ones = 0
    cdef long count = 0
    for b in bits:
        if b:
            ones += 1
        else:
            count += ones
    return count


def path_area(str steps):
    cdef long height = 0
    cdef long area = 0
    cdef Py_UCS4 s
    for s in steps:
        if s == u"N":
            height += 1
        elif s == u"E":
            area += height
        else:
            raise ValueError(f"invalid step {s!r}")
    return area
