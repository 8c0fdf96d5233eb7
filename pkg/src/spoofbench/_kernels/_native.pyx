# cython: language_level=3
"""Compiled twin of ``_reference``. Must match it bit-for-bit."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, floor, sin

cnp.import_array()


def warp_patch(pixels, double cx, double cy, double theta, int size, double fill):
    """See ``_reference.warp_patch``. Same arithmetic, per-pixel loop."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] img = \
        np.ascontiguousarray(pixels, dtype=np.float64)
    cdef Py_ssize_t h = img.shape[0]
    cdef Py_ssize_t w = img.shape[1]
    cdef int half = size // 2
    cdef double c = cos(theta)
    cdef double s = sin(theta)

    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] out = \
        np.empty((size, size), dtype=np.float64)

    cdef Py_ssize_t i, j, xi, yi
    cdef double dx, dy, sx, sy, fx, fy, v00, v01, v10, v11, x0, y0
    for i in range(size):
        dy = <double>(i - half)
        for j in range(size):
            dx = <double>(j - half)
            sx = cx + dx * c - dy * s
            sy = cy + dx * s + dy * c
            if sx >= 0.0 and sx <= w - 1.0 and sy >= 0.0 and sy <= h - 1.0:
                x0 = floor(sx)
                if x0 > w - 2.0:
                    x0 = w - 2.0
                y0 = floor(sy)
                if y0 > h - 2.0:
                    y0 = h - 2.0
                xi = <Py_ssize_t>x0
                yi = <Py_ssize_t>y0
                fx = sx - xi
                fy = sy - yi
                v00 = img[yi, xi]
                v01 = img[yi, xi + 1]
                v10 = img[yi + 1, xi]
                v11 = img[yi + 1, xi + 1]
                out[i, j] = (1.0 - fy) * ((1.0 - fx) * v00 + fx * v01) \
                    + fy * ((1.0 - fx) * v10 + fx * v11)
            else:
                out[i, j] = fill
    return out


cdef inline unsigned char _at(unsigned char[:, ::1] m, Py_ssize_t y, Py_ssize_t x,
                              Py_ssize_t h, Py_ssize_t w) noexcept nogil:
    if y < 0 or y >= h or x < 0 or x >= w:
        return 0
    return m[y, x]


cdef int _zs_pass(unsigned char[:, ::1] m, unsigned char[:, ::1] flags,
                  Py_ssize_t h, Py_ssize_t w, bint first) noexcept nogil:
    cdef Py_ssize_t y, x
    cdef unsigned char p2, p3, p4, p5, p6, p7, p8, p9
    cdef int b, a, deleted = 0
    for y in range(h):
        for x in range(w):
            if m[y, x] == 0:
                flags[y, x] = 0
                continue
            p2 = _at(m, y - 1, x, h, w)
            p3 = _at(m, y - 1, x + 1, h, w)
            p4 = _at(m, y, x + 1, h, w)
            p5 = _at(m, y + 1, x + 1, h, w)
            p6 = _at(m, y + 1, x, h, w)
            p7 = _at(m, y + 1, x - 1, h, w)
            p8 = _at(m, y, x - 1, h, w)
            p9 = _at(m, y - 1, x - 1, h, w)
            b = p2 + p3 + p4 + p5 + p6 + p7 + p8 + p9
            if b < 2 or b > 6:
                flags[y, x] = 0
                continue
            a = 0
            if p2 == 0 and p3 == 1: a += 1
            if p3 == 0 and p4 == 1: a += 1
            if p4 == 0 and p5 == 1: a += 1
            if p5 == 0 and p6 == 1: a += 1
            if p6 == 0 and p7 == 1: a += 1
            if p7 == 0 and p8 == 1: a += 1
            if p8 == 0 and p9 == 1: a += 1
            if p9 == 0 and p2 == 1: a += 1
            if a != 1:
                flags[y, x] = 0
                continue
            if first:
                if (p2 and p4 and p6) or (p4 and p6 and p8):
                    flags[y, x] = 0
                    continue
            else:
                if (p2 and p4 and p8) or (p2 and p6 and p8):
                    flags[y, x] = 0
                    continue
            flags[y, x] = 1
            deleted += 1
    for y in range(h):
        for x in range(w):
            if flags[y, x]:
                m[y, x] = 0
    return deleted


def thin(mask):
    """See ``_reference.thin``."""
    cdef cnp.ndarray[cnp.uint8_t, ndim=2, mode="c"] out = \
        np.ascontiguousarray(mask, dtype=np.uint8).copy()
    cdef cnp.ndarray[cnp.uint8_t, ndim=2, mode="c"] flags = \
        np.zeros_like(out)
    cdef Py_ssize_t h = out.shape[0]
    cdef Py_ssize_t w = out.shape[1]
    cdef int changed
    while True:
        changed = _zs_pass(out, flags, h, w, True)
        changed += _zs_pass(out, flags, h, w, False)
        if changed == 0:
            return out
