# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled im2col / col2im kernels.

Same contract and column layout as py_kernels; float32 and float64.
"""

import numpy as np

cimport cython
cimport numpy as cnp

cnp.import_array()

ctypedef fused real:
    float
    double

NAME = "cython"


def im2col(cnp.ndarray x, int k):
    if x.dtype == np.float32:
        return _im2col[float](np.ascontiguousarray(x, dtype=np.float32), k)
    return _im2col[double](np.ascontiguousarray(x, dtype=np.float64), k)


def col2im(cnp.ndarray cols, shape, int k):
    cdef int n = shape[0], c = shape[1], h = shape[2], w = shape[3]
    if cols.dtype == np.float32:
        return _col2im[float](np.ascontiguousarray(cols, dtype=np.float32), n, c, h, w, k)
    return _col2im[double](np.ascontiguousarray(cols, dtype=np.float64), n, c, h, w, k)


cdef _im2col(real[:, :, :, ::1] x, int k):
    cdef int n = x.shape[0], c = x.shape[1], h = x.shape[2], w = x.shape[3]
    cdef int p = (k - 1) // 2
    cdef int i, j, di, dj, ni, ci, si, sj
    out_np = np.zeros((n, c * k * k, h * w), dtype=np.float32 if real is float else np.float64)
    cdef real[:, :, ::1] out = out_np
    with nogil:
        for ni in range(n):
            for ci in range(c):
                for di in range(k):
                    for dj in range(k):
                        for i in range(h):
                            si = i + di - p
                            if si < 0 or si >= h:
                                continue
                            for j in range(w):
                                sj = j + dj - p
                                if sj < 0 or sj >= w:
                                    continue
                                out[ni, ci * k * k + di * k + dj, i * w + j] = x[ni, ci, si, sj]
    return out_np


cdef _col2im(real[:, :, ::1] cols, int n, int c, int h, int w, int k):
    cdef int p = (k - 1) // 2
    cdef int i, j, di, dj, ni, ci, si, sj
    out_np = np.zeros((n, c, h, w), dtype=np.float32 if real is float else np.float64)
    cdef real[:, :, :, ::1] out = out_np
    with nogil:
        for ni in range(n):
            for ci in range(c):
                for di in range(k):
                    for dj in range(k):
                        for i in range(h):
                            si = i + di - p
                            if si < 0 or si >= h:
                                continue
                            for j in range(w):
                                sj = j + dj - p
                                if sj < 0 or sj >= w:
                                    continue
                                out[ni, ci, si, sj] += cols[ni, ci * k * k + di * k + dj, i * w + j]
    return out_np
