"""Pure-numpy im2col / col2im kernels for spatial-preserving conv2d.

Column layout: row index c*k*k + di*k + dj, matching a (C_out, C_in*k*k)
reshape of the weight tensor.
"""

import numpy as np

NAME = "numpy"


def im2col(x: np.ndarray, k: int) -> np.ndarray:
    """(N,C,H,W) -> (N, C*k*k, H*W) patch matrix with zero padding (k-1)/2."""
    n, c, h, w = x.shape
    p = (k - 1) // 2
    xp = np.pad(x, ((0, 0), (0, 0), (p, p), (p, p)))
    cols = np.empty((n, c, k * k, h * w), dtype=x.dtype)
    for di in range(k):
        for dj in range(k):
            cols[:, :, di * k + dj, :] = xp[:, :, di:di + h, dj:dj + w].reshape(n, c, h * w)
    return cols.reshape(n, c * k * k, h * w)


def col2im(cols: np.ndarray, shape: tuple, k: int) -> np.ndarray:
    """Adjoint of im2col: scatter-add columns back to an (N,C,H,W) array."""
    n, c, h, w = shape
    p = (k - 1) // 2
    xp = np.zeros((n, c, h + 2 * p, w + 2 * p), dtype=cols.dtype)
    colsr = cols.reshape(n, c, k * k, h * w)
    for di in range(k):
        for dj in range(k):
            xp[:, :, di:di + h, dj:dj + w] += colsr[:, :, di * k + dj, :].reshape(n, c, h, w)
    if p == 0:
        return xp
    return xp[:, :, p:p + h, p:p + w]
