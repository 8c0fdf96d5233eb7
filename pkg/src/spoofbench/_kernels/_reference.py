"""Numpy reference implementations of the hot kernels.

These define the semantics; the compiled twin in ``_native.pyx`` must match
them bit-for-bit. Keep the arithmetic expression order in sync between the
two files.
"""

import numpy as np


def warp_patch(pixels, cx, cy, theta, size, fill):
    """Sample a rotated ``size``x``size`` window around (cx, cy).

    The window is rotated so that direction ``theta`` (radians, x-axis toward
    positive y) maps onto the patch +x axis. Output pixel (i, j) reads the
    source point center + R(theta) @ (j - size//2, i - size//2) with bilinear
    interpolation; samples outside the image get ``fill``.
    """
    img = np.ascontiguousarray(pixels, dtype=np.float64)
    h, w = img.shape
    half = size // 2
    c, s = np.cos(theta), np.sin(theta)

    dx = np.arange(size, dtype=np.float64) - half
    dy = dx.copy()
    dxg, dyg = np.meshgrid(dx, dy)
    sx = cx + dxg * c - dyg * s
    sy = cy + dxg * s + dyg * c

    valid = (sx >= 0.0) & (sx <= w - 1.0) & (sy >= 0.0) & (sy <= h - 1.0)

    x0 = np.minimum(np.floor(sx), w - 2.0)
    y0 = np.minimum(np.floor(sy), h - 2.0)
    xi = np.clip(x0, 0, w - 2).astype(np.intp)
    yi = np.clip(y0, 0, h - 2).astype(np.intp)
    fx = sx - xi
    fy = sy - yi

    v00 = img[yi, xi]
    v01 = img[yi, xi + 1]
    v10 = img[yi + 1, xi]
    v11 = img[yi + 1, xi + 1]
    interp = (1.0 - fy) * ((1.0 - fx) * v00 + fx * v01) + fy * ((1.0 - fx) * v10 + fx * v11)
    return np.where(valid, interp, fill)


def _zs_subiteration(mask, first):
    """Deletion mask for one Zhang-Suen subiteration on a {0,1} uint8 array."""
    p = np.pad(mask, 1).astype(bool)
    c = p[1:-1, 1:-1]
    n = p[:-2, 1:-1]
    ne = p[:-2, 2:]
    e = p[1:-1, 2:]
    se = p[2:, 2:]
    s = p[2:, 1:-1]
    sw = p[2:, :-2]
    w = p[1:-1, :-2]
    nw = p[:-2, :-2]

    ring = (n, ne, e, se, s, sw, w, nw)
    b = np.zeros(mask.shape, dtype=np.uint8)
    for q in ring:
        b += q
    a = np.zeros(mask.shape, dtype=np.uint8)
    for q, r in zip(ring, ring[1:] + ring[:1]):
        a += (~q) & r

    if first:
        cond = (~(n & e & s)) & (~(e & s & w))
    else:
        cond = (~(n & e & w)) & (~(n & s & w))
    return c & (b >= 2) & (b <= 6) & (a == 1) & cond


def thin(mask):
    """Zhang-Suen thinning of a {0,1} uint8 mask, iterated until stable."""
    out = np.ascontiguousarray(mask, dtype=np.uint8).copy()
    while True:
        d1 = _zs_subiteration(out, True)
        out[d1] = 0
        d2 = _zs_subiteration(out, False)
        out[d2] = 0
        if not (d1.any() or d2.any()):
            return out
