"""Compiled inner loops for chain sampling and forward sliding.

Both kernels work on flat numpy state and return an error code instead of
raising, so they stay nopython-compatible.  The surrounding modules translate
codes into exceptions.
"""

from __future__ import annotations

import numpy as np
from numba import njit

OK = 0
ERR_DRIFT = 1
ERR_OFF_BORDER = 2
ERR_EXHAUSTED = 3

DRIFT_TOLERANCE = 1e-9


@njit(cache=True)
def chain_kernel(rows0, cols0, uniforms, out_row, out_col, out_prob):  # pragma: no cover
    """Run the corner-removal chain for ``len(uniforms)`` steps.

    State is indexed by corner content c = col - row (one active corner per
    content).  Removing the corner at content u multiplies every surviving
    corner's probability by m/(m-1) * d^2/(d^2-1) where d is the content
    difference; the at most two corners created next to u are recomputed from
    their co-hook product.  Probabilities are renormalized every step; a
    relative drift beyond 1e-9 aborts with ERR_DRIFT.

    One uniform variate is consumed per step, by inverse CDF over corners in
    row-major order (decreasing content).  ``out_prob`` records the chosen
    corner's (normalized) probability at each step.
    """
    nrows = rows0.shape[0]
    ncols = cols0.shape[0]
    nslots = nrows + ncols - 1
    off = nrows - 1  # slot index = content + off
    active = np.zeros(nslots, np.bool_)
    prob = np.zeros(nslots, np.float64)
    crow = np.zeros(nslots, np.int64)
    rows = rows0.copy()
    cols = cols0.copy()
    m = 0
    for i in range(nrows):
        m += rows[i]
    for i in range(nrows):
        if rows[i] >= 1 and (i == nrows - 1 or rows[i + 1] < rows[i]):
            a = i + 1
            b = rows[i]
            slot = (b - a) + off
            active[slot] = True
            crow[slot] = a
            p = 1.0 / m
            for ip in range(1, a):
                h = rows[ip - 1] - b + cols[b - 1] - ip + 1
                p *= h / (h - 1.0)
            for jp in range(1, b):
                h = rows[a - 1] - jp + cols[jp - 1] - a + 1
                p *= h / (h - 1.0)
            prob[slot] = p
    nsteps = uniforms.shape[0]
    for t in range(nsteps):
        if m <= 0:
            return ERR_EXHAUSTED
        total = 0.0
        for s in range(nslots):
            if active[s]:
                total += prob[s]
        if abs(total - 1.0) > DRIFT_TOLERANCE:
            return ERR_DRIFT
        target = uniforms[t] * total
        acc = 0.0
        chosen = -1
        for s in range(nslots - 1, -1, -1):
            if active[s]:
                acc += prob[s]
                chosen = s
                if acc >= target:
                    break
        a = crow[chosen]
        b = a + (chosen - off)
        out_row[t] = a
        out_col[t] = b
        out_prob[t] = prob[chosen] / total
        rows[a - 1] -= 1
        cols[b - 1] -= 1
        active[chosen] = False
        prob[chosen] = 0.0
        if m == 1:
            m = 0
            continue
        scale = (m / (m - 1.0)) / total
        for s in range(nslots):
            if active[s]:
                d = float(s - chosen)
                prob[s] *= scale * (d * d) / (d * d - 1.0)
        m -= 1
        if b - 1 >= 1 and (a == nrows or rows[a] < b - 1):
            slot = (b - 1 - a) + off
            active[slot] = True
            crow[slot] = a
            bb = b - 1
            p = 1.0 / m
            for ip in range(1, a):
                h = rows[ip - 1] - bb + cols[bb - 1] - ip + 1
                p *= h / (h - 1.0)
            for jp in range(1, bb):
                h = rows[a - 1] - jp + cols[jp - 1] - a + 1
                p *= h / (h - 1.0)
            prob[slot] = p
        if a - 1 >= 1 and rows[a - 2] == b:
            slot = (b - (a - 1)) + off
            active[slot] = True
            crow[slot] = a - 1
            aa = a - 1
            p = 1.0 / m
            for ip in range(1, aa):
                h = rows[ip - 1] - b + cols[b - 1] - ip + 1
                p *= h / (h - 1.0)
            for jp in range(1, b):
                h = rows[aa - 1] - jp + cols[jp - 1] - aa + 1
                p *= h / (h - 1.0)
            prob[slot] = p
    return OK


@njit(cache=True)
def eg_forward_kernel(grid, pos_row, pos_col, n, swaps):  # pragma: no cover
    """Forward sliding pass over a staircase tableau held in ``grid``.

    grid is (n-1) x (n-1) with entry values at staircase boxes and 0
    elsewhere; pos_row/pos_col give the 0-based box of each entry value.  The
    maximal entry must always sit on the border anti-diagonal (row + col =
    n - 2, 0-based); otherwise ERR_OFF_BORDER is returned.
    """
    total = n * (n - 1) // 2
    for t in range(total):
        value = total - t
        r = pos_row[value]
        c = pos_col[value]
        if r + c != n - 2:
            return ERR_OFF_BORDER
        swaps[t] = c + 1
        while True:
            up = grid[r - 1, c] if r > 0 else 0
            left = grid[r, c - 1] if c > 0 else 0
            if up == 0 and left == 0:
                grid[r, c] = 0
                break
            if up > left:
                grid[r, c] = up
                pos_row[up] = r
                pos_col[up] = c
                r -= 1
            else:
                grid[r, c] = left
                pos_row[left] = r
                pos_col[left] = c
                c -= 1
    return OK
