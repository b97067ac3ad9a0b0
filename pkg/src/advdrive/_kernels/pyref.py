"""Pure-Python reference kernels.

These are the slow, dependency-free twins of the compiled kernels in
``_core.pyx``. Both backends must produce bit-identical float64 results:
every arithmetic expression here is written in the same order as the C
code, and the extension is compiled with FP contraction disabled. Keep
the two files in lockstep when editing either.

Rectangles are passed as 5-vectors ``(cx, cy, half_len, half_wid,
heading)``; segments as 4-vectors ``(x1, y1, x2, y2)``.
"""

from __future__ import annotations

import math

BACKEND_NAME = "python"

# Ray classes, shared with the compiled backend.
RAY_FREE = 0
RAY_EDGE = 1
RAY_VEHICLE = 2

_CORNER_SIGNS = ((1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (-1.0, 1.0))


def _rect_corners(rect):
    cx, cy, hl, hw, heading = rect[0], rect[1], rect[2], rect[3], rect[4]
    c = math.cos(heading)
    s = math.sin(heading)
    out = []
    for sx, sy in _CORNER_SIGNS:
        lx = sx * hl
        ly = sy * hw
        out.append((cx + (c * lx - s * ly), cy + (s * lx + c * ly)))
    return out


def _ray_segment(ox, oy, dx, dy, x1, y1, x2, y2, best_t):
    """Range to segment hit along the ray, or best_t if none closer."""
    ex = x2 - x1
    ey = y2 - y1
    denom = dx * ey - dy * ex
    if denom == 0.0:
        return best_t
    fx = x1 - ox
    fy = y1 - oy
    t = (fx * ey - fy * ex) / denom
    s = (fx * dy - fy * dx) / denom
    if t >= 0.0 and 0.0 <= s <= 1.0 and t < best_t:
        return t
    return best_t


def cast_rays(ox, oy, angles, max_range, segs, rects, out_dist, out_cls):
    """Nearest hit per ray against edge segments, then vehicle rectangles.

    Writes hit range (meters, ``max_range`` when free) into ``out_dist``
    and the class code into ``out_cls``.
    """
    n = len(angles)
    m = len(segs)
    r = len(rects)
    corners = [_rect_corners(rects[k]) for k in range(r)]
    for i in range(n):
        dx = math.cos(angles[i])
        dy = math.sin(angles[i])
        best = max_range
        cls = RAY_FREE
        for j in range(m):
            t = _ray_segment(ox, oy, dx, dy, segs[j][0], segs[j][1],
                             segs[j][2], segs[j][3], best)
            if t < best:
                best = t
                cls = RAY_EDGE
        for k in range(r):
            cs = corners[k]
            for e in range(4):
                x1, y1 = cs[e]
                x2, y2 = cs[(e + 1) & 3]
                t = _ray_segment(ox, oy, dx, dy, x1, y1, x2, y2, best)
                if t < best:
                    best = t
                    cls = RAY_VEHICLE
        out_dist[i] = best
        out_cls[i] = cls


def rect_overlap(a, b):
    """Separating-axis overlap test; touching counts as overlap."""
    ca = math.cos(a[4])
    sa = math.sin(a[4])
    cb = math.cos(b[4])
    sb = math.sin(b[4])
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    axes = ((ca, sa), (-sa, ca), (cb, sb), (-sb, cb))
    for ux, uy in axes:
        dist = abs(dx * ux + dy * uy)
        ra = a[2] * abs(ca * ux + sa * uy) + a[3] * abs(-sa * ux + ca * uy)
        rb = b[2] * abs(cb * ux + sb * uy) + b[3] * abs(-sb * ux + cb * uy)
        if dist > ra + rb:
            return False
    return True


def overlap_pairs(rects, out_i, out_j):
    """All overlapping rectangle pairs (i < j); returns the pair count."""
    n = len(rects)
    count = 0
    for i in range(n):
        ri = rects[i]
        reach_i = ri[2] + ri[3]
        for j in range(i + 1, n):
            rj = rects[j]
            dx = rj[0] - ri[0]
            dy = rj[1] - ri[1]
            reach = reach_i + rj[2] + rj[3]
            if dx * dx + dy * dy > reach * reach:
                continue
            if rect_overlap(ri, rj):
                out_i[count] = i
                out_j[count] = j
                count += 1
    return count


def _seg_in_box(x1, y1, x2, y2, hx, hy):
    """Segment vs axis-aligned box in the box frame (slab clipping)."""
    t0 = 0.0
    t1 = 1.0
    dx = x2 - x1
    dy = y2 - y1
    if dx == 0.0:
        if x1 < -hx or x1 > hx:
            return False
    else:
        ta = (-hx - x1) / dx
        tb = (hx - x1) / dx
        if ta > tb:
            ta, tb = tb, ta
        if ta > t0:
            t0 = ta
        if tb < t1:
            t1 = tb
        if t0 > t1:
            return False
    if dy == 0.0:
        if y1 < -hy or y1 > hy:
            return False
    else:
        ta = (-hy - y1) / dy
        tb = (hy - y1) / dy
        if ta > tb:
            ta, tb = tb, ta
        if ta > t0:
            t0 = ta
        if tb < t1:
            t1 = tb
    return t0 <= t1


def rect_hits_polyline(rect, segs):
    """Index of the first segment intersecting the rectangle, else -1."""
    cx, cy, hl, hw, heading = rect[0], rect[1], rect[2], rect[3], rect[4]
    c = math.cos(heading)
    s = math.sin(heading)
    m = len(segs)
    for j in range(m):
        ax = segs[j][0] - cx
        ay = segs[j][1] - cy
        bx = segs[j][2] - cx
        by = segs[j][3] - cy
        x1 = c * ax + s * ay
        y1 = -s * ax + c * ay
        x2 = c * bx + s * by
        y2 = -s * bx + c * by
        if _seg_in_box(x1, y1, x2, y2, hl, hw):
            return j
    return -1


def project_polyline(px, py, xs, ys, cum):
    """Closest-point projection onto a polyline.

    Returns ``(dist, arc, seg_idx, t)`` where ``arc`` is the arc length of
    the projection measured from the first waypoint and ``t`` the position
    on the winning segment. The first segment attaining the minimum
    squared distance wins.
    """
    n = len(xs)
    best_d2 = math.inf
    best_i = 0
    best_t = 0.0
    for i in range(n - 1):
        ex = xs[i + 1] - xs[i]
        ey = ys[i + 1] - ys[i]
        fx = px - xs[i]
        fy = py - ys[i]
        ll = ex * ex + ey * ey
        t = (fx * ex + fy * ey) / ll
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
        qx = fx - t * ex
        qy = fy - t * ey
        d2 = qx * qx + qy * qy
        if d2 < best_d2:
            best_d2 = d2
            best_i = i
            best_t = t
    arc = cum[best_i] + best_t * (cum[best_i + 1] - cum[best_i])
    return math.sqrt(best_d2), arc, best_i, best_t


def sumtree_set(nodes, cap, leaf, value):
    """Set a leaf and recompute ancestor sums up to the root."""
    i = cap + leaf
    nodes[i] = value
    i >>= 1
    while i >= 1:
        nodes[i] = nodes[2 * i] + nodes[2 * i + 1]
        i >>= 1


def sumtree_set_batch(nodes, cap, leaves, values):
    for k in range(len(leaves)):
        sumtree_set(nodes, cap, leaves[k], values[k])


def sumtree_query(nodes, cap, mass):
    """Leaf whose cumulative-mass interval contains ``mass``."""
    i = 1
    while i < cap:
        left = 2 * i
        ls = nodes[left]
        if mass < ls:
            i = left
        else:
            mass -= ls
            i = left + 1
    return i - cap


def sumtree_query_batch(nodes, cap, masses, out):
    for k in range(len(masses)):
        out[k] = sumtree_query(nodes, cap, masses[k])
