"""Geometric predicates on boundary curves."""
import numpy as np
from scipy.spatial import cKDTree
from ..utils.exceptions import NotSymmetric
from .index import BoundaryIndex


BOUNDARY_TOLERANCE = 1e-12


def is_symmetric(curve, tol=1e-8):
    """Check symmetry about the real axis.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary

    tol : float, optional (default: 1e-8)
        Maximum distance of a reflected vertex from the curve

    Returns
    -------
    symmetric : bool
        The reflected curve matches the curve within Hausdorff distance tol
    """
    return symmetry_defect(curve) <= tol


def symmetry_defect(curve):
    """Largest distance of a reflected vertex from the curve."""
    reflected = curve.vertices * [1.0, -1.0]
    # fast path for vertex sets that are closed under reflection
    d, _ = cKDTree(curve.vertices).query(reflected)
    if d.max() == 0.0:
        return 0.0
    return float(BoundaryIndex(curve).distance(reflected).max())


def is_delta_convex(curve, tol=1e-9, symmetry_tol=1e-8):
    """Vertical-line test for symmetric domains.

    A symmetric domain contains the segment [z, conj(z)] for each of its
    points iff every vertical line meets the upper half of the boundary in
    a connected set. The upper half is split into chains at the real axis.
    Each chain must be monotone in x and distinct chains may not overlap
    in their x-ranges.

    Parameters
    ----------
    curve : BoundaryCurve
        Symmetric boundary

    tol : float, optional (default: 1e-9)
        Tolerance for monotonicity and overlaps

    symmetry_tol : float, optional (default: 1e-8)
        Tolerance of the symmetry check

    Returns
    -------
    delta_convex : bool
        Result of the vertical-line test

    Raises
    ------
    NotSymmetric
        If the curve is not symmetric about the real axis.
    """
    defect = symmetry_defect(curve)
    if defect > symmetry_tol:
        raise NotSymmetric("Curve is not symmetric about the real axis, "
                           "reflection defect %.3g" % defect)
    chains = upper_chains(curve, tol)
    ranges = []
    for chain in chains:
        dx = np.diff(chain[:, 0])
        if np.any(dx > tol) and np.any(dx < -tol):
            return False
        ranges.append((chain[:, 0].min(), chain[:, 0].max()))
    ranges.sort()
    reach = -np.inf
    for lo, hi in ranges:
        if lo < reach - tol:
            return False
        reach = max(reach, hi)
    return True


def upper_chains(curve, tol=1e-9):
    """Maximal boundary paths in the closed upper half-plane.

    Crossings of the real axis are inserted as vertices. Pieces lying on
    the axis separate chains.

    Returns
    -------
    chains : list of arrays, shape (n_points, 2)
        Chains in boundary order
    """
    v = curve.vertices
    w = np.roll(v, -1, axis=0)
    points = []
    for p, q in zip(v, w):
        points.append(p)
        if (p[1] > tol and q[1] < -tol) or (p[1] < -tol and q[1] > tol):
            t = p[1] / (p[1] - q[1])
            points.append(np.array([p[0] + t * (q[0] - p[0]), 0.0]))
    points = np.array(points)
    n = len(points)
    upper = points[:, 1] >= -tol
    on_axis = np.abs(points[:, 1]) <= tol
    # segment i joins point i and point i + 1
    nxt = np.roll(np.arange(n), -1)
    usable = upper & upper[nxt] & ~(on_axis & on_axis[nxt])
    if np.all(usable):
        return [np.vstack((points, points[:1]))]
    # start right after an unusable segment so chains do not wrap
    start = (np.nonzero(~usable)[0][0] + 1) % n
    order = np.roll(np.arange(n), -start)
    chains = []
    current = []
    for i in order:
        if usable[i]:
            if not current:
                current.append(points[i])
            current.append(points[nxt[i]])
        elif current:
            chains.append(np.array(current))
            current = []
    if current:
        chains.append(np.array(current))
    return chains


def is_simple(curve, spacing=None):
    """Check that no two non-adjacent edges intersect.

    Edges are cut into pieces no longer than 'spacing'. Intersecting pieces
    have midpoints closer than 'spacing', which a KD-tree finds in
    O(n log n). Candidate pairs are decided by exact orientation tests.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary

    spacing : float, optional (default: median edge length)
        Piece length of the broad phase

    Returns
    -------
    simple : bool
        The polyline does not intersect itself
    """
    return len(self_intersections(curve, spacing)) == 0


def self_intersections(curve, spacing=None, max_pairs=None):
    """Pairs of non-adjacent edges that intersect.

    Returns
    -------
    pairs : array, shape (n_pairs, 2)
        Indices of intersecting edges
    """
    if spacing is None:
        spacing = float(np.median(curve.edge_lengths))
    starts, ends, edge_index = curve.densify(spacing)
    tree = cKDTree(0.5 * (starts + ends))
    pairs = tree.query_pairs(spacing * (1.0 + 1e-9), output_type="ndarray")
    if len(pairs) == 0:
        return np.zeros((0, 2), dtype=int)
    n = curve.n_vertices
    e1, e2 = edge_index[pairs[:, 0]], edge_index[pairs[:, 1]]
    gap = np.abs(e1 - e2)
    distinct = (gap != 0) & (gap != 1) & (gap != n - 1)
    e1, e2 = np.minimum(e1, e2)[distinct], np.maximum(e1, e2)[distinct]
    if len(e1) == 0:
        return np.zeros((0, 2), dtype=int)
    edges = np.unique(np.column_stack((e1, e2)), axis=0)
    start, end = curve.edges
    crossing = _segments_intersect(start[edges[:, 0]], end[edges[:, 0]],
                                   start[edges[:, 1]], end[edges[:, 1]])
    return edges[crossing][:max_pairs]


def _orientation(a, b, c):
    return np.sign((b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) -
                   (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0]))


def _on_segment(a, b, c):
    """c lies in the bounding box of segment ab."""
    return ((np.minimum(a[:, 0], b[:, 0]) <= c[:, 0]) &
            (c[:, 0] <= np.maximum(a[:, 0], b[:, 0])) &
            (np.minimum(a[:, 1], b[:, 1]) <= c[:, 1]) &
            (c[:, 1] <= np.maximum(a[:, 1], b[:, 1])))


def _segments_intersect(p1, p2, q1, q2):
    o1 = _orientation(p1, p2, q1)
    o2 = _orientation(p1, p2, q2)
    o3 = _orientation(q1, q2, p1)
    o4 = _orientation(q1, q2, p2)
    proper = (o1 * o2 < 0) & (o3 * o4 < 0)
    touching = (((o1 == 0) & _on_segment(p1, p2, q1)) |
                ((o2 == 0) & _on_segment(p1, p2, q2)) |
                ((o3 == 0) & _on_segment(q1, q2, p1)) |
                ((o4 == 0) & _on_segment(q1, q2, p2)))
    return proper | touching


def contains(curve, points, chunk_size=4096):
    """Even-odd ray casting.

    Points within 1e-12 of the boundary count as outside.

    Parameters
    ----------
    curve : BoundaryCurve
        Closed boundary

    points : array-like, shape (n_points, 2), complex (n_points,) or scalar
        Query points

    chunk_size : int, optional (default: 4096)
        Number of points processed at once

    Returns
    -------
    inside : bool or array of bool
        Membership of each point
    """
    points, scalar = _as_points(points)
    start, end = curve.edges
    inside = np.empty(len(points), dtype=bool)
    step = max(1, int(1e6 // max(curve.n_vertices, 1)))
    step = min(step, chunk_size)
    for i in range(0, len(points), step):
        p = points[i:i + step, np.newaxis, :]
        x1, y1 = start[:, 0], start[:, 1]
        x2, y2 = end[:, 0], end[:, 1]
        px, py = p[..., 0], p[..., 1]
        straddle = (y1 > py) != (y2 > py)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_cross = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
        crossings = np.sum(straddle & (px < x_cross), axis=1)
        on_boundary = _point_segment_distance(p, start, end).min(axis=1) <= \
            BOUNDARY_TOLERANCE
        inside[i:i + step] = (crossings % 2 == 1) & ~on_boundary
    return bool(inside[0]) if scalar else inside


def winding_number(curve, points, chunk_size=4096):
    """Winding number of the boundary around points by summed angles."""
    points, scalar = _as_points(points)
    z = curve.points
    w = np.roll(z, -1)
    result = np.empty(len(points), dtype=int)
    step = max(1, min(chunk_size, int(1e6 // max(curve.n_vertices, 1))))
    for i in range(0, len(points), step):
        p = (points[i:i + step, 0] + 1j * points[i:i + step, 1])[:, None]
        angles = np.angle((w - p) / (z - p)).sum(axis=1)
        result[i:i + step] = np.rint(angles / (2.0 * np.pi)).astype(int)
    return int(result[0]) if scalar else result


def _point_segment_distance(p, start, end):
    d = end - start
    length2 = np.sum(d ** 2, axis=1)
    length2 = np.where(length2 > 0.0, length2, 1.0)
    s = np.sum((p - start) * d, axis=-1) / length2
    s = np.clip(s, 0.0, 1.0)
    q = start + s[..., np.newaxis] * d
    return np.hypot(p[..., 0] - q[..., 0], p[..., 1] - q[..., 1])


def _as_points(points):
    points = np.asarray(points)
    if np.iscomplexobj(points) or points.ndim == 0:
        scalar = points.ndim == 0
        z = np.atleast_1d(points).astype(complex)
        return np.column_stack((z.real, z.imag)), scalar
    points = points.astype(float)
    if points.ndim == 1:
        return points[np.newaxis, :], True
    return points, False


def is_starlike(curve, center=0.0, n_directions=720, tol=1e-12):
    """Numerical starlikeness test.

    Every ray from the center may cross the boundary at most once away from
    the center, and at least one ray must cross it.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary

    center : complex, optional (default: 0)
        Center of the rays

    n_directions : int, optional (default: 720)
        Number of rays, their directions avoid multiples of pi / 4

    tol : float, optional (default: 1e-12)
        Crossings closer than tol to the center are ignored

    Returns
    -------
    starlike : bool
        Result of the test
    """
    counts = ray_crossings(curve, center, n_directions, tol)
    return bool(np.all(counts <= 1) and np.any(counts == 1))


def ray_crossings(curve, center=0.0, n_directions=720, tol=1e-12):
    """Number of boundary crossings of rays from a center."""
    phi = 2.0 * np.pi * (np.arange(n_directions) + 0.5) / n_directions + \
        1e-3 / n_directions
    d = np.column_stack((np.cos(phi), np.sin(phi)))
    c = np.array([np.real(center), np.imag(center)])
    start, end = curve.edges
    v = start - c
    e = end - start
    counts = np.zeros(n_directions, dtype=int)
    step = max(1, int(1e6 // max(curve.n_vertices, 1)))
    for i in range(0, n_directions, step):
        di = d[i:i + step, np.newaxis, :]
        denom = di[..., 0] * e[:, 1] - di[..., 1] * e[:, 0]
        with np.errstate(divide="ignore", invalid="ignore"):
            r = (v[:, 0] * e[:, 1] - v[:, 1] * e[:, 0]) / denom
            s = (v[:, 0] * di[..., 1] - v[:, 1] * di[..., 0]) / denom
        hit = (denom != 0.0) & (r > tol) & (s >= 0.0) & (s < 1.0)
        counts[i:i + step] = hit.sum(axis=1)
    return counts


def hausdorff_distance(a, b, spacing=None):
    """Symmetric Hausdorff distance between two polylines.

    Both curves are sampled with the given spacing, each sample is then
    compared with the exact other polyline.

    Parameters
    ----------
    a : BoundaryCurve
        First curve

    b : BoundaryCurve
        Second curve

    spacing : float, optional (default: half the smaller median edge length)
        Sampling distance along the curves

    Returns
    -------
    distance : float
        Hausdorff distance, accurate up to spacing / 2, exactly 0 for curves
        with the same vertices
    """
    if np.array_equal(a.vertices, b.vertices):
        return 0.0
    if spacing is None:
        spacing = 0.5 * min(np.median(a.edge_lengths),
                            np.median(b.edge_lengths))
    index_a = BoundaryIndex(a)
    index_b = BoundaryIndex(b)
    samples_a = np.vstack(a.densify(spacing)[:2])
    samples_b = np.vstack(b.densify(spacing)[:2])
    return float(max(index_b.distance(samples_a).max(),
                     index_a.distance(samples_b).max()))


def diagnostics(curve, far_fraction=0.5):
    """Optional geometric conditions of a domain.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary, clipped for unbounded domains

    far_fraction : float, optional (default: 0.5)
        Points with |Re z| above this fraction of the largest |Re z| on the
        boundary count as far out

    Returns
    -------
    report : dict
        'starlike' about 0, 'strip_height' (largest |Im z| over non-frame
        vertices, bounded iff the domain lies in a horizontal strip inside
        the window) and 'far_height' (largest |Im z| far out)
    """
    v = curve.vertices[~curve.frame | ~np.roll(curve.frame, 1)]
    height = float(np.abs(v[:, 1]).max())
    far = np.abs(v[:, 0]) >= far_fraction * np.abs(v[:, 0]).max()
    return {"starlike": is_starlike(curve),
            "strip_height": height,
            "far_height": float(np.abs(v[far, 1]).max())}
