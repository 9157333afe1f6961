"""Spatial index over a boundary for distance and crossing queries."""
import numpy as np
from scipy.spatial import cKDTree
from ..utils.exceptions import DistanceQueryFailure


class BoundaryIndex(object):
    """KD-tree over the midpoints of short boundary pieces.

    Every point of a piece lies within spacing / 2 of its midpoint, which
    turns nearest-midpoint distances into lower bounds of the distance to
    the boundary and bounds the search radius of exact queries.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary

    spacing : float, optional (default: median edge length)
        Maximum length of the pieces
    """
    def __init__(self, curve, spacing=None):
        if spacing is None:
            spacing = float(np.median(curve.edge_lengths))
        if not spacing > 0.0:
            raise DistanceQueryFailure("Boundary has zero length edges")
        self.curve = curve
        self.spacing = spacing
        self.starts, self.ends, self.edge_index = curve.densify(spacing)
        self.directions = self.ends - self.starts
        self.lengths2 = np.sum(self.directions ** 2, axis=1)
        if np.any(self.lengths2 == 0.0):
            raise DistanceQueryFailure("Boundary has zero length pieces")
        self.frame = curve.frame[self.edge_index]
        self.tree = cKDTree(0.5 * (self.starts + self.ends))
        self.radius = 0.5 * np.sqrt(self.lengths2.max())

    @property
    def n_pieces(self):
        return len(self.starts)

    def distance_lower_bound(self, points):
        """Lower bound of the distance to the boundary.

        Parameters
        ----------
        points : array, shape (n_points, 2)
            Query points

        Returns
        -------
        bound : array, shape (n_points,)
            Nonnegative lower bounds, exact up to spacing / 2
        """
        d, _ = self.tree.query(points)
        return np.maximum(d - self.radius, 0.0)

    def nearest(self, points):
        """Nearest boundary points.

        Parameters
        ----------
        points : array, shape (n_points, 2)
            Query points

        Returns
        -------
        nearest : array, shape (n_points, 2)
            Closest points on the boundary

        distance : array, shape (n_points,)
            Distance to the boundary

        piece : array, shape (n_points,)
            Index of the piece that contains the nearest point
        """
        points = np.atleast_2d(np.asarray(points, dtype=float))
        d0, _ = self.tree.query(points)
        neighbors = self.tree.query_ball_point(
            points, d0 + self.radius * (1.0 + 1e-9) + 1e-12)
        owner, piece = _flatten(neighbors)
        if len(piece) == 0:
            raise DistanceQueryFailure("No boundary piece found near %r"
                                       % (points,))
        p = points[owner]
        s = np.sum((p - self.starts[piece]) * self.directions[piece], axis=1)
        s = np.clip(s / self.lengths2[piece], 0.0, 1.0)
        q = self.starts[piece] + s[:, np.newaxis] * self.directions[piece]
        d = np.hypot(*(p - q).T)
        best = _argmin_per_owner(owner, d, len(points))
        return q[best], d[best], piece[best]

    def distance(self, points):
        """Exact distance to the boundary."""
        return self.nearest(points)[1]

    def first_crossing(self, a, b):
        """First intersection of straight steps with the boundary.

        Parameters
        ----------
        a : array, shape (n_steps, 2)
            Start points of the steps

        b : array, shape (n_steps, 2)
            End points of the steps

        Returns
        -------
        hit : array of bool, shape (n_steps,)
            The step crosses the boundary

        s : array, shape (n_steps,)
            Fraction of the step before the first crossing, 1 without hit

        point : array, shape (n_steps, 2)
            Crossing point, the end point without hit

        frame : array of bool, shape (n_steps,)
            The crossed piece lies on the clip frame
        """
        a = np.atleast_2d(np.asarray(a, dtype=float))
        b = np.atleast_2d(np.asarray(b, dtype=float))
        n_steps = len(a)
        hit = np.zeros(n_steps, dtype=bool)
        s_best = np.ones(n_steps)
        point = b.copy()
        frame = np.zeros(n_steps, dtype=bool)

        half = 0.5 * np.hypot(*(b - a).T)
        # steps that stay farther from every midpoint cannot cross
        d_mid, _ = self.tree.query(0.5 * (a + b))
        candidates = np.nonzero(d_mid <= half + self.radius)[0]
        if len(candidates) == 0:
            return hit, s_best, point, frame

        neighbors = self.tree.query_ball_point(
            0.5 * (a[candidates] + b[candidates]),
            half[candidates] + self.radius * (1.0 + 1e-9) + 1e-12)
        owner, piece = _flatten(neighbors)
        if len(piece) == 0:
            return hit, s_best, point, frame
        step = candidates[owner]
        s, t, ok = _segment_intersection(a[step], b[step], self.starts[piece],
                                         self.ends[piece])
        if not np.any(ok):
            return hit, s_best, point, frame
        step, piece, s = step[ok], piece[ok], s[ok]
        order = np.lexsort((s, step))
        step, piece, s = step[order], piece[order], s[order]
        first = np.concatenate(([True], step[1:] != step[:-1]))
        step, piece, s = step[first], piece[first], s[first]
        hit[step] = True
        s_best[step] = s
        point[step] = a[step] + s[:, np.newaxis] * (b[step] - a[step])
        frame[step] = self.frame[piece]
        return hit, s_best, point, frame


def _flatten(neighbors):
    lengths = np.array([len(n) for n in neighbors], dtype=int)
    owner = np.repeat(np.arange(len(neighbors)), lengths)
    if lengths.sum() == 0:
        return owner, np.zeros(0, dtype=int)
    return owner, np.concatenate([np.asarray(n, dtype=int)
                                  for n in neighbors if len(n) > 0])


def _argmin_per_owner(owner, values, n_owners):
    order = np.lexsort((values, owner))
    first = np.concatenate(([True], owner[order][1:] != owner[order][:-1]))
    best = order[first]
    if len(best) != n_owners:
        raise DistanceQueryFailure("Distance query lost %d points"
                                   % (n_owners - len(best)))
    return best


def _cross(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def _segment_intersection(p0, p1, q0, q1):
    """Parameters of the intersection of segments p0p1 and q0q1.

    Parallel segments never intersect here. A crossing exactly at the
    start of the step does not count, one at its end does.
    """
    r = p1 - p0
    d = q1 - q0
    denom = _cross(r, d)
    w = q0 - p0
    with np.errstate(divide="ignore", invalid="ignore"):
        s = _cross(w, d) / denom
        t = _cross(w, r) / denom
    ok = (denom != 0.0) & (s > 0.0) & (s <= 1.0) & (t >= 0.0) & (t <= 1.0)
    return s, t, ok
