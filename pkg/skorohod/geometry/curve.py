"""Closed polygonal boundaries and clipping."""
import numpy as np
from ..utils.io import write_csv, read_csv
from ..utils.validation import check_finite, check_window


MIN_VERTICES = 16


class BoundaryCurve(object):
    """Closed polyline that bounds a simply connected domain.

    Edge i runs from vertex i to vertex i + 1, the last edge closes the curve.

    Parameters
    ----------
    vertices : array-like, shape (n_vertices, 2) or complex (n_vertices,)
        Vertices in boundary order, the closing vertex is implicit

    window : tuple (xmin, xmax, ymin, ymax), optional (default: None)
        Clip window the curve was cut to

    frame : array-like of bool, shape (n_vertices,), optional (default: None)
        Marks edges that lie on the clip window rather than on the boundary
        of the unclipped domain

    support_unbounded : bool, optional (default: False)
        The unclipped domain is unbounded
    """
    def __init__(self, vertices, window=None, frame=None,
                 support_unbounded=False):
        vertices = np.asarray(vertices)
        if np.iscomplexobj(vertices):
            vertices = np.column_stack((vertices.real, vertices.imag))
        vertices = check_finite(vertices, "vertices")
        if vertices.ndim != 2 or vertices.shape[1] != 2:
            raise ValueError("Vertices must have shape (n_vertices, 2), got "
                             "%r" % (vertices.shape,))
        if frame is None:
            frame = np.zeros(len(vertices), dtype=bool)
        frame = np.asarray(frame, dtype=bool)
        if frame.shape != (len(vertices),):
            raise ValueError("Need one frame flag per edge")

        self.vertices, self.frame = _drop_repeated(vertices, frame)
        if len(self.vertices) < MIN_VERTICES:
            raise ValueError("A boundary curve needs at least %d distinct "
                             "vertices, got %d"
                             % (MIN_VERTICES, len(self.vertices)))
        self.window = check_window(window)
        self.support_unbounded = bool(support_unbounded)

    @classmethod
    def from_csv(cls, filename, window=None, support_unbounded=False):
        """Load a curve from a CSV file with columns x and y."""
        data = read_csv(filename)
        frame = data["frame"].astype(bool) if "frame" in data else None
        return cls(np.column_stack((data["x"], data["y"])), window, frame,
                   support_unbounded)

    def to_csv(self, filename):
        write_csv(filename, [self.vertices[:, 0], self.vertices[:, 1],
                             self.frame.astype(int)], ["x", "y", "frame"])

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def points(self):
        """Vertices as complex numbers."""
        return self.vertices[:, 0] + 1j * self.vertices[:, 1]

    @property
    def edges(self):
        """Start and end points of all edges, shape (n_vertices, 2) each."""
        return self.vertices, np.roll(self.vertices, -1, axis=0)

    @property
    def edge_lengths(self):
        start, end = self.edges
        return np.hypot(*(end - start).T)

    @property
    def perimeter(self):
        return float(self.edge_lengths.sum())

    def closed(self):
        """Vertex array with the first vertex repeated at the end."""
        return np.vstack((self.vertices, self.vertices[:1]))

    def reflected(self):
        """Mirror image under complex conjugation."""
        return BoundaryCurve(self.vertices * [1.0, -1.0], self.window,
                             self.frame, self.support_unbounded)

    def densify(self, spacing):
        """Split every edge into pieces no longer than 'spacing'.

        Returns
        -------
        starts : array, shape (n_pieces, 2)
            Start points of the pieces

        ends : array, shape (n_pieces, 2)
            End points of the pieces

        edge_index : array, shape (n_pieces,)
            Edge that each piece belongs to
        """
        start, end = self.edges
        return split_edges(start, end, spacing)


def split_edges(start, end, spacing):
    """Split segments into equal pieces no longer than 'spacing'."""
    if not spacing > 0.0:
        raise ValueError("Spacing must be positive, got %r" % spacing)
    lengths = np.hypot(*(end - start).T)
    counts = np.maximum(np.ceil(lengths / spacing), 1).astype(int)
    edge_index = np.repeat(np.arange(len(start)), counts)
    first = np.concatenate(([0], np.cumsum(counts)[:-1]))
    k = np.arange(counts.sum()) - np.repeat(first, counts)
    n = counts[edge_index]
    s0 = (k / n)[:, np.newaxis]
    s1 = ((k + 1) / n)[:, np.newaxis]
    d = end[edge_index] - start[edge_index]
    return (start[edge_index] + s0 * d, start[edge_index] + s1 * d,
            edge_index)


def refine_polygon(vertices, spacing, frame=None):
    """Insert vertices so that no edge of a closed polygon exceeds 'spacing'.

    Returns
    -------
    vertices : array, shape (n_vertices, 2)
        Refined polygon

    frame : array of bool, shape (n_vertices,)
        Frame flags inherited from the original edges
    """
    vertices = np.asarray(vertices, dtype=float)
    if frame is None:
        frame = np.zeros(len(vertices), dtype=bool)
    starts, _, edge_index = split_edges(
        vertices, np.roll(vertices, -1, axis=0), spacing)
    return starts, np.asarray(frame, dtype=bool)[edge_index]


def _drop_repeated(vertices, frame):
    n = len(vertices)
    if n == 0:
        return vertices, frame
    scale = 1.0 + np.abs(vertices).max()
    step = np.hypot(*(vertices - np.roll(vertices, 1, axis=0)).T)
    keep = step > 1e-14 * scale
    if not np.any(keep):
        return vertices[:1], frame[:1]
    kept = np.nonzero(keep)[0]
    # the outgoing edge of a kept vertex is the last edge of its run
    last_in_run = (np.roll(kept, -1) - 1) % n
    return vertices[kept], frame[last_in_run]


def clip(curve, window):
    """Cut a curve to a rectangular window (Sutherland-Hodgman).

    Edges created along the window are flagged as frame edges. A result
    with fewer than MIN_VERTICES vertices is refined along its edges.

    Parameters
    ----------
    curve : BoundaryCurve
        Curve to clip

    window : tuple (X, Y) or (xmin, xmax, ymin, ymax)
        Window

    Returns
    -------
    curve : BoundaryCurve
        Clipped curve with the window attached
    """
    window = check_window(window)
    xmin, xmax, ymin, ymax = window
    vertices = [tuple(v) for v in curve.vertices]
    # flag of the edge that arrives at each vertex
    arriving = list(np.roll(curve.frame, 1))
    for axis, bound, keep_greater in [(0, xmin, True), (0, xmax, False),
                                      (1, ymin, True), (1, ymax, False)]:
        vertices, arriving = _clip_half_plane(vertices, arriving, axis,
                                              bound, keep_greater)
        if not vertices:
            raise ValueError("Curve does not intersect window %r"
                             % (window,))
    frame = np.roll(np.asarray(arriving, dtype=bool), -1)
    vertices = np.asarray(vertices, dtype=float)
    if len(vertices) < MIN_VERTICES:
        # window inside the domain, only the corners survive
        perimeter = np.hypot(*(np.roll(vertices, -1, axis=0) - vertices).T)
        vertices, frame = refine_polygon(
            vertices, perimeter.sum() / (2 * MIN_VERTICES), frame)
    return BoundaryCurve(vertices, window, frame,
                         curve.support_unbounded)


def _clip_half_plane(vertices, arriving, axis, bound, keep_greater):
    def inside(p):
        return p[axis] >= bound if keep_greater else p[axis] <= bound

    def intersection(s, e):
        t = (bound - s[axis]) / (e[axis] - s[axis])
        p = [s[0] + t * (e[0] - s[0]), s[1] + t * (e[1] - s[1])]
        p[axis] = bound
        return tuple(p)

    out, out_arriving = [], []
    n = len(vertices)
    for i in range(n):
        s = vertices[i - 1]
        e = vertices[i]
        flag = arriving[i]
        if inside(e):
            if not inside(s):
                out.append(intersection(s, e))
                out_arriving.append(True)
            out.append(e)
            out_arriving.append(flag)
        elif inside(s):
            out.append(intersection(s, e))
            out_arriving.append(flag)
    return out, out_arriving
