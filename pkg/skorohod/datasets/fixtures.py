"""Reference domains with known exit behaviour.

Unbounded domains are cut to a rectangular window. Edges on the window are
flagged as frame edges, a path that leaves through them has not exited the
unclipped domain.
"""
import numpy as np
from ..geometry import BoundaryCurve, clip, refine_polygon


class Fixture(object):
    """Domain together with a start point and its Hardy number.

    Parameters
    ----------
    name : string
        Name of the fixture

    curve : BoundaryCurve
        Boundary, clipped for unbounded domains

    start : complex
        Start point of Brownian paths

    hardy_number : float or None
        Exact Hardy number if known, inf for domains with all exit time
        moments finite

    description : string
        One line description
    """
    def __init__(self, name, curve, start, hardy_number, description):
        self.name = name
        self.curve = curve
        self.start = complex(start)
        self.hardy_number = hardy_number
        self.description = description

    @property
    def window(self):
        return self.curve.window

    def __repr__(self):
        return "Fixture(name='%s', n_vertices=%d, start=%r, window=%r)" % (
            self.name, self.curve.n_vertices, self.start, self.window)


def make_disk(radius=1.0, start=0.0, n_vertices=4096):
    """Disk of given radius centered at 0.

    The exit position from 0 is uniform on the circle, its real part
    follows the arcsine law.

    Parameters
    ----------
    radius : float, optional (default: 1)
        Radius

    start : complex, optional (default: 0)
        Start point, |start| < radius

    n_vertices : int, optional (default: 4096)
        Number of vertices of the inscribed polygon

    Returns
    -------
    fixture : Fixture
        Disk
    """
    if not abs(start) < radius:
        raise ValueError("Start %r is not inside the disk of radius %g"
                         % (start, radius))
    t = 2.0 * np.pi * (np.arange(n_vertices) + 0.5) / n_vertices
    curve = BoundaryCurve(radius * np.exp(1j * t))
    return Fixture("disk", curve, start, np.inf,
                   "disk of radius %g" % radius)


def make_wedge(alpha=0.5 * np.pi, L=100.0, spacing=None):
    """Wedge {0 < arg z < alpha} cut to the square [-L, L] x [-L, L].

    Parameters
    ----------
    alpha : float, optional (default: pi / 2)
        Opening angle in (0, pi]

    L : float, optional (default: 100)
        Half width of the window

    spacing : float, optional (default: L / 200)
        Maximum edge length of the sides

    Returns
    -------
    fixture : Fixture
        Wedge, start on the bisector at distance 1 from the corner
    """
    if not 0.0 < alpha <= np.pi:
        raise ValueError("Opening angle must be in (0, pi], got %r" % alpha)
    if spacing is None:
        spacing = L / 200.0
    far = 3.0 * L
    corners = [(0.0, 0.0), (far, 0.0),
               (far * np.cos(alpha), far * np.sin(alpha))]
    if alpha > 0.5 * np.pi:
        # keep the far side outside of the window
        corners.insert(2, (far, far))
        corners.insert(3, (-far, far))
    vertices, _ = refine_polygon(corners, spacing)
    curve = clip(BoundaryCurve(vertices, support_unbounded=True),
                 (-L, L, -L, L))
    return Fixture("wedge", curve, np.exp(0.5j * alpha), np.pi / (2.0 * alpha),
                   "wedge of opening %g clipped to |x|, |y| <= %g"
                   % (alpha, L))


def make_half_plane(x0=-1.0, X=100.0, Y=100.0, spacing=1.0):
    """Half-plane {Re z > x0} cut to [x0, X] x [-Y, Y].

    Parameters
    ----------
    x0 : float, optional (default: -1)
        Position of the boundary line, negative

    X : float, optional (default: 100)
        Right end of the window

    Y : float, optional (default: 100)
        Half height of the window

    spacing : float, optional (default: 1)
        Maximum edge length

    Returns
    -------
    fixture : Fixture
        Half-plane, start at 0
    """
    if not x0 < 0.0 < X:
        raise ValueError("Need x0 < 0 < X, got x0=%r, X=%r" % (x0, X))
    corners = [(x0, -Y), (X, -Y), (X, Y), (x0, Y)]
    vertices, frame = refine_polygon(corners, spacing, [1, 1, 1, 0])
    curve = BoundaryCurve(vertices, (x0, X, -Y, Y), frame,
                          support_unbounded=True)
    return Fixture("half_plane", curve, 0.0, 0.5,
                   "half-plane Re z > %g clipped to x <= %g, |y| <= %g"
                   % (x0, X, Y))


def make_strip(half_width=1.0, length=10.0, vertical=True, spacing=None):
    """Strip of given half width around the real or imaginary axis.

    Parameters
    ----------
    half_width : float, optional (default: 1)
        Distance of the boundary lines from the axis

    length : float, optional (default: 10)
        Half length of the window along the strip

    vertical : bool, optional (default: True)
        {|Re z| < half_width} if set, {|Im z| < half_width} otherwise

    spacing : float, optional (default: half_width / 20)
        Maximum edge length

    Returns
    -------
    fixture : Fixture
        Strip, start at 0
    """
    if spacing is None:
        spacing = half_width / 20.0
    w, Y = half_width, length
    if vertical:
        corners = [(w, -Y), (w, Y), (-w, Y), (-w, -Y)]
        frame = [0, 1, 0, 1]
        window = (-w, w, -Y, Y)
        description = "vertical strip |Re z| < %g clipped to |y| <= %g"
    else:
        corners = [(Y, -w), (Y, w), (-Y, w), (-Y, -w)]
        frame = [1, 0, 1, 0]
        window = (-Y, Y, -w, w)
        description = "horizontal strip |Im z| < %g clipped to |x| <= %g"
    vertices, frame = refine_polygon(corners, spacing, frame)
    curve = BoundaryCurve(vertices, window, frame, support_unbounded=True)
    return Fixture("strip", curve, 0.0, np.inf, description % (w, Y))


def make_cross(X=5.0, Y=5.0, spacing=0.25):
    """Cross-shaped domain C minus {|Re z| <= 1, |Im z| >= 1}.

    The domain is symmetric and Delta-convex, but it contains two
    half-planes, so E[tau^(p/2)] is infinite for p >= 1.

    Parameters
    ----------
    X : float, optional (default: 5)
        Half width of the window, greater than 1

    Y : float, optional (default: 5)
        Half height of the window, greater than 1

    spacing : float, optional (default: 0.25)
        Maximum edge length

    Returns
    -------
    fixture : Fixture
        Cross, start at 0
    """
    if not (X > 1.0 and Y > 1.0):
        raise ValueError("Window must exceed the unit square, got %r"
                         % ((X, Y),))
    corners = [(X, -Y), (X, Y), (1, Y), (1, 1), (-1, 1), (-1, Y), (-X, Y),
               (-X, -Y), (-1, -Y), (-1, -1), (1, -1), (1, -Y)]
    frame = [1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1]
    vertices, frame = refine_polygon(corners, spacing, frame)
    curve = BoundaryCurve(vertices, (X, Y), frame, support_unbounded=True)
    return Fixture("cross", curve, 0.0, 0.5,
                   "cross C \\ {|Re z| <= 1, |Im z| >= 1} clipped to "
                   "|x| <= %g, |y| <= %g" % (X, Y))


def make_slit_domain(spacing=0.05):
    """Square with two horizontal notches, symmetric but not Delta-convex.

    The notches {0 <= x <= 2, 0.9 <= |y| <= 1.1} cut the vertical segment
    between z and conj(z) for points above them.
    """
    corners = [(2, 0), (2, 0.9), (0, 0.9), (0, 1.1), (2, 1.1), (2, 2),
               (-2, 2), (-2, 0), (-2, -2), (2, -2), (2, -1.1), (0, -1.1),
               (0, -0.9), (2, -0.9)]
    vertices, _ = refine_polygon(corners, spacing)
    return Fixture("slit", BoundaryCurve(vertices), 0.0, np.inf,
                   "square [-2, 2]^2 with notches at |y| = 1")


def make_parabola(embed="X", X=20.0, n_vertices=2000):
    """Interior of the parabola {u = v^2 / 4 - 1}.

    z -> z^2 maps the strip {|Im z| < 1} two-to-one onto this domain and
    sends 0 to 0, so the exit law from 0 is the pushforward of the strip
    exit law.

    Parameters
    ----------
    embed : string, optional (default: 'X')
        'X' keeps the parabola open to the right. 'Y' rotates it by
        w -> -i w, which moves the imaginary part of the exit position to
        the real axis.

    X : float, optional (default: 20)
        Right end of the window, the parabola meets it at |v| = 2 sqrt(X + 1)

    n_vertices : int, optional (default: 2000)
        Number of vertices on the parabola

    Returns
    -------
    fixture : Fixture
        Parabola, start at 0
    """
    if embed not in ("X", "Y"):
        raise ValueError("embed must be 'X' or 'Y', got %r" % (embed,))
    Y = 2.0 * np.sqrt(X + 1.0)
    v = np.linspace(Y, -Y, n_vertices)
    arc = np.column_stack((0.25 * v ** 2 - 1.0, v))
    side = _segment_points(arc[-1], arc[0],
                           np.median(np.hypot(*np.diff(arc, axis=0).T)))
    vertices = np.vstack((arc, side[1:-1]))
    frame = np.zeros(len(vertices), dtype=bool)
    frame[len(arc) - 1:] = True
    window = (-1.5, X, -Y, Y)
    if embed == "Y":
        vertices = np.column_stack((vertices[:, 1], -vertices[:, 0]))
        window = (-Y, Y, -X, 1.5)
    curve = BoundaryCurve(vertices, window, frame, support_unbounded=True)
    return Fixture("parabola", curve, 0.0, np.inf,
                   "parabola u > v^2 / 4 - 1 (%s embedding) clipped to "
                   "u <= %g" % (embed, X))


def make_ellipse(R=1.0, n_vertices=4096):
    """Ellipse x^2 / cosh(R)^2 + y^2 / sinh(R)^2 < 1, the image of the strip
    {|Im z| < R} under sin."""
    if not R > 0.0:
        raise ValueError("R must be positive, got %r" % R)
    t = 2.0 * np.pi * (np.arange(n_vertices) + 0.5) / n_vertices
    curve = BoundaryCurve(np.column_stack((np.cosh(R) * np.cos(t),
                                           np.sinh(R) * np.sin(t))))
    return Fixture("ellipse", curve, 0.0, np.inf,
                   "ellipse with semi-axes cosh(%g), sinh(%g)" % (R, R))


def make_hyperbola(delta=2.0, X=20.0, n_vertices=2000):
    """Region {x > sqrt(1 + y^2)} right of the hyperbola x^2 - y^2 = 1.

    The square map sends it onto the half-plane {Re w > 1}.

    Parameters
    ----------
    delta : float, optional (default: 2)
        The start point is sqrt(delta), delta > 1

    X : float, optional (default: 20)
        Right end of the window

    n_vertices : int, optional (default: 2000)
        Number of vertices on the hyperbola

    Returns
    -------
    fixture : Fixture
        Hyperbola region
    """
    if not delta > 1.0:
        raise ValueError("delta must exceed 1, got %r" % delta)
    if not X ** 2 > delta:
        raise ValueError("Window X=%r does not contain the start" % X)
    Y = np.sqrt(X ** 2 - 1.0)
    s = np.linspace(np.arcsinh(Y), -np.arcsinh(Y), n_vertices)
    arc = np.column_stack((np.cosh(s), np.sinh(s)))
    arc[[0, -1], 0] = X
    side = _segment_points(arc[-1], arc[0],
                           np.median(np.hypot(*np.diff(arc, axis=0).T)))
    vertices = np.vstack((arc, side[1:-1]))
    frame = np.zeros(len(vertices), dtype=bool)
    frame[len(arc) - 1:] = True
    curve = BoundaryCurve(vertices, (0.5, X, -Y, Y), frame,
                          support_unbounded=True)
    return Fixture("hyperbola", curve, np.sqrt(delta), 1.0,
                   "region right of x^2 - y^2 = 1 clipped to x <= %g" % X)


def _segment_points(start, end, spacing):
    """Points from start to end, both included, at most spacing apart."""
    start = np.asarray(start, dtype=float)
    end = np.asarray(end, dtype=float)
    n = max(int(np.ceil(np.hypot(*(end - start)) / spacing)), 1)
    s = np.arange(n + 1)[:, np.newaxis] / float(n)
    return start + s * (end - start)


FIXTURES = {
    "disk": make_disk,
    "wedge": make_wedge,
    "half_plane": make_half_plane,
    "strip": make_strip,
    "cross": make_cross,
    "slit": make_slit_domain,
    "parabola": make_parabola,
    "ellipse": make_ellipse,
    "hyperbola": make_hyperbola,
}


def load_fixture(name, **kwargs):
    """Create a fixture by name.

    Parameters
    ----------
    name : string
        One of the keys of FIXTURES

    kwargs : dict
        Parameters of the factory

    Returns
    -------
    fixture : Fixture
        The fixture
    """
    if name not in FIXTURES:
        raise ValueError("Unknown fixture '%s', expected one of %r"
                         % (name, sorted(FIXTURES)))
    return FIXTURES[name](**kwargs)
