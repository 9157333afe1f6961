"""Closed-form exit densities of Brownian motion from classical domains.

Every domain here is the conformal image of the disk, the strip or a
half-plane, so its exit law is the pushforward of a Poisson kernel.
"""
import numpy as np
from ..utils.mathext import sech
from .density import DensityCurve, pushforward_density, marginalize


SERIES_TOLERANCE = 1e-12


def disk_density(a=0.0, n_points=1001):
    """Poisson kernel of the unit disk as a density in the angle.

    rho_a(e^{i theta}) = (1 - |a|^2) / (2 pi |e^{i theta} - a|^2)

    Parameters
    ----------
    a : complex, optional (default: 0)
        Start point, |a| < 1

    n_points : int, optional (default: 1001)
        Grid size

    Returns
    -------
    curve : DensityCurve
        Density on (-pi, pi)
    """
    a = _check_disk_start(a)
    func = _poisson_kernel(a)
    return DensityCurve(lambda theta: func(np.exp(1j * theta)),
                        (-np.pi, np.pi), _disk_tag(a), "boundary",
                        n_points=n_points,
                        metadata={"start": [a.real, a.imag]})


def disk_marginal(a=0.0, axis="X", n_points=1001):
    """Density of the real or imaginary part of the exit position.

    From the center this is the arcsine law 1 / (pi sqrt(1 - x^2)).
    """
    a = _check_disk_start(a)

    def upper(x):
        return np.sqrt((1.0 - x) * (1.0 + x))

    def upper_slope(x):
        return -x / np.sqrt((1.0 - x) * (1.0 + x))

    branches = [(upper, upper_slope),
                (lambda x: -upper(x), lambda x: -upper_slope(x))]
    return marginalize(_poisson_kernel(a), branches, axis, (-1.0, 1.0),
                       _disk_tag(a), singular=(-1.0, 1.0),
                       n_points=n_points,
                       metadata={"start": [a.real, a.imag]})


def _check_disk_start(a):
    a = complex(a)
    if not abs(a) < 1.0:
        raise ValueError("Start %r is not inside the unit disk" % (a,))
    return a


def _disk_tag(a):
    return "disk" if a == 0.0 else "disk_offcenter"


def _poisson_kernel(a):
    def func(z):
        return (1.0 - abs(a) ** 2) / (2.0 * np.pi * np.abs(z - a) ** 2)
    return func


def strip_density(half_width=1.0, marginal="boundary", n_points=1001):
    """Exit density of the strip {|Im z| < w} from 0.

    Each of the two lines carries mass 1/2 with density
    sech(pi x / (2 w)) / (4 w); their sum is the density of the real part.

    Parameters
    ----------
    half_width : float, optional (default: 1)
        Half width w

    marginal : string, optional (default: 'boundary')
        'boundary' for the density on one line, 'X' for the real part

    n_points : int, optional (default: 1001)
        Grid size

    Returns
    -------
    curve : DensityCurve
        Density on the real line
    """
    w = float(half_width)
    if not w > 0.0:
        raise ValueError("Half width must be positive, got %r" % w)
    if marginal == "boundary":
        func, n_sheets = lambda x: sech(0.5 * np.pi * x / w) / (4.0 * w), 2
    elif marginal == "X":
        func, n_sheets = lambda x: sech(0.5 * np.pi * x / w) / (2.0 * w), 1
    else:
        raise ValueError("The strip has 'boundary' and 'X' densities, got "
                         "%r" % (marginal,))
    return DensityCurve(func, (-np.inf, np.inf), "strip", marginal,
                        n_sheets=n_sheets, plot_range=(-10.0 * w, 10.0 * w),
                        n_points=n_points, metadata={"half_width": w})


def strip_marginal(half_width=1.0, n_points=1001):
    """Density sech(pi x / (2 w)) / (2 w) of the real part."""
    return strip_density(half_width, "X", n_points)


def parabola_density(marginal="Y", n_points=1001):
    """Exit densities of the interior of the parabola {u = v^2 / 4 - 1}.

    The square map sends the strip {|Im z| < 1} onto the domain, the line
    point s +- i goes to the boundary point with ordinate v = +-2 s and
    |f'| = 2 sqrt(s^2 + 1). This gives the boundary density

        sech(pi v / 4) / (4 sqrt(v^2 / 4 + 1))

    whose Y marginal sech(pi v / 4) / 4 is the strip density rescaled, and
    whose X marginal is sech(pi sqrt(u + 1) / 2) / (2 sqrt(u + 1)).

    Parameters
    ----------
    marginal : string, optional (default: 'Y')
        'boundary' (parametrized by v), 'X' or 'Y'

    n_points : int, optional (default: 1001)
        Grid size

    Returns
    -------
    curve : DensityCurve
        Density
    """
    line = strip_density(1.0, "boundary")
    boundary = pushforward_density(
        line, lambda v: [0.5 * v, -0.5 * v],
        lambda s: 2.0 * np.sqrt(s * s + 1.0), (-np.inf, np.inf),
        "parabola", "boundary",
        jacobian=lambda v: np.sqrt(1.0 + 0.25 * v * v),
        plot_range=(-20.0, 20.0), n_points=n_points)
    if marginal == "boundary":
        return boundary

    def rho(z):
        return boundary(z.imag)

    if marginal == "Y":
        branches = [(lambda v: 0.25 * v * v - 1.0, lambda v: 0.5 * v)]
        return marginalize(rho, branches, "Y", (-np.inf, np.inf), "parabola",
                           plot_range=(-20.0, 20.0), n_points=n_points)
    if marginal == "X":
        def upper(u):
            return 2.0 * np.sqrt(u + 1.0)

        def upper_slope(u):
            return 1.0 / np.sqrt(u + 1.0)

        branches = [(upper, upper_slope),
                    (lambda u: -upper(u), lambda u: -upper_slope(u))]
        return marginalize(rho, branches, "X", (-1.0, np.inf), "parabola",
                           singular=(-1.0,), plot_range=(-1.0, 30.0),
                           n_points=n_points)
    raise ValueError("Unknown marginal %r" % (marginal,))


def sech_series_terms(R, tol=SERIES_TOLERANCE):
    """Number of terms on each side of sum_k sech(pi (s + k pi) / (2 R)).

    With |s| <= pi / 2 and sech(x) <= 2 exp(-|x|), the terms beyond J on
    both sides add up to at most 4 exp(-c (J + 1/2)) / (1 - exp(-c)) with
    c = pi^2 / (2 R).

    Returns
    -------
    n_terms : int
        Smallest J >= 1 whose tail bound is below tol

    tail_bound : float
        The bound
    """
    c = np.pi ** 2 / (2.0 * R)
    J = 1
    while True:
        bound = 4.0 * np.exp(-c * (J + 0.5)) / -np.expm1(-c)
        if bound < tol:
            return J, float(bound)
        J += 1


def _sech_series(s, R, n_terms):
    k = np.arange(-n_terms, n_terms + 1)[:, np.newaxis]
    return np.sum(sech(0.5 * np.pi / R * (s + k * np.pi)), axis=0)


def ellipse_density(R=1.0, marginal="X", tol=SERIES_TOLERANCE,
                    n_points=1001):
    """Exit densities of the ellipse u^2 / cosh(R)^2 + v^2 / sinh(R)^2 < 1.

    sin maps the strip {|Im z| < R} onto the ellipse and 0 to 0. Every
    abscissa u has the preimages arcsin(u / cosh R) + k pi, k in Z, which
    gives

        rho_X(u) = sum_k sech(pi (arcsin(u / cosh R) + k pi) / (2 R))
                   / (2 R sqrt(cosh(R)^2 - u^2))

    Parameters
    ----------
    R : float, optional (default: 1)
        Half width of the strip, R > 0

    marginal : string, optional (default: 'X')
        'boundary' (parametrized by u, both halves), 'X' or 'Y'

    tol : float, optional (default: 1e-12)
        Bound on the truncated series tail

    n_points : int, optional (default: 1001)
        Grid size

    Returns
    -------
    curve : DensityCurve
        Density, the series truncation is recorded in its metadata
    """
    R = float(R)
    if not R > 0.0:
        raise ValueError("R must be positive, got %r" % R)
    n_terms, tail_bound = sech_series_terms(R, tol)
    metadata = {"R": R, "n_terms": n_terms, "tail_bound": tail_bound}
    a, b = np.cosh(R), np.sinh(R)
    if marginal == "X":
        def func(u):
            s = np.arcsin(u / a)
            return (_sech_series(s, R, n_terms) /
                    (2.0 * R * np.sqrt((a - u) * (a + u))))
        return DensityCurve(func, (-a, a), "ellipse", "X", singular=(-a, a),
                            n_points=n_points, metadata=metadata)

    boundary = ellipse_boundary_density(R, tol, n_points)
    if marginal == "boundary":
        return boundary
    if marginal == "Y":
        def right(v):
            return a * np.sqrt((1.0 - v / b) * (1.0 + v / b))

        def right_slope(v):
            return -a * v / (b * b * np.sqrt((1.0 - v / b) * (1.0 + v / b)))

        branches = [(right, right_slope),
                    (lambda v: -right(v), lambda v: -right_slope(v))]
        return marginalize(lambda z: boundary(z.real), branches, "Y",
                           (-b, b), "ellipse", singular=(-b, b),
                           n_points=n_points, metadata=metadata)
    raise ValueError("Unknown marginal %r" % (marginal,))


def ellipse_boundary_density(R=1.0, tol=SERIES_TOLERANCE, n_points=1001):
    """Arclength density on the ellipse, through the pushforward engine.

    Source parameter is the abscissa s on a line of the strip, the map is
    sin with |f'(s + iR)| = sqrt(cosh(R)^2 - sin(s)^2). The upper and the
    lower half of the ellipse carry the same density.
    """
    R = float(R)
    n_terms, tail_bound = sech_series_terms(R, tol)
    a, b = np.cosh(R), np.sinh(R)
    line = strip_density(R, "boundary")
    k = np.arange(-n_terms, n_terms + 1)[:, np.newaxis]

    def branches(u):
        return np.arcsin(u / a) + k * np.pi

    def derivative(s):
        return np.sqrt(a * a - np.sin(s) ** 2)

    def jacobian(u):
        slope = b * u / (a * np.sqrt((a - u) * (a + u)))
        return np.sqrt(1.0 + slope * slope)

    return pushforward_density(
        line, branches, derivative, (-a, a), "ellipse", "boundary",
        singular=(-a, a), jacobian=jacobian, n_sheets=2, n_points=n_points,
        metadata={"R": R, "n_terms": n_terms, "tail_bound": tail_bound})


def half_plane_density(delta):
    """Cauchy density of the exit ordinate from delta > 1 in {Re w > 1}."""
    d = float(delta) - 1.0
    return lambda eta: d / (np.pi * (d * d + eta * eta))


def hyperbola_density(delta=2.0, marginal="Y", n_points=1001):
    """Exit densities of the region {x > sqrt(1 + y^2)} from sqrt(delta).

    The square map sends the region onto the half-plane {Re w > 1} and the
    boundary point x + iy to 1 + i eta with eta = 2 x y. With
    d = delta - 1,

        rho_X(x) = 2 d / pi * 2 (2 x^2 - 1)
                   / ((d^2 + 4 x^2 (x^2 - 1)) sqrt(x^2 - 1)),   x > 1

        rho_Y(y) = 2 d / pi * (1 + 2 y^2)
                   / ((d^2 + 4 y^2 (1 + y^2)) sqrt(1 + y^2))

    Parameters
    ----------
    delta : float, optional (default: 2)
        Image of the start point under the square map, delta > 1

    marginal : string, optional (default: 'Y')
        'boundary' (parametrized by y), 'X' or 'Y'

    n_points : int, optional (default: 1001)
        Grid size

    Returns
    -------
    curve : DensityCurve
        Density
    """
    delta = float(delta)
    if not delta > 1.0:
        raise ValueError("delta must exceed 1, got %r" % delta)
    d = delta - 1.0
    metadata = {"delta": delta, "start": [np.sqrt(delta), 0.0]}
    if marginal == "X":
        def func(x):
            return (4.0 * d / np.pi * (2.0 * x * x - 1.0) /
                    ((d * d + 4.0 * x * x * (x * x - 1.0)) *
                     np.sqrt((x - 1.0) * (x + 1.0))))
        return DensityCurve(func, (1.0, np.inf), "hyperbola", "X",
                            singular=(1.0,), plot_range=(1.0, 10.0),
                            n_points=n_points, metadata=metadata)
    if marginal == "Y":
        def func(y):
            return (2.0 * d / np.pi * (1.0 + 2.0 * y * y) /
                    ((d * d + 4.0 * y * y * (1.0 + y * y)) *
                     np.sqrt(1.0 + y * y)))
        return DensityCurve(func, (-np.inf, np.inf), "hyperbola", "Y",
                            plot_range=(-10.0, 10.0), n_points=n_points,
                            metadata=metadata)
    if marginal == "boundary":
        return hyperbola_boundary_density(delta, n_points)
    raise ValueError("Unknown marginal %r" % (marginal,))


def hyperbola_boundary_density(delta=2.0, n_points=1001):
    """Arclength density on the hyperbola, through the pushforward engine.

    The inverse of the square map takes 1 + i eta to the boundary point
    with ordinate y, eta = 2 y sqrt(1 + y^2), and has
    |d sqrt(w) / dw| = 1 / (2 (1 + eta^2)^(1/4)).
    """
    delta = float(delta)
    if not delta > 1.0:
        raise ValueError("delta must exceed 1, got %r" % delta)
    return pushforward_density(
        half_plane_density(delta),
        lambda y: 2.0 * y * np.sqrt(1.0 + y * y),
        lambda eta: 0.5 / (1.0 + eta * eta) ** 0.25,
        (-np.inf, np.inf), "hyperbola", "boundary",
        jacobian=lambda y: np.sqrt((1.0 + 2.0 * y * y) / (1.0 + y * y)),
        plot_range=(-10.0, 10.0), n_points=n_points,
        metadata={"delta": delta, "start": [np.sqrt(delta), 0.0]})


def density_curve(domain, marginal="boundary", start=0.0, R=1.0, delta=2.0,
                  n_points=1001):
    """Look up a density by domain name.

    Parameters
    ----------
    domain : string
        'disk', 'disk_offcenter', 'strip', 'parabola', 'ellipse' or
        'hyperbola'

    marginal : string, optional (default: 'boundary')
        'boundary', 'X' or 'Y'

    start : complex, optional (default: 0)
        Start point in the disk

    R : float, optional (default: 1)
        Ellipse parameter

    delta : float, optional (default: 2)
        Hyperbola parameter

    n_points : int, optional (default: 1001)
        Grid size

    Returns
    -------
    curve : DensityCurve
        Density
    """
    if domain in ("disk", "disk_offcenter"):
        if domain == "disk":
            start = 0.0
        if marginal == "boundary":
            return disk_density(start, n_points)
        return disk_marginal(start, marginal, n_points)
    if domain == "strip":
        return strip_density(1.0, marginal, n_points)
    if domain == "parabola":
        return parabola_density(marginal, n_points)
    if domain == "ellipse":
        return ellipse_density(R, marginal, n_points=n_points)
    if domain == "hyperbola":
        return hyperbola_density(delta, marginal, n_points)
    raise ValueError("Unknown domain '%s'" % domain)
