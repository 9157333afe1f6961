"""Adaptive and fixed-order quadrature with explicit failure reporting."""
import warnings
import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad, IntegrationWarning
from .exceptions import QuadratureFailure


def integrate(func, lo, hi, epsabs=1e-13, epsrel=1e-10, limit=500,
              points=None):
    """Integrate a scalar function with adaptive Gauss-Kronrod quadrature.

    Parameters
    ----------
    func : callable
        Integrand, maps float to float

    lo : float
        Lower bound, may be -inf

    hi : float
        Upper bound, may be inf

    epsabs : float, optional (default: 1e-13)
        Absolute tolerance

    epsrel : float, optional (default: 1e-10)
        Relative tolerance

    limit : int, optional (default: 500)
        Maximum number of subintervals

    points : array-like, optional (default: None)
        Break points inside a finite interval

    Returns
    -------
    value : float
        Integral

    Raises
    ------
    QuadratureFailure
        If the subdivision limit is reached or the estimate is not finite.
    """
    kwargs = dict(epsabs=epsabs, epsrel=epsrel, limit=limit)
    if points is not None and np.isfinite(lo) and np.isfinite(hi):
        points = [p for p in points if lo < p < hi]
        if points:
            kwargs["points"] = points
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, _ = quad(func, lo, hi, **kwargs)
        except IntegrationWarning as e:
            raise QuadratureFailure(
                "Quadrature on [%g, %g] did not converge: %s" % (lo, hi, e))
    if not np.isfinite(value):
        raise QuadratureFailure("Quadrature on [%g, %g] returned %r"
                                % (lo, hi, value))
    return value


def integrate_sqrt_edges(func, lo, hi, left=True, right=True, **kwargs):
    """Integrate a function with inverse square root singularities at edges.

    Near a singular edge the substitution x = edge +- w * s ** 2 turns
    (x - edge) ** -1/2 into a bounded integrand.

    Parameters
    ----------
    func : callable
        Integrand

    lo : float
        Lower bound, finite if 'left' is set

    hi : float
        Upper bound, finite if 'right' is set

    left : bool, optional (default: True)
        Integrand is singular at lo

    right : bool, optional (default: True)
        Integrand is singular at hi

    Returns
    -------
    value : float
        Integral
    """
    if np.isfinite(lo) and np.isfinite(hi):
        mid = 0.5 * (lo + hi)
    elif np.isfinite(lo):
        mid = lo + 1.0
    elif np.isfinite(hi):
        mid = hi - 1.0
    else:
        mid = 0.0

    total = 0.0
    if left:
        w = mid - lo
        total += integrate(lambda s: func(lo + w * s * s) * 2.0 * w * s,
                           0.0, 1.0, **kwargs)
    else:
        total += integrate(func, lo, mid, **kwargs)
    if right:
        w = hi - mid
        total += integrate(lambda s: func(hi - w * s * s) * 2.0 * w * s,
                           0.0, 1.0, **kwargs)
    else:
        total += integrate(func, mid, hi, **kwargs)
    return total


def cell_masses(func, nodes, singular=(), order=16):
    """Integrals of a function over consecutive cells, fixed Gauss rule.

    Every cell gets the same Gauss-Legendre rule, so the error of a cell is
    relative to its mass. A cell that ends in a singular node is integrated
    in s with x = node +- h * s ** 2, which removes an inverse square root.

    Parameters
    ----------
    func : callable
        Vectorized integrand

    nodes : array, shape (n_cells + 1,)
        Increasing, finite cell boundaries

    singular : sequence of floats, optional (default: ())
        Nodes at which the integrand may have an inverse square root
        singularity. No cell may have a singular node at both ends.

    order : int, optional (default: 16)
        Number of Gauss nodes per cell

    Returns
    -------
    masses : array, shape (n_cells,)
        Integral of every cell
    """
    nodes = np.asarray(nodes, dtype=float)
    a, b = nodes[:-1], nodes[1:]
    h = b - a
    left = np.isin(a, singular)
    right = np.isin(b, singular)
    if np.any(left & right):
        raise ValueError("A cell is singular at both ends, insert a node "
                         "between %g and %g" % (a[left & right][0],
                                                b[left & right][0]))
    t, w = leggauss(order)
    s = 0.5 * (t + 1.0)
    x = a[:, np.newaxis] + h[:, np.newaxis] * s
    weights = np.outer(h, 0.5 * w)
    for mask, edge, sign in ((left, a, 1.0), (right, b, -1.0)):
        if np.any(mask):
            x[mask] = edge[mask, np.newaxis] + \
                sign * h[mask, np.newaxis] * s * s
            weights[mask] = np.outer(h[mask], w * s)
    values = np.asarray(func(x.ravel()), dtype=float).reshape(x.shape)
    masses = np.sum(values * weights, axis=1)
    if not np.all(np.isfinite(masses)):
        raise QuadratureFailure("Gauss rule on [%g, %g] returned a non-finite"
                                " cell mass" % (nodes[0], nodes[-1]))
    return masses
