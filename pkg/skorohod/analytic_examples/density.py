"""Exit densities on a parameter interval and the change of variables engine.

A density is stored as a vectorized callable over one boundary parameter
(an angle, an abscissa or an ordinate). Boundary densities are taken with
respect to arclength; their mass with respect to the parameter is the value
times the arclength element 'jacobian', times the number of congruent
boundary pieces ('n_sheets') that share the parameter.
"""
import numpy as np
from ..utils.exceptions import (DerivativeVanishes, VerticalTangent,
                                EdgeSingularity)
from ..utils.io import write_csv, plot_curve
from ..utils.log import get_logger
from ..utils.quadrature import integrate, integrate_sqrt_edges, cell_masses


DOMAINS = ("disk", "disk_offcenter", "strip", "parabola", "ellipse",
           "hyperbola", "custom")
MARGINALS = ("boundary", "X", "Y")
NORMALIZATION_TOLERANCE = 1e-6
N_CDF_CELLS = 2048


class DensityCurve(object):
    """Probability density of one coordinate of the exit position.

    Parameters
    ----------
    func : callable
        Vectorized density, maps an array of parameters to values

    support : pair of floats
        Interval that carries the mass, ends may be infinite

    domain : string
        One of DOMAINS

    marginal : string
        'boundary' for a density with respect to arclength, 'X' or 'Y' for
        the real or imaginary part of the exit position

    singular : sequence of floats, optional (default: ())
        Parameters at which the mass density has an integrable inverse
        square root singularity

    jacobian : callable, optional (default: None)
        Arclength per unit parameter, 1 if not given

    n_sheets : int, optional (default: 1)
        Number of boundary pieces that are described by the same function

    plot_range : pair of floats, optional (default: support)
        Interval of the evaluation grid, required for unbounded supports

    n_points : int, optional (default: 1001)
        Number of grid points, placed at cell midpoints so that the ends of
        the range are never evaluated

    metadata : dict, optional (default: None)
        Construction details such as series truncation bounds
    """
    def __init__(self, func, support, domain, marginal, singular=(),
                 jacobian=None, n_sheets=1, plot_range=None, n_points=1001,
                 metadata=None):
        if domain not in DOMAINS:
            raise ValueError("Unknown domain '%s', expected one of %s"
                             % (domain, ", ".join(DOMAINS)))
        if marginal not in MARGINALS:
            raise ValueError("Unknown marginal '%s', expected one of %s"
                             % (marginal, ", ".join(MARGINALS)))
        lo, hi = map(float, support)
        if not lo < hi:
            raise ValueError("Empty support [%g, %g]" % (lo, hi))
        if plot_range is None:
            if not (np.isfinite(lo) and np.isfinite(hi)):
                raise ValueError("Unbounded support needs a plot range")
            plot_range = (lo, hi)
        self.func = func
        self.support = (lo, hi)
        self.domain = domain
        self.marginal = marginal
        self.singular = tuple(sorted(float(s) for s in singular))
        self.jacobian = jacobian
        self.n_sheets = int(n_sheets)
        self.plot_range = (max(float(plot_range[0]), lo),
                           min(float(plot_range[1]), hi))
        self.n_points = int(n_points)
        self.metadata = {} if metadata is None else dict(metadata)
        self._normalization = None
        self._table = None

    def __call__(self, x):
        return self._evaluate(x, strict=True)

    def __repr__(self):
        return "DensityCurve(domain='%s', marginal='%s', support=%r)" % (
            self.domain, self.marginal, self.support)

    @property
    def grid(self):
        lo, hi = self.plot_range
        edges = np.linspace(lo, hi, self.n_points + 1)
        return 0.5 * (edges[:-1] + edges[1:])

    @property
    def values(self):
        return self(self.grid)

    def _evaluate(self, x, strict):
        x = np.asarray(x, dtype=float)
        flat = x.ravel()
        out = np.zeros(len(flat))
        lo, hi = self.support
        inside = (flat >= lo) & (flat <= hi)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            try:
                out[inside] = self.func(flat[inside])
            except (DerivativeVanishes, VerticalTangent):
                if strict:
                    raise
                out[inside] = [self._evaluate_point(t)
                               for t in flat[inside]]
        bad = ~np.isfinite(out)
        if np.any(bad):
            if strict:
                at = flat[np.argmax(bad)]
                raise EdgeSingularity(
                    "%s density of the %s is singular at %g"
                    % (self.marginal, self.domain, at))
            out[bad] = 0.0
        if x.ndim == 0:
            return float(out[0])
        return out.reshape(x.shape)

    def _evaluate_point(self, t):
        try:
            return float(self.func(np.array([t]))[0])
        except (DerivativeVanishes, VerticalTangent):
            return 0.0

    def mass_density(self, x):
        """Density with respect to the parameter, zero at singular points."""
        values = self._evaluate(x, strict=False)
        if self.jacobian is not None:
            with np.errstate(divide="ignore", invalid="ignore",
                             over="ignore"):
                values = values * self.jacobian(np.asarray(x, dtype=float))
            values = np.where(np.isfinite(values), values, 0.0)
        return self.n_sheets * values

    def _pieces(self):
        lo, hi = self.support
        cuts = [lo] + [s for s in self.singular if lo < s < hi] + [hi]
        return list(zip(cuts[:-1], cuts[1:]))

    def _integrate(self, a, b):
        """Mass on [a, b], refined at singular ends."""
        return integrate_sqrt_edges(self.mass_density, a, b,
                                    left=a in self.singular,
                                    right=b in self.singular)

    def normalization(self):
        """Total mass by adaptive quadrature, 1 for a probability density.

        Raises
        ------
        QuadratureFailure
            If a piece of the support does not converge.
        """
        if self._normalization is None:
            self._normalization = sum(
                self._integrate(a, b) for a, b in self._pieces())
        return self._normalization

    def is_normalized(self, tol=NORMALIZATION_TOLERANCE):
        return abs(self.normalization() - 1.0) <= tol

    def _cdf_table(self):
        if self._table is None:
            lo, hi = self.plot_range
            nodes = np.union1d(np.linspace(lo, hi, N_CDF_CELLS + 1),
                               [s for s in self.singular if lo < s < hi])
            both = (np.isin(nodes[:-1], self.singular) &
                    np.isin(nodes[1:], self.singular))
            nodes = np.union1d(
                nodes, 0.5 * (nodes[:-1][both] + nodes[1:][both]))
            masses = cell_masses(self.mass_density, nodes, self.singular)
            start = 0.0
            if self.support[0] < lo:
                start = self._integrate(self.support[0], lo)
            cumulative = start + np.concatenate(([0.0], np.cumsum(masses)))
            self._table = nodes, cumulative
        return self._table

    def cdf(self, x):
        """Distribution function, interpolated between quadrature nodes.

        Parameters
        ----------
        x : array-like
            Parameters

        Returns
        -------
        F : array
            Mass on (support[0], x]
        """
        nodes, cumulative = self._cdf_table()
        scalar = np.ndim(x) == 0
        x = np.atleast_1d(np.asarray(x, dtype=float))
        F = np.interp(x, nodes, cumulative)
        lo, hi = self.support
        for value in np.unique(x[(x < nodes[0]) & (x > lo)]):
            F[x == value] = integrate(self.mass_density, lo, value)
        for value in np.unique(x[(x > nodes[-1]) & (x < hi)]):
            F[x == value] = 1.0 - integrate(self.mass_density, value, hi)
        F[x <= lo] = 0.0
        F[x >= hi] = 1.0
        F = np.clip(F, 0.0, 1.0)
        return float(F[0]) if scalar else F

    def to_csv(self, filename):
        write_csv(filename, [self.grid, self.values], ["param", "value"])

    def plot(self, filename, title=None):
        xlabel = {"boundary": "boundary parameter", "X": "Re", "Y": "Im"}
        plot_curve(filename, self.grid, self.values,
                   xlabel=xlabel[self.marginal], ylabel="density",
                   title=title)

    def summary(self):
        """JSON friendly description including the normalization check."""
        return {"domain": self.domain,
                "marginal": self.marginal,
                "support": list(self.support),
                "normalization": self.normalization(),
                "n_points": self.n_points,
                "metadata": self.metadata}


def pushforward_density(rho, branches, derivative, support,
                        domain="custom", marginal="boundary", singular=(),
                        jacobian=None, n_sheets=1, plot_range=None,
                        n_points=1001, metadata=None):
    """Density of f(T) from the density of T.

    For a map with countably many preimages

        rho_f(x) = sum_{t in f^-1(x)} rho(t) / |f'(t)|

    Parameters
    ----------
    rho : callable
        Density of the source parameter, e.g. a DensityCurve

    branches : callable
        Maps an array of target parameters x to an array of shape
        (n_branches, n) of preimages, NaN where a branch has none

    derivative : callable
        |f'| as a function of the source parameter

    support : pair of floats
        Support of the target density

    Other parameters are passed on to DensityCurve. Critical values of f
    belong into 'singular' so that grids and quadrature avoid them.

    Returns
    -------
    curve : DensityCurve
        Target density

    Raises
    ------
    DerivativeVanishes
        When the result is evaluated at a critical value.
    """
    def func(x):
        t = np.atleast_2d(np.asarray(branches(x), dtype=float))
        valid = np.isfinite(t)
        t0 = np.where(valid, t, 0.0)
        d = np.abs(np.asarray(derivative(t0), dtype=float))
        d = np.broadcast_to(d, t.shape)
        if np.any(valid & (d == 0.0)):
            at = t0[valid & (d == 0.0)][0]
            raise DerivativeVanishes("Derivative of the map vanishes at "
                                     "source parameter %g" % at)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.asarray(rho(t0), dtype=float) / d
        return np.sum(np.where(valid, terms, 0.0), axis=0)

    return DensityCurve(func, support, domain, marginal, singular, jacobian,
                        n_sheets, plot_range, n_points, metadata)


def marginalize(rho_boundary, branch_graphs, axis="X", support=None,
                domain="custom", singular=(), plot_range=None, n_points=1001,
                metadata=None, log_to_file=False, log_to_stdout=False):
    """Density of the real or imaginary part of the exit position.

    Where the boundary is a union of graphs y = g(x) (axis 'X') or
    x = g(y) (axis 'Y'),

        rho_X(x) = sum_g rho(x + i g(x)) sqrt(1 + g'(x) ** 2)

    Parameters
    ----------
    rho_boundary : callable
        Density with respect to arclength, maps complex boundary points to
        values

    branch_graphs : list of pairs of callables (g, g')
        Graph functions, NaN outside their range

    axis : string, optional (default: 'X')
        'X' for the real part, 'Y' for the imaginary part

    support : pair of floats
        Support of the marginal

    singular : sequence of floats, optional (default: ())
        Points with vertical tangents, they are flagged in the metadata and
        refined by the quadrature

    Returns
    -------
    curve : DensityCurve
        Marginal density

    Raises
    ------
    VerticalTangent
        When the result is evaluated where a graph has infinite slope.
    """
    if axis not in ("X", "Y"):
        raise ValueError("axis must be 'X' or 'Y', got %r" % (axis,))
    if support is None:
        raise ValueError("A marginal needs its support")
    logger = get_logger("marginalize", log_to_file, log_to_stdout)
    if singular:
        logger.warning("%s marginal of the %s has vertical tangents at %s"
                       % (axis, domain, ", ".join("%g" % s
                                                  for s in singular)))

    def func(x):
        total = np.zeros(len(x))
        for g, dg in branch_graphs:
            h = np.asarray(g(x), dtype=float)
            slope = np.asarray(dg(x), dtype=float)
            valid = np.isfinite(h)
            if np.any(valid & ~np.isfinite(slope)):
                at = x[valid & ~np.isfinite(slope)][0]
                raise VerticalTangent("Boundary of the %s has a vertical "
                                      "tangent at %g" % (domain, at))
            h = np.where(valid, h, 0.0)
            z = x + 1j * h if axis == "X" else h + 1j * x
            arc = np.sqrt(1.0 + np.where(valid, slope, 0.0) ** 2)
            total += np.where(valid, rho_boundary(z) * arc, 0.0)
        return total

    metadata = {} if metadata is None else dict(metadata)
    metadata["vertical_tangents"] = [float(s) for s in singular]
    return DensityCurve(func, support, domain, axis, singular,
                        plot_range=plot_range, n_points=n_points,
                        metadata=metadata)
