"""Target distributions of the embedding."""

from abc import ABCMeta, abstractmethod
import numpy as np
from scipy.special import gammaln, ndtr, ndtri, xlogy
from ..base import Base
from ..utils.exceptions import (NonIntegrableMean, DegenerateMeasure)
from ..utils.mathext import norm_ppf, norm_pdf
from ..utils.module_loader import from_dict, load_config
from ..utils.quadrature import integrate
from ..utils.validation import (check_p_target, check_probability_vector,
                                check_finite, check_random_state)
from .quantile import QuantileFn


class MeasureSpec(Base, metaclass=ABCMeta):
    """Declarative description of a probability distribution on the line.

    Parameters
    ----------
    p : float
        Moment order the distribution is asserted to have, must exceed 1

    shift : float
        Total translation applied by centering so far (metadata only)
    """
    kind = None

    @abstractmethod
    def mean(self):
        """Mean of the distribution."""

    @abstractmethod
    def cdf(self, x):
        """Right-continuous distribution function."""

    @abstractmethod
    def quantile(self):
        """Quantile function G."""

    @abstractmethod
    def moment(self, q):
        """Absolute moment E[|X| ** q]."""

    @abstractmethod
    def shifted(self, offset):
        """Translated copy of the distribution."""

    @abstractmethod
    def to_dict(self):
        """Configuration dictionary, inverse of measure_from_dict."""

    @property
    def is_atomic(self):
        """Whether the distribution has atoms."""
        return False


class BuiltinMeasure(MeasureSpec):
    """Closed-form distribution families.

    Parameters
    ----------
    name : string
        One of 'uniform' (a, b), 'gaussian' (sigma), 'laplace' (b),
        'two_point' (c) and 'arcsine' (r)

    params : dict, optional (default: family defaults)
        Family parameters

    p : float, optional (default: 2)
        Moment order the distribution is asserted to have

    shift : float, optional (default: 0)
        Total translation applied by centering so far
    """
    kind = "builtin"

    def __init__(self, name, params=None, p=2.0, shift=0.0):
        self.name = name
        self.params = params
        self.p = check_p_target(p)
        self.shift = float(shift)

        if name not in FAMILIES:
            raise ValueError("Unknown builtin distribution '%s', expected one "
                             "of %r" % (name, sorted(FAMILIES)))
        defaults = FAMILIES[name]
        values = dict(defaults)
        if params is not None:
            unknown = set(params) - set(defaults)
            if unknown:
                raise ValueError("Unknown parameters %r for '%s'"
                                 % (sorted(unknown), name))
            values.update(dict((k, float(v)) for k, v in params.items()))
        self._values = values
        if name == "uniform":
            if not values["a"] < values["b"]:
                raise ValueError("uniform requires a < b, got %r" % values)
        else:
            scale = list(values.values())[0]
            if not scale > 0.0:
                raise ValueError("'%s' requires a positive scale, got %r"
                                 % (name, values))

    @property
    def is_atomic(self):
        return self.name == "two_point"

    def mean(self):
        if self.name == "uniform":
            return 0.5 * (self._values["a"] + self._values["b"])
        return 0.0

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        v = self._values
        if self.name == "uniform":
            return np.clip((x - v["a"]) / (v["b"] - v["a"]), 0.0, 1.0)
        elif self.name == "gaussian":
            return ndtr(x / v["sigma"])
        elif self.name == "laplace":
            z = x / v["b"]
            return np.where(z < 0.0, 0.5 * np.exp(np.minimum(z, 0.0)),
                            1.0 - 0.5 * np.exp(-np.maximum(z, 0.0)))
        elif self.name == "two_point":
            c = v["c"]
            return np.where(x < -c, 0.0, np.where(x < c, 0.5, 1.0))
        else:
            r = v["r"]
            return 0.5 + np.arcsin(np.clip(x / r, -1.0, 1.0)) / np.pi

    def quantile(self):
        v = self._values
        if self.name == "uniform":
            a, b = v["a"], v["b"]
            return QuantileFn(lambda u: a + (b - a) * u,
                              lambda u: a * u + 0.5 * (b - a) * u ** 2, a, b)
        elif self.name == "gaussian":
            sigma = v["sigma"]
            return QuantileFn(lambda u: sigma * norm_ppf(u),
                              lambda u: -sigma * norm_pdf(ndtri(u)),
                              -np.inf, np.inf)
        elif self.name == "laplace":
            b = v["b"]

            def evaluator(u):
                lower = np.minimum(u, 1.0 - u)
                with np.errstate(divide="ignore"):
                    x = b * np.log(2.0 * lower)
                return np.where(u <= 0.5, x, -x)

            def integral(u):
                t = np.minimum(u, 1.0 - u)
                return b * (xlogy(t, 2.0 * t) - t)
            return QuantileFn(evaluator, integral, -np.inf, np.inf)
        elif self.name == "two_point":
            c = v["c"]
            return QuantileFn(
                lambda u: np.where(u <= 0.5, -c, c),
                lambda u: c * (np.maximum(u - 0.5, 0.0) -
                               np.minimum(u, 0.5)),
                -c, c, jumps=[0.5], continuous=False)
        else:
            r = v["r"]
            return QuantileFn(lambda u: -r * np.cos(np.pi * u),
                              lambda u: -r * np.sin(np.pi * u) / np.pi, -r, r)

    def moment(self, q):
        q = _check_order(q)
        v = self._values
        if self.name == "uniform":
            a, b = v["a"], v["b"]
            if a >= 0.0 or b <= 0.0:
                lo, hi = sorted((abs(a), abs(b)))
                total = hi ** (q + 1) - lo ** (q + 1)
            else:
                total = abs(a) ** (q + 1) + b ** (q + 1)
            return total / ((q + 1.0) * (b - a))
        elif self.name == "gaussian":
            return v["sigma"] ** q * np.exp(
                0.5 * q * np.log(2.0) + gammaln(0.5 * (q + 1.0)) -
                0.5 * np.log(np.pi))
        elif self.name == "laplace":
            return v["b"] ** q * np.exp(gammaln(q + 1.0))
        elif self.name == "two_point":
            return v["c"] ** q
        else:
            return v["r"] ** q * np.exp(
                gammaln(0.5 * (q + 1.0)) - 0.5 * np.log(np.pi) -
                gammaln(0.5 * q + 1.0))

    def shifted(self, offset):
        if offset == 0.0:
            return self
        if self.name != "uniform":
            raise ValueError("Only 'uniform' can be translated, '%s' is "
                             "centered by definition" % self.name)
        a, b = self._values["a"], self._values["b"]
        return BuiltinMeasure("uniform", {"a": a + offset, "b": b + offset},
                              p=self.p, shift=self.shift + offset)

    def to_dict(self):
        return {"kind": self.kind, "name": self.name,
                "params": dict(self._values), "p": self.p}


FAMILIES = {
    "uniform": {"a": -1.0, "b": 1.0},
    "gaussian": {"sigma": 1.0},
    "laplace": {"b": 1.0},
    "two_point": {"c": 1.0},
    "arcsine": {"r": 1.0},
}


class DiscreteMeasure(MeasureSpec):
    """Distribution with finitely many atoms.

    Parameters
    ----------
    atoms : list of pairs (x, weight)
        Atom positions and their positive weights, summing to 1

    p : float, optional (default: 2)
        Moment order the distribution is asserted to have

    shift : float, optional (default: 0)
        Total translation applied by centering so far
    """
    kind = "discrete"

    def __init__(self, atoms, p=2.0, shift=0.0):
        self.atoms = atoms
        self.p = check_p_target(p)
        self.shift = float(shift)

        atoms = np.asarray(atoms, dtype=float)
        if atoms.ndim != 2 or atoms.shape[1] != 2:
            raise ValueError("Atoms must be a list of (x, weight) pairs, "
                             "got shape %r" % (atoms.shape,))
        x = check_finite(atoms[:, 0], "atom positions")
        w = check_probability_vector(atoms[:, 1])
        order = np.argsort(x, kind="mergesort")
        x, w = x[order], w[order]
        # merge repeated positions
        self.x_, inverse = np.unique(x, return_inverse=True)
        self.w_ = np.bincount(inverse, weights=w)
        self.cum_ = np.cumsum(self.w_)
        self.cum_[-1] = 1.0

    @property
    def is_atomic(self):
        return True

    def mean(self):
        return float(np.dot(self.x_, self.w_))

    def cdf(self, x):
        idx = np.searchsorted(self.x_, np.asarray(x, dtype=float),
                              side="right")
        return np.concatenate(([0.0], self.cum_))[idx]

    def quantile(self):
        x, cum = self.x_, self.cum_
        starts = np.concatenate(([0.0], cum))
        prefix = np.concatenate(([0.0], np.cumsum(x * self.w_)))

        def _index(u):
            return np.minimum(np.searchsorted(cum, u, side="left"),
                              len(x) - 1)

        def evaluator(u):
            return x[_index(u)]

        def integral(u):
            idx = _index(u)
            return prefix[idx] + x[idx] * (u - starts[idx])
        return QuantileFn(evaluator, integral, x[0], x[-1], jumps=cum[:-1],
                          continuous=len(x) == 1)

    def moment(self, q):
        q = _check_order(q)
        return float(np.dot(np.abs(self.x_) ** q, self.w_))

    def shifted(self, offset):
        if offset == 0.0:
            return self
        atoms = np.column_stack((self.x_ + offset, self.w_))
        return DiscreteMeasure(atoms.tolist(), p=self.p,
                               shift=self.shift + offset)

    def to_dict(self):
        return {"kind": self.kind,
                "atoms": np.column_stack((self.x_, self.w_)).tolist(),
                "p": self.p}


class TabulatedMeasure(MeasureSpec):
    """Distribution given by a piecewise linear distribution function.

    Knots with repeated x and increasing F are atoms, knots with repeated F
    are gaps of the support.

    Parameters
    ----------
    knots : list of pairs (x, F)
        Nondecreasing in both coordinates, F starts at 0 and ends at 1

    p : float, optional (default: 2)
        Moment order the distribution is asserted to have

    shift : float, optional (default: 0)
        Total translation applied by centering so far
    """
    kind = "tabulated_cdf"

    def __init__(self, knots, p=2.0, shift=0.0):
        self.knots = knots
        self.p = check_p_target(p)
        self.shift = float(shift)

        knots = np.asarray(knots, dtype=float)
        if knots.ndim != 2 or knots.shape[1] != 2 or len(knots) < 2:
            raise ValueError("Knots must be a list of at least two (x, F) "
                             "pairs, got shape %r" % (knots.shape,))
        x = check_finite(knots[:, 0], "knot positions")
        F = check_finite(knots[:, 1], "knot probabilities")
        if np.any(np.diff(x) < 0.0):
            raise ValueError("Knot positions must be nondecreasing")
        if np.any(np.diff(F) < 0.0):
            raise ValueError("Tabulated CDF must be nondecreasing")
        if abs(F[0]) > 1e-12 or abs(F[-1] - 1.0) > 1e-12:
            raise ValueError("Tabulated CDF must start at 0 and end at 1 "
                             "within 1e-12, got %r and %r" % (F[0], F[-1]))
        F = F.copy()
        F[0], F[-1] = 0.0, 1.0
        self.x_ = x
        self.F_ = F
        dF = np.diff(F)
        self.cell_integrals_ = np.concatenate(
            ([0.0], np.cumsum(0.5 * dF * (x[:-1] + x[1:]))))

    @property
    def is_atomic(self):
        return bool(np.any((np.diff(self.x_) == 0.0) &
                           (np.diff(self.F_) > 0.0)))

    def mean(self):
        mean = self.cell_integrals_[-1]
        if not np.isfinite(mean):
            raise NonIntegrableMean("Mean of tabulated CDF is not finite")
        return float(mean)

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        xs, F = self.x_, self.F_
        j = np.searchsorted(xs, x, side="right")
        inner = np.clip(j, 1, len(xs) - 1)
        x0, x1 = xs[inner - 1], xs[inner]
        F0, F1 = F[inner - 1], F[inner]
        width = np.where(x1 > x0, x1 - x0, 1.0)
        t = np.clip((x - x0) / width, 0.0, 1.0)
        value = np.where(x1 > x0, F0 + t * (F1 - F0), F1)
        return np.where(j == 0, 0.0, np.where(j == len(xs), 1.0, value))

    def quantile(self):
        xs, F, integrals = self.x_, self.F_, self.cell_integrals_
        n = len(xs)

        def evaluator(u):
            u = np.asarray(u, dtype=float)
            j = np.clip(np.searchsorted(F, u, side="left"), 1, n - 1)
            x0, x1 = xs[j - 1], xs[j]
            F0, F1 = F[j - 1], F[j]
            dF = np.where(F1 > F0, F1 - F0, 1.0)
            t = np.clip((u - F0) / dF, 0.0, 1.0)
            return x0 + t * (x1 - x0)

        def integral(u):
            u = np.asarray(u, dtype=float)
            j = np.clip(np.searchsorted(F, u, side="left"), 1, n - 1)
            u_clipped = np.clip(u, F[j - 1], F[j])
            return (integrals[j - 1] +
                    0.5 * (u_clipped - F[j - 1]) * (xs[j - 1] +
                                                    evaluator(u_clipped)))

        flat = (np.diff(F) == 0.0) & (np.diff(xs) > 0.0)
        jumps = np.unique(F[:-1][flat])
        jumps = jumps[(jumps > 0.0) & (jumps < 1.0)]
        return QuantileFn(evaluator, integral, xs[0], xs[-1], jumps=jumps,
                          continuous=len(jumps) == 0)

    def moment(self, q):
        q = _check_order(q)
        G = self.quantile()
        breaks = self.F_[1:-1]
        return integrate(lambda u: abs(float(G(u))) ** q, 0.0, 1.0,
                         epsrel=1e-10, points=breaks,
                         limit=max(500, 4 * len(breaks)))

    def shifted(self, offset):
        if offset == 0.0:
            return self
        knots = np.column_stack((self.x_ + offset, self.F_))
        return TabulatedMeasure(knots.tolist(), p=self.p,
                                shift=self.shift + offset)

    def to_dict(self):
        return {"kind": self.kind,
                "knots": np.column_stack((self.x_, self.F_)).tolist(),
                "p": self.p}


def _check_order(q):
    q = float(q)
    if not q > 0.0:
        raise ValueError("Moment order must be positive, got %r" % q)
    return q


def center(spec):
    """Translate a distribution to zero mean.

    Parameters
    ----------
    spec : MeasureSpec
        Distribution with finite mean

    Returns
    -------
    spec : MeasureSpec
        Centered distribution, 'shift' records the translation

    Raises
    ------
    NonIntegrableMean
        If the mean is not finite.
    """
    mean = spec.mean()
    if not np.isfinite(mean):
        raise NonIntegrableMean("Mean of %r is not finite" % (spec,))
    centered = spec.shifted(-mean)
    residual = centered.mean()
    if abs(residual) > 1e-10:
        raise NonIntegrableMean("Centering left a residual mean of %r"
                                % residual)
    return centered


def quantile(spec):
    """Quantile function G of a distribution."""
    return spec.quantile()


def moment(spec, q):
    """Absolute moment E[|X| ** q] of a distribution."""
    return spec.moment(q)


def check_measure(spec, tol=1e-10):
    """Check the hypotheses under which a domain can be synthesized.

    Parameters
    ----------
    spec : MeasureSpec
        Distribution

    tol : float, optional (default: 1e-10)
        Tolerance for the mean

    Returns
    -------
    spec : MeasureSpec
        The distribution

    Raises
    ------
    NonIntegrableMean
        If the mean does not vanish.

    DegenerateMeasure
        If the p-th moment is zero or infinite.
    """
    mean = spec.mean()
    if not np.isfinite(mean) or abs(mean) > tol:
        raise NonIntegrableMean("Distribution must have zero mean, got %r. "
                                "Use center() first." % mean)
    m = spec.moment(spec.p)
    if not np.isfinite(m) or m <= 0.0:
        raise DegenerateMeasure("Moment of order %g must be finite and "
                                "nonzero, got %r" % (spec.p, m))
    return spec


def sample(spec, n_samples, random_state=None):
    """Inverse transform samples G(U) with U uniform on (0, 1)."""
    random_state = check_random_state(random_state)
    u = random_state.uniform(0.0, 1.0, n_samples)
    return spec.quantile()(u)


MEASURE_KINDS = {
    "builtin": BuiltinMeasure,
    "discrete": DiscreteMeasure,
    "tabulated_cdf": TabulatedMeasure,
}


def measure_from_dict(config):
    """Create a distribution from its JSON/YAML description.

    Examples
    --------
    >>> spec = measure_from_dict({"kind": "discrete",
    ...                           "atoms": [[-1, 0.5], [1, 0.5]], "p": 8})
    >>> spec.mean()
    0.0
    """
    return from_dict(config, MEASURE_KINDS)


def measure_from_file(filename, conf_path=None):
    """Load a distribution from a JSON or YAML file.

    Parameters
    ----------
    filename : string
        Name of the file

    conf_path : string, optional (default: $SKOROHOD_CONF_PATH)
        Directory searched for the file
    """
    return measure_from_dict(load_config(filename, conf_path))


def ks_distance(spec, values):
    """Kolmogorov-Smirnov distance between samples and a distribution.

    Both one-sided limits of the empirical distribution function are
    compared at every sample value, which makes the statistic exact for
    distributions with atoms.

    Parameters
    ----------
    spec : MeasureSpec
        Distribution

    values : array-like, shape (n_samples,)
        Samples

    Returns
    -------
    distance : float
        sup |F_n(x) - F(x)|
    """
    values = np.sort(check_finite(values, "samples"))
    n = len(values)
    if n == 0:
        raise ValueError("Need at least one sample")
    unique, counts = np.unique(values, return_counts=True)
    after = np.cumsum(counts) / float(n)
    before = after - counts / float(n)
    F = spec.cdf(unique)
    F_left = spec.cdf(np.nextafter(unique, -np.inf))
    return float(max(np.max(np.abs(after - F)),
                     np.max(np.abs(before - F_left))))
