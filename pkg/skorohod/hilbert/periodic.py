"""Periodic Hilbert transform, spectral and by principal value quadrature.

The conjugate function operator maps cos(n theta) to sin(n theta) and
sin(n theta) to -cos(n theta). As a singular integral it reads

                     pi
              1      /                    t
    H[f](x) = -- p.v.| f(x - t) cot(-) dt
              2pi    /                    2
                   -pi
"""
import numpy as np
from scipy.fft import fft, ifft, rfft
from ..utils.exceptions import SingularityUnresolved
from ..utils.validation import check_finite, check_random_state
from ..utils.io import write_csv, read_csv


class PeriodicFunction(object):
    """Samples of a 2 pi periodic function on a uniform grid.

    The grid is theta_j = -pi + 2 pi (j + offset) / M for j = 0, ..., M - 1.

    Parameters
    ----------
    values : array-like, shape (M,)
        Function values, M >= 8

    offset : float, optional (default: 0)
        Position of the samples inside their grid cell, 0.5 gives a grid
        that avoids theta = 0 and theta = +-pi
    """
    def __init__(self, values, offset=0.0):
        self.values = check_finite(values, "function values")
        if self.values.ndim != 1 or len(self.values) < 8:
            raise ValueError("Need at least 8 samples on a 1D grid, got "
                             "shape %r" % (self.values.shape,))
        self.offset = float(offset)

    @classmethod
    def from_callable(cls, func, n_points, offset=0.0):
        """Sample a vectorized function on the grid."""
        theta = _grid(n_points, offset)
        return cls(func(theta), offset)

    @classmethod
    def from_csv(cls, filename, offset=0.0):
        """Load samples from a CSV file with columns theta and value."""
        data = read_csv(filename)
        return cls(data["value"], offset)

    def to_csv(self, filename):
        write_csv(filename, [self.theta, self.values], ["theta", "value"])

    @property
    def n_points(self):
        return len(self.values)

    @property
    def theta(self):
        return _grid(self.n_points, self.offset)

    @property
    def dtheta(self):
        return 2.0 * np.pi / self.n_points

    def coefficients(self):
        """Cosine and sine coefficients of the trigonometric interpolant.

        Returns
        -------
        a : array, shape (M // 2 + 1,)
            Cosine coefficients, a[0] is the mean

        b : array, shape (M // 2 + 1,)
            Sine coefficients, b[0] = 0
        """
        M = self.n_points
        n = np.arange(M // 2 + 1)
        c = rfft(self.values) / M * np.exp(-1j * n * self.theta[0])
        a = 2.0 * c.real
        b = -2.0 * c.imag
        a[0] = c[0].real
        b[0] = 0.0
        if M % 2 == 0:
            a[-1] = c[-1].real
            b[-1] = 0.0
        return a, b

    def __add__(self, other):
        return PeriodicFunction(self.values + other.values, self.offset)

    def __sub__(self, other):
        return PeriodicFunction(self.values - other.values, self.offset)


def _grid(n_points, offset):
    return -np.pi + 2.0 * np.pi * (np.arange(n_points) + offset) / n_points


def hilbert_spectral(f):
    """Conjugate function by multiplication with -i sign(k) in frequency space.

    The zero mode and, for even M, the Nyquist mode are annihilated.

    Parameters
    ----------
    f : PeriodicFunction
        Function samples

    Returns
    -------
    Hf : PeriodicFunction
        Hilbert transform on the same grid
    """
    M = f.n_points
    k = np.fft.fftfreq(M, 1.0 / M)
    multiplier = -1j * np.sign(k)
    if M % 2 == 0:
        multiplier[M // 2] = 0.0
    return PeriodicFunction(ifft(fft(f.values) * multiplier).real, f.offset)


def hilbert_pv(f, eta_min=None, at=None, jumps=(), tol=1e-6,
               chunk_size=256):
    """Conjugate function by principal value quadrature.

    Pairs of nodes at +-t cancel the pole of the kernel:

        S_h(x) = h / (2 pi) sum_{0 < t_k <= pi} [f(x - t_k) - f(x + t_k)]
                 cot(t_k / 2)

    The trapezoid rule misses the node t = 0, which makes the leading error
    linear in h. It is removed by Richardson extrapolation over the step
    sizes h, 2h and 4h. The two extrapolants must agree within 10 * tol.

    Parameters
    ----------
    f : PeriodicFunction
        Function samples, M divisible by 8

    eta_min : float, optional (default: three grid cells)
        Half width of the guard band around jumps, in (0, pi / 8]

    at : array-like of int, optional (default: all grid points)
        Indices of the grid points at which the transform is evaluated

    jumps : array-like, optional (default: ())
        Angles at which f jumps. Evaluation points closer than eta_min are
        masked with NaN.

    tol : float, optional (default: 1e-6)
        Target accuracy

    chunk_size : int, optional (default: 256)
        Number of evaluation points processed at once

    Returns
    -------
    Hf : array, shape (n_at,)
        Hilbert transform at the requested points

    Raises
    ------
    SingularityUnresolved
        If the extrapolants disagree outside of the guard bands.
    """
    M = f.n_points
    if M % 8 != 0:
        raise ValueError("Principal value quadrature needs M divisible by 8, "
                         "got %d" % M)
    if eta_min is None:
        eta_min = 3.0 * f.dtheta
    if not 0.0 < eta_min <= np.pi / 8.0:
        raise ValueError("eta_min must be in (0, pi/8], got %r" % eta_min)
    if at is None:
        at = np.arange(M)
    at = np.asarray(at, dtype=int) % M

    values = f.values
    result = np.empty(len(at))
    for start in range(0, len(at), chunk_size):
        idx = at[start:start + chunk_size]
        s1 = _pv_sum(values, idx, 1)
        s2 = _pv_sum(values, idx, 2)
        s4 = _pv_sum(values, idx, 4)
        r1 = 2.0 * s1 - s2
        r2 = 2.0 * s2 - s4
        result[start:start + chunk_size] = r1
        masked = _near_jumps(f.theta[idx], jumps, eta_min)
        gap = np.abs(r1 - r2)
        bad = (gap > 10.0 * tol) & ~masked
        if np.any(bad):
            worst = np.argmax(np.where(bad, gap, 0.0))
            raise SingularityUnresolved(
                "Principal value at theta=%.6g did not settle: extrapolants "
                "differ by %.3g" % (f.theta[idx[worst]], gap[worst]))
        result[start:start + chunk_size][masked] = np.nan
    return result


def _pv_sum(values, idx, step):
    M = len(values)
    k = np.arange(step, M // 2 + 1, step)
    weights = step / float(M) / np.tan(np.pi * k / M)
    minus = values[(idx[:, np.newaxis] - k) % M]
    plus = values[(idx[:, np.newaxis] + k) % M]
    return np.dot(minus - plus, weights)


def _near_jumps(theta, jumps, eta_min):
    jumps = np.atleast_1d(np.asarray(jumps, dtype=float))
    if len(jumps) == 0:
        return np.zeros(len(theta), dtype=bool)
    diff = np.angle(np.exp(1j * (theta[:, np.newaxis] - jumps)))
    return np.any(np.abs(diff) < eta_min, axis=1)


def lp_norm(f, p):
    """Normalized L^p norm ((1 / 2 pi) int |f| ** p) ** (1 / p).

    Parameters
    ----------
    f : PeriodicFunction
        Function samples

    p : float
        Exponent, at least 1

    Returns
    -------
    norm : float
        Trapezoid estimate of the norm
    """
    p = float(p)
    if not p >= 1.0:
        raise ValueError("Exponent must be at least 1, got %r" % p)
    return float(np.mean(np.abs(f.values) ** p) ** (1.0 / p))


def norm_ratio_witness(p_values=(1.5, 2.0, 3.0, 4.0), n_polys=100,
                       degree=50, n_points=1024, random_state=None):
    """Empirical maximum of ||Hf||_p / ||f||_p over random trig polynomials.

    No value of the sharp constant is asserted. The result only shows that
    the ratio stays finite on the sampled functions.

    Parameters
    ----------
    p_values : sequence of floats, optional (default: (1.5, 2, 3, 4))
        Exponents

    n_polys : int, optional (default: 100)
        Number of random polynomials per exponent

    degree : int, optional (default: 50)
        Degree of the polynomials

    n_points : int, optional (default: 1024)
        Grid size

    random_state : int or RandomState, optional (default: global seed)
        Seed for the coefficients

    Returns
    -------
    ratios : dict
        Maps each exponent to the largest observed ratio
    """
    random_state = check_random_state(random_state)
    ratios = {}
    for p in p_values:
        best = 0.0
        for _ in range(n_polys):
            f = random_trig_polynomial(degree, n_points, random_state)
            ratio = lp_norm(hilbert_spectral(f), p) / lp_norm(f, p)
            best = max(best, ratio)
        ratios[float(p)] = best
    return ratios


def random_trig_polynomial(degree, n_points, random_state=None, offset=0.0):
    """Zero mean trigonometric polynomial with Gaussian coefficients."""
    random_state = check_random_state(random_state)
    a = random_state.randn(degree)
    b = random_state.randn(degree)
    n = np.arange(1, degree + 1)
    theta = _grid(n_points, offset)
    values = (np.cos(np.outer(theta, n)).dot(a) +
              np.sin(np.outer(theta, n)).dot(b))
    return PeriodicFunction(values, offset)
