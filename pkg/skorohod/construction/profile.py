"""Even periodic profile of a quantile function and its cosine series."""
import numpy as np
from scipy.fft import dct, ifft
from ..hilbert import PeriodicFunction
from ..utils.exceptions import UnboundedValue, MeanNotZero, ProfileNotEven
from ..utils.validation import check_power_of_two


MIN_GRID = 1024
MEAN_TOLERANCE = 1e-8
SINE_TOLERANCE = 1e-10


class FourierProfile(object):
    """Samples of phi(theta) = G(|theta| / pi) on the offset grid.

    The grid is theta_j = -pi + 2 pi (j + 1/2) / M, so theta = 0 and
    theta = +-pi fall between grid points and unbounded quantiles are never
    evaluated at 0 or 1.

    Parameters
    ----------
    phi_values : array, shape (M,)
        Point samples of the profile

    cell_means : array, shape (M // 2,)
        Exact averages of G over the cells [k / K, (k + 1) / K], K = M / 2

    jumps : array-like, optional (default: ())
        Angles in (-pi, pi) at which the profile jumps

    support_unbounded : bool, optional (default: False)
        The quantile function is unbounded
    """
    def __init__(self, phi_values, cell_means, jumps=(),
                 support_unbounded=False):
        self.phi_values = np.asarray(phi_values, dtype=float)
        self.cell_means = np.asarray(cell_means, dtype=float)
        self.jumps = np.asarray(jumps, dtype=float)
        self.support_unbounded = support_unbounded
        if len(self.cell_means) * 2 != len(self.phi_values):
            raise ValueError("Need one cell mean per grid point in [0, pi)")

    @property
    def n_grid(self):
        return len(self.phi_values)

    @property
    def theta(self):
        return PeriodicFunction(self.phi_values, 0.5).theta

    def as_periodic(self):
        return PeriodicFunction(self.phi_values, 0.5)


def build_profile(G, n_grid):
    """Sample the even profile of a quantile function.

    Parameters
    ----------
    G : QuantileFn
        Quantile function of a centered distribution

    n_grid : int
        Number of grid points M, a power of two >= 1024

    Returns
    -------
    profile : FourierProfile
        phi_values[j] = G(|theta_j| / pi), mirrored so that the profile is
        exactly even

    Raises
    ------
    UnboundedValue
        If G returns a non-finite value on the grid.
    """
    M = check_power_of_two(n_grid, "n_grid", MIN_GRID)
    K = M // 2
    u = (np.arange(K) + 0.5) / K
    half = np.asarray(G(u), dtype=float)
    edges = np.arange(K + 1) / float(K)
    with np.errstate(invalid="ignore"):
        means = G.cell_means(edges)
    bad = ~np.isfinite(half) | ~np.isfinite(means)
    if np.any(bad):
        k = np.nonzero(bad)[0][0]
        raise UnboundedValue("Quantile is not finite near u=%.6g on a grid "
                             "of size %d" % (u[k], M))
    if not np.all(np.diff(half) >= 0.0):
        raise ValueError("Quantile function is not nondecreasing")
    phi = np.concatenate((half[::-1], half))
    jumps = np.pi * np.asarray(G.jumps, dtype=float)
    jumps = np.concatenate((-jumps, jumps))
    return FourierProfile(phi, means, jumps, G.support_unbounded)


def cosine_coefficients(profile, n_coeffs, return_diagnostics=False):
    """Cosine coefficients a_1, ..., a_N of the profile.

    a_n = 1 / pi int phi(theta) cos(n theta) d theta, so that
    phi = sum_n a_n cos(n theta). The integral is evaluated exactly for the
    profile that is constant on the cells of the grid: a DCT-II of the cell
    means times the cell factor sin(n pi / M) / (n pi / M).

    Parameters
    ----------
    profile : FourierProfile
        Profile with M >= 2 N

    n_coeffs : int
        Truncation order N

    return_diagnostics : bool, optional (default: False)
        Also return the mean coefficient a_0 and the largest sine
        coefficient of the sampled profile

    Returns
    -------
    a : array, shape (N,)
        a[n - 1] is the coefficient of cos(n theta)

    diagnostics : dict
        'a0' and 'sine_residual', only if return_diagnostics is set

    Raises
    ------
    MeanNotZero
        If |a_0| >= 1e-8.

    ProfileNotEven
        If a sine coefficient of the samples exceeds 1e-10 (relative to the
        largest profile value if that exceeds 1).
    """
    M = profile.n_grid
    K = M // 2
    N = int(n_coeffs)
    if N < 1 or M < 2 * N:
        raise ValueError("Need 1 <= N <= M / 2, got N=%d, M=%d" % (N, M))

    y = dct(profile.cell_means, type=2)
    a0 = y[0] / (2.0 * K)
    if not abs(a0) < MEAN_TOLERANCE:
        raise MeanNotZero("Profile has mean %.3g, the distribution is not "
                          "centered" % a0)

    _, b = profile.as_periodic().coefficients()
    scale = max(1.0, np.abs(profile.phi_values).max())
    sine_residual = np.abs(b).max()
    if sine_residual > SINE_TOLERANCE * scale:
        raise ProfileNotEven("Profile has sine coefficient %.3g"
                             % sine_residual)

    n = np.arange(1, N + 1)
    # y has K entries, the mode n = K vanishes for cell-constant profiles
    y = np.concatenate((y, [0.0]))
    a = y[n] / K * np.sinc(n / (2.0 * K))
    if return_diagnostics:
        return a, {"a0": float(a0), "sine_residual": float(sine_residual)}
    return a


def conjugate_series(a, theta, return_real=False):
    """Sine series sum_n a_n sin(n theta) on a uniform grid.

    Parameters
    ----------
    a : array-like, shape (N,)
        Cosine coefficients a_1, ..., a_N

    theta : array, shape (M,)
        Uniform grid -pi + 2 pi (j + offset) / M with M > N

    return_real : bool, optional (default: False)
        Also return the truncated cosine series

    Returns
    -------
    y : array, shape (M,)
        Conjugate series, exactly odd on grids symmetric about 0

    x : array, shape (M,)
        Cosine series, only if return_real is set
    """
    a = np.asarray(a, dtype=float)
    theta = np.asarray(theta, dtype=float)
    M = len(theta)
    N = len(a)
    if N >= M:
        raise ValueError("Need more grid points than coefficients, got "
                         "N=%d, M=%d" % (N, M))
    step = 2.0 * np.pi / M
    if not np.allclose(np.diff(theta), step, rtol=0.0, atol=1e-12):
        raise ValueError("theta must be a uniform grid of the period")
    n = np.arange(1, N + 1)
    d = np.zeros(M, dtype=complex)
    d[n] = a * np.exp(1j * n * theta[0])
    z = M * ifft(d)
    x, y = z.real, z.imag
    if np.allclose(theta + theta[::-1], 0.0, rtol=0.0, atol=1e-12):
        y = 0.5 * (y - y[::-1])
        x = 0.5 * (x + x[::-1])
    if return_real:
        return y, x
    return y


def refined_series(a, n_points):
    """Cosine series on the grid -pi + 2 pi j / n_points."""
    a = np.asarray(a, dtype=float)
    d = np.zeros(n_points, dtype=complex)
    n = np.arange(1, len(a) + 1)
    d[n] = a * np.exp(-1j * np.pi * n)
    return (n_points * ifft(d)).real
