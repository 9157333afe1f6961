"""Synthesis of the embedding domain and evaluation of its disk map."""
import numpy as np
from .. import __version__
from ..geometry import (BoundaryCurve, clip, is_symmetric, is_delta_convex,
                        is_simple)
from ..hilbert import PeriodicFunction, hilbert_pv, lp_norm
from ..measures import check_measure, ks_distance, measure_from_dict
from ..utils.exceptions import (NotSymmetric, OutsideDisk,
                                SingularityUnresolved)
from ..utils.io import config_hash, write_json, read_json, write_csv
from ..utils.log import get_logger
from ..utils.validation import check_power_of_two
from .profile import (build_profile, cosine_coefficients, conjugate_series,
                      refined_series)


DISK_MARGIN = 1e-9
PV_TOLERANCE = 1e-6
N_PV_POINTS = 64


class DomainArtifact(object):
    """Sampled boundary w(theta) = phi(theta) + i H[phi](theta) of a domain.

    Parameters
    ----------
    a : array-like, shape (N,)
        Cosine coefficients a_1, ..., a_N of the profile

    theta : array-like, shape (M,)
        Offset grid

    x : array-like, shape (M,)
        Real part of the boundary, the profile values

    y : array-like, shape (M,)
        Imaginary part of the boundary, the conjugate series

    p : float
        Moment order asserted for the distribution

    diagnostics : dict
        Numerical checks of the construction

    support_unbounded : bool
        The distribution has unbounded support

    measure : dict
        Configuration of the distribution

    provenance : dict
        Hash of the distribution, N, M and package version
    """
    def __init__(self, a, theta, x, y, p, diagnostics, support_unbounded,
                 measure, provenance):
        self.a = np.asarray(a, dtype=float)
        self.theta = np.asarray(theta, dtype=float)
        self.x = np.asarray(x, dtype=float)
        self.y = np.asarray(y, dtype=float)
        self.p = float(p)
        self.diagnostics = diagnostics
        self.support_unbounded = bool(support_unbounded)
        self.measure = measure
        self.provenance = provenance

    @property
    def n_coeffs(self):
        return len(self.a)

    @property
    def n_grid(self):
        return len(self.theta)

    @property
    def boundary(self):
        """Boundary samples, shape (M, 3) with columns theta, x, y."""
        return np.column_stack((self.theta, self.x, self.y))

    def spec(self):
        """Distribution the domain was synthesized from."""
        return measure_from_dict(self.measure)

    def to_curve(self, window=None):
        """Boundary polygon, clipped to a window if one is given."""
        curve = BoundaryCurve(np.column_stack((self.x, self.y)),
                              support_unbounded=self.support_unbounded)
        if window is not None:
            curve = clip(curve, window)
        return curve

    def to_dict(self):
        return {"n_coeffs": self.n_coeffs, "n_grid": self.n_grid,
                "a": self.a.tolist(), "boundary": self.boundary.tolist(),
                "p": self.p, "diagnostics": self.diagnostics,
                "support_unbounded": self.support_unbounded,
                "measure": self.measure, "provenance": self.provenance}

    @classmethod
    def from_dict(cls, data):
        boundary = np.asarray(data["boundary"], dtype=float)
        a = np.asarray(data["a"], dtype=float)
        if len(a) != data["n_coeffs"]:
            raise ValueError("Artifact lists %d coefficients, expected %d"
                             % (len(a), data["n_coeffs"]))
        return cls(a, boundary[:, 0], boundary[:, 1], boundary[:, 2],
                   data["p"], data["diagnostics"], data["support_unbounded"],
                   data.get("measure"), data.get("provenance", {}))

    def save(self, filename):
        write_json(filename, self.to_dict())

    @classmethod
    def load(cls, filename):
        return cls.from_dict(read_json(filename))

    def to_csv(self, filename):
        write_csv(filename, [self.theta, self.x, self.y],
                  ["theta", "x", "y"])


def synthesize(spec, n_coeffs=4096, n_grid=16384, log_to_file=False,
               log_to_stdout=False):
    """Build a domain whose Brownian exit position has real part ~ spec.

    The boundary is w(theta) = phi(theta) + i y(theta) where
    phi(theta) = G(|theta| / pi) and y is the conjugate series of the first
    N cosine coefficients of phi. The real part equals phi exactly.

    Parameters
    ----------
    spec : MeasureSpec
        Centered distribution with finite moment of order spec.p

    n_coeffs : int, optional (default: 4096)
        Truncation order N

    n_grid : int, optional (default: 16384)
        Grid size M, a power of two >= max(1024, 2 N)

    log_to_file : bool or string, optional (default: False)
        Log progress to a file

    log_to_stdout : bool, optional (default: False)
        Log progress to standard output

    Returns
    -------
    artifact : DomainArtifact
        Boundary samples, coefficients and diagnostics
    """
    logger = get_logger("synthesize", log_to_file, log_to_stdout)
    check_measure(spec)
    M = check_power_of_two(n_grid, "n_grid", 1024)
    logger.info("Synthesizing domain for %r with N=%d, M=%d"
                % (spec, n_coeffs, M))

    G = spec.quantile()
    profile = build_profile(G, M)
    if profile.support_unbounded:
        logger.warning("Distribution has unbounded support, the boundary is "
                       "sampled only on the grid")
    a, info = cosine_coefficients(profile, n_coeffs, return_diagnostics=True)
    theta = profile.theta
    y, x_series = conjugate_series(a, theta, return_real=True)
    x = profile.phi_values
    logger.debug("Coefficients done, a0=%.3g, sine residual %.3g"
                 % (info["a0"], info["sine_residual"]))

    diagnostics = _diagnostics(spec, profile, a, x, y, logger)
    diagnostics.update(info)
    diagnostics["pv_gap"] = _pv_gap(a, y, profile.jumps, logger)

    provenance = {"config_hash": config_hash(spec.to_dict()),
                  "n_coeffs": int(n_coeffs), "n_grid": M,
                  "version": __version__}
    logger.info("Parseval estimate of E[tau]: %.6g"
                % diagnostics["parseval_Etau"])
    return DomainArtifact(a, theta, x, y, spec.p, diagnostics,
                          profile.support_unbounded, spec.to_dict(),
                          provenance)


def _diagnostics(spec, profile, a, x, y, logger):
    parseval = 0.5 * float(np.sum(a ** 2))
    w = np.column_stack((x, y))
    closure_gap = float(np.hypot(*(w[0] - w[-1])))
    x_f = PeriodicFunction(x, 0.5)
    y_f = PeriodicFunction(y, 0.5)
    p = spec.p
    diagnostics = {
        "parseval_Etau": parseval,
        "moment_gap": _moment_gap(spec, parseval),
        # midpoint rule on the uniform grid, misses the mass between the
        # outermost samples and a pole of an unbounded profile
        "hardy_p_norm_estimate": lp_norm(
            PeriodicFunction(np.hypot(x, y), 0.5), p),
        "hilbert_ratio_p": lp_norm(y_f, p) / lp_norm(x_f, p),
        "ks_boundary": ks_distance(spec, x),
        "closure_gap": closure_gap,
        "support_unbounded": bool(profile.support_unbounded),
    }

    curve = BoundaryCurve(w)
    diagnostics["symmetry_ok"] = bool(is_symmetric(curve, 1e-8))
    try:
        diagnostics["delta_convex_ok"] = bool(is_delta_convex(curve))
    except NotSymmetric:
        diagnostics["delta_convex_ok"] = False
    diagnostics["simple_ok"] = bool(is_simple(curve))
    diagnostics["univalence_suspect"] = not diagnostics["simple_ok"]
    if diagnostics["univalence_suspect"]:
        logger.warning("Truncated boundary intersects itself, the disk map "
                       "may not be univalent")
    logger.debug("Geometry: symmetric=%s, delta-convex=%s, simple=%s"
                 % (diagnostics["symmetry_ok"],
                    diagnostics["delta_convex_ok"], diagnostics["simple_ok"]))
    return diagnostics


def _moment_gap(spec, parseval):
    second = spec.moment(2.0)
    if not np.isfinite(second):
        return None
    return abs(parseval - second)


def _pv_gap(a, y, jumps, logger):
    """Largest difference between the conjugate series and the principal
    value transform of the cosine series, on a subset of the grid."""
    M = len(y)
    N = len(a)
    r = 2
    while r * M < 16 * N:
        r *= 2
    fine = PeriodicFunction(refined_series(a, r * M))
    idx = np.arange(0, M, max(1, M // N_PV_POINTS))
    try:
        pv = hilbert_pv(fine, at=r * idx + r // 2, jumps=jumps,
                        tol=PV_TOLERANCE)
    except SingularityUnresolved as e:
        logger.warning("Principal value check failed: %s" % e)
        return None
    gap = np.abs(pv - y[idx])
    if np.all(np.isnan(gap)):
        return None
    return float(np.nanmax(gap))


def evaluate_map(artifact, z, tol=1e-6, return_bound=False):
    """Truncated power series sum_n a_n z^n of the disk map.

    Parameters
    ----------
    artifact : DomainArtifact
        Artifact with coefficients a_1, ..., a_N

    z : complex or array-like of complex
        Points of the open unit disk

    tol : float, optional (default: 1e-6)
        Largest acceptable bound of the truncation error

    return_bound : bool, optional (default: False)
        Also return the bound of the truncation error

    Returns
    -------
    w : complex or array
        Value of the truncated series, Horner evaluation from n = N to 1

    bound : float or array
        Bound of |sum_{n > N} a_n z^n|, only if return_bound is set

    Raises
    ------
    OutsideDisk
        If |z| > 1 - 1e-9 or the truncation bound exceeds tol.
    """
    z = np.asarray(z, dtype=complex)
    r = np.abs(z)
    if np.any(r > 1.0 - DISK_MARGIN):
        raise OutsideDisk("Points must satisfy |z| <= 1 - %g, got |z|=%.12g"
                          % (DISK_MARGIN, r.max()))
    bound = truncation_bound(artifact.a, r)
    if np.any(bound > tol):
        raise OutsideDisk("Truncation error bound %.3g exceeds %g at "
                          "|z|=%.6g" % (np.max(bound), tol,
                                        r.flat[np.argmax(bound)]))
    w = np.zeros_like(z)
    for coefficient in artifact.a[::-1]:
        w = (w + coefficient) * z
    if w.ndim == 0:
        w = complex(w)
        bound = float(bound)
    if return_bound:
        return w, bound
    return w


def truncation_bound(a, r):
    """Bound of the series tail from a power-law envelope of |a_n|.

    |a_n| <= C n^-s is fitted on the nonzero coefficients with
    N / 2 <= n <= N, the tail is then at most
    C (N + 1)^-s r^(N + 1) / (1 - r).
    """
    a = np.asarray(a, dtype=float)
    r = np.asarray(r, dtype=float)
    N = len(a)
    n = np.arange(1, N + 1)
    scale = np.abs(a).max() if N > 0 else 0.0
    # coefficients at rounding level count as zero
    window = (n >= N // 2) & (np.abs(a) > 1e-14 * scale)
    if np.count_nonzero(window) < 2:
        return np.zeros_like(r)
    log_n = np.log(n[window])
    log_a = np.log(np.abs(a[window]))
    slope, intercept = np.polyfit(log_n, log_a, 1)
    # lift the fitted line to an envelope of the coefficients
    intercept += np.max(log_a - (slope * log_n + intercept))
    if slope < 0.0:
        envelope = np.exp(intercept + slope * np.log(N + 1.0))
    else:
        envelope = np.abs(a[window]).max()
    return envelope * r ** (N + 1) / (1.0 - r)


def boundary_for_plot(artifact, smoothing=None):
    """Boundary for figures, optionally with Fejer smoothing.

    Fejer weights 1 - n / (N + 1) remove the Gibbs overshoot at jumps of
    the profile. Smoothed boundaries change the distribution and are only
    meant for plotting.

    Parameters
    ----------
    artifact : DomainArtifact
        Artifact

    smoothing : None or 'fejer', optional (default: None)
        Smoothing method

    Returns
    -------
    boundary : array, shape (M, 2)
        Points of the boundary
    """
    if smoothing is None:
        return np.column_stack((artifact.x, artifact.y))
    if smoothing != "fejer":
        raise ValueError("Unknown smoothing '%s'" % smoothing)
    N = artifact.n_coeffs
    weights = 1.0 - np.arange(1, N + 1) / (N + 1.0)
    y, x = conjugate_series(artifact.a * weights, artifact.theta,
                            return_real=True)
    return np.column_stack((x, y))
