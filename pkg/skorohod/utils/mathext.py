"""Special functions used by quantiles and closed-form densities."""
import numpy as np
from scipy.special import ndtr, ndtri


def sech(x):
    """Hyperbolic secant without overflow for large arguments."""
    ax = np.abs(np.asarray(x, dtype=float))
    e = np.exp(-ax)
    return 2.0 * e / (1.0 + e * e)


def norm_ppf(u):
    """Standard normal quantile, polished by one Newton step on the CDF.

    Parameters
    ----------
    u : array-like
        Probabilities in (0, 1)

    Returns
    -------
    x : array
        Quantiles
    """
    u = np.asarray(u, dtype=float)
    x = ndtri(u)
    with np.errstate(invalid="ignore", over="ignore", divide="ignore"):
        pdf = np.exp(-0.5 * x * x) / np.sqrt(2.0 * np.pi)
        step = (ndtr(x) - u) / pdf
    step = np.where(np.isfinite(step), step, 0.0)
    return x - step


def norm_pdf(x):
    """Standard normal density."""
    x = np.asarray(x, dtype=float)
    return np.exp(-0.5 * x * x) / np.sqrt(2.0 * np.pi)
