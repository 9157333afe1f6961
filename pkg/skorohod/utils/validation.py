import numbers
import numpy as np
from .exceptions import MomentOrderError


OPEN_PROBLEM_MESSAGE = (
    "p_target=%g is not covered: the construction guarantees "
    "E[tau^(p/2)] < inf only for p > 1, and whether it extends to "
    "1/2 <= p <= 1 is an open problem.")
IMPOSSIBLE_MESSAGE = (
    " For p < 1/2 no guarantee is possible: every simply connected proper "
    "subdomain of the plane already has E[tau^(p/2)] < inf, so the moment "
    "condition carries no information.")


try:
    from sklearn.utils import check_random_state
except ImportError:
    def check_random_state(seed):
        """Turn seed into a np.random.RandomState instance."""
        if seed is None or seed is np.random:
            return np.random.mtrand._rand
        if isinstance(seed, (numbers.Integral, np.integer)):
            return np.random.RandomState(seed)
        if isinstance(seed, np.random.RandomState):
            return seed
        raise ValueError('%r cannot be used to seed a numpy.random.RandomState'
                         ' instance' % seed)


def check_seed(seed):
    """Check a seed for per-path random streams.

    Parameters
    ----------
    seed : int
        Non-negative integer below 2 ** 64

    Returns
    -------
    seed : int
        The seed as Python integer
    """
    if not isinstance(seed, (numbers.Integral, np.integer)):
        raise ValueError("Seed must be an integer, got %r" % (seed,))
    seed = int(seed)
    if seed < 0 or seed >= 2 ** 64:
        raise ValueError("Seed must be in [0, 2**64), got %d" % seed)
    return seed


def check_power_of_two(value, name, minimum=1):
    """Check that an integer parameter is a power of two.

    Parameters
    ----------
    value : int
        Value to check

    name : string
        Parameter name used in the error message

    minimum : int, optional (default: 1)
        Smallest admissible value

    Returns
    -------
    value : int
        The value as Python integer
    """
    if not isinstance(value, (numbers.Integral, np.integer)):
        raise ValueError("%s must be an integer, got %r" % (name, value))
    value = int(value)
    if value < minimum or value & (value - 1) != 0:
        raise ValueError("%s must be a power of two >= %d, got %d"
                         % (name, minimum, value))
    return value


def check_finite(values, name="values"):
    """Check that an array does not contain inf or NaN.

    Parameters
    ----------
    values : array-like
        Values to check

    name : string, optional (default: 'values')
        Name used in the error message

    Returns
    -------
    values : array
        Values as numpy array
    """
    values = np.asarray(values, dtype=float)
    if np.any(np.isnan(values)):
        raise ValueError("Received illegal %s (NaN)." % name)
    if np.any(np.isinf(values)):
        raise ValueError("Received illegal %s (inf)." % name)
    return values


def check_probability_vector(weights, tol=1e-12):
    """Check weights of a discrete distribution.

    Parameters
    ----------
    weights : array-like, shape (n_atoms,)
        Weights of the atoms

    tol : float, optional (default: 1e-12)
        Tolerance for the total mass

    Returns
    -------
    weights : array, shape (n_atoms,)
        Weights
    """
    weights = check_finite(weights, "weights")
    if weights.ndim != 1 or len(weights) == 0:
        raise ValueError("Weights must be a non-empty vector.")
    if np.any(weights <= 0.0):
        raise ValueError("Weights must be positive, got %r" % (weights,))
    if abs(weights.sum() - 1.0) > tol:
        raise ValueError("Weights must sum to 1 within %g, sum is %r"
                         % (tol, weights.sum()))
    return weights


def check_p_target(p):
    """Check the moment order a measure is asserted to have.

    Parameters
    ----------
    p : float
        Moment order

    Returns
    -------
    p : float
        Moment order

    Raises
    ------
    MomentOrderError
        If p <= 1. The message explains why.
    """
    p = float(p)
    if not np.isfinite(p):
        raise MomentOrderError("p_target must be finite, got %r" % p)
    if p <= 1.0:
        message = OPEN_PROBLEM_MESSAGE % p
        if p < 0.5:
            message += IMPOSSIBLE_MESSAGE
        raise MomentOrderError(message)
    return p


def check_window(window):
    """Check a clip window.

    Parameters
    ----------
    window : None or pair of floats (X, Y) or (xmin, xmax, ymin, ymax)
        Clip window, symmetric pairs are expanded to [-X, X] x [-Y, Y]

    Returns
    -------
    window : None or tuple (xmin, xmax, ymin, ymax)
        Window
    """
    if window is None:
        return None
    window = tuple(float(w) for w in window)
    if len(window) == 2:
        window = (-window[0], window[0], -window[1], window[1])
    if len(window) != 4:
        raise ValueError("Window must be (X, Y) or (xmin, xmax, ymin, ymax), "
                         "got %r" % (window,))
    if not (window[0] < window[1] and window[2] < window[3]):
        raise ValueError("Window %r is empty" % (window,))
    return window
