import numpy as np


class QuantileFn(object):
    """Left-continuous generalized inverse G of a distribution function.

    G(u) = inf {x : F(x) >= u} for u in (0, 1). Uniformly distributed
    arguments are pushed forward to the distribution.

    Parameters
    ----------
    evaluator : callable
        Vectorized map from u in (0, 1) to G(u)

    integral : callable
        Vectorized map from u in [0, 1] to the integral of G over [0, u]

    lower : float
        Lower end of the support, may be -inf

    upper : float
        Upper end of the support, may be inf

    jumps : array-like, optional (default: ())
        Values of u at which G jumps

    continuous : bool, optional (default: True)
        Whether G is continuous, i.e. F has no flat pieces inside the support
    """
    def __init__(self, evaluator, integral, lower, upper, jumps=(),
                 continuous=True):
        self.evaluator = evaluator
        self.integral = integral
        self.lower = lower
        self.upper = upper
        self.jumps = np.asarray(jumps, dtype=float)
        self.continuous = continuous

    def __call__(self, u):
        return self.evaluator(np.asarray(u, dtype=float))

    @property
    def support_unbounded(self):
        return not (np.isfinite(self.lower) and np.isfinite(self.upper))

    def cell_means(self, edges):
        """Exact averages of G over consecutive cells.

        Parameters
        ----------
        edges : array, shape (n_cells + 1,)
            Increasing cell boundaries in [0, 1]

        Returns
        -------
        means : array, shape (n_cells,)
            Average of G over each cell
        """
        edges = np.asarray(edges, dtype=float)
        return np.diff(self.integral(edges)) / np.diff(edges)

    def is_monotone(self, n_grid=10000):
        """Check that G is nondecreasing on a midpoint grid of (0, 1)."""
        u = (np.arange(n_grid) + 0.5) / n_grid
        values = self(u)
        return bool(np.all(np.diff(values) >= 0.0))
