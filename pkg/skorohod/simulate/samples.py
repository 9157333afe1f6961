"""Exit samples of planar Brownian motion and per-path random streams."""
import numpy as np
from ..utils.io import write_csv, read_csv


BACKENDS = ("euler", "wos")
CSV_COLUMNS = ["backend", "stream_id", "exit_x", "exit_y", "exit_time",
               "n_steps", "censored", "frame_exit", "max_radius"]


def path_stream(seed, stream_id):
    """Random generator of one sample path.

    The stream depends only on the seed and the path index, so results do
    not depend on how paths are grouped into chunks.
    """
    return np.random.default_rng(
        np.random.SeedSequence(seed, spawn_key=(int(stream_id),)))


class ExitSampleSet(object):
    """Exit positions and times of independent sample paths.

    Parameters
    ----------
    exit_x : array-like, shape (n_paths,)
        Real parts of the exit positions

    exit_y : array-like, shape (n_paths,)
        Imaginary parts of the exit positions

    exit_time : array-like, shape (n_paths,)
        Exit times. For walk-on-spheres this is the sum of the mean exit
        times of the visited circles, an unbiased estimator of E[tau] only.

    n_steps : array-like of int, shape (n_paths,)
        Number of steps or jumps per path

    backend : string
        'euler' or 'wos'

    seed : int
        Seed of the per-path streams

    stream_id : array-like of int, optional (default: 0, ..., n_paths - 1)
        Index of the random stream of each path

    censored : array-like of bool, optional (default: none)
        Path ran out of steps, exit_time is then a lower bound

    frame_exit : array-like of bool, optional (default: none)
        Path left through the clip frame

    max_radius : array-like, optional (default: |exit point|)
        Largest distance from 0 along the path

    dt : float, optional (default: None)
        Time step of the Euler scheme

    eps : float, optional (default: None)
        Absorption distance of walk-on-spheres

    delta_report : float, optional (default: 0)
        Largest distance of a reported exit point from the boundary
    """
    def __init__(self, exit_x, exit_y, exit_time, n_steps, backend, seed,
                 stream_id=None, censored=None, frame_exit=None,
                 max_radius=None, dt=None, eps=None, delta_report=0.0):
        if backend not in BACKENDS:
            raise ValueError("Unknown backend '%s', expected one of %r"
                             % (backend, BACKENDS))
        self.exit_x = np.asarray(exit_x, dtype=float)
        self.exit_y = np.asarray(exit_y, dtype=float)
        self.exit_time = np.asarray(exit_time, dtype=float)
        self.n_steps = np.asarray(n_steps, dtype=int)
        n = len(self.exit_x)
        if any(len(a) != n for a in [self.exit_y, self.exit_time,
                                     self.n_steps]):
            raise ValueError("All sample arrays must have the same length")
        self.backend = backend
        self.seed = seed
        if stream_id is None:
            stream_id = np.arange(n)
        self.stream_id = np.asarray(stream_id, dtype=int)
        self.censored = _flags(censored, n)
        self.frame_exit = _flags(frame_exit, n)
        if max_radius is None:
            max_radius = np.hypot(self.exit_x, self.exit_y)
        self.max_radius = np.asarray(max_radius, dtype=float)
        self.dt = dt
        self.eps = eps
        self.delta_report = float(delta_report)

    @property
    def n_paths(self):
        return len(self.exit_x)

    @property
    def exit_points(self):
        return self.exit_x + 1j * self.exit_y

    @property
    def mean_time_only(self):
        """The time field estimates E[tau] but not the law of tau."""
        return self.backend == "wos"

    @property
    def censored_fraction(self):
        return float(np.mean(self.censored)) if self.n_paths else 0.0

    @property
    def leakage(self):
        """Fraction of paths that left through the clip frame."""
        return float(np.mean(self.frame_exit)) if self.n_paths else 0.0

    def metadata(self):
        return {"backend": self.backend, "seed": self.seed,
                "n_paths": self.n_paths, "dt": self.dt, "eps": self.eps,
                "delta_report": self.delta_report,
                "mean_time_only": self.mean_time_only,
                "censored_fraction": self.censored_fraction,
                "leakage": self.leakage}

    def to_csv(self, filename):
        write_csv(filename, [np.repeat(self.backend, self.n_paths),
                             self.stream_id, self.exit_x, self.exit_y,
                             self.exit_time, self.n_steps,
                             self.censored.astype(int),
                             self.frame_exit.astype(int), self.max_radius],
                  CSV_COLUMNS)

    @classmethod
    def from_csv(cls, filename, seed=None, dt=None, eps=None):
        data = read_csv(filename)
        backends = np.unique(data["backend"])
        if len(backends) != 1:
            raise ValueError("Samples mix backends %r" % (backends.tolist(),))
        return cls(data["exit_x"], data["exit_y"], data["exit_time"],
                   data["n_steps"], str(backends[0]), seed,
                   stream_id=data["stream_id"],
                   censored=data["censored"].astype(bool),
                   frame_exit=data["frame_exit"].astype(bool),
                   max_radius=data["max_radius"], dt=dt, eps=eps)


def _flags(values, n):
    if values is None:
        return np.zeros(n, dtype=bool)
    values = np.asarray(values, dtype=bool)
    if values.shape != (n,):
        raise ValueError("Need one flag per path")
    return values
