import numbers
from ..base import Base
from ..utils.io import config_hash
from ..utils.module_loader import load_config
from ..utils.validation import (check_seed, check_power_of_two,
                                check_p_target, check_window)


SUBCOMMANDS = ("build", "verify", "density", "check", "plot")
BACKENDS = ("euler", "wos")


class RunConfig(Base):
    """Settings of one run of skorohod-run.

    Values are validated on construction so that a run never starts with a
    configuration it cannot finish.

    Parameters
    ----------
    subcommand : string
        One of 'build', 'verify', 'density', 'check' and 'plot'

    measure : string, optional (default: None)
        JSON or YAML file that describes the distribution (build, verify)

    artifact : string, optional (default: None)
        Domain artifact written by build (verify, plot, check)

    n_coeffs : int, optional (default: 4096)
        Number of Fourier coefficients, a power of two

    n_grid : int, optional (default: 16384)
        Number of boundary samples, a power of two

    dt : float, optional (default: 1e-3)
        Time step of the Euler sampler, in (0, 1e-2]

    n_paths : int, optional (default: 100000)
        Number of Brownian paths

    seed : int, optional (default: 0)
        Seed of every random stream of the run

    backend : string, optional (default: 'euler')
        Exit sampler, 'euler' or 'wos'

    eps : float, optional (default: 1e-4)
        Absorption distance of walk-on-spheres

    max_steps : int, optional (default: 10 ** 6)
        Step budget per path

    bridge : bool, optional (default: True)
        Brownian bridge correction of the Euler sampler

    clip : tuple, optional (default: None)
        Clip window (X, Y) or (xmin, xmax, ymin, ymax)

    out : string, optional (default: runs/<subcommand>-<config hash>)
        Run directory

    force : bool, optional (default: False)
        Allow writing into a directory that holds an earlier run

    domain : string, optional (default: 'disk')
        Closed-form example of the density subcommand

    marginal : string, optional (default: 'X')
        'boundary', 'X' or 'Y'

    start : float or complex, optional (default: 0)
        Start point of the disk example or of the paths of check

    R : float, optional (default: 1)
        Ellipse parameter

    delta : float, optional (default: 2)
        Hyperbola parameter

    n_points : int, optional (default: 1001)
        Number of density samples

    fixture : string, optional (default: None)
        Name of a fixture domain (check)

    curve : string, optional (default: None)
        CSV file of a boundary polygon with columns x and y (check)

    p : float, optional (default: moment order of the artifact, else 2)
        Moment order of the uniqueness check

    smoothing : string, optional (default: None)
        'fejer' smooths the plotted boundary

    verbose : bool, optional (default: False)
        Log progress to standard output

    log_file : string, optional (default: None)
        Log progress to this file
    """
    def __init__(self, subcommand, measure=None, artifact=None,
                 n_coeffs=4096, n_grid=16384, dt=1e-3, n_paths=100000,
                 seed=0, backend="euler", eps=1e-4, max_steps=10 ** 6,
                 bridge=True, clip=None, out=None, force=False,
                 domain="disk", marginal="X", start=0.0, R=1.0, delta=2.0,
                 n_points=1001, fixture=None, curve=None, p=None,
                 smoothing=None, verbose=False, log_file=None):
        if subcommand not in SUBCOMMANDS:
            raise ValueError("Unknown subcommand '%s', expected one of %r"
                             % (subcommand, SUBCOMMANDS))
        self.subcommand = subcommand
        self.measure = measure
        self.artifact = artifact
        self.n_coeffs = check_power_of_two(n_coeffs, "n_coeffs")
        self.n_grid = check_power_of_two(n_grid, "n_grid")
        if not 0.0 < dt <= 1e-2:
            raise ValueError("dt must be in (0, 1e-2], got %r" % (dt,))
        self.dt = float(dt)
        if not isinstance(n_paths, numbers.Integral) or n_paths < 0:
            raise ValueError("n_paths must be a non-negative integer, got %r"
                             % (n_paths,))
        self.n_paths = int(n_paths)
        self.seed = check_seed(seed)
        if backend not in BACKENDS:
            raise ValueError("Unknown backend '%s', expected one of %r"
                             % (backend, BACKENDS))
        self.backend = backend
        if not eps > 0.0:
            raise ValueError("eps must be positive, got %r" % (eps,))
        self.eps = float(eps)
        self.max_steps = int(max_steps)
        self.bridge = bool(bridge)
        self.clip = check_window(clip)
        self.out = out
        self.force = bool(force)
        self.domain = domain
        self.marginal = marginal
        if isinstance(start, (list, tuple)):
            start = complex(*start)
        self.start = start
        self.R = float(R)
        self.delta = float(delta)
        self.n_points = int(n_points)
        self.fixture = fixture
        self.curve = curve
        self.p = None if p is None else check_p_target(p)
        self.smoothing = smoothing
        self.verbose = bool(verbose)
        self.log_file = log_file
        self._check_inputs()

    def _check_inputs(self):
        if self.subcommand == "build" and self.measure is None:
            raise ValueError("build needs a measure file")
        if self.subcommand in ("verify", "plot") and self.artifact is None:
            raise ValueError("%s needs an artifact file" % self.subcommand)
        if self.subcommand == "check":
            sources = [s for s in (self.fixture, self.curve) if s is not None]
            if len(sources) > 1:
                raise ValueError("check takes either a fixture or a curve")
            if not sources and self.artifact is None:
                raise ValueError("check needs a fixture, a curve or an "
                                 "artifact")

    def to_dict(self):
        return self.get_args()

    def run_id(self):
        """Identifier derived from everything but the output settings."""
        args = self.to_dict()
        for key in ("out", "force", "verbose", "log_file"):
            args.pop(key)
        return "%s-%s" % (self.subcommand, config_hash(args)[:12])

    @classmethod
    def from_dict(cls, config):
        try:
            return cls(**config)
        except TypeError as e:
            raise TypeError("Parameters for RunConfig do not match: %r. "
                            "Reason: '%s'" % (config, e))

    @classmethod
    def from_file(cls, filename, conf_path=None, **overrides):
        """Load a configuration file, keyword arguments take precedence.

        Parameters
        ----------
        filename : string
            JSON or YAML file

        conf_path : string, optional (default: $SKOROHOD_CONF_PATH)
            Directory searched for the file

        overrides : dict
            Values that replace those of the file

        Returns
        -------
        config : RunConfig
            Validated configuration
        """
        config = load_config(filename, conf_path)
        config.update(overrides)
        return cls.from_dict(config)
