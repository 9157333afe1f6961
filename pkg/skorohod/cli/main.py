import argparse
import sys
from .config import RunConfig, BACKENDS
from .commands import run_command, EXIT_ERROR
from ..analytic_examples.density import DOMAINS, MARGINALS
from ..datasets import FIXTURES
from ..utils.exceptions import RunDirectoryExists


def build_parser():
    """Argument parser of skorohod-run.

    Flags left out on the command line fall back to the values of --config
    and then to the defaults of RunConfig.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML or JSON file with settings")
    common.add_argument("--out", help="run directory (default: "
                        "runs/<subcommand>-<config hash>)")
    common.add_argument("--force", action="store_true", default=None,
                        help="write into a directory of an earlier run")
    common.add_argument("--seed", type=int, help="seed (default: 0)")
    common.add_argument("--clip", type=float, nargs=2, metavar=("X", "Y"),
                        help="clip window [-X, X] x [-Y, Y]")
    common.add_argument("--verbose", action="store_true", default=None,
                        help="log progress to stdout")
    common.add_argument("--log-file", dest="log_file",
                        help="log progress to this file")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--dt", type=float,
                          help="Euler time step (default: 1e-3)")
    sampling.add_argument("--paths", dest="n_paths", type=int,
                          help="number of paths (default: 100000)")
    sampling.add_argument("--max-steps", dest="max_steps", type=int,
                          help="step budget per path (default: 10**6)")

    parser = argparse.ArgumentParser(
        prog="skorohod-run",
        description="Build, verify and check conformal Skorohod "
                    "embeddings of planar Brownian motion.")
    subparsers = parser.add_subparsers(dest="subcommand")
    subparsers.required = True

    build = subparsers.add_parser("build", parents=[common],
                                  help="synthesize a domain")
    build.add_argument("--measure", help="measure file (JSON or YAML)")
    build.add_argument("--n-coeffs", dest="n_coeffs", type=int,
                       help="Fourier coefficients (default: 4096)")
    build.add_argument("--grid", dest="n_grid", type=int,
                       help="boundary samples (default: 16384)")

    verify = subparsers.add_parser("verify", parents=[common, sampling],
                                   help="simulate exits from an artifact")
    verify.add_argument("--artifact", help="artifact.json of a build run")
    verify.add_argument("--measure", help="compare with this measure "
                        "instead of the one stored in the artifact")
    verify.add_argument("--backend", choices=BACKENDS,
                        help="exit sampler (default: euler)")
    verify.add_argument("--eps", type=float,
                        help="walk-on-spheres absorption (default: 1e-4)")
    verify.add_argument("--no-bridge", dest="bridge", action="store_false",
                        default=None, help="no Brownian bridge correction")

    density = subparsers.add_parser("density", parents=[common],
                                    help="closed-form exit densities")
    density.add_argument("--domain", choices=DOMAINS[:-1],
                         help="example domain (default: disk)")
    density.add_argument("--marginal", choices=MARGINALS,
                         help="boundary, X or Y (default: X)")
    density.add_argument("--start", type=complex,
                         help="start point in the disk (default: 0)")
    density.add_argument("--R", type=float, help="ellipse parameter")
    density.add_argument("--delta", type=float, help="hyperbola parameter")
    density.add_argument("--n-points", dest="n_points", type=int,
                         help="number of samples (default: 1001)")

    check = subparsers.add_parser("check", parents=[common, sampling],
                                  help="check the uniqueness conditions")
    check.add_argument("--fixture", choices=sorted(FIXTURES))
    check.add_argument("--artifact", help="artifact.json of a build run")
    check.add_argument("--curve", help="CSV file with columns x and y")
    check.add_argument("--p", type=float, help="moment order (default: "
                       "order of the artifact, else 2)")
    check.add_argument("--start", type=complex,
                       help="start point of the paths (default: 0)")

    plot = subparsers.add_parser("plot", parents=[common],
                                 help="plot the boundary of an artifact")
    plot.add_argument("--artifact", help="artifact.json of a build run")
    plot.add_argument("--smoothing", choices=["fejer"])
    return parser


def parse_config(argv=None):
    """Turn command line arguments into a RunConfig."""
    parser = build_parser()
    args = vars(parser.parse_args(argv))
    filename = args.pop("config")
    overrides = dict((k, v) for k, v in args.items() if v is not None)
    try:
        if filename is None:
            return RunConfig.from_dict(overrides)
        return RunConfig.from_file(filename, **overrides)
    except (TypeError, ValueError) as e:
        parser.error(str(e))


def main(argv=None):
    config = parse_config(argv)
    try:
        return run_command(config)
    except RunDirectoryExists as e:
        sys.stderr.write("skorohod-run: %s\n" % e)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
