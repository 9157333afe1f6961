"""Subcommands of skorohod-run.

Each command reads its inputs from a RunConfig, writes its outputs to the
run directory and returns the names of the written files together with an
exit code. run_command adds the manifest and maps errors to exit code 2.
"""
import os
import platform
import numpy as np
from .. import __version__
from ..analytic_examples import density_curve
from ..construction import DomainArtifact, synthesize, boundary_for_plot
from ..datasets import load_fixture
from ..geometry import BoundaryCurve, clip
from ..measures import measure_from_file
from ..simulate import verify_embedding
from ..uniqueness import check_conditions
from ..utils.exceptions import SkorohodError, RunDirectoryExists
from ..utils.io import (write_json, file_hash, config_hash, plot_polylines)
from ..utils.log import get_logger


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def run_command(config):
    """Run a subcommand in its own directory.

    Parameters
    ----------
    config : RunConfig
        Validated configuration

    Returns
    -------
    exit_code : int
        0 on success, 1 if a verification or check did not pass, 2 if a
        module raised an error. Errors are written to error.json.

    Raises
    ------
    RunDirectoryExists
        If the run directory holds files and force is not set.
    """
    logger = get_logger("skorohod-run", config.log_file or False,
                        config.verbose)
    run_dir = prepare_run_dir(config)
    logger.info("Running '%s' in '%s'" % (config.subcommand, run_dir))
    try:
        outputs, exit_code = COMMANDS[config.subcommand](config, run_dir,
                                                         logger)
    except (SkorohodError, ValueError) as e:
        logger.error("%s: %s" % (type(e).__name__, e))
        outputs = ["error.json"]
        write_json(os.path.join(run_dir, "error.json"),
                   {"error": type(e).__name__, "message": str(e)})
        exit_code = EXIT_ERROR
    write_manifest(run_dir, config, outputs, exit_code)
    logger.info("Finished with exit code %d" % exit_code)
    return exit_code


def prepare_run_dir(config):
    """Create the run directory, refusing to reuse one unless forced."""
    run_dir = config.out
    if run_dir is None:
        run_dir = os.path.join("runs", config.run_id())
    if os.path.isdir(run_dir) and os.listdir(run_dir) and not config.force:
        raise RunDirectoryExists("'%s' holds an earlier run, use --force to "
                                 "overwrite it" % run_dir)
    if not os.path.isdir(run_dir):
        os.makedirs(run_dir)
    return run_dir


def write_manifest(run_dir, config, outputs, exit_code):
    """Write config, versions and hashes of the outputs to manifest.json."""
    manifest = {
        "config": config.to_dict(),
        "config_hash": config_hash(config.to_dict()),
        "exit_code": exit_code,
        "versions": versions(),
        "files": dict((name, file_hash(os.path.join(run_dir, name)))
                      for name in outputs)}
    write_json(os.path.join(run_dir, "manifest.json"), manifest)
    return manifest


def versions():
    """Versions of Python, skorohod and its dependencies."""
    import scipy
    import yaml
    import matplotlib
    return {"python": platform.python_version(), "skorohod": __version__,
            "numpy": np.__version__, "scipy": scipy.__version__,
            "PyYAML": yaml.__version__, "matplotlib": matplotlib.__version__}


def cmd_build(config, run_dir, logger=None):
    """Synthesize a domain and write artifact.json, boundary.csv/.svg."""
    spec = measure_from_file(config.measure)
    artifact = synthesize(spec, config.n_coeffs, config.n_grid,
                          log_to_file=config.log_file or False,
                          log_to_stdout=config.verbose)
    artifact.save(os.path.join(run_dir, "artifact.json"))
    artifact.to_csv(os.path.join(run_dir, "boundary.csv"))
    _plot_boundary(artifact, os.path.join(run_dir, "boundary.svg"),
                   config.clip)
    write_json(os.path.join(run_dir, "diagnostics.json"),
               artifact.diagnostics)
    return (["artifact.json", "boundary.csv", "boundary.svg",
             "diagnostics.json"], EXIT_OK)


def cmd_verify(config, run_dir, logger=None):
    """Simulate exits from an artifact and write report.json."""
    artifact = DomainArtifact.load(config.artifact)
    spec = None
    if config.measure is not None:
        spec = measure_from_file(config.measure)
    report = verify_embedding(
        artifact, spec, config.n_paths, config.backend, config.dt,
        config.eps, config.seed, config.bridge, config.clip,
        config.max_steps, log_to_file=config.log_file or False,
        log_to_stdout=config.verbose)
    report["artifact_id"] = artifact.provenance.get("config_hash")
    write_json(os.path.join(run_dir, "report.json"), report)
    return ["report.json"], EXIT_OK if report["passed"] else EXIT_FAILED


def cmd_density(config, run_dir, logger=None):
    """Tabulate and plot a closed-form exit density."""
    curve = density_curve(config.domain, config.marginal, config.start,
                          config.R, config.delta, config.n_points)
    curve.to_csv(os.path.join(run_dir, "density.csv"))
    curve.plot(os.path.join(run_dir, "density.svg"))
    write_json(os.path.join(run_dir, "summary.json"), curve.summary())
    return ["density.csv", "density.svg", "summary.json"], EXIT_OK


def cmd_check(config, run_dir, logger=None):
    """Check the uniqueness conditions and write report.json.

    The domain is a fixture, a boundary CSV or, if neither is given, the
    artifact. An artifact given together with a fixture or a curve is the
    reference whose boundary is compared with the domain.
    """
    artifact = None
    if config.artifact is not None:
        artifact = DomainArtifact.load(config.artifact)
    reference = artifact
    start = config.start
    if config.fixture is not None:
        fixture = load_fixture(config.fixture)
        curve = fixture.curve
        start = fixture.start
    elif config.curve is not None:
        curve = BoundaryCurve.from_csv(config.curve)
        if config.clip is not None:
            curve = clip(curve, config.clip)
    else:
        if artifact.support_unbounded and config.clip is None:
            raise ValueError("Checking the domain of an unbounded "
                             "distribution needs a clip window")
        curve = artifact.to_curve(config.clip)
        reference = None
    p = config.p
    if p is None:
        p = 2.0 if artifact is None else artifact.p
    report = check_conditions(
        curve, p, config.n_paths, start, config.dt, config.seed,
        config.max_steps, reference=reference,
        log_to_file=config.log_file or False, log_to_stdout=config.verbose)
    report.save(os.path.join(run_dir, "report.json"))
    if logger is not None and report.failures():
        logger.warning("Conditions not met: %s"
                       % ", ".join(report.failures()))
    return ["report.json"], EXIT_OK if report.passed else EXIT_FAILED


def cmd_plot(config, run_dir, logger=None):
    """Plot the boundary of an artifact, optionally Fejer-smoothed."""
    artifact = DomainArtifact.load(config.artifact)
    _plot_boundary(artifact, os.path.join(run_dir, "boundary.svg"),
                   config.clip, config.smoothing)
    return ["boundary.svg"], EXIT_OK


def _plot_boundary(artifact, filename, window=None, smoothing=None):
    points = boundary_for_plot(artifact, smoothing)
    if window is not None:
        points = clip(BoundaryCurve(points), window).vertices
    points = np.vstack((points, points[:1]))
    title = None
    if artifact.measure:
        title = artifact.measure.get("name", artifact.measure.get("kind"))
    plot_polylines(filename, [points], title=title)


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "density": cmd_density,
    "check": cmd_check,
    "plot": cmd_plot,
}
