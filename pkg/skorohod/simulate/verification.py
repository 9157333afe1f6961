"""Monte Carlo verification of a synthesized domain."""
import numpy as np
from ..utils.exceptions import LeakageExceeded
from ..utils.log import get_logger
from .euler import euler_exit
from .wos import wos_exit
from .statistics import goodness_of_fit, moment_estimate


MAX_LEAKAGE = 0.005


def verify_embedding(artifact, spec=None, n_paths=100000, backend="euler",
                     dt=1e-3, eps=1e-4, seed=0, bridge=True, window=None,
                     max_steps=10 ** 6, n_resamples=1000,
                     return_samples=False, log_to_file=False,
                     log_to_stdout=False):
    """Check that the real part of the exit position follows a distribution.

    Brownian motion is started at the image of 0, which is 0 because the
    profile has zero mean. The report compares the real parts of the exit
    positions with the distribution, the mean exit time with the Parseval
    estimate of the artifact and estimates E[tau ** (p / 2)].

    Parameters
    ----------
    artifact : DomainArtifact
        Synthesized domain

    spec : MeasureSpec, optional (default: artifact.spec())
        Distribution the domain was synthesized from

    n_paths : int, optional (default: 100000)
        Number of sample paths

    backend : 'euler' or 'wos', optional (default: 'euler')
        Sampler

    dt : float, optional (default: 1e-3)
        Time step of the Euler scheme

    eps : float, optional (default: 1e-4)
        Absorption distance of walk-on-spheres

    seed : int, optional (default: 0)
        Seed of all random streams

    bridge : bool, optional (default: True)
        Brownian bridge correction of the Euler scheme

    window : tuple, optional (default: None)
        Clip window, required if the distribution has unbounded support

    max_steps : int, optional (default: 10 ** 6)
        Step budget per path

    n_resamples : int, optional (default: 1000)
        Bootstrap resamples of the moment estimate

    return_samples : bool, optional (default: False)
        Also return the exit samples

    log_to_file : bool or string, optional (default: False)
        Log progress to a file

    log_to_stdout : bool, optional (default: False)
        Log progress to standard output

    Returns
    -------
    report : dict
        'fit' (goodness of fit of the real parts), 'mean_time' (mean exit
        time, its standard error and the Parseval estimate), 'moment'
        (bootstrap estimate of E[tau ** (p / 2)]), 'leakage' and 'passed'

    samples : ExitSampleSet
        Only if return_samples is set

    Raises
    ------
    LeakageExceeded
        If more than 0.5% of the paths leave through the clip frame.
    """
    logger = get_logger("verify_embedding", log_to_file, log_to_stdout)
    if spec is None:
        spec = artifact.spec()
    if artifact.support_unbounded and window is None:
        raise ValueError("Distributions with unbounded support need a clip "
                         "window")
    curve = artifact.to_curve(window)
    if backend == "euler":
        samples = euler_exit(curve, 0.0, dt, n_paths, seed, max_steps,
                             bridge=bridge, log_to_file=log_to_file,
                             log_to_stdout=log_to_stdout)
    elif backend == "wos":
        samples = wos_exit(curve, 0.0, eps, n_paths, seed,
                           log_to_file=log_to_file,
                           log_to_stdout=log_to_stdout)
    else:
        raise ValueError("Unknown backend '%s'" % backend)

    leakage = samples.leakage
    if leakage > MAX_LEAKAGE:
        raise LeakageExceeded("%.3g%% of the paths left through the clip "
                              "frame %r" % (100.0 * leakage, curve.window))

    fit = goodness_of_fit(samples.exit_x, spec)
    times = samples.exit_time
    mean_time = float(times.mean())
    stderr = float(times.std(ddof=1) / np.sqrt(len(times)))
    expected = artifact.diagnostics["parseval_Etau"]
    gap = abs(mean_time - expected)
    report = {
        "backend": backend, "n_paths": samples.n_paths,
        "sampler": samples.metadata(),
        "fit": fit,
        "mean_time": {"estimate": mean_time, "stderr": stderr,
                      "parseval_Etau": expected, "gap": gap,
                      "passed": bool(gap <= 3.0 * stderr)},
        "leakage": leakage,
        "censored_fraction": samples.censored_fraction,
    }
    if samples.mean_time_only:
        report["moment"] = None
        logger.info("Time field of walk-on-spheres only estimates E[tau], "
                    "no moment of order p / 2")
    else:
        report["moment"] = moment_estimate(times, 0.5 * artifact.p,
                                           n_resamples,
                                           random_state=seed % 2 ** 32)
    report["passed"] = fit["passed"] and report["mean_time"]["passed"]
    logger.info("Fit %s (p=%.3g), mean exit time %.5g +- %.2g vs %.5g"
                % (fit["test"], fit["pvalue"], mean_time, stderr, expected))
    if return_samples:
        return report, samples
    return report
