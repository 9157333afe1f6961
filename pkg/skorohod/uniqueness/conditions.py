"""Numerical check of the conditions that single out one embedding domain.

A domain is the unique answer for its distribution when it is symmetric
about the real axis, Delta-convex and has E[tau ** (p / 2)] < inf. The
first two conditions are geometric predicates. The moment condition is not
decidable from samples, so the report grades Monte Carlo evidence.
"""
import numpy as np
from ..construction import DomainArtifact
from ..geometry import (BoundaryCurve, clip, is_symmetric, is_delta_convex,
                        is_simple, hausdorff_distance, diagnostics,
                        default_radii)
from ..simulate import (ExitSampleSet, euler_exit, tail_index,
                        escape_exponent, moment_estimate)
from ..simulate.verification import MAX_LEAKAGE
from ..utils.exceptions import InsufficientTail, NotSymmetric, WindowMismatch
from ..utils.io import write_json
from ..utils.log import get_logger
from ..utils.validation import check_p_target, check_window


VERDICTS = ("finite", "infinite-suspected", "inconclusive")
N_SIGMA = 2.0


class UniquenessReport(object):
    """Outcome of check_conditions.

    Parameters
    ----------
    symmetric : bool
        Boundary is symmetric about the real axis

    delta_convex : bool
        Domain contains [z, conj(z)] for each of its points

    simple : bool
        Boundary polyline has no self-intersections

    moment : dict
        'p', 'verdict' (one of VERDICTS) and 'evidence'

    boundary_match : dict or None
        'hausdorff_distance' to a reference artifact and its
        'reference_artifact_id'

    geometry : dict
        Optional geometric conditions, see geometry.diagnostics

    window : tuple or None
        Clip window of the checked curve
    """
    def __init__(self, symmetric, delta_convex, simple, moment,
                 boundary_match=None, geometry=None, window=None):
        if moment["verdict"] not in VERDICTS:
            raise ValueError("Unknown verdict %r" % (moment["verdict"],))
        self.symmetric = bool(symmetric)
        self.delta_convex = bool(delta_convex)
        self.simple = bool(simple)
        self.moment = moment
        self.boundary_match = boundary_match
        self.geometry = {} if geometry is None else geometry
        self.window = window

    @property
    def moment_finite(self):
        return self.moment["verdict"] == "finite"

    @property
    def passed(self):
        return self.symmetric and self.delta_convex and self.moment_finite

    def failures(self):
        """Names of the conditions that are not met."""
        failed = []
        if not self.symmetric:
            failed.append("symmetric")
        if not self.delta_convex:
            failed.append("delta_convex")
        if not self.moment_finite:
            failed.append("moment")
        return failed

    def to_dict(self):
        return {"symmetric": self.symmetric,
                "delta_convex": self.delta_convex,
                "simple": self.simple,
                "moment_finite_estimate": self.moment,
                "boundary_match": self.boundary_match,
                "geometry": self.geometry,
                "window": None if self.window is None else list(self.window),
                "failures": self.failures(),
                "passed": self.passed}

    def save(self, filename):
        write_json(filename, self.to_dict())

    def __repr__(self):
        return ("UniquenessReport(symmetric=%s, delta_convex=%s, moment=%s)"
                % (self.symmetric, self.delta_convex,
                   self.moment["verdict"]))


def moment_verdict(p, tail=None, escape=None, leakage=0.0):
    """Grade the evidence for E[tau ** (p / 2)] < inf.

    Parameters
    ----------
    p : float
        Moment order of the embedding

    tail : dict or None
        Details of simulate.tail_index

    escape : dict or None
        Details of simulate.escape_exponent

    leakage : float
        Fraction of paths that left through the clip frame

    Returns
    -------
    verdict : string
        'infinite-suspected' if the tail index or half the escape exponent
        lies more than two standard errors below p / 2, or if a power tail
        shows together with leakage above 0.5%. 'finite' if the tail index
        lies more than two standard errors above p / 2, or if no power tail
        shows and the leakage stays below 0.5%. 'inconclusive' otherwise.
    """
    q = 0.5 * p
    half = None
    if escape is not None:
        half = (0.5 * escape["exponent"], 0.5 * escape["stderr"])
    leaking = leakage > MAX_LEAKAGE

    if tail is not None and tail["alpha"] + N_SIGMA * tail["stderr"] < q:
        return "infinite-suspected"
    if half is not None and half[0] + N_SIGMA * half[1] < q:
        return "infinite-suspected"
    if tail is not None and tail["power_tail"] and leaking:
        return "infinite-suspected"
    if tail is not None:
        if tail["alpha"] - N_SIGMA * tail["stderr"] > q:
            return "finite"
        if not tail["power_tail"] and not leaking:
            return "finite"
    return "inconclusive"


def check_conditions(curve, p, n_paths=10000, start=0.0, dt=1e-3, seed=0,
                     max_steps=10 ** 5, k=None, reference=None,
                     n_resamples=200, log_to_file=False,
                     log_to_stdout=False):
    """Check symmetry, Delta-convexity and the moment condition.

    Parameters
    ----------
    curve : BoundaryCurve or DomainArtifact
        Candidate domain, clipped if unbounded. The domain of a
        distribution with unbounded support has to be clipped with
        DomainArtifact.to_curve(window) first.

    p : float
        Moment order, p > 1

    n_paths : int, optional (default: 10000)
        Euler paths for the moment evidence, 0 skips the simulation

    start : complex, optional (default: 0)
        Start point of the paths

    dt : float, optional (default: 1e-3)
        Time step

    seed : int, optional (default: 0)
        Seed of the random streams

    max_steps : int, optional (default: 10 ** 5)
        Step budget per path, paths beyond it are censored

    k : int, optional (default: n_paths // 10)
        Upper order statistics of the tail estimate

    reference : DomainArtifact, optional (default: None)
        Artifact whose boundary is compared with the curve

    n_resamples : int, optional (default: 200)
        Bootstrap resamples of the moment estimate

    Returns
    -------
    report : UniquenessReport
        Conditions and the evidence behind the moment verdict
    """
    logger = get_logger("check_conditions", log_to_file, log_to_stdout)
    check_p_target(p)
    if isinstance(curve, DomainArtifact):
        if curve.support_unbounded:
            raise ValueError("Clip the domain of an unbounded distribution "
                             "before checking it")
        curve = curve.to_curve()

    symmetric = is_symmetric(curve)
    try:
        delta_convex = is_delta_convex(curve)
    except NotSymmetric:
        delta_convex = False
    simple = is_simple(curve)
    logger.info("symmetric=%s, delta_convex=%s, simple=%s"
                % (symmetric, delta_convex, simple))

    if n_paths > 0:
        moment = _moment_evidence(curve, p, n_paths, start, dt, seed,
                                  max_steps, k, n_resamples, logger,
                                  log_to_file, log_to_stdout)
    else:
        moment = {"p": float(p), "verdict": "inconclusive",
                  "evidence": {"simulated": False}}
    logger.info("Moment of order p / 2 = %g: %s"
                % (0.5 * p, moment["verdict"]))

    boundary_match = None
    if reference is not None:
        boundary_match = {
            "hausdorff_distance": compare_domains(reference, curve,
                                                  curve.window),
            "reference_artifact_id":
                reference.provenance.get("config_hash")}
    return UniquenessReport(symmetric, delta_convex, simple, moment,
                            boundary_match, diagnostics(curve), curve.window)


def _moment_evidence(curve, p, n_paths, start, dt, seed, max_steps, k,
                     n_resamples, logger, log_to_file, log_to_stdout):
    samples = euler_exit(curve, start, dt, n_paths, seed, max_steps,
                         bridge=True, max_censored_fraction=1.0,
                         log_to_file=log_to_file,
                         log_to_stdout=log_to_stdout)
    leakage = samples.leakage
    evidence = {"simulated": True, "n_paths": n_paths, "dt": dt,
                "leakage": leakage,
                "censored_fraction": samples.censored_fraction}

    # frame exits only bound the exit time of the unclipped domain
    lower_bounds = ExitSampleSet(
        samples.exit_x, samples.exit_y, samples.exit_time, samples.n_steps,
        samples.backend, samples.seed, samples.stream_id,
        samples.censored | samples.frame_exit, samples.frame_exit,
        samples.max_radius, samples.dt)
    if k is None:
        k = n_paths // 10
    try:
        _, tail = tail_index(lower_bounds, k, return_details=True)
    except InsufficientTail as e:
        logger.warning("No tail index: %s" % e)
        tail = None
    evidence["tail"] = tail

    try:
        _, escape = escape_exponent(samples, _escape_radii(curve, samples),
                                    return_details=True)
    except InsufficientTail as e:
        logger.warning("No escape exponent: %s" % e)
        escape = None
    evidence["escape"] = escape

    finished = ~lower_bounds.censored
    if np.count_nonzero(finished) >= 2:
        evidence["bootstrap"] = moment_estimate(
            samples.exit_time[finished], 0.5 * p, n_resamples,
            random_state=seed % 2 ** 32)
    else:
        evidence["bootstrap"] = None
    return {"p": float(p), "verdict": moment_verdict(p, tail, escape,
                                                     leakage),
            "evidence": evidence}


def _escape_radii(curve, samples, n_radii=12):
    """Radii from the median largest radius to just inside the frame."""
    r_max = default_radii(curve)[-1]
    r_min = float(np.median(samples.max_radius))
    if not r_min < r_max:
        r_min = 0.5 * r_max
    return np.geomspace(r_min, r_max, n_radii)


def compare_domains(a, b, window=None, spacing=None):
    """Hausdorff distance between two domain boundaries.

    Parameters
    ----------
    a : DomainArtifact or BoundaryCurve
        First domain

    b : DomainArtifact or BoundaryCurve
        Second domain

    window : tuple, optional (default: None)
        Common clip window. Without it both domains must be bounded or
        clipped to the same window.

    spacing : float, optional (default: see geometry.hausdorff_distance)
        Sampling distance along the boundaries

    Returns
    -------
    distance : float
        Symmetric Hausdorff distance

    Raises
    ------
    WindowMismatch
        If the domains are clipped differently or an unbounded domain has
        no window.
    """
    window = check_window(window)
    curve_a = _comparable(a, window)
    curve_b = _comparable(b, window)
    if not _same_window(curve_a.window, curve_b.window):
        raise WindowMismatch("Domains are clipped to %r and %r"
                             % (curve_a.window, curve_b.window))
    return hausdorff_distance(curve_a, curve_b, spacing)


def _comparable(domain, window):
    if isinstance(domain, DomainArtifact):
        if window is None and domain.support_unbounded:
            raise WindowMismatch("An unbounded domain needs a clip window")
        return domain.to_curve(window)
    if not isinstance(domain, BoundaryCurve):
        raise TypeError("Expected a DomainArtifact or a BoundaryCurve, got "
                        "%s" % type(domain).__name__)
    if window is not None and not _same_window(domain.window, window):
        return clip(domain, window)
    if window is None and domain.support_unbounded and domain.window is None:
        raise WindowMismatch("An unbounded domain needs a clip window")
    return domain


def _same_window(w1, w2):
    if w1 is None or w2 is None:
        return w1 is None and w2 is None
    return np.allclose(np.asarray(w1, dtype=float),
                       np.asarray(w2, dtype=float), rtol=0.0, atol=1e-12)
