"""Goodness of fit, moment and tail statistics of exit samples."""
import numpy as np
from scipy import stats
from ..measures import DiscreteMeasure, ks_distance
from ..utils.exceptions import InsufficientTail
from ..utils.validation import check_random_state


KS_LEVEL = 0.01
MIN_TAIL = 50


def goodness_of_fit(values, spec, level=KS_LEVEL):
    """Test samples against a distribution.

    Continuous distributions are tested with Kolmogorov-Smirnov against
    spec.cdf. For distributions with atoms every sample is assigned to the
    nearest atom and the counts are compared with a chi-square test.

    Parameters
    ----------
    values : array-like, shape (n_samples,)
        Samples

    spec : MeasureSpec
        Distribution

    level : float, optional (default: 0.01)
        Significance level

    Returns
    -------
    result : dict
        'test', 'statistic', 'pvalue', 'passed' and the KS distance
        'ks_distance'
    """
    values = np.asarray(values, dtype=float)
    result = {"ks_distance": ks_distance(spec, values), "level": level}
    if spec.is_atomic:
        x, w = atoms(spec)
        midpoints = 0.5 * (x[1:] + x[:-1])
        counts = np.bincount(np.searchsorted(midpoints, values),
                             minlength=len(x))
        statistic, pvalue = stats.chisquare(counts, len(values) * w)
        result.update({"test": "chi2", "counts": counts.tolist(),
                       "expected": (len(values) * w).tolist()})
    else:
        statistic, pvalue = stats.kstest(values, spec.cdf)
        result["test"] = "ks"
    result.update({"statistic": float(statistic), "pvalue": float(pvalue),
                   "passed": bool(pvalue > level)})
    return result


def atoms(spec):
    """Positions and weights of the atoms of a purely atomic distribution."""
    if isinstance(spec, DiscreteMeasure):
        return spec.x_, spec.w_
    config = spec.to_dict()
    if config.get("name") == "two_point":
        c = config["params"]["c"]
        return np.array([-c, c]), np.array([0.5, 0.5])
    raise ValueError("%r is not purely atomic" % (spec,))


def ks_two_sample(a, b):
    """Two-sample Kolmogorov-Smirnov statistic and p-value."""
    result = stats.ks_2samp(np.asarray(a, dtype=float),
                            np.asarray(b, dtype=float))
    return float(result.statistic), float(result.pvalue)


def moment_estimate(times, q, n_resamples=1000, level=0.95,
                    random_state=None):
    """Empirical E[tau ** q] with a bootstrap confidence interval.

    Parameters
    ----------
    times : array-like, shape (n_samples,)
        Exit times

    q : float
        Moment order

    n_resamples : int, optional (default: 1000)
        Number of bootstrap resamples

    level : float, optional (default: 0.95)
        Confidence level of the percentile interval

    random_state : int or RandomState, optional (default: global seed)
        Seed of the resampling

    Returns
    -------
    estimate : dict
        'estimate', 'stderr' (bootstrap standard deviation), 'ci_low' and
        'ci_high'
    """
    random_state = check_random_state(random_state)
    values = np.asarray(times, dtype=float) ** q
    n = len(values)
    boot = np.empty(n_resamples)
    for i in range(n_resamples):
        boot[i] = values[random_state.randint(0, n, n)].mean()
    alpha = 0.5 * (1.0 - level)
    low, high = np.quantile(boot, [alpha, 1.0 - alpha])
    return {"q": float(q), "estimate": float(values.mean()),
            "stderr": float(boot.std(ddof=1)), "ci_low": float(low),
            "ci_high": float(high), "n_resamples": n_resamples}


def markov_bound_check(times, q, deltas, n_sigma=3.0):
    """Compare P(tau > delta) with the Markov bound E[tau ** q] / delta ** q.

    Both sides are estimated from the same samples. The bound counts as
    violated only if the tail estimate exceeds it by more than n_sigma
    combined standard errors.

    Returns
    -------
    check : dict
        'deltas', 'tail', 'bound', 'slack' and 'ok'
    """
    times = np.asarray(times, dtype=float)
    deltas = np.asarray(deltas, dtype=float)
    n = len(times)
    powers = times ** q
    tail = np.array([np.mean(times > d) for d in deltas])
    bound = powers.mean() / deltas ** q
    slack = n_sigma * (np.sqrt(tail * (1.0 - tail) / n) +
                       powers.std() / np.sqrt(n) / deltas ** q)
    return {"q": float(q), "deltas": deltas.tolist(), "tail": tail.tolist(),
            "bound": bound.tolist(), "slack": slack.tolist(),
            "ok": bool(np.all(tail <= bound + slack))}


def escape_exponent(samples, radii=None, min_count=10, return_details=False):
    """Decay rate of P(sup |Z| >= r) before the exit.

    For a wedge of opening alpha the probability decays like
    r ** (-pi / alpha), twice the Hardy number of the wedge.

    Parameters
    ----------
    samples : ExitSampleSet
        Samples with the largest radius of each path

    radii : array-like, optional (default: quantiles 0.5 to 0.98)
        Radii at which the survival function is evaluated

    min_count : int, optional (default: 10)
        Radii with fewer paths beyond them are ignored

    return_details : bool, optional (default: False)
        Also return the standard error of the slope and the radii used

    Returns
    -------
    exponent : float
        Negative slope of log P(sup |Z| >= r) against log r

    details : dict
        Only if return_details is set. The standard error is infinite when
        fewer than four radii remain.
    """
    r = samples.max_radius
    if radii is None:
        radii = np.geomspace(*np.quantile(r, [0.5, 0.98]), num=12)
    radii = np.asarray(radii, dtype=float)
    counts = np.array([np.sum(r >= rho) for rho in radii])
    keep = counts >= min_count
    if np.count_nonzero(keep) < 2 or np.ptp(radii[keep]) == 0.0:
        raise InsufficientTail("Need two radii with at least %d paths beyond"
                               % min_count)
    x = np.log(radii[keep])
    y = np.log(counts[keep] / float(len(r)))
    if np.count_nonzero(keep) >= 4:
        (slope, _), cov = np.polyfit(x, y, 1, cov=True)
        stderr = float(np.sqrt(cov[0, 0]))
    else:
        slope, _ = np.polyfit(x, y, 1)
        stderr = np.inf
    if return_details:
        return float(-slope), {"exponent": float(-slope), "stderr": stderr,
                               "radii": radii[keep].tolist(),
                               "counts": counts[keep].tolist()}
    return float(-slope)


def tail_index(samples, k, return_details=False):
    """Tail exponent of the exit time from its k largest values.

    The exit times above the (k + 1)-th largest value u are fitted with a
    Pareto tail P(tau > t) ~ t ** -alpha. Censored times enter the
    likelihood as lower bounds:

        alpha = (number of uncensored times among the k largest)
                / sum_{i <= k} log(t_(i) / u)

    which is Hill's estimator when nothing is censored. A power tail is
    reported when the estimate from the k / 4 largest values does not
    exceed the one from the k largest by more than three standard errors
    of their difference. Tails that decay faster than any power give
    estimates that grow with the threshold.

    Parameters
    ----------
    samples : ExitSampleSet
        Samples of the Euler scheme

    k : int
        Number of upper order statistics, 50 <= k <= n_paths / 10

    return_details : bool, optional (default: False)
        Also return the standard error, the estimate from k / 4 values and
        the power tail flag

    Returns
    -------
    alpha : float
        Estimate of sup {q : E[tau ** q] < inf}

    details : dict
        Only if return_details is set

    Raises
    ------
    InsufficientTail
        If k is outside the admissible range or the tail has no exits.
    """
    if samples.mean_time_only:
        raise ValueError("Tail estimates need exit times of the Euler scheme")
    n = samples.n_paths
    k = int(k)
    if not MIN_TAIL <= k <= n // 10:
        raise InsufficientTail("Need %d <= k <= n / 10 = %d, got k=%d"
                               % (MIN_TAIL, n // 10, k))
    order = np.argsort(-samples.exit_time, kind="mergesort")
    times = samples.exit_time[order]
    censored = samples.censored[order]
    alpha, stderr = _pareto_mle(times, censored, k)
    alpha_quarter, _ = _pareto_mle(times, censored, k // 4)
    power_tail = alpha_quarter - alpha <= 3.0 * alpha * np.sqrt(3.0 / k)
    if return_details:
        return alpha, {"alpha": alpha, "stderr": stderr, "k": k,
                       "alpha_quarter": alpha_quarter,
                       "power_tail": bool(power_tail),
                       "n_censored": int(censored[:k].sum()),
                       "threshold": float(times[k])}
    return alpha


def _pareto_mle(times, censored, k):
    u = times[k]
    if not u > 0.0:
        raise InsufficientTail("Tail threshold must be positive")
    logs = np.log(times[:k] / u)
    n_exits = k - int(censored[:k].sum())
    if n_exits == 0 or not logs.sum() > 0.0:
        raise InsufficientTail("No uncensored exits above the threshold")
    alpha = n_exits / logs.sum()
    return float(alpha), float(alpha / np.sqrt(n_exits))
