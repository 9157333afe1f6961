"""Euler scheme for the exit of planar Brownian motion from a polygon."""
import numpy as np
from ..geometry import BoundaryIndex, contains
from ..utils.exceptions import PathBudgetExceeded
from ..utils.log import get_logger
from ..utils.validation import check_seed
from .samples import ExitSampleSet, path_stream


MAX_DT = 1e-2
# exp(-2 d_a d_b / dt) < exp(-40) is not worth a distance query
BRIDGE_CUTOFF = 20.0


def euler_exit(curve, start, dt=1e-3, n_paths=1000, seed=0, max_steps=10 ** 6,
               bridge=False, max_censored_fraction=0.01, chunk_size=1024,
               block_size=128, index=None, log_to_file=False,
               log_to_stdout=False):
    """Sample exit positions and times with Gaussian increments.

    Every path takes steps with independent N(0, dt) coordinates. The
    first step that crosses the boundary polyline ends the path at the
    crossing point; the exit time is credited with the fraction of the step
    before the crossing. With 'bridge' set, a step between two interior
    points at distances d_a and d_b from the boundary also ends the path
    with probability exp(-2 d_a d_b / dt), the probability that a Brownian
    bridge over the step touches a line at these distances. The path then
    exits at the boundary point nearest to the closer end of the step.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary, clipped to a window if the domain is unbounded

    start : complex or pair of floats
        Starting point inside the domain

    dt : float, optional (default: 1e-3)
        Time step in (0, 1e-2]

    n_paths : int, optional (default: 1000)
        Number of sample paths

    seed : int, optional (default: 0)
        Seed of the per-path random streams

    max_steps : int, optional (default: 10 ** 6)
        Step budget per path, paths without exit are censored

    bridge : bool, optional (default: False)
        Correct for excursions across the boundary within a step

    max_censored_fraction : float, optional (default: 0.01)
        Largest admissible fraction of censored paths

    chunk_size : int, optional (default: 1024)
        Number of paths that are advanced together

    block_size : int, optional (default: 128)
        Number of steps drawn at once from each path's stream

    index : BoundaryIndex, optional (default: built from curve)
        Spatial index of the boundary

    log_to_file : bool or string, optional (default: False)
        Log progress to a file

    log_to_stdout : bool, optional (default: False)
        Log progress to standard output

    Returns
    -------
    samples : ExitSampleSet
        One record per path, in path order

    Raises
    ------
    PathBudgetExceeded
        If more than max_censored_fraction of the paths are censored.
    """
    logger = get_logger("euler_exit", log_to_file, log_to_stdout)
    start = _check_start(curve, start)
    if not 0.0 < dt <= MAX_DT:
        raise ValueError("dt must be in (0, %g], got %r" % (MAX_DT, dt))
    seed = check_seed(seed)
    if index is None:
        index = BoundaryIndex(curve)

    n_paths = int(n_paths)
    exit_point = np.empty((n_paths, 2))
    exit_time = np.empty(n_paths)
    n_steps = np.empty(n_paths, dtype=int)
    censored = np.zeros(n_paths, dtype=bool)
    frame_exit = np.zeros(n_paths, dtype=bool)
    max_radius = np.empty(n_paths)
    logger.info("Simulating %d paths with dt=%g, bridge=%s"
                % (n_paths, dt, bridge))
    for lo in range(0, n_paths, chunk_size):
        ids = np.arange(lo, min(lo + chunk_size, n_paths))
        _run_chunk(index, start, dt, seed, ids, max_steps, bridge,
                   block_size, exit_point, exit_time, n_steps, censored,
                   frame_exit, max_radius)
        logger.debug("Paths %d to %d done, mean exit time %.4g"
                     % (ids[0], ids[-1], exit_time[ids].mean()))

    samples = ExitSampleSet(exit_point[:, 0], exit_point[:, 1], exit_time,
                            n_steps, "euler", seed, censored=censored,
                            frame_exit=frame_exit, max_radius=max_radius,
                            dt=dt)
    if np.any(censored):
        logger.warning("%d of %d paths censored after %d steps"
                       % (censored.sum(), n_paths, max_steps))
    if samples.censored_fraction > max_censored_fraction:
        raise PathBudgetExceeded(
            "%d of %d paths did not exit within %d steps"
            % (censored.sum(), n_paths, max_steps))
    logger.info("Mean exit time %.6g, %d frame exits"
                % (exit_time.mean(), frame_exit.sum()))
    return samples


def _check_start(curve, start):
    start = complex(start) if np.isscalar(start) else complex(*start)
    if curve.support_unbounded and curve.window is None:
        raise ValueError("Unbounded domains must be clipped to a window")
    if not contains(curve, start):
        raise ValueError("Start %r is not inside the domain" % start)
    return np.array([start.real, start.imag])


def _run_chunk(index, start, dt, seed, ids, max_steps, bridge, block_size,
               exit_point, exit_time, n_steps, censored, frame_exit,
               max_radius):
    streams = [path_stream(seed, i) for i in ids]
    P = len(ids)
    pos = np.tile(start, (P, 1))
    steps = np.zeros(P, dtype=int)
    radius = np.full(P, np.hypot(*start))
    alive = np.ones(P, dtype=bool)
    sigma = np.sqrt(dt)
    k = np.arange(block_size)
    while np.any(alive):
        act = np.nonzero(alive)[0]
        normals = np.empty((len(act), block_size, 2))
        uniforms = np.empty((len(act), block_size))
        for j, i in enumerate(act):
            normals[j] = streams[i].standard_normal((block_size, 2))
            uniforms[j] = streams[i].random(block_size)
        path = pos[act, np.newaxis] + sigma * np.cumsum(normals, axis=1)
        prev = np.concatenate((pos[act, np.newaxis], path[:, :-1]), axis=1)

        a = prev.reshape(-1, 2)
        b = path.reshape(-1, 2)
        hit, s, point, frame = index.first_crossing(a, b)
        if bridge:
            _bridge_exits(index, a, b, dt, uniforms.ravel(), hit, s, point,
                          frame)
        shape = (len(act), block_size)
        hit, s = hit.reshape(shape), s.reshape(shape)
        point, frame = point.reshape(shape + (2,)), frame.reshape(shape)

        budget = max_steps - steps[act]
        hit &= k[np.newaxis] < budget[:, np.newaxis]
        exited = np.any(hit, axis=1)
        first = np.argmax(hit, axis=1)
        r = np.hypot(path[..., 0], path[..., 1])

        e, f = act[exited], first[exited]
        rows = np.nonzero(exited)[0]
        before = k[np.newaxis] < f[:, np.newaxis]
        exit_r = np.hypot(*point[rows, f].T)
        radius[e] = np.maximum(radius[e], np.maximum(
            np.where(before, r[rows], 0.0).max(axis=1), exit_r))
        _record(ids[e], point[rows, f], (steps[e] + f + s[rows, f]) * dt,
                steps[e] + f + 1, frame[rows, f], radius[e], exit_point,
                exit_time, n_steps, frame_exit, max_radius)
        alive[e] = False

        rows = np.nonzero(~exited)[0]
        c = act[rows]
        n_valid = np.minimum(block_size, budget[rows])
        radius[c] = np.maximum(radius[c], np.where(
            k[np.newaxis] < n_valid[:, np.newaxis], r[rows], 0.0).max(axis=1))
        pos[c] = path[rows, n_valid - 1]
        steps[c] += n_valid
        out = steps[c] >= max_steps
        if np.any(out):
            c = c[out]
            censored[ids[c]] = True
            _record(ids[c], pos[c], steps[c] * dt, steps[c],
                    np.zeros(len(c), dtype=bool), radius[c], exit_point,
                    exit_time, n_steps, frame_exit, max_radius)
            alive[c] = False


def _bridge_exits(index, a, b, dt, uniforms, hit, s, point, frame):
    lb_a = index.distance_lower_bound(a)
    lb_b = index.distance_lower_bound(b)
    candidates = np.nonzero(~hit & (lb_a * lb_b < BRIDGE_CUTOFF * dt))[0]
    if len(candidates) == 0:
        return
    qa, da, piece_a = index.nearest(a[candidates])
    qb, db, piece_b = index.nearest(b[candidates])
    touched = uniforms[candidates] < np.exp(-2.0 * da * db / dt)
    c = candidates[touched]
    closer_a = (da <= db)[touched]
    hit[c] = True
    s[c] = 0.5
    point[c] = np.where(closer_a[:, np.newaxis], qa[touched], qb[touched])
    frame[c] = np.where(closer_a, index.frame[piece_a[touched]],
                        index.frame[piece_b[touched]])


def _record(ids, point, time, steps, frame, radius, exit_point, exit_time,
            n_steps, frame_exit, max_radius):
    exit_point[ids] = point
    exit_time[ids] = time
    n_steps[ids] = steps
    frame_exit[ids] = frame
    max_radius[ids] = radius
