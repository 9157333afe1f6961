"""Walk-on-spheres sampler of exit positions."""
import numpy as np
from ..geometry import BoundaryIndex
from ..utils.exceptions import PathBudgetExceeded
from ..utils.log import get_logger
from ..utils.validation import check_seed
from .euler import _check_start
from .samples import ExitSampleSet, path_stream


def wos_exit(curve, start, eps=1e-4, n_paths=1000, seed=0, max_steps=10 ** 4,
             max_censored_fraction=0.01, chunk_size=4096, block_size=32,
             index=None, log_to_file=False, log_to_stdout=False):
    """Sample exit positions by walk-on-spheres.

    The walker jumps to a uniformly distributed point of the largest
    circle around its position that fits into the domain. Once it is
    within eps of the boundary it is absorbed and projected onto the
    nearest boundary point. The exit position is unbiased up to eps. Each
    jump of radius R adds the mean exit time R ** 2 / 2 of the disk, so the
    time field estimates E[tau] without bias but does not follow the law of
    tau.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary, clipped to a window if the domain is unbounded

    start : complex or pair of floats
        Starting point inside the domain

    eps : float, optional (default: 1e-4)
        Absorption distance, the start must be farther from the boundary

    n_paths : int, optional (default: 1000)
        Number of walkers

    seed : int, optional (default: 0)
        Seed of the per-path random streams

    max_steps : int, optional (default: 10 ** 4)
        Jump budget per walker

    max_censored_fraction : float, optional (default: 0.01)
        Largest admissible fraction of walkers without absorption

    chunk_size : int, optional (default: 4096)
        Number of walkers that are advanced together

    block_size : int, optional (default: 32)
        Number of angles drawn at once from each walker's stream

    index : BoundaryIndex, optional (default: built from curve)
        Spatial index of the boundary

    log_to_file : bool or string, optional (default: False)
        Log progress to a file

    log_to_stdout : bool, optional (default: False)
        Log progress to standard output

    Returns
    -------
    samples : ExitSampleSet
        One record per walker, in path order, with backend 'wos'

    Raises
    ------
    DistanceQueryFailure
        If the boundary has zero length pieces.

    PathBudgetExceeded
        If more than max_censored_fraction of the walkers are censored.
    """
    logger = get_logger("wos_exit", log_to_file, log_to_stdout)
    start = _check_start(curve, start)
    if not eps > 0.0:
        raise ValueError("eps must be positive, got %r" % eps)
    seed = check_seed(seed)
    if index is None:
        index = BoundaryIndex(curve)
    clearance = float(index.distance(start[np.newaxis])[0])
    if not clearance > eps:
        raise ValueError("Start is %g from the boundary, within the "
                         "absorption distance eps=%g" % (clearance, eps))

    n_paths = int(n_paths)
    exit_point = np.empty((n_paths, 2))
    exit_time = np.zeros(n_paths)
    n_steps = np.zeros(n_paths, dtype=int)
    censored = np.zeros(n_paths, dtype=bool)
    frame_exit = np.zeros(n_paths, dtype=bool)
    max_radius = np.full(n_paths, np.hypot(*start))
    logger.info("Walking %d paths with eps=%g" % (n_paths, eps))
    for lo in range(0, n_paths, chunk_size):
        ids = np.arange(lo, min(lo + chunk_size, n_paths))
        streams = [path_stream(seed, i) for i in ids]
        pos = np.tile(start, (len(ids), 1))
        alive = np.ones(len(ids), dtype=bool)
        while np.any(alive):
            act = np.nonzero(alive)[0]
            angles = 2.0 * np.pi * np.array(
                [streams[j].random(block_size) for j in act])
            for k in range(block_size):
                q, d, piece = index.nearest(pos[act])
                absorbed = d <= eps
                done = act[absorbed]
                exit_point[ids[done]] = q[absorbed]
                frame_exit[ids[done]] = index.frame[piece[absorbed]]
                alive[done] = False

                move = ~absorbed
                m = act[move]
                over = n_steps[ids[m]] >= max_steps
                if np.any(over):
                    c = m[over]
                    exit_point[ids[c]] = pos[c]
                    censored[ids[c]] = True
                    alive[c] = False
                    move[np.nonzero(move)[0][over]] = False
                    m = m[~over]
                r = d[move]
                theta = angles[move, k]
                pos[m] += r[:, np.newaxis] * np.column_stack(
                    (np.cos(theta), np.sin(theta)))
                exit_time[ids[m]] += 0.5 * r ** 2
                n_steps[ids[m]] += 1
                max_radius[ids[m]] = np.maximum(max_radius[ids[m]],
                                                np.hypot(*pos[m].T))
                # rows of 'angles' stay aligned with the block's walkers
                act = act[move]
                angles = angles[move]
                if len(act) == 0:
                    break
        logger.debug("Walkers %d to %d done, mean %.2f jumps"
                     % (ids[0], ids[-1], n_steps[ids].mean()))

    samples = ExitSampleSet(exit_point[:, 0], exit_point[:, 1], exit_time,
                            n_steps, "wos", seed, censored=censored,
                            frame_exit=frame_exit, max_radius=max_radius,
                            eps=eps, delta_report=eps)
    if samples.censored_fraction > max_censored_fraction:
        raise PathBudgetExceeded(
            "%d of %d walkers were not absorbed within %d jumps"
            % (censored.sum(), n_paths, max_steps))
    logger.info("Mean time estimate %.6g, mean %.2f jumps"
                % (exit_time.mean(), n_steps.mean()))
    return samples
