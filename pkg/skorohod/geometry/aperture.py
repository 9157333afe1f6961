"""Aperture at infinity and Hardy number of starlike domains."""
import numpy as np
from ..utils.exceptions import NotStarlike
from .predicates import contains, is_starlike


def circle_arcs(curve, r):
    """Arcs of the circle |z| = r that lie inside the domain.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary

    r : float
        Radius

    Returns
    -------
    arcs : list of pairs (start, length)
        Angular position and measure of every arc inside the domain
    """
    start, end = curve.edges
    e = end - start
    a = np.sum(e * e, axis=1)
    b = 2.0 * np.sum(start * e, axis=1)
    c = np.sum(start * start, axis=1) - r * r
    disc = b * b - 4.0 * a * c
    angles = []
    for sign in [-1.0, 1.0]:
        with np.errstate(invalid="ignore"):
            s = (-b + sign * np.sqrt(disc)) / (2.0 * a)
        ok = (disc >= 0.0) & (s >= -1e-12) & (s <= 1.0 + 1e-12)
        p = start[ok] + s[ok, np.newaxis] * e[ok]
        angles.append(np.arctan2(p[:, 1], p[:, 0]))
    angles = np.unique(np.mod(np.concatenate(angles), 2.0 * np.pi))
    if len(angles) == 0:
        if contains(curve, complex(r, 0.0)):
            return [(0.0, 2.0 * np.pi)]
        return []
    lengths = np.diff(np.concatenate((angles, [angles[0] + 2.0 * np.pi])))
    # duplicates from shared vertices leave slivers
    keep = lengths > 1e-9
    angles, lengths = angles[keep], lengths[keep]
    mid = angles + 0.5 * lengths
    inside = contains(curve, r * np.exp(1j * mid))
    return [(t, l) for t, l, i in zip(angles, lengths, inside) if i]


def default_radii(curve, n_radii=20):
    """Geometric sequence of radii that stay inside the clip window."""
    if np.any(curve.frame):
        start, end = curve.edges
        frame_start, frame_end = start[curve.frame], end[curve.frame]
        d = frame_end - frame_start
        s = -np.sum(frame_start * d, axis=1) / np.sum(d * d, axis=1)
        q = frame_start + np.clip(s, 0.0, 1.0)[:, np.newaxis] * d
        r_max = 0.95 * np.hypot(q[:, 0], q[:, 1]).min()
    else:
        r_max = 1.05 * np.abs(curve.points).max()
    return np.geomspace(r_max / 1000.0, r_max, n_radii)


def aperture(curve, radii=None, return_sequence=False, check_starlike=True):
    """Largest angular measure of an arc of {|z| = r} inside the domain.

    The quantity is non-increasing in r for domains that are starlike about
    0; its value at the largest radius estimates the aperture at infinity.

    Parameters
    ----------
    curve : BoundaryCurve
        Boundary, clipped for unbounded domains

    radii : array-like, optional (default: default_radii(curve))
        Increasing radii

    return_sequence : bool, optional (default: False)
        Also return the value for every radius

    check_starlike : bool, optional (default: True)
        Verify numerically that the domain is starlike about 0

    Returns
    -------
    aperture : float
        Estimate at the largest radius

    sequence : array, shape (n_radii,)
        Value for every radius, only if return_sequence is set

    Raises
    ------
    NotStarlike
        If a ray from 0 crosses the boundary more than once.
    """
    if check_starlike and not is_starlike(curve):
        raise NotStarlike("Domain is not starlike about 0")
    if radii is None:
        radii = default_radii(curve)
    radii = np.asarray(radii, dtype=float)
    sequence = np.array([max([length for _, length in circle_arcs(curve, r)]
                             or [0.0]) for r in radii])
    if return_sequence:
        return sequence[-1], sequence
    return sequence[-1]


def hardy_number(curve, radii=None):
    """Hardy number pi / (2 A) from the aperture A at infinity.

    Bounded domains have aperture 0 and an infinite Hardy number.
    """
    a = aperture(curve, radii)
    if a <= 0.0:
        return np.inf
    return np.pi / (2.0 * a)
