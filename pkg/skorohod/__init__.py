"""Conformal Skorohod embeddings of planar Brownian motion.

Given a centered distribution on the real line, synthesize a simply connected
planar domain whose Brownian exit position has that distribution as real part,
and check the result by simulation, by closed-form densities and by the
geometric conditions under which such a domain is unique.
"""
__version__ = "0.1.0-dev"


__all__ = ["analytic_examples", "cli", "construction", "datasets", "geometry",
           "hilbert", "measures", "simulate", "uniqueness", "utils"]
