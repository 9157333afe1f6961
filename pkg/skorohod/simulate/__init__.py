"""Sampling of Brownian exits and statistics of the samples."""
from .samples import ExitSampleSet, path_stream
from .euler import euler_exit
from .wos import wos_exit
from .statistics import (goodness_of_fit, atoms, ks_two_sample,
                         moment_estimate, markov_bound_check,
                         escape_exponent, tail_index)
from .verification import verify_embedding


__all__ = ["ExitSampleSet", "path_stream", "euler_exit", "wos_exit",
           "goodness_of_fit", "atoms", "ks_two_sample", "moment_estimate",
           "markov_bound_check", "escape_exponent", "tail_index",
           "verify_embedding"]
