"""Synthesis of domains whose Brownian exit law has a given real part."""
from .profile import (FourierProfile, build_profile, cosine_coefficients,
                      conjugate_series, refined_series)
from .domain import (DomainArtifact, synthesize, evaluate_map,
                     truncation_bound, boundary_for_plot)


__all__ = ["FourierProfile", "build_profile", "cosine_coefficients",
           "conjugate_series", "refined_series", "DomainArtifact",
           "synthesize", "evaluate_map", "truncation_bound",
           "boundary_for_plot"]
