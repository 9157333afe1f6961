"""Closed-form exit densities and the change of variables engine."""
from .density import DensityCurve, pushforward_density, marginalize
from .catalog import (disk_density, disk_marginal, strip_density,
                      strip_marginal, parabola_density, ellipse_density,
                      ellipse_boundary_density, hyperbola_density,
                      hyperbola_boundary_density, half_plane_density,
                      sech_series_terms, density_curve)


__all__ = ["DensityCurve", "pushforward_density", "marginalize",
           "disk_density", "disk_marginal", "strip_density",
           "strip_marginal", "parabola_density", "ellipse_density",
           "ellipse_boundary_density", "hyperbola_density",
           "hyperbola_boundary_density", "half_plane_density",
           "sech_series_terms", "density_curve"]
