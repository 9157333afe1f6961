from .fixtures import (Fixture, make_disk, make_wedge, make_half_plane,
                       make_strip, make_cross, make_slit_domain,
                       make_parabola, make_ellipse, make_hyperbola,
                       FIXTURES, load_fixture)


__all__ = ["Fixture", "make_disk", "make_wedge", "make_half_plane",
           "make_strip", "make_cross", "make_slit_domain", "make_parabola",
           "make_ellipse", "make_hyperbola", "FIXTURES", "load_fixture"]
