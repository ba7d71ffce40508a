"""Python bindings for the amdkit C++ library."""

from ._core import (
    DEFAULT_PRIME,
    AmdError,
    Ideal,
    __version__,
    analyze,
    betti,
    depth,
    dimension_degree,
    fixture_ideal,
    fixtures,
    hilbert_numerator,
    hyperplane_section,
    pfaffian,
    project,
    random_point_off,
    read_ideal,
    scroll,
    verify,
    veronese,
)

__all__ = [
    "DEFAULT_PRIME",
    "AmdError",
    "Ideal",
    "__version__",
    "analyze",
    "betti",
    "depth",
    "dimension_degree",
    "fixture_ideal",
    "fixtures",
    "hilbert_numerator",
    "hyperplane_section",
    "pfaffian",
    "project",
    "random_point_off",
    "read_ideal",
    "scroll",
    "verify",
    "veronese",
]
