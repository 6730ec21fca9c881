"""High-precision weighted Bergman kernels and extraneous-zero hunting on the unit disk."""

from ._core import (
    bergman_kernel,
    zero_kernel,
    extremal_function,
    toy_kernel,
    toy_has_disk_zero,
    toy_zero_location,
    green_g,
    biharmonic_gamma,
    weighted_gamma1,
    gamma1_bounds,
    h1_harmonic,
    poisson_kernel,
    generate_configuration,
    boundary_value_scan,
    table1_rows,
    mvp_defect,
    boundary_normal_derivative,
    __version__,
)

__all__ = [
    "bergman_kernel",
    "zero_kernel",
    "extremal_function",
    "toy_kernel",
    "toy_has_disk_zero",
    "toy_zero_location",
    "green_g",
    "biharmonic_gamma",
    "weighted_gamma1",
    "gamma1_bounds",
    "h1_harmonic",
    "poisson_kernel",
    "generate_configuration",
    "boundary_value_scan",
    "table1_rows",
    "mvp_defect",
    "boundary_normal_derivative",
    "__version__",
]
