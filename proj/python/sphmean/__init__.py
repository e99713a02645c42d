"""Spherical mean transform toolkit (C++ core)."""

from ._core import (
    __version__,
    bessel_zeros,
    cross_check,
    forward,
    gegenbauer,
    identities,
    invert,
    mk_residual,
    mk_samples,
    omega,
    range_check,
    raw_j,
    raw_y,
    sph_bessel_j,
    ucp_demo,
    zero_oracle,
)

__all__ = [
    "__version__",
    "bessel_zeros",
    "cross_check",
    "forward",
    "gegenbauer",
    "identities",
    "invert",
    "mk_residual",
    "mk_samples",
    "omega",
    "range_check",
    "raw_j",
    "raw_y",
    "sph_bessel_j",
    "ucp_demo",
    "zero_oracle",
]
