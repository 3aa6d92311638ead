# Copyright (c) the holodyn developers
# SPDX-License-Identifier: Apache-2.0
"""Convolution-operator dynamics on entire functions of infinitely many
complex variables.

The heavy lifting lives in the C++ extension ``holodyn._core``; this package
re-exports its public surface.  Certificates, traces, and search results cross
the boundary as plain dicts with exactly the JSON schema the ``holodyn_cli``
binary emits.
"""

from holodyn._core import (  # noqa: F401
    HolodynError,
    Operator,
    Series,
    Witness,
    __version__,
    confinement_certificate,
    default_gap_blocks,
    exp_function,
    find_dichotomy_points,
    gap_series,
    gap_witness,
    li_yorke_pair,
    lift_witness,
    non_cyclicity_certificate,
    orbit_trace,
    proximal_asymptotic_check,
    run_suites,
    scrambled_family,
    semi_irregularity_detector,
    subspace_orbit_certificate,
    translate,
    translation_operator,
)

__all__ = [
    "HolodynError",
    "Operator",
    "Series",
    "Witness",
    "__version__",
    "confinement_certificate",
    "default_gap_blocks",
    "exp_function",
    "find_dichotomy_points",
    "gap_series",
    "gap_witness",
    "li_yorke_pair",
    "lift_witness",
    "non_cyclicity_certificate",
    "orbit_trace",
    "proximal_asymptotic_check",
    "run_suites",
    "scrambled_family",
    "semi_irregularity_detector",
    "subspace_orbit_certificate",
    "translate",
    "translation_operator",
]
