"""Deltoid curve geometry.

Membership classification, tangent needles, the orthocenter correspondence for
unit-circle triangles with vertex product one, integer power maps, special
polynomial loci, SVG figure rendering, and a numeric verification suite.
"""

from ._core import (
    OutsideDeltoid,
    classify,
    deltoid_eval,
    fibonacci_amplitudes,
    fibonacci_coefficients,
    lucas_coefficients,
    needle,
    needle_image,
    needle_vertices,
    orthocenter,
    parametrize,
    power_closed_form,
    power_recurrence,
    power_roots,
    q_coefficients,
    render_figure,
    solve,
    verify,
    zero_locus,
    zeros_csv,
)

__all__ = [
    "OutsideDeltoid",
    "classify",
    "deltoid_eval",
    "fibonacci_amplitudes",
    "fibonacci_coefficients",
    "lucas_coefficients",
    "needle",
    "needle_image",
    "needle_vertices",
    "orthocenter",
    "parametrize",
    "power_closed_form",
    "power_recurrence",
    "power_roots",
    "q_coefficients",
    "render_figure",
    "solve",
    "verify",
    "zero_locus",
    "zeros_csv",
]

__version__ = "1.0.0"
