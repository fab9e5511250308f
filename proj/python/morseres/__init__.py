"""Cellular free resolutions of monomial ideals by discrete Morse theory."""

from ._morseres import (
    exists_polyhedral,
    maximal_matchings,
    morse_summary,
    multigraded_betti,
    random_ideal_text,
    reference_checks,
    scarf,
    taylor_fvector,
    total_betti,
)

__all__ = [
    "exists_polyhedral",
    "maximal_matchings",
    "morse_summary",
    "multigraded_betti",
    "random_ideal_text",
    "reference_checks",
    "scarf",
    "taylor_fvector",
    "total_betti",
]
