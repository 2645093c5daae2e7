"""Characteristic cycles of localizations and local cohomology modules.

Thin wrapper over the C++ engine: Groebner bases over Q, the relative
conormal construction, cycle localization, Cech-hypercube pruning and
Lyubeznik tables.
"""

from _charcycle import (
    associated_primes,
    cech_cycles,
    degree,
    dimension,
    groebner_basis,
    localize,
    lyubeznik,
    normal_form,
    run_job,
    zero_section,
)

__all__ = [
    "associated_primes",
    "cech_cycles",
    "degree",
    "dimension",
    "groebner_basis",
    "localize",
    "lyubeznik",
    "normal_form",
    "run_job",
    "zero_section",
]
