"""
DRINFELD Forms Components

Generator u-expansions:
- g_1, g_d and normalized Eisenstein series
- h, Δ and the h^(q-1) = -Δ diagnostic
- E, E_P and the level-T forms Δ_T, Δ_W
"""

from .generators import (
    GENERATOR_NAMES,
    GeneratorId,
    parse_generator,
    FormFactory,
    get_factory,
)

__all__ = [
    'GENERATOR_NAMES',
    'GeneratorId',
    'parse_generator',
    'FormFactory',
    'get_factory',
]
