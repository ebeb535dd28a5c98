"""
DRINFELD Carlitz Components

The Carlitz module, lattice exponentials and Goss polynomials:
- AdditivePoly and carlitz_poly (ρ_a)
- D_i, period and torsion lattice coefficients
- Goss tables, symbolic isobaric tracking, the toy-lattice identity
- u(az) expansions and the shared CarlitzContext
"""

from .additive import AdditivePoly, carlitz_poly
from .goss import (
    GossTable,
    d_sequence,
    period_alpha,
    torsion_alpha,
    goss_table,
    goss_eval,
    symbolic_goss,
    isobaric_violations,
    specialize,
    toy_lattice_check,
)
from .expansion import u_scale, u_scale_power
from .context import CarlitzContext, get_context

__all__ = [
    'AdditivePoly',
    'carlitz_poly',
    'GossTable',
    'd_sequence',
    'period_alpha',
    'torsion_alpha',
    'goss_table',
    'goss_eval',
    'symbolic_goss',
    'isobaric_violations',
    'specialize',
    'toy_lattice_check',
    'u_scale',
    'u_scale_power',
    'CarlitzContext',
    'get_context',
]
