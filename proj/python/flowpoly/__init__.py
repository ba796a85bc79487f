"""Flow polytope dissections, degree sequences, generalized permutahedra and
pipe-dream polynomials, backed by the C++ core."""

from fractions import Fraction

try:
    from ._flowpoly import *  # noqa: F401,F403  (wheel layout)
    from . import _flowpoly as _core
except ImportError:  # in-tree builds put the module on PYTHONPATH
    from _flowpoly import *  # noqa: F401,F403
    import _flowpoly as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")] + ["ehrhart_fractions"]


def ehrhart_fractions(graph):
    """Ehrhart coefficients as Fractions, lowest degree first."""
    return [Fraction(int(num), int(den)) for num, den in _core.ehrhart(graph)]
