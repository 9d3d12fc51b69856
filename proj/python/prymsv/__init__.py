"""Exact Euler characteristics, q-expansion identities and Siegel-Veech
constants of Prym eigenform loci.

Rational results are returned as :class:`fractions.Fraction`.
"""

from ._core import *  # noqa: F401,F403
from ._core import PrymsvError, __version__

__all__ = [name for name in dir() if not name.startswith("_")]
