"""Certified high-precision verification of Mellin-transform summation identities.

The modules layer as follows: :mod:`mpnum` fixes the precision contract,
:mod:`specfun` evaluates Γ, ζ and relatives, :mod:`series` sums the
series families, :mod:`contour` integrates along vertical lines,
:mod:`registry` catalogs the identities and :mod:`limits` checks the
sequence limits.
"""

from .errors import MellinSumError
from .mpnum import PrecisionContext, context

__version__ = "0.1.0"

__all__ = ["MellinSumError", "PrecisionContext", "context", "__version__"]
