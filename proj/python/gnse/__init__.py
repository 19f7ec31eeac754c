"""Spectral Navier-Stokes tools on the periodic torus.

The compiled core lives in gnse._gnse; everything it exports is re-exported
here.  Fields are truncated Fourier coefficient sets (mean-zero, Hermitian,
divergence-free); norms, semigroup estimates, the fixed-point solver, and
the analyticity-radius estimators operate on them.
"""

from gnse._gnse import *  # noqa: F401,F403
from gnse._gnse import __doc__ as _core_doc  # noqa: F401
