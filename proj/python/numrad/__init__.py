"""Numerical radius of complex matrices, with certified upper and lower bounds.

Matrices are passed as complex NumPy arrays of shape (n, n).
"""

from ._numrad import *  # noqa: F401,F403

__version__ = "0.1.0"
